"""Input documents: parse, validate, and build engine objects from JSON.

A document holds exactly one of three kinds of data:

  double_complex  {"entries": [{"p", "q", "dim"}],
                   "d1": [{"from": [p, q], "matrix": [...]}], "d2": [...]}
  bidiff_pair     {"degrees": [{"k", "dim"}], "deg1", "deg2",
                   "d1": [{"from": k, "matrix": [...]}], "d2": [...]}
  lie_algebra     {"dim", "structure": [{"i", "terms": [{"j","k","coeff"}]}],
                   "complex_structure"?: {"dphi": [...like structure...]},
                   "symplectic"?: {"omega": [{"j","k","coeff"}]}}

Scalars travel as strings ("3", "-1/2", "1/2+3 i"); matrices are
row-major lists of scalar strings, flat or split into rows.  Shape
errors, undeclared degrees, broken relations and the like raise
ValidationError (exit code 2 territory); malformed JSON, wrong types
and unparseable scalars raise ParseError (exit code 1).
"""

from __future__ import annotations

import json
import warnings

from .complexes import BidiffPair, DoubleComplex
from .geometry import (
    ComplexStructureData,
    LieAlgebraPresentation,
    SymplecticData,
    ce_complex,
    complex_bicomplex,
    symplectic_pair,
)
from .linalg import Matrix
from .scalars import format_scalar, parse_scalar

__all__ = [
    "ParseError",
    "ValidationError",
    "InputDocument",
    "BuildResult",
    "parse_document",
    "load_document",
    "build",
    "document_for_double_complex",
    "canonical_json",
]

KINDS = ("double_complex", "bidiff_pair", "lie_algebra")


class ParseError(ValueError):
    """The document is not well-formed: shape, types, or scalar syntax."""


class ValidationError(ValueError):
    """Well-formed input describing an inconsistent object."""

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InputDocument:
    """Parsed input: kind plus the engine-ready payload pieces."""

    __slots__ = ("kind", "payload", "raw")

    def __init__(self, kind, payload, raw):
        self.kind = kind
        self.payload = payload
        self.raw = raw


class BuildResult:
    __slots__ = ("kind", "obj", "ops", "lie", "warnings")

    def __init__(self, kind, obj, ops=None, lie=None, warns=()):
        self.kind = kind
        self.obj = obj
        self.ops = ops
        self.lie = lie
        self.warnings = list(warns)


def _expect(cond, msg):
    if not cond:
        raise ParseError(msg)


def _get(obj, key, types, where, optional=False, default=None):
    if key not in obj:
        if optional:
            return default
        raise ParseError("%s: missing key %r" % (where, key))
    v = obj[key]
    if not isinstance(v, types):
        raise ParseError("%s: key %r has the wrong type" % (where, key))
    return v


def _int(obj, key, where):
    v = _get(obj, key, (int,), where)
    if isinstance(v, bool):
        raise ParseError("%s: key %r has the wrong type" % (where, key))
    return v


def _scalar(s, where):
    if not isinstance(s, str):
        raise ParseError("%s: scalar entries must be strings" % where)
    try:
        return parse_scalar(s)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError("%s: bad scalar %r (%s)" % (where, s, e))


def _matrix(data, nrows, ncols, where):
    """Row-major scalar strings, flat or nested by rows."""
    if not isinstance(data, list):
        raise ParseError("%s: matrix must be a list" % where)
    if data and isinstance(data[0], list):
        if len(data) != nrows or any(len(r) != ncols for r in data):
            raise ValidationError(
                "%s: matrix shape %dx%s, expected %dx%d"
                % (where, len(data), {len(r) for r in data} or "0", nrows, ncols)
            )
        flat = [x for row in data for x in row]
    else:
        if len(data) != nrows * ncols:
            raise ValidationError(
                "%s: matrix has %d entries, expected %d x %d = %d"
                % (where, len(data), nrows, ncols, nrows * ncols)
            )
        flat = data
    rows = []
    for r in range(nrows):
        rows.append([_scalar(flat[r * ncols + c], where) for c in range(ncols)])
    return Matrix(rows, ncols=ncols)


def _parse_double_complex(spec):
    entries = _get(spec, "entries", (list,), "double_complex")
    spaces = {}
    for e in entries:
        _expect(isinstance(e, dict), "double_complex.entries: items must be objects")
        p = _int(e, "p", "double_complex.entries")
        q = _int(e, "q", "double_complex.entries")
        dim = _int(e, "dim", "double_complex.entries")
        if dim < 0:
            raise ValidationError("space (%d,%d): negative dimension" % (p, q))
        if (p, q) in spaces:
            raise ValidationError("space (%d,%d) declared twice" % (p, q))
        if dim:
            spaces[(p, q)] = dim

    def blocks(key, shift):
        out = {}
        for b in _get(spec, key, (list,), "double_complex", optional=True, default=[]):
            _expect(isinstance(b, dict), "%s: items must be objects" % key)
            src = _get(b, "from", (list,), key)
            _expect(len(src) == 2 and all(isinstance(x, int) and not isinstance(x, bool)
                                          for x in src),
                    "%s: 'from' must be [p, q]" % key)
            p, q = src
            if (p, q) in out:
                raise ValidationError("%s block at (%d,%d) given twice" % (key, p, q))
            here = "%s block at (%d,%d)" % (key, p, q)
            if (p, q) not in spaces:
                raise ValidationError(here + ": source space not declared")
            tgt = (p + shift[0], q + shift[1])
            if tgt not in spaces:
                raise ValidationError(here + ": target space not declared")
            out[(p, q)] = _matrix(_get(b, "matrix", (list,), here),
                                  spaces[tgt], spaces[(p, q)], here)
        return out

    dc = DoubleComplex(spaces, blocks("d1", (1, 0)), blocks("d2", (0, 1)))
    bad = dc.validate()
    if bad:
        raise ValidationError(bad)
    return dc


def _parse_bidiff_pair(spec):
    dims = {}
    for e in _get(spec, "degrees", (list,), "bidiff_pair"):
        _expect(isinstance(e, dict), "bidiff_pair.degrees: items must be objects")
        k = _int(e, "k", "bidiff_pair.degrees")
        dim = _int(e, "dim", "bidiff_pair.degrees")
        if dim < 0:
            raise ValidationError("degree %d: negative dimension" % k)
        if k in dims:
            raise ValidationError("degree %d declared twice" % k)
        if dim:
            dims[k] = dim
    deg1 = _int(spec, "deg1", "bidiff_pair")
    deg2 = _int(spec, "deg2", "bidiff_pair")
    if deg1 == 0 or deg2 == 0:
        raise ValidationError("differential degrees must be nonzero")

    def blocks(key, shift):
        out = {}
        for b in _get(spec, key, (list,), "bidiff_pair", optional=True, default=[]):
            _expect(isinstance(b, dict), "%s: items must be objects" % key)
            k = _int(b, "from", key)
            if k in out:
                raise ValidationError("%s block at degree %d given twice" % (key, k))
            here = "%s block at degree %d" % (key, k)
            if k not in dims:
                raise ValidationError(here + ": source degree not declared")
            if k + shift not in dims:
                raise ValidationError(here + ": target degree not declared")
            out[k] = _matrix(_get(b, "matrix", (list,), here),
                             dims[k + shift], dims[k], here)
        return out

    bp = BidiffPair(dims, deg1, deg2, blocks("d1", deg1), blocks("d2", deg2))
    bad = bp.validate()
    if bad:
        raise ValidationError(bad)
    return bp


def _parse_two_form_terms(items, where, n_gens, parse_coeff=True):
    """[{j, k, coeff}] with 1-based generator indices j < k."""
    form = {}
    for t in items:
        _expect(isinstance(t, dict), where + ": items must be objects")
        j = _int(t, "j", where)
        k = _int(t, "k", where)
        c = _scalar(_get(t, "coeff", (str,), where), where)
        if not (1 <= j < k <= n_gens):
            raise ValidationError(
                "%s: indices (%d,%d) out of range or unordered" % (where, j, k))
        key = (j - 1, k - 1)
        if key in form:
            raise ValidationError("%s: term e%d^e%d repeated" % (where, j, k))
        if c:
            form[key] = c
    return form


def _parse_lie_algebra(spec):
    n = _int(spec, "dim", "lie_algebra")
    if n <= 0:
        raise ValidationError("lie_algebra: dimension must be positive")
    structure = _get(spec, "structure", (list,), "lie_algebra",
                     optional=True, default=None)
    cs_spec = _get(spec, "complex_structure", (dict,), "lie_algebra",
                   optional=True, default=None)
    sy_spec = _get(spec, "symplectic", (dict,), "lie_algebra",
                   optional=True, default=None)
    if cs_spec is not None and structure is not None:
        raise ValidationError(
            "complex_structure carries its own structure equations; "
            "give one or the other")
    if cs_spec is not None and sy_spec is not None:
        raise ValidationError(
            "complex_structure and symplectic cannot be combined")

    if cs_spec is not None:
        if n % 2:
            raise ValidationError(
                "complex_structure needs an even-dimensional algebra")
        half = n // 2
        dphi = {}
        for row in _get(cs_spec, "dphi", (list,), "complex_structure"):
            _expect(isinstance(row, dict), "dphi: items must be objects")
            i = _int(row, "i", "dphi")
            if not (1 <= i <= half):
                raise ValidationError("dphi: generator %d out of range" % i)
            if i in dphi:
                raise ValidationError("dphi for generator %d given twice" % i)
            terms = _get(row, "terms", (list,), "dphi")
            try:
                dphi[i] = _parse_two_form_terms(terms, "dphi[%d]" % i, n)
            except ValidationError:
                raise
        try:
            csd = ComplexStructureData(half, dphi)
        except ValueError as e:
            raise ValidationError(str(e))
        return ("complex", csd)

    brackets = {}
    for row in structure or []:
        _expect(isinstance(row, dict), "structure: items must be objects")
        i = _int(row, "i", "structure")
        if not (1 <= i <= n):
            raise ValidationError("structure: generator %d out of range" % i)
        terms = _get(row, "terms", (list,), "structure")
        form = _parse_two_form_terms(terms, "d e%d" % i, n)
        for (j0, k0), c in form.items():
            # d e^i = sum coeff e^j ^ e^k  encodes  c^i_{jk} = -coeff
            pair = (j0 + 1, k0 + 1)
            brackets.setdefault(pair, {})
            if i in brackets[pair]:
                raise ValidationError(
                    "structure: e%d appears twice in d e%d" % (i, i))
            brackets[pair][i] = -c
    try:
        lie = LieAlgebraPresentation(n, brackets)
    except ValueError as e:
        raise ValidationError(str(e))

    if sy_spec is not None:
        omega_terms = _get(sy_spec, "omega", (list,), "symplectic")
        form = _parse_two_form_terms(omega_terms, "omega", n)
        omega = {(a + 1, b + 1): c for (a, b), c in form.items()}
        try:
            sd = SymplecticData(lie, omega)
        except ValueError as e:
            raise ValidationError(str(e))
        return ("symplectic", sd)

    return ("plain", lie)


def parse_document(obj):
    """Dict (already JSON-decoded) to InputDocument."""
    _expect(isinstance(obj, dict), "input document must be a JSON object")
    present = [k for k in KINDS if k in obj]
    if len(present) != 1:
        raise ParseError(
            "input document must contain exactly one of %s" % (", ".join(KINDS)))
    kind = present[0]
    spec = obj[kind]
    _expect(isinstance(spec, dict), "%s must be an object" % kind)
    if kind == "double_complex":
        payload = _parse_double_complex(spec)
    elif kind == "bidiff_pair":
        payload = _parse_bidiff_pair(spec)
    else:
        payload = _parse_lie_algebra(spec)
    return InputDocument(kind, payload, obj)


def load_document(path):
    try:
        with open(path, "r") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError("cannot read %s: %s" % (path, e))
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError("invalid JSON in %s: %s" % (path, e))
    return parse_document(obj)


def build(doc):
    """Turn a parsed document into engine objects, collecting warnings.

    Geometry constructors raise ValueError on mathematically bad input
    (Jacobi, integrability, omega); those surface as ValidationError.
    """
    caught = []
    with warnings.catch_warnings(record=True) as rec:
        warnings.simplefilter("always")
        try:
            if doc.kind == "double_complex":
                result = BuildResult("double_complex", doc.payload)
            elif doc.kind == "bidiff_pair":
                result = BuildResult("bidiff_pair", doc.payload)
            else:
                sub, data = doc.payload
                if sub == "plain":
                    result = BuildResult("lie_algebra", ce_complex(data), lie=data)
                elif sub == "complex":
                    result = BuildResult("lie_complex", complex_bicomplex(data))
                else:
                    pair, ops = symplectic_pair(data)
                    result = BuildResult("lie_symplectic", pair, ops=ops,
                                         lie=data.lie)
        except ValueError as e:
            raise ValidationError(str(e))
        caught = ["%s" % w.message for w in rec]
    result.warnings.extend(caught)
    return result


def document_for_double_complex(dc):
    """Inverse of the double_complex parser, for writing reproducers."""
    entries = [{"p": p, "q": q, "dim": dc.spaces[(p, q)]}
               for (p, q) in sorted(dc.spaces)]

    def blocks(table):
        out = []
        for (p, q) in sorted(table):
            m = table[(p, q)]
            out.append({
                "from": [p, q],
                "matrix": [format_scalar(x) for row in m.rows for x in row],
            })
        return out

    return {"double_complex": {
        "entries": entries, "d1": blocks(dc.d1), "d2": blocks(dc.d2),
    }}


def canonical_json(obj):
    """Deterministic serialization used for hashing and reports."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
