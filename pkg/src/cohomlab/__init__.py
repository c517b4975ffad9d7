"""cohomlab: exact cohomology of double complexes and bidifferential pairs.

Computes Dolbeault-type, Bott-Chern, Aeppli and total cohomologies of
bounded double complexes over QQ / QQ(i), the six Varouchas quotients,
del-delbar-type lemma verdicts, Froelicher-type inequalities, the two
filtration spectral sequences, and the same invariants for complexes
built from Lie algebra data (Chevalley-Eilenberg, complex structures,
symplectic pairs with their sl(2) operator package).

Everything is exact rational arithmetic; no floats anywhere.
"""

__version__ = "0.1.0"

from .scalars import GaussianRational, I, format_scalar, parse_scalar
from .linalg import Matrix, NotASubspace, Subspace, image, kernel, quotient_dim, rref

__all__ = [
    "GaussianRational",
    "I",
    "Matrix",
    "NotASubspace",
    "Subspace",
    "format_scalar",
    "image",
    "kernel",
    "parse_scalar",
    "quotient_dim",
    "rref",
    "__version__",
]
