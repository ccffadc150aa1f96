"""charsum: exact-arithmetic laboratory for the character sums attached to
the p-ary binomial functions f(x) = Tr(a x^d + b x^2) over GF(p^4k),
d = p^3k + p^2k - p^k + 1.

Everything is computed exactly: field elements as coefficient vectors
mod p, character sums as integer vectors in Z[w].  Closed forms are
always checked against brute-force oracles at desk scale.
"""

from .cycint import CycInt
from .errors import CharsumError
from .field_core import Elem, FieldCtx, FieldParams, SubfieldView, build_context, context

__version__ = "0.1.0"

__all__ = [
    "CharsumError",
    "CycInt",
    "Elem",
    "FieldCtx",
    "FieldParams",
    "SubfieldView",
    "build_context",
    "context",
    "__version__",
]
