"""Stable invariants of nonsingular quadratic forms over the integers.

The symmetric side carries the signature, the antisymmetric side the Arf
invariant; both are constant on stable isomorphism classes, where two forms
are identified when they agree after adding hyperbolics.  Signature divided
by eight and Arf are complete invariants for that classification, one value
in the integers and one bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _intlat, forms, matrices, rings
from .errors import DomainError, SchemaError, SingularMatrixError, WrongRingError
from .forms import QuadraticForm
from .matrices import FormMatrix


def _int_symmetric(form, epsilon: int, what: str) -> list[list[int]]:
    lam = form.lam if hasattr(form, "lam") else form
    if lam.ring.kind != "Z":
        raise WrongRingError(f"{what} is only computed over the integers")
    got = getattr(form, "epsilon", epsilon)
    if got != epsilon:
        raise DomainError(f"{what} needs epsilon = {epsilon:+d}, got {got:+d}")
    return lam.to_int_grid()


def signature(form) -> int:
    """Positive minus negative diagonal count after exact diagonalisation.

    Accepts a symmetric or quadratic form over the integers.  Congruence
    steps run over the rationals; a zero diagonal entry is first repaired by
    adding a row and column that pair with it nontrivially, so every pivot
    is 1x1 and contributes its sign.
    """
    grid = _int_symmetric(form, 1, "signature")
    k = len(grid)
    g = [[Fraction(x) for x in row] for row in grid]
    live = list(range(k))
    sig = 0
    while live:
        p = live[0]
        if g[p][p] == 0:
            j = next((c for c in live[1:] if g[p][c] != 0), None)
            if j is None:
                raise SingularMatrixError("signature needs a nonsingular form")
            for t in (1, -1):
                if g[p][p] + 2 * t * g[p][j] + g[j][j] != 0:
                    break
            for r in live:
                g[r][p] += t * g[r][j]
            for c in live:
                g[p][c] += t * g[j][c]
        d = g[p][p]
        sig += 1 if d > 0 else -1
        live = live[1:]
        for r in live:
            if g[r][p] == 0:
                continue
            f = g[r][p] / d
            for c in live:
                g[r][c] -= f * g[p][c]
            g[r][p] = Fraction(0)
        for c in live:
            g[p][c] = Fraction(0)
    return sig


def _symplectic_pairs(g: list[list[int]]):
    """Pair columns (u_i, v_i) with u'gv = 1 in original coordinates."""
    k = len(g)
    if k == 0:
        return []
    if k % 2 == 1:
        raise SingularMatrixError("an odd-rank antisymmetric form is singular")
    row = [g[0][c] for c in range(k)]
    sol = _intlat.solve([row], [[1]])
    if sol is None:
        raise SingularMatrixError("no vector pairs to a unit: the form is not unimodular")
    u = [1 if r == 0 else 0 for r in range(k)]
    v = [sol[r][0] for r in range(k)]
    vg = [sum(v[r] * g[r][c] for r in range(k)) for c in range(k)]
    # rows u'g and v'g cut out the orthogonal complement of the pair
    comp = _intlat.kernel_basis([row, vg])
    sub = _intlat.matmul(_intlat.transpose(comp), _intlat.matmul(g, comp))

    def lift(x):
        return [sum(comp[r][i] * x[i] for i in range(len(x))) for r in range(k)]

    pairs = [(u, v)]
    for su, sv in _symplectic_pairs(sub):
        pairs.append((lift(su), lift(sv)))
    return pairs


def symplectic_basis(form) -> FormMatrix:
    """Change of basis B with B'·lambda·B = [[0, I], [-I, 0]].

    Column i pairs with column i+m to the value 1.  Requires a unimodular
    antisymmetric form over the integers.
    """
    grid = _int_symmetric(form, -1, "the symplectic basis")
    lam = form.lam if hasattr(form, "lam") else form
    if not matrices.is_unimodular(lam):
        raise SingularMatrixError("the symplectic basis needs a unimodular form")
    pairs = _symplectic_pairs(grid)
    cols = [u for u, _ in pairs] + [v for _, v in pairs]
    k = len(grid)
    if k == 0:
        return matrices.zero_matrix(lam.ring, 0, 0)
    return matrices.int_matrix([[c[i] for c in cols] for i in range(k)])


def _mu_bit(q: QuadraticForm, col: FormMatrix) -> int:
    val = forms.mu_value(q, col)
    return 0 if rings.class_is_zero(val) else 1


def arf(q: QuadraticForm) -> int:
    """Sum of mu(u_i)·mu(v_i) over a symplectic basis, in Z/2."""
    if not isinstance(q, QuadraticForm):
        raise SchemaError("arf expects a quadratic form")
    b = symplectic_basis(q)
    m = b.cols // 2
    total = 0
    for i in range(m):
        total += _mu_bit(q, b.column(i)) * _mu_bit(q, b.column(i + m))
    return total % 2


@dataclass(frozen=True)
class WittClass:
    """Stable class of a nonsingular quadratic form over the integers."""

    epsilon: int
    value: int

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise SchemaError("epsilon must be +1 or -1")
        if self.epsilon == -1 and self.value not in (0, 1):
            raise SchemaError("the antisymmetric class is a single bit")


def witt_class(q: QuadraticForm) -> WittClass:
    if q.ring.kind != "Z":
        raise WrongRingError("witt classes are only computed over the integers")
    if not forms.is_nonsingular(q):
        raise SingularMatrixError("witt class needs a nonsingular form")
    if q.epsilon == -1:
        return WittClass(-1, arf(q))
    sig = signature(q)
    if sig % 8 != 0:
        raise DomainError(
            f"signature {sig} is not divisible by 8; the input is not an even nonsingular form"
        )
    return WittClass(1, sig // 8)


def is_stably_hyperbolic(q: QuadraticForm) -> bool:
    return witt_class(q).value == 0
