"""Rings with involution and the quadratic quotient groups Q_eps.

Three coefficient rings are supported, all with exact integer arithmetic:

* ``Integers`` -- the ring Z with the identity involution.
* ``CyclicGroupRing(m, w)`` -- the group ring Z[Z/m] with the involution
  twisted by an orientation character w: the generator g maps to w * g^-1.
* ``LaurentRing`` -- Z[z, z^-1] with the involution z -> z^-1.

Elements are immutable coefficient vectors.  The quotient groups
Q_eps = Lambda / {a - eps * conj(a)} get canonical coset representatives by
Hermite reduction against the sublattice, so equality of classes is equality
of representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _intlat
from .errors import DomainError, WrongRingError


@dataclass(frozen=True)
class RingSpec:
    """Descriptor of a supported ring with involution."""

    kind: str
    m: int = 0
    w: int = 1

    def __post_init__(self):
        if self.kind == "Z" or self.kind == "laurent":
            if self.m != 0 or self.w != 1:
                raise ValueError("m and w are only meaningful for cyclic group rings")
        elif self.kind == "cyclic":
            if self.m < 1:
                raise ValueError("cyclic group order must be at least 1")
            if self.w not in (1, -1):
                raise ValueError("orientation character must be +1 or -1")
            if self.w == -1 and self.m % 2 == 1:
                raise ValueError("w = -1 needs even group order, else w^m != 1")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    def __str__(self):
        if self.kind == "Z":
            return "Z"
        if self.kind == "laurent":
            return "Z[z,z^-1]"
        sign = "+" if self.w == 1 else "-"
        return f"Z[Z/{self.m}]^{sign}"


def integers() -> RingSpec:
    return RingSpec("Z")


def cyclic(m: int, w: int = 1) -> RingSpec:
    return RingSpec("cyclic", m, w)


def laurent() -> RingSpec:
    return RingSpec("laurent")


Z = integers()


@dataclass(frozen=True)
class RingElement:
    """Element of a RingSpec ring as an exact coefficient vector.

    For Integers, coeffs is a single-entry tuple.  For a cyclic group ring of
    order m, coeffs has length m and index k holds the coefficient of g^k.
    For the Laurent ring, coeffs holds a trimmed window of coefficients and
    shift is the exponent of the first one; the zero element is the empty
    window with shift 0.
    """

    ring: RingSpec
    coeffs: tuple[int, ...]
    shift: int = 0


def _mk(ring: RingSpec, coeffs, shift: int = 0) -> RingElement:
    if ring.kind == "laurent":
        lo = 0
        hi = len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            return RingElement(ring, (), 0)
        return RingElement(ring, tuple(coeffs[lo:hi]), shift + lo)
    return RingElement(ring, tuple(coeffs), 0)


def zero(ring: RingSpec) -> RingElement:
    if ring.kind == "Z":
        return RingElement(ring, (0,))
    if ring.kind == "cyclic":
        return RingElement(ring, (0,) * ring.m)
    return RingElement(ring, ())


def from_int(ring: RingSpec, n: int) -> RingElement:
    if ring.kind == "Z":
        return RingElement(ring, (n,))
    if ring.kind == "cyclic":
        return _mk(ring, (n,) + (0,) * (ring.m - 1))
    return _mk(ring, (n,), 0)


def one(ring: RingSpec) -> RingElement:
    return from_int(ring, 1)


def monomial(ring: RingSpec, k: int, coeff: int = 1) -> RingElement:
    """coeff * g^k (cyclic), coeff * z^k (Laurent), or plain coeff over Z (k must be 0)."""
    if ring.kind == "Z":
        if k != 0:
            raise DomainError("the integers have no nontrivial monomials")
        return RingElement(ring, (coeff,))
    if ring.kind == "cyclic":
        v = [0] * ring.m
        v[k % ring.m] = coeff
        return _mk(ring, v)
    return _mk(ring, (coeff,), k)


def _check_same_ring(a: RingElement, b: RingElement):
    if a.ring != b.ring:
        raise WrongRingError(f"mixed rings {a.ring} and {b.ring}")


def add(a: RingElement, b: RingElement) -> RingElement:
    _check_same_ring(a, b)
    ring = a.ring
    if ring.kind != "laurent":
        return _mk(ring, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))
    if not a.coeffs:
        return b
    if not b.coeffs:
        return a
    lo = min(a.shift, b.shift)
    hi = max(a.shift + len(a.coeffs), b.shift + len(b.coeffs))
    v = [0] * (hi - lo)
    for i, c in enumerate(a.coeffs):
        v[a.shift - lo + i] += c
    for i, c in enumerate(b.coeffs):
        v[b.shift - lo + i] += c
    return _mk(ring, v, lo)


def neg(a: RingElement) -> RingElement:
    return RingElement(a.ring, tuple(-c for c in a.coeffs), a.shift)


def sub(a: RingElement, b: RingElement) -> RingElement:
    return add(a, neg(b))


def mul(a: RingElement, b: RingElement) -> RingElement:
    _check_same_ring(a, b)
    ring = a.ring
    if ring.kind == "Z":
        return RingElement(ring, (a.coeffs[0] * b.coeffs[0],))
    if ring.kind == "cyclic":
        m = ring.m
        v = [0] * m
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        v[(i + j) % m] += x * y
        return _mk(ring, v)
    if not a.coeffs or not b.coeffs:
        return zero(ring)
    v = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                v[i + j] += x * y
    return _mk(ring, v, a.shift + b.shift)


def is_zero(a: RingElement) -> bool:
    return all(c == 0 for c in a.coeffs)


def involute(a: RingElement) -> RingElement:
    """The involution a -> conj(a) of the ring."""
    ring = a.ring
    if ring.kind == "Z":
        return a
    if ring.kind == "cyclic":
        m = ring.m
        v = [0] * m
        for k, c in enumerate(a.coeffs):
            v[(m - k) % m] += (ring.w ** k) * c
        return _mk(ring, v)
    if not a.coeffs:
        return a
    return _mk(ring, tuple(reversed(a.coeffs)), -(a.shift + len(a.coeffs) - 1))


def symmetrize(a: RingElement, epsilon: int) -> RingElement:
    """a + epsilon * conj(a), the image of a under 1 + T_eps."""
    if epsilon == 1:
        return add(a, involute(a))
    return sub(a, involute(a))


def _involution_grid(ring: RingSpec) -> list[list[int]]:
    m = ring.m
    t = _intlat.zeros(m, m)
    for k in range(m):
        t[(m - k) % m][k] = ring.w ** k
    return t


def symmetrize_preimage(a: RingElement, epsilon: int):
    """Some x with x + epsilon * conj(x) = a, or None if a is not in the image."""
    ring = a.ring
    if ring.kind == "Z":
        n = a.coeffs[0]
        if epsilon == 1:
            return from_int(ring, n // 2) if n % 2 == 0 else None
        return zero(ring) if n == 0 else None
    if ring.kind == "cyclic":
        m = ring.m
        t = _involution_grid(ring)
        mat = [[(1 if i == j else 0) + epsilon * t[i][j] for j in range(m)] for i in range(m)]
        sol = _intlat.solve(mat, [[c] for c in a.coeffs])
        if sol is None:
            return None
        return _mk(ring, [row[0] for row in sol])
    if not a.coeffs:
        return a
    b = max(abs(a.shift), abs(a.shift + len(a.coeffs) - 1))
    full = [0] * (2 * b + 1)
    for i, c in enumerate(a.coeffs):
        full[a.shift + i + b] = c
    a0 = full[b]
    if epsilon == 1 and a0 % 2:
        return None
    if epsilon == -1 and a0 != 0:
        return None
    x = [0] * (2 * b + 1)
    x[b] = a0 // 2 if epsilon == 1 else 0
    for k in range(1, b + 1):
        if full[b - k] != epsilon * full[b + k]:
            return None
        x[b + k] = full[b + k]
    return _mk(laurent(), x, -b)


def desymmetrize(a: RingElement, epsilon: int):
    """Some x with x - epsilon * conj(x) = a, or None.  Inverts 1 - T_eps."""
    return symmetrize_preimage(a, -epsilon)


def in_symmetrize_image(a: RingElement, epsilon: int) -> bool:
    return symmetrize_preimage(a, epsilon) is not None


@lru_cache(maxsize=None)
def _q_lattice(kind: str, m: int, w: int, epsilon: int, window: int):
    """Hermite basis of the sublattice {a - eps*conj(a)} in coefficient coordinates."""
    if kind == "cyclic":
        ring = RingSpec(kind, m, w)
        n = m
        gens = []
        for k in range(n):
            e = monomial(ring, k)
            v = sub(e, RingElement(ring, tuple(epsilon * c for c in involute(e).coeffs)))
            gens.append(list(v.coeffs))
        grid = [[gens[j][i] for j in range(n)] for i in range(n)]
    else:
        n = 2 * window + 1
        grid = _intlat.zeros(n, n)
        for k in range(window + 1):
            col = [0] * n
            col[window + k] += 1
            col[window - k] -= epsilon
            for i in range(n):
                grid[i][k] = col[i]
    return _intlat.hermite_column_basis(grid)


@dataclass(frozen=True)
class QEpsilonClass:
    """Canonical coset representative in Q_eps = Lambda / {a - eps*conj(a)}."""

    ring: RingSpec
    epsilon: int
    rep: RingElement


def q_eps_reduce(a: RingElement, epsilon: int) -> QEpsilonClass:
    ring = a.ring
    if epsilon not in (1, -1):
        raise DomainError("epsilon must be +1 or -1")
    if ring.kind == "Z":
        n = a.coeffs[0]
        rep = a if epsilon == 1 else from_int(ring, n % 2)
        return QEpsilonClass(ring, epsilon, rep)
    if ring.kind == "cyclic":
        h, piv = _q_lattice("cyclic", ring.m, ring.w, epsilon, 0)
        red = _intlat.reduce_mod_lattice(list(a.coeffs), h, piv)
        return QEpsilonClass(ring, epsilon, _mk(ring, red))
    if not a.coeffs:
        return QEpsilonClass(ring, epsilon, a)
    b = max(abs(a.shift), abs(a.shift + len(a.coeffs) - 1))
    h, piv = _q_lattice("laurent", 0, 1, epsilon, b)
    full = [0] * (2 * b + 1)
    for i, c in enumerate(a.coeffs):
        full[a.shift + i + b] = c
    red = _intlat.reduce_mod_lattice(full, h, piv)
    return QEpsilonClass(ring, epsilon, _mk(ring, red, -b))


def class_add(a: QEpsilonClass, b: QEpsilonClass) -> QEpsilonClass:
    if a.ring != b.ring or a.epsilon != b.epsilon:
        raise WrongRingError("cannot add classes over different rings or epsilons")
    return q_eps_reduce(add(a.rep, b.rep), a.epsilon)


def class_neg(a: QEpsilonClass) -> QEpsilonClass:
    return q_eps_reduce(neg(a.rep), a.epsilon)


def class_is_zero(a: QEpsilonClass) -> bool:
    return is_zero(a.rep)


def class_twist(a: QEpsilonClass, x: RingElement) -> QEpsilonClass:
    """The class of x * a * conj(x); how quadratic self-values transform."""
    return q_eps_reduce(mul(mul(x, a.rep), involute(x)), a.epsilon)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group as free rank plus invariant factors."""

    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def _group_from_invariants(inv: list[int]) -> AbelianGroup:
    tors = tuple(x for x in inv if x > 1)
    free = sum(1 for x in inv if x == 0)
    return AbelianGroup(free, tors)


def q_eps_group(ring: RingSpec, epsilon: int, window: int | None = None) -> AbelianGroup:
    """Q_eps(Lambda) as an abelian group.

    The Laurent ring needs an exponent window bound: the result describes the
    classes of elements supported on [-window, window], which is the whole
    story for any fixed finite computation.
    """
    if ring.kind == "Z":
        if epsilon == 1:
            return AbelianGroup(1, ())
        return AbelianGroup(0, (2,))
    if ring.kind == "cyclic":
        m = ring.m
        gens = []
        for k in range(m):
            e = monomial(ring, k)
            gens.append(list(sub(e, RingElement(ring, tuple(epsilon * c for c in involute(e).coeffs))).coeffs))
        grid = [[gens[j][i] for j in range(m)] for i in range(m)]
        return _group_from_invariants(_intlat.cokernel_invariants(grid))
    if window is None:
        raise DomainError("Q_eps of the Laurent ring needs an exponent window bound")
    n = 2 * window + 1
    grid = _intlat.zeros(n, n)
    for k in range(window + 1):
        grid[window + k][k] += 1
        grid[window - k][k] -= epsilon
    return _group_from_invariants(_intlat.cokernel_invariants(grid))
