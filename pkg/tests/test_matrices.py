"""Exact matrix algebra and the integer lattice kernel."""

import random
from itertools import combinations
from math import gcd

import pytest

from surgery_algebra import matrices as mx
from surgery_algebra import rings
from surgery_algebra.errors import SingularMatrixError, WrongRingError
from surgery_algebra.rings import AbelianGroup

from conftest import random_matrix

Z = rings.integers()
C2 = rings.cyclic(2, 1)
C4 = rings.cyclic(4, -1)

E8_ROWS = [
    [2, 0, 0, 1, 0, 0, 0, 0],
    [0, 2, 1, 0, 0, 0, 0, 0],
    [0, 1, 2, 1, 0, 0, 0, 0],
    [1, 0, 1, 2, 1, 0, 0, 0],
    [0, 0, 0, 1, 2, 1, 0, 0],
    [0, 0, 0, 0, 1, 2, 1, 0],
    [0, 0, 0, 0, 0, 1, 2, 1],
    [0, 0, 0, 0, 0, 0, 1, 2],
]


def det_int(grid):
    n = len(grid)
    if n == 0:
        return 1
    if n == 1:
        return grid[0][0]
    total = 0
    for j in range(n):
        if grid[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in grid[1:]]
        total += (-1) ** j * grid[0][j] * det_int(minor)
    return total


def invariant_factors_by_minors(grid):
    """d_k = gcd of all k-minors; factors are the successive quotients."""
    rows = len(grid)
    cols = len(grid[0]) if rows else 0
    out = []
    prev = 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, det_int([[grid[i][j] for j in cs] for i in rs]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def test_conj_transpose_over_integers_is_plain_transpose():
    m = mx.int_matrix([[1, 2], [3, 4]])
    assert m.star().to_int_grid() == [[1, 3], [2, 4]]
    assert m.star().star() == m


def test_conj_transpose_applies_the_involution_entrywise():
    g = rings.monomial(C2, 1)
    assert mx.matrix(C2, [[g]]).star() == mx.matrix(C2, [[g]])
    a, b, c, d = (rings.monomial(C4, k) for k in range(4))
    m = mx.matrix(C4, [[a, b], [c, d]])
    star = m.star()
    assert star.entry(0, 0) == rings.involute(a)
    assert star.entry(0, 1) == rings.involute(c)
    assert star.entry(1, 0) == rings.involute(b)
    assert star.entry(1, 1) == rings.involute(d)


def test_conj_transpose_reverses_products():
    rng = random.Random(41)
    for _ in range(25):
        m = random_matrix(rng, C4, 2, 3)
        n = random_matrix(rng, C4, 3, 2)
        assert m.mul(n).star() == n.star().mul(m.star())


def test_smith_normal_form_fixed_values():
    _, d, _ = mx.smith_normal_form(mx.int_matrix([[2, 0], [0, 3]]))
    assert d.to_int_grid() == [[1, 0], [0, 6]]
    _, d, _ = mx.smith_normal_form(mx.int_matrix([[1]]))
    assert d.to_int_grid() == [[1]]
    _, d, _ = mx.smith_normal_form(mx.int_matrix(E8_ROWS))
    assert d == mx.identity_matrix(Z, 8)


def test_smith_normal_form_random_matrices():
    rng = random.Random(42)
    for _ in range(40):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        grid = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        m = mx.int_matrix(grid)
        u, d, v = mx.smith_normal_form(m)
        assert u.mul(m).mul(v) == d
        assert mx.is_unimodular(u) and mx.is_unimodular(v)
        diag = [d.entry(i, i).coeffs[0] for i in range(min(rows, cols))]
        nonzero = [x for x in diag if x != 0]
        assert diag == nonzero + [0] * (len(diag) - len(nonzero))
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0
        assert nonzero == invariant_factors_by_minors(grid)


def test_kernel_basis_values():
    k = mx.kernel_basis(mx.int_matrix([[1, 0]]))
    assert mx.same_span(k, mx.int_matrix([[0], [1]]))
    assert mx.kernel_basis(mx.int_matrix([[2]])).cols == 0
    k = mx.kernel_basis(mx.int_matrix([[1, 1], [1, 1]]))
    assert mx.same_span(k, mx.int_matrix([[1], [-1]]))


def test_kernel_basis_is_primitive():
    rng = random.Random(43)
    for _ in range(30):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        m = mx.int_matrix([[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)])
        k = mx.kernel_basis(m)
        assert m.mul(k).is_zero()
        if k.cols:
            assert mx.is_split_injection(k)
            comp, proj = mx.complement_of_primitive(k)
            assert mx.is_unimodular(mx.hstack(k, comp))
            assert proj.mul(comp) == mx.identity_matrix(Z, comp.cols)
            assert proj.mul(k).is_zero()


def test_cokernel_presentation_values():
    assert mx.cokernel_presentation(mx.int_matrix([[2]])) == AbelianGroup(0, (2,))
    assert mx.cokernel_presentation(mx.int_matrix(E8_ROWS)) == AbelianGroup(0, ())
    assert mx.cokernel_presentation(mx.int_matrix([[0]])) == AbelianGroup(1, ())


def test_unimodularity_and_inverse():
    m = mx.int_matrix([[0, 1], [-1, 0]])
    assert mx.is_unimodular(m)
    assert mx.inverse(m).to_int_grid() == [[0, -1], [1, 0]]
    assert mx.try_inverse(mx.int_matrix([[2]])) is None
    with pytest.raises(SingularMatrixError):
        mx.inverse(mx.int_matrix([[1, 1], [1, 1]]))


def test_split_injection_detects_the_content_gcd():
    assert mx.is_split_injection(mx.int_matrix([[2], [3]]))
    assert not mx.is_split_injection(mx.int_matrix([[2], [4]]))


def test_lattice_algorithms_refuse_other_rings():
    m = mx.matrix(C2, [[rings.monomial(C2, 1)]])
    with pytest.raises(WrongRingError):
        mx.smith_normal_form(m)
    with pytest.raises(WrongRingError):
        mx.kernel_basis(m)


def test_solve_right_finds_exact_solutions():
    a = mx.int_matrix([[2, 1], [0, 1]])
    b = mx.int_matrix([[3], [1]])
    x = mx.solve_right(a, b)
    assert x is not None and a.mul(x) == b
    assert mx.solve_right(mx.int_matrix([[2]]), mx.int_matrix([[1]])) is None


def test_rank_agrees_with_the_normal_form():
    rng = random.Random(44)
    for _ in range(30):
        grid = [[rng.randint(-5, 5) for _ in range(3)] for _ in range(3)]
        m = mx.int_matrix(grid)
        _, d, _ = mx.smith_normal_form(m)
        nonzero = sum(1 for i in range(3) if d.entry(i, i).coeffs[0] != 0)
        assert mx.rank(m) == nonzero


def test_empty_shapes_survive_the_basic_operations():
    wide = mx.zero_matrix(Z, 0, 3)
    tall = mx.zero_matrix(Z, 3, 0)
    assert wide.mul(tall).to_int_grid() == []
    prod = tall.mul(wide)
    assert prod.rows == 3 and prod.cols == 3 and prod.is_zero()
    assert mx.is_unimodular(mx.identity_matrix(Z, 0))
    assert mx.kernel_basis(wide).cols == 3
