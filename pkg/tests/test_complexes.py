"""Chain-level quadratic complexes, surgery, and cobordisms."""

import random

import pytest

from surgery_algebra import complexes as cx, matrices as mx, rings
from surgery_algebra.complexes import (
    Cobordism,
    OddComplex,
    SurgeryData,
    complex_homology,
    complex_violations,
    is_contractible,
    is_homotopy_equivalence,
    odd_complex,
    reflexive_cobordism,
    reverse_cobordism,
    surgery_on_complex,
    union_cobordisms,
    validate_cobordism,
    validate_complex,
    verify_map,
    zero_complex,
)
from surgery_algebra.errors import DomainError
from surgery_algebra.rings import AbelianGroup

from conftest import hessian_corner, random_complex, random_matrix

Z = rings.integers()


def test_zero_complex_is_valid_and_contractible():
    for parity in (0, 1):
        c = zero_complex(Z, parity)
        assert validate_complex(c)
        assert is_contractible(c)
        assert complex_homology(c) == (AbelianGroup(0, ()), 0)


def test_rank_one_product_complex():
    for parity in (0, 1):
        c = odd_complex(Z, parity, [[0]], [[1]], [[0]])
        assert validate_complex(c)
        assert not is_contractible(c)
        assert complex_homology(c) == (AbelianGroup(1, ()), 1)


def test_doubled_differential_depends_on_the_parity():
    c = odd_complex(Z, 1, [[2]], [[1]], [[-1]])
    assert validate_complex(c)
    assert complex_homology(c) == (AbelianGroup(0, (2,)), 0)
    bad = odd_complex(Z, 0, [[2]], [[1]], [[-1]])
    viols = complex_violations(bad)
    assert viols and not validate_complex(bad)


def test_contractibility_is_invertibility():
    assert is_contractible(OddComplex(Z, 0, mx.int_matrix([[-1]]),
                                      mx.int_matrix([[1]]), mx.int_matrix([[1]])))
    assert not is_contractible(odd_complex(Z, 1, [[2]], [[1]], [[-1]]))


def test_identity_is_an_equivalence():
    rng = random.Random(71)
    c = random_complex(rng, 1, 2, 3)
    ident = (mx.identity_matrix(Z, c.rank_top), mx.identity_matrix(Z, c.rank_bottom))
    assert verify_map(ident, None, None, c, c)
    assert is_homotopy_equivalence(ident, c, c)


def test_zero_map_is_not_an_equivalence():
    c = odd_complex(Z, 0, [[0]], [[1]], [[0]])
    zero = (mx.zero_matrix(Z, 1, 1), mx.zero_matrix(Z, 1, 1))
    assert not is_homotopy_equivalence(zero, c, c)


def test_maps_between_different_parities_fail_fast():
    a = zero_complex(Z, 0)
    b = zero_complex(Z, 1)
    empty = (mx.zero_matrix(Z, 0, 0), mx.zero_matrix(Z, 0, 0))
    assert not verify_map(empty, None, None, a, b)


def test_identity_map_with_a_shifted_quadratic_structure():
    # same chain complex, quadratic structure moved by a coboundary of chi
    rng = random.Random(72)
    for parity in (0, 1):
        c = random_complex(rng, parity, 2, 3)
        eps = c.epsilon
        chi = random_matrix(rng, Z, c.rank_top, c.rank_top)
        cob = chi.sub(chi.star().scale_int(eps))
        shifted = OddComplex(Z, parity, c.d,
                             c.psi0.sub(cob.mul(c.d.star())),
                             c.psi1.add(c.d.mul(chi).mul(c.d.star())))
        assert validate_complex(shifted)
        ident = (mx.identity_matrix(Z, c.rank_top), mx.identity_matrix(Z, c.rank_bottom))
        assert verify_map(ident, chi, None, c, shifted)
        assert verify_map(ident, chi, None, c, shifted, weak=True)
        assert is_homotopy_equivalence(ident, c, shifted, chi0=chi)


def test_surgery_on_the_empty_complex():
    for parity, delta in ((0, 0), (0, 1), (1, 0), (1, 1)):
        c = zero_complex(Z, parity)
        data = SurgeryData(mx.zero_matrix(Z, 1, 0), mx.int_matrix([[delta]]))
        effect, trace = surgery_on_complex(c, data)
        eps = c.epsilon
        assert effect.d.to_int_grid() == [[delta * (1 - eps)]]
        assert effect.psi0.to_int_grid() == [[1]]
        assert effect.psi1.to_int_grid() == [[-delta]]
        assert validate_complex(effect)
        assert validate_cobordism(c, effect, trace)
    # the torsion case appears at the odd parity
    c = zero_complex(Z, 1)
    effect, _ = surgery_on_complex(c, SurgeryData(mx.zero_matrix(Z, 1, 0),
                                                  mx.int_matrix([[1]])))
    assert complex_homology(effect) == (AbelianGroup(0, (2,)), 0)


def test_surgery_requires_an_onto_map():
    c = odd_complex(Z, 1, [[2]], [[1]], [[-1]])
    data = SurgeryData(mx.zero_matrix(Z, 1, 1), mx.zero_matrix(Z, 1, 1))
    with pytest.raises(DomainError):
        surgery_on_complex(c, data)


def test_identity_surgery_traces_validate():
    rng = random.Random(73)
    for _ in range(12):
        parity = rng.randrange(2)
        k = rng.randint(1, 3)
        c = random_complex(rng, parity, k, rng.randint(1, 5))
        data = SurgeryData(mx.identity_matrix(Z, c.rank_top),
                           hessian_corner(rng, Z, c.rank_top, -c.epsilon)
                           if rng.random() < 0.5 else
                           random_matrix(rng, Z, c.rank_top, c.rank_top))
        assert cx.surgery_admissible(c, data)
        effect, trace = surgery_on_complex(c, data)
        assert validate_complex(effect)
        assert validate_cobordism(c, effect, trace)


def test_union_of_a_trace_with_its_reversal():
    rng = random.Random(74)
    for _ in range(8):
        parity = rng.randrange(2)
        c = random_complex(rng, parity, rng.randint(1, 2), rng.randint(1, 4))
        data = SurgeryData(mx.identity_matrix(Z, c.rank_top),
                           random_matrix(rng, Z, c.rank_top, c.rank_top))
        effect, trace = surgery_on_complex(c, data)
        loop = union_cobordisms(c, effect, c, trace, reverse_cobordism(trace))
        assert validate_cobordism(c, c, loop)


def test_union_rejects_mismatched_middles():
    a = odd_complex(Z, 0, [[0]], [[1]], [[0]])
    b = zero_complex(Z, 0)
    data = SurgeryData(mx.identity_matrix(Z, 1), mx.zero_matrix(Z, 1, 1))
    _, trace = surgery_on_complex(a, data)
    with pytest.raises(Exception):
        union_cobordisms(a, b, a, trace, reverse_cobordism(trace))


def test_reflexive_cobordism_validates():
    rng = random.Random(75)
    for _ in range(10):
        parity = rng.randrange(2)
        c = random_complex(rng, parity, rng.randint(1, 3), rng.randint(1, 5))
        twin, cob = reflexive_cobordism(c)
        assert validate_complex(twin)
        assert validate_cobordism(c, twin, cob)


def test_trivial_cobordism_between_nonzero_complexes_fails():
    c = odd_complex(Z, 0, [[0]], [[1]], [[0]])
    cob = Cobordism(mx.zero_matrix(Z, 0, 1), mx.zero_matrix(Z, 0, 1),
                    mx.zero_matrix(Z, 0, 0))
    assert not validate_cobordism(c, c, cob)


def test_surgery_preserves_homology_when_nothing_is_attached():
    rng = random.Random(76)
    for _ in range(8):
        c = random_complex(rng, 1, 2, 3)
        if not mx.is_surjection(c.d):
            continue
        data = SurgeryData(mx.zero_matrix(Z, 0, c.rank_top), mx.zero_matrix(Z, 0, 0))
        assert cx.surgery_admissible(c, data)
        effect, _ = surgery_on_complex(c, data)
        assert complex_homology(effect) == complex_homology(c)
