"""Formations: pairs of lagrangians, boundaries, and the complex dictionary."""

import random

import pytest

from surgery_algebra import complexes as cx, matrices as mx, rings, unitary
from surgery_algebra.errors import DomainError, PreconditionError
from surgery_algebra.formations import (
    boundary_formation,
    boundary_witness,
    complex_to_formation,
    direct_sum_formation,
    formation,
    formation_from_automorphism,
    formation_homology,
    formation_to_complex,
    formation_violations,
    is_trivial_formation,
    negate_formation,
    normalize_formation,
    null_cobordism_of_boundary,
    trivial_formation,
    validate_formation,
    verify_formation_isomorphism,
    verify_stable_isomorphism,
)
from surgery_algebra.forms import (
    hyperbolic_quadratic,
    is_isometry,
    mu_value,
    quadratic_form,
    split_to_quadratic,
)
from surgery_algebra.rings import AbelianGroup

from conftest import hessian_corner, random_unimodular, random_word
from test_forms import arf_form

Z = rings.integers()


def dual_summand(ring, k):
    return mx.vstack(mx.zero_matrix(ring, k, k), mx.identity_matrix(ring, k))


def test_trivial_formation_is_detected_with_the_identity():
    phi = trivial_formation(Z, -1, 2)
    assert validate_formation(phi)
    iso = is_trivial_formation(phi)
    assert iso is not None and iso.f == mx.identity_matrix(Z, 4)


def test_equal_lagrangians_are_never_complementary():
    q = hyperbolic_quadratic(Z, -1, 1)
    f = mx.int_matrix([[1], [0]])
    phi = formation(Z, -1, q, f, f)
    assert validate_formation(phi)
    assert is_trivial_formation(phi) is None
    assert formation_homology(phi) == (AbelianGroup(1, ()), 1)


def test_violations_name_the_failing_lagrangian():
    q = hyperbolic_quadratic(Z, -1, 1)
    phi = formation(Z, -1, q, [[1], [0]], [[1], [1]])
    assert "G is not a lagrangian" in formation_violations(phi)
    singular = formation(Z, -1, quadratic_form(Z, -1, [[0, 0], [0, 0]], [0, 0]),
                         [[1], [0]], [[0], [1]])
    assert formation_violations(singular) == ("underlying form is singular",)


def test_boundary_of_the_zero_form():
    k = quadratic_form(Z, -1, [[0]], [0])
    phi = boundary_formation(k)
    assert phi.epsilon == 1
    assert phi.g.to_int_grid() == [[1], [0]]
    assert validate_formation(phi)


def test_boundary_graph_carries_the_pairing():
    k = quadratic_form(Z, 1, [[2]], [1])
    phi = boundary_formation(k)
    assert phi.epsilon == -1
    assert phi.g.to_int_grid() == [[1], [2]]
    assert validate_formation(phi)
    # graph with a nonzero pairing: boundary-detectable but not trivial
    assert is_trivial_formation(phi) is None


def test_boundary_of_the_arf_form_and_of_singular_forms():
    phi = boundary_formation(arf_form())
    assert phi.rank == 8 and validate_formation(phi)
    singular = quadratic_form(Z, -1, [[0]], [1])
    assert validate_formation(boundary_formation(singular))


def test_boundary_witness_recovers_the_form():
    rng = random.Random(91)
    for _ in range(12):
        eps = rng.choice((1, -1))
        k = rng.randint(1, 3)
        lam = hessian_corner(rng, Z, k, eps)
        theta_mu = [rings.q_eps_reduce(lam.entry(i, i), -eps) for i in range(k)]
        source = quadratic_form(Z, -eps, lam, theta_mu) if False else None
        kq = split_to_quadratic(
            __import__("surgery_algebra.forms", fromlist=["split_form"]).split_form(Z, -eps, lam)
        ) if False else None
        form_in = quadratic_form(Z, -eps, lam,
                                 [mx_diag_class(lam, i, -eps) for i in range(k)])
        phi = boundary_formation(form_in)
        recovered, iso = boundary_witness(phi, dual_summand(Z, k))
        assert recovered.lam == form_in.lam
        assert verify_formation_isomorphism(boundary_formation(recovered), phi, iso.f)


def mx_diag_class(lam, i, eps):
    return rings.q_eps_reduce(lam.entry(i, i), eps)


def test_boundary_witness_rejects_bad_witnesses():
    phi = boundary_formation(quadratic_form(Z, 1, [[2]], [1]))
    with pytest.raises(PreconditionError):
        boundary_witness(phi, phi.f)
    with pytest.raises(PreconditionError):
        boundary_witness(phi, mx.int_matrix([[1], [1]]))


def test_formation_to_complex_values():
    contractible = formation_to_complex(trivial_formation(Z, -1, 2))
    assert cx.is_contractible(contractible)

    q = hyperbolic_quadratic(Z, -1, 1)
    f = mx.int_matrix([[1], [0]])
    both_equal = formation_to_complex(formation(Z, -1, q, f, f))
    assert both_equal.d.is_zero()

    c = formation_to_complex(boundary_formation(quadratic_form(Z, -1, [[0]], [0])))
    assert c.d.to_int_grid() == [[0]] and c.psi0.to_int_grid() == [[1]]


def test_formation_to_complex_requires_the_standard_presentation():
    phi = trivial_formation(Z, -1, 1)
    p = random_unimodular(random.Random(92), Z, 2)
    moved = formation(Z, -1,
                      quadratic_form(Z, -1, p.star().mul(phi.q.lam).mul(p),
                                     [mu_value(phi.q, p.column(j)) for j in range(2)]),
                      mx.inverse(p).mul(phi.f), mx.inverse(p).mul(phi.g))
    assert validate_formation(moved)
    with pytest.raises(PreconditionError):
        formation_to_complex(moved)
    norm, ext = normalize_formation(moved)
    assert verify_formation_isomorphism(norm, moved, ext.f)
    assert cx.validate_complex(formation_to_complex(norm))


def test_complex_to_formation_round_trip():
    rng = random.Random(93)
    for _ in range(15):
        eps = rng.choice((1, -1))
        k = rng.randint(1, 3)
        phi = formation_from_automorphism(random_word(rng, eps, k, rng.randint(1, 5)))
        c = formation_to_complex(phi)
        assert cx.validate_complex(c)
        back = complex_to_formation(c)
        assert verify_formation_isomorphism(back, phi, mx.identity_matrix(Z, 2 * k))
        assert formation_homology(phi) == cx.complex_homology(c)


def test_product_complex_has_equal_lagrangians():
    c = cx.odd_complex(Z, 0, [[0]], [[1]], [[0]])
    phi = complex_to_formation(c)
    assert mx.same_span(phi.f, phi.g)
    assert formation_homology(phi) == (AbelianGroup(1, ()), 1)


def test_formation_from_automorphism():
    ident = unitary.identity_unitary(Z, -1, 2)
    phi = formation_from_automorphism(ident)
    assert mx.same_span(phi.f, phi.g)
    sigma = unitary.sigma_eps(Z, -1, 2)
    triv = formation_from_automorphism(sigma)
    assert is_trivial_formation(triv) is not None
    broken = unitary.UnitaryAutomorphism(
        Z, -1, mx.identity_matrix(Z, 1), mx.identity_matrix(Z, 1),
        mx.zero_matrix(Z, 1, 1), mx.identity_matrix(Z, 1))
    with pytest.raises(DomainError):
        formation_from_automorphism(broken)


def test_null_cobordism_of_boundaries():
    cases = [
        quadratic_form(Z, -1, [[0]], [0]),
        arf_form(),
        quadratic_form(Z, -1, [[0]], [1]),
        quadratic_form(Z, 1, [[2, 1], [1, 2]], [1, 1]),
    ]
    for k in cases:
        c, cob = null_cobordism_of_boundary(k)
        assert cx.validate_complex(c)
        assert cx.validate_cobordism(c, cx.zero_complex(Z, c.parity), cob)


def test_direct_sums_and_negation_stay_standard():
    a = boundary_formation(quadratic_form(Z, -1, [[0]], [1]))
    b = boundary_formation(quadratic_form(Z, -1, [[2, -1], [1, 0]], [1, 0]))
    s = direct_sum_formation(a, b)
    assert validate_formation(s)
    assert formation_to_complex(s) is not None
    n = negate_formation(a)
    assert validate_formation(n) and n.epsilon == -a.epsilon


def test_stable_isomorphism_with_padding():
    a = boundary_formation(quadratic_form(Z, -1, [[2]], [1]))
    b = direct_sum_formation(a, trivial_formation(Z, 1, 1))
    assert verify_stable_isomorphism(a, b, mx.identity_matrix(Z, 4), pad_a=1, pad_b=0)
    assert not verify_stable_isomorphism(a, b, mx.identity_matrix(Z, 4), pad_a=0, pad_b=0)
