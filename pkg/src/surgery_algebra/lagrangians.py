"""Sublagrangians, lagrangians, and the constructive splitting algorithms.

The centrepiece: a lagrangian of a nonsingular split form extends to an
isomorphism from the hyperbolic form, computed here as explicit matrices
over the integers (other rings accept witness data instead of searching).
On top of that sit sublagrangian reduction, the hyperbolic splitting of
(K,psi) + (K,-psi), and surgery on a form below an isotropic vector.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import forms, matrices, rings
from .errors import DomainError, PreconditionError, SchemaError, SingularMatrixError
from .forms import FormIsometry, QuadraticForm, SplitForm
from .matrices import FormMatrix


@dataclass(frozen=True)
class LagrangianInclusion:
    """Columns of basis include a (sub)lagrangian L into the form's module."""

    basis: FormMatrix
    theta: FormMatrix | None = None


def _as_basis(L) -> tuple[FormMatrix, FormMatrix | None]:
    if isinstance(L, LagrangianInclusion):
        return L.basis, L.theta
    return L, None


def _as_quadratic(form) -> QuadraticForm:
    if isinstance(form, SplitForm):
        return forms.split_to_quadratic(form)
    return form


def orthogonal(form, L: FormMatrix) -> FormMatrix:
    """Basis of the orthogonal sublattice ker(conj_transpose(L)·lambda)."""
    q = _as_quadratic(form)
    if not matrices.is_split_injection(L):
        raise DomainError("orthogonal complement needs a primitive independent basis")
    return matrices.kernel_basis(L.star().mul(q.lam))


def is_sublagrangian(form, L) -> bool:
    """Primitive, lambda-isotropic, mu-isotropic."""
    basis, _ = _as_basis(L)
    q = _as_quadratic(form)
    if basis.rows != q.rank:
        return False
    if not matrices.is_split_injection(basis):
        return False
    if not basis.star().mul(q.lam).mul(basis).is_zero():
        return False
    return all(
        rings.class_is_zero(forms.mu_value(q, basis.column(j))) for j in range(basis.cols)
    )


def is_lagrangian(form, L) -> bool:
    """Sublagrangian whose orthogonal is itself; form must be nonsingular."""
    basis, _ = _as_basis(L)
    q = _as_quadratic(form)
    if not forms.is_nonsingular(q):
        raise DomainError("the lagrangian test needs a nonsingular form")
    if not is_sublagrangian(form, L):
        return False
    if 2 * basis.cols != q.rank:
        return False
    return matrices.same_span(orthogonal(form, basis), basis)


def _check_theta(s: SplitForm, basis: FormMatrix, theta: FormMatrix):
    n = basis.star().mul(s.psi).mul(basis)
    cob = theta.sub(theta.star().scale_int(s.epsilon))
    if not n.sub(cob).is_zero():
        raise PreconditionError("theta is not a hessian witness: i'psi i != theta - eps*theta'")


def extend_lagrangian(s: SplitForm, L, jprime: FormMatrix | None = None) -> FormIsometry:
    """Extend a lagrangian inclusion i to an isomorphism (i j) from the hyperbolic form.

    Over the integers the splitting j' of conj_transpose(i)·(psi+eps*psi') is
    computed deterministically; over other rings it must be supplied.  The
    correction j = j' + i·k with k = -eps·j''·psi·j' makes the second block
    isotropic for both lambda and mu.
    """
    basis, theta = _as_basis(L)
    lam = s.bilinear()
    if not matrices.is_unimodular(lam):
        raise SingularMatrixError("hyperbolic extension needs a nonsingular split form")
    if theta is not None:
        _check_theta(s, basis, theta)
    ell = basis.cols
    ident = matrices.identity_matrix(s.ring, ell)
    pairing = basis.star().mul(lam)
    if jprime is None:
        if s.ring.kind != "Z":
            raise DomainError(
                "splitting not found: supply a jprime witness over this ring"
            )
        if not is_lagrangian(s, basis):
            raise DomainError("basis is not a lagrangian of the split form")
        jprime = matrices.solve_right(pairing, ident)
        if jprime is None:
            raise SingularMatrixError("lagrangian pairing admits no integral splitting")
    else:
        if not basis.star().mul(lam).mul(basis).is_zero():
            raise PreconditionError("basis is not lambda-isotropic")
        if not pairing.mul(jprime).sub(ident).is_zero():
            raise PreconditionError("jprime is not a splitting: i'·lambda·jprime != 1")
    k = jprime.star().mul(s.psi).mul(jprime).scale_int(-s.epsilon)
    j = jprime.add(basis.mul(k))
    f = matrices.hstack(basis, j)
    iso = forms.split_morphism_witness(f, forms.hyperbolic_split(s.ring, s.epsilon, ell), s)
    if not matrices.is_unimodular(f):
        raise SingularMatrixError("extension matrix is not invertible; inputs were inconsistent")
    return iso


def sublagrangian_reduction(s: SplitForm, L) -> tuple[SplitForm, FormIsometry]:
    """Split off a hyperbolic block below a sublagrangian.

    Returns the residual form on the subquotient (orthogonal of L over L) and
    an isometry from hyperbolic + residual onto s.
    """
    basis, _ = _as_basis(L)
    q = forms.split_to_quadratic(s)
    if not forms.is_nonsingular(q):
        raise SingularMatrixError("sublagrangian reduction needs a nonsingular form")
    if not is_sublagrangian(q, basis):
        raise DomainError("basis is not a sublagrangian")
    lam = q.lam
    ell = basis.cols
    perp = orthogonal(q, basis)
    comp, _ = matrices.complement_of_primitive(perp)
    e = basis.star().mul(lam).mul(comp)
    einv = matrices.try_inverse(e)
    if einv is None:
        raise SingularMatrixError("orthogonal complement does not pair invertibly with L")
    j = comp.mul(einv)
    zero = matrices.zero_matrix(s.ring, ell, ell)
    ident = matrices.identity_matrix(s.ring, ell)
    phi = matrices.block_matrix([[zero, ident], [zero, j.star().mul(s.psi).mul(j)]])
    phi_form = SplitForm(s.ring, s.epsilon, phi)
    g = matrices.hstack(basis, j)
    first = matrices.vstack(ident, matrices.zero_matrix(s.ring, ell, ell))
    inner = extend_lagrangian(phi_form, first)
    perp_of_image = matrices.kernel_basis(g.star().mul(lam))
    residual = SplitForm(s.ring, s.epsilon, perp_of_image.star().mul(s.psi).mul(perp_of_image))
    f = matrices.hstack(g.mul(inner.f), perp_of_image)
    source = forms.direct_sum_split(forms.hyperbolic_split(s.ring, s.epsilon, ell), residual)
    iso = forms.split_morphism_witness(f, source, s)
    if not matrices.is_unimodular(f):
        raise SingularMatrixError("reduction isometry is not invertible; inputs were inconsistent")
    return residual, iso


def diagonal_splitting(s: SplitForm) -> FormIsometry:
    """The explicit isomorphism from the hyperbolic form onto (K,psi) + (K,-psi)."""
    lam = s.bilinear()
    laminv = matrices.try_inverse(lam)
    if laminv is None:
        raise SingularMatrixError("psi + eps*psi' must be invertible for the diagonal splitting")
    k = s.rank
    tilde = laminv.mul(s.psi).mul(laminv)
    ident = matrices.identity_matrix(s.ring, k)
    f = matrices.block_matrix(
        [
            [ident, tilde.star().scale_int(s.epsilon)],
            [ident, tilde.neg()],
        ]
    )
    target = forms.direct_sum_split(s, forms.negate_split(s))
    return forms.split_morphism_witness(f, forms.hyperbolic_split(s.ring, s.epsilon, k), target)


def surgery_on_form(form: QuadraticForm, x) -> QuadraticForm:
    """Kill a primitive mu-isotropic vector: the induced form on its orthogonal over it."""
    if not isinstance(x, FormMatrix):
        x = matrices.matrix(form.ring, [[c] for c in x])
    if x.cols != 1 or x.rows != form.rank:
        raise SchemaError("expected a single column of matching rank")
    if not forms.is_nonsingular(form):
        raise SingularMatrixError("surgery on a form needs a nonsingular input")
    if not matrices.is_split_injection(x):
        raise DomainError("vector is not primitive and cannot be killed")
    if not rings.class_is_zero(forms.mu_value(form, x)):
        raise DomainError("vector has nonzero self-intersection class mu(x)")
    perp = orthogonal(form, x)
    coords = matrices.solve_right(perp, x)
    if coords is None:
        raise DomainError("vector does not lie in its own orthogonal")
    w = matrices.completion_of_primitive_vector(coords)
    quotient = perp.mul(w).submatrix(range(perp.rows), range(1, w.cols))
    lam = quotient.star().mul(form.lam).mul(quotient)
    mu = tuple(forms.mu_value(form, quotient.column(j)) for j in range(quotient.cols))
    return QuadraticForm(form.ring, form.epsilon, lam, mu)
