import numpy as np
import pytest

from symwiener.fock import (
    all_indices,
    annihilation_apply,
    coherent_state,
    creation_apply,
    exp_annihilation,
    exp_creation,
    fock_inner,
    idx_from_dict,
    random_vector,
    vacuum,
)
from symwiener.hardy import (
    WienerElement,
    add,
    derivative,
    epf_constant,
    epf_exponential,
    epf_monomial,
    evaluate,
    fock_from_hardy,
    fourier_transform,
    hardy_from_fock,
    hardy_norm,
    mult_exp,
    mult_linear,
    plain_context,
    scale,
    shift,
    taylor_coefficients,
    weighted_context,
    wiener_evaluate,
)
from symwiener.hs_algebra import HsElement
from symwiener.rng import make_rng
from symwiener.unitary import VirtualUnitary, haar_batch, paley_wiener_eval

D = 3
CTX = plain_context(D)


def rand_diag(rng, d=D, scale=0.5):
    return HsElement.diagonal(
        d,
        scale * (rng.standard_normal(d) + 1j * rng.standard_normal(d)),
        unit=scale * complex(rng.standard_normal(), rng.standard_normal()),
    )


def test_contexts():
    assert CTX.letter_weights == (1.0,) * (D + 1)
    assert weighted_context(2).letter_weights == (1.0, 0.5, 0.25)
    with pytest.raises(ValueError):
        plain_context(2).coords_of(HsElement.one(3))


def test_vacuum_maps_to_constant():
    f = hardy_from_fock(vacuum(D, 6), CTX)
    rng = make_rng(41, 0)
    for _ in range(5):
        assert abs(evaluate(f, rand_diag(rng)) - 1) < 1e-15


def _basis(idx):
    from symwiener.fock import basis_vector

    return basis_vector(D, 6, idx)


def test_single_basis_vector_maps_to_coordinate():
    f = hardy_from_fock(_basis(idx_from_dict({1: 1})), CTX)
    rng = make_rng(42, 0)
    c = rand_diag(rng)
    assert abs(evaluate(f, c) - c.coords()[1]) < 1e-14


def test_norm_two_routes_agree():
    rng = make_rng(43, 0)
    for _ in range(10):
        psi = random_vector(D, 4, rng)
        assert abs(psi.norm() - hardy_norm(hardy_from_fock(psi, CTX), 4)) < 1e-12 * max(1, psi.norm())


def test_taylor_round_trip():
    rng = make_rng(44, 0)
    psi = random_vector(D, 4, rng)
    back = fock_from_hardy(hardy_from_fock(psi, CTX), D, 4)
    assert max(abs(back[i] - psi[i]) for i in all_indices(D, 4)) < 1e-12


def test_taylor_of_exponential():
    v = HsElement.basis(D, 1)
    coeffs = taylor_coefficients(epf_exponential(CTX, v), 6)
    from math import factorial

    for k in range(7):
        idx = idx_from_dict({1: k})
        assert abs(coeffs.get(idx, 0.0) - 1 / factorial(k)) < 1e-14


def test_evaluate_matches_fock_inner_on_coherent_pairs():
    rng = make_rng(45, 0)
    b, c = rand_diag(rng, scale=0.4), rand_diag(rng, scale=0.4)
    lhs = evaluate(hardy_from_fock(coherent_state(b, 20), CTX), c)
    rhs = fock_inner(coherent_state(c, 20), coherent_state(b, 20))
    assert abs(lhs - rhs) < 1e-10


def test_shift_properties():
    rng = make_rng(46, 0)
    a, b, c = (rand_diag(rng) for _ in range(3))
    f = mult_exp(hardy_from_fock(random_vector(D, 3, rng), CTX), rand_diag(rng, scale=0.3))
    assert abs(evaluate(shift(f, a), c) - evaluate(f, c + a)) < 1e-11
    assert abs(evaluate(shift(shift(f, a), b), c) - evaluate(shift(f, a + b), c)) < 1e-11
    zero = HsElement.zero(D)
    assert abs(evaluate(shift(f, zero), c) - evaluate(f, c)) < 1e-15


def test_multipliers_pointwise():
    rng = make_rng(47, 0)
    b, c = rand_diag(rng), rand_diag(rng)
    f = hardy_from_fock(random_vector(D, 3, rng), CTX)
    pair = CTX.pair(c.coords(), b.coords())
    assert abs(evaluate(mult_exp(f, b), c) - np.exp(pair) * evaluate(f, c)) < 1e-12
    assert abs(evaluate(mult_linear(f, b), c) - pair * evaluate(f, c)) < 1e-12


def test_derivative_by_finite_differences():
    rng = make_rng(48, 0)
    a, c = rand_diag(rng), rand_diag(rng)
    forms = [
        hardy_from_fock(random_vector(D, 3, rng), CTX),
        epf_exponential(CTX, rand_diag(rng)),
        mult_exp(epf_monomial(CTX, idx_from_dict({1: 2})), rand_diag(rng, scale=0.3)),
    ]
    h = 1e-5
    for f in forms:
        num = (evaluate(f, c + h * a) - evaluate(f, c + (-h) * a)) / (2 * h)
        sym = evaluate(derivative(f, a), c)
        assert abs(num - sym) < 1e-8 * (1 + abs(sym))


def test_derivative_of_square_monomial():
    f = epf_monomial(CTX, idx_from_dict({1: 2}))
    e1 = HsElement.basis(D, 1)
    rng = make_rng(49, 0)
    c = rand_diag(rng)
    assert abs(evaluate(derivative(f, e1), c) - 2 * c.coords()[1]) < 1e-13


def test_derivative_multiplier_commutator():
    rng = make_rng(50, 0)
    a, b, c = (rand_diag(rng) for _ in range(3))
    f = mult_exp(hardy_from_fock(random_vector(D, 3, rng), CTX), rand_diag(rng, scale=0.3))
    comm = add(derivative(mult_linear(f, b), a), mult_linear(derivative(f, a), b), gs=-1.0)
    expected = CTX.pair(a.coords(), b.coords())
    assert abs(evaluate(comm, c) - expected * evaluate(f, c)) < 1e-11


def test_transport_of_annihilation_is_differentiation():
    rng = make_rng(51, 0)
    a = rand_diag(rng)
    psi = random_vector(D, 5, rng)
    lhs = hardy_from_fock(annihilation_apply(a, psi), CTX)
    rhs = derivative(hardy_from_fock(psi, CTX), a)
    for _ in range(6):
        c = rand_diag(rng)
        assert abs(evaluate(lhs, c) - evaluate(rhs, c)) < 1e-11


def test_transport_of_exp_annihilation_is_shift():
    rng = make_rng(52, 0)
    a = rand_diag(rng)
    psi = random_vector(D, 5, rng)
    lhs = hardy_from_fock(exp_annihilation(a, psi), CTX)
    rhs = shift(hardy_from_fock(psi, CTX), a)
    for _ in range(6):
        c = rand_diag(rng)
        assert abs(evaluate(lhs, c) - evaluate(rhs, c)) < 1e-10


def test_derivative_shift_intertwining():
    # d_a shift_a F(psi) agrees with F of (annihilate then exp-annihilate)
    rng = make_rng(53, 0)
    a = rand_diag(rng)
    psi = random_vector(D, 5, rng)
    F = hardy_from_fock(psi, CTX)
    lhs = derivative(shift(F, a), a)
    rhs = hardy_from_fock(annihilation_apply(a, exp_annihilation(a, psi)), CTX)
    for _ in range(6):
        c = rand_diag(rng)
        assert abs(evaluate(lhs, c) - evaluate(rhs, c)) < 1e-10


def test_transport_of_creation_is_not_plain_multiplication():
    # With the squared graded weights the transport of raising by b is NOT the
    # multiplier exp(<c|b>): the factorial ladder differs from degree two on.
    # (The first-order transports above are exact; this direction fails and is
    # pinned here so the asymmetry stays visible.)
    e1 = HsElement.basis(D, 1)
    psi = _basis(idx_from_dict({1: 1}))
    lhs = hardy_from_fock(exp_creation(e1, psi), CTX)
    rhs = mult_exp(hardy_from_fock(psi, CTX), e1)
    c = HsElement.diagonal(D, [0.5, 0, 0])
    gap = abs(evaluate(lhs, c) - evaluate(rhs, c))
    assert gap > 0.1


def test_fourier_linearity_in_stored_coefficients():
    rng = make_rng(54, 0)
    psi, phi = random_vector(D, 4, rng), random_vector(D, 4, rng)
    al, be = 0.7 - 0.2j, -0.3 + 0.9j
    combo = fourier_transform(WienerElement(psi.scale(al).add(phi.scale(be))), CTX)
    split = add(
        fourier_transform(WienerElement(psi), CTX),
        fourier_transform(WienerElement(phi), CTX),
        fs=np.conj(al),
        gs=np.conj(be),
    )
    for _ in range(5):
        c = rand_diag(rng)
        assert abs(evaluate(combo, c) - evaluate(split, c)) < 1e-11


def test_wiener_evaluate_examples():
    rng = make_rng(55, 0)
    vu = VirtualUnitary(haar_batch(5, 1, rng)[0])
    assert abs(wiener_evaluate(WienerElement(vacuum(D, 4)), vu) - 1) < 1e-15
    w = WienerElement(_basis(idx_from_dict({1: 1})))
    assert abs(wiener_evaluate(w, vu) - vu.top.entries[0, 0]) < 1e-15
    a = rand_diag(rng, scale=0.35)
    w = WienerElement(coherent_state(a, 25))
    expected = np.exp(paley_wiener_eval(a, vu))
    assert abs(wiener_evaluate(w, vu) - expected) <= 1e-8 * abs(expected)


def test_wiener_evaluate_level_guard():
    vu = VirtualUnitary(haar_batch(2, 1, make_rng(56, 0))[0])
    with pytest.raises(ValueError):
        wiener_evaluate(WienerElement(vacuum(D, 2)), vu)


def test_first_degree_transform_coefficient_counts_tableaux():
    # The degree-one expansion coefficient of the transform of a single-letter
    # element carries the single standard tableau of the one-box shape.
    from symwiener.schur import frobenius_expansion

    w = WienerElement(_basis(idx_from_dict({1: 1})))
    coeffs = taylor_coefficients(fourier_transform(w, CTX), 1)
    assert frobenius_expansion(1) == {(1,): 1}
    assert abs(coeffs[idx_from_dict({1: 1})] - 1.0) < 1e-14


def test_form_json_dump():
    f = scale(epf_exponential(CTX, HsElement.basis(D, 1)), 2.0)
    dump = f.to_json()
    assert len(dump) == 1 and "kappa" in dump[0] and "poly" in dump[0]
