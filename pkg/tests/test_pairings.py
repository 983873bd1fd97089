"""Inner products, adjointness, orthogonality, and closed-form norms."""

import random
from fractions import Fraction

import pytest

from heckepoly import operators as ops
from heckepoly.combinatorics import (
    monomial_symmetric,
    partitions_up_to,
    random_polynomial,
    random_symmetric_polynomial,
)
from heckepoly.errors import DivergentWeightError, HeckePolyError
from heckepoly.families import hermite, jack, laguerre, sigma_a
from heckepoly.pairings import (
    ScaledRational,
    ct_pairing,
    dunkl_pairing,
    gauss_pairing,
    laguerre_pairing,
    norm_formula,
    shift_constants,
)
from heckepoly.parameters import hermite_spec, jack_spec, laguerre_spec
from heckepoly.polynomials import Polynomial


def test_scaled_rational_algebra():
    a = ScaledRational(Fraction(1, 2), pi_half=2)
    b = ScaledRational(Fraction(1, 3), pi_half=2)
    assert (a + b).q == Fraction(5, 6)
    assert (a * b) == ScaledRational(Fraction(1, 6), pi_half=4)
    zero = ScaledRational(0, pi_half=5)
    assert zero.pi_half == 0 and (zero + a) == a
    with pytest.raises(HeckePolyError):
        a + ScaledRational(1, pi_half=1)
    assert ScaledRational(Fraction(3, 2), 1, 2).render() == "3/2 · π^{1/2} · Γ(γ+1/2)^2"
    assert ScaledRational(1, 2, 0).render() == "π"
    assert ScaledRational(2, 0, 0).render() == "2"
    data = ScaledRational(Fraction(-5, 3), 2, 1).to_json_dict()
    assert data == {"q": "-5/3", "pi_half": 2, "gamma_base": 1}


def test_ct_pairing_values():
    spec = jack_spec(2, 1)
    one = Polynomial.one(2)
    assert ct_pairing(one, one, spec) == 2
    assert ct_pairing(one, one, jack_spec(2, 0)) == 1
    assert ct_pairing(Polynomial.one(3), Polynomial.one(3), jack_spec(3, 0)) == 1
    m1 = monomial_symmetric(2, (1, 0))
    assert ct_pairing(m1, m1, spec) == 2
    # <1,1> = (beta N)!/(beta!)^N
    import math

    for n in (2, 3):
        for beta in (1, 2):
            value = ct_pairing(Polynomial.one(n), Polynomial.one(n), jack_spec(n, beta))
            assert value == Fraction(math.factorial(beta * n), math.factorial(beta) ** n)


def test_ct_pairing_bilinear_symmetric_selfadjoint():
    spec = jack_spec(2, 1)
    rng = random.Random(5)
    dhat = ops.cherednik_a(1, spec)
    for _ in range(5):
        f = random_polynomial(2, 4, rng)
        g = random_polynomial(2, 4, rng)
        h = random_polynomial(2, 4, rng)
        assert ct_pairing(f + h, g, spec) == ct_pairing(f, g, spec) + ct_pairing(h, g, spec)
        assert ct_pairing(dhat(f), g, spec) == ct_pairing(f, dhat(g), spec)
    for _ in range(5):
        f = random_symmetric_polynomial(2, 3, rng)
        g = random_symmetric_polynomial(2, 3, rng)
        assert ct_pairing(f, g, spec) == ct_pairing(g, f, spec)


def test_ct_positivity():
    rng = random.Random(9)
    for n, beta in [(2, 1), (2, 2), (3, 1)]:
        spec = jack_spec(n, beta)
        for _ in range(6):
            f = random_symmetric_polynomial(n, 3, rng)
            assert ct_pairing(f, f, spec) > 0


def test_gauss_laguerre_positivity():
    rng = random.Random(15)
    for n, beta in [(2, 1), (2, 2), (3, 1)]:
        herm = hermite_spec(n, beta)
        for gamma in (Fraction(0), Fraction(1, 2), Fraction(1)):
            lag = laguerre_spec(n, beta, gamma)
            for _ in range(4):
                f = random_symmetric_polynomial(n, 3, rng)
                assert gauss_pairing(f, f, herm).q > 0
                assert laguerre_pairing(f, f, lag).q > 0


def test_gauss_pairing_values():
    spec1 = hermite_spec(1, 0)
    x = Polynomial.variable(1, 1)
    assert gauss_pairing(x, x, spec1) == ScaledRational(Fraction(1, 2), pi_half=1)
    assert gauss_pairing(x, Polynomial.one(1), spec1).is_zero()
    spec = hermite_spec(2, 1)
    one = Polynomial.one(2)
    assert gauss_pairing(one, one, spec) == ScaledRational(1, pi_half=2)


def test_gauss_adjointness():
    rng = random.Random(17)
    for n, beta in [(2, 1), (2, 2)]:
        spec = hermite_spec(n, beta)
        up = ops.creation_a(1, spec)
        down = ops.annihilation_a(1, spec)
        h1 = ops.htilde(2, spec)
        for _ in range(5):
            f = random_polynomial(n, 3, rng)
            g = random_polynomial(n, 3, rng)
            assert gauss_pairing(up(f), g, spec) == gauss_pairing(f, down(g), spec)
            assert gauss_pairing(h1(f), g, spec) == gauss_pairing(f, h1(g), spec)


def test_laguerre_pairing_values():
    spec = laguerre_spec(1, 0, Fraction(1, 4))
    one = Polynomial.one(1)
    u = Polynomial.variable(1, 1)
    assert laguerre_pairing(one, one, spec) == ScaledRational(1, gamma_base=1)
    assert laguerre_pairing(u, one, spec) == ScaledRational(Fraction(3, 4), gamma_base=1)
    l1 = laguerre((1,), spec).poly
    assert laguerre_pairing(l1, one, spec).is_zero()
    with pytest.raises(DivergentWeightError, match="divergent weight"):
        laguerre_pairing(one, one, laguerre_spec(1, 0, Fraction(-1, 2)))


def test_laguerre_htilde_selfadjoint():
    rng = random.Random(23)
    spec = laguerre_spec(2, 1, Fraction(1, 2))
    from heckepoly.families import decode_even, encode_even

    h1 = ops.htilde(1, spec)
    for _ in range(4):
        f = random_polynomial(2, 2, rng)
        g = random_polynomial(2, 2, rng)
        hf = decode_even(h1(encode_even(f)))
        hg = decode_even(h1(encode_even(g)))
        assert laguerre_pairing(hf, g, spec) == laguerre_pairing(f, hg, spec)


def test_dunkl_pairing_values():
    spec = hermite_spec(1, 0)
    one = Polynomial.one(1)
    x = Polynomial.variable(1, 1)
    assert dunkl_pairing(one, one, spec) == 1
    assert dunkl_pairing(x, x, spec) == 1
    spec2 = hermite_spec(2, 1)
    rng = random.Random(31)
    base = gauss_pairing(Polynomial.one(2), Polynomial.one(2), spec2).q
    for _ in range(5):
        f = random_symmetric_polynomial(2, 3, rng)
        g = random_symmetric_polynomial(2, 3, rng)
        induced = gauss_pairing(sigma_a(f, spec2), sigma_a(g, spec2), spec2).q
        assert induced == base * dunkl_pairing(f, g, spec2, "dunkl", Fraction(1, 2))


def test_orthogonality_all_families():
    from itertools import combinations

    for n, beta in [(2, 1), (2, 2), (3, 1)]:
        jack_sp = jack_spec(n, beta)
        herm_sp = hermite_spec(n, beta)
        lag_sp = laguerre_spec(n, beta, Fraction(1, 2))
        labels = list(partitions_up_to(3, n))
        j_polys = {lam: jack(lam, jack_sp).poly for lam in labels}
        h_polys = {lam: hermite(lam, herm_sp).poly for lam in labels}
        l_polys = {lam: laguerre(lam, lag_sp).poly for lam in labels}
        for a, b in combinations(labels, 2):
            assert ct_pairing(j_polys[a], j_polys[b], jack_sp) == 0
            assert gauss_pairing(h_polys[a], h_polys[b], herm_sp).is_zero()
            assert laguerre_pairing(l_polys[a], l_polys[b], lag_sp).is_zero()


def test_norm_formula_examples():
    assert norm_formula((1, 0), jack_spec(2, 1), "product_form") == ScaledRational(2)
    assert norm_formula((0, 0), hermite_spec(2, 1)) == ScaledRational(1, pi_half=2)
    import math

    for n in (2, 3):
        for beta in (0, 1, 2):
            hook = norm_formula((0,) * n, jack_spec(n, beta), "hook_form")
            expected = Fraction(math.factorial(n * beta), math.factorial(beta) ** n)
            assert hook == ScaledRational(expected)


def test_norms_match_pairings_spot():
    for lam in [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]:
        for beta in (0, 1, 2):
            jack_sp = jack_spec(2, beta)
            jp = jack(lam, jack_sp).poly
            value = ct_pairing(jp, jp, jack_sp)
            assert value == norm_formula(lam, jack_sp, "product_form").q
            assert value == norm_formula(lam, jack_sp, "hook_form").q
            herm_sp = hermite_spec(2, beta)
            hp = hermite(lam, herm_sp).poly
            hv = gauss_pairing(hp, hp, herm_sp)
            assert hv == norm_formula(lam, herm_sp, "product_form")
            assert hv == norm_formula(lam, herm_sp, "hook_form")
            lag_sp = laguerre_spec(2, beta, Fraction(1, 3))
            lp = laguerre(lam, lag_sp).poly
            lv = laguerre_pairing(lp, lp, lag_sp)
            assert lv == norm_formula(lam, lag_sp, "product_form")
            assert lv == norm_formula(lam, lag_sp, "hook_form")


def test_beta_zero_norms_carry_stabilizer():
    import math

    # <1,1> at beta=0 is 1 (Jack), pi^{N/2} (Hermite), Gamma^N (Laguerre)
    assert norm_formula((0, 0), jack_spec(2, 0)) == ScaledRational(1)
    assert norm_formula((0, 0), hermite_spec(2, 0)) == ScaledRational(1, pi_half=2)
    # distinct parts at beta=0: N! one-variable products
    assert norm_formula((1, 0), jack_spec(2, 0)) == ScaledRational(2)
    assert norm_formula((1, 1), jack_spec(2, 0)) == ScaledRational(1)
    value = norm_formula((2, 1), hermite_spec(2, 0))
    assert value == ScaledRational(Fraction(2 * 2 * 1, 2**3), pi_half=2)


def test_shift_constants():
    assert shift_constants((0,), 1, 2) == (1, 1)
    for beta in (0, 1, 2):
        assert shift_constants((0, 0), 2, beta) == (1, 1 + 2 * beta)
    assert shift_constants((1, 0), 2, 1) == (2, 4)
    c, ct = shift_constants((2, 1, 0), 3, 2)
    assert c > 0 and ct > 0
