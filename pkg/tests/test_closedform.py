import json
import math
from fractions import Fraction as F
from pathlib import Path

import pytest

from shanksgf import closedform as cfm
from shanksgf import series as ps
from shanksgf.arith import is_squarefree, jacobi, squarefree_decompose
from shanksgf.closedform import (
    ClosedForm,
    IntegralityError,
    TrigTerm,
    build,
    build_base1,
    build_squarefree,
    canonical,
    expand,
    expansion_terms,
    from_lambda_terms,
    from_record,
    hat_polynomial,
    lambda_series,
    lambda_terms,
    predicted_L,
    recurrence_residual,
    render,
    s_coefficients,
    to_record,
)
from shanksgf.dirichlet import lemma_combination

GOLDEN = Path(__file__).parent / "golden"


def form(m, c, d):
    """c, d: lists of (coeff, num_freq, den_freq)."""
    return ClosedForm(
        m,
        canonical(TrigTerm(F(k), "cos", a, b) for k, a, b in c),
        canonical(TrigTerm(F(k), "sin", a, b) for k, a, b in d),
    )


def egf(series, n):
    return ps.egf_coefficient(series, n)


def test_base1():
    cf = build_base1()
    assert cf == form(1, [(1, 0, 1)], [(1, 1, 1)])
    assert s_coefficients(1, 5) == [1, 1, 1, 2, 5, 16]
    c, d = expand(cf, 5)
    assert egf(c, 2) == 1 and egf(d, 3) == 2


@pytest.mark.parametrize(
    "b,c,d",
    [
        (7, [(1, 3, 7), (1, 1, 7), (-1, 5, 7)], [(1, 4, 7), (1, 6, 7), (-1, 2, 7)]),
        (5, [(1, 4, 5), (1, 2, 5)], [(1, 1, 5), (1, 3, 5)]),
        (6, [(1, 5, 6), (1, 1, 6)], [(1, 1, 6), (1, 5, 6)]),
        (2, [(1, 1, 2)], [(1, 1, 2)]),
    ],
)
def test_build_squarefree_examples(b, c, d):
    assert build_squarefree(b) == form(b, c, d)


@pytest.mark.parametrize("b", [1, 0, 4, 12, 18])
def test_build_squarefree_rejects(b):
    with pytest.raises(ValueError):
        build_squarefree(b)


def test_expansion_terms_match_direct_construction():
    for b in range(2, 201):
        if is_squarefree(b):
            assert from_lambda_terms(b, lambda_terms(b)) == build_squarefree(b), b


def test_lemma_fourier_tables_reproduce_c_and_d():
    # c_b(x) = sum eps_k cos(b x (1-4y_k)) / cos(bx), d_b likewise with sin and the C table
    for b in range(2, 120):
        if not is_squarefree(b):
            continue
        S, C = lemma_combination(b, "S"), lemma_combination(b, "C")
        c_terms = []
        for e, y in zip(S.eps, S.y):
            f = b * (1 - 4 * y)
            assert f.denominator == 1
            c_terms.append(TrigTerm(F(e), "cos", abs(int(f)), b))
        d_terms = []
        for e, y in zip(C.eps, C.y):
            f = int(b * (1 - 4 * y))
            d_terms.append(TrigTerm(F(e if f > 0 else -e), "sin", abs(f), b))
        cf = build(b)
        assert canonical(c_terms) == cf.c_terms, b
        assert canonical(d_terms) == cf.d_terms, b


def test_expansion_terms_examples():
    def summary(m):
        return sorted((e.t, e.weight, e.sigma_c, e.sigma_d) for e in expansion_terms(squarefree_decompose(m)))

    assert summary(12675) == sorted([(4225, 65, 1, 1), (845, 13, 1, 1), (325, 5, -1, -1), (65, 1, -1, -1)])
    assert summary(1350) == sorted([(225, 15, 1, 1), (45, 3, -1, -1)])
    assert summary(225) == sorted([(225, F(15, 2), 1, 1), (75, F(5, 2), 1, -1),
                                   (45, F(3, 2), -1, -1), (15, F(1, 2), -1, 1)])
    for m in (7, 30, 1):
        (only,) = expansion_terms(squarefree_decompose(m))
        assert (only.subset, only.t, only.sigma_c, only.sigma_d) == ((), 1, 1, 1)
        assert only.weight == (F(1, 2) if m == 1 else 1)


def test_build_examples():
    assert build(4) == form(4, [(1, 0, 4)], [(1, 4, 4)])
    assert build(3) == form(3, [(1, 1, 3)], [(1, 2, 3)])
    with pytest.raises(ValueError):
        build(0)


@pytest.mark.parametrize(
    "m,expected",
    [
        (1, [1, 1, 1, 2, 5, 16]),
        (2, [1, 1, 3, 11, 57, 361]),
        (3, [1, 2, 8, 46, 352, 3362]),
        (4, [1, 4, 16, 128, 1280, 16384]),
    ],
)
def test_known_sequences(m, expected):
    assert s_coefficients(m, 5) == expected


def test_s_coefficients_rejects():
    with pytest.raises(ValueError):
        s_coefficients(0, 3)
    with pytest.raises(ValueError):
        s_coefficients(3, -1)


def test_integrality_failure_is_signalled(monkeypatch):
    bogus = form(999_991, [(F(1, 3), 0, 1)], [(1, 1, 1)])
    monkeypatch.setattr(cfm, "build", lambda m: bogus)
    with pytest.raises(IntegralityError):
        cfm._s_coefficients(999_991, 4)
    cfm._s_coefficients.cache_clear()


def _cbl(m, n):
    dec = squarefree_decompose(m)
    cb = s_coefficients(dec.b, 2 * n)[2 * n]
    prod_u = math.prod(dec.odd_primes)
    val = dec.K_b * dec.u * F(dec.u**2) ** (2 * n) * cb / F(prod_u) ** (2 * n + 1)
    for p, e in zip(dec.odd_primes, dec.eps_c):
        val *= p ** (2 * n + 1) - e
    return val


def _dbl(m, n):
    dec = squarefree_decompose(m)
    db = s_coefficients(dec.b, 2 * n - 1)[2 * n - 1]
    prod_u = math.prod(dec.odd_primes)
    val = dec.K_b * dec.u * F(dec.u**2) ** (2 * n - 1) * db / F(prod_u) ** (2 * n)
    for p, e in zip(dec.odd_primes, dec.eps_d):
        val *= p ** (2 * n) - e
    return val


@pytest.mark.parametrize("m", [12675, 1350, 225, 4, 8, 9, 12, 18, 45, 50])
def test_composite_matches_euler_product_relations(m):
    s = s_coefficients(m, 12)
    for n in range(7):
        assert s[2 * n] == _cbl(m, n), (m, n)
        if n >= 1:
            assert s[2 * n - 1] == _dbl(m, n), (m, n)


@pytest.mark.parametrize("r", range(1, 5))
def test_lambda_low_coefficients(r):
    for p in range(1, r + 1):
        L = lambda_series(r, p, 2)
        assert egf(L, 1) == p
        assert egf(L, 2) == p * (2 * r - p)


def test_hat_polynomial_against_series():
    order = 12
    for m in (1, 2, 3, 7, 9, 12, 45, 225, 1350):
        cf = build(m)
        cos_part, sin_part = hat_polynomial(cf)
        c, d = expand(cf, order)
        cm = ps.cos_series(m, order)
        want_c = ps.constant(0, order)
        for f, v in cos_part.items():
            want_c = want_c + ps.scale(ps.cos_series(f, order), v)
        want_d = ps.constant(0, order)
        for f, v in sin_part.items():
            want_d = want_d + ps.scale(ps.sin_series(f, order), v)
        assert ps.mul(cm, c) == want_c, m
        assert ps.mul(cm, d) == want_d, m


def test_cos_ratio():
    for P in (1, 3, 5, 7, 9, 15):
        q = cfm._cos_ratio(P)
        poly = ps.constant(0, 14)
        for f, v in q.items():
            poly = poly + ps.scale(ps.cos_series(f, 14), v)
        assert ps.mul(poly, ps.cos_series(1, 14)) == ps.cos_series(P, 14)


def test_recurrence_examples():
    assert recurrence_residual(2, 3, "even") == 0
    assert recurrence_residual(2, 3, "odd") == 0
    assert recurrence_residual(1, 0, "even") == 0
    # the m = 2 displays: sum (-4)^i C(2n,2i) c_{2,n-i} = (-1)^n
    s = s_coefficients(2, 12)
    for n in range(7):
        assert sum((-4) ** i * math.comb(2 * n, 2 * i) * s[2 * (n - i)] for i in range(n + 1)) == (-1) ** n
        if n:
            assert sum((-4) ** i * math.comb(2 * n - 1, 2 * i) * s[2 * (n - i) - 1]
                       for i in range(n)) == (-1) ** (n - 1)
    with pytest.raises(ValueError):
        recurrence_residual(2, 0, "odd")
    with pytest.raises(ValueError):
        recurrence_residual(2, 1, "both")


@pytest.mark.parametrize(
    "m,s,expected",
    [(1, 1, math.pi / 4), (3, 1, math.sqrt(3) * math.pi / 6), (1, 2, math.pi**2 / 8), (1, 3, math.pi**3 / 32)],
)
def test_predicted_L_examples(m, s, expected):
    assert predicted_L(m, s) == pytest.approx(expected, rel=1e-13)


def test_predicted_L_rejects():
    with pytest.raises(ValueError):
        predicted_L(3, 0)


def test_json_golden_files():
    for m in (5, 225):
        golden = json.loads((GOLDEN / f"gf_{m}.json").read_text())
        assert to_record(build(m)) == golden
        assert list(golden) == ["m", "c_terms", "d_terms"]
        assert list(golden["c_terms"][0]) == ["coeff", "flavor", "num_freq", "den_freq"]
        assert from_record(golden) == build(m)


def test_render():
    assert render(build(1)) == "s_1(x) = + (1) cos(0x)/cos(x) + (1) sin(x)/cos(x)"
    assert render(build(225)).startswith("s_225(x) = - (1/2) cos(0x)/cos(15x)")


def test_trigterm_invariants():
    with pytest.raises(ValueError):
        TrigTerm(F(1), "sin", 0, 3)
    with pytest.raises(ValueError):
        TrigTerm(F(1), "cos", 4, 3)
    with pytest.raises(ValueError):
        TrigTerm(F(1), "tan", 1, 3)


def test_canonical_merges_and_drops():
    terms = [TrigTerm(F(1), "cos", 1, 3), TrigTerm(F(-1), "cos", 1, 3), TrigTerm(F(2), "cos", 0, 1),
             TrigTerm(F(1, 2), "cos", 0, 1)]
    assert canonical(terms) == (TrigTerm(F(5, 2), "cos", 0, 1),)


def test_jacobi_signs_in_7():
    assert [jacobi(k, 7) for k in (1, 2, 3)] == [1, 1, -1]
