import pytest

from hopfdouble.cyclotomic import CycloNum, q_factorial, root_of_unity
from hopfdouble import catalog
from hopfdouble.catalog import HnParams, hnzmt, uqsl2
from hopfdouble.pairing import (
    DualityPairing,
    PairingError,
    catalog_pairing,
    dual_basis_identities,
)


def hnzmt_pairing_oracle(P, p):
    """<X^i Y^j, x^k y^l> = delta_ik (i)_q! z^(jl) with q = z^(mt)."""
    z, q = p.zeta, p.zeta ** (p.m * p.t)
    N, n = p.N, p.n
    for i in range(N):
        for j in range(n):
            for k in range(N):
                for lparam in range(n):
                    got = P.pair_monomials((i, j), (k, lparam))
                    expect = (q_factorial(i, q) * z ** (j * lparam)
                              if i == k else CycloNum.zero(z.conductor))
                    assert got == expect, (p.n, p.m, p.t, i, j, k, lparam)


@pytest.mark.parametrize("n,m,t", [(4, 2, 1), (4, 1, 2), (6, 2, 2), (6, 3, 3), (8, 2, 2)])
def test_hnzmt_pairing_closed_form(n, m, t):
    p = HnParams(n, root_of_unity(n, 1), m, t)
    P = catalog_pairing(hnzmt(p))
    hnzmt_pairing_oracle(P, p)


def test_pair_unit_row(h4_21):
    P = h4_21.pairing
    H = h4_21.algebra
    # <1, x^i y^j> = delta_{0,i}
    for (i, j) in H.basis():
        got = P.pair_monomials(P.left.unit_mono, (i, j))
        assert got == (1 if i == 0 else 0)


def test_t421_pairing_closed_form(t421_bundle):
    P = t421_bundle.pairing
    z = root_of_unity(4, 1)
    for i in range(2):
        for j in range(4):
            for k in range(2):
                for lp in range(4):
                    expect = z ** (j * lp) if i == k else CycloNum.zero(4)
                    assert P.pair_monomials((i, j), (k, lp)) == expect


def test_t421_antipode_four_case_table(t421_bundle):
    # <S(X G^b), x g^j> = (-1)^j z^(b(-1-j))
    P = t421_bundle.pairing
    K = t421_bundle.dual
    T = t421_bundle.algebra
    z = root_of_unity(4, 1)
    for b in range(4):
        sxgb = K.antipode(K.monomial((1, b)))
        sgb = K.antipode(K.monomial((0, b)))
        for j in range(4):
            assert P.pair(sgb, T.monomial((0, j))) == z ** (3 * j * b)
            assert P.pair(sgb, T.monomial((1, j))) == 0
            assert P.pair(sxgb, T.monomial((0, j))) == 0
            got = P.pair(sxgb, T.monomial((1, j)))
            expect = CycloNum.rational((-1) ** j, 4) * z ** (b * (-1 - j))
            assert got == expect, (b, j)


def test_uq_generator_table(uq3):
    P = uq3.pairing
    O, U = uq3.dual, uq3.algebra
    q = root_of_unity(3, 1)
    a = O.element(O.defined_symbols["a"]["value"])
    assert P.pair(a, U.gen("K")) == q
    assert P.pair(O.gen("b"), U.gen("E")) == 1
    assert P.pair(O.gen("c"), U.gen("F")) == 1
    assert P.pair(O.gen("d"), U.gen("K")) == q.inverse()
    assert P.pair(O.gen("b"), U.gen("K")).is_zero()


def test_lemma_eifj(uq3, uq5):
    for bundle in (uq3, uq5):
        U, O, P = bundle.algebra, bundle.dual, bundle.pairing
        n = U.bounds[0]
        a = O.element(O.defined_symbols["a"]["value"])
        an = O.unit()
        dn = O.unit()
        bn_zero = O.monomial((n - 1, 0, 0)) * O.gen("b")
        assert bn_zero.is_zero()  # b^n = 0 already in the quotient
        for _ in range(n):
            an = an * a
        for i in range(n):
            Ei = U.monomial((i, 0, 0))
            Fi = U.monomial((0, i, 0))
            assert P.pair(an, Ei) == (1 if i == 0 else 0)
            assert P.pair(an, Fi) == (1 if i == 0 else 0)
        # <a^n, E^i F^j K^l> = delta_i0 delta_j0
        for m in U.basis():
            i, j, _ = m
            assert P.pair(an, U.monomial(m)) == (1 if i == 0 and j == 0 else 0)


def test_duality_axioms_all_three(taft3, t421_bundle, uq3, h4_21):
    for bundle in (taft3, t421_bundle, uq3, h4_21):
        rep = bundle.pairing.verify_duality_axioms()
        assert rep.passed, (bundle.algebra.name, rep.failures())


def test_gram_invertibility(h4_21, t421_bundle, uq3):
    assert h4_21.pairing.is_perfect()
    assert t421_bundle.pairing.is_perfect()
    assert uq3.pairing.is_perfect()
    assert not uq3.pairing.gram_determinant().is_zero()


def test_dimension_mismatch_is_imperfect():
    q3 = root_of_unity(3, 1)
    U = uqsl2(3, q3)
    T = catalog.taft(3, q3)
    D = catalog.dual_of(T)
    table = {(ln, rn): CycloNum.zero(3) for ln in D.names for rn in U.names}
    P = DualityPairing(D, U, table)
    assert not P.is_perfect()


def test_pairing_errors():
    q3, q4 = root_of_unity(3, 1), root_of_unity(4, 1)
    T3 = catalog.taft(3, q3)
    K = catalog.t421_dual(q4)
    with pytest.raises(PairingError):
        DualityPairing(K, T3, {})
    D3 = catalog.dual_of(T3)
    with pytest.raises(PairingError):
        DualityPairing(D3, T3, {})  # missing table entries


def test_dual_basis_identities_exhaustive():
    rep = dual_basis_identities(3, root_of_unity(3, 1))
    assert rep.passed, rep.failures()
