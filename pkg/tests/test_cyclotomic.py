import random

import pytest

from hopfdouble.cyclotomic import (
    CycloNum,
    ConductorError,
    QSymbolTable,
    bracket_factorial,
    bracket_int,
    divisors,
    embed_to_conductor,
    order_of,
    q_binom,
    q_factorial,
    q_int,
    root_of_unity,
)
from hopfdouble.catalog import q_plane


def roots_of_conductor(m):
    return [root_of_unity(m, k) for k in range(1, m + 1)]


def test_root_of_unity_basics():
    assert root_of_unity(1, 0) == 1
    i = root_of_unity(4, 1)
    assert order_of(i) == 4
    assert i * i == -1
    z = root_of_unity(3, 1)
    assert z ** 0 + z + z ** 2 == 0


def test_order_of():
    assert order_of(root_of_unity(6, 2)) == 3
    assert order_of(CycloNum.one(5)) == 1
    assert order_of(CycloNum.rational(2, 4)) is None
    assert order_of(CycloNum.zero(3)) is None
    assert order_of(-CycloNum.one(3)) == 2


def test_q_symbols_examples():
    z3 = root_of_unity(3, 1)
    assert q_int(3, z3) == 0
    assert q_factorial(0, z3) == 1
    assert q_factorial(0, root_of_unity(7, 2)) == 1
    q = root_of_unity(5, 1)
    assert q_binom(2, 1, q) == 1 + q


def test_q_binom_matches_skew_plane_expansion():
    # (x+y)^n in the q-plane yx = q xy expands with the q-binomials
    rng = random.Random(7)
    for _ in range(12):
        m = rng.randint(2, 8)
        k = rng.randint(1, m - 1)
        q = root_of_unity(m, k)
        n = rng.randint(1, 6)
        plane = q_plane(q, bound=8)
        s = plane.gen("x") + plane.gen("y")
        power = plane.unit()
        for _ in range(n):
            power = power * s
        expected = plane.zero()
        for j in range(n + 1):
            term = plane.monomial((n - j, j)).scale(q_binom(n, j, q))
            expected = expected + term
        assert power == expected


def test_q_int_vanishing_iff_order_divides():
    # for q != 1: (n)_q = 0 iff ord(q) | n (n >= 1)
    for m in range(1, 13):
        for q in roots_of_conductor(m):
            if q == 1:
                continue
            d = order_of(q)
            for n in range(1, 25):
                assert q_int(n, q).is_zero() == (n % d == 0), (m, q, n)


def test_bracket_examples():
    q = root_of_unity(5, 2)
    assert bracket_int(1, q) == 1
    assert bracket_int(2, q) == q + q.inverse()
    z5 = root_of_unity(5, 1)
    assert bracket_factorial(2, z5) == z5.inverse() * q_factorial(2, z5 ** 2)


def test_bracket_rejects_plus_minus_one():
    with pytest.raises(ZeroDivisionError):
        bracket_int(3, CycloNum.one(4))
    with pytest.raises(ZeroDivisionError):
        bracket_int(3, -CycloNum.one(4))


def test_bracket_factorial_identity():
    # [n]_q! = q^(-n(n-1)/2) (n)_{q^2}!
    for m in range(3, 13):
        for k in range(1, m):
            q = root_of_unity(m, k)
            if q ** 2 == 1:
                continue
            for n in range(9):
                lhs = bracket_factorial(n, q)
                rhs = q ** (-n * (n - 1) // 2) * q_factorial(n, q ** 2)
                assert lhs == rhs, (m, k, n)


def test_lemma_quantum_congruence():
    # ord(q) = n and p = r mod n  =>  (p)_q = (r)_q
    rng = random.Random(3)
    for m in range(2, 13):
        for q in roots_of_conductor(m):
            if q == 1:
                continue
            n = order_of(q)
            for _ in range(6):
                r = rng.randint(1, n)
                p = r + n * rng.randint(1, 3)
                assert q_int(p, q) == q_int(r, q)


def test_lemma_quantum_inverse_flip():
    # ord(q) | m and 0 <= p <= m  =>  (p)_{q^-1} = -q (m-p)_q
    for cond in range(2, 13):
        for q in roots_of_conductor(cond):
            d = order_of(q)
            if d == 1:
                continue
            for mult in (1, 2):
                m = d * mult
                for p in range(m + 1):
                    assert q_int(p, q.inverse()) == -q * q_int(m - p, q), (cond, q, m, p)


def test_field_axioms_randomized():
    rng = random.Random(11)
    for m in (4, 5, 8, 12):
        elems = []
        for _ in range(6):
            coeffs = [rng.randint(-4, 4) for _ in range(4)]
            z = root_of_unity(m, 1)
            val = CycloNum.zero(m)
            for i, c in enumerate(coeffs):
                val = val + CycloNum.rational(c, m) * z ** i
            elems.append(val)
        for _ in range(30):
            a, b, c = (rng.choice(elems) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
        for a in elems:
            if not a.is_zero():
                assert a * a.inverse() == 1


def test_embedding():
    assert embed_to_conductor(CycloNum.one(1), 4) == CycloNum.one(4)
    z2 = root_of_unity(2, 1)
    assert embed_to_conductor(z2, 4) == root_of_unity(4, 2)
    z3 = root_of_unity(3, 1)
    e = embed_to_conductor(z3, 12)
    assert order_of(e) == 3
    assert e == root_of_unity(12, 4)
    # round trip through arithmetic: minimal polynomial still satisfied
    assert e ** 2 + e + 1 == 0


def test_embedding_rejects_non_divisible():
    with pytest.raises(ConductorError):
        embed_to_conductor(root_of_unity(4, 1), 6)


def test_conductor_mixing_rejected():
    with pytest.raises(ConductorError):
        root_of_unity(3, 1) + root_of_unity(4, 1)


def test_symbol_table_cache_consistency():
    table = QSymbolTable()
    q = root_of_unity(8, 3)
    first = table.q_binom(6, 3, q)
    again = table.q_binom(6, 3, q)
    assert first == again == q_binom(6, 3, QSymbolTable().q_binom(1, 0, q) * q)


def test_serialization_round_trip():
    z = root_of_unity(12, 5)
    val = z ** 3 + CycloNum.rational("7/3", 12)
    data = val.to_json()
    assert data["conductor"] == 12
    assert CycloNum.from_json(data) == val


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
