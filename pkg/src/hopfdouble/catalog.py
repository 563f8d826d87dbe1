"""Constructors for the algebra families under study.

Each constructor returns a PresentedHopfAlgebra whose normal monomials
match the basis used in the source computations:

    T_n(q)          x^i g^j           g^n=1, x^n=0,        gx = q xg
    H_n(z,m,t)      x^i y^j           y^n=1, x^N=0,        yx = z^t xy
    T(n,N,a)        x^i g^j           g^n=1, x^N=a(g^N-1), gx = q xg
    u_q(sl2)        E^i F^j K^l       K^n=1, E^n=F^n=0
    O_q(SL2)-bar    b^i c^j d^l       d^n=1, b^n=c^n=0 (a defined)

Duals carry capitalized generator names so doubles can merge both
halves without clashes.  The *_double_fixture constructors encode the
printed double presentations, used as comparison targets for the
mechanically built doubles.
"""

from math import gcd

from .cyclotomic import CycloNum, order_of, root_of_unity
from .algebra import GeneratorSpec, PresentedHopfAlgebra

__all__ = [
    "HnParams",
    "taft",
    "sweedler",
    "taft_dual",
    "hnzmt",
    "hnzmt_dual",
    "gen_taft",
    "t421",
    "t421_dual",
    "uqsl2",
    "oq_sl2_bar",
    "hnzmt_isomorphic",
    "q_plane",
    "dual_of",
    "pairing_table_for",
    "double_fixture",
    "algebra_from_id",
    "presentations_equal",
]


class HnParams:
    """Data (n, zeta, m, t) with m|n, t|n, n∤mt; N = ord(zeta^(mt))."""

    __slots__ = ("n", "zeta", "m", "t")

    def __init__(self, n, zeta, m, t):
        if n % m or n % t:
            raise ValueError("m and t must divide n")
        if (m * t) % n == 0:
            raise ValueError("n must not divide mt")
        if order_of(zeta) != n:
            raise ValueError("zeta must be a primitive %d-th root of unity" % n)
        self.n = n
        self.zeta = zeta
        self.m = m
        self.t = t

    @property
    def N(self):
        return self.n // gcd(self.n, self.m * self.t)

    def dual(self):
        return HnParams(self.n, self.zeta, self.t, self.m)

    def __repr__(self):
        return "HnParams(n=%d, m=%d, t=%d)" % (self.n, self.m, self.t)


def _specs(conductor, data):
    # data: list of (name, bound, power_image_dict)
    return [GeneratorSpec(n, i, b, power_image=img) for i, (n, b, img) in enumerate(data)]


def _unit_img(k, conductor):
    return {(0,) * k: CycloNum.one(conductor)}


def taft(n, q):
    """Taft algebra T_n(q): grouplike g, (g,1)-skew primitive x."""
    if n < 2 or order_of(q) != n:
        raise ValueError("q must be a primitive %d-th root of unity, n >= 2" % n)
    M = q.conductor
    one = CycloNum.one(M)
    gens = _specs(M, [("x", n, {}), ("g", n, {(0, 0): one})])
    swaps = {(1, 0): {(1, 1): q}}  # g*x -> q x*g
    A = PresentedHopfAlgebra(
        "T_%d(q)" % n, M, gens, swaps, n * n,
        action_gen="g", action_root=q,
        params={"family": "taft", "n": n, "root": q.to_json()},
    )
    A.set_coalgebra_data("g", delta_words=[(1, [("g", 1)], [("g", 1)])], eps=1,
                         antipode_words=[(1, [("g", -1)])])
    A.set_coalgebra_data("x", delta_words=[(1, [("g", 1)], [("x", 1)]), (1, [("x", 1)], [])],
                         eps=0, antipode_words=[(-1, [("g", -1), ("x", 1)])])
    return A


def sweedler():
    return taft(2, root_of_unity(2, 1))


def _hnzmt_named(p, xname, yname, label, family):
    n, zeta, m, t, N = p.n, p.zeta, p.m, p.t, p.N
    M = zeta.conductor
    one = CycloNum.one(M)
    gens = _specs(M, [(xname, N, {}), (yname, n, {(0, 0): one})])
    swaps = {(1, 0): {(1, 1): zeta ** t}}  # y*x -> z^t x*y
    A = PresentedHopfAlgebra(
        label, M, gens, swaps, N * n,
        action_gen=yname, action_root=zeta,
        params={"family": family, "n": n, "m": m, "t": t, "root": zeta.to_json()},
    )
    A.set_coalgebra_data(yname, delta_words=[(1, [(yname, 1)], [(yname, 1)])], eps=1,
                         antipode_words=[(1, [(yname, -1)])])
    A.set_coalgebra_data(xname,
                         delta_words=[(1, [(yname, m)], [(xname, 1)]), (1, [(xname, 1)], [])],
                         eps=0,
                         antipode_words=[(-1, [(yname, -m), (xname, 1)])])
    return A


def hnzmt(p):
    """Bosonized rank-1 quantum linear space H_n(zeta, m, t)."""
    return _hnzmt_named(p, "x", "y", "H_%d(z,%d,%d)" % (p.n, p.m, p.t), "hnzmt")


def hnzmt_dual(p):
    """H_n(zeta,m,t)^* = H_n(zeta,t,m), generators renamed X, Y."""
    q = p.dual()
    return _hnzmt_named(q, "X", "Y", "H_%d(z,%d,%d)*" % (p.n, p.m, p.t), "hnzmt-dual")


def taft_dual(n, q):
    """T_n(q)^* = T_n(q), generators renamed X, G."""
    p = HnParams(n, q, 1, 1)
    return _hnzmt_named(p, "X", "G", "T_%d(q)*" % n, "taft-dual")


def gen_taft(n, N, alpha, zeta=None):
    """Generalized Taft algebra T(n, N, alpha) with x^N = alpha(g^N - 1).

    Uses q = zeta^(n/N) for zeta the canonical primitive n-th root unless
    an explicit zeta is supplied; alpha is normalized to 0 or 1.
    """
    if n % N:
        raise ValueError("N must divide n")
    if alpha not in (0, 1):
        raise ValueError("alpha is normalized to 0 or 1 by rescaling x")
    if zeta is None:
        zeta = root_of_unity(n, 1)
    if order_of(zeta) != n:
        raise ValueError("zeta must be a primitive %d-th root of unity" % n)
    M = zeta.conductor
    q = zeta ** (n // N)
    one = CycloNum.one(M)
    if alpha == 0 or N == n:
        ximg = {}
    else:
        ximg = {(0, N): one, (0, 0): -one}
    gens = _specs(M, [("x", N, ximg), ("g", n, {(0, 0): one})])
    swaps = {(1, 0): {(1, 1): q}}
    A = PresentedHopfAlgebra(
        "T(%d,%d,%d)" % (n, N, alpha), M, gens, swaps, N * n,
        action_gen="g", action_root=zeta,
        params={"family": "gentaft", "n": n, "N": N, "alpha": alpha, "root": zeta.to_json()},
    )
    A.set_coalgebra_data("g", delta_words=[(1, [("g", 1)], [("g", 1)])], eps=1,
                         antipode_words=[(1, [("g", -1)])])
    A.set_coalgebra_data("x", delta_words=[(1, [("g", 1)], [("x", 1)]), (1, [("x", 1)], [])],
                         eps=0, antipode_words=[(-1, [("g", -1), ("x", 1)])])
    return A


def t421(zeta):
    """The lifting T(4,2,1): g^4 = 1, x^2 = g^2 - 1, gx = -xg."""
    if order_of(zeta) != 4:
        raise ValueError("zeta must be a primitive 4th root of unity")
    A = gen_taft(4, 2, 1, zeta=zeta)
    A.name = "T(4,2,1)"
    A.params = {"family": "t421", "root": zeta.to_json()}
    return A


def t421_dual(zeta):
    """The 8-dimensional dual K of T(4,2,1)."""
    if order_of(zeta) != 4:
        raise ValueError("zeta must be a primitive 4th root of unity")
    M = zeta.conductor
    one = CycloNum.one(M)
    gens = _specs(M, [("X", 2, {}), ("G", 4, {(0, 0): one})])
    swaps = {(1, 0): {(1, 1): zeta}}  # G*X -> z X*G
    A = PresentedHopfAlgebra(
        "K=T(4,2,1)*", M, gens, swaps, 8,
        params={"family": "t421-dual", "root": zeta.to_json()},
    )
    A.set_coalgebra_data("G",
                         delta_words=[(1, [("G", 1)], [("G", 1)]),
                                      (-2, [("X", 1), ("G", 3)], [("X", 1), ("G", 1)])],
                         eps=1, antipode_words=[(1, [("G", 3)])])
    A.set_coalgebra_data("X",
                         delta_words=[(1, [("G", 2)], [("X", 1)]), (1, [("X", 1)], [])],
                         eps=0, antipode_words=[(1, [("X", 1), ("G", 2)])])
    return A


def uqsl2(n, q):
    """Frobenius-Lusztig kernel u_q(sl2) at an odd primitive n-th root q."""
    if n < 3 or n % 2 == 0:
        raise ValueError("u_q(sl2) here needs odd n >= 3")
    if order_of(q) != n:
        raise ValueError("q must be a primitive %d-th root of unity" % n)
    M = q.conductor
    one = CycloNum.one(M)
    w = (q - q.inverse()).inverse()
    gens = _specs(M, [("E", n, {}), ("F", n, {}), ("K", n, {(0, 0, 0): one})])
    swaps = {
        # F*E -> E F - (K - K^-1)/(q - q^-1)
        (1, 0): {(1, 1, 0): one, (0, 0, 1): -w, (0, 0, n - 1): w},
        (2, 0): {(1, 0, 1): q ** 2},        # K*E -> q^2 E K
        (2, 1): {(0, 1, 1): q ** -2},       # K*F -> q^-2 F K
    }
    A = PresentedHopfAlgebra(
        "u_q(sl2)[n=%d]" % n, M, gens, swaps, n ** 3,
        action_gen="K", action_root=q ** 2,
        params={"family": "uq", "n": n, "root": q.to_json()},
    )
    A.set_coalgebra_data("K", delta_words=[(1, [("K", 1)], [("K", 1)])], eps=1,
                         antipode_words=[(1, [("K", -1)])])
    A.set_coalgebra_data("E", delta_words=[(1, [], [("E", 1)]), (1, [("E", 1)], [("K", 1)])],
                         eps=0, antipode_words=[(-1, [("E", 1), ("K", -1)])])
    A.set_coalgebra_data("F", delta_words=[(1, [("K", -1)], [("F", 1)]), (1, [("F", 1)], [])],
                         eps=0, antipode_words=[(-1, [("K", 1), ("F", 1)])])
    return A


def oq_sl2_bar(n, q):
    """The quotient of O_q(SL2) dual to u_q(sl2); a is a defined symbol."""
    if n < 3 or n % 2 == 0:
        raise ValueError("odd n >= 3 required")
    if order_of(q) != n:
        raise ValueError("q must be a primitive %d-th root of unity" % n)
    M = q.conductor
    one = CycloNum.one(M)
    qi = q.inverse()
    gens = _specs(M, [("b", n, {}), ("c", n, {}), ("d", n, {(0, 0, 0): one})])
    swaps = {
        (1, 0): {(1, 1, 0): one},   # c*b -> b c
        (2, 0): {(1, 0, 1): q},     # d*b -> q b d
        (2, 1): {(0, 1, 1): q},     # d*c -> q c d
    }
    A = PresentedHopfAlgebra(
        "Oq(SL2)bar[n=%d]" % n, M, gens, swaps, n ** 3,
        params={"family": "oq", "n": n, "root": q.to_json()},
    )
    a_words = [(qi, [("b", 1), ("c", 1), ("d", n - 1)]), (one, [("d", n - 1)])]
    a_elem = A.from_words(a_words)
    A.defined_symbols = {
        "a": {
            "value": a_elem.terms,
            # Delta(a) = a (x) a + b (x) c in O_q(SL2)
            "delta": [(one, [("a", 1)], [("a", 1)]), (one, [("b", 1)], [("c", 1)])],
            "eps": one,
        }
    }
    # matrix-coalgebra Delta images through the symbol a
    A.class_delta = {
        "b": [(one, [("a", 1)], [("b", 1)]), (one, [("b", 1)], [("d", 1)])],
        "c": [(one, [("c", 1)], [("a", 1)]), (one, [("d", 1)], [("c", 1)])],
        "d": [(one, [("c", 1)], [("b", 1)]), (one, [("d", 1)], [("d", 1)])],
    }
    A.set_coalgebra_data("b",
                         delta_words=[(qi, [("b", 1), ("c", 1), ("d", n - 1)], [("b", 1)]),
                                      (1, [("d", n - 1)], [("b", 1)]),
                                      (1, [("b", 1)], [("d", 1)])],
                         eps=0, antipode_words=[(-q, [("b", 1)])])
    A.set_coalgebra_data("c",
                         delta_words=[(qi, [("c", 1)], [("b", 1), ("c", 1), ("d", n - 1)]),
                                      (1, [("c", 1)], [("d", n - 1)]),
                                      (1, [("d", 1)], [("c", 1)])],
                         eps=0, antipode_words=[(-qi, [("c", 1)])])
    A.set_coalgebra_data("d",
                         delta_words=[(1, [("c", 1)], [("b", 1)]), (1, [("d", 1)], [("d", 1)])],
                         eps=1, antipode_words=a_words)
    return A


def hnzmt_isomorphic(p1, p2):
    """Isomorphism test for H_n(zeta,m,t) families; returns (bool, witness f)."""
    if (p1.n, p1.m, p1.t) != (p2.n, p2.m, p2.t):
        return False, None
    n, t, m = p1.n, p1.t, p1.m
    target = p1.zeta ** t
    for f in range(1, n):
        if gcd(f, n) != 1:
            continue
        if (p2.zeta ** (f * t)) == target and (f * m) % n == m % n:
            return True, f
    return False, None


def q_plane(q, bound=8):
    """Rank-2 q-plane k<x,y>/(yx - q xy) truncated at x^b = y^b = 0.

    Algebra-only helper (no coalgebra data); used as the independent
    oracle for the skew-binomial expansion of (x + y)^n.
    """
    M = q.conductor
    gens = _specs(M, [("x", bound, {}), ("y", bound, {})])
    swaps = {(1, 0): {(1, 1): q}}
    return PresentedHopfAlgebra("q-plane", M, gens, swaps, bound * bound)


# -- dual / pairing / fixture dispatch ---------------------------------------


def _family_root(A):
    return CycloNum.from_json(A.params["root"])


def dual_of(A):
    """The catalog dual presentation of a catalog algebra."""
    fam = A.params.get("family")
    root = _family_root(A)
    if fam == "taft":
        return taft_dual(A.params["n"], root)
    if fam == "hnzmt":
        return hnzmt_dual(HnParams(A.params["n"], root, A.params["m"], A.params["t"]))
    if fam == "t421":
        return t421_dual(root)
    if fam == "uq":
        return oq_sl2_bar(A.params["n"], root)
    if fam == "gentaft" and A.params["alpha"] == 0:
        p = HnParams(A.params["n"], root, 1, A.params["n"] // A.params["N"])
        return hnzmt_dual(p)
    raise ValueError("no catalog dual for %s" % A.name)


def pairing_table_for(A, dual):
    """Generator pairing table {(dual gen, primal gen): CycloNum}.

    For u_q(sl2) the table is read off the 2x2 matrices of the defining
    representation on the ordered basis (v0, v1); for the others it is
    the printed generator table.
    """
    fam = A.params.get("family")
    root = _family_root(A)
    M = A.conductor
    one, zero = CycloNum.one(M), CycloNum.zero(M)
    if fam in ("taft", "hnzmt", "t421", "gentaft"):
        xg = {"taft": ("x", "g"), "gentaft": ("x", "g"), "t421": ("x", "g"), "hnzmt": ("x", "y")}[fam]
        XG = {"taft": ("X", "G"), "gentaft": ("X", "Y"), "t421": ("X", "G"), "hnzmt": ("X", "Y")}[fam]
        x, g = xg
        X, G = XG
        return {(X, x): one, (X, g): zero, (G, x): zero, (G, g): root}
    if fam == "uq":
        q = root
        qi = q.inverse()
        # rho(E), rho(F), rho(K) on the highest weight module V_{1,1}
        rho = {
            "E": ((zero, one), (zero, zero)),
            "F": ((zero, zero), (one, zero)),
            "K": ((q, zero), (zero, qi)),
        }
        table = {}
        for h in ("E", "F", "K"):
            table[("b", h)] = rho[h][0][1]
            table[("c", h)] = rho[h][1][0]
            table[("d", h)] = rho[h][1][1]
        return table
    raise ValueError("no catalog pairing for %s" % A.name)


class DoubleFixture:
    """A printed double presentation plus its displayed relation list."""

    def __init__(self, algebra, printed_relations):
        self.algebra = algebra
        self.printed_relations = printed_relations  # [(label, [(coeff, word)...])]


def double_fixture(A):
    fam = A.params.get("family")
    root = _family_root(A)
    if fam == "taft":
        return _taft_double_fixture(A.params["n"], root)
    if fam == "hnzmt":
        return _hnzmt_double_fixture(HnParams(A.params["n"], root, A.params["m"], A.params["t"]))
    if fam == "t421":
        return _t421_double_fixture(root)
    if fam == "uq":
        return _uq_double_fixture(A.params["n"], root)
    raise ValueError("no paper double fixture for %s" % A.name)


def _taft_double_fixture(n, q):
    M = q.conductor
    one = CycloNum.one(M)
    qi = q.inverse()
    gens = _specs(M, [("X", n, {}), ("G", n, {(0,) * 4: one}),
                      ("x", n, {}), ("g", n, {(0,) * 4: one})])
    swaps = {
        (1, 0): {(1, 1, 0, 0): q},                       # GX = qXG
        (2, 0): {(1, 0, 1, 0): one, (0, 1, 0, 0): one, (0, 0, 0, 1): -one},  # xX = Xx + G - g
        (2, 1): {(0, 1, 1, 0): q},                       # xG = qGx
        (3, 0): {(1, 0, 0, 1): qi},                      # gX = q^-1 Xg
        (3, 1): {(0, 1, 0, 1): one},                     # gG = Gg
        (3, 2): {(0, 0, 1, 1): q},                       # gx = qxg
    }
    A = PresentedHopfAlgebra("D(T_%d)[fixture]" % n, M, gens, swaps, n ** 4,
                             action_gen="g", action_root=q,
                             params={"family": "taft-double-fixture", "n": n, "root": q.to_json()})
    A.set_coalgebra_data("g", delta_words=[(1, [("g", 1)], [("g", 1)])], eps=1,
                         antipode_words=[(1, [("g", -1)])])
    A.set_coalgebra_data("x", delta_words=[(1, [("g", 1)], [("x", 1)]), (1, [("x", 1)], [])],
                         eps=0, antipode_words=[(-1, [("g", -1), ("x", 1)])])
    A.set_coalgebra_data("G", delta_words=[(1, [("G", 1)], [("G", 1)])], eps=1,
                         antipode_words=[(1, [("G", -1)])])
    A.set_coalgebra_data("X", delta_words=[(1, [], [("X", 1)]), (1, [("X", 1)], [("G", 1)])],
                         eps=0, antipode_words=[(-1, [("X", 1), ("G", -1)])])
    return DoubleFixture(A, [])


def _hnzmt_double_fixture(p):
    n, zeta, m, t, N = p.n, p.zeta, p.m, p.t, p.N
    M = zeta.conductor
    one = CycloNum.one(M)
    gens = _specs(M, [("X", N, {}), ("Y", n, {(0,) * 4: one}),
                      ("x", N, {}), ("y", n, {(0,) * 4: one})])
    swaps = {
        (1, 0): {(1, 1, 0, 0): zeta ** m},               # YX = z^m XY
        (2, 0): {(1, 0, 1, 0): one,
                 (0, t, 0, 0): one, (0, 0, 0, m): -one},  # xX - Xx = Y^t - y^m
        (2, 1): {(0, 1, 1, 0): zeta ** m},               # xY = z^m Yx
        (3, 0): {(1, 0, 0, 1): zeta ** -t},              # yX = z^-t Xy
        (3, 1): {(0, 1, 0, 1): one},                     # yY = Yy
        (3, 2): {(0, 0, 1, 1): zeta ** t},               # yx = z^t xy
    }
    A = PresentedHopfAlgebra("D(H_%d(z,%d,%d))[fixture]" % (n, m, t), M, gens, swaps,
                             (N * n) ** 2, action_gen="y", action_root=zeta,
                             params={"family": "hnzmt-double-fixture", "n": n, "m": m, "t": t,
                                     "root": zeta.to_json()})
    A.set_coalgebra_data("y", delta_words=[(1, [("y", 1)], [("y", 1)])], eps=1,
                         antipode_words=[(1, [("y", -1)])])
    A.set_coalgebra_data("x", delta_words=[(1, [("y", m)], [("x", 1)]), (1, [("x", 1)], [])],
                         eps=0, antipode_words=[(-1, [("y", -m), ("x", 1)])])
    A.set_coalgebra_data("Y", delta_words=[(1, [("Y", 1)], [("Y", 1)])], eps=1,
                         antipode_words=[(1, [("Y", -1)])])
    A.set_coalgebra_data("X", delta_words=[(1, [], [("X", 1)]), (1, [("X", 1)], [("Y", t)])],
                         eps=0, antipode_words=[(-1, [("X", 1), ("Y", -t)])])
    return DoubleFixture(A, [])


def _t421_double_fixture(zeta):
    M = zeta.conductor
    one = CycloNum.one(M)
    two = CycloNum.rational(2, M)
    gens = _specs(M, [("X", 2, {}), ("G", 4, {(0,) * 4: one}),
                      ("x", 2, {(0, 0, 0, 2): one, (0, 0, 0, 0): -one}),
                      ("g", 4, {(0,) * 4: one})])
    swaps = {
        (1, 0): {(1, 1, 0, 0): zeta},                    # GX = z XG
        # xX - Xx = G^2 - g
        (2, 0): {(1, 0, 1, 0): one, (0, 2, 0, 0): one, (0, 0, 0, 1): -one},
        # xG = z Gx - 2XGg - 2XG^3   (from the printed computation)
        (2, 1): {(0, 1, 1, 0): zeta, (1, 1, 0, 1): -two, (1, 3, 0, 0): -two},
        (3, 0): {(1, 0, 0, 1): -one},                    # gX = -Xg
        (3, 1): {(0, 1, 0, 1): one},                     # gG = Gg
        (3, 2): {(0, 0, 1, 1): -one},                    # gx = -xg
    }
    A = PresentedHopfAlgebra("D(T(4,2,1))[fixture]", M, gens, swaps, 64,
                             action_gen="g", action_root=zeta,
                             params={"family": "t421-double-fixture", "root": zeta.to_json()})
    A.set_coalgebra_data("g", delta_words=[(1, [("g", 1)], [("g", 1)])], eps=1,
                         antipode_words=[(1, [("g", 3)])])
    A.set_coalgebra_data("x", delta_words=[(1, [("g", 1)], [("x", 1)]), (1, [("x", 1)], [])],
                         eps=0, antipode_words=[(-1, [("g", 3), ("x", 1)])])
    A.set_coalgebra_data("G",
                         delta_words=[(1, [("G", 1)], [("G", 1)]),
                                      (-2, [("X", 1), ("G", 1)], [("X", 1), ("G", 3)])],
                         eps=1, antipode_words=[(1, [("G", 3)])])
    A.set_coalgebra_data("X",
                         delta_words=[(1, [], [("X", 1)]), (1, [("X", 1)], [("G", 2)])],
                         eps=0, antipode_words=[(-1, [("X", 1), ("G", 2)])])
    return DoubleFixture(A, [])


def _uq_double_fixture(n, q):
    M = q.conductor
    one = CycloNum.one(M)
    qi = q.inverse()
    w = (q - qi).inverse()
    u = lambda *e: tuple(e)  # (b, c, d, E, F, K)
    gens = _specs(M, [("b", n, {}), ("c", n, {}), ("d", n, {(0,) * 6: one}),
                      ("E", n, {}), ("F", n, {}), ("K", n, {(0,) * 6: one})])
    swaps = {
        (1, 0): {u(1, 1, 0, 0, 0, 0): one},          # cb = bc
        (2, 0): {u(1, 0, 1, 0, 0, 0): q},            # db = q bd
        (2, 1): {u(0, 1, 1, 0, 0, 0): q},            # dc = q cd
        # Eb = q^-1 bE + q^-1 aK - q^-1 d, a = q^-1 b c d^{n-1} + d^{n-1}
        (3, 0): {u(1, 0, 0, 1, 0, 0): qi,
                 u(1, 1, n - 1, 0, 0, 1): qi * qi,
                 u(0, 0, n - 1, 0, 0, 1): qi,
                 u(0, 0, 1, 0, 0, 0): -qi},
        (3, 1): {u(0, 1, 0, 1, 0, 0): q},            # Ec = q cE
        (3, 2): {u(0, 0, 1, 1, 0, 0): q,
                 u(0, 1, 0, 0, 0, 1): q},            # Ed = q dE + q cK
        (4, 0): {u(1, 0, 0, 0, 1, 0): q},            # Fb = q bF
        # Fc = q^-1 cF - aK^-1 + d
        (4, 1): {u(0, 1, 0, 0, 1, 0): qi,
                 u(1, 1, n - 1, 0, 0, n - 1): -qi,
                 u(0, 0, n - 1, 0, 0, n - 1): -one,
                 u(0, 0, 1, 0, 0, 0): one},
        # Fd = q dF - q^2 b K^-1
        (4, 2): {u(0, 0, 1, 0, 1, 0): q,
                 u(1, 0, 0, 0, 0, n - 1): -(q ** 2)},
        # FE = EF - (K - K^-1)/(q - q^-1)
        (4, 3): {u(0, 0, 0, 1, 1, 0): one,
                 u(0, 0, 0, 0, 0, 1): -w,
                 u(0, 0, 0, 0, 0, n - 1): w},
        (5, 0): {u(1, 0, 0, 0, 0, 1): qi * qi},      # Kb = q^-2 bK
        (5, 1): {u(0, 1, 0, 0, 0, 1): q * q},        # Kc = q^2 cK
        (5, 2): {u(0, 0, 1, 0, 0, 1): one},          # Kd = dK
        (5, 3): {u(0, 0, 0, 1, 0, 1): q * q},        # KE = q^2 EK
        (5, 4): {u(0, 0, 0, 0, 1, 1): qi * qi},      # KF = q^-2 FK
    }
    A = PresentedHopfAlgebra("D(u_q(sl2))[fixture,n=%d]" % n, M, gens, swaps, n ** 6,
                             action_gen="K", action_root=q ** 2,
                             params={"family": "uq-double-fixture", "n": n, "root": q.to_json()})
    a_words = [(qi, [("b", 1), ("c", 1), ("d", n - 1)]), (one, [("d", n - 1)])]
    A.defined_symbols = {
        "a": {
            "value": A.from_words(a_words).terms,
            # cop of Delta_O(a) = a (x) a + b (x) c
            "delta": [(one, [("a", 1)], [("a", 1)]), (one, [("c", 1)], [("b", 1)])],
            "eps": one,
        }
    }
    A.set_coalgebra_data("b",
                         delta_words=[(qi, [("b", 1)], [("b", 1), ("c", 1), ("d", n - 1)]),
                                      (1, [("b", 1)], [("d", n - 1)]),
                                      (1, [("d", 1)], [("b", 1)])],
                         eps=0, antipode_words=[(-qi, [("b", 1)])])
    A.set_coalgebra_data("c",
                         delta_words=[(qi, [("b", 1), ("c", 1), ("d", n - 1)], [("c", 1)]),
                                      (1, [("d", n - 1)], [("c", 1)]),
                                      (1, [("c", 1)], [("d", 1)])],
                         eps=0, antipode_words=[(-q, [("c", 1)])])
    A.set_coalgebra_data("d",
                         delta_words=[(1, [("b", 1)], [("c", 1)]), (1, [("d", 1)], [("d", 1)])],
                         eps=1, antipode_words=a_words)
    A.set_coalgebra_data("E", delta_words=[(1, [], [("E", 1)]), (1, [("E", 1)], [("K", 1)])],
                         eps=0, antipode_words=[(-1, [("E", 1), ("K", -1)])])
    A.set_coalgebra_data("F", delta_words=[(1, [("K", -1)], [("F", 1)]), (1, [("F", 1)], [])],
                         eps=0, antipode_words=[(-1, [("K", 1), ("F", 1)])])
    A.set_coalgebra_data("K", delta_words=[(1, [("K", 1)], [("K", 1)])], eps=1,
                         antipode_words=[(1, [("K", -1)])])
    printed = [
        ("a^n=1", [(one, [("a", n)]), (-one, [])]),
        ("ba=qab", [(one, [("b", 1), ("a", 1)]), (-q, [("a", 1), ("b", 1)])]),
        ("ca=qac", [(one, [("c", 1), ("a", 1)]), (-q, [("a", 1), ("c", 1)])]),
        ("ad=q^-1bc+1", [(one, [("a", 1), ("d", 1)]),
                         (-qi, [("b", 1), ("c", 1)]), (-one, [])]),
        ("Ka=aK", [(one, [("K", 1), ("a", 1)]), (-one, [("a", 1), ("K", 1)])]),
        ("Ea=q^-1aE-q^-1c", [(one, [("E", 1), ("a", 1)]),
                             (-qi, [("a", 1), ("E", 1)]), (qi, [("c", 1)])]),
        ("Fa=q^-1aF+b", [(one, [("F", 1), ("a", 1)]),
                         (-qi, [("a", 1), ("F", 1)]), (-one, [("b", 1)])]),
    ]
    return DoubleFixture(A, printed)


# -- CLI-addressable identifiers ----------------------------------------------


def algebra_from_id(algebra_id):
    """Parse taft:n:k, hnzmt:n:k:m:t, gentaft:n:N:alpha, t421:k, uq:n:k,
    with optional suffix :dual (q = zeta_n^k throughout)."""
    parts = algebra_id.strip().split(":")
    want_dual = False
    if parts and parts[-1] == "dual":
        want_dual = True
        parts = parts[:-1]
    if not parts:
        raise ValueError("empty algebra id")
    fam, args = parts[0], parts[1:]
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise ValueError("non-integer arguments in %r" % algebra_id)
    if fam == "taft" and len(nums) == 2:
        A = taft(nums[0], root_of_unity(nums[0], nums[1]))
    elif fam == "hnzmt" and len(nums) == 4:
        n, k, m, t = nums
        A = hnzmt(HnParams(n, root_of_unity(n, k), m, t))
    elif fam == "gentaft" and len(nums) == 3:
        A = gen_taft(nums[0], nums[1], nums[2])
    elif fam == "t421" and len(nums) == 1:
        A = t421(root_of_unity(4, nums[0]))
    elif fam == "uq" and len(nums) == 2:
        A = uqsl2(nums[0], root_of_unity(nums[0], nums[1]))
    else:
        raise ValueError("unrecognized algebra id %r" % algebra_id)
    return dual_of(A) if want_dual else A


def presentations_equal(a, b):
    """Positional presentation equality, ignoring generator names."""
    if a.gen_count != b.gen_count or a.conductor != b.conductor:
        return False
    if a.bounds != b.bounds or a.dimension != b.dimension:
        return False
    for ga, gb in zip(a.generators, b.generators):
        if ga.power_image != gb.power_image or ga.delta != gb.delta:
            return False
        if ga.eps != gb.eps or ga.antipode != gb.antipode:
            return False
    return a.swaps == b.swaps
