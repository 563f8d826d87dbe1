"""Dual pairings between a presented algebra and its dual presentation.

A pairing is defined by a generator table only; evaluation on arbitrary
elements is forced by the duality axioms

    <uv, x> = <u, x_(1)><v, x_(2)>      <u, xy> = <u_(1), x><u_(2), y>
    <1, x>  = eps(x)                    <u, 1>  = eps(u)
    <S(u), x> = <u, S(x)>

with the dual-side algebra in the left slot.  Closed pairing formulas
from the sources are *test oracles*, never the implementation.
"""

from .cyclotomic import CycloNum
from . import linalg
from .algebra import CheckReport, HopfElement

__all__ = ["DualityPairing", "PairingError", "catalog_pairing", "dual_basis_identities"]


class PairingError(RuntimeError):
    pass


class DualityPairing:
    """Bilinear form <.,.> on (dual algebra K) x (algebra H)."""

    def __init__(self, left, right, table, name=None):
        if left.conductor != right.conductor:
            raise PairingError("pairing requires a common conductor field")
        self.left = left
        self.right = right
        self.name = name or "<%s | %s>" % (left.name, right.name)
        self._zero = CycloNum.zero(left.conductor)
        self._one = CycloNum.one(left.conductor)
        # normalized generator table incl. unit rows/columns
        self._table = {}
        for lname in left.names:
            for rname in right.names:
                try:
                    self._table[(lname, rname)] = table[(lname, rname)]
                except KeyError:
                    raise PairingError("missing table entry <%s, %s>" % (lname, rname))
        self._memo = {}
        self._in_progress = set()
        self._gram = None

    # -- monomial helpers -------------------------------------------------

    @staticmethod
    def _first_factor(mono):
        for i, e in enumerate(mono):
            if e:
                rest = list(mono)
                rest[i] = e - 1
                one_f = [0] * len(mono)
                one_f[i] = 1
                return i, tuple(one_f), tuple(rest)
        return None

    def pair_monomials(self, lm, rm):
        key = (lm, rm)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        if key in self._in_progress:
            raise PairingError("cyclic pairing recursion on %s" % (key,))
        self._in_progress.add(key)
        try:
            val = self._pair_core(lm, rm)
        finally:
            self._in_progress.discard(key)
        self._memo[key] = val
        return val

    def _pair_core(self, lm, rm):
        L, R = self.left, self.right
        if lm == L.unit_mono:
            return R._counit_mono(rm)
        if rm == R.unit_mono:
            return L._counit_mono(lm)
        ldeg = sum(lm)
        rdeg = sum(rm)
        if ldeg == 1 and rdeg == 1:
            li = next(i for i, e in enumerate(lm) if e)
            ri = next(i for i, e in enumerate(rm) if e)
            return self._table[(L.names[li], R.names[ri])]
        if ldeg >= 2:
            # split the left product: <p u', x> = sum <p, x1><u', x2>
            _, head, rest = self._first_factor(lm)
            total = self._zero
            for (x1, x2), c in R._delta_mono(rm).items():
                f1 = self.pair_monomials(head, x1)
                if f1.is_zero():
                    continue
                f2 = self.pair_monomials(rest, x2)
                if f2.is_zero():
                    continue
                total = total + c * f1 * f2
            return total
        # left is a single generator, right has degree >= 2:
        # <p, h m'> = sum <p1, h><p2, m'>
        _, head, rest = self._first_factor(rm)
        total = self._zero
        for (p1, p2), c in L._delta_mono(lm).items():
            f1 = self.pair_monomials(p1, head)
            if f1.is_zero():
                continue
            f2 = self.pair_monomials(p2, rest)
            if f2.is_zero():
                continue
            total = total + c * f1 * f2
        return total

    def pair(self, u, x):
        """Pairing of elements (dual side u, primal side x)."""
        if isinstance(u, HopfElement):
            assert u.algebra is self.left
            uterms = u.terms
        else:
            uterms = u
        if isinstance(x, HopfElement):
            assert x.algebra is self.right
            xterms = x.terms
        else:
            xterms = x
        total = self._zero
        for lm, cl in uterms.items():
            for rm, cr in xterms.items():
                v = self.pair_monomials(lm, rm)
                if not v.is_zero():
                    total = total + cl * cr * v
        return total

    # -- Gram matrix and perfectness --------------------------------------

    def gram_matrix(self):
        if self._gram is None:
            lbasis = self.left.basis()
            rbasis = self.right.basis()
            self._gram = [
                [self.pair_monomials(lm, rm) for rm in rbasis] for lm in lbasis
            ]
        return self._gram

    def gram_determinant(self):
        if self.left.dimension != self.right.dimension:
            return CycloNum.zero(self.left.conductor)
        return linalg.determinant(self.gram_matrix())

    def is_perfect(self):
        if self.left.dimension != self.right.dimension:
            return False
        return linalg.rank(self.gram_matrix()) == self.left.dimension

    # -- axiom verification -------------------------------------------------

    def verify_duality_axioms(self):
        """All five duality axioms checked on full bases (products on
        basis x basis against the split comultiplications)."""
        report = CheckReport("duality:%s" % self.name)
        L, R = self.left, self.right
        lbasis, rbasis = L.basis(), R.basis()
        gram = self.gram_matrix()
        lidx = {m: i for i, m in enumerate(lbasis)}
        ridx = {m: i for i, m in enumerate(rbasis)}

        bad = 0
        for i, u in enumerate(lbasis):
            for j, v in enumerate(lbasis):
                prod = L._mul_mono(u, v)
                for x in rbasis:
                    lhs = self._zero
                    for m, c in prod.items():
                        g = gram[lidx[m]][ridx[x]]
                        if not g.is_zero():
                            lhs = lhs + c * g
                    rhs = self._zero
                    for (x1, x2), c in R._delta_mono(x).items():
                        g1 = gram[i][ridx[x1]]
                        if g1.is_zero():
                            continue
                        g2 = gram[j][ridx[x2]]
                        if not g2.is_zero():
                            rhs = rhs + c * g1 * g2
                    if lhs != rhs:
                        bad += 1
        report.add("product-vs-comultiplication(left)", bad == 0,
                   "%d basis triples fail" % bad if bad else "")

        bad = 0
        for u in lbasis:
            du = L._delta_mono(u)
            i = lidx[u]
            for x in rbasis:
                for y in rbasis:
                    prod = R._mul_mono(x, y)
                    lhs = self._zero
                    for m, c in prod.items():
                        g = gram[i][ridx[m]]
                        if not g.is_zero():
                            lhs = lhs + c * g
                    rhs = self._zero
                    for (u1, u2), c in du.items():
                        g1 = gram[lidx[u1]][ridx[x]]
                        if g1.is_zero():
                            continue
                        g2 = gram[lidx[u2]][ridx[y]]
                        if not g2.is_zero():
                            rhs = rhs + c * g1 * g2
                    if lhs != rhs:
                        bad += 1
        report.add("product-vs-comultiplication(right)", bad == 0,
                   "%d basis triples fail" % bad if bad else "")

        bad = sum(
            1 for x in rbasis
            if gram[lidx[L.unit_mono]][ridx[x]] != R._counit_mono(x)
        )
        report.add("unit-vs-counit(left)", bad == 0, "%d fail" % bad if bad else "")
        bad = sum(
            1 for u in lbasis
            if gram[lidx[u]][ridx[R.unit_mono]] != L._counit_mono(u)
        )
        report.add("unit-vs-counit(right)", bad == 0, "%d fail" % bad if bad else "")

        bad = 0
        for u in lbasis:
            su = L._antipode_mono(u)
            for x in rbasis:
                lhs = self._zero
                for m, c in su.items():
                    g = gram[lidx[m]][ridx[x]]
                    if not g.is_zero():
                        lhs = lhs + c * g
                rhs = self._zero
                for m, c in R._antipode_mono(x).items():
                    g = gram[lidx[u]][ridx[m]]
                    if not g.is_zero():
                        rhs = rhs + c * g
                if lhs != rhs:
                    bad += 1
        report.add("antipode-compatibility", bad == 0, "%d basis pairs fail" % bad if bad else "")
        return report


def catalog_pairing(A, dual=None):
    """The catalog pairing for a primal catalog algebra A."""
    from . import catalog

    if dual is None:
        dual = catalog.dual_of(A)
    table = catalog.pairing_table_for(A, dual)
    return DualityPairing(dual, A, table, name="pairing:%s" % A.name)


def dual_basis_identities(n, q):
    """Functional identities between the monomials b^s c^t d^r and the
    Kronecker-dual basis of the quantum-group side, checked exhaustively.

    Both directions are verified: the monomial expansion over the dual
    basis with weights [s]_q![t]_q! q^(-l(r+s-t)-rs), and the inverse
    expansion of n[s]_q![t]_q! p_{s,t,k} as a q-weighted sum over r.
    """
    from . import catalog
    from .cyclotomic import bracket_factorial

    U = catalog.uqsl2(n, q)
    O = catalog.oq_sl2_bar(n, q)
    P = catalog_pairing(U, O)
    gram = P.gram_matrix()
    lidx = {m: i for i, m in enumerate(O.basis())}
    rbasis = U.basis()
    report = CheckReport("dual-basis-identities[n=%d]" % n)

    bad = []
    for s in range(n):
        for t in range(n):
            w = bracket_factorial(s, q) * bracket_factorial(t, q)
            for r in range(n):
                row = gram[lidx[(s, t, r)]]
                for j, (i, jj, c) in enumerate(rbasis):
                    expect = CycloNum.zero(q.conductor)
                    if (i, jj) == (s, t):
                        expect = w * q ** (-c * (r + s - t) - r * s)
                    if row[j] != expect:
                        bad.append((s, t, r, rbasis[j]))
    report.add("monomials-over-dual-basis", not bad,
               "%d mismatches" % len(bad) if bad else "all (s,t,r) checked")

    nn = CycloNum.rational(n, q.conductor)
    bad = []
    for s in range(n):
        for t in range(n):
            w = nn * bracket_factorial(s, q) * bracket_factorial(t, q)
            for k in range(n):
                for j, (i, jj, c) in enumerate(rbasis):
                    lhs = w if (i, jj, c) == (s, t, k) else CycloNum.zero(q.conductor)
                    rhs = CycloNum.zero(q.conductor)
                    for r in range(n):
                        g = gram[lidx[(s, t, r)]][j]
                        if not g.is_zero():
                            rhs = rhs + q ** ((k + s) * r + (s - t) * k) * g
                    if lhs != rhs:
                        bad.append((s, t, k, rbasis[j]))
    report.add("dual-basis-inversion", not bad,
               "%d mismatches" % len(bad) if bad else "all (s,t,k) checked")
    return report
