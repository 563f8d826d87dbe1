"""Presented Hopf algebras with normal-form monomial bases.

A presentation consists of an ordered list of generators g_1 < ... < g_k,
each with a power bound N and a power rule g^N -> image, together with a
swap rule g_j g_i -> element for every out-of-order adjacent pair (j > i).
Normal monomials are the position-sorted words g_1^{e_1} ... g_k^{e_k}
with 0 <= e_i < N_i; elements are finite linear combinations of normal
monomials with cyclotomic coefficients.

The coalgebra structure (Delta, eps) and antipode S are recorded on
generators and extended (anti-)multiplicatively.  Confluence of the
rewrite system is not proved symbolically; verify_hopf_axioms witnesses
it through the dimension count and sampled associativity.

Algebras are immutable after their coalgebra data is set; the internal
memo tables only ever receive idempotent writes (same key, same value),
so read-only sharing across threads is safe.
"""

import itertools
import random

from .cyclotomic import CycloNum
from . import linalg

__all__ = [
    "GeneratorSpec",
    "PresentedHopfAlgebra",
    "HopfElement",
    "TensorElement",
    "PresentationError",
    "CheckReport",
]

REWRITE_BUDGET = 4_000_000


class PresentationError(RuntimeError):
    """Nontermination guard or malformed presentation."""


class CheckReport:
    """Itemized pass/fail report used by the verification sweeps."""

    def __init__(self, title):
        self.title = title
        self.items = []

    def add(self, check, passed, detail=""):
        self.items.append({"check": check, "passed": bool(passed), "detail": detail})

    @property
    def passed(self):
        return all(item["passed"] for item in self.items)

    def failures(self):
        return [item for item in self.items if not item["passed"]]

    def to_json(self):
        return {"title": self.title, "passed": self.passed, "items": self.items}

    def __repr__(self):
        flag = "PASS" if self.passed else "FAIL"
        return "<CheckReport %s: %s (%d items)>" % (self.title, flag, len(self.items))


class GeneratorSpec:
    """One generator: power bound/rule and coalgebra data.

    power_image, antipode are element dicts {monomial: CycloNum};
    delta is a tensor dict {(mono, mono): CycloNum}; eps is a CycloNum.
    """

    __slots__ = ("name", "position", "bound", "power_image", "delta", "eps", "antipode")

    def __init__(self, name, position, bound, power_image=None, delta=None, eps=None, antipode=None):
        assert bound >= 1
        self.name = name
        self.position = position
        self.bound = bound
        self.power_image = power_image
        self.delta = delta
        self.eps = eps
        self.antipode = antipode


class HopfElement:
    """A finite linear combination of normal monomials."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms  # dict monomial-tuple -> nonzero CycloNum

    def _check(self, other):
        if other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other):
        if isinstance(other, HopfElement):
            self._check(other)
            return HopfElement(self.algebra, _dict_add(self.terms, other.terms))
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, HopfElement):
            self._check(other)
            return self + (-other)
        return NotImplemented

    def __neg__(self):
        return HopfElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HopfElement):
            self._check(other)
            return HopfElement(self.algebra, self.algebra._mul_terms(self.terms, other.terms))
        if isinstance(other, (CycloNum, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (CycloNum, int)):
            return self.scale(other)
        return NotImplemented

    def scale(self, scalar):
        if isinstance(scalar, int):
            scalar = CycloNum.rational(scalar, self.algebra.conductor)
        out = {}
        if not scalar.is_zero():
            for m, c in self.terms.items():
                out[m] = c * scalar
        return HopfElement(self.algebra, out)

    def __eq__(self, other):
        if isinstance(other, HopfElement):
            return self.algebra is other.algebra and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def items(self):
        return self.terms.items()

    def __repr__(self):
        return self.algebra.format_element(self.terms)


class TensorElement:
    """Element of a tensor power of the algebra, legs in normal form."""

    __slots__ = ("algebra", "rank", "terms")

    def __init__(self, algebra, rank, terms):
        self.algebra = algebra
        self.rank = rank
        self.terms = terms  # dict tuple-of-monomials -> CycloNum

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            return (
                self.algebra is other.algebra
                and self.rank == other.rank
                and self.terms == other.terms
            )
        return NotImplemented

    def __sub__(self, other):
        assert self.algebra is other.algebra and self.rank == other.rank
        return TensorElement(self.algebra, self.rank, _dict_add(self.terms, {k: -c for k, c in other.terms.items()}))

    def is_zero(self):
        return not self.terms

    def items(self):
        return self.terms.items()

    def __repr__(self):
        parts = []
        for key, c in sorted(self.terms.items()):
            legs = " (x) ".join(self.algebra.format_monomial(m) for m in key)
            parts.append("%r*[%s]" % (c, legs))
        return " + ".join(parts) if parts else "0"


def _dict_add(a, b):
    out = dict(a)
    for k, c in b.items():
        cur = out.get(k)
        if cur is None:
            out[k] = c
        else:
            s = cur + c
            if s.is_zero():
                del out[k]
            else:
                out[k] = s
    return out


def _acc(out, key, val):
    # in-place accumulate, dropping zeros
    cur = out.get(key)
    if cur is None:
        out[key] = val
    else:
        s = cur + val
        if s.is_zero():
            del out[key]
        else:
            out[key] = s


class PresentedHopfAlgebra:
    def __init__(self, name, conductor, generators, swaps, dimension,
                 defined_symbols=None, action_gen=None, action_root=None, params=None):
        """generators: list of GeneratorSpec in position order; power_image
        and swap targets must already be element dicts in normal form;
        delta/eps/antipode may be filled afterwards via set_coalgebra_data.
        swaps: dict (hi_pos, lo_pos) -> element dict for hi > lo."""
        self.name = name
        self.conductor = conductor
        self.generators = generators
        self.gen_count = len(generators)
        self.names = [g.name for g in generators]
        self.position = {g.name: i for i, g in enumerate(generators)}
        if len(self.position) != self.gen_count:
            raise PresentationError("duplicate generator names")
        self.bounds = [g.bound for g in generators]
        self.unit_mono = (0,) * self.gen_count
        self.swaps = swaps
        for hi in range(self.gen_count):
            for lo in range(hi):
                if (hi, lo) not in swaps:
                    raise PresentationError(
                        "missing swap rule for %s * %s" % (self.names[hi], self.names[lo])
                    )
        self.dimension = dimension
        self.defined_symbols = defined_symbols or {}
        # optional word-level Delta images through defined symbols, used by
        # the classifier when the expanded tensor would lose triangularity
        self.class_delta = {}
        self.action_gen = action_gen
        self.action_root = action_root
        self.params = params or {}
        for g in generators:
            if g.power_image is None:
                raise PresentationError("generator %s lacks a power rule" % g.name)
        self._one = CycloNum.one(conductor)
        self._zero = CycloNum.zero(conductor)
        # True when g^N -> 1, which lets negative exponents reduce mod N
        self._cyclic = [self._is_unit_dict(g.power_image) for g in generators]
        self.rewrite_budget = REWRITE_BUDGET
        # caches
        self._mul_cache = {}
        self._mul_cache_cap = 200_000
        self._gen_mul_cache = {}
        self._delta_cache = {}
        self._delta_gen_pow = {}
        self._antipode_cache = {}
        self._antipode_gen_pow = {}
        self._counit_cache = {}
        self._antipode_inv_matrix = None
        self._basis = None

    def _is_unit_dict(self, d):
        return len(d) == 1 and d.get(self.unit_mono) == self._one

    # -- element constructors ------------------------------------------

    def unit(self):
        return HopfElement(self, {self.unit_mono: self._one})

    def zero(self):
        return HopfElement(self, {})

    def scalar(self, value):
        if isinstance(value, int):
            value = CycloNum.rational(value, self.conductor)
        if value.is_zero():
            return self.zero()
        return HopfElement(self, {self.unit_mono: value})

    def gen(self, name):
        i = self.position[name]
        mono = [0] * self.gen_count
        mono[i] = 1
        return HopfElement(self, {tuple(mono): self._one})

    def monomial(self, exps, coeff=None):
        exps = tuple(exps)
        assert len(exps) == self.gen_count
        if coeff is None:
            coeff = self._one
        return HopfElement(self, dict(self._normalize_factors(self._mono_factors(exps), coeff)))

    def from_word(self, word, coeff=None):
        """Normalize a word given as [(generator name or index, exponent), ...]."""
        if coeff is None:
            coeff = self._one
        elif isinstance(coeff, int):
            coeff = CycloNum.rational(coeff, self.conductor)
        return HopfElement(self, dict(self._normalize_factors(self._input_word(word), coeff)))

    def from_words(self, terms):
        """terms: list of (coeff, word); returns the normalized sum."""
        out = {}
        for coeff, word in terms:
            if isinstance(coeff, int):
                coeff = CycloNum.rational(coeff, self.conductor)
            out = _dict_add(out, self._normalize_factors(self._input_word(word), coeff))
        return HopfElement(self, out)

    def element(self, terms):
        """terms: dict monomial -> CycloNum, assumed normal; copies and prunes."""
        return HopfElement(self, {m: c for m, c in terms.items() if not c.is_zero()})

    def _input_word(self, word):
        factors = []
        for g, e in word:
            i = g if isinstance(g, int) else self.position[g]
            if e < 0:
                if not self._cyclic[i]:
                    raise PresentationError(
                        "negative exponent on non-grouplike generator %s" % self.names[i]
                    )
                e %= self.bounds[i]
            if e:
                factors.append((i, e))
        return factors

    def _mono_factors(self, mono):
        return [(i, e) for i, e in enumerate(mono) if e]

    # -- rewriting ------------------------------------------------------

    def _normalize_factors(self, factors, coeff):
        """Rewrite coeff * (product of factors) to normal form; returns dict."""
        out = {}
        if coeff.is_zero():
            return out
        work = [(self._clean(factors), coeff)]
        budget = self.rewrite_budget
        while work:
            word, c = work.pop()
            pos = self._first_violation(word)
            if pos is None:
                mono = [0] * self.gen_count
                for g, e in word:
                    mono[g] = e
                key = tuple(mono)
                cur = out.get(key)
                s = c if cur is None else cur + c
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
                continue
            kind, i = pos
            if kind == 0:  # power rule at word[i]
                g, e = word[i]
                spec = self.generators[g]
                prefix = word[:i]
                if e > spec.bound:
                    prefix = prefix + [(g, e - spec.bound)]
                suffix = word[i + 1:]
                image = spec.power_image
            else:  # adjacent disorder word[i] > word[i+1]
                (g1, e1), (g2, e2) = word[i], word[i + 1]
                prefix = word[:i] + ([(g1, e1 - 1)] if e1 > 1 else [])
                suffix = ([(g2, e2 - 1)] if e2 > 1 else []) + word[i + 2:]
                image = self.swaps[(g1, g2)]
            for mono, mc in image.items():
                budget -= 1
                if budget < 0:
                    raise PresentationError(
                        "rewrite budget exceeded in %s (non-terminating rules?)" % self.name
                    )
                nw = self._clean(prefix + self._mono_factors(mono) + suffix)
                work.append((nw, c * mc))
        return out

    @staticmethod
    def _clean(factors):
        out = []
        for g, e in factors:
            if not e:
                continue
            if out and out[-1][0] == g:
                out[-1] = (g, out[-1][1] + e)
            else:
                out.append((g, e))
        return out

    def _first_violation(self, word):
        for i, (g, e) in enumerate(word):
            if e >= self.bounds[g]:
                return (0, i)
            if i + 1 < len(word) and word[i + 1][0] < g:
                return (1, i)
        return None

    def _gen_mul(self, mono, g):
        # normal monomial times one generator factor; small, hot cache
        key = (mono, g)
        val = self._gen_mul_cache.get(key)
        if val is None:
            val = self._normalize_factors(
                self._clean(self._mono_factors(mono) + [(g, 1)]), self._one
            )
            self._gen_mul_cache[key] = val
        return val

    def _mul_mono(self, m1, m2):
        key = (m1, m2)
        val = self._mul_cache.get(key)
        if val is None:
            cur = {m1: self._one}
            for g, e in self._mono_factors(m2):
                for _ in range(e):
                    nxt = {}
                    for mono, c in cur.items():
                        for mm, cc in self._gen_mul(mono, g).items():
                            _acc(nxt, mm, c * cc)
                    cur = nxt
            val = cur
            if len(self._mul_cache) < self._mul_cache_cap:
                self._mul_cache[key] = val
        return val

    def _mul_terms(self, t1, t2):
        out = {}
        for m1, c1 in t1.items():
            for m2, c2 in t2.items():
                c = c1 * c2
                for m, mc in self._mul_mono(m1, m2).items():
                    cur = out.get(m)
                    s = c * mc if cur is None else cur + c * mc
                    if s.is_zero():
                        out.pop(m, None)
                    else:
                        out[m] = s
        return out

    def multiply(self, u, v):
        return u * v

    def add(self, u, v):
        return u + v

    def scale(self, u, scalar):
        return u.scale(scalar)

    # -- coalgebra -------------------------------------------------------

    def set_coalgebra_data(self, name, delta_words=None, eps=None, antipode_words=None,
                           delta_terms=None, antipode_element=None):
        """Fill Delta/eps/S images for one generator.

        delta_words: list of (coeff, left word, right word);
        antipode_words: list of (coeff, word).  All are normalized here.
        """
        spec = self.generators[self.position[name]]
        if delta_words is not None:
            terms = {}
            for coeff, lw, rw in delta_words:
                if isinstance(coeff, int):
                    coeff = CycloNum.rational(coeff, self.conductor)
                left = self._normalize_factors(self._input_word(lw), self._one)
                right = self._normalize_factors(self._input_word(rw), self._one)
                for ml, cl in left.items():
                    for mr, cr in right.items():
                        terms = _dict_add(terms, {(ml, mr): coeff * cl * cr})
            spec.delta = terms
        if delta_terms is not None:
            spec.delta = {k: c for k, c in delta_terms.items() if not c.is_zero()}
        if eps is not None:
            if isinstance(eps, int):
                eps = CycloNum.rational(eps, self.conductor)
            spec.eps = eps
        if antipode_words is not None:
            spec.antipode = self.from_words(antipode_words).terms
        if antipode_element is not None:
            spec.antipode = {k: c for k, c in antipode_element.items() if not c.is_zero()}

    def _tensor_mul(self, t1, t2):
        out = {}
        for (a1, a2), c1 in t1.items():
            for (b1, b2), c2 in t2.items():
                c = c1 * c2
                left = self._mul_mono(a1, b1)
                if not left:
                    continue
                right = self._mul_mono(a2, b2)
                for ml, cl in left.items():
                    ccl = c * cl
                    for mr, cr in right.items():
                        key = (ml, mr)
                        cur = out.get(key)
                        s = ccl * cr if cur is None else cur + ccl * cr
                        if s.is_zero():
                            out.pop(key, None)
                        else:
                            out[key] = s
        return out

    def _delta_gen_power(self, g, e):
        key = (g, e)
        val = self._delta_gen_pow.get(key)
        if val is None:
            if e == 0:
                val = {(self.unit_mono, self.unit_mono): self._one}
            else:
                val = self._tensor_mul(self._delta_gen_power(g, e - 1), self.generators[g].delta)
            self._delta_gen_pow[key] = val
        return val

    def _delta_mono(self, mono):
        val = self._delta_cache.get(mono)
        if val is None:
            val = {(self.unit_mono, self.unit_mono): self._one}
            for g, e in enumerate(mono):
                if e:
                    val = self._tensor_mul(val, self._delta_gen_power(g, e))
            self._delta_cache[mono] = val
        return val

    def comultiply(self, u):
        out = {}
        for m, c in u.terms.items():
            for key, dc in self._delta_mono(m).items():
                cur = out.get(key)
                s = c * dc if cur is None else cur + c * dc
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return TensorElement(self, 2, out)

    def delta_iter(self, u, k):
        """(Delta (x) id (x) ...) iterated k times; rank k+1 tensor."""
        terms = {(m,): c for m, c in u.terms.items()}
        rank = 1
        for _ in range(k):
            nxt = {}
            for key, c in terms.items():
                for (m1, m2), dc in self._delta_mono(key[0]).items():
                    nk = (m1, m2) + key[1:]
                    cur = nxt.get(nk)
                    s = c * dc if cur is None else cur + c * dc
                    if s.is_zero():
                        nxt.pop(nk, None)
                    else:
                        nxt[nk] = s
            terms = nxt
            rank += 1
        return TensorElement(self, rank, terms)

    def _counit_mono(self, mono):
        val = self._counit_cache.get(mono)
        if val is None:
            val = self._one
            for g, e in enumerate(mono):
                if e:
                    eg = self.generators[g].eps
                    if eg.is_zero():
                        val = self._zero
                        break
                    if not eg.is_one():
                        val = val * eg ** e
            self._counit_cache[mono] = val
        return val

    def counit(self, u):
        total = self._zero
        for m, c in u.terms.items():
            ec = self._counit_mono(m)
            if not ec.is_zero():
                total = total + c * ec
        return total

    def _antipode_gen_power(self, g, e):
        key = (g, e)
        val = self._antipode_gen_pow.get(key)
        if val is None:
            if e == 0:
                val = {self.unit_mono: self._one}
            else:
                val = self._mul_terms(self._antipode_gen_power(g, e - 1), self.generators[g].antipode)
            self._antipode_gen_pow[key] = val
        return val

    def _antipode_mono(self, mono):
        val = self._antipode_cache.get(mono)
        if val is None:
            val = {self.unit_mono: self._one}
            for g in range(self.gen_count - 1, -1, -1):
                e = mono[g]
                if e:
                    val = self._mul_terms(val, self._antipode_gen_power(g, e))
            self._antipode_cache[mono] = val
        return val

    def antipode(self, u):
        out = {}
        for m, c in u.terms.items():
            for m2, c2 in self._antipode_mono(m).items():
                out = _dict_add(out, {m2: c * c2})
        return HopfElement(self, out)

    def antipode_matrix(self):
        basis = self.basis()
        index = {m: i for i, m in enumerate(basis)}
        cols = []
        for m in basis:
            col = [self._zero] * len(basis)
            for m2, c in self._antipode_mono(m).items():
                col[index[m2]] = c
            cols.append(col)
        # rows of the matrix: entry [i][j] = coeff of basis[i] in S(basis[j])
        return [[cols[j][i] for j in range(len(basis))] for i in range(len(basis))]

    def antipode_inverse(self, u):
        """S^{-1}, computed from the inverse of the antipode's basis matrix."""
        if self._antipode_inv_matrix is None:
            inv = linalg.inverse(self.antipode_matrix())
            if inv is None:
                raise PresentationError("antipode of %s is not invertible" % self.name)
            self._antipode_inv_matrix = inv
        basis = self.basis()
        index = {m: i for i, m in enumerate(basis)}
        out = {}
        inv = self._antipode_inv_matrix
        for m, c in u.terms.items():
            j = index[m]
            for i, row in enumerate(inv):
                v = row[j]
                if not v.is_zero():
                    out = _dict_add(out, {basis[i]: c * v})
        return HopfElement(self, out)

    # -- basis and structure ---------------------------------------------

    def basis(self):
        if self._basis is None:
            self._basis = [
                tuple(exps)
                for exps in itertools.product(*[range(b) for b in self.bounds])
            ]
        return self._basis

    def monomial_count(self):
        n = 1
        for b in self.bounds:
            n *= b
        return n

    def grouplikes(self):
        """All basis monomials m with Delta(m) = m (x) m."""
        out = []
        for m in self.basis():
            d = self._delta_mono(m)
            if len(d) == 1 and d.get((m, m)) == self._one:
                out.append(m)
        return out

    def skew_primitive_space(self, g, h):
        """Basis of {phi : Delta(phi) = g (x) phi + phi (x) h} for grouplikes g, h."""
        g = self._as_mono(g)
        h = self._as_mono(h)
        for m in (g, h):
            d = self._delta_mono(m)
            if not (len(d) == 1 and d.get((m, m)) == self._one):
                raise ValueError("%s is not grouplike" % self.format_monomial(m))
        basis = self.basis()
        rows = {}  # tensor key -> {column: coeff} for Delta(phi) - g(x)phi - phi(x)h
        for j, m in enumerate(basis):
            entries = dict(self._delta_mono(m))
            entries = _dict_add(entries, {(g, m): -self._one})
            entries = _dict_add(entries, {(m, h): -self._one})
            for key, c in entries.items():
                row = rows.setdefault(key, {})
                cur = row.get(j)
                s = c if cur is None else cur + c
                if s.is_zero():
                    row.pop(j, None)
                else:
                    row[j] = s
        eqs = [row for row in rows.values() if row]
        vectors = linalg_nullspace_sparse(eqs, len(basis), self.conductor)
        out = []
        for vec in vectors:
            terms = {basis[j]: c for j, c in enumerate(vec) if not c.is_zero()}
            out.append(HopfElement(self, terms))
        return out

    def _as_mono(self, x):
        if isinstance(x, HopfElement):
            assert len(x.terms) == 1
            return next(iter(x.terms))
        if isinstance(x, str):
            return next(iter(self.gen(x).terms))
        return tuple(x)

    # -- verification ------------------------------------------------------

    def rules(self):
        """All rewrite rules as (label, lhs word, target element dict)."""
        out = []
        for g, spec in enumerate(self.generators):
            out.append(
                ("%s^%d" % (spec.name, spec.bound), [(g, spec.bound)], spec.power_image)
            )
        for (hi, lo), target in sorted(self.swaps.items()):
            out.append(
                ("%s*%s" % (self.names[hi], self.names[lo]), [(hi, 1), (lo, 1)], target)
            )
        return out

    def _delta_of_word(self, word):
        t = {(self.unit_mono, self.unit_mono): self._one}
        for g, e in word:
            t = self._tensor_mul(t, self._delta_gen_power(g, e))
        return t

    def _eps_of_word(self, word):
        val = self._one
        for g, e in word:
            eg = self.generators[g].eps
            if eg.is_zero():
                return self._zero
            val = val * eg ** e
        return val

    def _antipode_of_word(self, word):
        t = {self.unit_mono: self._one}
        for g, e in reversed(word):
            t = self._mul_terms(t, self._antipode_gen_power(g, e))
        return t

    def verify_hopf_axioms(self, seed=0, assoc_samples=200):
        """Axiom suite: relation consistency, coassociativity, counit and
        antipode laws on every basis monomial, sampled associativity, and
        the irreducible-monomial count (confluence witness)."""
        report = CheckReport("hopf-axioms:%s" % self.name)
        report.add(
            "dimension-count",
            self.monomial_count() == self.dimension,
            "monomials=%d declared=%d" % (self.monomial_count(), self.dimension),
        )
        for label, word, target in self.rules():
            dl = self._delta_of_word(word)
            dr = {}
            for m, c in target.items():
                for key, dc in self._delta_mono(m).items():
                    dr = _dict_add(dr, {key: c * dc})
            ok_delta = _dict_add(dl, {k: -c for k, c in dr.items()}) == {}
            el = self._eps_of_word(word)
            er = self._zero
            for m, c in target.items():
                ec = self._counit_mono(m)
                if not ec.is_zero():
                    er = er + c * ec
            sl = self._antipode_of_word(word)
            sr = {}
            for m, c in target.items():
                for m2, c2 in self._antipode_mono(m).items():
                    sr = _dict_add(sr, {m2: c * c2})
            ok_s = _dict_add(sl, {k: -c for k, c in sr.items()}) == {}
            report.add(
                "relation-consistency:%s" % label,
                ok_delta and el == er and ok_s,
                "" if ok_delta and el == er and ok_s else "Delta/eps/S disagree on relation",
            )
        coassoc_bad = counit_bad = antipode_bad = 0
        first_bad = ""
        for m in self.basis():
            d = self._delta_mono(m)
            left = {}
            right = {}
            for (m1, m2), c in d.items():
                for (a, b), dc in self._delta_mono(m1).items():
                    _acc(left, (a, b, m2), c * dc)
                for (a, b), dc in self._delta_mono(m2).items():
                    _acc(right, (m1, a, b), c * dc)
            if left != right:
                coassoc_bad += 1
                first_bad = first_bad or "coassoc fails on %s" % self.format_monomial(m)
            lc = {}
            rc = {}
            for (m1, m2), c in d.items():
                e1 = self._counit_mono(m1)
                if not e1.is_zero():
                    _acc(lc, m2, c * e1)
                e2 = self._counit_mono(m2)
                if not e2.is_zero():
                    _acc(rc, m1, c * e2)
            if lc != {m: self._one} or rc != {m: self._one}:
                counit_bad += 1
            sa = {}
            sb = {}
            for (m1, m2), c in d.items():
                for k2, v2 in self._antipode_mono(m1).items():
                    cc = c * v2
                    for k, v in self._mul_mono(k2, m2).items():
                        _acc(sa, k, cc * v)
                for k2, v2 in self._antipode_mono(m2).items():
                    cc = c * v2
                    for k, v in self._mul_mono(m1, k2).items():
                        _acc(sb, k, cc * v)
            em = self._counit_mono(m)
            target = {} if em.is_zero() else {self.unit_mono: em}
            if sa != target or sb != target:
                antipode_bad += 1
        report.add("coassociativity", coassoc_bad == 0, first_bad if coassoc_bad else "")
        report.add("counit-laws", counit_bad == 0, "%d failures" % counit_bad if counit_bad else "")
        report.add("antipode-law", antipode_bad == 0, "%d failures" % antipode_bad if antipode_bad else "")
        rng = random.Random(seed)
        basis = self.basis()
        assoc_bad = 0
        for _ in range(assoc_samples):
            a, b, c = (rng.choice(basis) for _ in range(3))
            ab = self._mul_mono(a, b)
            bc = self._mul_mono(b, c)
            lhs = self._mul_terms(ab, {c: self._one})
            rhs = self._mul_terms({a: self._one}, bc)
            if lhs != rhs:
                assoc_bad += 1
        report.add("associativity-samples", assoc_bad == 0,
                   "%d/%d failures" % (assoc_bad, assoc_samples) if assoc_bad else "seed=%d n=%d" % (seed, assoc_samples))
        return report

    # -- formatting ---------------------------------------------------------

    def format_monomial(self, mono):
        parts = []
        for g, e in enumerate(mono):
            if e == 1:
                parts.append(self.names[g])
            elif e > 1:
                parts.append("%s^%d" % (self.names[g], e))
        return "*".join(parts) if parts else "1"

    def format_element(self, terms):
        if not terms:
            return "0"
        parts = []
        for m in sorted(terms):
            c = terms[m]
            mono = self.format_monomial(m)
            if mono == "1":
                parts.append("(%r)" % c)
            else:
                parts.append("(%r)*%s" % (c, mono))
        return " + ".join(parts)


def linalg_nullspace_sparse(rows, ncols, conductor):
    """Nullspace basis from sparse rows ({col: coeff} dicts)."""
    one = CycloNum.one(conductor)
    zero = CycloNum.zero(conductor)
    pivots = {}  # pivot col -> reduced row dict
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            if lead not in pivots:
                inv = row[lead].inverse()
                row = {c: v * inv for c, v in row.items() if not v.is_zero()}
                # eliminate this column from existing rows
                for pc, prow in pivots.items():
                    if lead in prow:
                        f = prow[lead]
                        for c, v in row.items():
                            cur = prow.get(c, zero)
                            s = cur - f * v
                            if s.is_zero():
                                prow.pop(c, None)
                            else:
                                prow[c] = s
                pivots[lead] = row
                break
            prow = pivots[lead]
            f = row[lead]
            for c, v in prow.items():
                cur = row.get(c, zero)
                s = cur - f * v
                if s.is_zero():
                    row.pop(c, None)
                else:
                    row[c] = s
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for pc, prow in pivots.items():
            v = prow.get(fc)
            if v is not None:
                vec[pc] = -v
        basis.append(vec)
    return basis
