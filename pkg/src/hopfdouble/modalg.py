"""Module-algebra actions on A = k[u]/(u^n - beta) and their classification.

The target A is graded by the eigenvalues of a designated grouplike
generator g0 acting as g0.u = zeta u for the algebra's primitive root
zeta; every generator h then maps the eigenspace k u^p into k u^(p+k_h),
where the shift k_h is read off the commutation scalar between g0 and h.
Writing h.u = theta_h u^(1+k_h), each h.u^p is a polynomial f_h[p] in
the unknown scalars theta, built from the comultiplication by

    h . u^p = sum (h_(1) . u)(h_(2) . u^(p-1)).

Applying every defining relation to every u^p yields a polynomial
system; the solver does zero/nonzero case splits, solves equations
linear in one unknown, enumerates root-of-unity solutions of power
equations, and reports anything else as a symbolic constraint.
Families are verified against the actual algebra via verify_action.
"""


from .cyclotomic import CycloNum, order_of
from .algebra import CheckReport, HopfElement, linalg_nullspace_sparse

__all__ = [
    "CyclicAlgebra",
    "ModuleAlgebraAction",
    "ActionFamily",
    "ClassificationReport",
    "Poly",
    "action_of",
    "verify_action",
    "is_inner_faithful",
    "classify_actions",
    "extend_to_double",
]


# -- small multivariate polynomials over a cyclotomic field -------------------


class Poly:
    """Polynomial in named unknowns; keys are sorted ((var, exp), ...)."""

    __slots__ = ("conductor", "terms")

    def __init__(self, conductor, terms):
        self.conductor = conductor
        self.terms = terms

    @staticmethod
    def const(c):
        if c.is_zero():
            return Poly(c.conductor, {})
        return Poly(c.conductor, {(): c})

    @staticmethod
    def var(name, conductor):
        return Poly(conductor, {((name, 1),): CycloNum.one(conductor)})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(k == () for k in self.terms)

    def constant_value(self):
        return self.terms.get((), CycloNum.zero(self.conductor))

    def variables(self):
        out = set()
        for key in self.terms:
            for v, _ in key:
                out.add(v)
        return out

    def __add__(self, other):
        if isinstance(other, CycloNum):
            other = Poly.const(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            cur = out.get(k)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return Poly(self.conductor, out)

    def __sub__(self, other):
        if isinstance(other, CycloNum):
            other = Poly.const(other)
        return self + (-other)

    def __neg__(self):
        return Poly(self.conductor, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, CycloNum):
            if other.is_zero():
                return Poly(self.conductor, {})
            return Poly(self.conductor, {k: c * other for k, c in self.terms.items()})
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = _merge_keys(k1, k2)
                c = c1 * c2
                cur = out.get(key)
                s = c if cur is None else cur + c
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return Poly(self.conductor, out)

    def __pow__(self, e):
        assert e >= 0
        result = Poly.const(CycloNum.one(self.conductor))
        for _ in range(e):
            result = result * self
        return result

    def substitute(self, mapping):
        """mapping: var -> Poly or CycloNum."""
        if not mapping or not any(v in mapping for v in self.variables()):
            return self
        total = Poly(self.conductor, {})
        for key, c in self.terms.items():
            term = Poly.const(c)
            for v, e in key:
                rep = mapping.get(v)
                if rep is None:
                    term = term * Poly.var(v, self.conductor) ** e
                else:
                    if isinstance(rep, CycloNum):
                        rep = Poly.const(rep)
                    term = term * rep ** e
            total = total + term
        return total

    def monomial_gcd(self):
        gcd = None
        for key in self.terms:
            exps = dict(key)
            if gcd is None:
                gcd = exps
            else:
                gcd = {v: min(e, exps[v]) for v, e in gcd.items() if v in exps}
            if not gcd:
                return {}
        return gcd or {}

    def divide_by_var(self, var, e=1):
        out = {}
        for key, c in self.terms.items():
            exps = dict(key)
            assert exps.get(var, 0) >= e
            exps[var] -= e
            out[_key_of(exps)] = c
        return Poly(self.conductor, out)

    def coefficient_split(self, var):
        """Return (A, B) with self = A*var + B when degree in var is 1 and
        the coefficient A of var is constant; else None."""
        A = CycloNum.zero(self.conductor)
        B = {}
        for key, c in self.terms.items():
            exps = dict(key)
            e = exps.pop(var, 0)
            if e == 0:
                B[key] = c
            elif e == 1 and not exps:
                A = A + c
            else:
                return None
        return (A, Poly(self.conductor, B)) if not A.is_zero() else None

    def canonical(self):
        if not self.terms:
            return self
        lead = max(self.terms)
        inv = self.terms[lead].inverse()
        return Poly(self.conductor, {k: c * inv for k, c in self.terms.items()})

    def key(self):
        return tuple(sorted((k, c.coeffs) for k, c in self.terms.items()))

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            c = self.terms[key]
            mono = "*".join(
                v if e == 1 else "%s^%d" % (v, e) for v, e in key
            )
            if mono:
                parts.append("(%r)*%s" % (c, mono))
            else:
                parts.append("(%r)" % c)
        return " + ".join(parts)

    def to_json(self):
        return [
            {"monomial": [[v, e] for v, e in key], "coeff": c.to_json()}
            for key, c in sorted(self.terms.items())
        ]


def _merge_keys(k1, k2):
    exps = dict(k1)
    for v, e in k2:
        exps[v] = exps.get(v, 0) + e
    return _key_of(exps)


def _key_of(exps):
    return tuple(sorted((v, e) for v, e in exps.items() if e))


# -- the target algebra and concrete actions ----------------------------------


class CyclicAlgebra:
    """A = k[u]/(u^n - beta), basis 1, u, ..., u^(n-1)."""

    def __init__(self, n, beta=None, conductor=1):
        if beta is None:
            beta = CycloNum.one(conductor)
        if beta.is_zero():
            raise ValueError("beta must be nonzero (no nonzero nilpotents)")
        self.n = n
        self.beta = beta
        self.conductor = beta.conductor

    def mul_vectors(self, v, w):
        zero = CycloNum.zero(self.conductor)
        out = [zero] * self.n
        for p, a in enumerate(v):
            if a.is_zero():
                continue
            for r, b in enumerate(w):
                if b.is_zero():
                    continue
                s = p + r
                c = a * b
                if s >= self.n:
                    s -= self.n
                    c = c * self.beta
                out[s] = out[s] + c
        return out

    def unit_vector(self):
        one = CycloNum.one(self.conductor)
        zero = CycloNum.zero(self.conductor)
        return [one if i == 0 else zero for i in range(self.n)]


class ModuleAlgebraAction:
    """Generator action matrices on the basis 1, u, ..., u^(n-1).

    matrices[name][p] is the image vector of u^p (column-major)."""

    def __init__(self, algebra, target, matrices):
        self.algebra = algebra
        self.target = target
        self.matrices = matrices
        self._mono_cache = {}

    def matrix_of_monomial(self, mono):
        cached = self._mono_cache.get(mono)
        if cached is not None:
            return cached
        n = self.target.n
        zero = CycloNum.zero(self.target.conductor)
        one = CycloNum.one(self.target.conductor)
        cols = [[one if i == p else zero for i in range(n)] for p in range(n)]
        # left action: rightmost factor applies first
        for g in range(self.algebra.gen_count - 1, -1, -1):
            e = mono[g]
            if not e:
                continue
            M = self.matrices[self.algebra.names[g]]
            for _ in range(e):
                cols = [self._apply(M, col) for col in cols]
        self._mono_cache[mono] = cols
        return cols

    def _apply(self, M, vec):
        n = self.target.n
        zero = CycloNum.zero(self.target.conductor)
        out = [zero] * n
        for p, c in enumerate(vec):
            if c.is_zero():
                continue
            col = M[p]
            for i in range(n):
                if not col[i].is_zero():
                    out[i] = out[i] + c * col[i]
        return out

    def matrix_of(self, element):
        n = self.target.n
        zero = CycloNum.zero(self.target.conductor)
        cols = [[zero] * n for _ in range(n)]
        for mono, c in element.items():
            mc = self.matrix_of_monomial(mono)
            for p in range(n):
                for i in range(n):
                    if not mc[p][i].is_zero():
                        cols[p][i] = cols[p][i] + c * mc[p][i]
        return cols


def action_of(act, h):
    """Matrix of a HopfElement under the action (columns = images of u^p)."""
    if isinstance(h, HopfElement):
        return act.matrix_of(h.terms)
    return act.matrix_of(h)


def verify_action(act):
    """Module-algebra axioms: relations act by zero, multiplicativity on
    all basis pairs, and unitality for every generator."""
    H = act.algebra
    A = act.target
    report = CheckReport("module-algebra:%s" % H.name)
    zero = CycloNum.zero(A.conductor)

    bad = []
    for label, word, target in H.rules():
        lhs = _matrix_of_word(act, word)
        rhs = act.matrix_of(target)
        if lhs != rhs:
            bad.append(label)
    report.add("relations-act-as-zero", not bad, ", ".join(bad))

    bad = 0
    n = A.n
    for gname in H.names:
        g = H.position[gname]
        delta = H.generators[g].delta
        legs = [(act.matrix_of({m1: CycloNum.one(A.conductor)}),
                 act.matrix_of({m2: CycloNum.one(A.conductor)}), c)
                for (m1, m2), c in delta.items()]
        M = act.matrices[gname]
        for p in range(n):
            for r in range(n):
                s = p + r
                lhs = [x * (A.beta if s >= n else CycloNum.one(A.conductor)) for x in M[s % n]]
                rhs = [zero] * n
                for M1, M2, c in legs:
                    prod = A.mul_vectors(M1[p], M2[r])
                    for i in range(n):
                        if not prod[i].is_zero():
                            rhs[i] = rhs[i] + c * prod[i]
                if lhs != rhs:
                    bad += 1
    report.add("multiplicativity", bad == 0, "%d (gen,p,q) cells fail" % bad if bad else "")

    bad = []
    for gname in H.names:
        g = H.position[gname]
        col0 = act.matrices[gname][0]
        eps = H.generators[g].eps
        want = [eps] + [zero] * (n - 1)
        if col0 != want:
            bad.append(gname)
    report.add("unitality", not bad, ", ".join(bad))
    return report


def _matrix_of_word(act, word):
    """Composite matrix of an ordered generator word (leftmost acts last)."""
    H = act.algebra
    n = act.target.n
    zero = CycloNum.zero(act.target.conductor)
    one = CycloNum.one(act.target.conductor)
    cols = [[one if i == p else zero for i in range(n)] for p in range(n)]
    for g, e in reversed(word):
        name = H.names[g] if isinstance(g, int) else g
        M = act.matrices[name]
        for _ in range(e):
            cols = [act._apply(M, col) for col in cols]
    return cols


def is_inner_faithful(act):
    """Pointed-case criterion: the grouplikes act faithfully and no nonzero
    skew-primitive in any P_{g,1} acts by zero.  Returns (bool, witness)."""
    H = act.algebra
    seen = {}
    for gm in H.grouplikes():
        key = tuple(tuple(c.coeffs for c in col) for col in act.matrix_of_monomial(gm))
        if key in seen:
            witness = H.element({gm: CycloNum.one(H.conductor)}) - H.element(
                {seen[key]: CycloNum.one(H.conductor)}
            )
            return False, witness
        seen[key] = gm
    unit = H.unit_mono
    for gm in H.grouplikes():
        space = H.skew_primitive_space(gm, unit)
        if not space:
            continue
        # columns: vectorized action matrices of the basis elements
        rows = []
        width = len(space)
        n = act.target.n
        mats = [act.matrix_of(phi.terms) for phi in space]
        for p in range(n):
            for i in range(n):
                row = {}
                for j, M in enumerate(mats):
                    if not M[p][i].is_zero():
                        row[j] = M[p][i]
                if row:
                    rows.append(row)
        kernel = linalg_nullspace_sparse(rows, width, H.conductor)
        if kernel:
            vec = kernel[0]
            witness = H.zero()
            for j, c in enumerate(vec):
                if not c.is_zero():
                    witness = witness + space[j].scale(c)
            return False, witness
    return True, None


# -- classification setup ------------------------------------------------------


class ClassSetup:
    """Word-level presentation data driving the constraint generation."""

    def __init__(self, algebra, gens, delta, eps, relations, shifts, grouplike,
                 grading_gen, zeta, n):
        self.algebra = algebra
        self.gens = gens                # names incl. extension symbols
        self.delta = delta              # name -> [(CycloNum, lword, rword)]
        self.eps = eps                  # name -> CycloNum
        self.relations = relations      # [(label, [(CycloNum, word)])]
        self.shifts = shifts            # name -> int mod n
        self.grouplike = grouplike      # set of names
        self.grading_gen = grading_gen
        self.zeta = zeta
        self.n = n


def _mono_word(A, mono):
    return [(A.names[g], e) for g, e in enumerate(mono) if e]


def _grading_shift(A, zeta, n, hname):
    """k_h with g0 h = zeta^{k_h} h g0, from the pure swap rule."""
    g0 = A.position[A.action_gen]
    h = A.position[hname]
    if h == g0:
        return 0
    if g0 > h:
        rule = A.swaps[(g0, h)]
        expect = [0] * A.gen_count
        expect[h] += 1
        expect[g0] += 1
        if len(rule) != 1 or tuple(expect) not in rule:
            raise ValueError("grading swap %s*%s is not a pure scalar rule"
                             % (A.action_gen, hname))
        c = rule[tuple(expect)]
    else:
        rule = A.swaps[(h, g0)]
        expect = [0] * A.gen_count
        expect[g0] += 1
        expect[h] += 1
        if len(rule) != 1 or tuple(expect) not in rule:
            raise ValueError("grading swap %s*%s is not a pure scalar rule"
                             % (hname, A.action_gen))
        c = rule[tuple(expect)].inverse()
    for k in range(n):
        if zeta ** k == c:
            return k
    raise ValueError("commutation scalar of %s is not a power of the action root" % hname)


def class_setup(A, include_defined=True):
    """Extract the classification data from a presented algebra."""
    if A.action_gen is None or A.action_root is None:
        raise ValueError("%s has no designated grading generator" % A.name)
    zeta = A.action_root
    n = order_of(zeta)
    gens = list(A.names)
    delta = {}
    eps = {}
    shifts = {}
    grouplike = set()
    for spec in A.generators:
        name = spec.name
        words = getattr(A, "class_delta", {}).get(name)
        if words is None:
            words = [(c, _mono_word(A, m1), _mono_word(A, m2))
                     for (m1, m2), c in sorted(spec.delta.items())]
        delta[name] = words
        eps[name] = spec.eps
        shifts[name] = _grading_shift(A, zeta, n, name)
        if len(spec.delta) == 1:
            m = next(iter(spec.delta))
            gm = [0] * A.gen_count
            gm[A.position[name]] = 1
            if m == (tuple(gm), tuple(gm)):
                grouplike.add(name)
    relations = []
    for label, word, target in A.rules():
        terms = [(CycloNum.one(A.conductor), [(A.names[g], e) for g, e in word])]
        for m, c in sorted(target.items()):
            terms.append((-c, _mono_word(A, m)))
        relations.append((label, terms))
    if include_defined:
        for name, sym in sorted(A.defined_symbols.items()):
            gens.append(name)
            delta[name] = sym["delta"]
            eps[name] = sym["eps"]
            k = None
            for m, _ in sym["value"].items():
                km = sum(e * shifts[A.names[g]] for g, e in enumerate(m)) % n
                if k is None:
                    k = km
                elif k != km:
                    raise ValueError("defined symbol %s is not grading-homogeneous" % name)
            shifts[name] = k or 0
            terms = [(CycloNum.one(A.conductor), [(name, 1)])]
            for m, c in sorted(sym["value"].items()):
                terms.append((-c, _mono_word(A, m)))
            relations.append(("%s=definition" % name, terms))
    return ClassSetup(A, gens, delta, eps, relations, shifts, grouplike,
                      A.action_gen, zeta, n)


def _build_f_tables(setup, theta):
    """f[h][p] = scalar polynomial of h . u^p; triangular in p."""
    n = setup.n
    f = {}
    for h in setup.gens:
        if h in setup.grouplike:
            f[h] = [theta[h] ** p for p in range(n)]
        else:
            col = [Poly.const(setup.eps[h]), theta[h]]
            col.extend([None] * (n - 2))
            f[h] = col

    def W(word, col):
        val = None
        for g, e in reversed(word):
            for _ in range(e):
                fv = f[g][col]
                if fv is None:
                    raise RuntimeError("f[%s][%d] not yet available" % (g, col))
                val = fv if val is None else val * fv
                col = (col + setup.shifts[g]) % n
        if val is None:
            val = Poly.const(CycloNum.one(setup.zeta.conductor))
        return val

    for p in range(2, n):
        for h in setup.gens:
            if h in setup.grouplike:
                continue
            acc = Poly(setup.zeta.conductor, {})
            for c, lw, rw in setup.delta[h]:
                acc = acc + (W(lw, 1) * W(rw, p - 1)) * c
            f[h][p] = acc
    return f, W


def _generate_equations(setup, f, W):
    n = setup.n
    eqs = []
    seen = set()
    for label, terms in setup.relations:
        for p in range(n):
            buckets = {}
            for coeff, word in terms:
                k = sum(e * setup.shifts[g] for g, e in word) % n
                poly = W(word, p) * coeff
                cur = buckets.get(k)
                buckets[k] = poly if cur is None else cur + poly
            for k in sorted(buckets):
                poly = buckets[k]
                if poly.is_zero():
                    continue
                key = poly.canonical().key()
                if key not in seen:
                    seen.add(key)
                    eqs.append((label, p, poly))
    return eqs


# -- the constraint solver -------------------------------------------------------


def _univariate_coeffs(poly, v):
    deg = 0
    for key in poly.terms:
        for vv, e in key:
            if vv == v:
                deg = max(deg, e)
    zero = CycloNum.zero(poly.conductor)
    coeffs = [zero] * (deg + 1)
    for key, c in poly.terms.items():
        e = dict(key).get(v, 0)
        coeffs[e] = coeffs[e] + c
    return coeffs


def _poly_from_coeffs(coeffs, v, conductor):
    terms = {}
    for e, c in enumerate(coeffs):
        if not c.is_zero():
            terms[() if e == 0 else ((v, e),)] = c
    return Poly(conductor, terms)


def _univariate_gcd(p1, p2, v):
    """Monic gcd of two univariate polynomials over the cyclotomic field."""
    a = _univariate_coeffs(p1, v)
    b = _univariate_coeffs(p2, v)

    def trim(c):
        while c and c[-1].is_zero():
            c.pop()
        return c

    a, b = trim(list(a)), trim(list(b))
    while b:
        # a mod b
        inv = b[-1].inverse()
        r = list(a)
        for i in range(len(r) - len(b), -1, -1):
            f = r[i + len(b) - 1] * inv
            if not f.is_zero():
                for j, bc in enumerate(b):
                    r[i + j] = r[i + j] - f * bc
        a, b = b, trim(r[: len(b) - 1])
    inv = a[-1].inverse()
    return _poly_from_coeffs([c * inv for c in a], v, p1.conductor)


def _units_in_field(conductor):
    one = CycloNum.one(conductor)
    out = [one]
    z = CycloNum.root(conductor, 1)
    cur = one
    for _ in range(conductor - 1):
        cur = cur * z
        out.append(cur)
    if all(w != -one for w in out):
        out.extend([-w for w in list(out)])
    return out


class _Branch:
    __slots__ = ("eqs", "assign", "nonzero", "notes")

    def __init__(self, eqs, assign, nonzero, notes):
        self.eqs = eqs          # list of (label, p, Poly)
        self.assign = assign    # var -> Poly
        self.nonzero = nonzero  # set of vars
        self.notes = notes      # var -> annotation


def _resolve_assignments(assign, conductor):
    """Substitute assignment values into each other until stable."""
    changed = True
    rounds = 0
    while changed and rounds < 50:
        changed = False
        rounds += 1
        for v in list(assign):
            val = assign[v]
            if isinstance(val, CycloNum):
                continue
            new = val.substitute(assign)
            if new.key() != val.key():
                assign[v] = new
                changed = True
    for v in list(assign):
        val = assign[v]
        if isinstance(val, Poly) and val.is_constant():
            assign[v] = val.constant_value()
    return assign


def solve_system(equations, variables, nonzero, conductor, max_branches=4096):
    """Case-split solver; returns (families, certificates).

    families: list of (assign, free, residuals, nonzero, notes);
    certificates: list of dicts describing contradictory branches.
    """
    units = _units_in_field(conductor)
    stack = [_Branch(list(equations), {}, set(nonzero), {})]
    families = []
    certificates = []
    explored = 0
    while stack:
        if explored > max_branches:
            raise RuntimeError("case-split explosion in the classifier")
        explored += 1
        br = stack.pop()
        contradiction = None
        progressed = True
        while progressed and contradiction is None:
            progressed = False
            _resolve_assignments(br.assign, conductor)
            amap = {v: (Poly.const(val) if isinstance(val, CycloNum) else val)
                    for v, val in br.assign.items()}
            new_eqs = []
            seen = set()
            for label, p, poly in br.eqs:
                poly = poly.substitute(amap)
                if poly.is_zero():
                    continue
                if poly.is_constant():
                    contradiction = (label, p, poly)
                    break
                key = poly.canonical().key()
                if key not in seen:
                    seen.add(key)
                    new_eqs.append((label, p, poly))
            if contradiction:
                break
            br.eqs = new_eqs
            # check nonzero flags against assignments
            for v in br.nonzero:
                val = br.assign.get(v)
                if isinstance(val, CycloNum) and val.is_zero():
                    contradiction = ("nonzero(%s)" % v, None, Poly.const(val))
                    break
            if contradiction:
                break

            # several univariate equations in the same unknown combine
            # exactly into their polynomial gcd
            by_var = {}
            for idx, (_, _, poly) in enumerate(br.eqs):
                vs = poly.variables()
                if len(vs) == 1:
                    by_var.setdefault(next(iter(vs)), []).append(idx)
            reduced = False
            for v in sorted(by_var):
                idxs = by_var[v]
                if len(idxs) < 2:
                    continue
                g = br.eqs[idxs[0]][2]
                for idx in idxs[1:]:
                    g = _univariate_gcd(g, br.eqs[idx][2], v)
                label = "+".join(sorted({br.eqs[idx][0] for idx in idxs}))
                br.eqs = [e for i, e in enumerate(br.eqs) if i not in set(idxs)]
                if g.is_constant():
                    contradiction = (label, None, g)
                else:
                    br.eqs.append((label, None, g))
                reduced = True
                break
            if contradiction:
                break
            if reduced:
                progressed = True
                continue

            for idx, (label, p, poly) in enumerate(br.eqs):
                # strip known-nonzero unknowns out of every term
                gcd = poly.monomial_gcd()
                stripped = poly
                for v, e in sorted(gcd.items()):
                    if v in br.nonzero:
                        stripped = stripped.divide_by_var(v, e)
                if stripped.key() != poly.key():
                    br.eqs[idx] = (label, p, stripped)
                    progressed = True
                    break
                if poly.is_constant():
                    contradiction = (label, p, poly)
                    break
                # single monomial: some factor must vanish
                if len(poly.terms) == 1:
                    key = next(iter(poly.terms))
                    vars_here = [v for v, _ in key if v not in br.nonzero]
                    if not vars_here:
                        contradiction = (label, p, poly)
                        break
                    if len(vars_here) == 1:
                        br.assign[vars_here[0]] = CycloNum.zero(conductor)
                        del br.eqs[idx]
                        progressed = True
                        break
                    rest = br.eqs[:idx] + br.eqs[idx + 1:]
                    for j, v in enumerate(vars_here):
                        nz = set(br.nonzero)
                        nz.update(vars_here[:j])
                        asg = dict(br.assign)
                        asg[v] = CycloNum.zero(conductor)
                        stack.append(_Branch(list(rest), asg, nz, dict(br.notes)))
                    br = None
                    break
                # composite p = (monomial)*(rest): split on the factors
                loose = sorted(v for v in gcd if v not in br.nonzero)
                if loose:
                    rest_eqs = br.eqs[:idx] + br.eqs[idx + 1:]
                    quotient = poly
                    for v, e in sorted(gcd.items()):
                        quotient = quotient.divide_by_var(v, e)
                    for j, v in enumerate(loose):
                        nz = set(br.nonzero)
                        nz.update(loose[:j])
                        asg = dict(br.assign)
                        asg[v] = CycloNum.zero(conductor)
                        stack.append(_Branch(list(rest_eqs), asg, nz, dict(br.notes)))
                    nz = set(br.nonzero)
                    nz.update(loose)
                    stack.append(_Branch(
                        rest_eqs + [(label, p, quotient)], dict(br.assign), nz, dict(br.notes)
                    ))
                    br = None
                    break
                # linear in a single variable with constant coefficient
                solved = False
                for v in sorted(poly.variables()):
                    split = poly.coefficient_split(v)
                    if split is None:
                        continue
                    A, B = split
                    value = (-Poly.const(A.inverse())) * B
                    br.assign[v] = value
                    del br.eqs[idx]
                    solved = True
                    break
                if solved:
                    progressed = True
                    break
                # power equation A v^k + C with constants A, C
                if len(poly.terms) == 2:
                    keys = sorted(poly.terms, key=len)
                    if keys[0] == () and len(keys[1]) == 1:
                        (v, k), = keys[1]
                        A = poly.terms[keys[1]]
                        C = poly.terms[()]
                        target = -(C / A)
                        if order_of(target) is not None:
                            sols = [w for w in units if w ** k == target]
                            rest = [e for e in br.eqs if e is not br.eqs[idx]]
                            if not sols:
                                # no in-field root of unity solves it
                                contradiction = (label, p, poly)
                                break
                            for w in sols:
                                asg = dict(br.assign)
                                asg[v] = w
                                notes = dict(br.notes)
                                notes[v] = "enumerated root"
                                stack.append(_Branch(list(rest), asg, set(br.nonzero), notes))
                            br = None
                            break
                        # non-root constant: leave as a symbolic constraint
            if br is None:
                break
        if br is None:
            continue
        if contradiction is not None:
            label, p, poly = contradiction
            certificates.append({
                "relation": label,
                "power": p,
                "equation": repr(poly),
                "assumptions": {
                    "assigned": {v: repr(val) for v, val in sorted(br.assign.items())},
                    "nonzero": sorted(br.nonzero),
                },
            })
            continue
        _resolve_assignments(br.assign, conductor)
        free = [v for v in variables if v not in br.assign]
        residuals = sorted({(lab, poly.canonical().key()): (lab, poly.canonical())
                            for lab, p, poly in br.eqs}.values(),
                           key=lambda t: (t[0], t[1].key()))
        families.append((br.assign, free, residuals, set(br.nonzero), br.notes))
    return _dedup_families(families), certificates


def _dedup_families(families):
    out = []
    seen = set()
    for assign, free, residuals, nonzero, notes in families:
        key = (
            tuple(sorted((v, repr(val)) for v, val in assign.items())),
            tuple(sorted(free)),
            tuple(lab + ":" + repr(p) for lab, p in residuals),
        )
        if key not in seen:
            seen.add(key)
            out.append((assign, free, residuals, nonzero, notes))
    return _merge_zero_vs_nonzero(out)


def _merge_zero_vs_nonzero(families):
    """{v = 0} and {v != 0, v otherwise free} with identical remaining data
    describe one family with v unrestricted; merge them exactly."""
    changed = True
    while changed:
        changed = False
        for i, fa in enumerate(families):
            assign_a, free_a, res_a, nz_a, _ = fa
            zero_vars = [v for v, val in assign_a.items()
                         if isinstance(val, CycloNum) and val.is_zero()]
            for v in zero_vars:
                rest_a = {k: val for k, val in assign_a.items() if k != v}
                for j, fb in enumerate(families):
                    if i == j:
                        continue
                    assign_b, free_b, res_b, nz_b, notes_b = fb
                    if v not in free_b or v not in nz_b:
                        continue
                    if rest_a != assign_b:
                        continue
                    if sorted(free_a + [v]) != sorted(free_b):
                        continue
                    if [(l, p.key()) for l, p in res_a] != [(l, p.key()) for l, p in res_b]:
                        continue
                    nz_b = set(nz_b)
                    nz_b.discard(v)
                    families[j] = (assign_b, free_b, res_b, nz_b, notes_b)
                    del families[i]
                    changed = True
                    break
                if changed:
                    break
            if changed:
                break
    return families


# -- families and reports ----------------------------------------------------------


class ActionFamily:
    def __init__(self, setup, assign, free, residuals, nonzero, notes):
        self.setup = setup
        self.assign = assign          # var -> CycloNum or Poly
        self.free = free              # unknowns left free
        self.residuals = residuals    # [(label, canonical Poly)]
        self.nonzero = nonzero
        self.notes = notes
        self.shifts = {h: (1 + setup.shifts[h]) % setup.n for h in setup.gens}

    @property
    def parameter_dimension(self):
        return max(0, len(self.free) - len(self.residuals))

    def value_of(self, name):
        v = self.assign.get(name)
        return v if isinstance(v, CycloNum) else None

    def instantiate(self, assignments=None, algebra=None, target=None):
        """Concrete ModuleAlgebraAction; assignments supply free unknowns
        (and any unknowns only pinned by symbolic constraints)."""
        setup = self.setup
        algebra = algebra or setup.algebra
        target = target or CyclicAlgebra(setup.n, CycloNum.one(setup.zeta.conductor))
        values = {}
        for v, val in self.assign.items():
            values[v] = val
        if assignments:
            values.update(assignments)
        for v in self.free:
            if v not in values:
                raise ValueError("free parameter %s needs a value" % v)
        # resolve symbolic assignments against the supplied numbers
        for _ in range(len(values) + 1):
            changed = False
            for v, val in values.items():
                if isinstance(val, Poly):
                    sub = val.substitute(values)
                    if sub.is_constant():
                        values[v] = sub.constant_value()
                    else:
                        values[v] = sub
                    changed = True
            if not changed:
                break
        for v, val in values.items():
            if isinstance(val, Poly):
                raise ValueError("parameter %s is still symbolic" % v)
        theta = {setup.grading_gen: Poly.const(setup.zeta)}
        for h in setup.gens:
            if h == setup.grading_gen:
                continue
            theta[h] = Poly.const(values[h])
        f, _ = _build_f_tables(setup, theta)
        n = setup.n
        zero = CycloNum.zero(setup.zeta.conductor)
        matrices = {}
        for h in algebra.names:
            cols = []
            for p in range(n):
                vec = [zero] * n
                c = f[h][p].constant_value()
                if not c.is_zero():
                    vec[(p + setup.shifts[h]) % n] = c
                cols.append(vec)
            matrices[h] = cols
        return ModuleAlgebraAction(algebra, target, matrices)

    def solve_free(self, primary):
        """Complete a partial assignment of the free unknowns using the
        residual constraints (linear steps only); returns the full map."""
        values = dict(primary)
        pending = [poly for _, poly in self.residuals]
        for _ in range(len(pending) + len(self.free) + 1):
            progressed = False
            nxt = []
            for poly in pending:
                sub = poly.substitute(values)
                if sub.is_zero():
                    progressed = True
                    continue
                if sub.is_constant():
                    raise ValueError(
                        "supplied parameters violate the constraint %r" % poly
                    )
                solved = False
                for v in sorted(sub.variables()):
                    split = sub.coefficient_split(v)
                    if split is not None:
                        A, B = split
                        if B.is_constant():
                            values[v] = -(B.constant_value() / A)
                            solved = True
                            break
                if solved:
                    progressed = True
                else:
                    nxt.append(sub)
            pending = nxt
            if not pending or not progressed:
                break
        if pending:
            raise ValueError("constraints %s need explicit parameter values"
                             % [repr(p) for p in pending])
        missing = [v for v in self.free if v not in values]
        if missing:
            raise ValueError("free parameters %s need values" % missing)
        return values

    def to_json(self):
        values = {self.setup.grading_gen: self.setup.zeta.to_json()}
        symbolic = {}
        for v, val in sorted(self.assign.items()):
            if isinstance(val, CycloNum):
                values[v] = val.to_json()
            else:
                symbolic[v] = repr(val)
        return {
            "shifts": {h: self.shifts[h] for h in sorted(self.shifts)},
            "values": values,
            "symbolic": symbolic,
            "free": [{"name": v, "nonzero": v in self.nonzero} for v in sorted(self.free)],
            "constraints": [
                {"relation": lab, "text": repr(p), "coefficients": p.to_json()}
                for lab, p in self.residuals
            ],
            "parameter_dimension": self.parameter_dimension,
            "notes": dict(self.notes),
        }

    def __repr__(self):
        bits = []
        for h in self.setup.gens:
            if h == self.setup.grading_gen:
                bits.append("%s.u=(%r)u" % (h, self.setup.zeta))
                continue
            val = self.assign.get(h)
            e = self.shifts[h]
            tgt = "u^%d" % e if e != 1 else "u"
            if e == 0:
                tgt = "1"
            if val is None:
                bits.append("%s.u=%s*%s%s" % (h, h, tgt, " (!=0)" if h in self.nonzero else ""))
            else:
                bits.append("%s.u=(%r)%s" % (h, val, tgt))
        cons = "; ".join(repr(p) for _, p in self.residuals)
        return "<Family %s%s>" % (", ".join(bits), (" | " + cons) if cons else "")


class ClassificationReport:
    def __init__(self, kind, algebra_name, families, certificates, setup):
        self.kind = kind
        self.algebra_name = algebra_name
        self.families = families
        self.certificates = certificates
        self.setup = setup

    @property
    def count(self):
        return len(self.families)

    def to_json(self):
        # certificates are the infeasibility evidence; only meaningful
        # when no family survives
        return {
            "kind": self.kind,
            "algebra": self.algebra_name,
            "family_count": self.count,
            "families": [f.to_json() for f in self.families],
            "certificates": self.certificates if not self.families else [],
        }

    def __repr__(self):
        return "<%s of %s: %d families, %d certificates>" % (
            self.kind, self.algebra_name, self.count, len(self.certificates)
        )


# -- entry points -----------------------------------------------------------------


def classify_actions(H):
    """All inner-faithful module-algebra structures on k[u]/(u^n - 1) with
    the grading normalization g0 . u = zeta u."""
    setup = class_setup(H, include_defined=False)
    conductor = H.conductor
    variables = [h for h in setup.gens if h != setup.grading_gen]
    theta = {setup.grading_gen: Poly.const(setup.zeta)}
    for h in variables:
        theta[h] = Poly.var(h, conductor)
    f, W = _build_f_tables(setup, theta)
    eqs = _generate_equations(setup, f, W)
    # inner-faithfulness: every skew-primitive generator must act nonzero
    nonzero = {h for h in variables if setup.eps[h].is_zero()}
    raw, certs = solve_system(eqs, variables, nonzero, conductor)
    families = [ActionFamily(setup, *fam) for fam in raw]
    return ClassificationReport("classify", H.name, families, certs, setup)


def extend_to_double(H, act, double_result):
    """All extensions of a fixed inner-faithful action of H to the double."""
    ok_action = verify_action(act)
    if not ok_action.passed:
        raise ValueError("the given action fails the module-algebra axioms")
    faithful, witness = is_inner_faithful(act)
    if not faithful:
        raise ValueError("the given action is not inner-faithful (kills %r)" % witness)
    D = double_result.double
    setup = class_setup(D, include_defined=True)
    conductor = D.conductor
    n = setup.n
    # H-side generator scalars come from the fixed action
    fixed = {}
    for name in H.names:
        col = act.matrices[name][1]
        nz = [(i, c) for i, c in enumerate(col) if not c.is_zero()]
        expect = (1 + setup.shifts[name]) % n
        if len(nz) > 1 or (nz and nz[0][0] != expect):
            raise ValueError("action of %s is not grading-compatible" % name)
        fixed[name] = nz[0][1] if nz else CycloNum.zero(conductor)
    variables = [h for h in setup.gens if h not in fixed and h != setup.grading_gen]
    theta = {setup.grading_gen: Poly.const(setup.zeta)}
    for name, val in fixed.items():
        if name != setup.grading_gen:
            theta[name] = Poly.const(val)
    for h in variables:
        theta[h] = Poly.var(h, conductor)
    f, W = _build_f_tables(setup, theta)
    eqs = _generate_equations(setup, f, W)
    raw, certs = solve_system(eqs, variables, set(), conductor)
    families = []
    for assign, free, residuals, nonzero, notes in raw:
        assign = dict(assign)
        assign.update({k: v for k, v in fixed.items() if k != setup.grading_gen})
        families.append(ActionFamily(setup, assign, free, residuals, nonzero, notes))
    return ClassificationReport("extend", D.name, families, certs, setup)
