"""Mechanical construction of the Drinfel'd double D(H).

D(H) = H*cop (x) H as a coalgebra.  The double's normal form puts all
dual-side monomials to the left of H-side monomials; the only new data
are the cross relations moving an H-generator a past a dual generator p,

    a p = <p_(1), S^{-1}(a_(3))> <p_(3), a_(1)> p_(2) a_(2),

where the p-legs are taken in the dual presentation's own
comultiplication and the a-legs in H's.  The derived presentation is
compared relation-for-relation against the printed one.
"""

from .cyclotomic import CycloNum
from .algebra import GeneratorSpec, PresentedHopfAlgebra, CheckReport
from .pairing import PairingError

__all__ = ["DoubleBuildResult", "cross_relation", "build_double", "matches_paper_presentation"]


class DoubleBuildResult:
    def __init__(self, double, cross, log=None):
        self.double = double          # PresentedHopfAlgebra, dim = dim(H)^2
        self.cross = cross            # {(H gen name, dual gen name): HopfElement}
        self.comparison_log = log or []


def cross_relation(H, Hdual, P, a_name, p_name):
    """The double relation for (H generator a)*(dual generator p), as an
    element dict over the double's monomials (dual block, then H block)."""
    k_dual = Hdual.gen_count
    k_h = H.gen_count
    zero = CycloNum.zero(H.conductor)

    a3 = H.delta_iter(H.gen(a_name), 2)       # rank-3 legs in H
    p3 = Hdual.delta_iter(Hdual.gen(p_name), 2)  # rank-3 legs in the dual
    out = {}
    for (a1, a2, a3m), ca in a3.items():
        s_inv = H.antipode_inverse(H.element({a3m: CycloNum.one(H.conductor)}))
        for (p1, p2, p3m), cp in p3.items():
            f1 = P.pair(Hdual.element({p1: CycloNum.one(H.conductor)}), s_inv)
            if f1.is_zero():
                continue
            f2 = P.pair_monomials(p3m, a1)
            if f2.is_zero():
                continue
            coeff = ca * cp * f1 * f2
            key = p2 + a2
            cur = out.get(key, zero)
            s = cur + coeff
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return out


def _map_terms(terms, offset, width):
    """Embed monomial dict into the double's exponent tuples."""
    out = {}
    for m, c in terms.items():
        key = (0,) * offset + tuple(m) + (0,) * (width - offset - len(m))
        out[key] = c
    return out


def _map_tensor(terms, offset, width, cop=False):
    out = {}
    for (m1, m2), c in terms.items():
        k1 = (0,) * offset + tuple(m1) + (0,) * (width - offset - len(m1))
        k2 = (0,) * offset + tuple(m2) + (0,) * (width - offset - len(m2))
        out[(k2, k1) if cop else (k1, k2)] = c
    return out


def build_double(H, Hdual, P):
    """Assemble D(H) from H, its dual presentation, and a perfect pairing."""
    if P.left is not Hdual or P.right is not H:
        raise PairingError("pairing sides do not match the given algebras")
    if Hdual.dimension != H.dimension or not P.is_perfect():
        raise PairingError("the double construction needs a perfect pairing")
    if set(H.names) & set(Hdual.names):
        raise ValueError("generator names of H and its dual must be disjoint")

    kd, kh = Hdual.gen_count, H.gen_count
    width = kd + kh
    specs = []
    for spec in Hdual.generators:
        s = GeneratorSpec(spec.name, len(specs), spec.bound,
                          power_image=_map_terms(spec.power_image, 0, width))
        specs.append(s)
    for spec in H.generators:
        s = GeneratorSpec(spec.name, len(specs), spec.bound,
                          power_image=_map_terms(spec.power_image, kd, width))
        specs.append(s)

    swaps = {}
    for (hi, lo), target in Hdual.swaps.items():
        swaps[(hi, lo)] = _map_terms(target, 0, width)
    for (hi, lo), target in H.swaps.items():
        swaps[(hi + kd, lo + kd)] = _map_terms(target, kd, width)
    cross = {}
    for i, a_name in enumerate(H.names):
        for j, p_name in enumerate(Hdual.names):
            target = cross_relation(H, Hdual, P, a_name, p_name)
            cross[(a_name, p_name)] = target
            swaps[(kd + i, j)] = target

    defined = {}
    for name, data in Hdual.defined_symbols.items():
        defined[name] = {
            "value": _map_terms(data["value"], 0, width),
            # dual-side coalgebra data flips to the cop structure in D(H)
            "delta": [(c, rw, lw) for (c, lw, rw) in data["delta"]],
            "eps": data["eps"],
        }
    class_delta = {
        name: [(c, rw, lw) for (c, lw, rw) in words]
        for name, words in Hdual.class_delta.items()
    }

    D = PresentedHopfAlgebra(
        "D(%s)" % H.name, H.conductor, specs, swaps, H.dimension ** 2,
        defined_symbols=defined,
        action_gen=H.action_gen, action_root=H.action_root,
        params={"family": "double", "of": H.params},
    )
    D.class_delta = class_delta
    for spec in Hdual.generators:
        D.set_coalgebra_data(
            spec.name,
            delta_terms=_map_tensor(spec.delta, 0, width, cop=True),
            eps=spec.eps,
            antipode_element=_map_terms(
                Hdual.antipode_inverse(Hdual.gen(spec.name)).terms, 0, width
            ),
        )
    for spec in H.generators:
        D.set_coalgebra_data(
            spec.name,
            delta_terms=_map_tensor(spec.delta, kd, width),
            eps=spec.eps,
            antipode_element=_map_terms(spec.antipode, kd, width),
        )
    cross_elements = {k: D.element(v) for k, v in cross.items()}
    return DoubleBuildResult(D, cross_elements)


def _expand_printed(algebra, relation_terms):
    """Normalize a printed relation (words may use defined symbols)."""
    total = algebra.zero()
    for coeff, word in relation_terms:
        factors = [algebra.unit()]
        for name, exp in word:
            if name in algebra.position:
                piece = algebra.from_word([(name, exp)])
            else:
                sym = algebra.defined_symbols[name]
                base = algebra.element(sym["value"])
                piece = algebra.unit()
                for _ in range(exp):
                    piece = piece * base
            factors.append(piece)
        prod = factors[0]
        for f in factors[1:]:
            prod = prod * f
        total = total + prod.scale(coeff)
    return total


def matches_paper_presentation(result, fixture):
    """Compare a built double against a printed presentation.

    Every printed rule must normalize to zero in the built double, every
    derived rule must normalize to zero in the printed presentation, the
    displayed extra relations (through defined symbols) must vanish in
    both, and the dimensions must agree.
    """
    D = result.double
    F = fixture.algebra
    report = CheckReport("double-vs-printed:%s" % D.name)
    report.add("dimension", D.dimension == F.dimension,
               "built=%d printed=%d" % (D.dimension, F.dimension))
    name_ok = set(D.names) == set(F.names)
    report.add("generator-names", name_ok, "" if name_ok else "generator sets differ")
    if not name_ok:
        return report

    def relation_of(algebra, word, target):
        lhs = algebra.unit()
        for g, e in word:
            lhs = lhs * algebra.from_word([(algebra.names[g] if isinstance(g, int) else g, e)])
        return lhs - algebra.element(target)

    bad = []
    for label, word, target in F.rules():
        named_word = [(F.names[g], e) for g, e in word]
        named_target = {}
        for m, c in target.items():
            named_target[m] = c
        # re-map the fixture target through generator names
        mapped = {}
        for m, c in target.items():
            exps = [0] * D.gen_count
            for g, e in enumerate(m):
                if e:
                    exps[D.position[F.names[g]]] = e
            mapped[tuple(exps)] = c
        diff = relation_of(D, named_word, mapped)
        if not diff.is_zero():
            bad.append(label)
    report.add("printed-rules-hold-in-built", not bad, ", ".join(bad))

    bad = []
    for label, word, target in D.rules():
        named_word = [(D.names[g], e) for g, e in word]
        mapped = {}
        for m, c in target.items():
            exps = [0] * F.gen_count
            for g, e in enumerate(m):
                if e:
                    exps[F.position[D.names[g]]] = e
            mapped[tuple(exps)] = c
        diff = relation_of(F, named_word, mapped)
        if not diff.is_zero():
            bad.append(label)
    report.add("derived-rules-hold-in-printed", not bad, ", ".join(bad))

    bad = []
    for label, terms in fixture.printed_relations:
        if not _expand_printed(D, terms).is_zero():
            bad.append(label + " (in built)")
        if not _expand_printed(F, terms).is_zero():
            bad.append(label + " (in printed)")
    report.add("displayed-relations", not bad, ", ".join(bad))
    result.comparison_log.append(report.to_json())
    return report
