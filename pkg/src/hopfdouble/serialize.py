"""Presentation JSON: bit-exact round trip for presented Hopf algebras.

Schema:
    {"name": str, "conductor": int,
     "generators": [{"name", "bound", "power_image", "delta", "epsilon",
                     "antipode"}],
     "swaps": [{"left", "right", "image"}],
     "dimension": int,
     ... optional: "defined", "action_gen", "action_root", "params"}

Element payloads are lists of {"monomial": [exps], "coeff": cyclo};
tensor payloads use "monomial": [[exps], [exps]].  Scalars are
{"conductor": M, "coeffs": ["p/q", ...]}.
"""

from .cyclotomic import CycloNum
from .algebra import GeneratorSpec, PresentedHopfAlgebra

__all__ = ["export_presentation", "import_presentation", "SchemaError"]


class SchemaError(ValueError):
    def __init__(self, path, message):
        super().__init__("%s: %s" % (path, message))
        self.path = path


def _element_out(terms):
    return [
        {"monomial": list(m), "coeff": c.to_json()}
        for m, c in sorted(terms.items())
    ]


def _tensor_out(terms):
    return [
        {"monomial": [list(m1), list(m2)], "coeff": c.to_json()}
        for (m1, m2), c in sorted(terms.items())
    ]


def export_presentation(A):
    data = {
        "name": A.name,
        "conductor": A.conductor,
        "generators": [
            {
                "name": g.name,
                "bound": g.bound,
                "power_image": _element_out(g.power_image),
                "delta": _tensor_out(g.delta) if g.delta is not None else None,
                "epsilon": g.eps.to_json() if g.eps is not None else None,
                "antipode": _element_out(g.antipode) if g.antipode is not None else None,
            }
            for g in A.generators
        ],
        "swaps": [
            {"left": A.names[hi], "right": A.names[lo], "image": _element_out(img)}
            for (hi, lo), img in sorted(A.swaps.items())
        ],
        "dimension": A.dimension,
    }
    if A.defined_symbols:
        data["defined"] = [
            {
                "name": name,
                "value": _element_out(sym["value"]),
                "delta": [
                    {"coeff": c.to_json(), "left": list(lw), "right": list(rw)}
                    for (c, lw, rw) in sym["delta"]
                ],
                "epsilon": sym["eps"].to_json(),
            }
            for name, sym in sorted(A.defined_symbols.items())
        ]
    if A.action_gen is not None:
        data["action_gen"] = A.action_gen
        data["action_root"] = A.action_root.to_json()
    if A.params:
        data["params"] = A.params
    return data


def _coeff_in(obj, path):
    if not isinstance(obj, dict) or "conductor" not in obj or "coeffs" not in obj:
        raise SchemaError(path, "expected {conductor, coeffs} scalar")
    try:
        return CycloNum.from_json(obj)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(path, "bad scalar: %s" % exc)


def _element_in(payload, width, path):
    if not isinstance(payload, list):
        raise SchemaError(path, "expected a list of terms")
    out = {}
    for i, term in enumerate(payload):
        tp = "%s[%d]" % (path, i)
        if not isinstance(term, dict) or "monomial" not in term or "coeff" not in term:
            raise SchemaError(tp, "expected {monomial, coeff}")
        mono = term["monomial"]
        if not isinstance(mono, list) or len(mono) != width or not all(
            isinstance(e, int) and e >= 0 for e in mono
        ):
            raise SchemaError(tp + ".monomial", "expected %d nonnegative exponents" % width)
        c = _coeff_in(term["coeff"], tp + ".coeff")
        if not c.is_zero():
            out[tuple(mono)] = c
    return out


def _tensor_in(payload, width, path):
    if not isinstance(payload, list):
        raise SchemaError(path, "expected a list of tensor terms")
    out = {}
    for i, term in enumerate(payload):
        tp = "%s[%d]" % (path, i)
        mono = term.get("monomial")
        if (
            not isinstance(mono, list)
            or len(mono) != 2
            or any(not isinstance(leg, list) or len(leg) != width for leg in mono)
        ):
            raise SchemaError(tp + ".monomial", "expected a pair of exponent lists")
        c = _coeff_in(term["coeff"], tp + ".coeff")
        if not c.is_zero():
            out[(tuple(mono[0]), tuple(mono[1]))] = c
    return out


def import_presentation(data):
    for field in ("name", "conductor", "generators", "swaps", "dimension"):
        if field not in data:
            raise SchemaError(field, "missing required field")
    conductor = data["conductor"]
    if not isinstance(conductor, int) or conductor < 1:
        raise SchemaError("conductor", "must be a positive integer")
    gens_raw = data["generators"]
    if not isinstance(gens_raw, list) or not gens_raw:
        raise SchemaError("generators", "must be a nonempty list")
    width = len(gens_raw)
    specs = []
    for i, g in enumerate(gens_raw):
        path = "generators[%d]" % i
        for field in ("name", "bound"):
            if field not in g:
                raise SchemaError(path, "missing %s" % field)
        if not isinstance(g["bound"], int) or g["bound"] < 1:
            raise SchemaError(path + ".bound", "must be a positive integer")
        specs.append(
            GeneratorSpec(
                g["name"], i, g["bound"],
                power_image=_element_in(g.get("power_image", []), width, path + ".power_image"),
            )
        )
    names = {g.name: i for i, g in enumerate(specs)}
    swaps = {}
    for i, s in enumerate(data["swaps"]):
        path = "swaps[%d]" % i
        try:
            hi, lo = names[s["left"]], names[s["right"]]
        except KeyError as exc:
            raise SchemaError(path, "unknown generator %s" % exc)
        if hi <= lo:
            raise SchemaError(path, "swap must map a higher-position generator left")
        swaps[(hi, lo)] = _element_in(s["image"], width, path + ".image")
    A = PresentedHopfAlgebra(
        data["name"], conductor, specs, swaps, data["dimension"],
        action_gen=data.get("action_gen"),
        action_root=(
            _coeff_in(data["action_root"], "action_root") if "action_root" in data else None
        ),
        params=data.get("params") or {},
    )
    for i, g in enumerate(gens_raw):
        path = "generators[%d]" % i
        if g.get("delta") is not None:
            A.set_coalgebra_data(
                g["name"],
                delta_terms=_tensor_in(g["delta"], width, path + ".delta"),
                eps=_coeff_in(g["epsilon"], path + ".epsilon"),
                antipode_element=_element_in(g["antipode"], width, path + ".antipode"),
            )
    for i, sym in enumerate(data.get("defined", [])):
        path = "defined[%d]" % i
        delta = []
        for j, term in enumerate(sym["delta"]):
            tp = "%s.delta[%d]" % (path, j)
            c = _coeff_in(term["coeff"], tp + ".coeff")
            lw = [(n, e) for n, e in term["left"]]
            rw = [(n, e) for n, e in term["right"]]
            delta.append((c, lw, rw))
        A.defined_symbols[sym["name"]] = {
            "value": _element_in(sym["value"], width, path + ".value"),
            "delta": delta,
            "eps": _coeff_in(sym["epsilon"], path + ".epsilon"),
        }
    return A
