"""JSON documents for grading specs (schema version "1").

Group elements are coordinate arrays, Q/Z values are "p/q" strings.  Unknown
keys are rejected so that typos never pass silently.
"""
import json
from fractions import Fraction

from .abelian import FinAbGroup, format_qz, parse_qz
from .bichar import BrauerClass
from .gradings import AInner, AOuter, BSpec, CSpec, DInner, DOuter

SCHEMA_VERSION = "1"

_COMMON = {"schema_version", "group", "series", "variant", "rank"}
_OPTIONAL = {"lambda", "bound", "max_dim", "shift", "name"}
_KEYS = {
    ("A", "inner"): {"brauer", "xi"},
    ("A", "outer"): {"brauer", "xi", "g0", "t", "h", "chi", "mu0"},
    ("B", "inner"): {"xi", "g0", "q"},
    ("C", "inner"): {"brauer"},
    ("D", "inner"): {"brauer", "xi", "g0", "t", "orientation"},
    ("D", "outer"): {"brauer", "xi", "g0", "t", "h"},
}
_OPTIONAL_SERIES = {"mu0", "orientation"}


class SpecParseError(ValueError):
    """A malformed document; ``where`` locates the problem."""

    def __init__(self, where, message):
        super().__init__(f"{where}: {message}")
        self.where = where
        self.message = message


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise SpecParseError(where, f"expected an integer, got {x!r}")
    return x


def _elem(G, x, where):
    if not isinstance(x, list) or len(x) != G.rank:
        raise SpecParseError(where, f"expected a list of {G.rank} integers, got {x!r}")
    out = tuple(_int(c, f"{where}[{i}]") for i, c in enumerate(x))
    if any(not 0 <= c < n for c, n in zip(out, G.orders)):
        raise SpecParseError(where, f"coordinates {list(out)} out of range for Z{list(G.orders)}")
    return out


def _elems(G, xs, where):
    if not isinstance(xs, list):
        raise SpecParseError(where, "expected a list of elements")
    return tuple(_elem(G, x, f"{where}[{i}]") for i, x in enumerate(xs))


def _qz(x, where):
    try:
        return parse_qz(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecParseError(where, str(exc)) from None


def _brauer_raw(G, doc, where="brauer"):
    b = doc[where]
    if not isinstance(b, dict) or set(b) != {"basis", "beta"}:
        raise SpecParseError(where, "expected an object with keys 'basis' and 'beta'")
    basis = _elems(G, b["basis"], f"{where}.basis")
    beta = b["beta"]
    k = len(basis)
    if not isinstance(beta, list) or len(beta) != k or any(not isinstance(r, list) or len(r) != k for r in beta):
        raise SpecParseError(f"{where}.beta", f"expected a {k}x{k} matrix")
    matrix = tuple(tuple(_qz(x, f"{where}.beta[{i}][{j}]") for j, x in enumerate(row))
                   for i, row in enumerate(beta))
    return basis, matrix


def _brauer(G, doc):
    basis, matrix = _brauer_raw(G, doc)
    if not basis:
        return BrauerClass.trivial(G)
    try:
        return BrauerClass.from_basis(G, basis, matrix)
    except ValueError as exc:
        raise SpecParseError("brauer", str(exc)) from None


def spec_from_dict(doc):
    """Build a spec from a parsed JSON object; raises SpecParseError."""
    if not isinstance(doc, dict):
        raise SpecParseError("$", "document must be a JSON object")
    missing = [k for k in sorted(_COMMON) if k not in doc]
    if missing:
        raise SpecParseError("$", f"missing keys {missing}")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise SpecParseError("schema_version", f"unsupported version {doc['schema_version']!r}")
    key = (doc["series"], doc["variant"])
    if key not in _KEYS:
        raise SpecParseError("series", f"unknown series/variant {key}")
    allowed = _COMMON | _OPTIONAL | _KEYS[key]
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise SpecParseError("$", f"unknown keys {unknown}")
    required = _KEYS[key] - _OPTIONAL_SERIES
    missing = sorted(required - set(doc))
    if missing:
        raise SpecParseError("$", f"missing keys {missing}")
    orders = doc["group"]
    if not isinstance(orders, list) or not orders:
        raise SpecParseError("group", "expected a nonempty list of cyclic orders")
    orders = [_int(n, f"group[{i}]") for i, n in enumerate(orders)]
    if any(n < 2 for n in orders):
        raise SpecParseError("group", "cyclic orders must be at least 2")
    G = FinAbGroup(orders)
    r = _int(doc["rank"], "rank")
    series, variant = key
    if series == "A" and variant == "inner":
        return AInner(G, r, _brauer(G, doc), _elems(G, doc["xi"], "xi"))
    if series == "A":
        basis, matrix = _brauer_raw(G, doc)
        mu0 = _qz(doc["mu0"], "mu0") if doc.get("mu0") is not None else None
        return AOuter(G, r, _elem(G, doc["h"], "h"), _elem(G, doc["chi"], "chi"), basis, matrix,
                      _elem(G, doc["g0"], "g0"), _elems(G, doc["xi"], "xi"),
                      _elems(G, doc["t"], "t"), mu0)
    if series == "B":
        return BSpec(G, r, _elem(G, doc["g0"], "g0"), _elems(G, doc["xi"], "xi"), _int(doc["q"], "q"))
    if series == "C":
        return CSpec(G, r, _brauer(G, doc))
    cls = _brauer(G, doc)
    g0 = _elem(G, doc["g0"], "g0")
    xi = _elems(G, doc["xi"], "xi")
    t = _elems(G, doc["t"], "t")
    if variant == "inner":
        orient = doc.get("orientation", "+")
        if orient not in ("+", "-"):
            raise SpecParseError("orientation", "must be '+' or '-'")
        return DInner(G, r, cls, g0, xi, t, orient)
    return DOuter(G, r, cls, g0, xi, t, _elem(G, doc["h"], "h"))


def _brauer_dict(cls):
    return {"basis": [list(b) for b in cls.support.basis],
            "beta": [[format_qz(x) for x in row] for row in cls.beta.matrix]}


def spec_to_dict(spec):
    G = spec.group
    out = {"schema_version": SCHEMA_VERSION, "group": list(G.orders),
           "series": spec.series, "variant": spec.variant, "rank": spec.rank}
    if isinstance(spec, AOuter):
        out["brauer"] = {"basis": [list(b) for b in spec.tbar],
                         "beta": [[format_qz(x) for x in row] for row in spec.beta]}
        out.update(h=list(spec.h), chi=list(spec.chi), g0=list(spec.g0))
        out["t"] = [list(x) for x in spec.t]
        if spec.mu0 is not None:
            out["mu0"] = format_qz(spec.mu0)
    elif hasattr(spec, "cls"):
        out["brauer"] = _brauer_dict(spec.cls)
    if hasattr(spec, "xi"):
        out["xi"] = [list(g) for g in spec.xi]
    if isinstance(spec, (BSpec, DInner, DOuter)):
        out["g0"] = list(spec.g0)
    if isinstance(spec, BSpec):
        out["q"] = spec.q
    if isinstance(spec, (DInner, DOuter)):
        out["t"] = [list(x) for x in spec.t]
    if isinstance(spec, DInner):
        out["orientation"] = spec.orientation
    if isinstance(spec, DOuter):
        out["h"] = list(spec.h)
    return out


def dumps(obj):
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads_document(text):
    """(spec, raw dict) from JSON text; raises SpecParseError with a position."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return spec_from_dict(doc), doc


def load_spec(path):
    with open(path, encoding="utf-8") as fh:
        return loads_document(fh.read())[0]


def save_spec(spec, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(spec_to_dict(spec)))


def qz_str(x):
    return format_qz(Fraction(x))
