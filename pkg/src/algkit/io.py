"""The "algkit/1" document format: parsing, parameter binding, canonical output.

Documents are JSON objects with a "schema" and a "doc" tag.  Scalars are
strings in lowest terms ("3", "-1/2").  Template documents declare
"parameters"; their scalars may then be arithmetic expressions in those
names, evaluated exactly once values are bound at parse time.
"""

from __future__ import annotations

import ast
import json
import re
from fractions import Fraction
from typing import Any, Mapping

import numpy as np

from . import __version__
from .core import BilinearProduct, LinearMap, ModuleMap, OperatorMatrix, Space, StructuralError, Vector
from .deformations import Filtration, TruncatedDeformation
from .graded import GradedPresentation
from .report import VerificationReport, fraction_str
from .reps import CocyclePair, RepresentationPresentation
from .structures import AlgebraPresentation
from .tensor import QTensor

SCHEMA = "algkit/1"

_CANONICAL = re.compile(r"^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$")

# doc type -> (required keys, optional keys)
FIELDS = {
    "algebra": ({"kind", "basis", "products"}, {"parameters", "metadata"}),
    "graded-algebra": ({"kind", "basis", "degrees", "products"}, {"parameters", "metadata", "shifts"}),
    "operator": ({"basis", "images"}, {"parameters"}),
    "module-map": ({"source", "target", "images"}, {"parameters"}),
    "representation": ({"algebra_basis", "module_basis", "mu", "rho"}, {"parameters"}),
    "cocycle": ({"algebra_basis", "module_basis", "h", "H"}, {"parameters"}),
    "deformation": ({"kind", "basis", "order", "coefficients"}, {"parameters", "metadata"}),
    "filtration": ({"basis", "levels"}, {"parameters"}),
}
COMMON = {"schema", "doc"}


class DocumentError(StructuralError):
    pass


# ---------------------------------------------------------------------------
# scalars

def parse_scalar(text: Any, params: Mapping[str, Fraction] | None = None, declared=()) -> Fraction:
    if not isinstance(text, str):
        raise DocumentError(f"scalars are strings, got {text!r}")
    s = text.strip()
    if _CANONICAL.match(s):
        if s == "-0":
            raise DocumentError("non-canonical scalar '-0'")
        if "/" in s:
            p, q = s.split("/")
            f = Fraction(int(p), int(q))
            if f.denominator != int(q) or q == "1":
                raise DocumentError(f"non-canonical scalar {text!r} (write {fraction_str(f)})")
            return f
        return Fraction(int(s))
    try:
        tree = ast.parse(s, mode="eval")
    except SyntaxError:
        raise DocumentError(f"cannot read scalar {text!r}") from None
    names = {n.id for n in ast.walk(tree) if isinstance(n, ast.Name)}
    if not names:
        raise DocumentError(f"non-canonical scalar {text!r}")
    unknown = names - set(declared)
    if unknown:
        raise DocumentError(f"scalar {text!r} uses undeclared parameters {sorted(unknown)}")
    return _eval(tree.body, params or {}, text)


def _eval(node, params, text) -> Fraction:
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        if node.id not in params:
            raise DocumentError(f"parameter {node.id!r} is not bound")
        return Fraction(params[node.id])
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, params, text)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        a, b = _eval(node.left, params, text), _eval(node.right, params, text)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            if b == 0:
                raise DocumentError(f"division by zero in {text!r} with the given parameters")
            return a / b
        if isinstance(node.op, ast.Pow) and b.denominator == 1 and b >= 0:
            return a ** int(b)
    raise DocumentError(f"unsupported expression in scalar {text!r}")


def parse_binding(text: str) -> tuple[str, Fraction]:
    """'name=p/q' from the command line; values need not be canonical there."""
    if "=" not in text:
        raise DocumentError(f"binding {text!r} is not name=value")
    name, value = text.split("=", 1)
    name = name.strip()
    if not name.isidentifier():
        raise DocumentError(f"bad parameter name {name!r}")
    try:
        return name, Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"bad parameter value {value!r}") from None


def scalar_str(c) -> str:
    return fraction_str(Fraction(c))


# ---------------------------------------------------------------------------
# parsing

class _Reader:
    def __init__(self, doc: Mapping, bindings: Mapping[str, Fraction]):
        declared = doc.get("parameters", [])
        if not isinstance(declared, list) or not all(isinstance(p, str) and p.isidentifier() for p in declared):
            raise DocumentError("parameters must be a list of names")
        missing = [p for p in declared if p not in bindings]
        if missing:
            raise DocumentError(f"unbound parameters: {', '.join(missing)}")
        self.declared = tuple(declared)
        self.params = {p: Fraction(bindings[p]) for p in declared}

    def scalar(self, text) -> Fraction:
        return parse_scalar(text, self.params, self.declared)


def _space(names, what="basis") -> Space:
    if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
        raise DocumentError(f"{what} must be a list of names")
    return Space(tuple(names))


def _entries(r: _Reader, raw, left: Space, right: Space, out: Space) -> QTensor:
    if not isinstance(raw, list):
        raise DocumentError("entries must be a list of [left, right, out, scalar]")
    arr = np.full((left.dim, right.dim, out.dim), Fraction(0), dtype=object)
    seen = set()
    for e in raw:
        if not (isinstance(e, list) and len(e) == 4):
            raise DocumentError(f"bad entry {e!r}")
        key = (left.index(e[0]), right.index(e[1]), out.index(e[2]))
        if key in seen:
            raise DocumentError(f"duplicate entry for {e[:3]}")
        seen.add(key)
        arr[key] = r.scalar(e[3])
    return QTensor.from_fractions(arr)


def _product(r, raw, space: Space, allow_symmetry=True) -> BilinearProduct:
    if not isinstance(raw, dict):
        raise DocumentError("a product is an object with entries")
    allowed = {"entries", "symmetry"} if allow_symmetry else {"entries"}
    extra = set(raw) - allowed
    if extra:
        raise DocumentError(f"unknown product fields {sorted(extra)}")
    t = _entries(r, raw.get("entries", []), space, space, space)
    return BilinearProduct(space, space, space, t, raw.get("symmetry"))


def _products(r, raw, space, slots, allow_symmetry=True):
    if not isinstance(raw, dict):
        raise DocumentError("products must be an object")
    if not raw and space.dim == 0:
        return {s: BilinearProduct.zero(space) for s in slots}
    return {s: _product(r, p, space, allow_symmetry) for s, p in raw.items()}


def _images(r, raw, source: Space, target: Space) -> QTensor:
    if not isinstance(raw, dict):
        raise DocumentError("images must be an object")
    m = np.full((target.dim, source.dim), Fraction(0), dtype=object)
    for src, img in raw.items():
        j = source.index(src)
        if not isinstance(img, dict):
            raise DocumentError(f"image of {src} must be an object")
        for tgt, c in img.items():
            m[target.index(tgt), j] = r.scalar(c)
    return QTensor.from_fractions(m)


def _vector(r, raw, space: Space) -> Vector:
    if not isinstance(raw, dict):
        raise DocumentError("a vector is an object of name: scalar")
    coords = [Fraction(0)] * space.dim
    for name, c in raw.items():
        coords[space.index(name)] = r.scalar(c)
    return Vector(space, coords)


def from_dict(doc: Mapping, bindings: Mapping[str, Fraction] | None = None):
    if not isinstance(doc, dict):
        raise DocumentError("a document is a JSON object")
    if doc.get("schema") != SCHEMA:
        raise DocumentError(f"schema must be {SCHEMA!r}, got {doc.get('schema')!r}")
    kind = doc.get("doc")
    if kind not in FIELDS:
        raise DocumentError(f"unknown document type {kind!r}")
    required, optional = FIELDS[kind]
    keys = set(doc) - COMMON
    if required - keys:
        raise DocumentError(f"{kind} document lacks {sorted(required - keys)}")
    if keys - required - optional:
        raise DocumentError(f"unknown fields {sorted(keys - required - optional)}")
    r = _Reader(doc, bindings or {})
    return _PARSERS[kind](r, doc)


def _algebra(r, d):
    S = _space(d["basis"])
    from .catalog import KINDS
    slots = KINDS[d["kind"]].slots if d["kind"] in KINDS else ()
    return AlgebraPresentation(d["kind"], S, _products(r, d["products"], S, slots), d.get("metadata", ""))


def _graded(r, d):
    S = _space(d["basis"])
    from .graded import GRADED_SLOTS
    deg = d["degrees"]
    if not isinstance(deg, dict) or set(deg) != set(S.names) or not all(type(v) is int for v in deg.values()):
        raise DocumentError("degrees must give an integer for every basis name")
    shifts = d.get("shifts", {})
    if not isinstance(shifts, dict) or not all(type(v) is int for v in shifts.values()):
        raise DocumentError("shifts must map product names to integers")
    prods = _products(r, d["products"], S, GRADED_SLOTS.get(d["kind"], ()), allow_symmetry=False)
    return GradedPresentation(d["kind"], S, tuple(deg[n] for n in S.names), prods, shifts, d.get("metadata", ""))


def _operator(r, d):
    S = _space(d["basis"])
    return OperatorMatrix(S, S, _images(r, d["images"], S, S))


def _module_map(r, d):
    src, tgt = _space(d["source"], "source"), _space(d["target"], "target")
    return ModuleMap(src, tgt, _images(r, d["images"], src, tgt))


def _representation(r, d):
    A, V = _space(d["algebra_basis"]), _space(d["module_basis"])
    mu = BilinearProduct(A, V, V, _entries(r, d["mu"], A, V, V))
    rho = BilinearProduct(A, V, V, _entries(r, d["rho"], A, V, V))
    return RepresentationPresentation(A, V, mu, rho)


def _cocycle(r, d):
    A, V = _space(d["algebra_basis"]), _space(d["module_basis"])
    return CocyclePair(BilinearProduct(A, A, V, _entries(r, d["h"], A, A, V)),
                       BilinearProduct(A, A, V, _entries(r, d["H"], A, A, V)))


def _deformation(r, d):
    S = _space(d["basis"])
    order = d["order"]
    if type(order) is not int:
        raise DocumentError("order must be an integer")
    coeffs = {}
    if not isinstance(d["coefficients"], dict):
        raise DocumentError("coefficients must be an object")
    for slot, series in d["coefficients"].items():
        if not isinstance(series, list):
            raise DocumentError("coefficients are lists of entry lists, by power of t")
        coeffs[slot] = [BilinearProduct(S, S, S, _entries(r, e, S, S, S)) for e in series]
    return TruncatedDeformation(d["kind"], S, order, coeffs, d.get("metadata", ""))


def _filtration(r, d):
    S = _space(d["basis"])
    if not isinstance(d["levels"], list):
        raise DocumentError("levels must be a list of vector lists")
    return Filtration(S, [[_vector(r, v, S) for v in level] for level in d["levels"]])


_PARSERS = {"algebra": _algebra, "graded-algebra": _graded, "operator": _operator, "module-map": _module_map,
            "representation": _representation, "cocycle": _cocycle, "deformation": _deformation,
            "filtration": _filtration}


def parse_document(data: bytes | str, bindings: Mapping[str, Fraction] | None = None):
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError:
            raise DocumentError("documents are UTF-8 text") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as e:
        raise DocumentError(f"not a JSON document: {e}") from None
    return from_dict(doc, bindings)


# ---------------------------------------------------------------------------
# serialization

def _entry_list(P: BilinearProduct) -> list:
    out = [[P.left.names[i], P.right.names[j], P.codomain.names[k], scalar_str(c)] for i, j, k, c in P.entries()]
    return sorted(out)


def _product_dict(P: BilinearProduct) -> dict:
    d = {"entries": _entry_list(P)}
    if P.symmetry:
        d["symmetry"] = P.symmetry
    return d


def _images_dict(M: LinearMap) -> dict:
    return {src: {tgt: scalar_str(c) for tgt, c in img.items()} for src, img in M.images().items() if img}


def _vector_dict(v: Vector) -> dict:
    return {n: scalar_str(c) for n, c in zip(v.space.names, v.coords) if c}


def report_dict(reports) -> dict:
    if isinstance(reports, VerificationReport):
        reports = [reports]
    items = []
    for rep in reports:
        results = []
        for res in rep.results:
            item = {"identity": res.name, "holds": res.holds}
            ce = res.counterexample
            if ce is not None:
                c = {"tuple": list(ce.names)}
                if ce.lhs is not None:
                    c["lhs"] = _vector_dict(ce.lhs)
                    c["rhs"] = _vector_dict(ce.rhs)
                if ce.power is not None:
                    c["power"] = ce.power
                if ce.note:
                    c["note"] = ce.note
                item["counterexample"] = c
            results.append(item)
        items.append({"subject": rep.subject, "status": rep.status, "results": results, "notes": list(rep.notes)})
    status = "holds" if all(i["status"] == "holds" for i in items) else "fails"
    return {"schema": SCHEMA, "doc": "report", "status": status, "reports": items, "version": __version__}


def to_dict(obj) -> dict:
    head = {"schema": SCHEMA}
    if isinstance(obj, AlgebraPresentation):
        d = {"doc": "algebra", "kind": obj.kind, "basis": list(obj.space.names),
             "products": {s: _product_dict(P) for s, P in obj.products.items()}}
        if obj.metadata:
            d["metadata"] = obj.metadata
    elif isinstance(obj, GradedPresentation):
        d = {"doc": "graded-algebra", "kind": obj.kind, "basis": list(obj.space.names),
             "degrees": dict(zip(obj.space.names, obj.degrees)), "shifts": dict(obj.shifts),
             "products": {s: {"entries": _entry_list(P)} for s, P in obj.products.items()}}
        if obj.metadata:
            d["metadata"] = obj.metadata
    elif isinstance(obj, OperatorMatrix):
        d = {"doc": "operator", "basis": list(obj.source.names), "images": _images_dict(obj)}
    elif isinstance(obj, ModuleMap):
        d = {"doc": "module-map", "source": list(obj.source.names), "target": list(obj.target.names),
             "images": _images_dict(obj)}
    elif isinstance(obj, RepresentationPresentation):
        d = {"doc": "representation", "algebra_basis": list(obj.algebra_space.names),
             "module_basis": list(obj.module_space.names), "mu": _entry_list(obj.mu), "rho": _entry_list(obj.rho)}
    elif isinstance(obj, CocyclePair):
        d = {"doc": "cocycle", "algebra_basis": list(obj.h.left.names), "module_basis": list(obj.module_space.names),
             "h": _entry_list(obj.h), "H": _entry_list(obj.H)}
    elif isinstance(obj, TruncatedDeformation):
        d = {"doc": "deformation", "kind": obj.kind, "basis": list(obj.space.names), "order": obj.order,
             "coefficients": {s: [_entry_list(P) for P in c] for s, c in obj.coefficients.items()}}
        if obj.metadata:
            d["metadata"] = obj.metadata
    elif isinstance(obj, Filtration):
        d = {"doc": "filtration", "basis": list(obj.space.names),
             "levels": [[_vector_dict(v) for v in obj.level_vectors(k)] for k in range(obj.top + 1)]}
    elif isinstance(obj, VerificationReport):
        return report_dict(obj)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    head.update(d)
    return head


def bundle_dict(items: Mapping[str, Any]) -> dict:
    return {"schema": SCHEMA, "doc": "bundle", "items": {k: to_dict(v) for k, v in items.items()}}


def table_dict(name: str, space: Space, arguments, tables: Mapping[str, QTensor]) -> dict:
    """Nonzero values of multilinear maps on basis tuples, as [names..., out, scalar] rows."""
    values = {}
    for label, t in tables.items():
        rows = []
        for idx, c in np.ndenumerate(t.to_fractions()):
            if c:
                rows.append([space.names[i] for i in idx] + [scalar_str(c)])
        values[label] = sorted(rows)
    return {"schema": SCHEMA, "doc": "table", "name": name, "basis": list(space.names),
            "arguments": list(arguments), "values": values}


def dumps(d: Mapping) -> bytes:
    return (json.dumps(d, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def serialize_document(obj) -> bytes:
    return dumps(obj if isinstance(obj, dict) else to_dict(obj))
