"""Looijenga pairs, their divisor data and the associated open-string webs.

The bundled catalogue lives in ``data/catalog.json``; an external file with
the same schema can be loaded with :func:`load_catalog`.  Parametric
families (currently P(1,1,n)) are instantiated on lookup, e.g.
``get_geometry("P(1,1,3):H+Q")``.
"""

import ast
import json
import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .errors import BasisMismatch, UnknownGeometry
from .vertex import ToricWeb

__all__ = ["CurveClass", "DivisorClass", "GeometryEntry", "pairing",
           "builtin_catalog", "load_catalog", "get_geometry", "use_catalog",
           "catalog_ids"]


@dataclass(frozen=True)
class CurveClass:
    components: tuple
    geometry: str = ""

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)


@dataclass(frozen=True)
class DivisorClass:
    name: str
    components: tuple
    nef: bool = True


@dataclass
class GeometryEntry:
    id: str
    surface: str
    basis: list
    intersection_matrix: list
    divisors: list
    anticanonical: tuple
    framings: list
    open_web: dict
    iota: dict
    nlog_closed: dict | None = None
    ifunction: dict | None = None
    divisor_form: list | None = None

    @property
    def l(self):
        return len(self.divisors)

    @property
    def rank(self):
        return len(self.basis)

    def pairing(self, d, D):
        return pairing(d, D, self.intersection_matrix)

    def degrees(self, d):
        """(d.D_1, ..., d.D_l)."""
        return tuple(self.pairing(d, D) for D in self.divisors)

    def self_intersection(self, i):
        form = self.divisor_form or self.intersection_matrix
        c = self.divisors[i].components
        return sum(c[a] * Fraction(form[a][b]) * c[b] for a in range(len(c)) for b in range(len(c)))

    def web(self) -> ToricWeb:
        return ToricWeb(self.open_web["vertices"], self.open_web.get("edges", []), self.framings)

    def iota_matrix(self):
        """Rows: internal edge degrees, then brane windings, as linear forms on d."""
        return [list(r) for r in self.iota["internal"]] + [list(r) for r in self.iota["windings"]]

    def apply_iota(self, d):
        """Open class (internal degrees, windings) of the curve class d."""
        d = _check_class(self, d)
        internal = tuple(sum(a * b for a, b in zip(row, d)) for row in self.iota["internal"])
        windings = tuple(sum(a * b for a, b in zip(row, d)) for row in self.iota["windings"])
        return internal, windings

    def divisor_sum(self):
        return tuple(sum(D.components[i] for D in self.divisors) for i in range(self.rank))

    def twists(self):
        """Divisor classes as degree functionals on curve classes (rows of M D)."""
        return [tuple(sum(self.intersection_matrix[i][j] * D.components[j] for j in range(self.rank))
                      for i in range(self.rank)) for D in self.divisors]


def _check_class(entry, d):
    if isinstance(d, int):
        d = (d,)
    d = tuple(int(x) for x in d)
    if len(d) != entry.rank:
        raise BasisMismatch(f"{entry.id} expects {entry.rank} components, got {d}")
    return d


def pairing(d, D, matrix) -> int:
    """Intersection number d . D for the bilinear form ``matrix``."""
    d = tuple(d.components if isinstance(d, CurveClass) else ((d,) if isinstance(d, int) else d))
    c = tuple(D.components if isinstance(D, DivisorClass) else D)
    if len(d) != len(matrix) or len(c) != len(matrix):
        raise BasisMismatch(f"class {d} and divisor {c} do not match a rank-{len(matrix)} basis")
    return sum(d[i] * matrix[i][j] * c[j] for i in range(len(d)) for j in range(len(c)))


# ---------------------------------------------------------------------------
# loading

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
        ast.Div: operator.truediv}


def _evaluate(expr, n):
    """Evaluate a tiny arithmetic expression in the family parameter."""
    if isinstance(expr, (int, float)):
        return expr
    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name) and node.id == "n":
            return Fraction(n)
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](walk(node.left), walk(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -walk(node.operand)
        raise ValueError(f"unsupported catalog expression {expr!r}")
    value = walk(ast.parse(str(expr), mode="eval"))
    return int(value) if value.denominator == 1 else value


def _substitute(obj, n):
    if isinstance(obj, list):
        return [_substitute(x, n) for x in obj]
    if isinstance(obj, dict):
        return {k: _substitute(v, n) for k, v in obj.items()}
    if isinstance(obj, str) and re.fullmatch(r"[0-9n+\-*/ ()]+", obj) and "n" in obj:
        return _evaluate(obj, n)
    return obj


def _entry_from_dict(data):
    divisors = [DivisorClass(D["name"], tuple(int(x) for x in D["class"]), D.get("nef", True))
                for D in data["divisors"]]
    entry = GeometryEntry(
        id=data["id"], surface=data["surface"], basis=list(data["basis"]),
        intersection_matrix=[list(r) for r in data["intersection_matrix"]],
        divisors=divisors, anticanonical=tuple(data["anticanonical"]),
        framings=[int(f) for f in data["framings"]], open_web=data["open_web"],
        iota=data["iota"], nlog_closed=data.get("nlog_closed"),
        ifunction=_ifunction_data(data.get("ifunction"), divisors, data["intersection_matrix"]),
        divisor_form=data.get("divisor_form"))
    return entry


def _ifunction_data(raw, divisors, matrix):
    if raw is None:
        return None
    out = dict(raw)
    rank = len(matrix)
    out["twists"] = [tuple(sum(matrix[i][j] * D.components[j] for j in range(rank)) for i in range(rank))
                     for D in divisors]
    return out


class Catalog:
    def __init__(self, data):
        self.version = data.get("version", 1)
        self.entries = {g["id"]: _entry_from_dict(g) for g in data.get("geometries", [])}
        self.families = {f["id"]: f for f in data.get("families", [])}

    def ids(self):
        return list(self.entries) + list(self.families)

    def get(self, geometry):
        if geometry in self.entries:
            return self.entries[geometry]
        for fid, fam in self.families.items():
            pattern = re.escape(fid).replace(re.escape(fam["parameter"]), r"(\d+)")
            match = re.fullmatch(pattern, geometry)
            if match:
                n = int(match.group(1))
                if n < 1:
                    break
                data = _substitute({k: v for k, v in fam.items() if k != "parameter"}, n)
                data["id"] = geometry
                data["surface"] = fam["surface"].replace(fam["parameter"], str(n))
                return _entry_from_dict(data)
        raise UnknownGeometry(geometry)


def load_catalog(path=None) -> Catalog:
    if path is None:
        text = resources.files("looijenga").joinpath("data/catalog.json").read_text()
    else:
        text = Path(path).read_text()
    return Catalog(json.loads(text))


_active = None


def use_catalog(path=None):
    """Make the catalogue at ``path`` (or the bundled one) the active catalogue."""
    global _active
    _active = load_catalog(path)
    return _active


def _catalog():
    global _active
    if _active is None:
        _active = load_catalog()
    return _active


def get_geometry(geometry) -> GeometryEntry:
    if isinstance(geometry, GeometryEntry):
        return geometry
    return _catalog().get(geometry)


def catalog_ids():
    return _catalog().ids()


def builtin_catalog():
    """The concrete bundled entries, with P(1,1,n) instantiated for n = 1, 2, 3."""
    cat = load_catalog()
    return list(cat.entries.values()) + [cat.get(f"P(1,1,{n}):H+Q") for n in (1, 2, 3)]
