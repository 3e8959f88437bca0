"""Log Gromov-Witten generating functions.

Closed forms for the catalogue entries that have one, the tropical count for
the toric boundary of the plane, the constrained q-hypergeometric sum for
the dP3 pair, and the Kontsevich recursion kept as a baseline column.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .catalog import get_geometry
from .errors import NoClosedForm
from .qcalc import ONE, ZERO, QLaurent, eval_q1, q_binomial, q_int

__all__ = ["LogSeries", "kontsevich", "nlog_closed", "tropical_p2_3h",
           "tropical_p2_3h_q", "TropicalCurve", "maximally_tangent_curves",
           "nlog_dp3_scattering"]


@dataclass(frozen=True)
class LogSeries:
    """All-genus log generating function of a class; ``value`` is None when only genus 0 is known."""

    geometry: str
    cls: tuple
    value: QLaurent | None
    genus0: Fraction

    def to_record(self):
        return {"geometry": self.geometry, "class": list(self.cls),
                "value": None if self.value is None else self.value.to_json(),
                "genus0": str(self.genus0)}


@lru_cache(maxsize=None)
def kontsevich(d: int) -> Fraction:
    """Number of rational plane curves of degree d through 3d - 1 general points."""
    if not isinstance(d, int) or d <= 0:
        raise ValueError("degree must be a positive integer")
    if d == 1:
        return Fraction(1)
    total = 0
    for a in range(1, d):
        b = d - a
        total += (kontsevich(a) * kontsevich(b) * a * a * b
                  * (b * comb(3 * d - 4, 3 * a - 2) - a * comb(3 * d - 4, 3 * a - 1)))
    return Fraction(total)


def _as_class(d):
    return (d,) if isinstance(d, int) else tuple(int(x) for x in d)


def nlog_closed(geometry: str, d) -> LogSeries:
    entry = get_geometry(geometry)
    cls = _as_class(d)
    form = entry.nlog_closed
    if not form:
        raise NoClosedForm(f"{entry.id} has no stored closed form")
    if form["type"] == "qbinomial":
        (deg,) = cls
        top = int(form["top"])
        value = q_binomial(top * deg, deg)
        return LogSeries(entry.id, cls, value, eval_q1(value))
    if form["type"] == "square":
        (deg,) = cls
        return LogSeries(entry.id, cls, None, tropical_p2_3h(deg))
    raise NoClosedForm(f"unknown closed form {form['type']!r}")


# ---------------------------------------------------------------------------
# tropical curves in the fan of the plane


_RAYS = ((-1, 0), (0, -1), (1, 1))


@dataclass(frozen=True)
class TropicalCurve:
    """Tropical curve as vertices, each with its list of (weight, primitive outgoing direction)."""

    vertices: tuple
    edges: tuple

    def balanced(self):
        return all(sum(w * u[0] for w, u in legs) == 0 and sum(w * u[1] for w, u in legs) == 0
                   for legs in self.edges)

    def vertex_multiplicities(self):
        out = []
        for legs in self.edges:
            (w1, u1), (w2, u2) = legs[0], legs[1]
            out.append(w1 * w2 * abs(u1[0] * u2[1] - u1[1] * u2[0]))
        return out


def maximally_tangent_curves(d: int, points=((-1, -1), (1, -2))):
    """Degree-d genus-0 curves with three weight-d ends along the rays, through two points.

    With three ends a trivalent tree has a single vertex; each point must lie
    on a distinct end, which pins the vertex as the intersection of two lines.
    """
    curves = []
    p1, p2 = points
    for i, u in enumerate(_RAYS):
        for j, v in enumerate(_RAYS):
            if i == j:
                continue
            vertex = _meet(p1, u, p2, v)
            if vertex is None:
                continue
            # the points must sit on the outgoing rays from the vertex
            if _ahead(vertex, u, p1) and _ahead(vertex, v, p2):
                legs = tuple((d, r) for r in _RAYS)
                curves.append(TropicalCurve((vertex,), (legs,)))
    return curves


def _meet(p, u, q, v):
    """Intersection of the lines p + R u and q + R v (None if parallel)."""
    det = u[0] * (-v[1]) - u[1] * (-v[0])
    if det == 0:
        return None
    rx, ry = q[0] - p[0], q[1] - p[1]
    t = Fraction(rx * (-v[1]) - ry * (-v[0]), det)
    return (p[0] + t * u[0], p[1] + t * u[1])


def _ahead(vertex, u, point):
    """point = vertex + t u with t > 0."""
    dx, dy = point[0] - vertex[0], point[1] - vertex[1]
    if dx * u[1] - dy * u[0] != 0:
        return False
    return dx * u[0] + dy * u[1] > 0


def tropical_p2_3h(d: int) -> Fraction:
    """Genus-0 maximally tangent log count of (P^2, toric boundary) by tropical enumeration."""
    if d <= 0:
        raise ValueError("degree must be positive")
    total = 0
    for curve in maximally_tangent_curves(d):
        if not curve.balanced():
            raise AssertionError("tropical curve is not balanced")
        mult = 1
        for m in curve.vertex_multiplicities():
            mult *= m
        total += mult
    return Fraction(total)


def tropical_p2_3h_q(d: int) -> QLaurent:
    """Same count with every vertex multiplicity m replaced by [m]_q."""
    total = ZERO
    for curve in maximally_tangent_curves(d):
        term = ONE
        for m in curve.vertex_multiplicities():
            term = term * q_int(m)
        total = total + term
    return total


# ---------------------------------------------------------------------------
# dP3 scattering sum


def _weighted_vectors(total, weights, count_left):
    """Nonnegative k with sum w_i k_i == total and sum k_i <= count_left."""
    if not weights:
        if total == 0:
            yield ()
        return
    w, rest = weights[0], weights[1:]
    for k in range(min(total // w, count_left) + 1):
        for tail in _weighted_vectors(total - w * k, rest, count_left - k):
            yield (k,) + tail


def nlog_dp3_scattering(d) -> QLaurent:
    """All-genus log invariant of (dP3, D1 + D2) at d = (d0, d1, d2, d3) from the scattering sum.

    Variables k[i, n] for i = 1..4 and n >= 1 carry weight n + [i == 1] in the
    d0 constraint, so any n > d0 forces k[i, n] = 0; the index range is cut there.
    """
    d0, d1, d2, d3 = _as_class(d)
    if min(d0, d1, d2, d3) < 0:
        raise ValueError("class components must be nonnegative")
    index = [(i, n) for n in range(1, d0 + 1) for i in range(1, 5)]
    weights = [n + (1 if i == 1 else 0) for i, n in index]
    assert all(w > d0 for n in range(d0 + 1, d0 + 3) for w in (n, n + 1)), "index cut is not forced"
    total = ZERO
    for ks in _weighted_vectors(d0, weights, d1):
        if sum(ks) != d1:
            continue
        k = dict(zip(index, ks))
        if sum(k[1, n] + k[4, n] for n in range(1, d0 + 1)) != d0 - d2:
            continue
        if sum(k[1, n] + k[3, n] for n in range(1, d0 + 1)) != d0 - d3:
            continue
        total = total + _scattering_term(k, d0, d2 + d3)
    return total


def _scattering_term(k, d0, top):
    def get(i, n):
        return k.get((i, n), 0)

    term = ONE
    for n in range(1, d0 + 1):
        upper_c = top - sum(2 * m * (get(1, n + m) + get(2, n + m)) + (2 * m - 1) * (get(3, n + m) + get(4, n + m))
                            for m in range(1, d0 + 1))
        upper_d = top - sum((2 * m + 1) * (get(1, n + m) + get(2, n + m)) + 2 * m * (get(3, n + m) + get(4, n + m))
                            for m in range(0, d0 + 1))
        for i in (1, 2):
            term = term * q_binomial(upper_c, get(i, n)) * q_binomial(upper_d, get(2 + i, n))
            if term.is_zero():
                return term
    return term
