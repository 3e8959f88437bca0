"""Topological vertex amplitudes and open-string generating functions.

Every amplitude is an exact :class:`QRational` in s = q^(1/2).  Schur
functions are evaluated by :func:`looijenga.partitions.schur_principal`,
whose specialisation point is x_i = q^(nu_i - i + 1/2); the vertex itself is
written at q^(-rho - nu), obtained by the substitution s -> 1/s.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import atan2, factorial

from .errors import UnbalancedWeb, UndefinedSector
from .partitions import (conjugate, contains, hooks, kappa, mn_character,
                         partitions_of, schur_principal)
from .qcalc import ONE, ZERO, QLaurent, QRational, q_binomial, q_factorial, q_int

__all__ = ["vertex_amplitude", "framed_c3_one_brane", "c3_one_brane_closed",
           "framed_c3_two_branes", "ToricWeb", "OpenSeries", "glue_web",
           "open_amplitude", "open_dp3_closed", "brane_factor", "edge_factor"]

_DS = QRational(QLaurent({1: 1, -1: -1}))  # q^(1/2) - q^(-1/2)


def _sign(n):
    return -1 if n % 2 else 1


def _q_power(half_exponent):
    """q^(e/2) as a QRational, i.e. s^e."""
    return QRational(QLaurent.monomial(half_exponent))


def _inverted(x):
    return x.substitute(-1)


@lru_cache(maxsize=None)
def vertex_amplitude(lam, mu, nu):
    """C_{lam mu nu} = q^(k(mu)/2) s_{nu^t}(q^-rho) sum_eta s_{lam^t/eta}(q^(-nu-rho)) s_{mu/eta}(q^(-nu^t-rho)).

    Cyclically symmetric in its three arguments.
    """
    lam_t, nu_t = conjugate(lam), conjugate(nu)
    total = QRational(ZERO)
    for k in range(min(sum(lam_t), sum(mu)) + 1):
        for eta in partitions_of(k):
            if contains(lam_t, eta) and contains(mu, eta):
                total = total + schur_principal(lam_t, eta, nu) * schur_principal(mu, eta, nu_t)
    total = _inverted(total) if not total.is_zero() else total
    return _q_power(kappa(mu)) * _inverted(schur_principal(nu_t)) * total


def brane_factor(framing, lam):
    """Weight of a brane partition at the given framing."""
    return _q_power(framing * kappa(lam)) * _sign((framing + 1) * sum(lam))


def edge_factor(n, lam):
    """Internal-edge weight (-1)^((n+1)|lam|) q^(n k(lam)/2), Kahler weight excluded.

    ``lam`` is the partition seen from the edge's first endpoint and ``n`` the
    framing integer of :meth:`ToricWeb.framing_integer`.
    """
    return _q_power(n * kappa(lam)) * _sign((n + 1) * sum(lam))


# ---------------------------------------------------------------------------
# C^3 with branes


def framed_c3_one_brane(f: int, d: int) -> QRational:
    """Connected winding-d amplitude of a framed brane in C^3 by the character sum."""
    if d <= 0:
        raise ValueError("winding must be positive")
    total = QRational(ZERO)
    for hook in hooks(d):
        weight = mn_character(hook, (d,)) * _sign(f * d)
        total = total + _q_power(f * kappa(hook)) * schur_principal(hook) * weight
    return total * _DS * Fraction(1, d)


def c3_one_brane_closed(f: int, d: int) -> QRational:
    """Closed form (-1)^(fd) prod_{j=1}^{d-1} [(f+1)d - j] / (d [d]!).

    For f >= 0 this is (-1)^(fd) qbinom((f+1)d, d) / (d [(f+1)d]).
    """
    if d <= 0:
        raise ValueError("winding must be positive")
    n = (f + 1) * d
    num = ONE
    for j in range(1, d):
        num = num * q_int(n - j)
    return QRational(num) / (q_factorial(d) * d) * _sign(f * d)


def framed_c3_two_branes(f1: int, f2: int, d1: int, d2: int) -> QRational:
    """Connected amplitude with one hole on each of two framed legs of C^3."""
    if d1 <= 0 or d2 <= 0:
        raise ValueError("windings must be positive")
    web = ToricWeb.c3([f1, f2])
    return open_amplitude(web, (), (d1, d2))


# ---------------------------------------------------------------------------
# webs


class ToricWeb:
    """Trivalent toric web.

    ``vertices`` is a list of three legs per vertex; a leg is a dict with
    ``dir`` (primitive integer vector pointing away from the vertex) and
    either ``edge`` (name of an internal edge), ``brane`` (index of a brane,
    with its ``framing``) or neither (a bare external leg).  ``edges`` lists
    internal edge names in the order used for degree vectors.
    """

    def __init__(self, vertices, edges, framings=None):
        self.vertices = [sorted((dict(leg) for leg in legs),
                                key=lambda leg: atan2(leg["dir"][1], leg["dir"][0]))
                         for legs in vertices]
        self.edges = list(edges)
        self.branes = sorted({leg["brane"] for legs in self.vertices for leg in legs if "brane" in leg})
        self.framings = list(framings or [0] * len(self.branes))
        self._check()
        self.edge_framing = {e: self.framing_integer(e) for e in self.edges}

    @classmethod
    def from_dict(cls, data):
        return cls(data["vertices"], data.get("edges", []), data.get("framings"))

    def to_dict(self):
        return {"vertices": self.vertices, "edges": self.edges, "framings": self.framings}

    @classmethod
    def c3(cls, framings):
        legs = [{"dir": (1, 0)}, {"dir": (-1, -1)}, {"dir": (0, 1)}]
        for i in range(len(framings)):
            legs[i]["brane"] = i
        return cls([legs], [], framings)

    def _check(self):
        ends = {}
        for v, legs in enumerate(self.vertices):
            if len(legs) != 3:
                raise UnbalancedWeb(f"vertex {v} is not trivalent")
            if any(sum(leg["dir"][i] for leg in legs) for i in (0, 1)):
                raise UnbalancedWeb(f"vertex {v} is not balanced")
            for a in range(3):
                u, w = legs[a]["dir"], legs[(a + 1) % 3]["dir"]
                if abs(u[0] * w[1] - u[1] * w[0]) != 1:
                    raise UnbalancedWeb(f"vertex {v} is not smooth")
            for slot, leg in enumerate(legs):
                if "edge" in leg:
                    ends.setdefault(leg["edge"], []).append((v, slot))
        for e in self.edges:
            pair = ends.get(e, [])
            if len(pair) != 2:
                raise UnbalancedWeb(f"edge {e} must join exactly two vertices")
            (v, a), (w, b) = pair
            if tuple(self.vertices[v][a]["dir"]) != tuple(-x for x in self.vertices[w][b]["dir"]):
                raise UnbalancedWeb(f"edge {e} has inconsistent directions")
        self.ends = {e: ends[e] for e in self.edges}

    def framing_integer(self, e):
        """det(u, w) for the legs following the edge counterclockwise at either end."""
        (v, a), (w, b) = self.ends[e]
        x = self.vertices[v][(a + 1) % 3]["dir"]
        y = self.vertices[w][(b + 1) % 3]["dir"]
        return x[0] * y[1] - x[1] * y[0]


class OpenSeries(dict):
    """Map (internal degrees, windings) -> QRational."""


def _add_to(acc, key, value):
    if value.is_zero():
        return
    old = acc.get(key)
    acc[key] = value if old is None else old + value
    if acc[key].is_zero():
        del acc[key]


def _box_keys(box):
    return product(*(range(b + 1) for b in box))


def _mul_box(a, b, box):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            if all(x <= m for x, m in zip(k, box)):
                _add_to(out, k, va * vb)
    return out


def _inverse_box(a, box):
    """Inverse of a series with constant term 1, truncated to the box."""
    zero = tuple(0 for _ in box)
    if a.get(zero) != QRational(ONE):
        raise ValueError("series must start with 1")
    out = {zero: QRational(ONE)}
    for k in sorted(_box_keys(box), key=sum):
        if k == zero:
            continue
        total = QRational(ZERO)
        for ka, va in a.items():
            if ka == zero:
                continue
            rest = tuple(x - y for x, y in zip(k, ka))
            if min(rest) >= 0 and rest in out:
                total = total + va * out[rest]
        if not total.is_zero():
            out[k] = -total
    return out


def _partitions_in_box(box):
    return product(*([p for n in range(m + 1) for p in partitions_of(n)] for m in box))


def _state_sums(web, box, brane_parts):
    """sum over internal partitions with sizes in the box, fixed brane partitions."""
    out = {}
    for parts in _partitions_in_box(box):
        edge_part = dict(zip(web.edges, parts))
        weight = QRational(ONE)
        for e, lam in edge_part.items():
            if lam:
                weight = weight * edge_factor(web.edge_framing[e], lam)
        for legs in web.vertices:
            slots = []
            for leg in legs:
                if "edge" in leg:
                    (v, a), _ = web.ends[leg["edge"]]
                    lam = edge_part[leg["edge"]]
                    first = web.vertices[v][a] is leg
                    slots.append(lam if first else conjugate(lam))
                elif "brane" in leg:
                    slots.append(brane_parts[leg["brane"]])
                else:
                    slots.append(())
            weight = weight * vertex_amplitude(*slots)
            if weight.is_zero():
                break
        _add_to(out, tuple(sum(p) for p in parts), weight)
    return out


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def _connected_sector(web, box, windings):
    """Connected one-hole-per-brane series in the internal degrees."""
    z0 = _state_sums(web, box, {b: () for b in web.branes})
    inv = _inverse_box(z0, box)
    moments = {}
    for r in range(1, len(web.branes) + 1):
        for subset in combinations(web.branes, r):
            acc = {}
            for reps in product(*(hooks(windings[b]) for b in subset)):
                coeff = Fraction(1)
                parts = {b: () for b in web.branes}
                for b, rep in zip(subset, reps):
                    coeff *= mn_character(rep, (windings[b],))
                    parts[b] = rep
                weight = QRational(ONE)
                for b, rep in zip(subset, reps):
                    weight = weight * brane_factor(web.framings[b], rep)
                for k, v in _state_sums(web, box, parts).items():
                    _add_to(acc, k, v * weight * coeff)
            for b in subset:
                acc = {k: v * Fraction(1, windings[b]) for k, v in acc.items()}
            moments[subset] = _mul_box(acc, inv, box)
    result = {}
    for blocks in _set_partitions(list(web.branes)):
        term = {tuple(0 for _ in box): QRational(ONE)}
        for block in blocks:
            term = _mul_box(term, moments[tuple(sorted(block))], box)
        c = _sign(len(blocks) - 1) * factorial(len(blocks) - 1)
        for k, v in term.items():
            _add_to(result, k, v * c)
    return result


def open_amplitude(web: ToricWeb, degrees, windings) -> QRational:
    """All-genus open amplitude at internal degrees and brane windings."""
    degrees, windings = tuple(degrees), tuple(windings)
    if len(degrees) != len(web.edges) or len(windings) != len(web.branes):
        raise ValueError("class does not match the web")
    if any(w <= 0 for w in windings):
        raise ValueError("windings must be positive")
    series = _connected_sector(web, degrees, windings)
    value = series.get(degrees, QRational(ZERO))
    return value * _DS ** (2 - len(web.branes))


def glue_web(web: ToricWeb, cutoff: int, windings, box=None) -> OpenSeries:
    """Open amplitudes for all internal degrees of total size <= cutoff.

    ``box`` optionally bounds each internal degree separately, which keeps
    the partition sums small when only a slab of classes is wanted.
    """
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    windings = tuple(windings)
    box = tuple(min(cutoff, b) for b in box) if box is not None else tuple(cutoff for _ in web.edges)
    series = _connected_sector(web, box, windings)
    norm = _DS ** (2 - len(web.branes))
    out = OpenSeries()
    for k, v in series.items():
        if sum(k) <= cutoff:
            out[(k, windings)] = v * norm
    return out


def open_dp3_closed(d) -> QRational:
    """Closed q-hypergeometric product for the dP3 open amplitude at class (d0, d1, d2, d3)."""
    d0, d1, d2, d3 = (int(x) for x in d)
    if min(d) < 0:
        raise ValueError("class components must be nonnegative")
    if d0 == 0 or d1 + d2 + d3 == d0 or d1 == 0:
        raise UndefinedSector(f"closed form undefined at {tuple(d)}")
    pref = QRational(q_int(d1)) / (q_int(d0) * q_int(d1 + d2 + d3 - d0) * d1)
    factors = (q_binomial(d3, d0 - d1) * q_binomial(d3, d0 - d2)
               * q_binomial(d0, d3) * q_binomial(d1 + d2 + d3 - d0, d3))
    return pref * factors * _sign(d1 + d2 + d3)
