"""BPS-type transforms of local, open and log invariants.

All of them are Moebius inversions of a multiple-cover formula over the
common divisors k of a class: Klemm-Pandharipande (KP) from local genus-0
invariants, LMOV from open invariants (genus 0 and all genus), the log BPS
transform, and loop-quiver DT numbers defined as |LMOV| of a framed C^3 brane.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, prod

from .catalog import get_geometry
from .correspond import nloc_from_open, nlog_from_open, nlog_value, open_value
from .errors import CalibrationMissing, EngineUnavailable, MissingLowerClass, UnsupportedGeometry
from .exact import divisors, moebius
from .localgw import nloc
from .qcalc import QLaurent, QRational, eval_q1, is_integral_laurent, q_int, substitute_power
from .vertex import framed_c3_one_brane

__all__ = ["BpsRecord", "common_divisors", "kp", "kp_from_log", "lmov0", "lmov_q",
           "open_values_for", "open_series_for", "dt_loop_quiver", "log_bps"]

KINDS = ("KP", "LMOV0", "LMOVq", "DT", "LOGBPS")


@dataclass(frozen=True)
class BpsRecord:
    geometry: str
    cls: tuple
    kind: str
    value: object
    integral: bool

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown BPS kind {self.kind!r}")

    def to_record(self):
        value = self.value
        if isinstance(value, (QLaurent, QRational)):
            value = value.to_json()
        else:
            value = str(value)
        return {"geometry": self.geometry, "class": list(self.cls), "kind": self.kind,
                "value": value, "integral": self.integral}


def _as_class(d):
    return (d,) if isinstance(d, int) else tuple(int(x) for x in d)


def common_divisors(cls) -> list:
    """k >= 1 dividing every component of the class."""
    g = reduce(gcd, (abs(x) for x in cls), 0)
    if g == 0:
        raise ValueError("the zero class has no multiple-cover structure")
    return divisors(g)


def _lookup(values, cls):
    try:
        return values(cls) if callable(values) else values[cls]
    except KeyError as exc:
        raise MissingLowerClass(cls) from exc


# ---------------------------------------------------------------------------
# genus zero


def _local_value(entry, d):
    try:
        return nloc(entry, d)
    except (UnsupportedGeometry, CalibrationMissing):
        # no I-function data: the local side is the q -> 1 limit of the open one
        return nloc_from_open(entry, d)


def kp(geometry, d, l: int | None = None) -> Fraction:
    """sum_{k | d} mu(k) / k^(4-l) N^loc_{0,d/k}."""
    entry = get_geometry(geometry)
    d = _as_class(d)
    l = entry.l if l is None else l
    total = Fraction(0)
    for k in common_divisors(d):
        mu = moebius(k)
        if mu:
            total += Fraction(mu, 1) / Fraction(k) ** (4 - l) * _local_value(entry, tuple(x // k for x in d))
    return total


def kp_from_log(geometry, d) -> Fraction:
    """KP through genus-0 log invariants: sum mu(k)/k^(4-2l) prod_i (-1)^(d/k.D_i+1)/(d.D_i) N^log_{d/k}."""
    entry = get_geometry(geometry)
    d = _as_class(d)
    l = entry.l
    total = Fraction(0)
    for k in common_divisors(d):
        mu = moebius(k)
        if not mu:
            continue
        dk = tuple(x // k for x in d)
        weight = Fraction(1)
        for x, y in zip(entry.degrees(d), entry.degrees(dk)):
            weight *= Fraction((-1) ** (y + 1), x)
        total += Fraction(mu) / Fraction(k) ** (4 - 2 * l) * weight * nlog_value(entry, dk).at_one()
    return total


def lmov0(open_values, cls, l: int) -> Fraction:
    """sum_{k | cls} mu(k) / k^(4-l) O_{0, cls/k}; ``open_values`` is a mapping or a callable."""
    cls = _as_class(cls)
    total = Fraction(0)
    for k in common_divisors(cls):
        mu = moebius(k)
        if mu:
            total += Fraction(mu) / Fraction(k) ** (4 - l) * Fraction(_lookup(open_values, tuple(x // k for x in cls)))
    return total


def open_values_for(geometry):
    """Genus-0 open invariants of the geometry as a function of the surface class."""
    entry = get_geometry(geometry)
    return lambda d: eval_q1(open_value(entry, d))


def open_series_for(geometry):
    entry = get_geometry(geometry)
    return lambda d: open_value(entry, d)


# ---------------------------------------------------------------------------
# all genus


def lmov_q(open_series, cls, windings, l: int) -> tuple:
    """All-genus LMOV transform and its integrality certificate.

    prod_i gamma_i/[gamma_i] * sum_{k | cls} mu(k) / (k [k]^(3-l)) O_{cls/k}(q^k).
    The [k]^(3-l) factor restores the cover weight of the (s - 1/s)^(2-#branes)
    normalisation of the open amplitudes.
    """
    cls = _as_class(cls)
    total = QRational(0)
    for k in common_divisors(cls):
        mu = moebius(k)
        if not mu:
            continue
        term = substitute_power(QRational(_lookup(open_series, tuple(x // k for x in cls))), k)
        total = total + term * Fraction(mu, k) / QRational(q_int(k)) ** (3 - l)
    for g in windings:
        total = total * g / QRational(q_int(g))
    ok, _ = is_integral_laurent(total)
    return total, ok


def dt_loop_quiver(m: int, d: int) -> int:
    """Numerical DT invariant of the m-loop quiver in dimension d, as |LMOV| of the brane at framing m - 1."""
    if m < 1 or d < 1:
        raise ValueError("need m >= 1 and d >= 1")
    values = lambda cls: eval_q1(framed_c3_one_brane(m - 1, cls[0]))
    value = lmov0(values, (d,), 2)
    if value.denominator != 1:
        raise ArithmeticError(f"LMOV value {value} is not an integer")
    return abs(int(value))


def log_bps(geometry, d, log_values=None) -> tuple:
    """Log BPS transform of the all-genus log invariants and its integrality certificate.

    (prod_i 1/[d.D_i]) sum_{k | d} (-1)^(d/k.D + l) mu(k) / ([k]^(2-l) k^(2-l)) N_{d/k}(q^k).
    """
    entry = get_geometry(geometry)
    d = _as_class(d)
    l = entry.l
    if min(entry.degrees(d)) <= 0:
        raise ValueError(f"log BPS transform needs d.D_i > 0 for every component, got {entry.degrees(d)}")
    if log_values is None:
        log_values = lambda c: _log_series(entry, c)
    total = QRational(0)
    for k in common_divisors(d):
        mu = moebius(k)
        if not mu:
            continue
        dk = tuple(x // k for x in d)
        sign = (-1) ** (sum(entry.degrees(dk)) + l)
        term = substitute_power(QRational(_lookup(log_values, dk)), k)
        # (k [k])^(l-2) in the numerator for l > 2
        total = total + term * QRational(q_int(k)) ** (l - 2) * (Fraction(k) ** (l - 2) * sign * mu)
    total = total / QRational(prod((q_int(x) for x in entry.degrees(d)), start=QLaurent.monomial(0)))
    ok, _ = is_integral_laurent(total)
    return total, ok


def _log_series(entry, d):
    try:
        return nlog_value(entry, d)
    except EngineUnavailable:
        return nlog_from_open(entry, d).value
