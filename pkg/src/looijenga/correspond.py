"""Checks of the log-local, local-open and log-open correspondences.

Each check computes both sides through separate engines and returns a
:class:`CheckReport` carrying the two values, the predicted factor and the
verdict.  :func:`nlog_from_open` runs the log-open relation backwards to give
all-genus log invariants where no direct log engine exists.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .catalog import get_geometry
from .errors import (CalibrationMissing, EngineUnavailable, NoClosedForm,
                     UndefinedSector, UnsupportedGeometry)
from .localgw import nloc
from .loggw import LogSeries, nlog_closed, nlog_dp3_scattering, tropical_p2_3h_q
from .qcalc import QLaurent, QRational, eval_q1, q_int
from .vertex import framed_c3_one_brane, glue_web, open_amplitude, open_dp3_closed

__all__ = ["CheckReport", "open_value", "log_open_factor", "log_local_factor",
           "nlog_value", "nlog_genus0", "nloc_from_open", "check_log_local",
           "check_log_open", "check_loc_open", "nlog_from_open", "dp3_glue_grid"]


def _render(x):
    if isinstance(x, (QLaurent, QRational)):
        return x.to_json()
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_render(y) for y in x]
    return x


@dataclass
class CheckReport:
    name: str
    geometry: str
    cls: tuple
    lhs: object
    rhs: object
    factor: object = None
    passed: bool = False
    note: str = ""
    extra: dict = field(default_factory=dict)

    def to_record(self):
        rec = {"check": self.name, "geometry": self.geometry, "class": list(self.cls),
               "lhs": _render(self.lhs), "rhs": _render(self.rhs),
               "factor": _render(self.factor), "passed": self.passed}
        if self.note:
            rec["note"] = self.note
        return rec

    def __bool__(self):
        return self.passed


def _class(entry, d):
    d = (d,) if isinstance(d, int) else tuple(int(x) for x in d)
    return d


def _is_dp3(entry):
    return entry.id.startswith("dP3")


def _single_c3_brane(entry):
    web = entry.open_web
    return len(web["vertices"]) == 1 and not web.get("edges") and len(entry.framings) == 1


# ---------------------------------------------------------------------------
# open side


def open_value(geometry, d) -> QRational:
    """Open amplitude at the image of d under the homology embedding."""
    entry = get_geometry(geometry)
    d = _class(entry, d)
    internal, windings = entry.apply_iota(d)
    if _is_dp3(entry):
        try:
            return open_dp3_closed(d)
        except UndefinedSector:
            pass
    if _single_c3_brane(entry):
        return framed_c3_one_brane(entry.framings[0], windings[0])
    return open_amplitude(entry.web(), internal, windings)


def dp3_glue_grid(d0max: int) -> dict:
    """Glued-web open amplitudes of the dP3 pair for every class with 1 <= d0 <= d0max.

    One box-truncated gluing per winding d1 covers every (d0, d2, d3) at once.
    """
    entry = get_geometry("dP3:D1+D2")
    web = entry.web()
    out = {}
    for d1 in range(1, d0max + 1):
        box = (d0max, 2 * d0max, d0max)
        series = glue_web(web, sum(box), (d1,), box=box)
        for d0 in range(max(1, d1), d0max + 1):
            for d2 in range(d0 + 1):
                for d3 in range(d0 + 1):
                    d = (d0, d1, d2, d3)
                    internal, windings = entry.apply_iota(d)
                    out[d] = series.get((internal, windings), QRational(0))
    return out


def log_open_factor(geometry, d) -> QLaurent:
    """(prod_{i<l} (-1)^(d.D_i+1) d.D_i) * (-1)^(d.D_l+1) [d.D_l]_q."""
    entry = get_geometry(geometry)
    degs = entry.degrees(_class(entry, d))
    head = prod((-1) ** (x + 1) * x for x in degs[:-1])
    return q_int(degs[-1]) * (head * (-1) ** (degs[-1] + 1))


def log_local_factor(geometry, d) -> int:
    entry = get_geometry(geometry)
    return prod((-1) ** (x + 1) * x for x in entry.degrees(_class(entry, d)))


# ---------------------------------------------------------------------------
# log side


def nlog_value(geometry, d) -> QLaurent:
    """All-genus log invariant from the log engines only (closed form, scattering or tropical)."""
    entry = get_geometry(geometry)
    d = _class(entry, d)
    if _is_dp3(entry):
        return nlog_dp3_scattering(d)
    try:
        series = nlog_closed(entry.id, d)
    except NoClosedForm as exc:
        raise EngineUnavailable(f"no log engine for {entry.id}") from exc
    if series.value is not None:
        return series.value
    if entry.nlog_closed.get("type") == "square":
        return tropical_p2_3h_q(d[0])
    raise EngineUnavailable(f"no all-genus log engine for {entry.id}")


def nlog_genus0(geometry, d) -> Fraction:
    entry = get_geometry(geometry)
    d = _class(entry, d)
    if _is_dp3(entry):
        return nlog_dp3_scattering(d).at_one()
    try:
        return nlog_closed(entry.id, d).genus0
    except NoClosedForm as exc:
        raise EngineUnavailable(f"no log engine for {entry.id}") from exc


def nlog_from_open(geometry, d) -> LogSeries:
    """All-genus log invariant defined as the log-open factor times the open amplitude."""
    entry = get_geometry(geometry)
    d = _class(entry, d)
    value = open_value(entry, d) * log_open_factor(entry, d)
    if not value.is_laurent():
        raise ArithmeticError(f"log side at {d} is not a Laurent polynomial: {value}")
    laurent = value.as_laurent()
    if not laurent.is_palindromic():
        raise ArithmeticError(f"log side at {d} is not palindromic: {laurent}")
    return LogSeries(entry.id, d, laurent, laurent.at_one())


# ---------------------------------------------------------------------------
# local side


def nloc_from_open(geometry, d) -> Fraction:
    """Genus-zero local invariant as the q -> 1 limit of the open amplitude."""
    return eval_q1(open_value(geometry, d))


def _nloc(entry, d):
    try:
        return nloc(entry, d)
    except (UnsupportedGeometry, CalibrationMissing) as exc:
        raise EngineUnavailable(f"no local engine for {entry.id}") from exc


# ---------------------------------------------------------------------------
# checks


def check_log_local(geometry, d) -> CheckReport:
    entry = get_geometry(geometry)
    d = _class(entry, d)
    lhs = nlog_genus0(entry, d)
    local = _nloc(entry, d)
    factor = log_local_factor(entry, d)
    rhs = factor * local
    return CheckReport("log-local", entry.id, d, lhs, rhs, factor, lhs == rhs,
                       extra={"nloc": local})


def check_log_open(geometry, d) -> CheckReport:
    entry = get_geometry(geometry)
    d = _class(entry, d)
    lhs = nlog_value(entry, d)
    factor = log_open_factor(entry, d)
    rhs = open_value(entry, d) * factor
    passed = rhs.is_laurent() and rhs.as_laurent() == lhs and lhs.is_palindromic()
    return CheckReport("log-open", entry.id, d, lhs, rhs, factor, passed)


def check_loc_open(geometry, d) -> CheckReport:
    entry = get_geometry(geometry)
    d = _class(entry, d)
    lhs = _nloc(entry, d)
    rhs = eval_q1(open_value(entry, d))
    return CheckReport("loc-open", entry.id, d, lhs, rhs, 1, lhs == rhs)
