"""Genus-zero local invariants from hypergeometric I-functions.

The degree-d summand of the I-function of a twisted toric surface is

    z e^(tH/z) e^(td) prod_twists prod_{m=0}^{d.L-1} (-lam + L + m z)
                      / prod_toric divisors prod_{m=1}^{d.D} (D + m z)

with all cohomology classes living in a truncated ring.  Writing each linear
factor as z (m + a/z) turns the summand into z^base times a power series in
w = 1/z whose coefficients are polynomials in lam and the ring generators.
Because the ring is nilpotent the series is computed exactly up to any
w-order; the coefficient of z^(1-l) is read off at the unit class.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .catalog import get_geometry
from .errors import CalibrationMissing, UnsupportedGeometry

__all__ = ["CohRing", "CohSeries", "ifunction", "raw_coefficient", "nloc",
           "fit_calibration", "Calibration"]


@dataclass(frozen=True)
class CohRing:
    """Q[lam, h_1..h_r] / (h_j^(n_j)), truncated at w-order ``order``."""

    nilpotency: tuple
    order: int

    def zero(self):
        return CohSeries(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        return CohSeries(self, {(self._unit(), 0, 0): Fraction(c)})

    def _unit(self):
        return tuple(0 for _ in self.nilpotency)

    def linear(self, const, lam, gens, w):
        """const + lam_coeff*lam + sum_j g_j h_j, with every non-constant term times w**w."""
        terms = {}
        unit = self._unit()
        if const:
            terms[(unit, 0, 0)] = Fraction(const)
        if lam:
            terms[(unit, 1, w)] = Fraction(lam)
        for j, g in enumerate(gens):
            if g:
                h = tuple(1 if i == j else 0 for i in range(len(gens)))
                terms[(h, 0, w)] = Fraction(g)
        return CohSeries(self, {k: v for k, v in terms.items() if v})


@dataclass
class CohSeries:
    """Element of the truncated ring: {(h exponents, lam power, w power): coefficient}."""

    ring: CohRing
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {k: v for k, v in self.terms.items() if v and self._alive(k)}

    def _alive(self, key):
        h, _, w = key
        return w <= self.ring.order and all(e < n for e, n in zip(h, self.ring.nilpotency))

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return CohSeries(self.ring, out)

    def __mul__(self, other):
        if not isinstance(other, CohSeries):
            return CohSeries(self.ring, {k: v * other for k, v in self.terms.items()})
        out = {}
        for (h1, l1, w1), a in self.terms.items():
            for (h2, l2, w2), b in other.terms.items():
                w = w1 + w2
                if w > self.ring.order:
                    continue
                h = tuple(x + y for x, y in zip(h1, h2))
                if any(e >= n for e, n in zip(h, self.ring.nilpotency)):
                    continue
                key = (h, l1 + l2, w)
                out[key] = out.get(key, 0) + a * b
        return CohSeries(self.ring, out)

    __rmul__ = __mul__

    def inverse(self):
        """Inverse of c + (nilpotent or w-divisible part), c a nonzero rational."""
        unit = self.ring._unit()
        c = self.terms.get((unit, 0, 0), 0)
        if not c:
            raise ZeroDivisionError("leading term vanishes")
        rest = CohSeries(self.ring, {k: -v / c for k, v in self.terms.items() if k != (unit, 0, 0)})
        # 1/(c (1 - rest)) = (1/c) sum rest^k; rest is nilpotent modulo w^(order+1)
        total = self.ring.one()
        power = self.ring.one()
        bound = self.ring.order + sum(self.ring.nilpotency) + 1
        for _ in range(bound):
            power = power * rest
            if not power.terms:
                break
            total = total + power
        return CohSeries(self.ring, {k: v / c for k, v in total.terms.items()})

    def coefficient(self, h, w):
        """Polynomial in lam (dict power -> coefficient) at the given class and w-power."""
        h = tuple(h)
        return {l: v for (hh, l, ww), v in self.terms.items() if hh == h and ww == w}


def _geometry_data(geometry):
    entry = get_geometry(geometry)
    data = entry.ifunction
    if data is None:
        raise UnsupportedGeometry(f"{geometry} has no I-function data")
    return entry, data


def ifunction(geometry: str, d, order: int | None = None):
    """Degree-d summand of the I-function at t = 0 as (z power of the prefactor, CohSeries in w = 1/z).

    The summand equals z**base * series(w = 1/z).
    """
    entry, data = _geometry_data(geometry)
    d = tuple(int(x) for x in d)
    if len(d) != len(data["nilpotency"]) or min(d) < 0:
        raise ValueError(f"degree {d} does not fit {geometry}")
    twists = data["twists"]
    divisors = data["toric_divisors"]
    degree = lambda cls: sum(a * b for a, b in zip(cls, d))
    num_z = sum(max(degree(L), 0) - 1 for L in twists if degree(L) > 0)
    den_z = sum(degree(D) for D in divisors)
    base = 1 + num_z - den_z
    if order is None:
        order = max(0, base - (1 - entry.l)) + 1
    ring = CohRing(tuple(data["nilpotency"]), order)
    series = ring.one()
    for L in twists:
        n = degree(L)
        if n <= 0:
            if n < 0:
                raise UnsupportedGeometry("negative twist degrees are not supported")
            continue
        series = series * ring.linear(0, -1, L, 0)  # m = 0 factor, no z
        for m in range(1, n):
            series = series * ring.linear(m, -1, L, 1)
    for D in divisors:
        for m in range(1, degree(D) + 1):
            series = series * ring.linear(m, 0, D, 1).inverse()
    return base, series


def raw_coefficient(geometry: str, d) -> dict:
    """Coefficient of z^(1-l) at the unit class, with the divisor-axiom factor for l > 2.

    Returned as a polynomial in lam: {power: Fraction}.
    """
    entry, data = _geometry_data(geometry)
    base, series = ifunction(geometry, d)
    k = base - (1 - entry.l)
    if k < 0:
        return {}
    unit = tuple(0 for _ in data["nilpotency"])
    poly = series.coefficient(unit, k)
    if entry.l > 2:
        # the psi^(l-2) descendant is traded for divisor insertions D_1..D_(l-1)
        factor = prod(entry.pairing(d, D) for D in entry.divisors[: entry.l - 1])
        poly = {p: c * factor for p, c in poly.items()}
    return poly


@dataclass(frozen=True)
class Calibration:
    """value = scale * lam0^p * prod_j sign_j^(d_j), applied to the raw lam-monomial."""

    lam0: Fraction
    scale: Fraction
    signs: tuple

    def apply(self, poly, d):
        if len(poly) > 1:
            raise CalibrationMissing(f"raw coefficient {poly} is not a lam-monomial")
        if not poly:
            return Fraction(0)
        (p, c), = poly.items()
        return self.scale * c * self.lam0 ** p * prod(s ** x for s, x in zip(self.signs, d))


def fit_calibration(geometry: str, targets: dict) -> Calibration:
    """Fix (lam0, scale, signs) from a few known degrees.

    ``targets`` maps degree tuples to known invariants.  The fit assumes
    lam0 = 1 and solves for the overall scale and the per-generator signs
    from ratios of target to raw value; inconsistent data raises.
    """
    ratios = {}
    for d, value in targets.items():
        poly = raw_coefficient(geometry, d)
        if len(poly) != 1:
            raise CalibrationMissing(f"raw coefficient at {d} is not a monomial")
        (_, c), = poly.items()
        ratios[tuple(d)] = Fraction(value) / c
    rank = len(next(iter(ratios)))
    signs = []
    scale = None
    for j in range(rank):
        unit = tuple(1 if i == j else 0 for i in range(rank))
        double = tuple(2 if i == j else 0 for i in range(rank))
        if unit not in ratios or double not in ratios:
            raise CalibrationMissing(f"need degrees {unit} and {double}")
        sign = ratios[double] / ratios[unit]
        if sign not in (1, -1):
            raise CalibrationMissing(f"ratio {sign} is not a sign")
        signs.append(int(sign))
        s = ratios[unit] / sign
        if scale is not None and s != scale:
            raise CalibrationMissing("scale differs between generators")
        scale = s
    cal = Calibration(Fraction(1), scale, tuple(signs))
    for d, r in ratios.items():
        if cal.scale * prod(s ** x for s, x in zip(cal.signs, d)) != r:
            raise CalibrationMissing(f"calibration inconsistent at {d}")
    return cal


def nloc(geometry: str, d) -> Fraction:
    """Genus-zero local invariant N^loc_{0,d}."""
    entry, data = _geometry_data(geometry)
    cal = data.get("calibration")
    if cal is None:
        raise CalibrationMissing(f"{geometry} has no stored calibration")
    calibration = Calibration(Fraction(cal["lam0"]), Fraction(cal["scale"]), tuple(cal["signs"]))
    d = (d,) if isinstance(d, int) else tuple(d)
    return calibration.apply(raw_coefficient(geometry, d), d)
