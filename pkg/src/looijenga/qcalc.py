"""Symmetric q-calculus in the variable s = q^(1/2).

Two value types live here.

``QLaurent``
    A Laurent polynomial in s with rational coefficients.  Internally the
    coefficients are integers over one common positive denominator, which lets
    products go through a single big-integer multiplication.

``QRational``
    A ratio ``num / prod_m Phi_m(q)^e_m`` whose denominator is a product of
    cyclotomic polynomials in q = s^2.  Every denominator met in this package
    (q-integers, q-factorials, Schur specialisations, vertex sums) is of this
    shape, and restricting to it gives a canonical reduced form without
    general polynomial gcds: reduction only ever tries the cyclotomic factors
    already present in the denominator.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, factorial
import cmath

from .exact import as_rational, divisors, rational_to_str
from .errors import NotCyclotomic, NotSymmetric, PoleAtOne

__all__ = ["QLaurent", "QRational", "q_int", "q_factorial", "q_binomial",
           "substitute_power", "eval_q1", "genus_expansion",
           "is_integral_laurent", "cyclotomic", "S", "ONE", "ZERO"]


# ---------------------------------------------------------------------------
# integer polynomial kernels (coefficient lists, lowest degree first)

_KRONECKER_MIN = 20


def _mul_lists(a, b):
    la, lb = len(a), len(b)
    if not la or not lb:
        return []
    if la < _KRONECKER_MIN or lb < _KRONECKER_MIN:
        out = [0] * (la + lb - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    # Kronecker substitution: pack each list into one big integer
    bound = max(abs(x) for x in a) * max(abs(y) for y in b) * min(la, lb)
    width = bound.bit_length() + 2
    pa = 0
    for c in reversed(a):
        pa = (pa << width) + c
    pb = 0
    for c in reversed(b):
        pb = (pb << width) + c
    prod = pa * pb
    mask = (1 << width) - 1
    half = 1 << (width - 1)
    full = 1 << width
    out = []
    for _ in range(la + lb - 1):
        r = prod & mask
        if r >= half:
            r -= full
        out.append(r)
        prod = (prod - r) >> width
    return out


def _divmod_monic(a, b):
    """Divide integer list ``a`` by ``b`` whose leading coefficient is +-1."""
    lead = b[-1]
    rem = list(a)
    db = len(b) - 1
    if len(rem) <= db:
        return [], rem
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            c = c * lead  # lead is +-1, so this is c / lead
            quot[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] -= c * b[j]
    return quot, rem[:db]


def _pack(a, width):
    x = 0
    for c in reversed(a):
        x = (x << width) + c
    return x


def _unpack(x, width, n):
    mask = (1 << width) - 1
    half = 1 << (width - 1)
    full = 1 << width
    out = []
    for _ in range(n):
        r = x & mask
        if r >= half:
            r -= full
        out.append(r)
        x = (x - r) >> width
    return out if x == 0 else None


def _exact_div_lists(a, b):
    """Integer quotient a/b if b divides a in Z[x], else None."""
    if len(b) == 1:
        d = b[0]
        if any(c % d for c in a):
            return None
        return [c // d for c in a]
    if len(a) < len(b):
        return None
    n = len(a) - len(b) + 1
    # Mignotte-type bound on quotient coefficients, with slack
    width = max(abs(c) for c in a).bit_length() + len(a) + n.bit_length() + 8
    big_a, big_b = _pack(a, width), _pack(b, width)
    quo, rem = divmod(big_a, big_b)
    if rem:
        return None
    out = _unpack(quo, width, n)
    if out is None or _mul_lists(out, b) != list(a):
        return None
    return out


@lru_cache(maxsize=None)
def cyclotomic(m):
    """Coefficients of the m-th cyclotomic polynomial in q."""
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m)[:-1]:
        poly, rem = _divmod_monic(poly, list(cyclotomic(d)))
        assert not any(rem)
    return tuple(poly)


@lru_cache(maxsize=None)
def _cyclotomic_in_s(m):
    out = []
    for c in cyclotomic(m):
        out.extend((c, 0))
    return tuple(out[:-1])


# ---------------------------------------------------------------------------
# Laurent polynomials


class QLaurent:
    """Laurent polynomial sum_e c_e s^e with rational c_e; s = q^(1/2)."""

    __slots__ = ("lo", "nums", "den", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = {0: coeffs}
        items = {int(e): as_rational(c) for e, c in coeffs.items() if c != 0}
        if not items:
            self._set(0, [], 1)
            return
        den = 1
        for c in items.values():
            den = den * c.denominator // gcd(den, c.denominator)
        lo = min(items)
        hi = max(items)
        nums = [0] * (hi - lo + 1)
        for e, c in items.items():
            nums[e - lo] = c.numerator * (den // c.denominator)
        self._set(lo, nums, den)

    def _set(self, lo, nums, den):
        # strip zeros and reduce content against den
        i = 0
        while i < len(nums) and nums[i] == 0:
            i += 1
        j = len(nums)
        while j > i and nums[j - 1] == 0:
            j -= 1
        nums = nums[i:j]
        if not nums:
            lo, den = 0, 1
        else:
            lo += i
            if den < 0:
                den = -den
                nums = [-c for c in nums]
            g = den
            for c in nums:
                g = gcd(g, c)
                if g == 1:
                    break
            if g > 1:
                nums = [c // g for c in nums]
                den //= g
        self.lo = lo
        self.nums = tuple(nums)
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, lo, nums, den=1):
        obj = cls.__new__(cls)
        obj._set(lo, list(nums), den)
        return obj

    @classmethod
    def monomial(cls, e, c=1):
        c = as_rational(c)
        return cls._raw(e, [c.numerator], c.denominator)

    # -- inspection --------------------------------------------------------
    def coeffs(self):
        """Dictionary exponent-of-s -> Fraction (zero coefficients omitted)."""
        return {self.lo + i: Fraction(c, self.den)
                for i, c in enumerate(self.nums) if c}

    def items(self):
        return sorted(self.coeffs().items())

    def __getitem__(self, e):
        i = e - self.lo
        if 0 <= i < len(self.nums):
            return Fraction(self.nums[i], self.den)
        return Fraction(0)

    @property
    def hi(self):
        return self.lo + len(self.nums) - 1

    def is_zero(self):
        return not self.nums

    def is_constant(self):
        return not self.nums or (len(self.nums) == 1 and self.lo == 0)

    def constant(self):
        return self[0]

    def is_palindromic(self):
        return self == self.substitute(-1)

    def has_integer_coefficients(self):
        return self.den == 1

    def only_even_exponents(self):
        return all(c == 0 for i, c in enumerate(self.nums) if (self.lo + i) % 2)

    def at_one(self):
        return Fraction(sum(self.nums), self.den)

    def evaluate(self, s):
        """Exact value at a rational s."""
        s = as_rational(s)
        return sum((c * s ** e for e, c in self.coeffs().items()), Fraction(0))

    # -- arithmetic --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QLaurent):
            return (self.lo, self.nums, self.den) == (other.lo, other.nums, other.den)
        if isinstance(other, (int, Fraction)):
            return self == QLaurent(other)
        if isinstance(other, QRational):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.lo, self.nums, self.den))
        return self._hash

    def __neg__(self):
        return QLaurent._raw(self.lo, [-c for c in self.nums], self.den)

    def __pos__(self):
        return self

    def _coerce(self, other):
        if isinstance(other, QLaurent):
            return other
        if isinstance(other, (int, Fraction)):
            return QLaurent(other)
        return None

    def __add__(self, other):
        if isinstance(other, QRational):
            return NotImplemented
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.nums:
            return self
        if not self.nums:
            return other
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        den = self.den * other.den // gcd(self.den, other.den)
        fa, fb = den // self.den, den // other.den
        out = [0] * (hi - lo + 1)
        off = self.lo - lo
        for i, c in enumerate(self.nums):
            out[off + i] += c * fa
        off = other.lo - lo
        for i, c in enumerate(other.nums):
            out[off + i] += c * fb
        return QLaurent._raw(lo, out, den)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, QRational):
            return NotImplemented
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, QRational):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            other = as_rational(other)
            return QLaurent._raw(self.lo, [c * other.numerator for c in self.nums],
                                 self.den * other.denominator)
        if not isinstance(other, QLaurent):
            return NotImplemented
        if not self.nums or not other.nums:
            return ZERO
        return QLaurent._raw(self.lo + other.lo, _mul_lists(self.nums, other.nums),
                             self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("QLaurent powers must be nonnegative integers")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = as_rational(other)
            if other == 0:
                raise ZeroDivisionError("division of a QLaurent by zero")
            return self * (1 / other)
        return QRational(self) / other

    def __rtruediv__(self, other):
        return QRational(QLaurent(as_rational(other))) / self

    def shift(self, k):
        """Multiply by s^k."""
        return QLaurent._raw(self.lo + k, self.nums, self.den) if self.nums else self

    def substitute(self, k):
        """s -> s^k for a nonzero integer k (k = -1 is the bar involution)."""
        if k == 0:
            raise ValueError("substitution exponent must be nonzero")
        if not self.nums:
            return self
        if k > 0:
            out = [0] * (k * (len(self.nums) - 1) + 1)
            for i, c in enumerate(self.nums):
                out[k * i] = c
            return QLaurent._raw(k * self.lo, out, self.den)
        rev = self.substitute(-k)
        return QLaurent._raw(-rev.hi, rev.nums[::-1], rev.den)

    def exact_div(self, other):
        """Quotient self/other, which must be a Laurent polynomial."""
        if not other.nums:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self.nums:
            return ZERO
        quot = _exact_div_lists(self.nums, other.nums)
        if quot is not None:
            return QLaurent._raw(self.lo - other.lo, quot, self.den).__mul__(Fraction(other.den))
        lead = Fraction(other.nums[-1], other.den)
        b = [Fraction(c, other.den) for c in other.nums]
        rem = [Fraction(c, self.den) for c in self.nums]
        db = len(b) - 1
        if len(rem) <= db:
            raise ArithmeticError("Laurent division is not exact")
        quot = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                c = c / lead
                quot[i - db] = c
                for j in range(db + 1):
                    rem[i - db + j] -= c * b[j]
        if any(rem[:db]):
            raise ArithmeticError("Laurent division is not exact")
        return QLaurent({self.lo - other.lo + i: c for i, c in enumerate(quot)})

    def _div_cyclotomic(self, m):
        """Return self / Phi_m(s^2) if exact, else None."""
        quot, rem = _divmod_monic(list(self.nums), list(_cyclotomic_in_s(m)))
        if any(rem) or not quot:
            return None
        return QLaurent._raw(self.lo, quot, self.den)

    def _vanishes_near(self, z):
        acc = 0j
        scale = 0.0
        for i, c in enumerate(self.nums):
            if c:
                acc += c * z ** (self.lo + i)
                scale += abs(c)
        return abs(acc) <= 1e-8 * scale

    # -- presentation -----------------------------------------------------
    def to_json(self):
        return [[e, rational_to_str(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, data):
        return cls({int(e): as_rational(c) for e, c in data})

    def __repr__(self):
        if not self.nums:
            return "QLaurent(0)"
        return f"QLaurent({self})"

    def __str__(self):
        if not self.nums:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs().items(), reverse=True):
            mon = "" if e == 0 else (f"s^{e}" if e != 1 else "s")
            if mon and c == 1:
                parts.append(mon)
            elif mon and c == -1:
                parts.append("-" + mon)
            else:
                parts.append(rational_to_str(c) + ("*" + mon if mon else ""))
        return " + ".join(parts).replace("+ -", "- ")


ZERO = QLaurent()
ONE = QLaurent(1)
S = QLaurent.monomial(1)


# ---------------------------------------------------------------------------
# rational functions with cyclotomic denominators


def _cyc_dict(items):
    return {m: e for m, e in items if e}


def _cyc_key(d):
    return tuple(sorted((m, e) for m, e in d.items() if e))


def _phi_power_product(d):
    out = ONE
    for m, e in sorted(d.items()):
        if e:
            out = out * QLaurent._raw(0, _cyclotomic_in_s(m)) ** e
    return out


def factor_cyclotomic(p):
    """Write p = c * s^a * prod Phi_m(s^2)^e; return (c * s^a, {m: e}).

    Raises NotCyclotomic if p has any other factor.
    """
    if p.is_zero():
        raise ZeroDivisionError("cannot factor the zero polynomial")
    rest = QLaurent._raw(0, p.nums, p.den)
    found = {}
    degree = len(rest.nums) - 1
    # phi(m) >= sqrt(m/2), so no index beyond degree^2/2 can contribute
    limit = degree * degree // 2 + 2
    m = 0
    while degree > 0 and m < limit:
        m += 1
        if 2 * _totient(m) > degree:
            continue
        z1 = cmath.exp(1j * cmath.pi / m)
        if not rest._vanishes_near(z1):
            continue
        if m % 2 and not rest._vanishes_near(z1 * z1):
            continue
        while True:
            q = rest._div_cyclotomic(m)
            if q is None:
                break
            found[m] = found.get(m, 0) + 1
            rest = q
        degree = len(rest.nums) - 1
    if len(rest.nums) != 1:
        raise NotCyclotomic(f"{p} is not a product of cyclotomic factors in q")
    unit = QLaurent._raw(p.lo + rest.lo, rest.nums, rest.den)
    return unit, found


@lru_cache(maxsize=None)
def _totient(n):
    result = n
    p = 2
    x = n
    while p * p <= x:
        if x % p == 0:
            while x % p == 0:
                x //= p
            result -= result // p
        p += 1
    if x > 1:
        result -= result // x
    return result


class QRational:
    """Rational function num / prod Phi_m(q)^e_m in canonical reduced form."""

    __slots__ = ("num", "cyc", "_hash")

    def __init__(self, num, den=None):
        if isinstance(num, QRational):
            if den is not None:
                raise TypeError("use division to combine QRationals")
            self.num, self.cyc, self._hash = num.num, num.cyc, None
            return
        if not isinstance(num, QLaurent):
            num = QLaurent(as_rational(num))
        if den is None:
            self._init(num, {})
            return
        if not isinstance(den, QLaurent):
            den = QLaurent(as_rational(den))
        unit, found = factor_cyclotomic(den)
        # divide num by the monomial unit c*s^a
        c = unit.nums[0]
        num = QLaurent._raw(num.lo - unit.lo, [x * unit.den for x in num.nums], num.den * c)
        self._init(num, found)

    def _init(self, num, cyc):
        cyc = {m: e for m, e in cyc.items() if e}
        if num.is_zero():
            cyc = {}
        for m in sorted(cyc):
            while cyc[m] > 0:
                q = num._div_cyclotomic(m)
                if q is None:
                    break
                num = q
                cyc[m] -= 1
        self.num = num
        self.cyc = _cyc_key(cyc)
        self._hash = None

    @classmethod
    def _make(cls, num, cyc):
        obj = cls.__new__(cls)
        obj._init(num, dict(cyc))
        return obj

    @classmethod
    def from_cyclotomic(cls, num, cyc):
        """Build num / prod Phi_m(q)^e from an explicit exponent map."""
        return cls._make(num, cyc)

    # -- inspection --------------------------------------------------------
    @property
    def denominator(self):
        return _phi_power_product(dict(self.cyc))

    @property
    def numerator(self):
        return self.num

    def is_laurent(self):
        return not self.cyc

    def as_laurent(self):
        if self.cyc:
            raise ArithmeticError("value is not a Laurent polynomial")
        return self.num

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, QRational):
            return self.num == other.num and self.cyc == other.cyc
        if isinstance(other, (QLaurent, int, Fraction)):
            return self == QRational(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.cyc))
        return self._hash

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, QRational):
            return x
        if isinstance(x, (QLaurent, int, Fraction)):
            return QRational(x)
        return None

    def __neg__(self):
        return QRational._make(-self.num, self.cyc)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.cyc == other.cyc:
            return QRational._make(self.num + other.num, self.cyc)
        a, b = dict(self.cyc), dict(other.cyc)
        lcm = {m: max(a.get(m, 0), b.get(m, 0)) for m in set(a) | set(b)}
        na = self.num * _phi_power_product({m: lcm[m] - a.get(m, 0) for m in lcm})
        nb = other.num * _phi_power_product({m: lcm[m] - b.get(m, 0) for m in lcm})
        return QRational._make(na + nb, lcm)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return QRational(0)
            return QRational._make(self.num * other, self.cyc)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return QRational(0)
        cyc = dict(self.cyc)
        for m, e in other.cyc:
            cyc[m] = cyc.get(m, 0) + e
        return QRational._make(self.num * other.num, cyc)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        unit, found = factor_cyclotomic(self.num)
        num = _phi_power_product(dict(self.cyc))
        c = unit.nums[0]
        num = QLaurent._raw(num.lo - unit.lo, [x * unit.den for x in num.nums], num.den * c)
        return QRational._make(num, found)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / as_rational(other))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("integer powers only")
        if n < 0:
            return self.inverse() ** (-n)
        cyc = {m: e * n for m, e in self.cyc}
        return QRational._make(self.num ** n, cyc)

    def substitute(self, k):
        """s -> s^k for nonzero integer k."""
        if k == 0:
            raise ValueError("substitution exponent must be nonzero")
        if not self.cyc:
            return QRational(self.num.substitute(k))
        num = self.num.substitute(k)
        if k < 0:
            # Phi_m(q^-1) = q^-phi(m) Phi_m(q) for m >= 2, and -q^-1 Phi_1(q) for m = 1
            shift = 0
            sign = 1
            for m, e in self.cyc:
                shift += 2 * _totient(m) * e
                if m == 1 and e % 2:
                    sign = -sign
            num = num.shift(shift) * sign
            inner = QRational._make(num, dict(self.cyc))
            return inner if k == -1 else inner.substitute(-k)
        cyc = {}
        for m, e in self.cyc:
            for j, f in _cyclotomic_of_power(m, k).items():
                cyc[j] = cyc.get(j, 0) + f * e
        return QRational._make(num, cyc)

    def at_one(self):
        return eval_q1(self)

    def evaluate(self, s):
        n = self.num.evaluate(s)
        d = _phi_power_product(dict(self.cyc)).evaluate(s)
        return n / d

    def to_json(self):
        return {"num": self.num.to_json(), "cyc": [[m, e] for m, e in self.cyc]}

    def __repr__(self):
        if not self.cyc:
            return f"QRational({self.num})"
        den = " ".join(f"Phi{m}(q)^{e}" if e > 1 else f"Phi{m}(q)" for m, e in self.cyc)
        return f"QRational(({self.num}) / ({den}))"


@lru_cache(maxsize=None)
def _cyclotomic_of_power(m, k):
    """Factor Phi_m(q^k) into cyclotomic polynomials in q."""
    poly = []
    for c in cyclotomic(m):
        poly.append(c)
        poly.extend([0] * (k - 1))
    poly = poly[: len(poly) - (k - 1)]
    found = {}
    for j in divisors(m * k):
        while True:
            quot, rem = _divmod_monic(poly, list(cyclotomic(j)))
            if any(rem) or not quot:
                break
            poly = quot
            found[j] = found.get(j, 0) + 1
    assert poly == [1], (m, k, poly)
    return found


# ---------------------------------------------------------------------------
# q-numbers


@lru_cache(maxsize=None)
def q_int(n):
    """Symmetric q-integer [n]_q = (s^n - s^-n)/(s - s^-1)."""
    if n == 0:
        return ZERO
    if n < 0:
        return -q_int(-n)
    nums = [0] * (2 * n - 1)
    nums[::2] = [1] * n
    return QLaurent._raw(-(n - 1), nums)


@lru_cache(maxsize=None)
def q_factorial(n):
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = ONE
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


@lru_cache(maxsize=None)
def q_binomial(m, n):
    """Gaussian binomial in symmetric normalisation; zero outside 0 <= n <= m."""
    if n < 0 or m < 0 or n > m:
        return ZERO
    n = min(n, m - n)
    num = ONE
    for i in range(1, n + 1):
        num = num * q_int(m - n + i)
    try:
        return num.exact_div(q_factorial(n))
    except ArithmeticError as exc:  # pragma: no cover - would be an arithmetic bug
        raise ArithmeticError(f"q_binomial({m},{n}) division was not exact") from exc


def substitute_power(p, k):
    """Replace q by q^k (so s by s^k)."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("substitute_power needs a positive integer k")
    return p.substitute(k)


def eval_q1(p):
    """Exact value at q = 1 after cancelling all (q - 1) factors."""
    if isinstance(p, QLaurent):
        return p.at_one()
    if not isinstance(p, QRational):
        return as_rational(p)
    cyc = dict(p.cyc)
    if cyc.get(1, 0) > 0:
        raise PoleAtOne(f"{p!r} has a pole at q = 1")
    value = p.num.at_one()
    for m, e in cyc.items():
        value /= Fraction(sum(cyclotomic(m))) ** e
    return value


def genus_expansion(p, order):
    """Coefficients of hbar^0, hbar^2, ..., hbar^(2*order) of p(q = e^{i hbar})."""
    if isinstance(p, QRational):
        p = p.as_laurent()
    if not isinstance(p, QLaurent):
        p = QLaurent(as_rational(p))
    if order < 0:
        raise ValueError("order must be nonnegative")
    items = p.items()
    for n in range(order + 1):
        odd = sum(c * Fraction(e, 2) ** (2 * n + 1) for e, c in items)
        if odd:
            raise NotSymmetric(f"{p} has odd hbar terms")
    out = []
    for n in range(order + 1):
        total = sum(c * Fraction(e, 2) ** (2 * n) for e, c in items)
        out.append((-1) ** n * total / factorial(2 * n))
    return out


def is_integral_laurent(p):
    """(True, witness) iff p is in Z[q, 1/q]; otherwise (False, None)."""
    if isinstance(p, QLaurent):
        p = QRational(p)
    if not isinstance(p, QRational):
        p = QRational(as_rational(p))
    if p.cyc:
        return False, None
    num = p.num
    if num.den != 1 or not num.only_even_exponents():
        return False, None
    return True, num

