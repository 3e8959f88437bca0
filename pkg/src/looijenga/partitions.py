"""Partitions, symmetric-group characters and principally specialised Schur functions.

Partitions are plain tuples of weakly decreasing positive integers; every
public function normalises its inputs with :func:`partition`.
"""

from functools import lru_cache

from .errors import NotContained, SizeMismatch
from .qcalc import ONE, QLaurent, QRational, ZERO

__all__ = ["partition", "size", "conjugate", "kappa", "hook_lengths", "is_hook",
           "hooks", "partitions_of", "partitions_up_to", "contains",
           "mn_character", "schur_principal", "hook_schur_closed",
           "cycle_type_count"]


def partition(parts):
    """Normalise a sequence into a partition tuple (zeros dropped)."""
    out = tuple(int(p) for p in parts if p)
    if any(p < 0 for p in out) or any(a < b for a, b in zip(out, out[1:])):
        raise ValueError(f"{parts!r} is not a partition")
    return out


def size(lam):
    return sum(lam)


@lru_cache(maxsize=None)
def _conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def conjugate(lam):
    return _conjugate(partition(lam))


def kappa(lam):
    """Second Casimir sum_i lam_i (lam_i - 2i + 1), rows counted from 1."""
    lam = partition(lam)
    return sum(p * (p - 2 * i + 1) for i, p in enumerate(lam, start=1))


def hook_lengths(lam):
    lam = partition(lam)
    conj = _conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def is_hook(lam):
    lam = partition(lam)
    return len(lam) <= 1 or lam[1] <= 1


def hooks(d):
    """Hook partitions (d - s, 1^s) of d in order s = 0..d-1."""
    return [(d - s,) + (1,) * s for s in range(d)]


@lru_cache(maxsize=None)
def partitions_of(n, largest=None):
    """All partitions of n in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(n):
    out = []
    for k in range(n + 1):
        out.extend(partitions_of(k))
    return out


def contains(lam, mu):
    lam, mu = partition(lam), partition(mu)
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


# ---------------------------------------------------------------------------
# characters


def _beta(lam, length):
    return [p + length - 1 - i for i, p in enumerate(lam)] + list(range(length - len(lam) - 1, -1, -1))


def _from_beta(beta):
    beta = sorted(beta, reverse=True)
    n = len(beta)
    return partition(b - (n - 1 - i) for i, b in enumerate(beta))


@lru_cache(maxsize=None)
def _mn(lam, mu):
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    length = len(lam) + r
    beta = _beta(lam, length)
    bset = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in bset:
            continue
        height = sum(1 for c in beta if t < c < b)
        new = [c for c in beta if c != b] + [t]
        total += (-1) ** height * _mn(_from_beta(new), rest)
    return total


def mn_character(lam, mu):
    """chi_lam evaluated on the conjugacy class of cycle type mu (Murnaghan-Nakayama)."""
    lam = partition(lam)
    mu = tuple(sorted(partition(mu), reverse=True))
    if size(lam) != size(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    return _mn(lam, mu)


def cycle_type_count(mu):
    """Number of permutations with cycle type mu."""
    from math import factorial
    mu = partition(mu)
    n = size(mu)
    z = 1
    counts = {}
    for p in mu:
        counts[p] = counts.get(p, 0) + 1
    for p, m in counts.items():
        z *= p ** m * factorial(m)
    return factorial(n) // z


# ---------------------------------------------------------------------------
# Schur functions at x_i = q^(nu_i - i + 1/2)


def _q_minus_one_product(lo, hi):
    """prod_{j=lo}^{hi} (q^j - 1) as a QLaurent."""
    out = ONE
    for j in range(lo, hi + 1):
        out = out * QLaurent({2 * j: 1, 0: -1})
    return out


def _phi_exponents(k):
    # prod_{j<=k} (q^j - 1) = prod_m Phi_m(q)^(k // m)
    return {m: k // m for m in range(1, k + 1)}


@lru_cache(maxsize=None)
def _h_shift_coeffs(nu, n):
    """Power-series coefficients a_0..a_n of prod_i (1 - y_i u)/(1 - x_i u)."""
    series = [ONE] + [ZERO] * n
    for i, part in enumerate(nu, start=1):
        y = QLaurent.monomial(1 - 2 * i)
        x = QLaurent.monomial(2 * part + 1 - 2 * i)
        # multiply by 1/(1 - x u): running geometric sum
        geo = [ZERO] * (n + 1)
        acc = ZERO
        for k in range(n + 1):
            acc = acc * x + series[k] if k else series[0]
            geo[k] = acc
        # multiply by (1 - y u)
        series = [geo[k] - (y * geo[k - 1] if k else ZERO) for k in range(n + 1)]
    return tuple(series)


def _h_scaled(k, nu, top):
    """h_k(q^(nu+rho)) * prod_{j<=top} (q^j - 1), a Laurent polynomial (k <= top)."""
    if k < 0:
        return ZERO
    a = _h_shift_coeffs(nu, top)
    total = ZERO
    for j in range(k + 1):
        if a[j].is_zero():
            continue
        r = k - j
        # h_r(empty) = s^(r^2) / prod_{i<=r}(q^i - 1)
        total = total + a[j] * QLaurent.monomial(r * r) * _q_minus_one_product(r + 1, top)
    return total


def _bareiss_det(mat):
    n = len(mat)
    if n == 0:
        return ONE
    m = [list(row) for row in mat]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
            if swap is None:
                return ZERO
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


@lru_cache(maxsize=None)
def _schur(lam, mu, nu):
    if not mu and not nu:
        return _schur_hook_lengths(lam)
    return _schur_jacobi_trudi(lam, mu, nu)


def _schur_hook_lengths(lam):
    """Straight shape: s^(kappa/2) / prod_boxes (s^h - s^-h)."""
    value = QRational(QLaurent.monomial(kappa(lam) // 2))
    for h in hook_lengths(lam):
        value = value / QRational(QLaurent.monomial(h) - QLaurent.monomial(-h))
    return value


def _schur_jacobi_trudi(lam, mu, nu):
    n = len(lam)
    if n == 0:
        return QRational(ONE)
    mu = mu + (0,) * (n - len(mu))
    rows = []
    cyc = {}
    for i in range(n):
        top = max(0, lam[i] - (i + 1) + n - mu[n - 1])
        rows.append([_h_scaled(lam[i] - mu[j] - i + j, nu, top) for j in range(n)])
        for m, e in _phi_exponents(top).items():
            cyc[m] = cyc.get(m, 0) + e
    det = _bareiss_det(rows)
    return QRational.from_cyclotomic(det, cyc)


def schur_principal(lam, mu=(), nu=()):
    """Skew Schur function s_{lam/mu} at x_i = q^(nu_i - i + 1/2), i >= 1.

    Computed from the Jacobi-Trudi determinant in the complete homogeneous
    functions, whose specialisations are closed-form products.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if not contains(lam, mu):
        raise NotContained(f"{mu} is not contained in {lam}")
    return _schur(lam, mu, nu)


def hook_schur_closed(d, s):
    """q^((C(d,2) - d s)/2) / ([d] [d-s-1]! [s]!) for the hook (d - s, 1^s).

    This is the hook specialisation with the factor (q^(1/2) - q^(-1/2))^(-d)
    stripped off: schur_principal(hook) * (s - 1/s)^d equals this value.
    """
    from .qcalc import q_factorial, q_int
    if not 0 <= s < d:
        raise ValueError("hook needs 0 <= s < d")
    expo = d * (d - 1) // 2 - d * s  # exponent of q^(1/2), i.e. of s
    return QRational(QLaurent.monomial(expo)) / (q_int(d) * q_factorial(d - s - 1) * q_factorial(s))
