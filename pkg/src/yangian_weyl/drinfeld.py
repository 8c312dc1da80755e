"""Drinfeld polynomial tuples and the ordered tensor-product factorization.

Polynomials are represented by their root multisets; monicity is
structural.  The highest-weight eigenvalue series of a root multiset and
its inverse (recovering the multiset from a series) live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple

from .exact import (
    GaussianRational,
    ONE,
    Series,
    ZERO,
    as_scalar,
    ordering_key,
    solve_linear,
)
from .rootsys import LieType


def _canonical(roots: Iterable) -> Tuple[GaussianRational, ...]:
    return tuple(sorted((as_scalar(r) for r in roots), key=lambda s: (s.re, s.im)))


@dataclass(frozen=True)
class DrinfeldTuple:
    """One monic polynomial per node, each stored as its root multiset."""

    lie_type: LieType
    roots: Tuple[Tuple[GaussianRational, ...], ...]

    def __post_init__(self):
        if len(self.roots) != self.lie_type.rank:
            raise ValueError("tuple length must equal the rank")
        object.__setattr__(self, "roots", tuple(_canonical(r) for r in self.roots))

    @classmethod
    def from_dict(cls, t: LieType, polys: Dict[int, Sequence]) -> "DrinfeldTuple":
        rows = [[] for _ in range(t.rank)]
        for node, roots in polys.items():
            if not 1 <= node <= t.rank:
                raise ValueError(f"node {node} out of range for {t}")
            rows[node - 1] = list(roots)
        return cls(t, tuple(tuple(r) for r in rows))

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(r) for r in self.roots)

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)


@dataclass(frozen=True)
class FactorChain:
    """Ordered sequence of fundamental factors (node, parameter)."""

    lie_type: LieType
    factors: Tuple[Tuple[int, GaussianRational], ...]

    def __post_init__(self):
        fixed = []
        for node, a in self.factors:
            if not 1 <= node <= self.lie_type.rank:
                raise ValueError(f"node {node} out of range for {self.lie_type}")
            fixed.append((node, as_scalar(a)))
        object.__setattr__(self, "factors", tuple(fixed))

    def __len__(self):
        return len(self.factors)


class TrivialModuleError(ValueError):
    pass


def order_factors(pi: DrinfeldTuple) -> FactorChain:
    """Enumerate all roots by descending real part into a factor chain.

    Ties break by descending imaginary part, then ascending node index, so
    the output is deterministic.
    """
    if pi.total_degree == 0:
        raise TrivialModuleError("trivial module: every polynomial is 1")
    items = [
        (node, root)
        for node, roots in enumerate(pi.roots, start=1)
        for root in roots
    ]
    items.sort(key=lambda pair: (*ordering_key(pair[1]), pair[0]))
    return FactorChain(pi.lie_type, tuple(items))


def chain_to_poly(chain: FactorChain) -> DrinfeldTuple:
    rows = [[] for _ in range(chain.lie_type.rank)]
    for node, a in chain.factors:
        rows[node - 1].append(a)
    return DrinfeldTuple(chain.lie_type, tuple(tuple(r) for r in rows))


def shift_tuple(pi: DrinfeldTuple, a) -> DrinfeldTuple:
    a = as_scalar(a)
    return DrinfeldTuple(
        pi.lie_type, tuple(tuple(r + a for r in row) for row in pi.roots)
    )


def eigenvalue_series(roots: Iterable, d: int, order: int) -> Series:
    """Truncated expansion of prod (u + d - a)/(u - a) about u = infinity.

    Each factor contributes 1 + d*(a^(k-1)) u^-k.
    """
    if d <= 0:
        raise ValueError("d must be a positive integer")
    out = Series.one(order)
    for root in roots:
        a = as_scalar(root)
        coeffs = [ONE]
        power = ONE
        for _ in range(order):
            coeffs.append(d * power)
            power = power * a
        out = out * Series(coeffs)
    return out


class NotDrinfeldSeriesError(ValueError):
    pass


def series_to_roots(series: Series, degree: int, d: int) -> Tuple[GaussianRational, ...]:
    """The unique monic degree-`degree` polynomial Q with
    Q(u+d)/Q(u) matching the series, returned as its root multiset.

    Solved by equating Laurent coefficients (a linear system in the
    coefficients of Q); roots must lie in Q(i).
    """
    if d <= 0:
        raise ValueError("d must be a positive integer")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if series.coeffs[0] != ONE:
        raise NotDrinfeldSeriesError("constant term is not 1")
    if degree == 0:
        if any(c for c in series.coeffs[1:]):
            raise NotDrinfeldSeriesError("degree 0 requires the constant series 1")
        return ()
    if series.order < 2 * degree:
        raise ValueError("series order too small to pin the polynomial down")
    if series.coeffs[1] != GaussianRational(d * degree):
        raise NotDrinfeldSeriesError(
            f"u^-1 coefficient must be d*degree = {d * degree}"
        )

    # Q(u) = u^deg + q_{deg-1} u^{deg-1} + ... + q_0; impose that every
    # computable Laurent coefficient of Q(u+d) - Q(u)*series vanishes.
    n = series.order
    rows = []
    rhs = []
    for power in range(degree - 1, degree - 1 - n, -1):
        row = [ZERO] * degree
        target = ZERO
        for j in range(degree + 1):
            # q_j * u^power coefficient of (u+d)^j
            t = power
            if 0 <= t <= j:
                coef = GaussianRational(_binomial(j, t) * (Fraction(d) ** (j - t)))
                if j == degree:
                    target = target - coef
                else:
                    row[j] = row[j] + coef
            # minus q_j * c_{j-power} from Q(u)*series
            k = j - power
            if 0 <= k <= n:
                c = series.coeffs[k]
                if j == degree:
                    target = target + c
                else:
                    row[j] = row[j] - c
        rows.append(tuple(row))
        rhs.append(target)
    solution = solve_linear(rows, tuple(rhs))
    if solution is None:
        raise NotDrinfeldSeriesError("no monic polynomial matches the series")
    coeffs = list(solution) + [ONE]  # q_0 .. q_deg
    roots = _gaussian_rational_roots(coeffs)
    if len(roots) != degree:
        raise NotDrinfeldSeriesError("polynomial does not split over Q(i)")
    # The linear system used only a window of coefficients; confirm the
    # recovered multiset reproduces the whole series.
    if eigenvalue_series(roots, d, n) != series:
        raise NotDrinfeldSeriesError("series is not of Drinfeld form")
    return _canonical(roots)


def _binomial(n: int, k: int) -> int:
    from math import comb

    return comb(n, k)


# ---------------------------------------------------------------------------
# Root extraction over Q(i) via the rational root theorem in Z[i].


def _gaussian_rational_roots(coeffs) -> list:
    """Roots in Q(i) of sum coeffs[j] u^j, with multiplicity."""
    coeffs = [as_scalar(c) for c in coeffs]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    roots = []
    while len(coeffs) > 1:
        root = _find_one_root(coeffs)
        if root is None:
            break
        roots.append(root)
        coeffs = _deflate(coeffs, root)
    return roots


def _deflate(coeffs, root):
    out = [ZERO] * (len(coeffs) - 1)
    carry = ZERO
    for j in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[j] + carry
        out[j - 1] = carry
        carry = carry * root
    return out


def _poly_eval(coeffs, x):
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _find_one_root(coeffs):
    if not coeffs[0]:
        return ZERO
    # Clear denominators to a Z[i] polynomial.
    denom = 1
    for c in coeffs:
        denom = _lcm(denom, c.re.denominator)
        denom = _lcm(denom, c.im.denominator)
    zs = [(int(c.re * denom), int(c.im * denom)) for c in coeffs]
    lead = zs[-1]
    const = zs[0]
    units = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    for p in _gaussian_divisors(const):
        for q in _gaussian_divisors(lead):
            for u in units:
                num = _gi_mul(p, u)
                cand = _gi_to_scalar(num, q)
                if cand is not None and not _poly_eval(coeffs, cand):
                    return cand
    return None


def _lcm(a: int, b: int) -> int:
    from math import gcd

    b = abs(b)
    return a // gcd(a, b) * b if b else a


def _gi_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gi_norm(a) -> int:
    return a[0] * a[0] + a[1] * a[1]


def _gi_divmod_exact(a, b):
    """a / b in Z[i] if exact, else None."""
    n = _gi_norm(b)
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    if re % n or im % n:
        return None
    return (re // n, im // n)


def _gi_to_scalar(num, den):
    n = _gi_norm(den)
    if n == 0:
        return None
    re = Fraction(num[0] * den[0] + num[1] * den[1], n)
    im = Fraction(num[1] * den[0] - num[0] * den[1], n)
    return GaussianRational(re, im)


def _gaussian_prime_factors(z):
    """Gaussian prime factors of z (unit part dropped)."""
    primes = []
    norm = _gi_norm(z)
    for p in _prime_factors(norm):
        if p == 2:
            pi = (1, 1)
            candidates = [pi]
        elif p % 4 == 3:
            candidates = [(p, 0)]
        else:
            x, y = _two_squares(p)
            candidates = [(x, y), (x, -y)]
        for pi in candidates:
            while True:
                q = _gi_divmod_exact(z, pi)
                if q is None:
                    break
                primes.append(pi)
                z = q
    return primes


def _gaussian_divisors(z):
    """All divisors of z in Z[i] up to units (z nonzero)."""
    factors = _gaussian_prime_factors(z)
    counted: dict = {}
    for f in factors:
        counted[f] = counted.get(f, 0) + 1
    divisors = [(1, 0)]
    for prime, mult in counted.items():
        grown = []
        for div in divisors:
            power = (1, 0)
            for _ in range(mult + 1):
                grown.append(_gi_mul(div, power))
                power = _gi_mul(power, prime)
        divisors = grown
    # Deduplicate up to units.
    seen = set()
    out = []
    for d in divisors:
        key = max(
            (d[0], d[1]), (-d[0], -d[1]), (-d[1], d[0]), (d[1], -d[0])
        )
        if key not in seen:
            seen.add(key)
            out.append(d)
    return out


def _prime_factors(n: int) -> list:
    out = []
    n = abs(n)
    f = 2
    while f * f <= n:
        while n % f == 0:
            out.append(f)
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _two_squares(p: int):
    """x, y with x^2 + y^2 = p for a prime p = 1 mod 4."""
    # Find a square root of -1 mod p, then run the Euclidean descent.
    for a in range(2, p):
        r = pow(a, (p - 1) // 4, p)
        if (r * r) % p == p - 1:
            break
    else:
        raise ValueError(f"{p} is not 1 mod 4")
    x, y = p, r
    while y * y > p:
        x, y = y, x % y
    return y, x % y
