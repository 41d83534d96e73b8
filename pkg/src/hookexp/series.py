"""Truncated formal power series with exact coefficients.

A Series holds coefficients c_0..c_N (order N) which are either Fractions or
BetaPolys; arithmetic between two series truncates to the smaller order.
On top of the generic ring operations this module provides the expansions
the rest of the package is built from: powers of the Euler product
prod_{m>=1} (1 - x^m) with rational or formal exponent, the classical sparse
series (pentagonal numbers, cubes, an eighth-power double sum), divisor
power sums, principal specializations of Schur functions, a lattice-sum
route to eta powers, and compositional reversion of x * (Euler product).
"""

from fractions import Fraction
from math import isqrt

from .exactnum import BetaPoly
from .partition import (
    b_stat_of,
    contents_of,
    hook_beta_sum,
    hooks_of,
    partition_tuples,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Series:
    """Exact truncated power series; immutable in practice."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant term")
        self.coeffs = cs

    @classmethod
    def zero(cls, order, one=_ONE):
        return cls([one * 0] * (order + 1))

    @classmethod
    def x(cls, order, one=_ONE):
        cs = [one * 0] * (order + 1)
        if order >= 1:
            cs[1] = one
        return cls(cs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def _zero_one(self):
        one = self.coeffs[0] ** 0
        return one * 0, one

    def __getitem__(self, n):
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        head = ", ".join(repr(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return "Series([%s%s]; order=%d)" % (head, tail, self.order)

    def truncate(self, order):
        if order >= self.order:
            return self
        return Series(self.coeffs[: order + 1])

    def shift(self, k):
        """Multiply by x^k (order grows by k)."""
        zero, _ = self._zero_one()
        return Series([zero] * k + self.coeffs)

    def map(self, fn):
        return Series([fn(c) for c in self.coeffs])

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, BetaPoly)):
            return Series([c * other for c in self.coeffs])
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        zero = self.coeffs[0] * 0
        out = [zero] * (n + 1)
        for i, ca in enumerate(self.coeffs[: n + 1]):
            if not ca:
                continue
            for j in range(n + 1 - i):
                cb = other.coeffs[j]
                if cb:
                    out[i + j] += ca * cb
        return Series(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, BetaPoly)):
            return Series([other * c for c in self.coeffs])
        return NotImplemented

    def __pow__(self, m):
        if not isinstance(m, int) or m < 0:
            raise ValueError("series powers must be non-negative integers")
        zero, one = self._zero_one()
        out = Series([one] + [zero] * self.order)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def inverse(self):
        """Multiplicative inverse; the constant term must be a unit."""
        zero, one = self._zero_one()
        c0 = self.coeffs[0]
        if isinstance(c0, BetaPoly):
            if c0.degree != 0:
                raise ValueError("constant term must be invertible")
            inv0 = BetaPoly.constant(Fraction(1) / c0.coefficient(0))
        else:
            if not c0:
                raise ValueError("constant term must be invertible")
            inv0 = Fraction(1) / c0
        out = [zero] * (self.order + 1)
        out[0] = one * inv0
        for n in range(1, self.order + 1):
            acc = zero
            for k in range(1, n + 1):
                ck = self.coeffs[k]
                if ck:
                    acc += ck * out[n - k]
            out[n] = -acc * inv0
        return Series(out)

    def exp(self):
        """exp of a series with zero constant term."""
        zero, one = self._zero_one()
        if self.coeffs[0] != zero:
            raise ValueError("exp needs a zero constant term")
        out = [zero] * (self.order + 1)
        out[0] = one
        for n in range(1, self.order + 1):
            acc = zero
            for k in range(1, n + 1):
                fk = self.coeffs[k]
                if fk:
                    acc += (k * fk) * out[n - k]
            out[n] = acc * Fraction(1, n)
        return Series(out)

    def log(self):
        """log of a series with constant term one."""
        zero, one = self._zero_one()
        if self.coeffs[0] != one:
            raise ValueError("log needs constant term 1")
        out = [zero] * (self.order + 1)
        for n in range(1, self.order + 1):
            acc = zero
            for k in range(1, n):
                fk = out[k]
                if fk:
                    acc += (k * fk) * self.coeffs[n - k]
            out[n] = self.coeffs[n] - acc * Fraction(1, n)
        return Series(out)

    def compose(self, inner):
        """self(inner(x)); the inner series needs a zero constant term."""
        zero, one = inner._zero_one()
        if inner.coeffs[0] != zero:
            raise ValueError("composition needs a zero constant term inside")
        n = min(self.order, inner.order)
        acc = Series([zero] * (n + 1))
        for c in reversed(self.coeffs[: n + 1]):
            acc = acc * inner.truncate(n)
            acc.coeffs[0] = acc.coeffs[0] + one * c
        return acc


# ---------------------------------------------------------------------------
# divisor sums and Euler powers

def divisor_power_gf(alpha, order):
    """sum_{k>=1} k^alpha x^k / (1 - x^k): coefficient of x^n is
    sum of d^alpha over divisors d of n."""
    out = [_ZERO] * (order + 1)
    for k in range(1, order + 1):
        term = Fraction(k ** alpha) if alpha >= 0 else Fraction(1, k ** -alpha)
        for m in range(k, order + 1, k):
            out[m] += term
    return Series(out)


def log_euler_sum(order):
    """sum_{k>=1} x^k / (k (1 - x^k)) = -log prod (1 - x^m)."""
    out = [_ZERO] * (order + 1)
    for k in range(1, order + 1):
        term = Fraction(1, k)
        for m in range(k, order + 1, k):
            out[m] += term
    return Series(out)


def euler_power(s, order):
    """prod_{m>=1} (1 - x^m)^s for an exact rational s, via exp/log."""
    s = Fraction(s)
    lg = log_euler_sum(order)
    return Series([-s * c for c in lg.coeffs]).exp()


def euler_power_formal(order):
    """prod (1 - x^m)^(beta - 1) with beta formal: a Series of BetaPolys."""
    lg = log_euler_sum(order)
    f = Series([BetaPoly((c, -c)) for c in lg.coeffs])  # (1 - beta) * lg
    return f.exp()


def euler_product_direct(s, order, step=1):
    """prod_{m>=1} (1 - x^{step*m})^s for integer s, by explicit factors.

    An independent route to euler_power for integer exponents: each factor
    (1 - x^d) is multiplied in (or divided out, for negative s) directly on
    an integer coefficient array.
    """
    if not isinstance(s, int):
        raise ValueError("direct product route needs an integer exponent")
    arr = [0] * (order + 1)
    arr[0] = 1
    for m in range(1, order // step + 1):
        d = step * m
        if s >= 0:
            for _ in range(s):
                for i in range(order, d - 1, -1):
                    arr[i] -= arr[i - d]
        else:
            for _ in range(-s):
                for i in range(d, order + 1):
                    arr[i] += arr[i - d]
    return Series([Fraction(a) for a in arr])


def partition_gf(order):
    """1 / prod (1 - x^m): the partition-count generating function."""
    return pentagonal_series(order).inverse()


# ---------------------------------------------------------------------------
# classical sparse expansions

def pentagonal_series(order):
    """prod (1 - x^m) = sum_{k in Z} (-1)^k x^{k(3k+1)/2}."""
    out = [0] * (order + 1)
    k = 0
    while True:
        hit = False
        for kk in ((k, -k) if k else (0,)):
            e = kk * (3 * kk + 1) // 2
            if e <= order:
                out[e] += (-1) ** (kk % 2)
                hit = True
        if not hit:
            break
        k += 1
    return Series([Fraction(a) for a in out])


def jacobi_cube_series(order):
    """prod (1 - x^m)^3 = sum_{m>=0} (-1)^m (2m+1) x^{m(m+1)/2}."""
    out = [0] * (order + 1)
    m = 0
    while m * (m + 1) // 2 <= order:
        out[m * (m + 1) // 2] += (-1) ** m * (2 * m + 1)
        m += 1
    return Series([Fraction(a) for a in out])


def eta8_double_sum(order):
    """prod (1 - x^m)^8 as a two-parameter sparse double sum.

    Coefficients come in two families indexed by k, m >= 0:
      +(3k+1)(3m+1)(3k+3m+2)/2 at exponent k^2+k+m^2+m+km, and
      -(3k+2)(3m+2)(3k+3m+4)/2 at exponent k^2+k+m^2+m+(k+1)(m+1).
    """
    out = [0] * (order + 1)
    k = 0
    while k * k + k <= order:
        m = 0
        while True:
            base = k * k + k + m * m + m
            e1 = base + k * m
            e2 = base + (k + 1) * (m + 1)
            if e1 > order and e2 > order:
                break
            if e1 <= order:
                c, r = divmod((3 * k + 1) * (3 * m + 1) * (3 * k + 3 * m + 2), 2)
                assert r == 0
                out[e1] += c
            if e2 <= order:
                c, r = divmod((3 * k + 2) * (3 * m + 2) * (3 * k + 3 * m + 4), 2)
                assert r == 0
                out[e2] -= c
            m += 1
        k += 1
    return Series([Fraction(a) for a in out])


# ---------------------------------------------------------------------------
# eta powers as lattice sums over zero-sum vectors

def macdonald_eta_power(t, order):
    """prod (1 - x^m)^(t^2 - 1) for odd t >= 3, as a lattice sum.

    Sums (-1)^((t-1)/2)/(1!2!...(t-1)!) * prod_{i<j}(v_i - v_j) over integer
    vectors (v_0..v_{t-1}) with v_i = i mod t and sum zero, the exponent of x
    being sum(v^2)/(2t) - (t^2-1)/24.  Enumerates every vector whose exponent
    is within the truncation order.
    """
    if not isinstance(t, int) or t < 3 or t % 2 == 0:
        raise ValueError("t must be odd and >= 3")
    budget = 2 * t * order + t * (t * t - 1) // 12  # max allowed sum(v^2)
    vmax = isqrt(budget)
    acc = [0] * (order + 1)
    vec = [0] * t

    def descend(i, rsum, sq):
        if i == t - 1:
            v = -rsum
            if (v - i) % t != 0 or sq + v * v > budget:
                return
            vec[i] = v
            num = 12 * (sq + v * v) - t * (t * t - 1)
            w, r = divmod(num, 24 * t)
            if r or w > order:
                return
            prodd = 1
            for a in range(t):
                for b in range(a + 1, t):
                    prodd *= vec[a] - vec[b]
            acc[w] += prodd
            return
        v = i - t * ((vmax + i) // t)  # smallest value = i mod t with |v| <= vmax
        while v <= vmax:
            if sq + v * v <= budget:
                vec[i] = v
                descend(i + 1, rsum + v, sq + v * v)
            v += t

    descend(0, 0, 0)
    tp = (t - 1) // 2
    den = 1
    run = 1
    for i in range(1, t):
        run *= i
        den *= run
    sign = (-1) ** tp
    out = []
    for a in acc:
        c = Fraction(sign * a, den)
        assert c.denominator == 1, "eta-power coefficients must be integers"
        out.append(c)
    return Series(out)


# ---------------------------------------------------------------------------
# principal specializations of Schur functions

def geometric_divide(arr, h):
    """In place: multiply the coefficient array by 1/(1 - x^h)."""
    for i in range(h, len(arr)):
        arr[i] += arr[i - h]


def schur_principal_x(parts, order):
    """s_lambda(x, x^2, x^3, ...) truncated: x^(|. | + b) / prod (1 - x^h)."""
    shift = sum(parts) + b_stat_of(parts)
    arr = [0] * (order + 1)
    if shift <= order:
        arr[shift] = 1
        for h in hooks_of(parts):
            geometric_divide(arr, h)
    return Series([Fraction(a) for a in arr])


def schur_principal_ones(parts, d):
    """s_lambda(1, ..., 1) with d ones: prod (d + content) / hook."""
    num = 1
    den = 1
    for c in contents_of(parts):
        num *= d + c
    for h in hooks_of(parts):
        den *= h
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# reversion of x * prod (1 - x^m)

def revert_euler(order, method="lagrange"):
    """Compositional inverse y(x) of x = y * prod_{m>=1} (1 - y^m).

    method="lagrange" extracts each coefficient as a hook-length sum:
      [x^n] y = (1/n) * sum over partitions of n-1 of prod(1 + (n-1)/h^2).
    method="iterate" solves the fixed point y = x / prod(1 - y^m) by
    successive substitution, one extra correct order per round.
    """
    if method == "lagrange":
        coeffs = [_ZERO]
        for n in range(1, order + 1):
            c = hook_beta_sum(n - 1, -(n - 1)) / n
            assert c.denominator == 1
            coeffs.append(c)
        return Series(coeffs)
    if method != "iterate":
        raise ValueError("method must be 'lagrange' or 'iterate'")
    pgf = partition_gf(order)
    y = Series.x(order)
    for _ in range(order + 1):
        nxt = pgf.compose(y).shift(1).truncate(order)
        if nxt == y:
            break
        y = nxt
    assert pgf.compose(y).shift(1).truncate(order) == y, "iteration did not settle"
    return y
