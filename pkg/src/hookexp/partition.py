"""Integer partitions, Young diagrams (English convention), hooks and
hook-length statistics.

A partition is a weakly decreasing tuple of positive integers.  Cells are
addressed (i, j), 1-based, row-major; row 1 is the longest row.  The hook
length of a cell is arm + leg + 1.

Fast paths work on plain tuples (`partition_tuples`, `hooks_of`, ...); the
`Partition` class is a thin convenience wrapper over the same helpers.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .exactnum import BetaPoly


# ---------------------------------------------------------------------------
# enumeration and counting

def _gen_desc(remaining, cap):
    # parts of `remaining`, each <= cap, in reverse-lexicographic order
    if remaining == 0:
        yield ()
        return
    for first in range(min(remaining, cap), 0, -1):
        for rest in _gen_desc(remaining - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_tuples(n):
    """All partitions of n as tuples, reverse-lexicographic (largest first)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return tuple(_gen_desc(n, n)) if n else ((),)


def enumerate_partitions(n):
    """Yield the partitions of n as Partition objects, largest first."""
    for parts in partition_tuples(n):
        yield Partition(parts)


@lru_cache(maxsize=None)
def partition_count(n):
    """p(n) by the pentagonal-number recurrence (no enumeration)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = 1 if k % 2 else -1
        if g1 <= n:
            total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


# ---------------------------------------------------------------------------
# diagram helpers on raw tuples

def conjugate_of(parts):
    """Conjugate partition (columns become rows)."""
    if not parts:
        return ()
    out = [0] * parts[0]
    for row in parts:
        for j in range(row):
            out[j] += 1
    return tuple(out)


def hooks_of(parts):
    """All hook lengths, row-major."""
    if not parts:
        return ()
    conj = conjugate_of(parts)
    out = []
    for i, row in enumerate(parts):
        for j in range(row):
            out.append(row - j + conj[j] - i - 1)
    return tuple(out)


@lru_cache(maxsize=None)
def hook_lists(n):
    """Hook-length tuples aligned index-by-index with partition_tuples(n)."""
    return tuple(hooks_of(parts) for parts in partition_tuples(n))


def contents_of(parts):
    """All contents j - i, row-major (same cell order as hooks_of)."""
    out = []
    for i, row in enumerate(parts):
        for j in range(row):
            out.append(j - i)
    return tuple(out)


def first_column_hooks_of(parts):
    """Hook lengths of the first-column cells, strictly decreasing."""
    length = len(parts)
    return tuple(parts[i] + length - i - 1 for i in range(length))


def b_stat_of(parts):
    """The statistic sum_i (i-1) * parts_i."""
    return sum(i * row for i, row in enumerate(parts))


def validate_partition(parts):
    parts = tuple(parts)
    for i, row in enumerate(parts):
        if not isinstance(row, int) or row < 1:
            raise ValueError("parts must be positive integers: %r" % (parts,))
        if i and parts[i - 1] < row:
            raise ValueError("parts must be weakly decreasing: %r" % (parts,))
    return parts


# ---------------------------------------------------------------------------
# hook products

def syt_count_of(parts):
    """Number of standard Young tableaux: n! divided by the hook product."""
    n = sum(parts)
    ph = prod(hooks_of(parts))
    f, rem = divmod(factorial(n), ph)
    assert rem == 0, "hook product must divide n!"
    return f


def hook_beta_poly_of(parts):
    """prod over cells of (1 - beta/h^2), as a BetaPoly in beta.

    Computed as prod(h^2 - beta) over prod(h^2), all in integer arithmetic.
    """
    hooks = hooks_of(parts)
    poly = [1]
    den = 1
    for h in hooks:
        h2 = h * h
        den *= h2
        poly.append(-poly[-1])
        for i in range(len(poly) - 2, 0, -1):
            poly[i] = h2 * poly[i] - poly[i - 1]
        poly[0] = h2 * poly[0]
    return BetaPoly([Fraction(c, den) for c in poly])


def hook_eval_product(parts, beta):
    """prod over cells of (1 - beta/h^2) at an exact rational beta."""
    beta = Fraction(beta)
    p, q = beta.numerator, beta.denominator
    num = 1
    den = 1
    for h in hooks_of(parts):
        h2 = h * h
        num *= q * h2 - p
        den *= h2
    return Fraction(num, den * q ** sum(parts))


def hook_power_sum(parts, alpha):
    """sum over cells of h^alpha (exact; Fractions for negative alpha)."""
    if alpha >= 0:
        return Fraction(sum(h ** alpha for h in hooks_of(parts)))
    return sum(Fraction(1, h ** -alpha) for h in hooks_of(parts))


def hook_beta_sum(n, beta):
    """sum over partitions of n of prod(1 - beta/h^2), exactly.

    Uses the tableau-count form: the sum equals
    (1/n!^2) * sum_lambda f_lambda^2 * prod(h^2 - beta), which keeps the
    accumulation in integer arithmetic (one Fraction at the end).  The sum
    is restricted to conjugate-class representatives (hooks are preserved
    by conjugation).
    """
    beta = Fraction(beta)
    p, q = beta.numerator, beta.denominator
    fact = factorial(n)
    total = 0
    for parts, hooks in zip(partition_tuples(n), hook_lists(n)):
        conj = conjugate_of(parts)
        if conj > parts:
            continue
        mult = 1 if conj == parts else 2
        num = 1
        ph = 1
        for h in hooks:
            ph *= h
            num *= q * h * h - p
        f = fact // ph
        total += mult * f * f * num
    return Fraction(total, fact * fact * q ** n)


def hook_beta_sum_poly(n):
    """sum over partitions of n of prod(1 - beta/h^2), as a BetaPoly.

    Same integer-arithmetic scheme as hook_beta_sum, with a polynomial
    accumulator: coefficients of sum_lambda f^2 * prod(h^2 - beta) are
    divided by n!^2 once at the end.
    """
    fact = factorial(n)
    acc = [0] * (n + 1)
    for parts, hooks in zip(partition_tuples(n), hook_lists(n)):
        conj = conjugate_of(parts)
        if conj > parts:
            continue
        mult = 1 if conj == parts else 2
        poly = [1]
        ph = 1
        for h in hooks:
            h2 = h * h
            ph *= h
            poly.append(-poly[-1])
            for i in range(len(poly) - 2, 0, -1):
                poly[i] = h2 * poly[i] - poly[i - 1]
            poly[0] = h2 * poly[0]
        f = fact // ph
        w = mult * f * f
        for i, c in enumerate(poly):
            acc[i] += w * c
    fact2 = fact * fact
    return BetaPoly([Fraction(c, fact2) for c in acc])


# ---------------------------------------------------------------------------
# aggregate multisets over all partitions of n

def hook_multiset_all(n):
    """Multiset of all hook lengths of all partitions of n (Counter)."""
    census = Counter()
    for hooks in hook_lists(n):
        census.update(hooks)
    return census


def parts_multiset_duplicated(n):
    """Multiset of parts of all partitions of n, a part k counted k times."""
    census = Counter()
    for parts in partition_tuples(n):
        for row in parts:
            census[row] += row
    return census


def part_occurrence_census(n):
    """How many times each value occurs as a part among partitions of n."""
    census = Counter()
    for parts in partition_tuples(n):
        census.update(parts)
    return census


def hook_type_census(n):
    """Counter of (arm, leg) pairs over all cells of all partitions of n."""
    census = Counter()
    for parts in partition_tuples(n):
        conj = conjugate_of(parts)
        for i, row in enumerate(parts):
            for j in range(row):
                census[(row - j - 1, conj[j] - i - 1)] += 1
    return census


# ---------------------------------------------------------------------------
# special shapes

def staircase(m):
    """The staircase partition (m, m-1, ..., 1)."""
    return Partition(range(m, 0, -1))


def doubled_staircase(m):
    """The doubled staircase (m, m, m-1, m-1, ..., 1, 1)."""
    out = []
    for k in range(m, 0, -1):
        out += [k, k]
    return Partition(out)


# ---------------------------------------------------------------------------

class Partition:
    """A partition with cached diagram statistics.

    >>> lam = Partition((2,))
    >>> sorted(lam.hooks())
    [1, 2]
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        object.__setattr__(self, "parts", validate_partition(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def from_csv(cls, text):
        """Parse "14,10,6" (the empty string is the empty partition)."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(tok.strip()) for tok in text.split(",")))

    def to_csv(self):
        return ",".join(str(x) for x in self.parts)

    @property
    def weight(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Partition(%r)" % (self.parts,)

    def conjugate(self):
        return Partition(conjugate_of(self.parts))

    def cells(self):
        """Yield 1-based (i, j) cells, row-major."""
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                yield (i, j)

    def _check_cell(self, i, j):
        if not (1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]):
            raise ValueError("cell (%d, %d) not in %r" % (i, j, self.parts))

    def arm(self, i, j):
        self._check_cell(i, j)
        return self.parts[i - 1] - j

    def leg(self, i, j):
        self._check_cell(i, j)
        return conjugate_of(self.parts)[j - 1] - i

    def content(self, i, j):
        self._check_cell(i, j)
        return j - i

    def hook(self, i, j):
        return self.arm(i, j) + self.leg(i, j) + 1

    def hooks(self):
        return hooks_of(self.parts)

    def hook_multiset(self):
        return Counter(hooks_of(self.parts))

    def first_column_hooks(self):
        return first_column_hooks_of(self.parts)

    def b_stat(self):
        return b_stat_of(self.parts)

    def syt_count(self):
        return syt_count_of(self.parts)

    def hook_beta_poly(self):
        return hook_beta_poly_of(self.parts)

    def hook_eval(self, beta):
        return hook_eval_product(self.parts, beta)
