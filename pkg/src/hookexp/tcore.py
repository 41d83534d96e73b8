"""t-cores and their integer-vector codings.

A partition is a t-core when no cell has hook length t.  For odd t >= 3 a
t-core is encoded three equivalent ways, all indexed by residues mod t:

 * U-coding: in the "extended first-column hook set"
   H = {first-column hooks} union {-1, ..., -t}, take the largest element of
   each residue class mod t, listed as (u_0, ..., u_{t-1}) with u_i = i mod t
   (u_0 is always -t).

 * V-coding: subtract the common shift sum(U)/t from every u_i and list by
   residue again; the result sums to zero.

 * N-coding: integer vector (n_0, ..., n_{t-1}) with sum zero, obtained from
   H by n_i = max over elements e of H with (e - l) = i mod t of
   floor((e - l)/t) + 1, where l is the number of rows.

The decoding direction reconstructs the first-column hooks from V by closing
each positive class downward in steps of t.  Weight and hook products are
polynomial in the codings: see core_weight_from_v / core_product_from_v.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt

from .partition import (
    first_column_hooks_of,
    hook_lists,
    hooks_of,
    partition_tuples,
    validate_partition,
)


def _parts_of(obj):
    """Accept a Partition, tuple or list; return a validated tuple."""
    parts = tuple(obj)
    return validate_partition(parts)


def _require_coding_t(t):
    if not isinstance(t, int) or t < 3 or t % 2 == 0:
        raise ValueError("codings need an odd t >= 3, got %r" % (t,))


def is_t_core(parts, t):
    """True when no hook length equals t (any integer t >= 1)."""
    if not isinstance(t, int) or t < 1:
        raise ValueError("t must be a positive integer")
    return t not in hooks_of(_parts_of(parts))


def validate_t_compact(elements, t):
    """Raise unless `elements` is t-compact.

    Three conditions: the non-positive elements are exactly -1..-t; positive
    elements are never divisible by t; and e - t is present for every
    positive element e.
    """
    elems = set(elements)
    negatives = {e for e in elems if e <= 0}
    if negatives != set(range(-t, 0)):
        raise ValueError("non-positive elements must be exactly -1..-t")
    for e in elems:
        if e > 0:
            if e % t == 0:
                raise ValueError("positive element %d divisible by t=%d" % (e, t))
            if e - t not in elems:
                raise ValueError("missing %d below positive element %d" % (e - t, e))


@dataclass(frozen=True)
class HSet:
    """Extended first-column hook set of a t-core; t-compact by construction."""

    t: int
    elements: frozenset

    def __post_init__(self):
        _require_coding_t(self.t)
        validate_t_compact(self.elements, self.t)

    def sorted_desc(self):
        return tuple(sorted(self.elements, reverse=True))


def h_set(parts, t):
    """HSet of a t-core: first-column hooks together with -1..-t."""
    _require_coding_t(t)
    parts = _parts_of(parts)
    if not is_t_core(parts, t):
        raise ValueError("%r is not a %d-core" % (parts, t))
    elems = set(first_column_hooks_of(parts))
    elems.update(range(-t, 0))
    return HSet(t, frozenset(elems))


def max_by_residue(elements, t):
    """Largest element of each residue class mod t, as a dict residue -> max."""
    best = {}
    for e in elements:
        r = e % t
        if r not in best or e > best[r]:
            best[r] = e
    return best


def u_coding(parts, t):
    """U-coding (u_0, ..., u_{t-1}), u_i = i mod t, u_0 = -t."""
    hs = h_set(parts, t)
    best = max_by_residue(hs.elements, t)
    u = tuple(best[i] for i in range(t))
    assert u[0] == -t
    return u


def v_coding(parts, t):
    """Zero-sum V-coding, listed by residue (v_i = i mod t)."""
    u = u_coding(parts, t)
    s = sum(u)
    assert s % t == 0, "U-coding sum must be divisible by t"
    shift = s // t
    # the shift is determined by the length and t alone
    assert shift == len(_parts_of(parts)) - (t - 1) // 2 - 1
    shifted = [x - shift for x in u]
    v = [None] * t
    for x in shifted:
        r = x % t
        assert v[r] is None
        v[r] = x
    v = tuple(v)
    assert sum(v) == 0
    return v


def n_coding(parts, t):
    """Zero-sum N-coding derived from the extended hook set."""
    hs = h_set(parts, t)
    length = len(_parts_of(parts))
    best = {}
    for e in hs.elements:
        d = e - length
        r = d % t
        reg = d // t + 1
        if r not in best or reg > best[r]:
            best[r] = reg
    n = tuple(best[i] for i in range(t))
    assert sum(n) == 0, "N-coding must sum to zero"
    return n


def v_from_n(nvec, t):
    """Convert an N-coding to the V-coding of the same core."""
    _require_coding_t(t)
    if len(nvec) != t or sum(nvec) != 0:
        raise ValueError("N-coding must have t entries summing to zero")
    tp = (t - 1) // 2
    v = [0] * t
    for i in range(0, tp + 1):
        v[i] = t * nvec[i + tp] + i
    for i in range(tp + 1, t):
        v[i] = t * nvec[i - tp - 1] + i - t
    v = tuple(v)
    assert sum(v) == 0
    return v


def n_from_v(vvec, t):
    """Inverse of v_from_n."""
    _require_coding_t(t)
    _validate_v(vvec, t)
    tp = (t - 1) // 2
    n = [None] * t
    for v in vvec:
        j = (v + tp) % t
        q, r = divmod(v + tp - j, t)
        assert r == 0
        assert n[j] is None
        n[j] = q
    return tuple(n)


def _validate_v(vvec, t):
    if len(vvec) != t or sum(vvec) != 0:
        raise ValueError("V-coding must have t entries summing to zero")
    for i, v in enumerate(vvec):
        if v % t != i:
            raise ValueError("V-coding entry %d must be %d mod t" % (v, i))


def u_from_v(vvec, t):
    """Recover the U-coding from a V-coding (shift back by -t - min V)."""
    _require_coding_t(t)
    _validate_v(vvec, t)
    shift = -t - min(vvec)
    u = [None] * t
    for v in vvec:
        x = v + shift
        u[x % t] = x
    u = tuple(u)
    assert u[0] == -t
    return u


def core_from_v(vvec, t):
    """Decode a V-coding back to its t-core (as a plain tuple of parts)."""
    u = u_from_v(vvec, t)
    hooks = []
    for x in u:
        while x > 0:
            hooks.append(x)
            x -= t
    hooks.sort(reverse=True)
    length = len(hooks)
    parts = tuple(h - length + i for i, h in enumerate(hooks, start=1))
    parts = validate_partition(parts)
    assert is_t_core(parts, t)
    assert v_coding(parts, t) == tuple(vvec)
    return parts


def core_weight_from_v(vvec, t):
    """Weight of the coded core: sum(v^2)/(2t) - (t^2 - 1)/24, exactly."""
    _require_coding_t(t)
    _validate_v(vvec, t)
    sq = sum(v * v for v in vvec)
    num = 12 * sq - t * (t * t - 1)
    q, r = divmod(num, 24 * t)
    if r:
        raise ValueError("weight formula did not produce an integer")
    return q


def core_weight_from_n(nvec, t):
    """Weight of the coded core: (t/2) * sum(n^2) + sum(i * n_i), exactly."""
    _require_coding_t(t)
    if len(nvec) != t or sum(nvec) != 0:
        raise ValueError("N-coding must have t entries summing to zero")
    num = t * sum(m * m for m in nvec) + 2 * sum(i * m for i, m in enumerate(nvec))
    q, r = divmod(num, 2)
    assert r == 0
    return q


def core_product_from_v(vvec, t):
    """prod over cells of (1 - t^2/h^2) as a difference product:

    (-1)^((t-1)/2) / (1! 2! ... (t-1)!) times prod_{i<j} (v_i - v_j).
    """
    _require_coding_t(t)
    _validate_v(vvec, t)
    tp = (t - 1) // 2
    num = 1
    for i in range(t):
        for j in range(i + 1, t):
            num *= vvec[i] - vvec[j]
    den = 1
    for i in range(1, t):
        den *= factorial(i)
    return Fraction((-1) ** tp * num, den)


# ---------------------------------------------------------------------------
# enumeration

def enumerate_t_cores(n, t, method="filter"):
    """All t-cores of n, reverse-lexicographic, as plain tuples.

    method="filter" scans all partitions of n; method="coding" (odd t >= 3
    only) enumerates zero-sum N-codings of weight n and decodes them.
    """
    if method == "filter":
        if not isinstance(t, int) or t < 1:
            raise ValueError("t must be a positive integer")
        return [parts
                for parts, hooks in zip(partition_tuples(n), hook_lists(n))
                if t not in hooks]
    if method != "coding":
        raise ValueError("method must be 'filter' or 'coding'")
    _require_coding_t(t)
    cores = [core_from_v(v_from_n(nvec, t), t) for nvec in _codings_of_weight(n, t)]
    cores.sort(reverse=True)
    return cores


def _codings_of_weight(n, t):
    """All zero-sum N-codings with core weight exactly n."""
    # Each coordinate contributes (t/2)m^2 + i*m >= (t/2)m^2 - (t-1)|m|,
    # so |m| is bounded by the positive root of (t/2)m^2 - (t-1)m - n.
    bound = ((t - 1) + isqrt((t - 1) ** 2 + 2 * t * n)) // t + 1
    # doubled per-coordinate weight, and the least it can still add
    twice = [[t * m * m + 2 * i * m for m in range(-bound, bound + 1)]
             for i in range(t)]
    least = [min(row) for row in twice]
    tail_least = [0] * (t + 1)
    for i in range(t - 1, -1, -1):
        tail_least[i] = tail_least[i + 1] + least[i]
    out = []
    vec = [0] * t

    def descend(i, rsum, acc):
        if i == t - 1:
            m = -rsum
            if abs(m) > bound:
                return
            if acc + t * m * m + 2 * i * m == 2 * n:
                vec[i] = m
                out.append(tuple(vec))
            return
        row = twice[i]
        for k in range(2 * bound + 1):
            nacc = acc + row[k]
            if nacc + tail_least[i + 1] > 2 * n:
                continue
            vec[i] = k - bound
            descend(i + 1, rsum + k - bound, nacc)

    descend(0, 0, 0)
    return out
