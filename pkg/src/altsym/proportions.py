"""Exact proportions behind the recognition algorithm, with bound checks.

Every proportion is an exact :class:`fractions.Fraction`.  Bounds that
involve logarithms, roots or the gamma function are evaluated in floating
point and then inflated by a relative margin before the exact comparison,
so a reported pass never comes from rounding.  Rational bounds are
compared exactly.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

MARGIN = 1e-9
FULL_GROUP_CAP = 11
PARTITION_CAP = 35

# parameter instantiations used in the analysis
CHERNOFF_DELTA_INVOLUTIONS = Fraction(1, 2)
CHERNOFF_DELTA_BOLSTERING = Fraction(16, 25)
CYCLE_FRACTION_LONG = Fraction(3, 4)
CYCLE_FRACTION_COMMON_FP = Fraction(7, 10)


def fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def at_least(value: Fraction, bound: float, margin: float = MARGIN) -> bool:
    """value >= bound, with the float bound pushed up by a relative margin."""
    return value >= Fraction(bound) * (1 + Fraction(margin))


def at_most(value: Fraction, bound: float, margin: float = MARGIN) -> bool:
    return value <= Fraction(bound) * (1 - Fraction(margin))


# -- cycle-type DP -----------------------------------------------------------

def _cycle_dp(n: int, allowed: Callable[[int], bool]) -> tuple[list[Fraction], list[Fraction]]:
    """Proportions of even / odd elements of Sym_m, 0 <= m <= n, all of
    whose cycle lengths satisfy ``allowed``.

    Uses m * P(m) = sum over allowed l <= m of P(m - l), tracking parity:
    a cycle of length l has sign parity l - 1.
    """
    even = [Fraction(1)] + [Fraction(0)] * n
    odd = [Fraction(0)] * (n + 1)
    lengths = [l for l in range(1, n + 1) if allowed(l)]
    for m in range(1, n + 1):
        e = o = Fraction(0)
        for l in lengths:
            if l > m:
                break
            if (l - 1) & 1:
                e += odd[m - l]
                o += even[m - l]
            else:
                e += even[m - l]
                o += odd[m - l]
        even[m] = e / m
        odd[m] = o / m
    return even, odd


@lru_cache(maxsize=None)
def _no_multiple_table(b: int, n: int):
    return _cycle_dp(n, lambda l: l % b != 0)


@lru_cache(maxsize=None)
def _odd_multiple_table(b: int, n: int):
    return _cycle_dp(n, lambda l: l % b == 0 and (l // b) % 2 == 1)


def _table_upto(cache_fn, b: int, n: int):
    # round the table size up so that nearby queries share one DP
    size = max(16, 1 << (max(n, 1) - 1).bit_length())
    return cache_fn(b, size)


def t_b_exact(b: int, j: int) -> Fraction:
    """Proportion of Sym_(jb) whose cycle lengths are all odd multiples of b."""
    if b < 1 or j < 0:
        raise ValueError("need b >= 1 and j >= 0")
    T = [Fraction(1)]
    for m in range(1, j + 1):
        T.append(sum((T[m - i] for i in range(1, m + 1, 2)), Fraction(0)) / (m * b))
    return T[j]


def t_b_parity(b: int, j: int) -> tuple[Fraction, Fraction]:
    """(even, odd) split of :func:`t_b_exact`."""
    even, odd = _table_upto(_odd_multiple_table, b, j * b)
    return even[j * b], odd[j * b]


def t_b_bound(b: int, j: int) -> float:
    return 1.0 / (b * b * 3 ** (1 / (2 * b)) * j ** (1 - 1 / (2 * b)))


def no_multiple_cycle_exact(b: int, n: int, parity_filter: str = "all") -> Fraction:
    """Proportion of Sym_n with no cycle length divisible by b.

    ``parity_filter`` restricts the count to even or odd elements (still
    divided by n!).
    """
    if b < 2 or n < 0:
        raise ValueError("need b >= 2 and n >= 0")
    even, odd = _table_upto(_no_multiple_table, b, n)
    if parity_filter == "all":
        return even[n] + odd[n]
    if parity_filter == "even":
        return even[n]
    if parity_filter == "odd":
        return odd[n]
    raise ValueError(f"unknown parity filter {parity_filter!r}")


def _binom_fraction(a: Fraction, i: int) -> Fraction:
    out = Fraction(1)
    for r in range(i):
        out = out * (a - r) / (r + 1)
    return out


def no_multiple_cycle_closed_form(b: int, n: int) -> Fraction:
    """Same quantity from the generating function (1 - x^b)^(1/b) / (1 - x)."""
    a = Fraction(1, b)
    return sum(((-1) ** i * _binom_fraction(a, i) for i in range(n // b + 1)), Fraction(0))


def no_multiple_cycle_bound(b: int, n: int) -> float:
    if n < 1:
        raise ValueError("bound needs n >= 1")
    return b ** (1 / b) / (math.gamma(1 - 1 / b) * n ** (1 / b)) * (1 - 1 / n)


def small_support_j_max(b: int, n: int) -> int:
    """Largest j with j*b <= 4 sqrt(n) / 3, decided in integers."""
    j = 0
    while 9 * (b * (j + 1)) ** 2 <= 16 * n:
        j += 1
    return j


def u_b_exact(b: int, n: int, group: str = "sym", s_bar: Callable[[int, int], Fraction] | None = None) -> Fraction:
    """Proportion of elements with one b-part block of at most 4 sqrt(n)/3
    points (all cycle lengths odd multiples of b) and no other cycle length
    divisible by b."""
    J = small_support_j_max(b, n)
    total = Fraction(0)
    if group == "sym":
        sb = s_bar or no_multiple_cycle_exact
        for j in range(1, J + 1):
            total += sb(b, n - j * b) * t_b_exact(b, j)
        return total
    if group != "alt":
        raise ValueError(f"unknown group {group!r}")
    for j in range(1, J + 1):
        te, to = t_b_parity(b, j)
        se = no_multiple_cycle_exact(b, n - j * b, "even")
        so = no_multiple_cycle_exact(b, n - j * b, "odd")
        total += te * se + to * so
    return 2 * total


def prescribed_b(n: int) -> int:
    return 2 ** math.ceil(math.log2(math.log(n) / 3))


# -- partitions and conjugacy classes ----------------------------------------

def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class CycleTypeClass:
    partition: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.partition)

    @property
    def proportion(self) -> Fraction:
        """class size / n!."""
        denom = 1
        for l, a in _multiplicities(self.partition).items():
            denom *= l ** a * math.factorial(a)
        return Fraction(1, denom)

    @property
    def class_size(self) -> int:
        p = self.proportion * math.factorial(self.n)
        return p.numerator

    @property
    def parity(self) -> str:
        return "even" if sum(l - 1 for l in self.partition) % 2 == 0 else "odd"

    @property
    def order(self) -> int:
        return math.lcm(*self.partition) if self.partition else 1


def _multiplicities(partition) -> dict[int, int]:
    out: dict[int, int] = {}
    for l in partition:
        out[l] = out.get(l, 0) + 1
    return out


def _v2(x: int) -> int:
    return (x & -x).bit_length() - 1


def half_power_support(partition) -> int | None:
    """|supp x^(|x|/2)| for x of the given cycle type, None for odd order."""
    if all(l % 2 for l in partition):
        return None
    top = max(_v2(l) for l in partition)
    return sum(l for l in partition if _v2(l) == top)


def is_small_support(partition) -> bool:
    s = half_power_support(partition)
    return s is not None and 9 * s * s <= 16 * sum(partition)


def class_proportion(n: int, predicate: Callable[[tuple[int, ...]], bool], group: str = "sym") -> Fraction:
    """Exact proportion of Sym_n or Alt_n with cycle type satisfying predicate."""
    if n > PARTITION_CAP:
        raise ValueError(f"partition enumeration capped at n = {PARTITION_CAP}")
    total = Fraction(0)
    for part in partitions(n):
        cls = CycleTypeClass(part)
        if group == "alt" and cls.parity == "odd":
            continue
        if predicate(part):
            total += cls.proportion
    # Alt_1 = Sym_1, so only double from n = 2 on
    return total * 2 if group == "alt" and n >= 2 else total


def small_support_proportion(n: int, group: str = "sym") -> Fraction:
    if n < 2:
        raise ValueError("n must be at least 2")
    return class_proportion(n, is_small_support, group)


def small_support_bound(n: int) -> float:
    return 1 / (13 * math.log(n))


# -- involutions -------------------------------------------------------------

def involution_count(n: int, k: int) -> int:
    if k < 0 or 2 * k > n:
        raise ValueError("need 0 <= 2k <= n")
    return math.factorial(n) // (2 ** k * math.factorial(k) * math.factorial(n - 2 * k))


def trip_exact(n: int, k: int) -> Fraction:
    """Proportion of k-involutions sharing exactly one moved point with a fixed one."""
    if k < 1 or n < 4 * k:
        raise ValueError("need k >= 1 and n >= 4k")
    f = math.factorial
    return Fraction(4 * k * k * f(n - 2 * k) ** 2, f(n) * f(n - 4 * k + 1))


def sigma_conditional(n: int, k: int) -> Fraction:
    """|T| / (inv(n,k) - |C|): a lower bound for the chance that a
    non-commuting conjugate r of a k-involution s gives a 3-cycle (sr)^2."""
    if k < 1 or n < 4 * k:
        raise ValueError("need k >= 1 and n >= 4k")
    T = 2 * k * (n - 2 * k) * involution_count(n - 2 * k - 1, k - 1)
    C = involution_count(n - 2 * k, k)
    return Fraction(T, involution_count(n, k) - C)


def sigma_at_least_third(n: int, k: int) -> bool:
    """sigma_conditional(n, k) >= 1/3 via the equivalent integer inequality
    (1 + 12k^2/(n-4k+1)) * prod_{i=1..2k} (n-4k+i)/(n-2k+i) >= 1."""
    if k < 1 or n < 4 * k:
        raise ValueError("need k >= 1 and n >= 4k")
    a = n - 4 * k + 1
    num = math.prod(n - 4 * k + i for i in range(1, 2 * k + 1))
    den = math.prod(n - 2 * k + i for i in range(1, 2 * k + 1))
    return (a + 12 * k * k) * num >= a * den


def sigma_grid() -> Iterator[tuple[int, int]]:
    """(n, k) pairs the analysis settles by direct computation."""
    for k in range(1, 36):
        lo = max(10, math.ceil(Fraction(9 * k * k, 4)))
        for n in range(lo, 6 * k * k + k - 1):
            yield n, k


# -- pre-bolstering elements -------------------------------------------------

def pre_bolstering_count(n: int, k: int, group: str = "sym") -> int:
    if k > n:
        raise ValueError("need k <= n")
    if k < 7:
        return 0
    L = 12 * math.factorial(n - 3) * (k - 6)
    if group == "sym":
        return L
    if group == "alt":
        return L // 2
    raise ValueError(f"unknown group {group!r}")


def pre_bolstering_aggregate(n: int, group: str = "sym") -> Fraction:
    order = math.factorial(n) // (2 if group == "alt" else 1)
    return Fraction(sum(pre_bolstering_count(n, k, group) for k in range(7, n + 1)), order)


def pre_bolstering_aggregate_closed(n: int) -> Fraction:
    return Fraction(6 * (n - 5) * (n - 6), n * (n - 1) * (n - 2))


# -- common fixed points -----------------------------------------------------

def common_fixed_point_prob(n: int, k: int, t: int) -> Fraction:
    """Chance that t independent uniform k-cycles of Sym_n share a fixed point."""
    if not 1 <= k < n or t < 1:
        raise ValueError("need 1 <= k < n and t >= 1")
    total = Fraction(0)
    fixed = Fraction(1)  # P(a given (j+1)-set is fixed by one k-cycle)
    for j in range(n - k):
        fixed *= 1 - Fraction(k, n - j)
        total += (-1) ** j * math.comb(n, j + 1) * fixed ** t
    return total


def prescribed_rounds(n: int, alpha: float, epsilon: float) -> int:
    return math.ceil((math.log(n) + math.log(1 / epsilon)) / math.log(1 / (1 - alpha)))


def common_fixed_point_worst(n: int, alpha: float, epsilon: float) -> tuple[int, int, Fraction]:
    """(t, worst k, value) over alpha*n <= k <= n-1 at the prescribed t."""
    t = prescribed_rounds(n, alpha, epsilon)
    worst = None
    for k in range(math.ceil(alpha * n - 1e-12), n):
        v = common_fixed_point_prob(n, k, t)
        if worst is None or v > worst[1]:
            worst = (k, v)
    return t, worst[0], worst[1]


def common_fixed_point_monte_carlo(n: int, k: int, t: int, samples: int, seed: int = 0) -> float:
    rng = np.random.default_rng(seed)
    moved = np.zeros((samples, n), dtype=bool)
    rows = np.arange(samples)[:, None]
    for _ in range(t):
        supports = rng.random((samples, n)).argsort(axis=1)[:, :k]
        moved[rows, supports] = True
    return float((~moved).any(axis=1).mean())


# -- sample sizes ------------------------------------------------------------

def chernoff_sample_size(p: float, delta: float, epsilon: float) -> int:
    """Least T with exp(-delta^2 p T / 2) <= epsilon."""
    for name, v in (("p", p), ("delta", delta), ("epsilon", epsilon)):
        if not 0 < v < 1:
            raise ValueError(f"{name} must lie in (0, 1)")
    T = math.ceil(2 * math.log(1 / epsilon) / (delta * delta * p))
    while T > 0 and math.exp(-delta * delta * p * (T - 1) / 2) <= epsilon:
        T -= 1
    return T


# -- brute-force enumeration oracles -----------------------------------------

def _cycle_lengths(img) -> tuple[int, ...]:
    n = len(img)
    seen = bytearray(n)
    out = []
    for i in range(n):
        if not seen[i]:
            L = 0
            j = i
            while not seen[j]:
                seen[j] = 1
                j = img[j]
                L += 1
            out.append(L)
    return tuple(sorted(out, reverse=True))


def pre_bolstering_length(img, c_points=(0, 1, 2)) -> int | None:
    """k if the 0-based permutation is k-pre-bolstering for the 3-cycle on
    ``c_points``, by its cycle shape; None otherwise."""
    cset = set(c_points)
    nxt, gap = {}, {}
    for x in c_points:
        y, count = img[x], 0
        while y not in cset:
            y = img[y]
            count += 1
        nxt[x], gap[x] = y, count
    loners = [x for x in c_points if nxt[x] == x]
    if not loners:
        zeros = [x for x in c_points if gap[x] == 0]
        if len(zeros) == 1 and all(gap[x] >= 2 for x in c_points if gap[x] != 0):
            return sum(gap.values()) + 3
        return None
    if len(loners) != 1:
        return None
    v = loners[0]
    w, u = (x for x in c_points if x != v)
    if gap[w] != 0:
        w, u = u, w
    if gap[w] == 0 and gap[u] >= 2 and gap[v] >= 2:
        return gap[u] + gap[v] + 3
    return None


def _compose(a, b):
    return tuple(b[i] for i in a)


def _inverse(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def passes_pre_bolstering_test(img, c) -> bool:
    """The commutator criterion used by the algorithm, on 0-based tuples."""
    ri = _inverse(img)
    conj = lambda x, y, yi: _compose(_compose(yi, x), y)
    cr = conj(c, img, ri)
    if _compose(cr, c) == _compose(c, cr):
        return False
    cr2 = conj(cr, img, ri)
    c2 = _compose(c, c)
    if cr2 == c or cr2 == c2:
        return False
    return _compose(c, cr2) == _compose(cr2, c)


def k_involutions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All products of k disjoint transpositions of {0..n-1}, as image tuples."""
    def rec(avail: tuple[int, ...], left: int, pairs):
        if left == 0:
            img = list(range(n))
            for a, b in pairs:
                img[a], img[b] = b, a
            yield tuple(img)
            return
        for idx, a in enumerate(avail):
            if len(avail) - idx < 2 * left:
                return
            rest = avail[idx + 1:]
            for jdx, b in enumerate(rest):
                yield from rec(rest[:jdx] + rest[jdx + 1:], left - 1, pairs + [(a, b)])
    yield from rec(tuple(range(n)), k, [])


def _standard_involution(n: int, k: int) -> tuple[int, ...]:
    img = list(range(n))
    for i in range(k):
        img[2 * i], img[2 * i + 1] = 2 * i + 1, 2 * i
    return tuple(img)


@dataclass(frozen=True)
class InvolutionCensus:
    """Counts over the class of k-involutions relative to a fixed member s."""
    n: int
    k: int
    class_size: int
    one_common: int
    non_commuting: int
    three_cycle_products: int

    @property
    def trip(self) -> Fraction:
        return Fraction(self.one_common, self.class_size)

    @property
    def non_commuting_proportion(self) -> Fraction:
        return Fraction(self.non_commuting, self.class_size)

    @property
    def sigma(self) -> Fraction:
        """3-cycle products among non-commuting class members."""
        return Fraction(self.three_cycle_products, self.non_commuting)

    @property
    def sigma_unconditional(self) -> Fraction:
        return Fraction(self.three_cycle_products, self.class_size)


@lru_cache(maxsize=None)
def involution_census(n: int, k: int) -> InvolutionCensus:
    if n > 12:
        raise ValueError("involution enumeration capped at n = 12")
    s = _standard_involution(n, k)
    supp_s = {i for i in range(n) if s[i] != i}
    size = one = nc = three = 0
    for r in k_involutions(n, k):
        size += 1
        if len({i for i in range(n) if r[i] != i} & supp_s) == 1:
            one += 1
        sr = _compose(s, r)
        if sr == _compose(r, s):
            continue
        nc += 1
        if _cycle_lengths(_compose(sr, sr)) == (3,) + (1,) * (n - 3):
            three += 1
    return InvolutionCensus(n, k, size, one, nc, three)


PREDICATES = ("identity", "pre-bolstering", "pre-bolstering-test", "small-support",
              "no-multiple-cycle", "odd-multiple-cycles")


def enumerate_oracle(n: int, predicate: str, *, b: int | None = None, k: int | None = None,
                     group: str = "sym") -> Fraction:
    """Exact proportion of Sym_n / Alt_n elements satisfying a predicate,
    by walking all n! permutations (n <= 11)."""
    if n > FULL_GROUP_CAP:
        raise ValueError(f"full-group enumeration capped at n = {FULL_GROUP_CAP}")
    if predicate in ("no-multiple-cycle", "odd-multiple-cycles") and b is None:
        raise ValueError("predicate needs b")
    c = None
    if predicate == "pre-bolstering-test":
        c = tuple([1, 2, 0] + list(range(3, n)))

    def test(img) -> bool:
        if predicate == "identity":
            return True
        if predicate == "pre-bolstering":
            L = pre_bolstering_length(img)
            return L is not None and (k is None or L == k)
        if predicate == "pre-bolstering-test":
            return passes_pre_bolstering_test(img, c)
        lengths = _cycle_lengths(img)
        if predicate == "small-support":
            return is_small_support(lengths)
        if predicate == "no-multiple-cycle":
            return all(l % b for l in lengths)
        if predicate == "odd-multiple-cycles":
            return all(l % b == 0 and (l // b) % 2 for l in lengths)
        raise ValueError(f"unknown predicate {predicate!r}")

    hits = total = 0
    for img in itertools.permutations(range(n)):
        if group == "alt" and (n - len(_cycle_lengths(img))) % 2:
            continue
        total += 1
        hits += test(img)
    return Fraction(hits, total)


def pre_bolstering_census(n: int, group: str = "sym") -> dict[int, int]:
    """k -> number of k-pre-bolstering elements w.r.t. (1,2,3), by enumeration."""
    if n > 10:
        raise ValueError("pre-bolstering enumeration capped at n = 10")
    out: dict[int, int] = {}
    for img in itertools.permutations(range(n)):
        L = pre_bolstering_length(img)
        if L is None:
            continue
        if group == "alt" and (n - len(_cycle_lengths(img))) % 2:
            continue
        out[L] = out.get(L, 0) + 1
    return out


# -- tables ------------------------------------------------------------------

@dataclass
class Row:
    check: str
    n: int
    param: str
    exact: str
    bound: str
    passed: bool
    flag: str = ""

    def as_dict(self) -> dict:
        return {"check": self.check, "n": self.n, "param": self.param, "exact": self.exact,
                "bound": self.bound, "pass": self.passed, "flag": self.flag}


TABLES = ("small-support", "tb", "ub", "trip", "sigma", "prebolster", "common-fp")


def table_small_support(n_min: int = 9, n_max: int = 35) -> list[Row]:
    if n_max > PARTITION_CAP:
        raise ValueError(f"partition enumeration capped at n = {PARTITION_CAP}")
    rows = []
    for n in range(n_min, n_max + 1):
        bound = small_support_bound(n)
        for group in ("sym", "alt"):
            v = small_support_proportion(n, group)
            rows.append(Row("small-support", n, group, fmt(v), repr(bound), at_least(v, bound)))
    return rows


def table_tb(max_points: int = 400, bs=(2, 4, 8)) -> list[Row]:
    rows = []
    for b in bs:
        T = [Fraction(1)]
        for j in range(1, max_points // b + 1):
            T.append(sum((T[j - i] for i in range(1, j + 1, 2)), Fraction(0)) / (j * b))
            bound = t_b_bound(b, j)
            rows.append(Row("t_b", j * b, f"b={b}", fmt(T[j]), repr(bound), at_least(T[j], bound)))
    return rows


def table_no_multiple(n_max: int = 200, bs=(2, 4, 8), n_min: int = 1) -> list[Row]:
    rows = []
    for b in bs:
        for n in range(max(1, n_min), n_max + 1):
            v = no_multiple_cycle_exact(b, n)
            bound = no_multiple_cycle_bound(b, n)
            rows.append(Row("s_bar", n, f"b={b}", fmt(v), repr(bound), at_least(v, bound)))
    return rows


def table_ub(ns=(404, 500, 750, 1000)) -> list[Row]:
    rows = []
    for n in ns:
        b = prescribed_b(n)
        for bb, const in ((b, 16), (2 * b, 21)):
            v = u_b_exact(bb, n, "sym", s_bar=no_multiple_cycle_closed_form)
            bound = 1 / (const * math.log(n))
            rows.append(Row("u_b", n, f"b={bb}", fmt(v), repr(bound), at_least(v, bound)))
    return rows


def table_utb(n_min: int = 36, n_max: int = 60, bs=(4, 8)) -> list[Row]:
    rows = []
    for b in bs:
        for n in range(n_min, n_max + 1):
            sym = u_b_exact(b, n, "sym")
            alt = u_b_exact(b, n, "alt")
            bound = (1 - Fraction(1, b - 1)) * sym
            rows.append(Row("u_b alt vs sym", n, f"b={b}", fmt(alt), fmt(bound), alt >= bound))
    return rows


def table_trip(n_min: int = 9, n_max: int = 20) -> list[Row]:
    rows = []
    for n in range(n_min, n_max + 1):
        for k in range(1, n // 4 + 1):
            if 9 * k * k > 4 * n:
                break
            v = trip_exact(n, k)
            bound = Fraction(10, 3 * n)
            flag = "boundary-disputed" if (n, k) == (9, 2) else ""
            rows.append(Row("trip", n, f"k={k}", fmt(v), fmt(bound), v >= bound, flag))
    return rows


def table_sigma(n_min: int = 9, n_max: int = 40, ks=None) -> list[Row]:
    """Rows below n = 10 use the enumerated conditional proportion; the
    closed-form lower bound is only claimed from n = 10 on."""
    rows = []
    third = Fraction(1, 3)
    for n in range(n_min, n_max + 1):
        for k in range(1, n // 4 + 1):
            if 9 * k * k > 4 * n:
                break
            if ks is not None and k not in ks:
                continue
            if n < 10:
                v = involution_census(n, k).sigma
                rows.append(Row("sigma", n, f"k={k}", fmt(v), fmt(third), v >= third, "enumerated"))
            else:
                v = sigma_conditional(n, k)
                rows.append(Row("sigma", n, f"k={k}", fmt(v), fmt(third), v >= third))
    return rows


def table_prebolster(n_min: int = 7, n_max: int = 9) -> list[Row]:
    rows = []
    for n in range(n_min, n_max + 1):
        for group in ("sym", "alt"):
            census = pre_bolstering_census(n, group) if n <= 10 else None
            for k in range(7, n + 1):
                formula = pre_bolstering_count(n, k, group)
                got = census.get(k, 0) if census is not None else None
                rows.append(Row("pre-bolstering count", n, f"k={k},{group}", str(formula),
                                "n/a" if got is None else str(got), got is None or got == formula))
            agg = pre_bolstering_aggregate(n, group)
            bound = Fraction(2, 5 * n)
            rows.append(Row("pre-bolstering aggregate", n, group, fmt(agg), fmt(bound), agg >= bound))
    return rows


COMMON_FP_CASES = ((20, 0.7, 0.1), (50, 0.7, 0.05), (100, 0.75, 0.05))


def table_common_fp(cases=COMMON_FP_CASES) -> list[Row]:
    rows = []
    for n, alpha, eps in cases:
        t, k, v = common_fixed_point_worst(n, alpha, eps)
        rows.append(Row("common fixed point", n, f"alpha={alpha},t={t},worst k={k}", fmt(v),
                        repr(eps), v <= Fraction(eps)))
    return rows
