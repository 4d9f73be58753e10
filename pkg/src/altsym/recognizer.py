"""Constructive recognition of Alt_n / Sym_n of unknown degree n <= N.

Everything here talks to the group through :class:`GroupOracle` only.
Sub-steps signal ``fail`` by raising :class:`RecognitionFailed`;
:func:`recognise` turns those into a failed outcome or a retry.
"""
from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass, field

from .blackbox import (
    Element,
    GroupOracle,
    ImpossibleOrder,
    OpCounters,
    RecognitionFailed,
    commutes,
    conjugate,
    has_prime_order,
    odd_part_exponent,
    odd_part_power,
    power,
    two_power_reduce,
)

# prescreen: a genuine 3-cycle c has c*c^r of order 1, 2, 3 or 5 for every r
_SCREEN_EXPONENT = 30
SCREEN_TRIALS = 6


@dataclass(frozen=True)
class CandidateParams:
    M: int
    B: int
    T: int
    C: int
    N: int
    epsilon: float

    @classmethod
    def default(cls, epsilon: float, N: int) -> "CandidateParams":
        lg = math.log(3 / epsilon)
        T = math.ceil(3 * lg)
        return cls(M=odd_part_exponent(N), B=math.ceil(13 * math.log(N) * lg), T=T,
                   C=math.ceil(3 * N * T / 5), N=N, epsilon=epsilon)


@dataclass(frozen=True)
class BolsterParams:
    S: int
    R: int

    @classmethod
    def default(cls, epsilon: float, N: int) -> "BolsterParams":
        R = math.ceil(7 / 4 * math.log(1 / epsilon))
        return cls(S=7 * N * R, R=R)


@dataclass
class CycleBundle:
    """c is (1,2,3) and g is (1,2,...,k) under the labeling being built.

    ``parked`` is the storage 3-cycle (1,2,b) holding one extra point, or
    None.  The bundle covers ``k`` points, plus one if a point is parked.
    """
    c: Element
    g: Element
    k: int
    parked: Element | None = None

    @property
    def degree(self) -> int:
        return self.k + (self.parked is not None)


@dataclass
class StandardGenerators:
    s: Element
    t: Element
    degree: int
    bundle: CycleBundle


@dataclass
class RecognitionOutcome:
    status: str
    degree: int | None = None
    kind: str | None = None
    standard_s: Element | None = None
    standard_t: Element | None = None
    bundle: CycleBundle | None = None
    counters: OpCounters = field(default_factory=OpCounters)
    phases: dict[str, OpCounters] = field(default_factory=dict)
    generator_images: list = field(default_factory=list)
    reason: str = ""
    passes: int = 0
    candidates_tried: int = 0
    peak_stored_elements: int = 0

    @property
    def success(self) -> bool:
        return self.status == "success"


def _order5(G: GroupOracle, x: Element) -> bool:
    return has_prime_order(G, x, 5)


# -- phase 1: putative 3-cycles ----------------------------------------------

def three_cycle_candidates(G: GroupOracle, epsilon: float, N: int,
                           params: CandidateParams | None = None) -> list[Element]:
    """Putative 3-cycles (t c)^2 from small-support involutions t.

    Raises :class:`ImpossibleOrder` when a random element has an order
    that no element of Sym_N can have.
    """
    p = params or CandidateParams.default(epsilon, N)
    ts = []
    for _ in range(p.B):
        ts.append(odd_part_power(G, G.random(), N))
    involutions = []
    for t in ts:
        t = two_power_reduce(G, t, N)
        if t is not None:
            involutions.append(t)
    out = []
    for t in involutions:
        gamma = []
        for _ in range(p.C):
            if len(gamma) >= p.T:
                break
            c = conjugate(G, t, G.random())
            if not commutes(G, t, c):
                gamma.append(c)
        for c in gamma:
            tc = G.mul(t, c)
            out.append(G.mul(tc, tc))
    return out


def looks_like_three_cycle(G: GroupOracle, c: Element, trials: int = SCREEN_TRIALS) -> bool:
    """One-sided filter: never rejects a genuine 3-cycle of Alt_n/Sym_n."""
    one = G.identity()
    if not has_prime_order(G, c, 3):
        return False
    for _ in range(trials):
        y = G.mul(c, conjugate(G, c, G.random()))
        if not G.eq(power(G, y, _SCREEN_EXPONENT), one):
            return False
    return True


# -- phase 2: a long cycle matching c ----------------------------------------

def is_pre_bolstering(G: GroupOracle, c: Element, r: Element, c2: Element | None = None) -> bool:
    if c2 is None:
        c2 = G.mul(c, c)
    r_inv = G.inv(r)
    cr = conjugate(G, c, r, r_inv)
    if commutes(G, cr, c):
        return False
    cr2 = conjugate(G, cr, r, r_inv)
    if G.eq(cr2, c) or G.eq(cr2, c2):
        return False
    return commutes(G, c, cr2)


def bolstering_elements(G: GroupOracle, c: Element, epsilon: float, N: int,
                        params: BolsterParams | None = None) -> list[Element]:
    p = params or BolsterParams.default(epsilon, N)
    c2 = G.mul(c, c)
    found = []
    for _ in range(p.S):
        if len(found) >= p.R:
            break
        r = G.random()
        if is_pre_bolstering(G, c, r, c2):
            found.append(r)
    out = []
    one = G.identity()
    for r in found:
        r_inv = G.inv(r)
        c_r2 = conjugate(G, conjugate(G, c, r, r_inv), r, r_inv)
        z = G.mul(conjugate(G, c, G.mul(G.mul(r, c), r)),
                  conjugate(G, c, G.mul(G.mul(r, c_r2), c)))
        # z is a 3-cycle iff c is oriented as (u,v,w) relative to r
        out.append(G.mul(c2, r) if G.eq(power(G, z, 3), one) else G.mul(c, r))
    return out


@dataclass
class CycleProbe:
    m: int
    alpha_eq_beta: bool
    diff_one: bool
    first_form: bool | None
    alpha_gt_beta: bool | None


def _probe(G: GroupOracle, c: Element, x: Element, N: int):
    x_inv = G.inv(x)
    c2 = G.mul(c, c)
    conjs = [c, conjugate(G, c, x, x_inv)]

    def upto(i):
        while len(conjs) <= i:
            conjs.append(conjugate(G, conjs[-1], x, x_inv))
        return conjs[i]

    m = 0
    while True:
        m += 1
        if 2 * m >= N:
            raise RecognitionFailed(f"min(alpha, beta) search reached N/2 (N={N})")
        if not _order5(G, G.mul(upto(m + 1), c)):
            break
    d = conjs[m + 1]
    if G.eq(d, c) or G.eq(d, c2):
        return CycleProbe(m, True, False, None, None), conjs, x_inv
    diff_one = not _order5(G, G.mul(upto(m + 2), c))
    first_form = has_prime_order(G, G.mul(d, c), 2)
    comm = commutes(G, conjs[m + 2], conjugate(G, d, c))
    alpha_gt_beta = (not comm) if first_form else comm
    return CycleProbe(m, False, diff_one, first_form, alpha_gt_beta), conjs, x_inv


def cycle_structure_probe(G: GroupOracle, c: Element, x: Element, N: int) -> CycleProbe:
    """Read off min(alpha, beta) and the shape of a bolstering element x."""
    return _probe(G, c, x, N)[0]


def build_cycle(G: GroupOracle, c: Element, x: Element, N: int) -> tuple[int, Element]:
    probe, conjs, x_inv = _probe(G, c, x, N)
    m = probe.m
    y = conjs[0]
    for i in range(1, m + 1):
        y = G.mul(y, conjs[i])
    if probe.alpha_eq_beta or probe.diff_one:
        return 2 * m + 3, y

    c2 = G.mul(c, c)
    d = conjs[m + 1]
    if not probe.first_form:
        if probe.alpha_gt_beta:
            e = conjugate(G, d, G.mul(x, c))
        else:
            e = conjugate(G, d, G.mul(x, c2))
            e = G.mul(e, e)
    else:
        if probe.alpha_gt_beta:
            e = conjugate(G, d, G.mul(x, c2))
        else:
            e = conjugate(G, d, G.mul(x, c))
            e = G.mul(e, e)
    z = conjugate(G, d, e)

    x2 = G.mul(x, x)
    x2_inv = G.mul(x_inv, x_inv)
    terms = [z]
    m2 = 0
    while True:
        m2 += 1
        if 2 * m2 >= N:
            raise RecognitionFailed(f"second cycle search reached N/2 (N={N})")
        w = conjugate(G, terms[-1], x2, x2_inv)
        if not _order5(G, G.mul(w, c)):
            break
        terms.append(w)
    g = y
    for w in terms:
        g = G.mul(g, w)
    return 2 * m2 + 2 * m + 3, g


def construct_long_cycle(G: GroupOracle, c: Element, epsilon: float, N: int) -> tuple[int, Element]:
    elements = bolstering_elements(G, c, epsilon / 2, N)
    need = math.ceil(7 / 4 * math.log(2 / epsilon))
    if len(elements) < need:
        raise RecognitionFailed(f"only {len(elements)} of {need} bolstering elements found")
    best = None
    for x in elements:
        k, g = build_cycle(G, c, x, N)
        if best is None or k > best[0]:
            best = (k, g)
    return best


# -- phase 3: extend to the full degree --------------------------------------

class FixedPointTester:
    """Decides whether bundle point j is fixed by an element r.

    Point j is identified with the 3-cycle ``c^(g^(j-3))``; all conjugates
    ``c^(g^e)`` for -2 <= e <= k+1 are computed once up front.
    """

    def __init__(self, G: GroupOracle, g: Element, c: Element, k: int | None = None):
        self.G = G
        self.g, self.c = g, c
        g_inv = G.inv(g)
        hi = 5 if k is None else k + 2
        chain = {0: c}
        for e in range(1, hi):
            chain[e] = conjugate(G, chain[e - 1], g, g_inv)
        if k is not None:
            chain[-1] = conjugate(G, c, g_inv, g)
            chain[-2] = conjugate(G, chain[-1], g_inv, g)
        self.chain = chain
        self._cache: dict[int, tuple] = {}

    def _sets(self, e: int):
        if e not in self._cache:
            G, ch = self.G, self.chain
            c0, c1, c2_, c3, c4 = (ch[e + i] for i in range(5))
            c3sq = G.mul(c3, c3)
            base = [c0, c2_, conjugate(G, c2_, G.mul(c3, c4))]
            y1 = G.mul(c1, c3)
            y2 = G.mul(c1, c3sq)
            y3 = G.mul(y2, c4)
            H1 = [G.mul(c0, c0), conjugate(G, c0, c1), conjugate(G, c0, y1),
                  conjugate(G, c0, y2), conjugate(G, c0, y3)]
            H2 = [c0, c1, conjugate(G, c1, c3), conjugate(G, c1, c3sq),
                  conjugate(G, c1, G.mul(c3sq, c4))]
            self._cache[e] = (base, H1, H2)
        return self._cache[e]

    def fixed(self, j: int, r: Element, r_inv: Element | None = None) -> bool:
        """IsFixedPoint(g, c^(g^(j-3)), r)."""
        G = self.G
        base, H1, H2 = self._sets(j - 3)
        if r_inv is None:
            r_inv = G.inv(r)
        X = [conjugate(G, b, r, r_inv) for b in base]
        for H in (H1, H2):
            for x in X:
                hits = 0
                for h in H:
                    if commutes(G, x, h):
                        hits += 1
                        if hits == 2:
                            return False
        return True


def is_fixed_point(G: GroupOracle, g: Element, c: Element, r: Element) -> bool:
    return FixedPointTester(G, g, c).fixed(3, r)


def adjust_cycle(G: GroupOracle, g: Element, c: Element, r: Element, k: int,
                 tester: FixedPointTester | None = None) -> Element:
    """Conjugate r so that it fixes points 1, 2 and moves 3."""
    tester = tester or FixedPointTester(G, g, c, k)
    r_inv = G.inv(r)
    F = [j for j in range(1, k + 1) if tester.fixed(j, r, r_inv)]
    if len(F) < 2 or len(F) == k:
        raise RecognitionFailed(f"AdjustCycle: |F| = {len(F)} with k = {k}")
    f1, f2 = F[0], F[1]
    Fs = set(F)
    low = Fs & {1, 2, 3, 4}
    c2 = G.mul(c, c)
    cg = tester.chain[1]
    gc2 = G.mul(g, c2)

    def cj(f):  # c^((g c^2)^(f-3)) = (1,2,f)
        return conjugate(G, c, power(G, gc2, f - 3))

    if low in ({1, 2, 3, 4}, {1, 2, 3}):
        m = next(i for i in range(1, k + 2) if i not in Fs)
        x = G.mul(conjugate(G, cj(m), c), c)
    elif low in ({1, 2, 4}, {1, 2}):
        x = G.identity()
    elif low == {1, 3, 4}:
        x = cg
    elif low == {1, 3}:
        x = conjugate(G, c2, g)
    elif low in ({1, 4}, {1}):
        x = conjugate(G, cj(f2), c)
    elif low in ({2, 3, 4}, {2, 4}):
        x = conjugate(G, c, cg)
    elif low == {2, 3}:
        x = conjugate(G, c2, cg)
    elif low == {2}:
        x = conjugate(G, cj(f2), cg)
    elif low in ({3, 4}, {3}):
        x = G.mul(conjugate(G, c2, power(G, gc2, f2 - 3)), c2)
    else:  # {4} or empty
        x = G.mul(cj(f2), cj(f1))
    return conjugate(G, r, x)


def append_points(G: GroupOracle, g: Element, c: Element, r: Element, s: Element,
                  k: int, k0: int) -> tuple[Element, Element, int]:
    one = G.identity()
    c2 = G.mul(c, c)
    gt, st, kt = g, s, k
    gc2 = G.mul(gt, c2)
    r_inv = G.inv(r)
    x = c
    for _ in range(1, k0):
        x = conjugate(G, x, r, r_inv)
        if not commutes(G, x, gc2):
            continue
        if G.eq(st, one):
            st = x
        elif not G.eq(st, x):
            kt += 2
            gt = G.mul(gt, conjugate(G, st, G.mul(x, x)))
            st = one
            gc2 = G.mul(gt, c2)
    return gt, st, kt


def check_carmichael_presentation(G: GroupOracle, s: Element, t: Element, n: int) -> bool:
    """Do (s, t) satisfy Carmichael's presentation of Alt_n?

    Also insists that t is non-trivial, so that a passing pair generates a
    copy of Alt_n rather than the trivial quotient.
    """
    if n < 5:
        raise ValueError("presentation check needs n >= 5")
    one = G.identity()
    if G.eq(t, one):
        return False
    if not G.eq(power(G, s, n - 2), one) or not G.eq(power(G, t, 3), one):
        return False
    even = n % 2 == 0
    if not G.eq(power(G, G.mul(s, t), n - 1 if even else n), one):
        return False
    s_inv = G.inv(s)
    t_inv = G.inv(t)
    u = t
    for j in range(1, (n - 2) // 2 + 1 if even else (n - 3) // 2 + 1):
        u = conjugate(G, u, s, s_inv)
        lead = t_inv if even and j % 2 else t
        w = G.mul(lead, u)
        if not G.eq(G.mul(w, w), one):
            return False
    return True


def standard_generators(G: GroupOracle, g: Element, c: Element, epsilon: float,
                        k: int, N: int) -> StandardGenerators:
    if k < 7:
        raise RecognitionFailed(f"cycle length {k} too short")
    one = G.identity()
    c2 = G.mul(c, c)
    s = one
    k0 = k - 2
    r = G.mul(g, c2)
    kt, gt = k, g
    count = math.ceil((math.log(N) + math.log(1 / epsilon)) / math.log(10 / 3))
    for _ in range(count):
        x = conjugate(G, r, G.random())
        adjusted = adjust_cycle(G, gt, c, x, kt)
        gt, s, kt = append_points(G, gt, c, adjusted, s, kt, k0)
        if kt > N:
            raise RecognitionFailed(f"cycle length {kt} exceeds N={N}")
    if G.eq(s, one):
        bundle = CycleBundle(c, gt, kt)
        std_s, std_t, n = G.mul(c2, gt), c, kt
    else:
        bundle = CycleBundle(c, gt, kt, parked=s)
        std_s, std_t, n = G.mul(gt, s), s, kt + 1
    if n > N:
        raise RecognitionFailed(f"degree {n} exceeds N={N}")
    if not check_carmichael_presentation(G, std_s, std_t, n):
        raise RecognitionFailed(f"presentation for Alt_{n} violated")
    return StandardGenerators(std_s, std_t, n, bundle)


# -- driver ------------------------------------------------------------------

class _PhaseMeter:
    def __init__(self, G: GroupOracle):
        self.G = G
        self.totals: dict[str, OpCounters] = {}

    @contextmanager
    def __call__(self, name: str):
        before = self.G.counters.snapshot()
        try:
            yield
        finally:
            delta = self.G.counters - before
            acc = self.totals.setdefault(name, OpCounters())
            acc.multiplications += delta.multiplications
            acc.inversions += delta.inversions
            acc.equality_tests += delta.equality_tests
            acc.random_draws += delta.random_draws


PHASES = ("candidates", "screen", "long_cycle", "standard_generators", "certification")


def recognise(G: GroupOracle, epsilon: float, N: int, *, prescreen: bool = True,
              certify: bool = True) -> RecognitionOutcome:
    """Decide whether G is Alt_n or Sym_n for some 9 <= n <= N.

    A success is certified (one-sided error); a failure may be wrong with
    probability at most epsilon when G really is Alt_n or Sym_n.
    """
    from .isomap import certify as certify_outcome

    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    if N < 9:
        raise ValueError("N must be at least 9")
    meter = _PhaseMeter(G)
    start = G.counters.snapshot()
    out = RecognitionOutcome("fail")
    passes = math.ceil(math.log2(1 / epsilon))

    def finish(outcome: RecognitionOutcome) -> RecognitionOutcome:
        outcome.counters = G.counters - start
        outcome.phases = {p: meter.totals.get(p, OpCounters()) for p in PHASES}
        outcome.passes, outcome.candidates_tried = out.passes, out.candidates_tried
        outcome.peak_stored_elements = out.peak_stored_elements
        return outcome

    for _ in range(passes):
        out.passes += 1
        try:
            with meter("candidates"):
                R = three_cycle_candidates(G, 1 / 4, N)
        except ImpossibleOrder as exc:
            out.reason = str(exc)
            return finish(out)
        out.peak_stored_elements = max(out.peak_stored_elements, len(R))
        for c in R:
            out.candidates_tried += 1
            if prescreen:
                with meter("screen"):
                    if not looks_like_three_cycle(G, c):
                        continue
            try:
                with meter("long_cycle"):
                    k, g = construct_long_cycle(G, c, 1 / 8, N)
                with meter("standard_generators"):
                    std = standard_generators(G, g, c, 1 / 8, k, N)
            except RecognitionFailed:
                continue
            kind, images = None, []
            if certify:
                try:
                    with meter("certification"):
                        kind, images = certify_outcome(G, std)
                except RecognitionFailed:
                    continue
            return finish(RecognitionOutcome(
                "success", degree=std.degree, kind=kind, standard_s=std.s,
                standard_t=std.t, bundle=std.bundle, generator_images=images))
    out.reason = out.reason or "no certified candidate within the pass budget"
    return finish(out)
