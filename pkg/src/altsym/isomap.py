"""Evaluate the isomorphism G -> Sym_n and certify a recognition result.

Points of the bundle are read off through the 3-cycles
``c_j = c^(g^(j-3))`` whose supports are the windows {j-2, j-1, j}.
Certification writes every generator of G as a word in the standard
generators and compares inside G, so a passing verdict does not depend on
the point evaluation being right.
"""
from __future__ import annotations

from dataclasses import dataclass

from .blackbox import Element, GroupOracle, RecognitionFailed, commutes, conjugate, power
from .perm import Permutation, standard_generator_perms
from .recognizer import CycleBundle, FixedPointTester, StandardGenerators, check_carmichael_presentation


class InconsistentImage(RecognitionFailed):
    """Point images do not assemble into a permutation."""


@dataclass(frozen=True)
class Word:
    """Word over S, T and their inverses (written s, t)."""
    letters: str = ""

    def __post_init__(self):
        if set(self.letters) - set("SsTt"):
            raise ValueError("letters must come from S, s, T, t")

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(self.letters[::-1].swapcase())

    def _runs(self):
        i, L = 0, self.letters
        while i < len(L):
            j = i
            while j < len(L) and L[j] == L[i]:
                j += 1
            yield L[i], j - i
            i = j

    def evaluate(self, G: GroupOracle, s: Element, t: Element) -> Element:
        base = {"S": s, "T": t}
        if "s" in self.letters:
            base["s"] = G.inv(s)
        if "t" in self.letters:
            base["t"] = G.inv(t)
        cache: dict[tuple[str, int], Element] = {}
        out = None
        for letter, run in self._runs():
            if (letter, run) not in cache:
                cache[letter, run] = power(G, base[letter], run)
            x = cache[letter, run]
            out = x if out is None else G.mul(out, x)
        return G.identity() if out is None else out

    def to_perm(self, n: int) -> Permutation:
        s, t = standard_generator_perms(n)
        table = {"S": s, "s": s.inverse(), "T": t, "t": t.inverse()}
        out = Permutation.identity(n)
        for letter in self.letters:
            out = out * table[letter]
        return out


# -- words for even permutations ---------------------------------------------

def _s_power(a: int, n: int) -> str:
    a %= n - 2
    return "S" * a if 2 * a <= n - 2 else "s" * (n - 2 - a)


def _triple_word(j: int, n: int) -> Word:
    """Word for the 3-cycle (1,2,j), 3 <= j <= n."""
    a = j - 3
    core = "t" if n % 2 == 0 and a % 2 else "T"
    return Word(_s_power(-a, n) + core + _s_power(a, n))


def perm_to_standard_word(p: Permutation, n: int, kind: str = "alt",
                          odd_reference: Permutation | None = None) -> Word:
    """Word in the standard generators of Alt_n evaluating to p.

    An odd p is only accepted for kind "sym" with an odd reference r0; the
    word returned is then the one for ``p * r0^-1``.
    """
    if p.degree != n:
        raise ValueError("degree mismatch")
    if n < 5:
        raise ValueError("n must be at least 5")
    if not p.is_even():
        if kind != "sym" or odd_reference is None:
            raise ValueError("odd permutation has no word in Alt_n")
        if odd_reference.is_even():
            raise ValueError("reference must be odd")
        p = p * odd_reference.inverse()
    elem = [None, None, None] + [_triple_word(j, n) for j in range(3, n + 1)]
    img = list(p._img)  # 0-based, updated to q = p * h1 * h2 ...
    factors: list[Word] = []
    for j in range(n, 2, -1):
        a = img[j - 1] + 1
        if a == j:
            continue
        if a == 1:
            h = elem[j].inverse()
            cyc = (1, j, 2)
        elif a == 2:
            h = elem[j]
            cyc = (1, 2, j)
        else:
            h = elem[a].inverse() + elem[j] + elem[a]
            cyc = (2, a, j)
        factors.append(h)
        hp = Permutation.from_cycles(cyc, degree=n)._img
        img = [hp[i] for i in img]
    # now p * h1 * ... * hm = 1, so p = (h1 ... hm)^-1
    word = Word("".join(f.letters for f in factors))
    return word.inverse()


# -- point evaluation --------------------------------------------------------

def standard_relabeling(bundle: CycleBundle) -> Permutation:
    """Map from bundle points to the labels used by the standard generators."""
    k, n = bundle.k, bundle.degree
    if bundle.parked is None:
        images = [3, 1, 2] + list(range(4, k + 1))
    else:
        images = list(range(2, k + 2)) + [1]
    return Permutation.from_images(images[:n])


class ImageEvaluator:
    """Point-by-point evaluation of the isomorphism defined by a bundle."""

    def __init__(self, G: GroupOracle, bundle: CycleBundle):
        if bundle.k < 7:
            raise RecognitionFailed("bundle too short to evaluate")
        self.G = G
        self.bundle = bundle
        self.k = bundle.k
        self.n = bundle.degree
        self.tester = FixedPointTester(G, bundle.g, bundle.c, bundle.k)
        self.relabel = standard_relabeling(bundle)

    def c_point(self, j: int) -> Element:
        """The 3-cycle on the window {j-2, j-1, j}, indices taken mod k."""
        return self.tester.chain[(j - 1) % self.k + 1 - 3]

    def point_in_support(self, i: int, h: Element, h_inv: Element | None = None) -> bool:
        return not self.tester.fixed(i, h, h_inv)

    def support_of_three_cycle(self, y: Element) -> frozenset[int]:
        """Support of a 3-cycle y; the parked point is labelled k+1."""
        G = self.G
        y_inv = G.inv(y)
        y2 = G.mul(y, y)
        pts = []
        for i in range(1, self.k + 1):
            ci = self.c_point(i)
            # a 3-cycle commuting with y either shares its support or avoids it
            if commutes(G, ci, y) and not (G.eq(ci, y) or G.eq(ci, y2)):
                continue
            if self.point_in_support(i, y, y_inv):
                pts.append(i)
        if len(pts) == 2 and self.n == self.k + 1:
            pts.append(self.k + 1)
        if len(pts) != 3:
            raise InconsistentImage(f"3-cycle support has {len(pts)} points")
        return frozenset(pts)

    def image_of_point(self, x: Element, j: int, x_inv: Element | None = None) -> int:
        G = self.G
        if x_inv is None:
            x_inv = G.inv(x)
        a = self.support_of_three_cycle(conjugate(G, self.c_point(j), x, x_inv))
        b = self.support_of_three_cycle(conjugate(G, self.c_point(j + 2), x, x_inv))
        common = a & b
        if len(common) != 1:
            raise InconsistentImage(f"image of point {j} is not determined")
        return next(iter(common))

    def evaluate(self, x: Element) -> Permutation:
        """Image of x in bundle coordinates."""
        G = self.G
        x_inv = G.inv(x)
        k = self.k
        supports = [None] + [self.support_of_three_cycle(conjugate(G, self.c_point(j), x, x_inv))
                             for j in range(1, k + 1)]
        images = []
        for j in range(1, k + 1):
            common = supports[j] & supports[(j + 1) % k + 1]
            if len(common) != 1:
                raise InconsistentImage(f"image of point {j} is not determined")
            images.extend(common)
        if self.n == k + 1:
            images.extend(set(range(1, k + 2)) - set(images))
        if sorted(images) != list(range(1, self.n + 1)):
            raise InconsistentImage("point images do not form a permutation")
        return Permutation.from_images(images)

    def standard_image(self, x: Element) -> Permutation:
        """Image of x in the labeling where the standard generators are canonical."""
        return self.evaluate(x).conjugate(self.relabel)


def point_in_support(G: GroupOracle, bundle: CycleBundle, i: int, h: Element) -> bool:
    return ImageEvaluator(G, bundle).point_in_support(i, h)


def image_of_point(G: GroupOracle, bundle: CycleBundle, x: Element, j: int) -> int:
    return ImageEvaluator(G, bundle).image_of_point(x, j)


def evaluate_image(G: GroupOracle, bundle: CycleBundle, x: Element) -> Permutation:
    return ImageEvaluator(G, bundle).evaluate(x)


# -- certification -----------------------------------------------------------

def certify(G: GroupOracle, std: StandardGenerators) -> tuple[str, list[Permutation]]:
    """Prove G = <generators> is Alt_n or Sym_n, or raise RecognitionFailed.

    Returns the kind and the standard-labelled image of every generator.
    """
    n, s, t = std.degree, std.s, std.t
    if not check_carmichael_presentation(G, s, t, n):
        raise RecognitionFailed("standard generators fail the presentation")
    ev = ImageEvaluator(G, std.bundle)
    if ev.n != n:
        raise RecognitionFailed("bundle degree disagrees with claimed degree")
    s0, t0 = standard_generator_perms(n)
    if ev.standard_image(s) != s0 or ev.standard_image(t) != t0:
        raise RecognitionFailed("standard generators do not evaluate to the canonical pair")

    def check(x: Element, p: Permutation) -> None:
        if not G.eq(x, perm_to_standard_word(p, n).evaluate(G, s, t)):
            raise RecognitionFailed("generator differs from the word for its image")

    images = [ev.standard_image(x) for x in G.generators]
    ref = None
    for x, p in zip(G.generators, images):
        if p.is_even():
            check(x, p)
        elif ref is None:
            ref = (x, p)
            check(G.mul(x, x), p * p)
            x_inv = G.inv(x)
            check(conjugate(G, s, x, x_inv), s0.conjugate(p))
            check(conjugate(G, t, x, x_inv), t0.conjugate(p))
        else:
            x0, p0 = ref
            check(G.mul(x, G.inv(x0)), p * p0.inverse())
    return ("sym" if ref is not None else "alt"), images
