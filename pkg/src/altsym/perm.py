"""Permutation backend: concrete permutations, samplers and the shroud.

Points are 1-based in every public constructor, repr and file format;
images are stored 0-based internally.  Products use the right action,
``i^(pq) = (i^p)^q``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .blackbox import Element, GroupOracle


class Permutation:
    __slots__ = ("_img",)

    def __init__(self, images: Iterable[int]):
        img = tuple(images)
        if sorted(img) != list(range(len(img))):
            raise ValueError("images must be a bijection of 0..n-1")
        self._img = img

    @classmethod
    def _raw(cls, img: tuple) -> "Permutation":
        p = object.__new__(cls)
        p._img = img
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        """From a 1-based image list ``[1^p, 2^p, ...]``."""
        return cls(i - 1 for i in images)

    @classmethod
    def from_cycles(cls, *cycles: Sequence[int], degree: int | None = None) -> "Permutation":
        """From 1-based cycles, e.g. ``from_cycles((1, 2), (3, 4, 5), degree=6)``."""
        pts = [p for cyc in cycles for p in cyc]
        if len(pts) != len(set(pts)):
            raise ValueError("cycles must be disjoint")
        n = max(pts, default=0) if degree is None else degree
        if pts and max(pts) > n:
            raise ValueError("cycle point exceeds degree")
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls._raw(tuple(img))

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        """1-based image list."""
        return tuple(i + 1 for i in self._img)

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, e: int) -> "Permutation":
        if e < 0:
            return self.inverse() ** (-e)
        result = Permutation.identity(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._img)
        for i, j in enumerate(self._img):
            inv[j] = i
        return Permutation._raw(tuple(inv))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self) -> int:
        return hash(self._img)

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 1-based, each starting at its smallest point."""
        seen = [False] * len(self._img)
        out = []
        for i in range(len(self._img)):
            if seen[i] or self._img[i] == i:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self._img[j]
            out.append(tuple(cyc))
        return out

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, j in enumerate(self._img) if i != j)

    def order(self) -> int:
        from math import lcm
        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def conjugate(self, other: "Permutation") -> "Permutation":
        """``self^other = other^-1 self other``."""
        return other.inverse() * self * other

    def __repr__(self) -> str:
        cyc = self.cycles()
        body = "".join("(" + ",".join(map(str, c)) + ")" for c in cyc) or "()"
        return f"Permutation{body}[{self.degree}]"


def compose(p: Permutation, q: Permutation) -> Permutation:
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation._raw(tuple(map(q._img.__getitem__, p._img)))


def cycle_type(p: Permutation) -> list[int]:
    """Cycle lengths including fixed points, longest first."""
    lengths = [len(c) for c in p.cycles()]
    lengths += [1] * (p.degree - sum(lengths))
    return sorted(lengths, reverse=True)


def _parity_of(img: Sequence[int]) -> int:
    n = len(img)
    seen = bytearray(n)
    cycles = 0
    for i in range(n):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = 1
                j = img[j]
    return (n - cycles) & 1


def _random_images(kind: str, n: int, rng: np.random.Generator) -> list[int]:
    img = rng.permutation(n).tolist()
    if kind == "alt" and n >= 2 and _parity_of(img):
        # left multiplication by (1,2): a bijection from odd onto even permutations
        img[0], img[1] = img[1], img[0]
    return img


def uniform_random(kind: str, n: int, rng: np.random.Generator) -> Permutation:
    """Exactly uniform element of Sym_n or Alt_n."""
    if kind not in ("alt", "sym"):
        raise ValueError(f"unknown kind {kind!r}")
    return Permutation._raw(tuple(_random_images(kind, n, rng)))


# -- standard permutations ---------------------------------------------------

def standard_generator_perms(n: int) -> tuple[Permutation, Permutation]:
    """Standard generators (s, t) of Alt_n in the natural labeling."""
    t = Permutation.from_cycles((1, 2, 3), degree=n)
    if n % 2:
        s = Permutation.from_cycles(tuple(range(3, n + 1)), degree=n)
    else:
        s = Permutation.from_cycles((1, 2), tuple(range(3, n + 1)), degree=n)
    return s, t


def default_generators(kind: str, n: int) -> list[Permutation]:
    if kind == "sym":
        return [Permutation.from_cycles((1, 2), degree=n),
                Permutation.from_cycles(tuple(range(1, n + 1)), degree=n)]
    if kind == "alt":
        long = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
        return [Permutation.from_cycles((1, 2, 3), degree=n),
                Permutation.from_cycles(long, degree=n)]
    raise ValueError(f"unknown kind {kind!r}")


# -- negative controls -------------------------------------------------------

def _gf8_psl28() -> list[Permutation]:
    # GF(8) = GF(2)[a]/(a^3 + a + 1), elements as 3-bit ints; point 8 is infinity
    def fmul(x: int, y: int) -> int:
        r = 0
        for i in range(3):
            if (y >> i) & 1:
                r ^= x << i
        for deg in (4, 3):
            if r >> deg & 1:
                r ^= 0b1011 << (deg - 3)
        return r

    finv = {x: next(y for y in range(1, 8) if fmul(x, y) == 1) for x in range(1, 8)}
    inf = 8
    shift = [x ^ 1 for x in range(8)] + [inf]
    scale = [fmul(2, x) for x in range(8)] + [inf]
    invert = [inf] + [finv[x] for x in range(1, 8)] + [0]
    return [Permutation(shift), Permutation(scale), Permutation(invert)]


NEGATIVE_CONTROLS: dict[str, list[Permutation]] = {
    "c30": [Permutation.from_cycles((1, 2), (3, 4, 5), (6, 7, 8, 9, 10))],
    "d20": [Permutation.from_cycles(tuple(range(1, 11))),
            Permutation.from_cycles((2, 10), (3, 9), (4, 8), (5, 7), degree=10)],
    "psl28": _gf8_psl28(),
    "m11": [Permutation.from_cycles((2, 10), (4, 11), (5, 7), (8, 9), degree=11),
            Permutation.from_cycles((1, 4, 3, 8), (2, 5, 6, 9), degree=11)],
}


def enumerate_group(gens: Sequence[Permutation], cap: int = 200_000) -> list[Permutation] | None:
    """All elements of <gens> by breadth-first closure, or None past ``cap``."""
    n = gens[0].degree
    one = tuple(range(n))
    seen = {one}
    frontier = [one]
    gimgs = [g._img for g in gens]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gimgs:
                b = tuple(map(g.__getitem__, a))
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
                    if len(seen) > cap:
                        return None
        frontier = nxt
    return [Permutation._raw(x) for x in sorted(seen)]


# -- group specs and the shroud ---------------------------------------------

@dataclass
class GroupSpec:
    kind: str
    degree: int
    generators: list[Permutation] = field(default_factory=list)
    shroud_seed: int | None = None
    padding: int = 0

    def __post_init__(self):
        if self.kind not in ("alt", "sym", "generators"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.kind == "generators":
            if not self.generators:
                raise ValueError("generator list must be non-empty")
            degs = {g.degree for g in self.generators}
            if len(degs) != 1:
                raise ValueError("generators must share one degree")
            self.degree = degs.pop()
        elif self.degree < 1:
            raise ValueError("degree must be >= 1")
        if self.padding < 0:
            raise ValueError("padding must be >= 0")
        if not self.generators:
            self.generators = default_generators(self.kind, self.degree)

    @classmethod
    def named(cls, name: str, shroud_seed: int | None = None, padding: int = 0) -> "GroupSpec":
        """``alt-9``, ``sym-12`` or one of the negative controls (``m11``, ...)."""
        key = name.lower()
        if key in NEGATIVE_CONTROLS:
            return cls("generators", 0, list(NEGATIVE_CONTROLS[key]), shroud_seed, padding)
        kind, _, deg = key.partition("-")
        if kind in ("alt", "sym") and deg.isdigit():
            return cls(kind, int(deg), [], shroud_seed, padding)
        raise ValueError(f"unknown group name {name!r}")

    def to_json(self) -> dict:
        d = {"kind": self.kind, "degree": self.degree,
             "generators": [list(g.images) for g in self.generators]}
        if self.shroud_seed is not None or self.padding:
            d["shroud"] = {"seed": self.shroud_seed, "padding": self.padding}
        return d

    @classmethod
    def from_json(cls, d: dict) -> "GroupSpec":
        if not isinstance(d, dict) or "kind" not in d:
            raise ValueError("group spec must be an object with a 'kind'")
        gens = [Permutation.from_images(g) for g in d.get("generators", [])]
        shroud = d.get("shroud") or {}
        return cls(d["kind"], int(d.get("degree", 0)), gens,
                   shroud.get("seed"), int(shroud.get("padding", 0)))


def load_group_spec(path: str | Path) -> GroupSpec:
    return GroupSpec.from_json(json.loads(Path(path).read_text()))


def save_group_spec(spec: GroupSpec, path: str | Path) -> None:
    Path(path).write_text(json.dumps(spec.to_json()) + "\n")


class PermutationOracle(GroupOracle):
    """Black-box view of a permutation group, optionally shrouded.

    The shroud conjugates everything by a secret permutation of a possibly
    larger point set, so neither the degree nor the labeling can be read
    off the handles through the oracle contract.
    """

    def __init__(self, spec: GroupSpec, rng: np.random.Generator,
                 relabel: Sequence[int] | None = None):
        n = spec.degree
        D = n + spec.padding
        sigma = tuple(relabel) if relabel is not None else tuple(range(D))
        if sorted(sigma) != list(range(D)):
            raise ValueError("relabel must be a permutation of the padded point set")
        self._n, self._D = n, D
        self._sigma = sigma
        self._sigma_inv = Permutation._raw(sigma).inverse()._img
        self._rng = rng
        self._kind = spec.kind
        self._plain = D == n and sigma == tuple(range(n))
        self._elements = None
        if spec.kind == "generators":
            elts = enumerate_group(spec.generators)
            if elts is not None:
                self._elements = [self._embed(p._img) for p in elts]
            else:
                self._pr_state = [self._embed(g._img) for g in spec.generators]
                self._pr_state = (self._pr_state * 10)[:max(10, len(self._pr_state))]
                self._pr_acc = tuple(range(D))
                for _ in range(60):
                    self._product_replacement()
        super().__init__([self._embed(g._img) for g in spec.generators], tuple(range(D)))

    def _embed(self, img: Sequence[int]) -> tuple:
        if self._plain:
            return tuple(img)
        s = self._sigma
        out = list(range(self._D))
        for i, j in enumerate(img):
            out[s[i]] = s[j]
        return tuple(out)

    def _product_replacement(self) -> tuple:
        st = self._pr_state
        i, j = self._rng.choice(len(st), size=2, replace=False)
        b = st[j] if self._rng.integers(2) else self._inv(st[j])
        st[i] = self._mul(st[i], b)
        self._pr_acc = tuple(map(st[i].__getitem__, self._pr_acc))
        return self._pr_acc

    def _mul(self, a, b):
        return tuple(map(b.__getitem__, a))

    def _inv(self, a):
        inv = [0] * len(a)
        for i, j in enumerate(a):
            inv[j] = i
        return tuple(inv)

    def _eq(self, a, b):
        return a == b

    def _random(self):
        if self._kind in ("alt", "sym"):
            return self._embed(_random_images(self._kind, self._n, self._rng))
        if self._elements is not None:
            return self._elements[int(self._rng.integers(len(self._elements)))]
        return self._product_replacement()


def shroud(spec: GroupSpec, seed: int | np.random.SeedSequence | None = None) -> PermutationOracle:
    """Oracle for ``spec`` whose random stream is seeded by ``seed``.

    The secret relabeling is drawn from ``spec.shroud_seed`` (or from
    ``seed`` when the spec has none); padding adds invisible fixed points.
    """
    ss = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    sample_ss, relabel_ss = ss.spawn(2)
    if spec.shroud_seed is not None:
        relabel_ss = np.random.SeedSequence(spec.shroud_seed)
    D = spec.degree + spec.padding
    relabel = np.random.default_rng(relabel_ss).permutation(D).tolist()
    return PermutationOracle(spec, np.random.default_rng(sample_ss), relabel)


def natural_oracle(kind: str, n: int, seed: int | None = None) -> PermutationOracle:
    """Unshrouded oracle on Alt_n or Sym_n, for white-box work."""
    return PermutationOracle(GroupSpec(kind, n), np.random.default_rng(seed))


# -- white-box utilities (never used by the algorithms) ----------------------

def perm_of(G: PermutationOracle, x: Element) -> Permutation:
    """The permutation behind ``x`` in the spec's own labeling (degree n)."""
    s, si = G._sigma, G._sigma_inv
    h = x._h
    return Permutation._raw(tuple(si[h[s[i]]] for i in range(G._n)))


def element_of(G: PermutationOracle, p: Permutation) -> Element:
    if p.degree != G._n:
        raise ValueError("degree mismatch")
    return Element(G._embed(p._img))


def is_matching_cycle(g: Permutation, c: Permutation, k: int) -> bool:
    """True iff g is a k-cycle, c a 3-cycle and (g c^2, c) is a standard
    generating pair of Alt_k on the support of g."""
    from .recognizer import check_carmichael_presentation

    if cycle_type(g)[0] != k or k > g.degree or sum(1 for L in cycle_type(g) if L > 1) != 1:
        return False
    if sorted(L for L in cycle_type(c) if L > 1) != [3]:
        return False
    supp = sorted(g.support())
    if not c.support() <= set(supp):
        return False
    # restrict to the support of g, relabelled 1..k
    index = {p: i for i, p in enumerate(supp)}

    def restrict(p: Permutation) -> Permutation:
        return Permutation._raw(tuple(index[p(q)] for q in supp))

    G = natural_oracle("sym", k)
    s = element_of(G, restrict(g * c * c))
    t = element_of(G, restrict(c))
    return check_carmichael_presentation(G, s, t, k)

