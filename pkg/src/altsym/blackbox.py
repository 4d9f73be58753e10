"""Black-box group contract, operation accounting and power primitives.

Algorithms in this package only ever touch group elements through a
:class:`GroupOracle`: multiply, invert, compare, draw a uniform random
element, and ask for the identity.  Every call is counted so that the
cost claims can be measured.
"""
from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import asdict, dataclass
from typing import Any, Sequence


class RecognitionFailed(Exception):
    """A subroutine could not produce its output (a ``fail`` return)."""


class ImpossibleOrder(RecognitionFailed):
    """An element order was found that no element of Sym_N can have.

    This certifies that the group is not Alt_n or Sym_n for any n <= N.
    """


@dataclass
class OpCounters:
    multiplications: int = 0
    inversions: int = 0
    equality_tests: int = 0
    random_draws: int = 0

    @property
    def total(self) -> int:
        return self.multiplications + self.inversions + self.equality_tests + self.random_draws

    def snapshot(self) -> "OpCounters":
        return OpCounters(**asdict(self))

    def reset(self) -> None:
        self.multiplications = self.inversions = 0
        self.equality_tests = self.random_draws = 0

    def __sub__(self, other: "OpCounters") -> "OpCounters":
        return OpCounters(
            self.multiplications - other.multiplications,
            self.inversions - other.inversions,
            self.equality_tests - other.equality_tests,
            self.random_draws - other.random_draws,
        )

    def as_dict(self) -> dict[str, int]:
        d = asdict(self)
        d["total"] = self.total
        return d


class Element:
    """Opaque handle to an element of one particular oracle.

    Handles carry no arithmetic of their own; equality between handles is
    only meaningful through :meth:`GroupOracle.eq`.
    """

    __slots__ = ("_h",)

    def __init__(self, handle: Any):
        self._h = handle

    def __repr__(self) -> str:
        return "<Element>"


class GroupOracle(ABC):
    """Counted black-box access to a group.

    Subclasses implement the ``_mul``/``_inv``/``_eq``/``_random`` hooks on
    raw handles; the public methods wrap them and do the bookkeeping.
    """

    def __init__(self, generator_handles: Sequence[Any], identity_handle: Any):
        self.counters = OpCounters()
        self.generators = [Element(h) for h in generator_handles]
        self._one = Element(identity_handle)

    @abstractmethod
    def _mul(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def _inv(self, a: Any) -> Any: ...

    @abstractmethod
    def _eq(self, a: Any, b: Any) -> bool: ...

    @abstractmethod
    def _random(self) -> Any: ...

    def mul(self, x: Element, y: Element) -> Element:
        self.counters.multiplications += 1
        return Element(self._mul(x._h, y._h))

    def inv(self, x: Element) -> Element:
        self.counters.inversions += 1
        return Element(self._inv(x._h))

    def eq(self, x: Element, y: Element) -> bool:
        self.counters.equality_tests += 1
        return self._eq(x._h, y._h)

    def random(self) -> Element:
        self.counters.random_draws += 1
        return Element(self._random())

    def identity(self) -> Element:
        return self._one


# -- derived operations ------------------------------------------------------

def is_identity(G: GroupOracle, x: Element) -> bool:
    return G.eq(x, G.identity())


def power(G: GroupOracle, x: Element, e: int) -> Element:
    """``x**e`` by square-and-multiply (O(log e) multiplications)."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    result = None
    base = x
    while e:
        if e & 1:
            result = base if result is None else G.mul(result, base)
        e >>= 1
        if e:
            base = G.mul(base, base)
    return G.identity() if result is None else result


def conjugate(G: GroupOracle, x: Element, y: Element, y_inv: Element | None = None) -> Element:
    """Right conjugation ``x^y = y^-1 x y``."""
    if y_inv is None:
        y_inv = G.inv(y)
    return G.mul(G.mul(y_inv, x), y)


def commutes(G: GroupOracle, x: Element, y: Element) -> bool:
    return G.eq(G.mul(x, y), G.mul(y, x))


def has_prime_order(G: GroupOracle, x: Element, q: int) -> bool:
    if q not in (2, 3, 5):
        raise ValueError("q must be 2, 3 or 5")
    one = G.identity()
    if G.eq(x, one):
        return False
    return G.eq(power(G, x, q), one)


def _odd_primes_upto(n: int) -> list[int]:
    if n < 3:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(sieve[p * p::p]))
    return [p for p in range(3, n + 1) if sieve[p]]


def odd_prime_powers(N: int) -> list[int]:
    """The factors ``p**floor(log_p N)`` for odd primes p <= N."""
    out = []
    for p in _odd_primes_upto(N):
        q = p
        while q * p <= N:
            q *= p
        out.append(q)
    return out


def odd_part_exponent(N: int) -> int:
    """M = prod over odd primes p <= N of p**floor(log_p N); always odd."""
    if N < 3:
        raise ValueError("N must be at least 3")
    return math.prod(odd_prime_powers(N))


def odd_part_power(G: GroupOracle, x: Element, N: int) -> Element:
    """``x**M`` computed one prime power at a time."""
    for q in odd_prime_powers(N):
        x = power(G, x, q)
    return x


def two_power_reduce(G: GroupOracle, x: Element, N: int) -> Element | None:
    """Square an element of 2-power order down to an involution.

    Returns ``x**(2**(a-1))`` for the least a >= 1 with ``x**(2**a) = 1``,
    or None when x is already trivial (the candidate is discarded).  Raises
    :class:`ImpossibleOrder` if no such a with ``a - 1 <= log2(N)`` exists.
    """
    one = G.identity()
    if G.eq(x, one):
        return None
    max_a = N.bit_length()  # floor(log2 N) + 1
    y = x
    for _ in range(max_a):
        z = G.mul(y, y)
        if G.eq(z, one):
            return y
        y = z
    raise ImpossibleOrder(f"2-part of an element order exceeds 2**{max_a - 1} > N={N}")
