"""Schreier-set combinatorics.

A finite set F of naturals is a Schreier set when F is empty or |F| <= min F.
A Schreier chain is a finite list of nonempty Schreier sets F_1 < F_2 < ...
(max of each set below the min of the next).  This module provides the
validated types, the covering number tau_1 (least number of consecutive
Schreier sets whose union is a given set) with a greedy solver and an
exhaustive oracle, and enumeration of all Schreier subsets of an interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .config import enumeration_bound

Elements = tuple[int, ...]


def finset(elements: Iterable[int]) -> Elements:
    """Canonicalize a finite subset of N as a strictly increasing tuple."""
    elems = tuple(sorted(elements))
    for e in elems:
        if not isinstance(e, int) or isinstance(e, bool) or e < 1:
            raise ValueError(f"set elements must be naturals >= 1, got {e!r}")
    for a, b in zip(elems, elems[1:]):
        if a == b:
            raise ValueError(f"duplicate element {a}")
    return elems


def is_schreier(elements: Iterable[int]) -> bool:
    """True iff the set is empty or its cardinality is at most its minimum."""
    elems = finset(elements)
    return not elems or len(elems) <= elems[0]


def is_spread(f: Iterable[int], g: Iterable[int]) -> bool:
    """True iff g is a spread of f: equal sizes and g_j >= f_j for every j."""
    fe, ge = finset(f), finset(g)
    return len(fe) == len(ge) and all(b >= a for a, b in zip(fe, ge))


@dataclass(frozen=True)
class SchreierSet:
    """A validated Schreier set (possibly empty)."""

    elements: Elements = ()

    def __post_init__(self) -> None:
        elems = finset(self.elements)
        if elems and len(elems) > elems[0]:
            raise ValueError(
                f"not a Schreier set: cardinality {len(elems)} exceeds min {elems[0]}"
            )
        object.__setattr__(self, "elements", elems)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __bool__(self) -> bool:
        return bool(self.elements)

    @property
    def min_element(self) -> int:
        if not self.elements:
            raise ValueError("empty set has no minimum")
        return self.elements[0]

    @property
    def max_element(self) -> int:
        if not self.elements:
            raise ValueError("empty set has no maximum")
        return self.elements[-1]


@dataclass(frozen=True)
class SchreierChain:
    """A nonempty list of nonempty, consecutive Schreier sets."""

    sets: tuple[SchreierSet, ...]

    def __post_init__(self) -> None:
        sets = tuple(
            s if isinstance(s, SchreierSet) else SchreierSet(tuple(s)) for s in self.sets
        )
        if not sets:
            raise ValueError("a Schreier chain must contain at least one set")
        for s in sets:
            if not s:
                raise ValueError("chain sets must be nonempty")
        for a, b in zip(sets, sets[1:]):
            if a.max_element >= b.min_element:
                raise ValueError(
                    f"chain sets must be consecutive: max {a.max_element} >= min {b.min_element}"
                )
        object.__setattr__(self, "sets", sets)

    def __iter__(self) -> Iterator[SchreierSet]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)


def tau1(elements: Iterable[int]) -> int:
    """Schreier covering number of a finite set; 0 for the empty set.

    Greedy left-to-right rule: each piece starts at the first uncovered
    element a and absorbs the next min(a, remaining) elements.  Minimality
    is not assumed; it is enforced by differential testing against
    tau1_bruteforce.
    """
    elems = finset(elements)
    count = 0
    i = 0
    while i < len(elems):
        count += 1
        i += elems[i]
    return count


def tau1_decompose(elements: Iterable[int]) -> list[SchreierSet]:
    """Greedy canonical witness: consecutive Schreier pieces whose union is the input."""
    elems = finset(elements)
    if not elems:
        raise ValueError("cannot decompose the empty set")
    pieces: list[SchreierSet] = []
    i = 0
    while i < len(elems):
        width = min(elems[i], len(elems) - i)
        pieces.append(SchreierSet(elems[i : i + width]))
        i += width
    return pieces


def tau1_bruteforce(elements: Iterable[int]) -> int:
    """Exhaustive covering-number oracle: try every split into consecutive blocks.

    Each block is accepted iff it is itself Schreier (a cover by larger
    Schreier sets can always be intersected down to the covered set, since
    subsets of Schreier sets are Schreier).
    """
    elems = finset(elements)
    bound = enumeration_bound()
    if len(elems) > bound:
        raise ValueError(f"oracle bound exceeded: |A| = {len(elems)} > {bound}")
    n = len(elems)

    @lru_cache(maxsize=None)
    def best(i: int) -> int:
        if i == n:
            return 0
        m = n  # singletons always work, so n pieces is an upper bound
        for j in range(i + 1, n + 1):
            if is_schreier(elems[i:j]):
                m = min(m, 1 + best(j))
        return m

    return best(0)


@lru_cache(maxsize=None)
def _schreier_subsets(n: int) -> tuple[Elements, ...]:
    """All Schreier subsets of [1, n] in lexicographic order on element lists."""
    out: list[Elements] = [()]

    def rec(cur: Elements, cap: int, start: int) -> None:
        out.append(cur)
        if len(cur) < cap:
            for a in range(start, n + 1):
                rec(cur + (a,), cap, a + 1)

    for a in range(1, n + 1):
        rec((a,), a, a + 1)
    return tuple(out)


def enumerate_schreier_subsets(n: int) -> Iterator[SchreierSet]:
    """Yield every Schreier subset of [1, n] exactly once (lexicographic order)."""
    if n < 0:
        raise ValueError(f"interval bound must be >= 0, got {n}")
    bound = enumeration_bound()
    if n > bound:
        raise ValueError(f"enumeration bound exceeded: N = {n} > {bound}")
    for elems in _schreier_subsets(n):
        yield SchreierSet(elems)
