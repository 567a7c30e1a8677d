"""Exact norms of finitely supported vectors in S_p and B_p.

For a vector x with finite support and a Schreier set F,

    mu_p(x, F)   = (sum_{n in F} |x(n)|^p)^(1/p),          ||x||_{S_p} = sup_F mu_p
    beta_p(x, C) = (sum_{F in C} mu_1(x, F)^p)^(1/p),      ||x||_{B_p} = sup_C beta_p

where F ranges over Schreier sets and C over Schreier chains.  Both suprema
are attained on finite families and are computed exactly: S_p by a sweep over
the candidate minimum of the maximizing set, B_p by a dynamic program over
chain start positions.  Each fast engine has an enumeration-backed
brute-force oracle, and each returns an optimality witness.

Only real scalars are supported; every quantity depends on |x(n)| alone, so
the engines canonicalize to absolute values on entry.
"""

from __future__ import annotations

import heapq
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

from .config import chain_oracle_bound, enumeration_bound
from .schreier_core import Elements, SchreierChain, SchreierSet, _schreier_subsets


@dataclass(frozen=True)
class FinVec:
    """Finitely supported vector over 1-based coordinates; zeros are not stored."""

    entries: dict[int, float]

    def __post_init__(self) -> None:
        clean: dict[int, float] = {}
        for coord, value in self.entries.items():
            if not isinstance(coord, int) or isinstance(coord, bool) or coord < 1:
                raise ValueError(f"coordinates must be naturals >= 1, got {coord!r}")
            v = float(value)
            if v != 0.0:
                clean[coord] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, float]]) -> "FinVec":
        d: dict[int, float] = {}
        for coord, value in pairs:
            if coord in d:
                raise ValueError(f"duplicate coordinate {coord}")
            d[coord] = value
        return cls(d)

    @classmethod
    def basis(cls, n: int) -> "FinVec":
        return cls({n: 1.0})

    @classmethod
    def indicator(cls, coords: Iterable[int]) -> "FinVec":
        return cls({c: 1.0 for c in coords})

    @classmethod
    def zero(cls) -> "FinVec":
        return cls({})

    @property
    def support(self) -> Elements:
        return tuple(sorted(self.entries))

    @property
    def max_support(self) -> int:
        if not self.entries:
            raise ValueError("zero vector has empty support")
        return max(self.entries)

    @property
    def min_support(self) -> int:
        if not self.entries:
            raise ValueError("zero vector has empty support")
        return min(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __getitem__(self, coord: int) -> float:
        return self.entries.get(coord, 0.0)

    def scaled(self, factor: float) -> "FinVec":
        return FinVec({c: v * factor for c, v in self.entries.items()})

    def sup_norm(self) -> float:
        return max((abs(v) for v in self.entries.values()), default=0.0)


def linear_combination(coeffs: Sequence[float], vecs: Sequence[FinVec]) -> FinVec:
    """sum_j coeffs[j] * vecs[j]; exact zeros produced by cancellation are dropped."""
    if len(coeffs) > len(vecs):
        raise ValueError(f"{len(coeffs)} coefficients for {len(vecs)} vectors")
    acc: dict[int, float] = {}
    for a, v in zip(coeffs, vecs):
        if a == 0.0:
            continue
        for coord, value in v.entries.items():
            acc[coord] = acc.get(coord, 0.0) + a * value
    return FinVec(acc)


@dataclass(frozen=True)
class SpaceSpec:
    """Ambient space: Bp with p in (1, inf) or Sp with p in [1, inf)."""

    kind: str
    p: float

    def __post_init__(self) -> None:
        if self.kind not in ("Sp", "Bp"):
            raise ValueError(f"space kind must be 'Sp' or 'Bp', got {self.kind!r}")
        p = float(self.p)
        object.__setattr__(self, "p", p)
        if self.kind == "Sp" and not p >= 1.0:
            raise ValueError(f"Sp requires p >= 1, got {p}")
        if self.kind == "Bp" and not p > 1.0:
            raise ValueError(f"Bp requires p > 1, got {p}")

    @classmethod
    def schreier(cls, p: float) -> "SpaceSpec":
        return cls("Sp", p)

    @classmethod
    def baernstein(cls, p: float) -> "SpaceSpec":
        return cls("Bp", p)

    @property
    def companion_kind(self) -> str:
        """Unit-vector-basis companion: c0 for Sp, lp for Bp."""
        return "c0" if self.kind == "Sp" else "lp"

    def label(self) -> str:
        return f"{self.kind[0]}_{self.p:g}"


@dataclass(frozen=True)
class NormResult:
    """A norm value with the maximizing Schreier set (Sp) or chain (Bp).

    The zero vector gets witness SchreierSet(()) in Sp and None in Bp
    (chains cannot be empty).
    """

    value: float
    witness: SchreierSet | SchreierChain | None


def mu_p(x: FinVec, f: SchreierSet | Iterable[int], p: float) -> float:
    """p-sum seminorm of x over a single Schreier set (0 on the empty set)."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    fs = f if isinstance(f, SchreierSet) else SchreierSet(tuple(f))
    if not fs:
        return 0.0
    return sum(abs(x[n]) ** p for n in fs) ** (1.0 / p)


def beta_p(x: FinVec, chain: SchreierChain | Iterable[Iterable[int]], p: float) -> float:
    """Chain seminorm: p-sum over the chain of per-set absolute sums."""
    if p <= 1:
        raise ValueError(f"p must be > 1, got {p}")
    ch = chain if isinstance(chain, SchreierChain) else SchreierChain(tuple(chain))
    total = 0.0
    for f in ch:
        total += sum(abs(x[n]) for n in f) ** p
    return total ** (1.0 / p)


def norm_Sp(x: FinVec, p: float) -> NormResult:
    """Exact S_p norm with maximizing Schreier set.

    Any Schreier set with minimum m holds at most m coordinates, all >= m;
    conversely every such selection is Schreier.  So the best set with
    minimum m consists of the m largest |x(n)| over n >= m, and the norm is
    the maximum over m in the support.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    supp = x.support
    if not supp:
        return NormResult(0.0, SchreierSet(()))
    powv = {c: abs(x[c]) ** p for c in supp}
    by_size = sorted(supp, key=lambda c: (-powv[c], c))
    best = -1.0
    best_elems: Elements = ()
    for m in supp:
        total = 0.0
        chosen: list[int] = []
        for c in by_size:
            if c >= m:
                total += powv[c]
                chosen.append(c)
                if len(chosen) == m:
                    break
        if total > best:
            best = total
            best_elems = tuple(sorted(chosen))
    return NormResult(best ** (1.0 / p), SchreierSet(best_elems))


def norm_Sp_bruteforce(x: FinVec, p: float) -> float:
    """Oracle: maximum of mu_p over every Schreier subset of [1, max supp]."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if x.is_zero():
        return 0.0
    n = x.max_support
    bound = enumeration_bound()
    if n > bound:
        raise ValueError(f"oracle bound exceeded: max supp = {n} > {bound}")
    powv = {c: abs(v) ** p for c, v in x.entries.items()}
    best = 0.0
    for elems in _schreier_subsets(n):
        total = sum(powv.get(c, 0.0) for c in elems)
        if total > best:
            best = total
    return best ** (1.0 / p)


def norm_Bp(x: FinVec, p: float) -> NormResult:
    """Exact B_p norm with maximizing Schreier chain.

    Dynamic program over start positions i = max supp .. 1; best(i) is the
    largest sum of mu_1(x, F)^p over chains inside [i, inf).  At a support
    point i the first set either is {i} or has some support max e > i; for
    fixed (i, e) the chain constraint binds only through e, so the set keeps
    i, e and the largest at most i-2 support values strictly between them.
    """
    if p <= 1:
        raise ValueError(f"p must be > 1, got {p}")
    supp = x.support
    if not supp:
        return NormResult(0.0, None)
    absv = {c: abs(v) for c, v in x.entries.items()}
    top = supp[-1]
    in_supp = set(supp)
    best = [0.0] * (top + 2)
    choice: list[tuple[int, Elements] | None] = [None] * (top + 2)
    for i in range(top, 0, -1):
        b = best[i + 1]  # skip coordinate i
        ch: tuple[int, Elements] | None = None
        if i in in_supp:
            ai = absv[i]
            v = ai ** p + best[i + 1]
            if v > b:
                b, ch = v, (i, ())
            if i >= 2:
                budget = i - 2
                kept: list[tuple[float, int]] = []  # min-heap of interior (value, coord)
                kept_sum = 0.0
                prev: int | None = None
                for e in supp[bisect_right(supp, i):]:
                    if prev is not None and budget > 0:
                        item = (absv[prev], prev)
                        if len(kept) < budget:
                            heapq.heappush(kept, item)
                            kept_sum += item[0]
                        elif item > kept[0]:
                            dropped = heapq.heapreplace(kept, item)
                            kept_sum += item[0] - dropped[0]
                    v = (ai + kept_sum + absv[e]) ** p + best[e + 1]
                    if v > b:
                        b, ch = v, (e, tuple(c for _, c in kept))
                    prev = e
        best[i] = b
        choice[i] = ch
    sets: list[SchreierSet] = []
    i = 1
    while i <= top:
        ch = choice[i]
        if ch is None:
            i += 1
            continue
        e, interior = ch
        sets.append(SchreierSet(tuple(sorted({i, e, *interior}))))
        i = e + 1
    return NormResult(best[1] ** (1.0 / p), SchreierChain(tuple(sets)))


def norm_Bp_bruteforce(x: FinVec, p: float) -> float:
    """Oracle: maximum of beta_p over every chain with sets inside [1, max supp].

    Exhausts all (first set, continuation) pairs: every nonempty Schreier
    subset of the interval is tried as the first set at its minimum, with
    memoized continuations.  No structure beyond the chain definition is used.
    """
    if p <= 1:
        raise ValueError(f"p must be > 1, got {p}")
    if x.is_zero():
        return 0.0
    n = x.max_support
    bound = chain_oracle_bound()
    if n > bound:
        raise ValueError(f"oracle bound exceeded: max supp = {n} > {bound}")
    absv = {c: abs(v) for c, v in x.entries.items()}
    by_min: dict[int, list[Elements]] = {}
    for elems in _schreier_subsets(n):
        if elems:
            by_min.setdefault(elems[0], []).append(elems)
    best = [0.0] * (n + 2)
    for i in range(n, 0, -1):
        b = best[i + 1]
        for elems in by_min.get(i, ()):
            mu1 = sum(absv.get(c, 0.0) for c in elems)
            v = mu1 ** p + best[elems[-1] + 1]
            if v > b:
                b = v
        best[i] = b
    return best[1] ** (1.0 / p)


def norm_companion(x: FinVec, space: SpaceSpec) -> float:
    """Norm of x in the companion space: l_p for Bp, c_0 (sup norm) for Sp."""
    if space.kind == "Bp":
        return sum(abs(v) ** space.p for v in x.entries.values()) ** (1.0 / space.p)
    return x.sup_norm()


def norm(x: FinVec, space: SpaceSpec) -> NormResult:
    """Dispatch to the exact S_p or B_p engine."""
    if space.kind == "Sp":
        return norm_Sp(x, space.p)
    return norm_Bp(x, space.p)
