"""Windowed Gasparis-Leung index.

For infinite sets M, N of naturals, writing M(J) = {m_j : j in J}, the index
GL_1(M, N) is the supremum of tau_1(M(J)) over finite J with N(J) Schreier.
This module computes the restriction of that supremum to J inside [1, L] for
a window L; the windowed value is a lower bound for the full index, and the
standard properties of the index (submultiplicativity, the spread, removal
and interleave bounds) survive windowing because their proofs only ever
shrink J.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .config import GL_WINDOW_BOUND
from .schreier_core import Elements, is_schreier, is_spread, tau1


def indexseq(values: Iterable[int]) -> Elements:
    """Validated strictly increasing, nonempty sequence of naturals."""
    vals = tuple(values)
    if not vals:
        raise ValueError("index sequence must be nonempty")
    for v in vals:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"index sequences hold naturals >= 1, got {v!r}")
    for a, b in zip(vals, vals[1:]):
        if a >= b:
            raise ValueError(f"index sequence must be strictly increasing: {a} >= {b}")
    return vals


@dataclass(frozen=True)
class GLWindowResult:
    """Windowed index value with the lexicographically smallest maximizing J."""

    value: int
    argmax_J: Elements
    window: int


def gl1_windowed(m_seq: Iterable[int], n_seq: Iterable[int], window: int) -> GLWindowResult:
    """Exact max of tau_1(M(J)) over nonempty J in [1, window] with N(J) Schreier.

    N(J) is Schreier iff |J| <= n_{min J}, which bounds the branch width; the
    depth-first search appends indices in increasing order and maintains the
    greedy tau_1 state of M(J) incrementally (one comparison per node).
    """
    m = indexseq(m_seq)
    n = indexseq(n_seq)
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    if window > GL_WINDOW_BOUND:
        raise ValueError(f"window {window} exceeds search bound {GL_WINDOW_BOUND}")
    if window > min(len(m), len(n)):
        raise ValueError(
            f"window {window} exceeds sequence prefix lengths {len(m)}, {len(n)}"
        )
    mv = (0,) + m[:window]  # 1-based
    nv = (0,) + n[:window]
    best_val = 0
    best_j: list[int] = []
    stack: list[int] = []

    def dfs(last: int, count: int, rem: int, budget: int) -> None:
        nonlocal best_val, best_j
        if count > best_val:
            best_val = count
            best_j = stack.copy()
        if len(stack) == budget:
            return
        for j in range(last + 1, window + 1):
            if rem > 0:
                nc, nr = count, rem - 1
            else:
                nc, nr = count + 1, mv[j] - 1
            stack.append(j)
            dfs(j, nc, nr, budget)
            stack.pop()

    for j0 in range(1, window + 1):
        stack = [j0]
        dfs(j0, 1, mv[j0] - 1, nv[j0])
    return GLWindowResult(best_val, tuple(best_j), window)


def check_submultiplicative(
    l_seq: Iterable[int], m_seq: Iterable[int], n_seq: Iterable[int], window: int
) -> bool:
    """GL_1(L,N) <= GL_1(L,M) * GL_1(M,N), all three at the same window."""
    ln = gl1_windowed(l_seq, n_seq, window).value
    lm = gl1_windowed(l_seq, m_seq, window).value
    mn = gl1_windowed(m_seq, n_seq, window).value
    return ln <= lm * mn


def check_spread_bound(n_seq: Iterable[int], m_seq: Iterable[int], window: int) -> bool:
    """GL_1(N, M) = 1 when N is a spread of M (n_j >= m_j on the window)."""
    n = indexseq(n_seq)
    m = indexseq(m_seq)
    if window > min(len(m), len(n)):
        raise ValueError("window exceeds sequence prefix lengths")
    if not is_spread(m[:window], n[:window]):
        raise ValueError("precondition violated: N is not a spread of M on the window")
    return gl1_windowed(n, m, window).value == 1


def check_removal_bound(n_seq: Iterable[int], removed: Iterable[int], window: int) -> bool:
    """GL_1(N, N without F) <= tau_1(first |F| elements of N) + 1."""
    n = indexseq(n_seq)
    f = tuple(sorted(set(removed)))
    n_set = set(n)
    for v in f:
        if v not in n_set:
            raise ValueError(f"removed element {v} is not in the sequence")
    remaining = tuple(v for v in n if v not in set(f))
    if len(remaining) < window or len(n) < window:
        raise ValueError("precondition violated: not enough of the sequence in the window")
    if not f:
        return gl1_windowed(n, n, window).value <= 1
    bound = tau1(n[: len(f)]) + 1
    return gl1_windowed(n, remaining, window).value <= bound


def check_interleave_bound(n_seq: Iterable[int], m_seq: Iterable[int], window: int) -> bool:
    """GL_1(N, M) <= 2 when m_j <= n_{j+1}.

    The windowed claim only needs the interleaving at j <= window - 1: for
    admissible J, splitting off min J leaves an index set whose N-image is
    Schreier, so tau_1(N(J)) <= 2.
    """
    n = indexseq(n_seq)
    m = indexseq(m_seq)
    if window > min(len(m), len(n)):
        raise ValueError("window exceeds sequence prefix lengths")
    for j in range(window - 1):
        if m[j] > n[j + 1]:
            raise ValueError(
                f"precondition violated: m_{j + 1} = {m[j]} > n_{j + 2} = {n[j + 1]}"
            )
    return gl1_windowed(n, m, window).value <= 2


def validate_result(
    result: GLWindowResult, m_seq: Iterable[int], n_seq: Iterable[int]
) -> bool:
    """Re-check the witness invariants: J in window, N(J) Schreier, tau_1 matches."""
    m = indexseq(m_seq)
    n = indexseq(n_seq)
    j = result.argmax_J
    if not j:
        return False
    if j[0] < 1 or j[-1] > result.window:
        return False
    n_image = [n[i - 1] for i in j]
    m_image = [m[i - 1] for i in j]
    return is_schreier(n_image) and tau1(m_image) == result.value
