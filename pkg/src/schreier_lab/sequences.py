"""Block basic sequences and the quantitative facts they satisfy.

Finite-section checks for domination between basis subsequences and block
sequences (with the sharp ambient-space constants), the explicit projection
onto a spiked block span, the uncomplemented-span construction with its
divergent growth table, and the flat-vector search in small subspaces.

All domination checks are per coefficient vector: the check receives an
explicit alpha and verifies one inequality exactly via the norm engines.
A randomized sup-ratio estimator is provided as a lower-bound probe only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .config import MILMAN_DIMENSION_BOUND, MILMAN_SUPPORT_BOUND
from .norms import FinVec, SpaceSpec, linear_combination, norm, norm_companion
from .schreier_core import Elements

SLACK = 1e-9


class SearchExhaustedError(RuntimeError):
    """Raised when the flat-vector search finds no admissible vector.

    For n <= dim this must not happen; an instance of this error is a bug
    certificate for the engine.
    """


@dataclass(frozen=True)
class BlockSeq:
    """Finite block basic sequence: nonzero vectors with increasing supports."""

    blocks: tuple[FinVec, ...]

    def __post_init__(self) -> None:
        blocks = tuple(self.blocks)
        if not blocks:
            raise ValueError("block sequence must be nonempty")
        for u in blocks:
            if u.is_zero():
                raise ValueError("blocks must be nonzero")
        for a, b in zip(blocks, blocks[1:]):
            if a.max_support >= b.min_support:
                raise ValueError(
                    f"supports must be strictly increasing: {a.max_support} >= {b.min_support}"
                )
        object.__setattr__(self, "blocks", blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def max_supports(self) -> Elements:
        """The coordinates m_j = max supp u_j."""
        return tuple(u.max_support for u in self.blocks)

    def is_skipped(self) -> bool:
        """True iff a basis coordinate is omitted between consecutive blocks."""
        return all(
            b.min_support >= a.max_support + 2 for a, b in zip(self.blocks, self.blocks[1:])
        )

    def is_normalized(self, space: SpaceSpec, tol: float = SLACK) -> bool:
        return all(abs(norm(u, space).value - 1.0) <= tol for u in self.blocks)


def normalize_blocks(space: SpaceSpec, blocks: Iterable[FinVec]) -> BlockSeq:
    """Scale each block to norm one in the given space."""
    out = []
    for u in blocks:
        value = norm(u, space).value
        if value == 0.0:
            raise ValueError("cannot normalize a zero block")
        out.append(u.scaled(1.0 / value))
    return BlockSeq(tuple(out))


def expand(alpha: Sequence[float], m_seq: Sequence[int]) -> FinVec:
    """The vector sum_j alpha_j e_{m_j} for a strictly increasing m_seq."""
    if len(alpha) > len(m_seq):
        raise ValueError(f"{len(alpha)} coefficients for {len(m_seq)} indices")
    for a, b in zip(m_seq, m_seq[1:]):
        if a >= b:
            raise ValueError("indices must be strictly increasing")
    return FinVec({m: a for a, m in zip(alpha, m_seq) if a != 0.0})


def check_domination(
    space: SpaceSpec,
    source: Sequence[FinVec],
    target: Sequence[FinVec],
    c: float,
    alpha: Sequence[float],
) -> bool:
    """One finite section of 'source C-dominates target':

        || sum alpha_j target_j ||_E  <=  C * || sum alpha_j source_j ||_E + slack.
    """
    if len(source) != len(target):
        raise ValueError(f"length mismatch: {len(source)} vs {len(target)}")
    if len(alpha) > len(source):
        raise ValueError(f"{len(alpha)} coefficients for {len(source)} vectors")
    lhs = norm(linear_combination(alpha, target), space).value
    rhs = norm(linear_combination(alpha, source), space).value
    return lhs <= c * rhs + SLACK


def block_upper_constant(space: SpaceSpec) -> float:
    """C_1 in: the tail singletons (e_{m_j}) C_1-dominate normalized blocks (u_j)."""
    return 3.0 ** (1.0 / space.p) if space.kind == "Bp" else 1.0


def check_block_upper_bound(
    space: SpaceSpec, u: BlockSeq, alpha: Sequence[float], c1: float | None = None
) -> bool:
    """|| sum alpha_j u_j || <= C_1 * || sum alpha_j e_{max supp u_j} || + slack."""
    if not u.is_normalized(space):
        raise ValueError("block sequence is not normalized for the given space")
    if len(alpha) > len(u):
        raise ValueError(f"{len(alpha)} coefficients for {len(u)} blocks")
    c = block_upper_constant(space) if c1 is None else c1
    lhs = norm(linear_combination(alpha, u.blocks), space).value
    rhs = norm(expand(alpha, u.max_supports), space).value
    return lhs <= c * rhs + SLACK


def spike_coordinates(u: BlockSeq, delta: float | None = None) -> tuple[Elements, float]:
    """Per block, the first coordinate with |u_j(n)| >= delta.

    With delta=None uses delta = min_j sup-norm of u_j (the largest value
    every block can honor).  Returns (coordinates, delta used).
    """
    if delta is None:
        delta = min(b.sup_norm() for b in u.blocks)
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    coords = []
    for j, block in enumerate(u.blocks):
        found = None
        for c in block.support:
            if abs(block[c]) >= delta - 1e-12:
                found = c
                break
        if found is None:
            raise ValueError(f"block {j + 1} has no coordinate of modulus >= {delta}")
        coords.append(found)
    return tuple(coords), delta


def check_spike_lower_bound(
    space: SpaceSpec, u: BlockSeq, delta: float, alpha: Sequence[float]
) -> bool:
    """|| sum alpha_j e_{n_j} || <= (1/delta) * || sum alpha_j u_j || + slack,

    where n_j is the first coordinate of u_j with modulus >= delta.
    """
    if len(alpha) > len(u):
        raise ValueError(f"{len(alpha)} coefficients for {len(u)} blocks")
    spikes, _ = spike_coordinates(u, delta)
    lhs = norm(expand(alpha, spikes), space).value
    rhs = norm(linear_combination(alpha, u.blocks), space).value
    return lhs <= rhs / delta + SLACK


def projection_constant(space: SpaceSpec, delta: float) -> float:
    """C_2 bounding the norm of the projection onto a spiked block span."""
    if space.kind == "Bp":
        return 2.0 * 3.0 ** (1.0 / space.p) / delta
    return 2.0 ** (1.0 / space.p) / delta


def apply_projection(
    space: SpaceSpec, u: BlockSeq, x: FinVec, delta: float | None = None
) -> FinVec:
    """Projection onto the block span:  Qx = sum_j (x(n_j) / u_j(n_j)) u_j.

    Idempotent on the span of the blocks; its norm is bounded by
    projection_constant(space, delta).
    """
    spikes, _ = spike_coordinates(u, delta)
    coeffs = [x[n] / block[n] for n, block in zip(spikes, u.blocks)]
    return linear_combination(coeffs, u.blocks)


def spike_weights(count: int) -> tuple[float, ...]:
    """The weights t_n = 1/k for n in [2^(k-1), 2^k), n = 1..count."""
    return tuple(1.0 / n.bit_length() for n in range(1, count + 1))


def build_uncomplemented(space: SpaceSpec, u: BlockSeq) -> BlockSeq:
    """Attach decaying spikes in the skipped gaps: returns (u_n + t_n e_{m_n}).

    The gap coordinate m_n is the smallest integer strictly between the
    supports of u_n and u_{n+1} (max supp + 1 for the final block).  The
    closed span of the result is not complemented in the ambient space; the
    quantitative content is the divergent growth_table below.
    """
    if not u.is_normalized(space):
        raise ValueError("block sequence is not normalized for the given space")
    if not u.is_skipped():
        raise ValueError("block sequence is not skipped: no free gap coordinate")
    weights = spike_weights(len(u))
    out = []
    for j, block in enumerate(u.blocks):
        gap = block.max_support + 1
        if j + 1 < len(u) and gap >= u.blocks[j + 1].min_support:
            raise ValueError(f"no gap coordinate after block {j + 1}")
        entries = dict(block.entries)
        entries[gap] = weights[j]
        out.append(FinVec(entries))
    return BlockSeq(tuple(out))


@dataclass(frozen=True)
class GrowthRow:
    """One row of the complementation lower-bound table."""

    k: int
    companion_norm: float
    spike_norm: float
    lower_bound_C: float


def growth_table(space: SpaceSpec, k_max: int) -> list[GrowthRow]:
    """Lower bounds on any constant C with C * ||sum d_n||_D >= ||sum t_n e_n||_E.

    Row k sums over n in [2^(k-1), 2^k): the companion norm of the unit
    block is 1 (c_0) or 2^((k-1)/p) (l_p); the spiked norm is (1/k) times the
    exact ambient norm of the same block, which equals 2^((k-1)/p) in S_p and
    2^(k-1) in B_p because the block is a single Schreier set.  The ratio
    column is unbounded in k, which is what rules out a bounded projection.
    """
    if not 1 <= k_max <= 8:
        raise ValueError(f"k_max must be in [1, 8], got {k_max}")
    rows = []
    for k in range(1, k_max + 1):
        block = FinVec.indicator(range(2 ** (k - 1), 2 ** k))
        companion = norm_companion(block, space)
        spike = norm(block, space).value / k
        rows.append(GrowthRow(k, companion, spike, spike / companion))
    return rows


def select_intertwined_indices(m_seq: Sequence[int], n_seq: Sequence[int]) -> Elements:
    """Greedy subsequence along which two basis subsequences intertwine.

    Starting from j_1 = 1, each next index is the smallest j with
    m_j >= n_{j_k} and n_j >= m_{j_k}; along the result the two subsequences
    dominate each other with the interleave constants.
    """
    if len(m_seq) != len(n_seq):
        raise ValueError("sequences must have equal length")
    chosen = [1]
    k = 1
    for j in range(2, len(m_seq) + 1):
        if m_seq[j - 1] >= n_seq[k - 1] and n_seq[j - 1] >= m_seq[k - 1]:
            chosen.append(j)
            k = j
    return tuple(chosen)


def estimate_domination_ratio(
    space: SpaceSpec,
    source: Sequence[FinVec],
    target: Sequence[FinVec],
    trials: int,
    rng,
) -> tuple[float, tuple[float, ...]]:
    """Randomized lower bound for sup_alpha ||sum a target|| / ||sum a source||.

    Tries the all-ones vector first, then random alphas in [-1, 1]^k.  Never
    claimed exact; used to hunt for counterexamples to candidate constants.
    """
    k = len(source)
    best = -1.0
    best_alpha: tuple[float, ...] = (1.0,) * k
    candidates = [[1.0] * k]
    for _ in range(trials):
        alpha = [rng.uniform(-1.0, 1.0) for _ in range(k)]
        alpha[rng.randrange(k)] = rng.choice([-1.0, 1.0])
        candidates.append(alpha)
    for alpha in candidates:
        denom = norm(linear_combination(alpha, source), space).value
        if denom == 0.0:
            continue
        ratio = norm(linear_combination(alpha, target), space).value / denom
        if ratio > best:
            best = ratio
            best_alpha = tuple(alpha)
    return best, best_alpha


def _chebyshev_solution(b_mat: np.ndarray, rows: Sequence[int], rhs: np.ndarray) -> np.ndarray | None:
    """Coefficients minimizing the sup norm of b_mat @ c subject to (b_mat @ c)[rows] = rhs.

    Linear program in (c, t): minimize t with |row . c| <= t off the pinned rows.
    Returns None when the solver fails.
    """
    from scipy.optimize import linprog

    dim = b_mat.shape[1]
    others = [i for i in range(b_mat.shape[0]) if i not in rows]
    a_ub, b_ub = [], []
    for r in others:
        a_ub.append(np.append(b_mat[r], -1.0))
        a_ub.append(np.append(-b_mat[r], -1.0))
        b_ub.extend([0.0, 0.0])
    a_eq = np.hstack([b_mat[list(rows), :], np.zeros((len(rows), 1))])
    res = linprog(
        c=np.append(np.zeros(dim), 1.0),
        A_ub=np.array(a_ub) if a_ub else None,
        b_ub=np.array(b_ub) if b_ub else None,
        A_eq=a_eq,
        b_eq=rhs,
        bounds=[(None, None)] * dim + [(0.0, None)],
        method="highs",
    )
    if res.status != 0 or res.x is None:
        return None
    return res.x[:dim]


def milman_flat_vector(basis: Sequence[FinVec], n: int) -> FinVec:
    """A unit sup-norm vector in the span attaining its norm at >= n coordinates.

    Exists whenever n <= dim.  Search: for each size-n coordinate subset S of
    the combined support and each sign pattern sigma, solve w(j) = sigma_j on
    S for the span coefficients (exact or least-squares) and accept the first
    w with sup norm <= 1; a min-sup-norm LP fallback covers consistent systems
    whose particular solution overshoots, so the search cannot falsely
    exhaust.  Raises SearchExhaustedError otherwise (a bug certificate).
    """
    if not basis:
        raise ValueError("basis must be nonempty")
    dim = len(basis)
    if dim > MILMAN_DIMENSION_BOUND:
        raise ValueError(f"dimension {dim} exceeds bound {MILMAN_DIMENSION_BOUND}")
    coords = sorted(set().union(*(v.support for v in basis)))
    if len(coords) > MILMAN_SUPPORT_BOUND:
        raise ValueError(
            f"combined support {len(coords)} exceeds bound {MILMAN_SUPPORT_BOUND}"
        )
    if not 1 <= n <= dim:
        raise ValueError(f"need 1 <= n <= dim, got n={n}, dim={dim}")
    b_mat = np.array([[v[c] for v in basis] for c in coords], dtype=float)
    if np.linalg.matrix_rank(b_mat) < dim:
        raise ValueError("basis vectors are linearly dependent")

    def finalize(w: np.ndarray) -> FinVec | None:
        top = float(np.max(np.abs(w)))
        if top == 0.0:
            return None
        w = w / top
        if int(np.sum(np.abs(w) >= 1.0 - 1e-9)) < n:
            return None
        return FinVec({c: float(v) for c, v in zip(coords, w) if abs(v) > 1e-14})

    subsets = list(itertools.combinations(range(len(coords)), n))
    patterns = list(itertools.product((1.0, -1.0), repeat=n))

    for rows in subsets:
        sub = b_mat[list(rows), :]
        for sigma in patterns:
            rhs = np.array(sigma)
            coeff, *_ = np.linalg.lstsq(sub, rhs, rcond=None)
            w = b_mat @ coeff
            if np.max(np.abs(w[list(rows)] - rhs)) > 1e-9:
                continue  # inconsistent system
            if np.max(np.abs(w)) <= 1.0 + 1e-9:
                vec = finalize(w)
                if vec is not None:
                    return vec

    # Fallback: minimize the sup norm over the solution affine subspace.
    for rows in subsets:
        sub = b_mat[list(rows), :]
        for sigma in patterns:
            rhs = np.array(sigma)
            coeff, *_ = np.linalg.lstsq(sub, rhs, rcond=None)
            if np.max(np.abs(sub @ coeff - rhs)) > 1e-9:
                continue
            solution = _chebyshev_solution(b_mat, rows, rhs)
            if solution is None:
                continue
            w = b_mat @ solution
            if np.max(np.abs(w)) <= 1.0 + 1e-9:
                vec = finalize(w)
                if vec is not None:
                    return vec
    raise SearchExhaustedError(
        f"no flat vector found for n={n}, dim={dim}: this contradicts the existence "
        "guarantee and certifies a bug"
    )
