import math
import random

import numpy as np
import pytest

from schreier_lab import (
    BlockSeq,
    FinVec,
    SpaceSpec,
    apply_projection,
    build_uncomplemented,
    check_block_upper_bound,
    check_domination,
    check_spike_lower_bound,
    expand,
    growth_table,
    linear_combination,
    milman_flat_vector,
    norm,
    normalize_blocks,
    select_intertwined_indices,
    spike_coordinates,
    spike_weights,
)
from schreier_lab.sequences import projection_constant

B2 = SpaceSpec.baernstein(2.0)
S1 = SpaceSpec.schreier(1.0)
S2 = SpaceSpec.schreier(2.0)


def test_expand():
    assert expand([1.0], [5]).entries == {5: 1.0}
    assert expand([1.0, -2.0], [2, 7]).entries == {2: 1.0, 7: -2.0}
    assert expand([], [1, 2]).is_zero()
    with pytest.raises(ValueError):
        expand([1.0, 2.0], [3])
    with pytest.raises(ValueError):
        expand([1.0, 2.0], [3, 3])


def test_blockseq_validation():
    BlockSeq((FinVec.basis(1), FinVec({3: 1.0, 4: 0.5})))
    with pytest.raises(ValueError):
        BlockSeq(())
    with pytest.raises(ValueError):
        BlockSeq((FinVec.zero(),))
    with pytest.raises(ValueError):
        BlockSeq((FinVec({1: 1.0, 5: 1.0}), FinVec.basis(4)))


def test_skipped_and_normalized_flags():
    skipped = BlockSeq((FinVec.basis(2), FinVec.basis(5), FinVec.basis(8)))
    assert skipped.is_skipped()
    tight = BlockSeq((FinVec.basis(2), FinVec.basis(3)))
    assert not tight.is_skipped()
    assert skipped.is_normalized(B2)
    assert not BlockSeq((FinVec({2: 2.0}),)).is_normalized(B2)


def test_domination_simple_examples():
    # m_j <= n_j with C = 1 in S_1: ||e_1 + e_2|| = 1 <= ||e_2 + e_3|| = 2
    source = [FinVec.basis(2), FinVec.basis(3)]
    target = [FinVec.basis(1), FinVec.basis(2)]
    from schreier_lab import norm_Sp_bruteforce

    assert norm_Sp_bruteforce(linear_combination([1.0, 1.0], target), 1.0) == 1.0
    assert norm_Sp_bruteforce(linear_combination([1.0, 1.0], source), 1.0) == 2.0
    assert check_domination(S1, source, target, 1.0, [1.0, 1.0])
    # identical sequences: C = 1 for any alpha
    assert check_domination(B2, source, source, 1.0, [0.3, -0.7])
    with pytest.raises(ValueError):
        check_domination(S1, source, target[:1], 1.0, [1.0])


def test_estimate_domination_ratio():
    from schreier_lab.sequences import estimate_domination_ratio

    src = [FinVec.basis(1), FinVec.basis(2)]
    tgt = [FinVec.basis(2), FinVec.basis(3)]
    ratio, alpha = estimate_domination_ratio(B2, src, tgt, 50, random.Random(2))
    assert abs(ratio - math.sqrt(2)) < 1e-9  # all-ones candidate attains the sharp value
    assert len(alpha) == 2


def test_domination_exhaustive_small():
    rng = random.Random(1)
    for space in (S1, S2, B2):
        m, n = [], []
        prev_m = prev_n = 0
        for _ in range(4):
            prev_m += rng.randint(1, 3)
            m.append(prev_m)
            prev_n = max(prev_m, prev_n + 1) + rng.randint(0, 2)
            n.append(prev_n)
        source = [FinVec.basis(v) for v in n]
        target = [FinVec.basis(v) for v in m]
        for alpha in __import__("itertools").product((-1.0, 0.0, 1.0), repeat=4):
            assert check_domination(space, source, target, 1.0, list(alpha))


def test_interleave_constants_hold_and_are_sharp():
    # sharp witness: M = (2,3), N = (1,2), alpha = (1,1)
    src = [FinVec.basis(1), FinVec.basis(2)]
    tgt = [FinVec.basis(2), FinVec.basis(3)]
    for p in (1.5, 2.0, 3.0):
        space = SpaceSpec.baernstein(p)
        assert check_domination(space, src, tgt, 2.0, [1.0, 1.0])
        lhs = norm(linear_combination([1.0, 1.0], tgt), space).value
        rhs = norm(linear_combination([1.0, 1.0], src), space).value
        assert abs(lhs / rhs - 2 ** (1 - 1 / p)) < 1e-9
    for p in (1.0, 2.0):
        space = SpaceSpec.schreier(p)
        assert check_domination(space, src, tgt, 2 ** (1 / p), [1.0, 1.0])
        lhs = norm(linear_combination([1.0, 1.0], tgt), space).value
        rhs = norm(linear_combination([1.0, 1.0], src), space).value
        assert abs(lhs / rhs - 2 ** (1 / p)) < 1e-9


def test_block_upper_bound():
    u = BlockSeq((FinVec.basis(3),))
    assert check_block_upper_bound(S2, u, [1.0])
    raw = [FinVec({1: 1.0}), FinVec({2: 0.7, 3: 0.7}), FinVec({5: 1.0, 6: -0.5, 8: 0.25})]
    for space in (S1, S2, B2):
        blocks = normalize_blocks(space, raw)
        for alpha in ([1.0, 1.0, 1.0], [0.5, -1.0, 0.25]):
            assert check_block_upper_bound(space, blocks, alpha)
    with pytest.raises(ValueError):
        check_block_upper_bound(S2, BlockSeq((FinVec({2: 3.0}),)), [1.0])


def test_block_upper_c1_equal_one_fails_in_bp():
    # spike, two-cluster block, spike: the B_p ratio strictly exceeds 1
    run = 10
    raw = FinVec({3: 1.0, **{c: 1.0 / run for c in range(20, 20 + run)}})
    for p in (1.5, 2.0, 3.0):
        space = SpaceSpec.baernstein(p)
        blocks = normalize_blocks(space, [FinVec.basis(2), raw, FinVec.basis(31)])
        alpha = [1.0, 1.0, 1.0]
        assert check_block_upper_bound(space, blocks, alpha)  # 3^(1/p) holds
        assert not check_block_upper_bound(space, blocks, alpha, c1=1.0)


def test_spike_coordinates_and_lower_bound():
    u = BlockSeq((FinVec.basis(2), FinVec.basis(4), FinVec.basis(6)))
    coords, delta = spike_coordinates(u)
    assert coords == (2, 4, 6) and delta == 1.0
    assert check_spike_lower_bound(S2, u, 1.0, [1.0, -1.0, 0.5])
    mixed = BlockSeq((FinVec({1: 0.5, 2: 0.4}), FinVec({4: -0.6, 5: 0.2})))
    coords, _ = spike_coordinates(mixed, 0.5)
    assert coords == (1, 4)
    with pytest.raises(ValueError):
        spike_coordinates(mixed, 0.65)
    for space in (S1, S2, B2):
        blocks = normalize_blocks(space, [FinVec({2: 1.0, 3: 0.3}), FinVec({5: -1.0, 7: 0.2})])
        delta = min(b.sup_norm() for b in blocks)
        assert check_spike_lower_bound(space, blocks, delta, [1.0, 1.0])


def test_projection_identity_and_annihilation():
    raw = [FinVec({1: 1.0}), FinVec({3: 0.8, 4: 0.4}), FinVec({6: -0.9, 8: 0.2})]
    for space in (S2, B2):
        u = normalize_blocks(space, raw)
        for block in u.blocks:
            q = apply_projection(space, u, block)
            assert all(abs(q[c] - block[c]) <= 1e-12 for c in block.support)
        off = FinVec({2: 1.0, 5: -3.0, 9: 0.7})  # off every spike coordinate
        assert apply_projection(space, u, off).is_zero()


def test_projection_idempotent_and_bounded():
    rng = random.Random(71)
    raw = [FinVec({2: 1.0, 3: 0.4}), FinVec({5: -1.0, 6: 0.3}), FinVec({8: 1.0, 10: 0.2})]
    for space in (S2, B2):
        u = normalize_blocks(space, raw)
        delta = min(b.sup_norm() for b in u.blocks)
        c2 = projection_constant(space, delta)
        for _ in range(50):
            coords = rng.sample(range(1, 13), rng.randint(1, 8))
            x = FinVec({c: rng.uniform(-2, 2) or 1.0 for c in coords})
            qx = apply_projection(space, u, x)
            qqx = apply_projection(space, u, qx)
            for c in set(qx.support) | set(qqx.support):
                assert abs(qx[c] - qqx[c]) <= 1e-9 * max(1.0, qx.sup_norm())
            assert norm(qx, space).value <= c2 * norm(x, space).value + 1e-9


def test_build_uncomplemented_example():
    u = BlockSeq(tuple(FinVec.basis(3 * n - 1) for n in range(1, 16)))
    out = build_uncomplemented(S2, u)
    for n, b in enumerate(out.blocks, start=1):
        assert b.support == (3 * n - 1, 3 * n)
        assert b[3 * n] == spike_weights(15)[n - 1]
    assert spike_weights(3) == (1.0, 0.5, 0.5)
    assert spike_weights(7)[3:] == (1 / 3, 1 / 3, 1 / 3, 1 / 3)
    assert spike_weights(15)[7:] == (0.25,) * 8


def test_build_uncomplemented_requires_gaps():
    tight = BlockSeq((FinVec.basis(1), FinVec.basis(2)))
    with pytest.raises(ValueError):
        build_uncomplemented(S2, tight)
    not_normalized = BlockSeq((FinVec({2: 2.0}), FinVec({5: 1.0})))
    with pytest.raises(ValueError):
        build_uncomplemented(S2, not_normalized)


def test_growth_table_examples():
    rows = growth_table(S2, 3)
    assert rows[0].lower_bound_C == 1.0
    assert abs(rows[2].companion_norm - 1.0) < 1e-12
    assert abs(rows[2].spike_norm - 2 / 3) < 1e-12
    assert abs(rows[2].lower_bound_C - 2 / 3) < 1e-12
    rows = growth_table(B2, 4)
    assert abs(rows[3].lower_bound_C - 2 ** 1.5 / 4) < 1e-9
    with pytest.raises(ValueError):
        growth_table(S2, 9)


def test_growth_table_closed_forms_and_crossing():
    for space in (S1, S2, B2, SpaceSpec.baernstein(3.0)):
        p = space.p
        for row in growth_table(space, 7):
            if space.kind == "Sp":
                expected = 2 ** ((row.k - 1) / p) / row.k
            else:
                expected = (2 ** (1 - 1 / p)) ** (row.k - 1) / row.k
            assert abs(row.lower_bound_C - expected) <= 1e-9 * max(1.0, expected)
    rows_b2 = growth_table(B2, 8)
    assert rows_b2[6].spike_norm < 10.0 < rows_b2[7].spike_norm
    rows_s1 = growth_table(S1, 8)
    assert rows_s1[6].lower_bound_C < 10.0 < rows_s1[7].lower_bound_C


def test_select_intertwined():
    m = [2, 4, 6, 8, 10, 12]
    n = [3, 5, 7, 9, 11, 13]
    chosen = select_intertwined_indices(m, n)
    assert chosen[0] == 1
    for a, b in zip(chosen, chosen[1:]):
        assert m[b - 1] >= n[a - 1] and n[b - 1] >= m[a - 1]
    # both directions dominate along the selection with the interleave constant
    for space in (S2, B2):
        c = 2.0 if space.kind == "Bp" else 2 ** (1 / space.p)
        sub_m = [FinVec.basis(m[j - 1]) for j in chosen]
        sub_n = [FinVec.basis(n[j - 1]) for j in chosen]
        alpha = [1.0, -0.5, 0.25][: len(chosen)] + [0.0] * max(0, len(chosen) - 3)
        assert check_domination(space, sub_m, sub_n, c, alpha)
        assert check_domination(space, sub_n, sub_m, c, alpha)


def test_milman_examples():
    w = milman_flat_vector([FinVec.basis(1), FinVec.basis(2)], 2)
    assert sorted(w.support) == [1, 2]
    assert all(abs(abs(v) - 1.0) <= 1e-9 for v in w.entries.values())
    w = milman_flat_vector([FinVec.basis(4)], 1)
    assert abs(abs(w[4]) - 1.0) <= 1e-12


def test_milman_random_subspaces():
    rng = random.Random(83)
    for _ in range(25):
        dim = rng.randint(1, 3)
        coords = sorted(rng.sample(range(1, 10), rng.randint(max(dim, 2), 9)))
        while True:
            mat = [[rng.uniform(-1, 1) for _ in range(dim)] for _ in coords]
            if np.linalg.matrix_rank(np.array(mat)) == dim:
                break
        basis = [
            FinVec({c: mat[r][d] for r, c in enumerate(coords) if mat[r][d] != 0.0})
            for d in range(dim)
        ]
        for n in range(1, dim + 1):
            w = milman_flat_vector(basis, n)
            assert abs(w.sup_norm() - 1.0) <= 1e-9
            assert sum(1 for v in w.entries.values() if abs(v) >= 1 - 1e-9) >= n


def test_milman_chebyshev_fallback_helper():
    # singular pinned system whose min-coefficient-norm solution overshoots:
    # span of (1,1,5) and (0,0,1); pin rows 0,1 to +1; least squares gives
    # (1,1,5) but the sup-norm minimizer is (1,1,0)
    from schreier_lab.sequences import _chebyshev_solution

    b_mat = np.array([[1.0, 0.0], [1.0, 0.0], [5.0, 1.0]])
    rhs = np.array([1.0, 1.0])
    lsq, *_ = np.linalg.lstsq(b_mat[:2, :], rhs, rcond=None)
    assert np.max(np.abs(b_mat @ lsq)) > 1.0 + 1e-9
    coeff = _chebyshev_solution(b_mat, (0, 1), rhs)
    w = b_mat @ coeff
    assert np.allclose(w[:2], 1.0, atol=1e-9)
    assert np.max(np.abs(w)) <= 1.0 + 1e-9


def test_milman_validation():
    with pytest.raises(ValueError):
        milman_flat_vector([FinVec.basis(1)], 2)  # n > dim
    with pytest.raises(ValueError):
        milman_flat_vector([FinVec.basis(1), FinVec.basis(1)], 1)  # dependent
    with pytest.raises(ValueError):
        milman_flat_vector([], 1)
    big = [FinVec.basis(i) for i in range(1, 7)]
    with pytest.raises(ValueError):
        milman_flat_vector(big, 1)  # dimension bound


def test_uncomplemented_pipeline():
    # skipped normalized flat blocks -> spiked sequence -> still a valid block sequence
    for space in (S2, B2):
        raw = [FinVec.indicator(range(4, 6)), FinVec.indicator(range(8, 11))]
        u = normalize_blocks(space, raw)
        assert u.is_skipped()
        spiked = build_uncomplemented(space, u)
        assert len(spiked) == 2
        assert spiked.blocks[0].max_support == 6
        assert spiked.blocks[0][6] == 1.0  # t_1 = 1
        assert spiked.blocks[1][11] == 0.5  # t_2 = 1/2
