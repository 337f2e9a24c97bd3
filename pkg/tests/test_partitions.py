import math
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from blockcraft.partitions import (
    CoreQuotient,
    beta_set,
    conjugate,
    count_hooks,
    count_partitions_with_core,
    d_core,
    d_core_and_quotient,
    enumerate_partitions,
    from_core_and_quotient,
    hook_lengths,
    mn_character_value,
    partition_count,
    partition_from_beta,
    partition_tuple_count,
    rim_hook_removals,
)


# ---------------------------------------------------------------------------
# Independent oracles.  These deliberately avoid the beta-set/abacus route
# used by the library: partition counts come from Euler's pentagonal
# recurrence, and rim hooks are removed directly on the Young diagram.
# ---------------------------------------------------------------------------

def oracle_partition_count(n):
    counts = [1] + [0] * n
    for m in range(1, n + 1):
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            counts[m] += sign * counts[m - g1]
            if g2 <= m:
                counts[m] += sign * counts[m - g2]
            k += 1
    return counts[n]


def oracle_box_hooks(lam):
    """(i, j, hook length) for every box, 0-indexed, straight from arm+leg+1."""
    out = []
    for i, row in enumerate(lam):
        for j in range(row):
            arm = row - (j + 1)
            leg = sum(1 for k in range(i + 1, len(lam)) if lam[k] >= j + 1)
            out.append((i, j, arm + leg + 1))
    return out


def oracle_remove_rim_hook(lam, i, j):
    """Remove the rim hook anchored at box (i, j) by the row-shift rule."""
    m = max(k for k in range(i, len(lam)) if lam[k] >= j + 1)
    new = list(lam)
    for k in range(i, m):
        new[k] = lam[k + 1] - 1
    new[m] = j
    return tuple(p for p in new if p > 0)


def oracle_all_cores(lam, d):
    """Every partition reachable by exhaustively removing rim d-hooks."""
    hooks = [(i, j) for i, j, h in oracle_box_hooks(lam) if h == d]
    if not hooks:
        return {lam}
    result = set()
    for i, j in hooks:
        result |= oracle_all_cores(oracle_remove_rim_hook(lam, i, j), d)
    return result


def centralizer_order(rho):
    mult = Counter(rho)
    z = 1
    for i, m in mult.items():
        z *= i**m * math.factorial(m)
    return z


@st.composite
def partitions_st(draw, max_n=16):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return ()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n))
    return tuple(sorted(Counter(bins).values(), reverse=True))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def test_enumerate_partitions_trivial_and_order():
    assert enumerate_partitions(0) == ((),)
    assert enumerate_partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_enumerate_partitions_counts_match_pentagonal_oracle():
    for n in range(0, 26):
        parts = enumerate_partitions(n)
        assert len(parts) == oracle_partition_count(n)
        assert len(set(parts)) == len(parts)
        assert list(parts) == sorted(parts, reverse=True)
        assert all(sum(lam) == n for lam in parts)


def test_enumerate_partitions_30():
    assert len(enumerate_partitions(30)) == 5604
    assert oracle_partition_count(30) == 5604


def test_partition_count_agrees_with_oracle():
    for n in range(0, 60):
        assert partition_count(n) == oracle_partition_count(n)
    assert partition_count(-1) == 0


def test_enumerate_partitions_rejects_negative():
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


# ---------------------------------------------------------------------------
# Hooks
# ---------------------------------------------------------------------------

def test_hook_lengths_examples():
    assert hook_lengths((5,)) == (5, 4, 3, 2, 1)
    assert hook_lengths((2, 1)) == (3, 1, 1)
    assert hook_lengths((3, 1)) == (4, 2, 1, 1)
    assert hook_lengths(()) == ()


@given(partitions_st())
def test_hook_lengths_match_box_oracle(lam):
    assert sorted(hook_lengths(lam)) == sorted(h for _, _, h in oracle_box_hooks(lam))


@given(partitions_st())
def test_hook_multiset_invariants(lam):
    hooks = hook_lengths(lam)
    assert len(hooks) == sum(lam)
    if lam:
        assert max(hooks) == lam[0] + len(lam) - 1


@given(partitions_st())
def test_hook_product_divides_factorial(lam):
    prod = math.prod(hook_lengths(lam))
    assert math.factorial(sum(lam)) % prod == 0


def test_count_hooks_examples():
    assert count_hooks((5,), 4) == 1
    assert count_hooks((3, 2), 4) == 1
    assert count_hooks((), 3) == 0


# ---------------------------------------------------------------------------
# Beta-sets, cores, quotients
# ---------------------------------------------------------------------------

def test_beta_set_roundtrip():
    lam = (4, 2, 2, 1)
    for beads in (4, 7, 12):
        assert partition_from_beta(beta_set(lam, beads)) == lam


def test_partition_from_beta_rejects_bad_input():
    with pytest.raises(ValueError):
        partition_from_beta((2, 2))
    with pytest.raises(ValueError):
        partition_from_beta((1, 3))
    with pytest.raises(ValueError):
        partition_from_beta((3, -1))


def test_core_quotient_examples():
    cq = d_core_and_quotient((1, 1, 1, 1), 3)
    assert cq.core == (1,)
    assert cq.weight == 1
    assert sum(sum(mu) for mu in cq.quotient) == 1

    cq = d_core_and_quotient((2, 1, 1), 3)
    assert cq.core == (2, 1, 1)
    assert cq.weight == 0

    cq = d_core_and_quotient((4,), 5)
    assert cq.core == (4,)
    assert cq.weight == 0


def test_core_matches_diagram_oracle():
    for n in range(0, 11):
        for d in (2, 3, 4, 5):
            for lam in enumerate_partitions(n):
                cores = oracle_all_cores(lam, d)
                assert len(cores) == 1, f"removal order changed the core of {lam}"
                assert d_core(lam, d) == next(iter(cores))


def test_core_quotient_roundtrip_full_grid():
    for n in range(0, 21):
        for d in range(2, 8):
            for lam in enumerate_partitions(n):
                cq = d_core_and_quotient(lam, d)
                assert sum(cq.core) + d * cq.weight == n
                assert from_core_and_quotient(cq.core, cq.quotient, d) == lam


def test_core_quotient_d1():
    cq = d_core_and_quotient((3, 2), 1)
    assert cq == CoreQuotient(d=1, core=(), weight=5, quotient=((3, 2),))
    assert from_core_and_quotient((), ((3, 2),), 1) == (3, 2)


def test_count_partitions_with_core_examples():
    assert count_partitions_with_core(4, 3, (1,)) == 3
    assert count_partitions_with_core(10, 5, ()) == 20
    assert count_partitions_with_core(2, 3, (2,)) == 1  # n = |core|
    assert count_partitions_with_core(5, 3, (1,)) == 0  # size gap not divisible
    with pytest.raises(ValueError):
        count_partitions_with_core(6, 3, (3,))  # (3) has a 3-hook


def test_core_census_sums_to_partition_count():
    for n in range(0, 13):
        for d in (2, 3, 5):
            cores = {d_core(lam, d) for lam in enumerate_partitions(n)}
            total = sum(count_partitions_with_core(n, d, mu) for mu in cores)
            assert total == partition_count(n)


def test_partition_tuple_count_small():
    assert partition_tuple_count(1, 6) == partition_count(6)
    assert partition_tuple_count(5, 2) == 20
    assert partition_tuple_count(2, 2) == 5
    assert partition_tuple_count(3, 0) == 1


# ---------------------------------------------------------------------------
# Rim hooks and Murnaghan-Nakayama
# ---------------------------------------------------------------------------

@given(partitions_st(max_n=12), st.integers(min_value=1, max_value=12))
def test_rim_hook_removals_match_diagram_oracle(lam, t):
    got = sorted(rim_hook_removals(lam, t))
    expected = sorted(
        (oracle_remove_rim_hook(lam, i, j), sum(1 for k in range(i, len(lam)) if lam[k] >= j + 1) - 1)
        for i, j, h in oracle_box_hooks(lam)
        if h == t
    )
    assert got == expected


def test_mn_examples():
    assert mn_character_value((4,), (2, 1, 1)) == 1
    assert mn_character_value((4,), (4,)) == 1
    assert mn_character_value((2, 1), (3,)) == -1
    assert mn_character_value((2, 1), (1, 1, 1)) == 2
    with pytest.raises(ValueError):
        mn_character_value((2, 1), (2, 1, 1))


@settings(deadline=None)
@given(partitions_st(max_n=10))
def test_mn_degree_equals_hook_formula(lam):
    n = sum(lam)
    degree = math.factorial(n) // math.prod(hook_lengths(lam))
    assert mn_character_value(lam, (1,) * n) == degree


def test_mn_row_orthogonality_small():
    for n in range(1, 7):
        parts = enumerate_partitions(n)
        sizes = {rho: math.factorial(n) // centralizer_order(rho) for rho in parts}
        for a, lam in enumerate(parts):
            for mu in parts[a:]:
                inner = sum(
                    sizes[rho] * mn_character_value(lam, rho) * mn_character_value(mu, rho)
                    for rho in parts
                )
                assert inner == (math.factorial(n) if lam == mu else 0)


def test_conjugate_involution():
    assert conjugate((3, 1)) == (2, 1, 1)
    for lam in enumerate_partitions(9):
        assert conjugate(conjugate(lam)) == lam
