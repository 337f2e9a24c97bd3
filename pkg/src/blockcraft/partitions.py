"""Partition, hook, abacus, and rim-hook combinatorics.

A partition is a plain tuple of weakly decreasing positive ints; ``()`` is
the unique partition of 0.  The canonical enumeration order is reverse
lexicographic: ``(4), (3,1), (2,2), (2,1,1), (1,1,1,1)``.

Hook-length multisets are tuples sorted in decreasing order, one entry per
box of the Young diagram.  Cores and quotients are computed on the d-runner
abacus with the beta-set padded to a multiple of d beads; that normalization
makes the d-quotient well defined (it does not depend on how far we pad).

Everything here is pure and deterministic.  The Murnaghan-Nakayama memo
table is a module-level ``functools.cache`` of immutable values, so
concurrent readers always observe consistent results.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import cache, lru_cache

from .errors import CrossCheckError

Partition = tuple[int, ...]


def validate_partition(lam: Partition) -> None:
    """Raise ValueError unless lam is a weakly decreasing tuple of positive ints."""
    if not isinstance(lam, tuple):
        raise ValueError(f"partition must be a tuple, got {type(lam).__name__}")
    for i, part in enumerate(lam):
        if not isinstance(part, int) or part <= 0:
            raise ValueError(f"partition parts must be positive ints: {lam!r}")
        if i and lam[i - 1] < part:
            raise ValueError(f"partition parts must be weakly decreasing: {lam!r}")


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []
    prefix: list[int] = []

    def rec(remaining: int, cap: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            rec(remaining - part, part)
            prefix.pop()

    rec(n, n)
    return tuple(out)


_PARTITION_COUNTS = [1]  # p(0), extended on demand by Euler's recurrence
_PARTITION_COUNTS_LOCK = threading.Lock()  # the table only ever grows


def partition_count(n: int) -> int:
    """The partition number p(n), via the pentagonal-number recurrence."""
    if n < 0:
        return 0
    if len(_PARTITION_COUNTS) <= n:
        with _PARTITION_COUNTS_LOCK:
            while len(_PARTITION_COUNTS) <= n:
                m = len(_PARTITION_COUNTS)
                total = 0
                k = 1
                while True:
                    g1 = k * (3 * k - 1) // 2
                    g2 = k * (3 * k + 1) // 2
                    if g1 > m:
                        break
                    sign = -1 if k % 2 == 0 else 1
                    total += sign * _PARTITION_COUNTS[m - g1]
                    if g2 <= m:
                        total += sign * _PARTITION_COUNTS[m - g2]
                    k += 1
                _PARTITION_COUNTS.append(total)
    return _PARTITION_COUNTS[n]


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    out = []
    for j in range(lam[0]):
        out.append(sum(1 for part in lam if part > j))
    return tuple(out)


def hook_lengths(lam: Partition) -> tuple[int, ...]:
    """Multiset of hook lengths of lam, sorted decreasing.

    The hook at box (i, j) is arm + leg + 1; the largest entry is always
    lam[0] + len(lam) - 1.
    """
    conj = conjugate(lam)
    out = []
    for i, row in enumerate(lam):
        for j in range(row):
            out.append(row - j + conj[j] - i - 1)
    out.sort(reverse=True)
    return tuple(out)


def count_hooks(lam: Partition, d: int) -> int:
    """Number of boxes of lam whose hook length is exactly d."""
    if d < 1:
        raise ValueError("d must be at least 1")
    return sum(1 for h in hook_lengths(lam) if h == d)


def beta_set(lam: Partition, beads: int) -> tuple[int, ...]:
    """First-column beta-numbers of lam with the given number of beads.

    Returns (lam_i + beads - 1 - i) for i = 0..beads-1 with lam padded by
    zeros; strictly decreasing.
    """
    if beads < len(lam):
        raise ValueError("bead count smaller than the number of parts")
    padded = lam + (0,) * (beads - len(lam))
    return tuple(padded[i] + beads - 1 - i for i in range(beads))


def partition_from_beta(beta: tuple[int, ...]) -> Partition:
    """Inverse of beta_set: recover the partition from a strictly decreasing beta-set."""
    b = len(beta)
    parts = []
    for i, val in enumerate(beta):
        if val < 0 or (i and val >= beta[i - 1]):
            raise ValueError("beta-set must be strictly decreasing and nonnegative")
        part = val - (b - 1 - i)
        if part > 0:
            parts.append(part)
    return tuple(parts)


@dataclass(frozen=True)
class CoreQuotient:
    """d-core and d-quotient of a partition: size(core) + d*weight = n."""

    d: int
    core: Partition
    weight: int
    quotient: tuple[Partition, ...]


@lru_cache(maxsize=None)
def d_core_and_quotient(lam: Partition, d: int) -> CoreQuotient:
    """Core and quotient of lam on the d-runner abacus.

    The core is what exhaustive rim d-hook removal leaves (independent of
    removal order); the quotient component for runner r is read off the bead
    levels of that runner.  d = 1 is allowed and gives an empty core with
    quotient (lam,).
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    validate_partition(lam)
    rows = max(1, len(lam))
    beads = d * ((rows + d - 1) // d)
    beta = beta_set(lam, beads)
    runners: list[list[int]] = [[] for _ in range(d)]
    for pos in beta:
        runners[pos % d].append(pos // d)
    core_positions = []
    quotient = []
    for r, levels in enumerate(runners):
        levels.sort(reverse=True)
        core_positions.extend(r + d * k for k in range(len(levels)))
        quotient.append(partition_from_beta(tuple(levels)))
    core = partition_from_beta(tuple(sorted(core_positions, reverse=True)))
    weight = sum(sum(mu) for mu in quotient)
    if sum(core) + d * weight != sum(lam):
        raise CrossCheckError("abacus core/quotient sizes inconsistent")
    return CoreQuotient(d=d, core=core, weight=weight, quotient=tuple(quotient))


def d_core(lam: Partition, d: int) -> Partition:
    return d_core_and_quotient(lam, d).core


def from_core_and_quotient(core: Partition, quotient: tuple[Partition, ...], d: int) -> Partition:
    """Reinsert a d-quotient onto the abacus of a d-core; inverse of d_core_and_quotient."""
    if d < 1 or len(quotient) != d:
        raise ValueError("quotient must have exactly d components")
    if d_core(core, d) != core:
        raise ValueError(f"{core!r} is not a {d}-core")
    weight = sum(sum(mu) for mu in quotient)
    rows = max(1, len(core))
    beads = d * ((rows + d - 1) // d) + d * weight
    beta = beta_set(core, beads)
    counts = [0] * d
    for pos in beta:
        counts[pos % d] += 1
    positions = []
    for r in range(d):
        for level in beta_set(quotient[r], counts[r]):
            positions.append(r + d * level)
    return partition_from_beta(tuple(sorted(positions, reverse=True)))


def partition_tuple_count(d: int, w: int) -> int:
    """Number of d-tuples of partitions with total size w."""
    if d < 1 or w < 0:
        raise ValueError("need d >= 1 and w >= 0")
    coeffs = [1] + [0] * w
    for _ in range(d):
        coeffs = [
            sum(coeffs[j] * partition_count(k - j) for j in range(k + 1))
            for k in range(w + 1)
        ]
    return coeffs[w]


def count_partitions_with_core(n: int, d: int, core: Partition) -> int:
    """Number of partitions of n with the given d-core.

    Computed by explicit census over all partitions of n, then cross-checked
    against the d-quotient bijection (d-tuples of partitions of total size
    (n - |core|)/d).  Returns 0 when n - |core| is negative or not divisible
    by d; raises ValueError if core is not actually a d-core.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    if d_core(core, d) != core:
        raise ValueError(f"{core!r} is not a {d}-core")
    rest = n - sum(core)
    if rest < 0 or rest % d != 0:
        return 0
    census = sum(1 for lam in enumerate_partitions(n) if d_core(lam, d) == core)
    expected = partition_tuple_count(d, rest // d)
    if census != expected:
        raise CrossCheckError(
            f"core census {census} != d-quotient count {expected} for n={n}, d={d}"
        )
    return census


def rim_hook_removals(lam: Partition, length: int) -> tuple[tuple[Partition, int], ...]:
    """All ways to remove one rim hook of the given length from lam.

    Returns (resulting partition, leg length) pairs; the leg length is the
    number of rows the hook spans minus one.
    """
    if length < 1:
        raise ValueError("hook length must be positive")
    beta = beta_set(lam, len(lam))
    present = set(beta)
    out = []
    for idx, pos in enumerate(beta):
        target = pos - length
        if target < 0 or target in present:
            continue
        new_beta = tuple(
            sorted((target if k == idx else val for k, val in enumerate(beta)), reverse=True)
        )
        leg = sum(1 for val in beta if target < val < pos)
        out.append((partition_from_beta(new_beta), leg))
    return tuple(out)


def mn_character_value(lam: Partition, rho: Partition) -> int:
    """Exact value chi^lam(rho) of the S_n character by the Murnaghan-Nakayama rule.

    rho is the cycle type of the class; both arguments must partition the
    same n.  At the identity class (1^n) this equals the hook-length degree.
    """
    validate_partition(lam)
    validate_partition(rho)
    if sum(lam) != sum(rho):
        raise ValueError(f"size mismatch: |{lam!r}| != |{rho!r}|")
    return _mn(lam, tuple(sorted(rho, reverse=True)))


@cache
def _mn(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1
    cycle, rest = rho[0], rho[1:]
    total = 0
    for mu, leg in rim_hook_removals(lam, cycle):
        term = _mn(mu, rest)
        total += -term if leg % 2 else term
    return total
