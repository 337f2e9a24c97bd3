"""Exact character-degree multisets for the local groups: C_m x| C_d and B wr S_w.

Degrees are all we ever need downstream (the conjecture checks are pure
counts), so no character labels are stored.  Both constructions are standard
Clifford theory:

* For C_m x| C_d acting by x -> u*x, each orbit O of <u> on Z_m = Irr(C_m)
  of size o contributes d/o characters of degree o (the stabilizer is cyclic,
  so invariant characters extend, and Gallagher gives d/o extensions).

* For B wr S_w, characters are indexed by functions phi from Irr(B) to
  partitions with total size w, of degree
  w! * prod_chi chi(1)^{|phi(chi)|} f(phi(chi)) / |phi(chi)|!   where f is
  the hook-formula dimension of the symmetric-group label.

Every constructed multiset is verified against sum(mult * degree^2) = |G| at
construction time, so a wrong degree formula cannot propagate silently.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .arith import is_prime
from .errors import CrossCheckError
from .partitions import enumerate_partitions
from .sym_chars import sym_degree


@dataclass(frozen=True)
class DegreeMultiset:
    """Multiset of exact character degrees: ((degree, multiplicity), ...) plus |G|."""

    entries: tuple[tuple[int, int], ...]
    group_order: int

    def __post_init__(self):
        if any(d < 1 or m < 1 for d, m in self.entries):
            raise ValueError("degrees and multiplicities must be positive")
        if list(self.entries) != sorted(self.entries):
            raise ValueError("entries must be sorted by degree")
        square_sum = sum(m * d * d for d, m in self.entries)
        if square_sum != self.group_order:
            raise CrossCheckError(
                f"sum of squared degrees {square_sum} != group order {self.group_order}"
            )

    @classmethod
    def from_counter(cls, counts: Counter, group_order: int) -> "DegreeMultiset":
        return cls(tuple(sorted(counts.items())), group_order)

    @property
    def character_count(self) -> int:
        return sum(m for _, m in self.entries)

    def degrees(self):
        """Yield each degree with multiplicity."""
        for d, m in self.entries:
            for _ in range(m):
                yield d


@dataclass(frozen=True)
class MetacyclicSpec:
    """C_m x| C_d with the generator of C_d acting on Z_m as x -> u*x."""

    m: int
    d: int
    u: int

    def __post_init__(self):
        if self.m < 1 or self.d < 1:
            raise ValueError("m and d must be positive")
        if not 0 <= self.u < self.m:
            raise ValueError("u must be reduced modulo m")
        if pow(self.u, self.d, self.m) != 1 % self.m:
            raise ValueError(f"u^d != 1 mod m for {self!r}: not a valid action")


def metacyclic_degrees(spec: MetacyclicSpec) -> DegreeMultiset:
    """Degree multiset of C_m x| C_d; sum of squares is m*d by construction."""
    seen = [False] * spec.m
    counts: Counter = Counter()
    for start in range(spec.m):
        if seen[start]:
            continue
        size = 0
        x = start
        while not seen[x]:
            seen[x] = True
            size += 1
            x = x * spec.u % spec.m
        if spec.d % size:
            raise CrossCheckError(f"orbit size {size} does not divide d={spec.d}")
        counts[size] += spec.d // size
    return DegreeMultiset.from_counter(counts, spec.m * spec.d)


def cyclic_degrees(m: int) -> DegreeMultiset:
    """The m linear characters of C_m."""
    return metacyclic_degrees(MetacyclicSpec(m=m, d=1, u=1 % m))


def wreath_degrees(base: DegreeMultiset, w: int) -> DegreeMultiset:
    """Degree multiset of (base group) wr S_w."""
    if w < 0:
        raise ValueError("w must be nonnegative")
    chars = list(base.degrees())
    counts: Counter = Counter()

    def assign(idx: int, remaining: int, num: int, denom: int) -> None:
        if idx == len(chars):
            if remaining == 0:
                counts[factorial(w) // denom * num] += 1
            return
        char_degree = chars[idx]
        for size in range(remaining + 1):
            for mu in enumerate_partitions(size):
                assign(
                    idx + 1,
                    remaining - size,
                    num * char_degree**size * sym_degree(mu),
                    denom * factorial(size),
                )

    assign(0, w, 1, 1)
    return DegreeMultiset.from_counter(counts, base.group_order**w * factorial(w))


@lru_cache(maxsize=None)
def _cyclic_wreath_degrees(m: int, w: int) -> DegreeMultiset:
    return wreath_degrees(cyclic_degrees(m), w)


def cyclic_wreath_character_count(d: int, w: int) -> int:
    """|Irr(C_d wr S_w)|, by full degree enumeration."""
    return _cyclic_wreath_degrees(d, w).character_count


def irr_lprime_count(degrees: DegreeMultiset, ell: int) -> int:
    """Number of characters (with multiplicity) whose degree is prime to ell."""
    if not is_prime(ell):
        raise ValueError("ell must be prime")
    return sum(m for d, m in degrees.entries if d % ell)
