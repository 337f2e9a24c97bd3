"""Green's parameterization of Irr(GL_n(q)): class types, degrees, statistics.

No finite-field elements are ever constructed.  A semisimple class is
determined by the factorization type of its characteristic polynomial into
distinct monic irreducibles (degree d_i, multiplicity m_i, sum d_i m_i = n),
and every count or degree we need depends only on that type plus the number
of available irreducibles per degree (q - 1 in degree one, the Moebius
necklace count N_d(q) above).  Characters are labelled (type, one partition
of m_i per polynomial); the degree is

    |G : C(s)|_{p'} * prod_i (unipotent degree of lam^i over q^{d_i})

with C(s) = prod GL_{m_i}(q^{d_i}), and the unipotent degree is the q-hook
formula q^{a(lam)} [n]_q! / prod_h [len(h)]_q.  All arithmetic is exact; a
polynomial-in-q mode exists solely for the q -> 1 degeneration cross-check
against the symmetric-group hook formula.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, prod

from .arith import divisors, moebius
from .errors import CrossCheckError
from .partitions import Partition, enumerate_partitions, hook_lengths, validate_partition
from .wreath_local import DegreeMultiset


def gl_order(n: int, q: int) -> int:
    """|GL_n(q)| = q^(n(n-1)/2) prod_{j<=n} (q^j - 1); GL_0 is trivial."""
    if n < 0 or q < 2:
        raise ValueError("need n >= 0 and q >= 2")
    return q ** (n * (n - 1) // 2) * prod(q**j - 1 for j in range(1, n + 1))


def torus_order(lam: Partition, q: int) -> int:
    """Order of the maximal torus of type lam: prod (q^{lam_i} - 1)."""
    validate_partition(lam)
    return prod(q**part - 1 for part in lam)


def irreducible_poly_count(d: int, q: int) -> int:
    """Number of monic irreducible polynomials of degree d over F_q (necklace count)."""
    if d < 1:
        raise ValueError("d must be positive")
    total = sum(moebius(d // e) * q**e for e in divisors(d))
    count, rem = divmod(total, d)
    if rem:
        raise CrossCheckError("necklace count not integral")
    return count


def available_poly_count(d: int, q: int) -> int:
    """Eligible irreducibles of degree d (the factor X is excluded in degree 1)."""
    if d == 1:
        return q - 1
    return irreducible_poly_count(d, q)


@dataclass(frozen=True)
class ClassType:
    """Factorization type of a semisimple class: ((d_i, m_i), ...) per distinct factor.

    Entries are kept in the canonical descending order used by the
    enumeration; sum d_i m_i = n.
    """

    entries: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return sum(d * m for d, m in self.entries)

    def available(self, q: int) -> dict:
        return {d: available_poly_count(d, q) for d in {d for d, _ in self.entries}}

    def class_count(self, q: int) -> int:
        """Number of semisimple classes with this factorization type.

        Per degree d: choose distinct polynomials for the multiplicity
        multiset M_d: falling(available, |M_d|) / prod (value repeats)!.
        """
        total = 1
        by_degree: dict[int, Counter] = {}
        for d, m in self.entries:
            by_degree.setdefault(d, Counter())[m] += 1
        for d, mult_counter in by_degree.items():
            remaining = available_poly_count(d, q)
            for repeat in mult_counter.values():
                total *= comb(remaining, repeat)
                if total == 0:
                    return 0
                remaining -= repeat
        return total


@lru_cache(maxsize=None)
def enumerate_class_types(n: int, q: int) -> tuple[tuple[ClassType, int], ...]:
    """All factorization types of degree n with their exact class counts.

    Types whose multiplicity pattern needs more distinct polynomials than the
    field offers get count 0 (e.g. two distinct linear factors over F_2).
    The counts total (q-1) q^(n-1), the semisimple class census.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    pairs = sorted(
        ((d, m) for d in range(1, n + 1) for m in range(1, n // d + 1)),
        reverse=True,
    )
    out: list[tuple[ClassType, int]] = []
    chosen: list[tuple[int, int]] = []

    def rec(start: int, remaining: int) -> None:
        if remaining == 0:
            ctype = ClassType(entries=tuple(chosen))
            out.append((ctype, ctype.class_count(q)))
            return
        for idx in range(start, len(pairs)):
            d, m = pairs[idx]
            if d * m <= remaining:
                chosen.append((d, m))
                rec(idx, remaining - d * m)
                chosen.pop()

    rec(0, n)
    return tuple(out)


def semisimple_class_count(n: int, q: int) -> int:
    """Census over all class types; must equal (q-1) q^(n-1)."""
    return sum(count for _, count in enumerate_class_types(n, q))


def _q_int(m: int, q: int) -> int:
    """[m]_q = (q^m - 1)/(q - 1)."""
    return (q**m - 1) // (q - 1)


def _a_stat(lam: Partition) -> int:
    """a(lam) = sum (i-1) lam_i."""
    return sum(i * part for i, part in enumerate(lam))


@lru_cache(maxsize=None)
def unipotent_degree(lam: Partition, q: int) -> int:
    """q-hook-formula degree of the unipotent character labelled by lam."""
    if q < 2:
        raise ValueError("q must be at least 2")
    validate_partition(lam)
    n = sum(lam)
    numerator = prod(_q_int(m, q) for m in range(1, n + 1))
    denominator = prod(_q_int(h, q) for h in hook_lengths(lam))
    quotient, rem = divmod(numerator, denominator)
    if rem:
        raise CrossCheckError(f"q-hook quotient not integral for {lam!r}, q={q}")
    return q ** _a_stat(lam) * quotient


# -- polynomial-in-q mode (only for the q -> 1 degeneration cross-check) -----

def _poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return tuple(out)


def _poly_div_exact(num: tuple[int, ...], den: tuple[int, ...]) -> tuple[int, ...]:
    num_list = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(out) - 1, -1, -1):
        coeff = num_list[shift + len(den) - 1] // den[-1]
        out[shift] = coeff
        for j, cd in enumerate(den):
            num_list[shift + j] -= coeff * cd
    if any(num_list):
        raise CrossCheckError("polynomial division left a remainder")
    return tuple(out)


def unipotent_degree_poly(lam: Partition) -> tuple[int, ...]:
    """Coefficients (ascending powers of q) of the unipotent degree polynomial.

    Evaluating at q recovers unipotent_degree(lam, q); evaluating at q = 1
    recovers the symmetric-group hook-formula degree.
    """
    n = sum(lam)
    numerator: tuple[int, ...] = (1,)
    for m in range(1, n + 1):
        numerator = _poly_mul(numerator, (1,) * m)
    denominator: tuple[int, ...] = (1,)
    for h in hook_lengths(lam):
        denominator = _poly_mul(denominator, (1,) * h)
    quotient = _poly_div_exact(numerator, denominator)
    return (0,) * _a_stat(lam) + quotient


def eval_poly(coeffs: tuple[int, ...], x: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * x + c
    return value


@dataclass(frozen=True)
class SeriesLabel:
    """Green label of one irreducible character: ((d_i, m_i, lam^i), ...).

    One component per distinct polynomial factor of the semisimple part,
    carrying the unipotent label lam^i of GL_{m_i}(q^{d_i}).
    """

    components: tuple[tuple[int, int, Partition], ...]

    def __post_init__(self):
        for d, m, lam in self.components:
            if sum(lam) != m:
                raise ValueError(f"partition {lam!r} does not have size {m}")

    @property
    def n(self) -> int:
        return sum(d * m for d, m, _ in self.components)


def centralizer_order(label: SeriesLabel, q: int) -> int:
    """|C(s)| = prod GL_{m_i}(q^{d_i})."""
    return prod(gl_order(m, q**d) for d, m, _ in label.components)


def green_degree(label: SeriesLabel, q: int) -> int:
    """Degree of the character: |G : C(s)|_{p'} times the unipotent factors.

    The p-part of gl_order(m, Q) is the Q-power prefactor, so the p'-part of
    the index is a quotient of the (q^j - 1)-style products; it is computed
    as an exact division, never by factoring.
    """
    n = label.n
    index_p_prime, rem = divmod(
        prod(q**j - 1 for j in range(1, n + 1)),
        prod(
            prod(q ** (d * j) - 1 for j in range(1, m + 1))
            for d, m, _ in label.components
        ),
    )
    if rem:
        raise CrossCheckError("p'-part of the centralizer index is not integral")
    return index_p_prime * prod(unipotent_degree(lam, q**d) for d, m, lam in label.components)


def enumerate_series_labels(n: int, q: int):
    """Yield (label, class multiplicity): every series label once per class count.

    Characters in the same Lusztig series of a fixed class correspond to
    ordered tuples of partitions, one per distinct polynomial; classes of the
    same type contribute identical degree blocks, hence the multiplicity.
    """
    from itertools import product as iproduct

    for ctype, count in enumerate_class_types(n, q):
        if count == 0:
            continue
        partition_choices = [enumerate_partitions(m) for _, m in ctype.entries]
        for tup in iproduct(*partition_choices):
            components = tuple(
                (d, m, lam) for (d, m), lam in zip(ctype.entries, tup)
            )
            yield SeriesLabel(components=components), count


@lru_cache(maxsize=None)
def all_degrees(n: int, q: int) -> DegreeMultiset:
    """Exact degree multiset of Irr(GL_n(q)).

    Completeness of Green's parameterization is enforced by the multiset
    constructor: sum of squared degrees must equal |GL_n(q)|.
    """
    counts: Counter = Counter()
    for label, count in enumerate_series_labels(n, q):
        counts[green_degree(label, q)] += count
    return DegreeMultiset.from_counter(counts, gl_order(n, q))


def character_count(n: int, q: int) -> int:
    """Number of conjugacy classes of GL_n(q), from the parameterization."""
    return all_degrees(n, q).character_count


def irr_pprime_count_gl(n: int, q: int) -> int:
    """|Irr_{p'}(GL_n(q))| = (q-1) q^(n-1): one character per semisimple class."""
    if n == 0:
        return 1
    return (q - 1) * q ** (n - 1)
