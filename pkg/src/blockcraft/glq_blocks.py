"""ell != p machinery for GL_n(q): ell'-criteria, the local overgroup, blocks.

Everything is governed by d = d_ell(q), the order of q mod ell.  The prime
ell divides Phi_m(q) exactly for m in {d, d*ell, d*ell^2, ...}; a unipotent
character rho^lam is ell' (for ell > 2) iff lam has the maximal number of
hooks divisible by L for every tower length L in that same set; and a
general character is ell' iff its semisimple part centralizes a Sylow
ell-subgroup and all unipotent components are ell'.
Each of these criteria is computed both structurally and by direct valuation
of exact degrees, and the two routes must agree.

The McKay comparison is against the overgroup
M = (C_{q^d-1} x| C_d) wr S_w x GL_r(q), n = wd + r, which contains the
Sylow ell-normalizer; |Irr_{ell'}(M)| comes from the wreath degree multiset
and a recursive GL_r count (r < d keeps the recursion finite).

Unipotent ell-blocks are labelled by d-cores; the series size of a block is
computed three independent ways (partition census, |Irr(C_d wr S_w)|, and
the d-tuple convolution) which must agree.  The d-core classification is
backed by theory for ell >= 7; below that threshold labels carry
verified=False rather than being refused.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .arith import is_prime, multiplicative_order, nu, prime_power_radical
from .errors import CrossCheckError
from .glq_chars import (
    SeriesLabel,
    all_degrees,
    centralizer_order,
    gl_order,
    green_degree,
    irr_pprime_count_gl,
    semisimple_class_count,
    unipotent_degree,
)
from .partitions import (
    Partition,
    count_partitions_with_core,
    d_core_and_quotient,
    enumerate_partitions,
    partition_tuple_count,
)
from .report import VerificationReport
from .wreath_local import (
    MetacyclicSpec,
    cyclic_wreath_character_count,
    irr_lprime_count,
    metacyclic_degrees,
    wreath_degrees,
)

DEFAULT_MIN_ELL = 7


def d_ell(q: int, ell: int) -> int:
    """Multiplicative order of q modulo ell (the prime ell must not divide q)."""
    if not is_prime(ell):
        raise ValueError("ell must be prime")
    if q % ell == 0:
        raise ValueError(f"ell={ell} divides q={q}")
    return multiplicative_order(q % ell, ell)


@dataclass(frozen=True)
class EllContext:
    """A prime power q, a prime ell not dividing q, and d = d_ell(q)."""

    q: int
    ell: int
    d: int

    def __post_init__(self):
        prime_power_radical(self.q)
        if d_ell(self.q, self.ell) != self.d:
            raise ValueError(f"d={self.d} is not the order of {self.q} mod {self.ell}")

    @classmethod
    def of(cls, q: int, ell: int) -> "EllContext":
        return cls(q=q, ell=ell, d=d_ell(q, ell))


@lru_cache(maxsize=None)
def cyclotomic_value(m: int, q: int) -> int:
    """Phi_m(q), by the exact recursion q^m - 1 = prod_{e | m} Phi_e(q)."""
    if m < 1:
        raise ValueError("m must be positive")
    value = q**m - 1
    for e in range(1, m):
        if m % e == 0:
            value, rem = divmod(value, cyclotomic_value(e, q))
            if rem:
                raise CrossCheckError("cyclotomic recursion left a remainder")
    return value


def phi_divisibility(m: int, q: int, ell: int) -> bool:
    """Whether ell divides Phi_m(q); dual route: big-integer value vs membership.

    The membership criterion is m in {d, d*ell, d*ell^2, ...} with d = d_ell(q).
    """
    direct = cyclotomic_value(m, q) % ell == 0
    d = d_ell(q, ell)
    quotient, rem = divmod(m, d)
    if rem:
        member = False
    else:
        while quotient % ell == 0:
            quotient //= ell
        member = quotient == 1
    if direct != member:
        raise CrossCheckError(
            f"Phi_{m}({q}) mod {ell}: direct evaluation and membership disagree"
        )
    return direct


def hook_tower_criterion(lam: Partition, d: int, ell: int) -> bool:
    """Hook-combinatorial ell'-test: full L-weight for every L in {d, d*ell, ...}.

    For ell odd, nu_ell([m]_q) counts the tower lengths L = d*ell^j dividing
    m (the same set that governs ell | Phi_m(q)), so the degree is ell' iff
    lam has the maximal number floor(n/L) of hooks divisible by L for every
    tower length (for d = 1 the L = 1 layer cancels against the [m]_q
    denominator and is skipped).  When floor(n/d) < ell only the first layer
    is active and this reduces to full d-weight.
    """
    n = sum(lam)
    length = d if d > 1 else ell
    while length <= n:
        weight = (n - sum(d_core_and_quotient(lam, length).core)) // length
        if weight != n // length:
            return False
        length *= ell
    return True


def unipotent_is_lprime(lam: Partition, context: EllContext) -> bool:
    """Whether the unipotent character labelled lam has degree prime to ell.

    Valuation route: nu_ell of the exact q-hook degree.  Hook route (valid
    for ell > 2): the tower-weight criterion above.  Both are computed and
    must agree when ell > 2.
    """
    degree = unipotent_degree(lam, context.q)
    by_valuation = degree % context.ell != 0
    if context.ell > 2:
        by_hooks = hook_tower_criterion(lam, context.d, context.ell)
        if by_hooks != by_valuation:
            raise CrossCheckError(
                f"hook criterion and degree valuation disagree for {lam!r}, {context}"
            )
    return by_valuation


def series_is_lprime(label: SeriesLabel, context: EllContext) -> bool:
    """Whether the character rho^{s, lam} has degree prime to ell.

    Structural route: s centralizes a Sylow ell-subgroup (equal ell-valuations
    of |C(s)| and |G|) and every unipotent component is ell' over q^{d_i}.
    Direct route: ell-valuation of the Green degree.  Must agree.
    """
    q, ell = context.q, context.ell
    order = gl_order(label.n, q)
    cent = centralizer_order(label, q)
    structural = nu(cent, ell) == nu(order, ell)
    if structural:
        structural = all(
            unipotent_is_lprime(lam, EllContext.of(q**d, ell))
            for d, _, lam in label.components
        )
    direct = green_degree(label, q) % ell != 0
    if structural != direct:
        raise CrossCheckError(
            f"Sylow-centralizing criterion and degree valuation disagree for {label}"
        )
    return direct


def irr_lprime_count_gl(n: int, q: int, ell: int) -> int:
    """|Irr_{ell'}(GL_n(q))| by full degree enumeration."""
    if not is_prime(ell):
        raise ValueError("ell must be prime")
    return sum(m for deg, m in all_degrees(n, q).entries if deg % ell)


def _local_degree_counter(n: int, context: EllContext) -> Counter:
    """Full degree multiset of M = (C_{q^d-1} x| C_d) wr S_w x GL_r(q)."""
    q, d = context.q, context.d
    w, r = n // d, n % d
    if w == 0:
        return Counter(dict((deg, m) for deg, m in all_degrees(n, q).entries))
    m = q**d - 1
    base = metacyclic_degrees(MetacyclicSpec(m=m, d=d, u=q % m))
    wreath = wreath_degrees(base, w)
    out: Counter = Counter()
    for deg_w, mult_w in wreath.entries:
        for deg_g, mult_g in all_degrees(r, q).entries:
            out[deg_w * deg_g] += mult_w * mult_g
    return out


def local_overgroup_count(n: int, context: EllContext) -> int:
    """|Irr_{ell'}(M)| for the Sylow ell-overgroup M of GL_n(q).

    With n = wd + r this is the ell'-count of (C_{q^d-1} x| C_d) wr S_w times
    the (recursively enumerated) ell'-count of GL_r(q); for w = 0 the
    overgroup degenerates to GL_n(q) itself.
    """
    q, ell, d = context.q, context.ell, context.d
    w, r = n // d, n % d
    if w == 0:
        return irr_lprime_count_gl(n, q, ell)
    m = q**d - 1
    base = metacyclic_degrees(MetacyclicSpec(m=m, d=d, u=q % m))
    wreath_count = irr_lprime_count(wreath_degrees(base, w), ell)
    return wreath_count * irr_lprime_count_gl(r, q, ell)


def _mod_ell_signature(counter_like, ell: int) -> Counter:
    """Multiset of degree residues mod ell, folded up to sign, over ell'-degrees."""
    out: Counter = Counter()
    for deg, mult in counter_like:
        residue = deg % ell
        if residue:
            out[min(residue, ell - residue)] += mult
    return out


def verify_gl_mckay(n: int, q: int, ell: int) -> VerificationReport:
    """McKay count for GL_n(q) at a prime ell not dividing q.

    Global side: ell'-characters from the full Green degree enumeration.
    Local side: the overgroup count.  A heuristic note records whether the
    two sides' ell'-degrees also agree mod ell up to sign (the labelled
    bijection needed to verify that congruence properly is not constructed).
    """
    start = time.perf_counter()
    context = EllContext.of(q, ell)
    global_count = irr_lprime_count_gl(n, q, ell)
    local_count = local_overgroup_count(n, context)
    w, r = n // context.d, n % context.d

    global_sig = _mod_ell_signature(all_degrees(n, q).entries, ell)
    local_sig = _mod_ell_signature(_local_degree_counter(n, context).items(), ell)
    congruent = global_sig == local_sig

    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        conjecture="gl_mckay",
        parameters={"n": n, "q": q, "ell": ell},
        global_count=global_count,
        local_count=local_count,
        passed=global_count == local_count,
        elapsed_ms=elapsed,
        notes=(
            f"d={context.d} w={w} r={r}",
            f"degrees mod ell match up to sign: {congruent} (heuristic, unlabelled)",
        ),
    )


def verify_gl_mckay_defining(n: int, q: int) -> VerificationReport:
    """McKay count for GL_n(q) at its defining prime.

    Global side: characters of degree prime to p from the full enumeration.
    Local side: the closed-form count (q-1) q^(n-1) of the parameterization
    of Irr_{p'} of a Borel subgroup by degree-n characteristic polynomials.
    """
    start = time.perf_counter()
    p = prime_power_radical(q)
    global_count = sum(m for deg, m in all_degrees(n, q).entries if deg % p)
    local_count = irr_pprime_count_gl(n, q)
    census = semisimple_class_count(n, q)
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        conjecture="mckay",
        parameters={"n": n, "q": q, "ell": p},
        global_count=global_count,
        local_count=local_count,
        passed=global_count == local_count == census,
        elapsed_ms=elapsed,
        notes=(f"defining characteristic p={p}", f"semisimple class census {census}"),
    )


@dataclass(frozen=True)
class GlUnipotentBlockLabel:
    """Unipotent ell-block label of GL_n(q): (context, d-core, weight).

    verified is False when ell is below the theory threshold (default 7);
    the d-core combinatorics still applies but is not certified there.
    """

    context: EllContext
    core: Partition
    weight: int
    n: int
    verified: bool = True

    def __post_init__(self):
        if sum(self.core) + self.context.d * self.weight != self.n:
            raise ValueError("core size + d * weight must equal n")


def unipotent_block_of(
    lam: Partition, context: EllContext, min_ell: int = DEFAULT_MIN_ELL
) -> GlUnipotentBlockLabel:
    """Block label of the unipotent character rho^lam: its d-core and d-weight.

    The corresponding d-cuspidal pair is (GL_1(q^d)^w x GL_r(q)-shaped Levi,
    core), with r = |core|.  For ell < min_ell the label is returned flagged
    unverified instead of raising.
    """
    cq = d_core_and_quotient(lam, context.d)
    return GlUnipotentBlockLabel(
        context=context,
        core=cq.core,
        weight=cq.weight,
        n=sum(lam),
        verified=context.ell >= min_ell,
    )


def unipotent_blocks(
    n: int, context: EllContext, min_ell: int = DEFAULT_MIN_ELL
) -> tuple[GlUnipotentBlockLabel, ...]:
    """All unipotent block labels of GL_n(q) in the given context, largest weight first."""
    labels = {unipotent_block_of(lam, context, min_ell) for lam in enumerate_partitions(n)}
    return tuple(sorted(labels, key=lambda lab: (lab.weight, lab.core), reverse=True))


def unipotent_block_series_size(label: GlUnipotentBlockLabel) -> int:
    """Number of unipotent characters in the block, by three independent routes.

    Partition census with the given d-core; |Irr(C_d wr S_w)| (the relative
    Weyl group G(d,1,w)); and the d-tuple convolution count.  All must agree.
    """
    d, w = label.context.d, label.weight
    census = count_partitions_with_core(label.n, d, label.core)
    weyl = cyclic_wreath_character_count(d, w)
    tuples = partition_tuple_count(d, w)
    if not census == weyl == tuples:
        raise CrossCheckError(
            f"series size routes disagree for {label}: {census}, {weyl}, {tuples}"
        )
    return census
