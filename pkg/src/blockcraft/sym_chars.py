"""Character degrees and exact character tables of symmetric groups.

Degrees come from the hook formula n!/prod(hooks); p'-degree counting uses
valuations (Legendre on n!, per-box on hooks) so no large factorial is ever
formed.  Character values come from the Murnaghan-Nakayama rule.

The block oracle implements the central-character criterion: chi and psi lie
in the same p-block iff |x^G| chi(x)/chi(1) = |x^G| psi(x)/psi(1) mod p for
every class x.  For S_n all central-character values are rational integers
(verified at runtime), so the congruence is ordinary integer congruence.

Block idempotents e_B = sum_{chi in B} chi(1)/|G| sum_{x p-regular} chi(x) x^{-1}
are handled as exact rational coefficient vectors on class sums, and
multiplied via the integer structure constants of the class algebra.

Resource bounds: tables are refused above n = 10 and idempotent work above
n = 6 by default; the BLOCKCRAFT_MAX_N environment variable raises both.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .arith import is_prime, nu, nu_factorial
from .errors import CrossCheckError, ResourceLimitError
from .partitions import (
    Partition,
    enumerate_partitions,
    hook_lengths,
    mn_character_value,
)

DEFAULT_TABLE_BOUND = 10
DEFAULT_IDEMPOTENT_BOUND = 6


def _env_bound(default: int) -> int:
    raw = os.environ.get("BLOCKCRAFT_MAX_N")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"BLOCKCRAFT_MAX_N must be an integer, got {raw!r}") from exc
    return max(value, default)


def table_bound() -> int:
    return _env_bound(DEFAULT_TABLE_BOUND)


def idempotent_bound() -> int:
    return _env_bound(DEFAULT_IDEMPOTENT_BOUND)


def sym_degree(lam: Partition) -> int:
    """Hook-formula degree of the S_n character labelled by lam."""
    quotient, rem = divmod(factorial(sum(lam)), prod(hook_lengths(lam)))
    if rem:
        raise CrossCheckError(f"hook product does not divide n! for {lam!r}")
    return quotient


def sym_degree_valuation(lam: Partition, p: int) -> int:
    """nu_p of the degree, via nu_p(n!) - sum of per-hook valuations."""
    n = sum(lam)
    return nu_factorial(n, p) - sum(nu(h, p) for h in hook_lengths(lam))


def irr_pprime_count_sym(n: int, p: int) -> int:
    """|Irr_{p'}(S_n)|: partitions of n whose hook-formula degree is prime to p."""
    if not is_prime(p):
        raise ValueError("p must be prime")
    return sum(1 for lam in enumerate_partitions(n) if sym_degree_valuation(lam, p) == 0)


def macdonald_count(n: int) -> int:
    """Macdonald's odd-degree count: 2^(k_1+k_2+...) for n = 2^{k_1}+2^{k_2}+...."""
    if n < 1:
        raise ValueError("n must be positive")
    return 1 << sum(k for k in range(n.bit_length()) if n >> k & 1)


def _iterated_wreath_c2_abelianization_order(layers: int) -> int:
    # Each wreath layer C wr C_2 identifies the two base copies and adds one
    # C_2 on top, so the abelianization gains a factor of 2 per layer.
    order = 1
    for _ in range(layers):
        order *= 2
    return order


def sylow2_local_count(n: int) -> int:
    """|Irr_{2'}(N_{S_n}(P))| for P a Sylow 2-subgroup.

    P is self-normalizing and a direct product of iterated wreath products
    C_2 wr ... wr C_2, one with k factors per binary digit 2^k of n; the
    2'-characters of a 2-group are the linear ones, |P_i/P_i'| of them.
    """
    if n < 1:
        raise ValueError("n must be positive")
    count = 1
    for k in range(n.bit_length()):
        if n >> k & 1:
            count *= _iterated_wreath_c2_abelianization_order(k)
    return count


def centralizer_order(rho: Partition) -> int:
    """z_rho = prod i^{m_i} m_i! for the cycle type rho."""
    z = 1
    for i, m in Counter(rho).items():
        z *= i**m * factorial(m)
    return z


def cycle_type_class_size(rho: Partition) -> int:
    return factorial(sum(rho)) // centralizer_order(rho)


@dataclass(frozen=True)
class SymCharacterTable:
    """Exact character table of S_n.

    classes holds the cycle types in canonical (reverse lexicographic)
    order; rows maps each partition label to a {cycle type: value} dict.
    """

    n: int
    classes: tuple[Partition, ...]
    class_sizes: dict
    rows: dict

    def degree(self, lam: Partition) -> int:
        return self.rows[lam][(1,) * self.n]

    def value(self, lam: Partition, rho: Partition) -> int:
        return self.rows[lam][rho]


@lru_cache(maxsize=None)
def build_table(n: int, bound: int | None = None) -> SymCharacterTable:
    """Full exact table of S_n via the Murnaghan-Nakayama rule."""
    limit = table_bound() if bound is None else bound
    if n > limit:
        raise ResourceLimitError(f"character table for n={n} exceeds bound {limit}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    classes = enumerate_partitions(n)
    class_sizes = {rho: cycle_type_class_size(rho) for rho in classes}
    if sum(class_sizes.values()) != factorial(n):
        raise CrossCheckError("class sizes do not sum to n!")
    rows = {
        lam: {rho: mn_character_value(lam, rho) for rho in classes}
        for lam in classes
    }
    return SymCharacterTable(n=n, classes=classes, class_sizes=class_sizes, rows=rows)


def row_orthogonality_holds(table: SymCharacterTable) -> bool:
    """<chi, psi> = delta, computed exactly over class sizes."""
    order = factorial(table.n)
    for i, lam in enumerate(table.classes):
        for mu in table.classes[i:]:
            inner = sum(
                table.class_sizes[rho] * table.rows[lam][rho] * table.rows[mu][rho]
                for rho in table.classes
            )
            if inner != (order if lam == mu else 0):
                return False
    return True


def column_orthogonality_holds(table: SymCharacterTable) -> bool:
    """Column sums equal the centralizer order on the diagonal, 0 off it."""
    for i, rho in enumerate(table.classes):
        for sigma in table.classes[i:]:
            inner = sum(
                table.rows[lam][rho] * table.rows[lam][sigma] for lam in table.classes
            )
            expected = centralizer_order(rho) if rho == sigma else 0
            if inner != expected:
                return False
    return True


def central_character_values(table: SymCharacterTable, lam: Partition) -> dict:
    """omega_lam(K) = |K| chi(K) / chi(1) per class K; always a rational integer."""
    degree = table.degree(lam)
    out = {}
    for rho in table.classes:
        num = table.class_sizes[rho] * table.rows[lam][rho]
        value, rem = divmod(num, degree)
        if rem:
            raise CrossCheckError(
                f"central character of {lam!r} at {rho!r} is not integral"
            )
        out[rho] = value
    return out


@dataclass(frozen=True)
class BlockPartitionOracle:
    """Partition of Irr(S_n) into p-blocks by the central-character congruence."""

    n: int
    p: int
    blocks: tuple[frozenset, ...]


def central_character_blocks(n: int, p: int, bound: int | None = None) -> BlockPartitionOracle:
    """Brute-force p-blocks of S_n: group labels by omega mod p signatures."""
    if not is_prime(p):
        raise ValueError("p must be prime")
    table = build_table(n, bound=bound)
    order = enumerate_partitions(n)
    position = {lam: i for i, lam in enumerate(order)}
    by_signature: dict = {}
    for lam in table.classes:
        omega = central_character_values(table, lam)
        signature = tuple(omega[rho] % p for rho in table.classes)
        by_signature.setdefault(signature, []).append(lam)
    blocks = sorted(by_signature.values(), key=lambda b: min(position[x] for x in b))
    return BlockPartitionOracle(n=n, p=p, blocks=tuple(frozenset(b) for b in blocks))


def _is_p_regular(rho: Partition, p: int) -> bool:
    return all(part % p for part in rho)


def block_idempotent(table: SymCharacterTable, p: int, block) -> dict:
    """Coefficients of e_B on class sums: exact rationals, zero off p-regular classes."""
    order = factorial(table.n)
    coeffs = {}
    for rho in table.classes:
        if _is_p_regular(rho, p):
            num = sum(table.degree(lam) * table.rows[lam][rho] for lam in block)
            coeffs[rho] = Fraction(num, order)
        else:
            coeffs[rho] = Fraction(0)
    return coeffs


@lru_cache(maxsize=None)
def _structure_constants(n: int) -> dict:
    """Integer structure constants of the class algebra of S_n.

    a[(K, L, M)] is the coefficient of the class sum of M in the product of
    the class sums of K and L:  |K||L|/|G| sum_chi chi(K)chi(L)chi(M)/chi(1)
    (classes of S_n are self-inverse, so no inversion is needed on M).
    """
    table = build_table(n)
    order = factorial(n)
    constants = {}
    for rho_k in table.classes:
        for rho_l in table.classes:
            front = Fraction(table.class_sizes[rho_k] * table.class_sizes[rho_l], order)
            for rho_m in table.classes:
                total = sum(
                    Fraction(
                        table.rows[lam][rho_k]
                        * table.rows[lam][rho_l]
                        * table.rows[lam][rho_m],
                        table.degree(lam),
                    )
                    for lam in table.classes
                )
                value = front * total
                if value.denominator != 1 or value < 0:
                    raise CrossCheckError("class algebra structure constant not a nonnegative integer")
                constants[(rho_k, rho_l, rho_m)] = int(value)
    return constants


def class_algebra_product(table: SymCharacterTable, left: dict, right: dict) -> dict:
    """Product of two central elements given by class-sum coefficient vectors."""
    constants = _structure_constants(table.n)
    out = {rho: Fraction(0) for rho in table.classes}
    for rho_k, ck in left.items():
        if not ck:
            continue
        for rho_l, cl in right.items():
            if not cl:
                continue
            weight = ck * cl
            for rho_m in table.classes:
                a = constants[(rho_k, rho_l, rho_m)]
                if a:
                    out[rho_m] += weight * a
    return out


def block_idempotent_p_integral(n: int, p: int, block, bound: int | None = None) -> bool:
    """True iff e_B has p-integral coefficients and squares to itself exactly.

    The coefficient formula only sees p-regular classes; idempotency is
    checked by genuine multiplication in the exact rational class algebra.
    """
    limit = idempotent_bound() if bound is None else bound
    if n > limit:
        raise ResourceLimitError(f"idempotent check for n={n} exceeds bound {limit}")
    if not is_prime(p):
        raise ValueError("p must be prime")
    table = build_table(n)
    coeffs = block_idempotent(table, p, frozenset(block))
    p_integral = all(c.denominator % p for c in coeffs.values())
    square = class_algebra_product(table, coeffs, coeffs)
    return p_integral and square == coeffs
