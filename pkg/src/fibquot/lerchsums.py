"""Block and class sums of modular reciprocals, and the identities among them.

s(k, N) sums 1/j mod p over the k-th of N consecutive blocks partitioning
1..p (skipping j = p, which can only occur in the last block). K(r, N)
sums 1/j over 1 <= j <= p-1 with j = r*p (mod N). These are the reference
implementations: each sum is evaluated directly from its definition so
the fast scan engine has an independent oracle to be tested against.

Empty sums evaluate to 0, which keeps every identity testable at small
primes where some blocks contain no integers at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import IndexOutOfRange
from .modmath import Residue, mod_inverse
from .quotients import fermat_quotient


class SumFlavor(Enum):
    S_BLOCK = "s"
    K_CLASS = "K"


@dataclass(frozen=True)
class SumSpec:
    """Index pair for a block sum s(k, N) or a reciprocal-class sum K(r, N).

    The index field holds k for S_BLOCK (0 <= k <= N-1) and r for K_CLASS
    (1 <= r <= N-1; the class of multiples of N is not a K index).
    """

    index: int
    N: int
    flavor: SumFlavor = SumFlavor.S_BLOCK

    def __post_init__(self):
        if self.N < 2:
            raise ValueError(f"block count must be at least 2, got {self.N}")
        if self.flavor is SumFlavor.S_BLOCK:
            if not 0 <= self.index <= self.N - 1:
                raise ValueError(
                    f"block index {self.index} outside 0..{self.N - 1}"
                )
        else:
            if not 1 <= self.index <= self.N - 1:
                raise ValueError(
                    f"class index {self.index} outside 1..{self.N - 1}"
                )

    @classmethod
    def block(cls, k: int, N: int) -> "SumSpec":
        return cls(k, N, SumFlavor.S_BLOCK)

    @classmethod
    def reciprocal_class(cls, r: int, N: int) -> "SumSpec":
        return cls(r, N, SumFlavor.K_CLASS)


@dataclass(frozen=True)
class CheckResult:
    """One verified identity at one prime."""

    p: int
    check: str
    lhs: Residue
    rhs: Residue
    passed: bool

    @classmethod
    def compare(cls, p: int, check: str, lhs: Residue, rhs: Residue) -> "CheckResult":
        return cls(p, check, lhs, rhs, lhs == rhs)


def block_bounds(k: int, N: int, p: int) -> tuple[int, int]:
    """Bounds (lo, hi] of the integer range summed by s(k, N) at p."""
    return (k * p) // N, ((k + 1) * p) // N


def s_sum(spec: SumSpec, p: int) -> Residue:
    """s(k, N) mod p: sum of 1/j for floor(kp/N) < j <= floor((k+1)p/N), j != p."""
    if spec.flavor is not SumFlavor.S_BLOCK:
        raise ValueError("s_sum takes an S_BLOCK spec")
    lo, hi = block_bounds(spec.index, spec.N, p)
    total = 0
    for j in range(lo + 1, hi + 1):
        if j == p:
            continue
        total += pow(j, -1, p)
    return Residue(total % p, p)


def k_sum(spec: SumSpec, p: int) -> Residue:
    """K(r, N) mod p: sum of 1/j over 1 <= j <= p-1 with j = r*p (mod N).

    Deliberately a transparent O(p) scan of the whole range; the scan
    engine recovers speed by bucketing all classes in one pass instead.
    """
    if spec.flavor is not SumFlavor.K_CLASS:
        raise ValueError("k_sum takes a K_CLASS spec")
    target = (spec.index * p) % spec.N
    total = 0
    for j in range(1, p):
        if j % spec.N == target:
            total += pow(j, -1, p)
    return Residue(total % p, p)


def harmonic_mod(n: int, p: int) -> Residue:
    """H_n mod p = sum of 1/j for 1 <= j <= n; requires n < p."""
    if n < 0:
        raise ValueError(f"harmonic index must be nonnegative, got {n}")
    if n >= p:
        raise IndexOutOfRange(f"harmonic index {n} not below p={p}")
    total = 0
    for j in range(1, n + 1):
        total += pow(j, -1, p)
    return Residue(total % p, p)


def _s(k: int, N: int, p: int) -> Residue:
    return s_sum(SumSpec.block(k, N), p)


def check_reflection(k: int, N: int, p: int) -> CheckResult:
    """s(k, N) + s(N-1-k, N) = 0 (mod p), from pairing j with p-j."""
    lhs = _s(k, N, p) + _s(N - 1 - k, N, p)
    return CheckResult.compare(p, f"reflection.N{N}.k{k}", lhs, Residue(0, p))


def lemma1_combination(p: int) -> Residue:
    """-s(1,10) + 2*s(2,10) + 3*s(3,10) mod p (identically 0 for p > 5)."""
    return -_s(1, 10, p) + 2 * _s(2, 10, p) + 3 * _s(3, 10, p)


def check_lemma1(p: int) -> CheckResult:
    return CheckResult.compare(p, "lemma1", lemma1_combination(p), Residue(0, p))


def check_skula(p: int) -> tuple[CheckResult, CheckResult]:
    """The two five-block relations whose difference gives lemma 1.

    First:  2*s(0,10) + 3*s(1,10) + 2*s(2,10) + 3*s(3,10) + 2*s(4,10) = 0.
    Second: s(0,10) + 2*s(1,10) + s(4,10) = 0.
    """
    s0, s1, s2, s3, s4 = (_s(k, 10, p) for k in range(5))
    first = 2 * s0 + 3 * s1 + 2 * s2 + 3 * s3 + 2 * s4
    second = s0 + 2 * s1 + s4
    zero = Residue(0, p)
    return (
        CheckResult.compare(p, "skula_a", first, zero),
        CheckResult.compare(p, "skula_b", second, zero),
    )


def check_lemma2(r: int, N: int, p: int) -> CheckResult:
    """K(r, N) = (1/N) * s(N-r, N) (mod p), both sides evaluated independently."""
    lhs = k_sum(SumSpec.reciprocal_class(r, N), p)
    rhs = mod_inverse(N, p) * _s(N - r, N, p)
    return CheckResult.compare(p, f"lemma2.N{N}.r{r}", lhs, rhs)


def check_lerch_sylvester(p: int) -> CheckResult:
    """2*s(0,5) + s(1,5) + (5/2)*q_p(5) = 0 (mod p)."""
    lhs = (
        2 * _s(0, 5, p)
        + _s(1, 5, p)
        + Residue.reduce(5, p) * mod_inverse(2, p) * fermat_quotient(p, 5)
    )
    return CheckResult.compare(p, "lerch_sylvester", lhs, Residue(0, p))


def condensation_ranges_match(k: int, N: int, p: int) -> bool:
    """Whether the index ranges of s(k,N) and s(k+1,N) concatenate to s(k/2, N/2)."""
    lo1, hi1 = block_bounds(k, N, p)
    lo2, hi2 = block_bounds(k + 1, N, p)
    lo_half, hi_half = block_bounds(k // 2, N // 2, p)
    return lo1 == lo_half and hi2 == hi_half and hi1 == lo2


def check_condensation(k: int, N: int, p: int) -> CheckResult:
    """s(k, N) + s(k+1, N) = s(k/2, N/2) for even k and N.

    The residue equality is asserted together with the stronger structural
    fact that the two underlying integer ranges concatenate exactly.
    """
    if k % 2 or N % 2:
        raise ValueError(f"condensation needs even k and N, got k={k}, N={N}")
    if k + 1 > N - 1:
        raise ValueError(f"block k+1={k + 1} out of range for N={N}")
    lhs = _s(k, N, p) + _s(k + 1, N, p)
    rhs = _s(k // 2, N // 2, p)
    passed = (lhs == rhs) and condensation_ranges_match(k, N, p)
    return CheckResult(p, f"condensation.N{N}.k{k}", lhs, rhs, passed)
