"""Every formulation of the Fibonacci-quotient congruence, plus calibration.

The chain runs from the signed double-range reciprocal sum (andrews_raw),
through the explicit mod-20 rewriting over 1..p-1 (andrews_rewritten) and
its six-block condensate (andrews_simplified), to the three-block mod-10
form (ten_form) and finally the two-term forms (2/5)*s(1,5) and the
harmonic difference (williams, williams_harmonic). Each evaluator is
independent; verify_chain compares them all against the true quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NoConsistentConvention
from .lerchsums import SumSpec, harmonic_mod, lemma1_combination, s_sum
from .modmath import (
    Convention,
    PrimeContext,
    Residue,
    jacobi,
    jacobi_neg1,
    mod_inverse,
    primes_in,
)
from .quotients import fibonacci_quotient

CALIBRATION_MIN_BUDGET = 8

# Residue classes mod 20 a calibration set must cover: the sign pattern of
# the rewritten form splits into these eight cases.
CALIBRATION_CLASSES = frozenset({1, 3, 7, 9, 11, 13, 17, 19})

# Weights of 1/j per residue class of j mod 20 in the rewritten form; the
# branch is picked by (5/p).
_REWRITTEN_WEIGHTS = {
    1: {15: 2, 5: -2, 13: 1, 17: 1, 3: -1, 7: -1},
    -1: {15: 2, 5: -2, 1: 1, 9: 1, 11: -1, 19: -1},
}

_SIMPLIFIED_COEFFS = ((2, 1), (3, 1), (4, 2), (5, 2), (6, 1), (7, 1))
_TEN_FORM_COEFFS = ((1, 1), (2, 2), (3, 1))


def andrews_raw(ctx: PrimeContext,
                convention: Convention = Convention.SIGNED) -> Residue:
    """The signed double-range reciprocal sum for the quotient.

    Evaluates 2*(-1/p) * sum of ((j+1)/5)*(-1/j)/(p-j) over -p < j < p with
    j in two odd residue classes mod 10: classes {5, 7} (comparing against
    F_{p-1}/p) when (5/p) = +1, classes {1, 5} (against F_{p+1}/p) when
    (5/p) = -1. Negative j is classified by its nonnegative remainder, and
    (-1/j) follows the given convention; 1/(p-j) is inverted directly
    rather than folded to -1/j, since that folding is exactly what the
    rewritten form is later checked against.
    """
    p = ctx.p
    classes = (5, 7) if ctx.sym5 == 1 else (1, 5)
    total = 0
    for j in range(-p + 1, p):
        if j % 10 not in classes:
            continue
        sym = jacobi(j + 1, 5)
        if sym == 0:
            continue
        sym *= jacobi_neg1(j, convention)
        total += sym * pow((p - j) % p, -1, p)
    return Residue.reduce(2 * ctx.sym_neg1 * total, p)


def andrews_rewritten(ctx: PrimeContext) -> Residue:
    """The same congruence with all summation confined to 1 <= j <= p-1.

    2*(-1/p) * { 2*sum_{j=15(20)} 1/j - 2*sum_{j=5(20)} 1/j
                 + sum_{j=13,17(20)} 1/j - sum_{j=3,7(20)} 1/j }   [(5/p)=+1]
    with the last four classes replaced by +{1,9} and -{11,19} when
    (5/p) = -1.
    """
    p = ctx.p
    weights = _REWRITTEN_WEIGHTS[ctx.sym5]
    total = 0
    for j in range(1, p):
        w = weights.get(j % 20)
        if w:
            total += w * pow(j, -1, p)
    return Residue.reduce(2 * ctx.sym_neg1 * total, p)


def andrews_simplified(ctx: PrimeContext) -> Residue:
    """(1/10) * { s(2,20) + s(3,20) + 2s(4,20) + 2s(5,20) + s(6,20) + s(7,20) }."""
    p = ctx.p
    total = Residue(0, p)
    for k, coeff in _SIMPLIFIED_COEFFS:
        total = total + coeff * s_sum(SumSpec.block(k, 20), p)
    return mod_inverse(10, p) * total


def ten_form(ctx: PrimeContext) -> Residue:
    """(1/10) * { s(1,10) + 2*s(2,10) + s(3,10) }."""
    p = ctx.p
    total = Residue(0, p)
    for k, coeff in _TEN_FORM_COEFFS:
        total = total + coeff * s_sum(SumSpec.block(k, 10), p)
    return mod_inverse(10, p) * total


def williams(ctx: PrimeContext) -> Residue:
    """(2/5) * s(1, 5): the two-term-per-five-block form of the quotient."""
    p = ctx.p
    return 2 * mod_inverse(5, p) * s_sum(SumSpec.block(1, 5), p)


def williams_harmonic(ctx: PrimeContext) -> Residue:
    """(2/5) * { H_{floor(2p/5)} - H_{floor(p/5)} }, same index set as williams."""
    p = ctx.p
    diff = harmonic_mod(2 * p // 5, p) - harmonic_mod(p // 5, p)
    return 2 * mod_inverse(5, p) * diff


@dataclass(frozen=True)
class ChainReport:
    """All formulations of the quotient at one prime, compared to the real thing."""

    p: int
    quotient: Residue
    formulations: tuple[tuple[str, Residue], ...]
    all_agree: bool
    convention: Convention


def verify_chain(ctx: PrimeContext,
                 convention: Convention = Convention.SIGNED) -> ChainReport:
    """Evaluate the quotient and every formulation; report whether all agree.

    The list also materializes the final reduction step: ten_form plus one
    tenth of the (identically zero) lemma-1 combination, which must land
    on the williams value.
    """
    p = ctx.p
    quotient = fibonacci_quotient(ctx)
    step = ten_form(ctx) + mod_inverse(10, p) * lemma1_combination(p)
    formulations = (
        ("andrews_raw", andrews_raw(ctx, convention)),
        ("andrews_rewritten", andrews_rewritten(ctx)),
        ("andrews_simplified", andrews_simplified(ctx)),
        ("ten_form", ten_form(ctx)),
        ("williams", williams(ctx)),
        ("williams_harmonic", williams_harmonic(ctx)),
        ("ten_form_plus_lemma1", step),
    )
    return ChainReport(
        p=p,
        quotient=quotient,
        formulations=formulations,
        all_agree=all(value == quotient for _, value in formulations),
        convention=convention,
    )


def calibration_primes(prime_budget: int = 16) -> list[int]:
    """Ascending primes > 5 used for calibration.

    Takes primes until at least prime_budget are selected and the set
    covers all eight residue classes mod 20; once the budget is met, only
    primes from still-missing classes are added.
    """
    if prime_budget < CALIBRATION_MIN_BUDGET:
        raise ValueError(
            f"budget must cover the eight classes mod 20: need at least "
            f"{CALIBRATION_MIN_BUDGET}, got {prime_budget}"
        )
    chosen: list[int] = []
    covered: set[int] = set()
    for p in primes_in(7, 10_000):
        if len(chosen) >= prime_budget and CALIBRATION_CLASSES <= covered:
            break
        if len(chosen) < prime_budget or (p % 20) not in covered:
            chosen.append(p)
            covered.add(p % 20)
    return chosen


def calibrate_convention(prime_budget: int = 16) -> Convention:
    """Pin the (-1/j) sign convention for negative j empirically.

    andrews_raw is evaluated under both conventions against the directly
    computed quotient over calibration_primes(prime_budget). The surviving
    convention is returned; SIGNED wins ties. If neither survives, the
    implementation (not the mathematics) is broken and the build must
    stop: NoConsistentConvention is raised rather than guessing.
    """
    alive = {Convention.SIGNED: True, Convention.ABSOLUTE: True}
    for p in calibration_primes(prime_budget):
        ctx = PrimeContext.for_prime(p)
        quotient = fibonacci_quotient(ctx)
        for conv in Convention:
            if alive[conv] and andrews_raw(ctx, conv) != quotient:
                alive[conv] = False
        if not any(alive.values()):
            break
    for conv in (Convention.SIGNED, Convention.ABSOLUTE):
        if alive[conv]:
            return conv
    raise NoConsistentConvention(
        "neither sign convention reproduces the quotient on the calibration set"
    )


@lru_cache(maxsize=None)
def calibrated_convention() -> Convention:
    """Process-wide cached result of calibrate_convention(16)."""
    return calibrate_convention()
