"""Fibonacci and Fermat quotients, computed from their definitions.

These are the oracle side of every congruence check: the quotient is
obtained by exact division after a mod-p^2 computation, never from one of
the reciprocal-sum forms it is later compared against.
"""

from __future__ import annotations

from .errors import BaseDivisibleByP, DivisibilityViolation
from .modmath import PrimeContext, Residue, fib_pair_mod, is_prime


def fibonacci_quotient(ctx: PrimeContext, *, kernels=None) -> Residue:
    """F_{p-(5/p)}/p reduced mod p.

    The Fibonacci number is taken mod p^2 so the integer quotient survives
    reduction; divisibility by p is asserted, not assumed.
    """
    p = ctx.p
    f, _ = fib_pair_mod(p - ctx.sym5, p * p, kernels=kernels)
    if f.value % p:
        raise DivisibilityViolation(
            f"p={p} does not divide F_{p - ctx.sym5} mod p^2; arithmetic bug"
        )
    return Residue((f.value // p) % p, p)


def fermat_quotient(p: int, a: int) -> Residue:
    """(a^(p-1) - 1)/p mod p for prime p not dividing a."""
    if p < 2 or not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if a % p == 0:
        raise BaseDivisibleByP(f"base {a} is divisible by p={p}")
    x = pow(a, p - 1, p * p)
    if (x - 1) % p:
        raise DivisibilityViolation(
            f"a^(p-1) != 1 mod p for p={p}, a={a}; arithmetic bug"
        )
    return Residue(((x - 1) // p) % p, p)
