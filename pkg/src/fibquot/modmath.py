"""Exact modular and multiplicative primitives.

Everything downstream rests on this module: residues with an enforced
modulus, modular inverses, Jacobi symbols (including the two sign
conventions for negative odd arguments), segmented prime streams, and
Fibonacci pairs modulo large moduli.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

import numpy as np

from . import _kernels
from .errors import InvalidArgument, InvalidModulus, NotInvertible, RangeTooLarge

DEFAULT_PRIME_CEILING = 10_000_000
_SIEVE_SEGMENT = 1 << 20

# Deterministic Miller-Rabin witness set for n < 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class Convention(Enum):
    """Sign rule applied to (-1/j) for odd j, relevant only when j < 0.

    SIGNED evaluates (-1)**((j-1)/2) on the signed integer j; ABSOLUTE
    evaluates (-1)**((|j|-1)/2). The two agree for all positive odd j and
    disagree for every negative odd j.
    """

    SIGNED = "signed"
    ABSOLUTE = "absolute"


@dataclass(frozen=True)
class Residue:
    """An integer reduced into [0, modulus), tagged with its modulus.

    Mixing moduli in arithmetic is a programming error and raises; it is
    never silently coerced. Integer coefficients are allowed in products
    and are reduced into the residue's modulus.
    """

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise InvalidModulus(f"modulus must be at least 2, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(
                f"value {self.value} not reduced into [0, {self.modulus})"
            )

    @classmethod
    def reduce(cls, value: int, modulus: int) -> "Residue":
        """Build a Residue from any integer using the nonnegative remainder."""
        if modulus < 2:
            raise InvalidModulus(f"modulus must be at least 2, got {modulus}")
        return cls(value % modulus, modulus)

    def _same(self, other: "Residue") -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                f"modulus mismatch: {self.modulus} vs {other.modulus}"
            )

    def __add__(self, other: "Residue") -> "Residue":
        self._same(other)
        return Residue((self.value + other.value) % self.modulus, self.modulus)

    def __sub__(self, other: "Residue") -> "Residue":
        self._same(other)
        return Residue((self.value - other.value) % self.modulus, self.modulus)

    def __mul__(self, other) -> "Residue":
        if isinstance(other, int):
            return Residue((self.value * (other % self.modulus)) % self.modulus,
                           self.modulus)
        self._same(other)
        return Residue((self.value * other.value) % self.modulus, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "Residue":
        return Residue((-self.value) % self.modulus, self.modulus)

    def __int__(self) -> int:
        return self.value

    def inverse(self) -> "Residue":
        return mod_inverse(self.value, self.modulus)


def mod_inverse(a: int, m: int) -> Residue:
    """The residue r with a*r = 1 (mod m); NotInvertible when gcd(a, m) > 1."""
    if m < 2:
        raise InvalidModulus(f"modulus must be at least 2, got {m}")
    try:
        return Residue(pow(a % m, -1, m), m)
    except ValueError:
        raise NotInvertible(f"{a} has no inverse modulo {m}") from None


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1; 0 iff gcd(a mod n, n) > 1.

    The argument is reduced mod n first, so for negative a this computes
    ((a mod n)/n). For n = 5 (and any n = 1 mod 4) that equals the symbol
    of the signed argument, which is what the double-range sums need.
    """
    if n < 1 or n % 2 == 0:
        raise InvalidModulus(f"Jacobi symbol needs positive odd n, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def jacobi_neg1(j: int, convention: Convention) -> int:
    """(-1/j) for odd j != 0 under the given sign convention."""
    if j == 0 or j % 2 == 0:
        raise InvalidArgument(f"(-1/j) needs odd nonzero j, got {j}")
    jj = j if convention is Convention.SIGNED else abs(j)
    # (-1)**((jj-1)/2) = +1 exactly when jj = 1 (mod 4), also for negative jj.
    return 1 if jj % 4 == 1 else -1


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 2**64."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    s = ((d & -d).bit_length()) - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for q in range(2, math.isqrt(limit) + 1):
        if mask[q]:
            mask[q * q :: q] = False
    return np.flatnonzero(mask).astype(np.int64)


def primes_in(lo: int, hi: int, *,
              ceiling: int = DEFAULT_PRIME_CEILING) -> Iterator[int]:
    """Yield the primes in [lo, hi] in ascending order (segmented sieve)."""
    if lo < 2:
        raise ValueError(f"lower bound must be at least 2, got {lo}")
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    if hi > ceiling:
        raise RangeTooLarge(f"upper bound {hi} exceeds the ceiling {ceiling}")
    base = _simple_sieve(math.isqrt(hi))
    for seg_lo in range(lo, hi + 1, _SIEVE_SEGMENT):
        seg_hi = min(seg_lo + _SIEVE_SEGMENT - 1, hi)
        mask = np.ones(seg_hi - seg_lo + 1, dtype=bool)
        for q in base:
            q = int(q)
            start = max(q * q, ((seg_lo + q - 1) // q) * q)
            if start <= seg_hi:
                mask[start - seg_lo :: q] = False
        for idx in np.flatnonzero(mask):
            yield seg_lo + int(idx)


def fib_pair_mod(n: int, m: int, *, kernels=None) -> tuple[Residue, Residue]:
    """(F_n mod m, F_{n+1} mod m) with F_0 = 0, F_1 = 1, via fast doubling.

    Moduli up to 2**62 run on the compiled kernel when available; larger
    moduli (or enormous n) silently take the pure bignum path.
    """
    if m < 2:
        raise InvalidModulus(f"modulus must be at least 2, got {m}")
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    kern = kernels if kernels is not None else _kernels.DEFAULT
    if kern is not _kernels._pure and (
        m > _kernels.CORE_MAX_MODULUS or n >= 1 << 64
    ):
        kern = _kernels._pure
    a, b = kern.fib_pair(n, m)
    return Residue(int(a), m), Residue(int(b), m)


@dataclass(frozen=True)
class PrimeContext:
    """A prime p > 5 with the precomputed symbols the congruences need.

    sym5 is (5/p): +1 for p = +-1 (mod 5), -1 for p = +-2 (mod 5), and it
    selects which Fibonacci neighbour F_{p-sym5} the quotient divides.
    p_prime20 is the inverse of p modulo 20; the classes 1, 9, 11, 19 are
    their own inverses and (3, 7), (13, 17) swap.
    """

    p: int
    sym5: int
    sym_neg1: int
    p_mod20: int
    p_prime20: int

    @classmethod
    def for_prime(cls, p: int) -> "PrimeContext":
        if p <= 5 or not is_prime(p):
            raise ValueError(f"PrimeContext requires a prime p > 5, got {p}")
        return cls(
            p=p,
            sym5=jacobi(5, p),
            sym_neg1=1 if p % 4 == 1 else -1,
            p_mod20=p % 20,
            p_prime20=mod_inverse(p, 20).value,
        )
