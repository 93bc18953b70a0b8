# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the per-prime hot loops.

All intermediate products are carried in 128-bit registers, so moduli up
to 2**62 (prime squares for p < 2**31) stay exact. The Python layer in
fibquot._kernels selects this module when built and the pure fallback
otherwise.
"""

import numpy as np

ctypedef unsigned long long u64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

BACKEND = "cython"

MAX_MODULUS = 1 << 62
MAX_TABLE_PRIME = 1 << 31


cdef inline u64 mulmod(u64 a, u64 b, u64 m) noexcept nogil:
    return <u64>((<u128>a * <u128>b) % <u128>m)


cdef u64 powmod(u64 base, u64 exp, u64 m) noexcept nogil:
    cdef u64 r = 1 % m
    base = base % m
    while exp:
        if exp & 1:
            r = mulmod(r, base, m)
        base = mulmod(base, base, m)
        exp >>= 1
    return r


def fib_pair(unsigned long long n, unsigned long long m):
    """Return (F_n mod m, F_{n+1} mod m) by fast doubling; requires m <= 2**62."""
    if m < 2 or m > MAX_MODULUS:
        raise ValueError("modulus out of range for compiled kernel")
    cdef u64 a = 0, b = 1 % m, c, d, t
    cdef int i = 63
    with nogil:
        while i >= 0 and not ((n >> i) & 1):
            i -= 1
        while i >= 0:
            # 2b cannot overflow: b < m <= 2**62
            t = ((b << 1) % m + m - a) % m
            c = mulmod(a, t, m)
            d = (mulmod(a, a, m) + mulmod(b, b, m)) % m
            if (n >> i) & 1:
                a = d
                b = (c + d) % m
            else:
                a = c
                b = d
            i -= 1
    return a, b


def inverse_table(unsigned long long p):
    """uint64 array t of length p with t[j] = j^{-1} mod p (t[0] = 0); p prime.

    One forward pass of cumulative products, a single exponentiation, and
    one backward unwind: 3p multiplications for p-1 inverses.
    """
    if p < 2 or p > MAX_TABLE_PRIME:
        raise ValueError("prime out of range for inverse table")
    out_arr = np.empty(p, dtype=np.uint64)
    cdef u64[::1] out = out_arr
    cdef u64 acc = 1, inv_all, tmp
    cdef u64 j
    with nogil:
        out[0] = 1  # 0! sentinel for the backward pass, cleared at the end
        for j in range(1, p):
            acc = mulmod(acc, j, p)
            out[j] = acc
        inv_all = powmod(acc, p - 2, p)
        j = p - 1
        while j >= 1:
            tmp = mulmod(out[j - 1], inv_all, p)
            inv_all = mulmod(inv_all, j, p)
            out[j] = tmp
            j -= 1
        out[0] = 0
    return out_arr


def range_inverse_sum(unsigned long long lo, unsigned long long hi,
                      unsigned long long p):
    """Sum of j^{-1} mod p over integers lo..hi clamped to 1..p-1; empty sum is 0."""
    if p < 2 or p > MAX_MODULUS:
        raise ValueError("modulus out of range for compiled kernel")
    if lo < 1:
        lo = 1
    if hi > p - 1:
        hi = p - 1
    if lo > hi:
        return 0
    cdef u64 length = hi - lo + 1
    buf_arr = np.empty(length, dtype=np.uint64)
    cdef u64[::1] buf = buf_arr
    cdef u64 acc = 1, inv_all, total = 0
    cdef u64 i
    with nogil:
        for i in range(length):
            acc = mulmod(acc, lo + i, p)
            buf[i] = acc
        inv_all = powmod(acc, p - 2, p)
        i = length - 1
        while i >= 1:
            total = (total + mulmod(buf[i - 1], inv_all, p)) % p
            inv_all = mulmod(inv_all, lo + i, p)
            i -= 1
        total = (total + inv_all) % p
    return total
