"""Pure-Python kernels, contract-identical to the compiled core.

Python integers are arbitrary precision, so these accept any modulus;
they are the fallback when the Cython extension is not built and the
reference side of the backend benchmark.
"""

import numpy as np

BACKEND = "pure"

# Same memory-driven cap as the compiled core: the table is O(p) words.
MAX_TABLE_PRIME = 1 << 31


def fib_pair(n, m):
    """Return (F_n mod m, F_{n+1} mod m) by fast doubling, F_0 = 0, F_1 = 1."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if n < 0:
        raise ValueError("index must be nonnegative")
    a, b = 0, 1 % m
    for i in range(n.bit_length() - 1, -1, -1):
        c = a * (2 * b - a) % m
        d = (a * a + b * b) % m
        if (n >> i) & 1:
            a, b = d, (c + d) % m
        else:
            a, b = c, d
    return a, b


def inverse_table(p):
    """uint64 array t of length p with t[j] = j^{-1} mod p (t[0] = 0); p prime."""
    if p < 2 or p > MAX_TABLE_PRIME:
        raise ValueError("prime out of range for inverse table")
    table = [0] * p
    if p > 1:
        table[1] = 1
    # 1/j = -(p//j) * (1/(p mod j)), with p mod j < j, so one pass suffices.
    for j in range(2, p):
        table[j] = p - (p // j) * table[p % j] % p
    return np.array(table, dtype=np.uint64)


def range_inverse_sum(lo, hi, p):
    """Sum of j^{-1} mod p over integers lo..hi clamped to 1..p-1; empty sum is 0."""
    if p < 2:
        raise ValueError("modulus must be at least 2")
    lo = max(lo, 1)
    hi = min(hi, p - 1)
    if lo > hi:
        return 0
    prods = []
    acc = 1
    for j in range(lo, hi + 1):
        acc = acc * j % p
        prods.append(acc)
    inv_all = pow(acc, p - 2, p)
    total = 0
    for i in range(len(prods) - 1, 0, -1):
        total = (total + prods[i - 1] * inv_all) % p
        inv_all = inv_all * (lo + i) % p
    return (total + inv_all) % p
