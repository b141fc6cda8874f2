"""Elementary number theory helpers: primality, factorization, p-adic
valuations, Bernoulli numbers and the regular-prime test.

Everything here is exact integer arithmetic.  The regularity test works
modulo p^2, so it stays fast for primes up to about 10^4; the exact
Bernoulli recurrence is only meant for small indices and serves as an
independent cross-check of the modular method.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (fine for CLI-sized inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d <= isqrt(n):
        if n % d == 0:
            return False
        d += 2
    return True


def factorint(n: int) -> dict[int, int]:
    """Factor a positive integer into {prime: exponent} by trial division.

    >>> factorint(360)
    {2: 3, 3: 2, 5: 1}
    """
    if n <= 0:
        raise ValueError(f"factorint expects a positive integer, got {n}")
    result: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            n //= p
            result[p] = result.get(p, 0) + 1
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                n //= p
                result[p] = result.get(p, 0) + 1
        d += 6
    if n > 1:
        result[n] = result.get(n, 0) + 1
    return dict(sorted(result.items()))


def padic_valuation(n: int, p: int) -> int:
    """Largest e with p^e dividing n.  Requires n != 0."""
    if n == 0:
        raise ValueError("p-adic valuation of 0 is infinite")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def bernoulli_exact(n_max: int) -> list[Fraction]:
    """Bernoulli numbers B_0, ..., B_{n_max} (convention B_1 = -1/2).

    Straight recurrence over exact rationals; quadratic in n_max, so keep
    n_max modest (a few hundred).  Used as an oracle for the modular
    regularity test.
    """
    bern = [Fraction(1)]
    for m in range(1, n_max + 1):
        # B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        acc = Fraction(0)
        binom = 1  # C(m+1, 0)
        for j in range(m):
            acc += binom * bern[j]
            binom = binom * (m + 1 - j) // (j + 1)
        bern.append(-acc / (m + 1))
    return bern


def irregular_indices(p: int) -> list[int]:
    """Even indices k with 2 <= k <= p-3 such that p divides the numerator
    of B_k.  Empty exactly when p is regular.

    Works mod p^2 via power sums: for even 2 <= k <= p-3 the sum
    S_k(p) = sum_{a=1}^{p-1} a^k is divisible by p and S_k(p)/p = B_k mod p.
    Divisibility of the numerator by p is then a vanishing test mod p, which
    is legitimate because p never divides the denominator of B_k in this
    index range (the denominator is squarefree with prime factors q
    satisfying (q-1) | k, and (p-1) does not divide k here).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p >= 10**4:
        raise ValueError("regularity test supported for primes below 10^4")
    if p <= 5:
        # index range 2..p-3 is empty for p in {2, 3}; for p = 5 only k = 2
        # with B_2 = 1/6, numerator 1
        return []
    p2 = p * p
    n_sums = (p - 3) // 2  # k = 2, 4, ..., p-3
    sums = [0] * n_sums
    for a in range(1, p):
        a2 = a * a % p2
        pw = a2
        for i in range(n_sums):
            sums[i] += pw
            pw = pw * a2 % p2
    bad = []
    for i, s in enumerate(sums):
        s %= p2
        if s % p != 0:  # cannot happen for k <= p-3; guard anyway
            raise ArithmeticError("power sum not divisible by p")
        if (s // p) % p == 0:
            bad.append(2 * (i + 1))
    return bad


def is_regular_prime(p: int) -> bool:
    """True when p divides no numerator among B_2, ..., B_{p-3}.

    >>> is_regular_prime(5), is_regular_prime(37), is_regular_prime(691)
    (True, False, False)
    """
    return not irregular_indices(p)


def gcd_many(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            return 1
    return g
