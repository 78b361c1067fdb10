"""Prime sieves and the Moebius function."""

import numpy as np


def primes_up_to(n):
    """All primes <= n as an int64 array (empty for n < 2)."""
    n = int(n)
    if n < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(n + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, int(n ** 0.5) + 1):
        if mask[p]:
            mask[p * p:: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


def moebius_up_to(n):
    """mu(1..n) as an int8 array indexed so that out[k] = mu(k), out[0] = 0.

    Sieve over smallest prime factors: divide out each prime once, flip the
    sign, and zero the entries divisible by a square.
    """
    n = int(n)
    mu = np.ones(n + 1, dtype=np.int8)
    mu[0] = 0
    if n < 1:
        return mu[: n + 1]
    mask = np.ones(n + 1, dtype=bool)
    for p in range(2, n + 1):
        if mask[p]:
            if p * p <= n:
                mask[p * p:: p] = False
            mu[p::p] *= -1
            sq = p * p
            if sq <= n:
                mu[sq::sq] = 0
    return mu


def is_prime(p):
    p = int(p)
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True
