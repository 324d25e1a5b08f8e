"""Shared independent oracles for the test suite.

Everything here is deliberately naive (exhaustive search, quadratic
loops, per-term summation) and stays independent of the library code
paths it checks.
"""

import cmath
import math

import numpy as np


def naive_mod_inv(a, n):
    """Exhaustive search for the inverse of a mod n; None if absent."""
    for x in range(1, n):
        if (a * x) % n == 1:
            return x
    return None


def naive_coverage(n, chords, d_indices, r):
    """Set of vertices within r (+S)-steps of d_indices, by BFS layers."""
    covered = set(int(v) for v in d_indices)
    frontier = set(covered)
    for _ in range(r):
        nxt = set()
        for v in frontier | covered:
            for s in chords:
                nxt.add((v + s) % n)
        covered |= nxt
        frontier = nxt
    return covered


def naive_is_dominating(n, chords, d_indices, r=1):
    """Per-vertex scan: does any d in D reach v in at most r steps?"""
    reach = naive_coverage(n, chords, d_indices, r)
    return all(v in reach for v in range(n))


def naive_sumset(n, s_values, w_values):
    """{(s + w) mod n} by the quadratic double loop."""
    return {(s + w) % n for s in s_values for w in w_values}


def naive_exp_sum(n, w_values, a):
    """Term-by-term character sum with cmath, no vectorization."""
    return sum(cmath.exp(2j * math.pi * ((a * w) % n) / n) for w in w_values)


def naive_w_set(n, L, primes):
    """Direct enumeration of {k * inv(ell) mod n} with exhaustive inverses."""
    out = set()
    for ell in primes:
        inv = naive_mod_inv(ell % n, n)
        assert inv is not None
        for k in range(1, L + 1):
            out.add((k * inv) % n)
    return out


def random_subset(rng, n, k):
    """k distinct residues from [1, n-1]."""
    vals = rng.choice(n - 1, size=k, replace=False) + 1
    return tuple(sorted(int(v) for v in vals))


def make_rng(seed):
    return np.random.default_rng(seed)
