"""Slow, obviously-correct reference computations.

Nothing here imports the package: each oracle counts objects or applies a
textbook recurrence so it can be trusted independently of the code under test.
"""

import itertools
from fractions import Fraction


def pascal_rows(n_max):
    rows = [[1]]
    for _ in range(n_max):
        prev = rows[-1]
        rows.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return rows


def product(it):
    out = 1
    for v in it:
        out *= v
    return out


def motzkin_paths(n):
    """Count up/flat/down step sequences of length n that stay >= 0 and end at 0."""
    # dynamic programming over heights
    heights = {0: 1}
    for _ in range(n):
        nxt = {}
        for h, c in heights.items():
            for step in (-1, 0, 1):
                if h + step >= 0:
                    nxt[h + step] = nxt.get(h + step, 0) + c
        heights = nxt
    return heights.get(0, 0)


def involutions(n):
    """Brute-force count of permutations p with p(p(i)) = i."""
    return sum(
        all(p[p[i]] == i for i in range(n)) for p in itertools.permutations(range(n))
    )


def cycle_restricted_perms(n, m):
    """Brute-force count of permutations whose cycles all have length 1 or m."""
    total = 0
    for p in itertools.permutations(range(n)):
        seen, ok = set(), True
        for start in range(n):
            if start in seen:
                continue
            length, j = 0, start
            while j not in seen:
                seen.add(j)
                j = p[j]
                length += 1
            if length not in (1, m):
                ok = False
                break
        total += ok
    return total


def poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def exp_by_power_sum(a, order):
    """exp(a) truncated, as sum_k a^k / k! with plain list polynomials."""
    result = [Fraction(0)] * (order + 1)
    power = [Fraction(1)]
    fact = 1
    for k in range(order + 1):
        if k:
            power = poly_mul(power, a)[: order + 1]
            fact *= k
        for i, c in enumerate(power[: order + 1]):
            result[i] += c / fact
    return result


def hermite_by_recurrence(n, x, y):
    """H_n(x, y) from H_{k+1} = x H_k + 2 k y H_{k-1}."""
    h_prev, h = Fraction(0), Fraction(1)
    for k in range(n):
        h_prev, h = h, x * h + 2 * k * y * h_prev
    return h


def trinomial_coeff(n, k):
    """Coefficient of x^k in (1 + x + x^2)^n by direct expansion."""
    row = [1]
    for _ in range(n):
        row = [
            (row[i] if i < len(row) else 0)
            + (row[i - 1] if 0 <= i - 1 < len(row) else 0)
            + (row[i - 2] if 0 <= i - 2 < len(row) else 0)
            for i in range(len(row) + 2)
        ]
    return row[k] if 0 <= k < len(row) else 0
