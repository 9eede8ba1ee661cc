#!/usr/bin/env python3
"""Rebuild the bundled OEIS b-files from each sequence's OEIS definition.

Used when oeis.org is unreachable.  Each generator follows the sequence's
own definition and deliberately avoids the library code it is meant to check:
no hybrid or Hermite polynomials, no umbral algebra, no power series.
Refresh from the live site with ``umbral-motzkin oeis fetch A... --online``
when network access is available.

    python scripts/build_fixtures.py [--terms 30] [--out src/umbral_motzkin/data/bfiles]
"""

import argparse
import itertools
import math
from pathlib import Path


def motzkin_recurrence(count):
    # A001006: (n+2) a(n) = (2n+1) a(n-1) + 3(n-1) a(n-2)
    a = [1, 1]
    for n in range(2, count):
        num = (2 * n + 1) * a[n - 1] + 3 * (n - 1) * a[n - 2]
        assert num % (n + 2) == 0
        a.append(num // (n + 2))
    return a[:count]


def trinomial_row(n):
    row = [1]
    for _ in range(n):
        nxt = [0] * (len(row) + 2)
        for i, c in enumerate(row):
            nxt[i] += c
            nxt[i + 1] += c
            nxt[i + 2] += c
        row = nxt
    return row


def trinomial_column(count, shift):
    # coefficient shift places right of centre in (1+x+x^2)^(n+shift)
    out = []
    for n in range(count):
        k = n + shift
        out.append(trinomial_row(k)[k + shift])
    return out


def restricted_cycle_perms(count, m):
    # permutations whose cycles all have length 1 or m, by the cycle holding element n
    a = []
    for n in range(count):
        v = a[n - 1] if n >= 1 else 1
        if n >= m:
            v += math.perm(n - 1, m - 1) * a[n - m]
        a.append(v)
    return a


def brute_force_cycle_perms(n, m):
    count = 0
    for p in itertools.permutations(range(n)):
        seen = set()
        ok = True
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
        count += ok
    return count


SEQUENCES = {
    "A001006": ("Motzkin numbers", 0, lambda c: motzkin_recurrence(c)),
    "A000217": ("Triangular numbers n(n+1)/2", 0, lambda c: [n * (n + 1) // 2 for n in range(c)]),
    "A034827": ("2*binomial(n,4)", 4, lambda c: [2 * math.comb(n, 4) for n in range(4, 4 + c)]),
    "A000910": ("5*binomial(n,6)", 6, lambda c: [5 * math.comb(n, 6) for n in range(6, 6 + c)]),
    "A014531": (
        "3rd column from the centre of the trinomial triangle",
        0,
        lambda c: trinomial_column(c, 2),
    ),
    "A014532": (
        "4th column from the centre of the trinomial triangle",
        0,
        lambda c: trinomial_column(c, 3),
    ),
    "A050534": (
        "Tritriangular numbers binomial(binomial(n,2),2)",
        0,
        lambda c: [math.comb(math.comb(n, 2), 2) for n in range(c)],
    ),
    "A001470": ("Permutations of order dividing 3", 0, lambda c: restricted_cycle_perms(c, 3)),
    "A118934": ("E.g.f. exp(x + x^4/4)", 0, lambda c: restricted_cycle_perms(c, 4)),
    "A052501": ("Permutations of order dividing 5", 0, lambda c: restricted_cycle_perms(c, 5)),
}


def self_check():
    for m in (3, 4, 5):
        expect = restricted_cycle_perms(9, m)
        for n in range(9):
            assert brute_force_cycle_perms(n, m) == expect[n], (m, n)
    # small Motzkin values by counting paths of up/down/flat steps
    for n in range(10):
        paths = 0
        for steps in itertools.product((-1, 0, 1), repeat=n):
            h = 0
            for st in steps:
                h += st
                if h < 0:
                    break
            else:
                paths += h == 0
        assert paths == motzkin_recurrence(10)[n]


def render(anum, title, offset, terms):
    lines = [
        f"# {anum} {title}",
        "# Rebuilt offline from the OEIS definition by scripts/build_fixtures.py",
    ]
    lines += [f"{offset + i} {v}" for i, v in enumerate(terms)]
    return "\n".join(lines) + "\n"


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--terms", type=int, default=30)
    parser.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parent.parent / "src" / "umbral_motzkin" / "data" / "bfiles",
    )
    args = parser.parse_args()
    self_check()
    args.out.mkdir(parents=True, exist_ok=True)
    for anum, (title, offset, gen) in SEQUENCES.items():
        path = args.out / f"b{anum[1:]}.txt"
        path.write_text(render(anum, title, offset, gen(args.terms)))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
