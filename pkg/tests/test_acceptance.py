"""Exit criteria for the package, one check per criterion.

Every comparison is exact (tolerance zero).  Run with ``pytest -s`` to see
the per-criterion PASS/FAIL lines, or directly with ``python tests/test_acceptance.py``.
"""

import contextlib
import io
import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from umbral_motzkin.cli import run
from umbral_motzkin.hermite import verify_hermite_identity
from umbral_motzkin.motzkin import (
    hybrid_poly,
    motzkin,
    motzkin_egf_series,
    tilde_motzkin,
    verify_motzkin_identity,
)
from umbral_motzkin.oeis import ALIGNMENTS, check_alignment
from umbral_motzkin.powerseries import cq_series, egf_coeff
from umbral_motzkin.render import parse_triangle_csv
from umbral_motzkin.telephone import gen_telephone, telephone, verify_telephone_identity
from umbral_motzkin.umbral import (
    UmbralPoly,
    c_power,
    umbral_compose,
    umbral_eval,
    umbral_exp_partial,
    umbral_hermite,
)

MOTZKIN_GRID = (
    ((1,), 1),
    ((1, 0), 1),
    ((1, 0, 1), 2),
    ((1, 0, 3, 0), 4),
    ((1, 0, 6, 0, 2), 9),
    ((1, 0, 10, 0, 10, 0), 21),
    ((1, 0, 15, 0, 30, 0, 5), 51),
    ((1, 0, 21, 0, 70, 0, 35, 0), 127),
)
TELEPHONE_GRID = (
    ((1,), 1),
    ((1, 0), 1),
    ((1, 0, 1), 2),
    ((1, 0, 3, 0), 4),
    ((1, 0, 6, 0, 3), 10),
    ((1, 0, 10, 0, 15, 0), 26),
    ((1, 0, 15, 0, 45, 0, 15), 76),
    ((1, 0, 21, 0, 105, 0, 105, 0), 232),
)
T3_PREFIX = (1, 1, 1, 3, 9, 21, 81, 351, 1233)
T4_PREFIX = (1, 1, 1, 1, 7, 31, 91, 211, 1681, 12097)


def _cli(*argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = run(list(argv))
    return code, out.getvalue()


def _parse_table(text):
    rows = []
    for line in text.splitlines()[2:]:
        _, cells, total = line.split("|")
        rows.append((tuple(int(c) for c in cells.split()), int(total)))
    return tuple(rows)


def _check_triangle(family, expected):
    code_t, table = _cli("triangle", family, "--max", "7")
    code_c, csv_text = _cli("triangle", family, "--max", "7", "--format", "csv")
    tri = parse_triangle_csv(csv_text, family)
    from_csv = tuple(zip(tri.rows, tri.row_sums))
    ok = code_t == code_c == 0 and _parse_table(table) == expected and from_csv == expected
    return ok, "grid and row sums, table and csv output"


def criterion_1():
    return _check_triangle("motzkin", MOTZKIN_GRID)


def criterion_2():
    return _check_triangle("telephone", TELEPHONE_GRID)


def criterion_3():
    t3 = tuple(gen_telephone(n, 3) for n in range(9))
    t4 = tuple(gen_telephone(n, 4) for n in range(10))
    return t3 == T3_PREFIX and t4 == T4_PREFIX, f"T^(3)={t3}, T^(4)={t4}"


def criterion_4():
    reports = [
        verify_motzkin_identity("GF-HYBRID", q_max=3, order=24),
        verify_motzkin_identity("GF-MOTZKIN", order=30),
        verify_motzkin_identity("GF-MOTZKIN-SHIFT", l_max=6, order=24),
        verify_hermite_identity("GF-HERMITE-SHIFT", l_max=4, order=24),
        verify_hermite_identity("HERMITE-DUP", n_max=12),
        verify_motzkin_identity("MOTZKIN-DUP", n_max=12),
        verify_motzkin_identity("ASSOC-REC", n_max=40, q_max=5),
        verify_motzkin_identity("MOTZKIN-ADD", n_max=10),
        verify_motzkin_identity("MOTZKIN-CONV", n_max=40),
        verify_telephone_identity("TEL-DUP", n_max=15),
        verify_telephone_identity("TEL-GF", m_values=range(2, 7), order=24),
        verify_telephone_identity("TEL-REC", m_values=range(2, 7), n_max=40),
    ]
    failing = [r.summary() for r in reports if not r.passed]
    return not failing, "; ".join(failing) or f"{len(reports)} identity suites"


def criterion_5():
    egf = motzkin_egf_series(30)
    for n in range(31):
        routes = (
            motzkin(n),
            hybrid_poly(n, 1, 1, 1),
            umbral_eval(umbral_compose(c_power(1), umbral_hermite(n, 1))),
            egf_coeff(egf, n),
        )
        if len(set(routes)) != 1:
            return False, f"routes disagree at n={n}: {routes}"
    return True, "n=0..30"


def criterion_6():
    needed = [
        "motzkin",
        "motzkin-col:s=2",
        "motzkin-col:s=4",
        "motzkin-col:s=6",
        "tilde-motzkin:q=2",
        "tilde-motzkin:q=3",
        "gen-telephone:m=3",
        "gen-telephone:m=4",
        "telephone-col:s=4",
    ]
    bad = []
    for key in needed:
        r = check_alignment(ALIGNMENTS[key])
        if not r.passed or r.checked < 20:
            bad.append(r.summary())
    return not bad, "; ".join(bad) or f"{len(needed)} fixtures, >= 20 terms each"


def criterion_7():
    for q in range(6):
        for n in range(41):
            v = tilde_motzkin(n, q)
            if v.denominator != 1 or v <= 0:
                return False, f"tilde m_{n}^({q}) = {v}"
    for n in range(41):
        if not isinstance(telephone(n), int):
            return False, f"T({n})"
        for m in range(2, 7):
            if not isinstance(gen_telephone(n, m), int):
                return False, f"T_{n}^({m})"
    return True, "tilde q<=5, T and T^(m) for n<=40"


def _random_poly(rng):
    terms = {}
    for _ in range(rng.randint(0, 5)):
        terms[rng.randint(-4, 8)] = Fraction(rng.randint(-9, 9), rng.randint(1, 6))
    return UmbralPoly(terms)


def criterion_8():
    rng = random.Random(20261015)
    one = c_power(0)
    for _ in range(200):
        a, b, c = (_random_poly(rng) for _ in range(3))
        if umbral_compose(a, b) != umbral_compose(b, a):
            return False, f"not commutative: {a}, {b}"
        if umbral_compose(umbral_compose(a, b), c) != umbral_compose(a, umbral_compose(b, c)):
            return False, f"not associative: {a}, {b}, {c}"
        if not (umbral_compose(one, a) == a == umbral_compose(a, one)):
            return False, f"identity fails: {a}"
    R = 20
    for q in range(4):
        partial = cq_series(q, R)
        for x in (Fraction(1), Fraction(1, 2), Fraction(2)):
            if umbral_eval(umbral_compose(c_power(q), umbral_exp_partial(x, R))) != partial.evaluate(x):
                return False, f"truncated exponential fails at q={q}, x={x}"
    return True, "200 random triples, q<=3, R=20"


CRITERIA = [
    (1, "Motzkin triangle reproduction", criterion_1),
    (2, "Telephone triangle reproduction", criterion_2),
    (3, "Generalised telephone prefixes", criterion_3),
    (4, "Identity suites over default ranges", criterion_4),
    (5, "Four-path equality for m_n", criterion_5),
    (6, "OEIS fixture suite (offline)", criterion_6),
    (7, "Integrality assertions", criterion_7),
    (8, "Umbral algebra properties", criterion_8),
]


@pytest.mark.parametrize("number, name, check", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(number, name, check):
    ok, detail = check()
    print(f"\n[{'PASS' if ok else 'FAIL'}] {number}. {name}: {detail}")
    assert ok, detail


if __name__ == "__main__":
    results = []
    for number, name, check in CRITERIA:
        ok, detail = check()
        results.append(ok)
        print(f"[{'PASS' if ok else 'FAIL'}] {number}. {name}: {detail}")
    sys.exit(0 if all(results) else 1)
