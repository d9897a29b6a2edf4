"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py``.
"""
import random
import sys
import time
from math import factorial

import numpy as np
import pytest

from shivariety import affine_weyl_group, root_system
from shivariety.characterization import coroot_triples, equivalence_sweep
from shivariety.phi_rep import apply, phi_representation, reflection_isometry
from shivariety.variety import (
    admitted_by_filter,
    enumerate_admitted,
    finite_partition,
    generator_components,
    lambda_array,
    lambda_vector,
    lattice_orbit_table,
)

from oracles import cayley_ball, reflection_shi_closed_form, table_row, type_b_linear_parts

RESULTS = {}


def report(n: int, ok: bool, detail: str, out=None) -> None:
    line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = (ok, line)
    print(line, file=out or sys.stdout, flush=True)


@pytest.fixture
def emit(capsys):
    def _emit(n, ok, detail):
        with capsys.disabled():
            print()
            report(n, ok, detail)
        assert ok, detail
    return _emit


# -- 1 ------------------------------------------------------------------------------


def criterion_1():
    expected = {}
    for n in (2, 3, 4, 5):
        expected[f"A{n}"] = factorial(n)
    for n in (2, 3, 4):
        expected[f"B{n}"] = 2 ** (n - 1) * factorial(n)
    for n in (3, 4):
        expected[f"C{n}"] = 2 ** (n - 1) * factorial(n)
    expected["D4"] = 2 ** (4 - 3) * factorial(4)
    expected["G2"] = 12
    expected["F4"] = 1152
    start = time.perf_counter()
    bad = []
    for label, count in expected.items():
        table = enumerate_admitted(root_system(label))
        if table.count != count or table.formula_count != count:
            bad.append((label, table.count, count))
    desk = time.perf_counter() - start

    start = time.perf_counter()
    e6 = enumerate_admitted(root_system("E6")).count
    e6_time = time.perf_counter() - start

    e7 = root_system("E7").component_count()
    e8 = root_system("E8").component_count()
    formula_ok = e7 == 2**9 * 3**4 * 5 * 7 and e8 == 2**14 * 3**5 * 5**2 * 7
    formula_ok &= e7 == table_row("E", 7)[3] and e8 == table_row("E", 8)[3]
    ok = not bad and desk < 60 and e6 == 17280 and e6_time < 600 and formula_ok
    detail = (f"component counts for {len(expected)} types exact in {desk:.1f}s"
              f"{'' if not bad else f' mismatches {bad}'}; E6 {e6} in {e6_time:.1f}s; "
              f"E7 {e7}, E8 {e8} by formula")
    return ok, detail


# -- 2 ------------------------------------------------------------------------------


def criterion_2():
    a2 = enumerate_admitted(root_system("A2")).vectors
    b2 = enumerate_admitted(root_system("B2")).vectors
    ok = a2 == [(0, 0, 0), (0, 0, 1)]
    ok &= b2 == [(0, 0, 0, 0), (0, 0, 1, 0), (0, 0, 1, 1), (0, 0, 2, 1)]
    ok &= admitted_by_filter(root_system("A2")) == a2 and admitted_by_filter(root_system("B2")) == b2
    return ok, f"A2 admitted {a2}; B2 admitted {b2}"


# -- 3 ------------------------------------------------------------------------------


def criterion_3():
    start = time.perf_counter()
    parts, ok = [], True
    for label in ("A2", "B2", "G2"):
        rs = root_system(label)
        r = equivalence_sweep(rs, radius=3)
        ok &= r["tuples"] == 7 ** rs.num_positive and r["num_disagreements"] == 0
        parts.append(f"{label} {r['tuples']} tuples/{r['num_disagreements']} disagreements")
    elapsed = time.perf_counter() - start
    ok &= elapsed < 60
    return ok, "; ".join(parts) + f" in {elapsed:.1f}s"


# -- 4 and 5 ------------------------------------------------------------------------

_BALLS = {}


def _ball(label):
    if label not in _BALLS:
        G = affine_weyl_group(root_system(label))
        _BALLS[label] = (G, cayley_ball(G, 8))
    return _BALLS[label]


def criterion_4():
    parts, ok = [], True
    for label in ("A2", "B2", "G2", "A3"):
        G, ball = _ball(label)
        vectors = {}
        for w in ball:
            v = G.shi_vector(w)
            ok &= v not in vectors and G.element_from_shi_vector(v) == w
            vectors[v] = w
        parts.append(f"{label} {len(ball)}")
    return ok, "round trip and injectivity on elements of length <= 8: " + ", ".join(parts)


def criterion_5():
    parts, ok = [], True
    for label in ("A2", "B2", "G2", "A3"):
        G, ball = _ball(label)
        bad = sum(1 for w, (d, _) in ball.items() if sum(abs(k) for k in G.shi_vector(w)) != d)
        ok &= bad == 0
        parts.append(f"{label} {len(ball)}/{bad} bad")
    return ok, "sum |k| equals Cayley distance: " + ", ".join(parts)


# -- 6 ------------------------------------------------------------------------------


def criterion_6(pairs=1000):
    start = time.perf_counter()
    ok, parts = True, []
    for label in ("A2", "B2", "G2", "A3", "B3", "C3"):
        G = affine_weyl_group(root_system(label))
        rs, F = G.rs, phi_representation(G)
        rng = random.Random(label)
        rand = lambda: G.from_word([rng.randrange(G.rank + 1) for _ in range(rng.randint(0, 6))])
        fails = 0
        for _ in range(pairs):
            u, v = rand(), rand()
            uv = G.multiply(u, v)
            fails += F(uv) != F(u) @ F(v)
            fails += F(u)(G.shi_vector(v)) != G.shi_vector(uv)
        closed = 0
        for _ in range(pairs):
            alpha, p, w = rng.choice(rs.positive_roots), rng.randint(-3, 3), rand()
            k = G.shi_vector(w)
            image = apply(reflection_isometry(rs, alpha, p), k)
            k_of = lambda r: k[rs.index(r)]
            closed += any(image[b] != reflection_shi_closed_form(rs, k_of, alpha, p, beta)
                          for b, beta in enumerate(rs.positive_roots))
        ok &= fails == 0 and closed == 0
        parts.append(f"{label} {fails + closed}")
    elapsed = time.perf_counter() - start
    ok &= elapsed < 60
    return ok, (f"{pairs} pairs + {pairs} reflection samples per type, failures: "
                + ", ".join(parts) + f" in {elapsed:.1f}s")


# -- 7 ------------------------------------------------------------------------------


def criterion_7():
    ok, total = True, 0
    for label in ("A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4"):
        G = affine_weyl_group(root_system(label))
        rs = G.rs
        found = G.ball(10)
        total += len(found)
        lams = lambda_array(rs, found.shi)
        ok &= bool(np.all(lams >= 0) and np.all(lams < np.array(rs.coheights)))
        linear = found.shi - lams
        for a, b, c in coroot_triples(rs):
            ok &= bool(np.array_equal(linear[:, c], linear[:, a] + linear[:, b]))
    for n in (3, 4):
        rs = root_system(f"B{n}")
        expected = type_b_linear_parts(n)
        ok &= all(expected[r] == (d, h) for r, d, h in zip(rs.positive_roots, rs.coroot_coords, rs.coheights))
    return ok, f"bounds and additivity on {total} elements of length <= 10; B3, B4 closed forms"


# -- 8 ------------------------------------------------------------------------------


def criterion_8():
    ok, parts = True, []
    for label in ("A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"):
        G = affine_weyl_group(root_system(label))
        f = G.rs.index_of_connection
        parts_ = finite_partition(G)
        sizes = {len(v) for v in parts_.values()}
        covered = sum(len(v) for v in parts_.values())
        distinct = len({w for v in parts_.values() for w in v})
        orbits = lattice_orbit_table(G, radius=6 if G.rank <= 3 else 4)
        ok &= sizes == {f} and covered == distinct == G.rs.weyl_group_order
        ok &= len(parts_) == G.rs.component_count()
        ok &= set(orbits) == set(parts_)
        ok &= all(s.orbit_count == f and s.finite_per_orbit == [1] * f for s in orbits.values())
        parts.append(f"{label} f={f}")
    return ok, "components hold f elements of W, partition W, f lattice orbits: " + ", ".join(parts)


# -- 9 ------------------------------------------------------------------------------


def criterion_9():
    ok = True
    a2 = generator_components(affine_weyl_group(root_system("A2")))
    ok &= set(a2.values()) == {(0, 0, 1)}
    tested = ["B2", "G2", "A3", "A4", "B3", "B4", "C3", "C4", "D4", "D5", "F4", "E6", "E7", "E8"]
    for label in tested:
        G = affine_weyl_group(root_system(label))
        comps = generator_components(G)
        finite = [comps[i] for i in range(1, G.rank + 1)]
        ok &= len(set(finite)) == len(finite)
    return ok, f"A2 generators all in (0,0,1); finite generators separated in {len(tested)} types"


# -- 10 -----------------------------------------------------------------------------


def criterion_10(samples=1000):
    ok, parts = True, []
    for label in ("A2", "B2", "G2", "A3", "B3", "C3", "D4", "F4"):
        G = affine_weyl_group(root_system(label))
        rng = random.Random(label)
        bad = 0
        for _ in range(samples):
            w = G.from_word([rng.randrange(G.rank + 1) for _ in range(rng.randint(0, 12))])
            x = tuple(rng.randint(-5, 5) for _ in range(G.rank))
            bad += lambda_vector(G, G.multiply(G.translation(x), w)) != lambda_vector(G, w)
        ok &= bad == 0
        parts.append(f"{label} {bad}")
    return ok, f"{samples} samples per type, mismatches: " + ", ".join(parts)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n, emit):
    ok, detail = CRITERIA[n - 1]()
    emit(n, ok, detail)


if __name__ == "__main__":
    failures = 0
    for n, crit in enumerate(CRITERIA, start=1):
        ok, detail = crit()
        report(n, ok, detail)
        failures += not ok
    sys.exit(1 if failures else 0)
