"""Exit criteria. Each test records one PASS/FAIL line in the terminal summary."""

import subprocess
import sys
import time

import numpy as np
import pytest

from forestsplit import (
    ForestPair,
    GenConfig,
    build_forest,
    children_group,
    choose_roots,
    decompose,
    gen_pair,
    oracle_min_k,
    tightness_example,
    solve,
)
from forestsplit.auxgraph import BipartiteMultigraph
from forestsplit.coloring import balanced_two_coloring
from forestsplit.generators import MODELS

from oracles import brute_force_min_k, random_bipartite_multigraph, random_forest_edges


def record(acceptance, key, ok, detail):
    acceptance[key] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
    assert ok, detail


def mixed_pairs(count, n_range, seed0):
    """Pairs cycling over generator models, cross-model pairs and component counts."""
    rng = np.random.default_rng(seed0)
    for i in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        seed = seed0 + i
        kind = i % 6
        if kind < 4:
            model = MODELS[kind]
            comp = int(rng.integers(1, n + 1)) if model == "prufer-tree" and rng.random() < 0.5 else None
            yield seed, gen_pair(GenConfig(n, model, seed, comp))
        elif kind == 4:
            m1, m2 = rng.choice(MODELS, size=2)
            yield seed, gen_pair(GenConfig(n, str(m1), seed), model2=str(m2))
        else:
            yield seed, ForestPair.from_edges(n, random_forest_edges(rng, n), random_forest_edges(rng, n))


def test_c1_counterexample_lower_bound(acceptance):
    pair = tightness_example()
    res = oracle_min_k(pair)
    timings = []
    for _ in range(20):
        t = time.perf_counter()
        oracle_min_k(pair)
        timings.append(time.perf_counter() - t)
    best = min(timings)
    ok = res.k_min == 2 and res.enumerated == 16 and best < 1e-3
    record(acceptance, 1, ok, f"k_min={res.k_min}, enumerated={res.enumerated}, best time {best * 1e3:.3f} ms")


def test_c2_upper_bound_two(acceptance):
    t = time.perf_counter()
    _, report = solve(tightness_example())
    worst = report.achieved_k
    count = 1
    strategies = ("min-id", "seeded")
    for seed, pair in mixed_pairs(10_000, (1, 12), 10_000):
        strategy = strategies[seed % 2]
        _, report = solve(pair, strategy, seed if strategy == "seeded" else None)
        worst = max(worst, report.achieved_k)
        count += 1
    elapsed = time.perf_counter() - t
    ok = worst <= 2 and count == 10_001 and elapsed < 30
    record(acceptance, 2, ok, f"{count} instances, max achieved_k={worst}, {elapsed:.1f} s")


def test_c3_imported_coloring_bound(acceptance):
    rng = np.random.default_rng(2024)
    failures = 0
    max_b = 0
    for _ in range(1000):
        L, R, a, b = random_bipartite_multigraph(rng)
        h = BipartiteMultigraph(L, R, a, b)
        bits = balanced_two_coloring(h).bits.astype(np.int64)
        for ends, count in ((a, L), (b, R)):
            ones = np.bincount(ends, weights=bits, minlength=count).astype(np.int64)
            deg = np.bincount(ends, minlength=count)
            disc = np.abs(2 * ones - deg)
            max_b = max(max_b, int(disc.max(initial=0)))
            failures += int((disc != deg % 2).sum())
    ok = failures == 0 and max_b <= 1
    record(acceptance, 3, ok, f"1000 multigraphs, parity violations={failures}, max node discrepancy={max_b}")


def test_c4_oracle_cross_check(acceptance):
    mismatches = 0
    order_violations = 0
    hist = {}
    for seed, pair in mixed_pairs(10_000, (1, 10), 50_000):
        res = oracle_min_k(pair)
        brute = brute_force_min_k(pair.vertex_count, pair.g1.edge_list(), pair.g2.edge_list())
        _, report = solve(pair)
        mismatches += res.k_min != brute
        order_violations += not (res.k_min <= report.achieved_k <= 2)
        hist[res.k_min] = hist.get(res.k_min, 0) + 1
    ok = mismatches == 0 and order_violations == 0
    record(
        acceptance,
        4,
        ok,
        f"10000 pairs, pruned/unpruned mismatches={mismatches}, "
        f"k_min<=achieved_k<=2 violations={order_violations}, k_min histogram={dict(sorted(hist.items()))}",
    )


def test_c5_decomposition_laws(acceptance):
    rng = np.random.default_rng(77)
    violations = 0
    for i in range(1000):
        n = int(rng.integers(1, 51))
        forest = build_forest(n, random_forest_edges(rng, n, keep=float(rng.uniform(0.3, 1.0))))
        if rng.random() < 0.5:
            roots = choose_roots(forest, "seeded", int(rng.integers(0, 2**63)))
        else:
            roots = choose_roots(forest)
        d = decompose(forest, roots)
        groups = d.groups
        covered = sorted(v for g in groups for v in g)
        violations += covered != list(range(n))
        violations += any(len(g) == 0 for g in groups)
        for v in range(n):
            g = children_group(d, v)
            cover = set(d.group_members(g)) if g is not None else set()
            violations += len(set(forest.neighbors_of(v).tolist()) - cover) > 1
    ok = violations == 0
    record(acceptance, 5, ok, f"1000 forests (n<=50), law violations={violations}")


@pytest.mark.slow
def test_c6_scale(acceptance):
    results = []
    ok = True
    for n, limit in ((10**5, 1.0), (10**6, 10.0)):
        pair = gen_pair(GenConfig(n, "prufer-tree", n))
        t = time.perf_counter()
        _, report = solve(pair)
        elapsed = time.perf_counter() - t
        ok &= elapsed < limit and report.achieved_k <= 2
        results.append(f"n={n}: {elapsed:.2f} s (limit {limit:.0f} s), achieved_k={report.achieved_k}")
    record(acceptance, 6, ok, "; ".join(results))


def _cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "forestsplit", *args], input=stdin, capture_output=True, check=True
    ).stdout


def test_c7_determinism(acceptance, tmp_path):
    inst = tmp_path / "inst.json"
    inst.write_bytes(_cli("gen", "--n", "2000", "--model", "uniform-forest", "--seed", "99"))
    outputs = []
    for run in range(2):
        sol = tmp_path / f"sol{run}.json"
        csv = tmp_path / f"rows{run}.csv"
        _cli("solve", str(inst), "--out", str(sol), "--root-strategy", "seeded", "--seed", "5")
        _cli("experiment", "--count", "50", "--n", "9", "--seed", "3", "--oracle", "--csv", str(csv))
        outputs.append((sol.read_bytes(), csv.read_bytes()))
    ok = outputs[0] == outputs[1]
    record(acceptance, 7, ok, f"solution and CSV byte-identical across two runs: {ok}")
