"""Acceptance suite: one test per criterion, each printing a PASS line.

Everything is exact rational arithmetic, so every comparison is equality
with zero tolerance; the only budgets are the stated wall-clock limits.
Run with ``pytest tests/test_acceptance.py -v`` (add ``-s`` to see the
per-criterion lines while the run is green).
"""

import copy
import json
import pathlib
import random
import subprocess
import sys
import time
from fractions import Fraction
from itertools import product

from operadkit.algebras import (a_infinity_from_json, check_a_infinity,
                                check_g_algebra, check_swiss_cheese_algebra,
                                g_algebra_from_json, load_algebra_file,
                                operation_from_pair)
from operadkit.axiomcheck import check_operad_axioms, check_relative_axioms
from operadkit.geometry import (compose_disks, compose_swiss_Gamma,
                                compose_swiss_gamma, random_disk_config,
                                random_swiss_config, validate_disk_config,
                                validate_swiss_config)
from operadkit.graded import MultilinearMap
from operadkit.operads import (CommutativeMultiplication, DiskOperadInstance,
                               SwissOperadInstance, make_associative_operad,
                               make_commutative_operad, module_tensor_product,
                               named_collection, product_relative_operad)
from operadkit.strata import (ClosedLeaf, associahedron_complex,
                              closed_trees, enumerate_strata, graft_Gamma,
                              graft_gamma, stratum_codimension,
                              stratum_dimension)

from oracles import polygon_dissection_counts

ROOT = pathlib.Path(__file__).resolve().parents[1]
DATA = pathlib.Path(__file__).resolve().parent / "data"
GOLDEN = pathlib.Path(__file__).resolve().parent / "golden"
FIXTURES = ROOT / "src/operadkit/fixtures"


def report_line(number, label):
    print(f"ACCEPTANCE {number:2d} PASS  {label}")


def test_criterion_01_little_disks_axioms_exact_on_200_samples():
    start = time.monotonic()
    report = check_operad_axioms(DiskOperadInstance(), arity_budget=3,
                                 sample_budget=200, seed=2024)
    elapsed = time.monotonic() - start
    assert report.passed, [c.name for c in report.failures]
    by_name = {c.name: c.cases for c in report.checks}
    for law in ("associativity", "unit", "equivariance_outer",
                "equivariance_inner"):
        assert by_name[law] == 200
    assert elapsed < 5.0, f"took {elapsed:.1f}s"
    report_line(1, f"little-disks axioms, 200 exact samples in {elapsed:.1f}s")


def test_criterion_02_swiss_relative_axioms_exact_on_100_samples():
    start = time.monotonic()
    report = check_relative_axioms(SwissOperadInstance(), arity_budget=3,
                                   sample_budget=100, seed=2024)
    elapsed = time.monotonic() - start
    assert report.passed, [c.name for c in report.failures]
    names = {c.name for c in report.checks}
    assert {"gamma_associativity", "Gamma_associativity", "Gamma_unit",
            "interchange", "gamma_equivariance",
            "Gamma_equivariance"} <= names
    assert all(c.cases == 100 for c in report.checks)
    assert elapsed < 10.0, f"took {elapsed:.1f}s"
    report_line(2, f"swiss-cheese relative axioms, 100 exact samples in {elapsed:.1f}s")


def test_criterion_03_compositions_are_closed():
    rng = random.Random(99)
    for _ in range(60):
        outer = random_disk_config(rng, rng.randint(1, 3))
        inners = [random_disk_config(rng, rng.randint(1, 3))
                  for _ in range(outer.arity)]
        out = compose_disks(outer, inners)
        assert validate_disk_config(out.disks) == out
    for _ in range(40):
        s = random_swiss_config(rng, rng.randint(0, 2), rng.randint(1, 2))
        ts = [random_swiss_config(rng, rng.randint(0, 1), 1)
              for _ in range(s.semidisk_arity)]
        out = compose_swiss_gamma(s, ts)
        assert validate_swiss_config(out.disks, out.semidisks) == out
        ds = [random_disk_config(rng, rng.randint(1, 2))
              for _ in range(s.disk_arity)]
        out = compose_swiss_Gamma(s, ds)
        assert validate_swiss_config(out.disks, out.semidisks) == out
    report_line(3, "closure of all compositions under validation")


def test_criterion_04_discrete_instances_exhaustive():
    assert check_operad_axioms(make_associative_operad(4), arity_budget=4).passed
    assert check_operad_axioms(make_commutative_operad(8), arity_budget=4).passed
    comm = make_commutative_operad(12)
    prod = product_relative_operad(
        comm, CommutativeMultiplication(comm, 2, 0), make_associative_operad(6))
    assert check_relative_axioms(prod, arity_budget=4).passed
    m1 = named_collection("m1", {1: 2}, base=comm)
    m2 = named_collection("m2", {1: 3}, base=comm)
    assert len(module_tensor_product(m1, m2).elements(2)) == 36
    report_line(4, "word/point operads, their product, and the 36-element "
                   "tensor component")


def test_criterion_05_strata_f_vectors_and_dimension_bookkeeping():
    start = time.monotonic()
    expected = {3: (2, 1), 4: (5, 5, 1), 5: (14, 21, 9, 1)}
    for n, fv in expected.items():
        records = enumerate_strata(0, n)
        got = {}
        for r in records:
            got[r.dimension] = got.get(r.dimension, 0) + 1
        assert tuple(got.get(d, 0) for d in range(n - 1)) == fv
        assert got == polygon_dissection_counts(n)
    for m in range(0, 4):
        for n in range(0, 7):
            if not 2 <= 2 * m + n <= 6:
                continue
            for r in enumerate_strata(m, n):
                assert r.dimension + r.codimension == 2 * m + n - 2
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"took {elapsed:.1f}s"
    report_line(5, f"strata f-vectors and dim+codim sweep in {elapsed:.1f}s")


def test_criterion_06_chain_complex_squares_to_zero_and_is_contractible():
    start = time.monotonic()
    for n in range(2, 8):
        cx = associahedron_complex(n)
        assert cx.d_squared_is_zero(), f"n={n}"
        assert cx.homology_ranks() == [1] + [0] * (n - 2), f"n={n}"
        assert cx.euler_characteristic() == 1, f"n={n}"
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"took {elapsed:.1f}s"
    report_line(6, f"boundary squares to zero, homology (1,0,...), in {elapsed:.1f}s")


def test_criterion_07_grafting_dimension_and_codimension_bookkeeping():
    rng = random.Random(500)
    pool = []
    for m, n in [(0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (2, 0)]:
        pool.extend(enumerate_strata(m, n))
    outers = [r for r in pool if r.tree.line_arity >= 1]
    closed_pool = [ClosedLeaf(1)] + closed_trees([1, 2]) + closed_trees([1, 2, 3])

    def vertex_count(node):
        if isinstance(node, ClosedLeaf):
            return 0
        return 1 + sum(vertex_count(c) for c in node.children)

    def closed_dim(node):
        if isinstance(node, ClosedLeaf):
            return 0
        return 2 * len(node.children) - 3 + sum(closed_dim(c)
                                                for c in node.children)

    checked = 0
    for _ in range(50):
        outer = rng.choice(outers)
        inners = [rng.choice(pool) for _ in range(outer.tree.line_arity)]
        grafted = graft_gamma(outer.tree, [r.tree for r in inners])
        assert stratum_dimension(grafted) == \
            outer.dimension + sum(r.dimension for r in inners)
        assert stratum_codimension(grafted) == outer.codimension + \
            sum(r.codimension for r in inners) + len(inners)
        checked += 1
    closed_outers = [r for r in pool if r.tree.closed_arity >= 1]
    for _ in range(50):
        outer = rng.choice(closed_outers)
        inners = [rng.choice(closed_pool)
                  for _ in range(outer.tree.closed_arity)]
        grafted = graft_Gamma(outer.tree, inners)
        assert stratum_dimension(grafted) == \
            outer.dimension + sum(closed_dim(t) for t in inners)
        assert stratum_codimension(grafted) == \
            outer.codimension + sum(vertex_count(t) for t in inners)
        checked += 1
    assert checked == 100
    report_line(7, "100 random graftings: dimensions add, double points count")


def test_criterion_08_algebra_checkers_and_mutation_sensitivity():
    g4 = load_algebra_file(FIXTURES / "g_algebra_4d.json")
    assert check_g_algebra(g4).passed

    doc = json.loads((FIXTURES / "g_algebra_4d.json").read_text())
    mutations = 0
    for op in ("dot", "bracket"):
        for i, entry in enumerate(doc[op]):
            for j, part in enumerate(entry["output"]):
                mutated = copy.deepcopy(doc)
                mutated[op][i]["output"][j]["coef"] = \
                    str(Fraction(part["coef"]) + 1)
                report = check_g_algebra(g_algebra_from_json(mutated))
                assert not report.passed
                first = report.failures[0]
                assert first.name and first.witness is not None
                mutations += 1
    assert mutations >= 10

    swiss = load_algebra_file(FIXTURES / "swiss_algebra_4d.json")
    assert check_swiss_cheese_algebra(swiss).passed

    dga = load_algebra_file(FIXTURES / "dga_5d.json")
    assert check_a_infinity(dga, 6).passed
    bad = json.loads((FIXTURES / "dga_5d.json").read_text())
    for opdoc in bad["operations"]:
        if opdoc["arity"] == 2:
            opdoc["entries"].append(
                {"inputs": [2, 1], "output": [{"index": 1, "coef": "1"}]})
    report = check_a_infinity(a_infinity_from_json(bad), 4)
    arity3 = next(c for c in report.checks if c.name == "stasheff_arity_3")
    assert not arity3.passed and arity3.witness is not None
    report_line(8, f"fixtures pass; {mutations} single-constant mutations caught")


def test_criterion_09_pair_operation_is_a_morphism_at_small_arities():
    swiss = load_algebra_file(FIXTURES / "swiss_algebra_4d.json")
    V1, V2 = swiss.v1.space, swiss.v2
    id1, id2 = MultilinearMap.identity(V1), MultilinearMap.identity(V2)
    dot, bracket, prod = swiss.v1.dot, swiss.v1.bracket, swiss.product
    unit_ins = MultilinearMap.plain(V1, 0, 0, {(): {swiss.v1.unit: Fraction(1)}})
    f1_pool = [id1, dot, bracket, unit_ins]

    checked = 0
    for f1 in f1_pool:
        for f2 in (id2, prod):
            for hs in product(f1_pool, repeat=f1.m):
                if sum(h.m for h in hs) > 2:
                    continue
                lhs = operation_from_pair(f1.compose(list(hs)), f2, swiss)
                rhs = operation_from_pair(f1, f2, swiss).relative_Gamma(list(hs))
                assert lhs == rhs
                checked += 1

    def iterated_dot(arity):
        mu = id1
        for _ in range(arity - 1):
            mu = dot.compose([mu, id1])
        return mu

    for f1 in f1_pool:
        for l, f2, ks in [(1, id2, (id2,)), (1, id2, (prod,)),
                          (2, prod, (id2, id2))]:
            for gs in product(f1_pool, repeat=l):
                if f1.m + sum(g.m for g in gs) > 2:
                    continue
                combined = iterated_dot(l + 1).compose([f1] + list(gs))
                lhs = operation_from_pair(combined, f2.compose(list(ks)), swiss)
                rhs = operation_from_pair(f1, f2, swiss).relative_gamma(
                    [operation_from_pair(g, k, swiss) for g, k in zip(gs, ks)])
                assert lhs == rhs
                checked += 1
    assert checked >= 35
    report_line(9, f"pair operation intertwines both compositions "
                   f"({checked} exhaustive identities)")


def test_criterion_10_cli_golden_outputs_and_exit_codes():
    def run_cli(*args):
        return subprocess.run(
            [sys.executable, "-m", "operadkit", *map(str, args)],
            capture_output=True, text=True, cwd=ROOT)

    out = run_cli("compose", DATA / "swiss_outer_02.json",
                  DATA / "swiss_inner_11.json", DATA / "swiss_unit.json")
    assert out.returncode == 0
    assert out.stdout == (GOLDEN / "compose_swiss_gamma.json").read_text()

    out = run_cli("check", "operad", "--instance", "as", "--arity-budget", "4")
    assert out.returncode == 0
    assert out.stdout == (GOLDEN / "check_as.json").read_text()

    out = run_cli("strata", "enumerate", "0", "4", "--order", "fixed")
    assert out.returncode == 0
    assert out.stdout == (GOLDEN / "strata_enumerate_0_4.csv").read_text()

    out = run_cli("strata", "chain", "--n", "5", "--check-d2")
    assert out.returncode == 0
    assert out.stdout == (GOLDEN / "strata_chain_5.json").read_text()

    out = run_cli("algebra", "check-g", FIXTURES / "g_algebra_4d.json")
    assert out.returncode == 0
    assert out.stdout == (GOLDEN / "algebra_g4.json").read_text()

    assert run_cli("compose", DATA / "swiss_outer_02.json",
                   DATA / "swiss_inner_11.json").returncode == 2
    assert run_cli("check", "operad", "--instance", "as", "--fixture",
                   DATA / "as3_corrupted.json").returncode == 1
    assert run_cli("strata", "enumerate", "0", "1").returncode == 2
    report_line(10, "CLI invocations byte-match their golden files with the "
                    "specified exit codes")
