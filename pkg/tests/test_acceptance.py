"""The acceptance gate: eight criteria at their stated sizes and tolerances.

Each test records a PASS/FAIL line in ``RESULTS``; the terminal summary hook in
conftest.py prints them in order at the end of the run.
"""
import time

import pytest

from vertexcalc.blocks import ParabolicType, predicted_vertex_set
from vertexcalc.hecke.characters import algebra, simple_modules, wedderburn_check
from vertexcalc.hecke.relative import vertex_of
from vertexcalc.hecke.modules import algebra_radical, regular_module
from vertexcalc.partitions import Partition
from vertexcalc.verify import attainment, projective_dimension_check, run_suite, weight_one_shape

RESULTS: dict[int, str] = {}
VERTEX_ES = (2, 3, 4, 5)


def record(number, title, ok, detail=""):
    RESULTS[number] = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
    assert ok, RESULTS[number]


def failure_lines(report):
    return [r.description for r in report.failures()][:5]


@pytest.fixture(scope="module")
def dipper_du():
    return run_suite("dipper-du", n=5, es=VERTEX_ES)


def test_criterion_1_vertices_of_simples(dipper_du):
    H = algebra(2, 2)
    rad = algebra_radical(H)
    radical_ok = len(rad) == 1 and rad[0] == (H.one() + H.generator(1)).scaled(rad[0].coefficient(0))
    d11 = vertex_of(simple_modules(2, 2)[Partition((1, 1))], certified=True).vertex
    reg = vertex_of(regular_module(H), certified=True).vertex
    worked = radical_ok and d11 == ParabolicType((2,)) and reg == ParabolicType()
    simples_scanned = [r for r in dipper_du.records if r.kind == "prediction" and r.witness["module"]["label"][0] == "D"]
    expected = sum(len(simple_modules(m, e)) for e in VERTEX_ES for m in range(1, 6))
    ok = dipper_du.ok and worked and len(simples_scanned) == expected and dipper_du.duration < 600
    record(1, "every vertex of a simple lies in the predicted set and in its block's defect type, n <= 5, e = 2..5",
           ok, f"{len(simples_scanned)} simples, {dipper_du.duration:.0f}s, worked n=2 values {'match' if worked else 'differ'}"
           + (f"; {failure_lines(dipper_du)}" if not dipper_du.ok else ""))


def test_criterion_2_vertex_set_attainment(dipper_du):
    att = attainment(dipper_du)
    missing = []
    for e in VERTEX_ES:
        for m in range(1, 6):
            types = {tuple(P.to_json()) for P in predicted_vertex_set(m, e)}
            got = att.get((m, e), {})
            missing += [(m, e, t) for t in types if not got.get(t)]
    record(2, "each S_e^k with k <= n/e is attained by a tested module", not missing,
           f"non-attained {missing}" if missing else f"{len(att)} (n, e) pairs")


def test_criterion_3_mackey():
    start = time.perf_counter()
    k = run_suite("mackey-k", n=8)
    mod = run_suite("mackey-mod", n=4, es=(2, 3))
    pairs = sum(r.witness["pairs"] for r in k.records)
    cases = sum(r.witness["cases"] for r in mod.records)
    record(3, "Mackey identity in the Grothendieck group for n <= 8 and on module characters for n <= 4",
           k.ok and mod.ok, f"{pairs} composition pairs, {cases} seeded cases, {time.perf_counter() - start:.0f}s")


def test_criterion_4_decomposition_numbers():
    rep = run_suite("decmat", n=5, es=(2, 3), check_gram=True)
    wed = [wedderburn_check(m, e) for e in (4, 5) for m in range(1, 6)]
    ok = rep.ok and all(w["ok"] for w in wed)
    record(4, "LLT at v=1 equals Gram-rank and character multiplicities; Wedderburn identity, n <= 5",
           ok, f"{len(rep.records)} checks" + (f"; {failure_lines(rep)}" if not rep.ok else ""))


def test_criterion_5_combinatorial_oracles():
    rep = run_suite("wilcox", n=12, es=(2, 3, 4, 5, 6))
    record(5, "cores by every hook-removal order and abacus, Wilcox by search, blocks equal core classes",
           rep.ok, f"{len(rep.records)} checks" + (f"; {failure_lines(rep)}" if not rep.ok else ""))


def test_criterion_6_lr_facts():
    rep = run_suite("lr", n=8, es=(2, 3, 4, 5, 6))
    bound = rep.records[0].witness
    record(6, "first-row bound for |nu| <= 8 and corner coefficient 1 for cores |rho| <= 6",
           rep.ok, f"{bound['checked']} coefficients, {len(bound['violations'])} violations")


def test_criterion_7_adjunction():
    rep = run_suite("adjunction", n=4, es=(2, 3))
    record(7, "triangle identities, naturality of zeta, summand criteria and blockwise zeta lemmas, n <= 4",
           rep.ok, f"{len(rep.records)} checks" + (f"; {failure_lines(rep)}" if not rep.ok else ""))


def test_criterion_8_weight_one_blocks():
    shape_bad = {(n, e): bad for n in range(2, 9) for e in range(2, n + 1) if (bad := weight_one_shape(n, e))}
    pim = [p for n in range(2, 6) for e in range(2, n + 1) for p in projective_dimension_check(n, e)]
    pim_bad = [p for p in pim if not p["ok"]]
    record(8, "weight-one LLT columns are {1, v} for n <= 8 and covers have the predicted dimension for n <= 5",
           not shape_bad and not pim_bad and len(pim) > 0,
           f"{len(pim)} covers checked" + (f"; shape {shape_bad} covers {pim_bad}" if shape_bad or pim_bad else ""))
