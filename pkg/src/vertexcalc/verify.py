"""Verification suites and their machine-readable reports.

Each suite returns a :class:`SuiteReport` holding one record per check.
Records carry a ``kind``: ``consistency`` for internal identities (a
failure means the engine disagrees with itself), ``prediction`` for
comparisons with the block-theoretic vertex predictions (a failure there is
reported as a contradiction, which points to an implementation fault), and
``finding`` for non-fatal observations.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from .blocks import (
    BlockId,
    ParabolicType,
    block_of,
    blocks_of_size,
    parabolic_contains,
    predicted_vertex_of_block,
    predicted_vertex_set,
)
from .fock import evaluate_at_one, llt_canonical_basis, LaurentPoly
from .partitions import (
    Partition,
    compositions,
    e_core_quotient,
    enumerate_partitions,
    is_e_core,
    syt_count,
    wilcox_decompose,
)

SUITES = ("wilcox", "mackey-k", "mackey-mod", "lr", "adjunction", "decmat", "dipper-du")

DEFAULT_N = {
    "wilcox": 12,
    "lr": 8,
    "mackey-k": 8,
    "mackey-mod": 4,
    "adjunction": 4,
    "decmat": 5,
    "dipper-du": 5,
}
DEFAULT_E = {
    "wilcox": (2, 3, 4, 5, 6),
    "lr": (2, 3, 4, 5, 6),
    "mackey-k": (),
    "mackey-mod": (2, 3),
    "adjunction": (2, 3),
    "decmat": (2, 3),
    "dipper-du": (2, 3),
}
DEFAULT_MAX_DIM = 32

CONTRADICTION = "contradicts the predicted vertex classification; implementation fault suspected"

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class CheckRecord:
    description: str
    status: str
    kind: str = "consistency"
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"description": self.description, "status": self.status, "kind": self.kind,
                "witness": self.witness}


@dataclass
class SuiteReport:
    suite: str
    params: dict
    records: list[CheckRecord] = field(default_factory=list)
    duration: float = 0.0

    @property
    def status(self) -> str:
        return FAIL if any(r.status == FAIL for r in self.records) else PASS

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def add(self, description: str, ok: bool | None, kind: str = "consistency", **witness) -> CheckRecord:
        status = SKIPPED if ok is None else (PASS if ok else FAIL)
        if status == FAIL and kind == "prediction":
            description = f"{description}: {CONTRADICTION}"
        rec = CheckRecord(description, status, kind, witness)
        self.records.append(rec)
        return rec

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == FAIL]

    def findings(self) -> list[CheckRecord]:
        return [r for r in self.records if r.kind == "finding"]

    def payload(self) -> dict:
        """The deterministic body: no timing, stable ordering."""
        counts = {s: sum(r.status == s for r in self.records) for s in (PASS, FAIL, SKIPPED)}
        return {
            "suite": self.suite,
            "params": self.params,
            "status": self.status,
            "counts": counts,
            "records": [r.to_json() for r in self.records],
        }

    def envelope(self) -> dict:
        return {"report": self.payload(), "duration_seconds": round(self.duration, 3)}

    def to_json(self) -> str:
        return dumps(self.payload())


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, default=_json_default) + "\n"


def _json_default(obj: Any):
    if isinstance(obj, ParabolicType):
        return obj.to_json()
    if isinstance(obj, LaurentPoly):
        return obj.to_json()
    raise TypeError(f"not serialisable: {type(obj).__name__}")


def _plist(p: Sequence[int]) -> list[int]:
    return [int(x) for x in p]


def _pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    """Map over work items, in a bounded process pool when jobs > 1; order is preserved."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# -- wilcox: combinatorial oracles ------------------------------------------

def suite_wilcox(report: SuiteReport, n: int, es: Sequence[int], brute_max: int = 10) -> None:
    from .oracles import core_by_hook_removal, wilcox_by_search

    for e in es:
        bad_core, bad_wilcox, checked = [], [], 0
        for m in range(n + 1):
            for lam in enumerate_partitions(m):
                checked += 1
                data = e_core_quotient(lam, e)
                core, weight = core_by_hook_removal(lam, e)
                if (core, weight) != (data.core, data.weight):
                    bad_core.append({"lam": _plist(lam), "abacus": _plist(data.core), "hooks": _plist(core)})
                if m <= brute_max:
                    found = wilcox_by_search(lam, e)
                    w = wilcox_decompose(lam, e)
                    if found != [(w.sigma, w.nu)]:
                        bad_wilcox.append({"lam": _plist(lam), "search": [[_plist(s), _plist(v)] for s, v in found]})
        report.add(f"e={e}: cores agree between rim-hook removal in every order and the abacus, |lam| <= {n}",
                   not bad_core, checked=checked, failures=bad_core[:10])
        report.add(f"e={e}: Wilcox decomposition exists and is unique by search, |lam| <= {min(n, brute_max)}",
                   not bad_wilcox, failures=bad_wilcox[:10])
        # blocks by equal cores against linkage in the decomposition matrix at v = 1
        bad_blocks = []
        for m in range(1, n + 1):
            if not _blocks_match_linkage(m, e):
                bad_blocks.append(m)
        report.add(f"e={e}: linkage classes of the decomposition matrix are the equal-core classes, n <= {n}",
                   not bad_blocks, failures=bad_blocks)


def _blocks_match_linkage(n: int, e: int) -> bool:
    from .oracles import linkage_classes

    D = llt_canonical_basis(n, e)
    entries = {(lam, mu): D.entry(lam, mu).at_one() for lam in D.rows for mu in D.cols}
    classes = linkage_classes(D.rows, entries)
    by_core = {}
    for lam in D.rows:
        by_core.setdefault(e_core_quotient(lam, e).core, set()).add(lam)
    return sorted(map(sorted, classes)) == sorted(map(sorted, by_core.values()))


# -- lr ---------------------------------------------------------------------

def suite_lr(report: SuiteReport, n: int, es: Sequence[int], corner_max: int = 6) -> None:
    from .kgroup import verify_corner_coefficient, verify_lr_first_row_bound

    res = verify_lr_first_row_bound(n)
    report.add(f"nonzero LR coefficients satisfy nu_1 <= lam_1 + mu_1, |nu| <= {n}", not res["violations"],
               checked=res["checked"], violations=res["violations"][:10])
    for e in es:
        bad, checked = [], 0
        for m in range(corner_max + 1):
            for rho in enumerate_partitions(m):
                if not is_e_core(rho, e):
                    continue
                for w in range(1, corner_max // e + 1):
                    checked += 1
                    if not verify_corner_coefficient(rho, e, w):
                        bad.append({"rho": _plist(rho), "w": w})
        report.add(f"e={e}: corner coefficient equals 1 for e-cores |rho| <= {corner_max}, ew <= {corner_max}",
                   not bad, checked=checked, failures=bad)


# -- mackey-k ---------------------------------------------------------------

def _mackey_k_item(m: int) -> dict:
    from .kgroup import verify_mackey_classes

    return verify_mackey_classes(m)


def suite_mackey_k(report: SuiteReport, n: int, jobs: int) -> None:
    for res in _pmap(_mackey_k_item, list(range(1, n + 1)), jobs):
        report.add(f"n={res['n']}: Mackey identity on basis classes for all ordered composition pairs",
                   not res["failures"], pairs=res["pairs"], classes=res["classes"],
                   failures=res["failures"][:10])


# -- mackey-mod -------------------------------------------------------------

def _mackey_mod_item(item: tuple[int, int]) -> dict:
    from .hecke.characters import algebra
    from .hecke.relative import mackey_module_check
    from .hecke.modules import one_dim_seeds

    m, e = item
    H = algebra(m, e)
    cases, bad = 0, []
    for mu in compositions(m):
        seeds = one_dim_seeds(H, mu)
        for nu in compositions(m):
            for M in seeds:
                cases += 1
                ok, _, _ = mackey_module_check(nu, mu, M)
                if not ok:
                    bad.append({"nu": _plist(nu), "mu": _plist(mu), "seed": M.label})
    return {"n": m, "e": e, "cases": cases, "failures": bad}


def suite_mackey_mod(report: SuiteReport, n: int, es: Sequence[int], jobs: int) -> None:
    items = [(m, e) for e in es for m in range(1, n + 1)]
    for res in _pmap(_mackey_mod_item, items, jobs):
        report.add(f"n={res['n']}, e={res['e']}: module-level Mackey characters for all one-dimensional seeds",
                   not res["failures"], cases=res["cases"], failures=res["failures"][:10])


# -- decmat -----------------------------------------------------------------

def llt_at_one(n: int, e: int) -> dict[tuple[Partition, Partition], int]:
    D = llt_canonical_basis(n, e)
    return {(lam, mu): D.entry(lam, mu).at_one() for lam in D.rows for mu in D.cols}


def weight_one_shape(n: int, e: int) -> list[dict]:
    """Columns of weight-one blocks whose nonzero entries are not exactly {1, v}; empty when all are."""
    D = llt_canonical_basis(n, e)
    bad = []
    one, v = LaurentPoly.monomial(0), LaurentPoly.monomial(1)
    for mu in D.cols:
        if e_core_quotient(mu, e).weight != 1:
            continue
        entries = list(D.column(mu).values())
        if len(entries) != 2 or set(entries) != {one, v}:
            bad.append({"mu": _plist(mu), "entries": [x.to_json() for x in entries]})
    return bad


def projective_dimension_check(n: int, e: int) -> list[dict]:
    """dim P(D_mu) of the constructed cover against sum_lam d_lam,mu(1) dim S_lam, for weight-one blocks."""
    from .hecke.characters import projective_cover, simple_modules

    dec = llt_at_one(n, e)
    out = []
    for mu in simple_modules(n, e):
        if e_core_quotient(mu, e).weight != 1:
            continue
        P = projective_cover(n, e, mu)
        predicted = sum(dec[(lam, mu)] * syt_count(lam) for lam in enumerate_partitions(n))
        out.append({"mu": _plist(mu), "dim_P": P.dim, "predicted": predicted, "ok": P.dim == predicted})
    return out


def _decmat_item(item: tuple[int, int, bool]) -> list[tuple[str, bool, dict]]:
    from .hecke.characters import (
        decomposer,
        decomposition_numbers,
        simple_modules,
        specht_modules,
        wedderburn_check,
    )
    from .hecke.modules import contravariant_radical

    m, e, check_gram = item
    out = []
    llt = llt_at_one(m, e)
    chars = decomposition_numbers(m, e)
    diff = [{"lam": _plist(l), "mu": _plist(u), "llt": llt[(l, u)], "characters": chars.get((l, u))}
            for (l, u) in sorted(llt) if llt[(l, u)] != chars.get((l, u))]
    out.append((f"n={m}, e={e}: LLT at v=1 equals character-derived multiplicities [S_lam : D_mu]",
                not diff and len(llt) == len(chars), {"entries": len(llt), "differences": diff}))
    dec = decomposer(m, e)
    out.append((f"n={m}, e={e}: simple characters are linearly independent",
                dec.independent, {"rank": dec.rank, "simples": len(dec.labels)}))
    w = wedderburn_check(m, e)
    out.append((f"n={m}, e={e}: sum of (dim D)^2 equals dim H - dim rad H", w.pop("ok"), w))
    if check_gram:
        ranks = {}
        bad = []
        simples = simple_modules(m, e)
        for lam, S in specht_modules(m, e).items():
            rank, _ = contravariant_radical(S)
            ranks[str(lam)] = rank
            expected = simples[lam].dim if lam in simples else 0
            if rank != expected:
                bad.append(str(lam))
        out.append((f"n={m}, e={e}: Gram ranks are nonzero exactly on e-restricted labels and equal dim D",
                    not bad, {"ranks": ranks, "mismatches": bad}))
        dims = _simple_dims_from_llt(m, e)
        mism = [{"mu": str(mu), "gram": simples[mu].dim, "llt": d} for mu, d in dims.items() if simples[mu].dim != d]
        out.append((f"n={m}, e={e}: Gram ranks equal simple dimensions predicted by LLT at v=1",
                    not mism, {"mismatches": mism}))
    shape = weight_one_shape(m, e)
    out.append((f"n={m}, e={e}: weight-one LLT columns have entries exactly {{1, v}}", not shape, {"failures": shape}))
    pim = projective_dimension_check(m, e)
    out.append((f"n={m}, e={e}: projective covers in weight-one blocks have the Brauer-reciprocity dimension",
                all(p["ok"] for p in pim), {"covers": pim}))
    return out


def _simple_dims_from_llt(n: int, e: int) -> dict[Partition, int]:
    """Solve dim S_lam = sum_mu d_lam,mu(1) dim D_mu, using the e-restricted rows (unitriangular)."""
    dec = llt_at_one(n, e)
    D = llt_canonical_basis(n, e)
    restricted = sorted(D.cols, reverse=True)
    dims: dict[Partition, int] = {}
    # rows lam = mu restricted: d_mu,mu = 1 and d_mu,nu = 0 unless nu dominates mu ... process in an order
    # where all other nonzero columns of row mu are already known
    remaining = list(restricted)
    while remaining:
        progress = False
        for mu in list(remaining):
            others = [nu for nu in restricted if nu != mu and dec[(mu, nu)]]
            if all(nu in dims for nu in others):
                if dec[(mu, mu)] != 1:
                    raise AssertionError(f"diagonal entry at {mu} is {dec[(mu, mu)]}")
                dims[mu] = syt_count(mu) - sum(dec[(mu, nu)] * dims[nu] for nu in others)
                remaining.remove(mu)
                progress = True
        if not progress:
            raise AssertionError("decomposition matrix is not unitriangular on restricted rows")
    return dims


def suite_decmat(report: SuiteReport, n: int, es: Sequence[int], check_gram: bool, jobs: int) -> None:
    items = [(m, e, check_gram) for e in es for m in range(1, n + 1)]
    for recs in _pmap(_decmat_item, items, jobs):
        for desc, ok, witness in recs:
            report.add(desc, ok, **witness)


# -- adjunction -------------------------------------------------------------

def _battery(m: int, e: int, max_dim: int):
    """Labelled modules for the adjunction battery: (label, module, block, certified indecomposable)."""
    from .hecke.characters import projective_cover, simple_modules, specht_modules
    from .hecke.modules import end_semisimple_dimension

    out = []
    for lam, S in specht_modules(m, e).items():
        if S.dim <= max_dim:
            out.append((f"S{lam}", S, block_of(lam, e), end_semisimple_dimension(S) == 1))
    for mu, D in simple_modules(m, e).items():
        out.append((f"D{mu}", D, block_of(mu, e), True))
    for mu in simple_modules(m, e):
        P = projective_cover(m, e, mu)
        if P.dim <= max_dim:
            out.append((f"P{mu}", P, block_of(mu, e), True))
    return out


def _adjunction_item(item: tuple[int, int, int]) -> list[tuple[str, bool | None, dict]]:
    from .hecke.characters import algebra, simple_modules
    from .hecke.relative import (
        adjunction_data,
        counit_has_right_inverse,
        is_relatively_projective,
        is_summand,
        unit_has_left_inverse,
        zeta_is_natural,
    )
    from .hecke.modules import hom_space, induce_module, restrict_module

    m, e, max_dim = item
    H = algebra(m, e)
    battery = _battery(m, e, max_dim)
    comps = list(compositions(m))
    out = []

    tri_bad = []
    for label, M, _, _ in battery:
        for mu in comps:
            ad = adjunction_data(M, mu)
            if not ad.ok:
                tri_bad.append({"module": label, "mu": _plist(mu),
                                "failed": sorted(k for k, v in ad.checks.items() if not v)})
    out.append((f"n={m}, e={e}: triangle identities and zeta = norm element on the battery",
                not tri_bad, {"modules": len(battery), "compositions": len(comps), "failures": tri_bad}))

    nat_bad, maps = [], 0
    for la, M, _, _ in battery:
        for lb, Mp, _, _ in battery:
            for f in hom_space(M, Mp):
                for mu in comps:
                    maps += 1
                    if not zeta_is_natural(f, M, Mp, mu):
                        nat_bad.append({"source": la, "target": lb, "mu": _plist(mu)})
    out.append((f"n={m}, e={e}: zeta is natural on all computed Hom bases", not nat_bad,
                {"checks": maps, "failures": nat_bad[:10]}))

    # summand criteria, keeping the relative-projectivity answer for the blockwise zeta checks
    hig_bad = []
    summand: dict[tuple[str, tuple[int, ...]], bool] = {}
    for label, M, _, cert in battery:
        if not cert:
            continue
        for mu in comps:
            N = induce_module(restrict_module(M, mu))
            answers = {
                "relative_trace": is_relatively_projective(M, mu),
                "trace_ideal": is_summand(M, N, certified=True),
                "unit_left_inverse": unit_has_left_inverse(M, mu),
                "counit_right_inverse": counit_has_right_inverse(M, mu),
            }
            summand[(label, mu)] = answers["relative_trace"]
            if len(set(answers.values())) != 1:
                hig_bad.append({"module": label, "mu": _plist(mu), "answers": answers})
    out.append((f"n={m}, e={e}: summand, split unit and split counit criteria agree", not hig_bad,
                {"cases": len(summand), "failures": hig_bad}))

    # blockwise lemmas on zeta
    simples = simple_modules(m, e)
    simple_bad, mofo_bad = [], []
    for b in blocks_of_size(m, e):
        in_block = [mu for mu in simples if block_of(mu, e) == b]
        for mu in comps:
            N = H.norm_element(mu)
            zetas = {lab: simples[lab].act(N) for lab in in_block}
            invertible = {lab: z.rank() == simples[lab].dim for lab, z in zetas.items()}
            if in_block and len(set(invertible.values())) != 1:
                simple_bad.append({"block": str(b), "mu": _plist(mu),
                                   "invertible": {str(k): v for k, v in invertible.items()}})
            if any(not z.is_zero() for z in zetas.values()):
                for label, M, blk, cert in battery:
                    if cert and blk == b and not summand[(label, mu)]:
                        mofo_bad.append({"block": str(b), "mu": _plist(mu), "module": label})
    out.append((f"n={m}, e={e}: within each block zeta is invertible on all simples or on none", not simple_bad,
                {"failures": simple_bad}))
    out.append((f"n={m}, e={e}: a simple with nonzero zeta forces every tested module of its block to be relatively projective",
                not mofo_bad, {"failures": mofo_bad}))

    zeta_bad, zeta_cases = [], 0
    for label, M, _, cert in battery:
        if not cert:
            continue
        for mu in comps:
            R = restrict_module(M, mu)
            if len(hom_space(R, R)) != 1:
                continue
            zeta_cases += 1
            Z = M.act(H.norm_element(mu))
            c = Z.entry(0, 0)
            nonzero_scalar = (not c.is_zero()) and Z == M.identity().scale(c)
            if nonzero_scalar != summand[(label, mu)]:
                zeta_bad.append({"module": label, "mu": _plist(mu)})
    out.append((f"n={m}, e={e}: with one-dimensional End(Res M), M is relatively projective iff zeta is a nonzero scalar",
                not zeta_bad, {"cases": zeta_cases, "failures": zeta_bad}))
    return out


def suite_adjunction(report: SuiteReport, n: int, es: Sequence[int], max_dim: int, jobs: int) -> None:
    items = [(m, e, max_dim) for e in es for m in range(1, n + 1)]
    for recs in _pmap(_adjunction_item, items, jobs):
        for desc, ok, witness in recs:
            report.add(desc, ok, **witness)


# -- dipper-du --------------------------------------------------------------

def _vertex_item(item: tuple[int, int, int]) -> list[dict]:
    """Vertex scans for simples, projective covers, H when indecomposable and small induced modules."""
    from .hecke.characters import algebra, decomposer, projective_cover, simple_modules
    from .hecke.relative import vertex_of
    from .hecke.modules import HModule, end_semisimple_dimension, induce_module, regular_module

    m, e, max_dim = item
    found = []

    def scan(label, M, b):
        rec = {"label": label, "dim": M.dim, "block": str(b), "block_weight": b.weight}
        if M.dim > max_dim:
            rec["skipped"] = f"dimension {M.dim} exceeds --max-dim {max_dim}"
        else:
            res = vertex_of(M, certified=True)
            rec.update(res.to_json())
        found.append(rec)

    simples = simple_modules(m, e)
    for mu, D in simples.items():
        scan(f"D{mu}", D, block_of(mu, e))
    for mu in simples:
        scan(f"P{mu}", projective_cover(m, e, mu), block_of(mu, e))
    H = algebra(m, e)
    R = regular_module(H)
    blocks = blocks_of_size(m, e)
    if len(blocks) == 1 and R.dim <= max_dim and end_semisimple_dimension(R) == 1:
        scan("H", R, blocks[0])
    # Simples and projectives can miss intermediate vertices (at n=4, e=2 every simple
    # has the defect group of the block), so also try Ind from S_{m-1} x S_1 of each
    # simple of the smaller algebra tensored with the trivial module, keeping only the
    # indecomposable ones.
    if m >= 2:
        for mu, D in simple_modules(m - 1, e).items():
            if D.dim * m > max_dim:
                continue
            X = HModule(H, (m - 1, 1), D.dim, dict(D.gens), label=f"D{mu}xtriv")
            M = induce_module(X)
            if end_semisimple_dimension(M) != 1:
                continue
            factors = decomposer(m, e).multiplicities(M)
            top = next(nu for nu, c in factors.items() if c)
            scan(f"Ind(D{mu}xtriv)", M, block_of(top, e))
    return found


def scan_report(n: int, e: int, rec: dict) -> dict:
    """One scan in the per-module JSON layout."""
    return {
        "n": n,
        "e": e,
        "module": {"label": rec["label"], "dim": rec["dim"], "block": rec["block"]},
        "vertex": rec.get("vertex"),
        "tested_parabolics": rec.get("tested_parabolics", []),
    }


def suite_dipper_du(report: SuiteReport, n: int, es: Sequence[int], max_dim: int, jobs: int) -> None:
    items = [(m, e, max_dim) for e in es for m in range(1, n + 1)]
    results = _pmap(_vertex_item, items, jobs)
    for (m, e, _), found in zip(items, results):
        allowed = predicted_vertex_set(m, e)
        attained: dict[ParabolicType, str] = {}
        for rec in found:
            if "skipped" in rec:
                report.add(f"n={m}, e={e}: vertex of {rec['label']}", None, kind="prediction", **scan_report(m, e, rec),
                           notice=rec["skipped"])
                continue
            v = ParabolicType(tuple(rec["vertex"]))
            b_weight = rec["block_weight"]
            block_vertex = ParabolicType((e,) * b_weight)
            ok = v in allowed and parabolic_contains(block_vertex, v, m)
            attained.setdefault(v, rec["label"])
            report.add(f"n={m}, e={e}: vertex {v} of {rec['label']} lies in the predicted set and in the block's "
                       f"{block_vertex}", ok, kind="prediction", **scan_report(m, e, rec))
        for P in allowed:
            hit = P in attained
            desc = f"n={m}, e={e}: {P} is attained" if hit else \
                f"n={m}, e={e}: {P} is not attained by any tested module (non-fatal)"
            report.add(desc, True, kind="finding", n=m, e=e, type=P.to_json(), attained=hit,
                       module=attained.get(P))


def attainment(report: SuiteReport) -> dict[tuple[int, int], dict[tuple[int, ...], bool]]:
    """Per (n, e), which predicted types were attained, read back from a dipper-du report."""
    out: dict[tuple[int, int], dict[tuple[int, ...], bool]] = {}
    for r in report.findings():
        w = r.witness
        out.setdefault((w["n"], w["e"]), {})[tuple(w["type"])] = w["attained"]
    return out


# -- entry point ------------------------------------------------------------

def run_suite(suite: str, n: int | None = None, es: Sequence[int] | None = None, check_gram: bool = False,
              max_dim: int | None = None, jobs: int = 1) -> SuiteReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    n = DEFAULT_N[suite] if n is None else n
    es = tuple(DEFAULT_E[suite] if not es else es)
    max_dim = DEFAULT_MAX_DIM if max_dim is None else max_dim
    if n < 1:
        raise ValueError("n must be at least 1")
    if any(e < 2 for e in es):
        raise ValueError("e must be at least 2")
    params: dict[str, Any] = {"n": n}
    if suite != "mackey-k":
        params["e"] = list(es)
    if suite in ("adjunction", "dipper-du"):
        params["max_dim"] = max_dim
    if suite == "decmat":
        params["check_gram"] = check_gram
    if suite in ("mackey-mod", "adjunction", "decmat", "dipper-du"):
        from .hecke.algebra import SizeGuardError, max_n

        if n > max_n():
            raise SizeGuardError(f"n={n} exceeds the module size guard {max_n()} (set VERTEXCALC_MAX_N)")
    report = SuiteReport(suite, params)
    start = time.perf_counter()
    if suite == "wilcox":
        suite_wilcox(report, n, es)
    elif suite == "lr":
        suite_lr(report, n, es)
    elif suite == "mackey-k":
        suite_mackey_k(report, n, jobs)
    elif suite == "mackey-mod":
        suite_mackey_mod(report, n, es, jobs)
    elif suite == "decmat":
        suite_decmat(report, n, es, check_gram, jobs)
    elif suite == "adjunction":
        suite_adjunction(report, n, es, max_dim, jobs)
    else:
        suite_dipper_du(report, n, es, max_dim, jobs)
    report.duration = time.perf_counter() - start
    return report


# -- merging ----------------------------------------------------------------

class ReportCollision(ValueError):
    """Two reports share suite and parameters but disagree on the outcome."""


def merge_reports(payloads: Iterable[dict]) -> dict:
    """Deterministic aggregate of report payloads (or envelopes)."""
    seen: dict[str, dict] = {}
    for p in payloads:
        body = p["report"] if "report" in p and "suite" not in p else p
        key = json.dumps({"suite": body["suite"], "params": body["params"]}, sort_keys=True)
        if key in seen and seen[key]["status"] != body["status"]:
            raise ReportCollision(f"conflicting outcomes for {key}")
        seen.setdefault(key, body)
    reports = [seen[k] for k in sorted(seen)]
    status = FAIL if any(r["status"] == FAIL for r in reports) else PASS
    return {"status": status, "reports": reports}
