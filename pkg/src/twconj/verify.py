"""Sweeps that compare every formula path with direct computation.

Each suite returns a :class:`SuiteResult`.  Exhaustive mode walks every
case; sampled mode draws ``samples`` cases per configuration from a seeded
:class:`random.Random`, so identical arguments give identical results.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Callable

from .errors import HypothesisViolated
from .extnat import Spectrum
from .finite_group import catalog, cyclic, direct_product, symmetric
from .hom_engine import compose, enumerate_automorphisms, enumerate_endomorphisms, inner_automorphism
from .product_matrix import (
    block_endo,
    block_triples,
    cyclic_shift_check,
    diag,
    diag_reidemeister,
    from_matrix,
    matrix_multiply,
    permuted_diag_endo,
    permuted_diag_reidemeister,
    product_of,
    sum_formula_reidemeister,
    to_matrix,
)
from .reports import _jsonable
from .spectra import check_product_containment, check_wreath_spectrum_equality
from .structure import (
    aut_matrix_pattern_check,
    characteristic_factor_check,
    johnson_decomposition_check,
    spectrum_of_centreless_product,
)
from .twisted import (
    check_conjugate_invariance,
    check_inner_invariance,
    jabara_bound_check,
    reidemeister_number,
    reidemeister_spectrum,
)
from .zdirectsum import (
    FinSuppIntSeq,
    phi_example,
    phi_minus_id,
    psi_example,
    random_sequence,
    solve_phi_minus_id,
)

DEFAULT_SEED = 1729
TRIPLE_CAP = 300_000  # exhaustive n = 3 cyclic shifts only below this many triples


@dataclass
class SuiteResult:
    lemma: str
    cases: int = 0
    failures: int = 0
    skipped: int = 0
    counterexample: object = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.cases > 0

    def record(self, ok: bool, witness=None) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = witness() if callable(witness) else witness

    def to_json(self) -> dict:
        return {"lemma": self.lemma, "passed": self.passed, "cases": self.cases,
                "failures": self.failures, "skipped": self.skipped,
                "counterexample": _jsonable(self.counterexample),
                "details": _jsonable(self.details)}


@dataclass
class Options:
    exhaustive: bool = False
    samples: int = 200
    seed: int = DEFAULT_SEED
    max_order: int | None = None


def _maps(*homs):
    return [h.map.tolist() for h in homs]


def _draw(rng: random.Random, pool, k: int, opts: Options):
    """All ``k``-tuples from ``pool`` when exhaustive, else ``opts.samples`` draws."""
    if opts.exhaustive:
        return list(itertools.product(pool, repeat=k))
    return [tuple(rng.choice(pool) for _ in range(k)) for _ in range(opts.samples)]


BASE_FACTORS = ("Z2", "Z3", "Z4", "S3")


def _base(name: str):
    return {"Z2": cyclic(2), "Z3": cyclic(3), "Z4": cyclic(4), "S3": symmetric(3)}[name]


# -- suites --------------------------------------------------------------------

def monoid_iso(opts: Options) -> SuiteResult:
    res = SuiteResult("monoid-iso")
    rng = random.Random(opts.seed)
    products = [("Z2", "Z3"), ("Z3", "Z3"), ("S3", "Z2")]
    if opts.max_order:
        products = [p for p in itertools.product(BASE_FACTORS, repeat=2)
                    if math.prod(_base(f).order for f in p) <= opts.max_order]
    for names in products:
        P = product_of(tuple(_base(n) for n in names))
        endos = enumerate_endomorphisms(P.group)
        mats = {f: to_matrix(P, f) for f in endos}
        for f in endos:
            res.record(from_matrix(mats[f]) == f, lambda: {"product": names, "map": f.map.tolist()})
        for f, g in _draw(rng, endos, 2, opts):
            ok = mats[compose(f, g)] == matrix_multiply(mats[f], mats[g])
            res.record(ok, lambda: {"product": names, "f": f.map.tolist(), "g": g.map.tolist()})
        res.details[" x ".join(names)] = len(endos)
    return res


def diag_product(opts: Options) -> SuiteResult:
    res = SuiteResult("diag-product")
    rng = random.Random(opts.seed)
    cap = opts.max_order or 81
    groups = {n: _base(n) for n in BASE_FACTORS}
    endos = {n: enumerate_endomorphisms(G) for n, G in groups.items()}
    for k in itertools.count(1):
        combos = [c for c in itertools.combinations_with_replacement(BASE_FACTORS, k)
                  if math.prod(groups[n].order for n in c) <= cap]
        if not combos:
            break
        for combo in combos:
            P = product_of(tuple(groups[n] for n in combo))
            pools = [endos[n] for n in combo]
            tuples = (itertools.product(*pools) if opts.exhaustive
                      else (tuple(rng.choice(p) for p in pools) for _ in range(opts.samples)))
            for homs in tuples:
                formula = diag_reidemeister(homs)
                brute = reidemeister_number(P.group, from_matrix(diag(P, homs)))
                res.record(formula == brute, lambda: {"factors": combo, "homs": _maps(*homs),
                                                      "formula": formula, "brute": brute})
    return res


def permuted_diag(opts: Options) -> SuiteResult:
    res = SuiteResult("permuted-diag")
    rng = random.Random(opts.seed)
    for name in ("Z3", "S3"):
        G = _base(name)
        pool = enumerate_endomorphisms(G)
        for n in (2, 3):
            for sigma in itertools.permutations(range(n)):
                for homs in _draw(rng, pool, n, opts):
                    formula = permuted_diag_reidemeister(homs, sigma)
                    phi = permuted_diag_endo(homs, sigma)
                    brute = reidemeister_number(phi.domain, phi)
                    res.record(formula == brute, lambda: {"group": name, "sigma": sigma,
                                                          "homs": _maps(*homs),
                                                          "formula": formula, "brute": brute})
    return res


def _small_catalog(opts: Options, default: int):
    return catalog(opts.max_order or default)


def cyclic_shift(opts: Options) -> SuiteResult:
    res = SuiteResult("cyclic-shift")
    rng = random.Random(opts.seed)
    for name, G in _small_catalog(opts, 12).items():
        pool = enumerate_endomorphisms(G)
        for homs in _draw(rng, pool, 2, opts):
            res.record(cyclic_shift_check(homs), lambda: {"group": name, "homs": _maps(*homs)})
        if opts.exhaustive and len(pool) ** 3 <= TRIPLE_CAP:
            triples = itertools.product(pool, repeat=3)
        else:
            count = max(opts.samples, 2000) if opts.exhaustive else opts.samples
            triples = [tuple(rng.choice(pool) for _ in range(3)) for _ in range(count)]
            res.details.setdefault("sampled_triples", []).append(name)
        for homs in triples:
            res.record(cyclic_shift_check(homs), lambda: {"group": name, "homs": _maps(*homs)})
    return res


def sum_formula(opts: Options, bound_only: bool = False) -> SuiteResult:
    res = SuiteResult("upper-bound" if bound_only else "sum-formula")
    rng = random.Random(opts.seed)
    cap = opts.max_order or 36
    for hn, kn in itertools.product(BASE_FACTORS, repeat=2):
        H, K = _base(hn), _base(kn)
        if H.order * K.order > cap:
            continue
        triples = list(block_triples(H, K))
        if not opts.exhaustive and len(triples) > opts.samples:
            triples = rng.sample(triples, opts.samples)
        for alpha, beta, delta in triples:
            phi = block_endo(alpha, beta, delta)
            brute = reidemeister_number(phi.domain, phi)
            bound = reidemeister_number(H, alpha) * reidemeister_number(K, delta)
            ok = brute <= bound
            if not bound_only:
                formula = sum_formula_reidemeister(alpha, beta, delta)
                ok = ok and formula == brute
            res.record(ok, lambda: {"pair": [hn, kn], "alpha": alpha.map.tolist(),
                                    "beta": beta.map.tolist(), "delta": delta.map.tolist(),
                                    "brute": brute, "bound": bound})
    return res


def inner_invariance(opts: Options) -> SuiteResult:
    res = SuiteResult("inner-invariance")
    rng = random.Random(opts.seed)
    for name, G in _small_catalog(opts, 12).items():
        pool = enumerate_endomorphisms(G)
        cases = (itertools.product(pool, range(G.order)) if opts.exhaustive
                 else [(rng.choice(pool), rng.randrange(G.order)) for _ in range(opts.samples)])
        for phi, g in cases:
            res.record(check_inner_invariance(G, phi, g),
                       lambda: {"group": name, "phi": phi.map.tolist(), "g": g})
    return res


def conj_invariance(opts: Options) -> SuiteResult:
    res = SuiteResult("conj-invariance")
    rng = random.Random(opts.seed)
    for name, G in _small_catalog(opts, 12).items():
        pool = enumerate_endomorphisms(G)
        auts = enumerate_automorphisms(G)
        cases = (itertools.product(pool, auts) if opts.exhaustive
                 else [(rng.choice(pool), rng.choice(auts)) for _ in range(opts.samples)])
        for phi, psi in cases:
            res.record(check_conjugate_invariance(G, phi, psi),
                       lambda: {"group": name, "phi": phi.map.tolist(), "psi": psi.map.tolist()})
    return res


def jabara(opts: Options) -> SuiteResult:
    res = SuiteResult("jabara")
    for name, G in _small_catalog(opts, 24).items():
        for phi in enumerate_automorphisms(G):
            if reidemeister_number(G, phi) > 5:
                res.skipped += 1
                continue
            res.record(jabara_bound_check(G, phi), lambda: {"group": name, "phi": phi.map.tolist()})
    return res


def johnson(opts: Options) -> SuiteResult:
    res = SuiteResult("johnson")
    S3 = symmetric(3)
    configs = [([S3], [1]), ([S3], [2])]
    if opts.exhaustive:
        configs.append(([S3, symmetric(4)], [1, 1]))
    for factors, mult in configs:
        label = "x".join(f"{F.label}^{r}" for F, r in zip(factors, mult))
        report = johnson_decomposition_check(factors, mult)
        res.record(report.passed, report.to_json())
        pattern = aut_matrix_pattern_check([F for F, r in zip(factors, mult) for _ in range(r)])
        res.record(pattern.passed, pattern.to_json())
        P = direct_product([F for F, r in zip(factors, mult) for _ in range(r)])
        formula = spectrum_of_centreless_product(factors, mult)
        brute = reidemeister_spectrum(P.group)
        res.record(formula == brute, {"config": label, "formula": formula, "brute": brute})
        res.details[label] = {"aut_order": report.computed_order, "spectrum": brute}
    return res


def wreath_spectrum(opts: Options) -> SuiteResult:
    res = SuiteResult("wreath-spectrum")
    cap = opts.max_order or 64
    for name, G in catalog(int(math.isqrt(cap))).items():
        report = check_wreath_spectrum_equality(G, 2)
        res.record(report.passed, lambda: {"group": name, **report.to_json()})
        res.details[name] = {"hypothesis": report.hypothesis_status,
                             "spectrum": report.details["spectrum"]}
    return res


def characteristic_factor(opts: Options) -> SuiteResult:
    res = SuiteResult("characteristic-factor")
    S3 = symmetric(3)
    cap = opts.max_order or 72
    for name, H in catalog(cap // S3.order).items():
        try:
            report = characteristic_factor_check([S3], H)
        except HypothesisViolated:
            res.skipped += 1
            continue
        res.record(report.passed, lambda: {"H": name, **report.to_json()})
        res.details[name] = report.computed_order
    return res


def product_containment(opts: Options) -> SuiteResult:
    res = SuiteResult("product-containment")
    cap = opts.max_order or 36
    groups = catalog(cap // 2)
    for (n1, G1), (n2, G2) in itertools.combinations_with_replacement(groups.items(), 2):
        if G1.order * G2.order > cap:
            continue
        report = check_product_containment([G1, G2])
        res.record(report.passed, lambda: {"factors": [n1, n2], **report.to_json()})
    for name, G in catalog(math.isqrt(cap)).items():
        report = check_wreath_spectrum_equality(G, 2)
        res.record(report.details["contained"], lambda: {"group": name, **report.to_json()})
    return res


def zdirectsum(opts: Options) -> SuiteResult:
    res = SuiteResult("zdirectsum")
    rng = random.Random(opts.seed)
    count = 1000 if opts.exhaustive else opts.samples
    e1 = FinSuppIntSeq.unit(1)
    res.record(phi_example(e1) == e1, {"reason": "e_1 is not fixed"})
    for _ in range(count):
        a = random_sequence(rng)
        res.record(psi_example(phi_example(a)) == a and phi_example(psi_example(a)) == a,
                   lambda: {"sequence": a.to_json()})
        t = random_sequence(rng)
        pre = solve_phi_minus_id(t, check=False)
        res.record(phi_minus_id(pre) == t, lambda: {"target": t.to_json()})
    return res


SUITES: dict[str, Callable[[Options], SuiteResult]] = {
    "monoid-iso": monoid_iso,
    "diag-product": diag_product,
    "permuted-diag": permuted_diag,
    "cyclic-shift": cyclic_shift,
    "sum-formula": sum_formula,
    "upper-bound": lambda opts: sum_formula(opts, bound_only=True),
    "inner-invariance": inner_invariance,
    "conj-invariance": conj_invariance,
    "jabara": jabara,
    "johnson": johnson,
    "wreath-spectrum": wreath_spectrum,
    "characteristic-factor": characteristic_factor,
    "product-containment": product_containment,
    "zdirectsum": zdirectsum,
}


def run_suite(lemma: str, opts: Options | None = None) -> SuiteResult:
    if lemma not in SUITES:
        raise KeyError(f"unknown lemma id {lemma!r}")
    return SUITES[lemma](opts or Options())
