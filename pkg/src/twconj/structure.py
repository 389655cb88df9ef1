"""Automorphisms of products of centreless, directly indecomposable groups.

The checks here enumerate the automorphism group of a concrete product and
compare its matrices with the shapes predicted for such products: a
permutation pattern whose non-zero entries are isomorphisms, block-diagonal
wreath factors for repeated factors, and a lower-triangular shape when a
factor ``H`` shares no direct factor with the others.  Hypotheses are
verified first and :class:`HypothesisViolated` is raised when they fail.
"""
from __future__ import annotations

import itertools
import math
from typing import Sequence

import numpy as np

from .errors import HypothesisViolated
from .extnat import Spectrum
from .finite_group import (
    FiniteGroup,
    Subgroup,
    center,
    direct_product,
    internal_direct_product_check,
    normal_subgroups,
)
from .hom_engine import (
    DEFAULT_BUDGET,
    compose,
    enumerate_automorphisms,
    enumerate_homs,
    is_isomorphic,
)
from .product_matrix import compose_perms, perm_inverse, to_matrix
from .reports import Report
from .spectra import nfold_union, spectrum_product
from .twisted import reidemeister_spectrum


def is_centerless(G: FiniteGroup) -> bool:
    return center(G).is_trivial()


def direct_decompositions(G: FiniteGroup, budget: int = 100_000):
    """Yield pairs ``(N, M)`` of non-trivial normal subgroups with ``G = N x M``."""
    normals = normal_subgroups(G, budget=budget)
    by_order: dict[int, list[Subgroup]] = {}
    for N in normals:
        by_order.setdefault(N.order, []).append(N)
    for N in normals:
        if N.order in (1, G.order) or G.order % N.order:
            continue
        for M in by_order.get(G.order // N.order, []):
            if internal_direct_product_check(G, [N, M]):
                yield N, M


def is_directly_indecomposable(G: FiniteGroup, budget: int = 100_000) -> bool:
    return next(direct_decompositions(G, budget), None) is None


def has_direct_factor_isomorphic_to(H: FiniteGroup, F: FiniteGroup, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether ``H = N x M`` with ``N`` isomorphic to ``F``."""
    if F.order == 1:
        return True
    if F.order == H.order:
        return is_isomorphic(H, F, budget)
    for N, _ in direct_decompositions(H):
        if N.order == F.order and is_isomorphic(N.as_group()[0], F, budget):
            return True
    return False


def _require_centreless_indecomposable(factors: Sequence[FiniteGroup]) -> None:
    for i, F in enumerate(factors):
        name = F.label or f"factor {i}"
        if F.order == 1:
            raise HypothesisViolated(f"{name} is trivial")
        if not is_centerless(F):
            raise HypothesisViolated(f"{name} has a non-trivial centre")
        if not is_directly_indecomposable(F):
            raise HypothesisViolated(f"{name} is directly decomposable")


def permutation_pattern(M) -> tuple[int, ...] | None:
    """The permutation ``s`` with non-zero entries exactly at ``(i, s^-1(i))``, or None.

    Returned in the same convention as the coordinate permutations, so that
    the pattern of a composite is the composite of the patterns.
    """
    support = M.support()
    if not ((support.sum(axis=0) == 1).all() and (support.sum(axis=1) == 1).all()):
        return None
    columns = tuple(int(np.flatnonzero(row)[0]) for row in support)  # row i -> s^-1(i)
    return perm_inverse(columns)


def aut_matrix_pattern_check(factors: Sequence[FiniteGroup], budget: int = DEFAULT_BUDGET,
                             max_pairs: int = 20_000) -> Report:
    """Every automorphism of the product is a permutation matrix of isomorphisms.

    Also checks on up to ``max_pairs`` pairs that reading off the
    permutation is compatible with composition.
    """
    factors = list(factors)
    _require_centreless_indecomposable(factors)
    P = direct_product(factors)
    auts = enumerate_automorphisms(P.group, budget=budget)
    patterns = []
    for idx, phi in enumerate(auts):
        M = to_matrix(P, phi)
        sigma = permutation_pattern(M)
        if sigma is None:
            return Report("aut-matrix-pattern", False, "satisfied",
                          {"automorphism": idx, "map": phi.map.tolist(), "support": M.support().tolist()},
                          computed_order=len(auts))
        for i in range(P.n):
            entry = M.entries[i][perm_inverse(sigma)[i]]
            if not entry.is_bijective:
                return Report("aut-matrix-pattern", False, "satisfied",
                              {"automorphism": idx, "entry": [i, perm_inverse(sigma)[i]],
                               "reason": "non-trivial entry is not an isomorphism"},
                              computed_order=len(auts))
        patterns.append(sigma)
    index = {f: i for i, f in enumerate(auts)}
    pairs = itertools.product(range(len(auts)), repeat=2)
    for a, b in itertools.islice(pairs, max_pairs):
        c = index[compose(auts[a], auts[b])]
        if patterns[c] != compose_perms(patterns[a], patterns[b]):
            return Report("aut-matrix-pattern", False, "satisfied",
                          {"pair": [a, b], "reason": "pattern map is not multiplicative"},
                          computed_order=len(auts))
    counts: dict = {}
    for s in patterns:
        counts[s] = counts.get(s, 0) + 1
    return Report("aut-matrix-pattern", True, "satisfied", computed_order=len(auts),
                  details={"patterns": [list(s) for s in patterns],
                           "pattern_counts": {str(list(s)): c for s, c in sorted(counts.items())}})


def _require_pairwise_non_isomorphic(factors: Sequence[FiniteGroup], budget: int) -> None:
    for (i, F), (j, G) in itertools.combinations(enumerate(factors), 2):
        if is_isomorphic(F, G, budget):
            raise HypothesisViolated(f"factors {i} and {j} are isomorphic")


def johnson_decomposition_check(distinct_factors: Sequence[FiniteGroup], multiplicities: Sequence[int],
                                budget: int = DEFAULT_BUDGET) -> Report:
    """``Aut`` of ``prod G_i^{r_i}`` against ``prod Aut(G_i) wr S_{r_i}``.

    Verifies the order identity and that each automorphism is block diagonal
    with a permutation-of-automorphisms pattern inside each block.
    """
    distinct_factors = list(distinct_factors)
    multiplicities = [int(r) for r in multiplicities]
    if len(distinct_factors) != len(multiplicities) or any(r < 1 for r in multiplicities):
        raise ValueError("need one positive multiplicity per factor")
    _require_centreless_indecomposable(distinct_factors)
    _require_pairwise_non_isomorphic(distinct_factors, budget)
    factors = [F for F, r in zip(distinct_factors, multiplicities) for _ in range(r)]
    block = [b for b, r in enumerate(multiplicities) for _ in range(r)]
    P = direct_product(factors)
    auts = enumerate_automorphisms(P.group, budget=budget)
    expected = 1
    for F, r in zip(distinct_factors, multiplicities):
        expected *= len(enumerate_automorphisms(F, budget=budget)) ** r * math.factorial(r)
    for idx, phi in enumerate(auts):
        M = to_matrix(P, phi)
        support = M.support()
        ok = (support.sum(axis=0) == 1).all() and (support.sum(axis=1) == 1).all()
        for i, j in zip(*support.nonzero()):
            ok = ok and block[i] == block[j] and M.entries[i][j].is_automorphism
        if not ok:
            return Report("johnson", False, "satisfied",
                          {"automorphism": idx, "support": support.tolist()},
                          computed_order=len(auts), expected_order=expected)
    return Report("johnson", len(auts) == expected, "satisfied",
                  None if len(auts) == expected else {"reason": "order mismatch"},
                  computed_order=len(auts), expected_order=expected)


def characteristic_factor_check(G_factors: Sequence[FiniteGroup], H: FiniteGroup,
                                budget: int = DEFAULT_BUDGET) -> Report:
    """``H`` is characteristic in ``G_1 x .. x G_n x H``.

    Hypotheses: each ``G_i`` centreless and directly indecomposable, and
    ``H`` without a direct factor isomorphic to any ``G_i``.  Checks that
    every automorphism maps the embedded ``H`` onto itself, that its matrix
    has zero upper-right block, automorphisms on the diagonal blocks and a
    lower-left block landing in ``Z(H)``, and that the automorphism count is
    ``|Aut(G)| |Aut(H)| |Hom(G, Z(H))|``.
    """
    G_factors = list(G_factors)
    _require_centreless_indecomposable(G_factors)
    for i, F in enumerate(G_factors):
        if H.order > 1 and has_direct_factor_isomorphic_to(H, F, budget):
            raise HypothesisViolated(f"H has a direct factor isomorphic to factor {i}")
    n = len(G_factors)
    P = direct_product(G_factors + [H])
    auts = enumerate_automorphisms(P.group, budget=budget)
    embedded_H = P.embed[n]
    h_mask = np.zeros(P.group.order, dtype=bool)
    h_mask[embedded_H] = True
    ZH = center(H)

    G = direct_product(G_factors).group if n > 1 else G_factors[0]
    ZH_group, ZH_incl = ZH.as_group()
    hom_to_centre = sum(1 for _ in enumerate_homs(G, ZH_group, budget=budget))
    expected = (len(enumerate_automorphisms(G, budget=budget))
                * len(enumerate_automorphisms(H, budget=budget)) * hom_to_centre)

    for idx, phi in enumerate(auts):
        image = phi.map[embedded_H]
        if not h_mask[image].all():
            return Report("characteristic-factor", False, "satisfied",
                          {"automorphism": idx, "reason": "embedded H is not preserved",
                           "map": phi.map.tolist()},
                          computed_order=len(auts), expected_order=expected)
        M = to_matrix(P, phi)
        support = M.support()
        if support[:n, n].any():
            return Report("characteristic-factor", False, "satisfied",
                          {"automorphism": idx, "reason": "upper-right block is non-zero"},
                          computed_order=len(auts), expected_order=expected)
        if not M.entries[n][n].is_automorphism:
            return Report("characteristic-factor", False, "satisfied",
                          {"automorphism": idx, "reason": "H-block is not an automorphism"},
                          computed_order=len(auts), expected_order=expected)
        for j in range(n):
            if not ZH.mask[M.entries[n][j].map].all():
                return Report("characteristic-factor", False, "satisfied",
                              {"automorphism": idx, "entry": [n, j], "reason": "image not in Z(H)"},
                              computed_order=len(auts), expected_order=expected)
    passed = len(auts) == expected
    return Report("characteristic-factor", passed, "satisfied",
                  None if passed else {"reason": "order mismatch"},
                  computed_order=len(auts), expected_order=expected,
                  details={"hom_G_to_ZH": hom_to_centre})


def centreless_product_spectrum_formula(spectra: Sequence, multiplicities: Sequence[int]) -> Spectrum:
    """``prod_i (Spec_i^(1) U .. U Spec_i^(r_i))`` on the set level."""
    return spectrum_product([nfold_union(S, r) for S, r in zip(spectra, multiplicities)])


def spectrum_of_centreless_product(distinct_factors: Sequence[FiniteGroup], multiplicities: Sequence[int],
                                   budget: int = DEFAULT_BUDGET) -> Spectrum:
    """Spectrum of ``prod G_i^{r_i}`` from the factor spectra, hypotheses verified."""
    distinct_factors = list(distinct_factors)
    _require_centreless_indecomposable(distinct_factors)
    _require_pairwise_non_isomorphic(distinct_factors, budget)
    spectra = [reidemeister_spectrum(F, budget=budget) for F in distinct_factors]
    return centreless_product_spectrum_formula(spectra, multiplicities)
