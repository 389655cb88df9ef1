import itertools
import random

import pytest

from twconj import (
    CommutingConditionViolated,
    FactorsNotIdentical,
    GroupHom,
    NotAutomorphism,
    compose,
    cyclic,
    diag,
    diag_reidemeister,
    direct_product,
    endo_from_spec,
    enumerate_automorphisms,
    enumerate_endomorphisms,
    from_matrix,
    identity_hom,
    matrix_multiply,
    perm_endo,
    permuted_diag_endo,
    permuted_diag_reidemeister,
    reidemeister_number,
    sum_formula_reidemeister,
    symmetric,
    to_matrix,
    trivial_hom,
    wreath_embed,
    wreath_multiply,
)
from twconj.errors import FactorMismatch
from twconj.finite_group import klein4
from twconj.hom_engine import hom_from_generator_images, inner_automorphism
from twconj.product_matrix import (
    EndoMatrix,
    block_endo,
    block_triples,
    compose_perms,
    cycle_compositions,
    cycles,
    cyclic_shift_check,
    perm_inverse,
    power_product,
    product_of,
    rewrite_perm_diag,
    triangular_aut_check,
    upper_bound_check,
)

from oracles import naive_twisted_classes, table

S3 = symmetric(3)
Z3 = cyclic(3)


def neg(G):
    """Inversion on an abelian group."""
    return GroupHom(G, G, G.inv)


def brute_R(phi):
    return len(naive_twisted_classes(table(phi.domain), phi.map.tolist()))


def test_entries_are_projections_of_embeddings():
    P = product_of((S3, cyclic(2)))
    for phi in enumerate_endomorphisms(P.group)[:40]:
        M = to_matrix(P, phi)
        for i, j in itertools.product(range(2), repeat=2):
            for x in range(P.factors[j].order):
                coords = [0, 0]
                coords[j] = x
                assert M[i, j](x) == P.decode(phi(P.encode(coords)))[i]


@pytest.mark.parametrize("factors", [(cyclic(2), Z3), (Z3, Z3), (S3, cyclic(2))])
def test_monoid_isomorphism(factors):
    P = product_of(factors)
    endos = enumerate_endomorphisms(P.group)
    mats = {f: to_matrix(P, f) for f in endos}
    assert len(set(mats.values())) == len(endos)
    for f in endos:
        assert from_matrix(mats[f]) == f
    rng = random.Random(0)
    for _ in range(300):
        f, g = rng.choice(endos), rng.choice(endos)
        assert mats[compose(f, g)] == matrix_multiply(mats[f], mats[g])


def test_non_commuting_row_rejected():
    P = product_of((S3, S3))
    I = identity_hom(S3)
    with pytest.raises(CommutingConditionViolated):
        EndoMatrix(P, [[I, I], [trivial_hom(S3, S3), I]])


def test_wrong_entry_shape_rejected():
    P = product_of((S3, Z3))
    with pytest.raises(FactorMismatch):
        EndoMatrix(P, [[identity_hom(S3), identity_hom(S3)], [trivial_hom(S3, Z3), identity_hom(Z3)]])


def test_diag_formula_against_brute_force():
    homs = [inner_automorphism(S3, 1), hom_from_generator_images(cyclic(4), cyclic(4), [3]),
            identity_hom(Z3)]
    phi = from_matrix(diag(None, homs))
    assert diag_reidemeister(homs) == brute_R(phi)


class TestPermutations:
    def test_convention(self):
        P = power_product(cyclic(5), 3)
        sigma = (1, 2, 0)
        endo = perm_endo(P, sigma).endo
        sinv = perm_inverse(sigma)
        for coords in [(1, 2, 3), (4, 0, 2)]:
            out = P.decode(endo(P.encode(coords)))
            assert out == tuple(coords[sinv[i]] for i in range(3))

    def test_composition_is_multiplicative(self):
        P = power_product(Z3, 3)
        perms = list(itertools.permutations(range(3)))
        for s, t in itertools.product(perms, repeat=2):
            lhs = perm_endo(P, compose_perms(s, t)).endo
            assert lhs == compose(perm_endo(P, s).endo, perm_endo(P, t).endo)

    def test_needs_identical_factors(self):
        with pytest.raises(FactorsNotIdentical):
            perm_endo(product_of((S3, Z3)), (1, 0))

    def test_rewrite_rule(self):
        P = power_product(S3, 3)
        auts = enumerate_automorphisms(S3)
        rng = random.Random(1)
        for sigma in itertools.permutations(range(3)):
            homs = [rng.choice(auts) for _ in range(3)]
            shifted, _ = rewrite_perm_diag(sigma, homs)
            left = matrix_multiply(perm_endo(P, sigma).matrix, diag(P, homs))
            right = matrix_multiply(diag(P, shifted), perm_endo(P, sigma).matrix)
            assert left == right

    def test_cycles(self):
        assert cycles((1, 2, 0, 3)) == [(0, 1, 2), (3,)]
        assert cycles(()) == []


class TestWreath:
    def test_embedding_is_a_homomorphism(self):
        auts = enumerate_automorphisms(S3)
        rng = random.Random(2)
        perms = list(itertools.permutations(range(3)))
        for _ in range(60):
            a = ([rng.choice(auts) for _ in range(3)], rng.choice(perms))
            b = ([rng.choice(auts) for _ in range(3)], rng.choice(perms))
            prod = wreath_multiply(a, b)
            assert wreath_embed(*prod) == compose(wreath_embed(*a), wreath_embed(*b))

    def test_embedding_is_injective(self):
        auts = enumerate_automorphisms(S3)
        images = {wreath_embed(homs, sigma)
                  for homs in itertools.product(auts, repeat=2)
                  for sigma in itertools.permutations(range(2))}
        assert len(images) == 72

    def test_rejects_non_automorphism(self):
        with pytest.raises(NotAutomorphism):
            wreath_embed([identity_hom(Z3), trivial_hom(Z3, Z3)], (1, 0))


class TestPermutedDiagonal:
    def test_swap_with_inversions(self):
        inv = neg(Z3)
        phi = permuted_diag_endo([inv, inv], (1, 0))
        assert permuted_diag_reidemeister([inv, inv], (1, 0)) == 3 == brute_R(phi)

    def test_cycle_composites(self):
        homs = [hom_from_generator_images(cyclic(7), cyclic(7), [k]) for k in (2, 3, 5)]
        (cyc, f), = cycle_compositions(homs, (1, 2, 0))
        assert len(cyc) == 3
        assert f == compose(homs[0], compose(homs[1], homs[2]))

    @pytest.mark.parametrize("G", [Z3, S3, cyclic(4)])
    def test_formula_against_brute_force(self, G):
        endos = enumerate_endomorphisms(G)
        rng = random.Random(3)
        for n in (2, 3):
            for sigma in itertools.permutations(range(n)):
                for _ in range(15):
                    homs = [rng.choice(endos) for _ in range(n)]
                    phi = permuted_diag_endo(homs, sigma)
                    assert permuted_diag_reidemeister(homs, sigma) == brute_R(phi)

    def test_cyclic_shift(self):
        endos = enumerate_endomorphisms(S3)
        assert all(cyclic_shift_check(pair) for pair in itertools.product(endos, repeat=2))


class TestSumFormula:
    def test_example(self):
        I = identity_hom(Z3)
        phi = block_endo(I, I, neg(Z3))
        assert sum_formula_reidemeister(I, I, neg(Z3)) == 3 == brute_R(phi)

    @pytest.mark.parametrize("H, K", [(cyclic(2), cyclic(2)), (Z3, cyclic(2)), (cyclic(2), S3), (S3, Z3)])
    def test_exhaustive_small(self, H, K):
        for alpha, beta, delta in block_triples(H, K):
            phi = block_endo(alpha, beta, delta)
            assert sum_formula_reidemeister(alpha, beta, delta) == brute_R(phi)
            assert upper_bound_check(alpha, beta, delta)

    def test_non_commuting_block_rejected(self):
        I = identity_hom(S3)
        with pytest.raises(CommutingConditionViolated):
            block_endo(I, I, I)


class TestTriangular:
    def test_s3_times_z4_is_lower_triangular(self):
        report = triangular_aut_check(product_of((S3, cyclic(4))))
        assert report.passed and report.hypothesis_status == "satisfied"
        assert report.details["shape"] == "lower"
        assert report.computed_order == 24

    def test_hypothesis_failure_reported(self):
        report = triangular_aut_check(product_of((cyclic(2), cyclic(2))))
        assert report.hypothesis_status == "fails"
        assert report.counterexample["not_lower"] and report.counterexample["not_upper"]


class TestSpecs:
    def test_diag_spec(self):
        P = product_of((Z3, Z3))
        parsed = endo_from_spec(P, {"kind": "diag", "homs": ["id", {"images": [2]}]})
        assert parsed.formula == 3 == reidemeister_number(P.group, parsed.endo)

    def test_perm_spec(self):
        P = product_of((S3, S3))
        parsed = endo_from_spec(P, {"kind": "perm", "sigma": [1, 0]})
        assert parsed.formula == reidemeister_number(P.group, parsed.endo) == 3

    def test_matrix_spec_round_trips_through_json(self):
        P = product_of((klein4(), klein4()))
        phi = enumerate_automorphisms(P.group)[17]
        M = to_matrix(P, phi)
        parsed = endo_from_spec(P, M.to_json())
        assert parsed.endo == phi and parsed.formula is None

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            endo_from_spec(product_of((Z3,)), {"kind": "spiral"})
