import random

import pytest

from twconj import (
    NotAutomorphism,
    NotInvariant,
    NotNormal,
    catalog,
    compose,
    cyclic,
    direct_product,
    enumerate_automorphisms,
    enumerate_endomorphisms,
    fixed_points,
    hom_from_generator_images,
    identity_hom,
    inner_automorphism,
    jabara_bound,
    quotient_endo,
    reidemeister_number,
    reidemeister_partition,
    reidemeister_spectrum,
    symmetric,
    twisted_stabilizer,
)
from twconj.finite_group import conjugacy_classes
from twconj.twisted import check_conjugate_invariance, check_inner_invariance, jabara_bound_check

from oracles import naive_fixed_count, naive_twisted_classes, table

SMALL = catalog(12)

# spectra computed by the brute-force oracle in oracles.py and frozen here
FROZEN_SPECTRA = {
    "trivial": [1], "Z2": [2], "Z3": [1, 3], "Z4": [2, 4], "Z5": [1, 5], "Z6": [2, 6],
    "Z7": [1, 7], "Z8": [2, 4, 8], "Z9": [1, 3, 9], "Z10": [2, 10], "Z11": [1, 11],
    "Z12": [2, 4, 6, 12], "V4": [1, 2, 4], "Q8": [2, 3, 5], "D3": [3], "D4": [3, 5],
    "D5": [2, 4], "D6": [4, 6], "S3": [3], "A4": [2, 4],
}


@pytest.mark.parametrize("name", list(SMALL))
def test_partition_matches_naive_orbits(name):
    G = SMALL[name]
    t = table(G)
    for phi in enumerate_endomorphisms(G):
        part = reidemeister_partition(G, phi)
        assert [list(c) for c in part.classes] == naive_twisted_classes(t, phi.map.tolist())


@pytest.mark.parametrize("name", list(FROZEN_SPECTRA))
def test_frozen_spectra(name):
    assert [int(r) for r in reidemeister_spectrum(SMALL[name])] == FROZEN_SPECTRA[name]


def test_product_spectrum_s3_squared():
    P = direct_product([symmetric(3), symmetric(3)])
    assert [int(r) for r in reidemeister_spectrum(P.group)] == [3, 9]


def test_identity_gives_conjugacy_classes():
    for G in catalog(24).values():
        assert int(reidemeister_number(G, identity_hom(G))) == len(conjugacy_classes(G))


def test_partition_covers_group():
    G = SMALL["Q8"]
    for phi in enumerate_endomorphisms(G):
        part = reidemeister_partition(G, phi)
        flat = sorted(x for c in part.classes for x in c)
        assert flat == list(range(G.order))
        for i, c in enumerate(part.classes):
            assert part.representatives[i] == min(c)
            assert all(part.class_of[x] == i for x in c)


def test_twisted_stabilizer_is_fix_of_twisted_map():
    for G in SMALL.values():
        for phi in enumerate_endomorphisms(G)[:10]:
            for a in range(G.order):
                stab = twisted_stabilizer(G, phi, a)
                twisted = compose(inner_automorphism(G, a), phi)
                assert stab.elements == fixed_points(twisted).elements


def test_orbit_stabilizer():
    G = SMALL["D6"]
    for phi in enumerate_endomorphisms(G):
        part = reidemeister_partition(G, phi)
        for c in part.classes:
            assert len(c) * twisted_stabilizer(G, phi, c[0]).order == G.order


def test_invariances_exhaustive_on_s3():
    G = symmetric(3)
    auts = enumerate_automorphisms(G)
    for phi in enumerate_endomorphisms(G):
        assert all(check_inner_invariance(G, phi, g) for g in range(G.order))
        assert all(check_conjugate_invariance(G, phi, psi) for psi in auts)


def test_conjugate_invariance_needs_automorphism():
    G = cyclic(4)
    zero = hom_from_generator_images(G, G, [0])
    with pytest.raises(NotAutomorphism):
        check_conjugate_invariance(G, identity_hom(G), zero)


def test_fixed_points_against_oracle():
    for G in SMALL.values():
        for phi in enumerate_automorphisms(G):
            assert fixed_points(phi).order == naive_fixed_count(phi.map.tolist())


def test_jabara_bound_values():
    assert [jabara_bound(r) for r in range(1, 5)] == [4, 16, 256, 65536]
    assert jabara_bound(5) == 2 ** 32


def test_jabara_bound_on_catalog():
    for G in catalog(24).values():
        for phi in enumerate_automorphisms(G):
            assert jabara_bound_check(G, phi)


def test_quotient_endo():
    G = cyclic(12)
    N = G.subgroup([0, 4, 8])
    phi = hom_from_generator_images(G, G, [5])
    Q = quotient_endo(G, N, phi)
    assert Q.group.order == 4
    assert Q.group.is_abelian
    # x -> 5x on Z12 induces x -> x on Z12 / <4> = Z4
    assert Q.endo.map.tolist() == list(range(4))
    for x in range(12):
        assert Q.projection[phi.map[x]] == Q.endo.map[Q.projection[x]]


def test_quotient_errors():
    S3 = symmetric(3)
    flip = S3.generated_subgroup([S3.generators[0]])
    with pytest.raises(NotNormal):
        quotient_endo(S3, flip, identity_hom(S3))
    V = direct_product([cyclic(2), cyclic(2)])
    first = V.embedded_factor(0)
    swap = next(f for f in enumerate_automorphisms(V.group) if not first.mask[f.map[first.array]].all())
    with pytest.raises(NotInvariant):
        quotient_endo(V.group, first, swap)


def test_random_endos_of_larger_group():
    rng = random.Random(7)
    G = symmetric(4)
    t = table(G)
    endos = enumerate_endomorphisms(G)
    for phi in rng.sample(endos, 10):
        assert len(reidemeister_partition(G, phi)) == len(naive_twisted_classes(t, phi.map.tolist()))
