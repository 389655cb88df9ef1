import math

import numpy as np
import pytest

from twconj import (
    DomainMismatch,
    GroupHom,
    ImagesDoNotCommute,
    NotAHomomorphism,
    SearchBudgetExceeded,
    catalog,
    compose,
    cyclic,
    dihedral,
    direct_product,
    enumerate_automorphisms,
    enumerate_endomorphisms,
    enumerate_homs,
    hom_from_generator_images,
    identity_hom,
    inner_automorphism,
    pointwise_product,
    quaternion8,
    symmetric,
    trivial_hom,
)
from twconj.hom_engine import find_isomorphism, hom_kernel, is_inner, is_isomorphic

from oracles import euler_phi, naive_automorphisms, naive_homs


def maps(homs):
    return sorted(tuple(h.map.tolist()) for h in homs)


@pytest.mark.parametrize("name", list(catalog(12)))
def test_endomorphisms_match_oracle(name):
    G = catalog(12)[name]
    assert maps(enumerate_endomorphisms(G)) == naive_homs(G, G)
    assert maps(enumerate_automorphisms(G)) == naive_automorphisms(G)


@pytest.mark.parametrize("src, dst", [("Z4", "S3"), ("S3", "Z6"), ("V4", "Q8"), ("Q8", "V4"), ("D4", "Z2")])
def test_homs_between_groups_match_oracle(src, dst):
    G, H = catalog(12)[src], catalog(12)[dst]
    assert maps(enumerate_homs(G, H)) == naive_homs(G, H)


@pytest.mark.parametrize("m, n", [(2, 4), (4, 6), (6, 9), (5, 7), (12, 8)])
def test_hom_count_between_cyclic_groups_is_gcd(m, n):
    assert sum(1 for _ in enumerate_homs(cyclic(m), cyclic(n))) == math.gcd(m, n)


@pytest.mark.parametrize("n", range(1, 13))
def test_aut_cyclic_is_euler_phi(n):
    assert len(enumerate_automorphisms(cyclic(n))) == euler_phi(n)


@pytest.mark.parametrize("G, aut", [
    (symmetric(3), 6), (symmetric(4), 24), (quaternion8(), 24), (dihedral(4), 8), (catalog(12)["A4"], 24),
    (catalog(12)["V4"], 6), (symmetric(5), 120),
])
def test_known_automorphism_counts(G, aut):
    assert len(enumerate_automorphisms(G)) == aut


def test_product_automorphism_counts():
    S3 = symmetric(3)
    assert len(enumerate_automorphisms(direct_product([S3, S3]).group)) == 72
    assert len(enumerate_automorphisms(direct_product([S3, cyclic(4)]).group)) == 24


def test_budget_exceeded():
    with pytest.raises(SearchBudgetExceeded):
        list(enumerate_homs(symmetric(4), symmetric(4), budget=5))


def test_not_a_homomorphism_has_witness():
    G = cyclic(4)
    bad = [0, 2, 1, 3]
    with pytest.raises(NotAHomomorphism) as info:
        GroupHom(G, G, bad)
    x, y = info.value.pair
    assert bad[int(G.mul[x, y])] != int(G.mul[bad[x], bad[y]])


def test_generator_images():
    G = cyclic(6)
    h = hom_from_generator_images(G, G, [5])
    assert h.map.tolist() == [0, 5, 4, 3, 2, 1]
    with pytest.raises(NotAHomomorphism):
        hom_from_generator_images(cyclic(4), cyclic(3), [1])


def test_compose_and_inverse():
    G = symmetric(3)
    auts = enumerate_automorphisms(G)
    for f in auts:
        assert compose(f, f.inverse()) == identity_hom(G)
        for g in auts:
            assert (compose(f, g).map == f.map[g.map]).all()
    with pytest.raises(DomainMismatch):
        compose(identity_hom(G), identity_hom(cyclic(2)))


def test_pointwise_product():
    G = cyclic(5)
    a = hom_from_generator_images(G, G, [2])
    b = hom_from_generator_images(G, G, [3])
    assert pointwise_product(a, b).is_trivial
    S3 = symmetric(3)
    with pytest.raises(ImagesDoNotCommute):
        pointwise_product(identity_hom(S3), identity_hom(S3))
    assert pointwise_product(identity_hom(S3), trivial_hom(S3, S3)) == identity_hom(S3)


def test_inner_automorphisms():
    G = symmetric(3)
    inner = {inner_automorphism(G, g) for g in range(6)}
    assert len(inner) == 6
    assert all(is_inner(f) for f in enumerate_automorphisms(G))
    assert not any(is_inner(f) for f in enumerate_automorphisms(cyclic(5)) if f != identity_hom(cyclic(5)))


def test_isomorphism_search():
    assert is_isomorphic(dihedral(3), symmetric(3))
    assert not is_isomorphic(quaternion8(), dihedral(4))
    f = find_isomorphism(cyclic(6), direct_product([cyclic(2), cyclic(3)]).group)
    assert f is not None and f.is_bijective
    assert not is_isomorphic(cyclic(4), catalog(4)["V4"])


def test_kernel():
    h = hom_from_generator_images(cyclic(6), cyclic(6), [2])
    assert hom_kernel(h).elements == (0, 3)


def test_map_is_read_only():
    h = identity_hom(cyclic(3))
    with pytest.raises(ValueError):
        h.map[0] = 1
    assert isinstance(h.map, np.ndarray)
