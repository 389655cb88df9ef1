import json

import numpy as np
import pytest

from twconj import (
    FiniteGroup,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    OrderCapExceeded,
    UnknownPreset,
    alternating,
    catalog,
    center,
    conjugacy_classes,
    cyclic,
    dihedral,
    direct_product,
    from_cayley_table,
    klein4,
    load_group_json,
    parse_group_spec,
    preset,
    quaternion8,
    symmetric,
)
from twconj.finite_group import internal_direct_product_check, max_order, normal_subgroups

from oracles import naive_center, naive_conjugacy_class_count, table


@pytest.mark.parametrize("G, order", [
    (cyclic(1), 1), (cyclic(7), 7), (dihedral(4), 8), (symmetric(3), 6), (symmetric(4), 24),
    (alternating(4), 12), (alternating(5), 60), (quaternion8(), 8), (klein4(), 4),
])
def test_preset_orders(G, order):
    assert G.order == order
    assert (G.mul[0] == np.arange(order)).all()


def test_tables_are_groups():
    for G in catalog(24).values():
        t = G.mul
        n = G.order
        assert all(sorted(row) == list(range(n)) for row in t.tolist())
        for a in range(n):
            # (a b) c == a (b c) for all b, c
            assert (t[t[a]] == t[a][t]).all()


def test_cyclic_one_is_trivial():
    G = cyclic(1)
    assert G.order == 1 and G.generators == (0,)


def test_symmetric_beyond_five_rejected():
    with pytest.raises(UnknownPreset):
        preset("symmetric", 6)


def test_order_cap(monkeypatch):
    monkeypatch.setenv("TWCONJ_MAX_ORDER", "10")
    assert max_order() == 10
    with pytest.raises(OrderCapExceeded):
        preset("cyclic", 11)
    with pytest.raises(OrderCapExceeded):
        direct_product([cyclic(4), cyclic(3)])


class TestTableValidation:
    def test_not_closed(self):
        with pytest.raises(NotClosed):
            from_cayley_table([[0, 1], [1, 2]])

    def test_no_identity(self):
        with pytest.raises(NoIdentity):
            from_cayley_table([[1, 0], [0, 0]])

    def test_no_inverse(self):
        with pytest.raises(NoInverse):
            from_cayley_table([[0, 1], [1, 1]])

    def test_not_associative_names_a_triple(self):
        bad = [[0, 1, 2], [1, 2, 0], [2, 0, 0]]
        with pytest.raises(NotAssociative) as info:
            from_cayley_table(bad)
        a, b, c = info.value.triple
        assert bad[bad[a][b]][c] != bad[a][bad[b][c]]

    def test_identity_relabelled_to_zero(self):
        # Z3 with identity stored as element 2
        t = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
        G = from_cayley_table(t, names=["a", "b", "e"])
        assert G.name(0) == "e"
        assert (G.mul[0] == np.arange(3)).all()
        assert G.is_abelian


def test_json_round_trip(tmp_path):
    G = quaternion8()
    path = tmp_path / "q8.json"
    path.write_text(json.dumps(G.to_json()))
    H = load_group_json(str(path))
    assert H == G
    assert parse_group_spec(str(path)) == G


@pytest.mark.parametrize("spec, order", [
    ("cyclic:3", 3), ("Z4", 4), ("S3", 6), ("D4", 8), ("A4", 12), ("Q8", 8), ("V4", 4),
    ("trivial", 1), ("S3*Z4", 24), ("dihedral:5", 10),
])
def test_parse_group_spec(spec, order):
    assert parse_group_spec(spec).order == order


def test_parse_group_spec_unknown():
    with pytest.raises(UnknownPreset):
        parse_group_spec("frobnicate")


def test_centre_and_classes_against_oracle():
    for G in catalog(24).values():
        assert list(center(G).elements) == naive_center(table(G))
        assert len(conjugacy_classes(G)) == naive_conjugacy_class_count(table(G))


def test_direct_product_encoding():
    P = direct_product([symmetric(3), cyclic(4)])
    assert P.group.order == 24
    for x in range(24):
        assert P.encode(P.decode(x)) == x
    for a in range(6):
        for b in range(4):
            x = P.encode((a, b))
            assert P.project[0][x] == a and P.project[1][x] == b
    # coordinatewise multiplication
    x, y = P.encode((1, 3)), P.encode((2, 1))
    assert P.decode(P.group.mul[x, y]) == (int(symmetric(3).mul[1, 2]), 0)


def test_normal_subgroup_counts():
    assert len(normal_subgroups(symmetric(4))) == 4
    assert len(normal_subgroups(dihedral(4))) == 6
    assert len(normal_subgroups(quaternion8())) == 6
    assert len(normal_subgroups(alternating(5))) == 2


def test_internal_direct_product():
    G = cyclic(6)
    two = G.subgroup([0, 3])
    three = G.subgroup([0, 2, 4])
    assert two.commutes_with(three)
    assert internal_direct_product_check(G, [two, three])
    S3 = symmetric(3)
    rot = S3.generated_subgroup([S3.generators[1]])
    flip = S3.generated_subgroup([S3.generators[0]])
    assert not internal_direct_product_check(S3, [rot, flip])


def test_subgroup_rejects_non_subgroup():
    with pytest.raises(ValueError):
        cyclic(6).subgroup([0, 1])


def test_element_orders_and_exponent():
    G = quaternion8()
    assert sorted(G.element_orders.tolist()) == [1, 2, 4, 4, 4, 4, 4, 4]
    assert G.exponent == 4
    assert symmetric(4).exponent == 12
