import pytest

from hypercat.hypercatalan import TruncationSpec, TypeVector, enumerate_types, hyper_catalan, vef
from hypercat.subdigon import (
    NULL, ArityError, Node, NullDecompositionError, SubdigonParseError, decompose,
    enumerate_by_level, enumerate_subdigons, from_json, leaf_count, nabla, parse,
    serialize, to_json, type_of,
)
from hypercat.viz import layout_subdigon

M = TypeVector
TRI = nabla(2, [NULL, NULL])


def test_nabla_examples():
    assert type_of(TRI) == M(m2=1)
    pent = nabla(4, [TRI, NULL, NULL, TRI])
    assert decompose(pent)[0] == 4
    assert vef(type_of(pent)).V == 7
    quad = nabla(2, [TRI, NULL])
    assert type_of(quad) == M(m2=2)
    assert quad in enumerate_subdigons(M(m2=2))


@pytest.mark.parametrize("k, kids", [(1, [NULL]), (2, [NULL]), (3, [NULL, NULL]), (0, [])])
def test_nabla_arity_errors(k, kids):
    with pytest.raises(ArityError):
        nabla(k, kids)


def test_decompose_examples():
    s = nabla(3, [NULL, NULL, NULL])
    assert decompose(s) == (3, (NULL, NULL, NULL))
    with pytest.raises(NullDecompositionError):
        decompose(NULL)


def test_type_of_examples():
    assert type_of(NULL) == M()
    assert type_of(TRI) == M(m2=1)
    assert type_of(nabla(3, [TRI, NULL, NULL])) == M(m2=1, m3=1)


def test_enumerate_subdigons_examples():
    assert enumerate_subdigons(M()) == [NULL]
    assert len(enumerate_subdigons(M(m2=2))) == 2
    assert len(enumerate_subdigons(M(m2=1, m3=1))) == 5


def test_enumerate_by_level_examples():
    assert enumerate_by_level(TruncationSpec("face", 0, 4)) == [NULL]
    assert enumerate_by_level(TruncationSpec("face", 1, 3)) == [NULL, TRI, nabla(3, [NULL] * 3)]
    # E - 1 <= 5: [], [m2=1], [m3=1], [m4=1], [m2=2], [m5=1], [m2=1,m3=1]
    edge5 = enumerate_by_level(TruncationSpec("edge", 5))
    assert len(edge5) == 1 + 1 + 1 + 1 + 2 + 1 + 5
    edge4 = enumerate_by_level(TruncationSpec("edge", 4, q=3))
    assert len(edge4) == 5
    assert {type_of(s) for s in edge4} == {M(), M(m2=1), M(m2=2), M(m3=1)}


def test_enumeration_is_deterministic():
    m = M(m2=2, m3=1)
    assert [serialize(s) for s in enumerate_subdigons(m)] == [serialize(s) for s in enumerate_subdigons(m)]


ALL_SMALL = [m for m in enumerate_types(TruncationSpec("edge", 10))]


@pytest.mark.parametrize("m", ALL_SMALL, ids=str)
def test_enumeration_counts_types_and_uniqueness(m):
    items = enumerate_subdigons(m)
    assert len(items) == hyper_catalan(m)
    assert len(set(items)) == len(items)
    for s in items:
        assert type_of(s) == m
        if s is not NULL:
            k, kids = decompose(s)
            assert nabla(k, kids) == s
            # psi multiplicativity: type adds up over the children
            total = M({k: 1})
            for c in kids:
                total = total + type_of(c)
            assert total == type_of(s)
        layout = layout_subdigon(s)
        assert (len(layout.vertices), len(layout.edges), len(layout.faces)) == tuple(vef(m))


def test_leaf_count_is_v_minus_one():
    for s in enumerate_by_level(TruncationSpec("face", 3, 3)):
        assert leaf_count(s) == vef(type_of(s)).V - 1


def test_serialize_examples():
    assert serialize(NULL) == "|"
    assert serialize(TRI) == "(2;|,|)"
    assert parse("(3;|,(2;|,|),|)") == Node(3, (NULL, Node(2, (NULL, NULL)), NULL))


def test_parse_ignores_whitespace():
    assert parse(" ( 2 ; | , | ) ") == TRI


@pytest.mark.parametrize("bad, pos", [
    ("", 0),
    ("(2;|)", 4),
    ("(2;|,|", 6),
    ("(1;|)", 1),
    ("(2;|,|))", 7),
    ("(;|,|)", 1),
    ("x", 0),
])
def test_parse_errors_report_position(bad, pos):
    with pytest.raises(SubdigonParseError) as info:
        parse(bad)
    assert info.value.pos == pos


def test_roundtrips_over_enumeration():
    for s in enumerate_by_level(TruncationSpec("edge", 8)):
        assert parse(serialize(s)) == s
        assert from_json(to_json(s)) == s
    assert to_json(NULL) is None
    assert to_json(TRI) == {"k": 2, "children": [None, None]}
