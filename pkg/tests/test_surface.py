import pytest

from surfbracket.surface import (
    SurfaceError,
    boundary_words,
    is_peripheral,
    load_surface,
    parse_surface,
    topology_summary,
    validate_surface,
)
from surfbracket.words import CyclicWord, WordError, enumerate_classes, power_class


def C(text):
    return CyclicWord.parse(text)


# boundary words below come from tracing d -> next_ccw(inverse(d)) by hand
@pytest.mark.parametrize("rank, order, boundary, summary", [
    (2, "abAB", ["aBAb"], (-1, 1, 1)),
    (2, "aAbB", ["ab", "A", "B"], (-1, 0, 3)),
    (1, "aA", ["a", "A"], (0, 0, 2)),
    (3, "abAcBC", ["ac", "AbCB"], (-2, 1, 2)),
])
def test_traced_boundary(rank, order, boundary, summary):
    s = validate_surface(rank, order)
    assert boundary_words(s) == [C(w) for w in boundary]
    assert topology_summary(s) == summary


def test_torus_boundary_is_the_commutator_class(torus):
    # traced orientation is the inverse of abAB
    (w,) = boundary_words(torus)
    assert w == C("abAB").inverse()


def test_accepts_letter_codes(torus):
    assert validate_surface(2, [0, 2, 1, 3]) == torus


@pytest.mark.parametrize("rank, order, match", [
    (2, "abAA", "duplicate"),
    (2, "abA", "missing"),
    (0, "", "disc"),
    (2, "abAC", "outside|beyond"),
])
def test_validate_rejects(rank, order, match):
    with pytest.raises(SurfaceError, match=match):
        validate_surface(rank, order)


@pytest.mark.parametrize("order", ["abAB", "aAbB", "abAcBC", "aAbBcC", "abcABC", "aBAb"])
def test_faces_partition_darts(order):
    s = validate_surface(len(order) // 2, order)
    darts = [d for f in s.faces for d in f]
    assert sorted(darts) == list(range(2 * s.rank))
    assert sum(len(w) for w in s.boundary) == 2 * s.rank
    for w in s.boundary:
        assert w and CyclicWord(w.letters) == w


@pytest.mark.parametrize("x, expected", [
    ("abAB", (True, 0, -1)),
    ("aBAb", (True, 0, 1)),
    ("a", (False, None, None)),
])
def test_is_peripheral_torus(torus, x, expected):
    info = is_peripheral(torus, C(x))
    assert (info.peripheral, info.component_index, info.exponent) == expected


def test_is_peripheral_pants_power(pants):
    info = is_peripheral(pants, C("BABA"))
    assert (info.peripheral, info.component_index, info.exponent) == (True, 0, -2)
    assert str(info) == "peripheral component 0 exponent -2"


def test_is_peripheral_rejects_trivial(torus):
    with pytest.raises(WordError):
        is_peripheral(torus, CyclicWord())


@pytest.mark.parametrize("order", ["abAB", "aAbB", "abAcBC", "aAbBcC"])
def test_boundary_words_are_peripheral_with_unit_exponent(order):
    s = validate_surface(len(order) // 2, order)
    for i, w in enumerate(s.boundary):
        assert is_peripheral(s, w).exponent == 1
        assert is_peripheral(s, w).component_index == i
        assert is_peripheral(s, w.inverse()).exponent == -1
        for k in (2, -3):
            assert is_peripheral(s, power_class(w, k)).exponent == k


def test_peripheral_classes_are_rare(torus):
    peripheral = [x for x in enumerate_classes(2, 8) if is_peripheral(torus, x).peripheral]
    # the boundary class and its square, in both orientations
    assert sorted(str(x) for x in peripheral) == ["aBAb", "aBAbaBAb", "abAB", "abABabAB"]


def test_every_rank2_order_is_consistent():
    import itertools

    for perm in itertools.permutations(range(4)):
        s = validate_surface(2, perm)
        chi, g, b = topology_summary(s)
        assert chi == 2 - 2 * g - b


def test_parse_surface_format():
    s = parse_surface("# torus\nrank 2\norder a b A B   # ccw\n")
    assert s.dart_order == (0, 2, 1, 3)


@pytest.mark.parametrize("text", ["order a b A B\nrank 2\n", "rank two\norder a A\n", "rank 2\n", "rank 2\norder a b A B\nextra\n"])
def test_parse_surface_rejects(text):
    with pytest.raises(SurfaceError):
        parse_surface(text)


def test_load_surface_files(data_dir):
    assert topology_summary(load_surface(data_dir / "torus.surf")) == (-1, 1, 1)
    assert topology_summary(load_surface(data_dir / "pants.surf")) == (-1, 0, 3)
    with pytest.raises(SurfaceError):
        load_surface(data_dir / "no-such-file.surf")
