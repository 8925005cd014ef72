import pytest

from xlaguerre.maya import (
    DiagramPair,
    MayaDiagram,
    Partition,
    canonical_shift,
    conjugate_canonical_shift,
    enumerate_diagrams,
    enumerate_pairs,
    is_even,
    parse_diagram,
    partition_length,
    shift,
    to_conjugate_partition,
    to_partition,
    type_one_pair,
)
from xlaguerre.utils.errors import DiagramParseError, DiagramValidationError

# desk-scale bound of the exhaustive sweeps
SWEEP_BOUND = 4


@pytest.mark.parametrize(
    "text,excluded,included",
    [
        ("(5,2,1|4,3,1)", (5, 2, 1), (4, 3, 1)),
        ("(|)", (), ()),
        ("(1,0|)", (1, 0), ()),
        ("(∅|3,2)", (), (3, 2)),
        ("( 2 | 1 )", (2,), (1,)),
    ],
)
def test_parse_diagram(text, excluded, included):
    diagram = parse_diagram(text)
    assert diagram.excluded == excluded
    assert diagram.included == included


@pytest.mark.parametrize("text", ["1,2", "(1,2)", "(|1,)", "(a|)"])
def test_parse_diagram_malformed(text):
    with pytest.raises(DiagramParseError):
        parse_diagram(text)


@pytest.mark.parametrize("text", ["(|1,1)", "(1,2|)"])
def test_parse_diagram_not_decreasing(text):
    with pytest.raises(DiagramValidationError):
        parse_diagram(text)


def test_render():
    assert parse_diagram("(|3,2)").render() == "(∅|3,2)"
    assert parse_diagram("(1,0|)").render() == "(1,0|∅)"
    assert parse_diagram("(|)").render() == "(∅|∅)"


@pytest.mark.parametrize(
    "text,t,expected",
    [
        ("(5,2,1|4,3,1)", 3, "(2|7,6,4,2)"),
        ("(5,2,1|4,3,1)", -5, "(10,7,6,4,2|)"),
        ("(5,2,1|4,3,1)", 0, "(5,2,1|4,3,1)"),
        ("(1,0|)", 2, "(|)"),
        ("(|3,2)", -4, "(3,2|)"),
    ],
)
def test_shift(text, t, expected):
    assert shift(parse_diagram(text), t) == parse_diagram(expected)


@pytest.mark.parametrize(
    "text,t,t_conjugate",
    [
        ("(5,2,1|4,3,1)", 6, -5),
        ("(|)", 0, 0),
        ("(|3,2)", 0, -4),
        ("(1,0|)", 2, 2),
    ],
)
def test_canonical_shifts(text, t, t_conjugate):
    diagram = parse_diagram(text)
    assert canonical_shift(diagram) == t
    assert conjugate_canonical_shift(diagram) == t_conjugate


@pytest.mark.parametrize(
    "text,parts",
    [
        ("(|3,2)", (2, 2)),
        ("(|)", ()),
        ("(|4,1,0)", (2,)),
    ],
)
def test_to_partition(text, parts):
    assert to_partition(parse_diagram(text)).parts == parts


def test_to_partition_needs_canonical_form():
    with pytest.raises(DiagramValidationError):
        to_partition(parse_diagram("(1,0|)"))
    with pytest.raises(DiagramValidationError):
        to_conjugate_partition(parse_diagram("(|3,2)"))


@pytest.mark.parametrize(
    "text,t,length",
    [
        ("(1,0|)", 2, 0),
        ("(|)", 0, 0),
        ("(|1,0)", -2, 0),
        ("(|2,0)", -1, 1),
        ("(|3,2)", -4, 2),
    ],
)
def test_partition_length(text, t, length):
    assert partition_length(parse_diagram(text), t) == length


def test_partition_length_rejects_other_shifts():
    with pytest.raises(DiagramValidationError):
        partition_length(parse_diagram("(|3,2)"), 5)


@pytest.mark.parametrize(
    "parts,expected",
    [((2, 2), True), ((), True), ((3, 2), False), ((1,), False), ((3, 3, 1, 1), True)],
)
def test_is_even(parts, expected):
    assert is_even(Partition(parts)) is expected


def test_partition():
    assert Partition((2, 1, 0, 0)).parts == (2, 1)
    assert Partition((2, 2)).indices() == (3, 2)
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
    assert Partition((2, 2)).size == 4
    with pytest.raises(DiagramValidationError):
        Partition((1, 2))


def test_diagram_pair_counts():
    pair = DiagramPair(parse_diagram("(5|3,2)"), parse_diagram("(1,0|4)"))
    assert (pair.r1, pair.r2, pair.r3, pair.r4) == (2, 1, 2, 1)
    assert pair.r == 6
    assert not pair.is_trivial


def test_type_one_pair():
    pair = type_one_pair(2)
    assert pair.m1.is_trivial
    assert pair.m2.included == (2,)
    with pytest.raises(DiagramValidationError):
        type_one_pair(0)


def test_enumerate():
    assert len(list(enumerate_diagrams(2))) == 16
    assert len(list(enumerate_pairs(1))) == 16
    assert list(enumerate_pairs(0)) == [DiagramPair(MayaDiagram(), MayaDiagram())]


@pytest.mark.parametrize("diagram", list(enumerate_diagrams(SWEEP_BOUND)), ids=str)
def test_shift_properties(diagram):
    for t in range(-SWEEP_BOUND - 1, SWEEP_BOUND + 2):
        assert shift(shift(diagram, t), -t) == diagram

    t = canonical_shift(diagram)
    canonical = shift(diagram, t)
    assert canonical.is_canonical()
    assert partition_length(diagram, t) == to_partition(canonical).length

    t_conjugate = conjugate_canonical_shift(diagram)
    conjugate = shift(diagram, t_conjugate)
    assert conjugate.is_conjugate_canonical()
    assert partition_length(diagram, t_conjugate) == to_conjugate_partition(conjugate).length

    # the two readings of the same box pattern are transposed Young diagrams
    assert to_conjugate_partition(conjugate) == to_partition(canonical).conjugate()
