import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexdim.errors import CapExceededError, DomainError, GraphFormatError
from lexdim.graph import (
    Graph,
    complete,
    cycle,
    distance_matrix,
    empty,
    is_connected,
    join,
    parse_graph_spec,
    path,
    true_twin_classes,
)
from lexdim.lexicographic import (
    Family,
    family_from_specs,
    parse_family,
    product,
    product_distance,
    read_family,
)

from conftest import connected_graphs, graphs


def test_join_as_product():
    fam = family_from_specs("K2", ["P4", "C3"])
    p = product(fam).graph
    assert p.order == 7 and p.num_edges == 18
    assert p == join(path(4), cycle(3))


def test_complete_tripartite():
    p = product(Family.uniform(complete(3), empty(2))).graph
    assert p.order == 6 and p.num_edges == 12
    assert all(p.degree(v) == 4 for v in range(6))
    assert [p.adjacent(2 * i, 2 * i + 1) for i in range(3)] == [False] * 3


def test_figure_one_right():
    p = product(family_from_specs("P4", ["K1", "K2", "K2", "K1"])).graph
    assert p.order == 6
    assert true_twin_classes(p).nonsingleton == ((1, 2), (3, 4))


def test_index_map():
    pg = product(family_from_specs("P3", ["P4", "K2", "P3"]))
    assert pg.offsets == (0, 4, 6)
    assert pg.vertex(1, 1) == 5
    assert [pg.pair(v) for v in range(9)] == [
        (0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]
    with pytest.raises(IndexError):
        pg.vertex(1, 2)


def test_family_validation():
    with pytest.raises(ValueError):
        Family(path(3), (empty(1), empty(1)))
    with pytest.raises(ValueError):
        Family(path(2), (empty(1), Graph.empty(0)))


def test_product_cap():
    with pytest.raises(CapExceededError):
        product(Family.uniform(path(5), empty(13)))
    assert product(Family.uniform(path(5), empty(13)), cap=65).graph.order == 65


def test_product_distance_cases():
    fam = family_from_specs("P3", ["P4", "K2", "g6:BG"])
    assert product_distance(fam, (0, 0), (1, 1)) == 1
    assert product_distance(fam, (0, 0), (2, 0)) == 2
    assert product_distance(fam, (0, 0), (0, 1)) == 1
    assert product_distance(fam, (0, 0), (0, 3)) == 2
    assert product_distance(fam, (2, 0), (2, 1)) == 2  # K1 u K2 is disconnected
    assert product_distance(fam, (2, 1), (2, 1)) == 0
    with pytest.raises(DomainError):
        product_distance(Family(empty(2), (empty(1), empty(1))), (0, 0), (1, 0))


def _check_distances(fam):
    pg = product(fam)
    dm = distance_matrix(pg.graph)
    for x in range(pg.graph.order):
        for y in range(pg.graph.order):
            assert dm[x, y] == product_distance(fam, pg.pair(x), pg.pair(y))


def test_distance_p3_family():
    _check_distances(family_from_specs("P3", ["P4", "K2", "P3"]))


@st.composite
def families(draw, max_base=5, max_member=3, connected=True):
    base = draw(connected_graphs(2, max_base) if connected else graphs(2, max_base))
    members = tuple(draw(graphs(1, max_member)) for _ in range(base.order))
    return Family(base, members)


@settings(max_examples=150, deadline=None)
@given(families())
def test_distance_formula_matches_bfs(fam):
    _check_distances(fam)


@settings(max_examples=150, deadline=None)
@given(families(connected=False))
def test_connectivity_and_counts(fam):
    p = product(fam).graph
    assert is_connected(p) == is_connected(fam.base)
    sizes = [h.order for h in fam.members]
    assert p.order == sum(sizes)
    assert p.num_edges == sum(h.num_edges for h in fam.members) + sum(
        sizes[i] * sizes[j] for i, j in fam.base.edges())


def test_parse_family(data_dir):
    fam = read_family(data_dir / "twin_blocks.fam")
    assert fam.base.order == 6
    assert [h.order for h in fam.members] == [2, 4, 2, 2, 2, 2]
    assert fam.member_specs == ("N2", "P4", "K2", "K2", "K2", "N2")


def test_family_text_round_trip():
    fam = family_from_specs("P3", ["K2,3", "C4", "g6:BG"])
    again = parse_family(fam.to_text())
    assert again == fam
    assert again.labels == fam.labels


@pytest.mark.parametrize("text", ["", "# only a comment\n", "P3\nK2\n", "P2\nK2\nK2\nK2\n",
                                  "P2\nK2\nZ9\n"])
def test_parse_family_errors(text):
    with pytest.raises(GraphFormatError):
        parse_family(text)


def test_parse_error_names_line():
    with pytest.raises(GraphFormatError, match="line 4"):
        parse_family("P2\nK2\n\ng6:A\n")
