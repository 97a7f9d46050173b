import pytest
from hypothesis import given
from hypothesis import strategies as st

from domedge import families as fam
from domedge.coloring import (
    ColoringError,
    DominationCertificate,
    EdgeColoring,
    check_proper,
    class_dominator,
    find_dominator,
    make_coloring,
    normalize_colors,
    validate,
)
from domedge.graph import edge_neighborhood
from domedge.solver import chi_dom_exact

from conftest import graphs


def test_check_proper():
    P4 = fam.path(4)
    assert check_proper(P4, EdgeColoring((0, 1, 0))) == (True, [])
    ok, bad = check_proper(P4, EdgeColoring((0, 0, 1)))
    assert not ok and bad == [(0, 1)]


def test_find_dominator_examples():
    assert class_dominator(fam.path(5), [0, 2]) == 1
    assert class_dominator(fam.path(2), [0]) == 0
    # P6 coloring [0,1,0,1,2]: class 1 = {e1, e3} lies in N[e2]
    assert find_dominator(fam.path(6), EdgeColoring((0, 1, 0, 1, 2)), 1) == 2
    assert class_dominator(fam.path(6), [0, 3]) is None


def test_validate_examples():
    r = validate(fam.path(5), EdgeColoring((0, 1, 0, 1)))
    assert r.valid and r.certificate.witness == {0: 1, 1: 2}
    r = validate(fam.path(6), EdgeColoring((0, 1, 0, 1, 0)))
    assert r.proper and not r.dominated and not r.valid
    r = validate(fam.cycle(4), EdgeColoring((0, 1, 1, 0)))
    assert r.valid
    r = validate(fam.path(4), EdgeColoring((0, 0, 1)))
    assert not r.proper


def test_coloring_contiguity():
    with pytest.raises(ColoringError):
        EdgeColoring((0, 2))
    assert normalize_colors([5, 3, 5, 9]) == (0, 1, 0, 2)
    with pytest.warns(UserWarning):
        col = make_coloring(fam.path(3), [4, 7])
    assert col.colors == (0, 1)


def test_coloring_length_checked():
    with pytest.raises(ColoringError):
        make_coloring(fam.path(4), [0, 1])


@given(graphs(max_n=7, min_edges=1), st.data())
def test_class_of_three_never_dominated(G, data):
    # three pairwise disjoint edges cannot share a common neighbor edge
    if G.m < 3:
        return
    cls = data.draw(st.lists(st.integers(0, G.m - 1), min_size=3, max_size=3, unique=True))
    verts = [v for e in cls for v in G.edges[e]]
    if len(set(verts)) == 6:
        assert class_dominator(G, cls) is None


@given(graphs(max_n=7, min_edges=1), st.data())
def test_validity_invariant_under_permutation(G, data):
    col = chi_dom_exact(G).coloring
    k = col.num_colors
    perm = data.draw(st.permutations(range(k)))
    permuted = make_coloring(G, [perm[c] for c in col.colors], warn=False)
    assert validate(G, permuted).valid


@given(graphs(max_n=7, min_edges=1), st.data())
def test_certificate_sound(G, data):
    colors = data.draw(st.lists(st.integers(0, 4), min_size=G.m, max_size=G.m))
    col = make_coloring(G, colors, warn=False)
    rep = validate(G, col)
    if rep.certificate is not None:
        assert rep.certificate.verify(G, col)
        for c, cls in enumerate(col.classes()):
            assert set(cls) <= edge_neighborhood(G, rep.certificate.witness[c], closed=True)
    bogus = DominationCertificate({c: 0 for c in range(col.num_colors)})
    if not all(set(cls) <= edge_neighborhood(G, 0, closed=True) for cls in col.classes()):
        assert not bogus.verify(G, col)
