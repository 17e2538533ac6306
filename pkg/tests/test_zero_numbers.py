import pytest
from hypothesis import given

from conftest import disk_family, meanders, template_family
from sturmkit.builders import chafee_infante, disk, octahedron
from sturmkit.meander import Meander
from sturmkit.pairs import pair_meander, szs_pair, sz_pair, zs_pair
from sturmkit.perm import parse
from sturmkit.zero_numbers import (
    SignedZero,
    blocks,
    connection_graph,
    connects,
    connects_relation,
    graph_edges,
    hemisphere_report,
    hemisphere_template,
    k_adjacent,
    matrix_report,
    zero_matrix,
)


@pytest.fixture(scope="module")
def oct_z():
    return zero_matrix(pair_meander(szs_pair(*octahedron())))


def incidence(c):
    return {(x, b) for x in c.dims for b in c.boundary(x)}


def closure_pairs(c):
    return {(x, b) for x in c.dims for b in c.closure(x) if b != x}


def _all_labelled():
    out = [(name, c, pair_meander(szs_pair(c, d))) for name, c, d in template_family()]
    for name, c in disk_family():
        out.append((name + "_zs", c, pair_meander(zs_pair(c))))
        out.append((name + "_sz", c, pair_meander(sz_pair(c))))
    for m in (1, 2):
        c, _ = chafee_infante(m)
        out.append((f"chafee_infante_{m}", c, Meander.build(parse("1 2 3") if m == 1 else parse("1 4 3 2 5"),
                                                              (1, 3, 2) if m == 1 else (1, 3, 5, 4, 2))))
    return out


LABELLED = _all_labelled()


# -- entries ------------------------------------------------------------------


def test_identity_three():
    z = zero_matrix(parse("1 2 3"))
    for v in (1, 2, 3):
        for w in (1, 2, 3):
            if v != w:
                # all zero, positive exactly when v comes later in h0
                assert z.z(v, w) == SignedZero(0, 1 if v > w else -1)


def test_poles_against_o():
    for name, c, d in template_family():
        z = zero_matrix(pair_meander(szs_pair(c, d)))
        o = c.ball
        assert z.z(d.north, o) == SignedZero(0, -1), name
        assert z.z(d.south, o) == SignedZero(0, 1), name


def test_octahedron_faces_against_o(oct_z):
    for f in range(19, 27):
        e = oct_z.z(f, 27)
        assert e.j == 2
        assert (e.sign > 0) == (f in (21, 26))


def test_non_sturm_rejected():
    with pytest.raises(ValueError):
        zero_matrix(parse("1 3 2 4 5"))


def test_str():
    assert str(SignedZero(2, 1)) == "2+" and str(SignedZero(0, -1)) == "0-"


# -- blocking and connections -------------------------------------------------


def test_axis_neighbours_never_blocked(oct_z):
    m = oct_z.meander
    for iota in (0, 1):
        order = m.h(iota)
        for a, b in zip(order, order[1:]):
            for k in range(4):
                assert k_adjacent(oct_z, a, b, k)
                assert k_adjacent(oct_z, b, a, k)


def test_octahedron_o_connects_everything(oct_z):
    for v in oct_z.labels:
        if v == 27:
            continue
        assert connects(oct_z, 27, v)
        assert not any(blocks(oct_z, 27, v, w) for w in oct_z.between(27, v))


def test_octahedron_face_connections(oct_z):
    assert connects(oct_z, 19, 3)
    assert not connects(oct_z, 19, 2)
    assert not connects(oct_z, 19, 19)


def test_ci_two_brute_force():
    # nothing blocks a connection between adjacent Morse levels
    z = zero_matrix(parse("1 4 3 2 5"))
    mo = z.morse
    for a in z.labels:
        for b in z.labels:
            if mo[a] == mo[b] + 1:
                assert connects(z, a, b)
                assert not any(blocks(z, a, b, w) for w in z.between(a, b))


def test_identity_three_graph():
    z = zero_matrix(parse("1 2 3"))
    assert graph_edges(connection_graph(z)) == {(2, 1), (2, 3)}


def test_ci_two_graph():
    z = zero_matrix(parse("1 4 3 2 5"))
    # top source to both saddles, each saddle to both sinks
    assert graph_edges(connection_graph(z)) == {(3, 2), (3, 4), (2, 1), (2, 5), (4, 1), (4, 5)}


def test_octahedron_graph_is_incidence(oct_z):
    c, _ = octahedron()
    assert graph_edges(connection_graph(oct_z)) == incidence(c)


# -- hemisphere templates ------------------------------------------------------


def test_octahedron_hemispheres_of_o(oct_z):
    t = hemisphere_template(oct_z)
    assert t.E(27, 0, -1) == {1} and t.E(27, 0, 1) == {2}
    assert t.E(27, 1, 1) == {8, 3, 11}
    assert t.E(27, 1, -1) == {10, 5, 14}
    assert t.E(27, 2, 1) == {21, 26, 7}
    west = set(range(1, 27)) - {1, 2, 8, 3, 11, 10, 5, 14, 21, 26, 7}
    assert t.E(27, 2, -1) == west
    assert {19, 20, 22, 23, 24, 25} <= t.E(27, 2, -1)


def test_ci_three_singletons():
    c, d = chafee_infante(3)
    z = zero_matrix(pair_meander(szs_pair(c, d)))
    t = hemisphere_template(z)
    for j in range(3):
        for s in (1, -1):
            assert len(t.E(c.ball, j, s)) == 1


def test_saddles_have_two_sinks(oct_z):
    t = hemisphere_template(oct_z)
    for e in range(7, 19):
        assert len(t.E(e, 0, 1)) == 1 and len(t.E(e, 0, -1)) == 1


# -- the closure-incidence oracle over the whole family ---------------------------------


@pytest.mark.parametrize("name,c,m", LABELLED, ids=[x[0] for x in LABELLED])
def test_oracle_equivalence(name, c, m):
    z = zero_matrix(m)
    assert matrix_report(z).ok
    assert graph_edges(connection_graph(z)) == incidence(c)
    rel = connects_relation(z)
    assert {(a, b) for a, bs in rel.items() for b in bs} == closure_pairs(c)
    t = hemisphere_template(z)
    assert hemisphere_report(z, t).ok


@pytest.mark.parametrize("name,c,m", LABELLED[:6], ids=[x[0] for x in LABELLED[:6]])
def test_transitive_and_dropping(name, c, m):
    z = zero_matrix(m)
    rel = connects_relation(z)
    for a in rel:
        for b in rel[a]:
            assert z.morse[a] > z.morse[b]
            assert rel[b] <= rel[a]


@given(meanders(max_n=17))
def test_random_sturm_invariants(s):
    m = Meander.build(s)
    if not m.is_sturm():
        return
    z = zero_matrix(m)
    assert matrix_report(z).ok
    rel = connects_relation(z)
    for a in rel:
        for b in rel[a]:
            assert z.morse[a] > z.morse[b]
            assert rel[b] <= rel[a]
    assert hemisphere_report(z, hemisphere_template(z)).ok


def test_disk_one_one_graph():
    c = disk(1, 1).complex
    z = zero_matrix(pair_meander(zs_pair(c)))
    assert graph_edges(connection_graph(z)) == incidence(c)
