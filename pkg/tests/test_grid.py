import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rooklink import (EmptySubgridError, InvalidVertexError, ProductGraph,
                      Subgrid, Vertex, flip)


@st.composite
def subgrids(draw, max_dim=4):
    d1 = draw(st.integers(0, max_dim))
    d2 = draw(st.integers(0, max_dim))
    base = ProductGraph(d1, d2)
    rows = draw(st.sets(st.integers(0, d1), min_size=1))
    cols = draw(st.sets(st.integers(0, d2), min_size=1))
    return Subgrid(base, tuple(rows), tuple(cols))


class TestAdjacency:
    def test_same_row(self):
        g = ProductGraph(2, 3)
        assert g.adjacent(Vertex(0, 0), Vertex(0, 3))

    def test_same_column(self):
        g = ProductGraph(2, 3)
        assert g.adjacent(Vertex(2, 1), Vertex(0, 1))

    def test_diagonal_not_adjacent(self):
        g = ProductGraph(2, 3)
        assert not g.adjacent(Vertex(0, 0), Vertex(1, 1))

    def test_out_of_range(self):
        g = ProductGraph(2, 3)
        with pytest.raises(InvalidVertexError):
            g.adjacent(Vertex(0, 0), Vertex(3, 0))

    @settings(deadline=None)
    @given(subgrids(), st.data())
    def test_symmetric_irreflexive(self, sub, data):
        verts = sorted(sub.vertices())
        u = data.draw(st.sampled_from(verts))
        v = data.draw(st.sampled_from(verts))
        assert not sub.adjacent(u, u)
        assert sub.adjacent(u, v) == sub.adjacent(v, u)


class TestNeighbors:
    def test_full_grid_degree(self):
        sub = ProductGraph(2, 3).subgrid()
        assert len(sub.neighbors(Vertex(0, 0))) == 5

    def test_two_by_two_is_a_cycle(self):
        sub = Subgrid(ProductGraph(2, 3), (1, 2), (2, 3))
        assert sub.neighbors(Vertex(1, 2)) == {Vertex(2, 2), Vertex(1, 3)}

    def test_single_row_clique(self):
        sub = Subgrid(ProductGraph(0, 2), (0,), (0, 1, 2))
        assert sub.neighbors(Vertex(0, 1)) == {Vertex(0, 0), Vertex(0, 2)}

    def test_inactive_vertex(self):
        sub = Subgrid(ProductGraph(2, 3), (1, 2), (2, 3))
        with pytest.raises(InvalidVertexError):
            sub.neighbors(Vertex(0, 0))

    @settings(deadline=None)
    @given(subgrids())
    def test_degree_formula(self, sub):
        expected = (sub.n_rows - 1) + (sub.n_cols - 1)
        for v in sub.vertices():
            assert len(sub.neighbors(v)) == expected
        assert sub.vertex_count == sub.n_rows * sub.n_cols


class TestRestrict:
    def test_remove_two_columns(self):
        sub = ProductGraph(2, 3).subgrid().restrict(remove_cols={0, 1})
        assert sub.n_rows == 3 and sub.n_cols == 2
        assert sub.vertex_count == 6
        assert sub.cols == (2, 3)

    def test_remove_nothing_is_identity(self):
        sub = ProductGraph(2, 3).subgrid()
        assert sub.restrict() == sub

    def test_column_block_minus_row(self):
        block = ProductGraph(2, 3).subgrid().restrict(remove_cols={2, 3})
        small = block.restrict(remove_rows={0})
        assert small.vertex_count == 4

    def test_emptying_raises(self):
        sub = ProductGraph(1, 1).subgrid()
        with pytest.raises(EmptySubgridError):
            sub.restrict(remove_rows={0, 1})

    @settings(deadline=None)
    @given(subgrids(), st.data())
    def test_composition(self, sub, data):
        rows1 = data.draw(st.sets(st.sampled_from(sub.rows)))
        cols1 = data.draw(st.sets(st.sampled_from(sub.cols)))
        keep_r = [r for r in sub.rows if r not in rows1]
        keep_c = [c for c in sub.cols if c not in cols1]
        if not keep_r or not keep_c:
            return
        rows2 = data.draw(st.sets(st.sampled_from(keep_r), max_size=len(keep_r) - 1))
        cols2 = data.draw(st.sets(st.sampled_from(keep_c), max_size=len(keep_c) - 1))
        stepwise = sub.restrict(rows1, cols1).restrict(rows2, cols2)
        union = sub.restrict(rows1 | rows2, cols1 | cols2)
        assert stepwise == union


class TestTranspose:
    def test_shape(self):
        t = ProductGraph(2, 3).subgrid().transpose()
        assert (t.n_rows, t.n_cols) == (4, 3)

    def test_vertex_map(self):
        assert flip(Vertex(1, 2)) == Vertex(2, 1)

    def test_adjacency_example(self):
        sub = ProductGraph(2, 3).subgrid()
        t = sub.transpose()
        assert sub.adjacent(Vertex(0, 1), Vertex(0, 2))
        assert t.adjacent(Vertex(1, 0), Vertex(2, 0))

    @settings(deadline=None)
    @given(subgrids())
    def test_involution_and_isomorphism(self, sub):
        t = sub.transpose()
        assert t.transpose() == sub
        verts = sorted(sub.vertices())
        for u in verts[:6]:
            for v in verts[:6]:
                if u != v:
                    assert sub.adjacent(u, v) == t.adjacent(flip(u), flip(v))
