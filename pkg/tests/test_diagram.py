"""Combinatorial map layer: builders, faces, walks, validation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from annulink.diagram import (
    UNBOUNDED,
    AnnularDiagram,
    apply_full_twist,
    from_braid_closure,
    from_disk_pd,
    from_free_loops,
    insert_r1,
    insert_r2,
    mirror_diagram,
)

words = st.lists(
    st.sampled_from([1, -1, 2, -2, 3, -3]), min_size=0, max_size=8
)


def closure(word, strands=4, disk=False):
    return from_braid_closure(word, strands, disk=disk)


class TestBuilders:
    def test_free_loops(self):
        d = from_free_loops([1, 0, 1])
        assert d.n == 0
        assert d.free_loops == (1, 0, 1)
        assert d.validate() == []
        assert d.component_count() == 3

    def test_empty(self):
        d = from_free_loops([])
        assert d.validate() == []
        assert d.component_count() == 0

    def test_single_crossing(self):
        d = closure([1], 2)
        assert d.n == 1
        assert d.validate() == []
        assert d.component_count() == 1
        # one crossing on the annulus has three faces
        assert len(d.trace_faces()) == 3

    def test_disk_closure_has_unbounded_side(self):
        d = closure([1, 1, 1], 2, disk=True)
        assert d.validate() == []
        inner, outer = d.external
        assert UNBOUNDED not in (inner, outer) or inner == outer

    def test_disk_pd(self):
        d = from_disk_pd([(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)])
        assert d.n == 3
        assert d.validate() == []

    @given(words, st.sampled_from([2, 3, 4]))
    @settings(max_examples=80)
    def test_closures_validate(self, word, strands):
        word = [g for g in word if abs(g) < strands]
        d = closure(word, strands)
        assert d.validate() == []
        assert d.n == len(word)
        assert 1 <= d.component_count() <= strands

    @given(words, st.sampled_from([2, 3, 4]))
    @settings(max_examples=40)
    def test_disk_closures_validate(self, word, strands):
        word = [g for g in word if abs(g) < strands]
        d = closure(word, strands, disk=True)
        assert d.validate() == []


class TestEuler:
    @pytest.mark.parametrize(
        "word,strands",
        [([1], 2), ([1, 1, 1], 2), ([1, -2], 3), ([1, 2, 3], 4), ([1, -2, 3] * 2, 4)],
    )
    def test_face_count(self, word, strands):
        # 4-valent map on the sphere: V - E + F = 2 with E = 2V
        d = closure(word, strands)
        assert len(d.trace_faces()) == d.n + 2

    def test_external_faces_annular(self):
        d = closure([1, -2], 3)
        i, o = d.external_face_indices()
        assert i != o

    def test_external_faces_disk(self):
        d = closure([1, 1], 2, disk=True)
        i, o = d.external_face_indices()
        assert i == o


class TestComponents:
    @pytest.mark.parametrize(
        "word,strands,count",
        [
            ([1], 2, 1),
            ([1, 1], 2, 2),
            ([1, -2], 3, 1),
            ([1, -2, 1, -2], 3, 1),
            ([1, -2] * 3, 3, 3),
            ([], 4, 4),
        ],
    )
    def test_component_count(self, word, strands, count):
        assert closure(word, strands).component_count() == count

    def test_strand_walk_slots(self):
        # a strand enters at slot s and leaves at s + 2
        d = closure([1, 1, 1], 2)
        for walk in d.strand_walks():
            assert len(walk) > 0
            for c, s in walk:
                assert c in d.crossings
                assert 0 <= s <= 3


class TestMoves:
    def test_r1_adds_one_crossing(self):
        d = closure([1], 2)
        edge = sorted(d.edge_parity)[0]
        d2 = insert_r1(d, edge, sign=1)
        assert d2.n == d.n + 1
        assert d2.validate() == []

    def test_r1_negative(self):
        d = closure([1], 2)
        edge = sorted(d.edge_parity)[0]
        d2 = insert_r1(d, edge, sign=-1)
        assert d2.n == d.n + 1
        assert d2.validate() == []

    def test_r2_adds_two_crossings(self):
        d = closure([1], 2)
        face = next(f for f in d.trace_faces() if len(f) >= 2)
        (c1, s1), (c2, s2) = list(face)[:2]
        e1 = d.crossings[c1][s1]
        e2 = d.crossings[c2][s2]
        d2 = insert_r2(d, e1, e2)
        assert d2.n == d.n + 2
        assert d2.validate() == []

    def test_full_twist_is_word_level(self):
        w = apply_full_twist([1], 2)
        assert w[: 1] == [1]
        assert len(w) == 3
        assert closure(w, 2).validate() == []

    def test_full_twist_three_strands(self):
        w = apply_full_twist([], 3)
        assert len(w) == 6
        assert closure(w, 3).validate() == []

    def test_mirror_round_trip(self):
        d = closure([1, -2, 3], 4)
        m = mirror_diagram(d)
        assert m.validate() == []
        assert mirror_diagram(m) == d


class TestValidation:
    def test_dangling_edge(self):
        d = closure([1], 2)
        crossings = dict(d.crossings)
        cid = next(iter(crossings))
        slots = list(crossings[cid])
        slots[0] = "e_nowhere"
        crossings[cid] = tuple(slots)
        bad = AnnularDiagram(crossings, d.edge_parity, d.free_loops, d.external)
        assert any("e_nowhere" in v for v in bad.validate())

    def test_bad_external_designator(self):
        d = closure([1], 2)
        bad = AnnularDiagram(
            d.crossings, d.edge_parity, d.free_loops, (("ghost", 0), d.external[1])
        )
        assert bad.validate() != []

    def test_bad_loop_parity(self):
        bad = AnnularDiagram({}, {}, free_loops=(2,))
        assert bad.validate() != []

    def test_cut_parity_consistency(self):
        # flipping one edge parity breaks the one-arc realizability rule
        d = closure([1, 1, 1], 2)
        assert d.validate() == []
        for eid in sorted(d.edge_parity):
            parity = dict(d.edge_parity)
            parity[eid] ^= 1
            bad = AnnularDiagram(d.crossings, parity, d.free_loops, d.external)
            if bad.validate():
                break
        else:
            pytest.fail("no single parity flip was rejected")

    @given(words)
    @settings(max_examples=40)
    def test_builders_always_pass(self, word):
        assert closure(word, 4).validate() == []
