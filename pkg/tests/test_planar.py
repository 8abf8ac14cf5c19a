# tests/test_planar.py
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.constants import BULLET, STAR, KinkSite
from src.core.exceptions import GenericityError, InputError
from src.planar.disc import PuncturedDisc
from src.planar.geometry import orientation, rotation_of_points, segment_intersection
from src.planar.intersections import transverse_intersections
from src.planar.loops import (
    PLLoop, enclosing_punctures, kinked_path, loop_word, normalizing_spins, rotation_number,
    standard_loop, standard_path
)
from src.planar.operations import (
    bracket_of_loops, delta_geometric, goldman_bracket_geometric, infer_punctures, mu_geometric,
    mu_of_path, tilde_delta
)
from src.words.combos import LoopCombo, WedgeElement
from src.words.group import cyclic_canonical, group_invert, group_multiply, reduce_word
from tests.conftest import cls, loops, tensor, wedge, word

F = Fraction
WORDS = ["1", "g1", "g1^-1", "g1^2", "g1 g2", "g2 g1^-1", "g1 g2^-1 g1", "g2^2 g1^-1 g2"]

letter = st.tuples(st.integers(1, 2), st.sampled_from([1, -1]))
words = st.lists(letter, max_size=3).map(reduce_word)
long_words = st.lists(letter, max_size=4).map(reduce_word)
classes = words.map(cyclic_canonical)


class TestGeometry:
    def test_crossing_segments(self):
        s, u, point = segment_intersection((F(0), F(0)), (F(2), F(2)), (F(0), F(2)), (F(2), F(0)))
        assert (s, u, point) == (F(1, 2), F(1, 2), (F(1), F(1)))

    def test_disjoint_segments(self):
        assert segment_intersection((F(0), F(0)), (F(1), F(0)), (F(0), F(1)), (F(1), F(1))) is None

    def test_collinear_overlap_rejected(self):
        with pytest.raises(GenericityError):
            segment_intersection((F(0), F(0)), (F(2), F(0)), (F(1), F(0)), (F(3), F(0)))

    def test_orientation(self):
        assert orientation((F(0), F(0)), (F(1), F(0)), (F(0), F(1))) == 1
        assert orientation((F(0), F(0)), (F(0), F(1)), (F(1), F(0))) == -1

    def test_rotation_of_squares(self):
        square = [(F(0), F(0)), (F(1), F(0)), (F(1), F(1)), (F(0), F(1))]
        assert rotation_of_points(square) == 1
        assert rotation_of_points(list(reversed(square))) == -1

    def test_zero_length_edge(self):
        with pytest.raises(InputError):
            rotation_of_points([(F(0), F(0)), (F(0), F(0)), (F(1), F(1))])


class TestDisc:
    def test_vertex_on_ray(self):
        with pytest.raises(GenericityError) as info:
            PuncturedDisc(2).check_vertex((F(1), F(1, 2)))
        assert info.value.feature == "vertex on cut ray"

    def test_vertex_outside(self):
        with pytest.raises(GenericityError):
            PuncturedDisc(2).check_vertex((F(4), F(0)))

    def test_ray_crossing_direction(self):
        disc = PuncturedDisc(2)
        a, b = (F(1, 2), F(1, 2)), (F(3, 2), F(1, 2))
        assert disc.ray_crossings(a, b) == [(F(1, 2), (1, 1))]
        assert disc.ray_crossings(b, a) == [(F(1, 2), (1, -1))]

    def test_below_puncture_reads_nothing(self):
        assert PuncturedDisc(2).ray_crossings((F(1, 2), F(-1, 2)), (F(5, 2), F(-1, 2))) == []

    def test_segment_through_puncture(self):
        with pytest.raises(GenericityError):
            PuncturedDisc(2).ray_crossings((F(1, 2), F(0)), (F(3, 2), F(0)))


class TestStandardRepresentatives:
    @pytest.mark.parametrize("text", WORDS)
    def test_path_reads_its_word(self, text):
        w = word(text)
        assert loop_word(standard_path(w, 2)) == w

    @pytest.mark.parametrize("text", WORDS)
    def test_loop_reads_its_class(self, text):
        w = word(text)
        if w.is_identity():
            return
        assert loop_word(standard_loop(w, 2), free=True) == cyclic_canonical(w)

    @pytest.mark.parametrize("text", WORDS)
    def test_rotation_normalized(self, text):
        path = standard_path(word(text), 2)
        assert rotation_number(path.closed_with_nu()) == 0

    @pytest.mark.parametrize("text", WORDS)
    def test_whitney_sum(self, text):
        for site in KinkSite:
            path = standard_path(word(text), 2, kink_site=site)
            assert sum(r.sign for r in transverse_intersections(path)) == -1

    @pytest.mark.parametrize("text", WORDS)
    def test_normalizing_kinks_share_a_spin(self, text):
        spins = normalizing_spins(word(text), 2)
        assert len(set(spins)) <= 1

    def test_kink_records(self):
        _, kinks = kinked_path(word("g1"), 1, start_spins=[1, 1], end_spins=[-1])
        assert [(k.site, k.spin) for k in kinks] == [
            (KinkSite.START, 1), (KinkSite.START, 1), (KinkSite.END, -1)
        ]

    def test_path_endpoints(self):
        path = standard_path(word("g1 g2"), 2)
        assert path.points[0] == BULLET and path.points[-1] == STAR

    def test_closed_loops_intersect_algebraically_zero(self):
        first = standard_loop(word("g1 g2"), 3, 0)
        second = standard_loop(word("g1 g3"), 3, 1)
        records = transverse_intersections(first, second)
        assert sum(r.sign for r in records) == 0

    def test_json_round_trip(self):
        loop = standard_loop(word("g1 g2^-1"), 2)
        assert PLLoop.from_dict(loop.to_dict()) == loop

    def test_missing_punctures_are_inferred(self):
        data = standard_loop(word("g1 g2^-1"), 2).to_dict()
        del data['punctures']
        loaded = PLLoop.from_dict(data)
        assert loaded.punctures == 2
        assert loaded == standard_loop(word("g1 g2^-1"), 2)

    def test_enclosing_punctures(self):
        assert enclosing_punctures([(F(1, 2), F(0)), (F(5, 2), F(1, 2))]) == 2
        assert enclosing_punctures([(F(1, 4), F(0))]) == 1
        with pytest.raises(InputError):
            enclosing_punctures([])

    def test_reversed_pair_swaps_records(self):
        first = standard_loop(word("g1 g2"), 3, 0)
        second = standard_loop(word("g2^2 g3"), 3, 1)
        forward = transverse_intersections(first, second)
        backward = transverse_intersections(second, first)
        assert forward
        assert backward == sorted((r.swapped() for r in forward), key=lambda r: (r.t1, r.t2))
        assert sum(r.sign for r in backward) == -sum(r.sign for r in forward)

    def test_open_path_needs_two_vertices(self):
        with pytest.raises(InputError):
            PLLoop(((F(1, 2), F(-1, 2)),), False, 1)

    def test_layer_out_of_range(self):
        with pytest.raises(InputError):
            standard_loop(word("g1"), 1, 99)


class TestBracket:
    def test_generators_commute(self):
        assert goldman_bracket_geometric(loops("|g1|"), loops("|g2|"), 2) == 0

    def test_overlapping_pairs(self):
        result = goldman_bracket_geometric(loops("|g1 g2|"), loops("|g1 g3|"), 3)
        assert result == loops("|g1 g2 g1 g3| - |g1 g1 g2 g3|")

    def test_boundary_loop_is_central(self):
        assert goldman_bracket_geometric(loops("|g1 g2 g1^-1 g2^-1|"), loops("|g1|"), 2) == 0

    def test_antisymmetry(self):
        x, y = loops("|g1 g2^-1|"), loops("|g2 g1 g2|")
        assert goldman_bracket_geometric(x, y, 2) == -goldman_bracket_geometric(y, x, 2)

    def test_layer_independence(self):
        x, y = loops("|g1^2 g2|"), loops("|g1 g2^-1|")
        assert (goldman_bracket_geometric(x, y, 2, layers=(0, 1))
                == goldman_bracket_geometric(x, y, 2, layers=(3, 6)))

    def test_bilinear(self):
        x = loops("2*|g1 g2| - |g1|")
        y = loops("|g1 g3|")
        expected = goldman_bracket_geometric(loops("|g1 g2|"), y, 3).scale(2)
        assert goldman_bracket_geometric(x, y, 3) == expected

    def test_infer_punctures(self):
        assert infer_punctures(loops("|g1 g3|"), word("g2")) == 3

    @settings(max_examples=50, deadline=None, derandomize=True)
    @given(classes, classes, classes)
    def test_jacobi(self, a, b, c):
        x, y, z = (LoopCombo.basis(k) for k in (a, b, c))

        def bracket(u, v):
            return goldman_bracket_geometric(u, v, 2)

        total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        assert total == 0


class TestMu:
    def test_identity(self):
        assert mu_geometric(word("1"), 1) == tensor(("1", "1", 1))

    def test_generator(self):
        assert mu_geometric(word("g1"), 1) == tensor(("1", "g1", 1))

    def test_inverse_generator(self):
        assert mu_geometric(word("g1^-1"), 1) == tensor(("g1^-1", "1", 1))

    def test_square(self):
        assert mu_geometric(word("g1^2"), 1) == tensor(("1", "g1^2", 2), ("g1", "g1", -1))

    @pytest.mark.parametrize("text", WORDS)
    def test_kink_site_independence(self, text):
        w = word(text)
        assert mu_geometric(w, 2, kink_site=KinkSite.START) == mu_geometric(w, 2, kink_site=KinkSite.END)

    @pytest.mark.parametrize("text", ["g1 g2", "g1^2 g2^-1"])
    def test_layer_independence(self, text):
        assert mu_geometric(word(text), 2, layer=0) == mu_geometric(word(text), 2, layer=4)


class TestCobracket:
    def test_trivial_and_generator(self):
        assert delta_geometric(loops("|1|"), 1) == 0
        assert delta_geometric(loops("|g1|"), 1) == 0

    def test_simple_loop_around_two_punctures(self):
        assert delta_geometric(loops("|g1 g2|"), 2) == 0

    def test_square(self):
        assert delta_geometric(loops("|g1^2|"), 1) == wedge(("g1^2", "1", -1))

    def test_descends_to_classes(self):
        assert tilde_delta(word("g2 g1^2 g2^-1"), 2) == tilde_delta(word("g1^2"), 2)

    def test_linear(self):
        result = delta_geometric(loops("3*|g1^2| + |g1|"), 1)
        assert result == WedgeElement([((cls("g1^2"), cls("1")), -3)])

    def test_empty_combo(self):
        assert delta_geometric(LoopCombo(), 1) == 0


@pytest.mark.slow
class TestHomotopyInvariance:
    """Randomized moves of the drawn representatives leave every operation unchanged"""

    @settings(max_examples=100, deadline=None, derandomize=True)
    @given(words, words, words)
    def test_conjugated_loop(self, u, c, v):
        conjugate = group_multiply(group_multiply(c, u), group_invert(c))
        moved = bracket_of_loops(standard_loop(conjugate, 2, 0), standard_loop(v, 2, 1))
        expected = goldman_bracket_geometric(
            LoopCombo.basis(cyclic_canonical(u)), LoopCombo.basis(cyclic_canonical(v)), 2
        )
        assert moved == expected

    @settings(max_examples=100, deadline=None, derandomize=True)
    @given(words, words)
    def test_conjugated_based_word(self, u, c):
        conjugate = group_multiply(group_multiply(c, u), group_invert(c))
        assert tilde_delta(conjugate, 2) == tilde_delta(u, 2)

    @settings(max_examples=100, deadline=None, derandomize=True)
    @given(st.lists(letter, max_size=2), st.lists(letter, max_size=2), letter, words)
    def test_cancelling_pair(self, head, tail, inserted, v):
        index, sign = inserted
        raw = tuple(head) + ((index, sign), (index, -sign)) + tuple(tail)
        reduced = reduce_word(raw)
        other = standard_loop(v, 2, 1)
        assert bracket_of_loops(standard_loop(raw, 2, 0), other) == bracket_of_loops(
            standard_loop(reduced, 2, 0), other
        )
        assert mu_of_path(standard_path(raw, 2)) == mu_geometric(reduced, 2)

    @settings(max_examples=100, deadline=None, derandomize=True)
    @given(words, words, st.lists(st.integers(0, 3), min_size=2, max_size=2, unique=True),
           st.integers(0, 3))
    def test_layer_choice(self, u, v, layers, mu_layer):
        x, y = LoopCombo.basis(cyclic_canonical(u)), LoopCombo.basis(cyclic_canonical(v))
        assert goldman_bracket_geometric(x, y, 2, layers=tuple(layers)) == goldman_bracket_geometric(x, y, 2)
        assert mu_geometric(u, 2, layer=mu_layer) == mu_geometric(u, 2)

    @settings(max_examples=100, deadline=None, derandomize=True)
    @given(long_words)
    def test_kink_placement(self, w):
        assert mu_geometric(w, 2, kink_site=KinkSite.END) == mu_geometric(w, 2)
        assert tilde_delta(w, 2, kink_site=KinkSite.END) == tilde_delta(w, 2)
