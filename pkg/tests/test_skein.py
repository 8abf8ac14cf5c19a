# tests/test_skein.py
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.exceptions import InputError
from src.planar.loops import PLLoop
from src.planar.operations import delta_geometric, goldman_bracket_geometric, mu_geometric
from src.skein import (
    ClassCombo, DiagramClass, b_check, b_hat, bracket_skein, closure, delta_skein,
    flip_diagram, knot_diagram, lift_ascending, lift_descending, mu_skein, q_projection,
    smoothing, stack, telescope_normalize
)
from src.skein.diagram import BOTTOM, TOP, TangleDiagram, diagram_from_loops
from src.skein.division import RawSkeinSum
from src.words.coefficient import Coefficient
from src.words.combos import LoopCombo, TensorElement
from src.words.group import CyclicClass, cyclic_canonical, reduce_word
from tests.conftest import cls, loops, tensor, word

WORDS = ["g1", "g1^-1", "g1^2", "g1 g2", "g1^2 g2", "g2 g1^-1"]


class TestLifts:
    @pytest.mark.parametrize("text", WORDS)
    def test_writhe_one(self, text):
        w = word(text)
        assert lift_ascending(w, 2).writhe() == 1
        assert lift_descending(w, 2).writhe() == 1

    @pytest.mark.parametrize("text", WORDS)
    def test_lifts_project_to_the_word(self, text):
        w = word(text)
        assert q_projection(lift_ascending(w, 2)) == DiagramClass(paths=(w,))
        assert closure(lift_descending(w, 2)) == DiagramClass(circles=(cls(text),))

    def test_flip(self):
        diagram = lift_ascending(word("g1^2 g2"), 2)
        flipped = flip_diagram(diagram)
        assert flipped.level == TOP
        assert flipped.writhe() == -diagram.writhe()
        assert flip_diagram(flipped) == diagram
        assert flip_diagram(flipped).level == BOTTOM


class TestDiagrams:
    def test_stack_components(self):
        first = knot_diagram(cls("g1"), 2, 0)
        second = knot_diagram(cls("g2"), 2, 1)
        stacked = stack(first, second)
        assert stacked.skeleton == (2, 0)
        assert q_projection(stacked) == DiagramClass(circles=(cls("g1"), cls("g2")))

    def test_self_smoothing_splits_a_circle(self):
        diagram = knot_diagram(cls("g1^2"), 1)
        for crossing in diagram.crossings:
            assert smoothing(diagram, crossing).skeleton == (2, 0)

    def test_mixed_smoothing_joins_circles(self):
        stacked = stack(knot_diagram(cls("g1 g2"), 3, 0), knot_diagram(cls("g1 g3"), 3, 1))
        mixed = [x for x in stacked.crossings if not x.is_self]
        assert mixed
        assert all(smoothing(stacked, x).skeleton == (1, 0) for x in mixed)


F = Fraction
letters = st.lists(st.tuples(st.integers(1, 2), st.sampled_from([1, -1])), max_size=3)
class_keys = st.builds(
    lambda circles, paths: DiagramClass(
        tuple(cyclic_canonical(reduce_word(c)) for c in circles),
        tuple(reduce_word(w) for w in paths),
    ),
    st.lists(letters, max_size=2), st.lists(letters, max_size=1),
).filter(lambda key: key.skeleton != (0, 0))
class_combos = st.lists(
    st.tuples(class_keys, st.fractions(min_value=-3, max_value=3, max_denominator=4)),
    min_size=1, max_size=3,
).map(ClassCombo)


def polygon(*points) -> PLLoop:
    return PLLoop(tuple((F(x), F(y)) for x, y in points), True, 1)


def finger_pair():
    """A loop around the puncture and a small loop, apart and pushed across each other"""
    around = polygon(("1/2", "-1/2"), ("3/2", "-1/2"), ("3/2", "1/2"), ("1/2", "1/2"))
    apart = polygon(("13/8", "-1/4"), ("15/8", "-1/4"), ("15/8", "1/4"), ("13/8", "1/4"))
    pushed = polygon(
        ("13/8", "-1/4"), ("15/8", "-1/4"), ("15/8", "1/4"), ("13/8", "1/4"),
        ("13/8", "1/8"), ("5/4", "1/8"), ("5/4", "-1/8"), ("13/8", "-1/8"),
    )
    return diagram_from_loops([around, apart]), diagram_from_loops([around, pushed])


def triangle_move(k: Fraction) -> TangleDiagram:
    """Two bands and a loop around the puncture whose diagonal edge is y = k - x"""
    band = polygon(("1/4", "-1/2"), ("7/4", "-1/2"), ("7/4", "-7/8"), ("1/4", "-7/8"))
    post = polygon(("5/8", "-1/8"), ("5/8", "-3/4"), ("3/4", "-3/4"), ("3/4", "-1/8"))
    sweep = polygon(
        (F(1, 4), k - F(1, 4)), (F(9, 8), k - F(9, 8)), ("9/8", "-31/32"),
        ("3/2", "-31/32"), ("3/2", "1/2"), ("1/4", "1/2"),
    )
    return diagram_from_loops([band, post, sweep])


def switched(diagram: TangleDiagram, *indices: int) -> TangleDiagram:
    return diagram.with_crossings([
        x.switched() if k in indices else x for k, x in enumerate(diagram.crossings)
    ])


class TestDivision:
    @settings(max_examples=200, deadline=None, derandomize=True)
    @given(class_combos)
    def test_b_check_inverts_b_hat(self, x):
        assert b_check(b_hat(x, 2)) == x

    def test_realize_rejects_two_paths(self):
        with pytest.raises(InputError):
            b_hat(ClassCombo.basis(DiagramClass(paths=(word("g1"), word("g2")))), 2)

    def test_reidemeister_two(self):
        before, after = finger_pair()
        assert (len(before.crossings), len(after.crossings)) == (0, 2)
        assert q_projection(before) == q_projection(after)
        for c in (1, Coefficient.b()):
            difference = RawSkeinSum.of(before, c) - RawSkeinSum.of(after, c)
            assert b_check(difference) == 0

    def test_reidemeister_three(self):
        before, after = triangle_move(F(3, 16)), triangle_move(F(5, 16))
        assert len(before.crossings) == len(after.crossings)
        assert sorted(x.sign for x in before.crossings) == sorted(x.sign for x in after.crossings)
        assert before.crossings != after.crossings
        assert q_projection(before) == q_projection(after)
        for c in (1, Coefficient.b()):
            assert b_check(RawSkeinSum.of(before, c) - RawSkeinSum.of(after, c)) == 0

    @pytest.mark.parametrize("diagram", [
        lift_ascending(word("g1^2 g2"), 2),
        stack(knot_diagram(cls("g1 g2"), 3, 0), knot_diagram(cls("g1 g3"), 3, 1)),
    ])
    def test_two_double_points_vanish(self, diagram):
        assert len(diagram.crossings) >= 2
        for i, j in combinations(range(len(diagram.crossings)), 2):
            resolution = (RawSkeinSum.of(diagram) - RawSkeinSum.of(switched(diagram, i))
                          - RawSkeinSum.of(switched(diagram, j)) + RawSkeinSum.of(switched(diagram, i, j)))
            assert b_check(resolution) == 0

    def test_single_switch_follows_conway_relation(self):
        diagram = lift_ascending(word("g1^2 g2"), 2)
        for k, x in enumerate(diagram.crossings):
            difference = RawSkeinSum.of(diagram) - RawSkeinSum.of(switched(diagram, k))
            assert b_check(difference) == ClassCombo.basis(smoothing(diagram, x), x.sign)


class TestTelescope:
    def test_order_independence(self):
        diagram = stack(knot_diagram(cls("g1 g2"), 2, 0), knot_diagram(cls("g1^2 g2^-1"), 2, 1))
        target = {k: 0 for k in range(len(diagram.crossings))}
        forward = telescope_normalize(diagram, target)
        backward = telescope_normalize(diagram, target, list(reversed(diagram.ordered_crossings())))
        assert forward.as_coefficients() == backward.as_coefficients()

    def test_nothing_to_switch(self):
        diagram = knot_diagram(cls("g1^2"), 1)
        form = telescope_normalize(diagram, {})
        assert form.switches == 0
        assert form.b_part.is_zero()

    def test_duplicate_order_rejected(self):
        diagram = knot_diagram(cls("g1^2"), 1)
        with pytest.raises(InputError):
            telescope_normalize(diagram, {}, [0, 0])

    @pytest.mark.slow
    @settings(max_examples=100, deadline=None, derandomize=True)
    @given(st.data())
    def test_random_orders_agree(self, data):
        circles = letters.map(reduce_word).map(cyclic_canonical).filter(lambda c: not c.is_trivial())
        first, second = data.draw(circles), data.draw(circles)
        diagram = stack(knot_diagram(first, 2, 0), knot_diagram(second, 2, 1))
        target = {k: 0 for k in range(len(diagram.crossings))}
        order = data.draw(st.permutations(diagram.ordered_crossings()))
        shuffled = telescope_normalize(diagram, target, order)
        assert shuffled.as_coefficients() == telescope_normalize(diagram, target).as_coefficients()


class TestOperations:
    def test_mu_of_generator_vanishes(self):
        assert mu_skein(word("g1"), 1) == 0

    def test_mu_of_square(self):
        assert mu_skein(word("g1^2"), 1) == tensor(("1", "g1^2", 1), ("g1", "g1", -1))

    @pytest.mark.parametrize("text", WORDS)
    def test_mu_matches_geometric(self, text):
        w = word(text)
        framing = TensorElement.basis((CyclicClass.trivial(), w))
        assert mu_skein(w, 2) + framing == mu_geometric(w, 2)

    @pytest.mark.parametrize("pair", [
        ("|g1|", "|g2|"), ("|g1 g2|", "|g1 g3|"), ("|g1^2|", "|g1 g2|"), ("|g2 g1^-1|", "|g1 g3|"),
    ])
    def test_bracket_matches_geometric(self, pair):
        alpha, beta = (cls(text) for text in pair)
        geometric = goldman_bracket_geometric(LoopCombo.basis(alpha), LoopCombo.basis(beta), 3)
        assert bracket_skein(alpha, beta, 3) == geometric

    @pytest.mark.parametrize("text", ["|g1|", "|g1^2|", "|g1 g2|", "|g1^2 g2|", "|g1 g2^-1|"])
    def test_cobracket_matches_geometric(self, text):
        x = loops(text)
        assert delta_skein(x, 2) == delta_geometric(x, 2)
