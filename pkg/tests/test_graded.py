# tests/test_graded.py
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.exceptions import ConsistencyError, InputError
from src.graded.bialgebra import bialgebra_check, cyclic_corpus
from src.graded.elements import (
    CyclicGradedElement, GradedElement, GradedTensor, GradedWedge, cyclic_word
)
from src.graded.operations import (
    adjoint_action, close_and_alternate, gr_bracket, gr_delta, gr_mu, gr_trace
)

N = 8
words = st.lists(st.integers(1, 3), min_size=1, max_size=5).map(tuple)


def cyc(*word, c=1, degree=N):
    return CyclicGradedElement.word(word, degree, c)


class TestElements:
    def test_cyclic_keys_rotate(self):
        assert cyclic_word((2, 1, 1)) == (1, 1, 2)
        assert cyc(2, 3, 1) == cyc(1, 2, 3)

    def test_truncation(self):
        x = CyclicGradedElement.word((1, 2, 3), degree=2)
        assert x.is_zero()
        assert x.truncated

    def test_product(self):
        x = GradedElement([((1,), 1), ((), 1)], 3)
        assert x * x == GradedElement([((), 1), ((1,), 2), ((1, 1), 1)], 3)

    def test_product_truncates(self):
        x = GradedElement.word((1, 2), 3)
        assert (x * x).is_zero()

    def test_format(self):
        assert str(cyc(1, 2, 2) - cyc(1, 3, c=2)) == "-2*|x1 x3| + |x1 x2^2|"

    def test_wedge_orientation(self):
        assert GradedWedge([(((2,), (1,)), 1)], N) == GradedWedge([(((1,), (2,)), -1)], N)
        assert GradedWedge([(((1,), (1,)), 1)], N).is_zero()

    def test_mixed_degrees_rejected(self):
        with pytest.raises(ConsistencyError):
            cyc(1, degree=4) + cyc(1, degree=5)

    def test_homogeneous(self):
        x = cyc(1) + cyc(1, 2) + cyc(2, 3, c=3)
        assert x.homogeneous(2) == cyc(1, 2) + cyc(2, 3, c=3)
        assert x.lowest_degree() == 1


class TestBracket:
    def test_worked_example(self):
        result = gr_bracket(cyc(1, 2, 2), cyc(2, 3, 3))
        assert result == cyc(1, 2, 2, 3, 3) - cyc(1, 3, 3, 2, 2)
        assert str(result) == "|x1 x2^2 x3^2| - |x1 x3^2 x2^2|"

    def test_disjoint_letters(self):
        assert gr_bracket(cyc(1), cyc(2)).is_zero()

    def test_empty_word_is_central(self):
        assert gr_bracket(CyclicGradedElement([((), 1)], N), cyc(1, 2)).is_zero()

    def test_length(self):
        result = gr_bracket(cyc(1, 2), cyc(1, 3))
        assert result == cyc(1, 3, 2) - cyc(1, 2, 3)


class TestMuAndDelta:
    def test_mu_of_square(self):
        result = gr_mu(GradedElement.word((1, 1), N))
        assert result == GradedTensor([(((1,), ()), 1), (((), (1,)), -1)], N)

    def test_mu_of_distinct_letters(self):
        assert gr_mu(GradedElement.word((1, 2, 3), N)).is_zero()

    def test_delta_of_square(self):
        assert gr_delta(cyc(1, 1)) == GradedWedge([(((1,), ()), 2)], N)

    def test_delta_of_generator(self):
        assert gr_delta(cyc(1)).is_zero()

    def test_trace(self):
        x = GradedElement([((1, 2), 1), ((2, 1), 1)], N)
        assert gr_trace(x) == cyc(1, 2, c=2)

    def test_adjoint_action_on_empty(self):
        assert adjoint_action(cyc(1), GradedWedge()).is_zero()


@given(words, words)
def test_bracket_antisymmetry(u, v):
    x, y = cyc(*u, degree=10), cyc(*v, degree=10)
    assert gr_bracket(x, y) == -gr_bracket(y, x)


@given(words)
def test_delta_closes_mu(w):
    based = gr_mu(GradedElement.word(w, N))
    assert gr_delta(cyc(*w)) == close_and_alternate(based)


@given(words)
def test_delta_lowers_length_by_one(w):
    assert all(len(a) + len(b) == len(w) - 1 for (a, b), _ in gr_delta(cyc(*w)))


class TestBialgebra:
    def test_corpus(self):
        assert cyclic_corpus(2, 2) == [(1,), (2,), (1, 1), (1, 2), (2, 2)]

    @pytest.mark.parametrize("kind, max_len", [("jacobi", 2), ("cojacobi", 4), ("cocycle", 2)])
    def test_axioms_hold(self, kind, max_len):
        report = bialgebra_check(kind, cyclic_corpus(max_len, 2))
        assert report.passed, report.counterexample
        assert report.cases > 0

    @pytest.mark.slow
    @pytest.mark.parametrize("kind", ["jacobi", "cocycle"])
    def test_axioms_on_three_letters(self, kind):
        assert bialgebra_check(kind, cyclic_corpus(2, 3)).passed

    def test_unknown_axiom(self):
        with pytest.raises(InputError):
            bialgebra_check("associativity", [(1,)])

    def test_report_dict(self):
        data = bialgebra_check("cojacobi", [(1, 2)]).to_dict()
        assert data == {'kind': 'cojacobi', 'cases': 1, 'failures': 0, 'passed': True,
                        'counterexample': None}
