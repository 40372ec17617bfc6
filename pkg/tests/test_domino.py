# Copyright 2024 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

from common.errors import BudgetExceededError, PreconditionError, ShapeError, SizeMismatchError
from common.partitions import is_hook, partitions_of
from models.domino import HORIZONTAL, VERTICAL, DominoTableau, ReadingWord
from services.domino import (admissible_tableau, bad_terms, dom_counts, enumerate_dom, is_lattice,
                             near_rectangle_algorithm1, near_rectangle_algorithm2, reading_word, recover_hat,
                             rectangle_dom, rectangular_weight, render_ascii, symmetric_square_split)


def _sub_shapes(a, b):
    return [lam for n in range(a * b + 1) for lam in partitions_of(n) if lam.length <= b and lam.width <= a]


def test_lattice_words():
    assert bad_terms((1, 1, 2, 2, 1, 3, 3, 3, 4, 4, 1, 2, 3, 4)) == [7]
    assert not is_lattice((1, 1, 2, 2, 1, 3, 3, 3, 4, 4, 1, 2, 3, 4))
    assert is_lattice((1, 2, 3, 1, 2, 3))
    assert is_lattice(())
    assert bad_terms(ReadingWord((2, 1))) == [0]


def test_single_cell():
    horizontal = DominoTableau((1,), [(1, 1, HORIZONTAL, 1), (2, 1, HORIZONTAL, 2)])
    vertical = DominoTableau((1,), [(1, 1, VERTICAL, 1), (1, 2, VERTICAL, 1)])
    assert reading_word(horizontal) == (1, 2)
    assert reading_word(vertical) == (1, 1)
    assert horizontal.spin_sign == "-"
    assert vertical.spin_sign == "+"
    assert dom_counts((1,), (1, 1)) == (0, 1)
    assert dom_counts((1,), (2,)) == (1, 0)


def test_tiling_is_checked():
    with pytest.raises(ShapeError):
        DominoTableau((1,), [(1, 1, HORIZONTAL, 1)])
    with pytest.raises(ShapeError):
        DominoTableau((1,), [(1, 1, HORIZONTAL, 1), (2, 2, HORIZONTAL, 2)])


def test_two_one_tableaux():
    tableaux = enumerate_dom((2, 1))
    assert len(tableaux) == 8
    assert sum(1 for t in tableaux if t.spin == 0) == 4
    assert sum(1 for t in tableaux if t.spin == 1) == 4
    words = {reading_word(t) for t in tableaux}
    assert ReadingWord((1, 1, 1, 2, 1, 2)) in words
    assert ReadingWord((1, 2, 1, 1, 2, 3)) in words
    for t in tableaux:
        assert t.is_semistandard()
        assert is_lattice(reading_word(t))


def test_enumerate_dom_size_mismatch():
    with pytest.raises(SizeMismatchError):
        enumerate_dom((2, 1), (3, 2))


def test_split_of_a_row():
    plus, minus = symmetric_square_split((2,))
    assert plus == {(4,): 1, (2, 2): 1}
    assert minus == {(3, 1): 1}


@pytest.mark.parametrize("mu", [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)])
def test_split_matches_engine(engine, oracle, mu):
    plus, minus = symmetric_square_split(mu)
    assert plus == engine.plethysm_expand((2,), mu)
    assert minus == engine.plethysm_expand((1, 1), mu)
    assert plus + minus == oracle.outer_product(mu, mu)


@pytest.mark.slow
@pytest.mark.parametrize("m", [4, 5])
def test_split_matches_engine_sweep(engine, oracle, m):
    for mu in partitions_of(m):
        plus, minus = symmetric_square_split(mu)
        assert plus == engine.plethysm_expand((2,), mu), mu
        assert minus == engine.plethysm_expand((1, 1), mu), mu
        assert plus + minus == oracle.outer_product(mu, mu), mu


@pytest.mark.slow
def test_hooks_split_multiplicity_free():
    for m in range(1, 7):
        for mu in partitions_of(m):
            if is_hook(mu):
                plus, minus = symmetric_square_split(mu)
                assert plus.is_multiplicity_free() and minus.is_multiplicity_free(), mu


def test_split_budget():
    with pytest.raises(BudgetExceededError):
        symmetric_square_split((3, 2), max_degree=8)


def test_admissible_spin_types():
    odd = admissible_tableau((4, 2, 1), 6, 3)
    assert odd.horizontal_count == 22
    assert odd.spin_sign == "-"
    even = admissible_tableau((2, 2, 1), 3, 3)
    assert even.horizontal_count == 8
    assert even.spin_sign == "+"
    assert admissible_tableau((), 3, 3).spin == 1
    assert admissible_tableau((), 2, 3).spin == 0


def test_admissible_outside_the_box():
    with pytest.raises(ShapeError):
        admissible_tableau((4,), 3, 2)
    with pytest.raises(PreconditionError):
        admissible_tableau((), 0, 2)


def test_rectangular_weight():
    assert rectangular_weight((4, 2, 1), 6, 3) == (10, 8, 7, 5, 4, 2)
    assert rectangular_weight((), 2, 2) == (2, 2, 2, 2)
    assert recover_hat((10, 8, 7, 5, 4, 2), 6, 3) == (4, 2, 1)
    assert recover_hat((5, 2, 1), 2, 2) is None
    assert recover_hat((7, 1), 2, 2) is None


def test_admissible_tableaux_are_lattice():
    for hat in _sub_shapes(3, 3):
        tableau = admissible_tableau(hat, 3, 3)
        assert tableau.is_semistandard()
        assert is_lattice(reading_word(tableau))
        assert tableau.weight() == rectangular_weight(hat, 3, 3)
        assert recover_hat(rectangular_weight(hat, 3, 3), 3, 3) == hat


def test_rectangle_dom():
    count, tableau = rectangle_dom((10, 8, 7, 5, 4, 2), 6, 3)
    assert count == 1
    assert tableau == admissible_tableau((4, 2, 1), 6, 3)
    assert rectangle_dom((13, 8, 7, 5, 2, 1), 6, 3) == (0, None)


def _check_rectangle(a, b):
    by_weight = {}
    for tableau in enumerate_dom([a] * b):
        by_weight.setdefault(tableau.weight(), []).append(tableau)
    assert set(by_weight) == {rectangular_weight(hat, a, b).parts for hat in _sub_shapes(a, b)}
    for weight, tableaux in by_weight.items():
        assert rectangle_dom(weight, a, b) == (1, tableaux[0])
        assert len(tableaux) == 1


def test_rectangle_dom_matches_enumeration():
    _check_rectangle(2, 2)


@pytest.mark.slow
@pytest.mark.parametrize("a, b", [(3, 2), (2, 3)])
def test_rectangle_dom_matches_enumeration_sweep(a, b):
    _check_rectangle(a, b)


def _check_near_rectangle(a, b):
    shape = [a] * b + [a - 1]
    size = 2 * sum(shape)
    for alpha in partitions_of(size):
        if alpha.length > 2 * len(shape):
            continue
        brute = enumerate_dom(shape, alpha)
        first = near_rectangle_algorithm1(a, b, alpha)
        second = near_rectangle_algorithm2(a, b, alpha)
        found = [t for t in (first, second) if t is not None]
        assert sorted(found, key=repr) == sorted(brute, key=repr), alpha
        if first is not None and second is not None:
            assert first.spin != second.spin


def test_near_rectangle_algorithms():
    _check_near_rectangle(2, 1)
    _check_near_rectangle(2, 2)


def test_near_rectangle_algorithms_split_a_weight():
    first = near_rectangle_algorithm1(2, 1, (3, 2, 1))
    second = near_rectangle_algorithm2(2, 1, (3, 2, 1))
    assert [d for d in first.dominoes if d.row > 2] == [(3, 1, HORIZONTAL, 2), (4, 1, HORIZONTAL, 3)]
    assert [d for d in second.dominoes if d.row > 2] == [(3, 1, VERTICAL, 2), (3, 2, VERTICAL, 3)]
    assert first.spin != second.spin


def test_near_rectangle_next_row_labels_stand_upright():
    first = near_rectangle_algorithm1(2, 1, (3, 3))
    assert [d for d in first.dominoes if d.row > 2] == [(3, 1, VERTICAL, 2), (3, 2, VERTICAL, 2)]
    assert near_rectangle_algorithm2(2, 1, (3, 3)) is None


def test_near_rectangle_free_supporter_moves_to_the_first_row():
    tableau = near_rectangle_algorithm1(3, 2, (5, 5, 3, 2, 1))
    assert [d for d in tableau.dominoes if d.row > 4] == [
        (5, 1, HORIZONTAL, 3), (5, 3, HORIZONTAL, 3), (6, 1, HORIZONTAL, 4), (6, 3, HORIZONTAL, 5)
    ]
    assert is_lattice(reading_word(tableau))


def test_near_rectangle_without_a_top():
    assert near_rectangle_algorithm1(2, 2, (6, 3, 1)) is None
    assert near_rectangle_algorithm2(2, 2, (6, 3, 1)) is None


@pytest.mark.slow
@pytest.mark.parametrize("a, b", [(3, 2), (2, 3)])
def test_near_rectangle_algorithms_sweep(a, b):
    _check_near_rectangle(a, b)


def test_near_rectangle_preconditions():
    with pytest.raises(PreconditionError):
        near_rectangle_algorithm1(1, 2, (2, 2))
    with pytest.raises(SizeMismatchError):
        near_rectangle_algorithm2(2, 2, (4, 4))


@pytest.mark.slow
def test_cupbox_pair():
    tableaux = enumerate_dom((6, 6, 6, 1), (10, 8, 7, 6, 4, 3))
    assert len(tableaux) == 2
    assert {t.spin for t in tableaux} == {0, 1}


def test_render_ascii():
    horizontal = admissible_tableau((), 1, 1)
    assert render_ascii(horizontal).splitlines() == ["1-1", "", "2-2", "spin - (2 horizontal)"]
    vertical = DominoTableau((1,), [(1, 1, VERTICAL, 1), (1, 2, VERTICAL, 1)])
    assert render_ascii(vertical).splitlines() == ["1 1", "| |", "1 1", "spin + (0 horizontal)"]
