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

from common.errors import PreconditionError
from common.partitions import add_node, bar, epsilon_shift, partitions_of, rem
from models.near_maximal import BUMPED, DELETED_ONES, TOP_ROW
from models.tableau import PlethysticTableau, SemistandardTableau
from services.near_maximal import (first_layer_coeff, phi_inverse, phi_map, phi_tilde_companion, rsk_reverse_bump,
                                   rsk_row_insert, second_layer_coeff, second_layer_expansion, second_layer_support)
from services.tableaux import enumerate_pstd, kostka

BIG_NU = (5, 5, 4, 4, 2, 1)


def _two_row_entries(nu, seconds, last=None):
    """A plethystic tableau over (2) whose entries are (1, v), plus an optional final entry."""
    rows = [[SemistandardTableau([[1, v]]) for v in row] for row in seconds]
    if last is not None:
        rows.append([SemistandardTableau([list(last)])])
    return PlethysticTableau((2,), nu, rows)


def _big_example(row_two, last):
    return _two_row_entries(BIG_NU, [[1] * 5, row_two, [3] * 4, [4, 4, 4, 5], [5, 5]], last)


def test_first_layer():
    assert first_layer_coeff((3, 1), (7, 1)) == 1
    assert first_layer_coeff((2, 2), (6, 2)) == 1
    assert first_layer_coeff((2, 2), (6, 1, 1)) == 0
    assert first_layer_coeff((3,), (6,)) == 1
    with pytest.raises(PreconditionError):
        first_layer_coeff((3, 1), (6, 2))


def test_second_layer_support():
    support = second_layer_support((2, 1))
    assert support.pairs((4, 2)) == {(2, 2)}
    assert (4, 1, 1) not in support
    assert second_layer_support((3, 2, 1)).pairs((8, 3, 1)) == {(2, 2), (3, 2)}
    with pytest.raises(PreconditionError):
        second_layer_support((4,))


def test_second_layer_coeff():
    assert second_layer_coeff((2, 1), (4, 2)) == 1
    assert second_layer_coeff((2, 1), (4, 1, 1)) == 0
    assert second_layer_coeff((3, 2, 1), (8, 3, 1)) == 2
    assert second_layer_expansion((2, 1)) == {(4, 2): 1}
    with pytest.raises(PreconditionError):
        second_layer_coeff((2, 1), (5, 1))


def _second_layer_check(engine, limit):
    for n in range(2, limit + 1):
        for nu in partitions_of(n):
            if nu.length < 2:
                continue
            first = n + nu.part(1) - 1
            for lam in partitions_of(2 * n):
                if lam.part(1) == first:
                    expected = engine.plethysm_coefficient(nu, (2,), lam)
                    assert second_layer_coeff(nu, lam) == expected, (nu, lam)


def test_second_layer_matches_engine(engine):
    _second_layer_check(engine, 5)


@pytest.mark.slow
def test_second_layer_matches_engine_sweep(engine):
    _second_layer_check(engine, 7)


def test_three_removable_nodes_give_a_two():
    for n in range(6, 9):
        for nu in partitions_of(n):
            if rem(nu) >= 3:
                lam = add_node(epsilon_shift(bar(nu), 1, -1), 2)
                assert second_layer_coeff(nu, lam) >= 2, nu


def test_rsk_insert_and_reverse():
    tableau = SemistandardTableau([[1, 2], [3]])
    grown, row = rsk_row_insert(tableau, 1)
    assert grown.rows == ((1, 1), (2,), (3,))
    assert row == 3
    shrunk, value = rsk_reverse_bump(grown, 3)
    assert shrunk == tableau
    assert value == 1
    appended, row = rsk_row_insert(tableau, 3, 2)
    assert appended.rows == ((1, 2), (3, 3))
    assert row == 2


def test_phi_bumps_into_one_row():
    source = _big_example([2, 2, 2, 2, 2], (2, 3))
    assert source.weight() == (25, 6, 5, 3, 3)
    image = phi_map(source)
    assert image.kind == BUMPED
    assert image.shape == (25, 7, 4, 4, 2)
    assert image.pair == (2, 2)
    assert image.tableau.rows[1] == (2, 2, 2, 2, 2, 2, 3)
    assert phi_inverse(image) == source


def test_phi_bumps_into_two_rows():
    source = _big_example([2, 2, 2, 2, 3], (2, 2))
    assert source.weight() == (25, 6, 5, 3, 3)
    image = phi_map(source)
    assert image.kind == BUMPED
    assert image.shape == (25, 6, 5, 4, 2)
    assert image.pair == (3, 2)
    assert phi_inverse(image) == source


def test_phi_top_row():
    source = _two_row_entries((2, 1), [[1, 2], [3]])
    image = phi_map(source)
    assert image.kind == TOP_ROW
    assert image.tableau.rows == ((1, 1, 1, 1, 2), (3,))
    assert phi_inverse(image) == source


def test_phi_deleted_ones():
    source = _two_row_entries((2, 2), [[1, 2], [2, 3]])
    image = phi_map(source)
    assert image.kind == DELETED_ONES
    assert image.tableau.rows == ((1, 2), (2, 3))
    assert phi_inverse(image) == source


def test_phi_rejects_wrong_weight():
    with pytest.raises(PreconditionError):
        phi_map(_two_row_entries((2, 1), [[2, 2], [3]]))


@pytest.mark.parametrize("nu", [(2, 1), (3, 1), (3, 2, 1)])
def test_phi_is_a_bijection_by_counting(nu):
    n = sum(nu)
    top = n + nu[0] - 1
    support = second_layer_support(nu)
    for lam in partitions_of(2 * n):
        if lam.part(1) != top:
            continue
        tableaux = enumerate_pstd((2,), nu, lam)
        images = [phi_map(t) for t in tableaux]
        assert len(set(images)) == len(images)
        expected = kostka(bar(nu), lam) + sum(kostka(beta, lam) * len(support.pairs(beta)) for beta in support.shapes())
        assert len(images) == expected, lam
        for tableau, image in zip(tableaux, images):
            assert phi_inverse(image) == tableau


def test_phi_tilde_companion():
    kind, tableau = phi_tilde_companion(SemistandardTableau([[1, 1, 1, 1, 1, 2], [2, 3]]), (2, 2))
    assert kind == DELETED_ONES
    assert tableau.rows == ((1, 2), (2, 3))
    kind, tableau = phi_tilde_companion(SemistandardTableau([[1, 1, 1, 1, 1, 3], [2, 2]]), (2, 2))
    assert kind == TOP_ROW
    assert tableau.rows == ((1, 1, 1, 1, 1), (2, 2, 3))
    with pytest.raises(PreconditionError):
        phi_tilde_companion(SemistandardTableau([[1, 1, 1, 1, 2], [2]]), (2, 1))
