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

from common.errors import BudgetExceededError, InternalConsistencyError, PreconditionError, SizeMismatchError
from common.partitions import partitions_of
from models.partition import Partition
from models.verdict import (ADD_COLUMN, BRION_ROW, CONJUGATE, NOT_ENGINE_VERIFIED, NOT_LISTED, SEED, UNION_ROW,
                            GrowthStep, MFVerdict, WitnessCertificate)
from services.classifier import (LINEAR_SEEDS, grow, is_multiplicity_free, named_seed, outer_mf, replay, route_name,
                                 square_family)
from services.commands import load_golden


def _pairs(limit):
    for n in range(1, limit + 1):
        for m in range(1, limit // n + 1):
            for nu in partitions_of(n):
                for mu in partitions_of(m):
                    yield nu, mu


@pytest.mark.parametrize("nu, mu, verdict, clause, detail", [
    ((1,), (3, 2), True, "i", "unit partition"),
    ((4, 2), (1,), True, "i", "unit partition"),
    ((2,), (2,), True, "ii", "rectangle"),
    ((2,), (3, 3), True, "ii", "rectangle"),
    ((2,), (3, 1, 1), True, "ii", "hook"),
    ((1, 1), (3, 2, 2), True, "ii", "rectangle with a longer first row"),
    ((2,), (3, 3, 1), True, "ii", "rectangle with a unit row"),
    ((2,), (3, 3, 2), True, "ii", "rectangle with a shorter last row"),
    ((5,), (2,), True, "iii", "linear"),
    ((3, 1), (2,), True, "iii", "exception"),
    ((2, 1, 1, 1), (1, 1), True, "iii", "exception"),
    ((3,), (3,), True, "iv", "small linear pair"),
    ((2, 1), (3,), True, "iv", "exception"),
    ((1, 1), (4, 2), True, "iv", "exception"),
    ((2,), (4, 2), False, NOT_LISTED, None),
    ((5,), (3,), False, NOT_LISTED, None),
    ((3, 2), (2,), False, NOT_LISTED, None),
    ((2, 1), (2, 1), False, NOT_LISTED, None),
])
def test_is_multiplicity_free(nu, mu, verdict, clause, detail):
    result = is_multiplicity_free(nu, mu)
    assert bool(result) is verdict
    assert result.clause == clause
    assert result.detail == detail


def test_empty_partitions_are_rejected():
    with pytest.raises(PreconditionError):
        is_multiplicity_free((), (2,))


def test_verdict_round_trip():
    verdict = is_multiplicity_free((2,), (3, 3, 1))
    assert MFVerdict.from_dict(verdict.to_dict()) == verdict


def test_verdicts_match_golden_table(config):
    golden = load_golden(config.resolve_path("cli", "golden_table"))
    assert len(golden) > 300
    for (nu, mu), value in golden.items():
        assert bool(is_multiplicity_free(nu, mu)) == (value == 1), (nu, mu)


def test_verdicts_match_engine_small(engine):
    for nu, mu in _pairs(10):
        assert bool(is_multiplicity_free(nu, mu)) == (engine.max_multiplicity(nu, mu) == 1), (nu, mu)


@pytest.mark.slow
def test_verdicts_match_engine(engine):
    for nu, mu in _pairs(16):
        assert bool(is_multiplicity_free(nu, mu)) == (engine.max_multiplicity(nu, mu) == 1), (nu, mu)


def test_outer_mf_cases():
    assert outer_mf((3,), (2, 1))
    assert outer_mf((2, 2), (3, 1))
    assert outer_mf((3, 3, 3), (2, 2, 1, 1))
    assert outer_mf((2, 2), (2, 2))
    assert not outer_mf((2, 1), (2, 1))
    assert not outer_mf((3, 3), (3, 2, 1))
    assert outer_mf((), (3, 2, 1))


def _outer_pairs(limit):
    for total in range(2, limit + 1):
        for m in range(1, total):
            for mu in partitions_of(m):
                for nu in partitions_of(total - m):
                    yield mu, nu


def test_outer_mf_matches_oracle_small(oracle):
    for mu, nu in _outer_pairs(7):
        assert outer_mf(mu, nu) == oracle.outer_product(mu, nu).is_multiplicity_free(), (mu, nu)


@pytest.mark.slow
def test_outer_mf_matches_oracle(oracle):
    for mu, nu in _outer_pairs(10):
        assert outer_mf(mu, nu) == oracle.outer_product(mu, nu).is_multiplicity_free(), (mu, nu)


def test_grow_steps():
    assert grow(GrowthStep.union_row(3), (2,), (2,), (4,)) == ((2,), (3, 2), (6, 4))
    assert grow(GrowthStep.add_column((1,)), (2,), (2,), (4,)) == ((2,), (3,), (6,))
    assert grow(GrowthStep.add_column((1, 1)), (2,), (2,), (2, 2)) == ((2,), (3, 1), (4, 4))
    assert grow(GrowthStep.brion_row(1), (2,), (2,), (4,)) == ((3,), (2,), (6,))
    assert grow(GrowthStep.conjugate(), (2,), (2,), (2, 2)) == ((2,), (1, 1), (2, 2))
    assert grow(GrowthStep.conjugate(), (2, 1), (3,), (5, 4)) == ((2, 1), (1, 1, 1), (2, 2, 2, 2, 1))


def _growth_check(engine, source_degree, target_degree):
    for n in range(1, source_degree + 1):
        for m in range(1, source_degree // n + 1):
            for nu in partitions_of(n):
                for mu in partitions_of(m):
                    steps = [GrowthStep.union_row(mu.width), GrowthStep.union_row(mu.width + 1),
                             GrowthStep.add_column((1,)), GrowthStep.add_column((1, 1)),
                             GrowthStep.brion_row(1), GrowthStep.conjugate()]
                    for lam, value in engine.plethysm_expand(nu, mu).items():
                        for step in steps:
                            grown = grow(step, nu, mu, lam)
                            if grown[0].size * grown[1].size > target_degree:
                                continue
                            after = engine.plethysm_coefficient(*grown)
                            if step.kind in (UNION_ROW, CONJUGATE):
                                assert after == value, (nu, mu, lam, step.describe())
                            else:
                                assert after >= value, (nu, mu, lam, step.describe())


def test_growth_steps_never_lower_a_coefficient(engine):
    _growth_check(engine, 4, 10)


@pytest.mark.slow
def test_growth_steps_never_lower_a_coefficient_sweep(engine):
    _growth_check(engine, 6, 14)


def test_grow_rejects():
    with pytest.raises(PreconditionError):
        grow(GrowthStep.union_row(1), (2,), (2,), (4,))
    with pytest.raises(PreconditionError):
        grow(GrowthStep.seed((2,), (2,), (4,), 1, "x"), (2,), (2,), (4,))
    with pytest.raises(SizeMismatchError):
        grow(GrowthStep.conjugate(), (2,), (2,), (3,))
    with pytest.raises(PreconditionError):
        GrowthStep("shuffle")


def test_replay():
    steps = [GrowthStep.seed((4, 3), (2,), (8, 4, 2), 3, "two-line"), GrowthStep.brion_row(6)]
    assert replay(steps) == ((10, 3), (2,), (20, 4, 2))
    with pytest.raises(PreconditionError):
        replay(steps[1:])


@pytest.mark.parametrize("nu, mu, lam, value, source", [
    ((5, 1), (2,), (6, 4, 2), 2, "two-line"),
    ((4, 2), (2,), (6, 4, 2), 3, "two-line"),
    ((4, 3), (2,), (8, 4, 2), 3, "two-line"),
    ((3, 1, 1), (2,), (6, 3, 1), 2, "hook"),
    ((3, 1, 1, 1), (2,), (7, 3, 1, 1), 2, "hook"),
    ((3, 1, 1, 1, 1, 1), (2,), (9, 3, 1, 1, 1, 1), 2, "hook"),
    ((3, 1, 1, 1, 1, 1, 1), (2,), (10, 3, 1, 1, 1, 1, 1), 2, "hook"),
    ((2, 2, 1, 1, 1), (2,), (6, 4, 2, 1, 1), 3, "two columns"),
    ((2, 2, 1, 1, 1, 1), (2,), (7, 4, 2, 1, 1, 1), 3, "two columns"),
    ((3, 3, 3, 3), (2,), (13, 5, 3, 3), 2, "rectangle"),
    ((2, 2, 1, 1), (2,), (5, 4, 2, 1), 2, "two columns"),
    ((2, 2, 2, 1, 1), (2,), (6, 5, 2, 1, 1, 1), 2, "two columns"),
    ((4, 4), (2,), (10, 4, 2), 2, "two-row rectangle"),
    ((2, 2, 2), (2,), (6, 4, 2), 2, "rectangle"),
    ((3, 3, 3), (2,), (10, 5, 3), 2, "rectangle"),
    ((2,), (3, 2, 1), (5, 4, 2, 1), 2, "staircase"),
    ((1, 1), (3, 2, 1), (5, 4, 2, 1), 2, "staircase"),
    ((3, 2, 1), (2,), (8, 3, 1), 2, "second layer"),
])
def test_named_seed(nu, mu, lam, value, source):
    seed = named_seed(nu, mu)
    assert seed.kind == SEED
    assert seed.lam == lam
    assert seed.coefficient == value
    assert seed.source == source


def test_no_named_seed():
    assert named_seed((10, 3), (2,)) is None
    assert named_seed((2, 1), (2, 1)) is None
    assert named_seed((2, 2, 1), (2,)) is None


@pytest.mark.parametrize("nu, mu", [
    ((5, 1), (2,)),
    ((4, 2), (2,)),
    ((3, 1, 1), (2,)),
    ((3, 1, 1, 1), (2,)),
    ((2, 2, 1, 1), (2,)),
    ((2, 2, 2), (2,)),
    ((2,), (3, 2, 1)),
    ((1, 1), (3, 2, 1)),
    ((3, 2, 1), (2,)),
])
def test_named_seed_matches_engine(engine, nu, mu):
    seed = named_seed(nu, mu)
    assert engine.plethysm_coefficient(nu, mu, seed.lam) == seed.coefficient


@pytest.mark.slow
@pytest.mark.parametrize("nu, mu", [
    ((4, 3), (2,)),
    ((2, 2, 2, 1, 1), (2,)),
    ((4, 4), (2,)),
    ((5, 5), (2,)),
    ((3, 3, 3), (2,)),
    ((2, 2, 2, 2), (2,)),
    ((3, 1, 1, 1, 1), (2,)),
    ((3, 1, 1, 1, 1, 1), (2,)),
    ((3, 1, 1, 1, 1, 1, 1), (2,)),
    ((2, 2, 1, 1, 1), (2,)),
    ((2, 2, 1, 1, 1, 1), (2,)),
    ((3, 3, 3, 3), (2,)),
])
def test_named_seed_matches_engine_slow(engine, nu, mu):
    seed = named_seed(nu, mu)
    assert engine.plethysm_coefficient(nu, mu, seed.lam) == seed.coefficient


def test_witness_for_a_seed_pair(classifier):
    certificate = classifier.witness((5, 1), (2,))
    assert certificate.lam == (6, 4, 2)
    assert certificate.coefficient == 2
    assert certificate.engine_coefficient == 2
    assert certificate.seed.source == "two-line"
    assert [step.kind for step in certificate.steps] == [SEED]
    assert classifier.witness((4, 2), (2,)).engine_coefficient == 3


def test_witness_for_the_staircase(classifier):
    certificate = classifier.witness((2,), (3, 2, 1))
    assert certificate.lam == (5, 4, 2, 1)
    assert certificate.engine_coefficient == 2


def test_witness_through_brion_rows(classifier):
    certificate = classifier.witness((10, 3), (2,))
    assert certificate.lam == (20, 4, 2)
    assert certificate.coefficient == 3
    assert [step.kind for step in certificate.steps] == [SEED, BRION_ROW]
    assert certificate.steps[1].r == 6
    assert not certificate.engine_verified
    assert certificate.status == NOT_ENGINE_VERIFIED
    assert WitnessCertificate.from_dict(certificate.to_dict()) == certificate


def test_witness_falls_back_to_the_engine(classifier):
    certificate = classifier.witness((3, 2), (2,))
    assert certificate.seed.source == "engine"
    assert certificate.engine_coefficient == 2
    assert replay(certificate.steps) == ((3, 2), (2,), certificate.lam)


def test_no_witness_for_multiplicity_free_pairs(classifier):
    assert classifier.witness((2,), (3, 3)) is None
    assert classifier.witness((1,), (4, 2)) is None


def test_certify_checks_the_end_pair(classifier):
    steps = [GrowthStep.seed((5, 1), (2,), (6, 4, 2), 2, "two-line")]
    with pytest.raises(InternalConsistencyError):
        classifier.certify((4, 2), (2,), steps)


def _check_witnesses(engine, classifier, limit):
    for nu, mu in _pairs(limit):
        if is_multiplicity_free(nu, mu):
            continue
        certificate = classifier.witness(nu, mu)
        assert replay(certificate.steps) == (nu, mu, certificate.lam)
        assert certificate.engine_coefficient >= 2, (nu, mu)
        assert certificate.engine_coefficient == engine.plethysm_coefficient(nu, mu, certificate.lam)


def test_witnesses_small(engine, classifier):
    _check_witnesses(engine, classifier, 10)


@pytest.mark.slow
def test_witnesses(engine, classifier):
    _check_witnesses(engine, classifier, 16)


def test_grow_from_two_by_columns(classifier):
    certificate = classifier.grow_from_two((5, 1), (3,))
    assert certificate.lam == (12, 4, 2)
    assert [step.kind for step in certificate.steps] == [SEED, ADD_COLUMN]
    assert certificate.status == NOT_ENGINE_VERIFIED


def test_grow_from_two_by_rows(classifier):
    certificate = classifier.grow_from_two((5, 1), (2, 2), seeds={(5, 1): ((6, 4, 2), 2)})
    assert certificate.seed.source == "supplied"
    assert [step.kind for step in certificate.steps] == [SEED, UNION_ROW]
    assert certificate.lam == (12, 6, 4, 2)


def test_grow_from_two_needs_a_seed(classifier):
    with pytest.raises(PreconditionError):
        classifier.grow_from_two((3, 2), (2, 1))
    with pytest.raises(PreconditionError):
        classifier.grow_from_two((5, 1), (1,))


@pytest.mark.slow
def test_grow_from_two_with_unit_rows(classifier):
    certificate = classifier.grow_from_two((3, 1, 1), (2, 1))
    assert [step.kind for step in certificate.steps] == [SEED, CONJUGATE, ADD_COLUMN, CONJUGATE]
    assert certificate.lam == (6, 3, 1, 1, 1, 1, 1, 1)
    assert certificate.engine_coefficient >= 2
    certificate = classifier.grow_from_two((3, 1, 1), (1, 1, 1))
    assert [step.kind for step in certificate.steps] == [SEED, ADD_COLUMN, CONJUGATE]
    assert certificate.engine_coefficient >= 2


@pytest.mark.parametrize("nu, mu, lam", [
    ((3,), (6,), (12, 6)),
    ((4,), (4,), (12, 4)),
    ((5,), (3,), (9, 4, 2)),
    ((3,), (1,) * 6, (2,) * 6 + (1,) * 6),
    ((4,), (1,) * 4, (2,) * 4 + (1,) * 8),
    ((6,), (1,) * 3, (4, 3, 3, 3, 1, 1, 1, 1, 1)),
    ((1,) * 5, (4,), (12, 6, 2)),
])
def test_linear_seeds(nu, mu, lam):
    seed = named_seed(nu, mu)
    assert seed.source == "linear"
    assert seed.lam == lam
    assert seed.coefficient == 2
    assert not is_multiplicity_free(nu, mu)


@pytest.mark.parametrize("nu, lam, source", [
    ((2, 2, 2, 1), (5, 4, 3, 1, 1), "two columns with a unit row"),
    ((2, 2, 2, 2, 1), (6, 5, 3, 1, 1, 1, 1), "two columns with a unit row"),
    ((2,) + (1,) * 7, (6, 5, 4, 2, 1), "two columns with one long"),
    ((2,) + (1,) * 8, (7, 5, 4, 2, 1, 1), "two columns with one long"),
])
def test_two_column_seeds(nu, lam, source):
    seed = named_seed(nu, (2,))
    assert seed.source == source
    assert seed.lam == lam
    assert seed.coefficient == 2


@pytest.mark.slow
@pytest.mark.parametrize("nu, mu", list(LINEAR_SEEDS) + [
    (Partition((2, 2, 2, 1)), Partition((2,))),
    (Partition((2, 2, 2, 2, 1)), Partition((2,))),
    (Partition((2,) + (1,) * 7), Partition((2,))),
])
def test_new_seeds_match_engine(engine, nu, mu):
    seed = named_seed(nu, mu)
    assert engine.plethysm_coefficient(nu, mu, seed.lam) >= seed.coefficient


@pytest.mark.parametrize("nu, mu, kinds, lam", [
    ((3,), (6,), [SEED], (12, 6)),
    ((3,), (7,), [SEED, ADD_COLUMN], (15, 6)),
    ((6,), (1, 1, 1), [SEED], (4, 3, 3, 3, 1, 1, 1, 1, 1)),
    ((7,), (1, 1, 1), [SEED, BRION_ROW], (5, 4, 4, 3, 1, 1, 1, 1, 1)),
    ((4,), (1,) * 7, [SEED, UNION_ROW, BRION_ROW], (4, 3, 3, 3, 3, 3, 3, 1, 1, 1, 1, 1, 1)),
    ((5,), (4,), [SEED, BRION_ROW], (16, 4)),
    ((6,), (3,), [SEED, BRION_ROW], (12, 4, 2)),
    ((1,) * 5, (4,), [SEED], (12, 6, 2)),
    pytest.param((1,) * 5, (1, 1, 1), [SEED, CONJUGATE], (3, 3, 2, 2, 1, 1, 1, 1, 1), marks=pytest.mark.slow),
])
def test_linear_witnesses(classifier, nu, mu, kinds, lam):
    certificate = classifier.witness(nu, mu)
    assert [step.kind for step in certificate.steps] == kinds
    assert certificate.lam == lam
    assert replay(certificate.steps) == (nu, mu, lam)


def test_linear_witness_through_a_removed_box(classifier):
    certificate = classifier.witness((1,) * 5, (6,))
    assert certificate.seed.nu == (4,)
    assert certificate.seed.mu == (1, 1, 1, 1)
    assert [step.kind for step in certificate.steps][-2:] == [CONJUGATE, ADD_COLUMN]
    assert replay(certificate.steps) == ((1,) * 5, (6,), certificate.lam)


def _linear_family(limit):
    for n in range(1, limit + 1):
        for m in range(1, limit // n + 1):
            for nu in {Partition((n,)), Partition((1,) * n)}:
                for mu in {Partition((m,)), Partition((1,) * m)}:
                    yield nu, mu


def test_linear_family_witnesses_replay(classifier):
    for nu, mu in _linear_family(24):
        if is_multiplicity_free(nu, mu) or nu.size * mu.size <= classifier.verify_max_degree:
            continue
        certificate = classifier.witness(nu, mu)
        assert certificate.seed.source == "linear", (nu, mu)
        assert replay(certificate.steps) == (nu, mu, certificate.lam)


@pytest.mark.slow
def test_linear_family_witnesses(engine, classifier):
    for nu, mu in _linear_family(24):
        if is_multiplicity_free(nu, mu):
            continue
        certificate = classifier.witness(nu, mu)
        assert replay(certificate.steps) == (nu, mu, certificate.lam)
        assert engine.plethysm_coefficient(nu, mu, certificate.lam) >= 2, (nu, mu)


@pytest.mark.parametrize("nu, expected", [
    ((2,), "size_two"),
    ((1, 1), "size_two"),
    ((4,), "linear"),
    ((1, 1, 1), "linear"),
    ((3, 2, 1), "three_removable"),
    ((3, 3), "rectangle"),
    ((2, 2, 2), "rectangle"),
    ((5, 2), "two_line"),
    ((2, 2, 1, 1), "two_line"),
    ((4, 1, 1), "hook"),
    ((3, 3, 1), "proper_fat_hook"),
    ((4, 2, 2), "proper_fat_hook"),
])
def test_route_name(nu, expected):
    assert route_name(nu) == expected


def test_square_family_of_a_linear_partition():
    assert square_family((5,)) == "linear"


@pytest.mark.parametrize("nu, kinds, source, lam", [
    ((3, 2, 1), [SEED], "second layer", (8, 3, 1)),
    ((3, 3, 3), [SEED], "rectangle", (10, 5, 3)),
    ((7, 1), [SEED, BRION_ROW], "two-line", (10, 4, 2)),
    ((10, 3), [SEED, BRION_ROW], "two-line", (20, 4, 2)),
    ((5, 1, 1), [SEED, BRION_ROW], "hook", (10, 3, 1)),
    ((4,) + (1,) * 7, [SEED, BRION_ROW], "two columns with one long", (10, 5, 4, 2, 1)),
    ((4, 2, 2), [SEED, BRION_ROW], "rectangle", (10, 4, 2)),
    ((2, 2, 2, 1), [SEED], "two columns with a unit row", (5, 4, 3, 1, 1)),
])
def test_square_steps(classifier, nu, kinds, source, lam):
    steps = classifier.square_steps(nu)
    assert [step.kind for step in steps] == kinds
    assert steps[0].source == source
    end_nu, end_mu, end_lam = replay(steps)
    assert (end_nu, end_mu) == (nu, (2,))
    if lam is not None:
        assert end_lam == lam


def test_square_steps_without_a_seed(classifier):
    assert classifier.square_steps((3, 1)) is None
    assert classifier.square_steps((6,)) is None
    assert classifier.square_steps((2,) + (1,) * 5) is None


def test_rectangle_route_lifts_to_a_unit_row(classifier):
    certificate = classifier.witness((3, 3, 3), (2, 1))
    assert [step.kind for step in certificate.steps] == [SEED, CONJUGATE, ADD_COLUMN, CONJUGATE]
    assert certificate.seed.source == "rectangle"
    assert certificate.lam == (10, 5, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1)
    assert not certificate.engine_verified


def test_hook_route_lifts_by_rows(classifier):
    certificate = classifier.witness((5, 1, 1), (3, 2))
    assert [step.kind for step in certificate.steps] == [SEED, BRION_ROW, UNION_ROW]
    assert certificate.lam == (21, 10, 3, 1)


def test_size_two_route_through_the_staircase(classifier):
    certificate = classifier.witness((2,), (5, 3, 1))
    assert certificate.seed.source == "staircase"
    assert replay(certificate.steps) == ((2,), (5, 3, 1), certificate.lam)


@pytest.mark.slow
def test_size_two_route_by_columns(classifier):
    certificate = classifier.witness((1, 1), (4, 2, 1))
    assert certificate.seed.source == "staircase"
    assert [step.kind for step in certificate.steps] == [SEED, ADD_COLUMN]
    assert certificate.lam == (7, 4, 2, 1)


def test_size_two_route_for_a_fat_hook(classifier):
    certificate = classifier.witness((2,), (4, 2))
    assert certificate.seed.source == "engine"
    assert replay(certificate.steps) == ((2,), (4, 2), certificate.lam)
    assert certificate.engine_coefficient >= 2


@pytest.mark.parametrize("nu, mu", [
    ((3,), (2, 1)),
    ((1, 1, 1), (2, 1)),
    ((3,), (2, 2)),
    ((3,), (3, 1)),
    pytest.param((1, 1, 1, 1), (2, 1, 1), marks=pytest.mark.slow),
])
def test_linear_routes_for_small_inner_partitions(classifier, nu, mu):
    certificate = classifier.witness(nu, mu)
    assert certificate.seed.mu in ((2, 1), (2, 2))
    assert certificate.engine_coefficient >= 2


def test_linear_route_for_a_large_rectangle(classifier):
    certificate = classifier.witness((5,), (4, 4, 4))
    assert certificate.seed.nu == (3,)
    assert certificate.seed.mu == (2, 2)
    assert [step.kind for step in certificate.steps] == [SEED, ADD_COLUMN, UNION_ROW, BRION_ROW]
    assert replay(certificate.steps) == ((5,), (4, 4, 4), certificate.lam)


def test_linear_route_for_a_large_hook(classifier):
    certificate = classifier.witness((1,) * 4, (5, 2, 2, 1))
    assert certificate.seed.mu == (2, 1)
    assert replay(certificate.steps) == ((1, 1, 1, 1), (5, 2, 2, 1), certificate.lam)
    assert not certificate.engine_verified


def test_uncovered_pair_exceeds_the_budget(classifier):
    with pytest.raises(BudgetExceededError):
        classifier.witness((1,) * 7, (2, 2))
