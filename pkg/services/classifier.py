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

import logging
from collections import deque

from common.errors import BudgetExceededError, InternalConsistencyError, PreconditionError, SizeMismatchError
from common.partitions import (HOOK, LINEAR, NEAR_RECTANGLE, PROPER_FAT_HOOK, RECTANGLE, TWO_LINE, add_horizontal, bar,
                               classify, conjugate, epsilon_shift, is_hook, is_linear, is_rectangle, is_two_line,
                               rem, removable_nodes, scale, shift_symmetric, union_vertical)
from models.partition import Partition
from models.verdict import (ADD_COLUMN, BRION_ROW, CONJUGATE, SEED, UNION_ROW, GrowthStep, MFVerdict,
                            WitnessCertificate)
from services.engine import conjugate_transport, nu_m
from services.near_maximal import second_layer_expansion

TWO = Partition((2,))

# ν ≠ linear with s_ν∘s_(2) multiplicity-free
SQUARE_EXCEPTIONS = frozenset(
    [Partition(p) for p in ((4, 1), (3, 1), (2, 2), (3, 3), (2, 2, 1))]
    + [Partition((2,) + (1,) * a) for a in range(1, 7)]
)

LINEAR_EXCLUSIONS = frozenset(
    (Partition(nu), Partition(mu))
    for nu, mu in (((5,), (3,)), ((1,) * 5, (1,) * 3), ((4,), (4,)), ((4,), (1,) * 4))
)

SMALL_EXCEPTIONS = frozenset(
    (Partition(nu), Partition(mu))
    for nu, mu in (
        ((1, 1), (4, 2)),
        ((1, 1), (2, 2, 1, 1)),
        ((1, 1, 1), (6,)),
        ((1, 1, 1), (1,) * 6),
        ((1, 1, 1), (2, 2)),
        ((2, 1), (3,)),
        ((2, 1), (1, 1, 1))
    )
)

# the two-line seeds for s_ν∘s_(2)
TWO_LINE_SEEDS = {
    Partition((5, 1)): (Partition((6, 4, 2)), 2),
    Partition((4, 2)): (Partition((6, 4, 2)), 3),
    Partition((4, 3)): (Partition((8, 4, 2)), 3),
}

# two-row (b, a) grows by Brion rows from these, or from (a, a) when a > 3
TWO_ROW_BASES = {1: (5, 1), 2: (4, 2), 3: (4, 3)}

LINEAR_SEEDS = {
    (Partition(nu), Partition(mu)): (Partition(lam), value)
    for nu, mu, lam, value in (
        ((3,), (6,), (12, 6), 2),
        ((4,), (4,), (12, 4), 2),
        ((5,), (3,), (9, 4, 2), 2),
        ((3,), (1,) * 6, (2,) * 6 + (1,) * 6, 2),
        ((4,), (1,) * 4, (2,) * 4 + (1,) * 8, 2),
        ((6,), (1,) * 3, (4, 3, 3, 3) + (1,) * 5, 2),
        ((1,) * 5, (4,), (12, 6, 2), 2)
    )
}

# (n0, m0) with a seed for (n0)∘(m0), resp. (n0)∘(1^m0)
ROW_ROW_SEEDS = ((3, 6), (4, 4), (5, 3))
ROW_COLUMN_SEEDS = ((3, 6), (4, 4), (6, 3))

# (1^n)∘(a, a) grows from (1^n)∘(base, base)
COLUMN_RECTANGLE_BASES = {3: (3,), 4: (2,)}

SIZE_TWO = "size_two"
THREE_REMOVABLE = "three_removable"


def _size_two_family(mu):
    """The family of μ that makes s_ν∘s_μ multiplicity-free for ν ⊢ 2, or None."""
    parts = mu.parts
    a = parts[0]
    if is_rectangle(mu):
        return "rectangle"
    if is_hook(mu):
        return "hook"
    if all(p == a - 1 for p in parts[1:]):
        return "rectangle with a longer first row"
    if parts[-1] == 1 and all(p == a for p in parts[:-1]):
        return "rectangle with a unit row"
    if parts[-1] == a - 1 and all(p == a for p in parts[:-1]):
        return "rectangle with a shorter last row"
    return None


def is_multiplicity_free(nu, mu):
    """Decides whether s_ν∘s_μ is multiplicity-free.

    When several clauses apply the lowest-numbered one is reported.

    Returns:
        MFVerdict with clause "i" to "iv", or "not listed" when none applies.
    """
    nu, mu = Partition.coerce(nu), Partition.coerce(mu)
    if not nu.size or not mu.size:
        raise PreconditionError("is_multiplicity_free needs nonempty partitions")
    if nu.parts == (1,) or mu.parts == (1,):
        return MFVerdict(nu, mu, True, "i", "unit partition")
    if nu.size == 2:
        family = _size_two_family(mu)
        if family is not None:
            return MFVerdict(nu, mu, True, "ii", family)
    if mu.size == 2:
        if is_linear(nu):
            return MFVerdict(nu, mu, True, "iii", "linear")
        if nu in SQUARE_EXCEPTIONS:
            return MFVerdict(nu, mu, True, "iii", "exception")
    if is_linear(nu) and is_linear(mu) and nu.size + mu.size <= 8 and (nu, mu) not in LINEAR_EXCLUSIONS:
        return MFVerdict(nu, mu, True, "iv", "small linear pair")
    if (nu, mu) in SMALL_EXCEPTIONS:
        return MFVerdict(nu, mu, True, "iv", "exception")
    return MFVerdict(nu, mu, False)


def outer_mf(mu, nu):
    """Whether the outer product s_μ s_ν is multiplicity-free."""
    mu, nu = Partition.coerce(mu), Partition.coerce(nu)
    if not mu.size or not nu.size or is_linear(mu) or is_linear(nu):
        return True
    for x, y in ((mu, nu), (nu, mu)):
        if not is_rectangle(x):
            continue
        if is_rectangle(y) or NEAR_RECTANGLE in classify(y):
            return True
        if is_two_line(x) and rem(y) <= 2:
            return True
    return False


def grow(step, nu, mu, lam):
    """Applies one growth step to the triple (ν, μ, λ).

    The coefficient of the result is at least that of the input; union_row
    and conjugate preserve it exactly.
    """
    nu, mu, lam = Partition.coerce(nu), Partition.coerce(mu), Partition.coerce(lam)
    n = nu.size
    if lam.size != n * mu.size:
        raise SizeMismatchError(f"|{lam}| = {lam.size} but |ν||μ| = {n * mu.size}")
    if step.kind == UNION_ROW:
        if step.r < mu.width:
            raise PreconditionError(f"union_row needs r ≥ w(μ) = {mu.width}, got {step.r}")
        return nu, union_vertical((step.r,), mu), union_vertical((n * step.r,), lam)
    if step.kind == ADD_COLUMN:
        return nu, add_horizontal(step.alpha, mu), add_horizontal(scale(step.alpha, n), lam)
    if step.kind == BRION_ROW:
        if step.r < 0:
            raise PreconditionError(f"brion_row needs r ≥ 0, got {step.r}")
        return add_horizontal(nu, (step.r,)), mu, add_horizontal(lam, scale(mu, step.r))
    if step.kind == CONJUGATE:
        return conjugate_transport(nu, mu, lam)
    raise PreconditionError(f"cannot grow by a {step.kind} step")


def replay(steps):
    """Runs a derivation from its seed and returns the final triple."""
    if not steps or steps[0].kind != SEED:
        raise PreconditionError("a derivation starts with a seed step")
    seed = steps[0]
    triple = (seed.nu, seed.mu, seed.lam)
    for step in steps[1:]:
        triple = grow(step, *triple)
    return triple


def named_seed(nu, mu):
    """A closed-form multiplicity of s_ν∘s_μ, as a seed step, or None."""
    nu, mu = Partition.coerce(nu), Partition.coerce(mu)
    if (nu, mu) in LINEAR_SEEDS:
        lam, value = LINEAR_SEEDS[(nu, mu)]
        return GrowthStep.seed(nu, mu, lam, value, "linear")
    parts = nu.parts
    if mu == TWO and nu.length >= 2:
        if nu in TWO_LINE_SEEDS:
            lam, value = TWO_LINE_SEEDS[nu]
            return GrowthStep.seed(nu, mu, lam, value, "two-line")
        ones = parts[1:].count(1)
        if parts[0] == 3 and ones == nu.length - 1 and 2 <= ones <= 6:
            lam = Partition((4 + ones, 3) + (1,) * (ones - 1))
            return GrowthStep.seed(nu, mu, lam, 2, "hook")
        if parts[0] == 2 and ones == nu.length - 1 and ones >= 7:
            return GrowthStep.seed(nu, mu, shift_symmetric((ones - 2, 3, 1)), 2, "two columns with one long")
        twos, ones = parts.count(2), parts.count(1)
        if twos + ones == nu.length and twos > 1 and ones > 1:
            lam = Partition((twos + ones + 1, twos + 2, 2) + (1,) * (2 * twos + ones - 5))
            return GrowthStep.seed(nu, mu, lam, 2 if ones == 2 else 3, "two columns")
        if twos + ones == nu.length and twos >= 3 and ones == 1:
            lam = Partition((twos + 2, twos + 1, 3) + (1,) * (2 * twos - 4))
            return GrowthStep.seed(nu, mu, lam, 2, "two columns with a unit row")
        if is_rectangle(nu):
            a, b = parts[0], nu.length
            if b == 2 and a > 3:
                return GrowthStep.seed(nu, mu, (3 * a - 2, a, 2), 2, "two-row rectangle")
            if a >= 2 and b >= 3:
                lam = epsilon_shift(epsilon_shift(bar(nu), 1, -2), 2, 2)
                return GrowthStep.seed(nu, mu, lam, 2, "rectangle")
    if nu.size == 2 and mu.parts == (3, 2, 1):
        return GrowthStep.seed(nu, mu, (5, 4, 2, 1), 2, "staircase")
    if mu == TWO and nu.length >= 2:
        layer = second_layer_expansion(nu)
        best = max(layer.values(), default=0)
        if best >= 2:
            lam = max(beta for beta, value in layer.items() if value == best)
            return GrowthStep.seed(nu, mu, lam, best, "second layer")
    return None


def square_family(nu):
    """The shape class that decides how a multiplicity of s_ν∘s_(2) is found."""
    nu = Partition.coerce(nu)
    tags = classify(nu)
    if LINEAR in tags:
        return LINEAR
    if rem(nu) >= 3:
        return THREE_REMOVABLE
    if RECTANGLE in tags:
        return RECTANGLE
    if TWO_LINE in tags:
        return TWO_LINE
    if HOOK in tags:
        return HOOK
    return PROPER_FAT_HOOK


def route_name(nu):
    """Which witness route handles outer partition ν."""
    nu = Partition.coerce(nu)
    if nu.size == 2:
        return SIZE_TWO
    return square_family(nu)


def _square_base(nu, family):
    """A smaller outer partition whose s_•∘s_(2) seed grows to ν by one Brion row, or None."""
    parts = nu.parts
    if family == TWO_LINE and nu.length == 2:
        a = parts[1]
        return Partition(TWO_ROW_BASES.get(a, (a, a)))
    if family == HOOK:
        legs = nu.length - 1
        return Partition(((3,) if legs <= 6 else (2,)) + (1,) * legs)
    if family == PROPER_FAT_HOOK and len(set(parts[1:])) == 1 and parts[1] >= 2:
        return Partition((parts[1],) * nu.length)
    return None


def _predecessors(nu, mu, last):
    """Smaller pairs together with the growth step leading back to (ν, μ)."""
    for r in range(1, nu.part(1) - nu.part(2) + 1):
        if r < nu.size:
            yield (epsilon_shift(nu, 1, -r), mu), GrowthStep.brion_row(r)
    if mu.length >= 2:
        yield (nu, mu.tail()), GrowthStep.union_row(mu.part(1))
    for r in sorted(removable_nodes(mu)):
        smaller = Partition([p - 1 if i < r else p for i, p in enumerate(mu.parts)])
        if smaller.size:
            yield (nu, smaller), GrowthStep.add_column([1] * r)
    if last != CONJUGATE:
        yield (nu_m(nu, mu.size), conjugate(mu)), GrowthStep.conjugate()


def _lift_outer(nu, mu):
    """The partition whose s_•∘s_(2) seed lifts to s_ν∘s_μ."""
    units = mu.parts.count(1)
    if units == mu.length:
        return nu_m(nu, mu.size)
    return nu if units % 2 == 0 else conjugate(nu)


def _unit_row():
    return [GrowthStep.conjugate(), GrowthStep.add_column((1,)), GrowthStep.conjugate()]


class Classifier:
    """Multiplicity-freeness verdicts and witness certificates for s_ν∘s_μ."""

    def __init__(self, engine, config_service):
        self.engine = engine
        self.config_service = config_service
        self.verify_max_degree = config_service.get_int("witness", "verify_max_degree", 16)
        self.seed_max_degree = config_service.get_int("witness", "seed_max_degree", 16)
        self.base_seed_max_degree = config_service.get_int("witness", "base_seed_max_degree", 20)
        self.max_states = config_service.get_int("witness", "max_states", 20000)

    def is_multiplicity_free(self, nu, mu):
        return is_multiplicity_free(nu, mu)

    def outer_mf(self, mu, nu):
        return outer_mf(mu, nu)

    def grow(self, step, nu, mu, lam):
        return grow(step, nu, mu, lam)

    def named_seed(self, nu, mu):
        return named_seed(nu, mu)

    def _engine_seed(self, nu, mu):
        expansion = self.engine.plethysm_expand(nu, mu)
        best = expansion.max_coefficient()
        if best < 2:
            return None
        lam = next(lam for lam, value in expansion.items() if value == best)
        return GrowthStep.seed(nu, mu, lam, best, "engine")

    def _seed_at(self, nu, mu, budget=None):
        nu, mu = Partition.coerce(nu), Partition.coerce(mu)
        seed = named_seed(nu, mu)
        budget = min(budget or self.seed_max_degree, self.engine.max_degree)
        if seed is None and nu.size * mu.size <= budget:
            if not is_multiplicity_free(nu, mu):
                seed = self._engine_seed(nu, mu)
        return seed

    def certify(self, nu, mu, steps):
        """Replays `steps`, checks that they end at (ν, μ) and engine-verifies when small enough.

        Returns:
            WitnessCertificate
        """
        nu, mu = Partition.coerce(nu), Partition.coerce(mu)
        end_nu, end_mu, lam = replay(steps)
        if (end_nu, end_mu) != (nu, mu):
            raise InternalConsistencyError(f"derivation ends at ({end_nu} | {end_mu}), not ({nu} | {mu})")
        engine_value = None
        degree = nu.size * mu.size
        if degree <= min(self.verify_max_degree, self.engine.max_degree):
            engine_value = self.engine.plethysm_coefficient(nu, mu, lam)
            if engine_value < 2:
                raise InternalConsistencyError(
                    f"witness p({nu} | {mu} | {lam}) = {engine_value} after growing {steps[0].describe()}"
                )
        else:
            logging.info("witness for s_%s∘s_%s at degree %d is not engine-verified", nu, mu, degree)
        return WitnessCertificate(nu, mu, lam, steps, engine_value)

    def square_steps(self, nu):
        """A derivation ending at a constituent of s_ν∘s_(2) with coefficient ≥ 2.

        Closed-form seeds come first. Two-row partitions, hooks and rectangles
        with a longer first row are reached from a smaller seed by Brion rows;
        anything else small enough is expanded by the engine.

        Returns:
            A list of growth steps, or None.
        """
        nu = Partition.coerce(nu)
        if nu.size < 3 or is_linear(nu) or nu in SQUARE_EXCEPTIONS:
            return None
        seed = named_seed(nu, TWO)
        if seed is not None:
            return [seed]
        base = _square_base(nu, square_family(nu))
        if base is not None and base != nu and base.part(1) <= nu.part(1):
            below = self.square_steps(base)
            if below is not None:
                return below + [GrowthStep.brion_row(nu.part(1) - base.part(1))]
        seed = self._seed_at(nu, TWO)
        return None if seed is None else [seed]

    def _lift_steps(self, nu, mu, seeds):
        head = [p for p in mu.parts if p > 1]
        units = mu.length - len(head)
        outer = _lift_outer(nu, mu)
        if outer in seeds:
            lam, value = seeds[outer]
            steps = [GrowthStep.seed(outer, TWO, lam, value, "supplied")]
        else:
            steps = self.square_steps(outer)
        if steps is None:
            return None
        if not head:
            if mu.size > 2:
                steps.append(GrowthStep.add_column((mu.size - 2,)))
            steps.append(GrowthStep.conjugate())
            return steps
        if head[-1] > 2:
            steps.append(GrowthStep.add_column((head[-1] - 2,)))
        for r in reversed(head[:-1]):
            steps.append(GrowthStep.union_row(r))
        for _ in range(units):
            steps.extend(_unit_row())
        return steps

    def grow_from_two(self, nu, mu, seeds=None):
        """Lifts multiplicities of s_ν∘s_(2) and s_{ν^T}∘s_(2) to s_ν∘s_μ for any μ ⊢ m > 1.

        Column additions build the last row of μ longer than 1, row unions add
        the rows above it, and each unit row is appended by conjugating,
        adding a single box and conjugating back. That last move swaps ν and
        ν^T, so the seed is taken at whichever of them the parity requires.

        Args:
            nu: The outer partition.
            mu: The target inner partition, |μ| ≥ 2.
            seeds: Optional mapping from ν or ν^T to a pair (λ, c) with
                ⟨s_•∘s_(2), s_λ⟩ = c ≥ 2. Missing entries are looked up.

        Returns:
            WitnessCertificate
        """
        nu, mu = Partition.coerce(nu), Partition.coerce(mu)
        if mu.size < 2:
            raise PreconditionError(f"grow_from_two needs |μ| > 1, got {mu}")
        seeds = {Partition.coerce(k): v for k, v in (seeds or {}).items()}
        steps = self._lift_steps(nu, mu, seeds)
        if steps is None:
            raise PreconditionError(f"no multiplicity known for s_{_lift_outer(nu, mu)}∘s_(2)")
        return self.certify(nu, mu, steps)

    def _linear_route(self, nu, mu):
        """Routes a linear ν, |ν| ≥ 3: linear μ, rectangles, then everything else through (2,1)."""
        if is_multiplicity_free(nu, mu):
            return None
        if is_linear(mu):
            return self._linear_pair_route(nu, mu)
        if is_rectangle(mu):
            return self._linear_rectangle_route(nu, mu)
        return self._linear_hook_route(nu, mu)

    def _linear_pair_route(self, nu, mu):
        n, m = nu.size, mu.size
        row = Partition((n,))
        if nu == row:
            across = mu.length == 1
            for n0, m0 in (ROW_ROW_SEEDS if across else ROW_COLUMN_SEEDS):
                if n < n0 or m < m0:
                    continue
                steps = [named_seed((n0,), (m0,) if across else (1,) * m0)]
                if across and m > m0:
                    steps.append(GrowthStep.add_column((m - m0,)))
                if not across:
                    steps.extend(GrowthStep.union_row(1) for _ in range(m - m0))
                if n > n0:
                    steps.append(GrowthStep.brion_row(n - n0))
                return steps
            return None
        if m % 2:
            below = self._linear_route(row, conjugate(mu))
            return None if below is None else below + [GrowthStep.conjugate()]
        if mu.width == 1:
            below = self._linear_route(nu, Partition((m,)))
            return None if below is None else below + [GrowthStep.conjugate()]
        seed = named_seed(nu, mu)
        if seed is not None:
            return [seed]
        below = self._linear_route(nu, Partition((m - 1,)))
        return None if below is None else below + [GrowthStep.add_column((1,))]

    def _linear_rectangle_route(self, nu, mu):
        n = nu.size
        a, b = mu.width, mu.length
        if nu.length == 1:
            seed = self._seed_at((3,), (2, 2))
            if seed is None:
                return None
            steps = [seed]
            if a > 2:
                steps.append(GrowthStep.add_column((a - 2, a - 2)))
            steps.extend(GrowthStep.union_row(a) for _ in range(b - 2))
            if n > 3:
                steps.append(GrowthStep.brion_row(n - 3))
            return steps
        if mu.size % 2:
            below = self._linear_route(Partition((n,)), conjugate(mu))
            return None if below is None else below + [GrowthStep.conjugate()]
        if b > 2:
            if a == 2:
                below = self._linear_route(nu, conjugate(mu))
                return None if below is None else below + [GrowthStep.conjugate()]
            below = self._linear_route(nu, Partition((a, a)))
            return None if below is None else below + [GrowthStep.union_row(a) for _ in range(b - 2)]
        # μ = (a, a) from here on
        for base in COLUMN_RECTANGLE_BASES.get(n, ()):
            if a >= base:
                seed = self._seed_at(nu, (base, base), self.base_seed_max_degree)
                if seed is not None:
                    extra = [GrowthStep.add_column((a - base, a - base))] if a > base else []
                    return [seed] + extra
        if a % 2:
            below = self._linear_route(nu, Partition((a,)))
            return None if below is None else below + [GrowthStep.union_row(a)]
        below = self._linear_route(nu, Partition((a - 1, a - 1)))
        return None if below is None else below + [GrowthStep.add_column((1, 1))]

    def _linear_hook_route(self, nu, mu):
        """Non-rectangular μ, built up from p(ν, (2,1)) ≥ 2.

        With i the last row of μ longer than the row below it, the hook at
        (i, μ_{i+1}) is grown first, then the columns to its left, then the
        rows above it.
        """
        n = nu.size
        parts = mu.parts
        i = max(k for k in range(1, mu.length) if parts[k - 1] > parts[k])
        a, c, d = parts[i - 1], parts[i], mu.length - i
        units = d - 1
        start = nu if units % 2 == 0 else conjugate(nu)
        seed = self._seed_at((3,), (2, 1))
        if seed is None:
            return None
        steps = [seed]
        if n > 3:
            steps.append(GrowthStep.brion_row(n - 3))
        if start.length > 1:
            steps.append(GrowthStep.conjugate())
        if a - c > 1:
            steps.append(GrowthStep.add_column((a - c - 1,)))
        for _ in range(units):
            steps.extend(_unit_row())
        if c > 1:
            steps.append(GrowthStep.add_column((c - 1,) * (d + 1)))
        for r in reversed(parts[:i - 1]):
            steps.append(GrowthStep.union_row(r))
        return steps

    def _size_two_route(self, nu, mu):
        """ν ⊢ 2: three removable nodes come down to the staircase, fat hooks to a small table entry."""
        if rem(mu) >= 3:
            columns = list(conjugate(mu).parts)
            c1, c2, c3 = sorted(set(columns), reverse=True)[:3]
            for c in (c1, c2, c3):
                columns.remove(c)
            if (c1, c2, c3) == (3, 2, 1):
                steps = [named_seed(nu, (3, 2, 1))]
                if columns:
                    steps.append(GrowthStep.add_column(conjugate(columns)))
                return steps
            start = nu_m(nu, c1 + c2 + c3)
            steps = [named_seed(start, (3, 2, 1))]
            alpha = [x for x in (c1 - 3, c2 - 2, c3 - 1) if x]
            if alpha:
                steps.append(GrowthStep.add_column(alpha))
            steps.append(GrowthStep.conjugate())
            if columns:
                steps.append(GrowthStep.add_column(conjugate(columns)))
            return steps
        state, path = self._descend(nu, mu)
        seed = self._seed_at(*state, self.base_seed_max_degree)
        return None if seed is None else [seed] + path

    @staticmethod
    def _descend(nu, mu):
        """Walks down to a pair with no smaller non-multiplicity-free predecessor.

        Returns:
            The pair reached and the forward steps from it back to (ν, μ).
        """
        state, last, path = (nu, mu), None, []
        while True:
            options = [(s, step) for s, step in _predecessors(*state, last) if not is_multiplicity_free(*s)]
            smaller = [o for o in options if o[0][0].size * o[0][1].size < state[0].size * state[1].size]
            if smaller:
                choice = min(smaller, key=lambda o: o[0][0].size * o[0][1].size)
            else:
                choice = next((o for o in options if o[1].kind == CONJUGATE), None)
            if choice is None:
                return state, path
            state, step = choice
            path.insert(0, step)
            last = step.kind

    def _route(self, nu, mu):
        name = route_name(nu)
        if name == SIZE_TWO:
            steps = self._size_two_route(nu, mu)
        elif name == LINEAR:
            steps = self._linear_route(nu, mu)
        else:
            steps = self._lift_steps(nu, mu, {})
        logging.debug("s_%s∘s_%s: %s route %s", nu, mu, name, "found a seed" if steps else "failed")
        return steps

    def witness(self, nu, mu):
        """A certificate that s_ν∘s_μ has a coefficient ≥ 2.

        The outer partition decides the route: ν ⊢ 2, linear ν, or a seed for
        s_ν∘s_(2) and s_{ν^T}∘s_(2) lifted to μ. When the route comes up
        empty, a backward search through the inverses of the growth steps
        looks for a closed-form seed, and failing that the smallest visited
        pair within the seed budget is expanded by the engine.

        Returns:
            WitnessCertificate, or None when s_ν∘s_μ is multiplicity-free.

        Raises:
            BudgetExceededError: nothing below the seed budget covers (ν, μ).
        """
        nu, mu = Partition.coerce(nu), Partition.coerce(mu)
        if is_multiplicity_free(nu, mu):
            logging.info("s_%s∘s_%s is multiplicity-free; no witness", nu, mu)
            return None
        steps = self._route(nu, mu)
        if steps is not None:
            logging.info("witness for s_%s∘s_%s: %s", nu, mu, steps[0].describe())
            return self.certify(nu, mu, steps)
        return self._search(nu, mu)

    def _search(self, nu, mu):
        start = (nu, mu)
        parents = {start: None}
        order = [start]
        queue = deque([(start, None)])
        while queue:
            state, last = queue.popleft()
            seed = named_seed(*state)
            if seed is not None:
                logging.info("witness for s_%s∘s_%s: %s after %d states", nu, mu, seed.describe(), len(parents))
                return self.certify(nu, mu, [seed] + self._path(parents, state))
            if len(parents) >= self.max_states:
                continue
            for smaller, step in _predecessors(*state, last):
                if smaller in parents or is_multiplicity_free(*smaller):
                    continue
                parents[smaller] = (state, step)
                order.append(smaller)
                queue.append((smaller, step.kind))
        logging.debug("no closed-form seed below s_%s∘s_%s; %d states searched", nu, mu, len(parents))
        budget = min(self.seed_max_degree, self.engine.max_degree)
        candidates = sorted(
            (s for s in order if s[0].size * s[1].size <= budget),
            key=lambda s: s[0].size * s[1].size
        )
        for state in candidates:
            seed = self._engine_seed(*state)
            if seed is not None:
                logging.info("witness for s_%s∘s_%s: %s", nu, mu, seed.describe())
                return self.certify(nu, mu, [seed] + self._path(parents, state))
        raise BudgetExceededError(f"witness for s_{nu}∘s_{mu}", nu.size * mu.size, budget)

    @staticmethod
    def _path(parents, state):
        """The forward steps from `state` back up to the search root."""
        steps = []
        while parents[state] is not None:
            state, step = parents[state]
            steps.append(step)
        return steps
