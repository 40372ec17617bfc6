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
import threading
from functools import lru_cache

from common.errors import BudgetExceededError, InternalConsistencyError, PreconditionError, SizeMismatchError
from common.partitions import (_dominates, add_horizontal, conjugate, is_upper_half, partitions_of,
                               union_vertical)
from models.expansion import SchurExpansion
from models.partition import Partition
from services.tableaux import kostka, pstd_count


def nu_m(nu, m):
    """ν^M: ν itself when m is even, ν^T when m is odd."""
    nu = Partition.coerce(nu)
    return nu if m % 2 == 0 else conjugate(nu)


def conjugate_transport(nu, mu, lam):
    """The triple (ν^M, μ^T, λ^T), whose plethysm coefficient equals p(ν, μ, λ)."""
    nu, mu, lam = Partition.coerce(nu), Partition.coerce(mu), Partition.coerce(lam)
    return nu_m(nu, mu.size), conjugate(mu), conjugate(lam)


def lex_max_constituent(nu, mu):
    """maxp(ν, μ) = (nμ_1, …, nμ_{ℓ-1}, nμ_ℓ − n + ν_1, ν_2, …); its coefficient is 1."""
    nu, mu = Partition.coerce(nu), Partition.coerce(mu)
    if not nu.size or not mu.size:
        raise PreconditionError("lex_max_constituent needs nonempty partitions")
    n = nu.size
    parts = [n * p for p in mu.parts]
    parts[-1] += nu.part(1) - n
    return Partition(parts + list(nu.parts[1:]))


@lru_cache(maxsize=None)
def _lex_positions(grade):
    return {lam: i for i, lam in enumerate(partitions_of(grade))}


class _Prefix:
    """The computed lex-prefix of one expansion s_ν∘s_μ."""

    def __init__(self, nu, mu):
        self.nu = nu
        self.mu = mu
        self.grade = nu.size * mu.size
        self.top = lex_max_constituent(nu, mu)
        self.order = partitions_of(self.grade)
        self.position = _lex_positions(self.grade)[self.top]
        self.values = {}
        self.nonzero = []

    @property
    def complete(self):
        return self.position >= len(self.order)


class PlethysmEngine:
    """Schur expansions of s_ν∘s_μ by the plethystic tableau recursion.

    Constituents are produced in decreasing lexicographic order starting at
    the lex-greatest one; each (ν, μ) keeps the prefix computed so far.
    """

    def __init__(self, config_service, max_degree=None, use_conjugation=None):
        self.config_service = config_service
        self.max_degree = max_degree or config_service.get_int("engine", "max_degree", 24)
        if use_conjugation is None:
            use_conjugation = config_service.get_bool("engine", "use_conjugation", True)
        self.use_conjugation = use_conjugation
        self._lock = threading.RLock()
        self._prefixes = {}

    def _check(self, nu, mu):
        if not nu.size or not mu.size:
            raise PreconditionError("plethysm needs nonempty partitions")
        degree = nu.size * mu.size
        if degree > self.max_degree:
            logging.info("engine refused s_%s∘s_%s at degree %d", nu, mu, degree)
            raise BudgetExceededError(f"plethysm s_{nu}∘s_{mu}", degree, self.max_degree)

    def _prefix(self, nu, mu):
        key = (nu.parts, mu.parts)
        prefix = self._prefixes.get(key)
        if prefix is None:
            logging.debug("new expansion cache for s_%s∘s_%s", nu, mu)
            prefix = _Prefix(nu, mu)
            self._prefixes[key] = prefix
        return prefix

    def _step(self, prefix):
        alpha = prefix.order[prefix.position]
        prefix.position += 1
        if self.use_conjugation and not is_upper_half(alpha):
            return
        value = pstd_count(prefix.mu, prefix.nu, alpha.parts)
        for beta, coefficient in prefix.nonzero:
            if _dominates(beta.parts, alpha.parts):
                value -= coefficient * kostka(beta, alpha.parts)
        if value < 0:
            raise InternalConsistencyError(
                f"negative intermediate {value} at {alpha} in s_{prefix.nu}∘s_{prefix.mu}"
            )
        prefix.values[alpha] = value
        if value:
            prefix.nonzero.append((alpha, value))

    def _prefix_coefficient(self, nu, mu, lam):
        with self._lock:
            prefix = self._prefix(nu, mu)
            if lam > prefix.top:
                return 0
            target = _lex_positions(prefix.grade)[lam]
            while prefix.position <= target:
                self._step(prefix)
            return prefix.values.get(lam, 0)

    def plethysm_coefficient(self, nu, mu, lam):
        """p(ν, μ, λ) = ⟨s_ν∘s_μ, s_λ⟩.

        Args:
            nu: The outer partition.
            mu: The inner partition.
            lam: A partition of |ν||μ|.

        Returns:
            The coefficient as a Python int; 0 above the lex-greatest constituent.
        """
        nu, mu, lam = Partition.coerce(nu), Partition.coerce(mu), Partition.coerce(lam)
        if lam.size != nu.size * mu.size:
            raise SizeMismatchError(f"|{lam}| = {lam.size} but |ν||μ| = {nu.size * mu.size}")
        self._check(nu, mu)
        if nu.parts == (1,):
            return int(lam == mu)
        if mu.parts == (1,):
            return int(lam == nu)
        if self.use_conjugation and not is_upper_half(lam):
            nu, mu, lam = conjugate_transport(nu, mu, lam)
        return self._prefix_coefficient(nu, mu, lam)

    def plethysm_expand(self, nu, mu):
        """The complete Schur expansion of s_ν∘s_μ."""
        nu, mu = Partition.coerce(nu), Partition.coerce(mu)
        self._check(nu, mu)
        grade = nu.size * mu.size
        if nu.parts == (1,):
            return SchurExpansion(grade, {mu: 1})
        if mu.parts == (1,):
            return SchurExpansion(grade, {nu: 1})
        with self._lock:
            prefix = self._prefix(nu, mu)
            while not prefix.complete:
                self._step(prefix)
            terms = dict(prefix.nonzero)
            if self.use_conjugation:
                other_nu, other_mu, _ = conjugate_transport(nu, mu, Partition(()))
                other = self._prefix(other_nu, other_mu)
                while not other.complete:
                    self._step(other)
                for beta, value in other.nonzero:
                    lam = conjugate(beta)
                    if not is_upper_half(lam):
                        terms[lam] = value
        expansion = SchurExpansion(grade, terms)
        logging.info("expanded s_%s∘s_%s: %d constituents", nu, mu, len(expansion))
        return expansion

    def max_multiplicity(self, nu, mu):
        """p(ν, μ), the largest coefficient of s_ν∘s_μ."""
        return self.plethysm_expand(nu, mu).max_coefficient()

    def growth_conjecture_check(self, n_max=6):
        """Tests ⟨s_ν∘s_(2), s_α⟩ ≤ ⟨s_{ν⊔(1)}∘s_(2), s_{(α+(1))⊔(1)}⟩ for ν ⊢ n ≤ n_max.

        Returns:
            A list of violation dicts; empty when the inequality held throughout.
        """
        violations = []
        for n in range(1, n_max + 1):
            for nu in partitions_of(n):
                smaller = self.plethysm_expand(nu, (2,))
                larger = self.plethysm_expand(union_vertical(nu, (1,)), (2,))
                for alpha, left in smaller.items():
                    target = union_vertical(add_horizontal(alpha, (1,)), (1,))
                    right = larger.coefficient(target)
                    if left > right:
                        logging.error("growth inequality fails at nu=%s alpha=%s: %d > %d", nu, alpha, left, right)
                        violations.append({
                            "nu": nu.to_list(),
                            "alpha": alpha.to_list(),
                            "left": left,
                            "right": right
                        })
        return violations
