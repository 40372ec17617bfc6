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
from collections import Counter
from functools import lru_cache

from sympy import Rational, factorial

from common.errors import BudgetExceededError, InternalConsistencyError, SizeMismatchError
from common.partitions import partitions_of
from models.expansion import PowerSumVector, SchurExpansion
from models.partition import Partition


def z_rho(rho):
    """The centralizer order Π m^{k_m} k_m! of a permutation of cycle type ρ."""
    rho = Partition.coerce(rho)
    result = 1
    for part, count in Counter(rho.parts).items():
        result *= part ** count * factorial(count)
    return int(result)


def mn_character(lam, rho):
    """χ^λ(ρ) by the Murnaghan–Nakayama rule on beta-sets."""
    lam, rho = Partition.coerce(lam), Partition.coerce(rho)
    if lam.size != rho.size:
        raise SizeMismatchError(f"|{lam}| = {lam.size} but |{rho}| = {rho.size}")
    return _character(lam.parts, rho.parts)


@lru_cache(maxsize=None)
def _character(lam, rho):
    if not rho:
        return 1
    hook, rest = rho[0], rho[1:]
    length = len(lam)
    beads = frozenset(part + length - 1 - i for i, part in enumerate(lam))
    total = 0
    for bead in beads:
        target = bead - hook
        if target < 0 or target in beads:
            continue
        # each bead jumped over flips the sign
        between = sum(1 for other in beads if target < other < bead)
        moved = sorted((beads - {bead}) | {target}, reverse=True)
        smaller = tuple(b - (length - 1 - i) for i, b in enumerate(moved))
        smaller = tuple(p for p in smaller if p)
        total += (-1) ** between * _character(smaller, rest)
    return total


def schur_to_powersum(lam):
    """s_λ = Σ_ρ χ^λ(ρ)/z_ρ p_ρ."""
    lam = Partition.coerce(lam)
    return PowerSumVector(lam.size, {
        rho: Rational(mn_character(lam, rho), z_rho(rho)) for rho in partitions_of(lam.size)
    })


def powersum_to_schur(vector):
    """The signed rational Schur coefficients of a power-sum vector.

    Returns:
        A dict from Partition to sympy Rational, zero entries omitted.
    """
    coefficients = {}
    for lam in partitions_of(vector.grade):
        value = sum((c * mn_character(lam, rho) for rho, c in vector.terms.items()), Rational(0))
        if value != 0:
            coefficients[lam] = value
    return coefficients


def _to_expansion(vector, label):
    terms = {}
    for lam, value in powersum_to_schur(vector).items():
        if not value.is_integer or value < 0:
            raise InternalConsistencyError(f"{label}: coefficient {value} at {lam} is not a nonnegative integer")
        terms[lam] = int(value)
    return SchurExpansion(vector.grade, terms)


class PowerSumOracle:
    """An independent route to plethysms and outer products through the power-sum basis."""

    def __init__(self, config_service, max_degree=None):
        self.config_service = config_service
        self.max_degree = max_degree or config_service.get_int("oracle", "max_degree", 14)

    def _check_budget(self, what, degree):
        if degree > self.max_degree:
            logging.info("oracle refused %s at degree %d", what, degree)
            raise BudgetExceededError(what, degree, self.max_degree)

    def plethysm_expand_powersum(self, nu, mu):
        """Expands s_ν∘s_μ using p_r∘p_s = p_{rs}.

        Args:
            nu: The outer partition.
            mu: The inner partition.

        Returns:
            SchurExpansion of degree |ν||μ|.
        """
        nu, mu = Partition.coerce(nu), Partition.coerce(mu)
        self._check_budget(f"oracle plethysm s_{nu}∘s_{mu}", nu.size * mu.size)
        return _to_expansion(_plethysm_vector(nu.parts, mu.parts), f"s_{nu}∘s_{mu}")

    def outer_product(self, lam, mu):
        """Expands s_λ⊠s_μ, the ordinary product of two Schur functions."""
        lam, mu = Partition.coerce(lam), Partition.coerce(mu)
        self._check_budget(f"outer product s_{lam}⊠s_{mu}", lam.size + mu.size)
        return _to_expansion(schur_to_powersum(lam) * schur_to_powersum(mu), f"s_{lam}⊠s_{mu}")


@lru_cache(maxsize=None)
def _inflated(mu, r):
    """p_r∘s_μ: every p_τ in s_μ becomes p_{rτ}."""
    base = schur_to_powersum(Partition(mu))
    return PowerSumVector(base.grade * r, {
        Partition([r * p for p in tau.parts]): c for tau, c in base.terms.items()
    })


@lru_cache(maxsize=64)
def _plethysm_vector(nu, mu):
    outer = schur_to_powersum(Partition(nu))
    grade = sum(nu) * sum(mu)
    total = PowerSumVector(grade)
    for sigma, c in outer.terms.items():
        term = PowerSumVector(0, {(): 1})
        for r in sigma.parts:
            term = term * _inflated(mu, r)
        total = total + term.scaled(c)
    logging.debug("power-sum plethysm s_%s∘s_%s: %d terms", nu, mu, len(total.terms))
    return total
