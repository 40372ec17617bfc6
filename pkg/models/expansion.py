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

import json

from sympy import Rational

from common.errors import ShapeError
from models.partition import Partition


class SchurExpansion:
    """A finite sum Σ c_λ s_λ with positive integer coefficients.

    Zero coefficients are dropped on construction; every key partitions `grade`.
    """

    def __init__(self, grade, terms=None):
        self.grade = int(grade)
        self.terms = {}
        for key, value in (terms or {}).items():
            lam = Partition.coerce(key)
            if lam.size != self.grade:
                raise ShapeError(f"{lam} does not partition {self.grade}")
            value = int(value)
            if value < 0:
                raise ShapeError(f"negative coefficient {value} at {lam}")
            if value:
                self.terms[lam] = value

    def coefficient(self, lam):
        return self.terms.get(Partition.coerce(lam), 0)

    def keys(self):
        """Constituents in decreasing lexicographic order."""
        return sorted(self.terms, reverse=True)

    def items(self):
        return [(lam, self.terms[lam]) for lam in self.keys()]

    def max_coefficient(self):
        return max(self.terms.values(), default=0)

    def total(self):
        return sum(self.terms.values())

    def is_multiplicity_free(self):
        return self.max_coefficient() <= 1

    def __add__(self, other):
        if self.grade != other.grade:
            raise ShapeError(f"cannot add expansions of grades {self.grade} and {other.grade}")
        merged = dict(self.terms)
        for lam, value in other.terms.items():
            merged[lam] = merged.get(lam, 0) + value
        return SchurExpansion(self.grade, merged)

    def to_dict(self):
        return {
            "grade": self.grade,
            "terms": [{"lambda": lam.to_list(), "coeff": str(value)} for lam, value in self.items()]
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            data["grade"],
            {tuple(term["lambda"]): int(term["coeff"]) for term in data["terms"]}
        )

    def __repr__(self):
        return json.dumps(self.to_dict())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, SchurExpansion):
            return self.grade == other.grade and self.terms == other.terms
        if isinstance(other, dict):
            return self.terms == {Partition.coerce(k): v for k, v in other.items() if v}
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result


class PowerSumVector:
    """Σ c_ρ p_ρ over partitions ρ of `grade`, with exact rational coefficients."""

    def __init__(self, grade, terms=None):
        self.grade = int(grade)
        self.terms = {}
        for key, value in (terms or {}).items():
            rho = Partition.coerce(key)
            if rho.size != self.grade:
                raise ShapeError(f"{rho} does not partition {self.grade}")
            value = Rational(value)
            if value != 0:
                self.terms[rho] = value

    def coefficient(self, rho):
        return self.terms.get(Partition.coerce(rho), Rational(0))

    def scaled(self, factor):
        return PowerSumVector(self.grade, {rho: factor * c for rho, c in self.terms.items()})

    def __add__(self, other):
        if self.grade != other.grade:
            raise ShapeError(f"cannot add vectors of grades {self.grade} and {other.grade}")
        merged = dict(self.terms)
        for rho, value in other.terms.items():
            merged[rho] = merged.get(rho, Rational(0)) + value
        return PowerSumVector(self.grade, merged)

    def __mul__(self, other):
        """The product p_ρ · p_σ = p_{ρ ⊔ σ}, extended bilinearly."""
        product = {}
        for rho, a in self.terms.items():
            for sigma, b in other.terms.items():
                key = Partition(sorted(rho.parts + sigma.parts, reverse=True))
                product[key] = product.get(key, Rational(0)) + a * b
        return PowerSumVector(self.grade + other.grade, product)

    def to_dict(self):
        return {
            "grade": self.grade,
            "terms": [{"rho": rho.to_list(), "coeff": str(self.terms[rho])} for rho in sorted(self.terms, reverse=True)]
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            data["grade"],
            {tuple(term["rho"]): Rational(term["coeff"]) for term in data["terms"]}
        )

    def __repr__(self):
        return json.dumps(self.to_dict())

    def __eq__(self, other):
        return isinstance(other, PowerSumVector) and self.grade == other.grade and self.terms == other.terms

    def __ne__(self, other):
        return not self.__eq__(other)
