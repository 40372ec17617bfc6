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

from common.errors import PreconditionError
from models.partition import Partition

# growth step kinds
SEED = "seed"
UNION_ROW = "union_row"
ADD_COLUMN = "add_column"
BRION_ROW = "brion_row"
CONJUGATE = "conjugate"

STEP_KINDS = (SEED, UNION_ROW, ADD_COLUMN, BRION_ROW, CONJUGATE)

NOT_LISTED = "not listed"
NOT_ENGINE_VERIFIED = "growth-verified, not engine-verified"


class MFVerdict:
    """Whether s_ν∘s_μ is multiplicity-free, and which clause decided it."""

    def __init__(self, nu, mu, verdict, clause=NOT_LISTED, detail=None):
        self.nu = Partition.coerce(nu)
        self.mu = Partition.coerce(mu)
        self.verdict = bool(verdict)
        self.clause = clause
        self.detail = detail

    def to_dict(self):
        return {
            "nu": self.nu.to_list(),
            "mu": self.mu.to_list(),
            "verdict": self.verdict,
            "clause": self.clause,
            "detail": self.detail
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            data["nu"],
            data["mu"],
            data["verdict"],
            data["clause"],
            data.get("detail")
        )

    def __repr__(self):
        return json.dumps(self.to_dict())

    def __bool__(self):
        return self.verdict

    def __eq__(self, other):
        return (
            isinstance(other, MFVerdict)
            and self.nu == other.nu
            and self.mu == other.mu
            and self.verdict == other.verdict
            and self.clause == other.clause
        )

    def __ne__(self, other):
        return not self.__eq__(other)


class GrowthStep:
    """One link of a witness derivation.

    A SEED step carries the starting triple (nu, mu, lam) and its coefficient;
    UNION_ROW and BRION_ROW carry a row length `r`; ADD_COLUMN carries the
    partition `alpha`; CONJUGATE carries nothing.
    """

    def __init__(self, kind, r=None, alpha=None, nu=None, mu=None, lam=None, coefficient=None, source=None):
        if kind not in STEP_KINDS:
            raise PreconditionError(f"unknown growth step {kind!r}")
        self.kind = kind
        self.r = None if r is None else int(r)
        self.alpha = None if alpha is None else Partition.coerce(alpha)
        self.nu = None if nu is None else Partition.coerce(nu)
        self.mu = None if mu is None else Partition.coerce(mu)
        self.lam = None if lam is None else Partition.coerce(lam)
        self.coefficient = None if coefficient is None else int(coefficient)
        self.source = source

    @classmethod
    def seed(cls, nu, mu, lam, coefficient, source):
        return cls(SEED, nu=nu, mu=mu, lam=lam, coefficient=coefficient, source=source)

    @classmethod
    def union_row(cls, r):
        return cls(UNION_ROW, r=r)

    @classmethod
    def add_column(cls, alpha):
        return cls(ADD_COLUMN, alpha=alpha)

    @classmethod
    def brion_row(cls, r):
        return cls(BRION_ROW, r=r)

    @classmethod
    def conjugate(cls):
        return cls(CONJUGATE)

    def describe(self):
        if self.kind == SEED:
            return f"seed p({self.nu} | {self.mu} | {self.lam}) = {self.coefficient} [{self.source}]"
        if self.kind == ADD_COLUMN:
            return f"add_column {self.alpha}"
        if self.kind == CONJUGATE:
            return "conjugate"
        return f"{self.kind} {self.r}"

    def to_dict(self):
        data = {"kind": self.kind}
        if self.r is not None:
            data["r"] = self.r
        if self.alpha is not None:
            data["alpha"] = self.alpha.to_list()
        if self.kind == SEED:
            data.update({
                "nu": self.nu.to_list(),
                "mu": self.mu.to_list(),
                "lambda": self.lam.to_list(),
                "coeff": str(self.coefficient),
                "source": self.source
            })
        return data

    @classmethod
    def from_dict(cls, data):
        return cls(
            data["kind"],
            r=data.get("r"),
            alpha=data.get("alpha"),
            nu=data.get("nu"),
            mu=data.get("mu"),
            lam=data.get("lambda"),
            coefficient=data.get("coeff"),
            source=data.get("source")
        )

    def __repr__(self):
        return json.dumps(self.to_dict())

    def __eq__(self, other):
        return isinstance(other, GrowthStep) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self.__eq__(other)


class WitnessCertificate:
    """A constituent λ of s_ν∘s_μ with coefficient ≥ 2, and the derivation proving it.

    `steps[0]` is the seed; replaying the remaining steps from the seed triple
    must land on (nu, mu, lam). `engine_coefficient` is the exact value when
    the engine checked it, and None otherwise.
    """

    def __init__(self, nu, mu, lam, steps, engine_coefficient=None):
        self.nu = Partition.coerce(nu)
        self.mu = Partition.coerce(mu)
        self.lam = Partition.coerce(lam)
        self.steps = list(steps)
        self.engine_coefficient = None if engine_coefficient is None else int(engine_coefficient)

    @property
    def seed(self):
        return self.steps[0]

    @property
    def coefficient(self):
        """The lower bound carried over from the seed."""
        return self.seed.coefficient

    @property
    def engine_verified(self):
        return self.engine_coefficient is not None

    @property
    def status(self):
        return "engine-verified" if self.engine_verified else NOT_ENGINE_VERIFIED

    def to_dict(self):
        return {
            "nu": self.nu.to_list(),
            "mu": self.mu.to_list(),
            "lambda": self.lam.to_list(),
            "coeff": str(self.coefficient),
            "engine_coeff": None if self.engine_coefficient is None else str(self.engine_coefficient),
            "status": self.status,
            "steps": [step.to_dict() for step in self.steps]
        }

    @classmethod
    def from_dict(cls, data):
        engine = data.get("engine_coeff")
        return cls(
            data["nu"],
            data["mu"],
            data["lambda"],
            [GrowthStep.from_dict(step) for step in data["steps"]],
            None if engine is None else int(engine)
        )

    def __repr__(self):
        return json.dumps(self.to_dict())

    def __eq__(self, other):
        return isinstance(other, WitnessCertificate) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self.__eq__(other)
