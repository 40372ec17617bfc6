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

from models.partition import Partition
from models.tableau import SemistandardTableau

# image kinds of the Φ map
TOP_ROW = "top_row"
DELETED_ONES = "deleted_ones"
BUMPED = "bumped"


class SecondLayerSupport:
    """M(ν) together with the pair sets I(β) of its members."""

    def __init__(self, base, entries):
        self.base = Partition.coerce(base)
        self.entries = {
            Partition.coerce(beta): frozenset(tuple(pair) for pair in pairs)
            for beta, pairs in entries.items()
        }

    def pairs(self, beta):
        return self.entries.get(Partition.coerce(beta), frozenset())

    def shapes(self):
        return sorted(self.entries, reverse=True)

    def to_dict(self):
        return {
            "base": self.base.to_list(),
            "entries": [
                {"beta": beta.to_list(), "pairs": sorted(list(pair) for pair in self.entries[beta])}
                for beta in self.shapes()
            ]
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data["base"], {tuple(e["beta"]): e["pairs"] for e in data["entries"]})

    def __repr__(self):
        return json.dumps(self.to_dict())

    def __contains__(self, beta):
        return Partition.coerce(beta) in self.entries

    def __len__(self):
        return len(self.entries)


class PhiImage:
    """A tagged element of the codomain of Φ.

    `kind` is TOP_ROW for an image in SStd(ν̄, λ), DELETED_ONES for the ν₁ = ν₂
    variant in SStd(ν, λ − (n)), and BUMPED for a pair (s, (a, b)) with s of
    shape β ∈ M(ν).
    """

    def __init__(self, nu, kind, tableau, pair=None):
        self.nu = Partition.coerce(nu)
        self.kind = kind
        self.tableau = tableau
        self.pair = tuple(pair) if pair is not None else None

    @property
    def shape(self):
        return self.tableau.shape

    def to_dict(self):
        return {
            "nu": self.nu.to_list(),
            "kind": self.kind,
            "tableau": self.tableau.to_dict(),
            "pair": list(self.pair) if self.pair is not None else None
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            data["nu"],
            data["kind"],
            SemistandardTableau.from_dict(data["tableau"]),
            data["pair"]
        )

    def __repr__(self):
        return json.dumps(self.to_dict())

    def __hash__(self):
        return hash((self.nu, self.kind, self.tableau, self.pair))

    def __eq__(self, other):
        return (
            isinstance(other, PhiImage)
            and self.nu == other.nu
            and self.kind == other.kind
            and self.tableau == other.tableau
            and self.pair == other.pair
        )

    def __ne__(self, other):
        return not self.__eq__(other)
