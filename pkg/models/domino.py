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
from collections import namedtuple

from common.errors import ShapeError
from models.partition import Partition

VERTICAL = "v"
HORIZONTAL = "h"

# (row, column) is the top cell of a vertical domino and the left cell of a horizontal one
Domino = namedtuple("Domino", ["row", "column", "orientation", "label"])


def domino_cells(domino):
    if domino.orientation == VERTICAL:
        return ((domino.row, domino.column), (domino.row + 1, domino.column))
    return ((domino.row, domino.column), (domino.row, domino.column + 1))


class DominoTableau:
    """A labelled domino tiling of the doubled diagram of `base_shape`."""

    def __init__(self, base_shape, dominoes, check=True):
        self.base_shape = Partition.coerce(base_shape)
        self.dominoes = tuple(sorted(
            Domino(int(d[0]), int(d[1]), d[2], int(d[3])) for d in dominoes
        ))
        if check:
            self._check_tiling()

    def _check_tiling(self):
        expected = set(doubled_cells(self.base_shape))
        seen = set()
        for domino in self.dominoes:
            if domino.orientation not in (VERTICAL, HORIZONTAL):
                raise ShapeError(f"unknown orientation {domino.orientation!r}")
            for cell in domino_cells(domino):
                if cell not in expected or cell in seen:
                    raise ShapeError(f"domino {tuple(domino)} does not fit the doubled diagram of {self.base_shape}")
                seen.add(cell)
        if seen != expected:
            raise ShapeError(f"dominoes do not tile the doubled diagram of {self.base_shape}")

    def labels(self):
        """Map from every cell of the doubled diagram to its domino label."""
        grid = {}
        for domino in self.dominoes:
            for cell in domino_cells(domino):
                grid[cell] = domino.label
        return grid

    def is_semistandard(self):
        grid = self.labels()
        owner = {}
        for index, domino in enumerate(self.dominoes):
            for cell in domino_cells(domino):
                owner[cell] = index
        for (r, c), label in grid.items():
            right = grid.get((r, c + 1))
            if right is not None and right < label:
                return False
            below = grid.get((r + 1, c))
            if below is not None and owner[(r + 1, c)] != owner[(r, c)] and below <= label:
                return False
        return True

    def weight(self):
        top = max((d.label for d in self.dominoes), default=0)
        counts = [0] * top
        for domino in self.dominoes:
            counts[domino.label - 1] += 1
        return tuple(counts)

    @property
    def horizontal_count(self):
        return sum(1 for d in self.dominoes if d.orientation == HORIZONTAL)

    @property
    def spin(self):
        """Half the number of horizontal dominoes, mod 2; 0 is even."""
        return (self.horizontal_count // 2) % 2

    @property
    def spin_sign(self):
        return "+" if self.spin == 0 else "-"

    def to_dict(self):
        return {
            "base_shape": self.base_shape.to_list(),
            "dominoes": [list(d) for d in self.dominoes],
            "spin": self.spin_sign,
            "horizontal_count": self.horizontal_count
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data["base_shape"], data["dominoes"])

    def __repr__(self):
        return json.dumps(self.to_dict())

    def __hash__(self):
        return hash((self.base_shape, self.dominoes))

    def __eq__(self, other):
        return (
            isinstance(other, DominoTableau)
            and self.base_shape == other.base_shape
            and self.dominoes == other.dominoes
        )

    def __ne__(self, other):
        return not self.__eq__(other)


def doubled_cells(lam):
    """Cells of [λ]^{2×2}, row by row."""
    lam = Partition.coerce(lam)
    for i, part in enumerate(lam.parts, start=1):
        for r in (2 * i - 1, 2 * i):
            for c in range(1, 2 * part + 1):
                yield (r, c)


class ReadingWord:
    """A word of positive integers with the bracket-pairing lattice test."""

    def __init__(self, terms=()):
        self.terms = tuple(int(t) for t in terms)

    def bad_terms(self):
        """0-based positions of the terms i ≥ 2 left without a partner i−1.

        For 1,1,2,2,1,3,3,3,4,4,1,2,3,4 this is [7]: the third 3, the eighth term.
        """
        openers = {}
        bad = []
        for position, value in enumerate(self.terms):
            if value > 1:
                if openers.get(value, 0):
                    openers[value] -= 1
                else:
                    bad.append(position)
            openers[value + 1] = openers.get(value + 1, 0) + 1
        return bad

    def is_lattice(self):
        return not self.bad_terms()

    def to_dict(self):
        return {"terms": list(self.terms)}

    @classmethod
    def from_dict(cls, data):
        return cls(data["terms"])

    def __repr__(self):
        return json.dumps(self.to_dict())

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, ReadingWord):
            return self.terms == other.terms
        if isinstance(other, (tuple, list)):
            return self.terms == tuple(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.terms)
