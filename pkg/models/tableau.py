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

from common.errors import ShapeError
from models.partition import Partition


class SemistandardTableau:
    """A filling of a Young diagram, rows weakly and columns strictly increasing.

    Rows are stored top to bottom; rows and columns are numbered from 1 in the
    accessors.
    """

    def __init__(self, rows, check=True):
        self.rows = tuple(tuple(int(v) for v in row) for row in rows if len(row))
        self.shape = Partition([len(row) for row in self.rows])
        if check and not self.is_semistandard():
            raise ShapeError(f"not a semistandard tableau: {self.rows}")

    def is_semistandard(self):
        for r, row in enumerate(self.rows):
            if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
                return False
            if r and any(self.rows[r - 1][c] >= row[c] for c in range(len(row))):
                return False
        return True

    def entry(self, row, column):
        return self.rows[row - 1][column - 1]

    def column(self, column):
        return tuple(row[column - 1] for row in self.rows if len(row) >= column)

    def weight(self):
        """The composition counting the occurrences of 1, 2, ..."""
        counts = {}
        for row in self.rows:
            for value in row:
                counts[value] = counts.get(value, 0) + 1
        top = max(counts) if counts else 0
        return tuple(counts.get(v, 0) for v in range(1, top + 1))

    def to_dict(self):
        return {
            "shape": self.shape.to_list(),
            "rows": [list(row) for row in self.rows]
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data["rows"])

    def __repr__(self):
        return json.dumps(self.to_dict())

    def __hash__(self):
        return hash(self.rows)

    def __eq__(self, other):
        return isinstance(other, SemistandardTableau) and self.rows == other.rows

    def __ne__(self, other):
        return not self.__eq__(other)


class PlethysticTableau:
    """A map from the cells of the outer shape ν to semistandard μ-tableaux."""

    def __init__(self, inner_shape, outer_shape, entries):
        self.inner_shape = Partition.coerce(inner_shape)
        self.outer_shape = Partition.coerce(outer_shape)
        # entries[r][c] is the inner tableau at cell (r+1, c+1)
        self.entries = tuple(tuple(row) for row in entries)
        if tuple(len(row) for row in self.entries) != self.outer_shape.parts:
            raise ShapeError("entries do not fill the outer shape")
        for row in self.entries:
            for inner in row:
                if inner.shape != self.inner_shape:
                    raise ShapeError(f"inner tableau of shape {inner.shape}, expected {self.inner_shape}")

    def entry(self, row, column):
        return self.entries[row - 1][column - 1]

    def weight(self):
        counts = {}
        for row in self.entries:
            for inner in row:
                for value, count in enumerate(inner.weight(), start=1):
                    counts[value] = counts.get(value, 0) + count
        top = max((v for v, c in counts.items() if c), default=0)
        return tuple(counts.get(v, 0) for v in range(1, top + 1))

    def to_dict(self):
        return {
            "inner_shape": self.inner_shape.to_list(),
            "outer_shape": self.outer_shape.to_list(),
            "entries": [[inner.to_dict()["rows"] for inner in row] for row in self.entries]
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            data["inner_shape"],
            data["outer_shape"],
            [[SemistandardTableau(rows) for rows in row] for row in data["entries"]]
        )

    def __repr__(self):
        return json.dumps(self.to_dict())

    def __hash__(self):
        return hash((self.inner_shape, self.entries))

    def __eq__(self, other):
        return (
            isinstance(other, PlethysticTableau)
            and self.inner_shape == other.inner_shape
            and self.entries == other.entries
        )

    def __ne__(self, other):
        return not self.__eq__(other)
