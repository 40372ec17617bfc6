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
import re
from enum import Enum
from functools import total_ordering

from common.errors import PartitionParseError, ShapeError

_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


class Comparison(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@total_ordering
class Partition:
    """A weakly decreasing sequence of positive integers.

    Trailing zeros are stripped on construction so that every partition has a
    unique representation; the empty tuple is the partition of 0.
    """

    def __init__(self, parts=()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p <= 0:
                raise ShapeError(f"parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ShapeError(f"parts must be weakly decreasing, got {parts}")
        self._parts = tuple(parts)

    @property
    def parts(self):
        return self._parts

    @property
    def size(self):
        return sum(self._parts)

    @property
    def length(self):
        return len(self._parts)

    @property
    def width(self):
        return self._parts[0] if self._parts else 0

    def part(self, row):
        """The length of `row` (1-based); 0 past the last row."""
        if row < 1:
            raise ShapeError(f"rows are numbered from 1, got {row}")
        return self._parts[row - 1] if row <= len(self._parts) else 0

    def tail(self):
        """λ_{>1}: the partition with its first row removed."""
        return Partition(self._parts[1:])

    def cells(self):
        for r, length in enumerate(self._parts, start=1):
            for c in range(1, length + 1):
                yield (r, c)

    def padded(self, length):
        if length < len(self._parts):
            raise ShapeError(f"cannot pad {self} to {length} rows")
        return self._parts + (0,) * (length - len(self._parts))

    @classmethod
    def parse(cls, text):
        """Parses "4,2,1" or the exponent shorthand "2^3,1"."""
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        parts = []
        for token in text.split(","):
            match = _TOKEN.match(token)
            if match is None:
                raise PartitionParseError(f"cannot parse partition {text!r}")
            value = int(match.group(1))
            repeat = int(match.group(2)) if match.group(2) else 1
            parts.extend([value] * repeat)
        try:
            return cls(parts)
        except ShapeError as e:
            raise PartitionParseError(str(e)) from e

    def to_list(self):
        return list(self._parts)

    def to_dict(self):
        return {"parts": self.to_list()}

    @classmethod
    def from_dict(cls, data):
        return cls(data["parts"])

    def __str__(self):
        return ",".join(str(p) for p in self._parts)

    def __repr__(self):
        return json.dumps(self.to_dict())

    def __iter__(self):
        return iter(self._parts)

    def __len__(self):
        return len(self._parts)

    def __getitem__(self, index):
        return self._parts[index]

    def __hash__(self):
        return hash(self._parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self._parts == other._parts
        if isinstance(other, tuple):
            return self._parts == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    # Plain tuple order; for equal sizes this is the lexicographic order.
    def __lt__(self, other):
        return self._parts < Partition.coerce(other)._parts

    @staticmethod
    def coerce(value):
        if isinstance(value, Partition):
            return value
        if isinstance(value, str):
            return Partition.parse(value)
        return Partition(value)
