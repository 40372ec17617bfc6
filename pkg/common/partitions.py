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

from functools import lru_cache
from itertools import accumulate

from sympy.utilities.iterables import partitions as sympy_partitions

from common.errors import ShapeError, SizeMismatchError
from models.partition import Comparison, Partition

LINEAR = "linear"
TWO_LINE = "two_line"
HOOK = "hook"
FAT_HOOK = "fat_hook"
PROPER_FAT_HOOK = "proper_fat_hook"
RECTANGLE = "rectangle"
NEAR_RECTANGLE = "near_rectangle"


def _p(value):
    return Partition.coerce(value)


def _require_equal_size(lam, mu):
    if lam.size != mu.size:
        raise SizeMismatchError(f"|{lam}| = {lam.size} but |{mu}| = {mu.size}")


def conjugate(lam):
    lam = _p(lam)
    return _conjugate_parts(lam.parts)


@lru_cache(maxsize=None)
def _conjugate_parts(parts):
    if not parts:
        return Partition(())
    return Partition([sum(1 for p in parts if p >= c) for c in range(1, parts[0] + 1)])


def dominates(lam, mu):
    """λ ⊵ μ: every prefix sum of λ is at least the matching prefix sum of μ."""
    lam, mu = _p(lam), _p(mu)
    _require_equal_size(lam, mu)
    return _dominates(lam.parts, mu.parts)


def _dominates(a, b):
    n = max(len(a), len(b))
    a_sums = accumulate(a + (0,) * (n - len(a)))
    b_sums = accumulate(b + (0,) * (n - len(b)))
    return all(x >= y for x, y in zip(a_sums, b_sums))


def lex_compare(lam, mu):
    lam, mu = _p(lam), _p(mu)
    _require_equal_size(lam, mu)
    if lam.parts == mu.parts:
        return Comparison.EQUAL
    return Comparison.GREATER if lam.parts > mu.parts else Comparison.LESS


def add_horizontal(lam, mu):
    """λ + μ, the part-wise sum."""
    lam, mu = _p(lam), _p(mu)
    n = max(lam.length, mu.length)
    return Partition([a + b for a, b in zip(lam.padded(n), mu.padded(n))])


def union_vertical(lam, mu):
    """λ ⊔ μ, the sorted multiset union of parts."""
    lam, mu = _p(lam), _p(mu)
    return Partition(sorted(lam.parts + mu.parts, reverse=True))


def scale(lam, factor):
    return Partition([factor * p for p in _p(lam).parts])


def epsilon_shift(lam, row, delta):
    """λ ± ε_row, rejected unless the result is a partition."""
    lam = _p(lam)
    parts = list(lam.padded(max(lam.length, row)))
    parts[row - 1] += delta
    if parts[row - 1] < 0 or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ShapeError(f"{lam} {'+' if delta > 0 else '-'} {abs(delta)}ε_{row} is not a partition")
    return Partition(parts)


def add_node(lam, row):
    return epsilon_shift(lam, row, 1)


def remove_node(lam, row):
    return epsilon_shift(lam, row, -1)


def removable_nodes(lam):
    parts = _p(lam).parts
    return {r for r in range(1, len(parts) + 1) if r == len(parts) or parts[r - 1] > parts[r]}


def addable_nodes(lam):
    parts = _p(lam).parts
    return {r for r in range(1, len(parts) + 2) if r == 1 or parts[r - 2] > (parts[r - 1] if r <= len(parts) else 0)}


def rem(lam):
    return len(removable_nodes(lam))


def bar(nu):
    """ν̄ = ν + (n)."""
    nu = _p(nu)
    return add_horizontal(nu, (nu.size,))


def contains(outer, inner):
    outer, inner = _p(outer), _p(inner)
    return inner.length <= outer.length and all(i <= o for i, o in zip(inner.parts, outer.parts))


def is_horizontal_strip(outer, inner):
    """True when outer/inner is a horizontal strip (no two cells in a column)."""
    outer, inner = _p(outer), _p(inner)
    if not contains(outer, inner):
        return False
    o = outer.parts
    i = inner.padded(outer.length)
    return all(o[r] <= i[r - 1] for r in range(1, len(o)))


def horizontal_strips(inner, size, bound=None):
    """Yields every τ ⊇ inner with τ/inner a horizontal strip of `size` cells.

    When `bound` is given the strips are restricted to τ ⊆ bound.
    """
    inner = _p(inner)
    rows = inner.length + 1 if bound is None else max(_p(bound).length, inner.length)
    base = inner.padded(rows)
    caps = []
    for r in range(rows):
        cap = base[r - 1] if r else base[0] + size
        if bound is not None:
            cap = min(cap, _p(bound).part(r + 1))
        caps.append(cap - base[r])
    for extra in _distribute(size, caps, 0):
        yield Partition([b + e for b, e in zip(base, extra)])


def _distribute(total, caps, index):
    if index == len(caps):
        if total == 0:
            yield ()
        return
    if caps[index] < 0:
        return
    for take in range(min(total, caps[index]), -1, -1):
        for rest in _distribute(total - take, caps, index + 1):
            yield (take,) + rest


def fat_hook_blocks(lam):
    """Writes a partition with rem ≤ 2 as (a^b, c^d); d = 0 for rectangles."""
    lam = _p(lam)
    values = sorted(set(lam.parts), reverse=True)
    if len(values) > 2 or not values:
        return None
    a = values[0]
    b = lam.parts.count(a)
    if len(values) == 1:
        return (a, b, 0, 0)
    c = values[1]
    return (a, b, c, lam.parts.count(c))


def is_linear(lam):
    lam = _p(lam)
    return lam.size > 0 and (lam.length == 1 or lam.width == 1)


def is_rectangle(lam):
    lam = _p(lam)
    return lam.size > 0 and len(set(lam.parts)) == 1


def is_hook(lam):
    lam = _p(lam)
    return lam.size > 0 and lam.part(2) <= 1


def is_two_line(lam):
    lam = _p(lam)
    return min(lam.length, lam.width) == 2


def classify(lam):
    lam = _p(lam)
    if lam.size < 1:
        raise ShapeError("classify needs a nonempty partition")
    tags = set()
    removable = rem(lam)
    if is_linear(lam):
        tags.add(LINEAR)
    if is_two_line(lam):
        tags.add(TWO_LINE)
    if is_hook(lam):
        tags.add(HOOK)
    if removable <= 2:
        tags.add(FAT_HOOK)
    if removable == 2 and HOOK not in tags and TWO_LINE not in tags:
        tags.add(PROPER_FAT_HOOK)
    if removable == 1:
        tags.add(RECTANGLE)
    if removable == 2:
        a, b, c, d = fat_hook_blocks(lam)
        # one added row (top or bottom) or one added column (right or left)
        if min(b, d, a - c, c) == 1:
            tags.add(NEAR_RECTANGLE)
    return frozenset(tags)


def diagonal_hooks(lam):
    lam = _p(lam)
    conj = conjugate(lam)
    hooks = []
    for i in range(1, lam.length + 1):
        if lam.part(i) < i:
            break
        hooks.append(lam.part(i) - i + conj.part(i) - i + 1)
    return hooks


def shift_symmetric(beta):
    """ss[β]: row i has β_i + i cells and the diagonal hooks are 2β_i."""
    beta = _p(beta)
    if len(set(beta.parts)) != beta.length:
        raise ShapeError(f"shift_symmetric needs distinct parts, got {beta}")
    k = beta.length
    # Frobenius coordinates (β_i | β_i − 1)
    legs = [b - 1 for b in beta.parts]
    rows = [beta.parts[i] + i + 1 for i in range(k)]
    below = []
    for r in range(k + 1, k + 1 + (legs[0] if legs else 0)):
        # row r holds column c ≤ k when the leg of diagonal c reaches row r
        below.append(sum(1 for c in range(1, k + 1) if c + legs[c - 1] >= r))
    result = Partition(rows + below)
    if diagonal_hooks(result) != [2 * b for b in beta.parts]:
        raise ShapeError(f"ss[{beta}] failed the diagonal hook check")
    return result


def partitions_of(n):
    """All partitions of n, in decreasing lexicographic order."""
    return list(_partitions_of(n))


@lru_cache(maxsize=None)
def _partitions_of(n):
    if n == 0:
        return (Partition(()),)
    found = []
    for multiplicities in sympy_partitions(n):
        parts = []
        for value, count in multiplicities.items():
            parts.extend([value] * count)
        found.append(tuple(sorted(parts, reverse=True)))
    return tuple(Partition(p) for p in sorted(found, reverse=True))


def is_upper_half(lam):
    """λ lies in the lex-upper half when λ ≥ λ^T lexicographically."""
    lam = _p(lam)
    return lam.parts >= conjugate(lam).parts
