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
from functools import cmp_to_key, lru_cache
from itertools import product

from common.errors import ShapeError, SizeMismatchError
from common.partitions import _dominates, horizontal_strips, partitions_of
from models.partition import Comparison, Partition
from models.tableau import PlethysticTableau, SemistandardTableau


def _weight(alpha):
    weight = tuple(int(a) for a in alpha)
    if any(a < 0 for a in weight):
        raise ShapeError(f"weights are nonnegative, got {weight}")
    return weight


def _sorted_weight(alpha):
    return tuple(sorted((a for a in _weight(alpha) if a), reverse=True))


def enumerate_ssyt(lam, alpha):
    """All semistandard tableaux of shape λ and weight α.

    Args:
        lam: The shape.
        alpha: A weight composition; zero entries are allowed.

    Returns:
        A list of SemistandardTableau, in a deterministic order.
    """
    lam = Partition.coerce(lam)
    alpha = _weight(alpha)
    if sum(alpha) != lam.size:
        raise SizeMismatchError(f"|{lam}| = {lam.size} but the weight {alpha} sums to {sum(alpha)}")
    return [SemistandardTableau(rows, check=False) for rows in _fillings(lam, alpha)]


def _fillings(lam, alpha):
    def extend(shape, value, rows):
        if value > len(alpha):
            if shape == lam:
                yield rows
            return
        for grown in horizontal_strips(shape, alpha[value - 1], bound=lam):
            old = shape.padded(lam.length)
            new = grown.padded(lam.length)
            yield from extend(
                grown,
                value + 1,
                tuple(rows[r] + (value,) * (new[r] - old[r]) for r in range(lam.length))
            )

    yield from extend(Partition(()), 1, ((),) * lam.length)


def kostka(lam, alpha):
    """K_{λα}, computed on the sorted weight."""
    lam = Partition.coerce(lam)
    alpha = _sorted_weight(alpha)
    if sum(alpha) != lam.size:
        raise SizeMismatchError(f"|{lam}| = {lam.size} but the weight {alpha} sums to {sum(alpha)}")
    return _kostka(lam.parts, alpha)


@lru_cache(maxsize=None)
def _kostka(lam, alpha):
    if not alpha:
        return 1 if not lam else 0
    if not _dominates(lam, alpha):
        return 0
    if lam == alpha:
        return 1
    total = 0
    for smaller in _strip_removals(lam, alpha[-1]):
        total += _kostka(smaller, alpha[:-1])
    return total


def _strip_removals(lam, size):
    """Shapes τ ⊆ λ with λ/τ a horizontal strip of `size` cells."""
    ranges = []
    for i, part in enumerate(lam):
        floor = lam[i + 1] if i + 1 < len(lam) else 0
        ranges.append(range(floor, part + 1))
    for choice in product(*ranges):
        if sum(lam) - sum(choice) == size:
            yield tuple(c for c in choice if c)


def tableau_precedes(s, t):
    """The tableau order ≺.

    In the leftmost column where s and t differ, the tableau holding the
    greatest entry that is not common to both columns is the greater one.
    """
    if s.shape != t.shape:
        raise ShapeError(f"cannot compare tableaux of shapes {s.shape} and {t.shape}")
    for c in range(1, s.shape.width + 1):
        left, right = s.column(c), t.column(c)
        if left != right:
            greatest = max(set(left) ^ set(right))
            return Comparison.LESS if greatest in right else Comparison.GREATER
    return Comparison.EQUAL


tableau_order_key = cmp_to_key(lambda s, t: tableau_precedes(s, t).value)


def inner_letters(mu, alpha):
    """The μ-tableaux usable inside a plethystic tableau of weight α, ≺-sorted."""
    mu = Partition.coerce(mu)
    return list(_inner_letters(mu.parts, _weight(alpha)))


@lru_cache(maxsize=None)
def _inner_letters(mu, alpha):
    shape = Partition(mu)

    def extend(current, value, rows):
        if current == shape:
            yield rows
            return
        if value > len(alpha):
            return
        limit = min(alpha[value - 1], shape.size - current.size)
        for k in range(limit + 1):
            for grown in horizontal_strips(current, k, bound=shape):
                old = current.padded(shape.length)
                new = grown.padded(shape.length)
                yield from extend(
                    grown,
                    value + 1,
                    tuple(rows[r] + (value,) * (new[r] - old[r]) for r in range(shape.length))
                )

    letters = [SemistandardTableau(rows, check=False) for rows in extend(Partition(()), 1, ((),) * shape.length)]
    return tuple(sorted(letters, key=tableau_order_key))


def _check_pstd_sizes(mu, nu, alpha):
    if sum(alpha) != mu.size * nu.size:
        raise SizeMismatchError(f"weight {alpha} does not sum to |μ||ν| = {mu.size * nu.size}")


def enumerate_pstd(mu, nu, alpha):
    """Every plethystic semistandard tableau of shape μ^ν and weight α.

    Backtracks over the cells of ν in row-major order. Each cell takes an
    inner tableau that is ⪰ its left neighbour and ≻ the cell above.
    """
    mu, nu = Partition.coerce(mu), Partition.coerce(nu)
    alpha = _weight(alpha)
    _check_pstd_sizes(mu, nu, alpha)
    letters = inner_letters(mu, alpha)
    weights = [_padded_weight(letter, len(alpha)) for letter in letters]
    cells = list(nu.cells())
    chosen = {}
    found = []

    def place(index, remaining):
        if index == len(cells):
            if not any(remaining):
                found.append(PlethysticTableau(mu, nu, [
                    [letters[chosen[(r, c)]] for c in range(1, nu.part(r) + 1)]
                    for r in range(1, nu.length + 1)
                ]))
            return
        r, c = cells[index]
        lowest = 0
        if c > 1:
            lowest = chosen[(r, c - 1)]
        if r > 1:
            lowest = max(lowest, chosen[(r - 1, c)] + 1)
        for i in range(lowest, len(letters)):
            weight = weights[i]
            if any(w > left for w, left in zip(weight, remaining)):
                continue
            chosen[(r, c)] = i
            place(index + 1, tuple(left - w for w, left in zip(weight, remaining)))
        chosen.pop((r, c), None)

    place(0, alpha)
    return found


def _padded_weight(tableau, length):
    weight = tableau.weight()
    return weight + (0,) * (length - len(weight))


def pstd_count(mu, nu, alpha):
    """|PStd(μ^ν, α)|, the coefficient of x^α in s_ν∘s_μ."""
    mu, nu = Partition.coerce(mu), Partition.coerce(nu)
    alpha = _weight(alpha)
    _check_pstd_sizes(mu, nu, alpha)
    return _pstd_count(mu.parts, nu.parts, _sorted_weight(alpha))


class _WeightPacker:
    """Packs bounded weight vectors into one integer with a guard bit per field.

    A packed state stores the weight still to be placed. Subtracting a letter
    clears the guard bit of every field that would go negative, so a single
    mask test checks all coordinates at once.
    """

    def __init__(self, target):
        total = sum(target)
        self.guard = 1 << total.bit_length()
        self.field = total.bit_length() + 1
        self.mask = sum(self.guard << (self.field * i) for i in range(len(target)))
        self.start = self.pack(target) + self.mask

    def pack(self, weight):
        return sum(w << (self.field * i) for i, w in enumerate(weight))

    def fits(self, packed):
        return packed & self.mask == self.mask


@lru_cache(maxsize=4096)
def _pstd_count(mu, nu, alpha):
    if not nu:
        return 1 if not alpha else 0
    letters = _inner_letters(mu, alpha)
    if not letters:
        return 0
    shapes, moves = _strip_moves(nu)
    packer = _WeightPacker(alpha)
    states = {(0, packer.start): 1}
    for letter in letters:
        packed = packer.pack(_padded_weight(letter, len(alpha)))
        multiples = [k * packed for k in range(sum(nu) + 1)]
        grown = dict(states)
        for (shape, left), count in states.items():
            for target, k in moves[shape]:
                rest = left - multiples[k]
                if packer.fits(rest):
                    key = (target, rest)
                    grown[key] = grown.get(key, 0) + count
        states = grown
    logging.debug("PStd%s^%s weight %s: %d states", mu, nu, alpha, len(states))
    return states.get((len(shapes) - 1, packer.mask), 0)


@lru_cache(maxsize=None)
def _strip_moves(nu):
    """Sub-shapes of ν (ν itself last) and their nonempty horizontal-strip moves."""
    outer = Partition(nu)
    shapes = sorted(
        {Partition(choice) for choice in product(*(range(p + 1) for p in nu)) if _is_partition(choice)},
        key=lambda s: (s.size, s.parts)
    )
    index = {shape: i for i, shape in enumerate(shapes)}
    moves = []
    for shape in shapes:
        options = []
        for k in range(1, outer.size - shape.size + 1):
            for grown in horizontal_strips(shape, k, bound=outer):
                options.append((index[grown], k))
        moves.append(tuple(options))
    return tuple(shapes), tuple(moves)


def _is_partition(choice):
    return all(choice[i] >= choice[i + 1] for i in range(len(choice) - 1))


def maximal_pstd_weights(mu, nu):
    """The dominance-maximal partition weights α with PStd(μ^ν, α) nonempty.

    Returns:
        A list of (Partition, count) pairs in decreasing lexicographic order.
    """
    mu, nu = Partition.coerce(mu), Partition.coerce(nu)
    maxima = []
    for alpha in partitions_of(mu.size * nu.size):
        if any(_dominates(found.parts, alpha.parts) for found, _ in maxima):
            continue
        count = pstd_count(mu, nu, alpha)
        if count:
            maxima.append((alpha, count))
    return maxima
