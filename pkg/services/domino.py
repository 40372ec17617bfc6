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

from common.errors import BudgetExceededError, PreconditionError, ShapeError, SizeMismatchError
from common.partitions import conjugate, contains
from models.domino import HORIZONTAL, VERTICAL, Domino, DominoTableau, ReadingWord, domino_cells
from models.expansion import SchurExpansion
from models.partition import Partition


def _word(word):
    return word if isinstance(word, ReadingWord) else ReadingWord(word)


def _reading_cells(lam):
    """Cells of the doubled diagram: columns right to left, each read top to bottom."""
    heights = conjugate(lam)
    cells = []
    for c in range(2 * lam.width, 0, -1):
        height = 2 * heights.part((c + 1) // 2)
        cells.extend((r, c) for r in range(1, height + 1))
    return cells


def reading_word(tableau):
    """R(T): each label is recorded once, at the top cell of a vertical domino
    or the left cell of a horizontal one."""
    recorded = {(d.row, d.column): d.label for d in tableau.dominoes}
    return ReadingWord(recorded[cell] for cell in _reading_cells(tableau.base_shape) if cell in recorded)


def is_lattice(word):
    return _word(word).is_lattice()


def bad_terms(word):
    """Positions, counted from 0, of the unpaired terms of `word`."""
    return _word(word).bad_terms()


def enumerate_dom(lam, alpha=None, fixed=()):
    """Dom(λ, α): semistandard domino tableaux of shape λ with a lattice reading word.

    Args:
        lam: The base shape; the tiling covers its doubled diagram.
        alpha: The weight, or None for every weight at once.
        fixed: Dominoes that are placed in advance.

    Returns:
        A list of DominoTableau in the order they are found.
    """
    lam = Partition.coerce(lam)
    if alpha is not None:
        alpha = tuple(int(a) for a in alpha)
        if sum(alpha) != 2 * lam.size:
            raise SizeMismatchError(f"|α| = {sum(alpha)} but a domino tableau of shape {lam} has {2 * lam.size} dominoes")
        top_label = len(alpha)
    else:
        top_label = 2 * lam.length
    cells = _reading_cells(lam)
    inside = set(cells)
    grid = {}
    owner = {}
    recording = {}
    used = [0] * (top_label + 2)
    seen = [0] * (top_label + 2)

    for domino in fixed:
        domino = Domino(*domino)
        if domino.label > top_label:
            return []
        for cell in domino_cells(domino):
            if cell not in inside or cell in grid:
                raise ShapeError(f"fixed domino {tuple(domino)} does not fit {lam}")
            grid[cell] = domino.label
            owner[cell] = domino
        recording[(domino.row, domino.column)] = domino.label
        used[domino.label] += 1
        if alpha is not None and used[domino.label] > alpha[domino.label - 1]:
            return []

    def fits(domino):
        own = domino_cells(domino)
        label = domino.label
        for r, c in own:
            for (nr, nc), relation in (((r, c - 1), "left"), ((r, c + 1), "right"),
                                       ((r - 1, c), "above"), ((r + 1, c), "below")):
                if (nr, nc) in own or (nr, nc) not in grid:
                    continue
                other = grid[(nr, nc)]
                if relation == "left" and other > label:
                    return False
                if relation == "right" and other < label:
                    return False
                if relation == "above" and other >= label:
                    return False
                if relation == "below" and other <= label:
                    return False
        return True

    def record(label):
        if label > 1 and seen[label] + 1 > seen[label - 1]:
            return False
        seen[label] += 1
        return True

    found = []

    def visit(index):
        if index == len(cells):
            found.append(DominoTableau(lam, [tuple(d) for d in owner_dominoes()], check=False))
            return
        cell = cells[index]
        if cell in grid:
            label = recording.get(cell)
            if label is None:
                visit(index + 1)
            elif record(label):
                visit(index + 1)
                seen[label] -= 1
            return
        r, c = cell
        options = []
        if (r + 1, c) in inside and (r + 1, c) not in grid:
            options.append(VERTICAL)
        if c > 1 and (r, c - 1) not in grid:
            options.append(HORIZONTAL)
        for orientation in options:
            for label in range(1, top_label + 1):
                if alpha is not None and used[label] >= alpha[label - 1]:
                    continue
                if orientation == VERTICAL:
                    domino = Domino(r, c, VERTICAL, label)
                else:
                    domino = Domino(r, c - 1, HORIZONTAL, label)
                if not fits(domino):
                    continue
                if orientation == VERTICAL and not record(label):
                    continue
                for own in domino_cells(domino):
                    grid[own] = label
                    owner[own] = domino
                used[label] += 1
                if orientation == HORIZONTAL:
                    recording[(domino.row, domino.column)] = label
                visit(index + 1)
                used[label] -= 1
                for own in domino_cells(domino):
                    del grid[own]
                    del owner[own]
                if orientation == HORIZONTAL:
                    del recording[(domino.row, domino.column)]
                else:
                    seen[label] -= 1

    def owner_dominoes():
        return sorted(set(owner.values()))

    visit(0)
    return found


def dom_counts(lam, alpha):
    """(dom_+(λ, α), dom_−(λ, α)), split by even and odd spin."""
    plus = minus = 0
    for tableau in enumerate_dom(lam, alpha):
        if tableau.spin == 0:
            plus += 1
        else:
            minus += 1
    return plus, minus


def symmetric_square_split(mu, max_degree=None):
    """(s_(2)∘s_μ, s_(1^2)∘s_μ) from the spins of Dom(μ, ·), in one pass over all weights."""
    mu = Partition.coerce(mu)
    grade = 2 * mu.size
    if max_degree is not None and grade > max_degree:
        raise BudgetExceededError(f"domino split of s_{mu}⊠s_{mu}", grade, max_degree)
    plus, minus = {}, {}
    for tableau in enumerate_dom(mu):
        weight = Partition(tableau.weight())
        target = plus if tableau.spin == 0 else minus
        target[weight] = target.get(weight, 0) + 1
    logging.debug("domino split of %s: %d even, %d odd", mu, sum(plus.values()), sum(minus.values()))
    return SchurExpansion(grade, plus), SchurExpansion(grade, minus)


def _check_box(hat, a, b):
    hat = Partition.coerce(hat)
    if a < 1 or b < 1:
        raise PreconditionError(f"the rectangle ({a}^{b}) needs a, b ≥ 1")
    if not contains(Partition([a] * b), hat):
        raise ShapeError(f"{hat} is not contained in ({a}^{b})")
    return hat


def admissible_tableau(hat, a, b):
    """T^hat: vertical dominoes on the doubled hat, horizontal ones on the rest of
    the doubled rectangle, labelled 1, 2, … down every column."""
    hat = _check_box(hat, a, b)
    columns = conjugate(hat)
    dominoes = []
    for j in range(1, a + 1):
        height = columns.part(j)
        for c in (2 * j - 1, 2 * j):
            for k in range(1, height + 1):
                dominoes.append(Domino(2 * k - 1, c, VERTICAL, k))
        for r in range(2 * height + 1, 2 * b + 1):
            dominoes.append(Domino(r, 2 * j - 1, HORIZONTAL, r - height))
    return DominoTableau(Partition([a] * b), dominoes)


def rectangular_weight(hat, a, b):
    """The weight of T^hat: rows a + hat_i, then a, then a − hat_{2b+1−i}."""
    hat = _check_box(hat, a, b)
    parts = []
    for i in range(1, 2 * b + 1):
        if i <= hat.length:
            parts.append(a + hat.part(i))
        elif i <= 2 * b - hat.length:
            parts.append(a)
        else:
            parts.append(a - hat.part(2 * b + 1 - i))
    return Partition(parts)


def recover_hat(lam, a, b):
    """Inverts rectangular_weight; None when λ is not a rectangular weight partition."""
    lam = Partition.coerce(lam)
    if lam.size != 2 * a * b or lam.length > 2 * b:
        return None
    halves = []
    for i in range(1, b + 1):
        difference = lam.part(i) - lam.part(2 * b + 1 - i)
        if difference % 2:
            return None
        halves.append(difference // 2)
    try:
        hat = Partition(halves)
        if rectangular_weight(hat, a, b) != lam:
            return None
    except ShapeError:
        return None
    return hat


def rectangle_dom(lam, a, b):
    """dom((a^b), λ) with its unique tableau when it is 1.

    Returns:
        (1, T^hat) or (0, None).
    """
    hat = recover_hat(lam, a, b)
    if hat is None:
        return 0, None
    return 1, admissible_tableau(hat, a, b)


class _Stuck(Exception):
    """A deduction of the final double-row placement did not hold."""


def _near_rectangle_setup(a, b, alpha):
    """Shape, λ̂ and the multiset of final double-row labels, or a None λ̂ when α admits none."""
    if a < 2 or b < 1:
        raise PreconditionError(f"the shape (a^b, a−1) needs a ≥ 2 and b ≥ 1, got a={a}, b={b}")
    shape = Partition([a] * b + [a - 1])
    alpha = Partition.coerce(alpha)
    if alpha.size != 2 * shape.size:
        raise SizeMismatchError(f"|α| = {alpha.size} but Dom({shape}, ·) needs {2 * shape.size}")
    # the first 2b rows form T^hat, with λ̂ read off the first b parts of α
    raw = [alpha.part(i) - a for i in range(1, b + 1)]
    if any(v < 0 or v > a for v in raw) or any(raw[i] < raw[i + 1] for i in range(b - 1)):
        return shape, None, None
    hat = Partition(raw)
    upper = rectangular_weight(hat, a, b)
    rest = [alpha.part(i) - upper.part(i) for i in range(1, max(alpha.length, upper.length) + 1)]
    if any(v < 0 for v in rest) or any(rest[:b]):
        return shape, None, None
    labels = Counter({i: v for i, v in enumerate(rest, start=1) if v})
    return shape, hat, labels


class _FinalDoubleRow:
    """Rows 2b+1 and 2b+2 under T^hat, filled right to left.

    `free` holds the rightmost empty column of each row; step i works under
    double-column a−i, whose bottom label in T^hat is `lower(a − i)`.
    """

    def __init__(self, hat, a, b, labels):
        self.a = a
        self.b = b
        self.top = admissible_tableau(hat, a, b)
        self.columns = conjugate(hat)
        self.labels = Counter(labels)
        self.rows = (2 * b + 1, 2 * b + 2)
        self.free = {row: 2 * a - 2 for row in self.rows}
        self.dominoes = []

    def lower(self, j):
        """Bottom label of double-column j of T^hat."""
        if j < 1:
            raise _Stuck("no double-column left")
        return 2 * self.b - self.columns.part(j)

    def largest(self):
        return max(self.labels)

    def only_next_row_labels(self):
        return all(label == self.b + 1 for label in self.labels.elements())

    def aligned(self):
        return self.free[self.rows[0]] == self.free[self.rows[1]]

    def has(self, label, besides=()):
        spare = Counter(self.labels)
        spare.subtract(besides)
        return spare[label] > 0

    def _take(self, label):
        if self.labels[label] <= 0:
            raise _Stuck(f"label {label} is not left to place")
        self.labels[label] -= 1
        if not self.labels[label]:
            del self.labels[label]

    def horizontal(self, row, label):
        column = self.free[row] - 1
        if column < 1:
            raise _Stuck(f"row {row} is full")
        self._take(label)
        self.dominoes.append(Domino(row, column, HORIZONTAL, label))
        self.free[row] -= 2

    def vertical(self, label):
        first, second = self.rows
        column = self.free[first]
        if column < 1 or self.free[second] != column:
            raise _Stuck(f"no vertical room at column {column}")
        self._take(label)
        self.dominoes.append(Domino(first, column, VERTICAL, label))
        self.free[first] -= 1
        self.free[second] -= 1

    def close_with_verticals(self):
        while self.labels:
            self.vertical(self.b + 1)
        if self.free[self.rows[0]] or self.free[self.rows[1]]:
            raise _Stuck("labels ran out before the double-row was filled")

    def tableau(self, shape):
        return DominoTableau(shape, self.top.dominoes + tuple(self.dominoes))


def _fill_first(row, i, f):
    """One step of the all-horizontal filling; returns the label of the next free supporter."""
    d = row.lower(row.a - i)
    w = row.largest()
    if w == f + 1:
        # E is matched by F, so Ē must be matched by D
        e, e_bar = w, d + 1
        following = f if e == e_bar + 1 else e_bar
    else:
        # E is matched by Ē, which is matched by D or else by F
        e, e_bar = w, w - 1
        if e_bar == d + 1:
            following = f
        elif e_bar == f + 1:
            following = d
        else:
            raise _Stuck(f"Ē = {e_bar} has no supporter (d = {d}, f = {f})")
    if e <= e_bar:
        raise _Stuck(f"E = {e} does not sit below Ē = {e_bar}")
    row.horizontal(row.rows[0], e_bar)
    row.horizontal(row.rows[1], e)
    return following


# where the free supporter of the next step lies
_IN_TOP, _IN_FIRST_ROW, _NONE = "top", "first_row", "none"


def _fill_second(row, i, place, f):
    """One step of the filling with a tall vertical; returns the next (place, f)."""
    d = row.lower(row.a - i)
    first, second = row.rows
    if place == _IN_TOP:
        w = row.largest()
        if w == f + 2:
            if not row.has(f + 1, besides=[w]):
                raise _Stuck(f"f+1 = {f + 1} is missing")
            row.horizontal(first, f + 1)
            row.horizontal(second, f + 2)
            return (_IN_TOP, f) if d == f else (_IN_TOP, d)
        if w == f + 1:
            if not row.has(d + 1, besides=[w]):
                raise _Stuck(f"d+1 = {d + 1} is missing")
            row.vertical(f + 1)
            if not row.has(d + 2, besides=[d + 1]):
                row.vertical(d + 1)
                return _NONE, None
            row.horizontal(first, d + 1)
            return _IN_FIRST_ROW, d + 1
        raise _Stuck(f"largest label {w} is neither f+1 nor f+2 (f = {f})")
    if place == _IN_FIRST_ROW:
        if d == f or not row.has(d + 1) or not row.has(f + 1):
            raise _Stuck(f"first-row supporter {f} cannot continue over d = {d}")
        row.horizontal(second, f + 1)
        if row.has(d + 2):
            row.horizontal(first, d + 1)
            return _IN_FIRST_ROW, d + 1
        row.vertical(d + 1)
        return _NONE, None
    if not row.has(d + 1) or not row.has(d + 2, besides=[d + 1]):
        raise _Stuck(f"d+1, d+2 = {d + 1}, {d + 2} are not both left")
    row.horizontal(first, d + 1)
    row.horizontal(second, d + 2)
    return _NONE, None


def _finish(row, shape, alpha, name, tall):
    alpha = Partition.coerce(alpha)
    try:
        tableau = row.tableau(shape)
    except ShapeError as err:
        logging.warning("%s: uncovered configuration for Dom(%s, %s): %s", name, shape, alpha, err)
        return None
    if (not tableau.is_semistandard() or tableau.weight() != alpha.parts
            or not is_lattice(reading_word(tableau))):
        logging.warning("%s: uncovered configuration for Dom(%s, %s): %s", name, shape, alpha,
                        [tuple(d) for d in row.dominoes])
        return None
    if any(d.orientation == VERTICAL and d.label > row.b + 1 for d in row.dominoes) != tall:
        logging.debug("%s: Dom(%s, %s) has no tableau of this kind", name, shape, alpha)
        return None
    return tableau


def near_rectangle_algorithm1(a, b, alpha):
    """The member of Dom((a^b, a−1), α) with no vertical domino labelled above b+1, if any.

    The final double-row is filled one double-column at a time, right to left,
    each step deducing the label pair from which domino supports E.
    """
    shape, hat, labels = _near_rectangle_setup(a, b, alpha)
    if hat is None:
        return None
    row = _FinalDoubleRow(hat, a, b, labels)
    f = row.lower(a)
    i = 1
    try:
        while row.labels and not row.only_next_row_labels():
            f = _fill_first(row, i, f)
            i += 1
        row.close_with_verticals()
    except _Stuck as err:
        logging.debug("algorithm 1: Dom(%s, %s) stops at step %d: %s", shape, alpha, i, err)
        return None
    return _finish(row, shape, alpha, "algorithm 1", tall=False)


def near_rectangle_algorithm2(a, b, alpha):
    """The member of Dom((a^b, a−1), α) with a vertical domino labelled above b+1, if any."""
    shape, hat, labels = _near_rectangle_setup(a, b, alpha)
    if hat is None:
        return None
    row = _FinalDoubleRow(hat, a, b, labels)
    place, f = _IN_TOP, row.lower(a)
    i = 1
    try:
        while row.labels:
            if place != _IN_FIRST_ROW and row.only_next_row_labels():
                break
            place, f = _fill_second(row, i, place, f)
            i += 1
        row.close_with_verticals()
    except _Stuck as err:
        logging.debug("algorithm 2: Dom(%s, %s) stops at step %d: %s", shape, alpha, i, err)
        return None
    return _finish(row, shape, alpha, "algorithm 2", tall=True)


def render_ascii(tableau):
    """Draws the doubled diagram; `-` joins a horizontal domino, `|` a vertical one."""
    grid = tableau.labels()
    owner = {}
    for domino in tableau.dominoes:
        for cell in domino_cells(domino):
            owner[cell] = domino
    width = max((len(str(v)) for v in grid.values()), default=1)
    rows = max((r for r, _ in grid), default=0)
    lines = []
    for r in range(1, rows + 1):
        columns = sorted(c for (row, c) in grid if row == r)
        text = ""
        links = ""
        for c in columns:
            if c > 1:
                joined = owner[(r, c)] is owner.get((r, c - 1)) and owner[(r, c)].orientation == HORIZONTAL
                text += "-" if joined else " "
                links += " "
            text += str(grid[(r, c)]).rjust(width)
            below = owner.get((r + 1, c))
            links += ("|" if below is owner[(r, c)] else " ").rjust(width)
        lines.append(text)
        if r < rows:
            lines.append(links.rstrip())
    lines.append(f"spin {tableau.spin_sign} ({tableau.horizontal_count} horizontal)")
    return "\n".join(lines)
