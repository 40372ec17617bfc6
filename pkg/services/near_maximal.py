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

from common.errors import InternalConsistencyError, PreconditionError, ShapeError
from common.partitions import add_node, bar, epsilon_shift, is_horizontal_strip, removable_nodes
from models.near_maximal import BUMPED, DELETED_ONES, TOP_ROW, PhiImage, SecondLayerSupport
from models.partition import Partition
from models.tableau import PlethysticTableau, SemistandardTableau


def _first_row_shape(nu):
    """ν̄ − ε₁ = (n + ν₁ − 1, ν₂, …)."""
    return epsilon_shift(bar(nu), 1, -1)


def first_layer_coeff(nu, lam):
    """⟨s_ν∘s_(2), s_λ⟩ for λ₁ = n + ν₁: 1 at λ = ν̄ and 0 otherwise."""
    nu, lam = Partition.coerce(nu), Partition.coerce(lam)
    n = nu.size
    if lam.size != 2 * n or lam.part(1) != n + nu.part(1):
        raise PreconditionError(f"first layer of s_{nu}∘s_(2) needs λ ⊢ {2 * n} with λ_1 = {n + nu.part(1)}, got {lam}")
    return int(lam == bar(nu))


def _require_second_layer(nu):
    if nu.length < 2:
        raise PreconditionError(f"the second layer formula needs ν ≠ (n), got {nu}")


def second_layer_support(nu):
    """M(ν): remove a node from ν̄ − ε₁ in a row x > 1, then add a horizontal
    pair of nodes in rows a ≥ b ≥ 2."""
    nu = Partition.coerce(nu)
    _require_second_layer(nu)
    start = _first_row_shape(nu)
    entries = {}
    for x in sorted(removable_nodes(start)):
        if x == 1:
            continue
        rho = epsilon_shift(start, x, -1)
        for b in range(2, rho.length + 2):
            for a in range(b, rho.length + 3):
                try:
                    beta = epsilon_shift(epsilon_shift(rho, b, 1), a, 1)
                except ShapeError:
                    continue
                if is_horizontal_strip(beta, rho):
                    entries.setdefault(beta, set()).add((a, b))
    return SecondLayerSupport(nu, entries)


def _second_layer_value(nu, lam, support):
    value = len(support.pairs(lam))
    if nu.part(1) == nu.part(2) and lam == add_node(_first_row_shape(nu), 2):
        value -= 1
    if value < 0:
        raise InternalConsistencyError(f"second layer coefficient of s_{nu}∘s_(2) at {lam} is {value}")
    return value


def second_layer_coeff(nu, lam):
    """⟨s_ν∘s_(2), s_λ⟩ for λ₁ = n + ν₁ − 1.

    The coefficient is |I(λ)|, less one at λ = ν̄ − ε₁ + ε₂ when ν₁ = ν₂.
    A λ with a single decomposition (x ∉ {a, b}) therefore gets 1 and a λ
    outside M(ν) gets 0.
    """
    nu, lam = Partition.coerce(nu), Partition.coerce(lam)
    _require_second_layer(nu)
    n = nu.size
    if lam.size != 2 * n or lam.part(1) != n + nu.part(1) - 1:
        raise PreconditionError(f"second layer of s_{nu}∘s_(2) needs λ ⊢ {2 * n} with λ_1 = {n + nu.part(1) - 1}, got {lam}")
    return _second_layer_value(nu, lam, second_layer_support(nu))


def second_layer_expansion(nu):
    """Every nonzero second-layer coefficient of s_ν∘s_(2), keyed by λ."""
    nu = Partition.coerce(nu)
    support = second_layer_support(nu)
    values = {}
    for beta in support.shapes():
        value = _second_layer_value(nu, beta, support)
        if value:
            values[beta] = value
    return values


def rsk_row_insert(tableau, value, start_row=1):
    """Row-bumps `value` into `tableau` starting at `start_row`.

    Returns:
        (SemistandardTableau, landing_row) where landing_row gained the new box.
    """
    rows = [list(row) for row in tableau.rows]
    r = start_row
    while True:
        if r > len(rows):
            rows.append([value])
            break
        row = rows[r - 1]
        position = next((i for i, entry in enumerate(row) if entry > value), None)
        if position is None:
            row.append(value)
            break
        row[position], value = value, row[position]
        r += 1
    return SemistandardTableau(rows, check=False), r


def rsk_reverse_bump(tableau, row, stop_row=1):
    """Undoes an insertion that ended in `row` and began at `stop_row`.

    Returns:
        (SemistandardTableau, value) with the value ejected from `stop_row`.
    """
    rows = [list(r) for r in tableau.rows]
    if row > len(rows) or (row < len(rows) and len(rows[row]) == len(rows[row - 1])):
        raise ShapeError(f"row {row} of shape {tableau.shape} does not end in a corner")
    value = rows[row - 1].pop()
    for r in range(row - 1, stop_row - 1, -1):
        current = rows[r - 1]
        position = max(i for i, entry in enumerate(current) if entry < value)
        current[position], value = value, current[position]
    return SemistandardTableau(rows, check=False), value


def _split(tableau):
    nu = tableau.outer_shape
    n = nu.size
    if tableau.inner_shape.parts != (2,):
        raise PreconditionError(f"Φ is defined on plethystic tableaux with inner shape (2), got {tableau.inner_shape}")
    weight = tableau.weight()
    if not weight or weight[0] != n + nu.part(1) - 1:
        raise PreconditionError(f"Φ needs weight λ with λ_1 = {n + nu.part(1) - 1}, got {weight}")
    without_one = [
        (r, c) for r in range(1, nu.length + 1) for c in range(1, nu.part(r) + 1)
        if tableau.entry(r, c).entry(1, 1) != 1
    ]
    return nu, n, without_one


def phi_map(tableau):
    """Φ on PStd((2)^ν, λ) with λ₁ = n + ν₁ − 1.

    Case (i), every inner entry holds a 1: ν₁ ≠ ν₂ gives the filling of ν̄ whose
    first row is the n + ν₁ − 1 ones followed by the remaining entry of the
    last cell of row 1; ν₁ = ν₂ deletes the initial 1 of every entry.
    Case (ii), a single entry (t₁ t₂) in a removable cell (x, ν_x) holds no 1:
    that cell is removed, the ones are collected into row 1, and t₁ then t₂
    are row-inserted from row 2, landing in rows a ≥ b.
    """
    nu, n, without_one = _split(tableau)
    if not without_one:
        if nu.part(1) == nu.part(2):
            rows = [[tableau.entry(r, c).entry(1, 2) for c in range(1, nu.part(r) + 1)] for r in range(1, nu.length + 1)]
            return PhiImage(nu, DELETED_ONES, SemistandardTableau(rows))
        first = [1] * (n + nu.part(1) - 1) + [tableau.entry(1, nu.part(1)).entry(1, 2)]
        rows = [first] + [
            [tableau.entry(r, c).entry(1, 2) for c in range(1, nu.part(r) + 1)] for r in range(2, nu.length + 1)
        ]
        return PhiImage(nu, TOP_ROW, SemistandardTableau(rows))
    if len(without_one) > 1:
        raise PreconditionError(f"{len(without_one)} inner entries without a 1; the weight precondition fails")
    x, column = without_one[0]
    if x == 1 or column != nu.part(x) or x not in removable_nodes(nu):
        raise PreconditionError(f"the entry without a 1 sits at ({x}, {column}), not in a removable node below row 1")
    t1, t2 = tableau.entry(x, column).rows[0]
    rows = [[1] * (n + nu.part(1) - 1)]
    for r in range(2, nu.length + 1):
        length = nu.part(r) - (1 if r == x else 0)
        rows.append([tableau.entry(r, c).entry(1, 2) for c in range(1, length + 1)])
    image = SemistandardTableau([row for row in rows if row], check=False)
    image, a = rsk_row_insert(image, t1, 2)
    image, b = rsk_row_insert(image, t2, 2)
    return PhiImage(nu, BUMPED, image, (a, b))


def phi_inverse(image):
    """Rebuilds the plethystic tableau from a Φ image by reverse bumping."""
    nu = image.nu
    n = nu.size
    if image.kind == DELETED_ONES:
        return PlethysticTableau((2,), nu, [
            [SemistandardTableau([[1, value]]) for value in row] for row in image.tableau.rows
        ])
    if image.kind == TOP_ROW:
        rows = image.tableau.rows
        last = rows[0][-1]
        first = [SemistandardTableau([[1, 1]])] * (nu.part(1) - 1) + [SemistandardTableau([[1, last]])]
        return PlethysticTableau((2,), nu, [first] + [
            [SemistandardTableau([[1, value]]) for value in row] for row in rows[1:]
        ])
    if image.kind != BUMPED:
        raise PreconditionError(f"unknown Φ image kind {image.kind!r}")
    a, b = image.pair
    reduced, t2 = rsk_reverse_bump(image.tableau, b, 2)
    reduced, t1 = rsk_reverse_bump(reduced, a, 2)
    if len(reduced.rows[0]) != n + nu.part(1) - 1:
        raise PreconditionError("the first row of a bumped image must hold exactly the collected ones")
    entries = [[SemistandardTableau([[1, 1]])] * nu.part(1)]
    for r in range(2, nu.length + 1):
        values = list(reduced.rows[r - 1]) if r <= len(reduced.rows) else []
        row = [SemistandardTableau([[1, v]]) for v in values]
        if len(values) == nu.part(r) - 1:
            row.append(SemistandardTableau([[t1, t2]]))
        entries.append(row)
    return PlethysticTableau((2,), nu, entries)


def phi_tilde_companion(tableau, nu):
    """The split |SStd(ν̄, λ)| = |SStd(ν, λ − (n))| + |SStd(ν̄ − ε₁ + ε₂, λ)| for ν₁ = ν₂.

    Returns:
        (DELETED_ONES, t′) when the last entry of row 1 is below t(2, ν₂),
        otherwise (TOP_ROW, t′) with that box moved to the end of row 2.
    """
    nu = Partition.coerce(nu)
    if nu.length < 2 or nu.part(1) != nu.part(2):
        raise PreconditionError(f"the companion split needs ν_1 = ν_2, got {nu}")
    n = nu.size
    rows = [list(row) for row in tableau.rows]
    if len(rows) < 2 or len(rows[0]) != n + nu.part(1):
        raise ShapeError(f"expected a tableau of shape {bar(nu)}, got {tableau.shape}")
    last = rows[0][-1]
    if last < rows[1][nu.part(2) - 1]:
        rows[0] = rows[0][n:]
        return DELETED_ONES, SemistandardTableau(rows)
    rows[0].pop()
    rows[1].append(last)
    return TOP_ROW, SemistandardTableau(rows)
