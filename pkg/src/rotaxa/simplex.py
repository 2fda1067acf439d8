"""Exact rational linear programming.

A small dense two-phase primal simplex over ``fractions.Fraction``.  There is
no floating point anywhere in this module: every pivot is exact, so feasibility
and optimality answers are decisions, not approximations.

Problems are stated in equality standard form::

    minimize    c . x
    subject to  A x = b,   x >= 0

Bland's smallest-index rule selects both the entering column and (on ratio
ties) the leaving row, which precludes cycling, so the method terminates
unconditionally.  Problem sizes here are tiny (rows = ambient dimension plus
one or two, columns = a few hundred at most), so a dense tableau is the right
tool.

When a problem is infeasible we also report a Farkas certificate: a vector
``y`` with ``y . A_j <= 0`` for every column ``j`` and ``y . b > 0``.  The
geometry layer turns that certificate into a separating functional, which is
what makes the convex-hull routines output-sensitive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class LpResult:
    """Outcome of :func:`solve_lp`.

    ``solution`` and ``value`` are set only for status ``"optimal"``;
    ``certificate`` (the Farkas vector described in the module docstring)
    only for status ``"infeasible"``.
    """

    status: str
    value: Fraction | None = None
    solution: tuple[Fraction, ...] | None = None
    certificate: tuple[Fraction, ...] | None = None


def solve_lp(
    costs: Sequence[Fraction],
    rows: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
) -> LpResult:
    """Minimize ``costs . x`` subject to ``rows @ x == rhs`` and ``x >= 0``."""
    n = len(costs)
    m = len(rows)
    if any(len(row) != n for row in rows) or len(rhs) != m:
        raise ValueError("inconsistent LP dimensions")

    # Tableau: m constraint rows over n structural + m artificial columns,
    # with the right-hand side appended as the final entry of each row.
    # Rows are sign-normalized so every rhs is nonnegative; the flips are
    # remembered to unscramble the dual certificate later.
    flips = []
    tableau = []
    for row, beta in zip(rows, rhs):
        if beta < 0:
            flips.append(-1)
            tableau.append([-a for a in row] + [_ZERO] * m + [-beta])
        else:
            flips.append(1)
            tableau.append([Fraction(a) for a in row] + [_ZERO] * m + [Fraction(beta)])
    for i in range(m):
        tableau[i][n + i] = _ONE
    basis = [n + i for i in range(m)]
    width = n + m + 1

    # Phase 1: minimize the sum of artificials.  The objective row holds
    # reduced costs, with the negated objective value in the rhs slot.
    obj = [_ZERO] * width
    for j in range(width):
        obj[j] = -sum(tableau[i][j] for i in range(m))
    for i in range(m):
        obj[n + i] = _ZERO

    status = _iterate(tableau, obj, basis, n, width)
    if status == UNBOUNDED:  # pragma: no cover - phase 1 is always bounded
        raise AssertionError("phase 1 cannot be unbounded")
    infeasibility = -obj[width - 1]
    if infeasibility > 0:
        # Duals from the artificial reduced costs: cbar_{a_i} = 1 - y_i.
        y = tuple(flips[i] * (_ONE - obj[n + i]) for i in range(m))
        return LpResult(status=INFEASIBLE, certificate=y)

    _expel_artificials(tableau, basis, n, width)
    m = len(tableau)

    # Phase 2 objective row, rebuilt from the true costs.
    obj = [_ZERO] * width
    for j in range(width):
        obj[j] = -sum(
            costs[basis[i]] * tableau[i][j] for i in range(m) if basis[i] < n
        )
    for j in range(n):
        obj[j] += costs[j]
    status = _iterate(tableau, obj, basis, n, width)
    if status == UNBOUNDED:
        return LpResult(status=UNBOUNDED)

    solution = [_ZERO] * n
    for i in range(m):
        if basis[i] < n:
            solution[basis[i]] = tableau[i][width - 1]
    value = sum((c * x for c, x in zip(costs, solution)), _ZERO)
    return LpResult(status=OPTIMAL, value=value, solution=tuple(solution))


def _iterate(tableau, obj, basis, allowed, width) -> str:
    """Run simplex pivots until optimal or unbounded.

    Only the first ``allowed`` columns may enter the basis; artificial
    columns are thereby frozen out during phase 2.
    """
    m = len(tableau)
    while True:
        enter = -1
        for j in range(allowed):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        leave = -1
        best = None
        for i in range(m):
            coeff = tableau[i][enter]
            if coeff > 0:
                ratio = tableau[i][width - 1] / coeff
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            return UNBOUNDED
        _pivot(tableau, obj, basis, leave, enter, width)


def _pivot(tableau, obj, basis, row, col, width) -> None:
    pivot_row = tableau[row]
    inv = _ONE / pivot_row[col]
    if inv != 1:
        for j in range(width):
            if pivot_row[j]:
                pivot_row[j] *= inv
    for other in tableau:
        if other is pivot_row:
            continue
        factor = other[col]
        if factor:
            for j in range(width):
                if pivot_row[j]:
                    other[j] -= factor * pivot_row[j]
    factor = obj[col]
    if factor:
        for j in range(width):
            if pivot_row[j]:
                obj[j] -= factor * pivot_row[j]
    basis[row] = col


def _expel_artificials(tableau, basis, n, width) -> None:
    """Pivot zero-level artificials out of the basis; drop redundant rows."""
    i = 0
    while i < len(tableau):
        if basis[i] < n:
            i += 1
            continue
        col = next((j for j in range(n) if tableau[i][j] != 0), None)
        if col is None:
            # The row is zero on all structural columns: a redundant
            # constraint revealed by phase 1.
            del tableau[i]
            del basis[i]
            continue
        # Degenerate pivot (rhs is zero), sign of the pivot is irrelevant.
        pivot_row = tableau[i]
        inv = _ONE / pivot_row[col]
        for j in range(width):
            if pivot_row[j]:
                pivot_row[j] *= inv
        for other in tableau:
            if other is pivot_row:
                continue
            factor = other[col]
            if factor:
                for j in range(width):
                    if pivot_row[j]:
                        other[j] -= factor * pivot_row[j]
        basis[i] = col
        i += 1
