"""Seed mutation for the dP3 quiver and the period-6 cluster variable sequence.

The quiver has six nodes carrying the initial cluster x1..x6 and is encoded
by the skew-symmetric exchange matrix B0 below (1-based node labels).  The
180-degree symmetry sigma = (15)(24)(36) fixes B0, and there are no arrows
between antipodal node pairs.

Mutating cyclically at nodes 2, 4, 5, 1, 3, 6 returns the matrix to B0 and
produces the variables y_1, y'_1, y_2, y'_2, ... which alternatively follow
the closed three-term recurrence

    y_N y_{N-3} = y_{N-1} y_{N-2} + y'_{N-1} y'_{N-2},

with bases y_{-2}=x2, y'_{-2}=x4, y_{-1}=x5, y'_{-1}=x1, y_0=x3, y'_0=x6.
Both routes are implemented; they must agree.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .laurent import SIGMA, LaurentPoly

BMatrix = tuple[tuple[int, ...], ...]

#: Mutation order of the periodic sequence.
MUTATION_CYCLE = (2, 4, 5, 1, 3, 6)

_B0_ROWS = (
    (0, -1, 1, 1, 0, -1),
    (1, 0, -1, 0, -1, 1),
    (-1, 1, 0, -1, 1, 0),
    (-1, 0, 1, 0, 1, -1),
    (0, 1, -1, -1, 0, 1),
    (1, -1, 0, 1, -1, 0),
)


class MismatchError(AssertionError):
    """Seed mutation and the three-term recurrence disagree (wrong B0)."""


def initial_b_matrix() -> BMatrix:
    """The exchange matrix of the dP3 quiver, rows/columns 1-based nodes."""
    return _B0_ROWS


def mutate_matrix(b: BMatrix, k: int) -> BMatrix:
    """Fomin-Zelevinsky matrix mutation at node k (1-based)."""
    if not 1 <= k <= 6:
        raise ValueError(f"node index {k} out of range 1..6")
    k -= 1
    n = len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-b[i][j])
            elif b[i][k] > 0 and b[k][j] > 0:
                row.append(b[i][j] + b[i][k] * b[k][j])
            elif b[i][k] < 0 and b[k][j] < 0:
                row.append(b[i][j] - b[i][k] * b[k][j])
            else:
                row.append(b[i][j])
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class Seed:
    """An exchange matrix together with the cluster variables at its nodes."""

    matrix: BMatrix
    cluster: tuple[LaurentPoly, ...]


def initial_seed() -> Seed:
    return Seed(initial_b_matrix(), tuple(LaurentPoly.var(i) for i in range(1, 7)))


def mutate_seed(seed: Seed, k: int) -> Seed:
    """Mutate at node k: exchange binomial from column k, then exact division."""
    if not 1 <= k <= 6:
        raise ValueError(f"node index {k} out of range 1..6")
    b, cl = seed.matrix, seed.cluster
    pos = LaurentPoly.one()
    neg = LaurentPoly.one()
    for i in range(6):
        e = b[i][k - 1]
        if e > 0:
            pos = pos * cl[i] ** e
        elif e < 0:
            neg = neg * cl[i] ** (-e)
    new_var = (pos + neg).exact_div(cl[k - 1])
    cluster = cl[: k - 1] + (new_var,) + cl[k:]
    return Seed(mutate_matrix(b, k), cluster)


@functools.lru_cache(maxsize=None)
def recurrence_y(n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """The pair (y_N, y'_N) for N >= -2 via the three-term exchange recurrence.

    Memoized; results are immutable and the cache is only ever appended to,
    so concurrent readers always observe consistent values.
    """
    if n < -2:
        raise ValueError("recurrence defined for N >= -2 only")
    if n == -2:
        return LaurentPoly.var(2), LaurentPoly.var(4)
    if n == -1:
        return LaurentPoly.var(5), LaurentPoly.var(1)
    if n == 0:
        return LaurentPoly.var(3), LaurentPoly.var(6)
    y1, yp1 = recurrence_y(n - 1)
    y2, yp2 = recurrence_y(n - 2)
    y3, yp3 = recurrence_y(n - 3)
    num = y1 * y2 + yp1 * yp2
    return num.exact_div(y3), num.permute(SIGMA).exact_div(yp3)


@dataclass(frozen=True)
class YSequence:
    """Variables harvested from the periodic mutation sequence, in order
    y_1, y'_1, y_2, y'_2, ...; ``final_matrix`` is the B-matrix after the run."""

    entries: tuple[LaurentPoly, ...]
    final_matrix: BMatrix

    def y(self, n: int) -> LaurentPoly:
        return self.entries[2 * n - 2]

    def y_prime(self, n: int) -> LaurentPoly:
        return self.entries[2 * n - 1]


def run_periodic_sequence(steps: int) -> YSequence:
    """Mutate ``steps`` times through the cycle 2,4,5,1,3,6, harvesting the
    new variable of every step and checking it against the recurrence."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    seed = initial_seed()
    harvested = []
    for s in range(steps):
        k = MUTATION_CYCLE[s % 6]
        seed = mutate_seed(seed, k)
        got = seed.cluster[k - 1]
        n = s // 2 + 1
        y, yp = recurrence_y(n)
        want = y if s % 2 == 0 else yp
        if got != want:
            name = f"y_{n}" if s % 2 == 0 else f"y'_{n}"
            raise MismatchError(f"seed mutation at node {k} disagrees with {name}")
        harvested.append(got)
    return YSequence(tuple(harvested), seed.matrix)
