"""Exact perfect matching counts and weighted matching sums on diamonds.

Both quantities come from a frontier dynamic program: vertices are swept in
a fixed planar order and a state records, as a bitmask, which already-seen
vertices still await a partner across the sweep line.  Diamond frontiers
stay narrow, so the reachable state sets remain small even for graphs with
millions of matchings.  A vertex is either matched to a pending earlier
neighbor or deferred (if it still has unseen neighbors); states keeping a
vertex pending beyond its last neighbor are pruned.

The weighted sum attaches to every state the Laurent polynomial of partial
matching weights, held as a raw packed-key dict for speed.  Results are
exact and independent of the sweep order; the computation is purely
sequential and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import UNIT_KEY, LaurentPoly, pack_exponents
from .diamonds import DiamondGraph, build_diamond, covering_monomial
from .tiling import BlockScheme, vertex_coords

SWEEP_ORDERS = ("yx", "xy")


class LimitExceededError(RuntimeError):
    """Enumeration would produce more matchings than the caller allowed."""


def _edge_weight_key(la: int, lb: int) -> int:
    exps = [0] * 6
    exps[la - 1] -= 1
    exps[lb - 1] -= 1
    return pack_exponents(exps) - UNIT_KEY


def _sweep(graph: DiamondGraph, order: str):
    """Vertex order plus, per vertex, its earlier neighbors (with weight key
    offsets), whether it has later neighbors, and the prune mask of vertices
    whose last neighbor it is."""
    if order not in SWEEP_ORDERS:
        raise ValueError(f"unknown sweep order {order!r}")
    if order == "yx":
        key = lambda v: (vertex_coords(v)[1], vertex_coords(v)[0], v)
    else:
        key = lambda v: (vertex_coords(v)[0], vertex_coords(v)[1], v)
    verts = sorted(graph.vertices, key=key)
    index = {v: i for i, v in enumerate(verts)}
    nv = len(verts)
    earlier: list[list[tuple[int, int]]] = [[] for _ in range(nv)]
    last_nbr = [-1] * nv
    has_future = [False] * nv
    for u, v, la, lb in graph.edges:
        i, j = index[u], index[v]
        if i > j:
            i, j = j, i
        w = _edge_weight_key(la, lb)
        earlier[j].append((i, w))
        has_future[i] = True
        last_nbr[i] = max(last_nbr[i], j)
        last_nbr[j] = max(last_nbr[j], j)
    for lst in earlier:
        lst.sort()
    dead_at = [0] * nv
    for i, last in enumerate(last_nbr):
        if last >= 0:
            dead_at[last] |= 1 << i
        # isolated vertices can never be covered; their step kills all states
        if last < 0:
            dead_at[i] |= 1 << i
    return verts, earlier, has_future, dead_at


def count_pm(graph: DiamondGraph, order: str = "yx") -> int:
    """The number of perfect matchings, exactly."""
    verts, earlier, has_future, dead_at = _sweep(graph, order)
    states = {0: 1}
    for s in range(len(verts)):
        bit = 1 << s
        new: dict[int, int] = {}
        for mask, cnt in states.items():
            if has_future[s]:
                m2 = mask | bit
                new[m2] = new.get(m2, 0) + cnt
            for u, _ in earlier[s]:
                if mask >> u & 1:
                    m2 = mask & ~(1 << u)
                    new[m2] = new.get(m2, 0) + cnt
        if dead_at[s]:
            d = dead_at[s]
            new = {m: c for m, c in new.items() if not (m & d)}
        states = new
    return states.get(0, 0)


def weighted_pm_sum(graph: DiamondGraph, order: str = "yx") -> LaurentPoly:
    """Sum over perfect matchings of the product of edge weights 1/(x_a x_b).

    The empty graph has the single empty matching of weight 1.
    """
    verts, earlier, has_future, dead_at = _sweep(graph, order)
    states: dict[int, dict[int, int]] = {0: {UNIT_KEY: 1}}
    for s in range(len(verts)):
        bit = 1 << s
        new: dict[int, dict[int, int]] = {}
        for mask, poly in states.items():
            if has_future[s]:
                m2 = mask | bit
                tgt = new.get(m2)
                if tgt is None:
                    new[m2] = dict(poly)
                else:
                    for k, c in poly.items():
                        v = tgt.get(k, 0) + c
                        if v:
                            tgt[k] = v
                        else:
                            del tgt[k]
            for u, w in earlier[s]:
                if mask >> u & 1:
                    m2 = mask & ~(1 << u)
                    tgt = new.get(m2)
                    if tgt is None:
                        new[m2] = {k + w: c for k, c in poly.items()}
                    else:
                        for k, c in poly.items():
                            kk = k + w
                            v = tgt.get(kk, 0) + c
                            if v:
                                tgt[kk] = v
                            else:
                                del tgt[kk]
        if dead_at[s]:
            d = dead_at[s]
            new = {m: p for m, p in new.items() if not (m & d)}
        states = new
    return LaurentPoly(states.get(0, {}))


Matching = tuple[tuple[int, ...], ...]  # sorted edge indices into graph.edges


def enumerate_pm(graph: DiamondGraph, limit: int = 1 << 20) -> list[Matching]:
    """Exhaustive backtracking enumeration, branching on the lowest-index
    uncovered vertex; deterministic order.  Raises LimitExceededError once
    more than ``limit`` matchings would be produced."""
    nv = len(graph.vertices)
    index = {v: i for i, v in enumerate(graph.vertices)}
    incident: list[list[tuple[int, int]]] = [[] for _ in range(nv)]  # (other, edge_idx)
    for ei, (u, v, _, _) in enumerate(graph.edges):
        iu, iv = index[u], index[v]
        incident[iu].append((iv, ei))
        incident[iv].append((iu, ei))
    for lst in incident:
        lst.sort()
    covered = [False] * nv
    chosen: list[int] = []
    out: list[Matching] = []

    def rec(start: int) -> None:
        v = start
        while v < nv and covered[v]:
            v += 1
        if v == nv:
            if len(out) >= limit:
                raise LimitExceededError(f"more than {limit} perfect matchings")
            out.append(tuple(sorted(chosen)))
            return
        covered[v] = True
        for u, ei in incident[v]:
            if not covered[u]:
                covered[u] = True
                chosen.append(ei)
                rec(v + 1)
                chosen.pop()
                covered[u] = False
        covered[v] = False

    rec(0)
    return out


def matching_weight(graph: DiamondGraph, matching: Matching) -> LaurentPoly:
    """Product of the edge weights of one matching."""
    exps = [0] * 6
    for ei in matching:
        _, _, la, lb = graph.edges[ei]
        exps[la - 1] -= 1
        exps[lb - 1] -= 1
    return LaurentPoly.monomial(1, exps)


def matching_covers(graph: DiamondGraph, matching: Matching) -> bool:
    seen = set()
    for ei in matching:
        u, v, _, _ = graph.edges[ei]
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return len(seen) == len(graph.vertices)


def aggregate_enumeration(graph: DiamondGraph, limit: int = 1 << 20) -> LaurentPoly:
    """Brute-force oracle: sum of matching weights over all matchings."""
    total = LaurentPoly.zero()
    for m in enumerate_pm(graph, limit):
        total = total + matching_weight(graph, m)
    return total


# ---------------------------------------------------------------------------
# Condensation identities


def _inv_monomial(*labels: int) -> LaurentPoly:
    exps = [0] * 6
    for l in labels:
        exps[l - 1] -= 1
    return LaurentPoly.monomial(1, exps)


@dataclass(frozen=True)
class CondensationInstance:
    """One bilinear matching-weight identity: the graphs and monomial factors
    of w(big) w(center) = w(p1a) w(p1b) mono1 + w(p2a) w(p2b) mono2."""

    n: int
    kind: int
    big: DiamondGraph
    center: DiamondGraph
    pair1: tuple[DiamondGraph, DiamondGraph, LaurentPoly]
    pair2: tuple[DiamondGraph, DiamondGraph, LaurentPoly]


def condensation_instance(n: int, kind: int, scheme: BlockScheme | None = None) -> CondensationInstance:
    """The kind-1 identity relates D_n D_{n-3/2} to D_{n-1/2} D_{n-1} and
    their primed mates (n >= 2); kind 2 relates D_{n+1/2} D_{n-1} to
    D_n D_{n-1/2} and mates (n >= 1, the center being empty at n = 1)."""
    if kind == 1:
        if n < 2:
            raise ValueError("kind-1 condensation requires n >= 2")
        big, center = build_diamond(2 * n, False, scheme), build_diamond(2 * n - 3, False, scheme)
        a, b = 2 * n - 1, 2 * n - 2
        mono1 = _inv_monomial(1, 2, 3, 4, 5, 6)
    elif kind == 2:
        if n < 1:
            raise ValueError("kind-2 condensation requires n >= 1")
        big, center = build_diamond(2 * n + 1, False, scheme), build_diamond(2 * n - 2, False, scheme)
        a, b = 2 * n, 2 * n - 1
        mono1 = _inv_monomial(1, 3, 2, 6, 4, 5)
    else:
        raise ValueError("kind must be 1 or 2")
    mono2 = _inv_monomial(1, 2, 2, 3, 3, 5)
    return CondensationInstance(
        n=n,
        kind=kind,
        big=big,
        center=center,
        pair1=(build_diamond(a, False, scheme), build_diamond(b, False, scheme), mono1),
        pair2=(build_diamond(a, True, scheme), build_diamond(b, True, scheme), mono2),
    )


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    lhs: LaurentPoly
    rhs: LaurentPoly

    def diff(self) -> LaurentPoly:
        return self.lhs - self.rhs


def verify_condensation(inst: CondensationInstance, order: str = "yx") -> VerifyResult:
    """Check the identity with all six weighted sums computed independently."""
    lhs = weighted_pm_sum(inst.big, order) * weighted_pm_sum(inst.center, order)
    rhs = LaurentPoly.zero()
    for ga, gb, mono in (inst.pair1, inst.pair2):
        rhs = rhs + weighted_pm_sum(ga, order) * weighted_pm_sum(gb, order) * mono
    return VerifyResult(lhs == rhs, lhs, rhs)


def matchings_route_y(n: int, primed: bool = False, scheme: BlockScheme | None = None,
                      order: str = "yx") -> LaurentPoly:
    """y_N (or y'_N) through the matching model: w(D_{N/2}) m(D_{N/2})."""
    if n < 1:
        raise ValueError("matching route defined for N >= 1")
    graph = build_diamond(n, primed, scheme)
    return weighted_pm_sum(graph, order) * covering_monomial(n, primed, scheme)
