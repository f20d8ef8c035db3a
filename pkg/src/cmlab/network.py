"""Weighted networks on a cylinder and level-zero minors as path sums.

Levels are residues mod n, written 1..n (n doubles as 0).  The bridge of
letter i joins levels i-1 and i.  Slices are listed left to right in factor
order; paths enter on the right boundary and leave on the left one.  A path
is tracked by its unwrapped level so that windings around the cylinder are
visible: only collections of total winding zero contribute to a level-zero
minor.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from .laurent import LaurentPoly, VarTable
from .quiver import CycleQuiver, IntervalModule, interval_gvector, target_closed_subsets


@dataclass(frozen=True)
class Bridge:
    letter: int
    weight: str
    down: bool  # True for x_i (level i -> level i-1), False for x_ī


@dataclass(frozen=True)
class CartanSlice:
    pass


Slice = Union[Bridge, CartanSlice]


def param_names(u: Sequence[int], v: Sequence[int]) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    """Parameter names for the factors of u (barred) and v.

    Words without repeated letters name parameters by letter, so a Coxeter
    factorization reads t_i, tb_i.  Otherwise parameters are numbered by
    position.
    """
    u, v = tuple(u), tuple(v)
    bars = tuple(f"tb{i}" for i in u) if len(set(u)) == len(u) else tuple(f"tb{p}" for p in range(1, len(u) + 1))
    plain = tuple(f"t{i}" for i in v) if len(set(v)) == len(v) else tuple(f"t{p}" for p in range(1, len(v) + 1))
    return bars, plain


def weight_table(n: int, u: Sequence[int] = (), v: Sequence[int] = (), extra: Iterable[str] = ()) -> VarTable:
    bars, plain = param_names(u, v)
    names = list(plain) + list(bars) + [f"h{i}" for i in range(1, n + 1)]
    names += [f"t{i}" for i in range(1, n + 1) if f"t{i}" not in names]
    names += [f"tb{i}" for i in range(1, n + 1) if f"tb{i}" not in names]
    return VarTable(names + [x for x in extra if x not in names])


@dataclass(frozen=True)
class CylinderNetwork:
    n: int
    slices: Tuple[Slice, ...]
    u: Tuple[int, ...]
    v: Tuple[int, ...]

    def level_weight(self, level: int) -> Dict[str, int]:
        """h_{L+1} h_L^{-1} for level L."""
        a = level % self.n + 1
        b = (level - 1) % self.n + 1
        return {f"h{a}": 1, f"h{b}": -1}

    def dump(self) -> str:
        lines = [f"network n={self.n}"]
        for p, s in enumerate(self.slices):
            if isinstance(s, CartanSlice):
                for L in range(1, self.n + 1):
                    w = self.level_weight(L)
                    lines.append(f"{p} level {L} weight " + "*".join(f"{k}^{e}" for k, e in w.items()))
            else:
                lo, hi = (s.letter - 2) % self.n + 1, s.letter
                a, b = (hi, lo) if s.down else (lo, hi)
                lines.append(f"{p} bridge {a}->{b} weight {s.weight}")
        return "\n".join(lines)


def build_network(n: int, u: Sequence[int], v: Sequence[int]) -> CylinderNetwork:
    """The network of x_ū(t̄)… h x_v(t)…, slice order = factor order."""
    u, v = tuple(u), tuple(v)
    for i in u + v:
        if not 1 <= i <= n:
            raise ValueError(f"letter {i} outside 1..{n}")
    bars, plain = param_names(u, v)
    slices: List[Slice] = [Bridge(i, w, False) for i, w in zip(u, bars)]
    slices.append(CartanSlice())
    slices += [Bridge(i, w, True) for i, w in zip(v, plain)]
    return CylinderNetwork(n, tuple(slices), u, v)


@dataclass(frozen=True)
class PathCollection:
    """Paths of a collection, one per start level.

    ``routes[j]`` lists the unwrapped level of the path starting at level j
    after each slice, read right to left; ``bridges`` holds the indices of
    the slices whose bridge the collection uses.
    """

    network: CylinderNetwork
    starts: Tuple[int, ...]
    routes: Tuple[Tuple[int, ...], ...]
    bridges: FrozenSet[int]

    @property
    def ends(self) -> Tuple[int, ...]:
        return tuple((r[-1] - 1) % self.network.n + 1 for r in self.routes)

    def sign(self) -> int:
        """Sign of the permutation start -> end (levels in increasing order)."""
        order = sorted(range(len(self.starts)), key=lambda p: self.starts[p])
        ends = [self.ends[p] for p in order]
        rank = {e: r for r, e in enumerate(sorted(ends))}
        perm = [rank[e] for e in ends]
        sgn, seen = 1, [False] * len(perm)
        for i in range(len(perm)):
            if seen[i]:
                continue
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sgn = -sgn
        return sgn

    def weight(self, table: Optional[VarTable] = None) -> LaurentPoly:
        N = self.network
        if table is None:
            table = weight_table(N.n, N.u, N.v)
        exps: Dict[str, int] = {}
        for p in self.bridges:
            w = N.slices[p].weight
            exps[w] = exps.get(w, 0) + 1
        cart = _cartan_index(N)
        for r in self.routes:
            # the level at the Cartan slice is the level after all slices to its right
            lvl = r[len(N.slices) - 1 - cart]
            for k, e in N.level_weight(lvl).items():
                exps[k] = exps.get(k, 0) + e
        return LaurentPoly.monomial(table, {k: e for k, e in exps.items() if e}, self.sign())


def _cartan_index(N: CylinderNetwork) -> int:
    return next(p for p, s in enumerate(N.slices) if isinstance(s, CartanSlice))


def enumerate_collections(N: CylinderNetwork, S: Iterable[int]) -> List[PathCollection]:
    """All vertex-disjoint collections from S (right) to S (left) of winding zero."""
    n = N.n
    S = tuple(sorted({(s - 1) % n + 1 for s in S}))
    if not S or len(S) >= n:
        raise ValueError("S must be a nonempty proper subset of Z_n")
    order = list(reversed(range(len(N.slices))))
    out: List[PathCollection] = []

    def rec(step: int, pos: Tuple[int, ...], hist: List[Tuple[int, ...]], used: Tuple[int, ...]):
        if step == len(order):
            ends = sorted((p - 1) % n + 1 for p in pos)
            if tuple(ends) == S and sum(pos) == sum(S):
                routes = tuple(tuple(h[q] for h in hist) for q in range(len(S)))
                out.append(PathCollection(N, S, routes, frozenset(used)))
            return
        p = order[step]
        s = N.slices[p]
        if isinstance(s, CartanSlice):
            rec(step + 1, pos, hist + [pos], used)
            return
        rec(step + 1, pos, hist + [pos], used)
        hi = s.letter % n
        lo = (s.letter - 1) % n
        src, delta = (hi, -1) if s.down else (lo, 1)
        occupied = {q % n for q in pos}
        for q, x in enumerate(pos):
            if x % n == src and (x + delta) % n not in occupied:
                new = pos[:q] + (x + delta,) + pos[q + 1:]
                rec(step + 1, new, hist + [new], used + (p,))

    rec(0, S, [], ())
    return out


def minor_by_paths(N: CylinderNetwork, S: Iterable[int], table: Optional[VarTable] = None) -> LaurentPoly:
    if table is None:
        table = weight_table(N.n, N.u, N.v)
    total = LaurentPoly.const(table, 0)
    for P in enumerate_collections(N, S):
        total = total + P.weight(table)
    return total


def audit_disjoint(P: PathCollection) -> bool:
    """Independent check that no two paths share a vertex at any slice boundary."""
    n = P.network.n
    for t in range(len(P.network.slices)):
        lv = [r[t] % n for r in P.routes]
        if len(set(lv)) != len(lv):
            return False
    return len({s % n for s in P.starts}) == len(P.starts)


def _quiver_from_network(N: CylinderNetwork) -> CycleQuiver:
    """Arrow (i+1) -> i when i precedes i+1 in the barred word, i -> i+1 otherwise."""
    pos = {i: p for p, i in enumerate(N.u)}
    if sorted(pos) != list(range(1, N.n + 1)):
        raise ValueError("bridge sets are defined for Coxeter networks")
    return CycleQuiver(N.n, tuple(pos[i] > pos[i % N.n + 1] for i in range(1, N.n + 1)))


def bridge_set(P: PathCollection) -> FrozenSet[int]:
    """Labels j whose bridge of weight t_j is traversed; checks the local disjointness rules."""
    N = P.network
    n = N.n
    beta = frozenset(N.slices[p].letter for p in P.bridges if N.slices[p].down)
    Q = _quiver_from_network(N)
    arrows = set(Q.arrows())
    starts = set(P.starts)
    for j in range(1, n + 1):
        j1 = j % n + 1
        if j in starts and j1 in beta and not (j in beta and (j1, j) in arrows):
            raise AssertionError(f"rule (1) fails at {j}")
        if j not in starts and j in beta and not (j1 in beta and (j, j1) in arrows):
            raise AssertionError(f"rule (2) fails at {j}")
    return beta


def paths_from_subset(Q: CycleQuiver, m: IntervalModule, E: Iterable[int],
                      N: Optional[CylinderNetwork] = None) -> PathCollection:
    """The collection with bridge set E for the module m.

    The path from each j in S_m descends through the bridges t_j, t_{j-1},
    ..., t_a of the maximal run [a, j] inside E that avoids the other start
    levels, crosses the Cartan slice at level a-1, and climbs back through
    t̄_a, ..., t̄_j.  This is the end result of diverting the trivial
    collection one target-closed step at a time.
    """
    n = Q.n
    E = frozenset(E)
    if E not in set(target_closed_subsets(Q, m)):
        raise ValueError(f"{sorted(E)} is not target-closed in the support of the module")
    _, S = interval_gvector(Q, m)
    if N is None:
        c = Q.coxeter_word()
        N = build_network(n, c, tuple(reversed(c)))
    runs: Dict[int, List[int]] = {}
    for j in sorted(S):
        run: List[int] = []
        a = j
        while a in E and (a == j or a not in S) and len(run) < n:
            run.append(a)
            a = (a - 2) % n + 1
        runs[j] = run
    covered = [x for r in runs.values() for x in r]
    if sorted(covered) != sorted(E):
        raise ValueError("subset is not a union of runs below the start levels")
    # replay the runs through the network, right to left
    starts = tuple(sorted(S))
    pos = {j: j for j in starts}
    hist: Dict[int, List[int]] = {j: [] for j in starts}
    used: List[int] = []
    for p in reversed(range(len(N.slices))):
        s = N.slices[p]
        if isinstance(s, Bridge):
            for j in starts:
                if s.letter in runs[j]:
                    src = s.letter if s.down else (s.letter - 2) % n + 1
                    if (pos[j] - 1) % n + 1 != src:
                        raise ValueError("subset does not give a path through the network")
                    pos[j] += -1 if s.down else 1
                    used.append(p)
        for j in starts:
            hist[j].append(pos[j])
    P = PathCollection(N, starts, tuple(tuple(hist[j]) for j in starts), frozenset(used))
    if not audit_disjoint(P) or any(pos[j] != j for j in starts):
        raise ValueError("subset does not give a disjoint collection")
    return P
