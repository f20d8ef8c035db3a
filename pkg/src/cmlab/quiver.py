"""Thin modules over acyclic orientations of an n-cycle.

Vertices are labelled 1..n with n playing the role of 0.  Edge e_i joins
i and i+1 (mod n); its orientation is "+" for i -> i+1 and "-" for
i+1 -> i.  The exchange matrix convention is b_ij = #(j -> i) - #(i -> j),
so sinks of the quiver are the first letters of the Coxeter word.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .cartan import Matrix, WeightVec, coxeter_word, omega, positions
from .laurent import LaurentPoly, VarTable
from .mutation import ExchangeMatrix, frame, framing_names, yhat


@dataclass(frozen=True)
class CycleQuiver:
    n: int
    dir: Tuple[bool, ...]  # dir[i-1] is True when the arrow on e_i is i -> i+1

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("cycle quivers need at least 3 vertices")
        if len(self.dir) != self.n:
            raise ValueError("one orientation bit per edge is required")
        if all(self.dir) or not any(self.dir):
            raise ValueError("orientation is cyclic")

    @classmethod
    def from_string(cls, text: str) -> "CycleQuiver":
        text = text.replace("−", "-")
        if any(ch not in "+-" for ch in text):
            raise ValueError(f"bad orientation string {text!r}")
        return cls(len(text), tuple(ch == "+" for ch in text))

    @classmethod
    def from_matrix(cls, B: Sequence[Sequence[int]]) -> "CycleQuiver":
        n = len(B)
        bits = []
        for i in range(1, n + 1):
            j = i % n + 1
            b = B[j - 1][i - 1]  # #(i -> j) - #(j -> i) = -b_ij = b_ji
            if abs(b) != 1:
                raise ValueError("exchange matrix is not an oriented n-cycle")
            bits.append(b == 1)
        Q = cls(n, tuple(bits))
        if tuple(map(tuple, B)) != Q.exchange_matrix():
            raise ValueError("exchange matrix has entries off the cycle")
        return Q

    def render(self) -> str:
        return "".join("+" if d else "-" for d in self.dir)

    def succ(self, i: int) -> int:
        return i % self.n + 1

    def pred(self, i: int) -> int:
        return (i - 2) % self.n + 1

    def arrows(self) -> List[Tuple[int, int]]:
        out = []
        for i in range(1, self.n + 1):
            j = self.succ(i)
            out.append((i, j) if self.dir[i - 1] else (j, i))
        return out

    def sinks(self) -> List[int]:
        return [v for v in range(1, self.n + 1) if all(s != v for s, _ in self.arrows())]

    def sources(self) -> List[int]:
        return [v for v in range(1, self.n + 1) if all(t != v for _, t in self.arrows())]

    def exchange_matrix(self) -> Matrix:
        b = [[0] * self.n for _ in range(self.n)]
        for s, t in self.arrows():
            b[t - 1][s - 1] += 1
            b[s - 1][t - 1] -= 1
        return tuple(tuple(r) for r in b)

    def coxeter_word(self) -> Tuple[int, ...]:
        """The Coxeter word of the exchange matrix, checked against the sinks."""
        c = coxeter_word(self.exchange_matrix())
        pos = positions(c)
        for s, t in self.arrows():
            if pos[t] > pos[s]:
                raise AssertionError("arrow target does not precede its source in the Coxeter word")
        return c

    def euler_form(self) -> Matrix:
        """⟨S_i, S_j⟩: 1 on the diagonal, minus the arrow count i -> j off it."""
        E = [[int(i == j) for j in range(self.n)] for i in range(self.n)]
        for s, t in self.arrows():
            E[s - 1][t - 1] -= 1
        return tuple(tuple(r) for r in E)

    def euler_pairing(self, d1: Sequence[int], d2: Sequence[int]) -> int:
        E = self.euler_form()
        return sum(d1[i] * E[i][j] * d2[j] for i in range(self.n) for j in range(self.n))

    @classmethod
    def all_acyclic(cls, n: int) -> List["CycleQuiver"]:
        out = []
        for mask in range(1, 2 ** n - 1):
            out.append(cls(n, tuple(bool(mask >> i & 1) for i in range(n))))
        return out


@dataclass(frozen=True)
class IntervalModule:
    """The thin module supported on [k, k+length-1]; length n is the homogeneous M_η."""

    n: int
    k: int
    length: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n or not 1 <= self.length <= self.n:
            raise ValueError("interval out of range")

    @classmethod
    def interval(cls, n: int, k: int, ell: int) -> "IntervalModule":
        """[k, ℓ] as a proper cyclic interval."""
        length = (ell - k) % n + 1
        if length == n:
            raise ValueError("[k, ℓ] covers the whole cycle; use IntervalModule.full")
        return cls(n, k, length)

    @classmethod
    def full(cls, n: int) -> "IntervalModule":
        return cls(n, 1, n)

    @property
    def is_full(self) -> bool:
        return self.length == self.n

    @property
    def ell(self) -> int:
        return (self.k + self.length - 2) % self.n + 1

    def vertices(self) -> Tuple[int, ...]:
        return tuple((self.k - 1 + p) % self.n + 1 for p in range(self.length))

    def dim_vector(self) -> Tuple[int, ...]:
        d = [0] * self.n
        for v in self.vertices():
            d[v - 1] = 1
        return tuple(d)

    @classmethod
    def all_proper(cls, n: int) -> List["IntervalModule"]:
        return [cls(n, k, length) for length in range(1, n) for k in range(1, n + 1)]


@dataclass(frozen=True)
class Classification:
    rigid_regular: bool
    sinks: Tuple[int, ...]
    sources: Tuple[int, ...]
    euler: int


def _check_n(Q: CycleQuiver, m: IntervalModule) -> None:
    if Q.n != m.n:
        raise ValueError("quiver and module live on cycles of different size")


def classify_interval(Q: CycleQuiver, m: IntervalModule) -> Classification:
    _check_n(Q, m)
    if m.is_full:
        raise ValueError("classify_interval takes a proper interval")
    verts = m.vertices()
    sk, sr = set(Q.sinks()), set(Q.sources())
    sinks = tuple(v for v in verts if v in sk)
    sources = tuple(v for v in verts if v in sr)
    euler = Q.euler_pairing((1,) * Q.n, m.dim_vector())
    return Classification(len(sinks) == len(sources), sinks, sources, euler)


def target_closed_subsets(Q: CycleQuiver, m: IntervalModule) -> List[FrozenSet[int]]:
    """Subsets E of the support with s(a) in E and t(a) in the support forcing t(a) in E."""
    _check_n(Q, m)
    verts = m.vertices()
    support = set(verts)
    inner = [(s, t) for s, t in Q.arrows() if s in support and t in support]
    if m.is_full:
        inner = Q.arrows()
    out = []
    for size in range(len(verts) + 1):
        for E in combinations(verts, size):
            Es = set(E)
            if all(t in Es for s, t in inner if s in Es):
                out.append(frozenset(E))
    return out


def cyclic_range(n: int, a: int, b: int) -> List[int]:
    """[a, b] on Z_n, empty when b = a - 1."""
    length = (b - a + 1) % n
    return [(a - 1 + p) % n + 1 for p in range(length)]


def omega_S(n: int, S) -> WeightVec:
    w = WeightVec.zero(n)
    for j in S:
        w = w + omega(n, j % n + 1) - omega(n, j)
    return w


def euler_gvector(Q: CycleQuiver, m: IntervalModule) -> WeightVec:
    """ω(M)_j = -⟨S_j, M⟩, read off the minimal injective copresentation."""
    _check_n(Q, m)
    d = m.dim_vector()
    E = Q.euler_form()
    return WeightVec(-sum(E[j][k] * d[k] for k in range(Q.n)) for j in range(Q.n))


def _first_is_sink(Q: CycleQuiver, m: IntervalModule, sinks, sources) -> bool:
    verts = m.vertices()
    special = [v for v in verts if v in sinks or v in sources]
    if special:
        return special[0] in sinks
    # no sinks or sources inside: arrows all run the same way through [k, ℓ]
    return (Q.pred(m.k), m.k) in Q.arrows()


def interval_gvector(Q: CycleQuiver, m: IntervalModule) -> Tuple[WeightVec, FrozenSet[int]]:
    """(ω(M), S) with ω(M) = Σ_{j∈S} ω_{j+1} - ω_j."""
    _check_n(Q, m)
    n = Q.n
    if m.is_full:
        sinks, sources = set(Q.sinks()), set(Q.sources())
        w = WeightVec.zero(n)
        S: List[int] = []
        for i in sorted(sinks):
            o = next(v for v in (((i - 1 + p) % n) + 1 for p in range(1, n)) if v in sources)
            w = w + omega(n, o) - omega(n, i)
            S += cyclic_range(n, i, o - 1)
    else:
        cl = classify_interval(Q, m)
        if not cl.rigid_regular:
            raise ValueError(f"interval [{m.k},{m.ell}] is not rigid regular")
        k, ell = m.k, m.ell
        body = WeightVec.zero(n)
        for o, i in zip(cl.sources, cl.sinks):
            body = body + omega(n, o) - omega(n, i)
        if _first_is_sink(Q, m, set(cl.sinks), set(cl.sources)):
            w = omega(n, (k - 2) % n + 1) - omega(n, ell) + body
            S = cyclic_range(n, ell, (k - 3) % n + 1)
            for o, i in zip(cl.sources, cl.sinks):
                S += cyclic_range(n, i, (o - 2) % n + 1)
        else:
            w = omega(n, ell % n + 1) - omega(n, k) + body
            bounds = [k] + list(cl.sinks)
            ends = [(o - 2) % n + 1 for o in cl.sources] + [ell]
            S = []
            for a, b in zip(bounds, ends):
                S += cyclic_range(n, a, b)
    if len(set(S)) != len(S):
        raise AssertionError("S-set pieces overlap")
    S = frozenset(S)
    if omega_S(n, S) != w:
        raise AssertionError("telescoped g-vector disagrees with the sink/source form")
    return w, S


def doubled_matrix(Q: CycleQuiver) -> ExchangeMatrix:
    return frame(Q.exchange_matrix(), "doubled")


def _character(M: ExchangeMatrix, g: Sequence[int], subsets, table: Optional[VarTable]) -> LaurentPoly:
    if table is None:
        table = VarTable(framing_names(M.n, M.m))
    yh = [yhat(M, j, table) for j in range(1, M.n + 1)]
    total = LaurentPoly.const(table, 0)
    for E in subsets:
        term = LaurentPoly.const(table, 1)
        for j in E:
            term = term * yh[j - 1]
        total = total + term
    prefactor = LaurentPoly.monomial(table, {f"x{i + 1}": e for i, e in enumerate(g) if e})
    return prefactor * total


def cluster_character_interval(Q: CycleQuiver, m: IntervalModule, M: Optional[ExchangeMatrix] = None,
                               table: Optional[VarTable] = None) -> LaurentPoly:
    """x^{ω(M)} Σ_E Π_{j∈E} ŷ_j over the target-closed subsets of the support.

    Rigid regular and full-cycle modules use the sink/source g-vector (checked
    against the Euler form); other thin intervals use the Euler form alone.
    """
    if M is None:
        M = doubled_matrix(Q)
    if M.principal != Q.exchange_matrix():
        raise ValueError("exchange matrix does not match the quiver")
    g = euler_gvector(Q, m)
    if m.is_full or classify_interval(Q, m).rigid_regular:
        w, _ = interval_gvector(Q, m)
        if w != g:
            raise AssertionError("sink/source g-vector disagrees with the Euler form")
    return _character(M, g, target_closed_subsets(Q, m), table)


def kronecker_matrix(r: int) -> Matrix:
    """r arrows 2 -> 1."""
    return ((0, r), (-r, 0))


def kronecker_character(r: int, table: Optional[VarTable] = None) -> LaurentPoly:
    """x1^-1 x2^{r-1} (1 + ŷ1 + ŷ1ŷ2) in the doubled framing."""
    if r < 2:
        raise ValueError("the Kronecker quiver needs r >= 2")
    M = frame(kronecker_matrix(r), "doubled")
    return _character(M, (-1, r - 1), [(), (1,), (1, 2)], table)
