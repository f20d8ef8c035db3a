"""Matrix models of SL_n and of the loop group of SL_n over factorization parameters.

Finite model: n×n matrices, letters 1..n-1, x_i(t) = 1 + t E_{i,i+1},
x_ī(t) = 1 + t E_{i+1,i}, h = diag(h1, h2/h1, ..., 1/h_{n-1}).

Loop model: n×n matrices over Laurent polynomials in z.  Matrix index L
stands for level L mod n.  Letters 1..n-1 act as in the finite model and the
letter n couples index n-1 with index 0 through z:
x_n(t) = 1 + t z E_{n-1,0}, x_n̄(t) = 1 + t z^{-1} E_{0,n-1}.  Level L of
the Cartan factor carries h_{L+1}/h_L with indices mod n.  Level-zero
minors only see the z^0 part, so the sign of the z exponent is immaterial
there.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .cartan import (CartanData, WeightVec, cartan_companion, cartan_from_matrix,
                     coxeter_word, dominant_word, inverse_word, omega, positions, weyl_act)
from .laurent import LaurentPoly, VarTable
from .network import param_names, weight_table

FINITE = "finite-sl"
LOOP = "loop-sl"


class LoopMatrix:
    """A square matrix with LaurentPoly entries over one table."""

    __slots__ = ("table", "rows", "model")

    def __init__(self, table: VarTable, rows, model: str = FINITE):
        self.table = table
        self.rows = tuple(tuple(r) for r in rows)
        self.model = model

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, table: VarTable, n: int, model: str = FINITE) -> "LoopMatrix":
        one, zero = LaurentPoly.const(table, 1), LaurentPoly.const(table, 0)
        return cls(table, [[one if i == j else zero for j in range(n)] for i in range(n)], model)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "LoopMatrix") -> "LoopMatrix":
        zero = LaurentPoly.const(self.table, 0)
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = zero
                for a, b in zip(r, col):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LoopMatrix(self.table, out, self.model)

    def signed_perm_conj(self, left, right) -> "LoopMatrix":
        """L g R for integer signed-permutation matrices L, R."""
        n = self.size
        lrow = [next((k, L[k]) for k in range(n) if L[k]) for L in left]
        rcol = [next((k, right[k][j]) for k in range(n) if right[k][j]) for j in range(n)]
        out = []
        for i in range(n):
            k, s = lrow[i]
            out.append([self.rows[k][m] * (s * t) for m, t in rcol])
        return LoopMatrix(self.table, out, self.model)

    def __eq__(self, other) -> bool:
        return isinstance(other, LoopMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> LaurentPoly:
        return det([[self.rows[r][c] for c in cols] for r in rows], self.table)

    def det(self) -> LaurentPoly:
        return self.minor(range(self.size), range(self.size))

    def render(self) -> List[List[str]]:
        return [[e.render() for e in r] for r in self.rows]


def det(M: Sequence[Sequence[LaurentPoly]], table: VarTable) -> LaurentPoly:
    """Laplace expansion along rows with memoization on the column set."""
    k = len(M)
    if k == 0:
        return LaurentPoly.const(table, 1)
    memo: Dict[Tuple[int, ...], LaurentPoly] = {}

    def rec(r: int, cols: Tuple[int, ...]) -> LaurentPoly:
        if r == k:
            return LaurentPoly.const(table, 1)
        if cols in memo:
            return memo[cols]
        acc = LaurentPoly.const(table, 0)
        for p, c in enumerate(cols):
            e = M[r][c]
            if not e:
                continue
            sub = rec(r + 1, cols[:p] + cols[p + 1:])
            if sub:
                acc = acc + e * sub if p % 2 == 0 else acc - e * sub
        memo[cols] = acc
        return acc

    return rec(0, tuple(range(k)))


# -- parameter ring and factors ---------------------------------------------


def param_table(model: str, n: int, u: Sequence[int] = (), v: Sequence[int] = ()) -> VarTable:
    """t/tb parameters, h1..h_rank and z for the loop model."""
    rank = n - 1 if model == FINITE else n
    return weight_table(rank, u, v, extra=("z",) if model == LOOP else ())


def _check_model(model: str, n: int, letters: Iterable[int]) -> int:
    if model not in (FINITE, LOOP):
        raise ValueError(f"unknown model {model!r}")
    top = n - 1 if model == FINITE else n
    for i in letters:
        if not 1 <= i <= top:
            raise ValueError(f"letter {i} invalid for the {model} model with n={n}")
    return top


def _elementary(table: VarTable, n: int, model: str, i: int, param: str, bar: bool) -> LoopMatrix:
    g = [list(r) for r in LoopMatrix.identity(table, n, model).rows]
    t = LaurentPoly.var(table, param)
    if i < n:
        r, c = (i, i - 1) if bar else (i - 1, i)
        g[r][c] = t
    else:
        z = LaurentPoly.monomial(table, {"z": -1 if bar else 1})
        r, c = (0, n - 1) if bar else (n - 1, 0)
        g[r][c] = t * z
    return LoopMatrix(table, g, model)


def cartan_factor(table: VarTable, n: int, model: str, inverse: bool = False) -> LoopMatrix:
    g = [list(r) for r in LoopMatrix.identity(table, n, model).rows]
    s = -1 if inverse else 1
    for L in range(n):
        exps: Dict[str, int] = {}
        up, down = L + 1, L
        if model == LOOP:
            up, down = (L % n) + 1, (L - 1) % n + 1
        if model == FINITE:
            if up < n:
                exps[f"h{up}"] = s
            if down >= 1:
                exps[f"h{down}"] = -s
        else:
            exps[f"h{up}"] = exps.get(f"h{up}", 0) + s
            exps[f"h{down}"] = exps.get(f"h{down}", 0) - s
        g[L][L] = LaurentPoly.monomial(table, {k: e for k, e in exps.items() if e})
    return LoopMatrix(table, g, model)


@dataclass(frozen=True)
class Factorization:
    """Factors of x_ū(t̄)… h x_v(t)… as (kind, letter, parameter) with kind in {"xb", "h", "x"}."""

    model: str
    n: int
    factors: Tuple[Tuple[str, int, str], ...]

    def matrices(self, table: VarTable) -> List[LoopMatrix]:
        out = []
        for kind, i, p in self.factors:
            if kind == "h":
                out.append(cartan_factor(table, self.n, self.model, inverse=(p == "inv")))
            else:
                out.append(_elementary(table, self.n, self.model, i, p, kind == "xb"))
        return out

    def evaluate(self, table: VarTable) -> LoopMatrix:
        g = LoopMatrix.identity(table, self.n, self.model)
        for f in self.matrices(table):
            g = g @ f
        return g

    def iota(self) -> "Factorization":
        """Reverse the factor order and invert the Cartan factor."""
        out = []
        for kind, i, p in reversed(self.factors):
            if kind == "h":
                p = "" if p == "inv" else "inv"
            out.append((kind, i, p))
        return Factorization(self.model, self.n, tuple(out))


def factorization(model: str, n: int, u: Sequence[int], v: Sequence[int]) -> Factorization:
    u, v = tuple(u), tuple(v)
    _check_model(model, n, u + v)
    bars, plain = param_names(u, v)
    fs = [("xb", i, p) for i, p in zip(u, bars)] + [("h", 0, "")] + [("x", i, p) for i, p in zip(v, plain)]
    return Factorization(model, n, tuple(fs))


def generic_element(model: str, n: int, u: Sequence[int], v: Sequence[int],
                    table: Optional[VarTable] = None) -> LoopMatrix:
    if table is None:
        table = param_table(model, n, u, v)
    return factorization(model, n, u, v).evaluate(table)


def coxeter_element(model: str, n: int, c: Sequence[int], table: Optional[VarTable] = None) -> LoopMatrix:
    """x_{σ1}̄ ⋯ x_{σn}̄ h x_{σn} ⋯ x_{σ1} for the Coxeter word c = σ."""
    return generic_element(model, n, c, inverse_word(c), table)


def wedge_minor_oracle(g: LoopMatrix, S: Iterable[int]) -> LaurentPoly:
    """The S×S minor; in the loop model S lists levels and only z^0 is kept."""
    n = g.size
    if g.model == LOOP:
        idx = sorted({s % n for s in S})
        return g.minor(idx, idx).coeff_z(0)
    idx = sorted(s - 1 for s in S)
    return g.minor(idx, idx)


# -- Weyl group lifts (finite model) -----------------------------------------


def lift(n: int, word: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """s̄_{w1} ⋯ s̄_{wk} with s̄_j the block [[0,-1],[1,0]] at (j, j+1)."""
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for j in word:
        # right-multiply by s̄_j: column j-1 <- column j, column j <- -column j-1
        for r in range(n):
            a, b = M[r][j - 1], M[r][j]
            M[r][j - 1], M[r][j] = b, -a
    return tuple(tuple(r) for r in M)


def _transpose(M):
    return tuple(zip(*M))


def twisted_minor(g: LoopMatrix, i: int, u: Sequence[int], v: Sequence[int]) -> LaurentPoly:
    """Δ^{uω_i}_{vω_i}(g): leading i×i minor of ū^{-1} g v̄."""
    if g.model != FINITE:
        raise ValueError("twisted minors are only available in the finite model")
    n = g.size
    _check_model(FINITE, n, tuple(u) + tuple(v))
    ubar, vbar = lift(n, u), lift(n, v)
    h = g.signed_perm_conj(_transpose(ubar), vbar)  # ū is orthogonal
    return h.minor(range(i), range(i))


def sl_cartan(n: int) -> CartanData:
    r = n - 1
    return cartan_from_matrix([[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(r)] for i in range(r)])


def _orbit_word(A: CartanData, lam: Sequence[int]) -> Tuple[Tuple[int, ...], int]:
    w, mu = dominant_word(A, lam)
    nz = [p for p, x in enumerate(mu) if x]
    if len(nz) != 1 or mu[nz[0]] != 1:
        raise ValueError(f"{tuple(lam)} is not an extremal weight of a fundamental representation")
    return w, nz[0] + 1


def extremal_minor(g: LoopMatrix, upper: Sequence[int], lower: Sequence[int]) -> LaurentPoly:
    """Δ^{γ}_{δ}(g) for extremal weights γ = uω_i, δ = vω_i, using minimal reduced words."""
    A = sl_cartan(g.size)
    u, i = _orbit_word(A, upper)
    v, j = _orbit_word(A, lower)
    if i != j:
        raise ValueError("weights lie in different Weyl orbits")
    return twisted_minor(g, i, u, v)


def principal_minor(g: LoopMatrix, lam: Sequence[int]) -> LaurentPoly:
    """Δ_λ = Δ^λ_λ."""
    return extremal_minor(g, lam, lam)


def adjugate(g: LoopMatrix) -> LoopMatrix:
    n = g.size
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            rows = [r for r in range(n) if r != j]
            cols = [c for c in range(n) if c != i]
            m = g.minor(rows, cols)
            row.append(m if (i + j) % 2 == 0 else -m)
        out.append(row)
    return LoopMatrix(g.table, out, g.model)


def iota(g: LoopMatrix) -> LoopMatrix:
    """g^ι = D g^{-1} D with D = diag((-1)^a); fixes every x_i(t) and inverts H."""
    if g.model != FINITE:
        raise ValueError("iota is realized in the finite model")
    adj = adjugate(g)
    n = g.size
    return LoopMatrix(g.table, [[adj[i, j] if (i + j) % 2 == 0 else -adj[i, j] for j in range(n)]
                                for i in range(n)], g.model)


def lowest_minor(g: LoopMatrix, j: int) -> LaurentPoly:
    """Δ_{-ω_j}: the bottom-right (n-j)×(n-j) minor."""
    n = g.size
    idx = list(range(j, n))
    return g.minor(idx, idx)


# -- substitution and h-monomials --------------------------------------------


def h_monomial(table: VarTable, lam: Sequence[int], coeff: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(table, {f"h{i + 1}": e for i, e in enumerate(lam) if e}, coeff)


def frozen_weight(A: CartanData, c: Sequence[int], i: int) -> WeightVec:
    """ω_i + Σ_{j before i in c} a_{ji} ω_j."""
    pos = positions(c)
    w = omega(A.n, i)
    for j in range(1, A.n + 1):
        if pos[j] < pos[i]:
            w = w + omega(A.n, j) * A.a(j, i)
    return w


def substitution_map(B: Sequence[Sequence[int]], table: Optional[VarTable] = None,
                     model: str = LOOP) -> Dict[str, LaurentPoly]:
    """Images of x_i, z_i, zb_i as monomials in the factorization parameters."""
    A = cartan_companion(B)
    c = coxeter_word(B)
    n = A.n
    if table is None:
        table = param_table(model, n + 1 if model == FINITE else n, c, inverse_word(c))
    out: Dict[str, LaurentPoly] = {}
    for i in range(1, n + 1):
        out[f"x{i}"] = LaurentPoly.var(table, f"h{i}")
        hw = h_monomial(table, frozen_weight(A, c, i))
        out[f"z{i}"] = LaurentPoly.var(table, f"t{i}") * hw
        out[f"zb{i}"] = LaurentPoly.var(table, f"tb{i}") * hw
    return out


def substitute(p: LaurentPoly, smap: Dict[str, LaurentPoly]) -> LaurentPoly:
    target = next(iter(smap.values())).table
    return p.substitute(smap, target)


# -- recurrences and chain evaluation -----------------------------------------


def v_recurrence(A: CartanData, c: Sequence[int], table: VarTable) -> Dict[int, LaurentPoly]:
    """v_i = t_i t_ī h^{α_i} Π_{j after i in c} v_j^{-a_ji} + 1, computed from the end of c."""
    c = tuple(c)
    out: Dict[int, LaurentPoly] = {}
    for p in reversed(range(len(c))):
        i = c[p]
        term = LaurentPoly.var(table, f"t{i}") * LaurentPoly.var(table, f"tb{i}") * h_monomial(table, A.alpha_weight(i))
        for j in c[p + 1:]:
            e = -A.a(j, i)
            if e:
                term = term * out[j] ** e
        out[i] = term + 1
    return out


class ChainConditionError(ValueError):
    pass


def extremal_chain_minor(A: CartanData, lam: Sequence[int], c: Sequence[int], table: VarTable) -> LaurentPoly:
    """Σ_j h^{λ_j} Π_{k≤j} t_{σk} t_σ̄k along λ_j = s_{σj} λ_{j-1}."""
    chain = [WeightVec(lam)]
    for j, s in enumerate(c, start=1):
        if chain[-1][s - 1] != -1:
            raise ChainConditionError(f"pairing of λ_{j - 1} with α_{s}^∨ is {chain[-1][s - 1]}, not -1")
        if any(chain[i][s - 1] < 0 for i in range(j - 1)):
            raise ChainConditionError(f"an earlier weight pairs negatively with α_{s}^∨")
        chain.append(weyl_act(A, (s,), chain[-1]))
    total = LaurentPoly.const(table, 0)
    tt = LaurentPoly.const(table, 1)
    for j, lamj in enumerate(chain):
        if j:
            s = c[j - 1]
            tt = tt * LaurentPoly.var(table, f"t{s}") * LaurentPoly.var(table, f"tb{s}")
        total = total + h_monomial(table, lamj) * tt
    return total
