"""Cartan companions, Coxeter words, Weyl-group actions and lattice identities.

Weights are coordinate vectors in the fundamental-weight basis, roots in the
simple-root basis.  Letters of Weyl words are 1-based vertex labels.  A word
acts right-to-left, so ``(i1, i2)`` means ``s_i1 s_i2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy

Matrix = Tuple[Tuple[int, ...], ...]
Word = Tuple[int, ...]


def as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


class _Vec(tuple):
    """Integer coordinate vector with vector-space arithmetic."""

    def __new__(cls, coords: Iterable[int]):
        return super().__new__(cls, (int(x) for x in coords))

    def __add__(self, other):
        if len(other) != len(self):
            raise ValueError("length mismatch")
        return type(self)(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        if len(other) != len(self):
            raise ValueError("length mismatch")
        return type(self)(a - b for a, b in zip(self, other))

    def __neg__(self):
        return type(self)(-a for a in self)

    def __mul__(self, k: int):
        return type(self)(k * a for a in self)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self)})"

    @classmethod
    def basis(cls, n: int, i: int):
        """The i-th basis vector, i 1-based."""
        return cls(1 if j == i - 1 else 0 for j in range(n))

    @classmethod
    def zero(cls, n: int):
        return cls([0] * n)


class WeightVec(_Vec):
    """Coordinates in the basis ω_1..ω_n."""


class RootVec(_Vec):
    """Coordinates in the basis α_1..α_n."""


def omega(n: int, i: int) -> WeightVec:
    return WeightVec.basis(n, i)


def alpha(n: int, i: int) -> RootVec:
    return RootVec.basis(n, i)


def symmetrizer(M: Matrix, skew: bool) -> Optional[Tuple[int, ...]]:
    """Positive integers d with d_i m_ij = ∓ d_j m_ji, or None.

    ``skew=True`` looks for d making diag(d)·M skew-symmetric, otherwise
    symmetric.  The sign pattern is checked too.
    """
    n = len(M)
    sign = -1 if skew else 1
    for i in range(n):
        for j in range(n):
            if (M[i][j] == 0) != (M[j][i] == 0):
                return None
            if skew and i != j and M[i][j] * M[j][i] > 0:
                return None
    d: List[Optional[Fraction]] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or M[i][j] == 0:
                    continue
                # d_i m_ij = sign d_j m_ji
                want = d[i] * M[i][j] / (sign * M[j][i])
                if d[j] is None:
                    if want <= 0:
                        return None
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    return None
    denom = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in d), 1)
    ints = [int(x * denom) for x in d]
    g = reduce(gcd, ints)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class CartanData:
    A: Matrix
    symmetrizer: Optional[Tuple[int, ...]]

    @property
    def n(self) -> int:
        return len(self.A)

    def a(self, i: int, j: int) -> int:
        """Entry a_ij with 1-based labels."""
        return self.A[i - 1][j - 1]

    def alpha_weight(self, j: int) -> WeightVec:
        """α_j written in the weight basis: column j of A."""
        return WeightVec(self.A[i][j - 1] for i in range(self.n))

    def root_to_weight(self, r: Sequence[int]) -> WeightVec:
        n = self.n
        return WeightVec(sum(self.A[i][j] * r[j] for j in range(n)) for i in range(n))


def cartan_from_matrix(A: Sequence[Sequence[int]]) -> CartanData:
    A = as_matrix(A)
    n = len(A)
    for i in range(n):
        if len(A[i]) != n:
            raise ValueError("Cartan matrix must be square")
        if A[i][i] != 2:
            raise ValueError("diagonal entries must be 2")
        for j in range(n):
            if i != j and A[i][j] > 0:
                raise ValueError("off-diagonal entries must be non-positive")
    return CartanData(A, symmetrizer(A, skew=False))


def cartan_companion(B: Sequence[Sequence[int]]) -> CartanData:
    B = as_matrix(B)
    n = len(B)
    if any(len(row) != n for row in B):
        raise ValueError("principal part must be square")
    if symmetrizer(B, skew=True) is None or any(B[i][i] for i in range(n)):
        raise ValueError("matrix is not skew-symmetrizable")
    A = tuple(tuple(2 if i == j else -abs(B[i][j]) for j in range(n)) for i in range(n))
    return CartanData(A, symmetrizer(A, skew=False))


def coxeter_word(B: Sequence[Sequence[int]]) -> Word:
    """σ with b_{σ_i σ_j} ≥ 0 for i < j; ties go to the smallest label."""
    B = as_matrix(B)
    n = len(B)
    remaining = list(range(n))
    word = []
    while remaining:
        for i in remaining:
            if all(B[i][j] >= 0 for j in remaining):
                word.append(i + 1)
                remaining.remove(i)
                break
        else:
            raise ValueError("exchange matrix is not acyclic")
    return tuple(word)


def is_acyclic(B: Sequence[Sequence[int]]) -> bool:
    try:
        coxeter_word(B)
    except ValueError:
        return False
    return True


def reflect(A: CartanData, i: int, v):
    """Simple reflection s_i on a weight or a root."""
    n = A.n
    if isinstance(v, RootVec):
        # s_i α_j = α_j - a_ij α_i
        coeff = sum(A.A[i - 1][j] * v[j] for j in range(n))
        out = list(v)
        out[i - 1] -= coeff
        return RootVec(out)
    if isinstance(v, WeightVec):
        # s_i λ = λ - λ_i α_i with α_i = Σ_k a_ki ω_k
        li = v[i - 1]
        if not li:
            return v
        return WeightVec(v[k] - li * A.A[k][i - 1] for k in range(n))
    raise TypeError("expected WeightVec or RootVec")


def weyl_act(A: CartanData, w: Sequence[int], v):
    for i in reversed(tuple(w)):
        v = reflect(A, i, v)
    return v


def positions(c: Sequence[int]) -> Dict[int, int]:
    """Label -> position (0-based) in a Coxeter word."""
    return {label: p for p, label in enumerate(c)}


def inverse_word(w: Sequence[int]) -> Word:
    return tuple(reversed(tuple(w)))


def c_power(c: Sequence[int], k: int) -> Word:
    """A word for c^k; negative k uses c^{-1} = reversed c."""
    c = tuple(c)
    return c * k if k >= 0 else inverse_word(c) * (-k)


def c_prefix(c: Sequence[int], length: int) -> Word:
    """The prefix of c c c ... of the given length."""
    c = tuple(c)
    return tuple(c[p % len(c)] for p in range(length))


def beta_roots(A: CartanData, c: Sequence[int]) -> Tuple[Tuple[RootVec, ...], Tuple[RootVec, ...]]:
    """(β^+, β^-) in position order along c.

    β^+_p = s_{c_1}…s_{c_{p-1}} α_{c_p}, β^-_p = s_{c_n}…s_{c_{p+1}} α_{c_p}.
    """
    c = tuple(c)
    n = A.n
    plus = tuple(weyl_act(A, c[:p], alpha(n, c[p])) for p in range(n))
    minus = tuple(weyl_act(A, inverse_word(c[p + 1:]), alpha(n, c[p])) for p in range(n))
    return plus, minus


def one_minus_c(A: CartanData, c: Sequence[int], lam: Sequence[int]) -> RootVec:
    """(1 - c)λ as a root, via (1 - c)ω_{c_p} = β^+_p."""
    plus, _ = beta_roots(A, c)
    pos = positions(c)
    out = RootVec.zero(A.n)
    for label in range(1, A.n + 1):
        out = out + plus[pos[label]] * lam[label - 1]
    return out


def inv_one_minus_c(A: CartanData, c: Sequence[int], beta: Sequence[int]) -> WeightVec:
    """The weight λ with (1 - c)λ = β.

    In c-order the matrix with columns β^+_p is upper unitriangular, so
    back-substitution stays in the integers.
    """
    c = tuple(c)
    n = A.n
    plus, _ = beta_roots(A, c)
    lam = [0] * n
    for p in reversed(range(n)):
        label = c[p]
        val = beta[label - 1]
        for q in range(p + 1, n):
            val -= plus[q][label - 1] * lam[c[q] - 1]
        lam[label - 1] = val
    result = WeightVec(lam)
    if one_minus_c(A, c, result) != RootVec(beta):
        raise ValueError("root is not in the image of 1 - c")
    return result


def is_reduced(A: CartanData, word: Sequence[int]) -> bool:
    """A word is reduced iff each prefix sends the next simple root to a positive root."""
    word = tuple(word)
    for p in range(len(word)):
        r = weyl_act(A, word[:p], alpha(A.n, word[p]))
        if not all(x >= 0 for x in r):
            return False
    return True


def is_positive_root(r: Sequence[int]) -> bool:
    return any(r) and all(x >= 0 for x in r)


def dominant_word(A: CartanData, lam: Sequence[int], max_steps: int = 10_000) -> Tuple[Word, WeightVec]:
    """Return (w, μ) with μ dominant and λ = w μ for a reduced word w."""
    lam = WeightVec(lam)
    letters: List[int] = []
    for _ in range(max_steps):
        neg = [i for i in range(1, A.n + 1) if lam[i - 1] < 0]
        if not neg:
            return tuple(letters), lam
        i = neg[0]
        lam = reflect(A, i, lam)
        letters.append(i)
    raise ValueError("weight has no dominant conjugate within the step bound")


def _sympy(A: CartanData) -> sympy.Matrix:
    return sympy.Matrix(A.A)


def is_finite_type(A: CartanData) -> bool:
    if A.symmetrizer is None:
        raise ValueError("Cartan matrix is not symmetrizable")
    D = sympy.diag(*A.symmetrizer)
    return (D * _sympy(A)).is_positive_definite


def null_vector(A: CartanData) -> Tuple[int, ...]:
    """The primitive positive integer vector a with a^T A = 0 (affine type)."""
    basis = _sympy(A).T.nullspace()
    if len(basis) != 1:
        raise ValueError("Cartan matrix is not of affine type (corank is not 1)")
    vec = basis[0]
    denom = reduce(lambda a, b: a * b // gcd(a, b), (sympy.fraction(x)[1] for x in vec), 1)
    ints = [int(x * denom) for x in vec]
    g = reduce(gcd, (abs(x) for x in ints))
    ints = [x // g for x in ints]
    if all(x < 0 for x in ints):
        ints = [-x for x in ints]
    if not all(x > 0 for x in ints):
        raise ValueError("kernel vector is not positive: not of affine type")
    return tuple(ints)


def level(A: CartanData, lam: Sequence[int]) -> int:
    a = null_vector(A)
    return sum(x * y for x, y in zip(a, lam))


# -- lattice identities ------------------------------------------------------


def _shifted_omega(A: CartanData, c: Sequence[int], j: int, later: bool) -> WeightVec:
    """ω_j + Σ a_{ℓ j} ω_ℓ over ℓ before j in c (or after, if ``later``)."""
    pos = positions(c)
    n = A.n
    out = omega(n, j)
    for l in range(1, n + 1):
        if l == j:
            continue
        if (pos[l] > pos[j]) == later:
            out = out + omega(n, l) * A.a(l, j)
    return out


def alpha_to_beta_holds(A: CartanData, c: Sequence[int], p: int, sign: str = "+") -> bool:
    """β^±_p + Σ a_{c_q c_p} β^±_q = α_{c_p}, summing over q before p (+) or after p (-)."""
    c = tuple(c)
    plus, minus = beta_roots(A, c)
    fam = plus if sign == "+" else minus
    others = range(p) if sign == "+" else range(p + 1, len(c))
    total = fam[p]
    for q in others:
        total = total + fam[q] * A.a(c[q], c[p])
    return total == alpha(A.n, c[p])


def coxeter_identity_omega_holds(A: CartanData, c: Sequence[int], p: int, k: int) -> bool:
    """c^k ω_i = Σ_j [c^k β^+_i : α_j](ω_j + Σ_{ℓ<j} a_{ℓj} ω_ℓ) with i = c_p."""
    c = tuple(c)
    n = A.n
    plus, _ = beta_roots(A, c)
    i = c[p]
    lhs = weyl_act(A, c_power(c, k), omega(n, i))
    root = weyl_act(A, c_power(c, k), plus[p])
    rhs = WeightVec.zero(n)
    for j in range(1, n + 1):
        if root[j - 1]:
            rhs = rhs + _shifted_omega(A, c, j, later=False) * root[j - 1]
    return lhs == rhs


def c_inverse_equality_holds(A: CartanData, c: Sequence[int], j: int) -> bool:
    """ω_j + Σ_{ℓ<j} a_{ℓj} ω_ℓ = -c^{-1}(ω_j + Σ_{ℓ>j} a_{ℓj} ω_ℓ)."""
    lhs = _shifted_omega(A, c, j, later=False)
    rhs = -weyl_act(A, c_power(c, -1), _shifted_omega(A, c, j, later=True))
    return lhs == rhs


def check_lattice_identities(A: CartanData, c: Sequence[int], kmax: int) -> dict:
    """Check the three lattice identities for every index and 0 ≤ k ≤ kmax.

    Returns ``{"ok", "checked", "counterexample"}``; the counterexample
    names the identity and indices of the first failure.
    """
    c = tuple(c)
    n = A.n
    checked = 0
    for p in range(n):
        for sign in "+-":
            checked += 1
            if not alpha_to_beta_holds(A, c, p, sign):
                return {"ok": False, "checked": checked,
                        "counterexample": {"identity": "alpha_to_beta", "sign": sign, "position": p + 1}}
        for k in range(kmax + 1):
            checked += 1
            if not coxeter_identity_omega_holds(A, c, p, k):
                return {"ok": False, "checked": checked,
                        "counterexample": {"identity": "coxeter_identity_omega", "position": p + 1, "k": k}}
    for j in range(1, n + 1):
        checked += 1
        if not c_inverse_equality_holds(A, c, j):
            return {"ok": False, "checked": checked,
                    "counterexample": {"identity": "c_inverse_equality", "j": j}}
    return {"ok": True, "checked": checked, "counterexample": None}


def growth_class(A: CartanData) -> str:
    """'finite', 'affine' or 'indefinite'."""
    if is_finite_type(A):
        return "finite"
    try:
        null_vector(A)
    except ValueError:
        return "indefinite"
    return "affine"
