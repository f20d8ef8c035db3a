"""Identity checks on SL_n through explicit matrices.

Every check evaluates both sides on a symbolic generic element and compares
Laurent polynomials exactly.  Reports are dicts with keys ok, checked and
counterexample (None or a description of the first failure).
"""
from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .cartan import (CartanData, beta_roots, c_power, coxeter_word, inverse_word, is_positive_root,
                     is_reduced, omega, positions, weyl_act)
from .group import (FINITE, LoopMatrix, coxeter_element, extremal_minor, factorization, h_monomial,
                    iota, lowest_minor, param_table, principal_minor, sl_cartan, substitute, substitution_map,
                    twisted_minor, v_recurrence)
from .laurent import LaurentPoly
from .mutation import belt_variables, belt_walk, frame


def _report() -> dict:
    return {"ok": True, "checked": 0, "counterexample": None}


def _record(rep: dict, ok: bool, **witness) -> None:
    rep["checked"] += 1
    if not ok and rep["ok"]:
        rep["ok"] = False
        rep["counterexample"] = witness


def longest_word(n: int) -> Tuple[int, ...]:
    """(1, 2, 1, 3, 2, 1, ...) for SL_n."""
    return tuple(i for top in range(1, n) for i in range(top, 0, -1))


def dense_element(n: int) -> LoopMatrix:
    """A generic element of SL_n: independent parameters over w0 on both sides."""
    w0 = longest_word(n)
    table = param_table(FINITE, n, w0, w0)
    return factorization(FINITE, n, w0, w0).evaluate(table)


def sl_coxeter_words(n: int) -> List[Tuple[int, ...]]:
    """One Coxeter word per acyclic orientation of the A_{n-1} diagram."""
    r = n - 1
    out = []
    for mask in range(2 ** max(r - 1, 0)):
        B = [[0] * r for _ in range(r)]
        for e in range(r - 1):
            s = 1 if mask >> e & 1 else -1
            B[e][e + 1], B[e + 1][e] = s, -s
        out.append(coxeter_word(B))
    return out


def sl_exchange_matrix(c: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """The acyclic A_{n-1} exchange matrix whose Coxeter word is c (b_ij > 0 when i precedes j)."""
    r = len(c)
    pos = positions(c)
    B = [[0] * r for _ in range(r)]
    for i in range(1, r):
        j = i + 1
        s = 1 if pos[i] < pos[j] else -1
        B[i - 1][j - 1], B[j - 1][i - 1] = s, -s
    return tuple(tuple(x) for x in B)


def _mono_product(factors: Sequence[Tuple[LaurentPoly, int]], table) -> LaurentPoly:
    num = LaurentPoly.const(table, 1)
    den = LaurentPoly.const(table, 1)
    for f, e in factors:
        if e > 0:
            num = num * f ** e
        elif e < 0:
            den = den * f ** (-e)
    return num / den


def fundid_holds(g: LoopMatrix, u: Sequence[int], v: Sequence[int], i: int) -> bool:
    n = g.size
    A = sl_cartan(n)
    u, v = tuple(u), tuple(v)
    if not (is_reduced(A, u + (i,)) and is_reduced(A, v + (i,))):
        raise ValueError("length condition ℓ(u) < ℓ(u s_i), ℓ(v) < ℓ(v s_i) fails")
    ui, vi = u + (i,), v + (i,)
    lhs = twisted_minor(g, i, u, v) * twisted_minor(g, i, ui, vi)
    prod = LaurentPoly.const(g.table, 1)
    for j in range(1, n):
        if j != i and A.a(j, i):
            prod = prod * twisted_minor(g, j, u, v) ** (-A.a(j, i))
    rhs = prod + twisted_minor(g, i, u, vi) * twisted_minor(g, i, ui, v)
    return lhs == rhs


def coxeter_prefix_pairs(n: int, c: Sequence[int]) -> List[Tuple[Tuple[int, ...], Tuple[int, ...], int]]:
    """(u, u, σ_p) with u = c^k σ_1 ⋯ σ_{p-1}, for every k keeping u s_{σ_p} reduced."""
    A = sl_cartan(n)
    c = tuple(c)
    out = []
    k = 0
    while True:
        added = False
        for p in range(len(c)):
            u = c_power(c, k) + c[:p]
            if is_reduced(A, u + (c[p],)):
                out.append((u, u, c[p]))
                added = True
        if not added:
            return out
        k += 1


def check_fundid(n: int, pairs: Optional[Sequence[Tuple[Sequence[int], Sequence[int], int]]] = None,
                 g: Optional[LoopMatrix] = None) -> dict:
    if g is None:
        g = dense_element(n)
    if pairs is None:
        pairs = [p for c in sl_coxeter_words(n) for p in coxeter_prefix_pairs(n, c)]
    rep = _report()
    for u, v, i in pairs:
        _record(rep, fundid_holds(g, u, v, i), u=tuple(u), v=tuple(v), i=i)
    return rep


def _t_monomial(table, root: Sequence[int], bar: bool) -> LaurentPoly:
    pre = "tb" if bar else "t"
    return LaurentPoly.monomial(table, {f"{pre}{i + 1}": e for i, e in enumerate(root) if e})


def _z_from_minors(g: LoopMatrix, A: CartanData, c: Sequence[int], i: int, bar: bool) -> LaurentPoly:
    """z_i = Δ^{ω_i}_{cω_i} Π_{j before i} (Δ^{ω_j}_{cω_j})^{a_ji}; barred version swaps the two weights."""
    pos = positions(c)
    n = A.n

    def d(j):
        w, cw = omega(n, j), weyl_act(A, c, omega(n, j))
        return extremal_minor(g, cw, w) if bar else extremal_minor(g, w, cw)

    factors = [(d(i), 1)] + [(d(j), A.a(j, i)) for j in range(1, n + 1) if pos[j] < pos[i] and A.a(j, i)]
    return _mono_product(factors, g.table)


def _z_from_lowest(g: LoopMatrix, A: CartanData, c: Sequence[int], j: int, bar: bool) -> LaurentPoly:
    """Δ^{-c^{-1}ω_j}_{-ω_j} Π_{ℓ after j} (Δ^{-c^{-1}ω_ℓ}_{-ω_ℓ})^{a_ℓj}, or its barred mirror."""
    pos = positions(c)
    n = A.n
    cinv = inverse_word(c)

    def d(l):
        a, b = -weyl_act(A, cinv, omega(n, l)), -omega(n, l)
        return extremal_minor(g, b, a) if bar else extremal_minor(g, a, b)

    factors = [(d(j), 1)] + [(d(l), A.a(l, j)) for l in range(1, n + 1) if pos[l] > pos[j] and A.a(l, j)]
    return _mono_product(factors, g.table)


def _z_from_lowest_via_iota(g: LoopMatrix, gi: LoopMatrix, A: CartanData, c: Sequence[int], j: int,
                            bar: bool) -> LaurentPoly:
    """Same as _z_from_lowest, using Δ^μ_λ(g) = Δ^{-λ}_{-μ}(g^ι)."""
    pos = positions(c)
    n = A.n
    cinv = inverse_word(c)

    def d(l):
        a, b = omega(n, l), weyl_act(A, cinv, omega(n, l))
        return extremal_minor(gi, b, a) if bar else extremal_minor(gi, a, b)

    factors = [(d(j), 1)] + [(d(l), A.a(l, j)) for l in range(1, n + 1) if pos[l] > pos[j] and A.a(l, j)]
    return _mono_product(factors, g.table)


def check_minor_lemmas(n: int, c: Sequence[int], kmax: int = 2) -> dict:
    """Monomial values of c-shifted minors, the frozen values and the two z-identities."""
    A = sl_cartan(n)
    r = A.n
    c = tuple(c)
    g = coxeter_element(FINITE, n, c)
    gi = iota(g)
    table = g.table
    B = sl_exchange_matrix(c)
    smap = substitution_map(B, table, FINITE)
    plus, minus = beta_roots(A, c)
    pos = positions(c)
    rep = _report()
    z = {j: _z_from_minors(g, A, c, j, False) for j in range(1, r + 1)}
    zb = {j: _z_from_minors(g, A, c, j, True) for j in range(1, r + 1)}
    for j in range(1, r + 1):
        # frozen values
        _record(rep, z[j] == smap[f"z{j}"], check="frozen", j=j)
        _record(rep, zb[j] == smap[f"zb{j}"], check="frozen-bar", j=j)
        # z through lowest-weight minors, directly and through ι
        for bar, target in ((False, z[j]), (True, zb[j])):
            _record(rep, _z_from_lowest(g, A, c, j, bar) == target, check="lowest", j=j, bar=bar)
            _record(rep, _z_from_lowest_via_iota(g, gi, A, c, j, bar) == target, check="lowest-iota", j=j, bar=bar)
        for k in range(kmax + 1):
            root = weyl_act(A, c_power(c, k), plus[pos[j]])
            if is_positive_root(root):
                ck = weyl_act(A, c_power(c, k), omega(r, j))
                ck1 = weyl_act(A, c_power(c, k + 1), omega(r, j))
                hm = h_monomial(table, ck)
                d = extremal_minor(g, ck, ck1)
                _record(rep, d == hm * _t_monomial(table, root, False), check="positive", j=j, k=k)
                _record(rep, extremal_minor(g, ck1, ck) == hm * _t_monomial(table, root, True),
                        check="positive-bar", j=j, k=k)
                zprod = _mono_product([(z[i], root[i - 1]) for i in range(1, r + 1)], table)
                zbprod = _mono_product([(zb[i], root[i - 1]) for i in range(1, r + 1)], table)
                _record(rep, d == zprod, check="z-powers", j=j, k=k)
                _record(rep, extremal_minor(g, ck1, ck) == zbprod, check="z-powers-bar", j=j, k=k)
            nroot = weyl_act(A, c_power(c, -k), minus[pos[j]])
            if is_positive_root(nroot):
                a = -weyl_act(A, c_power(c, -k - 1), omega(r, j))
                b = -weyl_act(A, c_power(c, -k), omega(r, j))
                hm = h_monomial(table, a)
                _record(rep, extremal_minor(g, a, b) == hm * _t_monomial(table, nroot, False), check="negative", j=j, k=k)
                _record(rep, extremal_minor(g, b, a) == hm * _t_monomial(table, nroot, True),
                        check="negative-bar", j=j, k=k)
    return rep


def check_iota(n: int, c: Sequence[int]) -> dict:
    """ι is involutive, anti-multiplicative, matches the factor-level rule, and swaps Δ_{ω_j} with Δ_{-ω_j}."""
    rep = _report()
    f = factorization(FINITE, n, c, inverse_word(c))
    table = param_table(FINITE, n, c, inverse_word(c))
    g = f.evaluate(table)
    gi = iota(g)
    _record(rep, iota(gi) == g, check="involution")
    _record(rep, f.iota().evaluate(table) == gi, check="factor-rule")
    mats = f.matrices(table)
    left, right = mats[0], mats[-1]
    for p in range(1, len(mats) // 2 + 1):
        left = left @ mats[p]
    _record(rep, iota(left @ right) == iota(right) @ iota(left), check="anti-homomorphism")
    for j in range(1, n):
        _record(rep, principal_minor(g, omega(n - 1, j)) == lowest_minor(gi, j), check="swap", j=j)
        _record(rep, lowest_minor(gi, j) == principal_minor(gi, -omega(n - 1, j)), check="lowest-extremal", j=j)
    return rep


def check_v_recurrence(n: int, c: Sequence[int]) -> dict:
    """h^{ω_i} Δ_{ω_i}(g^ι) = v_i, and the Δ_{ω_i}Δ_{-ω_i} exchange relation."""
    A = sl_cartan(n)
    r = A.n
    c = tuple(c)
    g = coxeter_element(FINITE, n, c)
    gi = iota(g)
    table = g.table
    v = v_recurrence(A, c, table)
    smap = substitution_map(sl_exchange_matrix(c), table, FINITE)
    pos = positions(c)
    rep = _report()
    top = {j: principal_minor(g, omega(r, j)) for j in range(1, r + 1)}
    low = {j: lowest_minor(g, j) for j in range(1, r + 1)}
    for i in range(1, r + 1):
        lhs = h_monomial(table, omega(r, i)) * principal_minor(gi, omega(r, i))
        _record(rep, lhs == v[i], check="v", i=i)
        rhs = smap[f"z{i}"] * smap[f"zb{i}"]
        for j in range(1, r + 1):
            e = -A.a(j, i) if j != i else 0
            if e:
                rhs = rhs * (top[j] if pos[j] < pos[i] else low[j]) ** e
        _record(rep, top[i] * low[i] == rhs + 1, check="plusminus", i=i)
    return rep


def check_finite_belt(n: int, c: Sequence[int], span: Optional[int] = None) -> dict:
    """Every belt variable, substituted, equals Δ_γ for its g-vector γ."""
    c = tuple(c)
    B = sl_exchange_matrix(c)
    if coxeter_word(B) != c:
        raise AssertionError("exchange matrix does not reproduce the Coxeter word")
    r = len(c)
    span = 3 * r if span is None else span
    g = coxeter_element(FINITE, n, c)
    smap = substitution_map(B, g.table, FINITE)
    steps = belt_walk(frame(B, "doubled"), -span, span)
    rep = _report()
    for gamma, x in sorted(belt_variables(steps).items()):
        _record(rep, substitute(x, smap) == principal_minor(g, gamma), gvector=tuple(gamma))
    return rep
