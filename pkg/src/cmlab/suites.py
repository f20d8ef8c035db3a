"""Named verification suites.

A suite expands a configuration into a list of independent checks.  Each
check names a module-level function and its keyword arguments, so checks can
be shipped to worker processes and replayed from a failure witness.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from .cartan import cartan_companion, check_lattice_identities, coxeter_word, growth_class, inverse_word
from .finite import (check_finite_belt, check_fundid, check_iota, check_minor_lemmas, check_v_recurrence,
                     coxeter_prefix_pairs, sl_coxeter_words)
from .group import (LOOP, coxeter_element, extremal_chain_minor, param_table, substitute, substitution_map,
                    wedge_minor_oracle)
from .laurent import LaurentPoly
from .mutation import (check_belt_closed_forms, check_belt_relations, check_engine_invariants, find_by_gvector, frame,
                       random_exchange_matrix, random_path, random_tame_matrix, variable_along)
from .network import bridge_set, build_network, enumerate_collections, minor_by_paths, paths_from_subset
from .quiver import (CycleQuiver, IntervalModule, classify_interval, cluster_character_interval, doubled_matrix,
                     interval_gvector, kronecker_character, kronecker_matrix, target_closed_subsets)

A2_AFFINE_B = ((0, -1, 1), (1, 0, 1), (-1, -1, 0))
C2_AFFINE_B = ((0, 1, 0), (-2, 0, 2), (0, -1, 0))

EXAMPLE_VARIABLE = "(x1*x3 + z2*zb2 + x1*x2*z2*z3*zb2*zb3)/(x2*x3)"
EXAMPLE_MINOR = "h1*h2^-1 + tb2*t2*h2*h3^-1 + tb2*t2*tb3*t3*h1^-1*h3"
C2_VARIABLE = "(x1*x2^2*z1*z2*z3*zb1*zb2*zb3 + x1*z1*z2*zb1*zb2 + x2^2*x3 + x3*z1*zb1)/(x1*x2*x3)"
C2_MINOR = ("h1^-1*h2 + h1*h2^-1*t1*tb1 + h2*h3^-1*t1*tb1*t2*tb2"
            " + h2^-1*h3*t1*tb1*t2*tb2*t3*tb3")


@dataclass
class SuiteConfig:
    suite: str
    n_min: Optional[int] = None
    n_max: Optional[int] = None
    kmax: Optional[int] = None
    depth: Optional[int] = None
    B: Optional[Tuple[Tuple[int, ...], ...]] = None
    cycle: Optional[str] = None
    paths: int = 1000
    random_matrices: int = 20
    seed: int = 0

    def n_range(self, lo: int, hi: int) -> range:
        a = self.n_min if self.n_min is not None else lo
        b = self.n_max if self.n_max is not None else hi
        if a < 1 or b < a:
            raise ValueError("rank bounds must be positive and ordered")
        return range(a, b + 1)

    path: Optional[Tuple[int, ...]] = None

    def fragment(self, B=None, cycle: Optional[str] = None, path=None, **bounds) -> Dict[str, Any]:
        """A config fragment that replays one check."""
        out: Dict[str, Any] = {"suite": self.suite}
        if B is not None:
            out["B"] = [list(r) for r in B]
        if cycle is not None:
            out["cycle"] = cycle
        if path is not None:
            out["path"] = list(path)
        b = {k: v for k, v in bounds.items() if v is not None}
        if b:
            out["bounds"] = b
        return out


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    func: str
    kwargs: Dict[str, Any] = field(default_factory=dict, hash=False, compare=False)
    replay: Dict[str, Any] = field(default_factory=dict, hash=False, compare=False)


# -- check bodies (module level so they pickle) -------------------------------


def _ok(flag: bool, **witness) -> Tuple[bool, Dict[str, Any]]:
    return bool(flag), ({} if flag else witness)


def _from_report(rep: dict) -> Tuple[bool, Dict[str, Any]]:
    return _ok(rep["ok"], counterexample=rep.get("counterexample") or rep.get("failure"))


def run_lattice(B) -> Tuple[bool, dict]:
    A = cartan_companion(B)
    return _from_report(check_lattice_identities(A, coxeter_word(B), 10))


def run_engine(B, path) -> Tuple[bool, dict]:
    return _from_report(check_engine_invariants(B, path))


def belt_mode(B) -> str:
    """Symbolic expansion for finite and affine companions, exact GF(p) evaluation otherwise."""
    return "symbolic" if growth_class(cartan_companion(B)) != "indefinite" else "modular"


def run_belt(B, kmax: int, mode: Optional[str] = None) -> Tuple[bool, dict]:
    n = len(B)
    closed = check_belt_closed_forms(B)
    if not closed["ok"]:
        return _ok(False, closed_forms=closed["counterexample"])
    rep = check_belt_relations(B, kmax=kmax, span=3 * n, mode=mode or belt_mode(B))
    return _ok(rep["ok"], counterexample=rep["counterexample"])


def run_fundid(n: int, c) -> Tuple[bool, dict]:
    return _from_report(check_fundid(n, coxeter_prefix_pairs(n, c)))


def run_minor_lemmas(n: int, c, kmax: int) -> Tuple[bool, dict]:
    return _from_report(check_minor_lemmas(n, c, kmax))


def run_iota_v(n: int, c) -> Tuple[bool, dict]:
    a, b = check_iota(n, c), check_v_recurrence(n, c)
    return _ok(a["ok"] and b["ok"], iota=a["counterexample"], v=b["counterexample"])


def run_finite_belt(n: int, c) -> Tuple[bool, dict]:
    return _from_report(check_finite_belt(n, c))


def _loop_setup(Q: CycleQuiver):
    n = Q.n
    c = Q.coxeter_word()
    g = coxeter_element(LOOP, n, c)
    N = build_network(n, c, inverse_word(c))
    smap = substitution_map(Q.exchange_matrix(), g.table)
    return g, N, smap


def _rigid_regular(Q: CycleQuiver) -> List[IntervalModule]:
    return [m for m in IntervalModule.all_proper(Q.n) if classify_interval(Q, m).rigid_regular]


def run_regular(cycle: str, search_depth: int, bijection: bool = True) -> Tuple[bool, dict]:
    """Characters, path minors, determinant oracle, mutation search and (optionally) the path bijection."""
    Q = CycleQuiver.from_string(cycle)
    g, N, smap = _loop_setup(Q)
    M = doubled_matrix(Q)
    for m in _rigid_regular(Q):
        where = {"k": m.k, "ell": m.ell}
        w, S = interval_gvector(Q, m)
        char = cluster_character_interval(Q, m, M)
        x = substitute(char, smap)
        if not x == minor_by_paths(N, S, g.table) == wedge_minor_oracle(g, S):
            return _ok(False, interval=where, stage="minor")
        if search_depth:
            path = find_by_gvector(M, w, maxdepth=search_depth)
            if variable_along(M, path) != char:
                return _ok(False, interval=where, stage="mutation", path=list(path))
        if bijection:
            ok, info = _bijection(Q, m, N, smap)
            if not ok:
                return _ok(False, interval=where, stage="bijection", **info)
    return _ok(True)


def run_bijection(cycle: str) -> Tuple[bool, dict]:
    """Bridge sets against target-closed subsets for every rigid-regular interval."""
    Q = CycleQuiver.from_string(cycle)
    _, N, smap = _loop_setup(Q)
    for m in _rigid_regular(Q):
        ok, info = _bijection(Q, m, N, smap)
        if not ok:
            return _ok(False, interval={"k": m.k, "ell": m.ell}, **info)
    return _ok(True)


def _bijection(Q: CycleQuiver, m: IntervalModule, N, smap) -> Tuple[bool, dict]:
    from .mutation import yhat
    w, S = interval_gvector(Q, m)
    M = doubled_matrix(Q)
    table = next(iter(smap.values())).table
    collections = enumerate_collections(N, S)
    by_beta = {}
    for P in collections:
        b = bridge_set(P)
        if b in by_beta:
            return False, {"duplicate_bridge_set": sorted(b)}
        by_beta[b] = P
    subsets = target_closed_subsets(Q, m)
    if set(by_beta) != set(subsets):
        return False, {"bridge_sets": sorted(map(sorted, by_beta)), "subsets": sorted(map(sorted, subsets))}
    prefactor = LaurentPoly.monomial(table, {f"h{i + 1}": e for i, e in enumerate(w) if e})
    yh = {j: substitute(yhat(M, j), smap) for j in range(1, Q.n + 1)}
    for E in subsets:
        P = paths_from_subset(Q, m, E, N)
        if P != by_beta[E] or bridge_set(P) != E:
            return False, {"subset": sorted(E)}
        expected = prefactor
        for j in E:
            expected = expected * yh[j]
        if P.weight(table) != expected:
            return False, {"weight": sorted(E)}
    return True, {}


def run_homogeneous_cycle(cycle: str) -> Tuple[bool, dict]:
    Q = CycleQuiver.from_string(cycle)
    g, N, smap = _loop_setup(Q)
    m = IntervalModule.full(Q.n)
    w, S = interval_gvector(Q, m)
    x = substitute(cluster_character_interval(Q, m), smap)
    if not x == minor_by_paths(N, S, g.table) == wedge_minor_oracle(g, S):
        return _ok(False, stage="minor")
    ok, info = _bijection(Q, m, N, smap)
    return _ok(ok, stage="bijection", **info)


def run_kronecker(r: int) -> Tuple[bool, dict]:
    K = kronecker_matrix(r)
    table = param_table(LOOP, 2, (1, 2), (2, 1))
    smap = substitution_map(K, table)
    lhs = substitute(kronecker_character(r), smap)
    rhs = extremal_chain_minor(cartan_companion(K), (-1, r - 1), (1, 2), table)
    return _ok(lhs == rhs, character=lhs.render(), chain=rhs.render())


def run_c2_affine() -> Tuple[bool, dict]:
    M = frame(C2_AFFINE_B, "doubled")
    x = variable_along(M, (1, 3, 2))
    if x != LaurentPoly.parse(C2_VARIABLE, x.table):
        return _ok(False, stage="mutation", got=x.render())
    table = param_table(LOOP, 3, (1, 2, 3), (3, 2, 1))
    y = substitute(x, substitution_map(C2_AFFINE_B, table))
    chain = extremal_chain_minor(cartan_companion(C2_AFFINE_B), (-1, 1, 0), (1, 2, 3), table)
    printed = LaurentPoly.parse(C2_MINOR, table)
    return _ok(y == chain == printed, substituted=y.render(), chain=chain.render())


def run_example() -> Tuple[bool, dict]:
    M = frame(A2_AFFINE_B, "doubled")
    x = variable_along(M, (3, 2))
    if x != LaurentPoly.parse(EXAMPLE_VARIABLE, x.table):
        return _ok(False, stage="mutation", got=x.render())
    Q = CycleQuiver.from_matrix(A2_AFFINE_B)
    g, N, smap = _loop_setup(Q)
    expected = LaurentPoly.parse(EXAMPLE_MINOR, g.table)
    y = substitute(x, smap)
    paths = minor_by_paths(N, (2, 3), g.table)
    det = wedge_minor_oracle(g, (2, 3))
    return _ok(y == paths == det == expected, substituted=y.render(), paths=paths.render(), oracle=det.render())


CHECKS: Dict[str, Callable[..., Tuple[bool, dict]]] = {
    f.__name__: f for f in (run_lattice, run_engine, run_belt, run_fundid, run_minor_lemmas, run_iota_v,
                            run_finite_belt, run_regular, run_bijection, run_homogeneous_cycle, run_kronecker, run_c2_affine,
                            run_example)
}


# -- suite expansion -----------------------------------------------------------


def default_matrices(seed: int = 0, count: int = 20) -> List[Tuple[str, Tuple[Tuple[int, ...], ...]]]:
    """A2 affine, C2 affine, Kronecker r ≤ 4 and random acyclic matrices of rank ≤ 5."""
    out = [("a2affine", A2_AFFINE_B), ("c2affine", C2_AFFINE_B)]
    out += [(f"kronecker{r}", kronecker_matrix(r)) for r in (2, 3, 4)]
    rng = random.Random(seed)
    for i in range(count):
        out.append((f"random{i:02d}", random_exchange_matrix(rng, rng.randint(2, 5), 3, acyclic=True)))
    return out


def _matrices(cfg: SuiteConfig):
    if cfg.B is not None:
        return [("config", tuple(tuple(r) for r in cfg.B))]
    ranks = cfg.n_range(2, 5)
    return [(name, B) for name, B in default_matrices(cfg.seed, cfg.random_matrices) if len(B) in ranks]


def _cycles(cfg: SuiteConfig, lo: int, hi: int) -> List[str]:
    if cfg.cycle is not None:
        return [CycleQuiver.from_string(cfg.cycle).render()]
    return [Q.render() for n in cfg.n_range(lo, hi) if n >= 3 for Q in CycleQuiver.all_acyclic(n)]


def suite_lattice(cfg: SuiteConfig) -> List[Check]:
    return [Check(f"lattice/{name}", "lattice identities for Coxeter elements", "run_lattice",
                  {"B": B}, cfg.fragment(B=B)) for name, B in _matrices(cfg)]


def suite_mutation(cfg: SuiteConfig) -> List[Check]:
    rng = random.Random(cfg.seed)
    depth = cfg.depth or 12
    out = []
    for i in range(cfg.paths):
        if cfg.B is not None:
            B = tuple(tuple(r) for r in cfg.B)
        else:
            ranks = cfg.n_range(2, 4)
            B = random_tame_matrix(rng, rng.randint(ranks.start, ranks.stop - 1))
        p = cfg.path if cfg.path is not None else random_path(rng, len(B), depth)
        out.append(Check(f"mutation/{i:04d}", "mutation engine invariants", "run_engine",
                         {"B": B, "path": p}, cfg.fragment(B=B, path=p)))
        if cfg.path is not None:
            break
    return out


def suite_belt(cfg: SuiteConfig) -> List[Check]:
    kmax = 6 if cfg.kmax is None else cfg.kmax
    return [Check(f"belt/{name}", "acyclic belt vectors and exchange relations", "run_belt",
                  {"B": B, "kmax": kmax}, cfg.fragment(B=B, kmax=kmax)) for name, B in _matrices(cfg)]


def suite_finite(cfg: SuiteConfig) -> List[Check]:
    kmax = 3 if cfg.kmax is None else cfg.kmax
    out = []
    for n in cfg.n_range(3, 5):
        for c in sl_coxeter_words(n):
            tag = f"sl{n}/{''.join(map(str, c))}"
            frag = cfg.fragment(n_min=n, n_max=n, kmax=kmax)
            out += [
                Check(f"finite/{tag}/fundid", "generalized determinantal identity", "run_fundid",
                      {"n": n, "c": c}, frag),
                Check(f"finite/{tag}/minors", "minor values and frozen identities", "run_minor_lemmas",
                      {"n": n, "c": c, "kmax": kmax}, frag),
                Check(f"finite/{tag}/iota", "involution and v-recurrence", "run_iota_v", {"n": n, "c": c}, frag),
                Check(f"finite/{tag}/belt", "belt variables are minors", "run_finite_belt", {"n": n, "c": c}, frag),
            ]
    return out


def suite_regular(cfg: SuiteConfig) -> List[Check]:
    depth = 12 if cfg.depth is None else cfg.depth
    out = []
    for cyc in _cycles(cfg, 3, 6):
        d = depth if len(cyc) <= 5 else 0
        out.append(Check(f"regular/{len(cyc)}/{cyc}", "regular characters as level-zero minors", "run_regular",
                         {"cycle": cyc, "search_depth": d}, cfg.fragment(cycle=cyc, depth=d)))
    return out


def suite_homogeneous(cfg: SuiteConfig) -> List[Check]:
    if cfg.B is not None:
        r = cfg.B[0][1] if len(cfg.B) == 2 else 0
        if r < 1 or tuple(map(tuple, cfg.B)) != kronecker_matrix(r):
            raise ValueError("homogeneous suite accepts B only of Kronecker form [[0,r],[-r,0]]")
        return [Check(f"homogeneous/kronecker{r}", "rank-two homogeneous element", "run_kronecker", {"r": r},
                      cfg.fragment(B=cfg.B))]
    out = [Check(f"homogeneous/{len(c)}/{c}", "homogeneous element as a level-zero minor", "run_homogeneous_cycle",
                 {"cycle": c}, cfg.fragment(cycle=c)) for c in _cycles(cfg, 3, 6)]
    out += [Check(f"homogeneous/kronecker{r}", "rank-two homogeneous element", "run_kronecker", {"r": r},
                  cfg.fragment(B=kronecker_matrix(r))) for r in (2, 3, 4) if cfg.cycle is None and 2 in cfg.n_range(2, 6)]
    return out


def suite_c2(cfg: SuiteConfig) -> List[Check]:
    return [Check("c2-affine/omega2-omega1", "C2 affine regular variable", "run_c2_affine", {}, cfg.fragment())]


def suite_example(cfg: SuiteConfig) -> List[Check]:
    return [Check("example-A2affine/golden", "A2 affine regular variable as a level-zero minor", "run_example", {}, cfg.fragment())]


SUITES: Dict[str, Callable[[SuiteConfig], List[Check]]] = {
    "lattice": suite_lattice,
    "mutation": suite_mutation,
    "belt": suite_belt,
    "finite-minors": suite_finite,
    "regular-minors": suite_regular,
    "homogeneous": suite_homogeneous,
    "c2-affine": suite_c2,
    "example-A2affine": suite_example,
}


def expand(cfg: SuiteConfig) -> List[Check]:
    if cfg.suite not in SUITES:
        raise KeyError(f"unknown suite {cfg.suite!r}")
    checks = SUITES[cfg.suite](cfg)
    ids = [c.id for c in checks]
    if len(set(ids)) != len(ids):
        raise AssertionError("duplicate check ids")
    return checks


def execute(check: Check) -> Tuple[bool, dict]:
    return CHECKS[check.func](**check.kwargs)
