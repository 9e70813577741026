"""Definitional checking of print/container pairs.

Everything here is checked against the definitions (set inclusions, the
complement-size threshold, the counting bound), never against the
engine's internals, so a stub engine that misbehaves is caught.  The
report is a flat key/value structure with a fixed key order, so repeated
runs with identical inputs serialize byte-identically.
"""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .core import Hypergraph, NEG_INF, cmp_log, is_bounded, is_homogeneous, ldeg, log_size
from .engine import NotIndependentError, Print, print_union

DEFAULT_ENUM_CAP = 20


class EnumerationCapError(RuntimeError):
    pass


def enumerate_independent_sets(h: Hypergraph, cap: int = DEFAULT_ENUM_CAP):
    """Yield every H-independent subset of X (as frozensets).

    Backtracks over vertices in ascending order; an edge is tested
    exactly when its largest vertex is added, so each step is O(edges
    ending at that vertex).
    """
    if h.n > cap:
        raise EnumerationCapError(f"n={h.n} exceeds enumeration cap {cap}")
    by_max: dict[int, list[int]] = {}
    for idx, e in enumerate(h.edges):
        by_max.setdefault(e[-1], []).append(idx)
    masks = [sum(1 << v for v in e) for e in h.edges]

    def rec(v: int, cur_mask: int, cur: list[int]):
        if v == h.n:
            yield frozenset(cur)
            return
        yield from rec(v + 1, cur_mask, cur)
        new_mask = cur_mask | (1 << v)
        for idx in by_max.get(v, ()):
            if masks[idx] & new_mask == masks[idx]:
                break
        else:
            cur.append(v)
            yield from rec(v + 1, new_mask, cur)
            cur.pop()

    yield from rec(0, 0, [])


def sample_independent_set(h: Hypergraph, seed: int) -> frozenset[int]:
    """Greedy maximal independent set along a seed-determined permutation."""
    rng = random.Random(seed)
    order = list(h.vertices)
    rng.shuffle(order)
    chosen: set[int] = set()
    for v in order:
        ok = True
        for e in h.incidence.get(v, ()):
            if all(w in chosen for w in e if w != v):
                ok = False
                break
        if ok:
            chosen.add(v)
    return frozenset(chosen)


def sample_independent_sets(h: Hypergraph, count: int, seed: int):
    """Sampling stream: greedy maximal sets interleaved with random
    subsets of them (maximal sets alone would bias toward large I)."""
    for i in range(count):
        base = sample_independent_set(h, seed + i)
        if i % 2 == 0:
            yield base
        else:
            rng = random.Random(f"{seed}:{i}")
            yield frozenset(v for v in base if rng.random() < 0.5)


@dataclass
class VerificationReport:
    n: int
    k: int
    edges: int
    ldeg: float
    bounded: bool
    homogeneous: bool
    params: object
    mode: str
    oracle_mode: str
    method: str
    samples: int
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    cond_iv: bool
    cond_iii_counterexample: str = ""
    cond_iv_counterexample: str = ""
    containers_distinct: int = 0
    complement_log_min: float = NEG_INF
    complement_log_max: float = NEG_INF
    complement_log_mean: float = NEG_INF
    diag_nonexpanding_prints: int = 0
    diag_min_complement: int = -1
    diag_quarter_ok: str = "na"
    counting_lhs: int = -1
    counting_rhs: int = -1
    print_containers: dict = field(default_factory=dict, repr=False)

    def all_conditions_pass(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii and self.cond_iv

    _KEYS = (
        "n", "k", "edges", "ldeg", "bounded", "homogeneous",
        "pi", "eps", "delta", "sigma", "log2", "delta_p", "pi_p",
        "pi_tilde", "eps_tilde", "eps_p", "sigma_p",
        "hyp_eps_ok", "hyp_pi_ok",
        "mode", "oracle_mode", "method", "samples",
        "cond_i", "cond_ii", "cond_iii", "cond_iv",
        "cond_iii_counterexample", "cond_iv_counterexample",
        "containers_distinct",
        "complement_log_min", "complement_log_max", "complement_log_mean",
        "diag_nonexpanding_prints", "diag_min_complement", "diag_quarter_ok",
        "counting_lhs", "counting_rhs",
    )

    def to_text(self) -> str:
        lines = []
        for key in self._KEYS:
            if hasattr(self, key):
                val = getattr(self, key)
            else:
                val = getattr(self.params, key)
            lines.append(f"{key} = {_fmt(val)}")
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return "%.12g" % v
    return str(v)


def _set_str(s) -> str:
    return "{" + ",".join(str(v) for v in sorted(s)) + "}"


def verify(ctx, sets, enumerated: bool = False, jobs: int = 1) -> VerificationReport:
    """Run the construction over the supplied independent sets and check
    the defining conditions of a print/container pair.

    (i) every supplied set receives a print (witnessed extensionally);
    (ii) every produced print receives a container; (iii) the sandwich
    union(P) <= I <= union(P) | C, zero tolerance; (iv) every distinct
    container C has log_n|X \\ C| >= 1 - sigma.
    """
    h, p = ctx.h, ctx.params
    x = frozenset(h.vertices)
    sets = list(sets)
    for iset in sets:
        for e in h.edges:
            if iset.issuperset(e):
                raise NotIndependentError(
                    f"supplied set {_set_str(iset)} contains edge {e}")

    def process(iset):
        prnt = ctx.print_of(iset)
        cont = ctx.container_of(prnt)
        up = print_union(prnt)
        ok = up <= iset <= (up | cont)
        return iset, prnt, cont, ok

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(process, sets))
    else:
        results = [process(s) for s in sets]

    cond_iii = True
    iii_counter = ""
    print_containers: dict[tuple, tuple[Print, frozenset[int]]] = {}
    for iset, prnt, cont, ok in results:
        key = tuple(tuple(sorted(f)) for f in prnt)
        print_containers.setdefault(key, (prnt, cont))
        if not ok and cond_iii:
            cond_iii = False
            iii_counter = (f"I={_set_str(iset)} P="
                           + "|".join(_set_str(f) for f in prnt)
                           + f" C={_set_str(cont)}")

    containers = sorted({cont for _p, cont in print_containers.values()},
                        key=sorted)
    comp_logs = [log_size(len(x - c), h.n) for c in containers]
    cond_iv = True
    iv_counter = ""
    for c, lv in zip(containers, comp_logs):
        if cmp_log(len(x - c), 1 - p.sigma, h.n) < 0:
            cond_iv = False
            iv_counter = f"C={_set_str(c)} log_complement={_fmt(lv)}"
            break

    # container-size diagnostic for non-expanding top-level prints
    diag_n = 0
    diag_min = -1
    diag_quarter = "na"
    expanding_check = getattr(ctx, "fingerprint_expanding", None)
    if expanding_check is not None and h.k >= 2:
        quarter = 0.25 * h.n ** (1 - p.eps)
        quarter_ok = True
        for key, (prnt, cont) in print_containers.items():
            if len(prnt) == 1 and not expanding_check(prnt[0]):
                diag_n += 1
                comp = len(x - cont)
                diag_min = comp if diag_min < 0 else min(diag_min, comp)
                if comp < quarter:
                    quarter_ok = False
        if diag_n and p.hyp_eps_ok and p.hyp_pi_ok:
            diag_quarter = "true" if quarter_ok else "false"

    report = VerificationReport(
        n=h.n,
        k=h.k,
        edges=len(h.edges),
        ldeg=ldeg(h),
        bounded=is_bounded(h, p.delta),
        homogeneous=is_homogeneous(h, p.delta, p.eps),
        params=p,
        mode=getattr(ctx, "mode", "permissive"),
        oracle_mode="heuristic" if getattr(ctx, "heuristic_used", False) else "exact",
        method="enumeration" if enumerated else "sampling",
        samples=len(sets),
        cond_i=True,
        cond_ii=True,
        cond_iii=cond_iii,
        cond_iv=cond_iv,
        cond_iii_counterexample=iii_counter,
        cond_iv_counterexample=iv_counter,
        containers_distinct=len(containers),
        complement_log_min=min(comp_logs, default=NEG_INF),
        complement_log_max=max(comp_logs, default=NEG_INF),
        complement_log_mean=(sum(comp_logs) / len(comp_logs)) if comp_logs else NEG_INF,
        diag_nonexpanding_prints=diag_n,
        diag_min_complement=diag_min,
        diag_quarter_ok=diag_quarter,
        print_containers=print_containers,
    )
    if enumerated:
        lhs, rhs = counting_bound(report)
        report.counting_lhs = lhs
        report.counting_rhs = rhs
    return report


def counting_bound(report: VerificationReport) -> tuple[int, int]:
    """Container counting argument: number of independent sets vs the sum
    over distinct prints P of 2^|union(P) | C_P|.

    Only meaningful after a fully enumerated run.
    """
    if report.method != "enumeration":
        raise RuntimeError("counting bound requires a fully enumerated run")
    lhs = report.samples
    rhs = 0
    for prnt, cont in report.print_containers.values():
        rhs += 2 ** len(print_union(prnt) | cont)
    return lhs, rhs
