"""Verification sweeps that pit each closed form against its brute-force oracle.

Each check returns a :class:`VerificationReport`; ``status == "fail"`` always
carries the first counterexample found.
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from .arith import DEFAULT_MAX_PAIRS, DEFAULT_MAX_VERTICES, binomial
from .emd import (
    emd,
    emd_via_bijection,
    enumerate_compositions,
    expected_emd,
    expected_emd_limit,
    hprime_coeff_bruteforce,
    hprime_coeff_closed,
    series_expand,
)
from .partitions import RectBound, sum_sym_diff
from .polynomials import (
    eval_at_one,
    is_palindromic,
    is_real_rooted,
    is_unimodal,
    la_haye_S,
    n_poly_closed,
    n_poly_recursive,
    n_poly_symdiff,
    subset_symdiff_sum,
)
from .wiener import build_hasse, wiener_bfs, wiener_formula

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
LIMIT_SAMPLES = (10, 100, 1000)
SUBSET_SWEEP_MAX = 10


@dataclass
class VerificationReport:
    check: str
    params: dict[str, Any]
    status: str
    counterexample: dict[str, Any] | None = None
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"status must be 'pass' or 'fail', got {self.status!r}")
        if self.status == "fail" and self.counterexample is None:
            raise ValueError("a failed report must carry a counterexample")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict[str, Any]:
        d = {"schema_version": SCHEMA_VERSION, **asdict(self)}
        if d["counterexample"] is None:
            del d["counterexample"]
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> VerificationReport:
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {d.get('schema_version')!r}")
        return cls(d["check"], d["params"], d["status"], d.get("counterexample"), d["elapsed_ms"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        return cls.from_dict(json.loads(text))


@dataclass
class VerifyConfig:
    """Sweep bounds; ``None`` means the check's own default range."""

    max_n: int | None = None
    max_s: int | None = None
    max_pairs: int = DEFAULT_MAX_PAIRS
    max_vertices: int = DEFAULT_MAX_VERTICES
    checks: list[str] = field(default_factory=list)


# Each check body returns (params, counterexample-or-None).
CheckFn = Callable[[VerifyConfig], "tuple[dict, dict | None]"]
CHECKS: dict[str, CheckFn] = {}
DEFAULT_MAX_N: dict[str, int] = {}


def _register(name: str, default_max_n: int):
    def deco(fn):
        CHECKS[name] = fn
        DEFAULT_MAX_N[name] = default_max_n
        return fn
    return deco


def _max_n(cfg: VerifyConfig, name: str) -> int:
    return cfg.max_n if cfg.max_n is not None else DEFAULT_MAX_N[name]


@_register("palindromic", 30)
def _check_palindromic(cfg):
    top = _max_n(cfg, "palindromic")
    for n in range(1, top + 1):
        f = n_poly_closed(n)
        if not is_palindromic(f):
            return {"n_min": 1, "n_max": top}, {"n": n, "coeffs": list(f.coeffs)}
    return {"n_min": 1, "n_max": top}, None


@_register("unimodal", 30)
def _check_unimodal(cfg):
    top = _max_n(cfg, "unimodal")
    for n in range(1, top + 1):
        f = n_poly_closed(n)
        if not is_unimodal(f):
            return {"n_min": 1, "n_max": top}, {"n": n, "coeffs": list(f.coeffs)}
    return {"n_min": 1, "n_max": top}, None


@_register("real-rooted", 20)
def _check_real_rooted(cfg):
    top = _max_n(cfg, "real-rooted")
    for n in range(2, top + 1):
        f = n_poly_closed(n)
        if not is_real_rooted(f):
            return {"n_min": 2, "n_max": top}, {"n": n, "coeffs": list(f.coeffs)}
    return {"n_min": 2, "n_max": top}, None


@_register("closed-vs-recursive", 12)
def _check_closed(cfg):
    top = _max_n(cfg, "closed-vs-recursive")
    for n in range(1, top + 1):
        closed, rec = n_poly_closed(n), n_poly_recursive(n, n)
        if closed != rec:
            return {"n_min": 1, "n_max": top}, {
                "n": n, "closed": list(closed.coeffs), "recursive": list(rec.coeffs)}
    return {"n_min": 1, "n_max": top}, None


@_register("symdiff-vs-recursive", 6)
def _check_symdiff(cfg):
    top = _max_n(cfg, "symdiff-vs-recursive")
    params = {"p_max": top, "q_max": top}
    for p in range(1, top + 1):
        for q in range(1, top + 1):
            sd = n_poly_symdiff(p, q, max_pairs=cfg.max_pairs)
            rec = n_poly_recursive(p, q)
            if sd != rec:
                return params, {"p": p, "q": q, "symdiff": list(sd.coeffs), "recursive": list(rec.coeffs)}
    return params, None


@_register("emd-oracle", 4)
def _check_emd(cfg):
    top_n = _max_n(cfg, "emd-oracle")
    top_s = cfg.max_s if cfg.max_s is not None else 5
    params = {"n_max": top_n, "s_max": top_s}
    for n in range(1, top_n + 1):
        series = series_expand(n_poly_recursive(n, n), 2 * n, top_s + 1)
        for s in range(top_s + 1):
            comps = enumerate_compositions(s, n, cfg.max_pairs)
            for a in comps:
                for b in comps:
                    if emd(a, b) != emd_via_bijection(a, b):
                        return params, {"s": s, "n": n, "alpha": list(a.parts), "beta": list(b.parts),
                                        "emd": emd(a, b), "bijection": emd_via_bijection(a, b)}
            values = {
                "bruteforce": hprime_coeff_bruteforce(s, n, cfg.max_pairs),
                "closed": hprime_coeff_closed(s, n),
                "symdiff": sum_sym_diff(RectBound(s, n - 1), RectBound(s, n - 1), cfg.max_pairs),
                "series": series[s],
            }
            if len(set(values.values())) != 1:
                return params, {"s": s, "n": n, **values}
            mean = expected_emd(s, n)
            if mean * binomial(s + n - 1, s) ** 2 != values["bruteforce"]:
                return params, {"s": s, "n": n, "expected": str(mean), **values}
    return params, None


@_register("wiener-triple", 4)
def _check_wiener(cfg):
    top = _max_n(cfg, "wiener-triple")
    for a in range(1, top + 1):
        for b in range(1, top + 1):
            values = {
                "formula": wiener_formula(a, b),
                "bfs": wiener_bfs(build_hasse(RectBound(a, b), cfg.max_vertices)),
                "symdiff": sum_sym_diff(RectBound(a, b), RectBound(a, b), cfg.max_pairs),
            }
            if len(set(values.values())) != 1:
                return {"a_max": top, "b_max": top}, {"a": a, "b": b, **values}
    return {"a_max": top, "b_max": top}, None


@_register("conj-sum", 20)
def _check_conj_sum(cfg):
    top = _max_n(cfg, "conj-sum")
    subset_top = min(top, SUBSET_SWEEP_MAX)
    params = {"n_max": top, "subset_n_max": subset_top}
    for n in range(1, top + 1):
        lhs, rhs = eval_at_one(n_poly_closed(n)), la_haye_S(n - 1)
        if lhs != rhs:
            return params, {"n": n, "N_n(1)": lhs, "S(n-1)": rhs}
    for n in range(subset_top + 1):
        brute, closed = subset_symdiff_sum(n), la_haye_S(n)
        if brute != closed:
            return params, {"n": n, "subset_sum": brute, "S(n)": closed}
    return params, None


@_register("limit-convergence", 6)
def _check_limit(cfg):
    top = _max_n(cfg, "limit-convergence")
    params = {"n_max": top, "s_values": list(LIMIT_SAMPLES)}
    for n in range(1, top + 1):
        lim = expected_emd_limit(n)
        errs = [abs(expected_emd(s, n) / s - lim) for s in LIMIT_SAMPLES]
        if lim == 0:
            ok = all(e == 0 for e in errs)
        else:
            ok = all(x > y for x, y in zip(errs, errs[1:])) and errs[-1] < lim / 100
        if not ok:
            return params, {"n": n, "limit": str(lim), "errors": [str(e) for e in errs]}
    return params, None


def run_check(name: str, cfg: VerifyConfig | None = None) -> VerificationReport:
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(sorted(CHECKS))}")
    cfg = cfg or VerifyConfig()
    start = time.perf_counter()
    params, counterexample = CHECKS[name](cfg)
    elapsed = (time.perf_counter() - start) * 1000.0
    status = "pass" if counterexample is None else "fail"
    log.info("%s %s in %.1f ms", name, status, elapsed)
    return VerificationReport(name, params, status, counterexample, round(elapsed, 3))


def run_checks(cfg: VerifyConfig) -> list[VerificationReport]:
    names = sorted(cfg.checks or CHECKS)
    return [run_check(name, cfg) for name in names]
