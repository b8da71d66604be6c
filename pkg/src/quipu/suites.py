"""Named verification suites, one per checked claim."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .charpoly import char_poly, path_poly, predicted_lowest_term
from .divisibility import (
    c01p_check,
    classify_path_divisor,
    classify_path_divisor_by_reduction,
    closed_quipu_quotient_sweep,
    cycle_divisor_scan,
    h_eval_at_two,
    hn_poly,
    hshape_odd_factorization,
    t_divides_h,
)
from .ds import mate_search, verify_main
from .families import Cycle, Hn, Lollipop, Path, Tn, build_family
from .graph import matchings_brute
from .intpoly import X, divides, lowest_term
from .matchings import m3_closed_form, m3_predict_hshape
from .spectral import compare_radii, eigen_location_suite, hshape_spec, hshape_trees_of_order


@dataclass
class SuiteResult:
    name: str
    ok: bool
    checked: int
    failures: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "failures": [str(f) for f in self.failures[:50]],
            **self.info,
        }


def _result(name: str, checked: int, failures: list, **info) -> SuiteResult:
    return SuiteResult(name, not failures, checked, failures, info)


def recursion_suite(n_max: int = 100) -> SuiteResult:
    bad = [n for n in range(12, n_max + 1) if hn_poly(n) != X * hn_poly(n - 1) - hn_poly(n - 2)]
    return _result("p22n-4", n_max - 11, bad)


def eval_two_suite(n_max: int = 200) -> SuiteResult:
    bad = []
    for n in range(10, n_max + 1):
        try:
            h_eval_at_two(n)
        except ArithmeticError as exc:
            bad.append(str(exc))
    return _result("mink4", n_max - 9, bad)


def path_divisor_suite(m_max: int = 25, n_max: int = 120) -> SuiteResult:
    bad, accepted = [], []
    for m in range(1, m_max + 1):
        pm = path_poly(m)
        for n in range(10, n_max + 1):
            direct = divides(pm, hn_poly(n))
            if direct:
                accepted.append((m, n))
            if direct != classify_path_divisor(m, n) or direct != classify_path_divisor_by_reduction(m, n):
                bad.append((m, n))
    return _result("divi2", m_max * (n_max - 9), bad, accepted=len(accepted))


def tshape_divisor_suite(h_max: int = 20, k_max: int = 20) -> SuiteResult:
    bad = []
    checked = 0
    for h in range(6, h_max + 1):
        for k in range(5, k_max + 1):
            checked += 1
            if t_divides_h(h, 2 * k + 1) != (h == k):
                bad.append(("T", h, "H", 2 * k + 1))
    for k in range(6, k_max + 1):
        checked += 1
        if not hshape_odd_factorization(k).identity_holds:
            bad.append(("factorization", k))
    return _result("divi3", checked, bad)


def cycle_divisor_suite(m_max: int = 20, n_max: int = 60) -> SuiteResult:
    found = cycle_divisor_scan(m_max, n_max)
    bad = [] if found == {(3, 15), (6, 15)} else [sorted(found)]
    return _result("divi4", 1, bad, found=sorted(found))


def quipu_quotient_suite(n_max: int = 24) -> SuiteResult:
    sweep = closed_quipu_quotient_sweep(n_max)
    return _result("divi5", sweep.checked, sweep.hits)


def lowest_term_suite(n_max: int = 100, st_max: int = 12) -> SuiteResult:
    bad = []
    checked = 0
    cases = [Path(n) for n in range(1, n_max + 1)] + [Cycle(n) for n in range(3, n_max + 1)]
    cases += [Tn(n) for n in range(6, n_max + 1)] + [Hn(n) for n in range(10, n_max + 1)]
    for s in range(1, st_max + 1):
        for t in range(1, st_max + 1):
            for e1 in (0, 1):
                for e2 in (0, 1):
                    cases.append(Lollipop(4 * s - 2 * e1, 4 * t + 2 * e2))
    for spec in cases:
        checked += 1
        if predicted_lowest_term(spec) != lowest_term(char_poly(build_family(spec))):
            bad.append(spec)
    return _result("DK-low", checked, bad)


def location_suite(n_max: int = 30) -> SuiteResult:
    rep = eigen_location_suite(range(10, n_max + 1))
    return _result("second", len(rep.claims), [c.claim + str(c.params) for c in rep.failures])


def c01p_suite(k_max: int = 30) -> SuiteResult:
    bad = []
    for k in range(6, k_max + 1):
        c = c01p_check(k)
        if not c.both_identities_hold:
            bad.append(("identity", k))
        if compare_radii(build_family(Lollipop(1, 2 * k - 6)), build_family(Hn(2 * k + 1))) != 0:
            bad.append(("radius", k))
    return _result("C01P", 2 * (k_max - 5), bad)


def matching_suite(n_max: int = 14) -> SuiteResult:
    bad = []
    checked = 0
    for n in range(6, n_max + 1):
        for arms in hshape_trees_of_order(n):
            t = build_family(hshape_spec(*arms))
            checked += 1
            if not m3_predict_hshape(t) == m3_closed_form(t) == matchings_brute(t, 3):
                bad.append(arms)
    return _result("3match1", checked, bad)


def h11_suite() -> SuiteResult:
    rep = mate_search(11)
    return _result("main1", 1, rep.mate_labels())


def main_suite(n_max: int = 20, threads: int = 1) -> SuiteResult:
    rep = verify_main(range(10, n_max + 1), threads=threads)
    bad = [v.to_json() for v in rep.verdicts if not v.ok]
    return _result("main", len(rep.verdicts), bad, non_ds=rep.non_ds())


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "p22n-4": recursion_suite,
    "mink4": eval_two_suite,
    "divi2": path_divisor_suite,
    "divi3": tshape_divisor_suite,
    "divi4": cycle_divisor_suite,
    "divi5": quipu_quotient_suite,
    "DK-low": lowest_term_suite,
    "second": location_suite,
    "C01P": c01p_suite,
    "3match1": matching_suite,
    "main1": h11_suite,
    "main": main_suite,
}


_THREADED = {"main"}


def run_suite(name: str, threads: int = 1, **params) -> list[SuiteResult]:
    """Run one suite, or every suite with its defaults for ``"all"``."""
    names = list(SUITES) if name == "all" else [name]
    if name != "all" and name not in SUITES:
        raise KeyError(name)
    out = []
    for n in names:
        kw = dict(params)
        if n in _THREADED:
            kw["threads"] = threads
        out.append(SUITES[n](**kw))
    return out
