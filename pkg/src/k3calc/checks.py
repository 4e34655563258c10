"""Cross-checks run by ``k3calc verify``.

Each check compares two computations that do not share code paths, e.g. the
eta-product expansion against the part-size partition DP, or the closed-form
Chern classes against Newton's identities applied to the Chern character.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import admissible as adm
from . import chow
from .bounds import asymptotic_fit, severi_lower_bound
from .qseries import eta_product, series_mul, yau_zaslow

SUITES = ("qseries", "admissible", "chow", "bounds")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f": {self.detail}" if self.detail else ""
        return f"{status} [{self.suite}] {self.name}{tail}"

    def to_dict(self) -> dict:
        return {"suite": self.suite, "name": self.name, "passed": self.passed, "detail": self.detail}


def _first_mismatch(xs, ys):
    for i, (a, b) in enumerate(zip(xs, ys)):
        if a != b:
            return i
    return None if len(xs) == len(ys) else min(len(xs), len(ys))


def check_qseries(max_n: int | None = None) -> list[CheckResult]:
    n = max_n or 30
    out = []
    eta = list(eta_product(-1, n + 1))
    dp = adm.partition_counts(n)
    bad = _first_mismatch(eta, dp)
    out.append(CheckResult("qseries", f"eta^-1 == partition DP, n <= {n}", bad is None,
                           "" if bad is None else f"first mismatch at n={bad}"))

    out.append(CheckResult("qseries", "Yau-Zaslow N_0..N_2 == 1, 24, 324",
                           yau_zaslow(2) == [1, 24, 324], str(yau_zaslow(2))))

    order = max(n, 50)
    pairs = [(-1, -1), (-24, -24), (-48, 48), (5, -7), (24, -1)]
    ok = all(series_mul(eta_product(a, order), eta_product(b, order)) == eta_product(a + b, order)
             for a, b in pairs)
    out.append(CheckResult("qseries", f"eta^a * eta^b == eta^(a+b), order {order}", ok,
                           f"pairs {pairs}"))

    n24 = eta_product(-24, order)
    ok = series_mul(n24, n24) == eta_product(-48, order)
    out.append(CheckResult("qseries", f"eta^-48 == (eta^-24)^2, order {order}", ok))
    return out


def check_admissible(max_n: int | None = None) -> list[CheckResult]:
    n = max_n or 15
    out = []
    p = adm.partition_counts(n)
    bad = []
    bij_bad = []
    for a in range(1, n + 1):
        seqs = adm.enumerate_one_admissible(a)
        if len(seqs) != p[a] or sum(adm.virtual_count(s) for s in seqs) != p[a]:
            bad.append(a)
        for s in seqs:
            lam = adm.sequence_to_partition(s)
            if lam.weight != a or adm.partition_to_sequence(lam) != s:
                bij_bad.append(a)
                break
        if len({adm.sequence_to_partition(s) for s in seqs}) != len(seqs):
            bij_bad.append(a)
    out.append(CheckResult("admissible", f"#1-admissible(a) == p(a), a <= {n}", not bad,
                           "" if not bad else f"fails at a={bad}"))
    out.append(CheckResult("admissible", f"diagonal map is a bijection, a <= {n}", not bij_bad,
                           "" if not bij_bad else f"fails at a={sorted(set(bij_bad))}"))
    r_max = max(n, 2)
    order = r_max + 1
    bad = [r for r in range(1, r_max + 1)
           if adm.fixed_fiber_count(r) != eta_product(-48, order)[r - 1]]
    out.append(CheckResult("admissible", f"48-fold convolution == eta^-48, r <= {r_max}", not bad,
                           "" if not bad else f"fails at r={bad}"))
    return out


def check_chow(max_n: int | None = None) -> list[CheckResult]:
    # grid is 11 x n x 31 points; n is capped at 12
    n_top = min(max_n or 8, 12)
    out = []
    bad = []
    c1_bad = []
    for g in range(0, 11):
        for n in range(2, n_top + 1):
            for d in range(0, 31):
                B = chow.BundleData(g, n, d)
                ch = chow.chern_character_FN(B)
                cs = chow.chern_classes_from_character(ch)
                if (cs[n] != chow.chern_FN_closed_form(B, n)
                        or cs[n - 1] != chow.chern_FN_closed_form(B, n - 1)):
                    bad.append((g, n, d))
                if ch.part(1) != chow.c1_FN_printed(B) or cs[1] != chow.c1_FN_printed(B):
                    c1_bad.append((g, n, d))
    out.append(CheckResult("chow", f"closed-form c_(n-1), c_n == Newton(ch), n <= {n_top}", not bad,
                           "" if not bad else f"{len(bad)} failures, first {bad[0]}"))
    out.append(CheckResult("chow", "c_1(F_N) display == degree-1 part of ch", not c1_bad,
                           "" if not c1_bad else f"first failure {c1_bad[0]}"))

    sym_ok = True
    disagree = True
    for r in range(5, 21):
        B = chow.BundleData(9, 2 * r, 4 * r + 4)
        br = chow.degeneracy_bracket(B)
        if br != chow.GradedClass(B.n, {(1, 0): 2 * r, (0, 1): -5}):
            sym_ok = False
        if br == chow.printed_bracket(B):
            disagree = False
    out.append(CheckResult(
        "chow", "bracket c_1(C_n) - c_1(F_N) == (2r)x - 5 theta at (9, 2r, 4r+4)", sym_ok,
        "the (3g+3n-2d-3)x - 3 theta form disagrees with it" if disagree
        else "unexpected: the 3 theta form agrees"))

    bad = [r for r in range(5, 41)
           if chow.degeneracy_genus(chow.BundleData(9, 2 * r, 4 * r + 4)) != chow.closed_form_genus_44(r)]
    out.append(CheckResult("chow", "degeneracy genus == closed-form quintic, 5 <= r <= 40", not bad,
                           "" if not bad else f"fails at r={bad}"))
    bad = [r for r in range(5, 101) if chow.closed_form_genus_44(r) < 1]
    out.append(CheckResult("chow", "closed-form genus is a positive integer, 5 <= r <= 100", not bad))
    return out


def check_bounds(max_n: int | None = None) -> list[CheckResult]:
    g_top = 2 * (max_n or 30) + 1
    out = []
    order = (g_top - 1) // 2 + 1
    reports = [severi_lower_bound(g, order) for g in range(3, g_top + 1, 2)]
    bad = [rep.g for rep in reports if rep.bl_count != adm.fixed_fiber_count(rep.r)]
    out.append(CheckResult("bounds", f"bl_count == fixed_fiber_count, odd g <= {g_top}", not bad,
                           "" if not bad else f"fails at g={bad}"))
    inc = all(a.severi_genus_lb < b.severi_genus_lb for a, b in zip(reports[1:], reports[2:]))
    out.append(CheckResult("bounds", "Severi bound strictly increasing for odd g >= 5", inc))
    fit = asymptotic_fit(50, 400)
    out.append(CheckResult("bounds", "fitted growth constant C > 0 on [50, 400]", fit.estimated_C > 0,
                           f"C = {fit.estimated_C:.4f}"))
    return out


SUITE_FUNCS: dict[str, Callable[[int | None], list[CheckResult]]] = {
    "qseries": check_qseries,
    "admissible": check_admissible,
    "chow": check_chow,
    "bounds": check_bounds,
}


def run_suite(name: str, max_n: int | None = None) -> list[CheckResult]:
    if name == "all":
        return [res for s in SUITES for res in SUITE_FUNCS[s](max_n)]
    if name not in SUITE_FUNCS:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES + ('all',)}")
    return SUITE_FUNCS[name](max_n)
