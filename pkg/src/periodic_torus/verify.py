"""Self-check battery run by ``periodic-torus verify``.

Each check recomputes a known classification result from scratch and
compares it with the published value.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Tuple

from .characteristics import (
    TORUS_NONFREE_KAPPAS,
    enumerate_torus_nonfree,
    is_admissible,
    modular_genus,
    valency_sum_ok,
)
from .dynamics import (
    AffineTorusMap,
    complete_characteristic,
    fixed_points,
    kappa_label,
    lower_period_set,
    map_period,
    torus_point,
)
from .exactlin import Mat2, mat_pow
from .glz import ALGEBRAIC_REPRESENTATIVES, OrientedClass, conjugate_by, oriented_class, period_of


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _run(name: str, fn: Callable[[], Tuple[bool, str]]) -> Check:
    try:
        ok, detail = fn()
    except Exception as exc:  # a crashing check is a failing check
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    return Check(name, bool(ok), detail)


def _enumeration():
    got = enumerate_torus_nonfree()
    want = set(TORUS_NONFREE_KAPPAS.values())
    return len(got) == 7 and set(got) == want, f"{len(got)} characteristics: " + ", ".join(map(str, got))


def _realisation(j: int):
    def check():
        A = ALGEBRAIC_REPRESENTATIVES[j]
        kappa = complete_characteristic(AffineTorusMap(A))
        cls = oriented_class(A)
        ok = kappa == TORUS_NONFREE_KAPPAS[j] and cls is OrientedClass(f"A{j}")
        return ok, f"A{j} -> {kappa_label(kappa)} {kappa}, class {cls}"
    return check


def _worked_example():
    f = AffineTorusMap(ALGEBRAIC_REPRESENTATIVES[5])
    P = torus_point
    expected_fixed = {
        1: [P(0, 0)],
        2: [P(0, 0), P("1/3", "1/3"), P("2/3", "2/3")],
        3: [P(0, 0), P(0, "1/2"), P("1/2", 0), P("1/2", "1/2")],
    }
    problems = []
    if map_period(f) != 6:
        problems.append(f"period {map_period(f)}")
    for m, pts in expected_fixed.items():
        got = list(fixed_points(f.power(m)).points)
        if got != sorted(pts):
            problems.append(f"Fix(f^{m}) = {[str(p) for p in got]}")
    valencies = [(o.n_i, o.d_i) for o in lower_period_set(f)]
    if valencies != [(3, 1), (2, 2), (1, 5)]:
        problems.append(f"valencies {valencies}")
    return not problems, "; ".join(problems) or "period 6, three orbits with d = 1, 2, 5"


_CONJUGATORS = (Mat2(1, 1, 0, 1), Mat2(2, 1, 1, 1), Mat2(1, -2, 1, -1), Mat2(3, 2, 4, 3))


def _count_law():
    checked = 0
    for A0 in ALGEBRAIC_REPRESENTATIVES.values():
        for S in (Mat2.identity(),) + _CONJUGATORS:
            A = conjugate_by(A0, S)
            for m in range(1, period_of(A)):
                Am = mat_pow(A, m)
                if Am.is_identity():
                    continue
                count = len(fixed_points(AffineTorusMap(Am)))
                if count != abs((Am - Mat2.identity()).det()):
                    return False, f"{A}^{m}: {count} fixed points"
                checked += 1
    return True, f"{checked} powers checked"


def _admissibility():
    bad = [str(k) for k in TORUS_NONFREE_KAPPAS.values()
           if not (is_admissible(k) and modular_genus(k) == 0 and valency_sum_ok(k))]
    return not bad, ", ".join(bad) or "all seven admissible with modular genus 0"


def run_checks() -> List[Check]:
    checks = [_run("enumeration reproduces the seven characteristics", _enumeration)]
    for j in ALGEBRAIC_REPRESENTATIVES:
        checks.append(_run(f"A{j} -> κ{j}", _realisation(j)))
    checks.append(_run("A5 worked example", _worked_example))
    checks.append(_run("fixed point count law", _count_law))
    checks.append(_run("admissibility of κ1..κ7", _admissibility))
    return checks
