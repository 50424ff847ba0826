"""Acceptance criteria, one check each.

Run with pytest (a PASS/FAIL line per criterion is printed in the terminal
summary) or directly: python tests/test_acceptance.py
"""
from fractions import Fraction

import numpy as np
import pytest

from curvedrift.braid import catalog, load_transcriptions
from curvedrift.curves import (LaminationCoord, SpreadInterval, apply_braid, apply_letters,
                               intersection_number, magic_family_witness, spread_interval)
from curvedrift.homology import (GENUS2_PRINTED, GENUS2_WORD, SymplecticSurfaceBasis,
                                 fixed_primitive_cohomology, twist_action_matrix)
from curvedrift.lift import (REPORT_FAMILIES, build_report, closed_form, handlebody_certificate,
                             hyperelliptic_certificate)
from curvedrift.occupancy import OccupancyState, max_disjoint_exponent, run_trace
from curvedrift.zcover import (PreconditionError, UnavailableFamily, certified_bound,
                               optimized_parameters, paper_parameters)

RESULTS = {}


def homology_action():
    classes = load_transcriptions()["homology_classes"]
    M = twist_action_matrix(GENUS2_WORD, classes, SymplecticSurfaceBasis(2))
    assert M.tolist() == GENUS2_PRINTED, M.tolist()
    fixed = fixed_primitive_cohomology(M)
    assert len(fixed) == 1 and fixed[0].primitive, fixed
    return f"matrix exact, fixed covector {fixed[0].coefficients}"


def parameter_formulas():
    checked = rejected = 0
    for k in range(1, 6):
        for n in range(k + 3, 51):
            if n - k - 2 < 2 * k:
                # below the operation's precondition: must refuse, never return m = 0
                with pytest.raises(PreconditionError):
                    paper_parameters(n, k)
                rejected += 1
                continue
            m = (n - k - 2) // (2 * k)
            assert paper_parameters(n, k) == {"m": m, "r": (n - k) * m - 1}, (n, k)
            r = paper_parameters(n, k)["r"]
            for a in range(-k, 1):
                for b in range(0, k + 1):
                    if max(-a, b) != k or n < b - 2 * a + 2:
                        continue
                    assert optimized_parameters(n, SpreadInterval(a, b))["r"] >= r, (n, k, a, b)
            checked += 1
    return f"{checked} (n,k) pairs exact and dominated, {rejected} refused below precondition"


def central_crosscheck():
    s = SpreadInterval(-1, 0)
    for n in range(4, 201):
        r = optimized_parameters(n, s)["r"]
        M = max_disjoint_exponent(n)
        assert r == M == n * n - 4 * n + 2, (n, r, M)
    return "4 <= n <= 200"


def occupancy_checkpoints():
    count = 0
    for n in range(4, 51):
        trace = dict(run_trace(n))
        for k in range(2, n - 1):
            assert trace[(k - 1) * n - k] == OccupancyState(n, False, (n - k, n - 1)), (n, k)
            count += 1
    return f"{count} checkpoints"


def hyperelliptic_identity():
    for g in range(3, 51):
        c = hyperelliptic_certificate(g)
        assert c.bound == Fraction(1, g * g - 2 * g - 1) == closed_form("hyperelliptic_upper", {"g": g}), g
    spots = {3: Fraction(1, 2), 4: Fraction(1, 7), 10: Fraction(1, 79)}
    for g, v in spots.items():
        assert hyperelliptic_certificate(g).bound == v
    return "3 <= g <= 50, spots 1/2, 1/7, 1/79"


def spread_extraction():
    beta = catalog("beta_magic")
    s1 = spread_interval(beta, 1)
    s2 = spread_interval(beta ** 2, 1)
    assert s1 == SpreadInterval(-1, 0), s1
    assert SpreadInterval(-2, 0).contains(s2), s2
    return f"beta {s1}, beta^2 {s2}"


def dynnikov_relations(samples=1000):
    rng = np.random.default_rng(2024)
    for N in range(3, 11):
        for _ in range(samples):
            x = LaminationCoord(N, rng.integers(-50, 51, 2 * N - 4))
            for i in range(1, N - 1):
                for s in (1, -1):
                    lhs = apply_letters(x, [(i, s), (i + 1, s), (i, s)])
                    rhs = apply_letters(x, [(i + 1, s), (i, s), (i + 1, s)])
                    assert lhs == rhs, (N, i, s, x.coords)
            for i in range(1, N):
                for j in range(i + 2, N):
                    assert apply_letters(x, [(i, 1), (j, 1)]) == apply_letters(x, [(j, 1), (i, 1)]), (N, i, j)
                for s in (1, -1):
                    assert apply_letters(x, [(i, s), (i, -s)]) == x, (N, i, s)
    return f"N = 3..10, {samples} coordinates each"


def disjointness_oracle():
    out = []
    for n in (4, 5):
        M = n * n - 4 * n + 2
        psi, alpha = magic_family_witness(n)
        i = intersection_number(alpha, apply_braid(alpha, psi ** M))
        assert i == 0, (n, i)
        out.append(f"n={n}: i(alpha, psi^{M} alpha) = 0")
    return "; ".join(out)


def asymptote_property():
    for n in range(10, 101):
        r = certified_bound("magic", n).power
        assert Fraction(1, 4) <= Fraction(r, n * n) <= 1, (n, r)
    try:
        for g in range(5, 61):
            r = handlebody_certificate(g).power
            assert Fraction(1, 8) <= Fraction(r, g * g) <= 2, (g, r)
    except UnavailableFamily as exc:
        raise AssertionError(f"magic half holds; handlebody half has no certificate: {exc}") from exc
    return "magic 10..100 and handlebody 5..60"


def report_consistency():
    rows = build_report(REPORT_FAMILIES, range(4, 21))
    compared = [r for r in rows if r["consistent"] != "n/a"]
    bad = [r for r in compared if r["consistent"] != "true"]
    assert not bad, bad[0]
    s09 = next(r for r in rows if r["group"] == "Mod(D_{8})")
    assert s09["lower"] == "1/1002", s09
    return f"{len(compared)} rows compared, {len(rows) - len(compared)} without a certificate"


CRITERIA = [
    (1, "genus-2 homology action and fixed covector", homology_action),
    (2, "parameter formulas exhaustive, optimized dominates", parameter_formulas),
    (3, "optimized r = occupancy exponent = n^2-4n+2", central_crosscheck),
    (4, "occupancy checkpoints", occupancy_checkpoints),
    (5, "hyperelliptic pipeline = 1/(g^2-2g-1)", hyperelliptic_identity),
    (6, "spread extraction for the magic braid", spread_extraction),
    (7, "Dynnikov relations and inverses", dynnikov_relations),
    (8, "disjointness oracle on the magic-family witness", disjointness_oracle),
    (9, "certificate asymptotes r/n^2", asymptote_property),
    (10, "report lower <= upper", report_consistency),
]


def _record(num, title, check):
    try:
        detail = check()
    except BaseException as exc:
        RESULTS[num] = (False, title, f"{type(exc).__name__}: {exc}")
        raise
    RESULTS[num] = (True, title, detail)


def summary_lines():
    out = []
    for num, title, _ in CRITERIA:
        if num in RESULTS:
            ok, _, detail = RESULTS[num]
            out.append(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}: {title} ({detail})")
    return out


@pytest.mark.parametrize("num,title,check", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(num, title, check):
    _record(num, title, check)


if __name__ == "__main__":
    for num, title, check in CRITERIA:
        try:
            _record(num, title, check)
        except BaseException:
            pass
    print("\n".join(summary_lines()))
