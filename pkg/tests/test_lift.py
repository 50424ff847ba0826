import random
from fractions import Fraction

import pytest

from curvedrift.lift import (CSV_HEADER, SphereCurve, bilipschitz_convert, build_report,
                             closed_form, handlebody_certificate, hyperelliptic_certificate,
                             lift_certificate, lift_curve, rescale_certificate, to_csv)
from curvedrift.occupancy import disk_bounds
from curvedrift.zcover import BoundCertificate, PreconditionError, UnavailableFamily, certified_bound


def test_lift_curve_cases():
    assert lift_curve(3, SphereCurve("ARC")).components == 1
    assert lift_curve(3, SphereCurve("SCC", (3, 5))).separating == (True,)
    r = lift_curve(3, SphereCurve("SCC", (4, 4)))
    assert r.components == 2 and r.separating == (False, False)


def test_lift_curve_errors():
    with pytest.raises(ValueError):
        SphereCurve("SCC", (1, 7))
    with pytest.raises(ValueError):
        SphereCurve("SCC", (3, 4))
    with pytest.raises(ValueError):
        lift_curve(3, SphereCurve("SCC", (4, 6)))


@pytest.mark.parametrize("name,params,value", [
    ("gadre_tsai_lower", {"g": 0, "n": 9}, Fraction(1, 1002)),
    ("gadre_tsai_lower", {"g": 4}, Fraction(1, 828)),
    ("hyperelliptic_upper", {"g": 4}, Fraction(1, 7)),
    ("penner_upper", {"g": 3}, Fraction(4, 8)),
])
def test_closed_forms(name, params, value):
    assert closed_form(name, params) == value


def test_closed_form_domains():
    with pytest.raises(ValueError):
        closed_form("hyperelliptic_upper", {"g": 2})
    with pytest.raises(ValueError):
        closed_form("penner_upper", {"g": 1})
    with pytest.raises(ValueError):
        closed_form("gadre_tsai_lower", {"g": 0, "n": 2})


def test_hyperelliptic_pipeline():
    for g in range(3, 51):
        c = hyperelliptic_certificate(g)
        assert c.group == f"H(S_{{{g}}})"
        assert c.bound == closed_form("hyperelliptic_upper", {"g": g})
        assert c.replay() == c.bound


def test_lift_preconditions():
    even, _ = disk_bounds(5)  # lives on S_{0,11}: odd puncture count
    with pytest.raises(PreconditionError):
        lift_certificate(even, "H(S_g)")
    _, odd = disk_bounds(5)
    with pytest.raises(PreconditionError, match="wicket"):
        lift_certificate(odd, "H(H_g)")


def test_handlebody_needs_wicket_data():
    with pytest.raises(UnavailableFamily):
        handlebody_certificate(7, data={})


def test_rescale():
    c = BoundCertificate("G", 5, [{"op": "disjointness", "r": 5}], punctures=8)
    r = rescale_certificate(c, 3)
    assert r.bound == Fraction(1, 15) and r.replay() == r.bound
    assert rescale_certificate(c, 1) == c
    with pytest.raises(PreconditionError):
        rescale_certificate(c, 0)


def test_rescale_and_lift_commute():
    rng = random.Random(4)
    for _ in range(50):
        p = 2 * rng.randint(2, 20) + 2
        c = BoundCertificate("Mod(S_0,p)", rng.randint(1, 99), [{"op": "disjointness", "r": 1}], punctures=p)
        k = rng.randint(1, 6)
        a = lift_certificate(rescale_certificate(c, k), "H(S_g)")
        b = rescale_certificate(lift_certificate(c, "H(S_g)"), k)
        assert (a.group, a.power, a.bound) == (b.group, b.power, b.bound)


def test_bilipschitz_annotation():
    c = certified_bound("magic", 6)
    d = bilipschitz_convert(c)
    assert d.bound == 2 * c.bound and d.replay() == d.bound


def test_report_rows():
    rows = build_report(["magic", "hyperelliptic"], range(4, 8))
    assert len(rows) == 8
    hyp4 = next(r for r in rows if r["group"] == "H(S_{4})")
    assert (hyp4["lower"], hyp4["upper"], hyp4["consistent"]) == ("1/828", "1/7", "true")
    magic4 = next(r for r in rows if r["group"] == "Mod(D_{8})")
    assert magic4["upper"] == "1/2"
    text = to_csv(rows)
    assert text.splitlines()[0] == ",".join(CSV_HEADER)
    assert len(text.splitlines()) == 9


def test_report_marks_unavailable():
    rows = build_report(["torus-even"], [5])
    assert rows[0]["upper"] == "unavailable" and rows[0]["consistent"] == "n/a"


def test_handlebody_labels_with_placeholder_data():
    # placeholder sphere braid: checks genus bookkeeping and provenance, not the real family
    data = {"w6": {"strands": 6, "flavor": "SPHERE", "letters": [[4, 1], [4, 1]]}}
    odd = handlebody_certificate(11, data)
    assert odd.group == "H(H_{11})"
    assert odd.provenance[0]["family"] == "wicket-even"
    even = handlebody_certificate(16, data)
    assert even.group == "H(H_{16})"
    assert even.provenance[0]["family"] == "wicket-odd"
