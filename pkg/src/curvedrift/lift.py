"""Lifting certificates through the hyperelliptic cover, closed-form bounds and report tables."""
from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from .occupancy import disk_bounds
from .zcover import (BoundCertificate, FAMILIES, PreconditionError, UnavailableFamily,
                     certified_bound, fiber_invariants)


class Kind(str, Enum):
    ARC = "ARC"
    SCC = "SCC"


@dataclass(frozen=True)
class SphereCurve:
    kind: Kind
    partition: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind is Kind.SCC:
            if self.partition is None or len(self.partition) != 2:
                raise ValueError("a simple closed curve needs a partition (n1, n2)")
            n1, n2 = self.partition
            if n1 < 2 or n2 < 2:
                raise ValueError(f"partition {self.partition}: both sides need at least 2 punctures")
            if (n1 - n2) % 2:
                raise ValueError(f"partition {self.partition}: sides must have the same parity")


@dataclass(frozen=True)
class LiftResult:
    components: int
    separating: tuple

    def __post_init__(self):
        if self.components == 2 and any(self.separating):
            raise ValueError("a two-component lift has non-separating components")


def lift_curve(g, curve: SphereCurve) -> LiftResult:
    if g < 2:
        raise ValueError("genus >= 2 required")
    if curve.kind is Kind.ARC:
        return LiftResult(1, (False,))
    n1, n2 = curve.partition
    if n1 + n2 != 2 * g + 2:
        raise ValueError(f"partition {curve.partition} does not sum to 2g+2 = {2 * g + 2}")
    if n1 % 2:
        return LiftResult(1, (True,))
    return LiftResult(2, (False, False))


# ---------------------------------------------------------------- certificates


def _is_wicket(cert):
    return any(str(step.get("family", "")).startswith("wicket") for step in cert.provenance)


def lift_certificate(cert: BoundCertificate, target: str, punctures=None) -> BoundCertificate:
    """target 'H(S_g)' (Birman-Hilden) or 'H(H_g)' (Hilden, wicket braids only)."""
    p = cert.punctures if punctures is None else punctures
    if p is None or p % 2 or p < 6:
        raise PreconditionError(f"source must live on a sphere with 2g+2 >= 6 punctures, got {p}")
    g = (p - 2) // 2
    if target == "H(S_g)":
        group = f"H(S_{{{g}}})"
    elif target == "H(H_g)":
        if not _is_wicket(cert):
            raise PreconditionError("handlebody lift needs a wicket-family source")
        group = f"H(H_{{{g}}})"
    else:
        raise ValueError(f"unknown lift target {target!r}")
    step = {"op": "lift", "target": group, "genus": g,
            "assumption": "lift of a pseudo-Anosov class is pseudo-Anosov (assumed, not checked)"}
    return replace(cert, group=group, punctures=None, provenance=cert.provenance + (step,))


def rescale_certificate(cert: BoundCertificate, k: int) -> BoundCertificate:
    """From a bound for f^k to a bound for f."""
    if k < 1:
        raise PreconditionError(f"k >= 1 required, got {k}")
    if k == 1:
        return cert
    m = cert.m * k if cert.m is not None else None
    return replace(cert, power=cert.power * k, m=m,
                   provenance=cert.provenance + ({"op": "rescale", "k": k},))


def bilipschitz_convert(cert: BoundCertificate) -> BoundCertificate:
    """Arc-and-curve distance to curve distance, losing a factor of 2."""
    return replace(cert, factor=cert.factor * 2,
                   provenance=cert.provenance + ({"op": "bilipschitz", "factor": cert.factor * 2},))


def hyperelliptic_certificate(g) -> BoundCertificate:
    if g < 3:
        raise PreconditionError(f"g >= 3 required, got g={g}")
    _, odd = disk_bounds(g + 1)
    return lift_certificate(odd, "H(S_g)")


def handlebody_certificate(g, data=None) -> BoundCertificate:
    """Odd g = 2n+3 from the 4n+8 wicket branch, even g = 2n+4 from the 4n+10 branch."""
    if g < 5:
        raise PreconditionError(f"g >= 5 required, got g={g}")
    if g % 2:
        cert = certified_bound("wicket-even", (g - 3) // 2, data)
    else:
        cert = certified_bound("wicket-odd", (g - 4) // 2, data)
    return lift_certificate(cert, "H(H_g)")


# ---------------------------------------------------------------- closed forms


def _chi(g, n):
    return 2 - 2 * g - n


def closed_form(name, params) -> Fraction:
    if name == "gadre_tsai_lower":
        g, n = params["g"], params.get("n", 0)
        chi = _chi(g, n)
        if chi >= 0:
            raise ValueError(f"S_{{{g},{n}}} has chi = {chi} >= 0")
        return Fraction(1, 18 * chi * chi + 30 * abs(chi) - 10 * n)
    if name == "penner_upper":
        g = params["g"]
        if g * g + g - 4 <= 0:
            raise ValueError(f"g^2 + g - 4 must be positive, g={g}")
        return Fraction(4, g * g + g - 4)
    if name == "hyperelliptic_upper":
        g = params["g"]
        if g < 3:
            raise ValueError(f"g >= 3 required, got g={g}")
        return Fraction(1, g * g - 2 * g - 1)
    raise KeyError(f"unknown closed form {name!r}")


# ---------------------------------------------------------------- report

REPORT_FAMILIES = tuple(FAMILIES) + ("hyperelliptic", "handlebody")
CSV_HEADER = ("group", "param", "lower", "upper", "consistent", "provenance_id")


def fmt(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def provenance_id(cert):
    blob = json.dumps([dict(s) for s in cert.provenance], sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:12]


def _row(family, param, data=None):
    cert, surface, group = None, None, None
    try:
        if family == "hyperelliptic":
            cert, surface = hyperelliptic_certificate(param), (param, 0)
        elif family == "handlebody":
            surface, group = (param, 0), f"H(H_{{{param}}})"
            cert = handlebody_certificate(param, data)
        else:
            try:
                fd = fiber_invariants(family, param)
                surface = (fd.genus, fd.punctures)
            except UnavailableFamily:
                pass
            cert = certified_bound(family, param, data)
    except (UnavailableFamily, PreconditionError) as exc:
        note = str(exc)
    lower = closed_form("gadre_tsai_lower", {"g": surface[0], "n": surface[1]}) if surface else None
    row = {
        "group": cert.group if cert else (group or family),
        "param": param,
        "lower": fmt(lower) if lower is not None else "unavailable",
        "upper": fmt(cert.bound) if cert else "unavailable",
        "consistent": "n/a",
        "provenance_id": provenance_id(cert) if cert else "none",
    }
    if cert is None:
        row["note"] = note
    elif lower is not None:
        row["consistent"] = "true" if lower <= cert.bound else "false"
    return row, cert


def build_report(families, params, data=None):
    """Rows ordered by family then parameter; params is an iterable or a dict per family."""
    rows = []
    for fam in families:
        if fam not in REPORT_FAMILIES:
            raise KeyError(f"unknown family {fam!r}")
        rng = params[fam] if isinstance(params, dict) else params
        for p in sorted(rng):
            rows.append(_row(fam, p, data)[0])
    return rows


def fitted_constant(rows):
    """Diagnostic: smallest C with upper <= C / param^2 on the rows with certificates."""
    vals = [Fraction(r["upper"]) * r["param"] ** 2 for r in rows if r["upper"] != "unavailable"]
    return max(vals) if vals else None


def to_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r[k] for k in CSV_HEADER])
    return buf.getvalue()
