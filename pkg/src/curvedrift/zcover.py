"""Block-interval calculus for quotients of an infinite cyclic cover."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .braid import MissingTranscription, catalog, load_transcriptions
from .curves import SpreadInterval, spread_interval

__all__ = [
    "SpreadInterval", "FiberDescriptor", "BoundCertificate", "PreconditionError",
    "UnavailableFamily", "validity_threshold", "paper_parameters", "optimized_parameters",
    "certified_bound", "fiber_invariants", "family_spread", "FAMILIES",
]


class PreconditionError(ValueError):
    pass


class UnavailableFamily(LookupError):
    pass


@dataclass(frozen=True)
class FiberDescriptor:
    n: int
    genus: int
    punctures: int
    fixed_puncture: bool
    euler: int = None

    def __post_init__(self):
        e = 2 - 2 * self.genus - self.punctures
        if self.euler is None:
            object.__setattr__(self, "euler", e)
        elif self.euler != e:
            raise ValueError(f"euler {self.euler} != 2 - 2g - p = {e}")

    def label(self):
        return f"S_{{{self.genus},{self.punctures}}}"


@dataclass(frozen=True)
class BoundCertificate:
    """ell_C(f) <= factor/power.

    m is the block-count parameter that produced power, if any; punctures is the
    puncture count of the sphere the class lives on, when it is a sphere class.
    factor is 1 except on the bilipschitz arc-to-curve route."""

    group: str
    power: int
    provenance: tuple
    m: int = None
    punctures: int = None
    factor: int = 1

    def __post_init__(self):
        if self.power < 1:
            raise ValueError("certificate power must be a positive integer")
        if not self.provenance:
            raise ValueError("certificate needs a provenance trail")
        object.__setattr__(self, "provenance", tuple(self.provenance))

    @property
    def bound(self) -> Fraction:
        return Fraction(self.factor, self.power)

    def to_dict(self):
        d = {"group": self.group}
        if self.m is not None:
            d["m"] = self.m
        d["r"] = self.power
        d["bound"] = f"{self.bound.numerator}/{self.bound.denominator}"
        d["provenance"] = [dict(step) for step in self.provenance]
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=False)

    def replay(self) -> Fraction:
        """Recompute the bound from the provenance alone."""
        power, factor = None, 1
        for step in self.provenance:
            op = step["op"]
            if op in ("optimized_parameters", "paper_parameters", "max_disjoint_exponent", "disjointness"):
                power = step["r"]
            elif op == "rescale":
                power *= step["k"]
            elif op == "bilipschitz":
                factor = step["factor"]
        if power is None:
            raise ValueError("provenance has no disjointness step")
        return Fraction(factor, power)


def validity_threshold(s: SpreadInterval) -> int:
    """Sufficient n for the quotient to be a surface: images of block 0 under nonzero
    powers of h^n psi stay off the blocks its own lift touches."""
    a, b = s
    return max(1 - a, b - a + 1)


def paper_parameters(n: int, k: int) -> dict:
    if k < 1:
        raise PreconditionError(f"k >= 1 required, got k={k}")
    if n - k - 2 < 2 * k:
        raise PreconditionError(f"(n-k-2)/(2k) >= 1 fails: ({n}-{k}-2)/(2*{k}) = {Fraction(n - k - 2, 2 * k)}")
    m = (n - k - 2) // (2 * k)
    return {"m": m, "r": (n - k) * m - 1}


def optimized_parameters(n: int, s: SpreadInterval) -> dict:
    """Largest r with some translate of psi^m(block 0) inside the free window [1, n+a-1]."""
    a, b = s
    if a == b:
        raise PreconditionError("rigid spread a = b is degenerate (lift is a translation)")
    if n < b - 2 * a + 2:
        raise PreconditionError(f"n >= b - 2a + 2 = {b - 2 * a + 2} required for m >= 1, got n={n}")
    m = (n + a - 2) // (b - a)
    return {"m": m, "r": m * (n + a) - 1}


# ---------------------------------------------------------------- families


@dataclass(frozen=True)
class Family:
    name: str
    group: str                  # format string in n, p (punctures), d (disk punctures)
    cut: str                    # "arc" or "curve"
    genus: int = None
    punctures: tuple = None     # (slope, offset): punctures = slope*n + offset
    fixed_puncture: bool = False
    stated_spread: tuple = None
    spread_braid: tuple = None  # (catalog name, cut strand, power)
    sharp_threshold: int = None
    note: str = ""


FAMILIES = {
    "magic": Family("magic", "Mod(D_{{{d}}})", "arc", 0, (2, 1), True,
                    spread_braid=("beta_magic", 1, 1), sharp_threshold=2),
    "magic-odd": Family("magic-odd", "Mod(D_{{{d}}})", "arc", 0, (2, 2), True,
                        spread_braid=("beta_magic", 1, 2)),
    "whitehead-odd": Family("whitehead-odd", "Mod(S_{{1,{p}}})", "curve", 1, (2, 1),
                            stated_spread=(-1, 0), sharp_threshold=2),
    "torus-even": Family("torus-even", "Mod(S_{{1,{p}}})", "curve", 1, (2, None),
                         note="n0 depends on the chosen lift and must be supplied"),
    "wicket-even": Family("wicket-even", "Mod(S_{{0,{p}}})", "arc", 0, (4, 8),
                          spread_braid=("psi5", 5, 1)),
    "wicket-odd": Family("wicket-odd", "Mod(S_{{0,{p}}})", "arc", 0, (4, 10),
                         spread_braid=("psi5", 5, 2)),
    "genus2-closed": Family("genus2-closed", "Mod(R_{{{n}}})", "curve", None, (0, 0),
                            stated_spread=(-1, 1),
                            note="fiber genus grows linearly; slope not stated"),
}


def _family(name):
    try:
        return FAMILIES[name]
    except KeyError:
        raise KeyError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}") from None


def family_spread(name, data=None) -> tuple:
    """(spread, source) for a family; raises UnavailableFamily when data is missing."""
    fam = _family(name)
    if fam.stated_spread is not None:
        return SpreadInterval(*fam.stated_spread), "stated"
    if fam.spread_braid is None:
        raise UnavailableFamily(f"{name}: no spread without a transcribed lift ({fam.note})")
    bname, strand, power = fam.spread_braid
    try:
        b = catalog(bname, data=load_transcriptions() if data is None else data)
    except MissingTranscription as exc:
        raise UnavailableFamily(f"{name}: {exc}") from None
    return spread_interval(b ** power, strand), f"spread_interval({bname}^{power}, c{strand})"


def fiber_invariants(name, n, n0=None) -> FiberDescriptor:
    fam = _family(name)
    slope, offset = fam.punctures
    if name == "torus-even":
        if n0 is None:
            raise UnavailableFamily("torus-even needs the stored parameter n0")
        offset = n0
    if fam.genus is None:
        raise UnavailableFamily(f"{name}: {fam.note}")
    if fam.sharp_threshold is not None and n < fam.sharp_threshold:
        raise PreconditionError(f"{name} needs n >= {fam.sharp_threshold}, got n={n}")
    return FiberDescriptor(n, fam.genus, slope * n + offset, fam.fixed_puncture)


def certified_bound(name, n, data=None, n0=None) -> BoundCertificate:
    fam = _family(name)
    s, source = family_spread(name, data)
    valid = fam.sharp_threshold if fam.sharp_threshold is not None else validity_threshold(s)
    m_min = s.b - 2 * s.a + 2
    if n < valid or n < m_min:
        raise PreconditionError(
            f"{name} at n={n}: need n >= {valid} (quotient is a surface) and n >= {m_min} (m >= 1)")
    par = optimized_parameters(n, s)
    steps = [
        {"op": "spread", "family": name, "spread": [s.a, s.b], "source": source},
        {"op": "validity_threshold", "n_min": valid},
        {"op": "optimized_parameters", "n": n, "m": par["m"], "r": par["r"]},
    ]
    if fam.cut == "arc":
        steps.append({"op": "arc_to_curve", "method": "regular neighborhood boundary"})
    steps.append({"op": "distance_one_power_bound", "r": par["r"]})
    if fam.genus is not None and (name != "torus-even" or n0 is not None):
        p = fiber_invariants(name, n, n0).punctures
    else:
        p = None
    d = p - 1 if p is not None else "?"
    sphere = p if fam.genus == 0 else None
    return BoundCertificate(fam.group.format(p=p if p is not None else "?", d=d, n=n), par["r"], steps,
                            m=par["m"], punctures=sphere)
