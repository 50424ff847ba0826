"""Braid words on disks and spheres, strand bookkeeping and the named catalog."""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import jsonschema


class Flavor(str, Enum):
    DISK = "DISK"
    SPHERE = "SPHERE"


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple = ()
    flavor: Flavor = Flavor.DISK

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(i), int(s)) for i, s in self.letters))
        object.__setattr__(self, "flavor", Flavor(self.flavor))
        if self.strands < 2:
            raise ValueError("a braid needs at least 2 strands")
        if self.flavor is Flavor.SPHERE and self.strands < 3:
            raise ValueError("sphere braids need at least 3 strands")
        for i, s in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(f"generator index {i} outside [1, {self.strands - 1}]")
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {s}")

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other):
        return compose(self, other, "PRODUCT")

    def __pow__(self, k):
        return compose(self, None, ("POWER", k))

    def inverse(self):
        return compose(self, None, "INVERSE")

    def reduced(self):
        return free_reduce(self)

    def on_disk(self):
        return BraidWord(self.strands, self.letters, Flavor.DISK)

    def __str__(self):
        if not self.letters:
            return f"e[{self.strands}]"
        return " ".join(f"s{i}" if s > 0 else f"s{i}^-1" for i, s in self.letters)


def sigma(strands, *letters, flavor=Flavor.DISK):
    """Build a word from signed generator indices: sigma(3, -1, -1, 2) is s1^-1 s1^-1 s2."""
    return BraidWord(strands, [(abs(x), 1 if x > 0 else -1) for x in letters], flavor)


def free_reduce(b: BraidWord) -> BraidWord:
    out = []
    for i, s in b.letters:
        if out and out[-1] == (i, -s):
            out.pop()
        else:
            out.append((i, s))
    return BraidWord(b.strands, out, b.flavor)


def compose(u: BraidWord, v, mode="PRODUCT", reduce=False) -> BraidWord:
    """PRODUCT concatenates u then v; INVERSE and ("POWER", k) act on u alone."""
    if mode == "PRODUCT":
        if v is None or u.strands != v.strands or u.flavor != v.flavor:
            raise ValueError("PRODUCT needs two words with the same strands and flavor")
        out = BraidWord(u.strands, u.letters + v.letters, u.flavor)
    elif mode == "INVERSE":
        out = BraidWord(u.strands, [(i, -s) for i, s in reversed(u.letters)], u.flavor)
    elif isinstance(mode, tuple) and mode[0] == "POWER":
        k = int(mode[1])
        base = u if k >= 0 else compose(u, None, "INVERSE")
        out = BraidWord(u.strands, base.letters * abs(k), u.flavor)
    else:
        raise ValueError(f"unknown composition mode {mode!r}")
    return free_reduce(out) if reduce else out


@dataclass(frozen=True)
class Permutation:
    """images[k-1] is the end position of the strand that starts at position k."""

    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError("not a bijection of {1..n}")

    def __call__(self, k):
        return self.images[k - 1]

    def then(self, other):
        # strands run through self first and then through other
        return Permutation([other(self(k)) for k in range(1, len(self.images) + 1)])

    def cycles(self):
        seen, out = set(), []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc, k = [], start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def fixes(self, k):
        return self(k) == k

    @staticmethod
    def identity(n):
        return Permutation(range(1, n + 1))


def underlying_permutation(b: BraidWord) -> Permutation:
    """Strand motion read bottom-to-top through the letters in written order.

    With this reading perm(uv) equals perm(u) composed with perm(v) as maps on
    strand positions once the product is read as functions applied right to left
    (the same order in which braids act on curves)."""
    pos = list(range(1, b.strands + 1))  # pos[k-1]: current position of strand k
    for i, _ in reversed(b.letters):
        for k in range(b.strands):
            if pos[k] == i:
                pos[k] = i + 1
            elif pos[k] == i + 1:
                pos[k] = i
    return Permutation(pos)


def closure_invariants(b: BraidWord) -> dict:
    if b.flavor is not Flavor.DISK:
        raise ValueError("closure invariants are defined for disk braids only")
    comps = len(underlying_permutation(b).cycles())
    return {"closure_components": comps, "braided_link_components": comps + 1, "betti": comps + 1}


def strand_track(b: BraidWord, s: int) -> list:
    """Position of the strand starting at s before each letter is applied (right to left)."""
    track, p = [], s
    for i, _ in reversed(b.letters):
        track.append(p)
        if p == i:
            p = i + 1
        elif p == i + 1:
            p = i
    track.append(p)
    return track


def delete_strand(b: BraidWord, s: int) -> BraidWord:
    if b.strands < 3:
        raise ValueError("deleting a strand needs at least 3 strands")
    if not 1 <= s <= b.strands:
        raise ValueError(f"strand {s} out of range 1..{b.strands}")
    track = strand_track(b, s)
    kept = []
    for (i, sign), p in zip(reversed(b.letters), track):
        if p in (i, i + 1):
            continue
        kept.append((i - 1 if i > p else i, sign))
    return BraidWord(b.strands - 1, list(reversed(kept)), b.flavor)


# ---------------------------------------------------------------- catalog

CATALOG_SCHEMA = {
    "type": "object",
    "properties": {
        "homology_classes": {
            "type": "object",
            "additionalProperties": {"type": "array", "items": {"type": "integer"}},
        },
    },
    "additionalProperties": {
        "type": "object",
        "required": ["strands", "flavor", "letters"],
        "properties": {
            "strands": {"type": "integer", "minimum": 2},
            "flavor": {"enum": ["DISK", "SPHERE"]},
            "letters": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
            },
            "note": {"type": "string"},
        },
    },
}

FIGURE_NAMES = ("w6", "x", "y", "w_even_family", "psi5")
BUILTIN_DATA = Path(__file__).with_name("data") / "transcriptions.json"


class MissingTranscription(LookupError):
    pass


def data_path(explicit=None):
    if explicit:
        return Path(explicit)
    env = os.environ.get("CURVEDRIFT_DATA")
    if env:
        return Path(env)
    return BUILTIN_DATA


def load_transcriptions(path=None) -> dict:
    p = data_path(path)
    if not p.exists():
        return {}
    with open(p) as fh:
        raw = json.load(fh)
    jsonschema.validate(raw, CATALOG_SCHEMA)
    return raw


def _word_from_entry(entry, strands=None):
    n = strands if strands is not None else entry["strands"]
    return BraidWord(n, [tuple(x) for x in entry["letters"]], entry["flavor"])


def catalog(name, params=None, data=None) -> BraidWord:
    """Named braids. Figure-only families need transcription data.

    params: for x, y and w_even_family a dict with either {"k": k} (2k strands)
    or {"n": n, "branch": "4n+8" | "4n+10"}.
    """
    params = dict(params or {})
    if name == "beta_magic":
        return sigma(3, -1, -1, 2)
    if name == "phi_magic":
        return catalog("beta_magic") ** 2
    if name not in FIGURE_NAMES:
        raise KeyError(f"unknown catalog name {name!r}")
    data = load_transcriptions() if data is None else data
    if name == "w6":
        if "w6" not in data:
            raise MissingTranscription("w6 has no transcription")
        return _word_from_entry(data["w6"])
    if name == "psi5":
        return delete_strand(catalog("w6", data=data).on_disk(), 6)
    if name in ("x", "y"):
        strands = _family_strands(params)
        return _family_member(data, name, strands)
    # w_even_family
    n, branch = params["n"], params.get("branch", "4n+8")
    if branch == "4n+8":
        if n < 1:
            raise ValueError("the 4n+8 branch needs n >= 1")
        x = catalog("x", {"k": 2 * n + 4}, data)
        y = catalog("y", {"k": 2 * n + 4}, data)
        return x * y ** n
    if branch == "4n+10":
        if n < 0:
            raise ValueError("the 4n+10 branch needs n >= 0")
        x = catalog("x", {"k": 2 * n + 5}, data)
        y = catalog("y", {"k": 2 * n + 5}, data)
        return x ** 2 * y ** n
    raise ValueError(f"unknown branch {branch!r}")


def _family_strands(params):
    if "k" in params:
        k = params["k"]
    else:
        n, branch = params["n"], params.get("branch", "4n+8")
        k = 2 * n + 4 if branch == "4n+8" else 2 * n + 5
    if k < 5:
        raise ValueError("x and y are defined for k >= 5")
    return 2 * k


def _family_member(data, name, strands):
    # one literal entry per strand count, keyed "x_12", "y_12", ...
    key = f"{name}_{strands}"
    if key in data:
        return _word_from_entry(data[key])
    if name in data and data[name]["strands"] == strands:
        return _word_from_entry(data[name])
    raise MissingTranscription(f"{name} on {strands} strands has no transcription")


def available(data=None) -> dict:
    data = load_transcriptions() if data is None else data
    out = {"beta_magic": "PAPER-TEXT", "phi_magic": "PAPER-TEXT"}
    for name in FIGURE_NAMES:
        try:
            if name in ("x", "y", "w_even_family"):
                prefixes = ("x", "y") if name == "w_even_family" else (name,)
                ok = all(any(k == p or k.startswith(p + "_") for k in data) for p in prefixes)
            else:
                catalog(name, data=data)
                ok = True
        except MissingTranscription:
            ok = False
        out[name] = "FIGURE-TRANSCRIPTION" if ok else "UNAVAILABLE"
    return out
