"""Command-line front end: curvedrift {catalog,bound,sweep,verify,report}."""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import braid, homology, lift, occupancy, zcover
from .curves import LaminationCoord, apply_letters

EXIT_OK, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2


class VerificationFailure(Exception):
    pass


def parse_range(text):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise zcover.PreconditionError(f"--n-range expects A..B, got {text!r}") from None
    if lo > hi:
        raise zcover.PreconditionError(f"empty range {text}")
    return range(lo, hi + 1)


def _data(args):
    return braid.load_transcriptions(args.data)


# ---------------------------------------------------------------- commands


def cmd_catalog(args, out):
    data = _data(args)
    out.write("braids:\n")
    for name, status in braid.available(data).items():
        out.write(f"  {name}: {status}\n")
    out.write("families:\n")
    for name in zcover.FAMILIES:
        try:
            s, source = zcover.family_spread(name, data)
            out.write(f"  {name}: spread {s} from {source}\n")
        except zcover.UnavailableFamily as exc:
            out.write(f"  {name}: UNAVAILABLE ({exc})\n")
    out.write("  hyperelliptic: lift of the occupancy disk certificate\n")
    out.write("  handlebody: lift of the wicket families (needs their spreads)\n")
    return EXIT_OK


def _certificate(family, args, data):
    if family == "hyperelliptic":
        return lift.hyperelliptic_certificate(_need(args, "g"))
    if family == "handlebody":
        return lift.handlebody_certificate(_need(args, "g"), data)
    if family not in zcover.FAMILIES:
        raise zcover.PreconditionError(f"unknown family {family!r}; see `curvedrift catalog`")
    return zcover.certified_bound(family, _need(args, "n"), data)


def _need(args, flag):
    v = getattr(args, flag)
    if v is None:
        raise zcover.PreconditionError(f"--{flag} is required")
    return v


def cmd_bound(args, out):
    cert = _certificate(_need(args, "family"), args, _data(args))
    out.write(json.dumps(cert.to_dict(), indent=2) + "\n")
    return EXIT_OK


def cmd_sweep(args, out):
    family = _need(args, "family")
    if family not in lift.REPORT_FAMILIES:
        raise zcover.PreconditionError(f"unknown family {family!r}")
    rng = parse_range(_need(args, "n_range"))
    rows = lift.build_report([family], rng, _data(args))
    text = lift.to_csv(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    C = lift.fitted_constant(rows)
    if C is not None:
        # diagnostic line, not data
        sys.stderr.write(f"# diagnostic: upper <= C/n^2 with C = {float(C):.4f}\n")
    return EXIT_OK


def cmd_report(args, out):
    rng = parse_range(args.n_range or "4..10")
    params = {f: rng for f in lift.REPORT_FAMILIES}
    params["hyperelliptic"] = [p for p in rng if p >= 3]
    rows = lift.build_report(lift.REPORT_FAMILIES, params, _data(args))
    text = lift.to_csv(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    bad = [r for r in rows if r["consistent"] == "false"]
    if bad:
        raise VerificationFailure(f"lower > upper on row {bad[0]}")
    return EXIT_OK


# ---------------------------------------------------------------- suites


def suite_occupancy(args, out):
    n = args.n if args.n is not None else 6
    M = occupancy.max_disjoint_exponent(n)
    for line in occupancy.trace_lines(n)[: M + 1]:
        out.write(line + "\n")
    if M != n * n - 4 * n + 2:
        raise VerificationFailure(f"n={n}: max disjoint exponent {M} != {n * n - 4 * n + 2}")
    trace = dict(occupancy.run_trace(n))
    for k in range(2, n - 1):
        e = (k - 1) * n - k
        want = occupancy.OccupancyState(n, False, (n - k, n - 1))
        if trace.get(e) != want:
            raise VerificationFailure(f"n={n}, k={k}: exponent {e} has {trace.get(e)}, expected {want}")
    out.write(f"max disjoint exponent {M}\n")


def suite_homology(args, out):
    basis = homology.SymplecticSurfaceBasis(2)
    classes = braid.load_transcriptions(args.data).get("homology_classes")
    if not classes:
        raise VerificationFailure("no genus-2 homology classes in the transcription data")
    M = homology.twist_action_matrix(homology.GENUS2_WORD, classes, basis)
    if M.tolist() != homology.GENUS2_PRINTED:
        raise VerificationFailure(f"twist product {M.tolist()} differs from {homology.GENUS2_PRINTED}")
    fixed = homology.fixed_primitive_cohomology(M)
    if len(fixed) != 1 or not fixed[0].primitive:
        raise VerificationFailure(f"fixed covectors {fixed}, expected one primitive")
    out.write(f"action matches; fixed covector {fixed[0].coefficients}\n")


def suite_dynnikov(args, out, trials=1000, seed=0):
    rng = np.random.default_rng(seed)
    top = args.n if args.n is not None else 10
    for N in range(3, top + 1):
        for _ in range(trials):
            x = LaminationCoord(N, rng.integers(-20, 21, 2 * N - 4))
            i = int(rng.integers(1, N))
            s = int(rng.choice([-1, 1]))
            if apply_letters(x, [(i, s), (i, -s)]) != x:
                raise VerificationFailure(f"N={N}: s{i}^{s} s{i}^{-s} moves {x.coords}")
            if i < N - 1:
                lhs = apply_letters(x, [(i, 1), (i + 1, 1), (i, 1)])
                rhs = apply_letters(x, [(i + 1, 1), (i, 1), (i + 1, 1)])
                if lhs != rhs:
                    raise VerificationFailure(f"N={N}: braid relation at {i} fails on {x.coords}")
            far = [j for j in range(1, N) if abs(j - i) >= 2]
            if far:
                j = int(rng.choice(far))
                if apply_letters(x, [(i, 1), (j, 1)]) != apply_letters(x, [(j, 1), (i, 1)]):
                    raise VerificationFailure(f"N={N}: s{i} and s{j} do not commute on {x.coords}")
    out.write(f"relations hold for N = 3..{top}, {trials} samples each\n")


def suite_crosscheck(args, out):
    rng = parse_range(args.n_range or "4..200")
    s = zcover.SpreadInterval(-1, 0)
    for n in rng:
        r = zcover.optimized_parameters(n, s)["r"]
        M = occupancy.max_disjoint_exponent(n)
        if not r == M == n * n - 4 * n + 2:
            raise VerificationFailure(f"n={n}: optimized r={r}, occupancy {M}, closed form {n * n - 4 * n + 2}")
    out.write(f"optimized r = occupancy exponent = n^2-4n+2 for n in {rng.start}..{rng.stop - 1}\n")


SUITES = {"occupancy": suite_occupancy, "homology": suite_homology,
          "dynnikov": suite_dynnikov, "crosscheck": suite_crosscheck}


def cmd_verify(args, out):
    suite = _need(args, "suite")
    if suite not in SUITES:
        raise zcover.PreconditionError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    SUITES[suite](args, out)
    return EXIT_OK


COMMANDS = {"catalog": cmd_catalog, "bound": cmd_bound, "sweep": cmd_sweep,
            "verify": cmd_verify, "report": cmd_report}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise zcover.PreconditionError(message)


def build_parser():
    p = _Parser(prog="curvedrift", description=__doc__)
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--family")
    p.add_argument("--n", type=int)
    p.add_argument("--n-range", dest="n_range")
    p.add_argument("--g", type=int)
    p.add_argument("--out")
    p.add_argument("--suite")
    p.add_argument("--data", help="transcription JSON (default: $CURVEDRIFT_DATA, then the bundled file)")
    return p


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except VerificationFailure as exc:
        err.write(f"verification failed: {exc}\n")
        return EXIT_VERIFY
    except (zcover.PreconditionError, zcover.UnavailableFamily, KeyError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PRECONDITION


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
