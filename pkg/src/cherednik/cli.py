"""Command line front end.

Every subcommand is a thin adapter: parse exact parameters, call one
library operation, serialize the report.  Exit codes: 0 success, 1 a
mathematical identity failed, 2 usage error.
"""
import argparse
import json
import sys
from fractions import Fraction

from . import poly
from .calogero_moser import dirac_partition
from .clifford import pin_tau, polarized_algebra, spin_action
from .dirac import (
    UnknownIrrep,
    delta_element,
    dirac_element,
    dirac_split,
    verify_dirac_square,
)
from .groups import UnknownGroup, build_group
from .modules import (
    WindowExceedsCap,
    baby_verma,
    dirac_cohomology,
    one_dimensional_quotient,
    standard_module,
    unitarity_report,
)
from .pbw import cherednik_family, corrupted_family, gaha_family, pbw_check
from .scalars import parse_scalar, scalar_str


class UsageError(Exception):
    pass


def _parse_c(entries):
    """--c 1/2 gives a constant; repeated --c long=1 --c short=1/2 gives a
    per-class map."""
    if not entries:
        return Fraction(1)
    pairs = [e for e in entries if "=" in e]
    plain = [e for e in entries if "=" not in e]
    if pairs and plain:
        raise UsageError("mix of per-class and constant --c values")
    if plain:
        if len(plain) > 1:
            raise UsageError("more than one constant --c value")
        return parse_scalar(plain[0])
    out = {}
    for e in pairs:
        name, _, val = e.partition("=")
        out[name.strip()] = parse_scalar(val)
    return out


def _load_config(path):
    cfg = {}
    try:
        with open(path) as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"bad config line: {raw.strip()!r}")
                key, _, val = line.partition("=")
                cfg[key.strip()] = val.strip()
    except OSError as err:
        raise UsageError(f"cannot read config file: {err}")
    return cfg


def _apply_config(args):
    """Fill unset flags from the key-value file; flags win."""
    if not getattr(args, "config", None):
        return
    cfg = _load_config(args.config)
    for key, val in cfg.items():
        if key == "c":
            if not args.c:
                args.c = [part.strip() for part in val.split(",")]
        elif key == "simple":
            if not args.simple:
                args.simple = val.lower() in ("1", "true", "yes")
        elif hasattr(args, key):
            if getattr(args, key) is None:
                setattr(args, key, val)
        else:
            raise UsageError(f"unknown config key {key!r}")


def _json_text(payload):
    return json.dumps(payload, indent=2, sort_keys=True,
                      default=scalar_str) + "\n"


def _emit(args, payload, table_lines):
    if args.format == "json":
        text = _json_text(payload)
    else:
        text = "\n".join(table_lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _c_strings(c):
    if isinstance(c, dict):
        return {name: scalar_str(v) for name, v in sorted(c.items())}
    return scalar_str(c)


def _build_family(args, group, t, c):
    preset = args.preset or "cherednik"
    if preset == "cherednik":
        return cherednik_family(group, t, c, check=False)
    if preset == "gaha":
        return gaha_family(group, c, check=False)
    if preset == "corrupted":
        return corrupted_family(group, kind=args.kind)
    raise UsageError(f"unknown preset {preset!r}")


# --------------------------------------------------------------------------
# subcommands


def cmd_verify(args):
    group = build_group(args.group)
    t = parse_scalar(args.t or "1")
    c = _parse_c(args.c)
    fam = _build_family(args, group, t, c)

    identities = []

    def record(name, passed):
        identities.append({"identity": name, "passed": passed})

    record("pbw", pbw_check(fam)["passed"])
    if identities[0]["passed"]:
        record("dirac-square", verify_dirac_square(fam)["equality"])
        if fam.space == "polarized":
            # the x/y split and the diagonal embedding only exist there
            dx, dy = dirac_split(fam)
            d = dirac_element(fam)
            record("split-squares", (not dx * dx) and (not dy * dy)
                   and dx + dy == d)
            record("delta-invariance",
                   all(delta_element(fam, w) * d == d * delta_element(fam, w)
                       for w in group.generator_indices))
        alg = polarized_algebra(group.n)
        taus = [pin_tau(w, group, alg) for w in range(group.order)]
        hom = all(taus[u] * taus[v] == taus[group.mult(u, v)]
                  for u in range(group.order) for v in range(group.order))
        wedge_ok = True
        for w in range(group.order):
            m = spin_action(taus[w], alg)
            off = 0
            for l in range(group.n + 1):
                b = poly.wedge_matrix(group.elements[w], l)
                for i in range(len(b)):
                    for j in range(len(b)):
                        if m[off + i][off + j] != b[i][j]:
                            wedge_ok = False
                off += len(b)
        record("pin-cover", hom and wedge_ok)
    else:
        for name in ("dirac-square", "split-squares", "delta-invariance",
                     "pin-cover"):
            record(name, None)

    ok = all(e["passed"] for e in identities)
    payload = {
        "group": group.catalogue_id,
        "preset": fam.preset_tag,
        "t": scalar_str(t),
        "c": _c_strings(c),
        "identities": identities,
        "passed": ok,
    }
    lines = [f"group {group.catalogue_id}  preset {fam.preset_tag}"]
    for e in identities:
        state = {True: "pass", False: "FAIL", None: "skipped"}[e["passed"]]
        lines.append(f"  {e['identity']:<17} {state}")
    _emit(args, payload, lines)
    return 0 if ok else 1


def _build_module(args, group, t, c):
    sigma = args.sigma
    if sigma is None:
        raise UsageError("--sigma is required")
    if args.simple:
        if t != 0:
            raise UsageError("--simple needs --t 0")
        try:
            return one_dimensional_quotient(group, sigma, c)
        except ValueError as err:
            raise UsageError(str(err))
    if t == 0:
        return baby_verma(group, sigma, c)
    if t == 1:
        return standard_module(group, sigma, c, K=args.K or 4)
    raise UsageError("modules are implemented at t = 0 and t = 1")


def cmd_dirac_cohomology(args):
    group = build_group(args.group)
    t = parse_scalar(args.t or "1")
    c = _parse_c(args.c)
    module = _build_module(args, group, t, c)
    report = dirac_cohomology(module)
    report["t"] = scalar_str(t)
    report["c"] = _c_strings(c)
    lines = [f"H_D for {report['kind']} module of {args.sigma} over "
             f"{group.catalogue_id}"]
    for entry in report["H_D"]:
        cells = " ".join(f"({k},{l})" for k, l in entry["cells"])
        lines.append(f"  {entry['irrep']:<8} x{entry['multiplicity']}  "
                     f"cells {cells}")
    if not report["H_D"]:
        lines.append("  (zero)")
    _emit(args, report, lines)
    return 0


def cmd_partition(args):
    group = build_group(args.group)
    c = _parse_c(args.c)
    payload = dirac_partition(group, c).to_data()
    lines = [f"Dirac partition of Irr({group.catalogue_id})"]
    for i, block in enumerate(payload["blocks"]):
        lines.append(f"  block {i}: " + " ".join(block))
    for entry in payload["undecided_pairs"]:
        a, b = entry["pair"]
        lines.append(f"  undecided: {a} ~ {b}")
    _emit(args, payload, lines)
    return 0


def cmd_unitarity(args):
    group = build_group(args.group)
    if args.sigma is None:
        raise UsageError("--sigma is required")
    c = _parse_c(args.c)
    report = unitarity_report(group, args.sigma, c, K=args.K or 4)
    report["t"] = "1/1"
    report["c"] = _c_strings(c)
    lines = [f"unitarity report for M({args.sigma}) over "
             f"{group.catalogue_id}"]
    for v in report["gram_verdicts"]:
        state = "psd" if v["psd"] else "NOT psd"
        lines.append(f"  degree {v['degree']}: {state}")
    for v in report["violations"]:
        where = f" at (k,l)=({v['k']},{v['l']})" if "k" in v else \
            f" at l={v['l']}"
        lines.append(f"  violation ({v['module']}): mu {v['mu']}{where} "
                     f"gap {v['gap']} > {v['bound']}")
    lines.append(f"  consistent: {report['consistent']}")
    _emit(args, report, lines)
    return 0


def cmd_export_group(args):
    group = build_group(args.group)
    mstr = lambda m: [[scalar_str(v) for v in row] for row in m]
    payload = {
        "catalogue_id": group.catalogue_id,
        "order": group.order,
        "n": group.n,
        "generator_indices": list(group.generator_indices),
        "invariant_degrees": list(group.invariant_degrees),
        "class_names": list(group.class_names),
        "conjugacy_classes": [list(cl) for cl in group.conjugacy_classes],
        "irrep_labels": list(group.irrep_labels),
        "irrep_dims": list(group.irrep_dims),
        "character_table": [[scalar_str(v) for v in row]
                            for row in group.character_table],
        "elements": [mstr(m) for m in group.elements],
        "reflections": [{
            "element_index": r.element_index,
            "class_name": r.class_name,
            "alpha": [scalar_str(v) for v in r.alpha],
            "alpha_check": [scalar_str(v) for v in r.alpha_check],
            "lambda": scalar_str(r.lam),
        } for r in group.reflections],
    }
    lines = [
        f"group {group.catalogue_id}: order {group.order}, rank {group.n}",
        f"  classes: {' '.join(group.class_names)}",
        f"  irreps:  {' '.join(group.irrep_labels)}",
        f"  reflections: {len(group.reflections)}",
        f"  invariant degrees: "
        + " ".join(str(d) for d in group.invariant_degrees),
    ]
    _emit(args, payload, lines)
    return 0


def cmd_pbw_check(args):
    group = build_group(args.group)
    t = parse_scalar(args.t or "1")
    c = _parse_c(args.c)
    fam = _build_family(args, group, t, c)
    report = pbw_check(fam)
    report["group"] = group.catalogue_id
    report["preset"] = fam.preset_tag
    lines = [f"pbw check for {group.catalogue_id} preset {fam.preset_tag}: "
             + ("pass" if report["passed"] else "FAIL")]
    for f in report["failures"]:
        lines.append(f"  condition {f['condition']} at w={f['w']}: "
                     f"{f.get('detail', '')}")
    _emit(args, report, lines)
    return 0 if report["passed"] else 1


# --------------------------------------------------------------------------
# wiring


def _add_common(sub):
    sub.add_argument("--group", required=False)
    sub.add_argument("--t", default=None)
    sub.add_argument("--c", action="append", default=None,
                     help="constant value or repeatable class=value")
    sub.add_argument("--K", type=int, default=None)
    sub.add_argument("--sigma", default=None)
    sub.add_argument("--format", choices=("json", "table"), default=None)
    sub.add_argument("--out", default=None)
    sub.add_argument("--preset", default=None,
                     choices=("cherednik", "gaha", "corrupted"))
    sub.add_argument("--kind", default=None,
                     help="corruption kind for --preset corrupted")
    sub.add_argument("--simple", action="store_true",
                     help="use the one-dimensional quotient at t = 0")
    sub.add_argument("--config", default=None,
                     help="key=value file; explicit flags win")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cherednik",
        description="exact Dirac-operator computations for rational "
                    "Cherednik and graded Hecke algebras")
    subs = parser.add_subparsers(dest="command", required=True)
    handlers = {
        "verify": cmd_verify,
        "dirac-cohomology": cmd_dirac_cohomology,
        "partition": cmd_partition,
        "unitarity": cmd_unitarity,
        "export-group": cmd_export_group,
        "pbw-check": cmd_pbw_check,
    }
    for name, handler in handlers.items():
        sub = subs.add_parser(name)
        _add_common(sub)
        sub.set_defaults(handler=handler)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        if args.format is None:
            args.format = "table"
        if not args.group:
            raise UsageError("--group is required")
        return args.handler(args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except UnknownIrrep as err:
        print(f"error: unknown irrep label {err}", file=sys.stderr)
        return 2
    except UnknownGroup as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except WindowExceedsCap as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ZeroDivisionError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
