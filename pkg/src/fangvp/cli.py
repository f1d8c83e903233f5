"""Command-line front end: ``check``, ``solve``, ``reduce``, ``chain``, ``generate``.

Reports are JSON on stdout. Exit status: 0 when every verdict holds and every
certificate re-verifies, 1 when some verdict fails, 2 on usage or parse
errors. Reports carry no timing unless ``--timing`` is given, so repeated
runs on the same input are byte-identical.
"""
import argparse
import json
import random
import sys
import time
from fractions import Fraction

from . import instance_io
from .discrete_evp import MetricInstance, evpdlc_check
from .errors import (
    FangError,
    InvalidScaling,
    KindMismatch,
    NotITriangular,
    ParseError,
    PassInapplicable,
    PreconditionViolated,
    SuccessorMissing,
    UnknownCheck,
)
from .generators import (
    random_bmlo_family,
    random_fang_instance,
    random_metric_instance,
    random_nonexpansive_instance,
)
from .instance_io import InstanceFile
from .order_core import QuasiOrder, dependent_chain, is_quasi_order
from .pseudometric import (
    bmlo_to_fang,
    rescale,
    sup_reduction,
    validate_family,
)
from .rational import INF, format_ext
from .structures import (
    SeqVerdict,
    canonical_entourages,
    check_selfclosed,
    is_compatible,
    is_fundamental_system,
    maximal_transfer_check,
)
from .variational import (
    KINDS,
    brondsted_order,
    certificate_for,
    ekeland_point,
    family_order,
    gap_compatibility,
    metric_reduction,
    solve,
    verify_certificate,
)

CHECKS = ("family", "entourages", "compatible", "gapcompat", "selfclosed", "transfer", "evpdlc")
PASSES = ("sup", "rescale", "bmlo", "slice")
MAX_BMLO_GENERATORS = 12

USAGE_ERRORS = (ParseError, KindMismatch, PassInapplicable, UnknownCheck)


def jsonable(obj):
    """Convert report payloads to JSON types; rationals become exact strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction) or obj == INF:
        return format_ext(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [jsonable(v) for v in sorted(obj)]
    if isinstance(obj, SeqVerdict):
        return verdict_dict(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def verdict_dict(v: SeqVerdict, name=None):
    out = {} if name is None else {"name": name}
    out["holds"] = v.holds
    if v.witness is not None:
        out["witness"] = jsonable(v.witness)
    if v.info is not None:
        out["info"] = jsonable(v.info)
    return out


def certificate_dict(c):
    return {
        "kind": c.kind,
        "start": c.start,
        "point": c.point,
        "order": [list(p) for p in c.order_used.pairs()],
        "clause1": [{"index": r.index, "lhs": format_ext(r.lhs), "rhs": format_ext(r.rhs)} for r in c.clause1],
        "clause2": [{"x": r.x, "index": r.index, "lhs": format_ext(r.lhs), "rhs": format_ext(r.rhs)}
                    for r in c.clause2] or "vacuous",
    }


def _failure(exc):
    return SeqVerdict(False, {"error": type(exc).__name__, "message": str(exc)})


# --- library-level drivers --------------------------------------------------

def _order_and_objective(inst: InstanceFile):
    if inst.objective is None:
        raise PassInapplicable("this check needs an objective")
    if inst.relation is not None:
        return QuasiOrder(inst.relation.carrier, inst.relation.rel), inst.objective
    if inst.family is None:
        raise PassInapplicable("this check needs distances or an explicit relation")
    return family_order(inst.family, inst.objective), inst.objective


def _entourages(inst: InstanceFile):
    if inst.entourages is not None:
        return inst.entourages
    if inst.family is None:
        raise PassInapplicable("this check needs distances or explicit entourages")
    return canonical_entourages(inst.family)


def _run_one(name, inst: InstanceFile):
    if name == "family":
        if inst.family is None:
            raise PassInapplicable("the family check needs distances")
        report = validate_family(inst.family)
        return [(f"family.{k}", SeqVerdict(f.holds, None if f.holds else f.witness,
                                          {"triangular_map": f.witness} if k == "triangular" and f.holds else None))
                for k, f in report.flags().items()]
    if name == "entourages":
        return [("entourages.fundamental", is_fundamental_system(_entourages(inst)))]
    if name == "compatible":
        q, f = _order_and_objective(inst)
        return [("compatible", is_compatible(_entourages(inst), q, f))]
    if name == "gapcompat":
        q, f = _order_and_objective(inst)
        if inst.family is None:
            raise PassInapplicable("gapcompat needs distances")
        return [("gapcompat", gap_compatibility(inst.family, f, q))]
    if name == "selfclosed":
        q, _ = _order_and_objective(inst)
        if inst.family is None:
            raise PassInapplicable("selfclosed needs distances")
        return [("selfclosed", check_selfclosed(q, inst.family))]
    if name == "transfer":
        q, f = _order_and_objective(inst)
        return [("transfer", maximal_transfer_check(q, f, _entourages(inst)))]
    if name == "evpdlc":
        if inst.family is None or inst.objective is None or not inst.family.is_single():
            raise PassInapplicable("evpdlc needs a single metric and an objective")
        return [("evpdlc", evpdlc_check(MetricInstance(inst.family, inst.objective)))]
    raise UnknownCheck(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")


def run_check(inst: InstanceFile, which):
    """One verdict per selected check; returns ``(verdict list, exit status)``."""
    for name in which:
        if name not in CHECKS:
            raise UnknownCheck(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    verdicts = []
    for name in which:
        try:
            verdicts.extend(_run_one(name, inst))
        except USAGE_ERRORS:
            raise
        except FangError as exc:
            verdicts.append((name, _failure(exc)))
    status = 0 if all(v.holds for _, v in verdicts) else 1
    return [verdict_dict(v, n) for n, v in verdicts], status


def run_solve(inst: InstanceFile, kind, start=None):
    if kind not in KINDS:
        raise KindMismatch(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")
    if inst.family is None or inst.objective is None:
        raise KindMismatch("solving needs distances and an objective")
    if kind == "hamel" and inst.scaling is None:
        raise KindMismatch("hamel needs a scaling block")
    if kind == "ekeland" and not inst.family.is_single():
        raise KindMismatch("ekeland needs exactly one distance matrix")
    vi = inst.variational(start)
    try:
        cert = solve(vi, kind)
    except (PreconditionViolated, InvalidScaling) as exc:
        return {"verdicts": [verdict_dict(_failure(exc), "precondition")]}, 1
    check = verify_certificate(vi, cert)
    report = {"certificate": certificate_dict(cert), "verdicts": [verdict_dict(check, "verify")]}
    return report, 0 if check.holds else 1


def _hamel_order(D, h, f):
    n = D.n_points
    return [[all(h[lam] * m[x][y] <= f[x] - f[y] for lam, m in enumerate(D.dist)) for y in range(n)]
            for x in range(n)]


def run_reduce(inst: InstanceFile, pass_name):
    """Returns ``(report, exit status, reduced InstanceFile or None)``."""
    if pass_name not in PASSES:
        raise PassInapplicable(f"unknown pass {pass_name!r}; choose from {', '.join(PASSES)}")
    if inst.family is None:
        raise PassInapplicable("reductions need distances")
    D = inst.family
    f = inst.objective
    try:
        if pass_name == "sup":
            out = sup_reduction(D)
            att = {"name": "attest.sup"}
            if f is not None:
                same = family_order(D, f).rel == brondsted_order(out, f).rel
                att.update(holds=same, claim="family order equals Brondsted order of the sup distance")
            else:
                att.update(holds=True, claim="no objective; order identity not applicable")
            reduced = InstanceFile(D.carrier, out, f, None, inst.start)
        elif pass_name == "rescale":
            if inst.scaling is None:
                raise PassInapplicable("rescale needs a scaling block")
            out = rescale(D, inst.scaling)
            att = {"name": "attest.rescale"}
            if f is not None:
                same = family_order(out, f).rel == tuple(map(tuple, _hamel_order(D, inst.scaling, f)))
                att.update(holds=same, claim="order of rescaled family equals the scaled-inequality order")
            else:
                att.update(holds=True, claim="no objective; order identity not applicable")
            reduced = InstanceFile(D.carrier, out, f, None, inst.start)
        elif pass_name == "bmlo":
            if D.n_indices > MAX_BMLO_GENERATORS:
                raise PassInapplicable(f"bmlo supports at most {MAX_BMLO_GENERATORS} generators")
            out = bmlo_to_fang(D)
            valid = validate_family(out)
            singletons = all(out.dist[i] == D.dist[i] for i in range(D.n_indices))
            att = {"name": "attest.bmlo", "holds": valid.all_hold() and singletons,
                   "claim": "output is a valid family; singleton indices reproduce the generators"}
            if not valid.all_hold():
                att["witness"] = {"failed": valid.failures()}
            reduced = InstanceFile(D.carrier, out, f, None, inst.start)
        else:
            if f is None:
                raise PassInapplicable("slice needs an objective")
            vi = inst.variational()
            sl = metric_reduction(vi)
            v = sl.lift(ekeland_point(sl.instance).point)
            cert = certificate_for(vi, v, "hamel" if vi.scaling is not None else "fang")
            check = verify_certificate(vi, cert)
            att = {"name": "attest.slice", "holds": check.holds, "points": list(sl.points), "point": v,
                   "claim": "metric solve on the slice certifies on the original instance"}
            reduced = InstanceFile.from_variational(sl.instance)
    except (PreconditionViolated, InvalidScaling, NotITriangular) as exc:
        return {"verdicts": [verdict_dict(_failure(exc), "precondition")]}, 1, None
    return {"verdicts": [att]}, 0 if att["holds"] else 1, reduced


def run_chain(inst: InstanceFile, start):
    if inst.relation is None:
        raise PassInapplicable("chain needs a relation block")
    try:
        s = dependent_chain(inst.relation, start)
    except SuccessorMissing as exc:
        return {"verdicts": [verdict_dict(SeqVerdict(False, {"successor_missing": exc.point}), "chain")]}, 1
    return {"chain": {"prefix": list(s.prefix), "cycle": list(s.cycle)},
            "verdicts": [{"name": "chain", "holds": True,
                          "info": {"quasi_order": is_quasi_order(inst.relation)}}]}, 0


def generate(seed, family_kind="fang"):
    rng = random.Random(seed)
    if family_kind == "fang":
        return InstanceFile.from_variational(random_fang_instance(rng))
    if family_kind == "metric":
        return InstanceFile.from_variational(random_metric_instance(rng))
    if family_kind == "nonexpansive":
        m = random_nonexpansive_instance(rng)
        return InstanceFile(m.carrier, m.family, m.objective)
    if family_kind == "bmlo":
        n = rng.randint(1, 6)
        F = random_bmlo_family(rng, n, rng.randint(1, 4))
        return InstanceFile(F.carrier, F)
    raise KindMismatch(f"unknown generator {family_kind!r}")


# --- argument parsing --------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--input", "-i", help="instance file (JSON)")
    src.add_argument("--seed", type=int, help="use a random valid instance from this seed")
    common.add_argument("--output", "-o", help="write the reduced/generated instance here")
    common.add_argument("--timing", action="store_true", help="add elapsed time to the report")

    parser = argparse.ArgumentParser(prog="fangvp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="evaluate structural checks")
    for name in CHECKS:
        p.add_argument(f"--{name}", action="append_const", const=name, dest="checks")
    p.add_argument("--all", action="store_true", help="every applicable check")

    p = sub.add_parser("solve", parents=[common], help="compute and verify a variational point")
    p.add_argument("kind", nargs="?", choices=KINDS)
    p.add_argument("--kind", dest="kind_opt", choices=KINDS)
    p.add_argument("--start", "-u", type=int)

    p = sub.add_parser("reduce", parents=[common], help="apply a reduction pass")
    p.add_argument("pass_name", metavar="pass", choices=PASSES)

    p = sub.add_parser("chain", parents=[common], help="least-successor dependent chain")
    p.add_argument("--start", "-u", type=int, default=0)

    p = sub.add_parser("generate", parents=[common], help="emit a random instance")
    p.add_argument("--kind", dest="gen_kind", default="fang",
                   choices=("fang", "metric", "nonexpansive", "bmlo"))
    return parser


def _applicable_checks(inst: InstanceFile):
    names = []
    if inst.family is not None:
        names += ["family", "entourages"]
    elif inst.entourages is not None:
        names.append("entourages")
    if inst.objective is not None and (inst.family is not None or inst.relation is not None):
        if inst.family is not None or inst.entourages is not None:
            names += ["compatible", "transfer"]
        if inst.family is not None:
            names += ["gapcompat", "selfclosed"]
            if inst.family.is_single():
                names.append("evpdlc")
    return names


def _load(args):
    if args.seed is not None:
        return generate(args.seed)
    if args.input is None:
        raise ParseError("give --input FILE or --seed N")
    try:
        return instance_io.load(args.input)
    except OSError as exc:
        raise ParseError(f"cannot read {args.input}: {exc.strerror}") from None


def _run(args):
    echo = {"command": args.command}
    if args.input is not None:
        echo["input"] = args.input
    if args.seed is not None:
        echo["seed"] = args.seed

    if args.command == "generate":
        inst = generate(0 if args.seed is None else args.seed, args.gen_kind)
        echo["kind"] = args.gen_kind
        if args.output:
            instance_io.dump(inst, args.output)
            return {"command": echo, "verdicts": [], "output": args.output}, 0
        return {"command": echo, "instance": instance_io.to_dict(inst)}, 0

    inst = _load(args)
    if args.command == "check":
        which = list(dict.fromkeys(args.checks or []))
        if args.all or not which:
            which = _applicable_checks(inst)
        echo["checks"] = which
        verdicts, status = run_check(inst, which)
        return {"command": echo, "verdicts": verdicts}, status
    if args.command == "solve":
        kind = args.kind or args.kind_opt
        if kind is None:
            raise KindMismatch("choose a kind: " + ", ".join(KINDS))
        if args.kind and args.kind_opt and args.kind != args.kind_opt:
            raise KindMismatch("conflicting kinds")
        if args.start is not None:
            inst.carrier.check_point(args.start)
        echo["kind"] = kind
        echo["start"] = args.start if args.start is not None else (inst.start or 0)
        body, status = run_solve(inst, kind, args.start)
        return {"command": echo, **body}, status
    if args.command == "reduce":
        echo["pass"] = args.pass_name
        body, status, reduced = run_reduce(inst, args.pass_name)
        report = {"command": echo, **body}
        if reduced is not None:
            if args.output:
                instance_io.dump(reduced, args.output)
                report["output"] = args.output
            else:
                report["instance"] = instance_io.to_dict(reduced)
        return report, status
    if args.command == "chain":
        inst.carrier.check_point(args.start)
        echo["start"] = args.start
        body, status = run_chain(inst, args.start)
        return {"command": echo, **body}, status
    raise AssertionError(args.command)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        report, status = _run(args)
    except (USAGE_ERRORS + (IndexError,)) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}, indent=2), file=sys.stderr)
        return 2
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    sys.stdout.write(json.dumps(report, indent=2) + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
