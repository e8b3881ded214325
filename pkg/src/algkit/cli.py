"""Command-line front end: `algkit <command> ...`.

Exit status 0 means every check held, 1 means a mathematical check failed
(the report says where), 2 means the input was malformed or the request
made no sense.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources
from typing import Sequence

from . import io
from .core import ModuleMap, OperatorMatrix, PreconditionError, StructuralError
from .deformations import (VEE_RULES, Filtration, TruncatedDeformation, graded_from_filtration,
                           semiclassical_limit, verify_deformation, verify_ns_lie_filtration)
from .graded import GradedPresentation, graded_subadjacent, verify_graded
from .operators import (deform_by_nijenhuis, induce_from_nijenhuis, induce_from_reynolds, nijenhuis_hierarchy,
                        verify_derivation, verify_nijenhuis, verify_reynolds)
from .report import VerificationReport
from .reps import (CocyclePair, RepresentationPresentation, canonical_twisted_factorization, induce_from_twisted_rb,
                   verify_poisson_2cocycle, verify_representation, verify_twisted_rb)
from .structures import (AlgebraPresentation, embed, f_defect_tensors, hertling_manin_tensor, subadjacent,
                         verify_structure)


class UsageError(StructuralError):
    pass


def gallery_names() -> list[str]:
    root = resources.files("algkit") / "gallery"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def _read(path: str, stdin) -> bytes:
    if path == "-":
        return stdin.buffer.read() if hasattr(stdin, "buffer") else stdin.read().encode()
    if path.startswith("gallery:"):
        name = path[len("gallery:"):]
        if name not in gallery_names():
            raise UsageError(f"no gallery document {name!r}")
        return (resources.files("algkit") / "gallery" / f"{name}.json").read_bytes()
    try:
        with open(path, "rb") as f:
            return f.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


class Session:
    def __init__(self, args, stdin, stdout, stderr):
        self.args, self.stdin, self.stdout, self.stderr = args, stdin, stdout, stderr
        self.bindings = dict(io.parse_binding(b) for b in args.set or ())
        self.reports: list[VerificationReport] = []

    def load(self, path: str, *types):
        obj = io.parse_document(_read(path, self.stdin), self.bindings)
        if types and not isinstance(obj, types):
            want = " or ".join(t.__name__ for t in types)
            raise UsageError(f"{path} holds a {type(obj).__name__}, expected {want}")
        return obj

    def report(self, rep: VerificationReport):
        self.reports.append(rep)
        return rep

    def emit(self, doc):
        data = io.serialize_document(doc)
        if self.args.out:
            with open(self.args.out, "wb") as f:
                f.write(data)
        else:
            out = getattr(self.stdout, "buffer", None)
            out.write(data) if out is not None else self.stdout.write(data.decode())
            self.stdout.flush()

    def finish(self) -> int:
        if not self.reports:
            return 0
        data = io.dumps(io.report_dict(self.reports))
        if self.args.report:
            with open(self.args.report, "wb") as f:
                f.write(data)
        else:
            self.stderr.write(data.decode())
            self.stderr.flush()
        return 0 if all(r.holds for r in self.reports) else 1


def _operator(s: Session, path: str) -> OperatorMatrix:
    return s.load(path, OperatorMatrix)


# ---------------------------------------------------------------------------
# commands

def cmd_check(s, a):
    obj = s.load(a.file, AlgebraPresentation, GradedPresentation, TruncatedDeformation)
    if isinstance(obj, AlgebraPresentation):
        s.report(verify_structure(obj))
    elif isinstance(obj, GradedPresentation):
        s.report(verify_graded(obj))
    else:
        s.report(verify_deformation(obj))


OP_CHECKS = {"nijenhuis": verify_nijenhuis, "reynolds": verify_reynolds, "derivation": verify_derivation}


def cmd_op_check(s, a):
    A = s.load(a.algebra, AlgebraPresentation)
    s.report(OP_CHECKS[a.as_](A, _operator(s, a.operator)))


def cmd_induce(s, a):
    A, T = s.load(a.algebra, AlgebraPresentation), _operator(s, a.operator)
    check = verify_nijenhuis if a.via == "nijenhuis" else verify_reynolds
    rep = s.report(check(A, T))
    if a.strict and not rep.holds:
        return
    induce = induce_from_nijenhuis if a.via == "nijenhuis" else induce_from_reynolds
    s.emit(induce(A, T, strict=False))


def cmd_deform_by(s, a):
    A, N = s.load(a.algebra, AlgebraPresentation), _operator(s, a.operator)
    if s.report(verify_nijenhuis(A, N)).holds:
        s.emit(deform_by_nijenhuis(A, N))


def cmd_subadjacent(s, a):
    s.emit(subadjacent(s.load(a.algebra, AlgebraPresentation)))


def cmd_hierarchy(s, a):
    try:
        powers = [int(p) for p in a.powers.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"--powers takes comma-separated integers, got {a.powers!r}") from None
    if not powers or min(powers) < 0:
        raise UsageError("--powers needs at least one non-negative integer")
    A = s.load(a.algebra, AlgebraPresentation)
    s.report(nijenhuis_hierarchy(A, _operator(s, a.operator), powers, strict=False))


def cmd_rep_check(s, a):
    A = s.load(a.algebra, AlgebraPresentation)
    s.report(verify_representation(A, s.load(a.representation, RepresentationPresentation)))


def _twisted_inputs(s, a, with_map):
    A = s.load(a.algebra, AlgebraPresentation)
    V = s.load(a.representation, RepresentationPresentation)
    c = s.load(a.cocycle, CocyclePair)
    R = s.load(a.map, ModuleMap, OperatorMatrix) if with_map else None
    if isinstance(R, OperatorMatrix):
        R = ModuleMap(R.source, R.target, R.matrix)
    return A, V, c, R


def cmd_cocycle_check(s, a):
    s.report(verify_poisson_2cocycle(*_twisted_inputs(s, a, False)[:3]))


def cmd_twisted_check(s, a):
    s.report(verify_twisted_rb(*_twisted_inputs(s, a, True)))


def cmd_twisted_induce(s, a):
    A, V, c, R = _twisted_inputs(s, a, True)
    if s.report(verify_twisted_rb(A, V, c, R)).holds:
        s.emit(induce_from_twisted_rb(A, V, c, R, strict=False))


def cmd_factorize(s, a):
    A = s.load(a.algebra, AlgebraPresentation)
    base, V, c, R = canonical_twisted_factorization(A)
    rep = VerificationReport("canonical factorization")
    rep.extend(verify_twisted_rb(base, V, c, R))
    round_trip = induce_from_twisted_rb(base, V, c, R, strict=False).equals(A)
    if not round_trip:
        raise AssertionError("factorization does not reproduce its input")
    s.report(rep)
    s.emit(io.bundle_dict({"algebra": base, "representation": V, "cocycle": c, "map": R}))


def cmd_limit(s, a):
    s.emit(semiclassical_limit(s.load(a.deformation, TruncatedDeformation)))


def cmd_filtration_check(s, a):
    A, F = s.load(a.algebra, AlgebraPresentation), s.load(a.filtration, Filtration)
    s.report(verify_ns_lie_filtration(A, F, a.vee_rule))


def cmd_grade(s, a):
    A, F = s.load(a.algebra, AlgebraPresentation), s.load(a.filtration, Filtration)
    s.emit(graded_from_filtration(A, F, a.vee_rule))


def cmd_embed(s, a):
    s.emit(embed(s.load(a.algebra, AlgebraPresentation), a.as_))


def cmd_defects(s, a):
    A = s.load(a.algebra, AlgebraPresentation)
    tables = dict(zip(("F1", "F2", "F3"), f_defect_tensors(A)))
    s.emit(io.table_dict("ns-f-manifold defects", A.space, ("x", "y", "z"), tables))


def cmd_hm(s, a):
    A = s.load(a.algebra, AlgebraPresentation)
    s.emit(io.table_dict("hertling-manin", A.space, ("x", "y", "z"), {"P": hertling_manin_tensor(A)}))


def cmd_graded_subadjacent(s, a):
    s.emit(graded_subadjacent(s.load(a.algebra, GradedPresentation), strict=False))


def cmd_gallery(s, a):
    if a.name is None:
        s.stdout.write("\n".join(gallery_names()) + "\n")
        return
    s.emit(json.loads(_read(f"gallery:{a.name}", s.stdin)))


# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--set", action="append", metavar="NAME=VALUE", help="bind a document parameter")
    common.add_argument("--out", help="write the output document here instead of stdout")
    common.add_argument("--report", help="write the report here instead of stderr")
    common.add_argument("--threads", type=int, help="worker threads for the kernels")

    p = _Parser(prog="algkit", description="Exact checks for NS-Poisson, F-manifold and related structures.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, *positional, help=None):
        c = sub.add_parser(name, parents=[common], help=help)
        for arg in positional:
            c.add_argument(arg)
        c.set_defaults(fn=fn)
        return c

    add("check", cmd_check, "file", help="verify an algebra, graded algebra or deformation")
    add("op-check", cmd_op_check, "algebra", "operator", help="check an operator against an algebra").add_argument(
        "--as", dest="as_", required=True, choices=sorted(OP_CHECKS))
    c = add("induce", cmd_induce, "algebra", "operator", help="NS structure induced by an operator")
    c.add_argument("--via", required=True, choices=("nijenhuis", "reynolds"))
    c.add_argument("--strict", action="store_true", help="emit nothing unless the operator check holds")
    add("deform-by", cmd_deform_by, "algebra", "operator", help="same-kind deformation by a Nijenhuis operator")
    add("subadjacent", cmd_subadjacent, "algebra", help="recombine an NS structure into its base kind")
    add("graded-subadjacent", cmd_graded_subadjacent, "algebra", help="subadjacent of an ns-gerstenhaber algebra")
    add("hierarchy", cmd_hierarchy, "algebra", "operator", help="powers of N and sums of their induced structures").add_argument("--powers", default="0,1,2,3")
    add("rep-check", cmd_rep_check, "algebra", "representation", help="check a representation")
    add("cocycle-check", cmd_cocycle_check, "algebra", "representation", "cocycle", help="check a Poisson 2-cocycle")
    add("twisted-check", cmd_twisted_check, "algebra", "representation", "cocycle", "map",
        help="check a twisted Rota-Baxter map")
    add("twisted-induce", cmd_twisted_induce, "algebra", "representation", "cocycle", "map",
        help="NS-Poisson structure induced by a twisted Rota-Baxter map")
    add("factorize", cmd_factorize, "algebra", help="split an NS-Poisson algebra into map, cocycle and module")
    add("limit", cmd_limit, "deformation", help="semi-classical limit of a truncated deformation")
    for name, fn, hint in (("filtration-check", cmd_filtration_check, "check an NS-Lie filtration"),
                           ("grade", cmd_grade, "associated graded NS-Poisson algebra")):
        add(name, fn, "algebra", "filtration", help=hint).add_argument("--vee-rule", default="printed", choices=VEE_RULES)
    add("embed", cmd_embed, "algebra", help="view a structure as one of a richer kind").add_argument("--as", dest="as_", required=True)
    add("defects", cmd_defects, "algebra", help="F1, F2, F3 defect tables")
    add("hm", cmd_hm, "algebra", help="Hertling-Manin P table")
    add("gallery", cmd_gallery, help="list or print bundled example documents").add_argument("name", nargs="?")
    return p


def run_command(argv: Sequence[str], stdin=None, stdout=None, stderr=None) -> int:
    stdin, stdout, stderr = stdin or sys.stdin, stdout or sys.stdout, stderr or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        if args.threads is not None:
            if args.threads < 1:
                raise UsageError("--threads must be positive")
            os.environ["ALGKIT_THREADS"] = str(args.threads)
        s = Session(args, stdin, stdout, stderr)
        try:
            args.fn(s, args)
        except PreconditionError as e:
            # a prerequisite check failed: report it, emit nothing
            s.report(e.report)
        return s.finish()
    except (StructuralError, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        stderr.write(f"algkit: error: {msg}\n")
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
