"""Command-line front end.

Exit status: 0 on success, 1 when a check or table comparison fails, 2 on a
usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Mapping, Sequence

from .algebras import REGISTRY, algebra, parse_element
from .contraction import coaction_check
from .forests import Family, enumerate_forests, parse
from .linear import LinComb, check_axioms, format_coefficient
from .morphisms import heap_ordered_to_permutation, max_word, phi_wqsym, theta
from .prelie import exhaustive_check, generation_span
from .series import TABLES, check_table, cho_count, cho_recursion
from .universal import UniversalMorphism, arborification, generic, parse_seed

MORPHISMS = ("theta", "phi-wqsym", "m-word", "ho-perm", "hck-sh", "hck-csh", "cck-sh", "cck-csh", "arbor")
SUITES = ("hopf", "comodule", "prelie")


class UsageError(Exception):
    pass


def _emit(x: Mapping, fmt: str) -> None:
    if fmt == "tsv":
        for basis, c in LinComb(x).sorted_items():
            print(f"{format_coefficient(c)}\t{basis}")
    else:
        print(LinComb(x))


def _cmd_parse(args: argparse.Namespace) -> int:
    print(parse(args.forest, args.family))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    atoms = tuple(args.atoms.split(","))
    family = Family(args.family)
    for n in range(args.max_degree + 1):
        forests = enumerate_forests(family, n, args.grading, args.quotient, atoms)
        if args.count_only:
            print(f"{n}\t{len(forests)}" if args.format == "tsv" else f"degree {n}: {len(forests)}")
        else:
            for f in forests:
                print(f"{n}\t{f}" if args.format == "tsv" else f)
    return 0


def _cmd_product(args: argparse.Namespace) -> int:
    H = algebra(args.algebra)
    x, y = (LinComb.of(parse_element(args.algebra, t)) for t in (args.left, args.right))
    _emit(H.mul(x, y), args.format)
    return 0


def _cmd_coproduct(args: argparse.Namespace) -> int:
    H = algebra(args.algebra)
    _emit(H.comul(LinComb.of(parse_element(args.algebra, args.element))), args.format)
    return 0


def _cmd_antipode(args: argparse.Namespace) -> int:
    H = algebra(args.algebra)
    _emit(H.antipode(LinComb.of(parse_element(args.algebra, args.element))), args.format)
    return 0


def _seed(choice: str | None, source: str):
    if choice in (None, "arbor"):
        return arborification()
    if choice == "generic":
        return generic()
    path = Path(choice)
    if not path.is_file():
        raise UsageError(f"seed {choice!r} is neither arbor, generic nor a readable file")
    return parse_seed(path.read_text(), source)


def _cmd_morphism(args: argparse.Namespace) -> int:
    name, text = args.name, args.forest
    if name == "theta":
        _emit(theta(parse(text, args.family or Family.ORDERED)), args.format)
    elif name == "phi-wqsym":
        _emit(phi_wqsym(parse(text, args.family or Family.PREORDERED)), args.format)
    elif name == "m-word":
        print(max_word(parse(text, args.family or Family.ROOTED)))
    elif name == "ho-perm":
        print(heap_ordered_to_permutation(parse(text, Family.HEAP_ORDERED)))
    else:
        source, target = ("h", "sh") if name == "arbor" else (name[0], name.split("-")[1])
        family = Family.ROOTED if source == "h" else Family.EDGE
        seed = arborification() if name == "arbor" else _seed(args.seed, source)
        _emit(UniversalMorphism(source, target, seed)(parse(text, family)), args.format)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    if args.suite == "hopf":
        if not args.algebra:
            raise UsageError("check --suite hopf needs --algebra")
        report = check_axioms(algebra(args.algebra), args.max_degree)
        print(report.summary())
        ok = report.ok
    elif args.suite == "comodule":
        report = coaction_check(args.max_degree)
        print(f"comodule closure up to {args.max_degree} edges: {report.checked} tensors, {len(report.violations)} violations")
        for v in report.violations:
            print(v)
        ok = report.ok
    else:
        atoms = tuple(args.atoms.split(","))
        relations = exhaustive_check(min(args.max_degree, 2), atoms)
        span = generation_span(args.max_degree, atoms)
        print(f"relations: {relations.checked} identities, {len(relations.failures)} failures")
        for n in span.span:
            print(f"degree {n}: span {span.span[n]}, trees {span.trees[n]}")
        ok = relations.ok and span.ok
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _cmd_series(args: argparse.Namespace) -> int:
    if args.family == "c-ho-lengths":
        ok = True
        sep = "\t" if args.format == "tsv" else " "
        for n in range(args.max_n + 1):
            row = [cho_count(n, l) for l in range(n + 1)]
            ok &= row == [cho_recursion(n, l) for l in range(n + 1)]
            print(f"{n}{sep}" + sep.join(f"{x:>6}" if sep == " " else str(x) for x in row))
        print("PASS" if ok else "FAIL")
        return 0 if ok else 1
    if args.family not in TABLES:
        raise UsageError(f"unknown series {args.family!r}; known: {', '.join([*TABLES, 'c-ho-lengths'])}")
    report = check_table(args.family, args.max_n)
    if args.format == "tsv":
        print("n\texpected\tcomputed")
        for row in zip(report.degrees, report.expected, report.computed):
            print("\t".join(map(str, row)))
    else:
        print(f"{'n':>3} {'expected':>10} {'computed':>10}")
        for n, e, c in zip(report.degrees, report.expected, report.computed):
            print(f"{n:>3} {e:>10} {c:>10}{'' if e == c else '  <- mismatch'}")
    print("PASS" if report.ok else "FAIL")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hopforest", description="Exact computations in Hopf algebras of labeled forests and words.")
    sub = ap.add_subparsers(dest="command", required=True)
    families = [f.value for f in Family]

    def common(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--format", choices=("plain", "tsv"), default="plain")
        return p

    p = common(sub.add_parser("parse", help="echo a forest in canonical form"))
    p.add_argument("forest")
    p.add_argument("--family", choices=families, default="rooted")
    p.set_defaults(run=_cmd_parse)

    p = common(sub.add_parser("enumerate", help="list basis forests degree by degree"))
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("--grading", choices=("vertices", "edges"), default="vertices")
    p.add_argument("--quotient", action="store_true", help="drop forests with isolated vertices")
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--atoms", default="*", help="comma separated decorations")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(run=_cmd_enumerate)

    for name, run, nargs in (("product", _cmd_product, 2), ("coproduct", _cmd_coproduct, 1), ("antipode", _cmd_antipode, 1)):
        p = common(sub.add_parser(name, help=f"{name} of basis elements"))
        p.add_argument("--algebra", choices=sorted(REGISTRY), required=True)
        if nargs == 2:
            p.add_argument("left")
            p.add_argument("right")
        else:
            p.add_argument("element")
        p.set_defaults(run=run)

    p = common(sub.add_parser("morphism", help="apply a morphism to a forest"))
    p.add_argument("--name", choices=MORPHISMS, required=True)
    p.add_argument("--seed", help="arbor, generic, or a file of 'tree => atom' lines")
    p.add_argument("--family", choices=families)
    p.add_argument("forest")
    p.set_defaults(run=_cmd_morphism)

    p = common(sub.add_parser("check", help="run an exhaustive identity suite"))
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--algebra", choices=sorted(REGISTRY))
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--atoms", default="a,b")
    p.set_defaults(run=_cmd_check)

    p = common(sub.add_parser("series", help="compare a dimension table with enumeration"))
    p.add_argument("--family", required=True, help=f"one of {', '.join([*TABLES, 'c-ho-lengths'])}")
    p.add_argument("--max-n", type=int, default=4)
    p.set_defaults(run=_cmd_series)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
