"""Batch command-line interface.

Verbs: verify, twist, transform, check-morphism, catalog list/export.
Exit codes: 0 when everything requested holds, 1 on any axiom or
precondition failure, 2 on input or format errors.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog
from .algebras import (
    HOM_ASSOC,
    LEFT_HOM_ALT,
    RIGHT_HOM_ALT,
    HomAlgebra,
    check_hom_associative,
    check_left_hom_alternative,
    check_morphism,
    check_right_hom_alternative,
    negate as negate_algebra,
    opposite as opposite_algebra,
    yau_twist,
)
from .coalgebras import (
    COCOMMUTATIVITY,
    DELTA_MULTIPLICATIVITY,
    GAMMA_MULTIPLICATIVITY,
    HOM_COASSOC_COALGEBRA,
    HOM_COASSOCIATIVITY,
    HOM_COJACOBI,
    HOM_COLEIBNIZ,
    HOM_LIE_COALGEBRA,
    HOM_POISSON_COALGEBRA,
    SKEW_COSYMMETRY,
    HomPoissonCoalgebra,
    check_coalgebra_morphism,
    check_cocommutativity,
    check_hom_coassociative,
    check_hom_coleibniz,
    check_hom_lie_coalgebra,
    check_hom_poisson_coalgebra,
    negate_coalgebra,
    opposite_coalgebra,
    yau_twist_coalgebra,
)
from .comodules import (
    COASSOC_COMODULE,
    LIE_COMODULE,
    POISSON_COMODULE,
    HomComodule,
    check_coassoc_comodule,
    check_comodule_morphism,
    check_lie_comodule,
    check_poisson_comodule,
    negate_poisson_comodule,
    twist_coassoc_comodule,
    twist_lie_comodule,
    twist_poisson_comodule,
)
from .errors import FormatError, KernelError, KindMismatch
from .exact import LinearMap, format_rational, rat
from .fileformat import (
    NamedMap,
    StructureFile,
    parse_file,
    serialize,
    single_structure_file,
    write_file,
)
from .modules import (
    LEFT_MODULE,
    RIGHT_MODULE,
    HomModule,
    check_left_module,
    check_module_morphism,
    check_right_module,
    negate_module,
    opposite_module,
    twist_module,
)
from .report import AxiomReport

_ALGEBRA_AXIOMS = {
    LEFT_HOM_ALT: check_left_hom_alternative,
    RIGHT_HOM_ALT: check_right_hom_alternative,
    HOM_ASSOC: check_hom_associative,
}

_COALGEBRA_AXIOMS = {
    COCOMMUTATIVITY: lambda p: check_cocommutativity(p.coassociative_part()),
    HOM_COASSOC_COALGEBRA: lambda p: check_hom_coassociative(p.coassociative_part()),
    DELTA_MULTIPLICATIVITY: lambda p: check_hom_coassociative(p.coassociative_part()).part(
        DELTA_MULTIPLICATIVITY
    ),
    HOM_COASSOCIATIVITY: lambda p: check_hom_coassociative(p.coassociative_part()).part(
        HOM_COASSOCIATIVITY
    ),
    HOM_LIE_COALGEBRA: lambda p: check_hom_lie_coalgebra(p.lie_part()),
    SKEW_COSYMMETRY: lambda p: check_hom_lie_coalgebra(p.lie_part()).part(SKEW_COSYMMETRY),
    GAMMA_MULTIPLICATIVITY: lambda p: check_hom_lie_coalgebra(p.lie_part()).part(
        GAMMA_MULTIPLICATIVITY
    ),
    HOM_COJACOBI: lambda p: check_hom_lie_coalgebra(p.lie_part()).part(HOM_COJACOBI),
    HOM_COLEIBNIZ: check_hom_coleibniz,
    HOM_POISSON_COALGEBRA: check_hom_poisson_coalgebra,
}

_COMODULE_AXIOMS = {
    COASSOC_COMODULE: check_coassoc_comodule,
    LIE_COMODULE: check_lie_comodule,
    POISSON_COMODULE: check_poisson_comodule,
}


def _reports_for(structure, suite: list[str]) -> list[AxiomReport]:
    if isinstance(structure, HomAlgebra):
        axioms = list(_ALGEBRA_AXIOMS) if suite == ["all"] else suite
        out = []
        for axiom in axioms:
            if axiom not in _ALGEBRA_AXIOMS:
                raise FormatError(f"unknown algebra axiom {axiom!r}")
            out.append(_ALGEBRA_AXIOMS[axiom](structure))
        return out
    if isinstance(structure, HomModule):
        native = LEFT_MODULE if structure.side == "left" else RIGHT_MODULE
        axioms = [native] if suite == ["all"] else suite
        out = []
        for axiom in axioms:
            if axiom == LEFT_MODULE:
                out.append(check_left_module(structure))
            elif axiom == RIGHT_MODULE:
                out.append(check_right_module(structure))
            else:
                raise FormatError(f"unknown module axiom {axiom!r}")
        return out
    if isinstance(structure, HomPoissonCoalgebra):
        axioms = [HOM_POISSON_COALGEBRA] if suite == ["all"] else suite
        out = []
        for axiom in axioms:
            if axiom not in _COALGEBRA_AXIOMS:
                raise FormatError(f"unknown coalgebra axiom {axiom!r}")
            out.append(_COALGEBRA_AXIOMS[axiom](structure))
        return out
    if isinstance(structure, HomComodule):
        native = {
            "coassociative": COASSOC_COMODULE,
            "lie": LIE_COMODULE,
            "poisson": POISSON_COMODULE,
        }[structure.kind]
        axioms = [native] if suite == ["all"] else suite
        out = []
        for axiom in axioms:
            if axiom not in _COMODULE_AXIOMS:
                raise FormatError(f"unknown comodule axiom {axiom!r}")
            out.append(_COMODULE_AXIOMS[axiom](structure))
        return out
    raise FormatError("structure kind cannot be verified")


def _print_report(report: AxiomReport, max_witnesses: int, indent: str = ""):
    if report.holds:
        print(f"{indent}{report.axiom}: PASS")
    else:
        shown = min(len(report.witnesses), max_witnesses)
        print(
            f"{indent}{report.axiom}: FAIL"
            f" ({report.total_failures} failing indices; showing {shown})"
        )
    for part in report.parts:
        _print_report(part, max_witnesses, indent + "  ")
    if not report.parts:
        for witness in report.witnesses[:max_witnesses]:
            coords = ",".join(str(i) for i in witness.index)
            values = ", ".join(format_rational(x) for x in witness.residual.entries)
            print(f"{indent}  ({coords}): [{values}]")


def cmd_verify(args) -> int:
    sf = parse_file(args.file)
    structure = sf.get(args.name)
    suite = [token.strip() for token in args.suite.split(",") if token.strip()]
    if not suite:
        raise FormatError("empty suite")
    reports = _reports_for(structure, suite)
    for report in reports:
        _print_report(report, args.max_witnesses)
    return 0 if all(r.holds for r in reports) else 1


def _resolve_endo(sf: StructureFile, spec: str, dim: int) -> LinearMap:
    if spec == "id":
        return LinearMap.identity(dim)
    if spec.startswith("diag:"):
        try:
            values = [rat(piece) for piece in spec[len("diag:") :].split(",")]
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"bad diagonal entries in {spec!r}")
        if len(values) != dim:
            raise FormatError(f"diag endomorphism needs {dim} entries")
        return LinearMap.diagonal(values)
    target = sf.get(spec)
    if not isinstance(target, NamedMap):
        raise FormatError(f"{spec!r} is not a linear map entry")
    return target.linear_map


def _structure_dim(structure) -> int:
    if isinstance(structure, (HomAlgebra, HomPoissonCoalgebra)):
        return structure.dim
    raise FormatError("endomorphism twists apply to algebras and coalgebras")


def _replace(sf: StructureFile, name: str, new_structure, new_name: str | None,
             new_base: object | None = None) -> StructureFile:
    structures = dict(sf.structures)
    base_of = dict(sf.base_of)
    if new_base is not None and name in base_of:
        structures[base_of[name]] = new_base
    if new_name is None:
        structures[name] = new_structure
    else:
        structures[new_name] = new_structure
        if name in base_of:
            base_of[new_name] = base_of[name]
    return StructureFile(sf.version, structures, base_of)


def cmd_twist(args) -> int:
    sf = parse_file(args.file)
    structure = sf.get(args.name)
    if isinstance(structure, (HomAlgebra, HomPoissonCoalgebra)):
        if args.endo is None:
            raise FormatError("this twist needs --endo")
        phi = _resolve_endo(sf, args.endo, _structure_dim(structure))
        if isinstance(structure, HomAlgebra):
            twisted = yau_twist(structure, phi)
        else:
            twisted = yau_twist_coalgebra(structure, phi)
    elif isinstance(structure, HomModule):
        if args.endo is not None:
            raise FormatError("module twists take no endomorphism")
        twisted = twist_module(structure)
        if structure.side == "right":
            print("note: right-module twist uses the mirrored composition"
                  " (algebra argument fed through alpha^2)")
    elif isinstance(structure, HomComodule):
        if args.endo is not None:
            raise FormatError("comodule twists take no endomorphism")
        twisted = {
            "coassociative": twist_coassoc_comodule,
            "lie": twist_lie_comodule,
            "poisson": twist_poisson_comodule,
        }[structure.kind](structure)
    else:
        raise KindMismatch("entry cannot be twisted")
    write_file(args.out, _replace(sf, args.name, twisted, args.rename))
    print(f"wrote {args.out}")
    return 0


def cmd_transform(args) -> int:
    sf = parse_file(args.file)
    structure = sf.get(args.name)
    new_base = None
    if isinstance(structure, HomAlgebra):
        result = negate_algebra(structure) if args.op == "negate" else opposite_algebra(structure)
    elif isinstance(structure, HomPoissonCoalgebra):
        result = (
            negate_coalgebra(structure) if args.op == "negate" else opposite_coalgebra(structure)
        )
    elif isinstance(structure, HomModule):
        result = negate_module(structure) if args.op == "negate" else opposite_module(structure)
        new_base = result.algebra
    elif isinstance(structure, HomComodule):
        if args.op != "negate":
            raise KindMismatch("comodules only support negation")
        result = negate_poisson_comodule(structure)
        new_base = result.coalgebra
    else:
        raise KindMismatch("entry cannot be transformed")
    # transforms of modules/comodules rewrite their base entry in place, so
    # the result always replaces the original name
    write_file(args.out, _replace(sf, args.name, result, None, new_base))
    print(f"wrote {args.out}")
    return 0


def cmd_check_morphism(args) -> int:
    sf = parse_file(args.file)
    entry = sf.get(args.map)
    if not isinstance(entry, NamedMap):
        raise FormatError(f"{args.map!r} is not a linear map entry")
    f = entry.linear_map
    src = sf.get(getattr(args, "from"))
    dst = sf.get(args.to)
    if isinstance(src, HomAlgebra) and isinstance(dst, HomAlgebra):
        report = check_morphism(f, src, dst)
    elif isinstance(src, HomModule) and isinstance(dst, HomModule):
        report = check_module_morphism(f, src, dst, strict=args.strict)
    elif isinstance(src, HomPoissonCoalgebra) and isinstance(dst, HomPoissonCoalgebra):
        report = check_coalgebra_morphism(f, src, dst)
    elif isinstance(src, HomComodule) and isinstance(dst, HomComodule):
        report = check_comodule_morphism(f, src, dst, strict=args.strict)
    else:
        raise KindMismatch("morphism endpoints have different or unsupported kinds")
    _print_report(report, args.max_witnesses)
    return 0 if report.holds else 1


def _catalog_file(entry: catalog.CatalogEntry) -> StructureFile:
    payload = entry.payload
    if isinstance(payload, HomModule):
        return single_structure_file(
            entry.name, payload, (f"{entry.name}_algebra", payload.algebra)
        )
    if isinstance(payload, HomComodule):
        return single_structure_file(
            entry.name, payload, (f"{entry.name}_coalgebra", payload.coalgebra)
        )
    return single_structure_file(entry.name, payload)


def cmd_catalog(args) -> int:
    if args.action == "list":
        for entry in catalog.entries():
            kind = type(entry.payload).__name__
            verdicts = ",".join(
                f"{axiom}={'pass' if value else 'fail'}"
                for axiom, value in entry.expected_verdicts.items()
            )
            print(f"{entry.name}  {kind}  {verdicts}")
        return 0
    try:
        entry = catalog.get(args.name)
    except KeyError:
        raise FormatError(f"no catalogue entry named {args.name!r}")
    data = serialize(_catalog_file(entry))
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(data.decode("utf-8"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homstruct",
        description="Exact verification and twisting of Hom-algebraic structures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run axiom checks on a structure in a file")
    p.add_argument("file")
    p.add_argument("name")
    p.add_argument("--suite", default="all", help="comma-separated axiom ids, or 'all'")
    p.add_argument("--max-witnesses", type=int, default=16)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("twist", help="twist a structure and write the result")
    p.add_argument("file")
    p.add_argument("name")
    p.add_argument("--endo", help="linear map entry name, 'id', or diag:a,b,...")
    p.add_argument("--out", required=True)
    p.add_argument("--as", dest="rename", help="store the result under a new name")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("transform", help="negate or oppose a structure")
    p.add_argument("file")
    p.add_argument("name")
    p.add_argument("op", choices=["negate", "opposite"])
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("check-morphism", help="check a stored linear map between structures")
    p.add_argument("file")
    p.add_argument("map")
    p.add_argument("from")
    p.add_argument("to")
    p.add_argument("--strict", action="store_true", help="also require commuting with beta")
    p.add_argument("--max-witnesses", type=int, default=16)
    p.set_defaults(func=cmd_check_morphism)

    p = sub.add_parser("catalog", help="list or export built-in structures")
    p.add_argument("action", choices=["list", "export"])
    p.add_argument("name", nargs="?")
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "catalog" and args.action == "export" and not args.name:
        print("error: catalog export needs a name", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 2
    except KernelError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
