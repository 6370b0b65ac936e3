"""Versioned JSON container for structures, with a canonical byte encoding.

Canonical form: structure names sorted, fields in a fixed per-kind order,
rationals in lowest terms (``p`` or ``p/q``), compact separators, and a
single trailing newline.  ``serialize(parse(data))`` canonicalizes any valid
file and is a byte-level fixed point on canonical ones.

Entry kinds and fields:

    hom_algebra            kind, dim, mul, alpha
    hom_module             kind, algebra, side, dim, beta, action
    hom_poisson_coalgebra  kind, dim, delta, gamma, alpha, cocommutative
    hom_comodule           kind, coalgebra, structure, dim, beta,
                           delta_m (coassociative/poisson), gamma_m (lie/poisson)
    linear_map             kind, dim_in, dim_out, matrix

Modules name their base algebra and comodules their base coalgebra; all
references must resolve inside the same file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .algebras import HomAlgebra
from .coalgebras import HomPoissonCoalgebra
from .comodules import HomComodule
from .errors import FormatError
from .exact import (
    ActionTensor,
    CoactionTensor,
    ComulTensor,
    LinearMap,
    MulTensor,
    format_rational,
    parse_rational,
)
from .modules import HomModule

FILE_VERSION = 1


@dataclass(frozen=True)
class NamedMap:
    """A bare linear map stored in a file (morphism / endomorphism material)."""

    linear_map: LinearMap


@dataclass(frozen=True)
class StructureFile:
    version: int
    structures: dict[str, object]
    base_of: dict[str, str]
    """For modules and comodules, the name of the referenced base entry."""

    def get(self, name: str):
        if name not in self.structures:
            raise FormatError(f"no structure named {name!r} in file")
        return self.structures[name]


def _require(cond: bool, msg: str):
    if not cond:
        raise FormatError(msg)


def _parse_scalar(value) -> Fraction:
    _require(isinstance(value, str), f"rational entries must be strings, got {value!r}")
    return parse_rational(value)


def _parse_matrix(data, rows: int, cols: int, what: str):
    _require(isinstance(data, list) and len(data) == rows, f"{what}: expected {rows} rows")
    out = []
    for row in data:
        _require(isinstance(row, list) and len(row) == cols, f"{what}: expected {cols} columns")
        out.append([_parse_scalar(x) for x in row])
    return out


def _parse_cube(data, d0: int, d1: int, d2: int, what: str):
    _require(isinstance(data, list) and len(data) == d0, f"{what}: expected {d0} planes")
    return [_parse_matrix(plane, d1, d2, what) for plane in data]


def _dump_matrix(rows) -> list:
    return [[format_rational(x) for x in row] for row in rows]


def _dump_cube(cube) -> list:
    return [_dump_matrix(plane) for plane in cube]


def _parse_dim(raw, what: str) -> int:
    _require(isinstance(raw, int) and not isinstance(raw, bool) and raw >= 0, f"{what}: bad dim")
    return raw


def parse_bytes(data: bytes) -> StructureFile:
    try:
        doc = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    _require(isinstance(doc, dict), "top level must be an object")
    _require(doc.get("version") == FILE_VERSION, f"unsupported version {doc.get('version')!r}")
    raw = doc.get("structures")
    _require(isinstance(raw, dict) and raw is not None, "missing structures map")

    structures: dict[str, object] = {}
    base_of: dict[str, str] = {}
    pending: list[tuple[str, dict]] = []

    for name, entry in raw.items():
        _require(isinstance(name, str) and name != "", "structure names must be nonempty strings")
        _require(isinstance(entry, dict), f"{name}: entry must be an object")
        kind = entry.get("kind")
        if kind == "hom_algebra":
            dim = _parse_dim(entry.get("dim"), name)
            mul = MulTensor.from_entries(_parse_cube(entry.get("mul"), dim, dim, dim, name))
            alpha = LinearMap.from_rows(_parse_matrix(entry.get("alpha"), dim, dim, name))
            structures[name] = HomAlgebra(dim, mul, alpha)
        elif kind == "hom_poisson_coalgebra":
            dim = _parse_dim(entry.get("dim"), name)
            delta = ComulTensor.from_entries(_parse_cube(entry.get("delta"), dim, dim, dim, name))
            gamma = ComulTensor.from_entries(_parse_cube(entry.get("gamma"), dim, dim, dim, name))
            alpha = LinearMap.from_rows(_parse_matrix(entry.get("alpha"), dim, dim, name))
            flag = entry.get("cocommutative")
            _require(isinstance(flag, bool), f"{name}: cocommutative must be a boolean")
            structures[name] = HomPoissonCoalgebra(dim, delta, gamma, alpha, flag)
        elif kind == "linear_map":
            dim_in = _parse_dim(entry.get("dim_in"), name)
            dim_out = _parse_dim(entry.get("dim_out"), name)
            matrix = LinearMap.from_rows(_parse_matrix(entry.get("matrix"), dim_out, dim_in, name))
            structures[name] = NamedMap(matrix)
        elif kind in ("hom_module", "hom_comodule"):
            pending.append((name, entry))
        else:
            raise FormatError(f"{name}: unknown kind {kind!r}")

    for name, entry in pending:
        if entry["kind"] == "hom_module":
            ref = entry.get("algebra")
            _require(isinstance(ref, str), f"{name}: missing algebra reference")
            base = structures.get(ref)
            _require(isinstance(base, HomAlgebra), f"{name}: algebra {ref!r} not found")
            side = entry.get("side")
            _require(side in ("left", "right"), f"{name}: bad side {side!r}")
            dim = _parse_dim(entry.get("dim"), name)
            beta = LinearMap.from_rows(_parse_matrix(entry.get("beta"), dim, dim, name))
            shape = (base.dim, dim) if side == "left" else (dim, base.dim)
            action = ActionTensor.from_entries(
                _parse_cube(entry.get("action"), shape[0], shape[1], dim, name),
                base.dim,
                dim,
                side,
            )
            structures[name] = HomModule(base, dim, beta, action, side)
            base_of[name] = ref
        else:
            ref = entry.get("coalgebra")
            _require(isinstance(ref, str), f"{name}: missing coalgebra reference")
            base = structures.get(ref)
            _require(
                isinstance(base, HomPoissonCoalgebra), f"{name}: coalgebra {ref!r} not found"
            )
            comodule_kind = entry.get("structure")
            _require(
                comodule_kind in ("coassociative", "lie", "poisson"),
                f"{name}: bad comodule structure {comodule_kind!r}",
            )
            dim = _parse_dim(entry.get("dim"), name)
            beta = LinearMap.from_rows(_parse_matrix(entry.get("beta"), dim, dim, name))
            delta_m = gamma_m = None
            if comodule_kind in ("coassociative", "poisson"):
                delta_m = CoactionTensor.from_entries(
                    _parse_cube(entry.get("delta_m"), dim, base.dim, dim, name), base.dim, dim
                )
            else:
                _require("delta_m" not in entry, f"{name}: delta_m not allowed for this kind")
            if comodule_kind in ("lie", "poisson"):
                gamma_m = CoactionTensor.from_entries(
                    _parse_cube(entry.get("gamma_m"), dim, base.dim, dim, name), base.dim, dim
                )
            else:
                _require("gamma_m" not in entry, f"{name}: gamma_m not allowed for this kind")
            structures[name] = HomComodule(base, dim, beta, comodule_kind, delta_m, gamma_m)
            base_of[name] = ref

    return StructureFile(FILE_VERSION, structures, base_of)


def parse_file(path) -> StructureFile:
    try:
        with open(path, "rb") as fh:
            return parse_bytes(fh.read())
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _entry_doc(name: str, structure, base_of: dict[str, str]) -> dict:
    if isinstance(structure, HomAlgebra):
        return {
            "kind": "hom_algebra",
            "dim": structure.dim,
            "mul": _dump_cube(structure.mu.c),
            "alpha": _dump_matrix(structure.alpha.entries),
        }
    if isinstance(structure, HomPoissonCoalgebra):
        return {
            "kind": "hom_poisson_coalgebra",
            "dim": structure.dim,
            "delta": _dump_cube(structure.delta.d),
            "gamma": _dump_cube(structure.gamma.d),
            "alpha": _dump_matrix(structure.alpha.entries),
            "cocommutative": structure.cocommutative_expected,
        }
    if isinstance(structure, HomModule):
        return {
            "kind": "hom_module",
            "algebra": base_of[name],
            "side": structure.side,
            "dim": structure.dim_mod,
            "beta": _dump_matrix(structure.beta.entries),
            "action": _dump_cube(structure.action.a),
        }
    if isinstance(structure, HomComodule):
        doc = {
            "kind": "hom_comodule",
            "coalgebra": base_of[name],
            "structure": structure.kind,
            "dim": structure.dim_mod,
            "beta": _dump_matrix(structure.beta.entries),
        }
        if structure.delta_m is not None:
            doc["delta_m"] = _dump_cube(structure.delta_m.g)
        if structure.gamma_m is not None:
            doc["gamma_m"] = _dump_cube(structure.gamma_m.g)
        return doc
    if isinstance(structure, NamedMap):
        return {
            "kind": "linear_map",
            "dim_in": structure.linear_map.dim_in,
            "dim_out": structure.linear_map.dim_out,
            "matrix": _dump_matrix(structure.linear_map.entries),
        }
    raise FormatError(f"{name}: cannot serialize {type(structure).__name__}")


def serialize(sf: StructureFile) -> bytes:
    for name in sf.base_of.values():
        if name not in sf.structures:
            raise FormatError(f"dangling reference to {name!r}")
    doc = {
        "version": sf.version,
        "structures": {
            name: _entry_doc(name, sf.structures[name], sf.base_of)
            for name in sorted(sf.structures)
        },
    }
    return (json.dumps(doc, separators=(",", ":")) + "\n").encode("utf-8")


def write_file(path, sf: StructureFile):
    data = serialize(sf)
    with open(path, "wb") as fh:
        fh.write(data)


def single_structure_file(name: str, structure, base: tuple[str, object] | None = None) -> StructureFile:
    """A file holding one structure, plus its base entry when it needs one."""
    structures: dict[str, object] = {}
    base_of: dict[str, str] = {}
    if base is not None:
        base_name, base_structure = base
        structures[base_name] = base_structure
        base_of[name] = base_name
    structures[name] = structure
    return StructureFile(FILE_VERSION, structures, base_of)
