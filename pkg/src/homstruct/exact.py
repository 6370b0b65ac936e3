"""Exact rational vectors, linear maps, and structure-constant tensors.

Everything downstream reduces to contractions of these tensors, so the basis
conventions are pinned here once:

* ``LinearMap`` entries ``a[i][j]``: the image of basis vector ``e_j`` is
  ``sum_i a[i][j] e_i`` (columns are images of basis vectors).
* ``MulTensor`` entries ``c[i][j][k]``: ``mul(e_i, e_j) = sum_k c[i][j][k] e_k``
  (input indices first, output index last).
* ``ComulTensor`` entries ``d[k][i][j]``: ``comul(e_k) = sum d[k][i][j]
  e_i @ e_j`` (element index first).
* ``ActionTensor``, side ``left``: ``a[i][p][q]`` with ``act(e_i, f_p) =
  sum_q a[i][p][q] f_q``; side ``right`` puts the module index first,
  ``a[p][i][q]`` with ``act(f_p, e_i) = sum_q a[p][i][q] f_q``.
* ``CoactionTensor`` entries ``g[p][i][q]``: the coaction of ``f_p`` is
  ``sum g[p][i][q] e_i @ f_q``.
* Tensor squares and cubes are flattened lexicographically: ``e_i @ e_j``
  sits at flat index ``i*n + j``, and ``e_i @ e_j @ e_k`` at ``i*n*n + j*n + k``
  (with the middle/last factor sizes adjusted for mixed products).

Scalars are ``fractions.Fraction`` throughout; no floating point enters the
kernel, so every identity check is an exact zero test.  All values are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FormatError

_ZERO = Fraction(0)
_ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^(-?(?:0|[1-9]\d*))(?:/([1-9]\d*))?$")


def rat(value) -> Fraction:
    """Coerce an int, string, or Fraction to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def parse_rational(text: str) -> Fraction:
    """Parse the wire form ``p`` or ``p/q``.

    The denominator must be positive and the fraction already in lowest
    terms; anything else is rejected so that files round-trip byte-exactly.
    """
    m = _RATIONAL_RE.match(text)
    if m is None or m.group(1) == "-0":
        raise FormatError(f"malformed rational {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if gcd(abs(num), den) != 1:
        raise FormatError(f"rational {text!r} is not in lowest terms")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    """Canonical wire form: ``p/q`` with q > 1, bare ``p`` otherwise."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _freeze_vector(entries) -> tuple[Fraction, ...]:
    return tuple(rat(x) for x in entries)


def _freeze_matrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(rat(x) for x in row) for row in rows)


def _freeze_cube(cube) -> tuple[tuple[tuple[Fraction, ...], ...], ...]:
    return tuple(tuple(tuple(rat(x) for x in row) for row in plane) for plane in cube)


@dataclass(frozen=True)
class Vector:
    """Element of K^n with exact rational coordinates."""

    entries: tuple[Fraction, ...]

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def from_entries(cls, entries) -> "Vector":
        return cls(_freeze_vector(entries))

    @classmethod
    def zero(cls, dim: int) -> "Vector":
        return cls((_ZERO,) * dim)

    @classmethod
    def basis(cls, dim: int, index: int) -> "Vector":
        return cls(tuple(_ONE if i == index else _ZERO for i in range(dim)))

    def is_zero(self) -> bool:
        return all(not x for x in self.entries)

    def __add__(self, other: "Vector") -> "Vector":
        if self.dim != other.dim:
            raise DimensionMismatch(f"vector dims {self.dim} != {other.dim}")
        return Vector(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Vector") -> "Vector":
        if self.dim != other.dim:
            raise DimensionMismatch(f"vector dims {self.dim} != {other.dim}")
        return Vector(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Vector":
        return Vector(tuple(-a for a in self.entries))

    def scale(self, factor) -> "Vector":
        f = rat(factor)
        return Vector(tuple(f * a for a in self.entries))


@dataclass(frozen=True)
class LinearMap:
    """Matrix of a linear map K^dim_in -> K^dim_out; column j is the image of e_j."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise DimensionMismatch("ragged matrix")

    @property
    def dim_out(self) -> int:
        return len(self.entries)

    @property
    def dim_in(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @classmethod
    def from_rows(cls, rows) -> "LinearMap":
        return cls(_freeze_matrix(rows))

    @classmethod
    def identity(cls, dim: int) -> "LinearMap":
        return cls(tuple(tuple(_ONE if i == j else _ZERO for j in range(dim)) for i in range(dim)))

    @classmethod
    def zero(cls, dim_out: int, dim_in: int) -> "LinearMap":
        return cls(((_ZERO,) * dim_in,) * dim_out)

    @classmethod
    def diagonal(cls, values) -> "LinearMap":
        vals = _freeze_vector(values)
        n = len(vals)
        return cls(tuple(tuple(vals[i] if i == j else _ZERO for j in range(n)) for i in range(n)))

    def is_identity(self) -> bool:
        if self.dim_in != self.dim_out:
            return False
        return all(
            x == (_ONE if i == j else _ZERO)
            for i, row in enumerate(self.entries)
            for j, x in enumerate(row)
        )

    def is_square(self, dim: int) -> bool:
        return self.dim_in == dim and self.dim_out == dim

    def column(self, j: int) -> Vector:
        return Vector(tuple(row[j] for row in self.entries))

    def apply(self, v: Vector) -> Vector:
        if v.dim != self.dim_in:
            raise DimensionMismatch(f"map expects dim {self.dim_in}, got {v.dim}")
        out = [_ZERO] * self.dim_out
        for j, xj in enumerate(v.entries):
            if not xj:
                continue
            for i in range(self.dim_out):
                a = self.entries[i][j]
                if a:
                    out[i] += a * xj
        return Vector(tuple(out))


def compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """Composite f . g (apply g first)."""
    if f.dim_in != g.dim_out:
        raise DimensionMismatch(f"cannot compose {f.dim_out}x{f.dim_in} after {g.dim_out}x{g.dim_in}")
    rows = []
    for i in range(f.dim_out):
        frow = f.entries[i]
        row = []
        for j in range(g.dim_in):
            acc = _ZERO
            for l in range(g.dim_out):
                a = frow[l]
                if a:
                    b = g.entries[l][j]
                    if b:
                        acc += a * b
            row.append(acc)
        rows.append(tuple(row))
    return LinearMap(tuple(rows))


def squared(f: LinearMap) -> LinearMap:
    return compose(f, f)


def tensor_product(f: LinearMap, g: LinearMap) -> LinearMap:
    """Kronecker product acting on e_i @ e_j in lexicographic order."""
    rows = []
    for i in range(f.dim_out):
        for p in range(g.dim_out):
            row = []
            for j in range(f.dim_in):
                fij = f.entries[i][j]
                for q in range(g.dim_in):
                    row.append(fij * g.entries[p][q])
            rows.append(tuple(row))
    return LinearMap(tuple(rows))


def swap_map(n: int) -> LinearMap:
    """The flip e_i @ e_j -> e_j @ e_i on K^n @ K^n."""
    size = n * n
    rows = [[_ZERO] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            rows[j * n + i][i * n + j] = _ONE
    return LinearMap(tuple(tuple(r) for r in rows))


def cyclic_map(n: int) -> LinearMap:
    """The rotation e_a @ e_b @ e_c -> e_c @ e_a @ e_b on the triple tensor power."""
    size = n * n * n
    rows = [[_ZERO] * size for _ in range(size)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                rows[c * n * n + a * n + b][a * n * n + b * n + c] = _ONE
    return LinearMap(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class MulTensor:
    """Structure constants of a bilinear multiplication on K^n."""

    c: tuple[tuple[tuple[Fraction, ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.c)

    @classmethod
    def from_entries(cls, cube) -> "MulTensor":
        t = cls(_freeze_cube(cube))
        n = t.dim
        for plane in t.c:
            if len(plane) != n or any(len(row) != n for row in plane):
                raise DimensionMismatch("multiplication tensor is not n x n x n")
        return t

    @classmethod
    def zero(cls, dim: int) -> "MulTensor":
        return cls((((_ZERO,) * dim,) * dim,) * dim)

    def product(self, i: int, j: int) -> Vector:
        """The product of basis vectors e_i e_j."""
        return Vector(self.c[i][j])

    def apply(self, x: Vector, y: Vector) -> Vector:
        """Evaluate the multiplication at arbitrary vectors, exactly."""
        n = self.dim
        if x.dim != n or y.dim != n:
            raise DimensionMismatch(f"expected dim {n}, got {x.dim} and {y.dim}")
        out = [_ZERO] * n
        for i, xi in enumerate(x.entries):
            if not xi:
                continue
            ci = self.c[i]
            for j, yj in enumerate(y.entries):
                if not yj:
                    continue
                s = xi * yj
                for k, ck in enumerate(ci[j]):
                    if ck:
                        out[k] += s * ck
        return Vector(tuple(out))

    def negated(self) -> "MulTensor":
        return MulTensor(tuple(tuple(tuple(-x for x in row) for row in plane) for plane in self.c))

    def opposite(self) -> "MulTensor":
        """Swap the two input slots: c'[i][j][k] = c[j][i][k]."""
        n = self.dim
        return MulTensor(tuple(tuple(self.c[j][i] for j in range(n)) for i in range(n)))

    def then_map(self, phi: LinearMap) -> "MulTensor":
        """Post-compose with a linear map: c'[i][j][k] = sum_l c[i][j][l] phi[k][l]."""
        n = self.dim
        if not phi.is_square(n):
            raise DimensionMismatch("map size does not match tensor")
        cube = []
        for i in range(n):
            plane = []
            for j in range(n):
                row = self.c[i][j]
                out = [_ZERO] * n
                for l, cl in enumerate(row):
                    if not cl:
                        continue
                    for k in range(n):
                        p = phi.entries[k][l]
                        if p:
                            out[k] += cl * p
                plane.append(tuple(out))
            cube.append(tuple(plane))
        return MulTensor(tuple(cube))


@dataclass(frozen=True)
class ComulTensor:
    """Structure constants of a comultiplication K^n -> K^n @ K^n."""

    d: tuple[tuple[tuple[Fraction, ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.d)

    @classmethod
    def from_entries(cls, cube) -> "ComulTensor":
        t = cls(_freeze_cube(cube))
        n = t.dim
        for plane in t.d:
            if len(plane) != n or any(len(row) != n for row in plane):
                raise DimensionMismatch("comultiplication tensor is not n x n x n")
        return t

    @classmethod
    def zero(cls, dim: int) -> "ComulTensor":
        return cls((((_ZERO,) * dim,) * dim,) * dim)

    def of_basis(self, k: int) -> tuple[tuple[Fraction, ...], ...]:
        """Image of e_k as an n x n coefficient matrix on e_i @ e_j."""
        return self.d[k]

    def apply(self, v: Vector) -> tuple[tuple[Fraction, ...], ...]:
        n = self.dim
        if v.dim != n:
            raise DimensionMismatch(f"expected dim {n}, got {v.dim}")
        out = [[_ZERO] * n for _ in range(n)]
        for k, xk in enumerate(v.entries):
            if not xk:
                continue
            for i in range(n):
                for j in range(n):
                    val = self.d[k][i][j]
                    if val:
                        out[i][j] += xk * val
        return tuple(tuple(row) for row in out)

    def negated(self) -> "ComulTensor":
        return ComulTensor(tuple(tuple(tuple(-x for x in row) for row in plane) for plane in self.d))

    def opposite(self) -> "ComulTensor":
        """Swap the output legs: d'[k][i][j] = d[k][j][i]."""
        n = self.dim
        return ComulTensor(
            tuple(
                tuple(tuple(self.d[k][j][i] for j in range(n)) for i in range(n))
                for k in range(n)
            )
        )

    def precompose(self, phi: LinearMap) -> "ComulTensor":
        """Pre-compose with a linear map: d'[k][i][j] = sum_l phi[l][k] d[l][i][j]."""
        n = self.dim
        if not phi.is_square(n):
            raise DimensionMismatch("map size does not match tensor")
        cube = []
        for k in range(n):
            out = [[_ZERO] * n for _ in range(n)]
            for l in range(n):
                p = phi.entries[l][k]
                if not p:
                    continue
                for i in range(n):
                    for j in range(n):
                        val = self.d[l][i][j]
                        if val:
                            out[i][j] += p * val
            cube.append(tuple(tuple(row) for row in out))
        return ComulTensor(tuple(cube))

    def is_symmetric(self) -> bool:
        n = self.dim
        return all(
            self.d[k][i][j] == self.d[k][j][i]
            for k in range(n)
            for i in range(n)
            for j in range(i + 1, n)
        )


@dataclass(frozen=True)
class ActionTensor:
    """Structure constants of a module action, sided as documented above."""

    a: tuple[tuple[tuple[Fraction, ...], ...], ...]
    dim_alg: int
    dim_mod: int
    side: str

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise DimensionMismatch(f"unknown side {self.side!r}")
        first, second = (
            (self.dim_alg, self.dim_mod) if self.side == "left" else (self.dim_mod, self.dim_alg)
        )
        if len(self.a) != first:
            raise DimensionMismatch("action tensor first index has wrong size")
        for plane in self.a:
            if len(plane) != second or any(len(row) != self.dim_mod for row in plane):
                raise DimensionMismatch("action tensor shape does not match side convention")

    @classmethod
    def from_entries(cls, cube, dim_alg: int, dim_mod: int, side: str) -> "ActionTensor":
        return cls(_freeze_cube(cube), dim_alg, dim_mod, side)

    @classmethod
    def zero(cls, dim_alg: int, dim_mod: int, side: str = "left") -> "ActionTensor":
        first, second = (dim_alg, dim_mod) if side == "left" else (dim_mod, dim_alg)
        return cls((((_ZERO,) * dim_mod,) * second,) * first, dim_alg, dim_mod, side)

    def apply_left(self, x: Vector, m: Vector) -> Vector:
        if self.side != "left":
            raise DimensionMismatch("left application of a right action")
        if x.dim != self.dim_alg or m.dim != self.dim_mod:
            raise DimensionMismatch("action operand dims do not match")
        out = [_ZERO] * self.dim_mod
        for i, xi in enumerate(x.entries):
            if not xi:
                continue
            ai = self.a[i]
            for p, mp in enumerate(m.entries):
                if not mp:
                    continue
                s = xi * mp
                for q, aq in enumerate(ai[p]):
                    if aq:
                        out[q] += s * aq
        return Vector(tuple(out))

    def apply_right(self, m: Vector, x: Vector) -> Vector:
        if self.side != "right":
            raise DimensionMismatch("right application of a left action")
        if x.dim != self.dim_alg or m.dim != self.dim_mod:
            raise DimensionMismatch("action operand dims do not match")
        out = [_ZERO] * self.dim_mod
        for p, mp in enumerate(m.entries):
            if not mp:
                continue
            ap = self.a[p]
            for i, xi in enumerate(x.entries):
                if not xi:
                    continue
                s = mp * xi
                for q, aq in enumerate(ap[i]):
                    if aq:
                        out[q] += s * aq
        return Vector(tuple(out))

    def negated(self) -> "ActionTensor":
        return ActionTensor(
            tuple(tuple(tuple(-x for x in row) for row in plane) for plane in self.a),
            self.dim_alg,
            self.dim_mod,
            self.side,
        )

    def mirrored(self) -> "ActionTensor":
        """Exchange the algebra and module slots, flipping the side."""
        first = len(self.a)
        second = len(self.a[0]) if first else 0
        cube = tuple(tuple(self.a[u][v] for u in range(first)) for v in range(second))
        other = "right" if self.side == "left" else "left"
        return ActionTensor(cube, self.dim_alg, self.dim_mod, other)

    def precompose_algebra(self, phi: LinearMap) -> "ActionTensor":
        """Feed the algebra argument through phi first."""
        if not phi.is_square(self.dim_alg):
            raise DimensionMismatch("map size does not match algebra dim")
        if self.side == "left":
            cube = []
            for i in range(self.dim_alg):
                plane = [[_ZERO] * self.dim_mod for _ in range(self.dim_mod)]
                for j in range(self.dim_alg):
                    p = phi.entries[j][i]
                    if not p:
                        continue
                    for q_row in range(self.dim_mod):
                        for q in range(self.dim_mod):
                            val = self.a[j][q_row][q]
                            if val:
                                plane[q_row][q] += p * val
                cube.append(tuple(tuple(r) for r in plane))
            return ActionTensor(tuple(cube), self.dim_alg, self.dim_mod, "left")
        cube = []
        for p_idx in range(self.dim_mod):
            plane = [[_ZERO] * self.dim_mod for _ in range(self.dim_alg)]
            for i in range(self.dim_alg):
                for j in range(self.dim_alg):
                    p = phi.entries[j][i]
                    if not p:
                        continue
                    for q in range(self.dim_mod):
                        val = self.a[p_idx][j][q]
                        if val:
                            plane[i][q] += p * val
            cube.append(tuple(tuple(r) for r in plane))
        return ActionTensor(tuple(cube), self.dim_alg, self.dim_mod, "right")


@dataclass(frozen=True)
class CoactionTensor:
    """Structure constants of a coaction M -> C @ M."""

    g: tuple[tuple[tuple[Fraction, ...], ...], ...]
    dim_coalg: int
    dim_mod: int

    def __post_init__(self):
        if len(self.g) != self.dim_mod:
            raise DimensionMismatch("coaction tensor first index has wrong size")
        for plane in self.g:
            if len(plane) != self.dim_coalg or any(len(row) != self.dim_mod for row in plane):
                raise DimensionMismatch("coaction tensor is not m x n x m")

    @classmethod
    def from_entries(cls, cube, dim_coalg: int, dim_mod: int) -> "CoactionTensor":
        return cls(_freeze_cube(cube), dim_coalg, dim_mod)

    @classmethod
    def zero(cls, dim_coalg: int, dim_mod: int) -> "CoactionTensor":
        return cls((((_ZERO,) * dim_mod,) * dim_coalg,) * dim_mod, dim_coalg, dim_mod)

    def of_basis(self, p: int) -> tuple[tuple[Fraction, ...], ...]:
        return self.g[p]

    def apply(self, m: Vector) -> tuple[tuple[Fraction, ...], ...]:
        """Image of m as an n x m coefficient matrix: out[i][q] = sum_p m_p g[p][i][q]."""
        if m.dim != self.dim_mod:
            raise DimensionMismatch(f"expected dim {self.dim_mod}, got {m.dim}")
        out = [[_ZERO] * self.dim_mod for _ in range(self.dim_coalg)]
        for p, mp in enumerate(m.entries):
            if not mp:
                continue
            for i in range(self.dim_coalg):
                for q in range(self.dim_mod):
                    val = self.g[p][i][q]
                    if val:
                        out[i][q] += mp * val
        return tuple(tuple(row) for row in out)

    def negated(self) -> "CoactionTensor":
        return CoactionTensor(
            tuple(tuple(tuple(-x for x in row) for row in plane) for plane in self.g),
            self.dim_coalg,
            self.dim_mod,
        )

    def postcompose_coalgebra(self, phi: LinearMap) -> "CoactionTensor":
        """Apply phi to the coalgebra leg: g'[p][i][q] = sum_l phi[i][l] g[p][l][q]."""
        if not phi.is_square(self.dim_coalg):
            raise DimensionMismatch("map size does not match coalgebra dim")
        cube = []
        for p in range(self.dim_mod):
            plane = [[_ZERO] * self.dim_mod for _ in range(self.dim_coalg)]
            for l in range(self.dim_coalg):
                for i in range(self.dim_coalg):
                    f = phi.entries[i][l]
                    if not f:
                        continue
                    for q in range(self.dim_mod):
                        val = self.g[p][l][q]
                        if val:
                            plane[i][q] += f * val
            cube.append(tuple(tuple(r) for r in plane))
        return CoactionTensor(tuple(cube), self.dim_coalg, self.dim_mod)


def apply_bilinear(t: MulTensor, x: Vector, y: Vector) -> Vector:
    return t.apply(x, y)


def apply_coaction(t: CoactionTensor, m: Vector) -> tuple[tuple[Fraction, ...], ...]:
    return t.apply(m)


def flatten_matrix(mat: Sequence[Sequence[Fraction]]) -> Vector:
    """Flatten an n1 x n2 coefficient matrix to the lexicographic tensor basis."""
    return Vector(tuple(x for row in mat for x in row))


def flatten_cube(cube: Iterable[Iterable[Iterable[Fraction]]]) -> Vector:
    return Vector(tuple(x for plane in cube for row in plane for x in row))
