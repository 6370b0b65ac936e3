"""Hom-alternative and Hom-associative algebras: exact axiom checks and twists.

A Hom-algebra is a triple (A, mul, alpha) with alpha a linear self-map.  The
left Hom-alternative law is ``mul(alpha(x), mul(x, y)) = mul(mul(x, x),
alpha(y))``; the right law mirrors it.  Over a field of characteristic zero
each law is equivalent to its polarized, fully multilinear form, so the
checkers decide it exactly by scanning all basis triples:

    left:  mul(a(x), mul(y, z)) - mul(mul(x, y), a(z))
         + mul(a(y), mul(x, z)) - mul(mul(y, x), a(z)) = 0
    right: mul(a(x), mul(y, z)) - mul(mul(x, y), a(z))
         + mul(a(x), mul(z, y)) - mul(mul(x, z), a(y)) = 0

Hom-associativity is ``mul(a(x), mul(y, z)) = mul(mul(x, y), a(z))``, checked
on basis triples directly (it is already trilinear).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import AlreadyTwisted, DimensionMismatch, NotAnticommuting, NotEndomorphism
from .exact import LinearMap, MulTensor, Vector, compose
from .report import AxiomReport, Witness

LEFT_HOM_ALT = "LEFT_HOM_ALT"
RIGHT_HOM_ALT = "RIGHT_HOM_ALT"
HOM_ASSOC = "HOM_ASSOC"
ENDOMORPHISM = "ENDOMORPHISM"
MORPHISM = "MORPHISM"
MORPHISM_MULTIPLICATIVE = "MORPHISM_MULTIPLICATIVE"
MORPHISM_TWIST_COMMUTES = "MORPHISM_TWIST_COMMUTES"


@dataclass(frozen=True)
class HomAlgebra:
    dim: int
    mu: MulTensor
    alpha: LinearMap

    def __post_init__(self):
        if self.mu.dim != self.dim:
            raise DimensionMismatch("multiplication tensor does not match dim")
        if not self.alpha.is_square(self.dim):
            raise DimensionMismatch("alpha is not square of size dim")


def _alpha_columns(a: HomAlgebra) -> list[Vector]:
    return [a.alpha.column(i) for i in range(a.dim)]


def check_left_hom_alternative(a: HomAlgebra) -> AxiomReport:
    """Decide the left Hom-alternative law via its polarized basis form."""
    mu = a.mu
    cols = _alpha_columns(a)

    def scan() -> Iterator[Witness]:
        n = a.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    r = (
                        mu.apply(cols[i], mu.product(j, k))
                        - mu.apply(mu.product(i, j), cols[k])
                        + mu.apply(cols[j], mu.product(i, k))
                        - mu.apply(mu.product(j, i), cols[k])
                    )
                    if not r.is_zero():
                        yield Witness((i, j, k), r)

    return AxiomReport.from_scan(LEFT_HOM_ALT, scan())


def check_right_hom_alternative(a: HomAlgebra) -> AxiomReport:
    """Decide the right Hom-alternative law via its polarized basis form."""
    mu = a.mu
    cols = _alpha_columns(a)

    def scan() -> Iterator[Witness]:
        n = a.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    r = (
                        mu.apply(cols[i], mu.product(j, k))
                        - mu.apply(mu.product(i, j), cols[k])
                        + mu.apply(cols[i], mu.product(k, j))
                        - mu.apply(mu.product(i, k), cols[j])
                    )
                    if not r.is_zero():
                        yield Witness((i, j, k), r)

    return AxiomReport.from_scan(RIGHT_HOM_ALT, scan())


def check_hom_associative(a: HomAlgebra) -> AxiomReport:
    mu = a.mu
    cols = _alpha_columns(a)

    def scan() -> Iterator[Witness]:
        n = a.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    r = mu.apply(cols[i], mu.product(j, k)) - mu.apply(mu.product(i, j), cols[k])
                    if not r.is_zero():
                        yield Witness((i, j, k), r)

    return AxiomReport.from_scan(HOM_ASSOC, scan())


def left_alternative_defect(a: HomAlgebra, x: Vector, y: Vector) -> Vector:
    """Direct evaluation of the unpolarized left law at arbitrary vectors."""
    mu = a.mu
    ax = a.alpha.apply(x)
    return mu.apply(ax, mu.apply(x, y)) - mu.apply(mu.apply(x, x), a.alpha.apply(y))


def right_alternative_defect(a: HomAlgebra, x: Vector, y: Vector) -> Vector:
    mu = a.mu
    return mu.apply(a.alpha.apply(x), mu.apply(y, y)) - mu.apply(mu.apply(x, y), a.alpha.apply(y))


def check_endomorphism(a: HomAlgebra, phi: LinearMap) -> AxiomReport:
    """Verify phi(e_i e_j) = phi(e_i) phi(e_j) on all basis pairs."""
    if not phi.is_square(a.dim):
        raise DimensionMismatch("endomorphism candidate has wrong shape")
    mu = a.mu
    cols = [phi.column(i) for i in range(a.dim)]

    def scan() -> Iterator[Witness]:
        for i in range(a.dim):
            for j in range(a.dim):
                r = phi.apply(mu.product(i, j)) - mu.apply(cols[i], cols[j])
                if not r.is_zero():
                    yield Witness((i, j), r)

    return AxiomReport.from_scan(ENDOMORPHISM, scan())


def negate(a: HomAlgebra) -> HomAlgebra:
    """(A, -mul, alpha): every structure constant negated."""
    return HomAlgebra(a.dim, a.mu.negated(), a.alpha)


def opposite(a: HomAlgebra) -> HomAlgebra:
    """(A, mul_op, alpha) with mul_op(x, y) = mul(y, x)."""
    return HomAlgebra(a.dim, a.mu.opposite(), a.alpha)


def yau_twist(a: HomAlgebra, phi: LinearMap) -> HomAlgebra:
    """Twist an untwisted algebra along an endomorphism: (A, phi . mul, phi).

    Refuses if the source already carries a nonidentity alpha, or if phi is
    not multiplicative.
    """
    if not a.alpha.is_identity():
        raise AlreadyTwisted("source algebra already carries a nonidentity alpha")
    endo = check_endomorphism(a, phi)
    if not endo.holds:
        raise NotEndomorphism(
            f"map is not multiplicative at {endo.total_failures} basis pairs"
        )
    return HomAlgebra(a.dim, a.mu.then_map(phi), phi)


def check_morphism(f: LinearMap, a: HomAlgebra, b: HomAlgebra) -> AxiomReport:
    """Verify f(xy) = f(x)f(y) on basis pairs and f . alpha = alpha' . f."""
    if f.dim_in != a.dim or f.dim_out != b.dim:
        raise DimensionMismatch("morphism candidate has wrong shape")
    cols = [f.column(i) for i in range(a.dim)]

    def scan_mult() -> Iterator[Witness]:
        for i in range(a.dim):
            for j in range(a.dim):
                r = f.apply(a.mu.product(i, j)) - b.mu.apply(cols[i], cols[j])
                if not r.is_zero():
                    yield Witness((i, j), r)

    def scan_comm() -> Iterator[Witness]:
        fa = compose(f, a.alpha)
        af = compose(b.alpha, f)
        for i in range(a.dim):
            r = fa.column(i) - af.column(i)
            if not r.is_zero():
                yield Witness((i,), r)

    parts = (
        AxiomReport.from_scan(MORPHISM_MULTIPLICATIVE, scan_mult()),
        AxiomReport.from_scan(MORPHISM_TWIST_COMMUTES, scan_comm()),
    )
    return AxiomReport.aggregate(MORPHISM, parts)


def check_anticommute_identity(a: HomAlgebra, x: Vector, y: Vector, z: Vector) -> bool:
    """For anticommuting x and y, test the two swap identities at (x, y, z).

    Precondition: mul(x, y) = -mul(y, x); raises otherwise.  Returns whether
    both ``mul(a(x), mul(y, z)) = -mul(a(y), mul(x, z))`` and
    ``mul(mul(z, x), a(y)) = -mul(mul(z, y), a(x))`` hold at these vectors.
    """
    mu = a.mu
    if not (mu.apply(x, y) + mu.apply(y, x)).is_zero():
        raise NotAnticommuting("arguments do not anticommute")
    ax, ay = a.alpha.apply(x), a.alpha.apply(y)
    first = mu.apply(ax, mu.apply(y, z)) + mu.apply(ay, mu.apply(x, z))
    second = mu.apply(mu.apply(z, x), ay) + mu.apply(mu.apply(z, y), ax)
    return first.is_zero() and second.is_zero()
