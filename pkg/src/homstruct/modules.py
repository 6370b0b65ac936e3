"""Modules over Hom-alternative algebras.

A left module over (A, mul, alpha) is (M, act, beta) with ``act(alpha(x),
act(x, m)) = act(mul(x, x), beta(m))``; right modules mirror the slots.  As
with the algebra laws, checks run on the polarized basis form, equivalent in
characteristic zero:

    left:  act(a(x), act(y, m)) - act(mul(x, y), b(m))
         + act(a(y), act(x, m)) - act(mul(y, x), b(m)) = 0
    right: act(act(m, x), a(y)) + act(act(m, y), a(x))
         - act(b(m), mul(x, y)) - act(b(m), mul(y, x)) = 0

The module associator is ``assoc(x, y, m) = act(a(x), act(y, m)) -
act(mul(y, x), b(m))``; note the swapped product in the second term, kept
exactly in that operand order.  On a verified left module it vanishes for
x = y and is antisymmetric in (x, y).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .algebras import HomAlgebra, negate as negate_algebra, opposite as opposite_algebra
from .errors import AlgebraMismatch, DimensionMismatch, WrongSide
from .exact import ActionTensor, LinearMap, Vector, compose, squared
from .report import AxiomReport, Witness

LEFT_MODULE = "LEFT_MODULE"
RIGHT_MODULE = "RIGHT_MODULE"
MODULE_MORPHISM = "MODULE_MORPHISM"
MODULE_MORPHISM_INTERTWINES = "MODULE_MORPHISM_INTERTWINES"
MODULE_MORPHISM_BETA_COMMUTES = "MODULE_MORPHISM_BETA_COMMUTES"


@dataclass(frozen=True)
class HomModule:
    algebra: HomAlgebra
    dim_mod: int
    beta: LinearMap
    action: ActionTensor
    side: str

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise WrongSide(f"unknown side {self.side!r}")
        if self.action.side != self.side:
            raise WrongSide("action tensor side does not match module side")
        if self.action.dim_alg != self.algebra.dim or self.action.dim_mod != self.dim_mod:
            raise DimensionMismatch("action tensor does not match algebra/module dims")
        if not self.beta.is_square(self.dim_mod):
            raise DimensionMismatch("beta is not square of size dim_mod")


def _mod_basis(mod: HomModule) -> list[Vector]:
    return [Vector.basis(mod.dim_mod, p) for p in range(mod.dim_mod)]


def check_left_module(mod: HomModule) -> AxiomReport:
    if mod.side != "left":
        raise WrongSide("left check on a right module")
    alg = mod.algebra
    act = mod.action
    acols = [alg.alpha.column(i) for i in range(alg.dim)]
    bcols = [mod.beta.column(p) for p in range(mod.dim_mod)]
    basis_a = [Vector.basis(alg.dim, i) for i in range(alg.dim)]
    basis_m = _mod_basis(mod)
    inner = [
        [act.apply_left(basis_a[i], basis_m[p]) for p in range(mod.dim_mod)]
        for i in range(alg.dim)
    ]

    def scan() -> Iterator[Witness]:
        for i in range(alg.dim):
            for j in range(alg.dim):
                mu_ij = alg.mu.product(i, j)
                mu_ji = alg.mu.product(j, i)
                for p in range(mod.dim_mod):
                    r = (
                        act.apply_left(acols[i], inner[j][p])
                        - act.apply_left(mu_ij, bcols[p])
                        + act.apply_left(acols[j], inner[i][p])
                        - act.apply_left(mu_ji, bcols[p])
                    )
                    if not r.is_zero():
                        yield Witness((i, j, p), r)

    return AxiomReport.from_scan(LEFT_MODULE, scan())


def check_right_module(mod: HomModule) -> AxiomReport:
    if mod.side != "right":
        raise WrongSide("right check on a left module")
    alg = mod.algebra
    act = mod.action
    acols = [alg.alpha.column(i) for i in range(alg.dim)]
    bcols = [mod.beta.column(p) for p in range(mod.dim_mod)]
    basis_m = _mod_basis(mod)
    basis_a = [Vector.basis(alg.dim, i) for i in range(alg.dim)]
    inner = [
        [act.apply_right(basis_m[p], basis_a[i]) for i in range(alg.dim)]
        for p in range(mod.dim_mod)
    ]

    def scan() -> Iterator[Witness]:
        for p in range(mod.dim_mod):
            for i in range(alg.dim):
                for j in range(alg.dim):
                    r = (
                        act.apply_right(inner[p][i], acols[j])
                        + act.apply_right(inner[p][j], acols[i])
                        - act.apply_right(bcols[p], alg.mu.product(i, j))
                        - act.apply_right(bcols[p], alg.mu.product(j, i))
                    )
                    if not r.is_zero():
                        yield Witness((p, i, j), r)

    return AxiomReport.from_scan(RIGHT_MODULE, scan())


def left_module_defect(mod: HomModule, x: Vector, m: Vector) -> Vector:
    """Direct evaluation of the unpolarized left module law at (x, m)."""
    alg = mod.algebra
    act = mod.action
    return act.apply_left(alg.alpha.apply(x), act.apply_left(x, m)) - act.apply_left(
        alg.mu.apply(x, x), mod.beta.apply(m)
    )


def module_hom_associator(mod: HomModule, x: Vector, y: Vector, m: Vector) -> Vector:
    """assoc(x, y, m) = act(a(x), act(y, m)) - act(mul(y, x), b(m)), exact."""
    if mod.side != "left":
        raise WrongSide("module associator is defined for left modules")
    alg = mod.algebra
    act = mod.action
    return act.apply_left(alg.alpha.apply(x), act.apply_left(y, m)) - act.apply_left(
        alg.mu.apply(y, x), mod.beta.apply(m)
    )


def twist_module(mod: HomModule) -> HomModule:
    """Replace the action by act . (alpha^2 @ id); beta and the algebra stay.

    For right modules the mirrored composition act . (id @ alpha^2) is used.
    """
    alpha2 = squared(mod.algebra.alpha)
    return HomModule(
        mod.algebra, mod.dim_mod, mod.beta, mod.action.precompose_algebra(alpha2), mod.side
    )


def negate_module(mod: HomModule) -> HomModule:
    """(M, -act, beta) over the negated algebra."""
    if mod.side != "left":
        raise WrongSide("negation construction is stated for left modules")
    return HomModule(
        negate_algebra(mod.algebra), mod.dim_mod, mod.beta, mod.action.negated(), "left"
    )


def opposite_module(mod: HomModule) -> HomModule:
    """(M, act_op, beta) as a right module over the opposite algebra."""
    if mod.side != "left":
        raise WrongSide("opposite construction is stated for left modules")
    return HomModule(
        opposite_algebra(mod.algebra), mod.dim_mod, mod.beta, mod.action.mirrored(), "right"
    )


def check_module_morphism(
    f: LinearMap, m1: HomModule, m2: HomModule, strict: bool = False
) -> AxiomReport:
    """Verify f(act(x, m)) = act'(x, f(m)) on basis pairs.

    ``strict`` additionally requires f . beta = beta' . f, a stronger notion
    than the bare intertwining condition.
    """
    if m1.algebra != m2.algebra:
        raise AlgebraMismatch("modules live over different algebras")
    if m1.side != m2.side:
        raise WrongSide("modules have different sides")
    if f.dim_in != m1.dim_mod or f.dim_out != m2.dim_mod:
        raise DimensionMismatch("morphism candidate has wrong shape")
    alg = m1.algebra
    basis_a = [Vector.basis(alg.dim, i) for i in range(alg.dim)]
    basis_m = [Vector.basis(m1.dim_mod, p) for p in range(m1.dim_mod)]
    fcols = [f.column(p) for p in range(m1.dim_mod)]

    def scan_intertwine() -> Iterator[Witness]:
        for i in range(alg.dim):
            for p in range(m1.dim_mod):
                if m1.side == "left":
                    lhs = f.apply(m1.action.apply_left(basis_a[i], basis_m[p]))
                    rhs = m2.action.apply_left(basis_a[i], fcols[p])
                else:
                    lhs = f.apply(m1.action.apply_right(basis_m[p], basis_a[i]))
                    rhs = m2.action.apply_right(fcols[p], basis_a[i])
                r = lhs - rhs
                if not r.is_zero():
                    yield Witness((i, p), r)

    parts = [AxiomReport.from_scan(MODULE_MORPHISM_INTERTWINES, scan_intertwine())]
    if strict:

        def scan_beta() -> Iterator[Witness]:
            fb = compose(f, m1.beta)
            bf = compose(m2.beta, f)
            for p in range(m1.dim_mod):
                r = fb.column(p) - bf.column(p)
                if not r.is_zero():
                    yield Witness((p,), r)

        parts.append(AxiomReport.from_scan(MODULE_MORPHISM_BETA_COMMUTES, scan_beta()))
    return AxiomReport.aggregate(MODULE_MORPHISM, parts)


def regular_module(alg: HomAlgebra, side: str = "left") -> HomModule:
    """The algebra acting on itself: M = A, beta = alpha, action = mul."""
    if side == "left":
        action = ActionTensor(alg.mu.c, alg.dim, alg.dim, "left")
    else:
        action = ActionTensor(alg.mu.c, alg.dim, alg.dim, "right")
    return HomModule(alg, alg.dim, alg.alpha, action, side)
