"""Comodules over Hom-coassociative, Hom-Lie, and Hom-Poisson coalgebras.

A comodule is (M, beta) with one or two coactions M -> A @ M, written
``dm(m) = m(-1) @ m(0)`` for the comultiplication side and ``gm(m) =
m[-1] @ m[0]`` for the cobracket side.  The checked laws, per basis vector
of M and with residuals flattened lexicographically:

    coassociative kind (dm only):
        dm . beta = (alpha @ beta) . dm
        (alpha @ dm) . dm = (delta @ beta) . dm
    lie kind (gm only):
        gm . beta = (alpha @ beta) . gm
        (gamma @ beta) . gm = (alpha @ gm) . gm - (tau @ id) . (alpha @ gm) . gm
    poisson kind (both maps), additionally:
        alpha(m[-1]) @ dm(m[0])  =  gamma(m(-1)) @ beta(m(0))
                                  + swap12( alpha(m(-1)) @ gm(m(0)) )
        delta(m[-1]) @ beta(m[0]) =  alpha(m(-1)) @ gm(m(0))
                                  + swap12( alpha(m(-1)) @ gm(m(0)) )

The mixed laws are implemented in exactly these component (Sweedler) forms;
swap12 exchanges the first two tensor legs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .coalgebras import HomPoissonCoalgebra, negate_coalgebra
from .errors import CoalgebraMismatch, DimensionMismatch, KindMismatch
from .exact import CoactionTensor, ComulTensor, LinearMap, compose, flatten_cube, flatten_matrix, squared
from .report import AxiomReport, Witness

COASSOC_COMODULE = "COASSOC_COMODULE"
LIE_COMODULE = "LIE_COMODULE"
POISSON_COMODULE = "POISSON_COMODULE"
DELTA_COACTION_MULTIPLICATIVITY = "DELTA_COACTION_MULTIPLICATIVITY"
DELTA_COACTION_COASSOCIATIVITY = "DELTA_COACTION_COASSOCIATIVITY"
GAMMA_COACTION_MULTIPLICATIVITY = "GAMMA_COACTION_MULTIPLICATIVITY"
GAMMA_COACTION_COMPATIBILITY = "GAMMA_COACTION_COMPATIBILITY"
COMODULE_COLEIBNIZ = "COMODULE_COLEIBNIZ"
COMODULE_COMULT_COMPAT = "COMODULE_COMULT_COMPAT"
COMODULE_MORPHISM = "COMODULE_MORPHISM"
COMODULE_MORPHISM_DELTA = "COMODULE_MORPHISM_DELTA"
COMODULE_MORPHISM_GAMMA = "COMODULE_MORPHISM_GAMMA"
COMODULE_MORPHISM_BETA_COMMUTES = "COMODULE_MORPHISM_BETA_COMMUTES"

KINDS = ("coassociative", "lie", "poisson")

_ZERO = Fraction(0)


@dataclass(frozen=True)
class HomComodule:
    coalgebra: HomPoissonCoalgebra
    dim_mod: int
    beta: LinearMap
    kind: str
    delta_m: Optional[CoactionTensor] = None
    gamma_m: Optional[CoactionTensor] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise KindMismatch(f"unknown comodule kind {self.kind!r}")
        needs_delta = self.kind in ("coassociative", "poisson")
        needs_gamma = self.kind in ("lie", "poisson")
        if needs_delta != (self.delta_m is not None):
            raise KindMismatch("comultiplication-side coaction presence does not match kind")
        if needs_gamma != (self.gamma_m is not None):
            raise KindMismatch("cobracket-side coaction presence does not match kind")
        for t in (self.delta_m, self.gamma_m):
            if t is not None and (t.dim_coalg != self.coalgebra.dim or t.dim_mod != self.dim_mod):
                raise DimensionMismatch("coaction tensor does not match coalgebra/module dims")
        if not self.beta.is_square(self.dim_mod):
            raise DimensionMismatch("beta is not square of size dim_mod")


def with_coalgebra(c: HomComodule, base: HomPoissonCoalgebra) -> HomComodule:
    """The same structure maps viewed over a different base coalgebra."""
    if base.dim != c.coalgebra.dim:
        raise DimensionMismatch("replacement coalgebra has a different dimension")
    return HomComodule(base, c.dim_mod, c.beta, c.kind, c.delta_m, c.gamma_m)


def _beta_compat_report(axiom: str, t: CoactionTensor, alpha: LinearMap, beta: LinearMap) -> AxiomReport:
    """coaction . beta = (alpha @ beta) . coaction, per basis vector of M."""
    n, m = t.dim_coalg, t.dim_mod

    def scan() -> Iterator[Witness]:
        for p in range(m):
            lhs = [[_ZERO] * m for _ in range(n)]
            for r in range(m):
                b = beta.entries[r][p]
                if not b:
                    continue
                plane = t.g[r]
                for i in range(n):
                    for q in range(m):
                        v = plane[i][q]
                        if v:
                            lhs[i][q] += b * v
            rhs = [[_ZERO] * m for _ in range(n)]
            plane = t.g[p]
            for a_idx in range(n):
                for q_idx in range(m):
                    v = plane[a_idx][q_idx]
                    if not v:
                        continue
                    for i in range(n):
                        ai = alpha.entries[i][a_idx]
                        if not ai:
                            continue
                        for q in range(m):
                            bq = beta.entries[q][q_idx]
                            if bq:
                                rhs[i][q] += v * ai * bq
            res = [[lhs[i][q] - rhs[i][q] for q in range(m)] for i in range(n)]
            if any(x for row in res for x in row):
                yield Witness((p,), flatten_matrix(res))

    return AxiomReport.from_scan(axiom, scan())


def _coassoc_compat_report(t: CoactionTensor, delta: ComulTensor, alpha: LinearMap, beta: LinearMap) -> AxiomReport:
    """(alpha @ dm) . dm = (delta @ beta) . dm in A @ A @ M."""
    n, m = t.dim_coalg, t.dim_mod

    def scan() -> Iterator[Witness]:
        for p in range(m):
            lhs = [[[_ZERO] * m for _ in range(n)] for _ in range(n)]
            rhs = [[[_ZERO] * m for _ in range(n)] for _ in range(n)]
            plane = t.g[p]
            for a_idx in range(n):
                for q_idx in range(m):
                    v = plane[a_idx][q_idx]
                    if not v:
                        continue
                    inner = t.g[q_idx]
                    for i in range(n):
                        ai = alpha.entries[i][a_idx]
                        if not ai:
                            continue
                        for j in range(n):
                            for q in range(m):
                                w = inner[j][q]
                                if w:
                                    lhs[i][j][q] += v * ai * w
                    dplane = delta.d[a_idx]
                    for i in range(n):
                        for j in range(n):
                            w = dplane[i][j]
                            if not w:
                                continue
                            for q in range(m):
                                bq = beta.entries[q][q_idx]
                                if bq:
                                    rhs[i][j][q] += v * w * bq
            res = [
                [[lhs[i][j][q] - rhs[i][j][q] for q in range(m)] for j in range(n)]
                for i in range(n)
            ]
            if any(x for plane2 in res for row in plane2 for x in row):
                yield Witness((p,), flatten_cube(res))

    return AxiomReport.from_scan(DELTA_COACTION_COASSOCIATIVITY, scan())


def check_coassoc_comodule(c: HomComodule) -> AxiomReport:
    if c.kind not in ("coassociative", "poisson"):
        raise KindMismatch("comultiplication-side check needs a coassociative or poisson comodule")
    base = c.coalgebra
    parts = (
        _beta_compat_report(DELTA_COACTION_MULTIPLICATIVITY, c.delta_m, base.alpha, c.beta),
        _coassoc_compat_report(c.delta_m, base.delta, base.alpha, c.beta),
    )
    return AxiomReport.aggregate(COASSOC_COMODULE, parts)


def _lie_compat_report(t: CoactionTensor, gamma: ComulTensor, alpha: LinearMap, beta: LinearMap) -> AxiomReport:
    """(gamma @ beta) . gm = (alpha @ gm) . gm - swap12 . (alpha @ gm) . gm."""
    n, m = t.dim_coalg, t.dim_mod

    def scan() -> Iterator[Witness]:
        for p in range(m):
            lhs = [[[_ZERO] * m for _ in range(n)] for _ in range(n)]
            plane = t.g[p]
            for a_idx in range(n):
                for q_idx in range(m):
                    v = plane[a_idx][q_idx]
                    if not v:
                        continue
                    gplane = gamma.d[a_idx]
                    for i in range(n):
                        for j in range(n):
                            w = gplane[i][j]
                            if not w:
                                continue
                            for q in range(m):
                                bq = beta.entries[q][q_idx]
                                if bq:
                                    lhs[i][j][q] += v * w * bq
            rhs = [[[_ZERO] * m for _ in range(n)] for _ in range(n)]
            for a_idx in range(n):
                for q_idx in range(m):
                    v = plane[a_idx][q_idx]
                    if not v:
                        continue
                    inner = t.g[q_idx]
                    for i in range(n):
                        ai = alpha.entries[i][a_idx]
                        if not ai:
                            continue
                        for j in range(n):
                            for q in range(m):
                                w = inner[j][q]
                                if w:
                                    s = v * ai * w
                                    rhs[i][j][q] += s
                                    rhs[j][i][q] -= s
            res = [
                [[lhs[i][j][q] - rhs[i][j][q] for q in range(m)] for j in range(n)]
                for i in range(n)
            ]
            if any(x for plane2 in res for row in plane2 for x in row):
                yield Witness((p,), flatten_cube(res))

    return AxiomReport.from_scan(GAMMA_COACTION_COMPATIBILITY, scan())


def check_lie_comodule(c: HomComodule) -> AxiomReport:
    if c.kind not in ("lie", "poisson"):
        raise KindMismatch("cobracket-side check needs a lie or poisson comodule")
    base = c.coalgebra
    parts = (
        _beta_compat_report(GAMMA_COACTION_MULTIPLICATIVITY, c.gamma_m, base.alpha, c.beta),
        _lie_compat_report(c.gamma_m, base.gamma, base.alpha, c.beta),
    )
    return AxiomReport.aggregate(LIE_COMODULE, parts)


def _mixed_coleibniz_report(c: HomComodule) -> AxiomReport:
    """alpha(m[-1]) @ dm(m[0]) = gamma(m(-1)) @ beta(m(0)) + swap12(alpha(m(-1)) @ gm(m(0)))."""
    base = c.coalgebra
    dm, gm = c.delta_m, c.gamma_m
    n, m = base.dim, c.dim_mod
    alpha, beta = base.alpha, c.beta

    def scan() -> Iterator[Witness]:
        for p in range(m):
            lhs = [[[_ZERO] * m for _ in range(n)] for _ in range(n)]
            for a_idx in range(n):
                for q_idx in range(m):
                    v = gm.g[p][a_idx][q_idx]
                    if not v:
                        continue
                    inner = dm.g[q_idx]
                    for i in range(n):
                        ai = alpha.entries[i][a_idx]
                        if not ai:
                            continue
                        for j in range(n):
                            for q in range(m):
                                w = inner[j][q]
                                if w:
                                    lhs[i][j][q] += v * ai * w
            rhs = [[[_ZERO] * m for _ in range(n)] for _ in range(n)]
            for a_idx in range(n):
                for q_idx in range(m):
                    v = dm.g[p][a_idx][q_idx]
                    if not v:
                        continue
                    gplane = base.gamma.d[a_idx]
                    for i in range(n):
                        for j in range(n):
                            w = gplane[i][j]
                            if not w:
                                continue
                            for q in range(m):
                                bq = beta.entries[q][q_idx]
                                if bq:
                                    rhs[i][j][q] += v * w * bq
                    inner = gm.g[q_idx]
                    for j in range(n):
                        aj = alpha.entries[j][a_idx]
                        if not aj:
                            continue
                        for i in range(n):
                            for q in range(m):
                                w = inner[i][q]
                                if w:
                                    rhs[i][j][q] += v * aj * w
            res = [
                [[lhs[i][j][q] - rhs[i][j][q] for q in range(m)] for j in range(n)]
                for i in range(n)
            ]
            if any(x for plane2 in res for row in plane2 for x in row):
                yield Witness((p,), flatten_cube(res))

    return AxiomReport.from_scan(COMODULE_COLEIBNIZ, scan())


def _mixed_comult_report(c: HomComodule) -> AxiomReport:
    """delta(m[-1]) @ beta(m[0]) = alpha(m(-1)) @ gm(m(0)) + swap12 of the same."""
    base = c.coalgebra
    dm, gm = c.delta_m, c.gamma_m
    n, m = base.dim, c.dim_mod
    alpha, beta = base.alpha, c.beta

    def scan() -> Iterator[Witness]:
        for p in range(m):
            lhs = [[[_ZERO] * m for _ in range(n)] for _ in range(n)]
            for a_idx in range(n):
                for q_idx in range(m):
                    v = gm.g[p][a_idx][q_idx]
                    if not v:
                        continue
                    dplane = base.delta.d[a_idx]
                    for i in range(n):
                        for j in range(n):
                            w = dplane[i][j]
                            if not w:
                                continue
                            for q in range(m):
                                bq = beta.entries[q][q_idx]
                                if bq:
                                    lhs[i][j][q] += v * w * bq
            rhs = [[[_ZERO] * m for _ in range(n)] for _ in range(n)]
            for a_idx in range(n):
                for q_idx in range(m):
                    v = dm.g[p][a_idx][q_idx]
                    if not v:
                        continue
                    inner = gm.g[q_idx]
                    for i in range(n):
                        ai = alpha.entries[i][a_idx]
                        if not ai:
                            continue
                        for j in range(n):
                            for q in range(m):
                                w = inner[j][q]
                                if w:
                                    s = v * ai * w
                                    rhs[i][j][q] += s
                                    rhs[j][i][q] += s
            res = [
                [[lhs[i][j][q] - rhs[i][j][q] for q in range(m)] for j in range(n)]
                for i in range(n)
            ]
            if any(x for plane2 in res for row in plane2 for x in row):
                yield Witness((p,), flatten_cube(res))

    return AxiomReport.from_scan(COMODULE_COMULT_COMPAT, scan())


def check_poisson_comodule(c: HomComodule) -> AxiomReport:
    if c.kind != "poisson":
        raise KindMismatch("poisson check needs a poisson comodule")
    parts: list[AxiomReport] = []
    parts.extend(check_coassoc_comodule(c).parts)
    parts.extend(check_lie_comodule(c).parts)
    parts.append(_mixed_coleibniz_report(c))
    parts.append(_mixed_comult_report(c))
    return AxiomReport.aggregate(POISSON_COMODULE, parts)


def twist_coassoc_comodule(c: HomComodule) -> HomComodule:
    """Replace dm by (alpha^2 @ id) . dm; beta and the base stay put."""
    if c.kind not in ("coassociative", "poisson"):
        raise KindMismatch("comultiplication-side twist needs a coassociative or poisson comodule")
    alpha2 = squared(c.coalgebra.alpha)
    return HomComodule(
        c.coalgebra, c.dim_mod, c.beta, c.kind, c.delta_m.postcompose_coalgebra(alpha2), c.gamma_m
    )


def twist_lie_comodule(c: HomComodule) -> HomComodule:
    """Replace gm by (alpha^2 @ id) . gm."""
    if c.kind not in ("lie", "poisson"):
        raise KindMismatch("cobracket-side twist needs a lie or poisson comodule")
    alpha2 = squared(c.coalgebra.alpha)
    return HomComodule(
        c.coalgebra, c.dim_mod, c.beta, c.kind, c.delta_m, c.gamma_m.postcompose_coalgebra(alpha2)
    )


def twist_poisson_comodule(c: HomComodule) -> HomComodule:
    """Twist both coactions by (alpha^2 @ id)."""
    if c.kind != "poisson":
        raise KindMismatch("poisson twist needs a poisson comodule")
    alpha2 = squared(c.coalgebra.alpha)
    return HomComodule(
        c.coalgebra,
        c.dim_mod,
        c.beta,
        "poisson",
        c.delta_m.postcompose_coalgebra(alpha2),
        c.gamma_m.postcompose_coalgebra(alpha2),
    )


def negate_poisson_comodule(c: HomComodule) -> HomComodule:
    """(M, -dm, -gm, beta) over the negated base coalgebra."""
    if c.kind != "poisson":
        raise KindMismatch("negation construction is stated for poisson comodules")
    return HomComodule(
        negate_coalgebra(c.coalgebra),
        c.dim_mod,
        c.beta,
        "poisson",
        c.delta_m.negated(),
        c.gamma_m.negated(),
    )


def check_comodule_morphism(
    f: LinearMap, c1: HomComodule, c2: HomComodule, strict: bool = False
) -> AxiomReport:
    """Verify (id @ f) . coaction1 = coaction2 . f for the maps the kind carries."""
    if c1.coalgebra != c2.coalgebra:
        raise CoalgebraMismatch("comodules live over different coalgebras")
    if c1.kind != c2.kind:
        raise KindMismatch("comodules have different kinds")
    if f.dim_in != c1.dim_mod or f.dim_out != c2.dim_mod:
        raise DimensionMismatch("morphism candidate has wrong shape")
    n = c1.coalgebra.dim

    def intertwine(t1: CoactionTensor, t2: CoactionTensor, tag: str) -> AxiomReport:
        def gen() -> Iterator[Witness]:
            for p in range(c1.dim_mod):
                lhs = [[_ZERO] * c2.dim_mod for _ in range(n)]
                plane = t1.g[p]
                for i in range(n):
                    for q_idx in range(c1.dim_mod):
                        v = plane[i][q_idx]
                        if not v:
                            continue
                        for q in range(c2.dim_mod):
                            fq = f.entries[q][q_idx]
                            if fq:
                                lhs[i][q] += v * fq
                rhs = [[_ZERO] * c2.dim_mod for _ in range(n)]
                for r in range(c2.dim_mod):
                    fr = f.entries[r][p]
                    if not fr:
                        continue
                    plane2 = t2.g[r]
                    for i in range(n):
                        for q in range(c2.dim_mod):
                            w = plane2[i][q]
                            if w:
                                rhs[i][q] += fr * w
                res = [[lhs[i][q] - rhs[i][q] for q in range(c2.dim_mod)] for i in range(n)]
                if any(x for row in res for x in row):
                    yield Witness((p,), flatten_matrix(res))

        return AxiomReport.from_scan(tag, gen())

    parts: list[AxiomReport] = []
    if c1.kind in ("coassociative", "poisson"):
        parts.append(intertwine(c1.delta_m, c2.delta_m, COMODULE_MORPHISM_DELTA))
    if c1.kind in ("lie", "poisson"):
        parts.append(intertwine(c1.gamma_m, c2.gamma_m, COMODULE_MORPHISM_GAMMA))
    if strict:

        def scan_beta() -> Iterator[Witness]:
            fb = compose(f, c1.beta)
            bf = compose(c2.beta, f)
            for p in range(c1.dim_mod):
                r = fb.column(p) - bf.column(p)
                if not r.is_zero():
                    yield Witness((p,), r)

        parts.append(AxiomReport.from_scan(COMODULE_MORPHISM_BETA_COMMUTES, scan_beta()))
    return AxiomReport.aggregate(COMODULE_MORPHISM, parts)


def regular_comodule(base: HomPoissonCoalgebra, kind: str = "poisson") -> HomComodule:
    """M = A with beta = alpha and the coalgebra's own maps as coactions."""
    dm = CoactionTensor(base.delta.d, base.dim, base.dim) if kind in ("coassociative", "poisson") else None
    gm = CoactionTensor(base.gamma.d, base.dim, base.dim) if kind in ("lie", "poisson") else None
    return HomComodule(base, base.dim, base.alpha, kind, dm, gm)
