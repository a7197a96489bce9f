"""Inequality verification: Harnack bounds, eigenvalue lower bounds, and the
Cheeger sandwich, aggregated into a BoundsReport.

Every record stores both sides of its inequality; pass means
LHS <= RHS + 1e-9 * max(1, |RHS|). Eigenpairs are normalized to
max_z |f(z)| = 1 before recording, so left- and right-hand sides are directly
comparable across pairs. Bounds whose right-hand side is nonpositive are
reported as passing trivially with an explicit vacuous flag, never suppressed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .combinatorics import DEFAULT_BUDGET, cheeger_number, magnetic_girth
from .curvature import kappa_max
from .errors import PreconditionError, SizeError
from .graphs import MagneticGraph, diameter, is_connected, signature_status
from .lift import build_lift
from .operators import energy, spectrum

__all__ = [
    "INEQ_TOL",
    "HarnackRecord",
    "AlphaRecord",
    "EigenvalueBoundRecord",
    "CheegerBoundRecord",
    "BoundsReport",
    "harnack_check",
    "alpha_bound_check",
    "eigenvalue_lower_bound",
    "cheeger_bound_check",
    "verify_report",
]

INEQ_TOL = 1e-9
TRIVIAL_EIGENVALUE = 1e-12


def _passes(lhs: float, rhs: float) -> bool:
    return bool(lhs <= rhs + INEQ_TOL * max(1.0, abs(rhs)))


def _resolve_kappa(g: MagneticGraph, n: float, kappa, kind: str) -> float:
    if kappa == "auto" or kappa is None:
        return kappa_max(g, n, kind).kappa_max
    return float(kappa)


def _normalized_eigenpairs(g: MagneticGraph, kind: str):
    """Nontrivial eigenpairs of -Laplacian, each scaled to max |f| = 1."""
    spec = spectrum(g, kind)
    out = []
    for i, lam in enumerate(spec.eigenvalues):
        if lam <= TRIVIAL_EIGENVALUE:
            continue
        f = spec.eigenvectors[:, i]
        out.append((i, float(lam), f / np.abs(f).max()))
    return out


@dataclass(frozen=True)
class HarnackRecord:
    """max_x |grad f|^2(x) <= ((8 - 2/n) lambda - 4 kappa) max_z |f|^2(z)."""

    eigen_index: int
    lam: float
    lhs: float
    rhs: float
    slack: float
    passed: bool

    def to_json_dict(self) -> dict:
        return {"eigen_index": self.eigen_index, "lambda": self.lam,
                "lhs": self.lhs, "rhs": self.rhs, "slack": self.slack,
                "passed": self.passed}


def harnack_check(g: MagneticGraph, n: float, kappa="auto",
                  kind: str = "magnetic") -> list[HarnackRecord]:
    """Check the eigenfunction Harnack inequality for every nontrivial eigenpair.

    kappa = "auto" certifies the tightest instance, kappa_max(g, n, kind).
    Eigenvalues below 1e-12 are skipped as trivial. Magnetic kind requires a
    connected graph.
    """
    if kind == "magnetic" and not is_connected(g):
        raise PreconditionError("connected")
    kap = _resolve_kappa(g, n, kappa, kind)
    invn = 0.0 if n == math.inf else 1.0 / n
    records = []
    for i, lam, f in _normalized_eigenpairs(g, kind):
        lhs = float(energy(g, f, kind).max())
        rhs = ((8.0 - 2.0 * invn) * lam - 4.0 * kap)
        records.append(HarnackRecord(eigen_index=i, lam=lam, lhs=lhs, rhs=rhs,
                                     slack=rhs - lhs, passed=_passes(lhs, rhs)))
    return records


@dataclass(frozen=True)
class AlphaRecord:
    """|grad f|^2(x) + alpha lambda |f|^2(x), per vertex, against the
    alpha-parameterized right-hand side."""

    eigen_index: int
    lam: float
    alpha: float
    applicable: bool
    ill_conditioned: bool
    lhs_per_vertex: tuple[float, ...]
    rhs: float
    passed: bool

    def to_json_dict(self) -> dict:
        return {"eigen_index": self.eigen_index, "lambda": self.lam,
                "alpha": self.alpha, "applicable": self.applicable,
                "ill_conditioned": self.ill_conditioned,
                "lhs_per_vertex": list(self.lhs_per_vertex), "rhs": self.rhs,
                "passed": self.passed}


def alpha_bound_check(g: MagneticGraph, n: float, kappa: float, alpha: float,
                      kind: str = "magnetic") -> list[AlphaRecord]:
    """Per-eigenpair, per-vertex check of the alpha-parameterized energy bound.

    An eigenpair is applicable when alpha > 2 - 2 kappa / lambda; a denominator
    below 1e-8 * max(1, lambda) flags the record ill-conditioned. At
    alpha = 4 - 2 kappa / lambda the right-hand side reduces exactly to the
    Harnack one. Inapplicable alphas are reported, not raised.
    """
    invn = 0.0 if n == math.inf else 1.0 / n
    records = []
    for i, lam, f in _normalized_eigenpairs(g, kind):
        applicable = alpha > 2.0 - 2.0 * kappa / lam
        denom = (alpha - 2.0) * lam + 2.0 * kappa
        ill = abs(denom) <= 1e-8 * max(1.0, lam)
        lhs = energy(g, f, kind) + alpha * lam * np.abs(f) ** 2
        if applicable and not ill:
            rhs = ((alpha * alpha - 4.0 * invn) * lam + 2.0 * kappa * alpha) / denom * lam
            passed = bool(all(_passes(float(v), rhs) for v in lhs))
        else:
            rhs = math.nan
            passed = False
        records.append(AlphaRecord(eigen_index=i, lam=lam, alpha=alpha,
                                   applicable=applicable, ill_conditioned=ill,
                                   lhs_per_vertex=tuple(float(v) for v in lhs),
                                   rhs=rhs, passed=passed))
    return records


@dataclass(frozen=True)
class EigenvalueBoundRecord:
    """lambda_min of -magnetic Laplacian against the curvature/path bound.

    ``bound`` uses (2D + ell*girth)^2 in numerator and denominator; for
    transparency ``bound_alt`` keeps the squared length only in the numerator
    and uses (2 + ell*girth)^2 in the denominator; ``lift_bound`` substitutes
    the actual lift diameter.
    """

    lambda_min: float
    diameter: int
    lift_diameter: int
    girth: int
    max_degree: float
    n: float
    kappa: float
    bound: float
    bound_alt: float
    lift_bound: float
    passed: bool
    passed_lift: bool
    vacuous: bool
    vacuous_lift: bool

    def to_json_dict(self) -> dict:
        return {"lambda_min": self.lambda_min, "diameter": self.diameter,
                "lift_diameter": self.lift_diameter, "girth": self.girth,
                "max_degree": self.max_degree, "n": self.n, "kappa": self.kappa,
                "bound": self.bound, "bound_alt": self.bound_alt,
                "lift_bound": self.lift_bound, "passed": self.passed,
                "passed_lift": self.passed_lift, "vacuous": self.vacuous,
                "vacuous_lift": self.vacuous_lift}


def _curvature_path_bound(kappa: float, d: float, n: float, length_sq_num: float,
                          length_sq_den: float) -> float:
    invn = 0.0 if n == math.inf else 1.0 / n
    return (1.0 + 4.0 * kappa * d * length_sq_num) / (d * (8.0 - 2.0 * invn) * length_sq_den)


def eigenvalue_lower_bound(g: MagneticGraph, n: float, kappa="auto",
                           budget: int = DEFAULT_BUDGET) -> EigenvalueBoundRecord:
    """Lower-bound the least eigenvalue of -magnetic Laplacian by curvature and
    extremal path quantities.

    Hypotheses: connected, unbalanced, entire signature, finite magnetic
    girth; the failed one is named in PreconditionError. Both the
    (2D + ell*girth)-based bound and the lift-diameter bound are checked.
    """
    if not is_connected(g):
        raise PreconditionError("connected")
    status = signature_status(g)
    if status.balanced:
        raise PreconditionError("unbalanced")
    if not status.entire:
        raise PreconditionError("entire signature")
    girth = magnetic_girth(g, budget=budget)
    if girth == math.inf:
        raise PreconditionError("finite magnetic girth")
    kap = _resolve_kappa(g, n, kappa, "magnetic")
    d = g.max_degree
    dia = int(diameter(g))
    length = 2 * dia + g.ell * int(girth)
    lam_min = float(spectrum(g, "magnetic").eigenvalues[0])
    lift_dia = int(diameter(build_lift(g).graph))
    bound = _curvature_path_bound(kap, d, n, length ** 2, length ** 2)
    bound_alt = _curvature_path_bound(kap, d, n, length ** 2,
                                      (2 + g.ell * int(girth)) ** 2)
    lift_bound = _curvature_path_bound(kap, d, n, lift_dia ** 2, lift_dia ** 2)
    return EigenvalueBoundRecord(
        lambda_min=lam_min, diameter=dia, lift_diameter=lift_dia,
        girth=int(girth), max_degree=d, n=n, kappa=kap,
        bound=bound, bound_alt=bound_alt, lift_bound=lift_bound,
        passed=_passes(bound, lam_min), passed_lift=_passes(lift_bound, lam_min),
        vacuous=bound <= 0.0, vacuous_lift=lift_bound <= 0.0)


@dataclass(frozen=True)
class CheegerBoundRecord:
    """Sandwich lambda/2 <= h1 <= 2 sqrt(2 d lambda), plus the curvature/path
    lower bound on h1 when its hypotheses hold (None otherwise)."""

    lambda_min: float
    h1: float
    max_degree: float
    lower: float
    upper: float
    lower_passed: bool
    upper_passed: bool
    curvature_lower: float | None
    curvature_lower_passed: bool | None
    curvature_lower_vacuous: bool | None

    def to_json_dict(self) -> dict:
        return {"lambda_min": self.lambda_min, "h1": self.h1,
                "max_degree": self.max_degree, "lower": self.lower,
                "upper": self.upper, "lower_passed": self.lower_passed,
                "upper_passed": self.upper_passed,
                "curvature_lower": self.curvature_lower,
                "curvature_lower_passed": self.curvature_lower_passed,
                "curvature_lower_vacuous": self.curvature_lower_vacuous}


def cheeger_bound_check(g: MagneticGraph, n: float,
                        budget: int = DEFAULT_BUDGET) -> CheegerBoundRecord:
    """Verify the Cheeger sandwich with the exact Cheeger number.

    The curvature/path lower bound additionally needs the eigenvalue-bound
    hypotheses (connected, unbalanced, entire, finite girth); when they fail
    it is recorded as not applicable rather than raised.
    """
    lam = float(spectrum(g, "magnetic").eigenvalues[0])
    h1 = cheeger_number(g, mode="exact", budget=budget).h1
    d = g.max_degree
    lower = 0.5 * lam
    upper = 2.0 * math.sqrt(2.0 * d * lam) if lam > 0 else 0.0
    curvature_lower = None
    curvature_passed = None
    curvature_vacuous = None
    status = signature_status(g)
    if is_connected(g) and not status.balanced and status.entire:
        girth = magnetic_girth(g, budget=budget)
        if girth != math.inf:
            kap = kappa_max(g, n, "magnetic").kappa_max
            length = 2 * int(diameter(g)) + g.ell * int(girth)
            invn = 0.0 if n == math.inf else 1.0 / n
            curvature_lower = (1.0 + 4.0 * kap * d * length ** 2) / (
                d * (16.0 - 4.0 * invn) * length ** 2)
            curvature_passed = _passes(curvature_lower, h1)
            curvature_vacuous = curvature_lower <= 0.0
    return CheegerBoundRecord(
        lambda_min=lam, h1=h1, max_degree=d, lower=lower, upper=upper,
        lower_passed=_passes(lower, h1), upper_passed=_passes(h1, upper),
        curvature_lower=curvature_lower,
        curvature_lower_passed=curvature_passed,
        curvature_lower_vacuous=curvature_vacuous)


@dataclass(frozen=True)
class BoundsReport:
    """All verified inequalities for one graph, with hypothesis flags."""

    num_vertices: int
    ell: int
    n: float
    kappa: float
    connected: bool
    balanced: bool
    entire: bool
    girth_finite: bool
    harnack: tuple[HarnackRecord, ...]
    alpha: tuple[AlphaRecord, ...]
    eigenvalue: EigenvalueBoundRecord | None
    eigenvalue_skipped: str | None
    cheeger: CheegerBoundRecord | None
    cheeger_skipped: str | None

    @property
    def all_passed(self) -> bool:
        ok = all(r.passed for r in self.harnack)
        ok = ok and all(r.passed for r in self.alpha
                        if r.applicable and not r.ill_conditioned)
        if self.eigenvalue is not None:
            ok = ok and self.eigenvalue.passed and self.eigenvalue.passed_lift
        if self.cheeger is not None:
            ok = ok and self.cheeger.lower_passed and self.cheeger.upper_passed
            if self.cheeger.curvature_lower_passed is not None:
                ok = ok and self.cheeger.curvature_lower_passed
        return ok

    def to_json_dict(self) -> dict:
        return {
            "num_vertices": self.num_vertices,
            "ell": self.ell,
            "n": self.n,
            "kappa": self.kappa,
            "hypotheses": {"connected": self.connected, "balanced": self.balanced,
                           "entire": self.entire, "girth_finite": self.girth_finite},
            "harnack": [r.to_json_dict() for r in self.harnack],
            "alpha": [r.to_json_dict() for r in self.alpha],
            "eigenvalue_bound": (self.eigenvalue.to_json_dict()
                                 if self.eigenvalue is not None else None),
            "eigenvalue_bound_skipped": self.eigenvalue_skipped,
            "cheeger": (self.cheeger.to_json_dict()
                        if self.cheeger is not None else None),
            "cheeger_skipped": self.cheeger_skipped,
            "all_passed": self.all_passed,
        }

    def to_markdown(self) -> str:
        def fmt(x):
            if x is None:
                return "-"
            if isinstance(x, bool):
                return "pass" if x else "FAIL"
            if isinstance(x, float):
                return format(x, ".12g")
            return str(x)

        lines = [
            f"# Verification report (N={self.num_vertices}, ell={self.ell}, "
            f"n={fmt(self.n)}, kappa={fmt(self.kappa)})",
            "",
            f"hypotheses: connected={self.connected} balanced={self.balanced} "
            f"entire={self.entire} girth_finite={self.girth_finite}",
            "",
            "| check | parameter | LHS | RHS | status |",
            "|---|---|---|---|---|",
        ]
        for r in self.harnack:
            lines.append(f"| harnack | lambda={fmt(r.lam)} | {fmt(r.lhs)} "
                         f"| {fmt(r.rhs)} | {fmt(r.passed)} |")
        for r in self.alpha:
            status = ("n/a" if not r.applicable
                      else "ill-cond" if r.ill_conditioned else fmt(r.passed))
            lines.append(f"| alpha-bound | alpha={fmt(r.alpha)}, lambda={fmt(r.lam)} "
                         f"| {fmt(max(r.lhs_per_vertex))} | {fmt(r.rhs)} | {status} |")
        if self.eigenvalue is not None:
            e = self.eigenvalue
            lines.append(f"| eigenvalue bound | L=2D+ell*g | {fmt(e.bound)} "
                         f"| {fmt(e.lambda_min)} | {fmt(e.passed)} |")
            lines.append(f"| eigenvalue bound | lift diameter | {fmt(e.lift_bound)} "
                         f"| {fmt(e.lambda_min)} | {fmt(e.passed_lift)} |")
        else:
            lines.append(f"| eigenvalue bound | - | - | - | skipped: {self.eigenvalue_skipped} |")
        if self.cheeger is not None:
            c = self.cheeger
            lines.append(f"| cheeger lower | lambda/2 | {fmt(c.lower)} | {fmt(c.h1)} "
                         f"| {fmt(c.lower_passed)} |")
            lines.append(f"| cheeger upper | 2 sqrt(2 d lambda) | {fmt(c.h1)} "
                         f"| {fmt(c.upper)} | {fmt(c.upper_passed)} |")
            if c.curvature_lower is not None:
                lines.append(f"| cheeger curvature lower | - | {fmt(c.curvature_lower)} "
                             f"| {fmt(c.h1)} | {fmt(c.curvature_lower_passed)} |")
        else:
            lines.append(f"| cheeger | - | - | - | skipped: {self.cheeger_skipped} |")
        lines.append("")
        lines.append(f"overall: {'all pass' if self.all_passed else 'FAILURES PRESENT'}")
        return "\n".join(lines)


def verify_report(g: MagneticGraph, n: float = 2.0, kappa="auto",
                  budget: int = DEFAULT_BUDGET) -> BoundsReport:
    """Run every applicable inequality check on one graph.

    Requires a connected graph. kappa = "auto" uses the certified
    kappa_max(n, magnetic); every eigenpair gets one alpha record at the
    reduction value alpha = 4 - 2 kappa / lambda. Bound checks whose
    hypotheses fail, and Cheeger checks over budget, are recorded as skipped.
    """
    if not is_connected(g):
        raise PreconditionError("connected")
    status = signature_status(g)
    kap = _resolve_kappa(g, n, kappa, "magnetic")
    girth = magnetic_girth(g, budget=budget)

    harnack = harnack_check(g, n, kap, "magnetic")
    alpha_records = []
    for rec in harnack:
        a = 4.0 - 2.0 * kap / rec.lam
        for arec in alpha_bound_check(g, n, kap, a, "magnetic"):
            if arec.eigen_index == rec.eigen_index:
                alpha_records.append(arec)

    eigen_rec, eigen_skip = None, None
    if status.balanced:
        eigen_skip = "hypothesis failed: unbalanced"
    elif not status.entire:
        eigen_skip = "hypothesis failed: entire signature"
    elif girth == math.inf:
        eigen_skip = "hypothesis failed: finite magnetic girth"
    else:
        eigen_rec = eigenvalue_lower_bound(g, n, kap, budget=budget)

    cheeger_rec, cheeger_skip = None, None
    try:
        cheeger_rec = cheeger_bound_check(g, n, budget=budget)
    except SizeError as exc:
        cheeger_skip = f"budget: {exc}"

    return BoundsReport(
        num_vertices=g.num_vertices, ell=g.ell, n=n, kappa=kap,
        connected=True, balanced=status.balanced, entire=status.entire,
        girth_finite=girth != math.inf,
        harnack=tuple(harnack), alpha=tuple(alpha_records),
        eigenvalue=eigen_rec, eigenvalue_skipped=eigen_skip,
        cheeger=cheeger_rec, cheeger_skipped=cheeger_skip)
