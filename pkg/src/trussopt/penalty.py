"""Constraint evaluation and the iteration-dependent penalty objective.

Constraints are normalized before aggregation (g = quantity/limit - 1),
so stresses in ksi and displacements in inches contribute on the same
scale and a single penalty factor is meaningful across both families.
Area bounds are never penalized; designs are clamped to bounds before
they are ever analyzed.
"""

from dataclasses import dataclass

import numpy as np

from . import analysis


@dataclass(frozen=True)
class ConstraintReport:
    """Per-constraint violation magnitudes S_i = max(g_i, 0)."""
    violations: np.ndarray   # one entry per constraint instance
    total: float             # sum of violations
    feasible: bool           # total == 0


@dataclass(frozen=True)
class PenaltyParams:
    alpha: float       # penalty scale
    beta_exp: float = 1.0   # exponent on the iteration counter

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.beta_exp < 0:
            raise ValueError("beta_exp must be non-negative")


def default_penalty_params(model, beta_exp=1.0):
    """Self-scaling alpha: the weight of the all-areas-at-max design.

    A unit total violation then roughly doubles the objective of a
    heavy design, which needs no per-model tuning.
    """
    _, area_max = model.area_bounds()
    alpha = analysis.structure_weight(model, area_max)
    return PenaltyParams(alpha=alpha, beta_exp=beta_exp)


def evaluate_constraints(model, result, areas=None):
    """Build a ConstraintReport from an AnalysisResult.

    Stress: g = sigma/limit - 1 against the tension limit for positive
    stress, the compression limit magnitude for negative. Buckling, for
    groups carrying a buckling record, uses the area-dependent Euler
    bound, which requires `areas` (group order). Displacement limits
    apply per node/dof/load case as |u|/limit - 1.
    """
    gmap = {g.id: g for g in model.groups}
    gidx = model.group_index()
    needs_buckling = any(g.buckling is not None for g in model.groups)
    if needs_buckling and areas is None:
        raise ValueError("areas required for buckling constraints")
    if areas is not None:
        areas = np.asarray(areas, dtype=float)

    out = []
    for case in result.cases:
        stresses = case.element_stresses
        for e in model.elements:
            s = stresses[e.id]
            grp = gmap[e.group]
            if s >= 0:
                out.append(s / grp.stress_tension_limit - 1.0)
            else:
                out.append(-s / grp.stress_compression_limit - 1.0)
                if grp.buckling is not None:
                    limit = analysis.buckling_stress_limit(
                        model, e, areas[gidx[e.group]])
                    out.append(s / limit - 1.0)  # both negative: ratio > 1 violates
        for dl in model.displacement_limits:
            for nid in dl.nodes:
                for dof in dl.dofs:
                    u = case.displacements[nid, "xyz".index(dof)]
                    out.append(abs(u) / dl.limit - 1.0)
    violations = np.maximum(np.array(out), 0.0)
    total = float(violations.sum())
    return ConstraintReport(violations=violations, total=total,
                            feasible=(total == 0.0))


def penalty(report, params, iteration):
    """p = alpha * iteration^beta_exp * sum(S_i); zero iff feasible."""
    if iteration < 1:
        raise ValueError("iteration must be >= 1")
    return params.alpha * iteration ** params.beta_exp * report.total


def penalized_objective(weight, report, params, iteration):
    """F = f + p; equals the raw weight exactly on feasible designs."""
    return weight + penalty(report, params, iteration)
