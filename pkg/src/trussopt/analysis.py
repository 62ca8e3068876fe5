"""Linear-elastic truss analysis by the direct stiffness method.

All per-geometry quantities (member lengths, direction cosines, dof
scatter indices) are precomputed once per model in an Analyzer, so that
repeated analyses of different designs only pay for the stiffness
assembly and a dense Cholesky solve. Everything is pure with respect to
the design vector, so analyses may run concurrently on a shared model.
"""

import weakref
from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .model import TrussModel


class AnalysisError(Exception):
    pass


class SingularStructure(AnalysisError):
    """Reduced stiffness matrix is (numerically) singular: the structure
    is a mechanism, not merely a bad candidate design."""


class BucklingNotEnabled(AnalysisError):
    pass


class ZeroLengthElement(AnalysisError):
    pass


# pivot threshold relative to the largest stiffness diagonal entry
SINGULARITY_RTOL = 1e-10


@dataclass(frozen=True)
class LoadCaseResult:
    displacements: np.ndarray     # (n_nodes, 3) inches, fixed dofs exactly 0
    element_stresses: np.ndarray  # (n_elements,) ksi, tension positive


@dataclass(frozen=True)
class AnalysisResult:
    weight: float        # lb
    cases: tuple         # one LoadCaseResult per load case, model order


def element_length(model, element):
    """Euclidean length of one element, in inches."""
    a = np.array(model.nodes[element.node_a].coords)
    b = np.array(model.nodes[element.node_b].coords)
    length = float(np.linalg.norm(b - a))
    if length < 1e-12:
        raise ZeroLengthElement(f"element {element.id} has zero length")
    return length


class Analyzer:
    """Per-model precomputation for fast repeated analysis."""

    def __init__(self, model: TrussModel):
        self.model = model
        coords = model.node_coords()
        n_nodes = model.n_nodes
        ndof = 3 * n_nodes

        na = np.array([e.node_a for e in model.elements])
        nb = np.array([e.node_b for e in model.elements])
        delta = coords[nb] - coords[na]
        self.lengths = np.linalg.norm(delta, axis=1)
        if np.any(self.lengths < 1e-12):
            raise ZeroLengthElement("model contains a zero-length element")
        self.dirs = delta / self.lengths[:, None]          # (n_el, 3) unit vectors
        self.group_of = model.element_group_indices()

        # signed 6-vector d per element: displacement u6 . d = axial elongation
        d6 = np.hstack([-self.dirs, self.dirs])            # (n_el, 6)
        self.d6 = d6
        dofs = np.stack([3 * na, 3 * na + 1, 3 * na + 2,
                         3 * nb, 3 * nb + 1, 3 * nb + 2], axis=1)  # (n_el, 6)
        self.elem_dofs = dofs

        self.fixed = model.fixed_dof_mask()
        self.free = ~self.fixed
        self.n_free = int(self.free.sum())
        # position of each global dof inside the reduced system (-1 if fixed)
        pos = -np.ones(ndof, dtype=int)
        pos[self.free] = np.arange(self.n_free)

        # flattened scatter indices of each element's 6x6 block into the
        # reduced matrix; contributions touching fixed dofs are dropped
        rows = np.repeat(dofs, 6, axis=1)                  # (n_el, 36)
        cols = np.tile(dofs, (1, 6))
        keep = self.free[rows] & self.free[cols]
        flat = pos[rows] * self.n_free + pos[cols]
        self.outer = d6[:, :, None] * d6[:, None, :]       # (n_el, 6, 6)
        outer_flat = self.outer.reshape(len(self.lengths), 36)
        self._scatter_idx = flat[keep]
        self._scatter_coeff = outer_flat[keep]
        self._keep = keep

        self.ndof = ndof
        self.E = model.material.elastic_modulus
        self.density = model.material.weight_density

        # load vectors, reduced to free dofs, one column per load case
        F = np.zeros((ndof, len(model.load_cases)))
        for j, lc in enumerate(model.load_cases):
            for nid, f in lc.point_loads:
                F[3 * nid:3 * nid + 3, j] += f
        self.F_free = F[self.free]

    def structure_weight(self, areas):
        """Total weight: density * sum over elements of area * length."""
        areas = np.asarray(areas, dtype=float)
        return float(self.density * np.sum(areas[self.group_of] * self.lengths))

    def assemble(self, areas):
        """Reduced (free-dof) global stiffness matrix for a design vector."""
        areas = np.asarray(areas, dtype=float)
        k_axial = self.E * areas[self.group_of] / self.lengths  # (n_el,)
        # scatter-add all element (E*A/L) * d d^T blocks in one bincount
        vals = np.repeat(k_axial, 36).reshape(-1, 36)[self._keep] * self._scatter_coeff
        K = np.bincount(self._scatter_idx, weights=vals,
                        minlength=self.n_free * self.n_free)
        return K.reshape(self.n_free, self.n_free)

    def factorize(self, areas):
        K = self.assemble(areas)
        diag = np.diag(K)
        if diag.size == 0 or np.max(diag) <= 0:
            raise SingularStructure("stiffness matrix has no positive diagonal")
        try:
            c, low = cho_factor(K, lower=True, check_finite=False)
        except np.linalg.LinAlgError:
            raise SingularStructure("Cholesky factorization failed") from None
        pivots = np.diag(c) ** 2
        if np.min(pivots) < SINGULARITY_RTOL * np.max(diag):
            raise SingularStructure("pivot below singularity tolerance")
        return (c, low)

    def _expand(self, u_free):
        u = np.zeros(self.ndof)
        u[self.free] = u_free
        return u

    def _stresses(self, u):
        elong = np.einsum("ij,ij->i", self.d6, u[self.elem_dofs])
        return self.E * elong / self.lengths

    def solve_load_case(self, areas, case_index):
        """Displacements and stresses for one load case."""
        factor = self.factorize(areas)
        u_free = cho_solve(factor, self.F_free[:, case_index], check_finite=False)
        u = self._expand(u_free)
        return LoadCaseResult(displacements=u.reshape(-1, 3),
                              element_stresses=self._stresses(u))

    def analyze(self, areas):
        """Full AnalysisResult: every load case plus the structure weight."""
        areas = np.asarray(areas, dtype=float)
        factor = self.factorize(areas)
        U = cho_solve(factor, self.F_free, check_finite=False)
        cases = []
        for j in range(U.shape[1]):
            u = self._expand(U[:, j])
            cases.append(LoadCaseResult(displacements=u.reshape(-1, 3),
                                        element_stresses=self._stresses(u)))
        return AnalysisResult(weight=self.structure_weight(areas), cases=tuple(cases))


_analyzers = weakref.WeakKeyDictionary()


def get_analyzer(model) -> Analyzer:
    an = _analyzers.get(model)
    if an is None:
        an = Analyzer(model)
        _analyzers[model] = an
    return an


def structure_weight(model, areas):
    return get_analyzer(model).structure_weight(areas)


def assemble_global_stiffness(model, areas):
    return get_analyzer(model).assemble(areas)


def solve_load_case(model, areas, case):
    """case: a LoadCase of the model or its index."""
    idx = case if isinstance(case, int) else list(model.load_cases).index(case)
    return get_analyzer(model).solve_load_case(areas, idx)


def analyze(model, areas) -> AnalysisResult:
    return get_analyzer(model).analyze(areas)


def buckling_stress_limit(model, element, area):
    """Euler buckling bound for an element: -K * E * A / L^2 (ksi, negative).

    Compressive stress must stay above (less negative than) this bound.
    """
    gidx = {g.id: g for g in model.groups}
    group = gidx[element.group]
    if group.buckling is None:
        raise BucklingNotEnabled(f"group {group.id} has no buckling record")
    L = element_length(model, element)
    return -group.buckling.K * model.material.elastic_modulus * float(area) / L ** 2
