import numpy as np
import pytest

from trussopt import analysis
from trussopt.analysis import (BucklingNotEnabled, SingularStructure,
                               analyze, assemble_global_stiffness,
                               buckling_stress_limit, structure_weight)
from trussopt.model import (BucklingSpec, Material, MemberGroup, make_model)


def test_single_bar_matches_hand_statics(single_bar):
    # u = PL/AE, sigma = P/A
    P, L, A, E = 10.0, 100.0, 2.0, 10000.0
    res = analyze(single_bar, [A])
    u = res.cases[0].displacements[1, 0]
    s = res.cases[0].element_stresses[0]
    assert abs(u - P * L / (A * E)) <= 1e-10 * abs(P * L / (A * E))
    assert abs(s - P / A) <= 1e-10 * abs(P / A)


def test_two_bar_pitched_truss_matches_hand_statics(two_bar):
    # symmetric apex load: each 3-4-5 bar carries F = P/2 / sin(theta),
    # sin(theta) = 60/100, in compression
    P, A = 12.0, 1.5
    res = analyze(two_bar, [A])
    force = (P / 2.0) / 0.6
    expected = -force / A
    for s in res.cases[0].element_stresses:
        assert abs(s - expected) <= 1e-10 * abs(expected)


def test_structure_weight_is_density_area_length(two_bar):
    w = structure_weight(two_bar, [1.5])
    assert w == pytest.approx(0.1 * 1.5 * 200.0, rel=1e-12)


def test_superposition_of_load_cases():
    mk = lambda loads: make_model(
        "sup", [(0, 0), (100, 0), (100, 75)],
        [(0, 1, 0), (1, 2, 0), (0, 2, 0)],
        [MemberGroup(0, 0.1, 10.0, 25.0, 25.0)],
        Material(10000.0, 0.1), [(0, "xy"), (2, "xy")], loads)
    a, b = {1: (7.0, 0.0)}, {1: (0.0, -3.0)}
    both = {1: (7.0, -3.0)}
    areas = [1.2]
    ua = analyze(mk([a]), areas).cases[0].displacements
    ub = analyze(mk([b]), areas).cases[0].displacements
    uab = analyze(mk([both]), areas).cases[0].displacements
    np.testing.assert_allclose(uab, ua + ub, rtol=1e-10, atol=1e-14)


def test_load_scaling_linearity(two_bar):
    res1 = analyze(two_bar, [2.0]).cases[0]
    scaled = make_model(
        "scaled", [(0, 0), (80, 60), (160, 0)],
        [(0, 1, 0), (1, 2, 0)], [MemberGroup(0, 0.5, 5.0, 30.0, 30.0)],
        Material(10000.0, 0.1), [(0, "xy"), (2, "xy")], [{1: (0.0, -36.0)}])
    res3 = analyze(scaled, [2.0]).cases[0]
    np.testing.assert_allclose(res3.displacements, 3.0 * res1.displacements,
                               rtol=1e-10, atol=1e-14)
    np.testing.assert_allclose(res3.element_stresses,
                               3.0 * res1.element_stresses, rtol=1e-10)


def test_stiffness_matrix_symmetric_positive_definite(two_bar):
    K = assemble_global_stiffness(two_bar, [2.0])
    np.testing.assert_allclose(K, K.T, rtol=1e-12)
    assert np.all(np.linalg.eigvalsh(K) > 0)


def test_mechanism_raises_singular_structure():
    # square frame without diagonal: a shear mechanism
    m = make_model(
        "mech", [(0, 0), (100, 0), (100, 100), (0, 100)],
        [(0, 1, 0), (1, 2, 0), (2, 3, 0), (3, 0, 0)],
        [MemberGroup(0, 0.1, 10.0, 25.0, 25.0)],
        Material(10000.0, 0.1), [(0, "xy"), (1, "y")], [{2: (5.0, 0.0)}])
    with pytest.raises(SingularStructure):
        analyze(m, [1.0])


def test_tension_positive_sign_convention(single_bar):
    res = analyze(single_bar, [1.0])
    assert res.cases[0].element_stresses[0] > 0


def test_buckling_stress_limit_formula():
    m = make_model(
        "buck", [(0, 0), (100, 0)], [(0, 1, 0)],
        [MemberGroup(0, 0.1, 10.0, 25.0, 25.0, BucklingSpec(4.0))],
        Material(10000.0, 0.1), [(0, "xy"), (1, "y")], [{1: (1.0, 0)}])
    limit = buckling_stress_limit(m, m.elements[0], 2.0)
    assert limit == pytest.approx(-4.0 * 10000.0 * 2.0 / 100.0 ** 2, rel=1e-12)


def test_buckling_limit_requires_buckling_group(single_bar):
    with pytest.raises(BucklingNotEnabled):
        buckling_stress_limit(single_bar, single_bar.elements[0], 2.0)


def test_multiple_load_cases_solved_together():
    m = make_model(
        "two-cases", [(0, 0), (100, 0), (100, 75)],
        [(0, 1, 0), (1, 2, 0), (0, 2, 0)],
        [MemberGroup(0, 0.1, 10.0, 25.0, 25.0)],
        Material(10000.0, 0.1), [(0, "xy"), (2, "xy")],
        [{1: (5.0, 0.0)}, {1: (0.0, -5.0)}])
    res = analyze(m, [1.0])
    assert len(res.cases) == 2
    assert not np.allclose(res.cases[0].displacements,
                           res.cases[1].displacements)
