"""Smoke tests for the python bindings."""

import math

import pytest

import siacline as sl


def test_bspline_values():
    assert sl.bspline_eval(1, 0.0) == 1.0
    assert sl.bspline_eval(3, 0.0) == pytest.approx(0.75, abs=1e-12)
    assert sl.bspline_derivative(2, 1, -0.5) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        sl.bspline_eval(0, 0.0)


def test_kernel_coefficients():
    assert sl.kernel_coefficients(0) == [1.0]
    c = sl.kernel_coefficients(1)
    assert c[0] == pytest.approx(-1.0 / 12.0, abs=1e-12)
    assert c[1] == pytest.approx(7.0 / 6.0, abs=1e-12)
    kernel = sl.SiacKernel(1, 0.5)
    assert kernel(kernel.support_half_width() + 0.1) == 0.0
    assert kernel.reproduction_residual(2) < 1e-10


def test_constant_field_filtering():
    mesh = sl.UniformMesh2D.unit_torus(12, 12)
    field = sl.project(mesh, 1, lambda x, y: 4.5)
    config = sl.FilterConfig("line", theta=3 * math.pi / 4, mu=math.sqrt(2))
    assert sl.filter_point(field, 3.0, 3.0, config) == pytest.approx(4.5, abs=1e-12)
    value, counters = sl.filter_point_counted(field, 3.0, 3.0, config)
    assert value == pytest.approx(4.5, abs=1e-12)
    assert counters.integrals > 0
    assert counters.quadrature_evals > 0


def test_solve_and_filter_improves_error():
    mesh = sl.UniformMesh2D.unit_torus(16, 16)
    field = sl.project_ic(mesh, 1, "sinxy")
    solved = sl.solve_advection(field, 1.0, cfl=0.05)
    dg_error = sl.l2_error_vs_ic(solved, "sinxy", 1.0)
    assert 0.0 < dg_error < 0.1
    config = sl.FilterConfig("line", theta=3 * math.pi / 4, mu=math.sqrt(2))
    filtered_error = sl.filtered_l2_error_vs_ic(solved, config, "sinxy", 1.0)
    assert filtered_error < dg_error


def test_field_roundtrip(tmp_path):
    mesh = sl.UniformMesh2D.unit_torus(6, 6)
    field = sl.project_ic(mesh, 2, "sinxcosy")
    path = str(tmp_path / "field.txt")
    sl.save_field(field, path)
    loaded = sl.load_field(path)
    assert loaded.degree == 2
    assert loaded.coefficients() == field.coefficients()
    assert loaded(1.2, 3.4) == field(1.2, 3.4)


def test_uniform_filter_grid():
    mesh = sl.UniformMesh2D.unit_torus(12, 12)
    field = sl.project_ic(mesh, 1, "sinxy")
    xs, ys, values, counters = sl.filter_field_uniform(
        field, sl.FilterConfig("tensor", mu=1.0), 4, 3
    )
    assert len(xs) == len(ys) == len(values) == 12
    assert counters.integrals > 0
