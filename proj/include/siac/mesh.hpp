#pragma once

namespace siac {

/// Periodic uniform quadrilateral mesh on an axis-aligned box.
struct UniformMesh2D {
    int nx = 0;
    int ny = 0;
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;

    UniformMesh2D() = default;
    UniformMesh2D(int nx, int ny, double xmin, double xmax, double ymin, double ymax);

    /// nx-by-ny mesh on [0, 2 pi]^2.
    static UniformMesh2D unit_torus(int nx, int ny);

    double lx() const { return xmax - xmin; }
    double ly() const { return ymax - ymin; }
    double hx() const { return lx() / nx; }
    double hy() const { return ly() / ny; }

    /// Wraps a coordinate into [min, min + length).
    static double wrap(double v, double min, double length);

    double wrap_x(double x) const { return wrap(x, xmin, lx()); }
    double wrap_y(double y) const { return wrap(y, ymin, ly()); }

    bool operator==(const UniformMesh2D&) const = default;
};

}  // namespace siac
