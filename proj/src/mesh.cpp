#include "siac/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace siac {

UniformMesh2D::UniformMesh2D(int nx_, int ny_, double xmin_, double xmax_,
                             double ymin_, double ymax_)
    : nx(nx_), ny(ny_), xmin(xmin_), xmax(xmax_), ymin(ymin_), ymax(ymax_) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("UniformMesh2D: element counts must be >= 1");
    if (!(xmax > xmin) || !(ymax > ymin)) {
        throw std::invalid_argument("UniformMesh2D: empty domain box");
    }
}

UniformMesh2D UniformMesh2D::unit_torus(int nx, int ny) {
    return UniformMesh2D(nx, ny, 0.0, 2.0 * M_PI, 0.0, 2.0 * M_PI);
}

double UniformMesh2D::wrap(double v, double min, double length) {
    double w = std::fmod(v - min, length);
    if (w < 0.0) w += length;
    return min + w;
}

}  // namespace siac
