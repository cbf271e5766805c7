#pragma once

#include "siac/modal_field.hpp"

namespace siac {

/// Time step for the advection solve: cfl * min(hx, hy)^max(1, (2k+1)/4).
/// The exponent keeps the four-stage integrator's O(dt^4) error at or below
/// the post-filter O(h^{2k+1}) target.
double advection_time_step(const UniformMesh2D& mesh, int degree, double cfl);

/// Advances the linear advection equation u_t + u_x + u_y = 0 with periodic
/// boundaries from the given initial field to time tfinal: upwind-flux modal
/// DG in space, classical four-stage Runge-Kutta in time. Throws if the field
/// norm grows by more than 10x (unstable step size).
ModalField2D solve_advection(const ModalField2D& field0, double tfinal, double cfl);

}  // namespace siac
