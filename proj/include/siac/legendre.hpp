#pragma once

namespace siac {

/// Fills values[0..degree] with the orthonormal Legendre basis on [-1, 1]:
/// phi_m(s) = sqrt(m + 1/2) P_m(s), so integral phi_m phi_n = delta_mn.
void legendre_orthonormal(int degree, double s, double* values);

/// Same for the first derivatives phi_m'(s).
void legendre_orthonormal_derivative(int degree, double s, double* values);

}  // namespace siac
