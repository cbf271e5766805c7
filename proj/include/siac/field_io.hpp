#pragma once

#include <iosfwd>
#include <string>

#include "siac/modal_field.hpp"

namespace siac {

/// Text field format, line oriented:
///   SIACFIELD v1 nx ny k xmin xmax ymin ymax
/// then nx*ny lines, element (i,j) in row-major order (j outer), each holding
/// the (k+1)^2 coefficients of the element in row-major mode order with the
/// x-mode fastest. Values carry 17 significant digits, so a round trip is
/// bit exact.
void save_field(const ModalField2D& field, std::ostream& out);
void save_field(const ModalField2D& field, const std::string& path);

ModalField2D load_field(std::istream& in);
ModalField2D load_field(const std::string& path);

}  // namespace siac
