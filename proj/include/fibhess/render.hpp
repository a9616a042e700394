#pragma once

#include <string>

#include "fibhess/families.hpp"

namespace fibhess {

/// Matrix as text: one line per row, entries in canonical form, columns
/// padded to equal width.
std::string matrix_to_text(const FamilySpec& spec);

} // namespace fibhess
