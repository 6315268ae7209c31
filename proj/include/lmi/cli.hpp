#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "lmi/region.hpp"

namespace lmi::cli {

// "a+bi", "a-bi", "a", "bi", "-i"; decimal floats with optional exponent.
std::optional<ComplexPoint> parse_complex(const std::string& text);

// Exit status: 0 success, 1 domain error, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lmi::cli
