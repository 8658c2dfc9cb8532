#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "trapzssq/error.hpp"

namespace trapzssq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitNumericalFailure = 3;

/// Accepts "a", "bi", "a+bi", "a-bi" and "a,b". Throws InvalidConfig.
cplx parse_complex(std::string_view text);

/// A single count "400" or an inclusive range "start:step:stop".
std::vector<std::size_t> parse_n_values(std::string_view text);

/// %.17g, so every double round-trips.
std::string format_real(double x);

int exit_code_for(ErrorKind kind);

}  // namespace trapzssq::cli
