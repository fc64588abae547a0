#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hill {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// |z|_1 = max(1, |z|), the regularized modulus used in all growth bounds.
inline double mod1(cplx z) { return std::max(1.0, std::abs(z)); }

// Exit-code taxonomy shared with the CLI: invariant violations (post-condition
// checks that the math guarantees) are distinct from plain numerical failures
// (tolerance not reached) and from bad input.
struct invariant_error : std::runtime_error {
  explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

struct unsupported_error : std::runtime_error {
  explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hill
