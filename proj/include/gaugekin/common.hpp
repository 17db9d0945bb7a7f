#ifndef GAUGEKIN_COMMON_HPP
#define GAUGEKIN_COMMON_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gaugekin {

using cdouble = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Precondition failure -> std::invalid_argument.
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

/// Internal invariant failure -> std::logic_error.
inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error(msg);
}

}  // namespace gaugekin

#endif
