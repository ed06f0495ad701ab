#ifndef ZETALAB_COMMON_HPP
#define ZETALAB_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace zetalab {

inline constexpr const char* kVersion = "1.0.0";

using cplx = std::complex<double>;

/// Precondition violation: the caller passed arguments outside the
/// documented domain of an operation (bad index, k < 1, n out of range).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A mathematical guard fired: branch singularity, log of a non-positive
/// quotient, pole, evaluation window exceeded. Audit drivers map this to a
/// DEGENERATE verdict instead of aborting.
struct DomainGuard : std::domain_error {
  using std::domain_error::domain_error;
};

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace zetalab

#endif
