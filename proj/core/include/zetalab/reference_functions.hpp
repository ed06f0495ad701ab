#ifndef ZETALAB_REFERENCE_FUNCTIONS_HPP
#define ZETALAB_REFERENCE_FUNCTIONS_HPP

#include <zetalab/common.hpp>

namespace zetalab::ref {

/// Working precision and comparison tolerances shared across an audit run.
struct PrecisionPolicy {
  int working_digits = 16;   // >= 15
  int series_terms = 96;     // acceleration depth, >= 16
  double tol_ref = 1e-10;    // reference self-consistency
  double tol_claim = 1e-6;   // claim comparison

  void validate() const;  // tol_ref < tol_claim, bounds above
};

enum class Method { EtaAccel, FunctionalEq, Reflection, Direct };

struct EvalResult {
  cplx value{};
  double est_error = 0.0;  // upper-bound model, not a guarantee
  Method method = Method::Direct;
};

/// Gamma(s): Lanczos approximation for Re(s) >= 0.5, reflection below.
/// Throws DomainGuard at the poles (non-positive integers).
EvalResult ref_gamma(cplx s);

/// eta(s) by binomial-weighted alternating-series acceleration.
/// Evaluation window: Re(s) > -2 and |Im(s)| <= 50; outside, DomainGuard.
EvalResult ref_eta(cplx s, const PrecisionPolicy& policy = {});

/// zeta(s): eta(s)/(1 - 2^(1-s)) for Re(s) > -2, functional-equation route
/// for Re(s) <= -2. Throws at s = 1 and within 1e-6 of the off-pole zeros
/// of 1 - 2^(1-s) (s = 1 + 2 pi i k / ln 2, k != 0).
EvalResult ref_zeta(cplx s, const PrecisionPolicy& policy = {});

/// Gamma(1-s) (2 pi)^(s-1) 2 sin(pi s / 2) zeta(1-s), as an independent
/// route for cross-checking ref_zeta.
EvalResult functional_equation_rhs(cplx s, const PrecisionPolicy& policy = {});

const char* method_name(Method m);

}  // namespace zetalab::ref

#endif
