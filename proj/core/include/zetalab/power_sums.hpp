#ifndef ZETALAB_POWER_SUMS_HPP
#define ZETALAB_POWER_SUMS_HPP

#include <zetalab/common.hpp>

namespace zetalab::power_sums {

/// Complex arithmetic-progression parameters a = a1 + a2 i, d = d1 + d2 i.
/// d = 0 exactly is rejected; a zero component of d is allowed but flagged
/// as degenerate.
struct ComplexPair {
  double a1 = 0.0;
  double a2 = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  cplx a() const { return {a1, a2}; }
  cplx d() const { return {d1, d2}; }
  bool degenerate() const { return d1 == 0.0 || d2 == 0.0; }

  /// Throws InvalidInput on non-finite fields or d == (0, 0).
  void validate() const;
};

/// Progression power-sum query: k terms of (a + (r-1)d)^(n-1).
struct ProgressionQuery {
  ComplexPair params;
  long k = 1;  // term count, >= 1
  int n = 3;   // power index; exponent used is n - 1

  void validate() const;  // k >= 1, n >= 2, params valid
};

/// Two-sided comparison of a claimed identity.
struct ResidualReport {
  cplx lhs{};
  cplx rhs{};
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double scale = 0.0;
};

/// Underflow guard for relative residuals.
inline constexpr double kScaleFloor = 1e-300;

/// Exact integer factorials only: 20! is the largest that fits in 64 bits.
inline constexpr int kFactorialCap = 20;

/// n! computed in integer arithmetic; throws InvalidInput past the cap.
double exact_factorial(int n);

ResidualReport make_residual(cplx lhs, cplx rhs);

/// Sum_{r=1..k} (a + (r-1)d)^(n-1), strict left-to-right accumulation.
/// The compensated flag switches to Kahan summation (conditioning studies
/// only; the plain mode is the reproducible oracle).
cplx brute_force_sum(const ProgressionQuery& q, bool compensated = false);

/// Sum_{r=1..k} (-1)^(r-1) (a + (r-1)d)^(n-1).
cplx brute_force_alternating_sum(const ProgressionQuery& q,
                                 bool compensated = false);

/// S_{n-i} of the finite power-sum identity:
///   ((n-i)/2 - 1) k d^(n-i) - (n-i)/2 d^(n-i-2) ((a+kd)^2 - a^2)
///   + (a+kd)^(n-i) - a^(n-i)
cplx s_term(const ComplexPair& p, long k, int n, int i);

/// L_{n-i} of the alternating identity:
///   ((n-i)/2 - 1) k d^(n-i) + (n-i)/2 d^(n-i-2) ((a+kd-d)^2 - (a-d)^2)
///   + (-1)^(n-i-1) [(a+kd-d)^(n-i) - (a-d)^(n-i)]
cplx l_term(const ComplexPair& p, long k, int n, int i);

/// k -> infinity substitution form of S_{n-i}:
///   ((n-i)/2 - 1)(d-a) d^(n-i-1) - (n-i)/2 d^(n-i-2) (d^2 - a^2)
///   + d^(n-i) - a^(n-i)
/// Vanishes termwise at a = d.
cplx limit_s_term(const ComplexPair& p, int n, int i);

/// k -> infinity substitution form of L_{n-i}:
///   ((n-i)/2 - 1)(d-a) d^(n-i-1) - (n-i)/2 d^(n-i-2) (d-a)^2 + (d-a)^(n-i)
/// Vanishes termwise at a = d.
cplx limit_l_term(const ComplexPair& p, int n, int i);

/// lhs = d/((n-1)!(n-3)!) * brute_force_sum(q)
/// rhs = Sum_{i=0..n-3} S_{n-i} (d/2)^i (-1)^i / (i!(n-i)!(n-3-i)!)
/// Requires n >= 3 and d != 0. The identity is audited, not assumed.
ResidualReport theorem1_residual(const ProgressionQuery& q);

/// lhs = brute_force_alternating_sum(q)
/// rhs = (1/(n d)) Sum_{i=0..n-3} C(n-3,i) (d/2)^i (n!/(n-i)!) (-1)^(i+1) L_{n-i}
ResidualReport theorem2_residual(const ProgressionQuery& q);

}  // namespace zetalab::power_sums

#endif
