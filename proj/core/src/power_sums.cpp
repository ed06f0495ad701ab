#include <zetalab/power_sums.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace zetalab::power_sums {

void ComplexPair::validate() const {
  if (!is_finite(a1) || !is_finite(a2) || !is_finite(d1) || !is_finite(d2))
    throw InvalidInput("ComplexPair: all fields must be finite");
  if (d1 == 0.0 && d2 == 0.0)
    throw InvalidInput("ComplexPair: d must not be exactly zero");
}

void ProgressionQuery::validate() const {
  params.validate();
  if (k < 1) throw InvalidInput("ProgressionQuery: k must be >= 1");
  if (n < 2) throw InvalidInput("ProgressionQuery: n must be >= 2");
}

double exact_factorial(int n) {
  if (n < 0) throw InvalidInput("factorial: negative argument");
  if (n > kFactorialCap)
    throw InvalidInput("factorial: n exceeds the exact 64-bit cap (20)");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return static_cast<double>(f);
}

ResidualReport make_residual(cplx lhs, cplx rhs) {
  ResidualReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_residual = std::abs(lhs - rhs);
  r.scale = std::max(std::abs(lhs), std::abs(rhs));
  r.rel_residual = r.abs_residual / std::max(r.scale, kScaleFloor);
  return r;
}

namespace {

// Integer exponent only; repeated multiplication keeps small-case values
// (e.g. 1, i, -1) exact where std::pow would round through exp/log.
cplx ipow(cplx z, int e) {
  cplx acc{1.0, 0.0};
  for (int j = 0; j < e; ++j) acc *= z;
  return acc;
}

cplx accumulate_terms(const ProgressionQuery& q, bool alternating,
                      bool compensated) {
  q.validate();
  const cplx a = q.params.a();
  const cplx d = q.params.d();
  cplx sum{0.0, 0.0};
  cplx comp{0.0, 0.0};  // Kahan carry, compensated mode only
  double sign = 1.0;
  for (long r = 1; r <= q.k; ++r) {
    cplx term = ipow(a + static_cast<double>(r - 1) * d, q.n - 1);
    if (alternating) {
      term *= sign;
      sign = -sign;
    }
    if (compensated) {
      const cplx y = term - comp;
      const cplx t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    } else {
      sum += term;
    }
  }
  return sum;
}

void check_index(int n, int i) {
  if (n < 3) throw InvalidInput("term index: n must be >= 3");
  if (i < 0 || i > n - 3)
    throw InvalidInput("term index: i must satisfy 0 <= i <= n-3");
}

}  // namespace

cplx brute_force_sum(const ProgressionQuery& q, bool compensated) {
  return accumulate_terms(q, false, compensated);
}

cplx brute_force_alternating_sum(const ProgressionQuery& q, bool compensated) {
  return accumulate_terms(q, true, compensated);
}

cplx s_term(const ComplexPair& p, long k, int n, int i) {
  check_index(n, i);
  p.validate();
  if (k < 1) throw InvalidInput("s_term: k must be >= 1");
  const cplx a = p.a();
  const cplx d = p.d();
  const int e = n - i;
  const double half = static_cast<double>(e) / 2.0;
  const cplx akd = a + static_cast<double>(k) * d;
  return (half - 1.0) * static_cast<double>(k) * ipow(d, e) -
         half * ipow(d, e - 2) * (akd * akd - a * a) + ipow(akd, e) -
         ipow(a, e);
}

cplx l_term(const ComplexPair& p, long k, int n, int i) {
  check_index(n, i);
  p.validate();
  if (k < 1) throw InvalidInput("l_term: k must be >= 1");
  const cplx a = p.a();
  const cplx d = p.d();
  const int e = n - i;
  const double half = static_cast<double>(e) / 2.0;
  const cplx top = a + static_cast<double>(k) * d - d;  // a + (k-1)d
  const cplx bot = a - d;
  const double parity = (e - 1) % 2 == 0 ? 1.0 : -1.0;
  return (half - 1.0) * static_cast<double>(k) * ipow(d, e) +
         half * ipow(d, e - 2) * (top * top - bot * bot) +
         parity * (ipow(top, e) - ipow(bot, e));
}

cplx limit_s_term(const ComplexPair& p, int n, int i) {
  check_index(n, i);
  p.validate();
  const cplx a = p.a();
  const cplx d = p.d();
  const int e = n - i;
  const double half = static_cast<double>(e) / 2.0;
  return (half - 1.0) * (d - a) * ipow(d, e - 1) -
         half * ipow(d, e - 2) * (d * d - a * a) + ipow(d, e) - ipow(a, e);
}

cplx limit_l_term(const ComplexPair& p, int n, int i) {
  check_index(n, i);
  p.validate();
  const cplx a = p.a();
  const cplx d = p.d();
  const int e = n - i;
  const double half = static_cast<double>(e) / 2.0;
  const cplx da = d - a;
  return (half - 1.0) * da * ipow(d, e - 1) -
         half * ipow(d, e - 2) * da * da + ipow(da, e);
}

ResidualReport theorem1_residual(const ProgressionQuery& q) {
  q.validate();
  if (q.n < 3) throw InvalidInput("theorem1_residual: n must be >= 3");
  if (q.n > kFactorialCap)
    throw InvalidInput("theorem1_residual: n exceeds factorial cap");
  const cplx d = q.params.d();
  const cplx lhs =
      d / (exact_factorial(q.n - 1) * exact_factorial(q.n - 3)) *
      brute_force_sum(q);
  cplx rhs{0.0, 0.0};
  for (int i = 0; i <= q.n - 3; ++i) {
    const double w = 1.0 / (exact_factorial(i) * exact_factorial(q.n - i) *
                            exact_factorial(q.n - 3 - i));
    const double sgn = i % 2 == 0 ? 1.0 : -1.0;
    cplx dh{1.0, 0.0};
    for (int j = 0; j < i; ++j) dh *= d / 2.0;
    rhs += w * sgn * dh * s_term(q.params, q.k, q.n, i);
  }
  return make_residual(lhs, rhs);
}

ResidualReport theorem2_residual(const ProgressionQuery& q) {
  q.validate();
  if (q.n < 3) throw InvalidInput("theorem2_residual: n must be >= 3");
  if (q.n > kFactorialCap)
    throw InvalidInput("theorem2_residual: n exceeds factorial cap");
  const cplx d = q.params.d();
  const cplx lhs = brute_force_alternating_sum(q);
  cplx acc{0.0, 0.0};
  for (int i = 0; i <= q.n - 3; ++i) {
    const double binom = exact_factorial(q.n - 3) /
                         (exact_factorial(i) * exact_factorial(q.n - 3 - i));
    const double ratio = exact_factorial(q.n) / exact_factorial(q.n - i);
    const double sgn = (i + 1) % 2 == 0 ? 1.0 : -1.0;
    cplx dh{1.0, 0.0};
    for (int j = 0; j < i; ++j) dh *= d / 2.0;
    acc += binom * dh * ratio * sgn * l_term(q.params, q.k, q.n, i);
  }
  const cplx rhs = acc / (static_cast<double>(q.n) * d);
  return make_residual(lhs, rhs);
}

}  // namespace zetalab::power_sums
