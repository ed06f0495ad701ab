#include <zetalab/reference_functions.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace zetalab::ref {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Audit evaluation window for the eta acceleration.
constexpr double kWindowReMin = -2.0;
constexpr double kWindowImMax = 50.0;

// Lanczos coefficients, g = 7.
constexpr int kLanczosG = 7;
constexpr double kLanczosP[kLanczosG + 2] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lanczos_gamma(cplx z) {
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return kPi / (std::sin(kPi * z) * lanczos_gamma(1.0 - z));
  }
  z -= 1.0;
  cplx x = kLanczosP[0];
  for (int i = 1; i < kLanczosG + 2; ++i)
    x += kLanczosP[i] / (z + static_cast<double>(i));
  const cplx t = z + (kLanczosG + 0.5);
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

cplx pow_of_real(double base, cplx exponent) {
  return std::exp(exponent * std::log(base));
}

bool in_eta_window(cplx s) {
  return s.real() > kWindowReMin && std::abs(s.imag()) <= kWindowImMax;
}

}  // namespace

void PrecisionPolicy::validate() const {
  if (working_digits < 15)
    throw InvalidInput("PrecisionPolicy: working_digits must be >= 15");
  if (series_terms < 16 || series_terms > 512)
    throw InvalidInput("PrecisionPolicy: series_terms must be in [16, 512]");
  if (!(tol_ref < tol_claim))
    throw InvalidInput("PrecisionPolicy: tol_ref must be < tol_claim");
}

const char* method_name(Method m) {
  switch (m) {
    case Method::EtaAccel: return "ETA_ACCEL";
    case Method::FunctionalEq: return "FUNCTIONAL_EQ";
    case Method::Reflection: return "REFLECTION";
    case Method::Direct: return "DIRECT";
  }
  return "UNKNOWN";
}

EvalResult ref_gamma(cplx s) {
  if (!is_finite(s)) throw InvalidInput("ref_gamma: non-finite argument");
  if (std::abs(s.imag()) < 1e-12 && s.real() <= 0.5) {
    const double r = std::round(s.real());
    if (r <= 0.0 && std::abs(s.real() - r) < 1e-12)
      throw DomainGuard("ref_gamma: pole at non-positive integer");
  }
  EvalResult out;
  out.value = lanczos_gamma(s);
  out.method = s.real() < 0.5 ? Method::Reflection : Method::Direct;
  out.est_error = 1e-12 * std::abs(out.value);
  return out;
}

EvalResult ref_eta(cplx s, const PrecisionPolicy& policy) {
  policy.validate();
  if (!is_finite(s)) throw InvalidInput("ref_eta: non-finite argument");
  if (!in_eta_window(s))
    throw DomainGuard("ref_eta: outside window Re(s) > -2, |Im(s)| <= 50");

  // Binomial/Chebyshev-weighted acceleration of sum (-1)^(n-1) n^(-s)
  // (Cohen, Rodriguez Villegas, Zagier). Error decays like (3+sqrt(8))^(-N)
  // times a factor growing with |Im(s)|.
  const int n = policy.series_terms;
  double dn = std::pow(3.0 + std::sqrt(8.0), n);
  dn = (dn + 1.0 / dn) / 2.0;
  double b = -1.0;
  double c = -dn;
  cplx sum{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c * std::exp(-s * std::log(static_cast<double>(k + 1)));
    b *= static_cast<double>(k + n) * static_cast<double>(k - n) /
         ((k + 0.5) * static_cast<double>(k + 1));
  }
  EvalResult out;
  out.value = sum / dn;
  out.method = Method::EtaAccel;
  const double t = std::abs(s.imag());
  const double growth = (1.0 + 2.0 * t) * std::exp(kPi * t / 2.0);
  out.est_error = growth / std::pow(3.0 + std::sqrt(8.0), n) +
                  16.0 * kEps * std::abs(out.value);
  return out;
}

EvalResult ref_zeta(cplx s, const PrecisionPolicy& policy) {
  policy.validate();
  if (!is_finite(s)) throw InvalidInput("ref_zeta: non-finite argument");
  if (std::abs(s - cplx{1.0, 0.0}) < 1e-12)
    throw DomainGuard("ref_zeta: pole at s = 1");

  if (s.real() > kWindowReMin) {
    // Off-pole zeros of 1 - 2^(1-s) sit at s = 1 + 2 pi i k / ln 2.
    const double kk = std::round(s.imag() * kLn2 / (2.0 * kPi));
    if (kk != 0.0) {
      const cplx center{1.0, 2.0 * kPi * kk / kLn2};
      if (std::abs(s - center) < 1e-6)
        throw DomainGuard("ref_zeta: eta relation degenerate point");
    }
    const EvalResult eta = ref_eta(s, policy);
    const cplx denom = 1.0 - pow_of_real(2.0, 1.0 - s);
    EvalResult out;
    out.value = eta.value / denom;
    out.method = Method::EtaAccel;
    out.est_error = eta.est_error / std::abs(denom) +
                    16.0 * kEps * std::abs(out.value);
    return out;
  }

  // Re(s) <= -2: functional-equation route; 1-s lands in the eta window.
  if (std::abs(s.imag()) > kWindowImMax)
    throw DomainGuard("ref_zeta: outside window |Im(s)| <= 50");
  const EvalResult zeta1ms = ref_zeta(1.0 - s, policy);
  EvalResult out;
  out.value = ref_gamma(1.0 - s).value * pow_of_real(2.0 * kPi, s - 1.0) *
              2.0 * std::sin(kPi * s / 2.0) * zeta1ms.value;
  out.method = Method::FunctionalEq;
  const double rel = zeta1ms.est_error /
                         std::max(std::abs(zeta1ms.value), 1e-300) +
                     1e-11;
  out.est_error = rel * std::abs(out.value) + 1e-300;
  return out;
}

EvalResult functional_equation_rhs(cplx s, const PrecisionPolicy& policy) {
  policy.validate();
  if (!is_finite(s))
    throw InvalidInput("functional_equation_rhs: non-finite argument");
  const EvalResult zeta1ms = ref_zeta(1.0 - s, policy);
  EvalResult out;
  out.value = ref_gamma(1.0 - s).value * pow_of_real(2.0 * kPi, s - 1.0) *
              2.0 * std::sin(kPi * s / 2.0) * zeta1ms.value;
  out.method = Method::FunctionalEq;
  const double rel = zeta1ms.est_error /
                         std::max(std::abs(zeta1ms.value), 1e-300) +
                     1e-11;
  out.est_error = rel * std::abs(out.value) + 1e-300;
  return out;
}

}  // namespace zetalab::ref
