#include <zetalab/claims.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

namespace zetalab::claims {

namespace ps = zetalab::power_sums;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kApery = 1.2020569031595942854;

void check_spec_common(const ClaimSpec& spec) {
  if (spec.n < 3) throw InvalidInput("claim spec: n must be >= 3");
  if (spec.n > ps::kFactorialCap)
    throw InvalidInput("claim spec: n exceeds factorial cap");
  if (spec.k <= 1 || spec.m <= 1 || spec.k == spec.m)
    throw InvalidInput("claim spec: need k, m > 1 and k != m");
}

cplx resolve_gamma(const ClaimSpec& spec) {
  return spec.mode == GammaMode::GammaEqualsZ
             ? spec.Z
             : spec.Z / static_cast<double>(spec.n - 1);
}

// Shared pipeline of the closed-form statements; the term functional is
// limit_s_term for the zeta form and limit_l_term for the eta form.
cplx closed_form_value(const ClaimSpec& spec, bool eta_form) {
  const cplx gamma = resolve_gamma(spec);
  const auto sol =
      param::solve_parameters(gamma.real(), gamma.imag(), spec.k, spec.m);
  const cplx a = sol.params.a();
  const cplx d = sol.params.d();
  if (d == cplx{0.0, 0.0})
    throw DomainGuard("closed form: degenerate parameter solution, d = 0");
  if (std::abs(a - d) <= 1e-12 * std::max(1.0, std::abs(d)))
    return {0.0, 0.0};  // every limit term vanishes

  cplx sum{0.0, 0.0};
  cplx dh{1.0, 0.0};
  for (int i = 0; i <= spec.n - 3; ++i) {
    const double w =
        1.0 / (ps::exact_factorial(i) * ps::exact_factorial(spec.n - i) *
               ps::exact_factorial(spec.n - 3 - i));
    const double sgn = i % 2 == 0 ? 1.0 : -1.0;
    const cplx term = eta_form ? ps::limit_l_term(sol.params, spec.n, i)
                               : ps::limit_s_term(sol.params, spec.n, i);
    sum += w * sgn * dh * term;
    dh *= d / 2.0;
  }
  return ps::exact_factorial(spec.n - 1) * ps::exact_factorial(spec.n - 3) /
         d * sum;
}

}  // namespace

Classification classify(double abs_residual, double reference_mag,
                        double tol_claim) {
  const double band = tol_claim * std::max(1.0, reference_mag);
  if (abs_residual <= band) return Classification::Confirmed;
  if (abs_residual >= 10.0 * band) return Classification::Refuted;
  return Classification::Inconclusive;
}

cplx claimed_zeta(const ClaimSpec& spec) {
  check_spec_common(spec);
  // Stated domain is Re(Z) > 1; the boundary is admitted (with rounding
  // slack) so that candidate zeros built with gamma1 = 1 flow through.
  if (spec.Z.real() < 1.0 - 1e-9)
    throw DomainGuard("claimed_zeta: Re(Z) below the stated domain");
  return closed_form_value(spec, false);
}

cplx claimed_eta(const ClaimSpec& spec) {
  check_spec_common(spec);
  if (!(spec.Z.real() > 0.0))
    throw DomainGuard("claimed_eta: requires Re(Z) > 0");
  return closed_form_value(spec, true);
}

cplx claimed_zeta_strip(const ClaimSpec& spec) {
  check_spec_common(spec);
  if (!(spec.Z.real() > 0.0))
    throw DomainGuard("claimed_zeta_strip: requires Re(Z) > 0");
  const cplx denom = 1.0 - std::exp((1.0 - spec.Z) * std::numbers::ln2);
  if (std::abs(denom) < 1e-9)
    throw DomainGuard("claimed_zeta_strip: 1 - 2^(1-Z) degenerate");
  return claimed_eta(spec) / denom;
}

cplx claimed_zeta_reflection(const ClaimSpec& spec,
                             const ref::PrecisionPolicy& policy) {
  check_spec_common(spec);
  if (!(spec.Z.real() < 0.0))
    throw DomainGuard("claimed_zeta_reflection: requires Re(Z) < 0");
  ClaimSpec mirrored = spec;
  mirrored.Z = 1.0 - spec.Z;  // Re > 1
  const cplx zeta_1mz = claimed_zeta(mirrored);
  (void)policy;
  return ref::ref_gamma(1.0 - spec.Z).value *
         std::exp((spec.Z - 1.0) * std::log(2.0 * kPi)) * 2.0 *
         std::sin(kPi * spec.Z / 2.0) * zeta_1mz;
}

ZeroCandidate build_zero_candidate(long t, long k, long m, ZeroSource source) {
  if (k <= 1 || m <= 1 || k == m)
    throw InvalidInput("build_zero_candidate: need k, m > 1 and k != m");
  ZeroCandidate c;
  c.t = t;
  c.k = k;
  c.m = m;
  c.source = source;
  const double lk = std::log(static_cast<double>(k));
  const double lm = std::log(static_cast<double>(m));
  const double span = lk - lm;

  if (source == ZeroSource::T14 || source == ZeroSource::T15) {
    c.gamma2 = static_cast<double>(t) * kPi / span;
    const double ck = std::cos(c.gamma2 * lk);
    const double cm = std::cos(c.gamma2 * lm);
    if (ck == 0.0) {
      c.feasible = false;
      c.note = "cos(gamma2 ln k) = 0; gamma1 undefined";
      return c;
    }
    const double ratio = cm / ck;
    if (!(ratio > 0.0)) {
      c.feasible = false;
      c.note = "cosine ratio non-positive (odd t); gamma1 undefined";
      return c;
    }
    c.gamma1 = 1.0 + std::log(ratio) / span;
    return c;
  }

  // Corollary construction on the critical line.
  c.gamma1 = 0.5;
  const double angle = static_cast<double>(t) * kPi * lk / span;
  const double scale = std::sqrt(static_cast<double>(m) /
                                 static_cast<double>(k));
  if (source == ZeroSource::C2Arccos) {
    const double arg = scale * std::cos(angle);
    if (std::abs(arg) > 1.0) {
      c.feasible = false;
      c.note = "arccos feasibility bound violated";
      return c;
    }
    c.gamma2 = std::acos(arg) / lm;
  } else {
    const double arg = scale * std::sin(angle);
    if (std::abs(arg) > 1.0) {
      c.feasible = false;
      c.note = "arcsin feasibility bound violated";
      return c;
    }
    c.gamma2 = std::asin(arg) / lm;
  }
  return c;
}

ClaimVerdict audit_zero_candidate(const ZeroCandidate& c, int n,
                                  const ref::PrecisionPolicy& policy) {
  if (n < 2) throw InvalidInput("audit_zero_candidate: n must be >= 2");
  ClaimVerdict v;
  v.spec.id = c.source == ZeroSource::T15 ? ClaimId::T15Zero
              : (c.source == ZeroSource::T14 ? ClaimId::T14Zero
                                             : ClaimId::C2RhZero);
  v.spec.n = n;
  v.spec.k = c.k;
  v.spec.m = c.m;
  v.spec.t = c.t;
  v.claimed = {0.0, 0.0};

  if (!c.feasible) {
    v.cls = Classification::Degenerate;
    v.notes = c.note;
    return v;
  }
  const cplx s{c.gamma1, c.gamma2};
  const cplx target = static_cast<double>(n - 1) * s;
  v.spec.Z = target;

  std::ostringstream notes;
  if (target.real() <= 1.0)
    notes << "series form diverges here; reference is the analytic "
             "continuation. ";
  if ((c.source == ZeroSource::C2Arccos || c.source == ZeroSource::C2Arcsin) &&
      n == 2)
    notes << "n=2 lies outside the n>=3 identity machinery. ";

  try {
    const ref::EvalResult reference =
        c.source == ZeroSource::T15 ? ref::ref_eta(target, policy)
                                    : ref::ref_zeta(target, policy);
    v.reference = reference.value;
    v.abs_residual = std::abs(reference.value);
    v.cls = classify(v.abs_residual, std::abs(reference.value),
                     policy.tol_claim);
  } catch (const DomainGuard& e) {
    v.cls = Classification::Degenerate;
    notes << e.what();
  }
  v.notes = notes.str();
  return v;
}

SpreadReport nonuniqueness_probe(cplx Z, int n,
                                 std::span<const std::pair<long, long>> pairs,
                                 const ref::PrecisionPolicy& policy) {
  if (pairs.size() < 2)
    throw InvalidInput("nonuniqueness_probe: need at least 2 (k, m) pairs");
  if (!(Z.real() > 1.0))
    throw InvalidInput("nonuniqueness_probe: requires Re(Z) > 1");
  SpreadReport report;
  report.Z = Z;
  report.n = n;
  report.reference = ref::ref_zeta(Z, policy).value;

  for (GammaMode mode :
       {GammaMode::GammaEqualsZ, GammaMode::GammaEqualsZOverNm1}) {
    std::vector<cplx> mode_values;
    for (const auto& [k, m] : pairs) {
      SpreadEntry e;
      e.k = k;
      e.m = m;
      e.mode = mode;
      ClaimSpec spec;
      spec.id = ClaimId::Nonuniqueness;
      spec.Z = Z;
      spec.n = n;
      spec.k = k;
      spec.m = m;
      spec.mode = mode;
      try {
        e.claimed = claimed_zeta(spec);
        e.residual_vs_ref = std::abs(e.claimed - report.reference);
        mode_values.push_back(e.claimed);
      } catch (const DomainGuard& ex) {
        e.degenerate = true;
        e.note = ex.what();
      }
      report.entries.push_back(e);
    }
    for (size_t i = 0; i < mode_values.size(); ++i)
      for (size_t j = i + 1; j < mode_values.size(); ++j)
        report.max_spread = std::max(
            report.max_spread, std::abs(mode_values[i] - mode_values[j]));
  }
  report.nonunique = report.max_spread > policy.tol_claim;
  return report;
}

ClaimVerdict theorem14_consistency_check(long t, long k, long m) {
  const ZeroCandidate c = build_zero_candidate(t, k, m, ZeroSource::T14);
  ClaimVerdict v;
  v.spec.id = ClaimId::T14Zero;
  v.spec.k = k;
  v.spec.m = m;
  v.spec.t = t;
  if (!c.feasible) {
    v.cls = Classification::Degenerate;
    v.notes = c.note;
    return v;
  }
  const auto sol = param::solve_parameters(c.gamma1, c.gamma2, k, m);
  v.spec.Z = {c.gamma1, c.gamma2};
  v.claimed = sol.params.a();
  v.reference = sol.params.d();
  v.abs_residual = std::abs(v.claimed - v.reference);
  const double scale = std::max(1.0, std::abs(v.reference));
  v.cls = v.abs_residual <= 1e-10 * scale ? Classification::Confirmed
                                          : Classification::Refuted;
  if (sol.degenerate) v.notes = "degenerate-flagged (zero component of d)";
  return v;
}

bool check_reference_anchors(const ref::PrecisionPolicy& policy,
                             std::string* detail) {
  struct Anchor {
    const char* name;
    cplx got;
    double expected;
  };
  const Anchor anchors[] = {
      {"zeta(2)", ref::ref_zeta({2.0, 0.0}, policy).value,
       kPi * kPi / 6.0},
      {"zeta(3)", ref::ref_zeta({3.0, 0.0}, policy).value, kApery},
      {"eta(1)", ref::ref_eta({1.0, 0.0}, policy).value, std::numbers::ln2},
      {"zeta(-1)", ref::ref_zeta({-1.0, 0.0}, policy).value, -1.0 / 12.0},
  };
  bool ok = true;
  std::ostringstream os;
  for (const auto& a : anchors) {
    const double err = std::abs(a.got - cplx{a.expected, 0.0});
    if (err > 1e-9) {
      ok = false;
      os << a.name << " off by " << err << "; ";
    }
  }
  if (detail) *detail = os.str();
  return ok;
}

const char* claim_id_name(ClaimId id) {
  switch (id) {
    case ClaimId::T1Identity: return "T1_IDENTITY";
    case ClaimId::T2Identity: return "T2_IDENTITY";
    case ClaimId::T7ClosedForm: return "T7_CLOSED_FORM";
    case ClaimId::T8ClosedForm: return "T8_CLOSED_FORM";
    case ClaimId::T10Zeta: return "T10_ZETA";
    case ClaimId::T11Eta: return "T11_ETA";
    case ClaimId::T12Strip: return "T12_STRIP";
    case ClaimId::T13Reflection: return "T13_REFLECTION";
    case ClaimId::T14Zero: return "T14_ZERO";
    case ClaimId::T15Zero: return "T15_ZERO";
    case ClaimId::C2RhZero: return "C2_RH_ZERO";
    case ClaimId::Nonuniqueness: return "NONUNIQUENESS";
  }
  return "UNKNOWN";
}

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::Confirmed: return "CONFIRMED";
    case Classification::Refuted: return "REFUTED";
    case Classification::Degenerate: return "DEGENERATE";
    case Classification::Inconclusive: return "INCONCLUSIVE";
  }
  return "UNKNOWN";
}

const char* gamma_mode_name(GammaMode m) {
  return m == GammaMode::GammaEqualsZ ? "GAMMA_EQUALS_Z"
                                      : "GAMMA_EQUALS_Z_OVER_NM1";
}

const char* zero_source_name(ZeroSource s) {
  switch (s) {
    case ZeroSource::T14: return "T14";
    case ZeroSource::T15: return "T15";
    case ZeroSource::C2Arccos: return "C2_ARCCOS";
    case ZeroSource::C2Arcsin: return "C2_ARCSIN";
  }
  return "UNKNOWN";
}

}  // namespace zetalab::claims
