#ifndef ZETALAB_CLAIMS_HPP
#define ZETALAB_CLAIMS_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <zetalab/common.hpp>
#include <zetalab/parameterization.hpp>
#include <zetalab/power_sums.hpp>
#include <zetalab/reference_functions.hpp>

namespace zetalab::claims {

enum class ClaimId {
  T1Identity,
  T2Identity,
  T7ClosedForm,
  T8ClosedForm,
  T10Zeta,
  T11Eta,
  T12Strip,
  T13Reflection,
  T14Zero,
  T15Zero,
  C2RhZero,
  Nonuniqueness,
};

/// How the closed-form statement's exponent is fed to the parameter solver.
/// The statement and its proof disagree (gamma = Z versus gamma scaled by
/// n-1); both readings are implemented and reported.
enum class GammaMode { GammaEqualsZ, GammaEqualsZOverNm1 };

enum class Classification { Confirmed, Refuted, Degenerate, Inconclusive };

enum class ZeroSource { T14, T15, C2Arccos, C2Arcsin };

struct ClaimSpec {
  ClaimId id = ClaimId::T10Zeta;
  cplx Z{};
  int n = 3;   // >= 3 for the closed-form pipelines
  long k = 2;  // > 1
  long m = 3;  // > 1, != k
  long t = 0;  // zero-candidate index
  GammaMode mode = GammaMode::GammaEqualsZ;
};

struct ClaimVerdict {
  ClaimSpec spec;
  cplx claimed{};
  cplx reference{};
  double abs_residual = 0.0;
  Classification cls = Classification::Inconclusive;
  std::string notes;
};

struct ZeroCandidate {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  long t = 0;
  long k = 2;
  long m = 3;
  ZeroSource source = ZeroSource::T14;
  bool feasible = true;
  std::string note;
};

/// CONFIRMED below tol, REFUTED above 10x tol, INCONCLUSIVE between.
Classification classify(double abs_residual, double reference_mag,
                        double tol_claim);

/// Closed-form zeta pipeline: resolve gamma per mode, solve (a, d) from
/// (gamma, k, m), then
///   (n-1)!(n-3)!/d * Sum_i (d/2)^i (-1)^i limit_s_term / (i!(n-i)!(n-3-i)!)
/// Yields exactly 0 when the solved parameters satisfy a = d (1e-12).
/// Throws DomainGuard when Re(Z) is below the stated domain, d = 0 exactly,
/// or the factorial cap is exceeded.
cplx claimed_zeta(const ClaimSpec& spec);

/// Same pipeline with limit_l_term; stated domain Re(Z) > 0.
cplx claimed_eta(const ClaimSpec& spec);

/// claimed_eta(spec) / (1 - 2^(1-Z)).
cplx claimed_zeta_strip(const ClaimSpec& spec);

/// Gamma(1-Z) (2 pi)^(Z-1) 2 sin(pi Z / 2) * claimed_zeta at 1-Z.
/// Requires Re(Z) < 0.
cplx claimed_zeta_reflection(const ClaimSpec& spec,
                             const ref::PrecisionPolicy& policy = {});

/// Builds a candidate zero from (t, k, m):
///   T14/T15: gamma2 = t pi / (ln k - ln m),
///            gamma1 = 1 + ln(cos(g2 ln m)/cos(g2 ln k)) / (ln k - ln m).
///   C2:      gamma1 = 1/2, gamma2 = arccos/arcsin chain with the
///            feasibility bound checked first.
/// An undefined gamma1 (cosine ratio non-positive, odd t) or a failed C2
/// bound yields feasible = false with a note; no exception.
ZeroCandidate build_zero_candidate(long t, long k, long m, ZeroSource source);

/// Audits a candidate: claimed 0 against ref_zeta((n-1)s) (T14/C2) or
/// ref_eta((n-1)s) (T15). Pole hits and window misses are DEGENERATE.
ClaimVerdict audit_zero_candidate(const ZeroCandidate& c, int n,
                                  const ref::PrecisionPolicy& policy = {});

struct SpreadEntry {
  long k = 0;
  long m = 0;
  GammaMode mode = GammaMode::GammaEqualsZ;
  cplx claimed{};
  double residual_vs_ref = 0.0;
  bool degenerate = false;
  std::string note;
};

struct SpreadReport {
  cplx Z{};
  int n = 3;
  cplx reference{};
  std::vector<SpreadEntry> entries;
  double max_spread = 0.0;  // max pairwise |difference| within a mode
  bool nonunique = false;
};

/// Evaluates claimed_zeta for each (k, m) pair under both gamma modes and
/// reports the spread; flags NONUNIQUE when the spread exceeds tol_claim.
SpreadReport nonuniqueness_probe(cplx Z, int n,
                                 std::span<const std::pair<long, long>> pairs,
                                 const ref::PrecisionPolicy& policy = {});

/// Rebuilds a T14 candidate, solves the parameters, and checks the
/// construction's fixed point a = d to 1e-10 relative.
ClaimVerdict theorem14_consistency_check(long t, long k, long m);

/// Re-validates the four reference anchors (zeta(2), zeta(3), eta(1),
/// zeta(-1)) to 1e-9 absolute; audit batches abort when this fails.
bool check_reference_anchors(const ref::PrecisionPolicy& policy = {},
                             std::string* detail = nullptr);

const char* claim_id_name(ClaimId id);
const char* classification_name(Classification c);
const char* gamma_mode_name(GammaMode m);
const char* zero_source_name(ZeroSource s);

}  // namespace zetalab::claims

#endif
