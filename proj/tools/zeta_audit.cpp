// Command-line audit surface: identity sweeps, closed-form claim checks,
// zero-candidate audits, and the full batch report.

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <zetalab/claims.hpp>
#include <zetalab/report.hpp>

namespace {

using zetalab::cplx;
using zetalab::report::fmt17;
using json = nlohmann::ordered_json;
namespace ps = zetalab::power_sums;
namespace claims = zetalab::claims;

struct LongRange {
  long lo = 0;
  long hi = 0;
};

// "3..6" or "4"
LongRange parse_range(const std::string& text) {
  const auto pos = text.find("..");
  LongRange r;
  if (pos == std::string::npos) {
    r.lo = r.hi = std::stol(text);
  } else {
    r.lo = std::stol(text.substr(0, pos));
    r.hi = std::stol(text.substr(pos + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range: " + text);
  return r;
}

// "1.5" or "1.5,-2"
cplx parse_complex(const std::string& text) {
  const auto pos = text.find(',');
  if (pos == std::string::npos) return {std::stod(text), 0.0};
  return {std::stod(text.substr(0, pos)), std::stod(text.substr(pos + 1))};
}

double uniform_pm2(std::mt19937_64& rng) {
  return -2.0 + 4.0 * (static_cast<double>(rng() >> 11) / 9007199254740992.0);
}

int run_verify_identity(const std::string& kind, const std::string& n_range,
                        const std::string& k_range, int samples,
                        const std::string& a_text, const std::string& d_text,
                        unsigned long seed) {
  LongRange nr, kr;
  try {
    nr = parse_range(n_range);
    kr = parse_range(k_range);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (nr.lo < 3 || nr.hi > ps::kFactorialCap) {
    std::cerr << "error: n must lie in [3, " << ps::kFactorialCap << "]\n";
    return 2;
  }
  if (kr.lo < 1) {
    std::cerr << "error: k must be >= 1\n";
    return 2;
  }

  std::vector<ps::ComplexPair> pairs;
  if (!a_text.empty() || !d_text.empty()) {
    const cplx a = parse_complex(a_text.empty() ? "1" : a_text);
    const cplx d = parse_complex(d_text.empty() ? "1" : d_text);
    pairs.push_back({a.real(), a.imag(), d.real(), d.imag()});
  } else {
    std::mt19937_64 rng(seed);
    for (int s = 0; s < std::max(samples, 1); ++s)
      pairs.push_back({uniform_pm2(rng), uniform_pm2(rng), uniform_pm2(rng),
                       uniform_pm2(rng)});
  }

  std::cout << "n,k,a_re,a_im,d_re,d_im,lhs_re,lhs_im,rhs_re,rhs_im,"
               "abs_residual,rel_residual\n";
  for (long n = nr.lo; n <= nr.hi; ++n) {
    for (long k = kr.lo; k <= kr.hi; ++k) {
      for (const auto& p : pairs) {
        const ps::ProgressionQuery q{p, k, static_cast<int>(n)};
        const auto r = kind == "t1" ? ps::theorem1_residual(q)
                                    : ps::theorem2_residual(q);
        std::cout << n << ',' << k << ',' << fmt17(p.a1) << ',' << fmt17(p.a2)
                  << ',' << fmt17(p.d1) << ',' << fmt17(p.d2) << ','
                  << fmt17(r.lhs.real()) << ',' << fmt17(r.lhs.imag()) << ','
                  << fmt17(r.rhs.real()) << ',' << fmt17(r.rhs.imag()) << ','
                  << fmt17(r.abs_residual) << ',' << fmt17(r.rel_residual)
                  << '\n';
      }
    }
  }
  return 0;
}

int run_claimed_zeta(const std::string& z_text, int n, long k, long m,
                     const std::string& mode_text) {
  claims::ClaimSpec spec;
  spec.id = claims::ClaimId::T10Zeta;
  try {
    spec.Z = parse_complex(z_text);
  } catch (const std::exception& e) {
    std::cerr << "error: bad --Z: " << e.what() << "\n";
    return 2;
  }
  spec.n = n;
  spec.k = k;
  spec.m = m;
  spec.mode = mode_text == "gznm1" ? claims::GammaMode::GammaEqualsZOverNm1
                                   : claims::GammaMode::GammaEqualsZ;

  json out;
  out["claim_id"] = claims::claim_id_name(spec.id);
  out["inputs"] = json{{"Z_re", spec.Z.real()}, {"Z_im", spec.Z.imag()},
                       {"n", n},                {"k", k},
                       {"m", m},                {"mode",
                                                 claims::gamma_mode_name(
                                                     spec.mode)}};
  zetalab::ref::PrecisionPolicy policy;
  try {
    const cplx claimed = claims::claimed_zeta(spec);
    const cplx reference = zetalab::ref::ref_zeta(spec.Z, policy).value;
    const double residual = std::abs(claimed - reference);
    out["claimed_re"] = claimed.real();
    out["claimed_im"] = claimed.imag();
    out["reference_re"] = reference.real();
    out["reference_im"] = reference.imag();
    out["abs_residual"] = residual;
    out["classification"] = claims::classification_name(claims::classify(
        residual, std::abs(reference), policy.tol_claim));
    out["notes"] = "";
  } catch (const zetalab::DomainGuard& e) {
    out["classification"] = "DEGENERATE";
    out["notes"] = e.what();
  } catch (const zetalab::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_zero_audit(const std::string& t_range, long k, long m, int n,
                   const std::string& source_text) {
  LongRange tr;
  try {
    tr = parse_range(t_range);
  } catch (const std::exception& e) {
    std::cerr << "error: bad --t: " << e.what() << "\n";
    return 2;
  }
  std::vector<claims::ZeroSource> sources;
  if (source_text == "t14") sources = {claims::ZeroSource::T14};
  else if (source_text == "t15") sources = {claims::ZeroSource::T15};
  else if (source_text == "c2-arccos") sources = {claims::ZeroSource::C2Arccos};
  else if (source_text == "c2-arcsin") sources = {claims::ZeroSource::C2Arcsin};
  else if (source_text == "c2")
    sources = {claims::ZeroSource::C2Arccos, claims::ZeroSource::C2Arcsin};
  else {
    std::cerr << "error: unknown --source '" << source_text << "'\n";
    return 2;
  }

  zetalab::ref::PrecisionPolicy policy;
  std::cout << "t,source,gamma1,gamma2,feasible,reference_abs,verdict,notes\n";
  for (long t = tr.lo; t <= tr.hi; ++t) {
    for (auto source : sources) {
      claims::ZeroCandidate cand;
      try {
        cand = claims::build_zero_candidate(t, k, m, source);
      } catch (const zetalab::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      const auto v = claims::audit_zero_candidate(cand, n, policy);
      std::cout << t << ',' << claims::zero_source_name(source) << ','
                << fmt17(cand.gamma1) << ',' << fmt17(cand.gamma2) << ','
                << (cand.feasible ? "true" : "false") << ','
                << fmt17(std::abs(v.reference)) << ','
                << claims::classification_name(v.cls) << ',' << v.notes
                << '\n';
    }
  }
  return 0;
}

int run_full_report(const std::string& config_path,
                    const std::string& output_override) {
  zetalab::report::AuditConfig config;
  if (!config_path.empty()) {
    try {
      config = zetalab::report::AuditConfig::load(config_path);
    } catch (const zetalab::report::ConfigError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  if (!output_override.empty()) config.output_dir = output_override;
  if (const char* env = std::getenv("ZETALAB_OUTPUT_DIR"); env && *env)
    config.output_dir = env;
  return zetalab::report::run_full_report(config, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical audit of claimed zeta/eta closed forms"};
  app.require_subcommand(1);

  // verify-identity
  auto* verify = app.add_subcommand(
      "verify-identity", "Residual sweep of the finite power-sum identities");
  std::string kind, n_range = "3..6", k_range = "1..20";
  std::string a_text, d_text;
  int samples = 10;
  unsigned long seed = 20260823;
  verify->add_option("kind", kind, "t1 or t2")
      ->required()
      ->check(CLI::IsMember({"t1", "t2"}));
  verify->add_option("--n", n_range, "power index range, e.g. 3..6");
  verify->add_option("--k", k_range, "term count range, e.g. 1..40");
  verify->add_option("--samples", samples, "random (a, d) draws");
  verify->add_option("--a", a_text, "fixed a as re[,im]");
  verify->add_option("--d", d_text, "fixed d as re[,im]");
  verify->add_option("--seed", seed, "RNG seed");

  // claimed-zeta
  auto* cz = app.add_subcommand(
      "claimed-zeta", "Evaluate the claimed closed-form zeta at one point");
  std::string z_text, mode_text = "gz";
  int cz_n = 3;
  long cz_k = 0, cz_m = 0;
  cz->add_option("--Z", z_text, "target as re[,im]")->required();
  cz->add_option("--n", cz_n, "power index (>= 3)");
  cz->add_option("--k", cz_k, "first anchor (> 1)")->required();
  cz->add_option("--m", cz_m, "second anchor (> 1, != k)")->required();
  cz->add_option("--mode", mode_text, "gz | gznm1")
      ->check(CLI::IsMember({"gz", "gznm1"}));

  // zero-audit
  auto* za = app.add_subcommand(
      "zero-audit", "Audit constructed zero candidates against references");
  std::string t_range, source_text = "t14";
  long za_k = 0, za_m = 0;
  int za_n = 3;
  za->add_option("--t", t_range, "candidate index range, e.g. -4..4")
      ->required();
  za->add_option("--k", za_k, "first anchor")->required();
  za->add_option("--m", za_m, "second anchor")->required();
  za->add_option("--n", za_n, "power index for the audited target");
  za->add_option("--source", source_text, "t14 | t15 | c2 | c2-arccos | c2-arcsin");

  // full-report
  auto* fr = app.add_subcommand("full-report",
                                "Run every audit grid and write report files");
  std::string config_path, output_override;
  fr->add_option("--config", config_path, "JSON config file");
  fr->add_option("--output", output_override, "output directory override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed())
      return run_verify_identity(kind, n_range, k_range, samples, a_text,
                                 d_text, seed);
    if (cz->parsed()) return run_claimed_zeta(z_text, cz_n, cz_k, cz_m, mode_text);
    if (za->parsed()) return run_zero_audit(t_range, za_k, za_m, za_n, source_text);
    if (fr->parsed()) return run_full_report(config_path, output_override);
  } catch (const zetalab::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
