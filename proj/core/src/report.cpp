#include <zetalab/report.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <zetalab/power_sums.hpp>

namespace zetalab::report {

namespace fs = std::filesystem;
namespace ps = zetalab::power_sums;
using claims::Classification;

namespace {

// Identity rows use a fixed pinned tolerance, independent of tol_claim.
constexpr double kIdentityTol = 1e-9;

double uniform_pm2(std::mt19937_64& rng) {
  // Explicit bit mapping keeps draws identical across standard libraries.
  const double u = static_cast<double>(rng() >> 11) / 9007199254740992.0;
  return -2.0 + 4.0 * u;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Classification identity_class(double rel_residual) {
  if (rel_residual <= kIdentityTol) return Classification::Confirmed;
  if (rel_residual >= 10.0 * kIdentityTol) return Classification::Refuted;
  return Classification::Inconclusive;
}

VerdictRow residual_row(const char* claim_id, json inputs,
                        const ps::ResidualReport& r) {
  VerdictRow row;
  row.claim_id = claim_id;
  row.inputs = std::move(inputs);
  row.claimed = r.rhs;
  row.reference = r.lhs;
  row.abs_residual = r.abs_residual;
  row.classification =
      claims::classification_name(identity_class(r.rel_residual));
  return row;
}

json inputs_for_pair(const ps::ComplexPair& p, long k, int n) {
  return json{{"n", n},      {"k", k},      {"a_re", p.a1},
              {"a_im", p.a2}, {"d_re", p.d1}, {"d_im", p.d2}};
}

void append_identity_rows(const AuditConfig& config,
                          std::vector<VerdictRow>& rows) {
  // Hand-checked anchor points lead the grid.
  const ps::ProgressionQuery anchors[] = {
      {{1, 0, 1, 0}, 1, 3}, {{1, 0, 1, 0}, 2, 3}};
  for (const auto& q : anchors) {
    auto inputs = inputs_for_pair(q.params, q.k, q.n);
    inputs["anchor"] = true;
    rows.push_back(
        residual_row("T1_IDENTITY", inputs, ps::theorem1_residual(q)));
  }
  const ps::ProgressionQuery t2_anchors[] = {
      {{1, 0, 1, 0}, 1, 3}, {{1, 0, 1, 0}, 2, 4}, {{1, 0, 1, 0}, 2, 3}};
  for (const auto& q : t2_anchors) {
    auto inputs = inputs_for_pair(q.params, q.k, q.n);
    inputs["anchor"] = true;
    rows.push_back(
        residual_row("T2_IDENTITY", inputs, ps::theorem2_residual(q)));
  }

  std::mt19937_64 rng(config.identity.seed);
  for (int n : config.identity.n_values) {
    for (long k : config.identity.k_values) {
      for (int s = 0; s < config.identity.samples; ++s) {
        ps::ComplexPair p;
        do {
          p.a1 = uniform_pm2(rng);
          p.a2 = uniform_pm2(rng);
          p.d1 = uniform_pm2(rng);
          p.d2 = uniform_pm2(rng);
        } while (p.d1 == 0.0 && p.d2 == 0.0);
        const ps::ProgressionQuery q{p, k, n};
        auto inputs = inputs_for_pair(p, k, n);
        inputs["sample"] = s;
        rows.push_back(
            residual_row("T1_IDENTITY", inputs, ps::theorem1_residual(q)));
        rows.push_back(
            residual_row("T2_IDENTITY", inputs, ps::theorem2_residual(q)));
      }
    }
  }
}

json inputs_for_claim(const claims::ClaimSpec& spec) {
  return json{{"Z_re", spec.Z.real()}, {"Z_im", spec.Z.imag()},
              {"n", spec.n},           {"k", spec.k},
              {"m", spec.m},           {"mode",
                                        claims::gamma_mode_name(spec.mode)}};
}

void append_closed_form_rows(const AuditConfig& config,
                             std::vector<VerdictRow>& rows) {
  struct Kind {
    const char* name;
    cplx (*eval)(const claims::ClaimSpec&);
    bool zeta_reference;
  };
  const Kind kinds[] = {
      {"T10_ZETA", [](const claims::ClaimSpec& s) { return claims::claimed_zeta(s); }, true},
      {"T11_ETA", [](const claims::ClaimSpec& s) { return claims::claimed_eta(s); }, false},
      {"T12_STRIP", [](const claims::ClaimSpec& s) { return claims::claimed_zeta_strip(s); }, true},
      {"T13_REFLECTION", [](const claims::ClaimSpec& s) { return claims::claimed_zeta_reflection(s); }, true},
  };

  for (const cplx& Z : config.z_grid) {
    for (int n : config.n_set) {
      for (const auto& [k, m] : config.pairs) {
        for (auto mode : {claims::GammaMode::GammaEqualsZ,
                          claims::GammaMode::GammaEqualsZOverNm1}) {
          claims::ClaimSpec spec;
          spec.Z = Z;
          spec.n = n;
          spec.k = k;
          spec.m = m;
          spec.mode = mode;
          for (const auto& kind : kinds) {
            VerdictRow row;
            row.claim_id = kind.name;
            row.inputs = inputs_for_claim(spec);
            try {
              row.claimed = kind.eval(spec);
              const auto reference = kind.zeta_reference
                                         ? ref::ref_zeta(Z, config.precision)
                                         : ref::ref_eta(Z, config.precision);
              row.reference = reference.value;
              row.abs_residual = std::abs(row.claimed - row.reference);
              row.classification = claims::classification_name(claims::classify(
                  row.abs_residual, std::abs(row.reference),
                  config.precision.tol_claim));
            } catch (const DomainGuard& e) {
              row.classification =
                  claims::classification_name(Classification::Degenerate);
              row.notes = e.what();
            }
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }
}

void append_zero_rows(const AuditConfig& config,
                      std::vector<VerdictRow>& rows) {
  struct SourcePlan {
    claims::ZeroSource source;
    int n;
  };
  // T14/T15 are audited with the n >= 3 machinery; the corollary fixes
  // n = 2 and gamma1 = 1/2, honored verbatim and flagged downstream.
  const SourcePlan plan[] = {{claims::ZeroSource::T14, 3},
                             {claims::ZeroSource::T15, 3},
                             {claims::ZeroSource::C2Arccos, 2},
                             {claims::ZeroSource::C2Arcsin, 2}};
  for (long t = config.t_min; t <= config.t_max; ++t) {
    for (const auto& [k, m] : config.pairs) {
      for (const auto& sp : plan) {
        const auto cand = claims::build_zero_candidate(t, k, m, sp.source);
        const auto verdict =
            claims::audit_zero_candidate(cand, sp.n, config.precision);
        VerdictRow row;
        row.claim_id = claims::claim_id_name(verdict.spec.id);
        row.inputs = json{{"t", t},
                          {"k", k},
                          {"m", m},
                          {"n", sp.n},
                          {"source", claims::zero_source_name(sp.source)},
                          {"gamma1", cand.gamma1},
                          {"gamma2", cand.gamma2},
                          {"feasible", cand.feasible}};
        row.claimed = verdict.claimed;
        row.reference = verdict.reference;
        row.abs_residual = verdict.abs_residual;
        row.classification = claims::classification_name(verdict.cls);
        row.notes = verdict.notes;
        rows.push_back(std::move(row));
      }
      const auto consistency = claims::theorem14_consistency_check(t, k, m);
      VerdictRow row;
      row.claim_id = "T14_CONSISTENCY";
      row.inputs = json{{"t", t}, {"k", k}, {"m", m}};
      row.claimed = consistency.claimed;
      row.reference = consistency.reference;
      row.abs_residual = consistency.abs_residual;
      row.classification = claims::classification_name(consistency.cls);
      row.notes = consistency.notes;
      rows.push_back(std::move(row));
    }
  }
}

void append_nonuniqueness_rows(const AuditConfig& config,
                               std::vector<VerdictRow>& rows) {
  for (const cplx& Z : config.z_grid) {
    if (!(Z.real() > 1.0)) continue;  // probe grid is defined on Re(Z) > 1
    for (int n : config.n_set) {
      const auto probe = claims::nonuniqueness_probe(
          Z, n, config.pairs, config.precision);
      for (const auto& e : probe.entries) {
        VerdictRow row;
        row.claim_id = "NONUNIQUENESS";
        row.inputs = json{{"Z_re", Z.real()}, {"Z_im", Z.imag()},
                          {"n", n},           {"k", e.k},
                          {"m", e.m},         {"mode",
                                               claims::gamma_mode_name(e.mode)}};
        row.claimed = e.claimed;
        row.reference = probe.reference;
        row.abs_residual = e.residual_vs_ref;
        row.classification = claims::classification_name(
            e.degenerate ? Classification::Degenerate
                         : claims::classify(e.residual_vs_ref,
                                            std::abs(probe.reference),
                                            config.precision.tol_claim));
        row.notes = e.note;
        rows.push_back(std::move(row));
      }
      VerdictRow summary;
      summary.claim_id = "NONUNIQUENESS";
      summary.inputs = json{{"Z_re", Z.real()}, {"Z_im", Z.imag()},
                            {"n", n},           {"summary", true}};
      summary.claimed = {probe.max_spread, 0.0};
      summary.reference = probe.reference;
      summary.abs_residual = probe.max_spread;
      summary.classification = claims::classification_name(
          probe.nonunique ? Classification::Refuted
                          : Classification::Confirmed);
      summary.notes = probe.nonunique
                          ? "NONUNIQUE: claimed closed form depends on (k, m)"
                          : "UNIQUE within tolerance";
      rows.push_back(std::move(summary));
    }
  }
}

json row_to_json(const VerdictRow& row) {
  return json{{"claim_id", row.claim_id},
              {"inputs", row.inputs},
              {"claimed_re", row.claimed.real()},
              {"claimed_im", row.claimed.imag()},
              {"reference_re", row.reference.real()},
              {"reference_im", row.reference.imag()},
              {"abs_residual", row.abs_residual},
              {"classification", row.classification},
              {"notes", row.notes}};
}

void write_json(const fs::path& path, const RunOutput& out) {
  json doc;
  doc["artifact_version"] = kVersion;
  doc["rows"] = json::array();
  for (const auto& row : out.rows) doc["rows"].push_back(row_to_json(row));
  std::ofstream f(path, std::ios::binary);
  f << doc.dump(1) << '\n';
}

void write_csv(const fs::path& path, const RunOutput& out) {
  std::ofstream f(path, std::ios::binary);
  f << "claim_id,inputs,claimed_re,claimed_im,reference_re,reference_im,"
       "abs_residual,classification,notes\n";
  for (const auto& row : out.rows) {
    f << row.claim_id << ',' << csv_escape(row.inputs.dump()) << ','
      << fmt17(row.claimed.real()) << ',' << fmt17(row.claimed.imag()) << ','
      << fmt17(row.reference.real()) << ',' << fmt17(row.reference.imag())
      << ',' << fmt17(row.abs_residual) << ',' << row.classification << ','
      << csv_escape(row.notes) << '\n';
  }
}

void write_md(const fs::path& path, const RunOutput& out) {
  std::ofstream f(path, std::ios::binary);
  f << "# Audit verdicts\n\n"
    << "| claim | inputs | claimed | reference | abs residual | verdict | "
       "notes |\n"
    << "|---|---|---|---|---|---|---|\n";
  for (const auto& row : out.rows) {
    f << "| " << row.claim_id << " | `" << row.inputs.dump() << "` | "
      << fmt17(row.claimed.real()) << (row.claimed.imag() < 0 ? "" : "+")
      << fmt17(row.claimed.imag()) << "i | " << fmt17(row.reference.real())
      << (row.reference.imag() < 0 ? "" : "+") << fmt17(row.reference.imag())
      << "i | " << fmt17(row.abs_residual) << " | " << row.classification
      << " | " << row.notes << " |\n";
  }
}

}  // namespace

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void AuditConfig::validate() const {
  precision.validate();
  if (formats.empty()) throw ConfigError("config: at least one format");
  for (const auto& f : formats)
    if (f != "json" && f != "csv" && f != "md")
      throw ConfigError("config: unknown format '" + f + "'");
  if (identity.n_values.empty() || identity.k_values.empty() ||
      z_grid.empty() || n_set.empty() || pairs.empty())
    throw ConfigError("config: grids must be non-empty");
  if (t_min > t_max) throw ConfigError("config: t_min > t_max");
  for (int n : identity.n_values)
    if (n < 3 || n > ps::kFactorialCap)
      throw ConfigError("config: identity n out of [3, 20]");
  for (int n : n_set)
    if (n < 3 || n > ps::kFactorialCap)
      throw ConfigError("config: n_set entry out of [3, 20]");
  for (const auto& [k, m] : pairs)
    if (k <= 1 || m <= 1 || k == m)
      throw ConfigError("config: pairs need k, m > 1 and k != m");
}

json AuditConfig::to_json() const {
  json j;
  j["working_digits"] = precision.working_digits;
  j["series_terms"] = precision.series_terms;
  j["tol_ref"] = precision.tol_ref;
  j["tol_claim"] = precision.tol_claim;
  j["identity_n"] = identity.n_values;
  j["identity_k"] = identity.k_values;
  j["identity_samples"] = identity.samples;
  j["seed"] = identity.seed;
  j["z_grid"] = json::array();
  for (const auto& z : z_grid)
    j["z_grid"].push_back(json::array({z.real(), z.imag()}));
  j["n_set"] = n_set;
  j["pairs"] = json::array();
  for (const auto& [k, m] : pairs) j["pairs"].push_back(json::array({k, m}));
  j["t_min"] = t_min;
  j["t_max"] = t_max;
  j["output_dir"] = output_dir;
  j["formats"] = formats;
  return j;
}

AuditConfig AuditConfig::from_json(const json& j) {
  AuditConfig c;  // defaults, overridden by present keys
  if (j.contains("working_digits"))
    c.precision.working_digits = j["working_digits"].get<int>();
  if (j.contains("series_terms"))
    c.precision.series_terms = j["series_terms"].get<int>();
  if (j.contains("tol_ref")) c.precision.tol_ref = j["tol_ref"].get<double>();
  if (j.contains("tol_claim"))
    c.precision.tol_claim = j["tol_claim"].get<double>();
  if (j.contains("identity_n"))
    c.identity.n_values = j["identity_n"].get<std::vector<int>>();
  if (j.contains("identity_k"))
    c.identity.k_values = j["identity_k"].get<std::vector<long>>();
  if (j.contains("identity_samples"))
    c.identity.samples = j["identity_samples"].get<int>();
  if (j.contains("seed")) c.identity.seed = j["seed"].get<unsigned long>();
  if (j.contains("z_grid")) {
    c.z_grid.clear();
    for (const auto& z : j["z_grid"])
      c.z_grid.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
  }
  if (j.contains("n_set")) c.n_set = j["n_set"].get<std::vector<int>>();
  if (j.contains("pairs")) {
    c.pairs.clear();
    for (const auto& p : j["pairs"])
      c.pairs.emplace_back(p.at(0).get<long>(), p.at(1).get<long>());
  }
  if (j.contains("t_min")) c.t_min = j["t_min"].get<long>();
  if (j.contains("t_max")) c.t_max = j["t_max"].get<long>();
  if (j.contains("output_dir"))
    c.output_dir = j["output_dir"].get<std::string>();
  if (j.contains("formats"))
    c.formats = j["formats"].get<std::vector<std::string>>();
  c.validate();
  return c;
}

AuditConfig AuditConfig::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config: cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  try {
    return from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

RunOutput run_audit(const AuditConfig& config) {
  config.validate();
  RunOutput out;
  out.anchors_ok =
      claims::check_reference_anchors(config.precision, &out.anchor_detail);
  if (!out.anchors_ok) return out;
  append_identity_rows(config, out.rows);
  append_closed_form_rows(config, out.rows);
  append_zero_rows(config, out.rows);
  append_nonuniqueness_rows(config, out.rows);
  return out;
}

void write_report(const AuditConfig& config, const RunOutput& out) {
  const fs::path dir = config.output_dir;
  fs::create_directories(dir);

  std::vector<std::string> files;
  for (const auto& format : config.formats) {
    const fs::path path = dir / ("verdicts." + format);
    if (format == "json") write_json(path, out);
    else if (format == "csv") write_csv(path, out);
    else write_md(path, out);
    files.push_back(path.filename().string());
  }

  json manifest;
  manifest["artifact_version"] = kVersion;
  {
    char digest[20];
    std::snprintf(digest, sizeof(digest), "%016llx",
                  static_cast<unsigned long long>(
                      fnv1a64(config.to_json().dump())));
    manifest["config_digest"] = digest;
  }
  const auto now = std::chrono::system_clock::now();
  manifest["timestamp_unix_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          now.time_since_epoch())
          .count();
  manifest["anchors_ok"] = out.anchors_ok;
  manifest["anchor_detail"] = out.anchor_detail;
  manifest["files"] = files;
  manifest["index"] = json::array();
  for (size_t i = 0; i < out.rows.size(); ++i)
    manifest["index"].push_back(
        json{{"row", i}, {"claim_id", out.rows[i].claim_id}});
  std::ofstream mf(dir / "manifest.json", std::ios::binary);
  mf << manifest.dump(1) << '\n';
}

int run_full_report(const AuditConfig& config, std::ostream& log) {
  const RunOutput out = run_audit(config);
  write_report(config, out);
  if (!out.anchors_ok) {
    log << "reference anchors FAILED: " << out.anchor_detail
        << " -- audit aborted\n";
    return 3;
  }
  size_t confirmed = 0, refuted = 0, degenerate = 0, inconclusive = 0;
  for (const auto& row : out.rows) {
    if (row.classification == "CONFIRMED") ++confirmed;
    else if (row.classification == "REFUTED") ++refuted;
    else if (row.classification == "DEGENERATE") ++degenerate;
    else ++inconclusive;
  }
  log << "audit complete: " << out.rows.size() << " verdicts ("
      << confirmed << " confirmed, " << refuted << " refuted, " << degenerate
      << " degenerate, " << inconclusive << " inconclusive) -> "
      << config.output_dir << "\n";
  return 0;
}

}  // namespace zetalab::report
