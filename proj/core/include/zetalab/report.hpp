#ifndef ZETALAB_REPORT_HPP
#define ZETALAB_REPORT_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>
#include <zetalab/claims.hpp>
#include <zetalab/common.hpp>
#include <zetalab/reference_functions.hpp>

namespace zetalab::report {

using json = nlohmann::ordered_json;

/// Config file parse failure; message carries the parser's position info.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IdentityGrid {
  std::vector<int> n_values{3, 4, 5, 6};
  std::vector<long> k_values{1, 2, 5, 10, 20, 40};
  int samples = 25;             // random (a, d) draws per (n, k)
  unsigned long seed = 20260823;
};

/// Flat, JSON-backed audit configuration. Round-trips losslessly through
/// its file representation.
struct AuditConfig {
  ref::PrecisionPolicy precision;
  IdentityGrid identity;
  std::vector<cplx> z_grid{{3, 0}, {2, 0}, {1.5, 0}, {2, 1},
                           {3, -2}, {-1, 0}, {-0.5, 0}, {-2, 0}};
  std::vector<int> n_set{3, 4};
  std::vector<std::pair<long, long>> pairs{{2, 3}, {2, 5}, {3, 4}};
  long t_min = -8;
  long t_max = 8;
  std::string output_dir = "report_out";
  std::vector<std::string> formats{"json", "csv", "md"};

  void validate() const;
  json to_json() const;
  static AuditConfig from_json(const json& j);
  static AuditConfig load(const std::string& path);  // throws ConfigError
};

/// One completed audit row; the schema shared by all output formats.
struct VerdictRow {
  std::string claim_id;
  json inputs;  // flat object of the claim's input parameters
  cplx claimed{};
  cplx reference{};
  double abs_residual = 0.0;
  std::string classification;
  std::string notes;
};

struct RunOutput {
  bool anchors_ok = false;
  std::string anchor_detail;
  std::vector<VerdictRow> rows;
};

/// Decimal with 17 significant digits; round-trips any double.
std::string fmt17(double x);

/// Runs every grid in the config (anchors first) without touching the
/// filesystem. Row order is fixed by the config, so output is
/// deterministic. When the anchors fail, rows are left empty.
RunOutput run_audit(const AuditConfig& config);

/// Writes verdicts.{json,csv,md} (per requested formats) and manifest.json
/// into config.output_dir. Timestamps appear only in the manifest.
void write_report(const AuditConfig& config, const RunOutput& out);

/// run_audit + write_report; returns 0 on completion, 3 when the reference
/// anchors fail (audit aborted, manifest still written).
int run_full_report(const AuditConfig& config, std::ostream& log);

}  // namespace zetalab::report

#endif
