#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kstab/families.hpp"
#include "kstab/futaki.hpp"
#include "kstab/volume_min.hpp"

namespace kstab {

struct AnalyzeOptions {
  Rational tol = Rational(1, 1000000000000LL);  // numeric solver tolerance
  bool run_checks = true;
  long oracle_cutoff = 30;
};

struct CheckResults {
  bool gorenstein_duality = false;
  bool numeric_leading = false;
  bool oracle_consistent = false;
};

/// Everything the pipeline establishes for one polarized cone: the
/// volume-minimizing normalized Reeb vector, the volume, the Futaki
/// invariant of every supplied degeneration, the verdict (scoped to that
/// list), and the link topology for the registered families.
struct AnalysisReport {
  std::string label;
  std::string family;  // "BP", "YY2", "YY3" or "custom"
  long p = 0, q = 0;
  unsigned n = 0;
  ReebVector xi_star;
  std::vector<Rational> xi_star_ambient;
  MinimizerKind minimizer_kind = MinimizerKind::ExactRational;
  Rational minimizer_residual;
  Rational vol;
  Stability stability = Stability::Stable;
  std::optional<std::size_t> witness;
  std::string coverage;
  std::vector<FutakiReport> futaki;
  long link_m = -1;  // -1 when unknown (custom input)
  bool checks_run = false;
  CheckResults checks;
  double elapsed_ms = 0.0;

  bool stable() const { return stability == Stability::Stable; }
};

/// Full pipeline on a registered family instance: slice, volume
/// minimization (exact for the rank-2 slice), normalization, both
/// registered Futaki invariants, verdict, topology, consistency checks.
AnalysisReport analyze(const FamilyInstance& instance,
                       const AnalyzeOptions& options = {});

/// Pipeline for a user-supplied variety with explicit degenerations. The
/// caller vouches for normality via assume_normal; the report records the
/// provenance.
AnalysisReport analyze_custom(const ConeVariety& variety,
                              const std::vector<std::vector<BigInt>>& degenerations,
                              bool assume_normal, const ReebVector& start_point,
                              const std::string& label,
                              const AnalyzeOptions& options = {});

struct SweepRow {
  long p = 0, q = 0;
  bool ok = false;
  std::string error;  // skip or failure reason when !ok
  bool expected_stable = false;  // closed-form regression column
  bool agrees = false;           // verdict matches the closed form
  AnalysisReport report;
};

/// Grid sweep over a family; instances run in a worker pool, failures are
/// recorded per row and do not stop the sweep, output is sorted by (p, q).
std::vector<SweepRow> sweep(Family family, long p_lo, long p_hi, long q_lo,
                            long q_hi, const AnalyzeOptions& options = {},
                            unsigned jobs = 0);

std::string to_json_string(const AnalysisReport& report);
AnalysisReport report_from_json_string(const std::string& text);
std::string to_text(const AnalysisReport& report);

std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string sweep_to_json(const std::vector<SweepRow>& rows);
std::string sweep_to_text(const std::vector<SweepRow>& rows);

bool reports_equal(const AnalysisReport& a, const AnalysisReport& b);

}  // namespace kstab
