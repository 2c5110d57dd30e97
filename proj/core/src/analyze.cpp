#include "kstab/analyze.hpp"

#include <atomic>
#include <chrono>
#include <future>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "kstab/index_character.hpp"
#include "kstab/lattice.hpp"

namespace kstab {

namespace {

using Clock = std::chrono::steady_clock;

bool oracle_check(const ConeVariety& v, const ReebVector& xi_int, long max_cutoff) {
  const auto weights = coordinate_weights(v, xi_int);
  // Shrink the cutoff until the lattice enumeration stays comfortably small.
  long cutoff = max_cutoff;
  while (cutoff > 0) {
    Rational points(1);
    for (const Rational& a : weights) points *= Rational(cutoff) / a + 1;
    if (points <= 8000) break;
    --cutoff;
  }
  const auto brute = hilbert_count_bruteforce(v, xi_int, cutoff);
  const auto series = index_character_partial_sums(v, xi_int, cutoff);
  return brute == series;
}

AnalysisReport analyze_core(const ConeVariety& variety,
                            const std::vector<TestConfiguration>& tcs,
                            const ReebVector& start_point,
                            const std::string& label, const std::string& family,
                            long p, long q, long link_m,
                            const AnalyzeOptions& options) {
  const auto t0 = Clock::now();
  AnalysisReport report;
  report.label = label;
  report.family = family;
  report.p = p;
  report.q = q;
  report.n = variety.n;
  report.link_m = link_m;

  const SlicePolytope slice = build_slice(variety, start_point);
  const Minimizer minimizer =
      slice.dim() == 1 ? minimize_volume_exact_1d(variety, slice)
                       : minimize_volume_numeric(variety, slice, options.tol);
  report.minimizer_kind = minimizer.kind;
  report.minimizer_residual = minimizer.residual_bound;
  report.vol = minimizer.volume;
  // Points of the slice are normalized by construction; this recovers the
  // exact certificate (the scale factor is 1).
  const NormalizedReeb nr = normalize_reeb(variety, minimizer.xi_star);
  report.xi_star = nr.xi;
  report.xi_star_ambient = coordinate_weights(variety, nr.xi);

  const Verdict verdict = k_stability_verdict(variety, nr, tcs, slice.tangent);
  report.stability = verdict.stability;
  report.witness = verdict.witness;
  report.coverage = verdict.coverage;
  report.futaki = verdict.reports;

  if (options.run_checks) {
    report.checks_run = true;
    report.checks.gorenstein_duality = gorenstein_duality_check(variety, nr.xi, 5);
    report.checks.numeric_leading = numeric_leading_check(
        variety, nr.xi, BigFloat(1) / 1000, BigFloat(1) / 100);
    const auto primitive = primitive_vector(start_point);
    ReebVector xi_int(primitive.size());
    for (std::size_t i = 0; i < primitive.size(); ++i)
      xi_int[i] = Rational(primitive[i]);
    report.checks.oracle_consistent =
        oracle_check(variety, xi_int, options.oracle_cutoff);
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return report;
}

}  // namespace

AnalysisReport analyze(const FamilyInstance& instance,
                       const AnalyzeOptions& options) {
  return analyze_core(instance.variety, instance.registered_tcs,
                      instance.inner_point, instance.label(),
                      to_string(instance.family), instance.p, instance.q,
                      link_topology(instance.family, instance.p, instance.q),
                      options);
}

AnalysisReport analyze_custom(const ConeVariety& variety,
                              const std::vector<std::vector<BigInt>>& degenerations,
                              bool assume_normal, const ReebVector& start_point,
                              const std::string& label,
                              const AnalyzeOptions& options) {
  if (!reeb_cone_contains(variety, start_point))
    throw PreconditionError(
        "the supplied starting point is not in the open Reeb cone");
  std::vector<TestConfiguration> tcs;
  for (std::size_t k = 0; k < degenerations.size(); ++k) {
    std::ostringstream name;
    name << "tc" << (k + 1);
    tcs.push_back(make_test_configuration(
        variety, degenerations[k],
        assume_normal ? Normality::Asserted : Normality::Unchecked, name.str()));
  }
  return analyze_core(variety, tcs, start_point, label, "custom", 0, 0, -1,
                      options);
}

std::vector<SweepRow> sweep(Family family, long p_lo, long p_hi, long q_lo,
                            long q_hi, const AnalyzeOptions& options,
                            unsigned jobs) {
  if (p_lo > p_hi || q_lo > q_hi)
    throw PreconditionError("empty sweep range");
  std::vector<std::pair<long, long>> grid;
  for (long p = p_lo; p <= p_hi; ++p)
    for (long q = q_lo; q <= q_hi; ++q) grid.emplace_back(p, q);
  std::vector<SweepRow> rows(grid.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(grid.size()));

  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= grid.size()) return;
      SweepRow& row = rows[i];
      row.p = grid[i].first;
      row.q = grid[i].second;
      try {
        const FamilyInstance instance = make_family(family, row.p, row.q);
        row.report = analyze(instance, options);
        row.expected_stable = instance.expected.stable();
        row.agrees = (row.report.stable() == row.expected_stable);
        row.ok = true;
      } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
      }
    }
  };
  std::vector<std::future<void>> pool;
  for (unsigned j = 0; j + 1 < jobs; ++j)
    pool.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : pool) f.get();
  return rows;  // grid order is already sorted by (p, q)
}

namespace {

nlohmann::json rational_list(const std::vector<Rational>& xs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : xs) arr.push_back(to_string(x));
  return arr;
}

std::vector<Rational> parse_rational_list(const nlohmann::json& arr) {
  std::vector<Rational> out;
  for (const auto& x : arr) out.push_back(parse_rational(x.get<std::string>()));
  return out;
}

std::string sign_name(SignClass s) {
  switch (s) {
    case SignClass::Positive: return "positive";
    case SignClass::Zero: return "zero";
    case SignClass::Negative: return "negative";
  }
  return "?";
}

SignClass sign_from_name(const std::string& s) {
  if (s == "positive") return SignClass::Positive;
  if (s == "zero") return SignClass::Zero;
  if (s == "negative") return SignClass::Negative;
  throw PreconditionError("bad sign class '" + s + "'");
}

Normality normality_from_name(const std::string& s) {
  if (s == "known-family") return Normality::KnownFamily;
  if (s == "asserted") return Normality::Asserted;
  if (s == "unchecked") return Normality::Unchecked;
  throw PreconditionError("bad normality '" + s + "'");
}

Stability stability_from_name(const std::string& s) {
  if (s == "Stable") return Stability::Stable;
  if (s == "Unstable") return Stability::Unstable;
  if (s == "MarginallyDestabilized") return Stability::MarginallyDestabilized;
  throw PreconditionError("bad stability '" + s + "'");
}

nlohmann::json report_to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["label"] = r.label;
  j["family"] = r.family;
  j["p"] = r.p;
  j["q"] = r.q;
  j["n"] = r.n;
  j["xi_star"] = rational_list(r.xi_star);
  j["xi_star_ambient"] = rational_list(r.xi_star_ambient);
  j["minimizer_kind"] =
      r.minimizer_kind == MinimizerKind::ExactRational ? "exact" : "numeric";
  j["minimizer_residual"] = to_string(r.minimizer_residual);
  j["volume"] = to_string(r.vol);
  j["volume_decimal"] = to_decimal_string(r.vol, 12);
  j["stability"] = to_string(r.stability);
  if (r.witness) j["witness"] = *r.witness;
  j["coverage"] = r.coverage;
  nlohmann::json futs = nlohmann::json::array();
  for (const auto& f : r.futaki) {
    nlohmann::json jf;
    jf["name"] = f.name;
    jf["fut"] = to_string(f.fut);
    jf["fut_via_volume"] = to_string(f.fut_via_volume);
    jf["fut_decimal"] = to_decimal_string(f.fut, 12);
    jf["a0_central_fiber"] = to_string(f.a0_central_fiber);
    jf["a1_central_fiber"] = to_string(f.a1_central_fiber);
    jf["w_normalized"] = rational_list(f.w_normalized);
    jf["sign"] = sign_name(f.verdict_contribution);
    jf["normality"] = to_string(f.normality);
    jf["is_product"] = f.is_product;
    futs.push_back(std::move(jf));
  }
  j["futaki"] = std::move(futs);
  j["link_m"] = r.link_m;
  j["checks_run"] = r.checks_run;
  if (r.checks_run) {
    j["checks"] = {{"gorenstein_duality", r.checks.gorenstein_duality},
                   {"numeric_leading", r.checks.numeric_leading},
                   {"oracle_consistent", r.checks.oracle_consistent}};
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

AnalysisReport report_from_json(const nlohmann::json& j) {
  AnalysisReport r;
  r.label = j.at("label").get<std::string>();
  r.family = j.at("family").get<std::string>();
  r.p = j.at("p").get<long>();
  r.q = j.at("q").get<long>();
  r.n = j.at("n").get<unsigned>();
  r.xi_star = parse_rational_list(j.at("xi_star"));
  r.xi_star_ambient = parse_rational_list(j.at("xi_star_ambient"));
  r.minimizer_kind = j.at("minimizer_kind").get<std::string>() == "exact"
                         ? MinimizerKind::ExactRational
                         : MinimizerKind::Numeric;
  r.minimizer_residual = parse_rational(j.at("minimizer_residual").get<std::string>());
  r.vol = parse_rational(j.at("volume").get<std::string>());
  r.stability = stability_from_name(j.at("stability").get<std::string>());
  if (j.contains("witness")) r.witness = j.at("witness").get<std::size_t>();
  r.coverage = j.at("coverage").get<std::string>();
  for (const auto& jf : j.at("futaki")) {
    FutakiReport f;
    f.name = jf.at("name").get<std::string>();
    f.fut = parse_rational(jf.at("fut").get<std::string>());
    f.fut_via_volume = parse_rational(jf.at("fut_via_volume").get<std::string>());
    f.a0_central_fiber = parse_rational(jf.at("a0_central_fiber").get<std::string>());
    f.a1_central_fiber = parse_rational(jf.at("a1_central_fiber").get<std::string>());
    f.w_normalized = parse_rational_list(jf.at("w_normalized"));
    f.verdict_contribution = sign_from_name(jf.at("sign").get<std::string>());
    f.normality = normality_from_name(jf.at("normality").get<std::string>());
    f.is_product = jf.at("is_product").get<bool>();
    r.futaki.push_back(std::move(f));
  }
  r.link_m = j.at("link_m").get<long>();
  r.checks_run = j.at("checks_run").get<bool>();
  if (r.checks_run) {
    r.checks.gorenstein_duality = j.at("checks").at("gorenstein_duality").get<bool>();
    r.checks.numeric_leading = j.at("checks").at("numeric_leading").get<bool>();
    r.checks.oracle_consistent = j.at("checks").at("oracle_consistent").get<bool>();
  }
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

}  // namespace

std::string to_json_string(const AnalysisReport& report) {
  return report_to_json(report).dump(2);
}

AnalysisReport report_from_json_string(const std::string& text) {
  return report_from_json(nlohmann::json::parse(text));
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << r.label << "  (n = " << r.n << ")\n";
  os << "  minimizer (" << (r.minimizer_kind == MinimizerKind::ExactRational
                                ? "exact"
                                : "numeric")
     << "): xi* = [";
  for (std::size_t i = 0; i < r.xi_star.size(); ++i)
    os << (i ? ", " : "") << to_string(r.xi_star[i]);
  os << "]  ambient weights [";
  for (std::size_t i = 0; i < r.xi_star_ambient.size(); ++i)
    os << (i ? ", " : "") << to_string(r.xi_star_ambient[i]);
  os << "]\n";
  os << "  volume a0(xi*) = " << to_string(r.vol) << " = "
     << to_decimal_string(r.vol, 12) << "\n";
  for (const auto& f : r.futaki) {
    os << "  Fut(" << (f.name.empty() ? "tc" : f.name) << ") = "
       << to_string(f.fut) << " = " << to_decimal_string(f.fut, 12) << " ["
       << sign_name(f.verdict_contribution) << ", normality "
       << to_string(f.normality) << (f.is_product ? ", product" : "") << "]\n";
  }
  os << "  verdict: " << to_string(r.stability);
  if (r.witness && *r.witness < r.futaki.size())
    os << " (witness " << r.futaki[*r.witness].name << ")";
  os << "\n  " << r.coverage << "\n";
  if (r.link_m >= 0) {
    os << "  link: ";
    if (r.link_m == 0)
      os << "S^5";
    else
      os << "#" << r.link_m << "(S^2 x S^3)";
    os << "\n";
  }
  if (r.checks_run) {
    os << "  checks: duality " << (r.checks.gorenstein_duality ? "ok" : "FAIL")
       << ", numeric a0 " << (r.checks.numeric_leading ? "ok" : "FAIL")
       << ", Hilbert oracle " << (r.checks.oracle_consistent ? "ok" : "FAIL")
       << "\n";
  }
  os << "  elapsed: " << r.elapsed_ms << " ms\n";
  return os.str();
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "family,p,q,status,verdict,stable,expected_stable,agrees,fut_1,fut_2,"
        "volume,volume_decimal,link_m,error\n";
  for (const auto& row : rows) {
    if (!row.ok) {
      os << "?," << row.p << "," << row.q << ",error,,,,,,,,,,\"" << row.error
         << "\"\n";
      continue;
    }
    const auto& r = row.report;
    os << r.family << "," << r.p << "," << r.q << ",ok," << to_string(r.stability)
       << "," << (r.stable() ? 1 : 0) << "," << (row.expected_stable ? 1 : 0)
       << "," << (row.agrees ? 1 : 0) << ","
       << (r.futaki.size() > 0 ? to_string(r.futaki[0].fut) : "") << ","
       << (r.futaki.size() > 1 ? to_string(r.futaki[1].fut) : "") << ","
       << to_string(r.vol) << "," << to_decimal_string(r.vol, 12) << ","
       << r.link_m << ",\n";
  }
  return os.str();
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json j;
    j["p"] = row.p;
    j["q"] = row.q;
    j["ok"] = row.ok;
    if (!row.ok) {
      j["error"] = row.error;
    } else {
      j["expected_stable"] = row.expected_stable;
      j["agrees"] = row.agrees;
      j["report"] = nlohmann::json::parse(to_json_string(row.report));
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::string sweep_to_text(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    if (!row.ok) {
      os << "(" << row.p << "," << row.q << ")  skipped: " << row.error << "\n";
      continue;
    }
    const auto& r = row.report;
    os << r.label << "  " << to_string(r.stability) << "  vol "
       << to_decimal_string(r.vol, 9) << "  link m=" << r.link_m
       << (row.agrees ? "" : "  [DISAGREES WITH CLOSED FORM]") << "\n";
  }
  return os.str();
}

bool reports_equal(const AnalysisReport& a, const AnalysisReport& b) {
  const auto futaki_equal = [](const FutakiReport& x, const FutakiReport& y) {
    return x.fut == y.fut && x.fut_via_volume == y.fut_via_volume &&
           x.a0_central_fiber == y.a0_central_fiber &&
           x.a1_central_fiber == y.a1_central_fiber &&
           x.w_normalized == y.w_normalized &&
           x.verdict_contribution == y.verdict_contribution &&
           x.normality == y.normality && x.is_product == y.is_product &&
           x.name == y.name;
  };
  if (!(a.label == b.label && a.family == b.family && a.p == b.p && a.q == b.q &&
        a.n == b.n && a.xi_star == b.xi_star &&
        a.xi_star_ambient == b.xi_star_ambient &&
        a.minimizer_kind == b.minimizer_kind &&
        a.minimizer_residual == b.minimizer_residual && a.vol == b.vol &&
        a.stability == b.stability && a.witness == b.witness &&
        a.coverage == b.coverage && a.link_m == b.link_m &&
        a.checks_run == b.checks_run && a.elapsed_ms == b.elapsed_ms))
    return false;
  if (a.checks_run &&
      !(a.checks.gorenstein_duality == b.checks.gorenstein_duality &&
        a.checks.numeric_leading == b.checks.numeric_leading &&
        a.checks.oracle_consistent == b.checks.oracle_consistent))
    return false;
  if (a.futaki.size() != b.futaki.size()) return false;
  for (std::size_t i = 0; i < a.futaki.size(); ++i)
    if (!futaki_equal(a.futaki[i], b.futaki[i])) return false;
  return true;
}

}  // namespace kstab
