#ifndef SPRD_CAMPAIGN_HPP
#define SPRD_CAMPAIGN_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sprd/checks.hpp"
#include "sprd/ensemble.hpp"
#include "sprd/io.hpp"

namespace sprd {

inline constexpr const char* kToolVersion = "1.0.0";

struct CampaignConfig {
  std::vector<std::string> checks;  // empty = all registered asserting checks
  int trials = 1000;
  Eigen::Index dim_lo = 2;
  Eigen::Index dim_hi = 12;
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerance_overrides;  // absolute, on min margin
  std::string output_path;
  int jobs = 0;  // 0 = hardware concurrency

  void validate() const {
    if (trials < 0) throw invalid_input("campaign: trials must be >= 0");
    if (dim_lo < 1 || dim_hi > 64 || dim_lo > dim_hi)
      throw invalid_input("campaign: dims must lie within [1, 64]");
  }
};

inline CampaignConfig campaign_config_from_json(const Json& j) {
  CampaignConfig c;
  if (j.contains("checks")) c.checks = j.at("checks").get<std::vector<std::string>>();
  if (j.contains("trials")) c.trials = j.at("trials").get<int>();
  if (j.contains("dims")) {
    c.dim_lo = j.at("dims").at(0).get<Eigen::Index>();
    c.dim_hi = j.at("dims").at(1).get<Eigen::Index>();
  }
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("tolerance_overrides"))
    c.tolerance_overrides =
        j.at("tolerance_overrides").get<std::map<std::string, double>>();
  if (j.contains("output")) c.output_path = j.at("output").get<std::string>();
  if (j.contains("jobs")) c.jobs = j.at("jobs").get<int>();
  c.validate();
  return c;
}

inline Json campaign_config_to_json(const CampaignConfig& c) {
  Json j;
  j["checks"] = c.checks;
  j["trials"] = c.trials;
  j["dims"] = {c.dim_lo, c.dim_hi};
  j["seed"] = c.seed;
  j["tolerance_overrides"] = c.tolerance_overrides;
  j["jobs"] = c.jobs;
  return j;
}

struct TrialResult {
  bool pass = true;
  double min_margin = 0.0;
};

/// One registered check: a per-trial body that generates its own instance
/// from the trial's stream. `probe` checks report margins but never fail.
struct RegisteredCheck {
  std::string name;
  bool probe = false;
  std::function<TrialResult(StreamRng&, Eigen::Index)> run;
};

namespace detail {

inline TrialResult from_outcome(const CheckOutcome& out) {
  return TrialResult{out.all_reports_pass(), out.min_margin()};
}

inline Eigen::Index split_point(StreamRng& rng, Eigen::Index n) {
  return n < 2 ? 1 : rng.next_int(1, n - 1);
}

inline BlockHermitian random_blocks(StreamRng& rng, Eigen::Index n) {
  const Eigen::Index m = std::max<Eigen::Index>(2, n);
  return BlockHermitian::split(gen_hermitian(rng, m), split_point(rng, m));
}

inline Hermitian bounded_rotation_generator(StreamRng& rng, Eigen::Index n) {
  Hermitian x = gen_hermitian(rng, n);
  const Spectrum lam = eigenvalues(x);
  const double top = std::max(std::abs(lam[0]), std::abs(lam[n - 1]));
  // Keep ||X|| below pi/2 to stay away from angle wrap-around and the
  // pi/2 direct-rotation degeneracy.
  const double target = 0.45 * std::numbers::pi * rng.next_uniform();
  return top > 0.0 ? (target / top) * x : x;
}

}  // namespace detail

inline std::vector<RegisteredCheck> check_registry() {
  using detail::from_outcome;
  std::vector<RegisteredCheck> reg;

  reg.push_back({"key_inequality", false, [](StreamRng& rng, Eigen::Index n) {
    return from_outcome(key_inequality_check(detail::random_blocks(rng, n)));
  }});
  reg.push_back({"antidiagonal", false, [](StreamRng& rng, Eigen::Index n) {
    return from_outcome(antidiagonal_check(detail::random_blocks(rng, n)));
  }});
  reg.push_back({"difference", false, [](StreamRng& rng, Eigen::Index n) {
    return from_outcome(
        difference_check(gen_hermitian(rng, n), gen_hermitian(rng, n)));
  }});
  reg.push_back({"commutator", false, [](StreamRng& rng, Eigen::Index n) {
    return from_outcome(commutator_check(gen_hermitian(rng, n),
                                         gen_hermitian(rng, n),
                                         gen_complex_gaussian(rng, n, n)));
  }});
  reg.push_back({"unitary_conjugate", false, [](StreamRng& rng, Eigen::Index n) {
    return from_outcome(
        unitary_conjugate_check(gen_hermitian(rng, n), gen_hermitian(rng, n)));
  }});
  reg.push_back({"weak_square", false, [](StreamRng& rng, Eigen::Index n) {
    const Eigen::Index k = std::max<Eigen::Index>(1, n / 2);
    return from_outcome(weak_square_check(
        BlockHermitian(gen_hermitian(rng, k), gen_hermitian(rng, k),
                       gen_complex_gaussian(rng, k, k))));
  }});
  reg.push_back({"angle_spread", false, [](StreamRng& rng, Eigen::Index n) {
    const Eigen::Index m = std::max<Eigen::Index>(2, n);
    const Eigen::Index k = rng.next_int(1, m - 1);
    const Isometry s = gen_isometry(rng, m, k);
    const Hermitian x = detail::bounded_rotation_generator(rng, m);
    TrialResult r;
    const MajorizationReport rep = angle_spread_check(s, x);
    r.pass = rep.verdict;
    r.min_margin = rep.min_margin();
    return r;
  }});
  reg.push_back({"rotation_bound", false, [](StreamRng& rng, Eigen::Index n) {
    const Eigen::Index m = std::max<Eigen::Index>(2, n);
    const Eigen::Index k = rng.next_int(1, m - 1);
    const Isometry s = gen_isometry(rng, m, k);
    const Hermitian x = detail::bounded_rotation_generator(rng, m);
    const RotationBoundResult res = rotation_bound_check(s, x);
    TrialResult r;
    r.pass = res.z_vs_half_spread.verdict && res.half_spread_vs_sx.verdict;
    r.min_margin = std::min(res.z_vs_half_spread.min_margin(),
                            res.half_spread_vs_sx.min_margin());
    return r;
  }});
  reg.push_back({"lidskii_spread", false, [](StreamRng& rng, Eigen::Index n) {
    const LidskiiSpreadResult res =
        lidskii_spread_check(gen_hermitian(rng, n), gen_hermitian(rng, n));
    return TrialResult{res.lower.verdict && res.upper.verdict,
                       std::min(res.lower.min_margin(), res.upper.min_margin())};
  }});
  reg.push_back({"centered_singular", false, [](StreamRng& rng, Eigen::Index n) {
    const Eigen::Index m = std::max<Eigen::Index>(2, n);
    const MajorizationReport rep = centered_singular_check(gen_hermitian(rng, m));
    return TrialResult{rep.verdict, rep.min_margin()};
  }});
  reg.push_back({"half_spread_vs_singular", false,
                 [](StreamRng& rng, Eigen::Index n) {
    const HalfSpreadChain res =
        half_spread_vs_singular_check(gen_hermitian(rng, std::max<Eigen::Index>(2, n)));
    const bool pass = res.half_vs_s.verdict && res.chain_center_k1.verdict &&
                      res.chain_upper_k1.verdict;
    const double m =
        std::min({res.half_vs_s.min_margin(), res.chain_center_k1.min_margin(),
                  res.chain_upper_k1.min_margin()});
    return TrialResult{pass, m};
  }});
  reg.push_back({"compression", false, [](StreamRng& rng, Eigen::Index n) {
    const Hermitian a = gen_hermitian(rng, n);
    const Eigen::Index r = rng.next_int(1, n);
    const CompressionResult res = compression_check(a, gen_isometry(rng, n, r).cols());
    return TrialResult{res.submaj.verdict && res.entrywise,
                       res.submaj.min_margin()};
  }});
  reg.push_back({"classical", false, [](StreamRng& rng, Eigen::Index n) {
    const auto reports =
        classical_checks(gen_hermitian(rng, n), gen_hermitian(rng, n));
    TrialResult r;
    bool first = true;
    for (const auto& [name, rep] : reports) {
      r.pass = r.pass && rep.verdict;
      const double m = rep.min_margin();
      if (first || m < r.min_margin) r.min_margin = m;
      first = false;
    }
    return r;
  }});
  reg.push_back({"equivalence", false, [](StreamRng& rng, Eigen::Index n) {
    return from_outcome(equivalence_crosscheck_instance(rng, std::max<Eigen::Index>(2, n / 2)));
  }});
  reg.push_back({"ritz_probe", true, [](StreamRng& rng, Eigen::Index n) {
    const Hermitian a = gen_hermitian(rng, n);
    const Eigen::Index k = n < 2 ? 1 : rng.next_int(1, n - 1);
    const Isometry s = gen_isometry(rng, n, k);
    const Isometry t = gen_isometry(rng, n, k);
    const CheckOutcome out = ritz_conjecture_probe(a, s, t);
    const auto& rep = out.reports.at("ritz_probe");
    return TrialResult{rep.verdict, rep.min_margin()};
  }});
  return reg;
}

inline std::vector<std::string> default_check_names() {
  std::vector<std::string> names;
  for (const auto& c : check_registry())
    if (!c.probe) names.push_back(c.name);
  return names;
}

struct CheckSummary {
  std::string name;
  bool probe = false;
  int trials = 0;
  int failures = 0;
  double min_margin = 0.0;
  int worst_trial = -1;   // trial attaining min_margin
  int first_failure = -1; // -1 when none
};

struct ReportDocument {
  std::string tool_version = kToolVersion;
  CampaignConfig config;
  std::vector<CheckSummary> summaries;
  double wall_time_ms = 0.0;

  bool all_passed() const {
    for (const auto& s : summaries)
      if (!s.probe && s.failures > 0) return false;
    return true;
  }

  Json to_json() const {
    Json j;
    j["schema"] = 1;
    j["tool_version"] = tool_version;
    j["config"] = campaign_config_to_json(config);
    Json checks = Json::array();
    for (const auto& s : summaries) {
      Json c;
      c["check"] = s.name;
      c["probe"] = s.probe;
      c["trials"] = s.trials;
      c["failures"] = s.failures;
      c["min_margin"] = s.min_margin;
      c["worst_instance"] = {{"seed", config.seed}, {"trial", s.worst_trial}};
      c["first_failure_trial"] = s.first_failure;
      checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    j["passed"] = all_passed();
    j["wall_time_ms"] = wall_time_ms;
    return j;
  }
};

namespace detail {

// Per-trial stream id; check index in the high bits so streams never collide.
inline std::uint64_t trial_stream(std::size_t check_idx, int trial) {
  return (static_cast<std::uint64_t>(check_idx + 1) << 32) |
         static_cast<std::uint64_t>(trial);
}

}  // namespace detail

/// Runs the campaign. Per-trial randomness is a pure function of
/// (seed, check, trial), so the result is independent of worker count.
inline ReportDocument run_campaign(const CampaignConfig& config) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<std::string> wanted =
      config.checks.empty() ? default_check_names() : config.checks;
  const auto registry = check_registry();

  ReportDocument doc;
  doc.config = config;
  doc.config.checks = wanted;

  int jobs = config.jobs > 0
                 ? config.jobs
                 : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  for (const auto& name : wanted) {
    const auto it =
        std::find_if(registry.begin(), registry.end(),
                     [&](const RegisteredCheck& c) { return c.name == name; });
    if (it == registry.end())
      throw invalid_input("unknown check: " + name);
    const std::size_t check_idx =
        static_cast<std::size_t>(it - registry.begin());

    std::vector<TrialResult> results(config.trials);
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (;;) {
        const int trial = next.fetch_add(1);
        if (trial >= config.trials) return;
        StreamRng rng(config.seed, detail::trial_stream(check_idx, trial));
        const Eigen::Index dim = rng.next_int(config.dim_lo, config.dim_hi);
        results[trial] = it->run(rng, dim);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(jobs, std::max(1, config.trials)); ++w)
      pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    CheckSummary sum;
    sum.name = name;
    sum.probe = it->probe;
    sum.trials = config.trials;
    const auto tol_it = config.tolerance_overrides.find(name);
    for (int trial = 0; trial < config.trials; ++trial) {
      const TrialResult& r = results[trial];
      const bool pass = tol_it != config.tolerance_overrides.end()
                            ? r.min_margin >= -tol_it->second
                            : r.pass;
      if (!pass) {
        ++sum.failures;
        if (sum.first_failure < 0) sum.first_failure = trial;
      }
      if (trial == 0 || r.min_margin < sum.min_margin) {
        sum.min_margin = r.min_margin;
        sum.worst_trial = trial;
      }
    }
    doc.summaries.push_back(std::move(sum));
  }

  doc.wall_time_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return doc;
}

}  // namespace sprd

#endif  // SPRD_CAMPAIGN_HPP
