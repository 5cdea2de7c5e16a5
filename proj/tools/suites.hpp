#pragma once

// Verification suites shared by the glr CLI and the acceptance driver.

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace glr::verify {

enum class Status { kPass, kFail, kError };
const char* to_string(Status status);

struct CheckReport {
  std::string check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Status status = Status::kPass;
  std::string detail;
  std::int64_t elapsed_ms = 0;

  [[nodiscard]] bool passed() const { return status == Status::kPass; }
  [[nodiscard]] nlohmann::ordered_json to_json() const;
  /// One human-readable line: "PASS check {params} detail".
  [[nodiscard]] std::string to_line() const;
};

struct SuiteOptions {
  int n = 2;
  long max_entry = 2;
  std::uint64_t seed = 1;
  /// Random group elements per invariance check.
  int group_samples = 5;
  /// Signatures sampled for intertwining checks once n >= 3.
  int signature_samples = 20;
  bool timing = false;
};

using Emit = std::function<void(const CheckReport&)>;

const std::vector<std::string>& suite_names();

/// Runs a named suite. Throws std::invalid_argument on an unknown name.
void run_suite(const std::string& name, const SuiteOptions& options, const Emit& emit);

// Building blocks, each emitting one or more reports at options.n.

/// Commutation relations on operators and on monomials, chain independence, E_1n = d/dz_1n.
void relation_checks(const SuiteOptions& options, const Emit& emit);
/// dim V_p = GT count, V_p stability under E_kl, branching sums.
void dimension_checks(const SuiteOptions& options, const Emit& emit);
/// Pluecker relations, R-lemma images, R nilpotence and the R R corollary.
void pluecker_checks(const SuiteOptions& options, const Emit& emit);
/// Kernel polynomials satisfy the Zhelobenko conditions for all (r, q) in the box.
void kernel_membership_checks(const SuiteOptions& options, const Emit& emit);
/// Corner intertwining, closed forms, family stability, weight relations, spot check.
void intertwiner_checks(const SuiteOptions& options, const Emit& emit);
/// rho_r(g) L = rho_q(g) L for seeded random g.
void kernel_invariance_checks(const SuiteOptions& options, const Emit& emit);
/// Gauss roundtrip, cocycle chain identity, infinitesimal consistency.
void gauss_checks(const SuiteOptions& options, const Emit& emit);

}  // namespace glr::verify
