// glr: construct and verify the GL(n+1) -> GL(n) restriction objects from the shell.
//
// Exit codes: 0 all checks pass, 1 some check fails, 2 usage or input error.

#include "suites.hpp"

#include "glrestrict/kernel.hpp"
#include "glrestrict/rep_space.hpp"
#include "glrestrict/signature.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

glr::Signature parse_signature(const std::string& flag, const std::string& text) {
  try {
    return glr::Signature::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

void check_size(const std::optional<int>& n, std::size_t size, const std::string& what) {
  if (n && static_cast<std::size_t>(*n) != size) {
    throw UsageError(what + " has " + std::to_string(size) + " entries but --n is " + std::to_string(*n));
  }
}

int cmd_basis(const std::optional<int>& n_flag, const std::string& p_text, const std::optional<int>& bound, bool as_json) {
  const glr::Signature p = parse_signature("--p", p_text);
  check_size(n_flag, p.size(), "--p");
  const int n = static_cast<int>(p.size());
  const std::uint64_t expected = glr::count_gt_patterns(p);

  glr::RepSpace space;
  try {
    space = glr::build_rep_space(n, p, bound);
  } catch (const std::runtime_error& e) {
    std::cerr << "glr: " << e.what() << "\n";
    return kExitFail;
  }
  const bool ok = space.dimension() == expected;
  if (as_json) {
    json out;
    out["n"] = n;
    out["p"] = p.entries();
    out["dimension"] = space.dimension();
    out["gt_count"] = expected;
    out["basis"] = json::array();
    for (const auto& f : space.basis) out["basis"].push_back(f.to_string());
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& f : space.basis) std::cout << f.to_string() << "\n";
    std::cout << "dim V" << p.to_string() << " = " << space.dimension() << " (GT count " << expected << ")\n";
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_branch(const std::optional<int>& n_flag, const std::string& r_text, bool as_json) {
  const glr::Signature r = parse_signature("--r", r_text);
  if (r.size() < 2) throw UsageError("--r needs at least two entries");
  check_size(n_flag ? std::optional<int>(*n_flag + 1) : std::nullopt, r.size(), "--r (size n+1)");
  const int n = static_cast<int>(r.size()) - 1;

  json rows = json::array();
  std::uint64_t total = 0;
  for (const auto& q : glr::enumerate_interlacing(r)) {
    std::size_t dim = 0;
    try {
      dim = glr::build_rep_space(n, q).dimension();
    } catch (const std::runtime_error& e) {
      std::cerr << "glr: " << e.what() << "\n";
      return kExitFail;
    }
    total += dim;
    rows.push_back({{"q", q.entries()}, {"dim", dim}});
    if (!as_json) std::cout << q.to_string() << "  dim " << dim << "\n";
  }
  const std::uint64_t expected = glr::count_gt_patterns(r);
  if (as_json) {
    json out;
    out["r"] = r.entries();
    out["components"] = rows;
    out["sum"] = total;
    out["dim_r"] = expected;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "sum " << total << " = dim V" << r.to_string() << " " << expected << "\n";
  }
  return total == expected ? kExitPass : kExitFail;
}

int cmd_kernel(const std::string& r_text, const std::string& q_text, bool as_json) {
  const glr::Signature r = parse_signature("--r", r_text);
  const glr::Signature q = parse_signature("--q", q_text);
  std::optional<glr::KernelParams> params;
  try {
    params.emplace(r, q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const glr::KernelPoly kernel = glr::build_kernel(*params);
  const bool ok = glr::check_zhelobenko_membership(kernel);
  if (as_json) {
    json out;
    out["r"] = r.entries();
    out["q"] = q.entries();
    out["phi_exponents"] = params->phi_exponents();
    out["psi_exponents"] = params->psi_exponents();
    out["kernel"] = kernel.value.to_string();
    out["zhelobenko"] = ok;
    std::cout << out.dump() << "\n";
  } else {
    auto list = [](const std::vector<long>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return "(" + s + ")";
    };
    std::cout << kernel.value.to_string() << "\n";
    std::cout << "phi exponents " << list(params->phi_exponents()) << "  psi exponents " << list(params->psi_exponents())
              << "\n";
    std::cout << "zhelobenko " << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_verify(const std::string& suite, const glr::verify::SuiteOptions& options, bool as_json) {
  std::size_t total = 0;
  std::size_t bad = 0;
  glr::verify::run_suite(suite, options, [&](const glr::verify::CheckReport& report) {
    ++total;
    if (!report.passed()) ++bad;
    std::cout << (as_json ? report.to_json().dump() : report.to_line()) << std::endl;
  });
  if (!as_json) std::cout << total - bad << "/" << total << " checks passed\n";
  return bad == 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for GL(n+1) -> GL(n) restriction kernels and overalgebra operators"};
  app.require_subcommand(1);

  bool as_json = false;
  std::optional<int> n_flag;
  std::string p_text;
  std::string r_text;
  std::string q_text;
  std::optional<int> degree_bound;
  std::string suite = "all";
  glr::verify::SuiteOptions options;

  auto* basis = app.add_subcommand("basis", "basis of V_p from the Zhelobenko conditions");
  basis->add_option("--n", n_flag, "rank n")->check(CLI::Range(1, 8));
  basis->add_option("--p", p_text, "signature, e.g. 2,1,0")->required();
  basis->add_option("--degree-bound", degree_bound, "maximal total degree searched")->check(CLI::NonNegativeNumber);
  basis->add_flag("--json", as_json, "emit JSON");

  auto* branch = app.add_subcommand("branch", "restriction of V_r to GL(n)");
  branch->add_option("--n", n_flag, "rank n (r has n+1 entries)")->check(CLI::Range(1, 8));
  branch->add_option("--r", r_text, "signature of size n+1")->required();
  branch->add_flag("--json", as_json, "emit JSON");

  auto* kernel = app.add_subcommand("kernel", "intertwining kernel L^r_q");
  kernel->add_option("--r", r_text, "signature of size n+1")->required();
  kernel->add_option("--q", q_text, "signature of size n")->required();
  kernel->add_flag("--json", as_json, "emit JSON");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(glr::verify::suite_names()));
  verify->add_option("--n", options.n, "rank n")->check(CLI::Range(1, 6));
  verify->add_option("--max-entry", options.max_entry, "signature entries range over [0, max-entry]")
      ->check(CLI::Range(0, 6));
  verify->add_option("--seed", options.seed, "seed for sampled checks");
  verify->add_flag("--json", as_json, "newline-delimited JSON reports");
  verify->add_flag("--timing", options.timing, "record elapsed_ms (otherwise 0, keeping output reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*basis) return cmd_basis(n_flag, p_text, degree_bound, as_json);
    if (*branch) return cmd_branch(n_flag, r_text, as_json);
    if (*kernel) return cmd_kernel(r_text, q_text, as_json);
    return cmd_verify(suite, options, as_json);
  } catch (const UsageError& e) {
    std::cerr << "glr: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "glr: " << e.what() << "\n";
    return kExitUsage;
  }
}
