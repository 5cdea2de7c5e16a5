#include "suites.hpp"

#include "glrestrict/gauss.hpp"
#include "glrestrict/generators.hpp"
#include "glrestrict/kernel.hpp"
#include "glrestrict/linalg.hpp"
#include "glrestrict/overalg.hpp"
#include "glrestrict/random.hpp"
#include "glrestrict/rep_space.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace glr::verify {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Signature& s) { return json(s.entries()); }

std::string matrix_string(const PolyMatrix& g) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 1; i <= g.rows(); ++i) {
    out << (i > 1 ? "; " : "");
    for (std::size_t j = 1; j <= g.cols(); ++j) out << (j > 1 ? " " : "") << g(i, j).to_string();
  }
  out << "]";
  return out.str();
}

// Times one report and fills the status from accumulated failures.
class Check {
 public:
  Check(const SuiteOptions& options, std::string name, json params)
      : timing_(options.timing), start_(std::chrono::steady_clock::now()) {
    report_.check = std::move(name);
    report_.params = std::move(params);
  }

  void fail(const std::string& what) {
    if (failures_++ == 0) first_ = what;
  }
  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (!ok) fail(what);
  }
  /// Runs body, turning an escaped exception into an error status.
  template <class Body>
  void attempt(Body&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      if (error_.empty()) error_ = e.what();
    }
  }

  void emit(const Emit& sink) {
    if (timing_) {
      report_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    }
    report_.params["cases"] = cases_;
    if (!error_.empty()) {
      report_.status = Status::kError;
      report_.detail = "exception: " + error_;
    } else if (failures_ > 0) {
      report_.status = Status::kFail;
      report_.detail = std::to_string(failures_) + " failure(s); first: " + first_;
    }
    sink(report_);
  }

 private:
  bool timing_;
  std::chrono::steady_clock::time_point start_;
  CheckReport report_;
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
  std::string error_;
};

// p = 0 and a staircase with negative entries, so the zero-order terms are generic.
std::vector<Signature> relation_signatures(int n) {
  std::set<Signature> out;
  out.insert(Signature(std::vector<long>(static_cast<std::size_t>(n), 0)));
  std::vector<long> stair;
  for (int j = 1; j <= n; ++j) stair.push_back(n - 2 * j + 1);
  out.insert(Signature(stair));
  return {out.begin(), out.end()};
}

std::string op_name(int k, int l) { return "E" + std::to_string(k) + std::to_string(l); }

}  // namespace

const char* to_string(Status status) {
  switch (status) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kError: return "error";
  }
  return "error";
}

json CheckReport::to_json() const {
  json out;
  out["check"] = check;
  out["params"] = params;
  out["status"] = verify::to_string(status);
  out["detail"] = detail;
  out["elapsed_ms"] = elapsed_ms;
  return out;
}

std::string CheckReport::to_line() const {
  std::string tag = verify::to_string(status);
  std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  std::string line = tag + " " + check + " " + params.dump();
  if (!detail.empty()) line += "  " + detail;
  return line;
}

void relation_checks(const SuiteOptions& options, const Emit& emit) {
  const int n = options.n;
  for (const auto& p : relation_signatures(n)) {
    std::vector<DiffOp> gens;
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) gens.push_back(generator(n, p, k, l));
    auto gen = [&](int k, int l) -> const DiffOp& { return gens[static_cast<std::size_t>((k - 1) * n + (l - 1))]; };

    {
      Check c(options, "commutation-operators", {{"n", n}, {"p", to_json(p)}});
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          for (int x = 1; x <= n; ++x)
            for (int d = 1; d <= n; ++d) {
              DiffOp rhs;
              if (b == x) rhs += gen(a, d);
              if (d == a) rhs -= gen(x, b);
              c.expect(commutator(gen(a, b), gen(x, d)) == rhs,
                       "[" + op_name(a, b) + "," + op_name(x, d) + "]");
            }
      c.emit(emit);
    }
    {
      Check c(options, "commutation-monomials", {{"n", n}, {"p", to_json(p)}, {"degree", 3}});
      for (const auto& m : monomials_up_to(n, 3)) {
        const MultiPoly f = MultiPoly::term(m, Rational(1));
        std::vector<MultiPoly> once;
        for (const auto& g : gens) once.push_back(g.apply(f));
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b)
            for (int x = 1; x <= n; ++x)
              for (int d = 1; d <= n; ++d) {
                const auto& ab_f = once[static_cast<std::size_t>((a - 1) * n + (b - 1))];
                const auto& xd_f = once[static_cast<std::size_t>((x - 1) * n + (d - 1))];
                MultiPoly lhs = gen(a, b).apply(xd_f) - gen(x, d).apply(ab_f);
                MultiPoly rhs;
                if (b == x) rhs += once[static_cast<std::size_t>((a - 1) * n + (d - 1))];
                if (d == a) rhs -= once[static_cast<std::size_t>((x - 1) * n + (b - 1))];
                c.expect(lhs == rhs, "[" + op_name(a, b) + "," + op_name(x, d) + "] on " + f.to_string());
              }
      }
      c.emit(emit);
    }
    {
      Check c(options, "chain-independence", {{"n", n}, {"p", to_json(p)}});
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (std::abs(k - l) < 2) continue;
          c.expect(generator(n, p, k, l, VarKind::Z, ChainOrder::kFirstStep) == gen(k, l), op_name(k, l));
        }
      c.emit(emit);
    }
    if (n >= 2) {
      Check c(options, "top-corner-derivative", {{"n", n}, {"p", to_json(p)}});
      c.expect(gen(1, n) == DiffOp::derivative(VarId::of(VarKind::Z, 1, n)), op_name(1, n));
      c.emit(emit);
    }
  }
}

void dimension_checks(const SuiteOptions& options, const Emit& emit) {
  const int n = options.n;
  std::map<Signature, std::size_t> dims;
  for (const auto& p : signatures_in_box(n, 0, options.max_entry)) {
    Check dim_check(options, "dimension", {{"n", n}, {"p", to_json(p)}});
    std::optional<RepSpace> space;
    try {
      space = build_rep_space(n, p);
    } catch (const std::exception& e) {
      dim_check.expect(false, e.what());
    }
    if (space) {
      dims[p] = space->dimension();
      dim_check.expect(space->dimension() == count_gt_patterns(p),
                       "dim " + std::to_string(space->dimension()) + " vs GT " + std::to_string(count_gt_patterns(p)));
    }
    dim_check.emit(emit);
    if (!space) continue;

    Check stable(options, "vp-stability", {{"n", n}, {"p", to_json(p)}, {"dim", space->dimension()}});
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) {
        const DiffOp e = generator(n, p, k, l);
        for (const auto& f : space->basis) stable.expect(in_span(space->basis, e.apply(f)), op_name(k, l) + " on " + f.to_string());
      }
    stable.emit(emit);
  }

  for (const auto& r : signatures_in_box(n + 1, 0, options.max_entry)) {
    Check c(options, "branching", {{"n", n}, {"r", to_json(r)}});
    std::uint64_t total = 0;
    for (const auto& q : enumerate_interlacing(r)) {
      auto it = dims.find(q);
      if (it == dims.end()) {
        try {
          it = dims.emplace(q, build_rep_space(n, q).dimension()).first;
        } catch (const std::exception& e) {
          c.fail(q.to_string() + ": " + e.what());
          continue;
        }
      }
      total += it->second;
    }
    c.expect(total == count_gt_patterns(r), "sum " + std::to_string(total) + " vs GT " + std::to_string(count_gt_patterns(r)));
    c.emit(emit);
  }
}

void pluecker_checks(const SuiteOptions& options, const Emit& emit) {
  const int n = options.n;
  for (auto rel : {PlueckerRelation::kPlu1, PlueckerRelation::kPlu2, PlueckerRelation::kPlu3}) {
    Check c(options, "pluecker", {{"n", n}, {"relation", to_string(rel)}});
    for (const auto& t : admissible_triples(rel, n)) {
      c.expect(check_pluecker(rel, t[0], t[1], t[2], n),
               "(m,alpha,beta)=(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
    }
    c.emit(emit);
  }

  const PolyMatrix z = kernel_z(n);
  const PolyMatrix u = kernel_u(n);
  const auto minors = all_minors(n);
  std::vector<MultiPoly> values;
  values.reserve(minors.size());
  for (const auto& spec : minors) values.push_back(minor_value(spec, z, u));

  auto describe = [](const MinorSpec& s) {
    std::string out = s.kind == MinorKind::kPhi ? "Phi" : "Psi";
    out += std::to_string(s.alpha) + " z{";
    for (int i : s.z_rows) out += std::to_string(i);
    out += "} u{";
    for (int i : s.u_rows) out += std::to_string(i);
    return out + "}";
  };

  for (VarKind kind : {VarKind::Z, VarKind::U}) {
    const int size = kind == VarKind::Z ? n + 1 : n;
    const char* kind_name = kind == VarKind::Z ? "z" : "u";
    Check lemma(options, "r-lemma", {{"n", n}, {"kind", kind_name}, {"minors", minors.size()}});
    Check nil(options, "r-nilpotence", {{"n", n}, {"kind", kind_name}});
    Check cor(options, "r-corollary", {{"n", n}, {"kind", kind_name}});
    for (std::size_t i = 0; i < minors.size(); ++i) {
      const auto& spec = minors[i];
      const auto& f = values[i];
      const auto& rows = kind == VarKind::Z ? spec.z_rows : spec.u_rows;
      auto in_rows = [&](int j) { return std::find(rows.begin(), rows.end(), j) != rows.end(); };
      std::map<std::pair<int, int>, MultiPoly> image;
      for (int k = 1; k <= size; ++k)
        for (int l = k + 1; l <= size; ++l) {
          const MultiPoly actual = apply_r(n, kind, k, l, f);
          image[{k, l}] = actual;
          MultiPoly expected;
          if (auto pred = predicted_r_image(spec, kind, k, l)) {
            expected = minor_value(pred->minor, z, u) * Rational(pred->sign);
          }
          const std::string where = "R" + std::to_string(k) + std::to_string(l) + " " + describe(spec);
          lemma.expect(actual == expected, where);
          nil.expect(apply_r(n, kind, k, l, actual).is_zero(), where);
        }
      for (int k = 1; k <= size; ++k)
        for (int l = k + 1; l <= size; ++l)
          for (int m = l + 1; m <= size; ++m) {
            const MultiPoly lhs = apply_r(n, kind, k, l, image[{l, m}]);
            const bool applies = in_rows(k) && in_rows(l) && !in_rows(m);
            const MultiPoly rhs = applies ? image[{k, m}] * Rational(-1) : MultiPoly();
            cor.expect(lhs == rhs, "R" + std::to_string(k) + std::to_string(l) + " R" + std::to_string(l) + std::to_string(m) +
                                       " " + describe(spec));
          }
    }
    lemma.emit(emit);
    nil.emit(emit);
    cor.emit(emit);
  }
}

void kernel_membership_checks(const SuiteOptions& options, const Emit& emit) {
  const int n = options.n;
  for (const auto& r : signatures_in_box(n + 1, 0, options.max_entry)) {
    Check c(options, "kernel-membership", {{"n", n}, {"r", to_json(r)}});
    for (const auto& q : enumerate_interlacing(r)) {
      c.attempt([&] { c.expect(check_zhelobenko_membership(build_kernel(KernelParams(r, q))), "q=" + q.to_string()); });
    }
    c.emit(emit);
  }
}

void intertwiner_checks(const SuiteOptions& options, const Emit& emit) {
  const int n = options.n;
  std::vector<Signature> tops = signatures_in_box(n + 1, 0, options.max_entry);
  const bool exhaustive = n <= 2 || static_cast<int>(tops.size()) <= options.signature_samples;
  if (!exhaustive) {
    RandomSource rng(options.seed);
    std::shuffle(tops.begin(), tops.end(), rng.engine());
    tops.resize(static_cast<std::size_t>(options.signature_samples));
    std::sort(tops.begin(), tops.end());
  }

  for (const auto& r : tops) {
    for (Corner corner : {Corner::kRaise, Corner::kLower}) {
      json params{{"n", n}, {"r", to_json(r)}, {"corner", to_string(corner)}};
      if (!exhaustive) params["seed"] = options.seed;
      Check c(options, "intertwining", std::move(params));
      c.attempt([&] {
        const auto rep = verify_intertwining(n, r, corner);
        c.expect(rep.identity_holds, "E L + F L != 0: " + rep.detail);
        c.expect(rep.closed_form_holds, "closed form mismatch: " + rep.detail);
      });
      c.emit(emit);
    }
    if (n > 2) continue;
    {
      Check c(options, "family-stability", {{"n", n}, {"r", to_json(r)}});
      c.attempt([&] {
        const auto rep = verify_family_stability(n, r);
        c.expect(rep.components_in_vq, "component outside V_q: " + rep.detail);
        c.expect(rep.box_respected, "out-of-box input read: " + rep.detail);
      });
      c.emit(emit);
    }
    {
      Check c(options, "weight-relations", {{"n", n}, {"r", to_json(r)}});
      for (Corner corner : {Corner::kRaise, Corner::kLower})
        for (int k = 1; k <= n; ++k)
          c.expect(weight_relation_holds(n, r, corner, k), std::string(to_string(corner)) + " k=" + std::to_string(k));
      c.emit(emit);
    }
    if (n == 2) {
      Check c(options, "lower-spot-check", {{"n", n}, {"r", to_json(r)}});
      c.expect(lower_commutator_spot_check(n, r), "[F32,F21] L + E31 L != 0");
      c.emit(emit);
    }
  }

  if (n == 1) {
    // The global signs are pinned here: +1 must hold everywhere and -1 must fail somewhere.
    for (Corner corner : {Corner::kRaise, Corner::kLower}) {
      Check c(options, "sign-calibration", {{"n", n}, {"corner", to_string(corner)}, {"sign", 1}});
      bool opposite_fails = false;
      for (const auto& r : tops) {
        c.expect(intertwining_identity(n, r, corner, 1), "r=" + r.to_string());
        opposite_fails = opposite_fails || !intertwining_identity(n, r, corner, -1);
      }
      c.expect(opposite_fails, "sign -1 is not excluded");
      c.emit(emit);
    }
  }
}

void kernel_invariance_checks(const SuiteOptions& options, const Emit& emit) {
  const int n = options.n;
  RandomSource rng(options.seed);
  std::vector<KernelParams> pairs;
  for (const auto& r : signatures_in_box(n + 1, 0, options.max_entry))
    for (const auto& q : enumerate_interlacing(r)) pairs.emplace_back(r, q);

  for (int s = 0; s < options.group_samples; ++s) {
    const PolyMatrix g = rng.gl_matrix(n);
    Check c(options, "kernel-invariance", {{"n", n}, {"seed", options.seed}, {"sample", s}, {"g", matrix_string(g)}});
    for (const auto& params : pairs) {
      c.attempt([&] {
        c.expect(check_kernel_invariance(params, g), "r=" + params.r().to_string() + " q=" + params.q().to_string());
      });
    }
    c.emit(emit);
  }
}

void gauss_checks(const SuiteOptions& options, const Emit& emit) {
  const int n = options.n;
  RandomSource rng(options.seed);
  {
    Check c(options, "gauss-roundtrip", {{"seed", options.seed}, {"sizes", "1..4"}, {"per_size", 100}});
    for (int size = 1; size <= 4; ++size)
      for (int t = 0; t < 100; ++t) {
        const PolyMatrix g = rng.gl_matrix(size);
        c.attempt([&] {
          const ExprMatrix ge = to_expr(g);
          const auto f = gauss_decompose(ge);
          bool shape = true;
          for (int i = 1; i <= size; ++i)
            for (int j = 1; j <= size; ++j) {
              if (i < j) shape = shape && f.lower(i, j).is_zero();
              if (i > j) shape = shape && f.unipotent(i, j).is_zero();
              if (i == j) shape = shape && f.unipotent(i, j) == RationalExpr(1);
            }
          c.expect(shape && matmul(f.lower, f.unipotent) == ge, matrix_string(g));
        });
      }
    c.emit(emit);
  }
  {
    Check c(options, "chain-identity", {{"n", n}, {"seed", options.seed}, {"samples", 20}});
    const PolyMatrix z = unitriangular(n, VarKind::Z);
    for (int t = 0; t < 20; ++t) {
      const PolyMatrix g = rng.gl_matrix(n);
      const PolyMatrix h = rng.gl_matrix(n);
      c.attempt([&] { c.expect(jacobian_chain_check(n, z, g, h), "g=" + matrix_string(g) + " h=" + matrix_string(h)); });
    }
    c.emit(emit);
  }
  for (const auto& p : signatures_in_box(n, 0, std::min(options.max_entry, 2L))) {
    Check c(options, "infinitesimal", {{"n", n}, {"p", to_json(p)}});
    const RepSpace space = build_rep_space(n, p);
    std::vector<std::tuple<OneParamKind, int, int>> subgroups;
    for (int k = 1; k <= n; ++k) {
      subgroups.emplace_back(OneParamKind::kDiagonal, k, 0);
      for (int l = k + 1; l <= n; ++l) subgroups.emplace_back(OneParamKind::kUpper, k, l);
      if (k < n) subgroups.emplace_back(OneParamKind::kLowerAdjacent, k, 0);
    }
    if (n >= 2) subgroups.emplace_back(OneParamKind::kCorner, 1, 0);
    for (const auto& [kind, k, l] : subgroups) {
      const auto [a, b] = one_param_generator_index(n, kind, k, l);
      const DiffOp e = generator(n, p, a, b);
      for (const auto& f : space.basis) {
        c.expect(infinitesimal_action(n, p, kind, k, l, f) == e.apply(f), op_name(a, b) + " on " + f.to_string());
      }
    }
    c.emit(emit);
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "pluecker", "intertwiner", "invariance", "all"};
  return names;
}

void run_suite(const std::string& name, const SuiteOptions& options, const Emit& emit) {
  const bool all = name == "all";
  if (!all && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw std::invalid_argument("unknown suite: " + name);
  }
  if (all || name == "relations") {
    relation_checks(options, emit);
    dimension_checks(options, emit);
  }
  if (all || name == "pluecker") pluecker_checks(options, emit);
  if (all || name == "intertwiner") intertwiner_checks(options, emit);
  if (all || name == "invariance") {
    gauss_checks(options, emit);
    kernel_membership_checks(options, emit);
    kernel_invariance_checks(options, emit);
  }
}

}  // namespace glr::verify
