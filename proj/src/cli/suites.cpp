#include "cli/suites.hpp"

#include "cli/errors.hpp"
#include "qdiv/divergence.hpp"
#include "qdiv/lemmas.hpp"
#include "qdiv/linalg.hpp"
#include "qdiv/preserver.hpp"
#include "qdiv/sampling.hpp"
#include "qdiv/wigner.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <vector>

namespace qdiv::cli {

namespace {

Json matrix_json(const ComplexMatrix& M) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    Json rr = Json::array();
    Json ii = Json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      rr.push_back(M(i, j).real());
      ii.push_back(M(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  Json out = Json::object();
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

std::size_t samples_or(const SuiteOptions& o, std::size_t fallback) {
  return o.samples == 0 ? fallback : o.samples;
}

void require_dim(const SuiteOptions& o, int minimum) {
  if (o.dim < minimum) {
    throw UsageError("--dim must be >= " + std::to_string(minimum) + " for this suite");
  }
}

ComplexMatrix diagonal(std::initializer_list<double> values) {
  ComplexMatrix D = ComplexMatrix::Zero(static_cast<Eigen::Index>(values.size()),
                                        static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (const double v : values) D(k, k) = v, ++k;
  return D;
}

// ---------------------------------------------------------------------------

struct NamedMap {
  std::string name;
  StateMap map;
};

std::vector<NamedMap> invariance_maps(const SuiteOptions& o) {
  std::vector<NamedMap> out;
  const std::string& m = o.map;
  if (m == "conjugations" || m == "haar") {
    SeededRng rng(derive_seed(o.seed, 0xA11CE));
    out.push_back({"haar-unitary", StateMap::unitary(haar_unitary(o.dim, rng))});
  }
  if (m == "conjugations" || m == "antiunitary") {
    SeededRng rng(derive_seed(o.seed, 0xB0B));
    out.push_back({"haar-antiunitary", random_antiunitary(o.dim, rng)});
  }
  if (m == "identity") out.push_back({"identity", StateMap::identity(o.dim)});
  if (m == "transpose") out.push_back({"transpose", StateMap::transpose(o.dim)});
  if (m.rfind("depolarizing:", 0) == 0) {
    if (o.dim != 2) throw UsageError("the depolarizing map acts on --dim 2 only");
    char* end = nullptr;
    const std::string param = m.substr(13);
    const double p = std::strtod(param.c_str(), &end);
    if (param.empty() || *end != '\0' || !(p >= 0.0 && p <= 1.0)) {
      throw UsageError("depolarizing probability must be a number in [0, 1]");
    }
    out.push_back({m, StateMap::depolarizing_qubit(p)});
  }
  if (out.empty()) {
    throw UsageError("unknown --map '" + m +
                     "' (expected conjugations, haar, antiunitary, identity, transpose or "
                     "depolarizing:P)");
  }
  return out;
}

std::vector<DivergenceSpec> invariance_divergences(double alpha) {
  std::vector<DivergenceSpec> out;
  out.push_back({DivergenceTag::Sandwiched, alpha, std::nullopt, std::nullopt});
  out.push_back({DivergenceTag::SandwichedCore, alpha, std::nullopt, std::nullopt});
  out.push_back({DivergenceTag::Renyi, alpha, std::nullopt, std::nullopt});
  out.push_back({DivergenceTag::Umegaki, alpha, std::nullopt, std::nullopt});
  out.push_back({DivergenceTag::FDiv, alpha, functions::power(2.0), std::nullopt});
  out.push_back({DivergenceTag::DFG, alpha, functions::power(0.5), functions::power(1.0)});
  return out;
}

void suite_invariance(const SuiteOptions& o, RunReport& report) {
  require_dim(o, 1);
  require_renyi_alpha(o.alpha);
  const std::size_t samples = samples_or(o, 100);
  for (const auto& [map_name, map] : invariance_maps(o)) {
    for (const auto& div : invariance_divergences(o.alpha)) {
      const InvarianceReport r = check_invariance(map, div, samples, o.seed, o.tol);
      const std::string name = map_name + " " + div.describe();
      report.add_assertion(name + " max_abs_deviation", r.max_abs_deviation, "<=", o.tol);
      report.add_assertion(name + " infinity_mismatches",
                           static_cast<double>(r.infinity_mismatches), "<=", 0.0);
      if (r.witness) {
        Json w = Json::object();
        w["check"] = name;
        w["sample"] = r.witness->sample;
        w["before"] = json_value(r.witness->before);
        w["after"] = json_value(r.witness->after);
        w["deviation"] = json_value(r.witness->deviation);
        w["A"] = matrix_json(r.witness->A);
        w["B"] = matrix_json(r.witness->B);
        report.add_witness(std::move(w));
      }
    }
  }
}

// ---------------------------------------------------------------------------

void suite_lemmas(const SuiteOptions& o, RunReport& report) {
  require_dim(o, 2);
  const int n = o.dim;
  const std::size_t samples = samples_or(o, 200);

  const std::vector<ScalarFunctionSpec> hs = {functions::power(2.0), functions::power(0.5),
                                              functions::xlogx()};
  for (const auto& h : hs) {
    double worst = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
      SeededRng rng(derive_seed(o.seed, k));
      const int ra = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
      const int rb = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
      const auto A = random_density(n, ra, rng);
      const auto B = random_density(n, rb, rng);
      worst = std::max(worst, trace_similarity_check(A, B, h));
    }
    report.add_assertion("trace_similarity " + h.name(), worst, "<=", 1e-9);
  }

  for (const double c : {-3.0, 0.5, 10.0}) {
    const double r = functional_eq_residual(functions::linear(c), 3, 500, o.seed);
    report.add_assertion("functional_eq " + functions::linear(c).name(), r, "<=", 1e-12);
  }
  {
    const auto f = functions::power_plus_linear(o.alpha == 1.0 ? 2.0 : o.alpha, 1.0);
    const double r = functional_eq_residual(f, 3, 500, o.seed);
    report.add_assertion("functional_eq " + f.name(), r, ">", 1e-3);
  }

  const auto h = functions::power(1.0);
  {
    const PositiveOperator B(ComplexMatrix::Identity(n, n));
    const PositiveOperator C(2.0 * ComplexMatrix::Identity(n, n));
    const OrderVerdict v = order_dominance_test(B, C, h, 50, o.seed);
    report.add_assertion("order I <= 2I counterexamples", v.counterexample ? 1.0 : 0.0, "<=", 0.0);
  }
  {
    const PositiveOperator B(diagonal({2.0, 1.0}));
    const PositiveOperator C(diagonal({1.0, 2.0}));
    const OrderVerdict v = order_dominance_test(B, C, h, 50, o.seed);
    report.add_assertion("order diag(2,1) vs diag(1,2) violation", v.max_violation, ">", 0.0);
  }
  std::size_t disagreements = 0;
  std::size_t inconclusive = 0;
  const std::size_t order_pairs = std::min<std::size_t>(samples, 200);
  for (std::size_t k = 0; k < order_pairs; ++k) {
    SeededRng rng(derive_seed(o.seed ^ 0x0DD, k));
    const PositiveOperator B = random_positive_definite(n, 10.0, rng);
    ComplexMatrix c2;
    if (k % 2 == 0) {
      // Comparable: C^2 = B^2 + P with P >= 0.
      const ComplexMatrix G = ginibre(n, rng);
      c2 = B.matrix() * B.matrix() + 0.1 * G * G.adjoint();
    } else {
      const ComplexMatrix M = random_positive_definite(n, 10.0, rng).matrix();
      c2 = M * M;
    }
    const PositiveOperator C2(hermitian_part(c2));
    const PositiveOperator C(support_power(C2.spectrum(), 0.5, C2.tolerances()));
    const OrderVerdict v = order_dominance_test(B, C, h, 20, derive_seed(o.seed, k));
    if (v.spectral_le && v.counterexample) ++disagreements;
    if (v.inconclusive()) ++inconclusive;
  }
  report.add_assertion("order_dominance counterexamples against B^2 <= C^2",
                       static_cast<double>(disagreements), "<=", 0.0);
  report.results()["order_dominance_pairs"] = order_pairs;
  report.results()["order_dominance_inconclusive"] = inconclusive;

  {
    const auto f = functions::power(1.0);
    const auto g = functions::power(1.0);
    const DensityOperator A(diagonal({1.0, 0.0}));
    const DensityOperator B(diagonal({0.0, 1.0}));
    const DensityOperator H(0.5 * ComplexMatrix::Identity(2, 2));
    report.add_assertion("orthogonality diag(1,0) diag(0,1)",
                         orthogonality_indicator(A, B, f, g) ? 0.0 : 1.0, "<=", 0.0);
    report.add_assertion("orthogonality I/2 I/2", orthogonality_indicator(H, H, f, g) ? 1.0 : 0.0,
                         "<=", 0.0);
    std::size_t mismatches = 0;
    for (std::size_t k = 0; k < std::min<std::size_t>(samples, 100); ++k) {
      SeededRng rng(derive_seed(o.seed ^ 0x0E7, k));
      const auto a = random_density(n, 1, rng);
      const auto b = random_density(n, 1 + static_cast<int>(k % static_cast<std::size_t>(n)), rng);
      const bool orth = (a.matrix() * b.matrix()).norm() <= 1e-10;
      if (orthogonality_indicator(a, b, f, g) != orth) ++mismatches;
    }
    report.add_assertion("orthogonality indicator vs ||AB||", static_cast<double>(mismatches),
                         "<=", 0.0);
  }
}

// ---------------------------------------------------------------------------

void suite_prop1(const SuiteOptions& o, RunReport& report) {
  const Prop1Witness w = prop1_refutation(o.alpha);
  report.add_assertion("prop1 gap", w.terms.gap(), ">", 1e-3);
  Json wj = Json::object();
  wj["alpha"] = o.alpha;
  wj["t"] = w.t;
  wj["s"] = w.s;
  wj["lhs"] = w.terms.lhs;
  wj["rhs"] = w.terms.rhs;
  wj["gap"] = w.terms.gap();
  report.results()["witness"] = wj;
  report.add_witness(std::move(wj));
}

// ---------------------------------------------------------------------------

struct SingularInstance {
  PositiveOperator A;
  PositiveOperator B;
};

// B of rank r in [1, n-1] with nonzero eigenvalues in [1/4, 1]. `contained`
// draws A on supp B, otherwise A is a full-rank density.
SingularInstance singular_instance(int n, bool contained, SeededRng& rng) {
  const int r = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n - 1));
  const ComplexMatrix U = haar_unitary(n, rng);
  ComplexMatrix D = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < r; ++k) D(k, k) = 0.25 + 0.75 * rng.uniform();
  const ComplexMatrix B = hermitian_part(U * D * U.adjoint());
  ComplexMatrix A;
  if (contained) {
    const ComplexMatrix inner = random_density(r, 1 + static_cast<int>(rng.next_u64() %
                                                   static_cast<std::uint64_t>(r)), rng)
                                    .matrix();
    ComplexMatrix padded = ComplexMatrix::Zero(n, n);
    padded.topLeftCorner(r, r) = inner;
    A = hermitian_part(U * padded * U.adjoint());
  } else {
    A = random_density(n, n, rng).matrix();
  }
  return {PositiveOperator(A), PositiveOperator(B)};
}

void suite_prop2_limits(const SuiteOptions& o, RunReport& report) {
  require_dim(o, 2);
  const std::size_t samples = samples_or(o, 50);
  const auto g = functions::power(1.0);

  const auto f_zero = functions::power(2.0);
  double worst = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    SeededRng rng(derive_seed(o.seed, k));
    const auto inst = singular_instance(o.dim, k % 2 == 0, rng);
    const LimitProbe probe = d_fg_limit_probe(inst.A, inst.B, f_zero, g, decade_schedule(1, 12));
    const ExtendedReal exact = d_fg(inst.A, inst.B, f_zero, g);
    const ExtendedDifference d = compare(probe.estimate, exact);
    worst = std::max(worst, d.category_mismatch ? INFINITY : d.abs_diff);
  }
  report.add_assertion("case (i) |probe - compressed value|", worst, "<=", 1e-6);

  const auto f_inf = functions::power(-2.0);
  std::size_t mismatches = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    SeededRng rng(derive_seed(o.seed ^ 0x2, k));
    const auto inst = singular_instance(o.dim, k % 2 == 0, rng);
    const LimitProbe probe = d_fg_limit_probe(inst.A, inst.B, f_inf, g, decade_schedule(1, 6));
    const bool contained = support_contained(inst.A, inst.B);
    const ExtendedReal exact = d_fg(inst.A, inst.B, f_inf, g);
    if (probe.diverging == contained || exact.is_infinite() == contained) ++mismatches;
  }
  report.add_assertion("case (ii) divergence flag vs support test",
                       static_cast<double>(mismatches), "<=", 0.0);
  report.results()["instances_per_case"] = samples;
}

// ---------------------------------------------------------------------------

void suite_thm4(const SuiteOptions& o, RunReport& report) {
  require_dim(o, 2);
  require_renyi_alpha(o.alpha);
  {
    const Thm4Verdict v = thm4_scalar_test(PositiveOperator(diagonal({1.0, 2.0})), o.alpha);
    report.add_assertion("thm4 diag(1,2) |gap|", std::abs(v.gap()), ">", 1e-10);
    Json w = Json::object();
    w["T"] = "diag(1,2)";
    w["mean_xy"] = v.mean_xy;
    w["mean_x_mean_y"] = v.mean_x_mean_y;
    w["gap"] = v.gap();
    report.results()["diag_1_2"] = std::move(w);
  }
  {
    const Thm4Verdict v =
        thm4_scalar_test(PositiveOperator(3.0 * ComplexMatrix::Identity(o.dim, o.dim)), o.alpha);
    report.add_assertion("thm4 3I |gap|", std::abs(v.gap()), "<=", 1e-10 * v.mean_xy);
  }
  std::size_t disagreements = 0;
  const std::size_t samples = samples_or(o, 100);
  for (std::size_t k = 0; k < samples; ++k) {
    SeededRng rng(derive_seed(o.seed, k));
    const PositiveOperator T = (k % 4 == 0)
                                   ? PositiveOperator((0.1 + 10.0 * rng.uniform()) *
                                                      ComplexMatrix::Identity(o.dim, o.dim))
                                   : random_positive_definite(o.dim, 4.0, rng);
    const Thm4Verdict v = thm4_scalar_test(T, o.alpha);
    if (v.scalar != v.spectral_scalar) ++disagreements;
  }
  report.add_assertion("thm4 verdict vs spectral test", static_cast<double>(disagreements), "<=",
                       0.0);
}

// ---------------------------------------------------------------------------

void suite_wigner(const SuiteOptions& o, RunReport& report) {
  require_dim(o, 1);
  const std::size_t samples = samples_or(o, 20);
  double worst_residual = 0.0;
  double worst_verify = 0.0;
  std::size_t misclassified = 0;
  for (std::size_t k = 0; k < 2 * samples; ++k) {
    SeededRng rng(derive_seed(o.seed, k));
    const bool anti = k % 2 == 1;
    const ComplexMatrix U0 = haar_unitary(o.dim, rng);
    const StateMap map = anti ? StateMap::antiunitary(U0) : StateMap::unitary(U0);
    const WignerReconstruction rec = wigner_reconstruct(wigner_images(map));
    worst_residual = std::max(worst_residual, rec.residual);
    // In dimension 1 the two kinds coincide.
    if (o.dim >= 2 && rec.antiunitary != anti) ++misclassified;
    const ConjugationReport v =
        verify_conjugation(map, rec.unitary, rec.antiunitary, 50, derive_seed(o.seed ^ 0x3, k), 1e-8);
    worst_verify = std::max(worst_verify, v.max_deviation);
  }
  report.add_assertion("wigner residual", worst_residual, "<=", 1e-8);
  report.add_assertion("wigner verify_conjugation", worst_verify, "<=", 1e-8);
  report.add_assertion("wigner misclassified kinds", static_cast<double>(misclassified), "<=", 0.0);
  report.results()["maps"] = 2 * samples;

  if (o.dim >= 2) {
    const WignerReconstruction t = wigner_reconstruct(wigner_images(StateMap::transpose(o.dim)));
    report.add_assertion("wigner transpose is antiunitary", t.antiunitary ? 0.0 : 1.0, "<=", 0.0);
  }
}

using SuiteFn = std::function<void(const SuiteOptions&, RunReport&)>;

const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> table = {
      {"invariance", suite_invariance}, {"lemmas", suite_lemmas},
      {"prop1", suite_prop1},           {"prop2-limits", suite_prop2_limits},
      {"thm4", suite_thm4},             {"wigner", suite_wigner},
  };
  return table;
}

}  // namespace

bool is_suite(const std::string& name) { return suites().count(name) != 0; }

void run_suite(const std::string& name, const SuiteOptions& options, RunReport& report) {
  const auto it = suites().find(name);
  if (it == suites().end()) {
    throw UsageError("unknown suite '" + name +
                     "' (expected invariance, lemmas, prop1, prop2-limits, thm4 or wigner)");
  }
  it->second(options, report);
}

}  // namespace qdiv::cli
