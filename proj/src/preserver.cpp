#include "qdiv/preserver.hpp"

#include "qdiv/linalg.hpp"
#include "qdiv/sampling.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace qdiv {

namespace {

constexpr double kOrthogonalityThreshold = 1e-10;

// Rank for sample k: full, rank-one, then something strictly in between when
// the dimension allows it.
int sample_rank(std::size_t k, int n, SeededRng& rng) {
  switch (k % 3) {
    case 0:
      return n;
    case 1:
      return 1;
    default:
      if (n <= 2) return 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
      return 2 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n - 2));
  }
}

struct PairOutcome {
  ExtendedReal before;
  ExtendedReal after;
};

void accumulate(InvarianceReport& report, std::size_t index, const ComplexMatrix& A,
                const ComplexMatrix& B, const PairOutcome& outcome, double tol) {
  ++report.samples;
  const ExtendedDifference d = compare(outcome.before, outcome.after);
  double deviation = 0.0;
  if (d.category_mismatch) {
    ++report.infinity_mismatches;
    deviation = std::numeric_limits<double>::infinity();
  } else {
    deviation = d.abs_diff;
    report.max_abs_deviation = std::max(report.max_abs_deviation, deviation);
  }
  if (deviation > tol && (!report.witness || deviation > report.witness->deviation)) {
    report.witness = InvarianceWitness{index, A, B, outcome.before, outcome.after, deviation};
  }
}

}  // namespace

std::optional<DivergenceTag> parse_divergence_tag(const std::string& s) {
  if (s == "umegaki") return DivergenceTag::Umegaki;
  if (s == "renyi") return DivergenceTag::Renyi;
  if (s == "sandwiched") return DivergenceTag::Sandwiched;
  if (s == "sandwiched-core") return DivergenceTag::SandwichedCore;
  if (s == "fdiv") return DivergenceTag::FDiv;
  if (s == "dfg") return DivergenceTag::DFG;
  return std::nullopt;
}

std::string to_string(DivergenceTag tag) {
  switch (tag) {
    case DivergenceTag::Umegaki: return "umegaki";
    case DivergenceTag::Renyi: return "renyi";
    case DivergenceTag::Sandwiched: return "sandwiched";
    case DivergenceTag::SandwichedCore: return "sandwiched-core";
    case DivergenceTag::FDiv: return "fdiv";
    case DivergenceTag::DFG: return "dfg";
  }
  return "?";
}

void DivergenceSpec::validate() const {
  switch (tag) {
    case DivergenceTag::Renyi:
    case DivergenceTag::Sandwiched:
    case DivergenceTag::SandwichedCore:
      require_renyi_alpha(alpha);
      break;
    case DivergenceTag::FDiv:
      if (!f) throw DomainError("fdiv needs a function f");
      break;
    case DivergenceTag::DFG:
      if (!f || !g) throw DomainError("dfg needs functions f and g");
      break;
    case DivergenceTag::Umegaki:
      break;
  }
}

ExtendedReal DivergenceSpec::evaluate(const DensityOperator& A, const DensityOperator& B) const {
  validate();
  switch (tag) {
    case DivergenceTag::Umegaki: return umegaki(A, B);
    case DivergenceTag::Renyi: return renyi_traditional(A, B, alpha);
    case DivergenceTag::Sandwiched: return sandwiched_renyi(A, B, alpha);
    case DivergenceTag::SandwichedCore: return sandwiched_core(A, B, alpha);
    case DivergenceTag::FDiv: return f_divergence(A, B, *f);
    case DivergenceTag::DFG: return d_fg(A, B, *f, *g);
  }
  throw DomainError("unknown divergence tag");
}

std::string DivergenceSpec::describe() const {
  std::string out = to_string(tag);
  char buf[64];
  switch (tag) {
    case DivergenceTag::Renyi:
    case DivergenceTag::Sandwiched:
    case DivergenceTag::SandwichedCore:
      std::snprintf(buf, sizeof buf, "(alpha=%g)", alpha);
      out += buf;
      break;
    case DivergenceTag::FDiv:
      if (f) out += "(f=" + f->name() + ")";
      break;
    case DivergenceTag::DFG:
      if (f && g) out += "(f=" + f->name() + ", g=" + g->name() + ")";
      break;
    case DivergenceTag::Umegaki:
      break;
  }
  return out;
}

InvarianceReport check_invariance(const StateMap& map, const DivergenceSpec& divergence,
                                  std::size_t n_samples, std::uint64_t seed, double tol) {
  divergence.validate();
  InvarianceReport report;
  const auto outcome = [&](const ComplexMatrix& A, const ComplexMatrix& B,
                           const ComplexMatrix& mA, const ComplexMatrix& mB) {
    const DensityOperator a(A), b(B);
    const DensityOperator ma(mA), mb(mB);
    return PairOutcome{divergence.evaluate(a, b), divergence.evaluate(ma, mb)};
  };

  if (const auto* table = std::get_if<TabulatedMap>(&map.kind())) {
    const auto& pairs = table->pairs;
    std::size_t index = 0;
    for (std::size_t i = 0; i < pairs.size() && index < n_samples; ++i) {
      for (std::size_t j = 0; j < pairs.size() && index < n_samples; ++j, ++index) {
        const auto& [A, mA] = pairs[i];
        const auto& [B, mB] = pairs[j];
        accumulate(report, index, A, B, outcome(A, B, mA, mB), tol);
      }
    }
    return report;
  }

  const int n = map.dim();
  for (std::size_t k = 0; k < n_samples; ++k) {
    SeededRng rng(derive_seed(seed, k));
    const int rank_a = sample_rank(k, n, rng);
    const int rank_b = sample_rank(k + static_cast<std::size_t>(rng.next_u64() % 3), n, rng);
    const ComplexMatrix A = random_density(n, rank_a, rng).matrix();
    const ComplexMatrix B = random_density(n, rank_b, rng).matrix();
    accumulate(report, k, A, B, outcome(A, B, map.apply(A), map.apply(B)), tol);
  }
  return report;
}

ConjugationReport verify_conjugation(const StateMap& map, const ComplexMatrix& U, bool antiunitary,
                                     std::size_t n_samples, std::uint64_t seed, double tol) {
  require_square(U, "verify_conjugation");
  if (unitarity_defect(U) > tol) throw ValidationError("verify_conjugation: U is not unitary");
  if (U.rows() != map.dim()) throw DimensionError("verify_conjugation: dimension mismatch");
  const int n = map.dim();
  ConjugationReport report;
  for (std::size_t k = 0; k < n_samples; ++k) {
    SeededRng rng(derive_seed(seed, k));
    const int rank = (k % 2 == 0) ? n : 1;
    const ComplexMatrix A = random_density(n, rank, rng).matrix();
    const double d = (map.apply(A) - conjugate_by(U, A, antiunitary)).norm();
    report.max_deviation = std::max(report.max_deviation, d);
    ++report.samples;
  }
  report.passed = report.max_deviation <= tol;
  return report;
}

bool orthogonality_indicator(const DensityOperator& A, const DensityOperator& B,
                             const ScalarFunctionSpec& f, const ScalarFunctionSpec& g) {
  const auto& limit = f.limit_at_zero();
  if (!limit || limit->infinite || limit->value != 0.0) {
    throw DomainError("orthogonality_indicator: f must tend to 0 at 0+ ('" + f.name() + "')");
  }
  if (!g.flags().injective) {
    throw DomainError("orthogonality_indicator: g must be injective ('" + g.name() + "')");
  }
  const ExtendedReal d = d_fg(A, B, f, g);
  return d.is_finite() && d.value() <= kOrthogonalityThreshold;
}

}  // namespace qdiv
