#pragma once

#include "qdiv/divergence.hpp"
#include "qdiv/state_map.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace qdiv {

enum class DivergenceTag { Umegaki, Renyi, Sandwiched, SandwichedCore, FDiv, DFG };

// "umegaki", "renyi", "sandwiched", "sandwiched-core", "fdiv", "dfg".
std::optional<DivergenceTag> parse_divergence_tag(const std::string& s);
std::string to_string(DivergenceTag tag);

// A divergence with its parameters bound, evaluated on pairs of densities.
struct DivergenceSpec {
  DivergenceTag tag = DivergenceTag::Sandwiched;
  double alpha = 2.0;
  std::optional<ScalarFunctionSpec> f;  // fdiv, dfg
  std::optional<ScalarFunctionSpec> g;  // dfg

  // Throws DomainError for a missing alpha/f/g.
  void validate() const;
  ExtendedReal evaluate(const DensityOperator& A, const DensityOperator& B) const;
  std::string describe() const;
};

struct InvarianceWitness {
  std::size_t sample = 0;
  ComplexMatrix A;
  ComplexMatrix B;
  ExtendedReal before;
  ExtendedReal after;
  double deviation = 0.0;  // +inf for an infinity mismatch
};

struct InvarianceReport {
  std::size_t samples = 0;
  double max_abs_deviation = 0.0;  // over pairs finite on both sides
  std::size_t infinity_mismatches = 0;
  std::optional<InvarianceWitness> witness;  // the worst offending pair, if any
  bool passed() const noexcept { return !witness; }
};

// Samples density pairs and compares D(A||B) with D(map(A)||map(B)).
// Pair k draws from seed derive_seed(seed, k); ranks cycle full, rank-one,
// intermediate. Tabulated maps compare all ordered pairs of table entries
// (up to n_samples). A finite value against +inf counts as a mismatch.
// Throws ValidationError when a map output is not a density.
InvarianceReport check_invariance(const StateMap& map, const DivergenceSpec& divergence,
                                  std::size_t n_samples, std::uint64_t seed, double tol);

struct ConjugationReport {
  std::size_t samples = 0;
  double max_deviation = 0.0;
  bool passed = true;  // max_deviation <= tol
};

// max over sampled densities of ||map(A) - U A U*||_F, or U conj(A) U* when antiunitary.
ConjugationReport verify_conjugation(const StateMap& map, const ComplexMatrix& U, bool antiunitary,
                                     std::size_t n_samples, std::uint64_t seed, double tol);

// d_fg(A, B) <= 1e-10. Requires f -> 0 at 0+, g injective and g(0) = 0.
bool orthogonality_indicator(const DensityOperator& A, const DensityOperator& B,
                             const ScalarFunctionSpec& f, const ScalarFunctionSpec& g);

}  // namespace qdiv
