#pragma once

#include "qdiv/types.hpp"

#include <utility>
#include <variant>
#include <vector>

namespace qdiv {

struct UnitaryConjugation {
  ComplexMatrix unitary;
};

// A -> U conj(A) U*: the antiunitary U o K with K entrywise conjugation.
struct AntiunitaryConjugation {
  ComplexMatrix unitary;
};

struct KrausChannel {
  std::vector<ComplexMatrix> operators;
};

// Explicit input -> output pairs; inputs are matched by Frobenius distance.
struct TabulatedMap {
  std::vector<std::pair<ComplexMatrix, ComplexMatrix>> pairs;
};

// A transformation of density operators.
class StateMap {
 public:
  using Kind = std::variant<UnitaryConjugation, AntiunitaryConjugation, KrausChannel, TabulatedMap>;

  // Validates unitarity (1e-10) or Kraus completeness sum K*K = I (1e-10).
  explicit StateMap(Kind kind);

  static StateMap unitary(ComplexMatrix U);
  static StateMap antiunitary(ComplexMatrix U);
  static StateMap kraus(std::vector<ComplexMatrix> ops);
  static StateMap tabulated(std::vector<std::pair<ComplexMatrix, ComplexMatrix>> pairs);
  static StateMap identity(int n);
  // A -> A^T, the antiunitary with identity unitary part (on Hermitian input).
  static StateMap transpose(int n);
  // A -> (1-p) A + p tr(A) I/2 on a qubit, via the Pauli Kraus form.
  static StateMap depolarizing_qubit(double p);

  ComplexMatrix apply(const ComplexMatrix& A) const;
  int dim() const noexcept { return dim_; }
  const Kind& kind() const noexcept { return kind_; }
  bool is_tabulated() const noexcept { return std::holds_alternative<TabulatedMap>(kind_); }

  // this o other: first other, then this. Defined for the conjugation kinds.
  StateMap compose(const StateMap& other) const;

 private:
  Kind kind_;
  int dim_ = 0;
};

}  // namespace qdiv
