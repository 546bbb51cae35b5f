#include "qdiv/state_map.hpp"

#include "qdiv/linalg.hpp"

#include <cmath>
#include <string>

namespace qdiv {

namespace {

constexpr double kStructureTolerance = 1e-10;
constexpr double kTableMatchTolerance = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_unitary(const ComplexMatrix& U, const char* what) {
  require_square(U, what);
  if (unitarity_defect(U) > kStructureTolerance) {
    throw ValidationError(std::string(what) + ": matrix is not unitary");
  }
}

}  // namespace

StateMap::StateMap(Kind kind) : kind_(std::move(kind)) {
  std::visit(Overloaded{
                 [&](const UnitaryConjugation& k) {
                   require_unitary(k.unitary, "unitary conjugation");
                   dim_ = static_cast<int>(k.unitary.rows());
                 },
                 [&](const AntiunitaryConjugation& k) {
                   require_unitary(k.unitary, "antiunitary conjugation");
                   dim_ = static_cast<int>(k.unitary.rows());
                 },
                 [&](const KrausChannel& k) {
                   if (k.operators.empty()) throw ValidationError("Kraus channel: no operators");
                   const auto n = k.operators.front().rows();
                   ComplexMatrix sum = ComplexMatrix::Zero(n, n);
                   for (const auto& K : k.operators) {
                     require_square(K, "Kraus operator");
                     if (K.rows() != n) throw DimensionError("Kraus operators differ in size");
                     sum += K.adjoint() * K;
                   }
                   if ((sum - ComplexMatrix::Identity(n, n)).norm() > kStructureTolerance) {
                     throw ValidationError("Kraus channel: sum K*K != I");
                   }
                   dim_ = static_cast<int>(n);
                 },
                 [&](const TabulatedMap& k) {
                   if (k.pairs.empty()) throw ValidationError("tabulated map: no entries");
                   const auto n = k.pairs.front().first.rows();
                   for (const auto& [in, out] : k.pairs) {
                     require_same_dim(in, out, "tabulated map");
                     if (in.rows() != n) throw DimensionError("tabulated map: mixed dimensions");
                   }
                   dim_ = static_cast<int>(n);
                 },
             },
             kind_);
}

StateMap StateMap::unitary(ComplexMatrix U) { return StateMap(UnitaryConjugation{std::move(U)}); }

StateMap StateMap::antiunitary(ComplexMatrix U) {
  return StateMap(AntiunitaryConjugation{std::move(U)});
}

StateMap StateMap::kraus(std::vector<ComplexMatrix> ops) {
  return StateMap(KrausChannel{std::move(ops)});
}

StateMap StateMap::tabulated(std::vector<std::pair<ComplexMatrix, ComplexMatrix>> pairs) {
  return StateMap(TabulatedMap{std::move(pairs)});
}

StateMap StateMap::identity(int n) { return unitary(ComplexMatrix::Identity(n, n)); }

StateMap StateMap::transpose(int n) { return antiunitary(ComplexMatrix::Identity(n, n)); }

StateMap StateMap::depolarizing_qubit(double p) {
  if (p < 0.0 || p > 1.0) throw ValidationError("depolarizing probability must be in [0, 1]");
  const Complex i{0.0, 1.0};
  ComplexMatrix I = ComplexMatrix::Identity(2, 2);
  ComplexMatrix X(2, 2), Y(2, 2), Z(2, 2);
  X << 0.0, 1.0, 1.0, 0.0;
  Y << 0.0, -i, i, 0.0;
  Z << 1.0, 0.0, 0.0, -1.0;
  const double keep = std::sqrt(1.0 - 0.75 * p);
  const double flip = std::sqrt(0.25 * p);
  return kraus({keep * I, flip * X, flip * Y, flip * Z});
}

ComplexMatrix StateMap::apply(const ComplexMatrix& A) const {
  if (A.rows() != dim_ || A.cols() != dim_) {
    throw DimensionError("StateMap::apply: expected dimension " + std::to_string(dim_));
  }
  return std::visit(Overloaded{
                        [&](const UnitaryConjugation& k) -> ComplexMatrix {
                          return conjugate_by(k.unitary, A, false);
                        },
                        [&](const AntiunitaryConjugation& k) -> ComplexMatrix {
                          return conjugate_by(k.unitary, A, true);
                        },
                        [&](const KrausChannel& k) -> ComplexMatrix {
                          ComplexMatrix out = ComplexMatrix::Zero(dim_, dim_);
                          for (const auto& K : k.operators) out += K * A * K.adjoint();
                          return out;
                        },
                        [&](const TabulatedMap& k) -> ComplexMatrix {
                          for (const auto& [in, out] : k.pairs) {
                            if ((in - A).norm() <= kTableMatchTolerance) return out;
                          }
                          throw ValidationError("tabulated map: input not in the table");
                        },
                    },
                    kind_);
}

StateMap StateMap::compose(const StateMap& other) const {
  if (dim_ != other.dim_) throw DimensionError("StateMap::compose: dimension mismatch");
  const auto conj_part = [](const Kind& k, bool& anti) -> const ComplexMatrix* {
    if (const auto* u = std::get_if<UnitaryConjugation>(&k)) {
      anti = false;
      return &u->unitary;
    }
    if (const auto* a = std::get_if<AntiunitaryConjugation>(&k)) {
      anti = true;
      return &a->unitary;
    }
    return nullptr;
  };
  bool anti_outer = false;
  bool anti_inner = false;
  const ComplexMatrix* outer = conj_part(kind_, anti_outer);
  const ComplexMatrix* inner = conj_part(other.kind_, anti_inner);
  if (!outer || !inner) throw ValidationError("StateMap::compose: only conjugation maps compose");
  // (U1 K^a)(U2 K^b) = U1 (K^a U2 K^a) K^{a+b}, and K U K = conj(U).
  const ComplexMatrix U = *outer * (anti_outer ? inner->conjugate().eval() : *inner);
  return (anti_outer != anti_inner) ? antiunitary(U) : unitary(U);
}

}  // namespace qdiv
