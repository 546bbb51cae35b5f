#pragma once

#include "qdiv/state_map.hpp"
#include "qdiv/types.hpp"

#include <string>
#include <vector>

namespace qdiv {

// A rank-one projection with a short label ("E1", "F2", "G").
struct LabeledProjection {
  std::string label;
  ComplexMatrix projection;
};

// The probe inputs: E_i = e_i e_i* (i = 1..n), F_j for (e_1 + e_j)/sqrt2
// (j = 2..n) and G for (e_1 + i e_2)/sqrt2 (n >= 2), in that order.
std::vector<LabeledProjection> wigner_probe_inputs(int n);

// The probe inputs pushed through a map, labels kept.
std::vector<LabeledProjection> wigner_images(const StateMap& map);

struct WignerReconstruction {
  ComplexMatrix unitary;
  bool antiunitary = false;
  double residual = 0.0;  // max ||conj(U, P) - image||_F over the probes
};

// Recovers U (and whether the map is U o K) from the images of the probe
// inputs, given in wigner_probe_inputs order. The first nonzero entry of U's
// first column is made real positive.
// Throws ValidationError when an image is not a rank-one projection (1e-8) or
// the count is wrong, and NoRepresentationError naming the first pair whose
// transition probability tr PQ changed by more than 1e-8.
WignerReconstruction wigner_reconstruct(const std::vector<LabeledProjection>& images);

}  // namespace qdiv
