#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gxp/cuts.hpp"
#include "gxp/rational.hpp"
#include "json.hpp"

namespace gxp {

// Machine-checkable evidence that a graph meets an expansion threshold.
// Exact certificates carry the minimizing cut; spectral ones carry the
// eigenvalue estimate and its residual. `value` is always a conservative
// rational lower bound usable in exact comparisons.
struct Certificate {
  enum class Kind { exact, spectral };
  Kind kind = Kind::exact;
  Rat value{0};                    // certified lower bound (phi_X, h, or phi)
  double value_float = 0.0;        // spectral: the float bound before flooring
  double spectral_estimate = 0.0;  // sigma2 or lambda2 estimate
  double residual = 0.0;
  std::optional<Cut> witness;      // exact: a minimizing cut
  bool meets_target = false;
  Rat target{0};

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["kind"] = kind == Kind::exact ? "exact" : "spectral";
    if (kind == Kind::exact) {
      j["value_num"] = value.numerator();
      j["value_den"] = value.denominator();
      if (witness) j["witness_cut"] = witness->side;
    } else {
      j["value_float"] = value_float;
      j["spectral_estimate"] = spectral_estimate;
      j["residual"] = residual;
    }
    j["meets_target"] = meets_target;
    j["target"] = to_string(target);
    return j;
  }
};

}  // namespace gxp
