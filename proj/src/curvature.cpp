#include "catk/curvature.hpp"

#include <limits>
#include <numbers>

#include "catk/error.hpp"

namespace catk {

Curvature::Curvature(double K) : K_(K), kappa_(std::sqrt(std::abs(K))) {
  if (!std::isfinite(K)) throw Error(ErrorKind::Usage, "curvature must be finite");
  regime_ = K > 0 ? Regime::Positive : (K < 0 ? Regime::Negative : Regime::Zero);
}

double Curvature::diameter_bound() const noexcept {
  return positive() ? std::numbers::pi / kappa_ : std::numeric_limits<double>::infinity();
}

const char* to_string(Regime r) noexcept {
  switch (r) {
    case Regime::Positive: return "positive";
    case Regime::Zero: return "zero";
    case Regime::Negative: return "negative";
  }
  return "unknown";
}

}  // namespace catk
