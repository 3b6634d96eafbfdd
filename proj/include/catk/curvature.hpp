#pragma once

#include <cmath>

namespace catk {

inline constexpr double kDefaultTolerance = 1e-9;

enum class Regime { Positive, Zero, Negative };

const char* to_string(Regime r) noexcept;

// Signed curvature K with kappa = sqrt|K|.
//
// The trigonometric helpers dispatch on the regime: cos_k(r) is cos(kappa r)
// or cosh(kappa r), sin_k(r) is sin(kappa r) or sinh(kappa r). A product
// sin_k(r) * sin_k(s) picks up the factor sign() when a formula written for
// the sphere is carried over to the hyperbolic case.
class Curvature {
 public:
  explicit Curvature(double K);

  double K() const noexcept { return K_; }
  double kappa() const noexcept { return kappa_; }
  Regime regime() const noexcept { return regime_; }
  bool positive() const noexcept { return regime_ == Regime::Positive; }
  bool negative() const noexcept { return regime_ == Regime::Negative; }
  bool zero() const noexcept { return regime_ == Regime::Zero; }

  // +1 for K>0, -1 for K<0, 0 for K=0.
  double sign() const noexcept {
    return positive() ? 1.0 : (negative() ? -1.0 : 0.0);
  }

  double cos_k(double r) const noexcept {
    return positive() ? std::cos(kappa_ * r) : std::cosh(kappa_ * r);
  }
  double sin_k(double r) const noexcept {
    return positive() ? std::sin(kappa_ * r) : std::sinh(kappa_ * r);
  }

  // pi/kappa for K>0, +infinity otherwise.
  double diameter_bound() const noexcept;

  friend bool operator==(const Curvature& a, const Curvature& b) noexcept {
    return a.K_ == b.K_;
  }

 private:
  double K_;
  double kappa_;
  Regime regime_;
};

}  // namespace catk
