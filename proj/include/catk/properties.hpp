#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "catk/curvature.hpp"
#include "catk/model_point.hpp"

namespace catk {

enum class PropertyCheck {
  Bound,          // |cosq| <= 1 on all twelve pairings of a random quadruple
  Halving,        // cosq unchanged when both bound vectors are halved
  EulerEquality,  // quadrangle equality on a random convex quadrangle
  Transport,      // cosq equals the reflection/angle oracle
};

const char* to_string(PropertyCheck c) noexcept;
// Parses "bound", "halving", "euler-eq" or "transport".
PropertyCheck parse_property_check(const std::string& name);

struct TrialResult {
  double residual = 0.0;
  // The drawn configuration did not meet the check's precondition.
  bool skipped = false;
};

// Convex quadrangle A, B, C, D (in cyclic order) in the model plane with all
// vertices within max_radius of the origin. Drawn by rejection.
std::array<ModelPoint, 4> random_convex_quadrangle(const Curvature& c, std::uint64_t seed,
                                                   double max_radius);

// Default sampling cap for a check: pi/(2 kappa) for K>0, none otherwise.
std::optional<double> default_diam_cap(const Curvature& c);

// One randomized trial, fully determined by seed. Throws Error(Usage) when
// the check is not defined for the regime.
TrialResult run_property_trial(const Curvature& c, PropertyCheck check, std::uint64_t seed,
                               int dim = 3, std::optional<double> diam_cap = std::nullopt);

struct PropertyRun {
  int trials = 0;
  int skipped = 0;
  int failures = 0;
  double max_residual = 0.0;
  std::optional<std::uint64_t> first_failure_seed;
};

// Runs trials with seeds seed, seed+1, ..., seed+n-1.
PropertyRun run_property(const Curvature& c, PropertyCheck check, int n, std::uint64_t seed,
                         double tolerance, int dim = 3,
                         std::optional<double> diam_cap = std::nullopt);

}  // namespace catk
