// SPDX-License-Identifier: Apache-2.0

// One-to-many mapping from a target color to its equivalence class of
// bounded basis weights.
//
// A chromaticity c inside the basis gamut is written in generalized
// homogeneous barycentric coordinates a over the basis chromaticities b_k.
// Choosing an enclosing triangle T splits a into three triangle coordinates
// and K - 3 free coordinates a_F; every a_F inside a polytope given by
// 0 <= a_T - M a_F <= 1 (M = T^-1 F) reaches c. Each a maps to a ray of
// weights w whose scale is fixed by the target luminance.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "puspec/colorimetry.hpp"
#include "puspec/pu_basis.hpp"
#include "puspec/random.hpp"

namespace puspec {

inline constexpr double kTriangleTolerance = 1e-9;
inline constexpr double kChromaticityTolerance = 1e-6;
inline constexpr double kLuminanceTolerance = 1e-6;
inline constexpr double kLpTolerance = 1e-9;

struct ColorTarget {
  Chromaticity c;
  double luminance = 0.0;
};

using IndexTriple = std::array<int, 3>;

enum class GamutLocation { inside, boundary, outside };

/// Position of `c` relative to the region reachable by the basis (the convex
/// hull of its chromaticities).
GamutLocation locate_in_gamut(const PUBasis& basis, const Chromaticity& c);

/// All basis triples whose chromaticity triangle contains `c`, ordered by
/// decreasing area. Throws out_of_gamut / boundary_singular.
std::vector<IndexTriple> enclosing_triangles(const PUBasis& basis, const Chromaticity& c);

struct TriangleDecomposition {
  IndexTriple indices{};
  std::vector<int> free_indices;  // remaining bases, ascending
  Eigen::Matrix3d T;
  Eigen::Matrix<double, 3, Eigen::Dynamic> F;
  Eigen::Matrix<double, 3, Eigen::Dynamic> M;  // T^-1 F
  Eigen::Vector3d a_T;

  int dof_count() const { return static_cast<int>(free_indices.size()); }
};

TriangleDecomposition decompose(const PUBasis& basis, const IndexTriple& triple,
                                const Chromaticity& c);

/// Largest admissible value of free coordinate `n` with the others fixed at
/// `a_F` (the value at `n` itself is ignored). Never negative.
double dof_upper_bound(const TriangleDecomposition& d, std::span<const double> a_F, int n);

enum class DofOrder { random_permutation, sequential };

/// Draws free coordinates one at a time, each uniform on [0, bound].
std::vector<double> sample_dof(const TriangleDecomposition& d, Rng& rng,
                               DofOrder order = DofOrder::random_permutation);

/// Full barycentric vector (basis order) for the given free coordinates.
std::vector<double> bary_from_dof(const TriangleDecomposition& d, std::span<const double> a_F);

struct LuminanceLine {
  std::vector<double> direction;  // L, with L[pivot] = 1
  double w0_max = 0.0;
  int pivot = 0;

  std::vector<double> at(double w0) const;
};

LuminanceLine weights_from_bary(const PUBasis& basis, std::span<const double> a);

struct LuminanceResult {
  std::vector<double> w;
  double achieved_luminance = 0.0;
  bool luminance_met = false;
  bool scaled = false;
};

/// Picks the point on the weight line that hits `luminance`, or, when the
/// line cannot reach it inside [0, 1]^K, the post-scaled maximum.
LuminanceResult achieve_luminance(const PUBasis& basis, const LuminanceLine& line,
                                  double luminance);

/// w maximizing w.B_Y subject to 0 <= w <= 1 and chromaticity(w) = c.
std::vector<double> max_luminance_weights(const PUBasis& basis, const Chromaticity& c);

struct FeasibilityReport {
  bool feasible = false;
  bool conservative = true;
  std::vector<double> max_luminance_weights;
  double max_luminance = 0.0;     // w̄.B_Y
  double scaled_luminance = 0.0;  // luminance after post-scaling w̄
};

FeasibilityReport feasibility_check(const PUBasis& basis, const ColorTarget& target);

struct ClassSample {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  IndexTriple triangle{};
  std::vector<double> a_F;
  std::vector<double> a;
  std::vector<double> w;
  double achieved_luminance = 0.0;
  bool luminance_met = false;
  bool scaled = false;
  bool boundary = false;  // unique two-basis solution, triangle[2] == -1
};

enum class TrianglePolicy { first, random_per_sample, fixed_index };

struct SamplingOptions {
  TrianglePolicy policy = TrianglePolicy::first;
  int fixed_index = 0;
  DofOrder order = DofOrder::random_permutation;
  unsigned threads = 0;  // 0: hardware concurrency for large batches
};

/// Unique solution for a target on the gamut boundary.
ClassSample boundary_solution(const PUBasis& basis, const ColorTarget& target);

/// `count` members of the equivalence class of `target`. Sample i draws from
/// Rng::for_stream(seed, i), so results do not depend on threading. Targets
/// on the gamut boundary yield the single boundary solution.
std::vector<ClassSample> sample_class(const PUBasis& basis, const ColorTarget& target,
                                      std::size_t count, std::uint64_t seed,
                                      const SamplingOptions& options = {});

}  // namespace puspec
