// SPDX-License-Identifier: Apache-2.0

// Planar polygon helpers on chromaticity coordinates.

#pragma once

#include <array>
#include <span>
#include <vector>

#include "puspec/colorimetry.hpp"

namespace puspec::geometry {

using Point = Chromaticity;

double cross(const Point& o, const Point& a, const Point& b);

/// Shoelace area; positive for counter-clockwise vertex order.
double signed_area(std::span<const Point> polygon);
double area(std::span<const Point> polygon);

double distance_to_segment(const Point& p, const Point& a, const Point& b);
double distance_to_boundary(std::span<const Point> polygon, const Point& p);

/// Even-odd rule. Points within `tolerance` of an edge count as inside.
bool contains(std::span<const Point> polygon, const Point& p, double tolerance = 0.0);

/// Barycentric coordinates of `p` with respect to triangle (a, b, c).
std::array<double, 3> barycentric(const Point& a, const Point& b, const Point& c, const Point& p);

/// Sutherland-Hodgman: clips an arbitrary simple polygon against a convex one.
std::vector<Point> clip_convex(std::span<const Point> subject, std::span<const Point> convex_clip);

/// True when no two non-adjacent edges intersect.
bool is_simple(std::span<const Point> polygon);

/// Counter-clockwise convex hull (monotone chain), collinear points dropped.
std::vector<Point> convex_hull(std::span<const Point> points);

/// Same, returning indices into `points`.
std::vector<std::size_t> convex_hull_indices(std::span<const Point> points);

std::vector<Point> counter_clockwise(std::span<const Point> polygon);

}  // namespace puspec::geometry
