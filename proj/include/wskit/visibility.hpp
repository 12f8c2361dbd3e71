#pragma once

#include <vector>

#include "wskit/geometry.hpp"

namespace wskit {

struct WindowLabel {
    Point base;  // endpoint closer to the source
    Point end;
};

struct EdgeLabel {
    bool primary = false;
    WindowLabel window;  // meaningful when !primary
};

/// Visibility region of a point: a star-shaped simple polygon plus the
/// degenerate one-dimensional pieces (polygonal arms) hanging off it.
struct VisibilityRegion {
    Point source;
    Polygon region;
    std::vector<Segment> arms;  // arm.a = attachment on the region boundary
};

/// Exact visibility region via an angular sweep around p.
/// Throws PointOutside when p is not in the closed polygon.
VisibilityRegion visibility_region(const Polygon& P, const Point& p);

struct EdgeClassification {
    std::vector<EdgeLabel> labels;    // one per region edge
    Rational min_pr_squared;          // squared length of the shortest primary edge
};

EdgeClassification classify_edges(const VisibilityRegion& v, const Polygon& P);

/// True iff a and b see each other in the closed polygon.
bool visible(const Polygon& P, const Point& a, const Point& b);

/// Canonical form for comparing region polygons: rotates the vertex list to
/// start at the lexicographically smallest vertex.
std::vector<Point> normalize_cycle(const std::vector<Point>& cycle);

}  // namespace wskit
