#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wskit/rational.hpp"

namespace wskit {

enum class GeomError {
    TooFewVertices,
    DuplicateVertex,
    CollinearVertices,
    SelfIntersecting,
    NotMonotone,
    PointOutside,
    NotVisible,
    KOutOfRange,
    NonPositiveEps,
    DegenerateRegion,
    NoHit,
};

class GeometryError : public std::runtime_error {
public:
    GeometryError(GeomError code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    GeomError code() const { return code_; }

private:
    GeomError code_;
};

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
    /// Lexicographic (x, y); used for canonical sorting and dedup only.
    friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
        if (auto c = a.x <=> b.x; c != std::strong_ordering::equal) return c;
        return a.y <=> b.y;
    }
    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

struct Segment {
    Point a;
    Point b;

    bool degenerate() const { return a == b; }
    friend bool operator==(const Segment&, const Segment&) = default;
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

Orientation orientation(const Point& p, const Point& q, const Point& r);
Rational cross(const Point& p, const Point& q, const Point& r);
Rational dot(const Point& o, const Point& u, const Point& v);
Rational squared_distance(const Point& a, const Point& b);
Rational squared_length(const Segment& s);
Point midpoint(const Point& a, const Point& b);

/// True iff q lies on the closed segment [a, b].
bool on_segment(const Point& a, const Point& b, const Point& q);

struct SegDisjoint {};
struct SegPoint { Point p; };
struct SegOverlap { Segment s; };
using SegIntersection = std::variant<SegDisjoint, SegPoint, SegOverlap>;

/// Closed-set intersection: shared endpoints count, collinear overlap
/// returns the shared subsegment.
SegIntersection segments_intersect(const Segment& s1, const Segment& s2);
bool segments_touch(const Segment& s1, const Segment& s2);

/// Simple polygon with CCW vertex order. Use validate_polygon to build.
class Polygon {
public:
    Polygon() = default;

    const std::vector<Point>& vertices() const { return verts_; }
    size_t size() const { return verts_.size(); }
    const Point& vertex(size_t i) const { return verts_[i % verts_.size()]; }
    Segment edge(size_t i) const {
        return Segment{verts_[i % verts_.size()], verts_[(i + 1) % verts_.size()]};
    }
    Rational signed_area2() const;  // twice the signed area

    friend Polygon validate_polygon(std::vector<Point> raw, bool allow_collinear);
    /// Builds without validation; for internal use where simplicity is known.
    static Polygon unchecked(std::vector<Point> verts) {
        Polygon p;
        p.verts_ = std::move(verts);
        return p;
    }

private:
    std::vector<Point> verts_;
};

/// Checks simplicity and vertex sanity; reverses CW input to CCW.
Polygon validate_polygon(std::vector<Point> raw, bool allow_collinear = false);

/// Point on the boundary, addressed as edge index plus parameter t in [0,1).
/// Canonical form: a vertex is (edge_index, 0); t = 1 is normalized away.
struct BoundaryPoint {
    size_t edge_index = 0;
    Rational t;
    Point coords;

    friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) {
        return a.edge_index == b.edge_index && a.t == b.t;
    }
    friend std::strong_ordering operator<=>(const BoundaryPoint& a, const BoundaryPoint& b) {
        if (auto c = a.edge_index <=> b.edge_index; c != std::strong_ordering::equal) return c;
        return a.t <=> b.t;
    }
};

/// Locates p on the boundary of P, if it is there.
std::optional<BoundaryPoint> locate_on_boundary(const Polygon& P, const Point& p);

enum class PointLocation { Interior, Boundary, Exterior };

PointLocation point_in_polygon(const Polygon& P, const Point& p);

bool is_x_monotone(const Polygon& P);
std::vector<size_t> reflex_vertices(const Polygon& P);

/// True iff the closed segment lies entirely inside the closed polygon.
bool segment_inside(const Polygon& P, const Segment& s);

/// Exit point of the maximal stretch [origin, result] contained in P along
/// direction dir. Returns origin itself (located on the boundary) when the
/// ray leaves P immediately. Throws NoHit if origin is outside P.
BoundaryPoint ray_shoot(const Polygon& P, const Point& origin, const Point& dir);

}  // namespace wskit
