#include "wskit/geometry.hpp"

#include <algorithm>

namespace wskit {

Rational cross(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    int s = cross(p, q, r).sign();
    if (s > 0) return Orientation::CCW;
    if (s < 0) return Orientation::CW;
    return Orientation::Collinear;
}

Rational dot(const Point& o, const Point& u, const Point& v) {
    return (u.x - o.x) * (v.x - o.x) + (u.y - o.y) * (v.y - o.y);
}

Rational squared_distance(const Point& a, const Point& b) {
    Rational dx = b.x - a.x, dy = b.y - a.y;
    return dx * dx + dy * dy;
}

Rational squared_length(const Segment& s) { return squared_distance(s.a, s.b); }

Point midpoint(const Point& a, const Point& b) {
    Rational half(1, 2);
    return Point{(a.x + b.x) * half, (a.y + b.y) * half};
}

bool on_segment(const Point& a, const Point& b, const Point& q) {
    if (orientation(a, b, q) != Orientation::Collinear) return false;
    return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

namespace {

// Parameter of q on segment [a,b]; q must lie on the segment's line.
Rational segment_param(const Point& a, const Point& b, const Point& q) {
    if (a.x != b.x) return (q.x - a.x) / (b.x - a.x);
    return (q.y - a.y) / (b.y - a.y);
}

}  // namespace

SegIntersection segments_intersect(const Segment& s1, const Segment& s2) {
    const Point &p = s1.a, &q = s1.b, &r = s2.a, &s = s2.b;
    Rational d = (q.x - p.x) * (s.y - r.y) - (q.y - p.y) * (s.x - r.x);
    if (!d.is_zero()) {
        // Lines cross in a single point: solve for both parameters.
        Rational t = ((r.x - p.x) * (s.y - r.y) - (r.y - p.y) * (s.x - r.x)) / d;
        Rational u = ((r.x - p.x) * (q.y - p.y) - (r.y - p.y) * (q.x - p.x)) / d;
        if (t < 0 || t > 1 || u < 0 || u > 1) return SegDisjoint{};
        return SegPoint{Point{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)}};
    }
    // Parallel. Distinct lines cannot touch.
    if (orientation(p, q, r) != Orientation::Collinear) return SegDisjoint{};
    if (s1.degenerate() && s2.degenerate())
        return p == r ? SegIntersection(SegPoint{p}) : SegIntersection(SegDisjoint{});
    // Collinear: overlap is an interval in either segment's parameter space.
    const Segment& base = s1.degenerate() ? s2 : s1;
    auto par = [&](const Point& z) { return segment_param(base.a, base.b, z); };
    Rational lo1 = std::min(par(s1.a), par(s1.b)), hi1 = std::max(par(s1.a), par(s1.b));
    Rational lo2 = std::min(par(s2.a), par(s2.b)), hi2 = std::max(par(s2.a), par(s2.b));
    Rational lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo > hi) return SegDisjoint{};
    auto at = [&](const Rational& t) {
        return Point{base.a.x + t * (base.b.x - base.a.x),
                     base.a.y + t * (base.b.y - base.a.y)};
    };
    if (lo == hi) return SegPoint{at(lo)};
    return SegOverlap{Segment{at(lo), at(hi)}};
}

bool segments_touch(const Segment& s1, const Segment& s2) {
    return !std::holds_alternative<SegDisjoint>(segments_intersect(s1, s2));
}

Rational Polygon::signed_area2() const {
    Rational acc(0);
    for (size_t i = 0; i < verts_.size(); ++i) {
        const Point& a = verts_[i];
        const Point& b = verts_[(i + 1) % verts_.size()];
        acc += a.x * b.y - b.x * a.y;
    }
    return acc;
}

Polygon validate_polygon(std::vector<Point> raw, bool allow_collinear) {
    size_t n = raw.size();
    if (n < 3) throw GeometryError(GeomError::TooFewVertices, "polygon needs >= 3 vertices");
    for (size_t i = 0; i < n; ++i) {
        if (raw[i] == raw[(i + 1) % n])
            throw GeometryError(GeomError::DuplicateVertex,
                                "consecutive duplicate vertex at index " + std::to_string(i));
    }
    if (!allow_collinear) {
        for (size_t i = 0; i < n; ++i) {
            const Point& prev = raw[(i + n - 1) % n];
            const Point& next = raw[(i + 1) % n];
            if (orientation(prev, raw[i], next) == Orientation::Collinear)
                throw GeometryError(GeomError::CollinearVertices,
                                    "collinear vertices at index " + std::to_string(i));
        }
    }
    for (size_t i = 0; i < n; ++i) {
        Segment ei{raw[i], raw[(i + 1) % n]};
        for (size_t j = i + 1; j < n; ++j) {
            Segment ej{raw[j], raw[(j + 1) % n]};
            auto x = segments_intersect(ei, ej);
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                Point shared = (j == i + 1) ? raw[j] : raw[0];
                if (auto* pp = std::get_if<SegPoint>(&x); pp && pp->p == shared) continue;
                throw GeometryError(GeomError::SelfIntersecting,
                                    "adjacent edges overlap near vertex " + std::to_string(j));
            }
            if (!std::holds_alternative<SegDisjoint>(x))
                throw GeometryError(GeomError::SelfIntersecting,
                                    "edges " + std::to_string(i) + " and " + std::to_string(j) +
                                        " intersect");
        }
    }
    Polygon P = Polygon::unchecked(std::move(raw));
    if (P.signed_area2().sign() < 0) {
        std::vector<Point> rev(P.vertices().rbegin(), P.vertices().rend());
        P = Polygon::unchecked(std::move(rev));
    }
    return P;
}

std::optional<BoundaryPoint> locate_on_boundary(const Polygon& P, const Point& p) {
    size_t n = P.size();
    for (size_t i = 0; i < n; ++i) {
        Segment e = P.edge(i);
        if (on_segment(e.a, e.b, p)) {
            Rational t = segment_param(e.a, e.b, p);
            if (t == Rational(1)) return BoundaryPoint{(i + 1) % n, Rational(0), p};
            return BoundaryPoint{i, t, p};
        }
    }
    return std::nullopt;
}

PointLocation point_in_polygon(const Polygon& P, const Point& p) {
    size_t n = P.size();
    for (size_t i = 0; i < n; ++i) {
        Segment e = P.edge(i);
        if (on_segment(e.a, e.b, p)) return PointLocation::Boundary;
    }
    // Crossing number against the ray x > p.x at height p.y.
    int crossings = 0;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = P.vertex(i);
        const Point& b = P.vertex(i + 1);
        bool a_above = a.y > p.y;
        bool b_above = b.y > p.y;
        if (a_above == b_above) continue;
        Rational x_int = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (x_int > p.x) ++crossings;
    }
    return (crossings % 2 == 1) ? PointLocation::Interior : PointLocation::Exterior;
}

bool is_x_monotone(const Polygon& P) {
    size_t n = P.size();
    size_t imin = 0, imax = 0;
    for (size_t i = 1; i < n; ++i) {
        if (P.vertex(i).x < P.vertex(imin).x) imin = i;
        if (P.vertex(i).x > P.vertex(imax).x) imax = i;
    }
    for (size_t i = imin; i % n != imax; ++i) {
        if (P.vertex(i + 1).x < P.vertex(i).x) return false;
    }
    for (size_t i = imax; i % n != imin; ++i) {
        if (P.vertex(i + 1).x > P.vertex(i).x) return false;
    }
    return true;
}

std::vector<size_t> reflex_vertices(const Polygon& P) {
    std::vector<size_t> out;
    size_t n = P.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& prev = P.vertex((i + n - 1) % n);
        const Point& next = P.vertex(i + 1);
        if (orientation(prev, P.vertex(i), next) == Orientation::CW) out.push_back(i);
    }
    return out;
}

namespace {

Point point_at(const Point& a, const Point& b, const Rational& t) {
    return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

}  // namespace

bool segment_inside(const Polygon& P, const Segment& s) {
    if (point_in_polygon(P, s.a) == PointLocation::Exterior) return false;
    if (s.degenerate()) return true;
    if (point_in_polygon(P, s.b) == PointLocation::Exterior) return false;

    // Boundary-touch parameters split s into pieces that are entirely
    // interior or entirely exterior; probe each piece at its midpoint.
    std::vector<Rational> ts{Rational(0), Rational(1)};
    for (size_t i = 0; i < P.size(); ++i) {
        auto x = segments_intersect(s, P.edge(i));
        if (auto* pp = std::get_if<SegPoint>(&x)) {
            ts.push_back(segment_param(s.a, s.b, pp->p));
        } else if (auto* ov = std::get_if<SegOverlap>(&x)) {
            ts.push_back(segment_param(s.a, s.b, ov->s.a));
            ts.push_back(segment_param(s.a, s.b, ov->s.b));
        }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    Rational half(1, 2);
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        Point mid = point_at(s.a, s.b, (ts[i] + ts[i + 1]) * half);
        if (point_in_polygon(P, mid) == PointLocation::Exterior) return false;
    }
    return true;
}

BoundaryPoint ray_shoot(const Polygon& P, const Point& origin, const Point& dir) {
    if (dir.x.is_zero() && dir.y.is_zero())
        throw std::invalid_argument("ray_shoot: zero direction");
    if (point_in_polygon(P, origin) == PointLocation::Exterior)
        throw GeometryError(GeomError::NoHit, "ray_shoot: origin outside polygon");

    // Boundary-touch parameters s >= 0 along origin + s*dir.
    std::vector<Rational> ss;
    for (size_t i = 0; i < P.size(); ++i) {
        Segment e = P.edge(i);
        Rational d = dir.x * (e.b.y - e.a.y) - dir.y * (e.b.x - e.a.x);
        if (!d.is_zero()) {
            Rational s = ((e.a.x - origin.x) * (e.b.y - e.a.y) -
                          (e.a.y - origin.y) * (e.b.x - e.a.x)) / d;
            Rational u = ((e.a.x - origin.x) * dir.y - (e.a.y - origin.y) * dir.x) / d;
            if (s >= 0 && u >= 0 && u <= 1) ss.push_back(s);
        } else if (cross(origin, Point{origin.x + dir.x, origin.y + dir.y}, e.a) == Rational(0)) {
            // Edge collinear with the ray: both endpoints are touch params.
            Rational den = dir.x * dir.x + dir.y * dir.y;
            for (const Point& z : {e.a, e.b}) {
                Rational s = ((z.x - origin.x) * dir.x + (z.y - origin.y) * dir.y) / den;
                if (s >= 0) ss.push_back(s);
            }
        }
    }
    ss.push_back(Rational(0));
    std::sort(ss.begin(), ss.end());
    ss.erase(std::unique(ss.begin(), ss.end()), ss.end());

    auto at = [&](const Rational& s) {
        return Point{origin.x + s * dir.x, origin.y + s * dir.y};
    };
    Rational half(1, 2);
    Rational stop = ss.back();
    for (size_t i = 0; i + 1 < ss.size(); ++i) {
        Point mid = at((ss[i] + ss[i + 1]) * half);
        if (point_in_polygon(P, mid) == PointLocation::Exterior) {
            stop = ss[i];
            break;
        }
    }
    Point exit_pt = at(stop);
    auto bp = locate_on_boundary(P, exit_pt);
    if (!bp)
        throw GeometryError(GeomError::NoHit, "ray_shoot: exit point not on boundary");
    return *bp;
}

}  // namespace wskit
