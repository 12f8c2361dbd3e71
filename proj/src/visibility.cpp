#include "wskit/visibility.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace wskit {

namespace {

// Direction vectors are Points used as vectors from the sweep center.
Rational vcross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rational vdot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

bool same_direction(const Point& a, const Point& b) {
    return vcross(a, b).is_zero() && vdot(a, b).sign() > 0;
}

// 0 when d lies in the half-turn [ref, ref+pi), 1 otherwise.
int half_index(const Point& ref, const Point& d) {
    int c = vcross(ref, d).sign();
    if (c > 0) return 0;
    if (c < 0) return 1;
    return vdot(ref, d).sign() > 0 ? 0 : 1;
}

// Strict CCW angular order starting at ref.
bool angle_less(const Point& ref, const Point& a, const Point& b) {
    int ha = half_index(ref, a), hb = half_index(ref, b);
    if (ha != hb) return ha < hb;
    return vcross(a, b).sign() > 0;
}

struct Event {
    Point dir;
    bool from_vertex = false;
};

// Positive parameter of the first crossing of ray (p, dir) with edge e,
// ignoring edges parallel to the ray.
std::optional<Rational> ray_edge_param(const Point& p, const Point& dir, const Segment& e) {
    Point ab{e.b.x - e.a.x, e.b.y - e.a.y};
    Rational den = vcross(dir, ab);
    if (den.is_zero()) return std::nullopt;
    Point ap{e.a.x - p.x, e.a.y - p.y};
    Rational s = vcross(ap, ab) / den;
    Rational u = vcross(ap, dir) / den;
    if (s.sign() <= 0 || u < 0 || u > 1) return std::nullopt;
    return s;
}

Point ray_point(const Point& p, const Point& dir, const Rational& s) {
    return Point{p.x + s * dir.x, p.y + s * dir.y};
}

// Intersection of edge e's supporting line with ray (p, dir); requires
// non-parallel, which holds for a near edge spanning a wedge boundary.
Point clip_line_ray(const Point& p, const Point& dir, const Segment& e) {
    Point ab{e.b.x - e.a.x, e.b.y - e.a.y};
    Rational den = vcross(dir, ab);
    Point ap{e.a.x - p.x, e.a.y - p.y};
    Rational s = vcross(ap, ab) / den;
    return ray_point(p, dir, s);
}

}  // namespace

VisibilityRegion visibility_region(const Polygon& P, const Point& p) {
    if (point_in_polygon(P, p) == PointLocation::Exterior)
        throw GeometryError(GeomError::PointOutside, "visibility_region: point outside polygon");

    const size_t n = P.size();
    bool full_circle = true;
    bool p_is_vertex = false;
    Point dstart{Rational(1), Rational(0)}, dend{Rational(1), Rational(0)};

    if (auto bp = locate_on_boundary(P, p)) {
        full_circle = false;
        if (bp->t.is_zero()) {
            p_is_vertex = true;
            size_t i = bp->edge_index;
            const Point& nxt = P.vertex(i + 1);
            const Point& prv = P.vertex((i + n - 1) % n);
            dstart = Point{nxt.x - p.x, nxt.y - p.y};
            dend = Point{prv.x - p.x, prv.y - p.y};
        } else {
            Segment e = P.edge(bp->edge_index);
            dstart = Point{e.b.x - p.x, e.b.y - p.y};
            dend = Point{e.a.x - p.x, e.a.y - p.y};
        }
    }

    const Point ref = full_circle ? Point{Rational(1), Rational(0)} : dstart;
    auto in_cone = [&](const Point& d) {
        if (full_circle) return true;
        return !angle_less(ref, dend, d);  // position(d) <= position(dend)
    };

    std::vector<Event> events;
    auto add_event = [&](Point d, bool from_vertex) {
        if (d.x.is_zero() && d.y.is_zero()) return;
        if (!in_cone(d)) return;
        for (auto& ev : events) {
            if (same_direction(ev.dir, d)) {
                ev.from_vertex = ev.from_vertex || from_vertex;
                return;
            }
        }
        events.push_back(Event{std::move(d), from_vertex});
    };

    if (!full_circle) {
        add_event(dstart, false);
        add_event(dend, false);
    }
    for (size_t i = 0; i < n; ++i) {
        const Point& v = P.vertex(i);
        if (v == p) continue;
        add_event(Point{v.x - p.x, v.y - p.y}, true);
    }
    add_event(Point{Rational(1), Rational(0)}, false);
    add_event(Point{Rational(0), Rational(1)}, false);
    add_event(Point{Rational(-1), Rational(0)}, false);
    add_event(Point{Rational(0), Rational(-1)}, false);

    std::sort(events.begin(), events.end(),
              [&](const Event& a, const Event& b) { return angle_less(ref, a.dir, b.dir); });

    size_t wedge_count = full_circle ? events.size() : events.size() - 1;

    // Per-event clip points of the adjacent wedges' near edges; the farther
    // one is the region's reach along that event ray.
    std::vector<std::vector<Point>> reach(events.size());
    std::vector<Point> out;

    auto l1 = [](const Point& d) { return d.x.abs() + d.y.abs(); };

    for (size_t w = 0; w < wedge_count; ++w) {
        const Point& da = events[w].dir;
        const Point& db = events[(w + 1) % events.size()].dir;
        Rational la = l1(da), lb = l1(db);
        Point mid{da.x / la + db.x / lb, da.y / la + db.y / lb};

        std::optional<Rational> best;
        std::optional<Segment> near_edge;
        for (size_t i = 0; i < n; ++i) {
            Segment e = P.edge(i);
            auto s = ray_edge_param(p, mid, e);
            if (s && (!best || *s < *best)) {
                best = s;
                near_edge = e;
            }
        }
        if (!near_edge)
            throw GeometryError(GeomError::DegenerateRegion,
                                "visibility sweep: no edge hit inside wedge");
        Point ia = clip_line_ray(p, da, *near_edge);
        Point ib = clip_line_ray(p, db, *near_edge);
        reach[w].push_back(ia);
        reach[(w + 1) % events.size()].push_back(ib);
        if (out.empty() || !(out.back() == ia)) out.push_back(ia);
        if (!(out.back() == ib)) out.push_back(ib);
    }

    if (p_is_vertex) out.push_back(p);

    // Cyclic dedupe, then drop same-line subdivision points introduced by
    // the axis events.
    if (out.size() > 1 && out.front() == out.back()) out.pop_back();
    std::vector<Point> region;
    for (size_t i = 0; i < out.size(); ++i) {
        const Point& prev = out[(i + out.size() - 1) % out.size()];
        const Point& next = out[(i + 1) % out.size()];
        const Point& cur = out[i];
        if (orientation(prev, cur, next) == Orientation::Collinear &&
            dot(cur, prev, next).sign() < 0)
            continue;
        region.push_back(cur);
    }
    if (region.size() < 3)
        throw GeometryError(GeomError::DegenerateRegion, "visibility region degenerated");

    VisibilityRegion vr;
    vr.source = p;
    vr.region = Polygon::unchecked(std::move(region));

    // Arms: a visible stretch along an event ray extending strictly beyond
    // the two-dimensional region's reach.
    for (size_t k = 0; k < events.size(); ++k) {
        if (!events[k].from_vertex || reach[k].empty()) continue;
        const Point& d = events[k].dir;
        auto param = [&](const Point& z) { return vdot(Point{z.x - p.x, z.y - p.y}, d); };
        Point rho = reach[k][0];
        for (const Point& cand : reach[k])
            if (param(cand) > param(rho)) rho = cand;
        BoundaryPoint wend = ray_shoot(P, p, d);
        if (param(wend.coords) > param(rho))
            vr.arms.push_back(Segment{rho, wend.coords});
    }
    std::sort(vr.arms.begin(), vr.arms.end(), [](const Segment& a, const Segment& b) {
        if (a.a != b.a) return a.a < b.a;
        return a.b < b.b;
    });
    vr.arms.erase(std::unique(vr.arms.begin(), vr.arms.end()), vr.arms.end());
    return vr;
}

EdgeClassification classify_edges(const VisibilityRegion& v, const Polygon& P) {
    EdgeClassification out;
    const Polygon& R = v.region;
    bool have_primary = false;
    Rational best_sq(0);
    for (size_t i = 0; i < R.size(); ++i) {
        Segment e = R.edge(i);
        Point mid = midpoint(e.a, e.b);
        bool primary = point_in_polygon(P, e.a) == PointLocation::Boundary &&
                       point_in_polygon(P, e.b) == PointLocation::Boundary &&
                       point_in_polygon(P, mid) == PointLocation::Boundary;
        EdgeLabel lab;
        lab.primary = primary;
        if (primary) {
            Rational sq = squared_length(e);
            if (!have_primary || sq < best_sq) best_sq = sq;
            have_primary = true;
        } else {
            bool a_closer = squared_distance(v.source, e.a) <= squared_distance(v.source, e.b);
            lab.window.base = a_closer ? e.a : e.b;
            lab.window.end = a_closer ? e.b : e.a;
        }
        out.labels.push_back(lab);
    }
    if (!have_primary)
        throw GeometryError(GeomError::DegenerateRegion,
                            "visibility region without a primary edge");
    out.min_pr_squared = best_sq;
    return out;
}

bool visible(const Polygon& P, const Point& a, const Point& b) {
    return segment_inside(P, Segment{a, b});
}

std::vector<Point> normalize_cycle(const std::vector<Point>& cycle) {
    if (cycle.empty()) return {};
    size_t best = 0;
    for (size_t i = 1; i < cycle.size(); ++i)
        if (cycle[i] < cycle[best]) best = i;
    std::vector<Point> out;
    out.reserve(cycle.size());
    for (size_t i = 0; i < cycle.size(); ++i) out.push_back(cycle[(best + i) % cycle.size()]);
    return out;
}

}  // namespace wskit
