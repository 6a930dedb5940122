#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skex/curve.hpp"
#include "skex/geom.hpp"

namespace skex {

/// Provenance of a profile boundary piece: which input curve produced it and,
/// for arcs/circles, the analytic circle it lies on. Extrusion uses this to
/// group side faces and attach cylinder descriptors.
struct CurveRef {
    std::string curve_id;
    bool circular = false;
    Vec2 center = Vec2::Zero();
    double radius = 0.0;
};

struct ProfileEdge {
    Vec2 a, b;
    CurveRef src;
};

/// Closed loop of boundary pieces; edges[i].b == edges[i+1].a (cyclically).
struct Loop {
    std::vector<ProfileEdge> edges;

    double signed_area() const {
        double s = 0.0;
        for (const auto& e : edges) s += cross2(e.a, e.b);
        return 0.5 * s;
    }
    std::vector<Vec2> points() const {
        std::vector<Vec2> p;
        p.reserve(edges.size());
        for (const auto& e : edges) p.push_back(e.a);
        return p;
    }
};

/// Enclosed planar region: CCW outer loop plus CW hole loops.
struct Profile {
    Loop outer;
    std::vector<Loop> holes;
    std::string id;
    double area = 0.0;
    BBox2 bbox;

    /// Even-odd membership against outer and holes.
    bool contains(const Vec2& p, double eps = kEpsGeo) const;
};

/// Counts of the planar subdivision after splitting at intersections.
/// For a connected arrangement V - E + F = 2 (F includes the outer face);
/// in general V - E + F = 1 + C.
struct ArrangementStats {
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int components = 0;
};

/// Splits the curve set at pairwise intersections and returns every enclosed
/// region. Dangling pieces that bound no region are discarded. Profile ids
/// are content hashes of the loop geometry, deterministic given input order.
std::vector<Profile> build_profiles(const std::vector<Curve>& curves, double tolerance = kEpsGeo);

/// Same subdivision, counts only (Euler check support).
ArrangementStats arrangement_stats(const std::vector<Curve>& curves, double tolerance = kEpsGeo);

/// Chord count for a full circle of the given radius under the kernel's
/// sagitta rule, given the sketch bounding-box diagonal.
int circle_segment_count(double radius, double bbox_diagonal);

}  // namespace skex
