#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace skex {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

/// Geometric coincidence tolerance in model units.
inline constexpr double kEpsGeo = 1e-6;
/// Point-vs-plane classification epsilon used by the mesh Booleans.
inline constexpr double kPlaneEps = 1e-9;
/// Chordal sagitta for arc/circle discretization, relative to the sketch
/// bounding-box diagonal.
inline constexpr double kSagittaRel = 1e-3;
/// Minimum chord segments for a full circle.
inline constexpr int kMinCircleSegments = 16;

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

struct BBox2 {
    Vec2 min{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
    Vec2 max{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};

    void expand(const Vec2& p) {
        min = min.cwiseMin(p);
        max = max.cwiseMax(p);
    }
    bool valid() const { return min.x() <= max.x() && min.y() <= max.y(); }
    Vec2 extent() const { return max - min; }
    double diagonal() const { return valid() ? extent().norm() : 0.0; }
};

struct BBox3 {
    Vec3 min{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
             std::numeric_limits<double>::max()};
    Vec3 max{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest(),
             std::numeric_limits<double>::lowest()};

    void expand(const Vec3& p) {
        min = min.cwiseMin(p);
        max = max.cwiseMax(p);
    }
    void expand(const BBox3& b) {
        if (!b.valid()) return;
        min = min.cwiseMin(b.min);
        max = max.cwiseMax(b.max);
    }
    bool valid() const { return min.x() <= max.x() && min.y() <= max.y() && min.z() <= max.z(); }
    Vec3 extent() const { return max - min; }
    Vec3 center() const { return 0.5 * (min + max); }
    double diagonal() const { return valid() ? extent().norm() : 0.0; }
    bool approx_equal(const BBox3& o, double eps) const {
        return (min - o.min).cwiseAbs().maxCoeff() <= eps &&
               (max - o.max).cwiseAbs().maxCoeff() <= eps;
    }
};

/// Oriented sketch plane: right-handed frame (x_axis, y_axis, normal) with
/// y_axis = normal x x_axis.
struct SketchPlane {
    Vec3 origin = Vec3::Zero();
    Vec3 normal = Vec3::UnitZ();
    Vec3 x_axis = Vec3::UnitX();
    /// "XY" | "YZ" | "XZ" | face id for anchored planes.
    std::string source = "XY";

    Vec3 y_axis() const { return normal.cross(x_axis); }
    Vec3 to_world(const Vec2& p) const { return origin + p.x() * x_axis + p.y() * y_axis(); }
    Vec2 to_plane(const Vec3& p) const {
        const Vec3 d = p - origin;
        return Vec2(d.dot(x_axis), d.dot(y_axis()));
    }
    double offset_of(const Vec3& p) const { return (p - origin).dot(normal); }

    /// Canonical planes: the frame axes are the two named world axes, the
    /// normal is their cross product (XZ has normal -Y).
    static SketchPlane canonical(const std::string& name);
    /// Frame anchored to an arbitrary plane: x_axis is the projection of
    /// world X (world Y when the normal is nearly parallel to X).
    static SketchPlane anchored(const Vec3& origin, const Vec3& normal, const std::string& source);
};

inline SketchPlane SketchPlane::canonical(const std::string& name) {
    SketchPlane p;
    p.source = name;
    if (name == "XY") {
        p.x_axis = Vec3::UnitX();
        p.normal = Vec3::UnitZ();
    } else if (name == "YZ") {
        p.x_axis = Vec3::UnitY();
        p.normal = Vec3::UnitX();
    } else if (name == "XZ") {
        p.x_axis = Vec3::UnitX();
        p.normal = -Vec3::UnitY();
    } else {
        p.source = "XY";
    }
    return p;
}

inline SketchPlane SketchPlane::anchored(const Vec3& origin, const Vec3& normal,
                                         const std::string& source) {
    SketchPlane p;
    p.origin = origin;
    p.normal = normal.normalized();
    Vec3 seed = Vec3::UnitX();
    if (std::abs(p.normal.dot(seed)) > 1.0 - 1e-9) seed = Vec3::UnitY();
    p.x_axis = (seed - p.normal.dot(seed) * p.normal).normalized();
    p.source = source;
    return p;
}

}  // namespace skex
