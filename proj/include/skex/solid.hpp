#pragma once

#include <array>
#include <string>
#include <vector>

#include "skex/geom.hpp"

namespace skex {

enum class FaceRole { Start, End, Side };

/// Surface taxonomy used by the face feature encoding. The kernel only ever
/// constructs Plane and Cylinder; the other slots exist for the one-hot flag.
enum class SurfKind { Cone, Cylinder, Elliptical, EllipticalCylinder, Nurbs, Plane, Sphere, Torus };

inline const char* to_string(SurfKind k) {
    switch (k) {
        case SurfKind::Cone: return "Cone";
        case SurfKind::Cylinder: return "Cylinder";
        case SurfKind::Elliptical: return "Elliptical";
        case SurfKind::EllipticalCylinder: return "EllipticalCylinder";
        case SurfKind::Nurbs: return "Nurbs";
        case SurfKind::Plane: return "Plane";
        case SurfKind::Sphere: return "Sphere";
        case SurfKind::Torus: return "Torus";
    }
    return "Plane";
}

/// Analytic surface carried by a face tag. For planes `axis` is the oriented
/// surface normal and (u, v) span the plane. For cylinders `axis` is the axis
/// direction and `sign` is +1 when the surface normal points away from the
/// axis, -1 for inner (hole) walls.
struct SurfaceDesc {
    SurfKind kind = SurfKind::Plane;
    Vec3 origin = Vec3::Zero();
    Vec3 axis = Vec3::UnitZ();
    Vec3 u = Vec3::UnitX();
    Vec3 v = Vec3::UnitY();
    double radius = 0.0;
    int sign = 1;

    static SurfaceDesc plane(const Vec3& origin, const Vec3& normal, const Vec3& u, const Vec3& v) {
        SurfaceDesc d;
        d.kind = SurfKind::Plane;
        d.origin = origin;
        d.axis = normal;
        d.u = u;
        d.v = v;
        return d;
    }
    static SurfaceDesc cylinder(const Vec3& axis_origin, const Vec3& axis_dir, double radius,
                                int sign) {
        SurfaceDesc d;
        d.kind = SurfKind::Cylinder;
        d.origin = axis_origin;
        d.axis = axis_dir;
        d.radius = radius;
        d.sign = sign;
        return d;
    }
    /// Flips the oriented side of the surface (Boolean cuts invert tools).
    SurfaceDesc flipped() const {
        SurfaceDesc d = *this;
        if (kind == SurfKind::Plane)
            d.axis = -d.axis;
        else
            d.sign = -d.sign;
        return d;
    }
};

struct FaceTag {
    std::string face_id;
    int op_index = 0;
    FaceRole role = FaceRole::Side;
    SurfaceDesc surface;
};

/// Closed, consistently outward-oriented tagged triangle mesh. `tri_tag[t]`
/// indexes into `tags`; every triangle carries exactly one tag.
struct Solid {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> tris;
    std::vector<int> tri_tag;
    std::vector<FaceTag> tags;
    int body_id = 0;

    BBox3 bbox() const {
        BBox3 b;
        for (const auto& v : vertices) b.expand(v);
        return b;
    }
};

BBox3 bodies_bbox(const std::vector<Solid>& bodies);

/// Divergence-theorem signed volume. Raises OpenMesh when the mesh is not
/// closed (an edge without exactly two incident triangles).
double solid_volume(const Solid& solid);

double signed_volume_unchecked(const Solid& solid);

double surface_area(const Solid& solid);

/// Every undirected edge has exactly two incident triangles and is used once
/// in each direction.
bool mesh_is_closed(const Solid& solid);

/// Closed + positive signed volume.
void check_solid(const Solid& solid);

}  // namespace skex
