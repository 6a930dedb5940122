#include "skex/solid.hpp"

#include <cstdint>
#include <unordered_map>

#include "skex/error.hpp"

namespace skex {

BBox3 bodies_bbox(const std::vector<Solid>& bodies) {
    BBox3 b;
    for (const auto& s : bodies) b.expand(s.bbox());
    return b;
}

double signed_volume_unchecked(const Solid& solid) {
    double v = 0.0;
    for (const auto& t : solid.tris) {
        const Vec3 &a = solid.vertices[t[0]], &b = solid.vertices[t[1]], &c = solid.vertices[t[2]];
        v += a.dot(b.cross(c));
    }
    return v / 6.0;
}

double surface_area(const Solid& solid) {
    double a = 0.0;
    for (const auto& t : solid.tris) {
        const Vec3 e1 = solid.vertices[t[1]] - solid.vertices[t[0]];
        const Vec3 e2 = solid.vertices[t[2]] - solid.vertices[t[0]];
        a += 0.5 * e1.cross(e2).norm();
    }
    return a;
}

namespace {
inline uint64_t edge_key(int a, int b) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
}
}  // namespace

bool mesh_is_closed(const Solid& solid) {
    // Each directed edge must appear exactly once; its reverse exactly once.
    std::unordered_map<uint64_t, int> directed;
    directed.reserve(solid.tris.size() * 3);
    for (const auto& t : solid.tris) {
        for (int k = 0; k < 3; ++k) {
            const int a = t[k], b = t[(k + 1) % 3];
            if (a == b) return false;
            if (++directed[edge_key(a, b)] > 1) return false;
        }
    }
    for (const auto& [key, count] : directed) {
        const int a = static_cast<int>(key >> 32), b = static_cast<int>(key & 0xffffffffu);
        auto it = directed.find(edge_key(b, a));
        if (it == directed.end() || it->second != 1) return false;
    }
    return true;
}

double solid_volume(const Solid& solid) {
    if (!mesh_is_closed(solid)) raise("OpenMesh", "mesh is not closed");
    return signed_volume_unchecked(solid);
}

void check_solid(const Solid& solid) {
    if (!mesh_is_closed(solid)) raise("OpenResultMesh", "mesh is not closed");
    if (signed_volume_unchecked(solid) <= 0.0)
        raise("OpenResultMesh", "mesh is not outward-oriented");
}

}  // namespace skex
