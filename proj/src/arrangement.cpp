#include "skex/arrangement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <unordered_map>

#include "skex/error.hpp"

namespace skex {

namespace {

struct Seg {
    Vec2 a, b;
    CurveRef src;
};

struct WeldIndex {
    double cell;
    std::unordered_map<int64_t, std::vector<int>> grid;
    std::vector<Vec2> points;

    explicit WeldIndex(double tol) : cell(std::max(tol, 1e-12) * 2.0) {}

    int64_t key(int64_t ix, int64_t iy) const { return ix * 0x100000001b3LL + iy; }

    int insert(const Vec2& p, double tol) {
        const int64_t ix = static_cast<int64_t>(std::floor(p.x() / cell));
        const int64_t iy = static_cast<int64_t>(std::floor(p.y() / cell));
        for (int64_t dx = -1; dx <= 1; ++dx)
            for (int64_t dy = -1; dy <= 1; ++dy) {
                auto it = grid.find(key(ix + dx, iy + dy));
                if (it == grid.end()) continue;
                for (int idx : it->second)
                    if ((points[idx] - p).norm() <= tol) return idx;
            }
        points.push_back(p);
        grid[key(ix, iy)].push_back(static_cast<int>(points.size() - 1));
        return static_cast<int>(points.size() - 1);
    }
};

int arc_segment_count(double radius, double angle_deg, double diag) {
    const int full = circle_segment_count(radius, diag);
    return std::max(2, static_cast<int>(std::ceil(full * angle_deg / 360.0)));
}

void validate_curves(const std::vector<Curve>& curves, double tol) {
    if (curves.empty()) raise("DegenerateCurve", "empty curve set");
    for (const auto& c : curves) {
        switch (c.kind) {
            case CurveKind::Line:
                if ((c.end - c.start).norm() <= tol)
                    raise("DegenerateCurve", "zero-length line '" + c.id + "'");
                break;
            case CurveKind::Arc:
                if ((c.start - c.center).norm() <= tol)
                    raise("DegenerateCurve", "zero-radius arc '" + c.id + "'");
                if (!(c.angle_deg > 0.0 && c.angle_deg <= 360.0))
                    raise("DegenerateCurve", "arc angle out of (0,360] for '" + c.id + "'");
                break;
            case CurveKind::Circle:
                if (c.radius <= tol)
                    raise("DegenerateCurve", "zero-radius circle '" + c.id + "'");
                break;
        }
    }
}

std::vector<Seg> discretize(const std::vector<Curve>& curves, double /*tol*/) {
    BBox2 box;
    for (const auto& c : curves) {
        switch (c.kind) {
            case CurveKind::Line:
                box.expand(c.start);
                box.expand(c.end);
                break;
            case CurveKind::Arc: {
                const double r = (c.start - c.center).norm();
                box.expand(c.center + Vec2(r, r));
                box.expand(c.center - Vec2(r, r));
                break;
            }
            case CurveKind::Circle:
                box.expand(c.center + Vec2(c.radius, c.radius));
                box.expand(c.center - Vec2(c.radius, c.radius));
                break;
        }
    }
    const double diag = box.diagonal();

    std::vector<Seg> segs;
    int anon = 0;
    for (const auto& c : curves) {
        std::string cid = c.id.empty() ? "c" + std::to_string(anon) : c.id;
        ++anon;
        switch (c.kind) {
            case CurveKind::Line:
                segs.push_back({c.start, c.end, CurveRef{cid, false, Vec2::Zero(), 0.0}});
                break;
            case CurveKind::Arc: {
                const double r = (c.start - c.center).norm();
                const double th0 = std::atan2(c.start.y() - c.center.y(), c.start.x() - c.center.x());
                const double sweep = c.angle_deg * M_PI / 180.0;
                const int n = arc_segment_count(r, c.angle_deg, diag);
                CurveRef src{cid, true, c.center, r};
                Vec2 prev = c.start;
                for (int k = 1; k <= n; ++k) {
                    const double th = th0 + sweep * k / n;
                    Vec2 p = c.center + r * Vec2(std::cos(th), std::sin(th));
                    if (k == n && c.angle_deg >= 360.0 - 1e-12) p = c.start;
                    segs.push_back({prev, p, src});
                    prev = p;
                }
                break;
            }
            case CurveKind::Circle: {
                const int n = circle_segment_count(c.radius, diag);
                CurveRef src{cid, true, c.center, c.radius};
                Vec2 first = c.center + Vec2(c.radius, 0.0);
                Vec2 prev = first;
                for (int k = 1; k <= n; ++k) {
                    const double th = 2.0 * M_PI * k / n;
                    Vec2 p = (k == n) ? first : Vec2(c.center + c.radius * Vec2(std::cos(th), std::sin(th)));
                    segs.push_back({prev, p, src});
                    prev = p;
                }
                break;
            }
        }
    }
    return segs;
}

/// Splits all segments at pairwise intersections (including collinear
/// overlaps) and returns the pieces.
std::vector<Seg> split_segments(std::vector<Seg> segs, double tol) {
    const size_t n = segs.size();
    std::vector<std::vector<double>> cuts(n);
    for (size_t i = 0; i < n; ++i) {
        cuts[i].push_back(0.0);
        cuts[i].push_back(1.0);
    }

    for (size_t i = 0; i < n; ++i) {
        const Vec2 a = segs[i].a, r = segs[i].b - segs[i].a;
        const double rlen = r.norm();
        for (size_t j = i + 1; j < n; ++j) {
            const Vec2 c = segs[j].a, s = segs[j].b - segs[j].a;
            const double slen = s.norm();
            const double denom = cross2(r, s);
            const Vec2 ca = c - a;
            if (std::abs(denom) <= 1e-12 * rlen * slen) {
                // Parallel; collinear overlap splits both at projected endpoints.
                if (std::abs(cross2(r, ca)) > tol * rlen) continue;
                const double inv = 1.0 / (rlen * rlen);
                double t0 = ca.dot(r) * inv;
                double t1 = (segs[j].b - a).dot(r) * inv;
                for (double t : {t0, t1})
                    if (t > tol / rlen && t < 1.0 - tol / rlen) cuts[i].push_back(t);
                const double inv2 = 1.0 / (slen * slen);
                double u0 = (a - c).dot(s) * inv2;
                double u1 = (segs[i].b - c).dot(s) * inv2;
                for (double u : {u0, u1})
                    if (u > tol / slen && u < 1.0 - tol / slen) cuts[j].push_back(u);
                continue;
            }
            const double t = cross2(ca, s) / denom;
            const double u = cross2(ca, r) / denom;
            if (!std::isfinite(t) || !std::isfinite(u))
                raise("ToleranceCollapse", "ill-conditioned segment intersection");
            const double te = tol / rlen, ue = tol / slen;
            if (t < -te || t > 1.0 + te || u < -ue || u > 1.0 + ue) continue;
            if (t > te && t < 1.0 - te) cuts[i].push_back(t);
            if (u > ue && u < 1.0 - ue) cuts[j].push_back(u);
        }
    }

    std::vector<Seg> out;
    out.reserve(n * 2);
    for (size_t i = 0; i < n; ++i) {
        auto& ts = cuts[i];
        std::sort(ts.begin(), ts.end());
        const Vec2 a = segs[i].a, d = segs[i].b - segs[i].a;
        const double len = d.norm();
        double prev = 0.0;
        for (double t : ts) {
            if (t <= prev) continue;
            if ((t - prev) * len <= tol) {  // unorderably close events merge
                prev = t;
                continue;
            }
            out.push_back({a + prev * d, a + t * d, segs[i].src});
            prev = t;
        }
        if (prev < 1.0 && (1.0 - prev) * len > tol)
            out.push_back({a + prev * d, segs[i].b, segs[i].src});
    }
    return out;
}

struct Graph {
    std::vector<Vec2> verts;
    std::vector<std::array<int, 2>> edges;
    std::vector<CurveRef> edge_src;
    // half-edge id = 2*edge + dir; dir 0 = u->v
    std::vector<std::vector<int>> out_half;  // per-vertex, CCW by angle

    int origin(int h) const { return edges[h >> 1][h & 1]; }
    int head(int h) const { return edges[h >> 1][1 - (h & 1)]; }
    Vec2 dir(int h) const { return verts[head(h)] - verts[origin(h)]; }

    void build_rotation() {
        out_half.assign(verts.size(), {});
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            out_half[edges[e][0]].push_back(2 * e);
            out_half[edges[e][1]].push_back(2 * e + 1);
        }
        for (auto& list : out_half)
            std::sort(list.begin(), list.end(), [&](int ha, int hb) {
                const Vec2 da = dir(ha), db = dir(hb);
                const double aa = std::atan2(da.y(), da.x());
                const double ab = std::atan2(db.y(), db.x());
                if (aa != ab) return aa < ab;
                return ha < hb;
            });
    }

    int next_half(int h) const {
        const int v = head(h);
        const int twin = h ^ 1;
        const auto& list = out_half[v];
        const int n = static_cast<int>(list.size());
        for (int k = 0; k < n; ++k)
            if (list[k] == twin) return list[(k - 1 + n) % n];
        return twin;
    }
};

Graph build_graph(const std::vector<Seg>& pieces, double tol) {
    Graph g;
    WeldIndex weld(tol);
    std::map<std::pair<int, int>, int> edge_map;
    for (const auto& s : pieces) {
        const int u = weld.insert(s.a, tol);
        const int v = weld.insert(s.b, tol);
        if (u == v) continue;
        const auto k = std::minmax(u, v);
        if (edge_map.count({k.first, k.second})) continue;
        edge_map[{k.first, k.second}] = static_cast<int>(g.edges.size());
        g.edges.push_back({u, v});
        g.edge_src.push_back(s.src);
    }
    g.verts = weld.points;
    return g;
}

void prune_dangling(Graph& g) {
    std::vector<int> degree(g.verts.size(), 0);
    std::vector<bool> alive(g.edges.size(), true);
    for (const auto& e : g.edges) {
        ++degree[e[0]];
        ++degree[e[1]];
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            if (!alive[e]) continue;
            if (degree[g.edges[e][0]] == 1 || degree[g.edges[e][1]] == 1) {
                alive[e] = false;
                --degree[g.edges[e][0]];
                --degree[g.edges[e][1]];
                changed = true;
            }
        }
    }
    Graph out;
    out.verts = g.verts;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        if (alive[e]) {
            out.edges.push_back(g.edges[e]);
            out.edge_src.push_back(g.edge_src[e]);
        }
    g = std::move(out);
}

struct CycleSet {
    std::vector<std::vector<int>> cycles;  // half-edge ids
    std::vector<double> areas;
    std::vector<int> cycle_of_half;  // indexed by half-edge id
};

CycleSet walk_faces(const Graph& g) {
    CycleSet cs;
    cs.cycle_of_half.assign(g.edges.size() * 2, -1);
    for (int h0 = 0; h0 < static_cast<int>(g.edges.size()) * 2; ++h0) {
        if (cs.cycle_of_half[h0] != -1) continue;
        std::vector<int> cyc;
        int h = h0;
        const int cid = static_cast<int>(cs.cycles.size());
        do {
            cs.cycle_of_half[h] = cid;
            cyc.push_back(h);
            h = g.next_half(h);
        } while (h != h0 && cyc.size() <= g.edges.size() * 2);
        double area = 0.0;
        for (int hh : cyc) area += cross2(g.verts[g.origin(hh)], g.verts[g.head(hh)]);
        cs.cycles.push_back(std::move(cyc));
        cs.areas.push_back(0.5 * area);
    }
    return cs;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Links each hole cycle to the cycle bounding the face that contains it,
/// via a leftward ray from the hole's leftmost vertex.
void link_holes(const Graph& g, const CycleSet& cs, UnionFind& uf, std::vector<bool>& unbounded) {
    constexpr double kAreaMin = 1e-10;
    for (int ci = 0; ci < static_cast<int>(cs.cycles.size()); ++ci) {
        if (cs.areas[ci] >= -kAreaMin) continue;  // only negative (CW) cycles
        // leftmost vertex of the cycle
        Vec2 v(std::numeric_limits<double>::max(), 0.0);
        for (int h : cs.cycles[ci]) {
            const Vec2 p = g.verts[g.origin(h)];
            if (p.x() < v.x() || (p.x() == v.x() && p.y() < v.y())) v = p;
        }
        int best_half = -1;
        double best_x = std::numeric_limits<double>::lowest();
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            const Vec2 p = g.verts[g.edges[e][0]], q = g.verts[g.edges[e][1]];
            const bool pj = p.y() > v.y(), qj = q.y() > v.y();
            if (pj == qj) continue;
            const double x = p.x() + (v.y() - p.y()) * (q.x() - p.x()) / (q.y() - p.y());
            if (x >= v.x() - 1e-12) continue;
            if (x > best_x) {
                best_x = x;
                // half-edge crossing the scanline downward has the hole on its left
                best_half = (p.y() > q.y()) ? 2 * e : 2 * e + 1;
            }
        }
        if (best_half == -1)
            unbounded[ci] = true;
        else
            uf.unite(ci, cs.cycle_of_half[best_half]);
    }
}

Loop loop_from_cycle(const Graph& g, const std::vector<int>& cycle) {
    Loop loop;
    loop.edges.reserve(cycle.size());
    for (int h : cycle)
        loop.edges.push_back({g.verts[g.origin(h)], g.verts[g.head(h)], g.edge_src[h >> 1]});
    return loop;
}

uint64_t fnv1a(uint64_t h, int64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= static_cast<uint64_t>(v >> (8 * i)) & 0xff;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string profile_hash(const Profile& p, double tol) {
    auto quant = [&](double v) { return static_cast<int64_t>(std::llround(v / tol)); };
    auto canon = [&](const Loop& l) {
        std::vector<std::pair<int64_t, int64_t>> pts;
        for (const auto& e : l.edges) pts.emplace_back(quant(e.a.x()), quant(e.a.y()));
        size_t best = 0;
        for (size_t i = 1; i < pts.size(); ++i)
            if (pts[i] < pts[best]) best = i;
        std::rotate(pts.begin(), pts.begin() + best, pts.end());
        return pts;
    };
    uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](const std::vector<std::pair<int64_t, int64_t>>& pts) {
        for (const auto& [x, y] : pts) {
            h = fnv1a(h, x);
            h = fnv1a(h, y);
        }
        h = fnv1a(h, static_cast<int64_t>(pts.size()));
    };
    mix(canon(p.outer));
    std::vector<std::vector<std::pair<int64_t, int64_t>>> holes;
    for (const auto& hl : p.holes) holes.push_back(canon(hl));
    std::sort(holes.begin(), holes.end());
    for (const auto& hl : holes) mix(hl);
    char buf[20];
    std::snprintf(buf, sizeof(buf), "p%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

int circle_segment_count(double radius, double bbox_diagonal) {
    const double sag = kSagittaRel * std::max(bbox_diagonal, radius * 1e-6);
    double ratio = sag / radius;
    if (ratio >= 1.0) return kMinCircleSegments;
    const int n = static_cast<int>(std::ceil(M_PI / std::acos(1.0 - ratio)));
    return std::max(kMinCircleSegments, n);
}

bool Profile::contains(const Vec2& p, double eps) const {
    // Even-odd crossing count over all loops; boundary points count as inside.
    int crossings = 0;
    auto test_loop = [&](const Loop& l) -> bool {
        for (const auto& e : l.edges) {
            const Vec2 d = e.b - e.a;
            const double len = d.norm();
            if (len <= 0) continue;
            const double t = (p - e.a).dot(d) / (len * len);
            const double tc = std::clamp(t, 0.0, 1.0);
            if ((e.a + tc * d - p).norm() <= eps) return true;  // on boundary
            const bool aj = e.a.y() > p.y(), bj = e.b.y() > p.y();
            if (aj == bj) continue;
            const double x = e.a.x() + (p.y() - e.a.y()) * d.x() / d.y();
            if (x > p.x()) ++crossings;
        }
        return false;
    };
    if (test_loop(outer)) return true;
    for (const auto& h : holes)
        if (test_loop(h)) return true;
    return (crossings & 1) != 0;
}

std::vector<Profile> build_profiles(const std::vector<Curve>& curves, double tolerance) {
    validate_curves(curves, tolerance);
    auto segs = discretize(curves, tolerance);
    segs = split_segments(std::move(segs), tolerance);
    Graph g = build_graph(segs, tolerance);
    prune_dangling(g);
    if (g.edges.empty()) return {};
    g.build_rotation();
    CycleSet cs = walk_faces(g);

    constexpr double kAreaMin = 1e-10;
    UnionFind uf(static_cast<int>(cs.cycles.size()));
    std::vector<bool> unbounded(cs.cycles.size(), false);
    link_holes(g, cs, uf, unbounded);

    std::vector<Profile> profiles;
    for (int ci = 0; ci < static_cast<int>(cs.cycles.size()); ++ci) {
        if (cs.areas[ci] <= kAreaMin) continue;  // outers are CCW-positive
        Profile prof;
        prof.outer = loop_from_cycle(g, cs.cycles[ci]);
        double area = cs.areas[ci];
        for (int cj = 0; cj < static_cast<int>(cs.cycles.size()); ++cj) {
            if (cj == ci || cs.areas[cj] >= -kAreaMin || unbounded[cj]) continue;
            if (uf.find(cj) == uf.find(ci)) {
                prof.holes.push_back(loop_from_cycle(g, cs.cycles[cj]));
                area += cs.areas[cj];
            }
        }
        if (area <= kAreaMin) continue;
        prof.area = area;
        for (const auto& e : prof.outer.edges) {
            prof.bbox.expand(e.a);
            prof.bbox.expand(e.b);
        }
        prof.id = profile_hash(prof, tolerance);
        profiles.push_back(std::move(prof));
    }
    std::sort(profiles.begin(), profiles.end(), [](const Profile& a, const Profile& b) {
        if (a.bbox.min.x() != b.bbox.min.x()) return a.bbox.min.x() < b.bbox.min.x();
        if (a.bbox.min.y() != b.bbox.min.y()) return a.bbox.min.y() < b.bbox.min.y();
        if (a.area != b.area) return a.area < b.area;
        return a.id < b.id;
    });
    return profiles;
}

ArrangementStats arrangement_stats(const std::vector<Curve>& curves, double tolerance) {
    validate_curves(curves, tolerance);
    auto segs = discretize(curves, tolerance);
    segs = split_segments(std::move(segs), tolerance);
    Graph g = build_graph(segs, tolerance);

    ArrangementStats st;
    std::vector<int> degree(g.verts.size(), 0);
    for (const auto& e : g.edges) {
        ++degree[e[0]];
        ++degree[e[1]];
    }
    for (int d : degree)
        if (d > 0) ++st.vertices;
    st.edges = static_cast<int>(g.edges.size());

    UnionFind comp(static_cast<int>(g.verts.size()));
    for (const auto& e : g.edges) comp.unite(e[0], e[1]);
    std::vector<int> roots;
    for (int v = 0; v < static_cast<int>(g.verts.size()); ++v)
        if (degree[v] > 0) roots.push_back(comp.find(v));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    st.components = static_cast<int>(roots.size());

    if (!g.edges.empty()) {
        g.build_rotation();
        CycleSet cs = walk_faces(g);
        int positives = 0;
        for (double a : cs.areas)
            if (a > 1e-10) ++positives;
        st.faces = positives + 1;  // bounded regions plus the outer face
    }
    return st;
}

}  // namespace skex
