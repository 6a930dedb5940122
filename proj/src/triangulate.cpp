#include "skex/triangulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace skex {

namespace {

struct Node {
    Vec2 p;
    int idx;  // index into the concatenated ring points
};

using Ring = std::vector<Node>;

// Inclusive: points on the triangle boundary count as inside, so a ring
// vertex lying on an ear edge blocks that ear (keeps the cap conforming to
// the side quads built per ring segment).
bool point_in_triangle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& p) {
    const double d1 = cross2(b - a, p - a);
    const double d2 = cross2(c - b, p - b);
    const double d3 = cross2(a - c, p - c);
    return d1 >= -1e-14 && d2 >= -1e-14 && d3 >= -1e-14;
}

/// Splices a hole into the outer ring through a bridge from the hole's
/// leftmost vertex to a visible polygon vertex (earcut-style).
void splice_hole(Ring& poly, const Ring& hole) {
    size_t hm = 0;
    for (size_t i = 1; i < hole.size(); ++i)
        if (hole[i].p.x() < hole[hm].p.x() ||
            (hole[i].p.x() == hole[hm].p.x() && hole[i].p.y() < hole[hm].p.y()))
            hm = i;
    const Vec2 H = hole[hm].p;

    // Leftward ray from H; nearest crossing over poly edges.
    double qx = -std::numeric_limits<double>::max();
    size_t bridge = SIZE_MAX;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i].p, b = poly[(i + 1) % n].p;
        if ((a.y() > H.y()) == (b.y() > H.y())) continue;
        const double x = a.x() + (H.y() - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
        if (x <= H.x() && x > qx) {
            qx = x;
            bridge = (a.x() < b.x()) ? i : (i + 1) % n;
        }
    }
    if (bridge == SIZE_MAX) {
        // Hole outside the polygon; drop it (kept tolerant; valid inputs never hit this).
        return;
    }

    // Prefer a visible reflex vertex inside triangle (H, Q, M) closer in angle.
    const Vec2 Q(qx, H.y());
    const Vec2 M = poly[bridge].p;
    double tan_min = std::numeric_limits<double>::max();
    for (size_t i = 0; i < n; ++i) {
        const Vec2 p = poly[i].p;
        if (p.x() > H.x() || p.x() < std::min(Q.x(), M.x())) continue;
        const bool below = H.y() >= M.y();
        const Vec2 t0 = below ? H : Q, t2 = below ? Q : H;
        if (!point_in_triangle(t0, M, t2, p) && (p - M).norm() > 1e-15) continue;
        if ((p - H).norm() < 1e-15) continue;
        const double dx = H.x() - p.x();
        if (dx <= 0) continue;
        const double tan = std::abs(H.y() - p.y()) / dx;
        if (tan < tan_min) {
            tan_min = tan;
            bridge = i;
        }
    }

    Ring merged;
    merged.reserve(poly.size() + hole.size() + 2);
    for (size_t i = 0; i <= bridge; ++i) merged.push_back(poly[i]);
    for (size_t k = 0; k < hole.size(); ++k) merged.push_back(hole[(hm + k) % hole.size()]);
    merged.push_back(hole[hm]);
    for (size_t i = bridge; i < poly.size(); ++i) merged.push_back(poly[i]);
    poly = std::move(merged);
}

}  // namespace

std::vector<std::array<int, 3>> triangulate_polygon(const std::vector<std::vector<Vec2>>& rings) {
    std::vector<std::array<int, 3>> tris;
    if (rings.empty() || rings[0].size() < 3) return tris;

    Ring poly;
    int base = 0;
    for (size_t i = 0; i < rings[0].size(); ++i) poly.push_back({rings[0][i], static_cast<int>(i)});
    base = static_cast<int>(rings[0].size());

    std::vector<std::pair<Ring, double>> holes;
    for (size_t r = 1; r < rings.size(); ++r) {
        Ring h;
        double min_x = std::numeric_limits<double>::max();
        for (size_t i = 0; i < rings[r].size(); ++i) {
            h.push_back({rings[r][i], base + static_cast<int>(i)});
            min_x = std::min(min_x, rings[r][i].x());
        }
        base += static_cast<int>(rings[r].size());
        holes.emplace_back(std::move(h), min_x);
    }
    std::sort(holes.begin(), holes.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    for (const auto& [h, mx] : holes) splice_hole(poly, h);

    // O(n^2) ear clipping.
    std::vector<size_t> next(poly.size()), prev(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        next[i] = (i + 1) % poly.size();
        prev[i] = (i + poly.size() - 1) % poly.size();
    }
    size_t remaining = poly.size();
    size_t cur = 0;
    size_t since_progress = 0;
    while (remaining > 3) {
        if (since_progress > remaining + 1) {
            // No ear found (degenerate input); clip the most convex corner.
            size_t best = cur;
            double best_cr = -std::numeric_limits<double>::max();
            size_t i = cur;
            for (size_t k = 0; k < remaining; ++k, i = next[i]) {
                const double v = cross2(poly[i].p - poly[prev[i]].p, poly[next[i]].p - poly[i].p);
                if (v > best_cr) {
                    best_cr = v;
                    best = i;
                }
            }
            if (best_cr > 1e-14)
                tris.push_back({poly[prev[best]].idx, poly[best].idx, poly[next[best]].idx});
            prev[next[best]] = prev[best];
            next[prev[best]] = next[best];
            --remaining;
            cur = next[best];
            since_progress = 0;
            continue;
        }
        const size_t a = prev[cur], c = next[cur];
        const Vec2 &pa = poly[a].p, &pb = poly[cur].p, &pc = poly[c].p;
        const double cr = cross2(pb - pa, pc - pb);
        bool is_ear = false;
        if (std::abs(cr) < 1e-14) {
            if ((pb - pa).dot(pc - pb) < 0) {
                // Reversal spike: remove without emitting.
                prev[c] = a;
                next[a] = c;
                --remaining;
                cur = c;
                since_progress = 0;
            } else {
                // Straight run: keep the vertex, neighbors clip first.
                cur = c;
                ++since_progress;
            }
            continue;
        }
        if (cr > 0) {
            is_ear = true;
            for (size_t i = next[c]; i != a; i = next[i]) {
                const Vec2& p = poly[i].p;
                if ((p - pa).norm() < 1e-14 || (p - pb).norm() < 1e-14 || (p - pc).norm() < 1e-14)
                    continue;  // bridge duplicates
                if (point_in_triangle(pa, pb, pc, p)) {
                    is_ear = false;
                    break;
                }
            }
        }
        if (is_ear) {
            tris.push_back({poly[a].idx, poly[cur].idx, poly[c].idx});
            prev[c] = a;
            next[a] = c;
            --remaining;
            cur = c;
            since_progress = 0;
        } else {
            cur = c;
            if (++since_progress > remaining) {
                // No ear found (degenerate input); clip the most convex corner.
                size_t best = cur;
                double best_cr = -std::numeric_limits<double>::max();
                size_t i = cur;
                for (size_t k = 0; k < remaining; ++k, i = next[i]) {
                    const double v =
                        cross2(poly[i].p - poly[prev[i]].p, poly[next[i]].p - poly[i].p);
                    if (v > best_cr) {
                        best_cr = v;
                        best = i;
                    }
                }
                tris.push_back({poly[prev[best]].idx, poly[best].idx, poly[next[best]].idx});
                prev[next[best]] = prev[best];
                next[prev[best]] = next[best];
                --remaining;
                cur = next[best];
                since_progress = 0;
            }
        }
    }
    if (remaining == 3) {
        const size_t a = cur, b = next[cur], c = next[next[cur]];
        if (std::abs(cross2(poly[b].p - poly[a].p, poly[c].p - poly[b].p)) > 1e-14)
            tris.push_back({poly[a].idx, poly[b].idx, poly[c].idx});
    }
    return tris;
}

}  // namespace skex
