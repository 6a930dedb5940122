#pragma once

#include <string>
#include <vector>

#include "skex/geom.hpp"

namespace skex {

enum class BoolOp { NewBody, Join, Cut, Intersect };

inline const char* to_string(BoolOp op) {
    switch (op) {
        case BoolOp::NewBody: return "new_body";
        case BoolOp::Join: return "join";
        case BoolOp::Cut: return "cut";
        case BoolOp::Intersect: return "intersect";
    }
    return "new_body";
}

enum class CurveKind { Line, Arc, Circle };

/// A 2D sketch primitive in the plane frame of its sketch.
struct Curve {
    CurveKind kind = CurveKind::Line;
    std::string id;
    Vec2 start = Vec2::Zero();   // line start / arc start
    Vec2 end = Vec2::Zero();     // line end
    Vec2 center = Vec2::Zero();  // arc/circle center
    double radius = 0.0;         // circle radius (arc radius is |start-center|)
    double angle_deg = 0.0;      // arc subtended angle, CCW, in (0, 360]

    static Curve line(const Vec2& a, const Vec2& b, std::string id = {}) {
        Curve c;
        c.kind = CurveKind::Line;
        c.start = a;
        c.end = b;
        c.id = std::move(id);
        return c;
    }
    static Curve arc(const Vec2& start, const Vec2& center, double angle_deg, std::string id = {}) {
        Curve c;
        c.kind = CurveKind::Arc;
        c.start = start;
        c.center = center;
        c.angle_deg = angle_deg;
        c.radius = (start - center).norm();
        c.id = std::move(id);
        return c;
    }
    static Curve circle(const Vec2& center, double radius, std::string id = {}) {
        Curve c;
        c.kind = CurveKind::Circle;
        c.center = center;
        c.radius = radius;
        c.id = std::move(id);
        return c;
    }
};

}  // namespace skex
