#pragma once

#include <map>
#include <vector>

#include "frontlab/front.hpp"

namespace frontlab {

// Face structure of the plane cut by the front.  Chambers are 2-strata,
// arcs 1-strata (front pieces between vertices, walls included), vertices
// are crossings and cusps.  Ids are deterministic: order of first
// appearance in a left-to-right, bottom-to-top sweep.
struct StratifiedComplex {
    struct Chamber {
        std::size_t id = 0;
        bool top_unbounded = false;
        bool bottom_unbounded = false;
    };
    struct Arc {
        std::size_t id = 0;
        std::vector<Segment> segments;       // in sweep order
        std::size_t lower_chamber = 0, upper_chamber = 0;
        // vertex ids bounding the arc, SIZE_MAX when the end is open
        // (asymptote dive or window edge)
        std::size_t left_vertex = SIZE_MAX, right_vertex = SIZE_MAX;
        bool left_asymptote = false, right_asymptote = false;
        std::size_t component = 0;           // front component (from trace)
    };
    struct Vertex {
        enum class Kind { Crossing, CuspOpen, CuspClose };
        std::size_t id = 0;
        Kind kind = Kind::Crossing;
        std::size_t column = 0, pos = 0;
        // Crossing: chambers S(below), W(left), E(right), N(above); arcs
        // in_lower/in_upper (left side), out_lower/out_upper (right side).
        // Cusp: chamber A = outside, B = inside; arcs lower/upper branch.
        std::size_t ch_S = SIZE_MAX, ch_W = SIZE_MAX, ch_E = SIZE_MAX, ch_N = SIZE_MAX;
        std::size_t ch_A = SIZE_MAX, ch_B = SIZE_MAX;
        std::size_t arc_in_lower = SIZE_MAX, arc_in_upper = SIZE_MAX;
        std::size_t arc_out_lower = SIZE_MAX, arc_out_upper = SIZE_MAX;
        std::size_t arc_lower = SIZE_MAX, arc_upper = SIZE_MAX;  // cusp branches
    };

    std::vector<Chamber> chambers;
    std::vector<Arc> arcs;
    std::vector<Vertex> vertices;

    // region (gap, level) -> chamber id; level 0 = below all strands in the gap
    std::vector<std::vector<std::size_t>> region_chamber;
    // segment (gap, pos) -> arc id
    std::vector<std::vector<std::size_t>> segment_arc;

    std::size_t chamber_at(std::size_t gap, std::size_t level) const { return region_chamber[gap][level]; }
    std::size_t arc_at(const Segment& s) const { return segment_arc[s.gap][s.pos - 1]; }

    // Chambers adjacent to an arc / incident to a vertex follow the struct fields.
    std::vector<std::size_t> top_unbounded_chambers() const {
        std::vector<std::size_t> r;
        for (auto& c : chambers)
            if (c.top_unbounded) r.push_back(c.id);
        return r;
    }
};

StratifiedComplex stratify(const FrontDiagram& f);

}  // namespace frontlab
