#pragma once

#include "frontlab/strata.hpp"

namespace frontlab {

// Overlay of a front with its infinitesimal downward translate, built by
// local rules (no numeric geometry).  At a generic slice the strands
// interleave as s_1 < o_1 < s_2 < o_2 < ... with the shifted copy s_i just
// below its original o_i.
enum class CopyLabel { Orig, Shifted, Mixed };

struct DoubledFront {
    FrontDiagram front;                      // the doubled diagram
    StratifiedComplex strata;                // its stratification
    // labels per stratum of the doubled front
    std::vector<CopyLabel> arc_label;        // per doubled arc
    std::vector<CopyLabel> vertex_label;     // per doubled vertex
    // doubled arc -> arc of the source front it copies (orig and shifted)
    std::vector<std::size_t> arc_source;     // SIZE_MAX for none
    // For every doubled chamber D: the source chamber containing D and the
    // source chamber whose downward translate contains D.  canonical_map's
    // component on D goes F(orig_chamber) -> F(shifted_chamber).
    std::vector<std::size_t> chamber_orig;
    std::vector<std::size_t> chamber_shifted;

    std::size_t mixed_crossing_count() const {
        std::size_t n = 0;
        for (std::size_t v = 0; v < vertex_label.size(); ++v)
            if (vertex_label[v] == CopyLabel::Mixed &&
                strata.vertices[v].kind == StratifiedComplex::Vertex::Kind::Crossing)
                ++n;
        return n;
    }
};

DoubledFront double_front(const FrontDiagram& f);

}  // namespace frontlab
