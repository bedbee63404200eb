#pragma once

#include <map>

#include "frontlab/complex.hpp"
#include "frontlab/homotopy.hpp"
#include "frontlab/potential.hpp"
#include "frontlab/strata.hpp"

namespace frontlab {

// Legible constructible sheaf on a front: a complex per chamber and a chain
// map per arc, going from the lower chamber to the upper one (against the
// downward conormal).  Arc and vertex values are derived, not stored:
// value(arc) = value(lower chamber), value(vertex) = value of its lowest
// adjacent chamber.
struct SheafObject {
    const FrontDiagram* front = nullptr;
    const StratifiedComplex* strata = nullptr;
    Field field = Field::rationals();
    std::vector<ChainComplex> chamber_data;  // by chamber id
    std::vector<ChainMap> arc_maps;          // by arc id

    const ChainComplex& chamber(std::size_t c) const { return chamber_data.at(c); }
    const ChainMap& arc_map(std::size_t a) const { return arc_maps.at(a); }

    // shape sanity: every arc map matches its adjacency
    void validate() const {
        if (!front || !strata) throw std::invalid_argument("SheafObject: missing front/strata");
        if (chamber_data.size() != strata->chambers.size() || arc_maps.size() != strata->arcs.size())
            throw std::invalid_argument("SheafObject: stratum count mismatch");
        for (const auto& arc : strata->arcs) {
            const ChainMap& m = arc_maps[arc.id];
            if (m.source().dims() != chamber_data[arc.lower_chamber].dims() ||
                m.target().dims() != chamber_data[arc.upper_chamber].dims())
                throw std::invalid_argument("SheafObject: arc map " + std::to_string(arc.id) +
                                            " does not match its chamber adjacency");
            if (!m.commutes())
                throw std::invalid_argument("SheafObject: arc map " + std::to_string(arc.id) +
                                            " is not a chain map");
        }
    }

    static SheafObject zero(const FrontDiagram& f, const StratifiedComplex& sc, Field k) {
        SheafObject o;
        o.front = &f;
        o.strata = &sc;
        o.field = k;
        for (std::size_t c = 0; c < sc.chambers.size(); ++c) o.chamber_data.emplace_back(k);
        for (const auto& a : sc.arcs)
            o.arc_maps.push_back(ChainMap(o.chamber_data[a.lower_chamber], o.chamber_data[a.upper_chamber]));
        return o;
    }
};

// Per-vertex and per-arc verdicts of the singular-support check.
struct SsReport {
    struct CrossingVerdict {
        std::size_t vertex;
        bool commutes = false;
        bool exact = false;
    };
    struct CuspVerdict {
        std::size_t vertex;
        bool homotopy_identity = false;
        std::optional<Homotopy> witness;
    };
    struct ArcStalk {
        std::size_t arc;
        std::map<int, std::size_t> stalk_dims;  // homology of the arc-map cone
        bool rank_matches = false;              // rank r concentrated in degree -pot(arc)
    };
    std::vector<CrossingVerdict> crossings;
    std::vector<CuspVerdict> cusps;
    std::vector<ArcStalk> arcs;
    bool sh0 = false;
    bool all_crossings_ok = false;
    bool all_cusps_ok = false;
    bool rank_one_with_potential = false;

    bool pass() const { return all_crossings_ok && all_cusps_ok; }
    bool pass_rank() const { return pass() && rank_one_with_potential; }
};

// Crossing squares strictly commute and totalize acyclically; around every
// cusp the composite p o i is chain homotopic to the identity; microlocal
// stalks have total rank `rank` concentrated in degree -pot(arc) (mod the
// potential's modulus).
SsReport check_ss(const SheafObject& F, const MaslovPotential& pot, std::size_t rank = 1);

// True iff the chamber data is acyclic on every top-unbounded chamber.
bool check_sh0(const SheafObject& F);

// The exact square sitting at a crossing vertex (S; W, E; N).
Square crossing_square(const SheafObject& F, const StratifiedComplex::Vertex& v);

// Cusp maps: i = lower branch arc map (A -> B), p = upper branch (B -> A).
std::pair<ChainMap, ChainMap> cusp_maps(const SheafObject& F, const StratifiedComplex::Vertex& v);

// Microlocal stalk across an arc: Cone(arc map).
inline ChainComplex microlocal_stalk(const SheafObject& F, std::size_t arc) {
    return cone(F.arc_map(arc));
}

// Derived Hom via the two-step cobar over the exit poset (vertex < arc <
// chamber).  Requires strictly functorial objects: crossing squares commute
// and cusp composites equal the identity on the nose; throws otherwise.
ChainComplex hom_complex(const SheafObject& F, const SheafObject& G);

inline std::size_t hom_dim(const SheafObject& F, const SheafObject& G) {
    auto h = hom_complex(F, G).homology_dims();
    auto it = h.find(0);
    return it == h.end() ? 0 : it->second;
}

// Gauge transformation: an invertible chain map per chamber; arc maps
// conjugate accordingly.  Verdicts and Hom homology are gauge invariants.
SheafObject gauge_transform(const SheafObject& F, const std::vector<ChainMap>& gauge);

}  // namespace frontlab
