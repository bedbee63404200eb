#include "frontlab/strata.hpp"

#include <numeric>

namespace frontlab {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

StratifiedComplex stratify(const FrontDiagram& f) {
    f.validate();
    const std::size_t ncols = f.num_columns();
    StratifiedComplex sc;

    // ---- chambers: union-find over region slots (gap, level) ----
    std::vector<std::size_t> gap_count(ncols + 1), region_base(ncols + 2, 0);
    for (std::size_t g = 0; g <= ncols; ++g) {
        gap_count[g] = f.strands_in_gap(g);
        region_base[g + 1] = region_base[g] + gap_count[g] + 1;
    }
    auto region_slot = [&](std::size_t g, std::size_t level) { return region_base[g] + level; };
    UnionFind uf(region_base[ncols + 1]);

    for (std::size_t g = 0; g < ncols; ++g) {
        const SliceEvent& e = f.columns[g];
        std::size_t k = gap_count[g];
        auto join = [&](std::size_t left_level, std::size_t right_level) {
            uf.unite(region_slot(g, left_level), region_slot(g + 1, right_level));
        };
        switch (e.kind) {
            case SliceEvent::Kind::Idle:
                for (std::size_t l = 0; l <= k; ++l) join(l, l);
                break;
            case SliceEvent::Kind::Crossing:
                for (std::size_t l = 0; l <= k; ++l)
                    if (l != e.pos) join(l, l);  // the middle level is pinched at the vertex
                break;
            case SliceEvent::Kind::CuspOpen:
                // New pair at e.pos, e.pos+1.  The outside region wraps around
                // the cusp point: left level e.pos-1 meets right levels e.pos-1
                // and e.pos+1.  Right level e.pos (inside the horns) is new.
                for (std::size_t l = 0; l < e.pos; ++l) join(l, l);
                join(e.pos - 1, e.pos + 1);
                for (std::size_t l = e.pos; l <= k; ++l) join(l, l + 2);
                break;
            case SliceEvent::Kind::CuspClose:
                for (std::size_t l = 0; l < e.pos; ++l) join(l, l);
                join(e.pos + 1, e.pos - 1);
                for (std::size_t l = e.pos + 2; l <= k; ++l) join(l, l - 2);
                // left level e.pos (inside) stays pinched off
                break;
            case SliceEvent::Kind::AsympOpen:
                // A wall descends to t = -infinity at this column: the left
                // bottom region and the new right bottom region stay apart.
                for (std::size_t l = 0; l <= k; ++l) join(l, l + 1);
                break;
            case SliceEvent::Kind::AsympClose:
                for (std::size_t l = 1; l <= k; ++l) join(l, l - 1);
                break;
        }
    }

    // Deterministic chamber ids by first slot in sweep order.
    std::map<std::size_t, std::size_t> root_to_id;
    sc.region_chamber.resize(ncols + 1);
    for (std::size_t g = 0; g <= ncols; ++g) {
        sc.region_chamber[g].resize(gap_count[g] + 1);
        for (std::size_t l = 0; l <= gap_count[g]; ++l) {
            std::size_t root = uf.find(region_slot(g, l));
            auto it = root_to_id.find(root);
            if (it == root_to_id.end()) {
                it = root_to_id.emplace(root, sc.chambers.size()).first;
                sc.chambers.push_back({sc.chambers.size(), false, false});
            }
            sc.region_chamber[g][l] = it->second;
        }
    }
    for (std::size_t g = 0; g <= ncols; ++g) {
        sc.chambers[sc.region_chamber[g][gap_count[g]]].top_unbounded = true;
        sc.chambers[sc.region_chamber[g][0]].bottom_unbounded = true;
    }

    // ---- arcs: chain segments through columns, breaking at vertices ----
    FrontTrace tr = trace(f);
    sc.segment_arc.resize(ncols + 1);
    for (std::size_t g = 0; g <= ncols; ++g) sc.segment_arc[g].assign(gap_count[g], SIZE_MAX);

    // continuation of segment (g,p) across column g within the same arc, or
    // nullopt if the arc ends there (vertex or open end)
    auto arc_continues = [&](std::size_t g, std::size_t p) -> std::optional<std::size_t> {
        if (g == ncols) return std::nullopt;
        const SliceEvent& e = f.columns[g];
        switch (e.kind) {
            case SliceEvent::Kind::Idle:
                return p;
            case SliceEvent::Kind::Crossing:
                if (p == e.pos || p == e.pos + 1) return std::nullopt;
                return p;
            case SliceEvent::Kind::CuspOpen:
                return p < e.pos ? p : p + 2;
            case SliceEvent::Kind::CuspClose:
                if (p == e.pos || p == e.pos + 1) return std::nullopt;
                return p < e.pos ? p : p - 2;
            case SliceEvent::Kind::AsympOpen:
                return p + 1;
            case SliceEvent::Kind::AsympClose:
                if (p == 1) return std::nullopt;
                return p - 1;
        }
        return std::nullopt;
    };

    for (std::size_t g = 0; g <= ncols; ++g) {
        for (std::size_t p = 1; p <= gap_count[g]; ++p) {
            if (sc.segment_arc[g][p - 1] != SIZE_MAX) continue;
            StratifiedComplex::Arc arc;
            arc.id = sc.arcs.size();
            std::size_t cg = g, cp = p;
            while (true) {
                sc.segment_arc[cg][cp - 1] = arc.id;
                arc.segments.push_back({cg, cp});
                auto nxt = arc_continues(cg, cp);
                if (!nxt) break;
                ++cg;
                cp = *nxt;
            }
            arc.lower_chamber = sc.region_chamber[g][p - 1];
            arc.upper_chamber = sc.region_chamber[g][p];
            arc.component = tr.component_of({g, p});
            // open-end flags
            if (g > 0 && f.columns[g - 1].kind == SliceEvent::Kind::AsympOpen && p == 1)
                arc.left_asymptote = true;
            std::size_t eg = arc.segments.back().gap, ep = arc.segments.back().pos;
            if (eg < ncols && f.columns[eg].kind == SliceEvent::Kind::AsympClose && ep == 1)
                arc.right_asymptote = true;
            sc.arcs.push_back(std::move(arc));
        }
    }

    // ---- vertices ----
    for (std::size_t g = 0; g < ncols; ++g) {
        const SliceEvent& e = f.columns[g];
        StratifiedComplex::Vertex v;
        v.column = g;
        v.pos = e.pos;
        switch (e.kind) {
            case SliceEvent::Kind::Crossing: {
                v.kind = StratifiedComplex::Vertex::Kind::Crossing;
                v.ch_S = sc.region_chamber[g][e.pos - 1];
                v.ch_W = sc.region_chamber[g][e.pos];
                v.ch_E = sc.region_chamber[g + 1][e.pos];
                v.ch_N = sc.region_chamber[g][e.pos + 1];
                v.arc_in_lower = sc.arc_at({g, e.pos});
                v.arc_in_upper = sc.arc_at({g, e.pos + 1});
                v.arc_out_lower = sc.arc_at({g + 1, e.pos});
                v.arc_out_upper = sc.arc_at({g + 1, e.pos + 1});
                break;
            }
            case SliceEvent::Kind::CuspOpen: {
                v.kind = StratifiedComplex::Vertex::Kind::CuspOpen;
                v.ch_A = sc.region_chamber[g][e.pos - 1];
                v.ch_B = sc.region_chamber[g + 1][e.pos];
                v.arc_lower = sc.arc_at({g + 1, e.pos});
                v.arc_upper = sc.arc_at({g + 1, e.pos + 1});
                break;
            }
            case SliceEvent::Kind::CuspClose: {
                v.kind = StratifiedComplex::Vertex::Kind::CuspClose;
                v.ch_A = sc.region_chamber[g + 1][e.pos - 1];
                v.ch_B = sc.region_chamber[g][e.pos];
                v.arc_lower = sc.arc_at({g, e.pos});
                v.arc_upper = sc.arc_at({g, e.pos + 1});
                break;
            }
            default:
                continue;  // idles and asymptotes are not vertices
        }
        v.id = sc.vertices.size();
        sc.vertices.push_back(v);
    }

    // hook arcs to their bounding vertices
    for (auto& v : sc.vertices) {
        auto set_right = [&](std::size_t arc) { if (arc != SIZE_MAX) sc.arcs[arc].right_vertex = v.id; };
        auto set_left = [&](std::size_t arc) { if (arc != SIZE_MAX) sc.arcs[arc].left_vertex = v.id; };
        if (v.kind == StratifiedComplex::Vertex::Kind::Crossing) {
            set_right(v.arc_in_lower);
            set_right(v.arc_in_upper);
            set_left(v.arc_out_lower);
            set_left(v.arc_out_upper);
        } else if (v.kind == StratifiedComplex::Vertex::Kind::CuspOpen) {
            set_left(v.arc_lower);
            set_left(v.arc_upper);
        } else {
            set_right(v.arc_lower);
            set_right(v.arc_upper);
        }
    }

    return sc;
}

}  // namespace frontlab
