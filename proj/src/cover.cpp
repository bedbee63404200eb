#include "frontlab/cover.hpp"

#include <numeric>

namespace frontlab {

namespace {

// Branches of the front over the x-interval (a,b) (column units): connected
// components of the strand segments and events inside.
std::size_t count_branches(const FrontDiagram& f, const StratifiedComplex& sc, long lo3, long hi3) {
    // Segments (g, p) with gap g meeting (lo3/3, hi3/3); events at columns in range.
    // Two segments are connected when a non-vertex event links them, or a
    // vertex event inside the range links them.
    std::size_t ncols = f.num_columns();
    std::vector<std::vector<std::size_t>> ids(ncols + 1);
    std::size_t nseg = 0;
    auto gap_in = [&](std::size_t g) {
        // gap g spans x in (g-1, g); it meets the open interval iff
        // lo3 < 3g and hi3 > 3(g-1)
        return lo3 < 3 * static_cast<long>(g) && hi3 > 3 * (static_cast<long>(g) - 1);
    };
    for (std::size_t g = 0; g <= ncols; ++g) {
        ids[g].assign(f.strands_in_gap(g), SIZE_MAX);
        if (!gap_in(g)) continue;
        for (std::size_t p = 0; p < ids[g].size(); ++p) ids[g][p] = nseg++;
    }
    if (nseg == 0) return 0;
    std::vector<std::size_t> parent(nseg);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        if (a == SIZE_MAX || b == SIZE_MAX) return;
        parent[find(a)] = find(b);
    };
    auto seg = [&](std::size_t g, std::size_t p) -> std::size_t {
        if (!gap_in(g) || p < 1 || p > ids[g].size()) return SIZE_MAX;
        return ids[g][p - 1];
    };
    for (std::size_t c = 0; c < ncols; ++c) {
        long x3 = 3 * static_cast<long>(c);
        if (!(lo3 < x3 && x3 < hi3)) continue;  // column inside the chart
        const SliceEvent& e = f.columns[c];
        std::size_t k = f.strands_in_gap(c);
        switch (e.kind) {
            case SliceEvent::Kind::Idle:
                for (std::size_t p = 1; p <= k; ++p) unite(seg(c, p), seg(c + 1, p));
                break;
            case SliceEvent::Kind::Crossing:
                for (std::size_t p = 1; p <= k; ++p) {
                    std::size_t q = p == e.pos ? p + 1 : (p == e.pos + 1 ? p - 1 : p);
                    unite(seg(c, p), seg(c + 1, q));
                }
                unite(seg(c, e.pos), seg(c, e.pos + 1));  // the vertex joins the strands
                break;
            case SliceEvent::Kind::CuspOpen:
                for (std::size_t p = 1; p <= k; ++p)
                    unite(seg(c, p), seg(c + 1, p < e.pos ? p : p + 2));
                unite(seg(c + 1, e.pos), seg(c + 1, e.pos + 1));
                break;
            case SliceEvent::Kind::CuspClose:
                for (std::size_t p = 1; p <= k; ++p) {
                    if (p == e.pos || p == e.pos + 1) continue;
                    unite(seg(c, p), seg(c + 1, p < e.pos ? p : p - 2));
                }
                unite(seg(c, e.pos), seg(c, e.pos + 1));
                break;
            case SliceEvent::Kind::AsympOpen:
                for (std::size_t p = 1; p <= k; ++p) unite(seg(c, p), seg(c + 1, p + 1));
                break;
            case SliceEvent::Kind::AsympClose:
                for (std::size_t p = 2; p <= k; ++p) unite(seg(c, p), seg(c + 1, p - 1));
                break;
        }
    }
    std::size_t comps = 0;
    for (std::size_t s = 0; s < nseg; ++s)
        if (find(s) == s) ++comps;
    return comps;
}

}  // namespace

CylinderCover good_cylinder_cover(const FrontDiagram& f, const StratifiedComplex& sc) {
    CylinderCover cover;
    std::size_t ncols = f.num_columns();
    long tmax = 1;
    for (std::size_t g = 0; g <= ncols; ++g)
        tmax = std::max(tmax, static_cast<long>(f.strands_in_gap(g)) + 1);

    if (ncols == 0) {
        CylinderChart c;
        c.x_lo_num = -3;
        c.x_hi_num = 3;
        c.t_lo = -1;
        c.t_hi = tmax;
        cover.charts.push_back(c);
        return cover;
    }

    auto make = [&](long lo3, long hi3, bool inter) {
        CylinderChart c;
        c.x_lo_num = lo3;
        c.x_hi_num = hi3;
        c.t_lo = -1;
        c.t_hi = tmax;
        c.is_intersection = inter;
        for (const auto& v : sc.vertices) {
            long x3 = 3 * static_cast<long>(v.column);
            if (lo3 < x3 && x3 < hi3) c.vertices.push_back(v.id);
        }
        c.branches = count_branches(f, sc, lo3, hi3);
        cover.charts.push_back(c);
    };

    // event charts V_i = (i - 2/3, i + 2/3), overlaps O_i = V_i cap V_(i+1)
    for (std::size_t i = 0; i < ncols; ++i) make(3 * static_cast<long>(i) - 2, 3 * static_cast<long>(i) + 2, false);
    for (std::size_t i = 0; i + 1 < ncols; ++i) make(3 * static_cast<long>(i) + 1, 3 * static_cast<long>(i) + 2, true);
    return cover;
}

}  // namespace frontlab
