#include "frontlab/potential.hpp"

#include <numeric>
#include <queue>

namespace frontlab {

PotentialReport maslov_potential(const FrontDiagram& f, const StratifiedComplex& sc) {
    const std::size_t n = sc.arcs.size();
    // Difference constraints pot(b) - pot(a) = w over arc pairs.
    struct Edge { std::size_t to; long w; };
    std::vector<std::vector<Edge>> adj(n);
    auto add = [&](std::size_t a, std::size_t b, long w) {
        if (a == SIZE_MAX || b == SIZE_MAX) return;
        adj[a].push_back({b, w});
        adj[b].push_back({a, -w});
    };
    for (const auto& v : sc.vertices) {
        if (v.kind == StratifiedComplex::Vertex::Kind::Crossing) {
            add(v.arc_in_lower, v.arc_out_upper, 0);
            add(v.arc_in_upper, v.arc_out_lower, 0);
        } else {
            add(v.arc_lower, v.arc_upper, 1);
        }
    }

    // Integer labels by BFS per connected piece; cycle defects feed the modulus.
    std::vector<long> label(n, 0);
    std::vector<bool> seen(n, false);
    long defect_gcd = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        seen[start] = true;
        label[start] = 0;
        std::queue<std::size_t> q;
        q.push(start);
        while (!q.empty()) {
            std::size_t a = q.front();
            q.pop();
            for (const Edge& e : adj[a]) {
                long want = label[a] + e.w;
                if (!seen[e.to]) {
                    seen[e.to] = true;
                    label[e.to] = want;
                    q.push(e.to);
                } else if (label[e.to] != want) {
                    defect_gcd = std::gcd(defect_gcd, std::abs(label[e.to] - want));
                }
            }
        }
    }

    PotentialReport rep;
    rep.potential.modulus = defect_gcd;

    // Normalize per front component: the arc whose first segment is sweep-
    // minimal within the component gets value 0.
    std::vector<std::size_t> comp_min_arc;
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t c = sc.arcs[a].component;
        if (c >= comp_min_arc.size()) comp_min_arc.resize(c + 1, SIZE_MAX);
        std::size_t& m = comp_min_arc[c];
        if (m == SIZE_MAX || sc.arcs[a].segments.front() < sc.arcs[m].segments.front()) m = a;
    }
    rep.potential.values.resize(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t c = sc.arcs[a].component;
        long v = label[a] - label[comp_min_arc[c]];
        rep.potential.values[a] = rep.potential.normalize(v);
    }

    if (f.mode == FrontDiagram::Mode::Closed && !f.window) {
        FrontTrace tr = trace(f);
        for (std::size_t c = 0; c < tr.num_components; ++c)
            rep.rotation_numbers.push_back((tr.down_cusps[c] - tr.up_cusps[c]) / 2);
    }
    return rep;
}

}  // namespace frontlab
