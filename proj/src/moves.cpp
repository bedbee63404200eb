#include "frontlab/moves.hpp"

#include <algorithm>

namespace frontlab {

namespace {

using K = SliceEvent::Kind;

std::vector<SliceEvent> r1_pattern(std::size_t p, int variant) {
    if (variant == 0)  // kink opening upward
        return {SliceEvent::cusp_open(p + 1), SliceEvent::crossing(p), SliceEvent::cusp_close(p + 1)};
    return {SliceEvent::cusp_open(p), SliceEvent::crossing(p + 1), SliceEvent::cusp_close(p)};
}

// R2: cusp slides past the adjacent strand, trading 0 crossings for 2.
// Expansion of [cuspo p]: variant 0 needs a strand at p (pair reopens above
// it), variant 1 needs p >= 2 (pair reopens below the strand at p-1).
std::optional<std::vector<SliceEvent>> r2_expansion(const SliceEvent& e, int variant,
                                                    std::size_t strands_before) {
    if (e.kind == K::CuspOpen) {
        std::size_t p = e.pos;
        if (variant == 0) {
            if (p > strands_before) return std::nullopt;
            return std::vector<SliceEvent>{SliceEvent::cusp_open(p + 1), SliceEvent::crossing(p),
                                           SliceEvent::crossing(p + 1)};
        }
        if (p < 2) return std::nullopt;
        return std::vector<SliceEvent>{SliceEvent::cusp_open(p - 1), SliceEvent::crossing(p),
                                       SliceEvent::crossing(p - 1)};
    }
    if (e.kind == K::CuspClose) {
        std::size_t p = e.pos;
        if (variant == 0) {
            if (p + 2 > strands_before) return std::nullopt;
            return std::vector<SliceEvent>{SliceEvent::crossing(p + 1), SliceEvent::crossing(p),
                                           SliceEvent::cusp_close(p + 1)};
        }
        if (p < 2) return std::nullopt;
        return std::vector<SliceEvent>{SliceEvent::crossing(p - 1), SliceEvent::crossing(p),
                                       SliceEvent::cusp_close(p - 1)};
    }
    return std::nullopt;
}

MoveResult splice(const FrontDiagram& f, std::size_t at, std::size_t remove_count,
                  const std::vector<SliceEvent>& insert) {
    MoveResult r;
    r.front = f;
    r.front.orientation_flips.clear();
    r.front.columns.erase(r.front.columns.begin() + at, r.front.columns.begin() + at + remove_count);
    r.front.columns.insert(r.front.columns.begin() + at, insert.begin(), insert.end());
    r.site_begin = at;
    r.old_len = remove_count;
    r.new_len = insert.size();
    r.front.validate();
    return r;
}

void build_correspondence(const FrontDiagram& oldf, MoveResult& r) {
    StratifiedComplex a = stratify(oldf), b = stratify(r.front);
    long shift = static_cast<long>(r.new_len) - static_cast<long>(r.old_len);
    r.chamber_map.assign(a.chambers.size(), SIZE_MAX);
    r.arc_map.assign(a.arcs.size(), SIZE_MAX);
    auto new_gap = [&](std::size_t g) -> std::optional<std::size_t> {
        if (g <= r.site_begin) return g;
        if (g >= r.site_begin + r.old_len)
            return static_cast<std::size_t>(static_cast<long>(g) + shift);
        return std::nullopt;
    };
    for (std::size_t g = 0; g < a.region_chamber.size(); ++g) {
        auto ng = new_gap(g);
        if (!ng) continue;
        for (std::size_t l = 0; l < a.region_chamber[g].size(); ++l) {
            if (l >= b.region_chamber[*ng].size()) continue;
            r.chamber_map[a.region_chamber[g][l]] = b.region_chamber[*ng][l];
        }
    }
    for (std::size_t g = 0; g < a.segment_arc.size(); ++g) {
        auto ng = new_gap(g);
        if (!ng || (g == r.site_begin && r.old_len > 0)) continue;
        for (std::size_t p = 1; p <= a.segment_arc[g].size(); ++p) {
            if (p > b.segment_arc[*ng].size()) continue;
            r.arc_map[a.segment_arc[g][p - 1]] = b.segment_arc[*ng][p - 1];
        }
    }
}

}  // namespace

MoveResult apply_reidemeister(const FrontDiagram& f, MoveKind move, const MoveSite& site) {
    auto mismatch = [&](const std::string& why) {
        throw FrontException({"move pattern mismatch: " + why, 0, site.column});
    };
    MoveResult r;
    switch (move) {
        case MoveKind::R1: {
            if (!site.inverse) {
                if (site.column > f.num_columns()) mismatch("insertion column out of range");
                std::size_t k = f.strands_in_gap(site.column);
                if (site.pos < 1 || site.pos > k) mismatch("no strand at kink position");
                r = splice(f, site.column, 0, r1_pattern(site.pos, site.variant));
            } else {
                if (site.column + 3 > f.num_columns()) mismatch("no room for a kink at column");
                for (int variant = 0; variant < 2; ++variant) {
                    std::size_t kmax = f.strands_in_gap(site.column);
                    for (std::size_t p = 1; p <= kmax; ++p) {
                        auto pat = r1_pattern(p, variant);
                        if (std::equal(pat.begin(), pat.end(), f.columns.begin() + site.column)) {
                            r = splice(f, site.column, 3, {});
                            build_correspondence(f, r);
                            return r;
                        }
                    }
                }
                mismatch("columns do not form a kink");
            }
            break;
        }
        case MoveKind::R2: {
            if (!site.inverse) {
                if (site.column >= f.num_columns()) mismatch("column out of range");
                auto exp = r2_expansion(f.columns[site.column], site.variant,
                                        f.strands_in_gap(site.column));
                if (!exp) mismatch("column is not a cusp with room for the slide");
                r = splice(f, site.column, 1, *exp);
            } else {
                if (site.column + 3 > f.num_columns()) mismatch("no room for an R2 pattern");
                bool done = false;
                for (std::size_t p = 1; !done && p <= f.strands_in_gap(site.column) + 2; ++p) {
                    for (int variant = 0; !done && variant < 2; ++variant) {
                        for (auto kind : {SliceEvent::cusp_open(p), SliceEvent::cusp_close(p)}) {
                            auto exp = r2_expansion(kind, variant, f.strands_in_gap(site.column));
                            if (!exp) continue;
                            if (std::equal(exp->begin(), exp->end(), f.columns.begin() + site.column)) {
                                r = splice(f, site.column, 3, {kind});
                                done = true;
                                break;
                            }
                        }
                    }
                }
                if (!done) mismatch("columns do not form an R2 pattern");
            }
            break;
        }
        case MoveKind::R3: {
            if (site.column + 3 > f.num_columns()) mismatch("no room for a triple point");
            const SliceEvent &e0 = f.columns[site.column], &e1 = f.columns[site.column + 1],
                             &e2 = f.columns[site.column + 2];
            if (e0.kind != K::Crossing || e1.kind != K::Crossing || e2.kind != K::Crossing)
                mismatch("columns are not three crossings");
            std::size_t p = e0.pos, q = e1.pos;
            if (e2.pos != p || (p + 1 != q && q + 1 != p)) mismatch("crossings do not braid");
            r = splice(f, site.column, 3,
                       {SliceEvent::crossing(q), SliceEvent::crossing(p), SliceEvent::crossing(q)});
            break;
        }
    }
    build_correspondence(f, r);
    return r;
}

std::vector<std::pair<MoveKind, MoveSite>> enumerate_move_sites(const FrontDiagram& f) {
    std::vector<std::pair<MoveKind, MoveSite>> sites;
    std::size_t n = f.num_columns();
    for (std::size_t c = 0; c <= n; ++c) {
        std::size_t k = f.strands_in_gap(c);
        for (std::size_t p = 1; p <= k; ++p)
            for (int v = 0; v < 2; ++v) sites.push_back({MoveKind::R1, {c, p, v, false}});
    }
    auto try_site = [&](MoveKind m, MoveSite s) {
        try {
            apply_reidemeister(f, m, s);
            sites.push_back({m, s});
        } catch (const FrontException&) {}
    };
    for (std::size_t c = 0; c < n; ++c) {
        try_site(MoveKind::R1, {c, 1, 0, true});
        try_site(MoveKind::R2, {c, 1, 0, false});
        try_site(MoveKind::R2, {c, 1, 1, false});
        try_site(MoveKind::R2, {c, 1, 0, true});
        try_site(MoveKind::R3, {c, 1, 0, false});
    }
    return sites;
}

FrontDiagram random_moves(const FrontDiagram& f, std::size_t count, std::mt19937_64& rng) {
    FrontDiagram cur = f;
    for (std::size_t i = 0; i < count; ++i) {
        auto sites = enumerate_move_sites(cur);
        if (sites.empty()) break;
        auto& [m, s] = sites[rng() % sites.size()];
        cur = apply_reidemeister(cur, m, s).front;
    }
    return cur;
}

}  // namespace frontlab
