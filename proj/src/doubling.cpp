#include "frontlab/doubling.hpp"

namespace frontlab {

namespace {

struct StrandState {
    CopyLabel copy;        // Orig or Shifted
    std::size_t src_arc;   // source arc currently copied
};

}  // namespace

DoubledFront double_front(const FrontDiagram& f) {
    f.validate();
    StratifiedComplex src = stratify(f);
    const std::size_t ncols = f.num_columns();

    DoubledFront out;
    out.front.mode = f.mode;
    out.front.window = f.window;
    out.front.initial_strands = 2 * f.initial_strands;

    // per emitted column: copy label (for the vertex it creates, if any)
    std::vector<CopyLabel> emitted_label;
    // strand state per doubled gap, bottom-fallback source gaps per doubled gap
    std::vector<std::vector<StrandState>> gap_state;
    std::vector<std::pair<std::size_t, std::size_t>> gap_bottom;  // (orig_gap, shifted_gap)

    std::vector<StrandState> cur;
    for (std::size_t p = 1; p <= f.initial_strands; ++p) {
        cur.push_back({CopyLabel::Shifted, src.arc_at({0, p})});
        cur.push_back({CopyLabel::Orig, src.arc_at({0, p})});
    }
    std::size_t orig_bottom = 0, shifted_bottom = 0;
    gap_state.push_back(cur);
    gap_bottom.push_back({orig_bottom, shifted_bottom});

    auto emit = [&](SliceEvent e, CopyLabel lab) {
        out.front.columns.push_back(e);
        emitted_label.push_back(lab);
        // update the running strand state
        std::size_t i = e.pos;
        switch (e.kind) {
            case SliceEvent::Kind::Crossing:
                std::swap(cur[i - 1], cur[i]);
                break;
            case SliceEvent::Kind::CuspOpen:
                // the two inserted entries are filled in by the caller
                cur.insert(cur.begin() + (i - 1), 2, StrandState{lab, SIZE_MAX});
                break;
            case SliceEvent::Kind::CuspClose:
                cur.erase(cur.begin() + (i - 1), cur.begin() + (i + 1));
                break;
            case SliceEvent::Kind::AsympOpen:
                cur.insert(cur.begin(), StrandState{lab, SIZE_MAX});
                break;
            case SliceEvent::Kind::AsympClose:
                cur.erase(cur.begin());
                break;
            default:
                break;
        }
        gap_state.push_back(cur);
        gap_bottom.push_back({orig_bottom, shifted_bottom});
    };

    for (std::size_t c = 0; c < ncols; ++c) {
        const SliceEvent& e = f.columns[c];
        switch (e.kind) {
            case SliceEvent::Kind::Idle:
                break;  // dropped
            case SliceEvent::Kind::Crossing: {
                std::size_t i = e.pos;
                const StratifiedComplex::Vertex* v = nullptr;
                for (auto& w : src.vertices)
                    if (w.column == c) { v = &w; break; }
                auto set_src = [&](std::size_t pos, std::size_t arc) {
                    cur[pos - 1].src_arc = arc;
                    gap_state.back()[pos - 1].src_arc = arc;
                };
                // o_a x s_b, then the two copy crossings, then o_b x s_a.
                emit(SliceEvent::crossing(2 * i), CopyLabel::Mixed);
                emit(SliceEvent::crossing(2 * i - 1), CopyLabel::Shifted);
                set_src(2 * i - 1, v->arc_out_lower);  // s_b continues as the lower right arc
                set_src(2 * i, v->arc_out_upper);      // s_a as the upper right arc
                emit(SliceEvent::crossing(2 * i + 1), CopyLabel::Orig);
                set_src(2 * i + 1, v->arc_out_lower);
                set_src(2 * i + 2, v->arc_out_upper);
                emit(SliceEvent::crossing(2 * i), CopyLabel::Mixed);
                break;
            }
            case SliceEvent::Kind::CuspOpen: {
                std::size_t i = e.pos;
                const StratifiedComplex::Vertex* v = nullptr;
                for (auto& w : src.vertices)
                    if (w.column == c) { v = &w; break; }
                emit(SliceEvent::cusp_open(2 * i - 1), CopyLabel::Orig);
                cur[2 * i - 2] = {CopyLabel::Orig, v->arc_lower};
                cur[2 * i - 1] = {CopyLabel::Orig, v->arc_upper};
                gap_state.back() = cur;
                emit(SliceEvent::cusp_open(2 * i - 1), CopyLabel::Shifted);
                cur[2 * i - 2] = {CopyLabel::Shifted, v->arc_lower};
                cur[2 * i - 1] = {CopyLabel::Shifted, v->arc_upper};
                gap_state.back() = cur;
                emit(SliceEvent::crossing(2 * i), CopyLabel::Mixed);        // s_u x o_l
                break;
            }
            case SliceEvent::Kind::CuspClose: {
                std::size_t i = e.pos;
                emit(SliceEvent::crossing(2 * i), CopyLabel::Mixed);        // o_l x s_u
                emit(SliceEvent::cusp_close(2 * i - 1), CopyLabel::Shifted);
                emit(SliceEvent::cusp_close(2 * i - 1), CopyLabel::Orig);
                break;
            }
            case SliceEvent::Kind::AsympOpen: {
                std::size_t newarc = src.arc_at({c + 1, 1});
                emit(SliceEvent::asymp_open(), CopyLabel::Orig);
                cur[0] = {CopyLabel::Orig, newarc};
                orig_bottom = c + 1;
                gap_state.back() = cur;
                gap_bottom.back() = {orig_bottom, shifted_bottom};
                emit(SliceEvent::asymp_open(), CopyLabel::Shifted);
                cur[0] = {CopyLabel::Shifted, newarc};
                shifted_bottom = c + 1;
                gap_state.back() = cur;
                gap_bottom.back() = {orig_bottom, shifted_bottom};
                break;
            }
            case SliceEvent::Kind::AsympClose: {
                shifted_bottom = c + 1;
                emit(SliceEvent::asymp_close(), CopyLabel::Shifted);
                orig_bottom = c + 1;
                emit(SliceEvent::asymp_close(), CopyLabel::Orig);
                break;
            }
        }
    }

    out.strata = stratify(out.front);

    // arc labels and sources from the strand states
    out.arc_label.assign(out.strata.arcs.size(), CopyLabel::Orig);
    out.arc_source.assign(out.strata.arcs.size(), SIZE_MAX);
    for (const auto& arc : out.strata.arcs) {
        Segment s = arc.segments.front();
        const StrandState& st = gap_state[s.gap][s.pos - 1];
        out.arc_label[arc.id] = st.copy;
        out.arc_source[arc.id] = st.src_arc;
    }

    // vertex labels: vertices appear in emitted-column order
    out.vertex_label.assign(out.strata.vertices.size(), CopyLabel::Mixed);
    {
        std::size_t vid = 0;
        for (std::size_t col = 0; col < out.front.columns.size(); ++col) {
            auto k = out.front.columns[col].kind;
            if (k == SliceEvent::Kind::Crossing || k == SliceEvent::Kind::CuspOpen ||
                k == SliceEvent::Kind::CuspClose)
                out.vertex_label[vid++] = emitted_label[col];
        }
    }

    // chamber correspondence: for each doubled chamber take its first region
    // slot and scan down for the topmost strand of each copy.
    out.chamber_orig.assign(out.strata.chambers.size(), SIZE_MAX);
    out.chamber_shifted.assign(out.strata.chambers.size(), SIZE_MAX);
    for (std::size_t g = 0; g < out.strata.region_chamber.size(); ++g) {
        for (std::size_t l = 0; l < out.strata.region_chamber[g].size(); ++l) {
            std::size_t ch = out.strata.region_chamber[g][l];
            if (out.chamber_orig[ch] != SIZE_MAX) continue;
            std::size_t og = SIZE_MAX, sg = SIZE_MAX;
            for (std::size_t p = l; p >= 1; --p) {
                const StrandState& st = gap_state[g][p - 1];
                if (st.copy == CopyLabel::Orig && og == SIZE_MAX)
                    og = src.arcs[st.src_arc].upper_chamber;
                if (st.copy == CopyLabel::Shifted && sg == SIZE_MAX)
                    sg = src.arcs[st.src_arc].upper_chamber;
                if (og != SIZE_MAX && sg != SIZE_MAX) break;
            }
            if (og == SIZE_MAX) og = src.region_chamber[gap_bottom[g].first][0];
            if (sg == SIZE_MAX) sg = src.region_chamber[gap_bottom[g].second][0];
            out.chamber_orig[ch] = og;
            out.chamber_shifted[ch] = sg;
        }
    }
    return out;
}

}  // namespace frontlab
