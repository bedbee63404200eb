#include "frontlab/front.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace frontlab {

void FrontDiagram::validate() const {
    auto fail = [](std::string msg, std::size_t col) { throw FrontException({std::move(msg), 0, col}); };
    if (mode == Mode::Closed && initial_strands != 0 && !window)
        fail("closed front must start with 0 strands", 0);
    long count = static_cast<long>(initial_strands);
    for (std::size_t i = 0; i < columns.size(); ++i) {
        const SliceEvent& e = columns[i];
        long k = count;
        switch (e.kind) {
            case SliceEvent::Kind::Idle:
                break;
            case SliceEvent::Kind::Crossing:
                if (e.pos < 1 || static_cast<long>(e.pos) + 1 > k)
                    fail("crossing position " + std::to_string(e.pos) + " needs strands " +
                             std::to_string(e.pos) + "," + std::to_string(e.pos + 1) + " but only " +
                             std::to_string(k) + " present", i);
                break;
            case SliceEvent::Kind::CuspOpen:
                if (e.pos < 1 || static_cast<long>(e.pos) > k + 1)
                    fail("cusp-open position " + std::to_string(e.pos) + " out of range", i);
                break;
            case SliceEvent::Kind::CuspClose:
                if (e.pos < 1 || static_cast<long>(e.pos) + 1 > k)
                    fail("cusp-close position " + std::to_string(e.pos) + " out of range", i);
                break;
            case SliceEvent::Kind::AsympOpen:
            case SliceEvent::Kind::AsympClose:
                if (mode == Mode::Closed) fail("asymptote event in closed mode", i);
                if (e.kind == SliceEvent::Kind::AsympClose && k < 1)
                    fail("asymptote-close with no strand", i);
                break;
        }
        count += e.delta();
        if (count < 0) fail("negative strand count", i);
    }
    if (!window && count != 0)
        fail("unclosed strand: " + std::to_string(count) + " strand(s) at the right end",
             columns.empty() ? 0 : columns.size() - 1);
}

namespace {

// Directed walk state: a segment plus the direction of travel.
struct Cursor {
    Segment seg;
    bool rightward = true;
    bool operator==(const Cursor& o) const { return seg == o.seg && rightward == o.rightward; }
};

}  // namespace

FrontTrace trace(const FrontDiagram& f) {
    f.validate();
    std::size_t ncols = f.num_columns();
    FrontTrace tr;
    tr.seg_component.resize(ncols + 1);
    for (std::size_t g = 0; g <= ncols; ++g)
        tr.seg_component[g].assign(f.strands_in_gap(g), SIZE_MAX);

    // Successor of a rightward-moving cursor at column g; returns the next
    // cursor, or nullopt at an open end (asymptote / window edge).
    // Turnarounds at cusps reverse direction.
    auto step_right = [&](Segment s) -> std::optional<Cursor> {
        std::size_t g = s.gap;
        if (g == ncols) return std::nullopt;  // window right edge
        const SliceEvent& e = f.columns[g];
        std::size_t p = s.pos;
        switch (e.kind) {
            case SliceEvent::Kind::Idle:
                return Cursor{{g + 1, p}, true};
            case SliceEvent::Kind::Crossing:
                if (p == e.pos) return Cursor{{g + 1, p + 1}, true};
                if (p == e.pos + 1) return Cursor{{g + 1, p - 1}, true};
                return Cursor{{g + 1, p}, true};
            case SliceEvent::Kind::CuspOpen:
                return Cursor{{g + 1, p < e.pos ? p : p + 2}, true};
            case SliceEvent::Kind::CuspClose:
                if (p == e.pos) return Cursor{{g, e.pos + 1}, false};      // turn around at the cusp
                if (p == e.pos + 1) return Cursor{{g, e.pos}, false};
                return Cursor{{g + 1, p < e.pos ? p : p - 2}, true};
            case SliceEvent::Kind::AsympOpen:
                return Cursor{{g + 1, p + 1}, true};
            case SliceEvent::Kind::AsympClose:
                if (p == 1) return std::nullopt;  // dives to t = -infinity
                return Cursor{{g + 1, p - 1}, true};
        }
        return std::nullopt;
    };
    auto step_left = [&](Segment s) -> std::optional<Cursor> {
        std::size_t g = s.gap;
        if (g == 0) return std::nullopt;  // window left edge
        const SliceEvent& e = f.columns[g - 1];
        std::size_t p = s.pos;
        switch (e.kind) {
            case SliceEvent::Kind::Idle:
                return Cursor{{g - 1, p}, false};
            case SliceEvent::Kind::Crossing:
                if (p == e.pos) return Cursor{{g - 1, p + 1}, false};
                if (p == e.pos + 1) return Cursor{{g - 1, p - 1}, false};
                return Cursor{{g - 1, p}, false};
            case SliceEvent::Kind::CuspOpen:
                if (p == e.pos) return Cursor{{g, e.pos + 1}, true};       // turn around at the cusp
                if (p == e.pos + 1) return Cursor{{g, e.pos}, true};
                return Cursor{{g - 1, p < e.pos ? p : p - 2}, false};
            case SliceEvent::Kind::CuspClose:
                return Cursor{{g - 1, p < e.pos ? p : p + 2}, false};
            case SliceEvent::Kind::AsympOpen:
                if (p == 1) return std::nullopt;
                return Cursor{{g - 1, p - 1}, false};
            case SliceEvent::Kind::AsympClose:
                return Cursor{{g - 1, p + 1}, false};
        }
        return std::nullopt;
    };
    auto step = [&](const Cursor& c) { return c.rightward ? step_right(c.seg) : step_left(c.seg); };

    // Cusp passed between cursors c (incoming) and n (outgoing): record
    // whether the traversal went upper->lower (down cusp) or lower->upper.
    auto classify_turn = [&](const Cursor& c, const Cursor& n, long& up, long& down) {
        if (c.rightward == n.rightward) return;
        bool from_upper = c.seg.pos > n.seg.pos;
        if (from_upper) ++down; else ++up;
    };

    for (std::size_t g = 0; g <= ncols; ++g) {
        for (std::size_t p = 1; p <= f.strands_in_gap(g); ++p) {
            if (tr.seg_component[g][p - 1] != SIZE_MAX) continue;
            std::size_t comp = tr.num_components++;
            tr.cusps.push_back(0);
            tr.up_cusps.push_back(0);
            tr.down_cusps.push_back(0);
            tr.closed_loop.push_back(false);

            long up = 0, down = 0;
            std::size_t cusp_count = 0;
            Cursor start{{g, p}, true};
            if (!f.orientation_flips.empty() && comp < f.orientation_flips.size() &&
                f.orientation_flips[comp])
                start.rightward = false;
            Cursor c = start;
            bool looped = false;
            // Walk forward to an open end or back to the start.
            while (true) {
                tr.seg_component[c.seg.gap][c.seg.pos - 1] = comp;
                auto n = step(c);
                if (!n) break;
                if (c.rightward != n->rightward) ++cusp_count;
                classify_turn(c, *n, up, down);
                if (*n == start) { looped = true; break; }
                c = *n;
            }
            if (!looped) {
                // Open component: also walk backwards from the start.
                Cursor b = start;
                b.rightward = !b.rightward;
                while (true) {
                    auto n = step(b);
                    if (!n) break;
                    if (b.rightward != n->rightward) ++cusp_count;
                    // Backward travel: a turn seen here is traversed in reverse.
                    if (b.rightward != n->rightward) {
                        bool from_upper = n->seg.pos > b.seg.pos;  // reversed roles
                        if (from_upper) ++down; else ++up;
                    }
                    tr.seg_component[n->seg.gap][n->seg.pos - 1] = comp;
                    b = *n;
                }
            }
            tr.closed_loop[comp] = looped;
            tr.cusps[comp] = cusp_count;
            tr.up_cusps[comp] = up;
            tr.down_cusps[comp] = down;
        }
    }
    return tr;
}

long rotation_number(const FrontDiagram& f, std::size_t component) {
    if (f.mode != FrontDiagram::Mode::Closed || f.window)
        throw FrontException({"rotation number requires a closed front", 0, 0});
    FrontTrace tr = trace(f);
    if (component >= tr.num_components)
        throw FrontException({"no such component " + std::to_string(component), 0, 0});
    return (tr.down_cusps[component] - tr.up_cusps[component]) / 2;
}

FrontDiagram parse_front(const std::string& text) {
    FrontDiagram f;
    bool have_mode = false;
    std::size_t line_no = 0, col_index = 0;
    std::istringstream in(text);
    std::string raw;
    auto fail = [&](const std::string& msg) { throw FrontException({msg, line_no, col_index}); };
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string piece;
        std::istringstream parts(raw);
        while (std::getline(parts, piece, ';')) {
            std::istringstream ws(piece);
            std::string tok;
            if (!(ws >> tok)) continue;
            auto read_pos = [&](const char* what) -> std::size_t {
                long v;
                if (!(ws >> v) || v < 1) fail(std::string("expected positive position after '") + what + "'");
                return static_cast<std::size_t>(v);
            };
            if (tok == "mode") {
                std::string m;
                if (!(ws >> m)) fail("expected 'closed' or 'lower_open' after 'mode'");
                if (m == "closed") f.mode = FrontDiagram::Mode::Closed;
                else if (m == "lower_open") f.mode = FrontDiagram::Mode::LowerOpen;
                else fail("unknown mode '" + m + "'");
                have_mode = true;
                continue;
            }
            if (!have_mode) fail("front source must begin with a 'mode' line");
            if (tok == "strands") {
                long v;
                if (!(ws >> v) || v < 0) fail("expected count after 'strands'");
                f.initial_strands = static_cast<std::size_t>(v);
                f.window = true;
                continue;
            }
            col_index = f.columns.size();
            if (tok == "idle") f.columns.push_back(SliceEvent::idle());
            else if (tok == "cross") f.columns.push_back(SliceEvent::crossing(read_pos("cross")));
            else if (tok == "cuspo") f.columns.push_back(SliceEvent::cusp_open(read_pos("cuspo")));
            else if (tok == "cuspc") f.columns.push_back(SliceEvent::cusp_close(read_pos("cuspc")));
            else if (tok == "asympo") f.columns.push_back(SliceEvent::asymp_open());
            else if (tok == "asympc") f.columns.push_back(SliceEvent::asymp_close());
            else fail("unknown event '" + tok + "'");
            std::string extra;
            if (ws >> extra) fail("trailing token '" + extra + "'");
        }
    }
    if (!have_mode) throw FrontException({"missing 'mode' header", line_no, 0});
    f.validate();
    return f;
}

std::string render_dsl(const FrontDiagram& f) {
    std::ostringstream out;
    out << "mode " << (f.mode == FrontDiagram::Mode::Closed ? "closed" : "lower_open") << "\n";
    if (f.window) out << "strands " << f.initial_strands << "\n";
    for (const SliceEvent& e : f.columns) {
        switch (e.kind) {
            case SliceEvent::Kind::Idle: out << "idle"; break;
            case SliceEvent::Kind::Crossing: out << "cross " << e.pos; break;
            case SliceEvent::Kind::CuspOpen: out << "cuspo " << e.pos; break;
            case SliceEvent::Kind::CuspClose: out << "cuspc " << e.pos; break;
            case SliceEvent::Kind::AsympOpen: out << "asympo"; break;
            case SliceEvent::Kind::AsympClose: out << "asympc"; break;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace frontlab
