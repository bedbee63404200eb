#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace frontlab {

// One column of the slice encoding.  Positions are 1-based from the bottom.
struct SliceEvent {
    enum class Kind { Idle, Crossing, CuspOpen, CuspClose, AsympOpen, AsympClose };
    Kind kind = Kind::Idle;
    std::size_t pos = 0;  // meaningful for Crossing/CuspOpen/CuspClose

    static SliceEvent idle() { return {Kind::Idle, 0}; }
    static SliceEvent crossing(std::size_t i) { return {Kind::Crossing, i}; }
    static SliceEvent cusp_open(std::size_t i) { return {Kind::CuspOpen, i}; }
    static SliceEvent cusp_close(std::size_t i) { return {Kind::CuspClose, i}; }
    static SliceEvent asymp_open() { return {Kind::AsympOpen, 0}; }
    static SliceEvent asymp_close() { return {Kind::AsympClose, 0}; }

    // Strand count delta.
    int delta() const {
        switch (kind) {
            case Kind::CuspOpen: return 2;
            case Kind::CuspClose: return -2;
            case Kind::AsympOpen: return 1;
            case Kind::AsympClose: return -1;
            default: return 0;
        }
    }
    bool operator==(const SliceEvent& o) const { return kind == o.kind && pos == o.pos; }
};

struct FrontError {
    std::string message;
    std::size_t line = 0;    // 1-based source line when parsing, else 0
    std::size_t column = 0;  // event column index (0-based) for semantic errors
};

class FrontException : public std::runtime_error {
  public:
    explicit FrontException(FrontError e)
        : std::runtime_error(e.message + (e.line ? " (line " + std::to_string(e.line) + ")" : "") +
                             " [column " + std::to_string(e.column) + "]"),
          err(std::move(e)) {}
    FrontError err;
};

// Slice-encoded front diagram in the (x,t) plane.  `closed` fronts are
// compact (no asymptote events, empty at both ends); `lower_open` fronts may
// send strands to t = -infinity through asymptote events.  A `window` front
// is the restriction of a front to an x-interval: strands may enter at the
// left edge (initial_strands) and run off the right edge.
struct FrontDiagram {
    enum class Mode { Closed, LowerOpen };
    Mode mode = Mode::Closed;
    std::size_t initial_strands = 0;
    bool window = false;
    std::vector<SliceEvent> columns;
    // Optional per-component traversal flip (component ids from trace()).
    std::vector<bool> orientation_flips;

    std::size_t num_columns() const { return columns.size(); }
    // Strand count in gap g (gap g sits to the left of column g; gap
    // num_columns() is the rightmost).
    std::size_t strands_in_gap(std::size_t g) const {
        long c = static_cast<long>(initial_strands);
        for (std::size_t i = 0; i < g && i < columns.size(); ++i) c += columns[i].delta();
        return static_cast<std::size_t>(c);
    }
    std::size_t final_strands() const { return strands_in_gap(num_columns()); }

    void validate() const;  // throws FrontException
    bool is_valid() const {
        try { validate(); return true; } catch (const FrontException&) { return false; }
    }

    bool operator==(const FrontDiagram& o) const {
        return mode == o.mode && initial_strands == o.initial_strands && window == o.window &&
               columns == o.columns;
    }
};

// A segment is the piece of strand at (gap, pos), pos 1-based.
struct Segment {
    std::size_t gap = 0, pos = 0;
    bool operator==(const Segment& o) const { return gap == o.gap && pos == o.pos; }
    bool operator<(const Segment& o) const { return gap != o.gap ? gap < o.gap : pos < o.pos; }
};

// Connectivity of the front curve: which component each segment belongs to,
// plus cusp bookkeeping for rotation numbers.
struct FrontTrace {
    std::size_t num_components = 0;
    // component id per segment, addressed as seg_component[gap][pos-1]
    std::vector<std::vector<std::size_t>> seg_component;
    // per component: cusp count, up/down cusp counts under the canonical
    // traversal (flips applied), whether the component is a closed loop
    std::vector<std::size_t> cusps;
    std::vector<long> up_cusps, down_cusps;
    std::vector<bool> closed_loop;

    std::size_t component_of(const Segment& s) const { return seg_component[s.gap][s.pos - 1]; }
};

FrontTrace trace(const FrontDiagram& f);

// (down - up) / 2 along the oriented traversal; closed fronts only.
long rotation_number(const FrontDiagram& f, std::size_t component);

// DSL: header "mode closed|lower_open", optional "strands <k>" for window
// fragments, then one event per line or ';'-separated: idle | cross i |
// cuspo i | cuspc i | asympo | asympc.  '#' starts a comment.
FrontDiagram parse_front(const std::string& text);
std::string render_dsl(const FrontDiagram& f);

}  // namespace frontlab
