#pragma once

#include <random>

#include "frontlab/strata.hpp"

namespace frontlab {

enum class MoveKind { R1, R2, R3 };

// Site of a move application.  R1 insert: `column` is the insertion point,
// `pos` the strand carrying the kink, `variant` 0/1 = kink opens up/down.
// R1 remove (`inverse`): `column` is the first column of the 3-column kink.
// R2: `column` must hold a cusp event; `variant` 0/1 = the cusp slides
// up/down past the neighbouring strand; inverse contracts the 3-column
// pattern starting at `column`.  R3: `column` is the first of three
// consecutive crossing columns matching the braid pattern.
struct MoveSite {
    std::size_t column = 0;
    std::size_t pos = 1;
    int variant = 0;
    bool inverse = false;
};

struct MoveResult {
    FrontDiagram front;
    std::size_t site_begin = 0;   // first modified column in the old front
    std::size_t old_len = 0, new_len = 0;
    // Stratum correspondence away from the site: old id -> new id (SIZE_MAX
    // where a stratum does not survive the move).
    std::vector<std::size_t> chamber_map;
    std::vector<std::size_t> arc_map;
};

// Throws FrontException on a pattern mismatch at the site.
MoveResult apply_reidemeister(const FrontDiagram& f, MoveKind move, const MoveSite& site);

// All applicable sites on f, in deterministic order.
std::vector<std::pair<MoveKind, MoveSite>> enumerate_move_sites(const FrontDiagram& f);

// Seeded random move sequence: applies `count` random applicable moves.
FrontDiagram random_moves(const FrontDiagram& f, std::size_t count, std::mt19937_64& rng);

}  // namespace frontlab
