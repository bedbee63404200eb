#pragma once

#include <map>
#include <vector>

#include "frontlab/strata.hpp"

namespace frontlab {

// Z/m labelling of arcs: constant through crossings along each strand,
// +1 from the lower to the upper branch at every cusp.  modulus 0 means
// Z-valued.  Values are canonical representatives in [0, m) when m > 0.
struct MaslovPotential {
    long modulus = 0;
    std::vector<long> values;  // indexed by arc id

    long value(std::size_t arc) const { return values.at(arc); }
    long normalize(long v) const {
        if (modulus == 0) return v;
        long r = v % modulus;
        return r < 0 ? r + modulus : r;
    }
    bool congruent(long a, long b) const { return normalize(a - b) == 0 || (modulus == 0 && a == b); }
};

struct PotentialReport {
    MaslovPotential potential;
    std::vector<long> rotation_numbers;  // per component (closed fronts), else empty
};

// Constraint propagation over the arc graph.  The modulus absorbs the
// grading obstruction: m = gcd of all cycle defects = 2 gcd |r(component)|.
PotentialReport maslov_potential(const FrontDiagram& f, const StratifiedComplex& sc);

inline PotentialReport maslov_potential(const FrontDiagram& f) {
    return maslov_potential(f, stratify(f));
}

}  // namespace frontlab
