#pragma once

#include <utility>
#include <vector>

#include "frontlab/strata.hpp"

namespace frontlab {

// Good cylindrical cover of the event-carrying region.  Charts are products
// (x-interval) x (t-interval); x is measured in column units (column i at
// x = i), t in nominal strand-height units.  Thirds keep chart boundaries
// off the event columns.
struct CylinderChart {
    // intervals as rationals n/3 for exactness; stored as numerators over 3
    long x_lo_num = 0, x_hi_num = 0;  // x-interval (x_lo/3, x_hi/3)
    long t_lo = 0, t_hi = 0;
    std::vector<std::size_t> vertices;  // vertex ids inside the chart
    std::size_t branches = 0;           // components of the front over the chart
    bool is_intersection = false;       // pairwise overlap chart
};

struct CylinderCover {
    std::vector<CylinderChart> charts;
};

CylinderCover good_cylinder_cover(const FrontDiagram& f, const StratifiedComplex& sc);

inline CylinderCover good_cylinder_cover(const FrontDiagram& f) {
    return good_cylinder_cover(f, stratify(f));
}

}  // namespace frontlab
