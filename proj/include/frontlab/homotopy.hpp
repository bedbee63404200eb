#pragma once

#include <optional>

#include "frontlab/complex.hpp"

namespace frontlab {

// Degree -1 map h = {h^n : X^n -> Y^(n-1)} packaged with its boundary data.
struct Homotopy {
    ChainComplex src, tgt;
    std::map<int, Matrix> comps;

    Matrix component(int n) const {
        auto it = comps.find(n);
        if (it != comps.end()) return it->second;
        return Matrix::zero(src.field(), tgt.dim(n - 1), src.dim(n));
    }
    // dh + hd as a chain map X -> Y.
    ChainMap boundary() const {
        ChainMap r(src, tgt);
        int lo = std::min(src.min_degree(), tgt.min_degree());
        int hi = std::max(src.max_degree(), tgt.max_degree());
        for (int n = lo; n <= hi; ++n) {
            Matrix m = tgt.diff(n - 1) * component(n) + component(n + 1) * src.diff(n);
            if (!m.is_zero()) r.set_component(n, m);
        }
        return r;
    }
};

// Solves dh + hd = f - g for parallel chain maps f, g.  One global linear
// system; the solver's lexicographic pivoting makes the witness deterministic.
// Returns nullopt when f and g are not chain homotopic.
inline std::optional<Homotopy> homotopy_solve(const ChainMap& f, const ChainMap& g) {
    const ChainComplex& X = f.source();
    const ChainComplex& Y = f.target();
    Field k = X.field();
    int lo = std::min(X.min_degree(), Y.min_degree());
    int hi = std::max(X.max_degree(), Y.max_degree());

    // Unknown layout: for each degree n in [lo, hi+1], the entries of
    // h^n : X^n -> Y^(n-1), row-major.
    struct Block { int n; std::size_t rows, cols, offset; };
    std::vector<Block> blocks;
    std::size_t nvars = 0;
    for (int n = lo; n <= hi + 1; ++n) {
        std::size_t r = Y.dim(n - 1), c = X.dim(n);
        if (r * c == 0) continue;
        blocks.push_back({n, r, c, nvars});
        nvars += r * c;
    }
    auto block_of = [&](int n) -> const Block* {
        for (auto& b : blocks)
            if (b.n == n) return &b;
        return nullptr;
    };

    // Equations: for each degree n, d_Y^(n-1) h^n + h^(n+1) d_X^n = (f-g)^n.
    std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> eqs;  // (n, (rows, cols))
    std::size_t neqs = 0;
    for (int n = lo; n <= hi; ++n) {
        std::size_t r = Y.dim(n), c = X.dim(n);
        if (r * c == 0) continue;
        eqs.push_back({n, {r, c}});
        neqs += r * c;
    }

    Matrix A(k, neqs, nvars);
    Matrix rhs(k, neqs, 1);
    ChainMap fg = f - g;
    std::size_t eq_off = 0;
    for (auto& [n, sz] : eqs) {
        auto [r, c] = sz;
        Matrix target = fg.component(n);
        Matrix dY = Y.diff(n - 1);              // Y^(n-1) -> Y^n
        Matrix dX = X.diff(n);                  // X^n -> X^(n+1)
        const Block* bn = block_of(n);          // h^n
        const Block* bn1 = block_of(n + 1);     // h^(n+1)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                std::size_t row = eq_off + i * c + j;
                rhs.at(row, 0) = target.at(i, j);
                // (d_Y h^n)_{ij} = sum_t dY_{it} h^n_{tj}
                if (bn)
                    for (std::size_t t = 0; t < bn->rows; ++t)
                        A.at(row, bn->offset + t * bn->cols + j) = dY.at(i, t);
                // (h^(n+1) d_X)_{ij} = sum_t h^(n+1)_{it} dX_{tj}
                if (bn1)
                    for (std::size_t t = 0; t < bn1->cols; ++t) {
                        std::size_t col = bn1->offset + i * bn1->cols + t;
                        A.at(row, col) = A.reduce(A.at(row, col) + dX.at(t, j));
                    }
            }
        eq_off += r * c;
    }

    auto sol = A.solve(rhs);
    if (!sol) return std::nullopt;
    Homotopy h{X, Y, {}};
    for (auto& b : blocks) {
        Matrix m(k, b.rows, b.cols);
        for (std::size_t i = 0; i < b.rows; ++i)
            for (std::size_t j = 0; j < b.cols; ++j) m.at(i, j) = sol->at(b.offset + i * b.cols + j, 0);
        if (!m.is_zero()) h.comps[b.n] = m;
    }
    return h;
}

inline bool chain_homotopic(const ChainMap& f, const ChainMap& g) {
    return homotopy_solve(f, g).has_value();
}

}  // namespace frontlab
