#pragma once

#include <map>
#include <optional>
#include <vector>

#include "frontlab/matrix.hpp"

namespace frontlab {

// Bounded cochain complex of finite-dimensional vector spaces.  Cohomological
// grading, differential of degree +1:  d_n : C^n -> C^(n+1), stored as a
// dims[n+1] x dims[n] matrix acting on column vectors.  Degrees with dim 0 are
// simply absent from the maps.
class ChainComplex {
  public:
    explicit ChainComplex(Field f = Field::rationals()) : field_(f) {}

    Field field() const { return field_; }

    std::size_t dim(int n) const {
        auto it = dims_.find(n);
        return it == dims_.end() ? 0 : it->second;
    }
    const std::map<int, std::size_t>& dims() const { return dims_; }
    std::size_t total_dim() const {
        std::size_t t = 0;
        for (auto& [n, d] : dims_) t += d;
        return t;
    }
    bool is_zero_object() const { return total_dim() == 0; }

    void set_dim(int n, std::size_t d) {
        if (d == 0) dims_.erase(n); else dims_[n] = d;
        diffs_.erase(n);  // caller re-installs differentials after reshaping
        diffs_.erase(n - 1);
    }

    Matrix diff(int n) const {
        auto it = diffs_.find(n);
        if (it != diffs_.end()) return it->second;
        return Matrix::zero(field_, dim(n + 1), dim(n));
    }
    void set_diff(int n, const Matrix& m) {
        if (m.rows() != dim(n + 1) || m.cols() != dim(n))
            throw std::invalid_argument("set_diff: shape mismatch at degree " + std::to_string(n));
        if (m.is_zero()) diffs_.erase(n); else diffs_[n] = m;
    }

    int min_degree() const { return dims_.empty() ? 0 : dims_.begin()->first; }
    int max_degree() const { return dims_.empty() ? 0 : dims_.rbegin()->first; }

    bool valid() const {
        for (auto& [n, m] : diffs_) {
            if (m.rows() != dim(n + 1) || m.cols() != dim(n)) return false;
            if (!(diff(n + 1) * m).is_zero()) return false;
        }
        return true;
    }

    // (C[k])^n = C^(n+k), differential (-1)^k d.
    ChainComplex shifted(int k) const {
        ChainComplex r(field_);
        for (auto& [n, d] : dims_) r.dims_[n - k] = d;
        for (auto& [n, m] : diffs_) r.diffs_[n - k] = (k % 2 == 0) ? m : -m;
        return r;
    }

    ChainComplex direct_sum(const ChainComplex& o) const;

    // dim H^n = dim ker d_n - rank d_(n-1), per degree with support.
    std::map<int, std::size_t> homology_dims() const {
        std::map<int, std::size_t> h;
        for (auto& [n, d] : dims_) {
            std::size_t k = d - diff(n).rank();
            std::size_t b = diff(n - 1).rank();
            if (k > b) h[n] = k - b;
        }
        return h;
    }
    bool is_acyclic() const { return homology_dims().empty(); }
    std::size_t total_homology_dim() const {
        std::size_t t = 0;
        for (auto& [n, d] : homology_dims()) t += d;
        return t;
    }

    // Basis of H^n: columns are cycle representatives in C^n; also returns a
    // map sending a cycle (column vector in C^n) to coordinates in this basis.
    struct HomologyBasis {
        Matrix cycles;      // dim(n) x h, representative cycles
        Matrix cycle_space; // dim(n) x z, basis of ker d_n
        Matrix boundary;    // dim(n) x b, basis of im d_(n-1)
    };
    HomologyBasis homology_basis(int n) const;
    // Coordinates of cycle v (in C^n) w.r.t. homology_basis(n).cycles, mod boundaries.
    Matrix homology_coords(int n, const Matrix& cycles_as_cols) const;

    static ChainComplex single(Field f, int degree, std::size_t d) {
        ChainComplex c(f);
        c.set_dim(degree, d);
        return c;
    }

  private:
    Field field_;
    std::map<int, std::size_t> dims_;
    std::map<int, Matrix> diffs_;
};

inline ChainComplex ChainComplex::direct_sum(const ChainComplex& o) const {
    ChainComplex r(field_);
    int lo = std::min(min_degree(), o.min_degree()), hi = std::max(max_degree(), o.max_degree());
    for (int n = lo; n <= hi; ++n) {
        std::size_t d = dim(n) + o.dim(n);
        if (d) r.dims_[n] = d;
    }
    for (int n = lo; n <= hi; ++n) {
        if (r.dim(n) == 0 || r.dim(n + 1) == 0) continue;
        Matrix m(field_, r.dim(n + 1), r.dim(n));
        Matrix a = diff(n), b = o.diff(n);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m.at(dim(n + 1) + i, dim(n) + j) = b.at(i, j);
        r.set_diff(n, m);
    }
    return r;
}

inline ChainComplex::HomologyBasis ChainComplex::homology_basis(int n) const {
    HomologyBasis hb{Matrix(field_, dim(n), 0), Matrix(field_, dim(n), 0), Matrix(field_, dim(n), 0)};
    hb.cycle_space = diff(n).kernel_basis();
    // Image of d_(n-1): column space basis via echelon of the transpose.
    Matrix dm = diff(n - 1);
    Matrix::Echelon e = dm.transposed().echelon();
    Matrix img(field_, dim(n), e.pivots.size());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t c = 0; c < dim(n); ++c) img.at(c, r) = e.reduced.at(r, c);
    hb.boundary = img;
    // Extend the boundary basis to the cycle space; the added columns represent H^n.
    Matrix acc = img;
    Matrix reps(field_, dim(n), 0);
    for (std::size_t j = 0; j < hb.cycle_space.cols(); ++j) {
        Matrix v = hb.cycle_space.submatrix(0, j, dim(n), 1);
        Matrix trial = acc.hcat(v);
        if (trial.rank() > acc.rank()) {
            acc = trial;
            reps = reps.hcat(v);
        }
    }
    hb.cycles = reps;
    return hb;
}

inline Matrix ChainComplex::homology_coords(int n, const Matrix& cycles_as_cols) const {
    HomologyBasis hb = homology_basis(n);
    // Solve [cycles | boundary] * (x, y)^T = v; x gives the homology coordinates.
    Matrix sysm = hb.cycles.hcat(hb.boundary);
    auto sol = sysm.solve(cycles_as_cols);
    if (!sol) throw std::domain_error("homology_coords: input is not a cycle mod boundaries");
    return sol->submatrix(0, 0, hb.cycles.cols(), cycles_as_cols.cols());
}

// Strict map of complexes: components f_n : X^n -> Y^n commuting with d on the nose.
class ChainMap {
  public:
    ChainMap() = default;
    ChainMap(ChainComplex src, ChainComplex tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {}

    const ChainComplex& source() const { return src_; }
    const ChainComplex& target() const { return tgt_; }

    Matrix component(int n) const {
        auto it = comps_.find(n);
        if (it != comps_.end()) return it->second;
        return Matrix::zero(src_.field(), tgt_.dim(n), src_.dim(n));
    }
    void set_component(int n, const Matrix& m) {
        if (m.rows() != tgt_.dim(n) || m.cols() != src_.dim(n))
            throw std::invalid_argument("ChainMap component shape mismatch at degree " + std::to_string(n));
        if (m.is_zero()) comps_.erase(n); else comps_[n] = m;
    }

    bool commutes() const {
        int lo = std::min(src_.min_degree(), tgt_.min_degree());
        int hi = std::max(src_.max_degree(), tgt_.max_degree());
        for (int n = lo; n <= hi; ++n)
            if (tgt_.diff(n) * component(n) != component(n + 1) * src_.diff(n)) return false;
        return true;
    }
    bool is_zero_map() const {
        for (auto& [n, m] : comps_)
            if (!m.is_zero()) return false;
        return true;
    }

    static ChainMap identity(const ChainComplex& c) {
        ChainMap f(c, c);
        for (auto& [n, d] : c.dims()) f.set_component(n, Matrix::identity(c.field(), d));
        return f;
    }
    static ChainMap zero(const ChainComplex& src, const ChainComplex& tgt) { return ChainMap(src, tgt); }

    ChainMap compose_after(const ChainMap& g) const {  // (*this) o g
        ChainMap r(g.source(), tgt_);
        int lo = std::min(g.source().min_degree(), tgt_.min_degree());
        int hi = std::max(g.source().max_degree(), tgt_.max_degree());
        for (int n = lo; n <= hi; ++n) {
            Matrix m = component(n) * g.component(n);
            if (!m.is_zero()) r.set_component(n, m);
        }
        return r;
    }
    ChainMap operator+(const ChainMap& o) const {
        ChainMap r(src_, tgt_);
        int lo = std::min(src_.min_degree(), tgt_.min_degree());
        int hi = std::max(src_.max_degree(), tgt_.max_degree());
        for (int n = lo; n <= hi; ++n) {
            Matrix m = component(n) + o.component(n);
            if (!m.is_zero()) r.set_component(n, m);
        }
        return r;
    }
    ChainMap operator-(const ChainMap& o) const {
        ChainMap r(src_, tgt_);
        int lo = std::min(src_.min_degree(), tgt_.min_degree());
        int hi = std::max(src_.max_degree(), tgt_.max_degree());
        for (int n = lo; n <= hi; ++n) {
            Matrix m = component(n) - o.component(n);
            if (!m.is_zero()) r.set_component(n, m);
        }
        return r;
    }

    ChainMap shifted(int k) const {
        ChainMap r(src_.shifted(k), tgt_.shifted(k));
        for (auto& [n, m] : comps_) r.set_component(n - k, m);
        return r;
    }

    // Induced matrix H^n(f): coordinates w.r.t. the deterministic homology bases.
    Matrix homology_matrix(int n) const {
        ChainComplex::HomologyBasis sb = src_.homology_basis(n);
        if (sb.cycles.cols() == 0) return Matrix(src_.field(), tgt_.homology_basis(n).cycles.cols(), 0);
        Matrix mapped = component(n) * sb.cycles;
        return tgt_.homology_coords(n, mapped);
    }
    bool induces_same_on_homology(const ChainMap& o) const {
        int lo = std::min(src_.min_degree(), tgt_.min_degree());
        int hi = std::max(src_.max_degree(), tgt_.max_degree());
        for (int n = lo; n <= hi; ++n)
            if (homology_matrix(n) != o.homology_matrix(n)) return false;
        return true;
    }

  private:
    ChainComplex src_, tgt_;
    std::map<int, Matrix> comps_;
};

// Mapping cone: Cone(f)^n = X^(n+1) + Y^n, d(x,y) = (-dx, fx + dy).
inline ChainComplex cone(const ChainMap& f) {
    const ChainComplex& X = f.source();
    const ChainComplex& Y = f.target();
    Field k = X.field();
    ChainComplex c(k);
    int lo = std::min(X.min_degree() - 1, Y.min_degree());
    int hi = std::max(X.max_degree() - 1, Y.max_degree());
    for (int n = lo; n <= hi; ++n) c.set_dim(n, X.dim(n + 1) + Y.dim(n));
    for (int n = lo; n <= hi; ++n) {
        std::size_t rx = X.dim(n + 2), ry = Y.dim(n + 1), cx = X.dim(n + 1), cy = Y.dim(n);
        if ((rx + ry) == 0 || (cx + cy) == 0) continue;
        Matrix m(k, rx + ry, cx + cy);
        Matrix dx = X.diff(n + 1), fy = f.component(n + 1), dy = Y.diff(n);
        for (std::size_t i = 0; i < rx; ++i)
            for (std::size_t j = 0; j < cx; ++j) m.at(i, j) = m.reduce(-dx.at(i, j));
        for (std::size_t i = 0; i < ry; ++i)
            for (std::size_t j = 0; j < cx; ++j) m.at(rx + i, j) = fy.at(i, j);
        for (std::size_t i = 0; i < ry; ++i)
            for (std::size_t j = 0; j < cy; ++j) m.at(rx + i, cx + j) = dy.at(i, j);
        c.set_diff(n, m);
    }
    return c;
}

// Fiber = Cone[-1]; sits in the triangle Fib(f) -> X -> Y.
inline ChainComplex fiber(const ChainMap& f) { return cone(f).shifted(-1); }

// Canonical chain maps around the cone triangle X -> Y -> Cone(f) -> X[1].
inline ChainMap cone_inclusion(const ChainMap& f) {  // Y -> Cone(f)
    ChainComplex c = cone(f);
    ChainMap inc(f.target(), c);
    for (auto& [n, d] : f.target().dims()) {
        Matrix m(f.source().field(), c.dim(n), d);
        std::size_t off = f.source().dim(n + 1);
        for (std::size_t i = 0; i < d; ++i) m.at(off + i, i) = 1;
        inc.set_component(n, m);
    }
    return inc;
}

inline ChainMap cone_projection(const ChainMap& f) {  // Cone(f) -> X[1]
    ChainComplex c = cone(f);
    ChainComplex x1 = f.source().shifted(1);
    ChainMap pr(c, x1);
    for (auto& [n, d] : c.dims()) {
        std::size_t cx = f.source().dim(n + 1);
        if (cx == 0) continue;
        Matrix m(f.source().field(), cx, d);
        for (std::size_t i = 0; i < cx; ++i) m.at(i, i) = 1;
        pr.set_component(n, m);
    }
    return pr;
}

// Functoriality of cones: a strictly commuting square  u : src(f)->src(g),
// v : tgt(f)->tgt(g)  with  g u = v f  induces Cone(f) -> Cone(g).
inline ChainMap cone_map(const ChainMap& f, const ChainMap& g, const ChainMap& u, const ChainMap& v) {
    ChainComplex cf = cone(f), cg = cone(g);
    Field k = cf.field();
    ChainMap r(cf, cg);
    int lo = std::min(cf.min_degree(), cg.min_degree());
    int hi = std::max(cf.max_degree(), cg.max_degree());
    for (int n = lo; n <= hi; ++n) {
        std::size_t rX = g.source().dim(n + 1), rY = g.target().dim(n);
        std::size_t cX = f.source().dim(n + 1), cY = f.target().dim(n);
        if ((rX + rY) == 0 || (cX + cY) == 0) continue;
        Matrix m(k, rX + rY, cX + cY);
        Matrix mu = u.component(n + 1), mv = v.component(n);
        for (std::size_t i = 0; i < rX; ++i)
            for (std::size_t j = 0; j < cX; ++j) m.at(i, j) = mu.at(i, j);
        for (std::size_t i = 0; i < rY; ++i)
            for (std::size_t j = 0; j < cY; ++j) m.at(rX + i, cX + j) = mv.at(i, j);
        if (!m.is_zero()) r.set_component(n, m);
    }
    return r;
}

// Strictly commuting square of complexes   S --a--> W
//                                          |b       |c
//                                          E --e--> N     (c a = e b).
struct Square {
    ChainComplex S, W, E, N;
    ChainMap a, b, c, e;

    bool commutes() const {
        ChainMap lhs = c.compose_after(a), rhs = e.compose_after(b);
        return (lhs - rhs).is_zero_map();
    }
};

// Totalization: Cone( Cone(S -> W + E) -> N ).  Acyclic iff the square is
// exact (bicartesian).  Throws on a non-commuting square.
inline ChainComplex total_complex_of_square(const Square& sq) {
    if (!sq.commutes()) throw std::invalid_argument("total_complex_of_square: square does not commute");
    Field k = sq.S.field();
    ChainComplex WE = sq.W.direct_sum(sq.E);
    ChainMap alpha(sq.S, WE);
    int lo = std::min({sq.S.min_degree(), WE.min_degree(), sq.N.min_degree()});
    int hi = std::max({sq.S.max_degree(), WE.max_degree(), sq.N.max_degree()});
    for (int n = lo; n <= hi; ++n) {
        std::size_t rw = sq.W.dim(n), re = sq.E.dim(n), cs = sq.S.dim(n);
        if ((rw + re) == 0 || cs == 0) continue;
        Matrix m(k, rw + re, cs);
        Matrix ma = sq.a.component(n), mb = sq.b.component(n);
        for (std::size_t i = 0; i < rw; ++i)
            for (std::size_t j = 0; j < cs; ++j) m.at(i, j) = ma.at(i, j);
        for (std::size_t i = 0; i < re; ++i)
            for (std::size_t j = 0; j < cs; ++j) m.at(rw + i, j) = m.reduce(-mb.at(i, j));
        if (!m.is_zero()) alpha.set_component(n, m);
    }
    ChainComplex ca = cone(alpha);
    ChainMap beta(ca, sq.N);
    for (int n = lo - 2; n <= hi; ++n) {
        std::size_t rn = sq.N.dim(n);
        std::size_t cS = sq.S.dim(n + 1), cw = sq.W.dim(n), ce = sq.E.dim(n);
        if (rn == 0 || (cS + cw + ce) == 0) continue;
        Matrix m(k, rn, cS + cw + ce);
        Matrix mc = sq.c.component(n), me = sq.e.component(n);
        for (std::size_t i = 0; i < rn; ++i) {
            for (std::size_t j = 0; j < cw; ++j) m.at(i, cS + j) = mc.at(i, j);
            for (std::size_t j = 0; j < ce; ++j) m.at(i, cS + cw + j) = me.at(i, j);
        }
        if (!m.is_zero()) beta.set_component(n, m);
    }
    if (!beta.commutes()) throw std::logic_error("total_complex_of_square: internal beta not a chain map");
    return cone(beta);
}

inline bool square_exact(const Square& sq) { return total_complex_of_square(sq).is_acyclic(); }

}  // namespace frontlab
