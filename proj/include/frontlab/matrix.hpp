#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "frontlab/field.hpp"

namespace frontlab {

// Dense matrix over Q or F_p with exact arithmetic.  Entries are stored as
// mpq_class; over a prime field they are kept as canonical integers in [0,p).
// Matrices of size 0 x n and n x 0 are legal and show up constantly (zero
// chambers, empty degrees), so every routine must tolerate them.
class Matrix {
  public:
    Matrix() : field_(Field::rationals()), rows_(0), cols_(0) {}
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, mpq_class(0)) {}

    static Matrix identity(Field f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const mpq_class& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    mpq_class& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    void set(std::size_t r, std::size_t c, const mpq_class& v) { at(r, c) = reduce(v); }
    void set(std::size_t r, std::size_t c, long v) { at(r, c) = reduce(mpq_class(v)); }

    mpq_class reduce(const mpq_class& v) const;

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const mpq_class& s) const;
    Matrix transposed() const;

    // [this | o] side by side resp. stacked.
    Matrix hcat(const Matrix& o) const;
    Matrix vcat(const Matrix& o) const;
    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    std::size_t rank() const;
    // Column-space basis of the kernel: returns cols x k matrix whose columns span ker.
    Matrix kernel_basis() const;
    // Particular solution of this * x = b (matrix of column vectors), or nullopt.
    // Deterministic: free variables are set to zero, pivots chosen lexicographically.
    std::optional<Matrix> solve(const Matrix& b) const;
    std::optional<Matrix> inverse() const;

    // Row echelon data used by the routines above; exposed for basis tracking.
    struct Echelon {
        Matrix reduced;               // RREF of the input
        std::vector<std::size_t> pivots;  // pivot column per nonzero row
    };
    Echelon echelon() const;

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<mpq_class> a_;
};

inline mpq_class Matrix::reduce(const mpq_class& v) const {
    if (!field_.is_prime_field()) {
        mpq_class c = v;
        c.canonicalize();
        return c;
    }
    // v must be an integer mod p; rational inputs get den-inverted.
    mpz_class p(field_.p);
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class r = num % p;
    if (r < 0) r += p;
    if (den != 1) {
        mpz_class d = den % p, inv;
        if (d < 0) d += p;
        if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("division by zero mod p");
        r = (r * inv) % p;
    }
    return mpq_class(r);
}

inline bool Matrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

inline bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

inline Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = reduce(a_[i] + o.a_[i]);
    return r;
}

inline Matrix Matrix::operator-(const Matrix& o) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = reduce(a_[i] - o.a_[i]);
    return r;
}

inline Matrix Matrix::operator-() const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = reduce(-a_[i]);
    return r;
}

inline Matrix Matrix::scaled(const mpq_class& s) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = reduce(a_[i] * s);
    return r;
}

inline Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix::mul: shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpq_class& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j) == 0) continue;
                r.a_[i * o.cols_ + j] += x * o.at(k, j);
            }
        }
    for (auto& v : r.a_) v = reduce(v);
    return r;
}

inline Matrix Matrix::transposed() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

inline Matrix Matrix::hcat(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hcat: row mismatch");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

inline Matrix Matrix::vcat(const Matrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vcat: col mismatch");
    Matrix r(field_, rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

inline Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix r(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

inline Matrix::Echelon Matrix::echelon() const {
    Echelon e{*this, {}};
    Matrix& m = e.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = rows_;
        for (std::size_t i = row; i < rows_; ++i)
            if (m.at(i, col) != 0) { piv = i; break; }
        if (piv == rows_) continue;
        if (piv != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(row, j), m.at(piv, j));
        mpq_class inv = m.reduce(mpq_class(1) / m.at(row, col));
        for (std::size_t j = 0; j < cols_; ++j) m.at(row, j) = m.reduce(m.at(row, j) * inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            mpq_class factor = m.at(i, col);
            for (std::size_t j = 0; j < cols_; ++j)
                m.at(i, j) = m.reduce(m.at(i, j) - factor * m.at(row, j));
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

inline std::size_t Matrix::rank() const { return echelon().pivots.size(); }

inline Matrix Matrix::kernel_basis() const {
    Echelon e = echelon();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::size_t k = cols_ - e.pivots.size();
    Matrix basis(field_, cols_, k);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.at(free_col, out) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            basis.at(e.pivots[r], out) = basis.reduce(-e.reduced.at(r, free_col));
        ++out;
    }
    return basis;
}

inline std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    if (b.rows() != rows_) throw std::invalid_argument("solve: rhs shape mismatch");
    Matrix aug = hcat(b);
    Echelon e = aug.echelon();
    // Any pivot falling in the rhs block means inconsistency.
    for (std::size_t c : e.pivots)
        if (c >= cols_) return std::nullopt;
    Matrix x(field_, cols_, b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(e.pivots[r], j) = e.reduced.at(r, cols_ + j);
    return x;
}

inline std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto x = solve(identity(field_, rows_));
    if (!x) return std::nullopt;
    if ((*this) * (*x) != identity(field_, rows_)) return std::nullopt;
    return x;
}

}  // namespace frontlab
