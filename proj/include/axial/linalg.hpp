#pragma once

#include "axial/rational.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <tuple>
#include <utility>

namespace axial {

/// Dense matrix over exact rationals, row-major.
class QMatrix {
public:
    QMatrix() : cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : cols_(cols), data_(rows, QVec(cols, Rat(0))) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return data_.size(); }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i][j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i][j]; }

    QVec& row(std::size_t i) { return data_[i]; }
    const QVec& row(std::size_t i) const { return data_[i]; }

    void push_row(QVec v) {
        assert(v.size() == cols_ || data_.empty());
        if (data_.empty()) cols_ = v.size();
        data_.push_back(std::move(v));
    }

    bool operator==(const QMatrix& o) const {
        return cols_ == o.cols_ && data_ == o.data_;
    }

    QMatrix transposed() const {
        QMatrix t(cols_, rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (data_[i][j] != 0) t(j, i) = data_[i][j];
        return t;
    }

    // this * m
    QMatrix mul(const QMatrix& m) const {
        assert(cols_ == m.rows());
        QMatrix r(rows(), m.cols());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& a = data_[i][k];
                if (a == 0) continue;
                add_scaled(r.row(i), a, m.row(k));
            }
        return r;
    }

    // Row-vector convention: v -> v * this (v indexed by rows of *this).
    QVec apply(const QVec& v) const {
        assert(v.size() == rows());
        QVec r(cols_, Rat(0));
        for (std::size_t i = 0; i < rows(); ++i)
            if (v[i] != 0) add_scaled(r, v[i], data_[i]);
        return r;
    }

    bool is_symmetric() const {
        if (rows() != cols_) return false;
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (data_[i][j] != data_[j][i]) return false;
        return true;
    }

private:
    std::size_t cols_;
    std::vector<QVec> data_;
};

/// Row space in reduced echelon form, maintained incrementally.
/// The RREF basis is canonical, so two spaces are equal iff rows() match.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<QVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Reduce v against the current basis (eliminates pivot coordinates).
    QVec reduce(QVec v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rat& c = v[pivots_[k]];
            if (c != 0) add_scaled(v, -c, rows_[k]);
        }
        return v;
    }

    bool contains(const QVec& v) const { return is_zero(reduce(v)); }

    // Insert v; returns true when the rank grew.
    bool insert(QVec v) {
        assert(v.size() == ambient_);
        v = reduce(std::move(v));
        std::size_t p = 0;
        while (p < ambient_ && v[p] == 0) ++p;
        if (p == ambient_) return false;
        Rat inv = Rat(1) / v[p];
        for (auto& x : v)
            if (x != 0) x *= inv;
        // Back-eliminate the new pivot from existing rows, keep rows sorted.
        for (auto& r : rows_)
            if (r[p] != 0) add_scaled(r, -r[p], v);
        std::size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < p) ++at;
        rows_.insert(rows_.begin() + at, std::move(v));
        pivots_.insert(pivots_.begin() + at, p);
        return true;
    }

    bool operator==(const EchelonBasis& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }

private:
    std::size_t ambient_;
    std::vector<QVec> rows_;       // RREF rows, pivot columns ascending
    std::vector<std::size_t> pivots_;
};

/// A linear subspace identified by its canonical RREF basis.
struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<QVec> basis;  // RREF rows

    std::size_t dim() const { return basis.size(); }

    static Subspace from(const EchelonBasis& eb) {
        return Subspace{eb.ambient(), eb.rows()};
    }

    bool operator==(const Subspace& o) const {
        return ambient_dim == o.ambient_dim && basis == o.basis;
    }

    bool contains(const QVec& v) const {
        EchelonBasis eb(ambient_dim);
        for (const auto& r : basis) eb.insert(r);
        return eb.contains(v);
    }
};

struct RrefResult {
    std::size_t rank = 0;
    QMatrix reduced;
    std::vector<std::size_t> pivot_cols;
};

inline RrefResult rref(const QMatrix& m) {
    EchelonBasis eb(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) eb.insert(m.row(i));
    RrefResult r;
    r.rank = eb.rank();
    r.pivot_cols = eb.pivots();
    r.reduced = QMatrix(m.rows(), m.cols());
    for (std::size_t i = 0; i < eb.rank(); ++i) r.reduced.row(i) = eb.rows()[i];
    return r;
}

/// Right null space: all v with m * v^T = 0.
inline Subspace kernel(const QMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivot_cols) is_pivot[p] = true;
    EchelonBasis eb(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        QVec v(m.cols(), Rat(0));
        v[j] = 1;
        for (std::size_t k = 0; k < r.rank; ++k)
            v[r.pivot_cols[k]] = -r.reduced(k, j);
        eb.insert(std::move(v));
    }
    return Subspace::from(eb);
}

/// Full solution set of coeffs * x = rhs: a particular solution (if any)
/// plus the homogeneous kernel.
inline std::pair<std::optional<QVec>, Subspace> solve_linear_system(const QMatrix& coeffs,
                                                                    const QVec& rhs) {
    assert(rhs.size() == coeffs.rows());
    QMatrix aug(coeffs.rows(), coeffs.cols() + 1);
    for (std::size_t i = 0; i < coeffs.rows(); ++i) {
        aug.row(i) = coeffs.row(i);
        aug.row(i).push_back(rhs[i]);
    }
    RrefResult r = rref(aug);
    std::optional<QVec> particular;
    bool consistent = true;
    for (std::size_t k = 0; k < r.rank; ++k)
        if (r.pivot_cols[k] == coeffs.cols()) consistent = false;
    if (consistent) {
        QVec x(coeffs.cols(), Rat(0));
        for (std::size_t k = 0; k < r.rank; ++k)
            x[r.pivot_cols[k]] = r.reduced(k, coeffs.cols());
        particular = std::move(x);
    }
    return {particular, kernel(coeffs)};
}

/// Inertia (n_pos, n_zero, n_neg) of a symmetric matrix, by exact symmetric
/// Gaussian pivoting. When every remaining diagonal entry vanishes but some
/// off-diagonal entry m[i][j] != 0, the congruence e_i += e_j creates the
/// pivot 2*m[i][j] and the elimination proceeds.
inline std::tuple<std::size_t, std::size_t, std::size_t> sym_signature(QMatrix m) {
    if (!m.is_symmetric()) throw std::invalid_argument("sym_signature: matrix not symmetric");
    const std::size_t n = m.rows();
    std::vector<bool> done(n, false);
    std::size_t pos = 0, neg = 0;
    for (;;) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n && piv == n; ++i)
            if (!done[i] && m(i, i) != 0) piv = i;
        if (piv == n) {
            std::size_t bi = n, bj = n;
            for (std::size_t i = 0; i < n && bi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!done[j] && m(i, j) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            }
            if (bi == n) break;  // remaining block is zero
            for (std::size_t k = 0; k < n; ++k)
                if (!done[k]) m(bi, k) += m(bj, k);
            for (std::size_t k = 0; k < n; ++k)
                if (!done[k]) m(k, bi) += m(k, bj);
            piv = bi;
        }
        const Rat d = m(piv, piv);
        (d > 0 ? pos : neg) += 1;
        for (std::size_t r = 0; r < n; ++r) {
            if (done[r] || r == piv || m(r, piv) == 0) continue;
            Rat f = m(r, piv) / d;
            for (std::size_t c = 0; c < n; ++c)
                if (!done[c]) m(r, c) -= f * m(piv, c);
            for (std::size_t c = 0; c < n; ++c)
                if (!done[c]) m(c, r) -= f * m(c, piv);
        }
        done[piv] = true;
    }
    return {pos, n - pos - neg, neg};
}

}  // namespace axial
