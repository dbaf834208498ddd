#pragma once

#include <stdexcept>
#include <vector>

#include "qk/rational.hpp"

namespace qk {

// Dense rational matrix, row-major.  Sizes here stay in the hundreds, so no
// sparsity or pivoting heuristics beyond "first nonzero".
class RMatrix {
public:
    RMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("negative matrix dimension");
    }

    static RMatrix identity(int n) {
        RMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    friend RMatrix operator+(const RMatrix& x, const RMatrix& y) {
        x.check_same_shape(y);
        RMatrix out = x;
        for (std::size_t i = 0; i < out.a_.size(); ++i)
            out.a_[i] += y.a_[i];
        return out;
    }

    friend RMatrix operator-(const RMatrix& x, const RMatrix& y) {
        x.check_same_shape(y);
        RMatrix out = x;
        for (std::size_t i = 0; i < out.a_.size(); ++i)
            out.a_[i] -= y.a_[i];
        return out;
    }

    friend RMatrix operator*(const Rational& s, const RMatrix& x) {
        RMatrix out = x;
        for (auto& v : out.a_)
            v *= s;
        return out;
    }

    friend RMatrix operator*(const RMatrix& x, const RMatrix& y) {
        if (x.cols_ != y.rows_)
            throw std::invalid_argument("matrix shape mismatch");
        RMatrix out(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const Rational& v = x.at(i, k);
                if (v.is_zero())
                    continue;
                for (int j = 0; j < y.cols_; ++j) {
                    const Rational& w = y.at(k, j);
                    if (!w.is_zero())
                        out.at(i, j) += v * w;
                }
            }
        return out;
    }

    friend bool operator==(const RMatrix& x, const RMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero())
                return false;
        return true;
    }

    // Equality with lambda * identity (square matrices only).
    bool is_scalar(const Rational& lambda) const {
        if (rows_ != cols_)
            return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != (i == j ? lambda : Rational(0)))
                    return false;
        return true;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("vector length mismatch");
        std::vector<Rational> out(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero())
                    out[i] += at(i, j) * v[j];
        return out;
    }

private:
    void check_same_shape(const RMatrix& y) const {
        if (rows_ != y.rows_ || cols_ != y.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<Rational> a_;
};

// Basis of the (column-)kernel of m, via Gauss-Jordan elimination.
inline std::vector<std::vector<Rational>> kernel_basis(RMatrix m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!m.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != r)
            for (int j = 0; j < cols; ++j)
                std::swap(m.at(p, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (int j = 0; j < cols; ++j)
            m.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero())
                continue;
            Rational f = m.at(i, c);
            for (int j = 0; j < cols; ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c])
            continue;
        std::vector<Rational> v(cols);
        v[c] = 1;
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
            v[pivot_col[i]] = -m.at(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace qk
