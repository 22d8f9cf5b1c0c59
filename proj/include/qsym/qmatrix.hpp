#pragma once

#include <stdexcept>
#include <vector>

#include "qsym/rational.hpp"

namespace qsym {

// Dense rational matrix; just enough linear algebra for exact inverses and
// ranks (Gauss-Jordan with exact pivots).
struct QMatrix {
    int n = 0, m = 0;
    std::vector<Rational> a;

    QMatrix() = default;
    QMatrix(int rows, int cols) : n(rows), m(cols), a(size_t(rows) * size_t(cols)) {}

    static QMatrix identity(int k) {
        QMatrix q(k, k);
        for (int i = 0; i < k; ++i) q(i, i) = Rational(1);
        return q;
    }
    static QMatrix diagonal(const std::vector<Rational>& d) {
        QMatrix q(int(d.size()), int(d.size()));
        for (size_t i = 0; i < d.size(); ++i) q(int(i), int(i)) = d[i];
        return q;
    }

    Rational& operator()(int i, int j) { return a[size_t(i) * size_t(m) + size_t(j)]; }
    const Rational& operator()(int i, int j) const { return a[size_t(i) * size_t(m) + size_t(j)]; }

    bool is_diagonal() const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j && !(*this)(i, j).is_zero()) return false;
        return true;
    }

    int rank() const {
        QMatrix w = *this;
        int r = 0;
        for (int col = 0; col < m && r < n; ++col) {
            int piv = -1;
            for (int i = r; i < n; ++i)
                if (!w(i, col).is_zero()) { piv = i; break; }
            if (piv < 0) continue;
            for (int j = 0; j < m; ++j) std::swap(w(r, j), w(piv, j));
            Rational p = w(r, col);
            for (int i = r + 1; i < n; ++i) {
                if (w(i, col).is_zero()) continue;
                Rational f = w(i, col) / p;
                for (int j = col; j < m; ++j) w(i, j) -= f * w(r, j);
            }
            ++r;
        }
        return r;
    }

    QMatrix inverse() const {
        if (n != m) throw std::invalid_argument("inverse of non-square matrix");
        QMatrix w = *this;
        QMatrix inv = identity(n);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int i = col; i < n; ++i)
                if (!w(i, col).is_zero()) { piv = i; break; }
            if (piv < 0) throw std::invalid_argument("singular matrix");
            for (int j = 0; j < n; ++j) {
                std::swap(w(col, j), w(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
            Rational p = w(col, col);
            for (int j = 0; j < n; ++j) {
                w(col, j) /= p;
                inv(col, j) /= p;
            }
            for (int i = 0; i < n; ++i) {
                if (i == col || w(i, col).is_zero()) continue;
                Rational f = w(i, col);
                for (int j = 0; j < n; ++j) {
                    w(i, j) -= f * w(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }
};

} // namespace qsym
