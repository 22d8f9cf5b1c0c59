#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace qsym {

using cplx = std::complex<double>;

struct CMatrix {
    int n = 0, m = 0;
    std::vector<cplx> a;

    CMatrix() = default;
    CMatrix(int rows, int cols) : n(rows), m(cols), a(size_t(rows) * size_t(cols)) {}

    static CMatrix identity(int k) {
        CMatrix r(k, k);
        for (int i = 0; i < k; ++i) r(i, i) = 1.0;
        return r;
    }
    static CMatrix zeros(int rows, int cols) { return CMatrix(rows, cols); }

    cplx& operator()(int i, int j) { return a[size_t(i) * size_t(m) + size_t(j)]; }
    const cplx& operator()(int i, int j) const { return a[size_t(i) * size_t(m) + size_t(j)]; }

    CMatrix operator*(const CMatrix& o) const {
        if (m != o.n) throw std::invalid_argument("matrix dimension mismatch");
        CMatrix r(n, o.m);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < m; ++k) {
                cplx v = (*this)(i, k);
                if (v == 0.0) continue;
                for (int j = 0; j < o.m; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }
    CMatrix operator+(const CMatrix& o) const {
        CMatrix r = *this;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
        return r;
    }
    CMatrix operator-(const CMatrix& o) const {
        CMatrix r = *this;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
        return r;
    }
    CMatrix scaled(cplx c) const {
        CMatrix r = *this;
        for (auto& v : r.a) v *= c;
        return r;
    }
    CMatrix adjoint() const {
        CMatrix r(m, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    double frobenius() const {
        double s = 0;
        for (const auto& v : a) s += std::norm(v);
        return std::sqrt(s);
    }

    // Largest singular value via power iteration on A*A. The start vector is
    // fixed so results are reproducible.
    double spectral_norm() const {
        if (a.empty()) return 0.0;
        double fro = frobenius();
        if (fro == 0.0) return 0.0;
        CMatrix M = adjoint() * (*this); // m x m, hermitian psd
        std::vector<cplx> x(size_t(m), cplx{});
        for (int i = 0; i < m; ++i) x[size_t(i)] = cplx(1.0 / (i + 1.0), 1.0 / (i + 2.0));
        auto apply = [&](const std::vector<cplx>& v) {
            std::vector<cplx> y(size_t(m), 0.0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) y[size_t(i)] += M(i, j) * v[size_t(j)];
            return y;
        };
        double lambda = 0.0;
        for (int it = 0; it < 200; ++it) {
            auto y = apply(x);
            double ny = 0;
            for (const auto& v : y) ny += std::norm(v);
            ny = std::sqrt(ny);
            if (ny < 1e-300) return 0.0;
            for (auto& v : y) v /= ny;
            double next = ny; // |Mx| with |x| = 1 converges to the top eigenvalue
            x = std::move(y);
            if (it > 20 && std::abs(next - lambda) <= 1e-15 * std::max(1.0, next)) {
                lambda = next;
                break;
            }
            lambda = next;
        }
        return std::sqrt(std::max(lambda, 0.0));
    }
};

// Deterministic standard normals from the raw engine stream (avoids any
// library-specific distribution behavior).
inline double std_normal(std::mt19937_64& rng) {
    double u1 = (double(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0); // (0,1)
    double u2 = (double(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

// Haar-distributed unitary: Ginibre matrix, Gram-Schmidt, phase fix.
inline CMatrix haar_unitary(int d, std::mt19937_64& rng) {
    CMatrix z(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) z(i, j) = cplx(std_normal(rng), std_normal(rng));
    // modified Gram-Schmidt on columns
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < j; ++k) {
            cplx dot = 0;
            for (int i = 0; i < d; ++i) dot += std::conj(z(i, k)) * z(i, j);
            for (int i = 0; i < d; ++i) z(i, j) -= dot * z(i, k);
        }
        double nrm = 0;
        for (int i = 0; i < d; ++i) nrm += std::norm(z(i, j));
        nrm = std::sqrt(nrm);
        for (int i = 0; i < d; ++i) z(i, j) /= nrm;
    }
    return z;
}

} // namespace qsym
