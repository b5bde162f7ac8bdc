#pragma once

// Double-precision reference implementations, written from the defining
// formulas and independent of the exact library types.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

struct Dense {
    std::size_t n = 0;
    std::vector<cd> a;

    explicit Dense(std::size_t dim = 0) : n(dim), a(dim * dim) {}
    cd& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
    cd operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

inline Dense identity(std::size_t n) {
    Dense m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

inline Dense operator*(const Dense& x, const Dense& y) {
    Dense z(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k)
            for (std::size_t j = 0; j < x.n; ++j) z(i, j) += x(i, k) * y(k, j);
    return z;
}

inline Dense operator+(const Dense& x, const Dense& y) {
    Dense z(x.n);
    for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
    return z;
}

inline Dense operator-(const Dense& x, const Dense& y) {
    Dense z(x.n);
    for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
    return z;
}

inline Dense operator*(cd s, const Dense& x) {
    Dense z(x.n);
    for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = s * x.a[i];
    return z;
}

inline Dense commutator(const Dense& x, const Dense& y) { return x * y - y * x; }
inline Dense anticommutator(const Dense& x, const Dense& y) { return x * y + y * x; }

inline Dense kron(const Dense& x, const Dense& y) {
    Dense z(x.n * y.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t j = 0; j < x.n; ++j)
            for (std::size_t k = 0; k < y.n; ++k)
                for (std::size_t l = 0; l < y.n; ++l) z(i * y.n + k, j * y.n + l) = x(i, j) * y(k, l);
    return z;
}

inline double max_abs_diff(const Dense& x, const Dense& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
    return m;
}

inline double bracket(long n, double nu) { return static_cast<double>(n) + (n % 2 == 0 ? 0.0 : 2.0 * nu); }

inline Dense lowering(std::size_t dim, double nu) {
    Dense m(dim);
    for (std::size_t n = 1; n < dim; ++n) m(n - 1, n) = std::sqrt(bracket(static_cast<long>(n), nu));
    return m;
}

inline Dense raising(std::size_t dim, double nu) {
    Dense m(dim);
    for (std::size_t n = 0; n + 1 < dim; ++n) m(n + 1, n) = std::sqrt(bracket(static_cast<long>(n) + 1, nu));
    return m;
}

inline Dense reflection(std::size_t dim) {
    Dense m(dim);
    for (std::size_t n = 0; n < dim; ++n) m(n, n) = n % 2 == 0 ? 1.0 : -1.0;
    return m;
}

inline Dense number(std::size_t dim) {
    Dense m(dim);
    for (std::size_t n = 0; n < dim; ++n) m(n, n) = static_cast<double>(n);
    return m;
}

}  // namespace oracle
