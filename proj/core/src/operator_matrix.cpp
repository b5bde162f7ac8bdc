#include "nuwigner/operator_matrix.hpp"

#include <cmath>
#include <sstream>

#include "nuwigner/errors.hpp"

namespace nuwigner {

namespace {

std::string half_integer(long twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

}  // namespace

BasisLabel BasisLabel::fock(long n) {
    if (n < 0) throw InvalidDimension("Fock label requires n >= 0");
    return BasisLabel(FockLabel{n});
}

BasisLabel BasisLabel::two_mode(long n1, long n2) {
    if (n1 < 0 || n2 < 0) throw InvalidDimension("two-mode label requires n1, n2 >= 0");
    return BasisLabel(TwoModeLabel{n1, n2});
}

BasisLabel BasisLabel::spin(long two_j, long two_m) {
    if (two_j < 0 || std::abs(two_m) > two_j || (two_j - two_m) % 2 != 0)
        throw InvalidSpin("invalid spin label 2j=" + std::to_string(two_j) + ", 2m=" + std::to_string(two_m));
    return BasisLabel(SpinLabel{two_j, two_m});
}

std::string BasisLabel::to_string() const {
    if (is<FockLabel>()) return "|" + std::to_string(as<FockLabel>().n) + ">";
    if (is<TwoModeLabel>()) {
        const auto& t = as<TwoModeLabel>();
        return "|" + std::to_string(t.n1) + "," + std::to_string(t.n2) + ">";
    }
    const auto& s = as<SpinLabel>();
    return "|j=" + half_integer(s.two_j) + ",m=" + half_integer(s.two_m) + ">";
}

Basis fock_basis(std::size_t dim) {
    Basis b;
    b.reserve(dim);
    for (std::size_t n = 0; n < dim; ++n) b.push_back(BasisLabel::fock(static_cast<long>(n)));
    return b;
}

Basis two_mode_basis(std::size_t d1, std::size_t d2) {
    Basis b;
    b.reserve(d1 * d2);
    for (std::size_t n1 = 0; n1 < d1; ++n1)
        for (std::size_t n2 = 0; n2 < d2; ++n2)
            b.push_back(BasisLabel::two_mode(static_cast<long>(n1), static_cast<long>(n2)));
    return b;
}

Basis spin_basis(long two_j) {
    Basis b;
    for (long two_m = two_j; two_m >= -two_j; two_m -= 2) b.push_back(BasisLabel::spin(two_j, two_m));
    return b;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out{a.dim, std::vector<std::complex<double>>(a.dim * a.dim)};
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t k = 0; k < a.dim; ++k) {
            const auto aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < a.dim; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& z : m.data) s += std::norm(z);
    return std::sqrt(s);
}

OperatorMatrix::OperatorMatrix(Basis basis) : basis_(std::move(basis)) {
    if (basis_.empty()) throw InvalidDimension("operator basis must be nonempty");
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j)
            if (basis_[i] == basis_[j]) throw InvalidDimension("duplicate basis label " + basis_[i].to_string());
    entries_.resize(basis_.size() * basis_.size());
}

OperatorMatrix OperatorMatrix::identity(const Basis& basis) {
    OperatorMatrix m(basis);
    for (std::size_t i = 0; i < m.dim(); ++i) m(i, i) = RadicalSum(1);
    return m;
}

OperatorMatrix OperatorMatrix::diagonal(const Basis& basis, const std::vector<RadicalSum>& diag) {
    OperatorMatrix m(basis);
    if (diag.size() != m.dim()) throw DimensionMismatch("diagonal: wrong number of entries");
    for (std::size_t i = 0; i < m.dim(); ++i) m(i, i) = diag[i];
    return m;
}

bool OperatorMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool OperatorMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < dim(); ++c)
            if (r != c && !(*this)(r, c).is_zero()) return false;
    return true;
}

std::size_t OperatorMatrix::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& e : entries_) n += e.is_zero() ? 0 : 1;
    return n;
}

OperatorMatrix OperatorMatrix::adjoint() const {
    OperatorMatrix out(basis_);
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < dim(); ++c) out(c, r) = (*this)(r, c).conj();
    return out;
}

OperatorMatrix OperatorMatrix::restricted(const std::vector<std::size_t>& indices, Basis new_basis) const {
    if (indices.size() != new_basis.size()) throw DimensionMismatch("restricted: index/basis size mismatch");
    OperatorMatrix out(std::move(new_basis));
    for (std::size_t r = 0; r < indices.size(); ++r)
        for (std::size_t c = 0; c < indices.size(); ++c) out(r, c) = (*this)(indices.at(r), indices.at(c));
    return out;
}

OperatorMatrix OperatorMatrix::relabeled(Basis new_basis) const {
    if (new_basis.size() != dim()) throw DimensionMismatch("relabeled: dimension mismatch");
    OperatorMatrix out(std::move(new_basis));
    out.entries_ = entries_;
    return out;
}

void OperatorMatrix::require_same_basis(const OperatorMatrix& o, const char* op) const {
    if (dim() != o.dim()) {
        std::ostringstream msg;
        msg << op << ": dimension mismatch (" << dim() << " vs " << o.dim() << ")";
        throw DimensionMismatch(msg.str());
    }
    if (basis_ != o.basis_) throw DimensionMismatch(std::string(op) + ": operands act on different bases");
}

OperatorMatrix OperatorMatrix::operator-() const {
    OperatorMatrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& o) {
    require_same_basis(o, "operator+");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (!o.entries_[k].is_zero()) entries_[k] += o.entries_[k];
    return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& o) {
    require_same_basis(o, "operator-");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (!o.entries_[k].is_zero()) entries_[k] -= o.entries_[k];
    return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(const RadicalSum& s) {
    for (auto& e : entries_)
        if (!e.is_zero()) e = e * s;
    return *this;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    a.require_same_basis(b, "operator*");
    const std::size_t n = a.dim();
    // Column indices of the nonzero entries of each row of b.
    std::vector<std::vector<std::size_t>> b_cols(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            if (!b(k, j).is_zero()) b_cols[k].push_back(j);

    OperatorMatrix out(a.basis_);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const RadicalSum& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j : b_cols[k]) out(i, j) += aik * b(k, j);
        }
    return out;
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) { return a * b - b * a; }

OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b) { return a * b + b * a; }

OperatorMatrix tensor(const OperatorMatrix& a, const OperatorMatrix& b) {
    for (const auto& l : a.basis())
        if (!l.is<FockLabel>()) throw DimensionMismatch("tensor: left factor must act on a Fock basis");
    for (const auto& l : b.basis())
        if (!l.is<FockLabel>()) throw DimensionMismatch("tensor: right factor must act on a Fock basis");
    const std::size_t d1 = a.dim();
    const std::size_t d2 = b.dim();
    OperatorMatrix out(two_mode_basis(d1, d2));
    for (std::size_t r1 = 0; r1 < d1; ++r1)
        for (std::size_t c1 = 0; c1 < d1; ++c1) {
            const RadicalSum& x = a(r1, c1);
            if (x.is_zero()) continue;
            for (std::size_t r2 = 0; r2 < d2; ++r2)
                for (std::size_t c2 = 0; c2 < d2; ++c2) {
                    const RadicalSum& y = b(r2, c2);
                    if (y.is_zero()) continue;
                    out(r1 * d2 + r2, c1 * d2 + c2) = x * y;
                }
        }
    return out;
}

ComplexMatrix eval_matrix(const OperatorMatrix& a, double nu) {
    ComplexMatrix out{a.dim(), std::vector<std::complex<double>>(a.dim() * a.dim())};
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(r, c).eval(nu);
    return out;
}

}  // namespace nuwigner
