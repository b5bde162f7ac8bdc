#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "nuwigner/radical_sum.hpp"

namespace nuwigner {

struct FockLabel {
    long n = 0;
    friend bool operator==(const FockLabel&, const FockLabel&) = default;
};

struct TwoModeLabel {
    long n1 = 0;
    long n2 = 0;
    friend bool operator==(const TwoModeLabel&, const TwoModeLabel&) = default;
};

/// |j, m> stored as (2j, 2m) so half-integers stay integral.
struct SpinLabel {
    long two_j = 0;
    long two_m = 0;
    friend bool operator==(const SpinLabel&, const SpinLabel&) = default;
};

/// Row/column meaning of an operator matrix: Fock |n>, two-mode |n1,n2> or spin |j,m~>.
class BasisLabel {
public:
    using Value = std::variant<FockLabel, TwoModeLabel, SpinLabel>;

    static BasisLabel fock(long n);
    static BasisLabel two_mode(long n1, long n2);
    static BasisLabel spin(long two_j, long two_m);

    const Value& value() const { return value_; }
    template <class T>
    bool is() const { return std::holds_alternative<T>(value_); }
    template <class T>
    const T& as() const { return std::get<T>(value_); }

    std::string to_string() const;

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;

private:
    explicit BasisLabel(Value v) : value_(v) {}
    Value value_;
};

using Basis = std::vector<BasisLabel>;

Basis fock_basis(std::size_t dim);
/// Row-major in (n1, n2).
Basis two_mode_basis(std::size_t d1, std::size_t d2);
/// m = j, j-1, ..., -j.
Basis spin_basis(long two_j);

/// Dense complex matrix used by the numeric backend (row-major).
struct ComplexMatrix {
    std::size_t dim = 0;
    std::vector<std::complex<double>> data;

    std::complex<double>& operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
    const std::complex<double>& operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& m);

/// Dense square matrix over RadicalSum on a labeled basis.
class OperatorMatrix {
public:
    /// Zero operator. Labels must be pairwise distinct and the basis nonempty.
    explicit OperatorMatrix(Basis basis);

    static OperatorMatrix identity(const Basis& basis);
    static OperatorMatrix diagonal(const Basis& basis, const std::vector<RadicalSum>& diag);

    std::size_t dim() const { return basis_.size(); }
    const Basis& basis() const { return basis_; }

    const RadicalSum& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim() + c]; }
    RadicalSum& operator()(std::size_t r, std::size_t c) { return entries_[r * dim() + c]; }

    bool is_zero() const;
    bool is_diagonal() const;
    std::size_t nonzero_count() const;

    OperatorMatrix adjoint() const;
    /// Sub-block on the given basis indices, relabeled with `new_basis`.
    OperatorMatrix restricted(const std::vector<std::size_t>& indices, Basis new_basis) const;
    OperatorMatrix relabeled(Basis new_basis) const;

    OperatorMatrix operator-() const;
    OperatorMatrix& operator+=(const OperatorMatrix& o);
    OperatorMatrix& operator-=(const OperatorMatrix& o);
    OperatorMatrix& operator*=(const RadicalSum& s);

    friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
    friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator*(OperatorMatrix a, const RadicalSum& s) { return a *= s; }
    friend OperatorMatrix operator*(const RadicalSum& s, OperatorMatrix a) { return a *= s; }

    friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

private:
    void require_same_basis(const OperatorMatrix& o, const char* op) const;

    Basis basis_;
    std::vector<RadicalSum> entries_;
};

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b);
/// Kronecker product of two Fock-basis operators; `a` indexes n1 (major), `b` indexes n2.
OperatorMatrix tensor(const OperatorMatrix& a, const OperatorMatrix& b);

/// Entrywise numeric evaluation; NegativeRadicand propagates.
ComplexMatrix eval_matrix(const OperatorMatrix& a, double nu);

}  // namespace nuwigner
