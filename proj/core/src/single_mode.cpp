#include "nuwigner/single_mode.hpp"

#include "nuwigner/deformed.hpp"
#include "nuwigner/errors.hpp"

namespace nuwigner {

OperatorMatrix scalar_operator(const Basis& basis, const NuPolynomial& value) {
    return OperatorMatrix::identity(basis) * RadicalSum(value);
}

SingleModeSet build_single_mode(std::size_t dim) {
    if (dim < 2) throw InvalidDimension("single-mode truncation needs dim >= 2, got " + std::to_string(dim));
    const Basis basis = fock_basis(dim);
    SingleModeSet s{dim, OperatorMatrix(basis), OperatorMatrix(basis), OperatorMatrix(basis), OperatorMatrix(basis)};
    for (std::size_t n = 0; n < dim; ++n) {
        const long nl = static_cast<long>(n);
        if (n > 0) s.a(n - 1, n) = RadicalSum::sqrt(deformed_number(nl));
        if (n + 1 < dim) s.a_dag(n + 1, n) = RadicalSum::sqrt(deformed_number(nl + 1));
        s.n_op(n, n) = RadicalSum(nl);
        s.r_op(n, n) = RadicalSum(parity_sign(nl));
    }
    return s;
}

std::vector<Relation> single_mode_relations(const SingleModeSet& s) {
    const Basis& basis = s.a.basis();
    const OperatorMatrix id = OperatorMatrix::identity(basis);
    const OperatorMatrix zero(basis);
    const RowMask below_top = rows_except(s.dim, {s.dim - 1});
    const RadicalSum nu(NuPolynomial::nu());

    std::vector<RadicalSum> numbers;
    for (std::size_t n = 0; n < s.dim; ++n) numbers.emplace_back(deformed_number(static_cast<long>(n)));

    std::vector<Relation> rel;
    rel.push_back(make_relation("single_mode/[a,adag] = 1 + 2nu R", commutator(s.a, s.a_dag),
                                id + RadicalSum(NuPolynomial{0, 2}) * s.r_op, below_top));
    rel.push_back(make_relation("single_mode/[N,adag] = adag", commutator(s.n_op, s.a_dag), s.a_dag, below_top));
    rel.push_back(make_relation("single_mode/[N,a] = -a", commutator(s.n_op, s.a), -s.a));
    rel.push_back(make_relation("single_mode/{R,a} = 0", anticommutator(s.r_op, s.a), zero));
    rel.push_back(make_relation("single_mode/{adag,R} = 0", anticommutator(s.a_dag, s.r_op), zero));
    rel.push_back(make_relation("single_mode/R^2 = I", s.r_op * s.r_op, id));
    rel.push_back(make_relation("single_mode/R^dag = R", s.r_op.adjoint(), s.r_op));
    rel.push_back(make_relation("single_mode/(a)^dag = adag", s.a.adjoint(), s.a_dag));
    rel.push_back(make_relation("single_mode/adag a = [N]", s.a_dag * s.a, OperatorMatrix::diagonal(basis, numbers)));
    rel.push_back(make_relation("single_mode/N = adag a - nu + nu R", s.n_op, s.a_dag * s.a - nu * id + nu * s.r_op));
    return rel;
}

std::vector<AlgebraReport> audit_single_mode(const SingleModeSet& s) { return check_all(single_mode_relations(s)); }

OperatorMatrix truncation_defect(const SingleModeSet& s) {
    const OperatorMatrix id = OperatorMatrix::identity(s.a.basis());
    return commutator(s.a, s.a_dag) - (id + RadicalSum(NuPolynomial{0, 2}) * s.r_op);
}

AlgebraReport check_truncation_defect(const SingleModeSet& s) {
    // a adag kills the top level while adag a leaves [dim-1] there.
    OperatorMatrix predicted(s.a.basis());
    predicted(s.dim - 1, s.dim - 1) = -RadicalSum(deformed_number(static_cast<long>(s.dim)));
    AlgebraReport r = check_relation("single_mode/[a,adag] - (1 + 2nu R) = -[dim] at the top row only",
                                     truncation_defect(s), predicted);
    r.note = "dim=" + std::to_string(s.dim);
    return r;
}

}  // namespace nuwigner
