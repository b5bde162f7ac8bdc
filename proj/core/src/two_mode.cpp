#include "nuwigner/two_mode.hpp"

#include <string>

#include "nuwigner/deformed.hpp"
#include "nuwigner/errors.hpp"
#include "nuwigner/single_mode.hpp"

namespace nuwigner {

namespace {

std::string mode(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

TwoModeSet build_two_mode(std::size_t d1, std::size_t d2) {
    if (d1 < 2 || d2 < 2)
        throw InvalidDimension("two-mode truncation needs d1, d2 >= 2, got " + std::to_string(d1) + ", " +
                               std::to_string(d2));
    const SingleModeSet m1 = build_single_mode(d1);
    const SingleModeSet m2 = build_single_mode(d2);
    const OperatorMatrix i1 = OperatorMatrix::identity(fock_basis(d1));
    const OperatorMatrix i2 = OperatorMatrix::identity(fock_basis(d2));
    return TwoModeSet{
        d1,
        d2,
        {tensor(m1.a, i2), tensor(i1, m2.a)},
        {tensor(m1.a_dag, i2), tensor(i1, m2.a_dag)},
        {tensor(m1.n_op, i2), tensor(i1, m2.n_op)},
        {tensor(m1.r_op, i2), tensor(i1, m2.r_op)},
    };
}

std::size_t two_mode_index(const TwoModeSet& s, long n1, long n2) {
    if (n1 < 0 || n2 < 0 || static_cast<std::size_t>(n1) >= s.d1 || static_cast<std::size_t>(n2) >= s.d2)
        throw DimensionTooSmall("two-mode state |" + std::to_string(n1) + "," + std::to_string(n2) +
                                "> lies outside the truncation");
    return static_cast<std::size_t>(n1) * s.d2 + static_cast<std::size_t>(n2);
}

std::vector<Relation> two_mode_relations(const TwoModeSet& s) {
    const Basis& basis = s.a[0].basis();
    const std::size_t dim = basis.size();
    const OperatorMatrix id = OperatorMatrix::identity(basis);
    const OperatorMatrix zero(basis);
    const std::array<std::size_t, 2> dims{s.d1, s.d2};

    // Rows whose mode-i occupation is below the truncation ceiling.
    auto below_top = [&](std::size_t i) {
        RowMask rows;
        for (std::size_t k = 0; k < dim; ++k) {
            const auto& l = basis[k].as<TwoModeLabel>();
            const long n = (i == 0) ? l.n1 : l.n2;
            if (static_cast<std::size_t>(n) + 1 < dims[i]) rows.push_back(k);
        }
        return rows;
    };

    std::vector<Relation> rel;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const std::string ij = mode(i) + ",adag" + mode(j);
            if (i == j) {
                rel.push_back(make_relation("two_mode/[a" + ij + "] = 1 + 2nu R" + mode(i),
                                            commutator(s.a[i], s.a_dag[j]),
                                            id + RadicalSum(NuPolynomial{0, 2}) * s.r_op[i], below_top(i)));
            } else {
                rel.push_back(make_relation("two_mode/[a" + ij + "] = 0", commutator(s.a[i], s.a_dag[j]), zero));
            }
        }
    rel.push_back(make_relation("two_mode/[a1,a2] = 0", commutator(s.a[0], s.a[1]), zero));
    rel.push_back(make_relation("two_mode/[adag1,adag2] = 0", commutator(s.a_dag[0], s.a_dag[1]), zero));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const std::string tag = mode(i) + ",";
            if (i == j) {
                rel.push_back(make_relation("two_mode/[N" + tag + "adag" + mode(j) + "] = adag" + mode(i),
                                            commutator(s.n_op[i], s.a_dag[j]), s.a_dag[i], below_top(i)));
                rel.push_back(make_relation("two_mode/[N" + tag + "a" + mode(j) + "] = -a" + mode(i),
                                            commutator(s.n_op[i], s.a[j]), -s.a[i]));
            } else {
                rel.push_back(make_relation("two_mode/[N" + tag + "adag" + mode(j) + "] = 0",
                                            commutator(s.n_op[i], s.a_dag[j]), zero));
                rel.push_back(make_relation("two_mode/[N" + tag + "a" + mode(j) + "] = 0",
                                            commutator(s.n_op[i], s.a[j]), zero));
            }
        }
    for (std::size_t i = 0; i < 2; ++i) {
        const std::string m = mode(i);
        rel.push_back(make_relation("two_mode/{R" + m + ",a" + m + "} = 0", anticommutator(s.r_op[i], s.a[i]), zero));
        rel.push_back(
            make_relation("two_mode/{adag" + m + ",R" + m + "} = 0", anticommutator(s.a_dag[i], s.r_op[i]), zero));
        const std::size_t j = 1 - i;
        rel.push_back(make_relation("two_mode/[R" + m + ",a" + mode(j) + "] = 0", commutator(s.r_op[i], s.a[j]), zero));
        rel.push_back(
            make_relation("two_mode/[R" + m + ",adag" + mode(j) + "] = 0", commutator(s.r_op[i], s.a_dag[j]), zero));
        rel.push_back(make_relation("two_mode/R" + m + "^2 = I", s.r_op[i] * s.r_op[i], id));

        std::vector<RadicalSum> numbers;
        for (const auto& l : basis) {
            const auto& t = l.as<TwoModeLabel>();
            numbers.emplace_back(deformed_number(i == 0 ? t.n1 : t.n2));
        }
        rel.push_back(make_relation("two_mode/adag" + m + " a" + m + " = [N" + m + "]", s.a_dag[i] * s.a[i],
                                    OperatorMatrix::diagonal(basis, numbers)));
    }
    return rel;
}

std::vector<AlgebraReport> audit_two_mode(const TwoModeSet& s) { return check_all(two_mode_relations(s)); }

}  // namespace nuwigner
