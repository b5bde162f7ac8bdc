#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nuwigner/operator_matrix.hpp"
#include "nuwigner/report.hpp"

namespace nuwigner {

/// Basis rows on which an identity is required to hold.
using RowMask = std::vector<std::size_t>;

/// Rows 0..dim-1 minus `excluded`.
RowMask rows_except(std::size_t dim, const std::vector<std::size_t>& excluded);

/// An operator identity lhs == rhs, optionally restricted to a row mask.
///
/// A relation taken verbatim from printed formulas may also carry a corrected
/// right-hand side: if the printed form fails and the corrected one holds, the
/// check reports PassWithCaveat instead of Fail.
struct Relation {
    std::string id;
    OperatorMatrix lhs;
    OperatorMatrix rhs;
    std::optional<RowMask> mask;
    std::optional<OperatorMatrix> corrected_rhs;
    std::string correction;
    std::optional<std::string> note;
};

Relation make_relation(std::string id, OperatorMatrix lhs, OperatorMatrix rhs, std::optional<RowMask> mask = {});
Relation make_claim(std::string id, OperatorMatrix lhs, OperatorMatrix printed_rhs, OperatorMatrix corrected_rhs,
                    std::string correction);

/// Exact entrywise comparison on the masked rows. Entries whose difference
/// cannot be decided exactly (non-square-free radicands) are sampled at
/// max_degree + 2 points with tolerance 1e-12 and the mode becomes Mixed.
AlgebraReport check_relation(const std::string& relation_id, const OperatorMatrix& lhs, const OperatorMatrix& rhs,
                             const std::optional<RowMask>& mask = {});

AlgebraReport check(const Relation& relation);
/// Reports in input order.
std::vector<AlgebraReport> check_all(const std::vector<Relation>& relations);

/// The right-hand side that a passing report was established against.
const OperatorMatrix& effective_rhs(const Relation& relation, const AlgebraReport& report);

/// Frobenius norm of eval(lhs - rhs) restricted to the masked rows.
double numeric_residual(const OperatorMatrix& lhs, const OperatorMatrix& rhs, const std::optional<RowMask>& mask,
                        double nu);

/// Frobenius norm of eval(m) restricted to the masked rows.
double masked_norm(const OperatorMatrix& m, const std::optional<RowMask>& mask, double nu);

}  // namespace nuwigner
