#include "nuwigner/relation.hpp"

#include <algorithm>
#include <cmath>

#include "nuwigner/errors.hpp"

namespace nuwigner {

namespace {

constexpr double kNumericTolerance = 1e-12;

RowMask all_rows(std::size_t dim) {
    RowMask rows(dim);
    for (std::size_t i = 0; i < dim; ++i) rows[i] = i;
    return rows;
}

struct NumericOutcome {
    bool equal = true;
    double residual = 0.0;
};

NumericOutcome sample_difference(const RadicalSum& lhs, const RadicalSum& rhs) {
    const RadicalSum diff = lhs - rhs;
    const int samples = std::max(lhs.max_degree(), rhs.max_degree()) + 2;
    NumericOutcome out;
    for (int k = 0; k < samples; ++k) {
        const double nu = 0.05 + 0.45 * k;
        const double scale = 1.0 + std::abs(lhs.eval(nu)) + std::abs(rhs.eval(nu));
        const double r = std::abs(diff.eval(nu));
        out.residual = std::max(out.residual, r);
        if (r > kNumericTolerance * scale) out.equal = false;
    }
    return out;
}

}  // namespace

RowMask rows_except(std::size_t dim, const std::vector<std::size_t>& excluded) {
    RowMask rows;
    for (std::size_t i = 0; i < dim; ++i)
        if (std::find(excluded.begin(), excluded.end(), i) == excluded.end()) rows.push_back(i);
    return rows;
}

Relation make_relation(std::string id, OperatorMatrix lhs, OperatorMatrix rhs, std::optional<RowMask> mask) {
    return Relation{std::move(id), std::move(lhs), std::move(rhs), std::move(mask), std::nullopt, {}, std::nullopt};
}

Relation make_claim(std::string id, OperatorMatrix lhs, OperatorMatrix printed_rhs, OperatorMatrix corrected_rhs,
                    std::string correction) {
    return Relation{std::move(id),    std::move(lhs),        std::move(printed_rhs), std::nullopt,
                    std::move(corrected_rhs), std::move(correction), std::nullopt};
}

AlgebraReport check_relation(const std::string& relation_id, const OperatorMatrix& lhs, const OperatorMatrix& rhs,
                             const std::optional<RowMask>& mask) {
    if (lhs.dim() != rhs.dim()) throw DimensionMismatch("check_relation(" + relation_id + "): dimension mismatch");
    if (lhs.basis() != rhs.basis())
        throw DimensionMismatch("check_relation(" + relation_id + "): operands act on different bases");

    AlgebraReport report;
    report.relation_id = relation_id;
    bool used_numeric = false;
    const RowMask rows = mask ? *mask : all_rows(lhs.dim());
    for (std::size_t r : rows) {
        if (r >= lhs.dim()) throw DimensionMismatch("check_relation(" + relation_id + "): mask row out of range");
        for (std::size_t c = 0; c < lhs.dim(); ++c) {
            const RadicalSum& a = lhs(r, c);
            const RadicalSum& b = rhs(r, c);
            if (a == b) continue;
            const RadicalSum diff = a - b;
            if (!diff.zero_test_conclusive()) {
                used_numeric = true;
                const NumericOutcome n = sample_difference(a, b);
                report.max_residual = std::max(report.max_residual, n.residual);
                if (n.equal) continue;
            }
            report.verdict = Verdict::Fail;
            report.witness = Witness{r, c, b.to_string(), a.to_string()};
            report.mode = used_numeric ? VerificationMode::Mixed : VerificationMode::Exact;
            return report;
        }
    }
    report.mode = used_numeric ? VerificationMode::Mixed : VerificationMode::Exact;
    return report;
}

AlgebraReport check(const Relation& relation) {
    AlgebraReport printed = check_relation(relation.id, relation.lhs, relation.rhs, relation.mask);
    printed.note = relation.note;
    if (printed.verdict != Verdict::Fail || !relation.corrected_rhs) return printed;

    const AlgebraReport corrected = check_relation(relation.id, relation.lhs, *relation.corrected_rhs, relation.mask);
    if (corrected.verdict == Verdict::Fail) {
        printed.caveat = "corrected form also fails: " + relation.correction;
        return printed;
    }
    printed.verdict = Verdict::PassWithCaveat;
    printed.caveat = "printed form fails; holds as " + relation.correction;
    printed.max_residual = corrected.max_residual;
    return printed;
}

std::vector<AlgebraReport> check_all(const std::vector<Relation>& relations) {
    std::vector<AlgebraReport> out;
    out.reserve(relations.size());
    for (const auto& r : relations) out.push_back(check(r));
    return out;
}

const OperatorMatrix& effective_rhs(const Relation& relation, const AlgebraReport& report) {
    if (report.verdict == Verdict::PassWithCaveat && relation.corrected_rhs) return *relation.corrected_rhs;
    return relation.rhs;
}

double masked_norm(const OperatorMatrix& m, const std::optional<RowMask>& mask, double nu) {
    const RowMask rows = mask ? *mask : all_rows(m.dim());
    double s = 0.0;
    for (std::size_t r : rows)
        for (std::size_t c = 0; c < m.dim(); ++c) s += std::norm(m(r, c).eval(nu));
    return std::sqrt(s);
}

double numeric_residual(const OperatorMatrix& lhs, const OperatorMatrix& rhs, const std::optional<RowMask>& mask,
                        double nu) {
    const ComplexMatrix a = eval_matrix(lhs, nu);
    const ComplexMatrix b = eval_matrix(rhs, nu);
    const RowMask rows = mask ? *mask : all_rows(lhs.dim());
    double s = 0.0;
    for (std::size_t r : rows)
        for (std::size_t c = 0; c < lhs.dim(); ++c) s += std::norm(a(r, c) - b(r, c));
    return std::sqrt(s);
}

}  // namespace nuwigner
