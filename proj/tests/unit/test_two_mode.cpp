#include "doctest.h"
#include "nuwigner/errors.hpp"
#include "nuwigner/single_mode.hpp"
#include "nuwigner/two_mode.hpp"
#include "oracle.hpp"

using namespace nuwigner;

namespace {

oracle::Dense to_dense(const ComplexMatrix& m) {
    oracle::Dense d(m.dim);
    d.a = m.data;
    return d;
}

}  // namespace

TEST_CASE("operators are Kronecker products of single-mode operators") {
    const std::size_t d1 = 3;
    const std::size_t d2 = 4;
    const TwoModeSet s = build_two_mode(d1, d2);
    for (double nu : {0.0, 0.25, 2.0}) {
        const oracle::Dense a1 = oracle::kron(oracle::lowering(d1, nu), oracle::identity(d2));
        const oracle::Dense a2 = oracle::kron(oracle::identity(d1), oracle::lowering(d2, nu));
        const oracle::Dense r1 = oracle::kron(oracle::reflection(d1), oracle::identity(d2));
        const oracle::Dense r2 = oracle::kron(oracle::identity(d1), oracle::reflection(d2));
        CHECK(oracle::max_abs_diff(to_dense(eval_matrix(s.a[0], nu)), a1) < 1e-13);
        CHECK(oracle::max_abs_diff(to_dense(eval_matrix(s.a[1], nu)), a2) < 1e-13);
        CHECK(oracle::max_abs_diff(to_dense(eval_matrix(s.r_op[0], nu)), r1) < 1e-13);
        CHECK(oracle::max_abs_diff(to_dense(eval_matrix(s.r_op[1], nu)), r2) < 1e-13);
    }
}

TEST_CASE("all relations pass for d1, d2 <= 10") {
    for (std::size_t d1 = 2; d1 <= 10; ++d1)
        for (std::size_t d2 = 2; d2 <= 10; ++d2)
            for (const AlgebraReport& r : audit_two_mode(build_two_mode(d1, d2)))
                CHECK_MESSAGE(r.verdict == Verdict::Pass, r.relation_id, " d1=", d1, " d2=", d2);
}

TEST_CASE("swapping the modes swaps the operators") {
    const TwoModeSet s = build_two_mode(3, 5);
    const TwoModeSet t = build_two_mode(5, 3);
    for (long n1 = 0; n1 < 3; ++n1)
        for (long n2 = 0; n2 < 5; ++n2)
            for (long m1 = 0; m1 < 3; ++m1)
                for (long m2 = 0; m2 < 5; ++m2) {
                    const std::size_t r = two_mode_index(s, n1, n2);
                    const std::size_t c = two_mode_index(s, m1, m2);
                    const std::size_t rt = two_mode_index(t, n2, n1);
                    const std::size_t ct = two_mode_index(t, m2, m1);
                    for (std::size_t i = 0; i < 2; ++i) {
                        CHECK(s.a[i](r, c) == t.a[1 - i](rt, ct));
                        CHECK(s.a_dag[i](r, c) == t.a_dag[1 - i](rt, ct));
                        CHECK(s.r_op[i](r, c) == t.r_op[1 - i](rt, ct));
                    }
                }
}

TEST_CASE("indices and errors") {
    const TwoModeSet s = build_two_mode(3, 4);
    CHECK(two_mode_index(s, 1, 2) == 6);
    CHECK_THROWS_AS(two_mode_index(s, 3, 0), DimensionTooSmall);
    CHECK_THROWS_AS(build_two_mode(1, 4), InvalidDimension);
}

TEST_CASE("masked rows exclude the mode ceiling") {
    const TwoModeSet s = build_two_mode(2, 3);
    const std::vector<Relation> rels = two_mode_relations(s);
    const Relation& first = rels.front();
    REQUIRE(first.mask);
    for (std::size_t row : *first.mask) CHECK(first.lhs.basis()[row].as<TwoModeLabel>().n1 == 0);
}
