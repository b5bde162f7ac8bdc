#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "nuwigner/operator_matrix.hpp"
#include "nuwigner/relation.hpp"

namespace nuwigner {

/// Two-mode Wigner oscillator: index 0 is mode 1 (a (x) I), index 1 is mode 2 (I (x) a).
struct TwoModeSet {
    std::size_t d1 = 0;
    std::size_t d2 = 0;
    std::array<OperatorMatrix, 2> a;
    std::array<OperatorMatrix, 2> a_dag;
    std::array<OperatorMatrix, 2> n_op;
    std::array<OperatorMatrix, 2> r_op;
};

/// Throws InvalidDimension unless d1, d2 >= 2.
TwoModeSet build_two_mode(std::size_t d1, std::size_t d2);

/// Basis index of |n1, n2> in the row-major two-mode basis.
std::size_t two_mode_index(const TwoModeSet& s, long n1, long n2);

std::vector<Relation> two_mode_relations(const TwoModeSet& s);
std::vector<AlgebraReport> audit_two_mode(const TwoModeSet& s);

}  // namespace nuwigner
