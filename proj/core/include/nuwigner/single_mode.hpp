#pragma once

#include <cstddef>
#include <vector>

#include "nuwigner/operator_matrix.hpp"
#include "nuwigner/relation.hpp"

namespace nuwigner {

/// a, a^dag, N and R = (-1)^N on the truncated Fock space |0>..|dim-1>.
struct SingleModeSet {
    std::size_t dim = 0;
    OperatorMatrix a;
    OperatorMatrix a_dag;
    OperatorMatrix n_op;
    OperatorMatrix r_op;
};

/// a|n> = sqrt([n]_nu)|n-1>, a^dag|n> = sqrt([n+1]_nu)|n+1>. Throws InvalidDimension for dim < 2.
SingleModeSet build_single_mode(std::size_t dim);

/// Every single-mode relation; identities involving a^dag on the right are
/// masked to rows 0..dim-2 because truncation breaks them on the top level.
std::vector<Relation> single_mode_relations(const SingleModeSet& s);
std::vector<AlgebraReport> audit_single_mode(const SingleModeSet& s);

/// Unmasked [a,adag] - (1 + 2nu R). On the truncated space this is -[dim]_nu
/// at (dim-1, dim-1) and zero elsewhere.
OperatorMatrix truncation_defect(const SingleModeSet& s);
/// Passes when truncation_defect(s) matches that prediction exactly.
AlgebraReport check_truncation_defect(const SingleModeSet& s);

/// nu * I and 1 + 2 nu R style helpers shared by the mode builders.
OperatorMatrix scalar_operator(const Basis& basis, const NuPolynomial& value);

}  // namespace nuwigner
