#pragma once

#include <string>
#include <vector>

#include "nuwigner/errors.hpp"
#include "nuwigner/operator_matrix.hpp"
#include "nuwigner/relation.hpp"
#include "nuwigner/two_mode.hpp"

namespace nuwigner {

/// su_nu(2) generators on the (2j+1)-dimensional block |j,m~> = |j+m, j-m>,
/// spin basis ordered m = j, ..., -j.
struct SuNu2Rep {
    long two_j = 0;
    OperatorMatrix j_plus;
    OperatorMatrix j_minus;
    OperatorMatrix j0;
    OperatorMatrix p_op;
    OperatorMatrix k_op;
    OperatorMatrix q_op;
    OperatorMatrix r_j;  ///< (-1)^(j - J0)
};

/// Closed-form matrices from the |j,m~> action. Throws InvalidSpin for two_j < 1.
SuNu2Rep build_js_spin_rep(long two_j);

/// Builds J+- = adag1 a2 / a1 adag2, J0, P, K, Q on the two-mode space and
/// restricts them to the n1 + n2 = 2j block. Throws DimensionTooSmall if the
/// truncation cannot hold the block and NonInvariantSubspace if the block leaks.
SuNu2Rep extract_js_block(const TwoModeSet& s, long two_j);

std::vector<Relation> su_nu2_relations(const SuNu2Rep& rep);
std::vector<AlgebraReport> audit_su_nu2(const SuNu2Rep& rep);

/// Odd-2j (Q = 0, K = R_J, P = 2j R_J) or even-2j (K = 0, Q = R_J, P = 2J0 R_J)
/// reductions, including the odd commutator with its printed coefficient
/// 2nu(2nu + j + 1) as a checked claim and the derived 2nu(2nu + 2j + 1).
std::vector<Relation> condensed_relations(const SuNu2Rep& rep);
std::vector<AlgebraReport> audit_condensed_forms(const SuNu2Rep& rep);

/// Claims attached to the worked j = 1/2 and j = 1 examples (empty otherwise).
std::vector<Relation> example_claim_relations(const SuNu2Rep& rep);

/// Single-mode Holstein-Primakoff realization on |0>..|2j>, J0 = j - N.
struct HPRep {
    long two_j = 0;
    OperatorMatrix j_plus;
    OperatorMatrix j_minus;
    OperatorMatrix j0;
    OperatorMatrix r_op;
};

/// Half-integer j: J- maps |2j> out of the (2j+1)-dimensional space.
class OddTwoJNotClosed : public Error {
public:
    OddTwoJNotClosed(long two_j, RadicalSum leakage);
    long two_j() const noexcept { return two_j_; }
    const RadicalSum& leakage() const noexcept { return leakage_; }

private:
    long two_j_;
    RadicalSum leakage_;
};

/// Numerator of the square-root factor: (2j-k)(k+1) + nu(1 + 2j + (-1)^k(2j - 1 - 2k)).
NuPolynomial hp_numerator(long two_j, long k);
/// Parity-simplified factor g(k): 2j - k for even k, 2j - k + 2nu for odd k.
NuPolynomial hp_factor(long two_j, long k);

/// Verifies hp_numerator(k) == hp_factor(k) * [k+1] before use. Throws
/// OddTwoJNotClosed for odd two_j and InvalidSpin for two_j < 1.
HPRep build_hp_rep(long two_j);

std::vector<Relation> hp_relations(const HPRep& rep);
/// Exact relations plus a numeric comparison of the [J+,J-] spectrum with the
/// even-2j Jordan-Schwinger block on the sample grid.
std::vector<AlgebraReport> audit_hp(const HPRep& rep);
/// The numeric spectrum comparison on its own.
AlgebraReport hp_spectral_report(const HPRep& rep);
/// For odd two_j: passes when build_hp_rep refuses with leakage sqrt(2nu [2j+1]_nu).
AlgebraReport check_hp_odd_closure(long two_j);

/// so_nu(3) from su_nu(2): Lz = J0, Lx = (J+ + J-)/2, Ly = (i/2)(J- - J+).
struct SoNu3Rep {
    long two_j = 0;
    OperatorMatrix l_x;
    OperatorMatrix l_y;
    OperatorMatrix l_z;
    OperatorMatrix p_op;
    OperatorMatrix k_op;
    OperatorMatrix q_op;
    OperatorMatrix r_l;
};

SoNu3Rep build_so_nu3(long two_j);
std::vector<Relation> so_nu3_relations(const SoNu3Rep& rep);
std::vector<AlgebraReport> audit_so_nu3(const SoNu3Rep& rep);

/// A matrix transcribed from the worked examples, for diffing against the generator.
struct ReferenceMatrix {
    std::string name;
    long two_j = 0;
    std::string generator;  ///< "J+", "J-", "J0" or "R_J"
    OperatorMatrix matrix;
    bool suspected_erratum = false;
    std::string remark;
};

std::vector<ReferenceMatrix> reference_matrix_registry();
/// One report per reference matrix; known discrepancies come back as PassWithCaveat.
std::vector<AlgebraReport> diff_reference_matrices();

/// Grid used for numeric cross-checks.
const std::vector<double>& sample_nu_grid();

}  // namespace nuwigner
