#pragma once

// The descending chain R_1 > R_2 > ... > R_l = F I_n attached to a
// subalgebra of the constant-diagonal upper triangular matrices: each level
// records the radical J_k, the module product P_k = V J_1 ... J_k, the
// complement U_k with P_{k-1} = U_k + P_k, and d_k = dim U_k. The chain
// drives the dimension bound dim R <= M(l, n) and its Lie-index form.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "lienil/algebra.hpp"
#include "lienil/bound.hpp"

namespace lienil {

enum class ComplementStrategy { deterministic, seeded };

struct ChainLevel {
    MatrixAlgebra algebra;  // R_k
    Subspace radical;       // J_k
    Subspace product;       // P_k = V J_1 ... J_k
    Subspace complement;    // U_k, P_{k-1} = U_k (+) P_k
    int d;                  // dim U_k
};

struct ChainTrace {
    FieldPtr field;
    int n = 0;
    ComplementStrategy strategy = ComplementStrategy::deterministic;
    u64 seed = 0;
    std::vector<ChainLevel> levels;  // levels[k-1] holds level k
    int length = 0;                  // l = min{k : J_k = 0}

    std::vector<int> d_sequence() const;
    std::vector<i64> dim_sequence() const;  // (dim R_1, ..., dim R_l)
};

/// Runs the construction level by level and machine-checks every structural
/// invariant of the trace before returning. The carrier must be upper
/// triangular with constant diagonal and unital.
ChainTrace compute_chain(const MatrixAlgebra& r,
                         ComplementStrategy strategy = ComplementStrategy::deterministic,
                         u64 seed = 0);

struct CheckItem {
    std::string name;
    bool pass;
    std::string detail;
};

struct ChainVerification {
    std::vector<CheckItem> items;
    bool all_pass() const;
};

/// Independent re-derivation of the chain identities from the stored
/// subspaces alone: complement towers, the direct-sum splitting of V,
/// faithfulness of each level module, the product-dimension identity and
/// the strictly descending stabilization at F I_n.
ChainVerification verify_chain(const ChainTrace& t);

struct BoundVerdict {
    std::string name;
    i64 lhs;
    i64 rhs;
    bool pass;  // lhs <= rhs
};

struct BoundReport {
    int n = 0;
    i64 dimension = 0;
    std::optional<int> lie_index;
    std::optional<int> solvability_index;
    int chain_length = 0;
    int radical_degree = 0;  // least v with J^v = 0
    i64 m_of_chain = 0;      // M(l, n)
    i64 m_of_lie = 0;        // M(m+1, n)
    i64 floor_ceiling = 0;   // floor bound at (m+1, n)
    std::vector<BoundVerdict> verdicts;
    double timing_ms = 0.0;

    bool all_pass() const;
};

/// Full pipeline on a triangular constant-diagonal algebra: chain, Lie and
/// solvability indices, radical degree, and the six inequalities.
BoundReport bound_check(const MatrixAlgebra& r);
/// Same report against an already computed trace of r.
BoundReport bound_check(const MatrixAlgebra& r, const ChainTrace& trace);

struct SensitivityReport {
    int trials = 0;
    std::map<std::vector<i64>, int> dim_sequences;  // (dim R_1..dim R_l) -> count
    std::map<std::vector<int>, int> d_sequences;
    bool length_varied = false;
    bool d_varied = false;
};

/// Reruns the chain with seeded-random complements and reports the multiset
/// of observed dimension sequences. Gathers data only; asserts nothing.
SensitivityReport complement_sensitivity_experiment(const MatrixAlgebra& r, int trials, u64 seed);

}  // namespace lienil
