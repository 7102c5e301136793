#pragma once

// Matrix subalgebras as first-class values: closure, radical of triangular
// algebras, annihilators, module products, centers, idempotents and Peirce
// factors, local triangularization, conjugation and scalar extension.

#include <optional>

#include "lienil/subspace.hpp"

namespace lienil {

class MatrixAlgebra {
  public:
    /// Verifies multiplicative closure of the carrier (and I_n membership
    /// when unital); throws if either fails.
    MatrixAlgebra(FieldPtr field, int n, Subspace carrier, bool unital);

    const FieldPtr& field() const { return field_; }
    int n() const { return n_; }
    const Subspace& carrier() const { return carrier_; }
    bool unital() const { return unital_; }
    int dim() const { return carrier_.dim(); }

    std::vector<Matrix> basis_matrices() const { return subspace_matrices(carrier_, n_); }
    bool contains(const Matrix& m) const;
    /// Every basis matrix upper triangular with constant main diagonal.
    bool is_triangular_constant_diagonal() const;

    bool operator==(const MatrixAlgebra& o) const {
        return n_ == o.n_ && unital_ == o.unital_ && carrier_ == o.carrier_;
    }

  private:
    FieldPtr field_;
    int n_;
    Subspace carrier_;
    bool unital_;
};

/// Smallest multiplicatively closed subspace containing the generators
/// (plus I_n when unital), by worklist closure.
MatrixAlgebra close_generators(const FieldPtr& field, int n, const std::vector<Matrix>& gens,
                               bool unital);

/// Largest S inside `candidates` (a matrix-space subspace) killed by every
/// row of `rows`: {a in candidates : rows * a = 0}.
Subspace kernel_of_action(const Subspace& rows, const Subspace& candidates, int n);

/// The annihilator (0 :^I X) = {a in I : X a = 0}; always inside I.
Subspace annihilator(const Subspace& ideal, const Subspace& x_rows, int n);

/// span{w * s : w in basis(W), s in basis(S)} for W <= F^n, S <= F^{n^2}.
Subspace module_product(const Subspace& w_rows, const Subspace& s_mats, int n);

/// span{a * b} for two matrix-space subspaces.
Subspace matspace_product(const Subspace& a, const Subspace& b, int n);

/// Least k >= 1 with S^k = 0 under iterated span products, or nullopt if
/// S^n is still nonzero (then no power vanishes for carriers of interest).
std::optional<int> nilpotency_degree(const Subspace& s_mats, int n);

/// Jacobson radical of an algebra with upper-triangular carrier: the
/// strictly-upper-triangular part. Verifies nilpotency and the ideal
/// property before returning.
Subspace radical_triangular(const MatrixAlgebra& r);

/// Radical over the rationals through the trace-form kernel
/// {a in carrier : trace(a b) = 0 for all b}. A second route independent of
/// the triangular one; valid in characteristic zero only.
Subspace radical_rational_trace_form(const MatrixAlgebra& r);

/// Center {a in carrier : ab = ba for all b}.
Subspace center(const MatrixAlgebra& r);

/// Entry-wise embedding into an extension field of the same characteristic;
/// dimension and closure are re-verified.
MatrixAlgebra extend_scalars(const MatrixAlgebra& r, const FieldPtr& target);

/// Carrier mapped through A -> U^{-1} A U; throws on singular U.
MatrixAlgebra conjugate(const MatrixAlgebra& r, const Matrix& u);

/// All idempotents of a small algebra over a prime field, by exhaustive
/// enumeration (requires p^dim <= 10^6).
std::vector<Matrix> enumerate_idempotents(const MatrixAlgebra& r);

/// span{e b e : b in basis(R)} as an algebra (its identity is e, so the
/// MatrixAlgebra unital flag reflects whether I_n itself is inside).
MatrixAlgebra corner_algebra(const MatrixAlgebra& r, const Matrix& e);

struct PeirceFactor {
    Matrix idempotent;
    MatrixAlgebra corner;
    int rank;
};

/// Decomposition along the complete set of primitive orthogonal central
/// idempotents. Refuses (throws) when a non-central idempotent exists.
std::vector<PeirceFactor> peirce_decompose(const MatrixAlgebra& r);

/// For a split local R (carrier = F I + Nil with Nil nilpotent, verified at
/// entry), an invertible U with U^{-1} R U upper triangular with constant
/// diagonal. Returns I when the carrier already has that shape.
Matrix triangularize_local(const MatrixAlgebra& r);

}  // namespace lienil
