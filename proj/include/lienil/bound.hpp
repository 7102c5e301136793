#pragma once

// The dimension bound M(l, n): exhaustive maximization over integer
// compositions, the balanced maximizer, the closed form, the analytic floor
// ceiling, the deficiency D(r, l) and the exact equality region.

#include <cstdint>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "lienil/field.hpp"

namespace lienil {

/// An ordered tuple of nonnegative integers; derived quantities are
/// recomputed on demand, never cached.
class CompositionVector {
  public:
    explicit CompositionVector(std::vector<i64> parts);

    const std::vector<i64>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    i64 total() const;
    i64 norm_sq() const;
    std::vector<int> support() const;
    bool all_positive() const;
    /// max part - min part <= 1.
    bool is_balanced() const;
    /// (total^2 - norm_sq)/2 + 1; always an integer by parity.
    i64 objective() const;

    bool operator==(const CompositionVector& o) const { return parts_ == o.parts_; }
    bool operator<(const CompositionVector& o) const { return parts_ < o.parts_; }

  private:
    std::vector<i64> parts_;
};

struct BruteForceMax {
    i64 value;
    std::vector<CompositionVector> maximizers;  // sorted
};

/// Exact maximum of the objective over all compositions of n into l
/// nonnegative parts, with the complete maximizer set. Requires
/// C(n+l-1, l-1) <= 5*10^6.
BruteForceMax m_bruteforce(int l, i64 n);

/// l-r parts of floor(n/l) followed by r parts of floor(n/l)+1, r = n mod l.
/// Requires 1 <= l <= n.
CompositionVector balanced_composition(int l, i64 n);

/// M(l, n) in closed form; equals the brute-force maximum everywhere.
i64 m_closed_form(int l, i64 n);

/// floor(n^2 (l-1) / (2l)) + 1, exact integer arithmetic.
i64 floor_bound(int l, i64 n);

/// D(r, l) = (r - r^2/l)/2 as an exact rational; requires 0 <= r < l.
mpq_class deficiency(i64 r, int l);

/// Whether M(l, n) attains the floor bound, decided by the residue
/// classification; must agree with the direct comparison everywhere.
bool equality_region(int l, i64 n);

}  // namespace lienil
