#include "lienil/bound.hpp"

#include <algorithm>

namespace lienil {

CompositionVector::CompositionVector(std::vector<i64> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw error("composition: needs at least one part");
    for (i64 k : parts_)
        if (k < 0) throw error("composition: parts must be nonnegative");
}

i64 CompositionVector::total() const {
    i64 s = 0;
    for (i64 k : parts_) s += k;
    return s;
}

i64 CompositionVector::norm_sq() const {
    i64 s = 0;
    for (i64 k : parts_) s += k * k;
    return s;
}

std::vector<int> CompositionVector::support() const {
    std::vector<int> out;
    for (int i = 0; i < length(); ++i)
        if (parts_[i] > 0) out.push_back(i);
    return out;
}

bool CompositionVector::all_positive() const {
    for (i64 k : parts_)
        if (k <= 0) return false;
    return true;
}

bool CompositionVector::is_balanced() const {
    auto [lo, hi] = std::minmax_element(parts_.begin(), parts_.end());
    return *hi - *lo <= 1;
}

i64 CompositionVector::objective() const {
    i64 n = total();
    i64 diff = n * n - norm_sq();
    if (diff % 2 != 0) throw error("composition: objective parity violated");
    return diff / 2 + 1;
}

namespace {

// C(n+l-1, l-1) with saturation at cap+1
i64 compositions_count(i64 n, int l, i64 cap) {
    i64 acc = 1;
    for (i64 i = 1; i <= l - 1; ++i) {
        acc = acc * (n + i) / i;  // exact: product of consecutive binomials
        if (acc > cap) return cap + 1;
    }
    return acc;
}

void enumerate_rec(int l, i64 remaining, std::vector<i64>& parts, i64 norm_acc, i64 n,
                   i64& best, std::vector<CompositionVector>& maximizers) {
    if (static_cast<int>(parts.size()) == l - 1) {
        i64 last = remaining;
        i64 norm = norm_acc + last * last;
        i64 value = (n * n - norm) / 2 + 1;
        if (value > best) {
            best = value;
            maximizers.clear();
        }
        if (value == best) {
            parts.push_back(last);
            maximizers.emplace_back(parts);
            parts.pop_back();
        }
        return;
    }
    for (i64 k = 0; k <= remaining; ++k) {
        parts.push_back(k);
        enumerate_rec(l, remaining - k, parts, norm_acc + k * k, n, best, maximizers);
        parts.pop_back();
    }
}

}  // namespace

BruteForceMax m_bruteforce(int l, i64 n) {
    if (l < 1 || n < 1) throw error("m_bruteforce: arguments must be positive");
    if (compositions_count(n, l, 5000000) > 5000000)
        throw error("m_bruteforce: enumeration bound exceeded; use m_closed_form");
    i64 best = INT64_MIN;
    std::vector<CompositionVector> maximizers;
    std::vector<i64> parts;
    enumerate_rec(l, n, parts, 0, n, best, maximizers);
    std::sort(maximizers.begin(), maximizers.end());
    return {best, std::move(maximizers)};
}

CompositionVector balanced_composition(int l, i64 n) {
    if (l < 1 || n < 1) throw error("balanced_composition: arguments must be positive");
    if (l > n)
        throw error("balanced_composition: more parts than units; use the closed form directly");
    i64 q = n / l;
    i64 r = n % l;
    std::vector<i64> parts;
    parts.reserve(l);
    for (i64 i = 0; i < l - r; ++i) parts.push_back(q);
    for (i64 i = 0; i < r; ++i) parts.push_back(q + 1);
    return CompositionVector(std::move(parts));
}

i64 m_closed_form(int l, i64 n) {
    if (l < 1 || n < 1) throw error("m_closed_form: arguments must be positive");
    if (l > n) return (n * n - n) / 2 + 1;
    return balanced_composition(l, n).objective();
}

i64 floor_bound(int l, i64 n) {
    if (l < 1 || n < 1) throw error("floor_bound: arguments must be positive");
    return n * n * (l - 1) / (2 * l) + 1;
}

mpq_class deficiency(i64 r, int l) {
    if (l < 1 || r < 0 || r >= l) throw error("deficiency: requires 0 <= r < l");
    mpq_class d(r * l - r * r, 2 * static_cast<i64>(l));
    d.canonicalize();
    return d;
}

bool equality_region(int l, i64 n) {
    if (l < 1 || n < l) throw error("equality_region: requires 1 <= l <= n");
    // equality holds exactly when D(r, l) < 1, i.e. r(l - r) < 2l; the
    // residue sets below enumerate those integral points
    i64 r = n % l;
    if (l <= 7) return true;
    if (r <= 2) return true;
    if (r >= 7 && l == r + 1) return true;
    if (r >= 6 && l == r + 2) return true;
    if (l == 8 && (r == 3 || r == 5)) return true;
    return false;
}

}  // namespace lienil
