#include "lienil/chain.hpp"

#include <chrono>
#include <sstream>

#include "lienil/lie.hpp"

namespace lienil {

std::vector<int> ChainTrace::d_sequence() const {
    std::vector<int> out;
    out.reserve(levels.size());
    for (const ChainLevel& lv : levels) out.push_back(lv.d);
    return out;
}

std::vector<i64> ChainTrace::dim_sequence() const {
    std::vector<i64> out;
    out.reserve(levels.size());
    for (const ChainLevel& lv : levels) out.push_back(lv.algebra.dim());
    return out;
}

namespace {

void require_chain_input(const MatrixAlgebra& r) {
    if (!r.unital()) throw error("chain: algebra must be unital");
    if (!r.is_triangular_constant_diagonal())
        throw error("chain: carrier must be upper triangular with constant diagonal; "
                    "triangularize first");
}

Subspace pick_complement(const Subspace& inner, const Subspace& outer,
                         ComplementStrategy strategy, std::mt19937_64& rng) {
    return strategy == ComplementStrategy::deterministic ? complement_within(inner, outer)
                                                         : complement_within_seeded(inner, outer, rng);
}

void check(bool ok, const std::string& what) {
    if (!ok) throw error("chain invariant violated: " + what);
}

}  // namespace

ChainTrace compute_chain(const MatrixAlgebra& r, ComplementStrategy strategy, u64 seed) {
    require_chain_input(r);
    const FieldPtr& f = r.field();
    const int n = r.n();
    std::mt19937_64 rng(seed);

    ChainTrace t;
    t.field = f;
    t.n = n;
    t.strategy = strategy;
    t.seed = seed;

    const Subspace v = Subspace::full(f, n);
    // P_0 = V J_0 with J_0 = R; equals V whenever I_n is inside
    check(module_product(v, r.carrier(), n) == v, "V J_0 differs from V");

    Subspace p_prev = v;
    MatrixAlgebra current = r;
    Matrix id = Matrix::identity(f, n);
    while (true) {
        Subspace j = radical_triangular(current);
        Subspace p = module_product(p_prev, j, n);
        Subspace u = pick_complement(p, p_prev, strategy, rng);
        t.levels.push_back(ChainLevel{current, j, p, u, u.dim()});
        if (j.dim() == 0) {
            t.length = static_cast<int>(t.levels.size());
            break;
        }
        // next algebra: F I_n + (0 :^{R_k} U_k)
        Subspace ann = kernel_of_action(u, current.carrier(), n);
        check(ann == kernel_of_action(u, j, n),
              "annihilator of U_k is not contained in the radical");
        std::vector<Matrix> gens = subspace_matrices(ann, n);
        MatrixAlgebra next = close_generators(f, n, gens, /*unital=*/true);
        check(next.dim() == ann.dim() + 1, "F I_n + annihilator was not already closed");
        check(radical_triangular(next) == ann, "J_{k+1} differs from the annihilator of U_k");
        check(current.carrier().contains(next.carrier()), "chain is not descending");
        check(next.dim() < current.dim(), "chain is not strictly descending");
        current = std::move(next);
        p_prev = std::move(p);
        if (static_cast<int>(t.levels.size()) > n)
            throw error("chain: did not terminate within n levels");
    }

    // terminal level is the scalars
    const ChainLevel& last = t.levels.back();
    check(last.algebra.dim() == 1 && last.algebra.contains(id),
          "chain does not stabilize at F I_n");

    // direct sums P_{k-1} = U_k (+) P_k and the d-sequence bookkeeping
    i64 d_total = 0;
    const Subspace* prev = &v;
    for (const ChainLevel& lv : t.levels) {
        check(lv.d >= 1, "a complement has dimension zero");
        d_total += lv.d;
        check(sum(lv.complement, lv.product) == *prev, "U_k + P_k differs from P_{k-1}");
        check(intersect(lv.complement, lv.product).dim() == 0, "U_k meets P_k");
        prev = &lv.product;
    }
    check(d_total == n, "the d_k do not sum to n");

    // termination criterion equivalence: the product chain J_0 J_1 ... J_k
    // vanishes first exactly at k = l
    Subspace q = r.carrier();
    for (int k = 1; k <= t.length; ++k) {
        check(q.dim() > 0, "product chain vanished before the radical chain");
        q = matspace_product(q, t.levels[static_cast<size_t>(k) - 1].radical, n);
    }
    check(q.dim() == 0, "product chain still nonzero at the final level");

    return t;
}

bool ChainVerification::all_pass() const {
    for (const CheckItem& c : items)
        if (!c.pass) return false;
    return true;
}

ChainVerification verify_chain(const ChainTrace& t) {
    ChainVerification out;
    const FieldPtr& f = t.field;
    const int n = t.n;
    const int l = t.length;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        out.items.push_back(CheckItem{name, pass, detail});
    };
    const Subspace v = Subspace::full(f, n);

    // (i) U_k R_k = P_{k-1} = U_k (+) ... (+) U_l
    for (int k = 1; k <= l; ++k) {
        const ChainLevel& lv = t.levels[static_cast<size_t>(k) - 1];
        const Subspace& p_prev = k == 1 ? v : t.levels[static_cast<size_t>(k) - 2].product;
        Subspace ur = module_product(lv.complement, lv.algebra.carrier(), n);
        bool pass = ur == p_prev;
        Subspace tail = lv.complement;
        i64 dims = lv.d;
        for (int i = k + 1; i <= l; ++i) {
            tail = sum(tail, t.levels[static_cast<size_t>(i) - 1].complement);
            dims += t.levels[static_cast<size_t>(i) - 1].d;
        }
        pass = pass && tail == p_prev && dims == p_prev.dim();
        std::ostringstream os;
        os << "level " << k << ": dim U_k R_k = " << ur.dim() << ", dim P_{k-1} = "
           << p_prev.dim();
        add("complement tower spans the level module", pass, os.str());
    }

    // (ii) V = U_1 (+) ... (+) U_l
    {
        Subspace acc = Subspace::zero(f, n);
        i64 dims = 0;
        for (const ChainLevel& lv : t.levels) {
            acc = sum(acc, lv.complement);
            dims += lv.d;
        }
        add("complements decompose the full module", acc == v && dims == n,
            "sum dim = " + std::to_string(dims));
    }

    // (iii) each P_{k-1} is a faithful module over R_k
    for (int k = 1; k <= l; ++k) {
        const Subspace& p_prev = k == 1 ? v : t.levels[static_cast<size_t>(k) - 2].product;
        Subspace killed = kernel_of_action(p_prev, t.levels[static_cast<size_t>(k) - 1].algebra.carrier(), n);
        add("level module is faithful", killed.dim() == 0,
            "level " + std::to_string(k) + ": annihilator dim " + std::to_string(killed.dim()));
    }

    // (iv) dim(U_k J_k) = n - sum_{i<=k} d_i
    {
        i64 prefix = 0;
        bool pass = true;
        std::ostringstream os;
        for (int k = 1; k <= l; ++k) {
            const ChainLevel& lv = t.levels[static_cast<size_t>(k) - 1];
            prefix += lv.d;
            i64 got = module_product(lv.complement, lv.radical, n).dim();
            if (got != n - prefix) pass = false;
            os << (k > 1 ? ", " : "") << "dim U_" << k << " J_" << k << " = " << got;
        }
        add("product dimension identity", pass, os.str());
    }

    // (v) strictly descending, stabilizing at F I_n
    {
        bool pass = true;
        for (int k = 1; k < l; ++k)
            if (t.levels[static_cast<size_t>(k)].algebra.dim() >=
                t.levels[static_cast<size_t>(k) - 1].algebra.dim())
                pass = false;
        const MatrixAlgebra& last = t.levels[static_cast<size_t>(l) - 1].algebra;
        pass = pass && last.dim() == 1 && last.contains(Matrix::identity(f, n));
        pass = pass && t.levels[static_cast<size_t>(l) - 1].radical.dim() == 0;
        add("chain descends strictly to the scalars", pass);
    }

    return out;
}

bool BoundReport::all_pass() const {
    for (const BoundVerdict& v : verdicts)
        if (!v.pass) return false;
    return true;
}

BoundReport bound_check(const MatrixAlgebra& r) {
    return bound_check(r, compute_chain(r, ComplementStrategy::deterministic));
}

BoundReport bound_check(const MatrixAlgebra& r, const ChainTrace& t) {
    const auto t0 = std::chrono::steady_clock::now();
    require_chain_input(r);
    const int n = r.n();

    Subspace j = radical_triangular(r);
    auto nu = nilpotency_degree(j, n);
    if (!nu) throw error("bound_check: radical is not nilpotent");
    auto m = lie_nilpotence_index(r);
    if (!m) throw error("bound_check: triangular algebra reported as not Lie nilpotent");

    BoundReport rep;
    rep.n = n;
    rep.dimension = r.dim();
    rep.lie_index = m;
    rep.solvability_index = lie_solvability_index(r);
    rep.chain_length = t.length;
    rep.radical_degree = *nu;
    rep.m_of_chain = m_closed_form(t.length, n);
    rep.m_of_lie = m_closed_form(*m + 1, n);
    rep.floor_ceiling = floor_bound(*m + 1, n);

    auto verdict = [&](const std::string& name, i64 lhs, i64 rhs) {
        rep.verdicts.push_back(BoundVerdict{name, lhs, rhs, lhs <= rhs});
    };
    verdict("chain length within radical degree", t.length, *nu);
    verdict("chain length within lie index plus one", t.length, static_cast<i64>(*m) + 1);
    verdict("dimension within chain bound", r.dim(), rep.m_of_chain);
    verdict("dimension within lie bound", r.dim(), rep.m_of_lie);
    verdict("dimension within radical-degree bound", r.dim(), m_closed_form(*nu, n));
    verdict("dimension within ambient ceiling", r.dim(), (static_cast<i64>(n) * n - n) / 2 + 1);

    rep.timing_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    return rep;
}

SensitivityReport complement_sensitivity_experiment(const MatrixAlgebra& r, int trials, u64 seed) {
    if (trials < 1) throw error("sensitivity experiment: trials must be positive");
    SensitivityReport rep;
    rep.trials = trials;
    for (int i = 0; i < trials; ++i) {
        ChainTrace t = compute_chain(r, ComplementStrategy::seeded, seed + static_cast<u64>(i));
        rep.dim_sequences[t.dim_sequence()]++;
        rep.d_sequences[t.d_sequence()]++;
    }
    rep.length_varied = false;
    rep.d_varied = rep.d_sequences.size() > 1;
    size_t first_len = rep.dim_sequences.begin()->first.size();
    for (const auto& [seq, cnt] : rep.dim_sequences)
        if (seq.size() != first_len) rep.length_varied = true;
    return rep;
}

}  // namespace lienil
