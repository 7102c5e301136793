#include "lienil/cli.hpp"

#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lienil/extremal.hpp"
#include "lienil/lie.hpp"

namespace lienil::cli {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

json factor_summaries(const MatrixAlgebra& r, bool& any_fail) {
    json factors = json::array();
    for (const PeirceFactor& pf : peirce_decompose(r)) {
        auto m = lie_nilpotence_index(pf.corner);
        json f{{"rank", pf.rank}, {"dimension", pf.corner.dim()}};
        if (m) {
            i64 bound = m_closed_form(*m + 1, static_cast<i64>(pf.rank));
            bool pass = pf.corner.dim() <= bound;
            if (!pass) any_fail = true;
            f["lie_index"] = *m;
            f["bound"] = bound;
            f["pass"] = pass;
        } else {
            f["lie_index"] = nullptr;
        }
        factors.push_back(std::move(f));
    }
    return factors;
}

json analyze_closed(const MatrixAlgebra& r, bool peirce, bool triangularize, bool& any_fail) {
    json out;
    out["n"] = r.n();
    out["dimension"] = r.dim();
    if (peirce) {
        try {
            out["factors"] = factor_summaries(r, any_fail);
        } catch (const error& e) {
            out["peirce_error"] = e.what();
        }
    }
    if (r.is_triangular_constant_diagonal()) {
        BoundReport rep = bound_check(r);
        out.update(report_to_json(rep));
        if (!rep.all_pass()) any_fail = true;
        return out;
    }
    auto m = lie_nilpotence_index(r);
    if (!m) {
        out["lie_nilpotent"] = false;
        out["note"] = "not Lie nilpotent; bound checks skipped";
        return out;
    }
    out["lie_nilpotent"] = true;
    if (triangularize) {
        try {
            Matrix u = triangularize_local(r);
            MatrixAlgebra conj = conjugate(r, u);
            BoundReport rep = bound_check(conj);
            out.update(report_to_json(rep));
            out["triangularized"] = true;
            if (!rep.all_pass()) any_fail = true;
            return out;
        } catch (const error& e) {
            out["triangularize_error"] = e.what();
        }
    }
    // direct check without a chain trace
    i64 bound = m_closed_form(*m + 1, r.n());
    bool pass = r.dim() <= bound;
    if (!pass) any_fail = true;
    out["lie_index"] = *m;
    out["m_of_lie"] = bound;
    out["verdicts"] = json::array({json{{"name", "dimension within lie bound"},
                                        {"lhs", r.dim()},
                                        {"rhs", bound},
                                        {"pass", pass}}});
    out["all_pass"] = pass;
    return out;
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
    AlgebraDocument doc;
    try {
        doc = load_algebra_document(opt.input);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    try {
        MatrixAlgebra r = close_generators(doc.field, doc.n, doc.generators, /*unital=*/true);
        bool any_fail = false;
        json rep = analyze_closed(r, opt.peirce, opt.triangularize, any_fail);
        if (!doc.label.empty()) rep["label"] = doc.label;
        out << rep.dump(2) << "\n";
        if (any_fail) {
            err << "BOUND VIOLATION: a verified inequality failed on this input;"
                   " this contradicts the established bound; please report it\n";
            return kViolation;
        }
        return kOk;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

int cmd_mtable(const MtableOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.lmax < 1 || opt.nmax < 1 || opt.lmax > 100000 || opt.nmax > 100000) {
        err << "error: mtable bounds must lie in [1, 100000]\n";
        return kInputError;
    }
    out << "l\\n";
    for (i64 n = 1; n <= opt.nmax; ++n) out << '\t' << n;
    out << '\n';
    bool mismatch = false;
    for (int l = 1; l <= opt.lmax; ++l) {
        out << l;
        for (i64 n = 1; n <= opt.nmax; ++n) {
            i64 closed = m_closed_form(l, n);
            if (opt.check_bruteforce) {
                BruteForceMax bf;
                try {
                    bf = m_bruteforce(l, n);
                } catch (const error& e) {
                    err << "error: " << e.what() << "\n";
                    return kInputError;
                }
                if (bf.value != closed) {
                    mismatch = true;
                    err << "MISMATCH at l=" << l << " n=" << n << ": closed " << closed
                        << " vs enumerated " << bf.value << "\n";
                }
            }
            out << '\t' << closed;
        }
        out << '\n';
    }
    return mismatch ? kViolation : kOk;
}

int cmd_region(const RegionOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.lmax < 1 || opt.nmax < 1 || opt.lmax > 100000 || opt.nmax > 100000) {
        err << "error: region bounds must lie in [1, 100000]\n";
        return kInputError;
    }
    out << "l\tn\tr\tD\tpredicted\tdirect\tagree\n";
    bool disagreement = false;
    for (int l = 1; l <= opt.lmax; ++l)
        for (i64 n = l; n <= opt.nmax; ++n) {
            i64 r = n % l;
            mpq_class d = deficiency(r, l);
            bool predicted = equality_region(l, n);
            bool direct = m_closed_form(l, n) == floor_bound(l, n);
            bool agree = predicted == direct;
            if (!agree) disagreement = true;
            out << l << '\t' << n << '\t' << r << '\t' << d.get_str() << '\t'
                << (predicted ? "equality" : "strict") << '\t'
                << (direct ? "equality" : "strict") << '\t' << (agree ? "yes" : "NO") << '\n';
        }
    if (disagreement) {
        err << "REGION MISMATCH: the residue classification disagrees with the direct test\n";
        return kViolation;
    }
    return kOk;
}

int cmd_construct(const ConstructOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        FieldPtr field = parse_field_flag(opt.field);
        std::vector<i64> parts;
        std::string label;
        if (!opt.type.empty() && !opt.balanced.empty())
            throw error("construct: give either --type or --balanced, not both");
        if (!opt.type.empty()) {
            std::stringstream ss(opt.type);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                try {
                    parts.push_back(std::stoll(tok));
                } catch (const std::exception&) {
                    throw error("construct: bad part '" + tok + "'");
                }
            }
            label = "type (" + opt.type + ") over " + field->describe();
        } else if (!opt.balanced.empty()) {
            std::stringstream ss(opt.balanced);
            i64 l = 0, n = 0;
            if (!(ss >> l >> n)) throw error("construct: --balanced expects \"L N\"");
            if (l < 1 || l > n) throw error("construct: --balanced requires 1 <= L <= N");
            parts = balanced_composition(static_cast<int>(l), n).parts();
            label = "balanced (" + std::to_string(l) + "," + std::to_string(n) + ") over " +
                    field->describe();
        } else {
            throw error("construct: one of --type or --balanced is required");
        }
        CompositionVector k(parts);
        if (!k.all_positive()) throw error("construct: parts must be positive");
        if (k.length() < 2) throw error("construct: needs at least two parts");
        if (k.total() > 32) throw error("construct: total size capped at 32");
        BlockArray b = block_array(k);
        const int n = static_cast<int>(b.n);
        AlgebraDocument doc;
        doc.field = field;
        doc.n = n;
        doc.label = label;
        doc.generators.push_back(Matrix::identity(field, n));
        for (auto [i, j] : b.positions)
            doc.generators.push_back(
                Matrix::unit(field, n, static_cast<int>(i) - 1, static_cast<int>(j) - 1));
        out << to_json(doc).dump(2) << "\n";
        return kOk;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

std::vector<Matrix> sample_strict_upper(const FieldPtr& field, int n, int density,
                                        std::mt19937_64& rng) {
    std::vector<Matrix> gens;
    gens.reserve(static_cast<size_t>(density));
    for (int g = 0; g < density; ++g) {
        Matrix m(field, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) m.at(i, j) = field->sample(rng);
        gens.push_back(std::move(m));
    }
    return gens;
}

int cmd_fuzz(const FuzzOptions& opt, std::ostream& out, std::ostream& err) {
    FieldPtr field;
    try {
        field = parse_field_flag(opt.field);
        if (field->kind() != FieldKind::prime) throw error("fuzz: field must be a prime field");
        i64 p = field->characteristic();
        if (p != 2 && p != 3 && p != 5 && p != 7)
            throw error("fuzz: p must be one of 2, 3, 5, 7");
        if (opt.n < 1 || opt.n > 8) throw error("fuzz: n must be between 1 and 8");
        if (opt.trials < 1) throw error("fuzz: trials must be positive");
        if (opt.density < 0) throw error("fuzz: density must be nonnegative");
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    std::map<int, int> index_hist, length_hist, solv_hist;
    std::map<i64, int> dim_hist;
    for (int trial = 0; trial < opt.trials; ++trial) {
        std::mt19937_64 rng(opt.seed + static_cast<u64>(trial));
        std::vector<Matrix> gens = sample_strict_upper(field, opt.n, opt.density, rng);
        MatrixAlgebra r = close_generators(field, opt.n, gens, /*unital=*/true);
        ChainTrace trace = compute_chain(r);
        ChainVerification ver = verify_chain(trace);
        BoundReport rep = bound_check(r, trace);
        if (!rep.all_pass() || !ver.all_pass()) {
            AlgebraDocument reproducer{field, opt.n, gens,
                                       "fuzz violation, trial " + std::to_string(trial)};
            err << "VIOLATION at trial " << trial << ": reproducer document follows\n";
            err << to_json(reproducer).dump(2) << "\n";
            err << report_to_json(rep).dump(2) << "\n";
            err << verification_to_json(ver).dump(2) << "\n";
            return kViolation;
        }
        index_hist[rep.lie_index.value()]++;
        length_hist[rep.chain_length]++;
        solv_hist[rep.solvability_index.value_or(-1)]++;
        dim_hist[rep.dimension]++;
    }
    out << "field\t" << field->describe() << "\nn\t" << opt.n << "\ntrials\t" << opt.trials
        << "\nseed\t" << opt.seed << "\ndensity\t" << opt.density << "\nviolations\t0\n";
    out << "lie_index_histogram";
    for (const auto& [k, c] : index_hist) out << '\t' << k << ':' << c;
    out << "\nchain_length_histogram";
    for (const auto& [k, c] : length_hist) out << '\t' << k << ':' << c;
    // solvability is diagnostic only: no bound is asserted for it
    out << "\nsolvability_index_histogram";
    for (const auto& [k, c] : solv_hist) out << '\t' << k << ':' << c;
    out << "\ndimension_histogram";
    for (const auto& [k, c] : dim_hist) out << '\t' << k << ':' << c;
    out << '\n';
    return kOk;
}

int cmd_chain(const ChainOptions& opt, std::ostream& out, std::ostream& err) {
    AlgebraDocument doc;
    try {
        doc = load_algebra_document(opt.input);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    try {
        MatrixAlgebra r = close_generators(doc.field, doc.n, doc.generators, /*unital=*/true);
        json result;
        if (!r.is_triangular_constant_diagonal()) {
            Matrix u = triangularize_local(r);  // throws when not applicable
            r = conjugate(r, u);
            result["triangularized"] = true;
        }
        ComplementStrategy strategy;
        if (opt.strategy == "det") {
            strategy = ComplementStrategy::deterministic;
        } else if (opt.strategy == "seeded") {
            strategy = ComplementStrategy::seeded;
        } else {
            err << "error: chain: unknown strategy '" << opt.strategy << "'\n";
            return kInputError;
        }
        ChainTrace trace = compute_chain(r, strategy, opt.seed);
        result["trace"] = trace_to_json(trace);
        result["verification"] = verification_to_json(verify_chain(trace));
        if (strategy == ComplementStrategy::seeded && opt.trials > 1)
            result["sensitivity"] =
                sensitivity_to_json(complement_sensitivity_experiment(r, opt.trials, opt.seed));
        if (!doc.label.empty()) result["label"] = doc.label;
        out << result.dump(2) << "\n";
        return kOk;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace lienil::cli
