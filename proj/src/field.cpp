#include "lienil/field.hpp"

#include <algorithm>

namespace lienil {

namespace {

i64 mod_reduce(i64 v, i64 p) {
    i64 r = v % p;
    return r < 0 ? r + p : r;
}

i64 mod_mul(i64 a, i64 b, i64 p) {
    // a, b in [0, p), p < 2^31, so the product fits in 63 bits.
    return (a * b) % p;
}

i64 mod_inv(i64 a, i64 p) {
    // extended Euclid; p prime, a in (0, p)
    i64 t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        i64 q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw error("mod_inv: not invertible");
    return mod_reduce(t, p);
}

bool is_prime_trial(i64 p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (i64 d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// --- polynomial helpers over GF(p), ascending coefficients ---

using Poly = std::vector<i64>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    poly_trim(c);
    return c;
}

// remainder of a modulo monic f
Poly poly_mod(Poly a, const Poly& f, i64 p) {
    poly_trim(a);
    const size_t d = f.size() - 1;
    while (a.size() > d) {
        i64 lead = a.back();
        size_t shift = a.size() - 1 - d;
        if (lead != 0)
            for (size_t i = 0; i <= d; ++i)
                a[shift + i] = mod_reduce(a[shift + i] - lead * f[i] % p, p);
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

// a = q*b + r with deg r < deg b, for nonzero b
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, i64 p) {
    poly_trim(a);
    const size_t db = b.size();
    Poly q(a.size() >= db ? a.size() - db + 1 : 0, 0);
    const i64 lead_inv = mod_inv(b.back(), p);
    while (a.size() >= db && !a.empty()) {
        i64 coeff = mod_mul(a.back(), lead_inv, p);
        size_t shift = a.size() - db;
        q[shift] = coeff;
        for (size_t i = 0; i < db; ++i)
            a[shift + i] = mod_reduce(a[shift + i] - coeff * b[i] % p, p);
        poly_trim(a);
    }
    poly_trim(q);
    return {std::move(q), std::move(a)};
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, i64 p) {
    return poly_mod(poly_mul(a, b, p), f, p);
}

// x^(p^k) mod f via repeated exponentiation by p
Poly poly_xq_pow(const Poly& f, i64 p, int k) {
    Poly x = {0, 1};
    Poly acc = poly_mod(x, f, p);
    for (int i = 0; i < k; ++i) {
        // acc <- acc^p mod f by square-and-multiply on the exponent p
        Poly result = {1};
        Poly base = acc;
        u64 e = static_cast<u64>(p);
        while (e) {
            if (e & 1) result = poly_mulmod(result, base, f, p);
            base = poly_mulmod(base, base, f, p);
            e >>= 1;
        }
        acc = result;
    }
    return acc;
}

Poly poly_gcd(Poly a, Poly b, i64 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // make b monic for stable remainders
        i64 lead_inv = mod_inv(b.back(), p);
        Poly bm = b;
        for (auto& c : bm) c = mod_mul(c, lead_inv, p);
        Poly r = poly_mod(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_sub(Poly a, const Poly& b, i64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = mod_reduce(a[i] - b[i], p);
    poly_trim(a);
    return a;
}

// Rabin test: monic f of degree d is irreducible over GF(p) iff
// x^(p^d) == x (mod f) and gcd(x^(p^(d/q)) - x, f) = 1 for all primes q | d.
bool poly_irreducible(const Poly& f, i64 p) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 1) return false;
    if (d == 1) return true;
    Poly x = {0, 1};
    Poly top = poly_xq_pow(f, p, d);
    if (poly_sub(top, poly_mod(x, f, p), p) != Poly{}) return false;
    for (int q = 2; q <= d; ++q) {
        if (d % q != 0 || !is_prime_trial(q)) continue;
        Poly h = poly_xq_pow(f, p, d / q);
        Poly g = poly_gcd(f, poly_sub(h, poly_mod(x, f, p), p), p);
        poly_trim(g);
        if (g.size() != 1) return false;
    }
    return true;
}

mpq_class canonical_rat(mpq_class q) {
    q.canonicalize();
    return q;
}

const char* kind_name(FieldKind k) {
    switch (k) {
        case FieldKind::rational: return "rational";
        case FieldKind::prime: return "prime";
        case FieldKind::extension: return "extension";
    }
    return "?";
}

}  // namespace

u64 uniform_below(std::mt19937_64& rng, u64 bound) {
    if (bound == 0) throw error("uniform_below: empty range");
    const u64 limit = UINT64_MAX - UINT64_MAX % bound;
    u64 x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

FieldPtr FieldSpec::rationals() {
    static FieldPtr instance = [] {
        auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
        f->kind_ = FieldKind::rational;
        return FieldPtr(f);
    }();
    return instance;
}

FieldPtr FieldSpec::prime(i64 p) {
    if (p > (i64(1) << 31)) throw error("prime field: p exceeds 2^31");
    if (!is_prime_trial(p)) throw error("prime field: " + std::to_string(p) + " is not prime");
    auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
    f->kind_ = FieldKind::prime;
    f->p_ = p;
    return f;
}

FieldPtr FieldSpec::extension(i64 p, int degree, std::vector<i64> modulus) {
    if (p > (i64(1) << 31)) throw error("extension field: p exceeds 2^31");
    if (!is_prime_trial(p)) throw error("extension field: " + std::to_string(p) + " is not prime");
    if (degree < 1) throw error("extension field: degree must be positive");
    if (modulus.size() != static_cast<size_t>(degree) + 1)
        throw error("extension field: modulus must list degree+1 coefficients");
    for (auto& c : modulus) c = mod_reduce(c, p);
    if (modulus.back() != 1) throw error("extension field: modulus must be monic");
    if (!poly_irreducible(modulus, p))
        throw error("extension field: modulus is reducible over GF(" + std::to_string(p) + ")");
    auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
    f->kind_ = FieldKind::extension;
    f->p_ = p;
    f->degree_ = degree;
    f->modulus_ = std::move(modulus);
    return f;
}

FieldPtr FieldSpec::extension_default(i64 p, int degree) {
    struct Entry {
        i64 p;
        int deg;
        std::vector<i64> mod;
    };
    // Conway-style defaults.
    static const std::vector<Entry> table = {
        {2, 1, {1, 1}},    {2, 2, {1, 1, 1}},    {2, 3, {1, 1, 0, 1}},
        {3, 1, {1, 1}},    {3, 2, {2, 2, 1}},    {3, 3, {1, 2, 0, 1}},
        {5, 1, {3, 1}},    {5, 2, {2, 4, 1}},    {5, 3, {3, 3, 0, 1}},
    };
    for (const auto& e : table)
        if (e.p == p && e.deg == degree) return extension(e.p, e.deg, e.mod);
    throw error("no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(degree) +
                "); supply one explicitly");
}

u64 FieldSpec::order() const {
    if (!finite()) throw error("order: field is infinite");
    u64 acc = 1;
    for (int i = 0; i < degree_; ++i) {
        if (acc > UINT64_MAX / static_cast<u64>(p_)) throw error("order: overflow");
        acc *= static_cast<u64>(p_);
    }
    return acc;
}

bool FieldSpec::operator==(const FieldSpec& other) const {
    return kind_ == other.kind_ && p_ == other.p_ && degree_ == other.degree_ &&
           modulus_ == other.modulus_;
}

Value FieldSpec::zero() const {
    switch (kind_) {
        case FieldKind::rational: return mpq_class(0);
        case FieldKind::prime: return i64(0);
        case FieldKind::extension: return std::vector<i64>(degree_, 0);
    }
    throw error("zero: bad kind");
}

Value FieldSpec::one() const { return from_int(1); }

Value FieldSpec::from_int(i64 v) const {
    switch (kind_) {
        case FieldKind::rational: return mpq_class(static_cast<long>(v));
        case FieldKind::prime: return mod_reduce(v, p_);
        case FieldKind::extension: {
            std::vector<i64> c(degree_, 0);
            c[0] = mod_reduce(v, p_);
            return c;
        }
    }
    throw error("from_int: bad kind");
}

Value FieldSpec::add(const Value& a, const Value& b) const {
    switch (kind_) {
        case FieldKind::rational:
            return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
        case FieldKind::prime: {
            i64 s = std::get<i64>(a) + std::get<i64>(b);
            return s >= p_ ? s - p_ : s;
        }
        case FieldKind::extension: {
            const auto& x = std::get<std::vector<i64>>(a);
            const auto& y = std::get<std::vector<i64>>(b);
            std::vector<i64> c(degree_);
            for (int i = 0; i < degree_; ++i) {
                i64 s = x[i] + y[i];
                c[i] = s >= p_ ? s - p_ : s;
            }
            return c;
        }
    }
    throw error("add: bad kind");
}

Value FieldSpec::sub(const Value& a, const Value& b) const {
    switch (kind_) {
        case FieldKind::rational:
            return mpq_class(std::get<mpq_class>(a) - std::get<mpq_class>(b));
        case FieldKind::prime: {
            i64 s = std::get<i64>(a) - std::get<i64>(b);
            return s < 0 ? s + p_ : s;
        }
        case FieldKind::extension: {
            const auto& x = std::get<std::vector<i64>>(a);
            const auto& y = std::get<std::vector<i64>>(b);
            std::vector<i64> c(degree_);
            for (int i = 0; i < degree_; ++i) {
                i64 s = x[i] - y[i];
                c[i] = s < 0 ? s + p_ : s;
            }
            return c;
        }
    }
    throw error("sub: bad kind");
}

Value FieldSpec::mul(const Value& a, const Value& b) const {
    switch (kind_) {
        case FieldKind::rational:
            return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
        case FieldKind::prime:
            return mod_mul(std::get<i64>(a), std::get<i64>(b), p_);
        case FieldKind::extension: {
            const auto& x = std::get<std::vector<i64>>(a);
            const auto& y = std::get<std::vector<i64>>(b);
            Poly prod = poly_mod(poly_mul(x, y, p_), modulus_, p_);
            prod.resize(degree_, 0);
            return prod;
        }
    }
    throw error("mul: bad kind");
}

Value FieldSpec::neg(const Value& a) const {
    switch (kind_) {
        case FieldKind::rational: return mpq_class(-std::get<mpq_class>(a));
        case FieldKind::prime: {
            i64 v = std::get<i64>(a);
            return v == 0 ? i64(0) : p_ - v;
        }
        case FieldKind::extension: {
            const auto& x = std::get<std::vector<i64>>(a);
            std::vector<i64> c(degree_);
            for (int i = 0; i < degree_; ++i) c[i] = x[i] == 0 ? 0 : p_ - x[i];
            return c;
        }
    }
    throw error("neg: bad kind");
}

Value FieldSpec::inv(const Value& a) const {
    if (is_zero(a)) throw error("division by zero");
    switch (kind_) {
        case FieldKind::rational:
            return mpq_class(1 / std::get<mpq_class>(a));
        case FieldKind::prime:
            return mod_inv(std::get<i64>(a), p_);
        case FieldKind::extension: {
            // extended Euclid in GF(p)[x]: maintain r_k = t_k*f + s_k*a
            Poly r0 = modulus_, r1 = std::get<std::vector<i64>>(a);
            poly_trim(r1);
            Poly s0 = {}, s1 = {1};
            while (!r1.empty()) {
                auto [q, r2] = poly_divmod(r0, r1, p_);
                Poly s2 = poly_sub(s0, poly_mul(q, s1, p_), p_);
                r0 = std::move(r1);
                r1 = std::move(r2);
                s0 = std::move(s1);
                s1 = std::move(s2);
            }
            // gcd is a nonzero constant: the modulus is irreducible and a != 0
            if (r0.size() != 1) throw error("inv: element not invertible");
            i64 g_inv = mod_inv(r0[0], p_);
            for (auto& c : s0) c = mod_mul(c, g_inv, p_);
            s0.resize(degree_, 0);
            return s0;
        }
    }
    throw error("inv: bad kind");
}

Value FieldSpec::div(const Value& a, const Value& b) const { return mul(a, inv(b)); }

bool FieldSpec::is_zero(const Value& a) const {
    switch (kind_) {
        case FieldKind::rational: return std::get<mpq_class>(a) == 0;
        case FieldKind::prime: return std::get<i64>(a) == 0;
        case FieldKind::extension: {
            for (i64 c : std::get<std::vector<i64>>(a))
                if (c != 0) return false;
            return true;
        }
    }
    throw error("is_zero: bad kind");
}

bool FieldSpec::is_one(const Value& a) const { return eq(a, one()); }

bool FieldSpec::eq(const Value& a, const Value& b) const {
    switch (kind_) {
        case FieldKind::rational: return std::get<mpq_class>(a) == std::get<mpq_class>(b);
        case FieldKind::prime: return std::get<i64>(a) == std::get<i64>(b);
        case FieldKind::extension:
            return std::get<std::vector<i64>>(a) == std::get<std::vector<i64>>(b);
    }
    throw error("eq: bad kind");
}

Value FieldSpec::embed_from_prime(const FieldSpec& base, const Value& a) const {
    if (kind_ != FieldKind::extension) throw error("embed: target is not an extension field");
    if (base.kind() != FieldKind::prime) throw error("embed: source is not a prime field");
    if (base.characteristic() != p_)
        throw error("embed: characteristic mismatch (GF(" + std::to_string(base.characteristic()) +
                    ") into characteristic " + std::to_string(p_) + ")");
    std::vector<i64> c(degree_, 0);
    c[0] = std::get<i64>(a);
    return c;
}

std::string FieldSpec::to_string(const Value& a) const {
    switch (kind_) {
        case FieldKind::rational: return std::get<mpq_class>(a).get_str();
        case FieldKind::prime: return std::to_string(std::get<i64>(a));
        case FieldKind::extension: {
            std::string s = "[";
            const auto& c = std::get<std::vector<i64>>(a);
            for (int i = 0; i < degree_; ++i) {
                if (i) s += ',';
                s += std::to_string(c[i]);
            }
            s += ']';
            return s;
        }
    }
    throw error("to_string: bad kind");
}

Value FieldSpec::parse(std::string_view text) const {
    auto fail = [&](const std::string& why) -> error {
        return error("cannot parse scalar '" + std::string(text) + "' (" + kind_name(kind_) +
                     " field): " + why);
    };
    auto parse_i64 = [&](std::string_view s) -> i64 {
        if (s.empty()) throw fail("empty integer");
        size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) throw fail("bare sign");
        i64 v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw fail("invalid digit");
            if (v > (INT64_MAX - 9) / 10) throw fail("integer too large");
            v = v * 10 + (s[i] - '0');
        }
        return s[0] == '-' ? -v : v;
    };
    switch (kind_) {
        case FieldKind::rational: {
            size_t slash = text.find('/');
            try {
                if (slash == std::string_view::npos) {
                    mpz_class num(std::string(text), 10);
                    return mpq_class(num);
                }
                mpz_class num(std::string(text.substr(0, slash)), 10);
                mpz_class den(std::string(text.substr(slash + 1)), 10);
                if (den == 0) throw fail("zero denominator");
                return canonical_rat(mpq_class(num, den));
            } catch (const std::invalid_argument&) {
                throw fail("malformed rational");
            }
        }
        case FieldKind::prime:
            return mod_reduce(parse_i64(text), p_);
        case FieldKind::extension: {
            if (text.size() < 2 || text.front() != '[' || text.back() != ']')
                throw fail("expected [c0,c1,...]");
            std::vector<i64> c;
            std::string_view body = text.substr(1, text.size() - 2);
            size_t pos = 0;
            while (pos <= body.size() && !body.empty()) {
                size_t comma = body.find(',', pos);
                std::string_view tok =
                    body.substr(pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
                c.push_back(mod_reduce(parse_i64(tok), p_));
                if (comma == std::string_view::npos) break;
                pos = comma + 1;
            }
            if (c.size() > static_cast<size_t>(degree_)) throw fail("too many coefficients");
            c.resize(degree_, 0);
            return c;
        }
    }
    throw fail("bad kind");
}

Value FieldSpec::sample(std::mt19937_64& rng) const {
    switch (kind_) {
        case FieldKind::rational: {
            // small exact rationals keep randomized Q tests fast to audit
            i64 num = static_cast<i64>(uniform_below(rng, 9)) - 4;
            i64 den = static_cast<i64>(uniform_below(rng, 4)) + 1;
            return canonical_rat(mpq_class(static_cast<long>(num), static_cast<long>(den)));
        }
        case FieldKind::prime:
            return static_cast<i64>(uniform_below(rng, static_cast<u64>(p_)));
        case FieldKind::extension: {
            std::vector<i64> c(degree_);
            for (int i = 0; i < degree_; ++i)
                c[i] = static_cast<i64>(uniform_below(rng, static_cast<u64>(p_)));
            return c;
        }
    }
    throw error("sample: bad kind");
}

Value FieldSpec::element_at(u64 idx) const {
    switch (kind_) {
        case FieldKind::rational: throw error("element_at: field is infinite");
        case FieldKind::prime:
            if (idx >= static_cast<u64>(p_)) throw error("element_at: index out of range");
            return static_cast<i64>(idx);
        case FieldKind::extension: {
            std::vector<i64> c(degree_);
            for (int i = 0; i < degree_; ++i) {
                c[i] = static_cast<i64>(idx % static_cast<u64>(p_));
                idx /= static_cast<u64>(p_);
            }
            if (idx != 0) throw error("element_at: index out of range");
            return c;
        }
    }
    throw error("element_at: bad kind");
}

std::string FieldSpec::describe() const {
    switch (kind_) {
        case FieldKind::rational: return "Q";
        case FieldKind::prime: return "GF(" + std::to_string(p_) + ")";
        case FieldKind::extension:
            return "GF(" + std::to_string(p_) + "^" + std::to_string(degree_) + ")";
    }
    return "?";
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a == b || (a && b && *a == *b);
}

void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* what) {
    if (!same_field(a, b))
        throw error(std::string(what) + ": operands belong to different fields (" + a->describe() +
                    " vs " + b->describe() + ")");
}

Scalar embed_scalar(const Scalar& a, const FieldPtr& target) {
    return Scalar(target, target->embed_from_prime(*a.field(), a.value()));
}

}  // namespace lienil
