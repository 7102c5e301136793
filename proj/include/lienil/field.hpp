#pragma once

// Exact scalar arithmetic over Q, GF(p) and GF(p^k).
//
// A FieldSpec is an immutable field descriptor shared via FieldPtr. Element
// payloads are Value variants whose interpretation is fixed by the owning
// field:
//   prime      -> int64 residue in [0, p)
//   rational   -> canonical mpq_class (coprime, positive denominator)
//   extension  -> coefficient vector of length `degree`, entries in [0, p),
//                 ascending powers of the generator
// Values are always kept canonical, so equal elements compare bitwise-equal.

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace lienil {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using i64 = std::int64_t;
using u64 = std::uint64_t;

enum class FieldKind { rational, prime, extension };

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

using Value = std::variant<i64, mpq_class, std::vector<i64>>;

/// Draw a uniform integer in [0, bound) from `rng` by rejection.
u64 uniform_below(std::mt19937_64& rng, u64 bound);

class FieldSpec {
  public:
    static FieldPtr rationals();
    static FieldPtr prime(i64 p);
    static FieldPtr extension(i64 p, int degree, std::vector<i64> modulus);
    /// Built-in default modulus table, p in {2,3,5}, degree <= 3.
    static FieldPtr extension_default(i64 p, int degree);

    FieldKind kind() const { return kind_; }
    /// p for prime/extension kinds, 0 for the rationals.
    i64 characteristic() const { return p_; }
    int degree() const { return degree_; }
    /// Monic modulus, ascending coefficients, length degree+1 (extension only).
    const std::vector<i64>& modulus() const { return modulus_; }
    bool finite() const { return kind_ != FieldKind::rational; }
    /// Number of elements; throws for the rationals or if p^degree overflows.
    u64 order() const;

    bool operator==(const FieldSpec& other) const;
    bool operator!=(const FieldSpec& other) const { return !(*this == other); }

    Value zero() const;
    Value one() const;
    Value from_int(i64 v) const;

    Value add(const Value& a, const Value& b) const;
    Value sub(const Value& a, const Value& b) const;
    Value mul(const Value& a, const Value& b) const;
    Value neg(const Value& a) const;
    Value inv(const Value& a) const;  // throws on zero
    Value div(const Value& a, const Value& b) const;

    bool is_zero(const Value& a) const;
    bool is_one(const Value& a) const;
    bool eq(const Value& a, const Value& b) const;

    /// Image of a GF(p) residue in this extension field (constant polynomial).
    Value embed_from_prime(const FieldSpec& base, const Value& a) const;

    std::string to_string(const Value& a) const;
    /// Parse the text form: "a/b" or "a" (rational), decimal residue (prime),
    /// "[c0,c1,...]" (extension). Input is canonicalized.
    Value parse(std::string_view text) const;

    /// Uniform element of a finite field; small random rational over Q.
    Value sample(std::mt19937_64& rng) const;
    /// Element with index idx in the canonical enumeration (finite fields).
    Value element_at(u64 idx) const;

    std::string describe() const;

  private:
    FieldSpec() = default;

    FieldKind kind_ = FieldKind::rational;
    i64 p_ = 0;
    int degree_ = 1;
    std::vector<i64> modulus_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);
void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* what);

/// A field element bundled with its field, for the public API surface.
class Scalar {
  public:
    Scalar(FieldPtr field, Value v) : field_(std::move(field)), v_(std::move(v)) {}
    static Scalar of(FieldPtr field, i64 v) {
        Value x = field->from_int(v);
        return Scalar(std::move(field), std::move(x));
    }

    const FieldPtr& field() const { return field_; }
    const Value& value() const { return v_; }
    bool is_zero() const { return field_->is_zero(v_); }

    Scalar operator+(const Scalar& o) const { return combine(o, &FieldSpec::add); }
    Scalar operator-(const Scalar& o) const { return combine(o, &FieldSpec::sub); }
    Scalar operator*(const Scalar& o) const { return combine(o, &FieldSpec::mul); }
    Scalar operator/(const Scalar& o) const { return combine(o, &FieldSpec::div); }
    Scalar operator-() const { return Scalar(field_, field_->neg(v_)); }
    Scalar inv() const { return Scalar(field_, field_->inv(v_)); }

    bool operator==(const Scalar& o) const {
        return same_field(field_, o.field_) && field_->eq(v_, o.v_);
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const { return field_->to_string(v_); }

  private:
    Scalar combine(const Scalar& o, Value (FieldSpec::*op)(const Value&, const Value&) const) const {
        require_same_field(field_, o.field_, "scalar arithmetic");
        return Scalar(field_, (field_.get()->*op)(v_, o.v_));
    }

    FieldPtr field_;
    Value v_;
};

/// Ring-homomorphic image of a GF(p) scalar in an extension of the same p.
Scalar embed_scalar(const Scalar& a, const FieldPtr& target);

}  // namespace lienil
