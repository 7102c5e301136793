#include "doctest.h"
#include "helpers.hpp"

using namespace lienil;
using tt::GF;
using tt::Q;

TEST_CASE("prime field arithmetic") {
    auto f = GF(5);
    CHECK(Scalar::of(f, 3) + Scalar::of(f, 4) == Scalar::of(f, 2));
    CHECK(Scalar::of(f, 3) * Scalar::of(f, 4) == Scalar::of(f, 2));
    CHECK(Scalar::of(f, 2).inv() == Scalar::of(f, 3));
    CHECK((-Scalar::of(f, 1)) == Scalar::of(f, 4));
    CHECK_THROWS_AS(Scalar::of(f, 1) / Scalar::of(f, 0), error);
}

TEST_CASE("rational arithmetic") {
    auto f = Q();
    Scalar half(f, f->parse("1/2"));
    Scalar third(f, f->parse("1/3"));
    CHECK((half + third).str() == "5/6");
    CHECK((half * third).str() == "1/6");
    CHECK((half - half).is_zero());
    CHECK(Scalar(f, f->parse("2/4")).str() == "1/2");  // canonicalized on parse
    CHECK(Scalar(f, f->parse("-6/4")).str() == "-3/2");
}

TEST_CASE("extension field arithmetic reduces by the modulus") {
    auto f = tt::GF4();
    Scalar x(f, f->parse("[0,1]"));
    CHECK((x * x).str() == "[1,1]");  // x^2 = x + 1
    CHECK((x * x * x).str() == "[1,0]");
    CHECK(x.inv().str() == "[1,1]");
    Scalar one(f, f->one());
    CHECK((x + x).is_zero());
    CHECK((x * x.inv()) == one);
}

TEST_CASE("field construction rejects bad parameters") {
    CHECK_THROWS_AS(FieldSpec::prime(6), error);
    CHECK_THROWS_AS(FieldSpec::prime(1), error);
    CHECK_THROWS_AS(FieldSpec::extension(2, 2, {0, 0, 1}), error);  // x^2 reducible
    CHECK_THROWS_AS(FieldSpec::extension(2, 2, {1, 1, 0}), error);  // not monic
    CHECK_THROWS_AS(FieldSpec::extension(5, 2, {1, 0, 1}), error);  // x^2+1 has root 2 mod 5
    CHECK_NOTHROW(FieldSpec::extension(2, 3, {1, 1, 0, 1}));
    CHECK_NOTHROW(FieldSpec::extension(3, 3, {1, 2, 0, 1}));
    CHECK_NOTHROW(FieldSpec::extension(2, 4, {1, 1, 0, 0, 1}));
}

TEST_CASE("mixed-field operands are rejected") {
    CHECK_THROWS_AS(Scalar::of(GF(5), 1) + Scalar::of(GF(7), 1), error);
    CHECK(same_field(GF(5), GF(5)));  // structural equality across instances
}

TEST_CASE("embedding into an extension") {
    auto f2 = GF(2);
    auto f4 = tt::GF4();
    CHECK(embed_scalar(Scalar::of(f2, 1), f4).str() == "[1,0]");
    CHECK(embed_scalar(Scalar::of(f2, 0), f4).is_zero());
    auto f3 = GF(3);
    CHECK(embed_scalar(Scalar::of(f3, 2), tt::GF9()).str() == "[2,0]");
    CHECK_THROWS_AS(embed_scalar(Scalar::of(f3, 1), f4), error);
}

TEST_CASE("embedding preserves sums and products exhaustively") {
    for (i64 p : {2, 3, 5, 7}) {
        auto base = GF(p);
        auto target = p <= 5 ? FieldSpec::extension_default(p, 2)
                             : FieldSpec::extension(7, 2, {3, 1, 1});  // x^2+x+3 over GF(7)
        for (i64 a = 0; a < p; ++a)
            for (i64 b = 0; b < p; ++b) {
                Scalar sa = Scalar::of(base, a), sb = Scalar::of(base, b);
                CHECK(embed_scalar(sa + sb, target) ==
                      embed_scalar(sa, target) + embed_scalar(sb, target));
                CHECK(embed_scalar(sa * sb, target) ==
                      embed_scalar(sa, target) * embed_scalar(sb, target));
            }
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    std::vector<FieldPtr> fields{Q(), GF(2), GF(97), tt::GF4(), tt::GF9(),
                                 FieldSpec::extension(5, 3, {3, 3, 0, 1})};
    for (const auto& f : fields) {
        for (int iter = 0; iter < 50; ++iter) {
            Scalar a(f, f->sample(rng)), b(f, f->sample(rng)), c(f, f->sample(rng));
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) {
                CHECK(a.inv().inv() == a);
                CHECK((a * a.inv()).str() == Scalar(f, f->one()).str());
            }
        }
    }
}

TEST_CASE("text round trip is canonical") {
    std::mt19937_64 rng(11);
    for (const auto& f : {Q(), GF(13), tt::GF9()}) {
        for (int iter = 0; iter < 30; ++iter) {
            Value v = f->sample(rng);
            CHECK(f->eq(f->parse(f->to_string(v)), v));
        }
    }
    CHECK_THROWS_AS(Q()->parse("1/0"), error);
    CHECK_THROWS_AS(GF(5)->parse("x"), error);
    CHECK_THROWS_AS(tt::GF4()->parse("[1,0,1]"), error);  // too many coefficients
    CHECK(GF(5)->eq(GF(5)->parse("-3"), GF(5)->from_int(2)));
}

TEST_CASE("default moduli table") {
    for (i64 p : {2, 3, 5})
        for (int d : {1, 2, 3}) CHECK(FieldSpec::extension_default(p, d)->order() > 0);
    CHECK_THROWS_AS(FieldSpec::extension_default(7, 2), error);
    CHECK(FieldSpec::extension_default(2, 2)->order() == 4);
    CHECK(FieldSpec::extension_default(5, 3)->order() == 125);
}
