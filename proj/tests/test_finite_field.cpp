#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "skewcc/finite_field.hpp"
#include "skewcc/presets.hpp"

using namespace skewcc;

namespace {
// F_25 with t^2 = t + 3, i.e. modulus x^2 - x - 3.
Field f25() { return Field(5, 2, {2, 4, 1}); }
Field f9() { return Field(3, 2, {2, 2, 1}); }
}  // namespace

TEST_CASE("field construction validates its parameters") {
    CHECK_THROWS_AS(Field(2, 1, {0, 1}), std::invalid_argument);   // even characteristic
    CHECK_THROWS_AS(Field(9, 1, {0, 1}), std::invalid_argument);   // composite
    CHECK_THROWS_AS(Field(5, 2, {2, 4, 2}), std::invalid_argument);  // not monic
    CHECK_THROWS_AS(Field(5, 2, {2, 4}), std::invalid_argument);     // wrong degree
    CHECK_THROWS_AS(Field(5, 2, {4, 0, 1}), std::invalid_argument);  // x^2 - 1 reducible
    CHECK_THROWS_AS(Field(3, 12, {1, 1, 1}), std::invalid_argument); // q over the size cap
    CHECK_NOTHROW(f25());
}

TEST_CASE("addition in F_25") {
    Field F = f25();
    FieldElement t = F.gen();
    CHECK(t + F.parse("4t+1") == F.one());  // 5t + 1 = 1 mod 5
    FieldElement a = F.parse("3t+2");
    CHECK(a + F.zero() == a);
    CHECK(a + (-a) == F.zero());
    CHECK_THROWS_AS(a + f9().one(), std::invalid_argument);
}

TEST_CASE("multiplication in F_25") {
    Field F = f25();
    FieldElement t = F.gen();
    CHECK(t * t == F.parse("t+3"));
    FieldElement a = F.parse("2t+4");
    CHECK(a * F.one() == a);
    CHECK(t * F.parse("2t+3") == F.one());  // 2t^2 + 3t = 2(t+3) + 3t = 1 mod 5
}

TEST_CASE("inverses match a brute-force search") {
    Field F = f25();
    for (const FieldElement& a : F.elements()) {
        if (a.is_zero()) {
            CHECK_THROWS_AS(a.inv(), std::invalid_argument);
            continue;
        }
        FieldElement found = F.zero();
        for (const FieldElement& b : F.elements())
            if ((a * b).is_one()) {
                found = b;
                break;
            }
        CHECK(a.inv() == found);
        CHECK((a * a.inv()).is_one());
    }
    CHECK(F.gen().inv() == F.parse("2t+3"));
    CHECK(F.from_int(2).inv() == F.from_int(3));  // zeta for p = 5
}

TEST_CASE("frobenius is the p-th power map") {
    Field F = f25();
    FieldElement t = F.gen();
    // t^5 by explicit repeated multiplication
    FieldElement t5 = t;
    for (int i = 1; i < 5; ++i) t5 = t5 * t;
    CHECK(F.frobenius(t, 1) == t5);
    CHECK(F.frobenius(t, 1) == F.parse("4t+1"));
    // the image is the other root of x^2 - x - 3
    FieldElement y = F.frobenius(t, 1);
    CHECK(y * y - y - F.from_int(3) == F.zero());
    // Theta^m = identity; the prime subfield is fixed
    for (const FieldElement& a : F.elements()) {
        CHECK(F.frobenius(a, F.m()) == a);
        CHECK(F.frobenius(F.pow(a, F.q()), 0) == a);  // Fermat: a^q = a
    }
    for (int c = 0; c < 5; ++c) CHECK(F.frobenius(F.from_int(c), 1) == F.from_int(c));
}

TEST_CASE("frobenius is a ring homomorphism") {
    for (Field F : {f9(), f25()}) {
        for (const FieldElement& a : F.elements())
            for (const FieldElement& b : F.elements()) {
                CHECK(F.frobenius(a * b, 1) == F.frobenius(a, 1) * F.frobenius(b, 1));
                CHECK(F.frobenius(a + b, 1) == F.frobenius(a, 1) + F.frobenius(b, 1));
            }
    }
}

TEST_CASE("automorphism order") {
    Field F = f25();
    CHECK(F.automorphism_order(1) == 2);
    CHECK(F.automorphism_order(2) == 1);
    CHECK(F.automorphism_order(0) == 1);
    CHECK(F.m() % F.automorphism_order(1) == 0);
    Field F81(3, 4, default_modulus(3, 4));
    CHECK(F81.automorphism_order(2) == 2);  // m / gcd(m, k) = 4 / 2
    CHECK(F81.automorphism_order(1) == 4);
    CHECK(F81.automorphism_order(3) == 4);
}

TEST_CASE("element enumeration is complete and duplicate-free") {
    for (int p : {5, 7}) {
        for (int m : {1, 2}) {
            Field F(p, m, default_modulus(p, m));
            std::vector<FieldElement> all = F.elements();
            CHECK(static_cast<int>(all.size()) == F.q());
            std::set<int> seen;
            for (const auto& a : all) seen.insert(a.index());
            CHECK(static_cast<int>(seen.size()) == F.q());
        }
    }
    CHECK(Field(5, 2, {2, 4, 1}).elements().size() == 25);
}

TEST_CASE("field axioms hold exhaustively in F_9") {
    Field F = f9();
    std::vector<FieldElement> all = F.elements();
    for (const auto& a : all)
        for (const auto& b : all) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            for (const auto& c : all) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
}

TEST_CASE("element text syntax round-trips") {
    Field F169(13, 2, default_modulus(13, 2));
    CHECK(F169.parse("12t+11") == F169.element({11, 12}));
    CHECK(to_string(F169.parse("12t+11")) == "12t+11");
    CHECK(F169.parse("-2") == F169.from_int(11));
    CHECK(F169.parse("0").is_zero());
    Field F9 = f9();
    CHECK(F9.parse("t^2") == F9.gen() * F9.gen());
    CHECK(F9.parse("t ^ 2") == F9.parse("t+1"));  // t^2 = t + 1 under the standard modulus
    CHECK_THROWS_AS(F9.parse(""), std::invalid_argument);
    CHECK_THROWS_AS(F9.parse("x+1"), std::invalid_argument);
    CHECK_THROWS_AS(Field(5).parse("t"), std::invalid_argument);  // no generator in a prime field
    for (const FieldElement& a : F169.elements()) {
        CHECK(F169.parse(to_string(a)) == a);
    }
}

TEST_CASE("coefficient vectors are canonical") {
    Field F = f25();
    FieldElement a = F.element({4, 1});
    CHECK(a.coeffs() == std::vector<int>{4, 1});
    CHECK(F.element({9, -4}) == a);  // entries reduced mod p
    CHECK(F.element({4}) == F.from_int(4));
    CHECK_THROWS_AS(F.element({1, 2, 3}), std::invalid_argument);
}
