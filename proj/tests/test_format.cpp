#include <doctest.h>

#include "czsplit/format.hpp"
#include "czsplit/rng.hpp"

using namespace czsplit;

TEST_CASE("field spec strings") {
    auto f16 = parse_field_spec("gf(2,4)");
    CHECK(f16->characteristic() == 2);
    CHECK(f16->degree() == 4);
    CHECK(field_spec(*f16) == "gf(2,4)");

    auto custom = parse_field_spec("gf(2,4;modulus=1,1,0,0,1)");
    CHECK(custom->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK(custom->same_as(*f16));

    // another irreducible quartic gives a structurally different field
    auto other = parse_field_spec("gf(2,4;modulus=1,1,1,1,1)");
    CHECK(!other->same_as(*f16));

    CHECK(parse_field_spec("  gf(7,1) ")->characteristic() == 7);

    CHECK_THROWS_AS(parse_field_spec("gf(2)"), Error);
    CHECK_THROWS_AS(parse_field_spec("gf(2,4"), Error);
    CHECK_THROWS_AS(parse_field_spec("field(2,4)"), Error);
    CHECK_THROWS_AS(parse_field_spec("gf(4,2)"), Error);      // composite p
    CHECK_THROWS_AS(parse_field_spec("gf(2,4;modulus=1,0,1,0,1)"), Error); // reducible
    CHECK_THROWS_AS(parse_field_spec("gf(2,x)"), Error);
}

TEST_CASE("polynomial text in both forms") {
    auto f7 = parse_field_spec("gf(7,1)");

    CHECK(parse_polynomial(f7, "1,3,1") == Polynomial(f7, {1, 3, 1}));
    CHECK(parse_polynomial(f7, "z^2+3*z+1") == Polynomial(f7, {1, 3, 1}));
    CHECK(parse_polynomial(f7, "z^2 + 3*z + 1") == Polynomial(f7, {1, 3, 1}));
    CHECK(parse_polynomial(f7, "z") == Polynomial(f7, {0, 1}));
    CHECK(parse_polynomial(f7, "z^2-1") == Polynomial(f7, {6, 0, 1}));
    CHECK(parse_polynomial(f7, "-z+2") == Polynomial(f7, {2, 6}));
    CHECK(parse_polynomial(f7, "0").is_zero());
    CHECK(parse_polynomial(f7, "3*z^2+z") == Polynomial(f7, {0, 1, 3}));

    auto f16 = parse_field_spec("gf(2,4)");
    CHECK(parse_polynomial(f16, "z^3+z") == Polynomial(f16, {0, 1, 0, 1}));
    CHECK(parse_polynomial(f16, "7*z^2+9") == Polynomial(f16, {9, 0, 7}));

    CHECK_THROWS_AS(parse_polynomial(f7, ""), Error);
    CHECK_THROWS_AS(parse_polynomial(f7, "z^"), Error);
    CHECK_THROWS_AS(parse_polynomial(f7, "z++1"), Error);
    CHECK_THROWS_AS(parse_polynomial(f7, "7*z"), Error);   // encoding out of range
    CHECK_THROWS_AS(parse_polynomial(f7, "1,9"), Error);   // encoding out of range
    CHECK_THROWS_AS(parse_polynomial(f7, "banana"), Error);
}

TEST_CASE("comma round trip") {
    auto f16 = parse_field_spec("gf(2,4)");
    Rng rng(77);
    for (int i = 0; i < 200; ++i) {
        std::vector<enc_t> coeffs(1 + rng.below(8));
        for (auto& c : coeffs) c = (enc_t)rng.below(16);
        Polynomial f(f16, std::move(coeffs));
        CHECK(parse_polynomial(f16, f.to_string()) == f);
        CHECK(parse_polynomial(f16, f.pretty()) == f);
    }
}
