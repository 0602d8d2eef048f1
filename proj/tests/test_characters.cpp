#include <doctest.h>

#include "czsplit/characters.hpp"
#include "czsplit/gf.hpp"

using namespace czsplit;

namespace {

// Indicator through the character-sum identity, evaluated exactly:
// 3 I_{A_j}(x) = 1 + zeta^{2j} chi(x) + zeta^j conj(chi(x)) for q = 3,
// 2 I_{B_j}(x) = 1 + (-1)^j chi(x) for q = 2.
int indicator_by_characters(const CosetStructure& cs, enc_t x, unsigned j) {
    if (cs.q() == 3) {
        Eisenstein n = Eisenstein{1, 0} + Eisenstein::zeta_pow(2 * j) * chi3(cs, x) +
                       Eisenstein::zeta_pow(j) * chi3(cs, x).conj();
        REQUIRE(n.b == 0);
        REQUIRE((n.a == 0 || n.a == 3));
        return (int)(n.a / 3);
    }
    int n = 1 + (j % 2 == 0 ? 1 : -1) * chi2(cs, x);
    REQUIRE((n == 0 || n == 2));
    return n / 2;
}

} // namespace

TEST_CASE("Eisenstein arithmetic is the exact ring Z[zeta_3]") {
    Eisenstein zeta = Eisenstein::zeta_pow(1);
    CHECK(zeta * zeta == Eisenstein::zeta_pow(2));
    CHECK(zeta * zeta == Eisenstein{-1, -1}); // zeta^2 = -1 - zeta
    CHECK(zeta * zeta * zeta == Eisenstein{1, 0});
    CHECK(zeta.conj() == Eisenstein::zeta_pow(2));
    CHECK(zeta.conj().conj() == zeta);
    CHECK((Eisenstein{3, -2} + Eisenstein{-1, 5}) == Eisenstein{2, 3});
    CHECK((Eisenstein{1, 1} * Eisenstein{1, -1}) == Eisenstein{1 + 1, -1 + 1 + 1});
    CHECK(Eisenstein{-1, 0}.to_string() == "-1+0*w");
    CHECK(Eisenstein{2, -3}.to_string() == "2-3*w");
}

TEST_CASE("coset structure basics") {
    auto f16 = Field::make(2, 4);
    CosetStructure cs = CosetStructure::make(f16, 3);
    CHECK(cs.coset_size() == 5);
    CHECK(cs.omega() == f16->pow(f16->alpha(), 5));
    CHECK(f16->pow(cs.omega(), 3) == 1);
    CHECK(cs.omega() != 1);

    CHECK(cs.coset_index(1) == 0);
    CHECK(cs.coset_index(f16->alpha()) == 1);
    CHECK(cs.coset_index(f16->pow(f16->alpha(), 3)) == 0); // a cube
    CHECK(cs.coset_index(0) == -1);                        // zero marker

    // cosets partition the nonzero elements into q equal classes
    std::vector<int> sizes(3, 0);
    for (enc_t x = 1; x < 16; ++x) sizes[(unsigned)cs.coset_index(x)]++;
    CHECK(sizes == std::vector<int>{5, 5, 5});

    // table path agrees with the exponentiation path
    CosetStructure cs2 = CosetStructure::make(f16, 3);
    cs2.ensure_table();
    for (enc_t x = 0; x < 16; ++x) CHECK(cs.coset_index(x) == cs2.coset_index(x));

    CHECK_THROWS_AS(CosetStructure::make(f16, 2), Error); // 2 does not divide 15
    CHECK_THROWS_AS(CosetStructure::make(f16, 4), Error); // not prime
    CHECK_THROWS_AS(CosetStructure::make(Field::make(2, 3), 3), Error); // 3 does not divide 7
}

TEST_CASE("general q coset structures carry only the index") {
    auto f256 = Field::make(2, 8);
    CosetStructure cs5 = CosetStructure::make(f256, 5);
    CHECK(cs5.coset_size() == 51);
    std::vector<int> sizes(5, 0);
    for (std::uint64_t x = 1; x < 256; ++x) sizes[(unsigned)cs5.coset_index((enc_t)x)]++;
    for (int s : sizes) CHECK(s == 51);
    CHECK_THROWS_AS(chi(cs5, 1), Error); // no cyclotomic form beyond q = 3
}

TEST_CASE("chi3 and chi2 values") {
    auto f16 = Field::make(2, 4);
    CosetStructure cs = CosetStructure::make(f16, 3);
    CHECK(chi3(cs, 1) == Eisenstein{1, 0});
    CHECK(chi3(cs, 0) == Eisenstein{0, 0}); // chi_3(0) = 0 by definition
    CHECK(chi3(cs, f16->pow(f16->alpha(), 2)) == Eisenstein{-1, -1}); // zeta^2

    auto f7 = Field::make(7, 1);
    CosetStructure cs7 = CosetStructure::make(f7, 2);
    CHECK(chi2(cs7, 2) == 1);  // 2 = 3^2 mod 7
    CHECK(chi2(cs7, 0) == 0);  // chi_2(0) = 0 by definition
    CHECK(chi2(cs7, 3) == -1); // 3 generates

    CHECK_THROWS_AS(chi3(cs7, 1), Error);
    CHECK_THROWS_AS(chi2(cs, 1), Error);
}

TEST_CASE("multiplicativity and chi^q = 1, exhaustive on small fields") {
    for (auto [p, m, q] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
             {2, 4, 3}, {2, 6, 3}, {2, 8, 3}, {7, 1, 2}, {3, 2, 2}, {11, 1, 2}}) {
        auto k = Field::make(p, m);
        CosetStructure cs = CosetStructure::make(k, q);
        cs.ensure_table();
        for (std::uint64_t x = 1; x < k->size(); ++x) {
            for (std::uint64_t y = 1; y < k->size(); ++y)
                CHECK(chi(cs, k->mul((enc_t)x, (enc_t)y)) ==
                      chi(cs, (enc_t)x) * chi(cs, (enc_t)y));
            Eisenstein pw{1, 0};
            for (std::uint32_t i = 0; i < q; ++i) pw = pw * chi(cs, (enc_t)x);
            CHECK(pw == Eisenstein{1, 0});
        }
    }
}

TEST_CASE("total and pair sums match the stated identities") {
    auto f16 = Field::make(2, 4);
    CosetStructure cs = CosetStructure::make(f16, 3);
    CHECK(total_sum(cs) == Eisenstein{0, 0});
    CHECK(pair_sum(cs, 1) == Eisenstein{-1, 0});
    CHECK_THROWS_AS(pair_sum(cs, 0), Error);

    auto f7 = Field::make(7, 1);
    CosetStructure cs7 = CosetStructure::make(f7, 2);
    CHECK(total_sum(cs7) == Eisenstein{0, 0});
    CHECK(pair_sum(cs7, 3) == Eisenstein{-1, 0});

    // exhaustive over every nonzero beta in two fields (the acceptance
    // suite covers the full field list)
    for (enc_t b = 1; b < 16; ++b) CHECK(pair_sum(cs, b) == Eisenstein{-1, 0});
    for (enc_t b = 1; b < 7; ++b) CHECK(pair_sum(cs7, b) == Eisenstein{-1, 0});
}

TEST_CASE("cubic Gauss sums equal -(-2)^(m/2)") {
    CHECK(gauss_sum_cubic(CosetStructure::make(Field::make(2, 4), 3)) == Eisenstein{-4, 0});
    CHECK(gauss_sum_cubic(CosetStructure::make(Field::make(2, 6), 3)) == Eisenstein{8, 0});
    CHECK(gauss_sum_cubic(CosetStructure::make(Field::make(2, 8), 3)) == Eisenstein{-16, 0});
    CHECK_THROWS_AS(gauss_sum_cubic(CosetStructure::make(Field::make(7, 1), 2)), Error);
}

TEST_CASE("indicator agrees with the character-sum formula") {
    auto f16 = Field::make(2, 4);
    CosetStructure cs = CosetStructure::make(f16, 3);
    CHECK(indicator(cs, f16->alpha(), 1) == 1);
    CHECK(indicator(cs, f16->alpha(), 0) == 0);
    CHECK_THROWS_AS(indicator(cs, 0, 0), Error);

    for (enc_t x = 1; x < 16; ++x) {
        int total = 0;
        for (unsigned h = 0; h < 3; ++h) {
            CHECK(indicator(cs, x, h) == indicator_by_characters(cs, x, h));
            total += indicator(cs, x, h);
        }
        CHECK(total == 1); // partition
    }

    auto f7 = Field::make(7, 1);
    CosetStructure cs7 = CosetStructure::make(f7, 2);
    for (enc_t x = 1; x < 7; ++x)
        for (unsigned h = 0; h < 2; ++h)
            CHECK(indicator(cs7, x, h) == indicator_by_characters(cs7, x, h));
}

TEST_CASE("the big-field character is the lift of a small-field character") {
    // GF(4) in GF(16): the plain identity chi' = chi o N holds.
    {
        auto small = Field::make(2, 2);
        auto big = Field::make(2, 4);
        Embedding emb = embed_subfield(small, big);
        CosetStructure cs_small = CosetStructure::make(small, 3);
        CosetStructure cs_big = CosetStructure::make(big, 3);
        unsigned e = lifted_character_exponent(emb, cs_small, cs_big);
        CHECK(e == 1);
        CHECK(lifted_character_agrees(emb, cs_small, cs_big, e));
    }
    // GF(16) in GF(256): chi' is the lift of the conjugate character.
    {
        auto small = Field::make(2, 4);
        auto big = Field::make(2, 8);
        Embedding emb = embed_subfield(small, big);
        CosetStructure cs_small = CosetStructure::make(small, 3);
        CosetStructure cs_big = CosetStructure::make(big, 3);
        unsigned e = lifted_character_exponent(emb, cs_small, cs_big);
        CHECK(e == 2);
        CHECK(lifted_character_agrees(emb, cs_small, cs_big, e));
        CHECK(!lifted_character_agrees(emb, cs_small, cs_big, 1));
    }
    // Quadratic characters lift plainly (there is only one of them).
    {
        auto small = Field::make(3, 2);
        auto big = Field::make(3, 4);
        Embedding emb = embed_subfield(small, big);
        CosetStructure cs_small = CosetStructure::make(small, 2);
        CosetStructure cs_big = CosetStructure::make(big, 2);
        unsigned e = lifted_character_exponent(emb, cs_small, cs_big);
        CHECK(e == 1);
        CHECK(lifted_character_agrees(emb, cs_small, cs_big, e));
    }
}
