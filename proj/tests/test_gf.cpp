#include <doctest.h>

#include <map>
#include <set>

#include "czsplit/gf.hpp"
#include "czsplit/poly.hpp"
#include "czsplit/rng.hpp"

using namespace czsplit;

namespace {

// Test-local irreducibility oracle: trial division by every lower-degree
// monic polynomial over GF(p), coefficients as base-p integers.
bool naive_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& coeffs) {
    auto fp = Field::make(p, 1);
    Polynomial f(fp, std::vector<enc_t>(coeffs.begin(), coeffs.end()));
    for (int d = 1; d <= f.degree() / 2; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c) {
            std::vector<enc_t> g(d + 1, 0);
            std::uint64_t v = c;
            for (int i = 0; i < d; ++i) {
                g[i] = (enc_t)(v % p);
                v /= p;
            }
            g[d] = 1;
            if (mod(f, Polynomial(fp, g)).is_zero()) return false;
        }
    }
    return true;
}

// Test-local multiplicative-order oracle.
std::uint64_t naive_order(const Field& k, enc_t a) {
    enc_t x = a;
    std::uint64_t n = 1;
    while (x != 1) {
        x = k.mul(x, a);
        ++n;
        REQUIRE(n <= k.size());
    }
    return n;
}

} // namespace

TEST_CASE("make_field picks the documented moduli and generators") {
    auto f4 = Field::make(2, 2);
    CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1}); // x^2+x+1, the only choice
    CHECK(f4->alpha() == 2);                                     // x

    auto f7 = Field::make(7, 1);
    CHECK(f7->modulus().empty());
    CHECK(f7->alpha() == 3);
    // smallest generator mod 7, checked against the brute-force order oracle
    CHECK(naive_order(*f7, 2) == 3);
    CHECK(naive_order(*f7, 3) == 6);

    auto f16 = Field::make(2, 4);
    // lexicographic search oracle over the 16 monic quartics
    std::vector<std::uint32_t> expected;
    for (std::uint64_t c = 0; c < 16; ++c) {
        std::vector<std::uint32_t> mod{(std::uint32_t)(c & 1), (std::uint32_t)((c >> 1) & 1),
                                       (std::uint32_t)((c >> 2) & 1), (std::uint32_t)((c >> 3) & 1),
                                       1};
        if (naive_irreducible(2, mod)) {
            expected = mod;
            break;
        }
    }
    CHECK(f16->modulus() == expected);
    CHECK(f16->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1}); // x^4+x+1
    CHECK(f16->alpha() == 2);
    CHECK(naive_order(*f16, f16->alpha()) == 15);
}

TEST_CASE("make_field rejects bad inputs") {
    CHECK_THROWS_AS(Field::make(4, 1), Error);  // composite p
    CHECK_THROWS_AS(Field::make(1, 3), Error);
    CHECK_THROWS_AS(Field::make(2, 0), Error);
    CHECK_THROWS_AS(Field::make(2, 25), Error); // over the 2^24 cap
    // x^2+1 = (x+1)^2 over GF(2)
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}), Error);
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<std::uint32_t>{1, 1}), Error); // wrong length
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 2}), Error); // not monic
}

TEST_CASE("order factorization multiplies back and certifies alpha") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 4}, {2, 6}, {3, 2}, {7, 1}, {101, 1}}) {
        auto k = Field::make(p, m);
        std::uint64_t prod = 1;
        for (auto f : k->order_factorization()) prod *= f;
        CHECK(prod == k->group_order());
        std::set<std::uint64_t> distinct(k->order_factorization().begin(),
                                         k->order_factorization().end());
        for (auto f : distinct) CHECK(k->pow(k->alpha(), k->group_order() / f) != 1);
    }
}

TEST_CASE("field axioms and the documented arithmetic examples") {
    auto f4 = Field::make(2, 2);
    enc_t w = f4->alpha();
    CHECK(f4->mul(w, f4->mul(w, w)) == 1); // w * w^2 = 1

    auto f7 = Field::make(7, 1);
    CHECK(f7->inv(3) == 5);
    CHECK(f7->mul(3, 5) == 1);

    auto f16 = Field::make(2, 4);
    CHECK(f16->pow(f16->alpha(), 15) == 1);
    CHECK(f16->pow(f16->alpha(), 5) != 1);
    CHECK(f16->pow(f16->alpha(), 3) != 1);

    CHECK_THROWS_AS(f7->inv(0), Error);
}

TEST_CASE("x^(q-1) = 1 exhaustively on small fields") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 4}, {2, 6}, {2, 10}, {3, 4}, {7, 1}, {101, 1}}) {
        auto k = Field::make(p, m);
        for (std::uint64_t x = 1; x < k->size(); ++x)
            CHECK(k->pow((enc_t)x, k->group_order()) == 1);
    }
}

TEST_CASE("Element operators check field identity") {
    auto f16 = Field::make(2, 4);
    auto f7 = Field::make(7, 1);
    Element a(f16, 3), b(f16, 7), c(f7, 3);
    CHECK((a * b).enc() == f16->mul(3, 7));
    CHECK((a + b).enc() == (3 ^ 7));
    CHECK_THROWS_AS(a * c, Error);
    CHECK(a.pow(15) == Element(f16, 1) * Element(f16, 1));

    // structurally equal fields interoperate across make() calls
    auto f16b = Field::make(2, 4);
    CHECK(Element(f16, 5) == Element(f16b, 5));
}

TEST_CASE("encode/decode is the base-p power-basis encoding") {
    auto f16 = Field::make(2, 4);
    CHECK(decode(f16, 3).coeffs() == std::vector<std::uint32_t>{1, 1, 0, 0}); // 1 + x

    auto f7 = Field::make(7, 1);
    CHECK(encode(decode(f7, 5)) == 5);

    auto f9 = Field::make(3, 2);
    CHECK(decode(f9, 5).coeffs() == std::vector<std::uint32_t>{2, 1}); // 2 + x

    CHECK_THROWS_AS(decode(f9, 9), Error);

    auto f81 = Field::make(3, 4);
    for (std::uint64_t n = 0; n < f81->size(); ++n) {
        Element e = decode(f81, n);
        CHECK(encode(e) == n);
        CHECK(f81->from_coeffs(e.coeffs()) == (enc_t)n);
    }
}

TEST_CASE("GF(4) embeds in GF(16) at the smaller of the two roots") {
    auto f4 = Field::make(2, 2);
    auto f16 = Field::make(2, 4);
    Embedding emb = embed_subfield(f4, f16);

    // the two roots of x^2+x+1 in GF(16) are alpha^5 and alpha^10
    std::vector<enc_t> roots;
    for (enc_t x = 0; x < 16; ++x)
        if (f16->add(f16->mul(x, x), f16->add(x, 1)) == 0) roots.push_back(x);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == f16->pow(f16->alpha(), 5));
    CHECK(roots[1] == f16->pow(f16->alpha(), 10));
    CHECK(emb.generator_image() == roots[0]); // smallest encoding

    // ring homomorphism, exhaustive on all 16 pairs
    for (enc_t x = 0; x < 4; ++x)
        for (enc_t y = 0; y < 4; ++y) {
            CHECK(emb.embed(f4->mul(x, y)) == f16->mul(emb.embed(x), emb.embed(y)));
            CHECK(emb.embed(f4->add(x, y)) == f16->add(emb.embed(x), emb.embed(y)));
        }

    // injective, with a working pull back
    std::set<enc_t> images;
    for (enc_t x = 0; x < 4; ++x) {
        images.insert(emb.embed(x));
        CHECK(emb.pull_back(emb.embed(x)) == x);
    }
    CHECK(images.size() == 4);
    CHECK(!emb.pull_back(f16->alpha()).has_value()); // alpha generates, not in GF(4)
}

TEST_CASE("prime subfield embeds at 1; mismatched degrees are rejected") {
    auto f2 = Field::make(2, 1);
    auto f16 = Field::make(2, 4);
    Embedding emb = embed_subfield(f2, f16);
    CHECK(emb.generator_image() == 1);
    CHECK(emb.embed(1) == 1);

    auto f8 = Field::make(2, 3);
    CHECK_THROWS_AS(embed_subfield(Field::make(2, 2), f8), Error);
    CHECK_THROWS_AS(embed_subfield(Field::make(3, 1), f16), Error);
}

TEST_CASE("GF(9) embeds in GF(81): root substitution and random homomorphism checks") {
    auto f9 = Field::make(3, 2);
    auto f81 = Field::make(3, 4);
    Embedding emb = embed_subfield(f9, f81);

    // image satisfies the GF(9) modulus
    enc_t g = emb.generator_image();
    enc_t acc = 0, gp = 1;
    for (auto c : f9->modulus()) {
        acc = f81->add(acc, f81->mul(f81->scalar(c), gp));
        gp = f81->mul(gp, g);
    }
    CHECK(acc == 0);

    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        enc_t x = (enc_t)rng.below(9), y = (enc_t)rng.below(9);
        CHECK(emb.embed(f9->mul(x, y)) == f81->mul(emb.embed(x), emb.embed(y)));
        CHECK(emb.embed(f9->add(x, y)) == f81->add(emb.embed(x), emb.embed(y)));
    }
}

TEST_CASE("relative norm lands in the subfield and is multiplicative") {
    auto f4 = Field::make(2, 2);
    auto f16 = Field::make(2, 4);
    Embedding emb = embed_subfield(f4, f16);

    // norm(alpha) = alpha * alpha^4 = alpha^5, an order-3 element
    enc_t n = relative_norm(*f16, f16->alpha(), 2);
    CHECK(n == f16->pow(f16->alpha(), 5));
    CHECK(relative_norm(*f16, 1, 2) == 1);
    CHECK(relative_norm(*f16, 0, 2) == 0);

    std::set<enc_t> image;
    for (enc_t x = 0; x < 16; ++x) {
        enc_t nx = relative_norm(*f16, x, 2);
        image.insert(nx);
        CHECK(emb.pull_back(nx).has_value());      // in the embedded GF(4)
        CHECK(f16->pow(nx, 4) == nx);              // fixed by the 2^m Frobenius
        for (enc_t y = 0; y < 16; ++y)
            CHECK(relative_norm(*f16, f16->mul(x, y), 2) ==
                  f16->mul(nx, relative_norm(*f16, y, 2)));
    }
    CHECK(image.size() == 4); // norm maps onto the subfield

    CHECK_THROWS_AS(relative_norm(*f16, 3, 3), Error); // 3 does not divide 4
}

TEST_CASE("log tables agree with generic arithmetic") {
    auto k = Field::make(2, 8);
    k->ensure_log_tables();
    REQUIRE(k->has_log_tables());
    Rng rng(3);
    for (int i = 0; i < 2000; ++i) {
        enc_t a = (enc_t)rng.below(256), b = (enc_t)rng.below(256);
        CHECK(k->mul(a, b) == Field::make(2, 8)->mul(a, b)); // fresh field: no tables
        if (a) CHECK(k->mul(a, k->inv(a)) == 1);
    }
    for (std::uint64_t x = 1; x < k->size(); ++x) CHECK(k->exp(k->log((enc_t)x)) == (enc_t)x);
}
