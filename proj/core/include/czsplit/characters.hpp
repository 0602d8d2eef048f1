#ifndef CZSPLIT_CHARACTERS_HPP
#define CZSPLIT_CHARACTERS_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "czsplit/gf.hpp"

namespace czsplit {

/// Exact algebraic integer a + b*zeta_3 (zeta_3 a primitive complex cubic
/// root of unity, zeta_3^2 = -1 - zeta_3). Quadratic-character sums use the
/// b == 0 slice. No floating point anywhere near this type.
struct Eisenstein {
    long long a = 0;
    long long b = 0;

    static Eisenstein zeta_pow(unsigned h) {
        switch (h % 3) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            default: return {-1, -1};
        }
    }

    Eisenstein conj() const { return {a - b, -b}; }
    bool is_integer() const { return b == 0; }

    Eisenstein operator+(const Eisenstein& o) const { return {a + o.a, b + o.b}; }
    Eisenstein operator-(const Eisenstein& o) const { return {a - o.a, b - o.b}; }
    Eisenstein operator*(const Eisenstein& o) const {
        // (a1 + b1 w)(a2 + b2 w), w^2 = -1 - w
        return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
    }
    bool operator==(const Eisenstein& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Eisenstein& o) const { return !(*this == o); }

    std::string to_string() const; // "a+b*w"
};

/// The coset partition of GF(p^m)* by the subgroup of q-th powers:
/// A_h = alpha^h * A_0, h in [0, q), each of size (p^m - 1)/q, together
/// with omega = alpha^((p^m-1)/q), the in-field primitive q-th root of
/// unity (-1 for q = 2).
class CosetStructure {
public:
    /// q must be a prime divisor of p^m - 1.
    static CosetStructure make(FieldPtr field, std::uint32_t q);

    const FieldPtr& field() const { return field_; }
    std::uint32_t q() const { return q_; }
    std::uint64_t coset_size() const { return coset_size_; }
    enc_t omega() const { return omega_pow_[1 % q_]; }
    enc_t omega_pow(unsigned h) const { return omega_pow_[h % q_]; }

    /// h in [0, q) with x^((p^m-1)/q) = omega^h, or -1 for x = 0 (the zero
    /// marker).
    /// One exponentiation plus a lookup among the q powers of omega; the
    /// precomputed table path (below) short-circuits this.
    int coset_index(enc_t x) const;

    /// Builds the enc -> coset table (one pass over alpha powers). Lazy,
    /// idempotent, thread-safe; fields above 2^16 fall back to the
    /// exponentiation path.
    void ensure_table() const;
    bool has_table() const { return !table_->empty(); }
    const std::vector<std::int8_t>& table() const { return *table_; }

private:
    CosetStructure() = default;

    FieldPtr field_;
    std::uint32_t q_ = 0;
    std::uint64_t coset_size_ = 0;
    std::vector<enc_t> omega_pow_;
    std::shared_ptr<std::once_flag> table_once_;
    std::shared_ptr<std::vector<std::int8_t>> table_; // enc -> h, -1 at 0
};

/// Cubic character: zeta_3^h on coset A_h, 0 at 0. Requires q == 3.
Eisenstein chi3(const CosetStructure& cs, enc_t x);

/// Quadratic character: (-1)^h on coset B_h, 0 at 0. Requires q == 2.
int chi2(const CosetStructure& cs, enc_t x);

/// chi_q as an Eisenstein value (q in {2, 3}; larger q carries only the
/// coset index, no cyclotomic arithmetic).
Eisenstein chi(const CosetStructure& cs, enc_t x);

/// Sum of chi over the whole field. Identity: 0 for nontrivial characters.
Eisenstein total_sum(const CosetStructure& cs);

/// Sum over x of chi(x) * conj(chi(x + beta)), beta != 0. Identity: -1.
/// (beta = 0 degenerates to p^m - 1 and is rejected.)
Eisenstein pair_sum(const CosetStructure& cs, enc_t beta);

/// Sum over x of chi3(x) * chi3(x + 1) over GF(2^m), m even: the Gauss sum
/// G_m(1, chi) = -(-2)^{m/2}.
Eisenstein gauss_sum_cubic(const CosetStructure& cs);

/// 1 iff x lies in coset h; x must be nonzero. (The character-sum form of
/// this indicator is exercised by the tests against this direct one.)
int indicator(const CosetStructure& cs, enc_t x, unsigned h);

/// The exponent e in [1, q) such that chi'(x) = chi(N(x))^e for all x of
/// the big field, where chi' is the big field's character, chi the small
/// field's and N the relative norm. For q = 2 this is always 1; for q = 3
/// it depends on how the two primitive elements interact, so the lifted
/// character is chi o N or its conjugate. Computed from the generators;
/// verify with lifted_character_agrees().
unsigned lifted_character_exponent(const Embedding& emb,
                                   const CosetStructure& small_cs,
                                   const CosetStructure& big_cs);

/// Exhaustively checks chi'(x) == chi(N(x))^e over the whole big field.
bool lifted_character_agrees(const Embedding& emb,
                             const CosetStructure& small_cs,
                             const CosetStructure& big_cs,
                             unsigned exponent);

} // namespace czsplit

#endif
