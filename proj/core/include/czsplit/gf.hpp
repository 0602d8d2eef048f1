#ifndef CZSPLIT_GF_HPP
#define CZSPLIT_GF_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "czsplit/errors.hpp"

namespace czsplit {

/// Element encoding: n = sum coeffs[i] * p^i against the power basis,
/// little-endian. Canonical, so two elements are equal iff encodings are.
using enc_t = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^m) with a verified irreducible modulus, a verified primitive
/// element and the factored group order. Immutable after construction;
/// safe to share between threads. All arithmetic below is on encodings.
class Field {
public:
    /// Hard size cap: group-order factorization is by trial division and
    /// the sweeps are exhaustive, so fields stay desk-scale.
    static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 24;

    /// Builds GF(p^m). When no modulus is supplied the lexicographically
    /// smallest monic irreducible is searched (coefficients compared as a
    /// base-p integer, low degree first); alpha is the smallest element by
    /// encoding that passes the order test.
    /// modulus, when given, lists all m+1 coefficients low-to-high and must
    /// be monic irreducible of degree m.
    static FieldPtr make(std::uint32_t p, std::uint32_t m,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint64_t size() const { return size_; }
    std::uint64_t group_order() const { return size_ - 1; }

    /// Modulus coefficients low-to-high including the leading 1; empty for m == 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    enc_t alpha() const { return alpha_; }
    /// Prime factors of p^m - 1, ascending, with multiplicity.
    const std::vector<std::uint64_t>& order_factorization() const { return order_factors_; }

    /// Structural identity: same (p, m, modulus). Elements of structurally
    /// equal fields interoperate even across separate make() calls.
    bool same_as(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    // -- arithmetic on encodings ------------------------------------------

    enc_t add(enc_t a, enc_t b) const;
    enc_t sub(enc_t a, enc_t b) const;
    enc_t neg(enc_t a) const;
    enc_t mul(enc_t a, enc_t b) const;
    enc_t inv(enc_t a) const; // throws on zero
    /// Square-and-multiply; the exponent is reduced mod p^m - 1 for
    /// nonzero bases. 0^0 = 1.
    enc_t pow(enc_t a, std::uint64_t e) const;

    std::uint32_t coeff(enc_t a, std::uint32_t i) const;
    std::vector<std::uint32_t> coeffs(enc_t a) const;
    enc_t from_coeffs(const std::vector<std::uint32_t>& c) const;
    /// Embeds a prime-subfield residue (n < p).
    enc_t scalar(std::uint64_t n) const;

    /// n must lie in [0, p^m).
    enc_t check_range(std::uint64_t n) const;

    // -- optional accelerator ---------------------------------------------

    /// Builds exp/log tables (size <= 2^16 fields only); used by the oracle
    /// sweeps. Idempotent and thread-safe; a no-op above the table cap.
    void ensure_log_tables() const;
    bool has_log_tables() const;
    /// Full addition table for odd characteristic (size <= 2^11 fields);
    /// the characteristic-2 path is a plain xor and needs none.
    void ensure_add_table() const;
    /// Discrete log base alpha; requires tables and a nonzero argument.
    std::uint32_t log(enc_t a) const;
    /// alpha^k via the exp table (requires tables).
    enc_t exp(std::uint64_t k) const;

    std::string describe() const; // "gf(p,m)"

private:
    Field() = default;

    enc_t mul_generic(enc_t a, enc_t b) const;

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint64_t size_ = 0;
    std::vector<std::uint32_t> modulus_; // empty for m == 1
    enc_t alpha_ = 0;
    std::vector<std::uint64_t> order_factors_;
    std::vector<std::uint64_t> pow_p_; // p^0..p^m

    static constexpr std::uint64_t kTableCap = std::uint64_t{1} << 16;
    static constexpr std::uint64_t kAddTableCap = std::uint64_t{1} << 11;
    mutable std::once_flag table_once_;
    mutable std::vector<enc_t> exp_table_;       // alpha^k, k in [0, q-1)
    mutable std::vector<std::uint32_t> log_table_; // enc -> k (log_table_[0] unused)
    mutable std::once_flag add_table_once_;
    mutable std::vector<enc_t> add_table_;       // a * size + b -> a + b
};

/// One element of a specific field. Canonical value type; operators check
/// structural field identity.
class Element {
public:
    Element(FieldPtr field, enc_t enc) : field_(std::move(field)), enc_(enc) {}

    const FieldPtr& field() const { return field_; }
    enc_t enc() const { return enc_; }
    bool is_zero() const { return enc_ == 0; }
    std::vector<std::uint32_t> coeffs() const { return field_->coeffs(enc_); }

    Element operator+(const Element& o) const { return with(field_->add(enc_, same(o))); }
    Element operator-(const Element& o) const { return with(field_->sub(enc_, same(o))); }
    Element operator*(const Element& o) const { return with(field_->mul(enc_, same(o))); }
    Element operator-() const { return with(field_->neg(enc_)); }
    Element inv() const { return with(field_->inv(enc_)); }
    Element pow(std::uint64_t e) const { return with(field_->pow(enc_, e)); }

    bool operator==(const Element& o) const { return field_->same_as(*o.field_) && enc_ == o.enc_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

private:
    Element with(enc_t e) const { return Element(field_, e); }
    enc_t same(const Element& o) const {
        if (!field_->same_as(*o.field_)) throw Error("field mismatch");
        return o.enc_;
    }

    FieldPtr field_;
    enc_t enc_;
};

/// Serialization: n = sum coeffs[i] * p^i. decode checks 0 <= n < p^m.
inline std::uint64_t encode(const Element& x) { return x.enc(); }
inline Element decode(FieldPtr field, std::uint64_t n) {
    enc_t e = field->check_range(n);
    return Element(std::move(field), e);
}

/// GF(p^m) inside GF(p^{sm}): the image of the small field's adjoined root
/// plus forward/backward coefficient maps. Construction scans for roots of
/// the small modulus and picks the one with the smallest encoding.
class Embedding {
public:
    Embedding(FieldPtr small, FieldPtr big, enc_t generator_image);

    const FieldPtr& small() const { return small_; }
    const FieldPtr& big() const { return big_; }
    /// Root of small.modulus() in the big field (1 when small is prime).
    enc_t generator_image() const { return generator_image_; }
    std::uint32_t degree_ratio() const { return ratio_; }

    enc_t embed(enc_t small_enc) const;
    /// Inverse of embed on its image; nullopt for elements outside the
    /// embedded subfield.
    std::optional<enc_t> pull_back(enc_t big_enc) const;

private:
    FieldPtr small_, big_;
    enc_t generator_image_;
    std::uint32_t ratio_;
    std::vector<enc_t> forward_;                    // small enc -> big enc
    std::unordered_map<enc_t, enc_t> backward_;     // big enc -> small enc
};

/// Requires big.p == small.p and small.m | big.m.
Embedding embed_subfield(FieldPtr small, FieldPtr big);

/// N(x) = x * x^{p^m} * ... * x^{p^{m(s-1)}} where m = big.degree()/s.
/// The result is fixed by the p^m-power Frobenius, i.e. lies in the
/// embedded GF(p^m). s must divide the field degree.
enc_t relative_norm(const Field& big, enc_t x, std::uint32_t s);

} // namespace czsplit

#endif
