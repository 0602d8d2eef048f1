#ifndef CZSPLIT_POLY_HPP
#define CZSPLIT_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "czsplit/bigint.hpp"
#include "czsplit/gf.hpp"
#include "czsplit/rng.hpp"

namespace czsplit {

/// Dense univariate polynomial over one field. Coefficients are element
/// encodings, little-endian, with no trailing zeros; the zero polynomial
/// has an empty coefficient list and degree() == kZeroDegree.
class Polynomial {
public:
    static constexpr int kZeroDegree = -1; // "negative infinity" marker

    explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
    Polynomial(FieldPtr field, std::vector<enc_t> coeffs);

    static Polynomial zero(FieldPtr field) { return Polynomial(std::move(field)); }
    static Polynomial constant(FieldPtr field, enc_t c);
    static Polynomial one(FieldPtr field) { return constant(std::move(field), 1); }
    /// z + c0 (monic linear).
    static Polynomial linear(FieldPtr field, enc_t c0);
    /// z^k.
    static Polynomial monomial(FieldPtr field, unsigned k);

    const FieldPtr& field() const { return field_; }
    const std::vector<enc_t>& coeffs() const { return coeffs_; }
    int degree() const { return (int)coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    enc_t leading() const;
    enc_t coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(enc_t c) const;
    Polynomial monic() const; // throws on zero

    /// "c0,c1,...,cd" of encodings, little-endian; "0" for the zero polynomial.
    std::string to_string() const;
    /// Human form like "z^2+3*z+1" (encodings as coefficients, high degree first).
    std::string pretty() const;

private:
    void trim();
    void check_same_field(const Polynomial& o) const;

    FieldPtr field_;
    std::vector<enc_t> coeffs_;

    friend struct PolyOps;
};

/// Total order for canonical output: by degree, then coefficient encodings
/// from the top down.
bool poly_less(const Polynomial& a, const Polynomial& b);

/// f = q*g + r with deg r < deg g. g must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);
Polynomial mod(const Polynomial& f, const Polynomial& g);
/// Exact division; throws if the remainder is nonzero.
Polynomial divexact(const Polynomial& f, const Polynomial& g);

/// Monic gcd; gcd(f, 0) = monic(f). Not both zero.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

/// c^e mod sigma by square-and-multiply with reduction each step.
/// deg sigma >= 1.
Polynomial powmod(const Polynomial& c, std::uint64_t e, const Polynomial& sigma);
Polynomial powmod(const Polynomial& c, const BigUint& e, const Polynomial& sigma);

/// Horner evaluation.
enc_t eval(const Polynomial& f, enc_t x);

Polynomial derivative(const Polynomial& f);

/// Monic polynomial with exactly the given multiset of roots.
Polynomial product_from_roots(FieldPtr field, const std::vector<enc_t>& roots);

/// Distinct-degree criterion: gcd(z^{p^{m r}} - z, f) trivial for
/// r <= deg(f)/2 and z^{p^{m deg f}} == z mod f. Deterministic.
bool is_irreducible(const Polynomial& f);

/// Uniform monic polynomial of the given degree; deterministic given rng state.
Polynomial random_monic(FieldPtr field, unsigned degree, Rng& rng);

} // namespace czsplit

#endif
