#include "czsplit/poly.hpp"

#include <algorithm>
#include <sstream>

namespace czsplit {

Polynomial::Polynomial(FieldPtr field, std::vector<enc_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (enc_t c : coeffs_) field_->check_range(c);
    trim();
}

Polynomial Polynomial::constant(FieldPtr field, enc_t c) {
    Polynomial out(std::move(field));
    if (c != 0) out.coeffs_.push_back(c);
    return out;
}

Polynomial Polynomial::linear(FieldPtr field, enc_t c0) {
    Polynomial out(std::move(field));
    out.coeffs_ = {c0, 1};
    return out;
}

Polynomial Polynomial::monomial(FieldPtr field, unsigned k) {
    Polynomial out(std::move(field));
    out.coeffs_.assign(k + 1, 0);
    out.coeffs_[k] = 1;
    return out;
}

enc_t Polynomial::leading() const {
    if (coeffs_.empty()) throw Error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::check_same_field(const Polynomial& o) const {
    if (!field_->same_as(*o.field_)) throw Error("field mismatch");
}

bool Polynomial::operator==(const Polynomial& o) const {
    return field_->same_as(*o.field_) && coeffs_ == o.coeffs_;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_field(o);
    const Field& k = *field_;
    std::vector<enc_t> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = k.add(i < coeffs_.size() ? coeffs_[i] : 0,
                       i < o.coeffs_.size() ? o.coeffs_[i] : 0);
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_field(o);
    const Field& k = *field_;
    std::vector<enc_t> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = k.sub(i < coeffs_.size() ? coeffs_[i] : 0,
                       i < o.coeffs_.size() ? o.coeffs_[i] : 0);
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_field(o);
    if (is_zero() || o.is_zero()) return Polynomial(field_);
    const Field& k = *field_;
    std::vector<enc_t> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            out[i + j] = k.add(out[i + j], k.mul(coeffs_[i], o.coeffs_[j]));
        }
    }
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::scaled(enc_t c) const {
    if (c == 0) return Polynomial(field_);
    const Field& k = *field_;
    std::vector<enc_t> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = k.mul(coeffs_[i], c);
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw Error("cannot normalize the zero polynomial");
    if (is_monic()) return *this;
    return scaled(field_->inv(coeffs_.back()));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i];
    }
    return os.str();
}

std::string Polynomial::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        enc_t c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << '*';
            os << 'z';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::size_t i = ca.size(); i-- > 0;)
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    return false;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw Error("division by the zero polynomial");
    if (!f.field()->same_as(*g.field())) throw Error("field mismatch");
    const Field& k = *f.field();
    if (f.degree() < g.degree()) return {Polynomial(f.field()), f};

    std::vector<enc_t> rem = f.coeffs();
    std::vector<enc_t> quot(f.degree() - g.degree() + 1, 0);
    const auto& gc = g.coeffs();
    const enc_t lead_inv = k.inv(gc.back());
    for (std::size_t i = rem.size(); i-- >= gc.size();) {
        enc_t c = rem[i];
        if (c != 0) {
            enc_t q = k.mul(c, lead_inv);
            quot[i - (gc.size() - 1)] = q;
            for (std::size_t j = 0; j < gc.size(); ++j)
                rem[i - (gc.size() - 1) + j] =
                    k.sub(rem[i - (gc.size() - 1) + j], k.mul(q, gc[j]));
        }
        if (i == 0) break;
    }
    return {Polynomial(f.field(), std::move(quot)), Polynomial(f.field(), std::move(rem))};
}

Polynomial mod(const Polynomial& f, const Polynomial& g) { return divmod(f, g).second; }

Polynomial divexact(const Polynomial& f, const Polynomial& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw InternalError("division expected to be exact");
    return q;
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() && g.is_zero()) throw Error("gcd(0, 0) is undefined");
    Polynomial a = f, b = g;
    while (!b.is_zero()) {
        Polynomial r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial powmod(const Polynomial& c, std::uint64_t e, const Polynomial& sigma) {
    if (sigma.degree() < 1) throw Error("powmod modulus must have degree >= 1");
    if (!c.field()->same_as(*sigma.field())) throw Error("field mismatch");
    Polynomial result = Polynomial::one(c.field());
    Polynomial base = mod(c, sigma);
    while (e) {
        if (e & 1) result = mod(result * base, sigma);
        e >>= 1;
        if (e) base = mod(base * base, sigma);
    }
    return result;
}

Polynomial powmod(const Polynomial& c, const BigUint& e, const Polynomial& sigma) {
    if (sigma.degree() < 1) throw Error("powmod modulus must have degree >= 1");
    if (!c.field()->same_as(*sigma.field())) throw Error("field mismatch");
    Polynomial result = Polynomial::one(c.field());
    const unsigned bits = e.bit_length();
    if (bits == 0) return result;
    Polynomial base = mod(c, sigma);
    for (unsigned i = bits; i-- > 0;) {
        result = mod(result * result, sigma);
        if (e.bit(i)) result = mod(result * base, sigma);
    }
    return result;
}

enc_t eval(const Polynomial& f, enc_t x) {
    const Field& k = *f.field();
    k.check_range(x);
    enc_t acc = 0;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = k.add(k.mul(acc, x), c[i]);
    return acc;
}

Polynomial derivative(const Polynomial& f) {
    if (f.degree() < 1) return Polynomial(f.field());
    const Field& k = *f.field();
    const std::uint32_t p = k.characteristic();
    std::vector<enc_t> out(f.coeffs().size() - 1, 0);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        enc_t factor = k.scalar(i % p); // i as a prime-subfield residue
        out[i - 1] = k.mul(f.coeffs()[i], factor);
    }
    return Polynomial(f.field(), std::move(out));
}

Polynomial product_from_roots(FieldPtr field, const std::vector<enc_t>& roots) {
    Polynomial out = Polynomial::one(field);
    for (enc_t r : roots) out = out * Polynomial::linear(field, field->neg(r));
    return out;
}

bool is_irreducible(const Polynomial& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const Field& k = *f.field();

    // h_r = z^{p^{m r}} mod f by iterated Frobenius powering; an
    // irreducible f has gcd(h_r - z, f) = 1 for r <= n/2 and h_n = z.
    std::uint64_t frob = 1;
    for (std::uint32_t i = 0; i < k.degree(); ++i) frob *= k.characteristic();

    const Polynomial z = Polynomial::monomial(f.field(), 1);
    Polynomial h = z; // deg f >= 2, so z is already reduced
    for (int r = 1; r <= n / 2; ++r) {
        h = powmod(h, frob, f);
        if (gcd(h - z, f).degree() >= 1) return false;
    }
    for (int r = n / 2 + 1; r <= n; ++r) h = powmod(h, frob, f);
    return h == z;
}

Polynomial random_monic(FieldPtr field, unsigned degree, Rng& rng) {
    std::vector<enc_t> coeffs(degree + 1);
    for (unsigned i = 0; i < degree; ++i) coeffs[i] = (enc_t)rng.below(field->size());
    coeffs[degree] = 1;
    return Polynomial(std::move(field), std::move(coeffs));
}

} // namespace czsplit
