#include "czsplit/gf.hpp"

#include <algorithm>

#include "czsplit/poly.hpp"

namespace czsplit {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> trial_factor(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

FieldPtr Field::make(std::uint32_t p, std::uint32_t m,
                     std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime_u64(p)) throw Error("characteristic must be prime");
    if (m < 1) throw Error("extension degree must be >= 1");

    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        size *= p;
        if (size > kMaxSize) throw Error("field size p^m exceeds the 2^24 cap");
    }

    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->m_ = m;
    field->size_ = size;
    field->pow_p_.resize(m + 1);
    field->pow_p_[0] = 1;
    for (std::uint32_t i = 1; i <= m; ++i) field->pow_p_[i] = field->pow_p_[i - 1] * p;

    if (m == 1) {
        if (modulus && !modulus->empty()) throw Error("prime fields take no modulus");
    } else if (modulus) {
        if (modulus->size() != m + 1) throw Error("modulus must list m+1 coefficients");
        for (auto c : *modulus)
            if (c >= p) throw Error("modulus coefficient out of range");
        if (modulus->back() != 1) throw Error("modulus must be monic");
        field->modulus_ = *modulus;
    }

    // Irreducibility tests below run over the prime field.
    FieldPtr prime = (m == 1) ? nullptr : Field::make(p, 1);

    auto modulus_irreducible = [&](const std::vector<std::uint32_t>& mod) {
        std::vector<enc_t> coeffs(mod.begin(), mod.end());
        return is_irreducible(Polynomial(prime, std::move(coeffs)));
    };

    if (m > 1 && field->modulus_.empty()) {
        // Lexicographically smallest monic irreducible: the m low
        // coefficients scanned as a base-p integer.
        for (std::uint64_t c = 0; c < size; ++c) {
            std::vector<std::uint32_t> mod(m + 1, 0);
            std::uint64_t v = c;
            for (std::uint32_t i = 0; i < m; ++i) {
                mod[i] = (std::uint32_t)(v % p);
                v /= p;
            }
            mod[m] = 1;
            if (modulus_irreducible(mod)) {
                field->modulus_ = std::move(mod);
                break;
            }
        }
        if (field->modulus_.empty()) throw InternalError("no irreducible modulus found");
    } else if (m > 1) {
        if (!modulus_irreducible(field->modulus_)) throw Error("supplied modulus is reducible");
    }

    field->order_factors_ = trial_factor(size - 1);

    // Primitive element: smallest encoding passing the order test.
    std::vector<std::uint64_t> distinct;
    for (auto f : field->order_factors_)
        if (distinct.empty() || distinct.back() != f) distinct.push_back(f);
    field->alpha_ = 0;
    for (std::uint64_t a = 1; a < size; ++a) {
        bool primitive = true;
        for (auto f : distinct) {
            if (field->pow((enc_t)a, (size - 1) / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            field->alpha_ = (enc_t)a;
            break;
        }
    }
    if (field->alpha_ == 0) throw InternalError("no primitive element found");

    return field;
}

enc_t Field::add(enc_t a, enc_t b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[(std::size_t)a * size_ + b];
    enc_t out = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t da = (std::uint32_t)((a / pow_p_[i]) % p_);
        std::uint32_t db = (std::uint32_t)((b / pow_p_[i]) % p_);
        std::uint32_t s = da + db;
        if (s >= p_) s -= p_;
        out += (enc_t)(s * pow_p_[i]);
    }
    return out;
}

enc_t Field::neg(enc_t a) const {
    if (p_ == 2) return a;
    enc_t out = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t d = (std::uint32_t)((a / pow_p_[i]) % p_);
        if (d) out += (enc_t)((p_ - d) * pow_p_[i]);
    }
    return out;
}

enc_t Field::sub(enc_t a, enc_t b) const { return add(a, neg(b)); }

enc_t Field::mul_generic(enc_t a, enc_t b) const {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return (enc_t)(((std::uint64_t)a * b) % p_);

    std::uint32_t da[24], db[24];
    std::uint64_t prod[47] = {0};
    for (std::uint32_t i = 0; i < m_; ++i) {
        da[i] = (std::uint32_t)((a / pow_p_[i]) % p_);
        db[i] = (std::uint32_t)((b / pow_p_[i]) % p_);
    }
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (!da[i]) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] += (std::uint64_t)da[i] * db[j];
    }
    // Reduce monic modulus of degree m: x^m = -(mod[0] + ... + mod[m-1] x^{m-1}).
    for (std::uint32_t i = 2 * m_ - 2; i >= m_; --i) {
        std::uint64_t c = prod[i] % p_;
        prod[i] = 0;
        if (c) {
            for (std::uint32_t j = 0; j < m_; ++j) {
                std::uint64_t sub = (c * modulus_[j]) % p_;
                prod[i - m_ + j] += p_ - sub; // keep nonnegative
            }
        }
        if (i == m_) break;
    }
    enc_t out = 0;
    for (std::uint32_t i = 0; i < m_; ++i) out += (enc_t)((prod[i] % p_) * pow_p_[i]);
    return out;
}

enc_t Field::mul(enc_t a, enc_t b) const {
    if (!exp_table_.empty()) {
        if (a == 0 || b == 0) return 0;
        std::uint64_t k = (std::uint64_t)log_table_[a] + log_table_[b];
        if (k >= size_ - 1) k -= size_ - 1;
        return exp_table_[k];
    }
    return mul_generic(a, b);
}

enc_t Field::inv(enc_t a) const {
    if (a == 0) throw Error("inversion of zero");
    if (!exp_table_.empty()) {
        std::uint32_t k = log_table_[a];
        return exp_table_[k == 0 ? 0 : size_ - 1 - k];
    }
    return pow(a, size_ - 2);
}

enc_t Field::pow(enc_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    e %= size_ - 1;
    if (!exp_table_.empty()) {
        unsigned __int128 k = (unsigned __int128)log_table_[a] * e;
        return exp_table_[(std::uint64_t)(k % (size_ - 1))];
    }
    enc_t result = 1, base = a;
    while (e) {
        if (e & 1) result = mul_generic(result, base);
        base = mul_generic(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t Field::coeff(enc_t a, std::uint32_t i) const {
    if (i >= m_) throw Error("coefficient index out of range");
    return (std::uint32_t)((a / pow_p_[i]) % p_);
}

std::vector<std::uint32_t> Field::coeffs(enc_t a) const {
    std::vector<std::uint32_t> out(m_);
    for (std::uint32_t i = 0; i < m_; ++i) out[i] = (std::uint32_t)((a / pow_p_[i]) % p_);
    return out;
}

enc_t Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() != m_) throw Error("coefficient vector must have length m");
    enc_t out = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (c[i] >= p_) throw Error("coefficient residue out of range");
        out += (enc_t)(c[i] * pow_p_[i]);
    }
    return out;
}

enc_t Field::scalar(std::uint64_t n) const {
    if (n >= p_) throw Error("scalar out of prime-subfield range");
    return (enc_t)n;
}

enc_t Field::check_range(std::uint64_t n) const {
    if (n >= size_) throw Error("element encoding out of range");
    return (enc_t)n;
}

void Field::ensure_log_tables() const {
    if (size_ > kTableCap) return;
    std::call_once(table_once_, [this] {
        exp_table_.resize(size_ - 1);
        log_table_.assign(size_, 0);
        enc_t x = 1;
        for (std::uint64_t k = 0; k < size_ - 1; ++k) {
            exp_table_[k] = x;
            log_table_[x] = (std::uint32_t)k;
            x = mul_generic(x, alpha_);
        }
        if (x != 1) throw InternalError("alpha does not have full order");
    });
}

bool Field::has_log_tables() const { return !exp_table_.empty(); }

void Field::ensure_add_table() const {
    if (p_ == 2 || size_ > kAddTableCap) return;
    std::call_once(add_table_once_, [this] {
        std::vector<enc_t> t(size_ * size_);
        for (std::uint64_t a = 0; a < size_; ++a) {
            std::vector<std::uint32_t> da = coeffs((enc_t)a);
            for (std::uint64_t b = 0; b < size_; ++b) {
                enc_t out = 0;
                for (std::uint32_t i = 0; i < m_; ++i) {
                    std::uint32_t s = da[i] + (std::uint32_t)((b / pow_p_[i]) % p_);
                    if (s >= p_) s -= p_;
                    out += (enc_t)(s * pow_p_[i]);
                }
                t[a * size_ + b] = out;
            }
        }
        add_table_ = std::move(t);
    });
}

std::uint32_t Field::log(enc_t a) const {
    if (a == 0) throw Error("discrete log of zero");
    if (exp_table_.empty()) throw Error("log tables not built");
    return log_table_[a];
}

enc_t Field::exp(std::uint64_t k) const {
    if (exp_table_.empty()) throw Error("log tables not built");
    return exp_table_[k % (size_ - 1)];
}

std::string Field::describe() const {
    return "gf(" + std::to_string(p_) + "," + std::to_string(m_) + ")";
}

// ---------------------------------------------------------------------------

Embedding::Embedding(FieldPtr small, FieldPtr big, enc_t generator_image)
    : small_(std::move(small)), big_(std::move(big)), generator_image_(generator_image),
      ratio_(big_->degree() / small_->degree()) {
    forward_.resize(small_->size());
    backward_.reserve(small_->size());
    for (std::uint64_t a = 0; a < small_->size(); ++a) {
        enc_t image = 0, gpow = 1;
        for (std::uint32_t i = 0; i < small_->degree(); ++i) {
            std::uint32_t c = small_->coeff((enc_t)a, i);
            if (c) image = big_->add(image, big_->mul(big_->scalar(c), gpow));
            gpow = big_->mul(gpow, generator_image_);
        }
        forward_[a] = image;
        backward_.emplace(image, (enc_t)a);
    }
    if (backward_.size() != small_->size()) throw InternalError("embedding is not injective");
}

enc_t Embedding::embed(enc_t small_enc) const {
    if (small_enc >= forward_.size()) throw Error("element encoding out of range");
    return forward_[small_enc];
}

std::optional<enc_t> Embedding::pull_back(enc_t big_enc) const {
    auto it = backward_.find(big_enc);
    if (it == backward_.end()) return std::nullopt;
    return it->second;
}

Embedding embed_subfield(FieldPtr small, FieldPtr big) {
    if (small->characteristic() != big->characteristic())
        throw Error("subfield embedding requires equal characteristic");
    if (big->degree() % small->degree() != 0)
        throw Error("small degree must divide big degree");

    if (small->degree() == 1) return Embedding(std::move(small), std::move(big), 1);

    // Roots of the small modulus in the big field, deterministically the
    // smallest encoding. Desk scale: plain scan.
    const auto& mod = small->modulus();
    for (std::uint64_t x = 0; x < big->size(); ++x) {
        enc_t acc = 0, xp = 1;
        for (std::uint32_t i = 0; i < mod.size(); ++i) {
            if (mod[i]) acc = big->add(acc, big->mul(big->scalar(mod[i]), xp));
            xp = big->mul(xp, (enc_t)x);
        }
        if (acc == 0) return Embedding(std::move(small), std::move(big), (enc_t)x);
    }
    throw InternalError("small modulus has no root in the big field");
}

enc_t relative_norm(const Field& big, enc_t x, std::uint32_t s) {
    if (s == 0 || big.degree() % s != 0) throw Error("s must divide the field degree");
    const std::uint32_t m = big.degree() / s;
    std::uint64_t frob = 1;
    for (std::uint32_t i = 0; i < m; ++i) frob *= big.characteristic();
    enc_t result = 1, conj = x;
    for (std::uint32_t i = 0; i < s; ++i) {
        result = big.mul(result, conj);
        conj = big.pow(conj, frob);
    }
    return result;
}

} // namespace czsplit
