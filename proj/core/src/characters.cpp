#include "czsplit/characters.hpp"

#include <sstream>

namespace czsplit {

std::string Eisenstein::to_string() const {
    std::ostringstream os;
    os << a;
    if (b >= 0)
        os << '+' << b << "*w";
    else
        os << b << "*w";
    return os.str();
}

CosetStructure CosetStructure::make(FieldPtr field, std::uint32_t q) {
    if (q < 2) throw Error("q must be a prime >= 2");
    for (std::uint32_t d = 2; d * d <= q; ++d)
        if (q % d == 0) throw Error("q must be prime");
    if ((field->size() - 1) % q != 0) throw Error("q does not divide p^m - 1");

    CosetStructure cs;
    cs.field_ = std::move(field);
    cs.q_ = q;
    cs.coset_size_ = (cs.field_->size() - 1) / q;
    enc_t omega = cs.field_->pow(cs.field_->alpha(), cs.coset_size_);
    cs.omega_pow_.resize(q);
    enc_t w = 1;
    for (std::uint32_t h = 0; h < q; ++h) {
        cs.omega_pow_[h] = w;
        w = cs.field_->mul(w, omega);
    }
    if (w != 1 || omega == 1) throw InternalError("omega is not a primitive q-th root of unity");
    cs.table_once_ = std::make_shared<std::once_flag>();
    cs.table_ = std::make_shared<std::vector<std::int8_t>>();
    return cs;
}

int CosetStructure::coset_index(enc_t x) const {
    if (x == 0) return -1;
    if (!table_->empty()) return (*table_)[x];
    enc_t y = field_->pow(x, coset_size_);
    for (std::uint32_t h = 0; h < q_; ++h)
        if (omega_pow_[h] == y) return (int)h;
    throw InternalError("x^((p^m-1)/q) is not a power of omega");
}

void CosetStructure::ensure_table() const {
    if (field_->size() > (std::uint64_t{1} << 16)) return;
    field_->ensure_add_table(); // the sweeps shift roots for every beta
    std::call_once(*table_once_, [this] {
        std::vector<std::int8_t> t(field_->size(), -1);
        enc_t x = 1;
        const std::uint64_t order = field_->size() - 1;
        for (std::uint64_t k = 0; k < order; ++k) {
            t[x] = (std::int8_t)(k % q_);
            x = field_->mul(x, field_->alpha());
        }
        *table_ = std::move(t);
    });
}

Eisenstein chi3(const CosetStructure& cs, enc_t x) {
    if (cs.q() != 3) throw Error("chi3 requires a q = 3 coset structure");
    int h = cs.coset_index(x);
    if (h < 0) return {0, 0}; // chi_3(0) = 0 by definition
    return Eisenstein::zeta_pow((unsigned)h);
}

int chi2(const CosetStructure& cs, enc_t x) {
    if (cs.q() != 2) throw Error("chi2 requires a q = 2 coset structure");
    int h = cs.coset_index(x);
    if (h < 0) return 0;
    return h == 0 ? 1 : -1;
}

Eisenstein chi(const CosetStructure& cs, enc_t x) {
    if (cs.q() == 3) return chi3(cs, x);
    if (cs.q() == 2) return {chi2(cs, x), 0};
    throw Error("character values carry Eisenstein form only for q in {2, 3}");
}

Eisenstein total_sum(const CosetStructure& cs) {
    cs.ensure_table();
    Eisenstein sum{0, 0};
    const std::uint64_t size = cs.field()->size();
    for (std::uint64_t x = 1; x < size; ++x) sum = sum + chi(cs, (enc_t)x);
    return sum;
}

Eisenstein pair_sum(const CosetStructure& cs, enc_t beta) {
    if (beta == 0) throw Error("pair_sum requires beta != 0");
    cs.ensure_table();
    const Field& k = *cs.field();
    Eisenstein sum{0, 0};
    for (std::uint64_t x = 0; x < k.size(); ++x) {
        Eisenstein a = chi(cs, (enc_t)x);
        if (a == Eisenstein{0, 0}) continue;
        Eisenstein b = chi(cs, k.add((enc_t)x, beta));
        sum = sum + a * b.conj();
    }
    return sum;
}

Eisenstein gauss_sum_cubic(const CosetStructure& cs) {
    if (cs.field()->characteristic() != 2) throw Error("gauss_sum_cubic requires characteristic 2");
    if (cs.field()->degree() % 2 != 0)
        throw Error("gauss_sum_cubic requires even m (3 divides 2^m - 1)");
    if (cs.q() != 3) throw Error("gauss_sum_cubic requires q = 3");
    cs.ensure_table();
    const Field& k = *cs.field();
    Eisenstein sum{0, 0};
    for (std::uint64_t x = 0; x < k.size(); ++x)
        sum = sum + chi3(cs, (enc_t)x) * chi3(cs, k.add((enc_t)x, 1));
    return sum;
}

int indicator(const CosetStructure& cs, enc_t x, unsigned h) {
    if (x == 0) throw Error("indicator is undefined at 0");
    if (h >= cs.q()) throw Error("coset index out of range");
    return cs.coset_index(x) == (int)h ? 1 : 0;
}

unsigned lifted_character_exponent(const Embedding& emb, const CosetStructure& small_cs,
                                   const CosetStructure& big_cs) {
    if (small_cs.q() != big_cs.q()) throw Error("coset structures must share q");
    const std::uint32_t q = small_cs.q();
    const std::uint32_t s = emb.degree_ratio();

    // chi'(alpha') = zeta. chi(N(alpha')) = zeta^k with k below; then
    // chi' = (chi o N)^e for e = k^{-1} mod q (k is coprime to q because
    // the norm of a generator generates the small field).
    enc_t n = relative_norm(*emb.big(), emb.big()->alpha(), s);
    auto pulled = emb.pull_back(n);
    if (!pulled) throw InternalError("norm left the embedded subfield");
    int k = small_cs.coset_index(*pulled);
    // k = 0 would make chi o N trivial; impossible since the norm of a
    // generator generates the small field's multiplicative group.
    if (k <= 0) throw InternalError("norm of a generator landed in the trivial coset");
    for (unsigned e = 1; e < q; ++e)
        if ((e * (unsigned)k) % q == 1) return e;
    throw InternalError("coset index of the norm is not invertible mod q");
}

bool lifted_character_agrees(const Embedding& emb, const CosetStructure& small_cs,
                             const CosetStructure& big_cs, unsigned exponent) {
    const std::uint32_t q = small_cs.q();
    const std::uint32_t s = emb.degree_ratio();
    small_cs.ensure_table();
    big_cs.ensure_table();
    for (std::uint64_t x = 0; x < emb.big()->size(); ++x) {
        enc_t n = relative_norm(*emb.big(), (enc_t)x, s);
        auto pulled = emb.pull_back(n);
        if (!pulled) return false;
        int hb = big_cs.coset_index((enc_t)x);
        int hs = small_cs.coset_index(*pulled);
        if (x == 0) {
            if (hb != -1 || hs != -1) return false;
            continue;
        }
        if (hb < 0 || hs < 0) return false;
        if ((unsigned)hb != (exponent * (unsigned)hs) % q) return false;
    }
    return true;
}

} // namespace czsplit
