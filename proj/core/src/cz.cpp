#include "czsplit/cz.hpp"

#include <algorithm>
#include <deque>

#include "czsplit/bigint.hpp"
#include "czsplit/rng.hpp"

namespace czsplit {

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::classic: return "classic";
        case Strategy::improved: return "improved";
        case Strategy::improved_coset_restricted: return "coset";
        case Strategy::direct_degree_s: return "direct";
    }
    throw Error("unknown strategy");
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "classic") return Strategy::classic;
    if (name == "improved") return Strategy::improved;
    if (name == "coset") return Strategy::improved_coset_restricted;
    if (name == "direct") return Strategy::direct_degree_s;
    throw Error("unknown strategy: " + name);
}

std::uint32_t default_q(const Field& field) {
    return field.characteristic() == 2 ? 3 : 2;
}

SplitOutcome split_once(const Polynomial& sigma, const Polynomial& c,
                        const CosetStructure& cs, std::uint32_t s) {
    if (!sigma.field()->same_as(*cs.field())) throw Error("coset structure field mismatch");
    if (!c.field()->same_as(*sigma.field())) throw Error("field mismatch");
    if (!sigma.is_monic() || sigma.degree() < 2)
        throw Error("sigma must be monic of degree >= 2");
    if (c.is_constant()) throw Error("test polynomial must be nonconstant");
    if (c.degree() > 1 && c.degree() >= sigma.degree())
        throw Error("nonlinear test polynomial must have degree < deg sigma");

    const Field& k = *sigma.field();

    // Factor-of-c shortcut. For linear c = z + b one evaluation of sigma
    // at the root -b replaces the gcd; otherwise one gcd.
    if (c.degree() == 1 && c.is_monic()) {
        enc_t root = k.neg(c.coeff(0));
        if (eval(sigma, root) == 0) {
            Polynomial cofactor = divexact(sigma, c);
            return {SplitStatus::already_factor, {c, std::move(cofactor)}, std::nullopt};
        }
    } else {
        Polynomial g = gcd(c, sigma);
        if (g.degree() >= 1) {
            Polynomial cofactor = divexact(sigma, g);
            return {SplitStatus::already_factor, {std::move(g), std::move(cofactor)}, std::nullopt};
        }
    }

    const BigUint exponent =
        splitting_exponent(k.characteristic(), k.degree() * s, cs.q());
    Polynomial a = powmod(c, exponent, sigma);
    if (a.is_zero()) throw InternalError("a(z) = 0 with gcd(c, sigma) trivial");

    if (a.is_constant()) {
        enc_t v = a.coeff(0);
        for (std::uint32_t h = 0; h < cs.q(); ++h)
            if (cs.omega_pow(h) == v)
                return {SplitStatus::failure, {}, h};
        throw Error("a(z) is a constant outside the q-th roots of unity: "
                    "sigma violates the equal-degree precondition");
    }

    // a nonconstant: the factors of sigma distribute over the q gcds
    // gcd(a - omega^h, sigma), at least two of them nontrivially.
    std::vector<Polynomial> parts;
    Polynomial rest = sigma;
    for (std::uint32_t h = 0; h < cs.q() && rest.degree() > 0; ++h) {
        Polynomial shifted = a - Polynomial::constant(a.field(), cs.omega_pow(h));
        Polynomial g = gcd(shifted, rest);
        if (g.degree() >= 1) {
            parts.push_back(g);
            rest = divexact(rest, g);
        }
    }
    if (rest.degree() >= 1) parts.push_back(rest); // residual cofactor
    if (parts.size() < 2)
        throw Error("test polynomial produced no split: "
                    "sigma violates the equal-degree precondition");
    return {SplitStatus::split, std::move(parts), std::nullopt};
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Polynomial frobenius_conjugate(const Polynomial& f, std::uint64_t frob) {
    const Field& k = *f.field();
    std::vector<enc_t> out(f.coeffs());
    for (auto& c : out) c = k.pow(c, frob);
    return Polynomial(f.field(), std::move(out));
}

Polynomial lift_polynomial(const Embedding& emb, const Polynomial& f) {
    std::vector<enc_t> out(f.coeffs());
    for (auto& c : out) c = emb.embed(c);
    return Polynomial(emb.big(), std::move(out));
}

Polynomial pull_back_polynomial(const Embedding& emb, const Polynomial& f) {
    std::vector<enc_t> out(f.coeffs());
    for (auto& c : out) {
        auto pulled = emb.pull_back(c);
        if (!pulled) throw InternalError("factor has a coefficient outside the base field");
        c = *pulled;
    }
    return Polynomial(emb.small(), std::move(out));
}

/// Checks that sigma is squarefree with all irreducible factors of degree
/// exactly s: gcd(sigma, sigma') = 1, z^{p^{ms}} = z mod sigma, and no
/// factor degree properly divides s.
void validate_equal_degree(const Polynomial& sigma, std::uint32_t s) {
    const Field& k = *sigma.field();
    Polynomial d = derivative(sigma);
    if (d.is_zero() || gcd(sigma, d).degree() > 0)
        throw Error("sigma is not squarefree");
    std::uint64_t frob = 1;
    for (std::uint32_t i = 0; i < k.degree(); ++i) frob *= k.characteristic();
    const Polynomial z = Polynomial::monomial(sigma.field(), 1);
    Polynomial h = mod(z, sigma);
    for (std::uint32_t r = 1; r <= s; ++r) {
        h = powmod(h, frob, sigma);
        if (r < s && s % r == 0) {
            if (gcd(h - z, sigma).degree() > 0)
                throw Error("sigma has an irreducible factor of degree < s");
        }
    }
    if (!(h == mod(z, sigma)))
        throw Error("sigma has an irreducible factor of degree > s");
}

struct BetaEnumerator {
    // Candidate test polynomials for one subproblem, in order:
    // c = z, then c = z + beta over nonzero beta (encoding order for
    // seed 0, seeded permutation otherwise), then -- direct strategy
    // only -- monic degree-s polynomials.
    const Field& k;
    const CosetStructure& cs;
    Strategy strategy;
    std::uint32_t s;
    std::uint64_t seed;
    Rng rng;

    std::vector<enc_t> betas;     // nonzero shifts, in enumeration order
    std::size_t beta_pos = 0;
    bool first_done = false;      // c = z emitted
    bool restricted = false;      // coset restriction engaged
    std::uint64_t fallback_pos = 0;
    bool fallback_active = false;

    BetaEnumerator(const CosetStructure& cs_, Strategy strategy_, std::uint32_t s_,
                   std::uint64_t seed_)
        : k(*cs_.field()), cs(cs_), strategy(strategy_), s(s_), seed(seed_),
          rng(seed_) {
        betas.reserve(k.size() - 1);
        for (std::uint64_t b = 1; b < k.size(); ++b) betas.push_back((enc_t)b);
        if (seed != 0) rng.shuffle(betas);
    }

    /// After c = z fails with coset h, shifts from A_h alone still
    /// guarantee termination, so the rest can be dropped.
    void restrict_to_coset(unsigned h) {
        if (restricted) return;
        restricted = true;
        std::vector<enc_t> kept;
        kept.reserve(cs.coset_size());
        for (std::size_t i = beta_pos; i < betas.size(); ++i)
            if (cs.coset_index(betas[i]) == (int)h) kept.push_back(betas[i]);
        betas = std::move(kept);
        beta_pos = 0;
    }

    std::optional<Polynomial> next(const Polynomial& sigma) {
        if (strategy == Strategy::classic) {
            // Random nonconstant polynomial of degree < t, fresh each time.
            unsigned t = (unsigned)sigma.degree();
            unsigned d = 1 + (unsigned)rng.below(t - 1);
            return random_monic(sigma.field(), d, rng);
        }
        if (!first_done) {
            first_done = true;
            return Polynomial::monomial(sigma.field(), 1); // c = z
        }
        if (beta_pos < betas.size())
            return Polynomial::linear(sigma.field(), betas[beta_pos++]);
        if (strategy == Strategy::direct_degree_s && s >= 2) {
            // Fall back to monic degree-s test polynomials (the set contains
            // every factor of sigma, so exhaustion cannot happen).
            fallback_active = true;
            std::uint64_t total = 1;
            for (std::uint32_t i = 0; i < s; ++i) total *= k.size();
            while (fallback_pos < total) {
                std::uint64_t v = fallback_pos++;
                std::vector<enc_t> coeffs(s + 1, 0);
                for (std::uint32_t i = 0; i < s; ++i) {
                    coeffs[i] = (enc_t)(v % k.size());
                    v /= k.size();
                }
                coeffs[s] = 1;
                return Polynomial(sigma.field(), std::move(coeffs));
            }
        }
        return std::nullopt;
    }
};

EdfResult edf_engine_single_field(const SplitProblem& problem, std::uint64_t seed) {
    const Polynomial& sigma0 = problem.sigma;
    const FieldPtr field = sigma0.field();
    const std::uint32_t q = problem.q ? problem.q : default_q(*field);
    const std::uint32_t s = problem.s;

    CosetStructure cs = CosetStructure::make(field, q);
    cs.ensure_table();
    const std::uint64_t attempt_cap = cs.coset_size(); // for s = 1 splits

    EdfResult result;
    std::deque<Polynomial> queue;
    queue.push_back(sigma0);

    std::uint64_t subproblem_index = 0;
    while (!queue.empty()) {
        Polynomial sigma = std::move(queue.front());
        queue.pop_front();
        if ((std::uint32_t)sigma.degree() == s) {
            result.factors.push_back(std::move(sigma));
            continue;
        }

        SplitRecord record{sigma, s, {}};
        std::uint64_t sub_seed = seed == 0 ? 0 : mix_seed(seed, subproblem_index);
        ++subproblem_index;
        BetaEnumerator candidates(cs, problem.strategy, s, sub_seed);

        bool done = false;
        while (!done) {
            auto c = candidates.next(sigma);
            if (!c) throw Error("test polynomial pool exhausted without separating sigma");
            SplitOutcome out = split_once(sigma, *c, cs, s);
            record.attempts.push_back({*c, out.status, out.observed_coset});

            if (out.status == SplitStatus::failure) {
                if (problem.strategy == Strategy::improved_coset_restricted &&
                    record.attempts.size() == 1) {
                    candidates.restrict_to_coset(*out.observed_coset);
                    result.trace.coset_restricted = true;
                }
                // A split is guaranteed within (p^m-1)/q linear attempts,
                // the last of which succeeds; that many failures are already
                // impossible.
                if (s == 1 && problem.strategy != Strategy::classic &&
                    record.attempts.size() >= attempt_cap)
                    throw InternalError("attempt count exceeded the coset-size cap");
                if (problem.strategy == Strategy::classic &&
                    record.attempts.size() > 1'000'000)
                    throw InternalError("classic splitting made no progress");
                continue;
            }
            for (auto& part : out.parts) queue.push_back(std::move(part));
            done = true;
        }
        result.trace.records.push_back(std::move(record));
    }

    std::sort(result.factors.begin(), result.factors.end(), poly_less);
    return result;
}

EdfResult edf_engine(const SplitProblem& problem, std::uint64_t seed) {
    const Polynomial& sigma = problem.sigma;
    const FieldPtr field = sigma.field();
    if (!sigma.is_monic()) throw Error("sigma must be monic");
    if (problem.s == 0 || sigma.degree() < 1 || sigma.degree() % problem.s != 0)
        throw Error("s must divide deg sigma");
    if (sigma.coeff(0) == 0) throw Error("the trivial factor z must not divide sigma");
    const std::uint32_t q = problem.q ? problem.q : default_q(*field);
    if (problem.validate) validate_equal_degree(sigma, problem.s);

    if ((field->group_order()) % q == 0)
        return edf_engine_single_field(problem, seed);

    // q does not divide p^m - 1. The prescribed case is the cubic splitting
    // of characteristic 2 with odd m: compute in the quadratic extension and
    // recombine Frobenius-conjugate factors.
    if (field->characteristic() != 2 || q != 3)
        throw Error("q does not divide p^m - 1");

    FieldPtr big = Field::make(2, 2 * field->degree());
    Embedding emb = embed_subfield(field, big);
    SplitProblem lifted{lift_polynomial(emb, sigma),
                        problem.s % 2 == 0 ? problem.s / 2 : problem.s, q,
                        problem.strategy, false};
    EdfResult inner = edf_engine(lifted, seed);

    std::uint64_t frob = 1;
    for (std::uint32_t i = 0; i < field->degree(); ++i) frob *= 2;

    EdfResult result;
    result.trace = std::move(inner.trace);
    std::vector<bool> used(inner.factors.size(), false);
    for (std::size_t i = 0; i < inner.factors.size(); ++i) {
        if (used[i]) continue;
        Polynomial conj = frobenius_conjugate(inner.factors[i], frob);
        if (conj == inner.factors[i]) {
            result.factors.push_back(pull_back_polynomial(emb, inner.factors[i]));
            continue;
        }
        bool paired = false;
        for (std::size_t j = i + 1; j < inner.factors.size(); ++j) {
            if (!used[j] && inner.factors[j] == conj) {
                used[j] = true;
                result.factors.push_back(
                    pull_back_polynomial(emb, inner.factors[i] * inner.factors[j]));
                paired = true;
                break;
            }
        }
        if (!paired) throw InternalError("Frobenius conjugate of a lifted factor is missing");
    }
    std::sort(result.factors.begin(), result.factors.end(), poly_less);
    return result;
}

} // namespace

EdfResult equal_degree_factor(const SplitProblem& problem, std::uint64_t seed) {
    return edf_engine(problem, seed);
}

EdfResult edf_improved(const SplitProblem& problem, std::uint64_t seed) {
    SplitProblem p = problem;
    if (p.strategy != Strategy::improved_coset_restricted) p.strategy = Strategy::improved;
    return edf_engine(p, seed);
}

EdfResult edf_classic(const SplitProblem& problem, std::uint64_t seed) {
    SplitProblem p = problem;
    p.strategy = Strategy::classic;
    return edf_engine(p, seed);
}

EdfResult edf_direct_degree_s(const SplitProblem& problem, std::uint64_t seed) {
    SplitProblem p = problem;
    p.strategy = Strategy::direct_degree_s;
    return edf_engine(p, seed);
}

EdfResult qth_split(const SplitProblem& problem, std::uint64_t seed) {
    if (problem.q == 0) throw Error("qth_split requires an explicit q");
    return edf_engine(problem, seed);
}

namespace {

/// Inverse Frobenius on a coefficient: c^{p^{m-1}} is the unique p-th root.
enc_t pth_root_coeff(const Field& k, enc_t c) {
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i + 1 < k.degree(); ++i) e *= k.characteristic();
    return k.pow(c, e);
}

/// f = g(z^p) -> g, coefficient-wise p-th root.
Polynomial pth_root(const Polynomial& f) {
    const Field& k = *f.field();
    const std::uint32_t p = k.characteristic();
    std::vector<enc_t> out(f.degree() / (int)p + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        enc_t c = f.coeffs()[i];
        if (c == 0) continue;
        if (i % p != 0) throw InternalError("polynomial with zero derivative is not in z^p");
        out[i / p] = pth_root_coeff(k, c);
    }
    return Polynomial(f.field(), std::move(out));
}

void squarefree_into(const Polynomial& f,
                     std::vector<std::pair<Polynomial, std::uint32_t>>& out,
                     std::uint32_t multiplier) {
    const std::uint32_t p = f.field()->characteristic();
    Polynomial fp = derivative(f);

    if (fp.is_zero()) {
        squarefree_into(pth_root(f), out, multiplier * p);
        return;
    }

    Polynomial c = gcd(f, fp);
    Polynomial w = divexact(f, c).monic();
    std::uint32_t i = 1;
    while (w.degree() > 0) {
        Polynomial y = gcd(w, c);
        Polynomial fac = divexact(w, y).monic();
        if (fac.degree() > 0) out.emplace_back(fac, i * multiplier);
        w = std::move(y);
        c = divexact(c, w).monic();
        ++i;
    }
    // What is left of c collects the factors whose multiplicity is a
    // multiple of p; they reappear through the p-th root.
    if (c.degree() > 0) squarefree_into(pth_root(c), out, multiplier * p);
}

} // namespace

std::vector<std::pair<Polynomial, std::uint32_t>> squarefree_decomposition(const Polynomial& f) {
    if (f.is_constant()) throw Error("squarefree decomposition of a constant");
    std::vector<std::pair<Polynomial, std::uint32_t>> out;
    squarefree_into(f.monic(), out, 1);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return poly_less(a.first, b.first);
    });
    return out;
}

std::vector<std::pair<Polynomial, std::uint32_t>> distinct_degree(const Polynomial& f) {
    if (f.is_constant() || !f.is_monic()) throw Error("input must be monic and nonconstant");
    Polynomial d = derivative(f);
    if (d.is_zero() || gcd(f, d).degree() > 0) throw Error("input is not squarefree");

    const Field& k = *f.field();
    std::uint64_t frob = 1;
    for (std::uint32_t i = 0; i < k.degree(); ++i) frob *= k.characteristic();

    std::vector<std::pair<Polynomial, std::uint32_t>> out;
    Polynomial v = f;
    const Polynomial z = Polynomial::monomial(f.field(), 1);
    Polynomial h = mod(z, v);
    std::uint32_t r = 0;
    while (v.degree() > 0) {
        ++r;
        if ((std::uint32_t)v.degree() < 2 * r) {
            // No room for two factors of degree >= r: v is irreducible.
            out.emplace_back(v, (std::uint32_t)v.degree());
            break;
        }
        h = powmod(h, frob, v);
        Polynomial g = gcd(h - mod(z, v), v);
        if (g.degree() > 0) {
            out.emplace_back(g, r);
            v = divexact(v, g).monic();
            h = mod(h, v);
        }
    }
    return out;
}

Factorization factor(const Polynomial& f, std::uint64_t seed, Strategy strategy,
                     std::uint32_t q) {
    if (f.is_constant()) throw Error("cannot factor a constant polynomial");

    Factorization result;
    result.strategy = strategy;
    result.seed = seed;
    result.leading = f.leading();

    Polynomial g = f.monic();

    // Strip the trivial factor z.
    std::uint32_t z_mult = 0;
    while ((std::uint32_t)z_mult < g.coeffs().size() && g.coeffs()[z_mult] == 0) ++z_mult;
    if (z_mult > 0) {
        std::vector<enc_t> shifted(g.coeffs().begin() + z_mult, g.coeffs().end());
        g = Polynomial(g.field(), std::move(shifted));
        result.factors.emplace_back(Polynomial::monomial(f.field(), 1), z_mult);
    }

    std::uint64_t bucket_index = 0;
    if (g.degree() > 0) {
        for (const auto& [part, mult] : squarefree_decomposition(g)) {
            for (const auto& [bucket, r] : distinct_degree(part)) {
                if ((std::uint32_t)bucket.degree() == r) {
                    result.factors.emplace_back(bucket, mult);
                    continue;
                }
                Strategy bucket_strategy = strategy;
                if (r > 1 && strategy != Strategy::classic)
                    bucket_strategy = Strategy::direct_degree_s;
                SplitProblem problem{bucket, r, q, bucket_strategy, false};
                std::uint64_t bucket_seed =
                    (seed == 0 && strategy != Strategy::classic)
                        ? 0
                        : mix_seed(seed, 0xb0c4e7 + bucket_index);
                EdfResult split = edf_engine(problem, bucket_seed);
                ++bucket_index;
                for (auto& fac : split.factors) result.factors.emplace_back(std::move(fac), mult);
                for (auto& rec : split.trace.records)
                    result.trace.records.push_back(std::move(rec));
                result.trace.coset_restricted |= split.trace.coset_restricted;
            }
        }
    }

    std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree() || !(a.first == b.first))
            return poly_less(a.first, b.first);
        return a.second < b.second;
    });
    return result;
}

} // namespace czsplit
