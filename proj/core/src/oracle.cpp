#include "czsplit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "czsplit/parallel.hpp"
#include "czsplit/poly.hpp"
#include "czsplit/rng.hpp"

namespace czsplit {

bool BoundValue::dominates(std::uint64_t count) const {
    if (exact) return (long long)count * den <= num;
    return (double)count <= approx;
}

std::string BoundValue::to_string() const {
    std::ostringstream os;
    if (exact) {
        if (den == 1)
            os << num;
        else
            os << num << '/' << den;
    } else {
        os << approx << " (rounded up)";
    }
    return os.str();
}

namespace {

void check_roots(const CosetStructure& cs, const std::vector<enc_t>& roots,
                 std::uint32_t min_t = 2) {
    if (roots.size() < min_t) throw Error("need at least t >= 2 roots");
    for (enc_t r : roots) cs.field()->check_range(r);
    std::set<enc_t> uniq(roots.begin(), roots.end());
    if (uniq.size() != roots.size()) throw Error("roots must be distinct");
}

/// Exact integer square root of a perfect square, if it is one.
std::optional<long long> exact_sqrt(std::uint64_t n) {
    std::uint64_t r = (std::uint64_t)std::llround(std::sqrt((double)n));
    for (std::uint64_t c = r > 2 ? r - 2 : 0; c <= r + 2; ++c)
        if (c * c == n) return (long long)c;
    return std::nullopt;
}

long long binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

std::uint64_t brute_count(const CosetStructure& cs, const std::vector<enc_t>& roots) {
    check_roots(cs, roots);
    cs.ensure_table();
    const Field& k = *cs.field();
    std::uint64_t count = 0;
    for (std::uint64_t beta = 0; beta < k.size(); ++beta) {
        int common = -2;
        bool fails = true;
        for (enc_t r : roots) {
            enc_t x = k.add(r, (enc_t)beta);
            if (x == 0) {
                fails = false;
                break;
            }
            int h = cs.coset_index(x);
            if (common == -2)
                common = h;
            else if (common != h) {
                fails = false;
                break;
            }
        }
        if (fails) ++count;
    }
    return count;
}

namespace {

long long formula_n2_t3(const CosetStructure& cs, const std::vector<enc_t>& roots) {
    const Field& k = *cs.field();
    if (k.characteristic() != 2 || k.degree() % 2 != 0)
        throw Error("the cubic t=3 closed form needs characteristic 2, even m");
    const std::uint32_t m = k.degree();

    // y_i are the pairwise sums of the roots.
    enc_t y1 = k.add(roots[1], roots[2]);
    enc_t y2 = k.add(roots[0], roots[2]);
    enc_t y3 = k.add(roots[1], roots[0]);

    long long gauss = -1;
    for (std::uint32_t i = 0; i < m / 2; ++i) gauss *= -2; // (-2)^{m/2}, sign included below

    Eisenstein y123 = chi3(cs, k.mul(k.mul(y1, y2), y3));
    Eisenstein gauss_term = y123 + y123.conj();

    Eisenstein six{0, 0};
    const enc_t pairs[6][2] = {{y1, y2}, {y2, y1}, {y2, y3}, {y3, y2}, {y3, y1}, {y1, y3}};
    for (auto& pr : pairs) six = six + chi3(cs, k.mul(pr[0], k.mul(pr[1], pr[1])));

    if (gauss_term.b != 0 || six.b != 0)
        throw InternalError("t=3 character terms are not rational integers");
    long long num = ((long long)1 << m) - 11 - (-gauss) * gauss_term.a - six.a;
    if (num % 9 != 0) throw InternalError("t=3 closed form is not divisible by 9");
    return num / 9;
}

long long formula_np_t3(const CosetStructure& cs, const std::vector<enc_t>& roots) {
    const Field& k = *cs.field();
    long long t = (long long)chi2(cs, k.sub(roots[0], roots[2])) * chi2(cs, k.sub(roots[1], roots[2])) +
                  (long long)chi2(cs, k.sub(roots[0], roots[1])) * chi2(cs, k.sub(roots[2], roots[1])) +
                  (long long)chi2(cs, k.sub(roots[2], roots[0])) * chi2(cs, k.sub(roots[1], roots[0]));
    long long num = (long long)k.size() - 6 - t;
    if (num % 4 != 0) throw InternalError("t=3 closed form is not divisible by 4");
    return num / 4;
}

} // namespace

long long formula_count(const CosetStructure& cs, const std::vector<enc_t>& roots) {
    check_roots(cs, roots);
    cs.ensure_table();
    const std::uint64_t size = cs.field()->size();
    if (cs.q() == 3) {
        if (roots.size() == 2) {
            if ((size - 4) % 3 != 0) throw InternalError("2^m - 4 not divisible by 3");
            return (long long)(size - 4) / 3;
        }
        if (roots.size() == 3) return formula_n2_t3(cs, roots);
    } else if (cs.q() == 2) {
        if (roots.size() == 2) {
            if ((size - 3) % 2 != 0) throw InternalError("p^m - 3 not divisible by 2");
            return (long long)(size - 3) / 2;
        }
        if (roots.size() == 3) return formula_np_t3(cs, roots);
    }
    throw Error("closed forms exist for t in {2, 3} with q in {2, 3} only");
}

std::optional<long long> formula_one_plus_max(const CosetStructure& cs, std::uint32_t t) {
    const Field& k = *cs.field();
    const long long size = (long long)k.size();
    if (cs.q() == 3 && t == 2) return (size - 1) / 3;
    if (cs.q() == 2 && t == 2) return (size - 1) / 2;
    if (cs.q() == 3 && t == 3 && k.characteristic() == 2 && k.degree() % 2 == 0) {
        const std::uint32_t half = k.degree() / 2;
        long long root = 1;
        for (std::uint32_t i = 0; i < half; ++i) root *= 2; // 2^{m/2}
        if (half % 2 == 0) return (size + root - 2) / 9;
        return (size + 2 * root + 1) / 9;
    }
    if (cs.q() == 2 && t == 3) {
        const std::uint32_t p = k.characteristic();
        if (p % 4 == 1) return (size - 1) / 4;
        if (k.degree() % 2 == 1) return (size + 1) / 4;
        return (size - 1) / 4;
    }
    return std::nullopt;
}

namespace {

struct SweepBest {
    std::uint64_t max = 0;
    std::vector<enc_t> witness;
    std::uint64_t order = UINT64_MAX; // tie-break: earliest in enumeration order
};

void consider(SweepBest& best, std::uint64_t count, const std::vector<enc_t>& tuple,
              std::uint64_t order) {
    if (count > best.max || (count == best.max && order < best.order)) {
        best.max = count;
        best.witness = tuple;
        best.order = order;
    }
}

/// Count of failing shifts using the precomputed coset table directly.
std::uint64_t fast_count(const Field& k, const std::vector<std::int8_t>& table,
                         const std::vector<enc_t>& roots) {
    std::uint64_t count = 0;
    const std::uint64_t size = k.size();
    if (k.characteristic() == 2) {
        for (std::uint64_t beta = 0; beta < size; ++beta) {
            int common = -2;
            for (enc_t r : roots) {
                enc_t x = r ^ (enc_t)beta;
                if (x == 0) {
                    common = -3;
                    break;
                }
                int h = table[x];
                if (common == -2)
                    common = h;
                else if (common != h) {
                    common = -3;
                    break;
                }
            }
            if (common >= 0) ++count;
        }
    } else {
        for (std::uint64_t beta = 0; beta < size; ++beta) {
            int common = -2;
            for (enc_t r : roots) {
                enc_t x = k.add(r, (enc_t)beta);
                if (x == 0) {
                    common = -3;
                    break;
                }
                int h = table[x];
                if (common == -2)
                    common = h;
                else if (common != h) {
                    common = -3;
                    break;
                }
            }
            if (common >= 0) ++count;
        }
    }
    return count;
}

} // namespace

MaxReport max_count(const CosetStructure& cs, std::uint32_t t, std::uint64_t budget,
                    std::uint64_t seed, unsigned threads) {
    if (t < 2) throw Error("need t >= 2");
    cs.ensure_table();
    if (!cs.has_table()) throw Error("field too large for the sweep table");
    const Field& k = *cs.field();
    const std::uint64_t size = k.size();
    const auto& table = cs.table();

    MaxReport report;
    report.field = k.describe();
    report.t_or_r = t;

    // Exhaustive when C(size, t) * size fits the budget.
    double tuples_est = 1.0;
    for (std::uint32_t i = 0; i < t; ++i) tuples_est *= (double)(size - i) / (i + 1);
    const bool exhaustive = tuples_est * (double)size <= (double)budget;
    report.exhaustive = exhaustive;

    if (exhaustive) {
        const unsigned nchunks = resolve_threads(threads);
        std::vector<SweepBest> partial(nchunks);
        std::vector<std::uint64_t> counts(nchunks, 0);
        parallel_chunks(size, threads, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
            std::vector<enc_t> tuple(t);
            std::vector<std::uint64_t> idx(t);
            // Ascending tuples with first element in [begin, end); standard
            // next-combination stepping on the tail.
            for (std::uint64_t first = begin; first < end; ++first) {
                if (first + t > size) break;
                for (std::uint32_t i = 0; i < t; ++i) idx[i] = first + i;
                while (true) {
                    for (std::uint32_t i = 0; i < t; ++i) tuple[i] = (enc_t)idx[i];
                    consider(partial[chunk], fast_count(k, table, tuple), tuple, first);
                    ++counts[chunk];
                    std::uint32_t pos = t - 1;
                    while (pos >= 1 && idx[pos] == size - 1 - (t - 1 - pos)) --pos;
                    if (pos < 1) break;
                    ++idx[pos];
                    for (std::uint32_t j = pos + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
                }
            }
        });
        SweepBest best;
        std::uint64_t total = 0;
        for (unsigned i = 0; i < nchunks; ++i) {
            total += counts[i];
            if (!partial[i].witness.empty())
                consider(best, partial[i].max, partial[i].witness, partial[i].order);
        }
        report.max_count = best.max;
        report.witness = best.witness;
        report.samples = total;
        return report;
    }

    // Sampled: deterministic tuples drawn up front, swept in parallel.
    std::uint64_t samples = budget / (size * t);
    if (samples == 0) samples = 1;
    Rng rng(seed == 0 ? 0x5eed : seed);
    std::vector<std::vector<enc_t>> tuples(samples);
    for (auto& tuple : tuples) {
        std::set<enc_t> seen;
        while (seen.size() < t) seen.insert((enc_t)rng.below(size));
        tuple.assign(seen.begin(), seen.end());
    }
    std::vector<SweepBest> partial(resolve_threads(threads));
    parallel_chunks(samples, threads, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i)
            consider(partial[chunk], fast_count(k, table, tuples[i]), tuples[i], i);
    });
    SweepBest best;
    for (auto& p : partial)
        if (!p.witness.empty()) consider(best, p.max, p.witness, p.order);
    report.max_count = best.max;
    report.witness = best.witness;
    report.samples = samples;
    return report;
}

long long surviving_term_count(unsigned j) {
    if (j < 2) throw Error("a_j is defined for j >= 2");
    if (j > 62) throw Error("a_j overflows 64 bits beyond j = 62");
    const unsigned e = (2 * j) % 3;

    long long direct = 0;
    for (unsigned n2 = e; n2 <= j; n2 += 3) direct += binomial(j, n2);

    // Closed form (1/3) sum_h zeta^{-h e} (1 + zeta^h)^j, exact in Z[zeta].
    Eisenstein closed{0, 0};
    for (unsigned h = 0; h < 3; ++h) {
        Eisenstein base = Eisenstein{1, 0} + Eisenstein::zeta_pow(h);
        Eisenstein pw{1, 0};
        for (unsigned i = 0; i < j; ++i) pw = pw * base;
        closed = closed + Eisenstein::zeta_pow((3 - (h * e) % 3) % 3) * pw;
    }
    if (closed.b != 0 || closed.a % 3 != 0)
        throw InternalError("a_j closed form is not a rational integer multiple of 3");
    if (closed.a / 3 != direct)
        throw InternalError("a_j binomial and closed forms disagree");
    return direct;
}

long long surviving_term_weighted_sum(unsigned r) {
    if (r < 2 || r > 20) throw Error("r must lie in [2, 20]");
    long long sum = 0;
    for (unsigned j = 2; j <= r; ++j) sum += surviving_term_count(j) * (long long)(j - 1) * binomial(r, j);
    return sum;
}

long long surviving_term_weighted_sum_closed(unsigned r) {
    if (r < 2 || r > 20) throw Error("r must lie in [2, 20]");
    long long pw = 1; // 3^{r-2}
    for (unsigned i = 0; i + 2 < r; ++i) pw *= 3;
    return 1 + pw * (2 * (long long)r - 3);
}

BoundValue bound_count(const CosetStructure& cs, std::uint32_t r) {
    if (r < 2 || r > 20) throw Error("r must lie in [2, 20]");
    const Field& k = *cs.field();
    const long long size = (long long)k.size();
    BoundValue out;

    if (cs.q() == 3) {
        if (k.characteristic() != 2) throw Error("the cubic bound is stated for characteristic 2");
        long long den = 1;
        for (std::uint32_t i = 0; i + 1 < r; ++i) den *= 3;
        long long coeff = (den / 3) * (2 * (long long)r - 3); // 3^{r-2}(2r-3)
        auto root = exact_sqrt((std::uint64_t)size);
        if (root) {
            out.exact = true;
            out.num = size + *root - (long long)r + coeff * *root;
            out.den = den;
            out.approx = (double)out.num / (double)out.den;
        } else {
            out.exact = false;
            double s = std::nextafter(std::sqrt((double)size), HUGE_VAL);
            out.approx = std::nextafter((size + s - (double)r + (double)coeff * s) / (double)den,
                                        HUGE_VAL);
        }
        return out;
    }
    if (cs.q() == 2) {
        long long den = 1;
        for (std::uint32_t i = 0; i + 1 < r; ++i) den *= 2;
        long long coeff = den * ((long long)r - 2) + 1; // 2^{r-1}(r-2) + 1
        auto root = exact_sqrt((std::uint64_t)size);
        if (root) {
            out.exact = true;
            out.num = size - (long long)r + coeff * *root;
            out.den = den;
            out.approx = (double)out.num / (double)out.den;
        } else {
            out.exact = false;
            double s = std::nextafter(std::sqrt((double)size), HUGE_VAL);
            out.approx =
                std::nextafter((size - (double)r + (double)coeff * s) / (double)den, HUGE_VAL);
        }
        return out;
    }
    throw Error("bounds are stated for q in {2, 3}");
}

SumRepMax brute_sum_rep_max(const CosetStructure& cs) {
    cs.ensure_table();
    const Field& k = *cs.field();
    const std::uint32_t q = cs.q();
    SumRepMax best;
    for (std::uint64_t beta = 1; beta < k.size(); ++beta) {
        std::vector<std::uint64_t> counts(q * q, 0);
        for (std::uint64_t z = 1; z < k.size(); ++z) {
            if (z == beta) continue;
            int hj = cs.coset_index((enc_t)z);
            int hi = cs.coset_index(k.sub((enc_t)beta, (enc_t)z));
            counts[(std::size_t)hj * q + hi]++;
        }
        for (std::uint32_t j = 0; j < q; ++j)
            for (std::uint32_t i = 0; i < q; ++i)
                if (counts[(std::size_t)j * q + i] > best.max) {
                    best.max = counts[(std::size_t)j * q + i];
                    best.beta = (enc_t)beta;
                    best.coset_j = j;
                    best.coset_i = i;
                }
    }
    // Witness roots for the maximizing (beta, j, i).
    for (std::uint64_t z = 1; z < k.size(); ++z) {
        if (z == best.beta) continue;
        if (cs.coset_index((enc_t)z) == (int)best.coset_j &&
            cs.coset_index(k.sub(best.beta, (enc_t)z)) == (int)best.coset_i)
            best.witness_roots.push_back((enc_t)z);
    }
    return best;
}

long long formula_sum_rep_max(const CosetStructure& cs) {
    const Field& k = *cs.field();
    const long long size = (long long)k.size();
    if (cs.q() == 3) {
        if (k.characteristic() != 2 || k.degree() % 2 != 0)
            throw Error("the cubic M formula needs characteristic 2, even m");
        const std::uint32_t half = k.degree() / 2;
        long long root = 1;
        for (std::uint32_t i = 0; i < half; ++i) root *= 2;
        return half % 2 == 0 ? (size + root - 2) / 9 : (size + 2 * root + 1) / 9;
    }
    if (cs.q() == 2) {
        const std::uint32_t p = k.characteristic();
        if (p % 4 == 1) return (size - 1) / 4;
        if (k.degree() % 2 == 1) return (size + 1) / 4;
        return (size - 1) / 4;
    }
    throw Error("M formulas are stated for q in {2, 3}");
}

long long min_degree_for_attempts(unsigned n, const CosetStructure& cs) {
    if (n == 1) return (long long)cs.coset_size() + 1;
    if (n == 2) return 1 + formula_sum_rep_max(cs);
    throw Error("t0 is defined for n in {1, 2}");
}

SeparationReport brute_degree_s_separation(FieldPtr small, std::uint32_t s, unsigned threads) {
    if (s < 2) throw Error("the degree-s analysis needs s >= 2");
    const std::uint32_t q = default_q(*small);
    FieldPtr big = Field::make(small->characteristic(), small->degree() * s);
    Embedding emb = embed_subfield(small, big);
    CosetStructure cs_small = CosetStructure::make(small, q);
    CosetStructure cs_big = CosetStructure::make(big, q);
    cs_small.ensure_table();
    cs_big.ensure_table();

    SeparationReport report;
    report.lift_exponent = lifted_character_exponent(emb, cs_small, cs_big);
    report.lift_agrees = lifted_character_agrees(emb, cs_small, cs_big, report.lift_exponent);

    // Coset (under the small character) of the norm of every big element:
    // the second, norm-composed route of the coincidence count.
    std::vector<std::int8_t> norm_coset(big->size(), -1);
    for (std::uint64_t x = 1; x < big->size(); ++x) {
        enc_t n = relative_norm(*big, (enc_t)x, s);
        auto pulled = emb.pull_back(n);
        if (!pulled) throw InternalError("norm left the embedded subfield");
        norm_coset[x] = (std::int8_t)cs_small.coset_index(*pulled);
    }

    // Monic irreducible degree-s polynomials over the small field and their
    // roots in the big field.
    std::vector<std::vector<enc_t>> roots_of;
    std::uint64_t total_polys = 1;
    for (std::uint32_t i = 0; i < s; ++i) total_polys *= small->size();
    for (std::uint64_t v = 0; v < total_polys; ++v) {
        std::vector<enc_t> coeffs(s + 1, 0);
        std::uint64_t w = v;
        for (std::uint32_t i = 0; i < s; ++i) {
            coeffs[i] = (enc_t)(w % small->size());
            w /= small->size();
        }
        coeffs[s] = 1;
        Polynomial poly(small, std::move(coeffs));
        if (!is_irreducible(poly)) continue;
        std::vector<enc_t> lifted(poly.coeffs());
        for (auto& c : lifted) c = emb.embed(c);
        Polynomial big_poly(big, std::move(lifted));
        std::vector<enc_t> roots;
        for (std::uint64_t x = 0; x < big->size(); ++x)
            if (eval(big_poly, (enc_t)x) == 0) roots.push_back((enc_t)x);
        if (roots.size() != s) throw InternalError("irreducible degree-s factor lost roots");
        roots_of.push_back(std::move(roots));
    }

    std::vector<enc_t> embedded_beta(small->size());
    for (std::uint64_t b = 0; b < small->size(); ++b) embedded_beta[b] = emb.embed((enc_t)b);

    const std::uint64_t npolys = roots_of.size();
    const std::uint64_t pair_count = npolys * (npolys - 1) / 2;
    struct Partial {
        SweepBest best;
        bool agree = true;
        std::uint64_t pairs = 0;
    };
    std::vector<Partial> partial(resolve_threads(threads));

    parallel_chunks(pair_count, threads, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
        auto& out = partial[chunk];
        // Walk (i, j) pairs in rank order; pair counts are desk scale.
        std::uint64_t index = 0;
        for (std::uint64_t i = 0; i < npolys && index < end; ++i) {
            for (std::uint64_t j = i + 1; j < npolys && index < end; ++j, ++index) {
                if (index < begin) continue;
                out.pairs++;
                for (enc_t z1 : roots_of[i]) {
                    for (enc_t z2 : roots_of[j]) {
                        std::uint64_t equal = 0;
                        for (enc_t eb : embedded_beta) {
                            enc_t x1 = big->add(z1, eb);
                            enc_t x2 = big->add(z2, eb);
                            bool direct = cs_big.coset_index(x1) == cs_big.coset_index(x2);
                            bool normed = norm_coset[x1] == norm_coset[x2];
                            if (direct != normed) out.agree = false;
                            if (direct) ++equal;
                        }
                        consider(out.best, equal, {z1, z2}, index);
                    }
                }
            }
        }
    });

    SweepBest best;
    for (auto& p : partial) {
        report.pairs += p.pairs;
        report.two_way_agreement &= p.agree;
        if (!p.best.witness.empty()) consider(best, p.best.max, p.best.witness, p.best.order);
    }
    report.max_equal = best.max;
    report.witness = best.witness;
    report.n_attempts = report.max_equal + 1;
    return report;
}

BoundValue bound_degree_s_separation(const Field& small, std::uint32_t s) {
    if (s < 2) throw Error("the degree-s analysis needs s >= 2");
    const long long size = (long long)small.size();
    BoundValue out;
    auto root = exact_sqrt((std::uint64_t)size);
    if (small.characteristic() == 2) {
        // (2^m/3)(1 + (4s-2)/sqrt(2^m) + 1/2^m) = (2^m + (4s-2) sqrt(2^m) + 1)/3
        if (root) {
            out.exact = true;
            out.num = size + (4LL * s - 2) * *root + 1;
            out.den = 3;
            out.approx = (double)out.num / 3.0;
        } else {
            out.exact = false;
            double sq = std::nextafter(std::sqrt((double)size), HUGE_VAL);
            out.approx = std::nextafter((size + (4.0 * s - 2) * sq + 1) / 3.0, HUGE_VAL);
        }
    } else {
        // (p^m/2)(1 + (2s-1)/sqrt(p^m)) = (p^m + (2s-1) sqrt(p^m))/2
        if (root) {
            out.exact = true;
            out.num = size + (2LL * s - 1) * *root;
            out.den = 2;
            out.approx = (double)out.num / 2.0;
        } else {
            out.exact = false;
            double sq = std::nextafter(std::sqrt((double)size), HUGE_VAL);
            out.approx = std::nextafter((size + (2.0 * s - 1) * sq) / 2.0, HUGE_VAL);
        }
    }
    return out;
}

bool linear_tests_sufficient(const Field& small, std::uint32_t s) {
    // (4s-2)/sqrt(2^m) < 2 and (2s-1)/sqrt(p^m) < 1 are both (2s-1)^2 < p^m.
    const std::uint64_t lhs = (2ull * s - 1) * (2ull * s - 1);
    return lhs < small.size();
}

AttemptStats expected_attempts_sim(FieldPtr field, std::uint32_t t, Strategy strategy,
                                   std::uint32_t q, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw Error("need at least one trial");
    if (t < 2) throw Error("need t >= 2");
    if (t > field->group_order()) throw Error("t exceeds the number of nonzero field elements");
    if (q == 0) q = default_q(*field);

    AttemptStats stats;
    stats.trials = trials;
    double qp = 1;
    for (std::uint32_t i = 0; i + 1 < t; ++i) qp *= q;
    stats.predicted = 1.0 + 1.0 / (qp - 1.0);

    Rng rng(seed);
    const std::uint64_t size = field->size();
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::set<enc_t> roots;
        while (roots.size() < t) {
            enc_t r = (enc_t)(1 + rng.below(size - 1));
            roots.insert(r);
        }
        Polynomial sigma =
            product_from_roots(field, std::vector<enc_t>(roots.begin(), roots.end()));
        SplitProblem problem{sigma, 1, q, strategy, false};
        std::uint64_t trial_seed = rng.next() | 1; // nonzero: keep beta order random
        EdfResult res = equal_degree_factor(problem, trial_seed);
        std::uint64_t attempts = res.trace.records.empty()
                                     ? 0
                                     : res.trace.records.front().attempts.size();
        stats.total_attempts += attempts;
        stats.max = std::max(stats.max, attempts);
    }
    stats.mean = (double)stats.total_attempts / (double)trials;
    return stats;
}

} // namespace czsplit
