#ifndef CZSPLIT_ORACLE_HPP
#define CZSPLIT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "czsplit/characters.hpp"
#include "czsplit/cz.hpp"
#include "czsplit/gf.hpp"

namespace czsplit {

/// Exact nonnegative rational, or a 1-ulp-rounded-up real when the bound
/// involves sqrt of a non-square field size (a rounded-up bound is still a
/// bound).
struct BoundValue {
    bool exact = true;
    long long num = 0;
    long long den = 1;
    double approx = 0.0; // num/den when exact, rounded-up value otherwise

    /// count <= bound?
    bool dominates(std::uint64_t count) const;
    double value() const { return exact ? (double)num / (double)den : approx; }
    std::string to_string() const;
};

struct TupleCount {
    std::vector<enc_t> roots;
    std::uint64_t count = 0;
    std::optional<long long> formula_value; // exact; comparisons carry no tolerance
};

struct MaxReport {
    std::string field;
    std::uint32_t t_or_r = 0;
    std::uint64_t max_count = 0;
    std::vector<enc_t> witness; // lexicographically smallest maximizing tuple
    bool exhaustive = true;
    std::uint64_t samples = 0; // tuples examined
    std::optional<BoundValue> bound;
};

/// Number of beta in the field such that every roots[i] + beta is nonzero
/// and all shifted roots share one coset: the count of failing shifts for a
/// fully split sigma with these roots. Roots must be distinct, t >= 2.
std::uint64_t brute_count(const CosetStructure& cs, const std::vector<enc_t>& roots);

/// Closed forms for t = 2 and t = 3 (exact, via Eisenstein arithmetic):
///   q=3: N = (2^m - 4)/3 and the t=3 display with the Gauss factor;
///   q=2: N = (p^m - 3)/2 and the three-product t=3 display.
long long formula_count(const CosetStructure& cs, const std::vector<enc_t>& roots);

/// Closed form of 1 + max over root tuples of the failing-shift count,
/// for t in {2, 3} where one is stated.
std::optional<long long> formula_one_plus_max(const CosetStructure& cs, std::uint32_t t);

/// Max of brute_count over distinct root tuples: exhaustive when
/// C(p^m, t) * p^m <= budget, else `budget / p^m` seeded random tuples.
/// Deterministic reduction (max with smallest witness).
MaxReport max_count(const CosetStructure& cs, std::uint32_t t, std::uint64_t budget,
                    std::uint64_t seed, unsigned threads);

/// a_j = sum_h binom(j, e+3h), e = 2j mod 3 -- evaluated both as that
/// binomial sum and as the Eisenstein closed form (1/3) sum_h
/// zeta^{-he}(1+zeta^h)^j; the two must agree (asserted). j >= 2.
long long surviving_term_count(unsigned j);

/// sum_{j=2}^r a_j (j-1) binom(r, j); closed form 1 + (2r 3^{r-1} - 3^r)/3.
long long surviving_term_weighted_sum(unsigned r);
long long surviving_term_weighted_sum_closed(unsigned r);

/// General upper bound on the failing-shift count for r roots (r >= 2):
///   q=3: (1/3^{r-1}) [2^m + s - r + 3^{r-2}(2r-3) s], s = sqrt(2^m)
///   q=2: (1/2^{r-1}) [p^m - r + (2^{r-1}(r-2)+1) s], s = sqrt(p^m)
BoundValue bound_count(const CosetStructure& cs, std::uint32_t r);

/// Representation count: max over beta != 0 and coset pairs (j, i) of
/// #{z not in {0, beta} : z in A_j, beta - z in A_i} (beta + z in
/// characteristic 2, which is the same thing). Witness = (beta, j, i).
struct SumRepMax {
    std::uint64_t max = 0;
    enc_t beta = 0;
    unsigned coset_j = 0, coset_i = 0;
    std::vector<enc_t> witness_roots; // the z's realizing the max
};
SumRepMax brute_sum_rep_max(const CosetStructure& cs);

/// Closed forms:
///   cubic (p=2): (2^m + 2^{m/2} - 2)/9 for m/2 even, (2^m + 2^{m/2+1} + 1)/9 odd;
///   quadratic:   (p^m - 1)/4 for p = 4k+1, (p^m + 1)/4 for p = 4k+3 m odd,
///                (p^m - 1)/4 for p = 4k+3 m even.
long long formula_sum_rep_max(const CosetStructure& cs);

/// Smallest degree guaranteeing a split within n attempts:
/// One attempt always suffices past the coset size plus one; two past one
/// plus the representation maximum. n in {1, 2}.
long long min_degree_for_attempts(unsigned n, const CosetStructure& cs);

/// Degree-s separation data for the tower GF(p^m) in GF(p^{sm}): the exhaustive
/// maximum over root pairs (z1, z2) of distinct monic irreducible degree-s
/// polynomials of #{beta in GF(p^m) : chi'(z1+beta) = chi'(z2+beta)},
/// counted twice (direct big-field character and chi o relative norm) --
/// the two counts must agree pairwise.
struct SeparationReport {
    std::uint64_t max_equal = 0;  // max_{z1,z2} N^{(m)}(z1, z2)
    std::uint64_t n_attempts = 0; // N_A = 1 + max
    std::vector<enc_t> witness;   // (z1, z2) in big-field encodings
    std::uint64_t pairs = 0;
    bool two_way_agreement = true;
    unsigned lift_exponent = 1;   // chi' = (chi o N)^e
    bool lift_agrees = true;      // exhaustive over the big field
};
SeparationReport brute_degree_s_separation(FieldPtr small, std::uint32_t s, unsigned threads);

/// Weil-bound estimate on the separation attempts:
/// (2^m/3)(1 + (4s-2)/sqrt(2^m) + 1/2^m) for p = 2,
/// (p^m/2)(1 + (2s-1)/sqrt(p^m)) for odd p.
BoundValue bound_degree_s_separation(const Field& small, std::uint32_t s);

/// Sufficiency of linear test polynomials for degree-s separation:
/// (4s-2)/sqrt(2^m) < 2, resp. (2s-1)/sqrt(p^m) < 1 -- both equivalent to
/// (2s-1)^2 < p^m.
bool linear_tests_sufficient(const Field& small, std::uint32_t s);

struct AttemptStats {
    std::uint64_t trials = 0;
    double mean = 0.0;
    std::uint64_t max = 0;
    double predicted = 0.0; // 1 + 1/(q^{t-1} - 1)
    std::uint64_t total_attempts = 0;
};

/// Factors `trials` random fully split squarefree degree-t polynomials
/// (uniform distinct nonzero roots) and reports the attempts spent on the
/// first successful split of each. t must not exceed the number of nonzero
/// field elements.
AttemptStats expected_attempts_sim(FieldPtr field, std::uint32_t t, Strategy strategy,
                                   std::uint32_t q, std::uint64_t trials, std::uint64_t seed);

} // namespace czsplit

#endif
