#ifndef CZSPLIT_CZ_HPP
#define CZSPLIT_CZ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "czsplit/characters.hpp"
#include "czsplit/poly.hpp"

namespace czsplit {

enum class Strategy {
    classic,                  // random test polynomials of degree < t
    improved,                 // c = z, then z + beta
    improved_coset_restricted,// as improved, beta drawn from the observed coset
    direct_degree_s,          // degree-s factors over the base field, linear tests first
};

std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

enum class SplitStatus {
    already_factor, // gcd(c, sigma) nontrivial (or sigma(-beta) = 0 for linear c)
    split,          // >= 2 nontrivial coprime parts multiplying to sigma
    failure,        // a(z) is the constant omega^h
};

struct SplitOutcome {
    SplitStatus status;
    /// Present for already_factor and split; pairwise coprime, nontrivial,
    /// product equal to monic(sigma).
    std::vector<Polynomial> parts;
    /// Present on failure: a(z) = omega^observed_coset mod sigma.
    std::optional<unsigned> observed_coset;
};

struct SplitAttempt {
    Polynomial test;
    SplitStatus status;
    std::optional<unsigned> observed_coset;
};

/// All attempts spent on one subproblem (one sigma pushed through the
/// splitter until it yields).
struct SplitRecord {
    Polynomial sigma;
    std::uint32_t s = 1;
    std::vector<SplitAttempt> attempts;
};

struct AttemptTrace {
    std::vector<SplitRecord> records; // enumeration order of subproblems
    bool coset_restricted = false;    // shifts were narrowed to the observed coset

    std::uint64_t total_attempts() const {
        std::uint64_t n = 0;
        for (const auto& r : records) n += r.attempts.size();
        return n;
    }
};

/// An equal-degree splitting task: sigma monic squarefree with z not
/// dividing it and every irreducible factor of degree s. q = 0 picks the
/// characteristic's default (3 for p = 2, else 2). Validation of the
/// preconditions is opt-in; the factor() pipeline guarantees them.
struct SplitProblem {
    Polynomial sigma;
    std::uint32_t s = 1;
    std::uint32_t q = 0;
    Strategy strategy = Strategy::improved;
    bool validate = false;
};

struct EdfResult {
    std::vector<Polynomial> factors; // sorted canonically
    AttemptTrace trace;
};

/// The generic equal-degree engine behind the four named variants; the
/// strategy field of the problem selects the behavior.
EdfResult equal_degree_factor(const SplitProblem& problem, std::uint64_t seed);

/// One splitting attempt with test polynomial c against sigma (monic,
/// degree >= 2). For linear c = z + beta the gcd(c, sigma) test is replaced
/// by evaluating sigma(-beta); otherwise a nontrivial gcd(c, sigma) is
/// already a factor. Else a = c^e mod sigma with e = (p^{sm} - 1)/q:
/// constant a = omega^h reports failure with that coset, anything else
/// splits sigma into the nontrivial gcd(a - omega^h, sigma).
SplitOutcome split_once(const Polynomial& sigma, const Polynomial& c,
                        const CosetStructure& cs, std::uint32_t s = 1);

/// Full equal-degree factorization, c = z first and then z + beta until
/// every factor is isolated. beta order: encoding order when seed == 0, a
/// seeded permutation otherwise. Characteristic 2 with odd m transparently
/// lifts to GF(2^{2m}) and maps factors back. More than coset-size attempts
/// on one s=1 subproblem raises InternalError (provably unreachable).
EdfResult edf_improved(const SplitProblem& problem, std::uint64_t seed);

/// Baseline: c drawn as a random monic of degree < t each attempt.
EdfResult edf_classic(const SplitProblem& problem, std::uint64_t seed);

/// Degree-s factors found directly over the base field with exponent
/// ell_{sm}; test polynomials are monic linear with a fall back to monic
/// degree-s polynomials when linear tests run out.
EdfResult edf_direct_degree_s(const SplitProblem& problem, std::uint64_t seed);

/// Equal-degree splitting against a general prime q | p^m - 1 (up to q
/// gcds per attempt, success probability (q-1)/q per attempt at t = 2).
EdfResult qth_split(const SplitProblem& problem, std::uint64_t seed);

/// Squarefree part per multiplicity, characteristic-p aware (vanishing
/// derivative means f = g(z^p); the p-th root is extracted through the
/// inverse Frobenius on coefficients). Product with multiplicities
/// reconstructs monic(f). Sorted by multiplicity, then canonically.
std::vector<std::pair<Polynomial, std::uint32_t>> squarefree_decomposition(const Polynomial& f);

/// Splits a monic squarefree f into (product of all irreducible factors of
/// degree r, r) buckets, ascending r, empty degrees omitted. Rejects
/// non-squarefree input.
std::vector<std::pair<Polynomial, std::uint32_t>> distinct_degree(const Polynomial& f);

struct Factorization {
    enc_t leading = 1; // leading coefficient, returned separately
    std::vector<std::pair<Polynomial, std::uint32_t>> factors; // monic irreducible, multiplicity
    AttemptTrace trace;
    Strategy strategy = Strategy::improved;
    std::uint64_t seed = 0;
};

/// Complete factorization of any nonconstant polynomial: strips z-factors,
/// squarefree decomposition, distinct-degree splitting, then equal-degree
/// factorization per bucket. Deterministic under a fixed seed.
Factorization factor(const Polynomial& f, std::uint64_t seed = 0,
                     Strategy strategy = Strategy::improved, std::uint32_t q = 0);

/// Default splitting modulus for a field: 3 in characteristic 2, else 2.
std::uint32_t default_q(const Field& field);

} // namespace czsplit

#endif
