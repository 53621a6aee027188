#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "btq/quotient.hpp"
#include "btq/upsilon.hpp"

namespace btq {

inline constexpr std::uint64_t kDefaultSeed = 12345;

struct PairRecord {
    int n = 0;
    int m = 0;
    long long upsilon_size = 0;
    long long left_cosets = 0;
    long long double_cosets = 0;
    long long closed_form = 0;
    bool match = false;
    std::optional<long long> size_formula;   // interior (Case 3) pairs only
    std::optional<bool> size_match;
    std::optional<bool> class_sizes_ok;      // |H_n||H_m| check, subcases 3.a/3.b
    // full class decomposition, populated only when the oracle disagrees
    struct ClassInfo {
        std::string representative;
        long long size = 0;
    };
    std::vector<ClassInfo> classes;
    bool ok() const {
        return match && size_match.value_or(true) && class_sizes_ok.value_or(true);
    }
};

struct CensusRecord {
    std::vector<long long> orbit_lengths;  // ascending
    long long expected_free_orbits = 0;
    bool lengths_ok = false;
    long long loop_observed = 0;   // total orbits minus edges already accounted
    long long loop_formula = 0;
    bool loop_match = false;
    bool ok() const { return lengths_ok && loop_match; }
};

struct RegularityRecord {
    int n = 0;
    long long neighbor_sum = 0;
    long long expected = 0;  // q^d + 1
    bool match = false;
};

struct DistanceLemmaRecord {
    int singles_checked = 0;
    int products_checked = 0;
    std::uint64_t seed = 0;
    bool pass = false;
};

struct VerificationReport {
    long long q = 0;
    int d = 0;
    std::string f;
    int window = 0;
    long long budget = 0;
    std::vector<PairRecord> pairs;
    std::optional<CensusRecord> census;          // even d only
    std::vector<RegularityRecord> regularity;
    std::optional<bool> f_independence;          // null when not requested
    std::optional<DistanceLemmaRecord> distance; // null when not requested
    std::vector<std::string> notes;
    double elapsed_ms = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    int window = -1;  // default d + 2
    long long budget = kDefaultBudget;
    bool check_f_independence = false;
    bool run_distance_lemma = true;
    std::uint64_t seed = kDefaultSeed;
    int distance_samples = 48;
};

// Compares the brute-force double-coset counts against the closed form on
// every unordered pair (n, m) with n+m <= window plus the chain pairs
// (n, n+d) for n <= min(2, window-d); checks the size formula on interior
// pairs, neighbor-regularity sums for n <= 2, and the orbit census and loop
// count for even d.  A budget overrun yields a partial failing report that
// names the offending pair.
VerificationReport verify_instance(const Place& place, const VerifyOptions& opts = {});

// True iff all per-pair counts (|Upsilon|, left cosets, double cosets)
// coincide across every monic irreducible of degree d.
bool verify_f_independence(const FieldPtr& ctx, int d, int window,
                           long long budget = kDefaultBudget);

// Distance lemma spot checks: every enumerated neighbor-map has distance 1,
// and seeded random products of up to three of them have distance equal to
// nu_p of their determinant after canonicalization.
DistanceLemmaRecord verify_distance_lemma(const Place& place, int samples,
                                          std::uint64_t seed = kDefaultSeed,
                                          long long budget = kDefaultBudget);

}  // namespace btq
