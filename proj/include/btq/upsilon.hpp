#pragma once

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "btq/projective.hpp"

namespace btq {

inline constexpr long long kDefaultBudget = 1LL << 30;

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(long long required_, long long budget_)
        : std::runtime_error("enumeration needs a budget of " + std::to_string(required_) +
                             " candidate tuples, configured budget is " +
                             std::to_string(budget_)),
          required(required_),
          budget(budget_) {}
    long long required;
    long long budget;
};

// The finite set of projective matrices over k[t] mapping the base vertex
// x_0 to a neighbor and y_m to y_n, enumerated exhaustively as canonical
// representatives in a deterministic order.
struct UpsilonSet {
    Place place;
    int n;
    int m;
    std::vector<ProjMat> elements;
    std::unordered_map<ProjMat, std::size_t, ProjMatHash> index;

    bool empty() const { return elements.empty(); }
    long long size() const { return static_cast<long long>(elements.size()); }
    // (d - n - m) / 2, meaningful when n + m <= d with matching parity
    int l() const { return (place.degree() - n - m) / 2; }
    std::size_t index_of(const ProjMat& M) const;  // throws if absent
};

// Number of coefficient tuples the exhaustive scan ranges over,
// q^{sum of (bound_i + 1) clamped at 0}; compared against the budget.
long long upsilon_candidate_count(const Place& place, int n, int m);

UpsilonSet enumerate_upsilon(const Place& place, int n, int m,
                             long long budget = kDefaultBudget);

// Predicted |Upsilon_{n,m}| for n+m < d with matching parity:
// q^{n+m} (q^{2l+1} + q^{2l}) (q-1)^2.  The exponent of (q-1) was settled
// against the exhaustive enumeration at q = 3, where 2 and 1 differ.
long long upsilon_size_formula(long long q, int d, int n, int m);

// Partition of the element indices under coset equivalence.
struct CosetPartition {
    std::vector<std::size_t> class_of;        // element index -> class id
    std::vector<std::size_t> class_sizes;     // by class id
    std::vector<std::size_t> representatives; // least element index per class
    long long count() const { return static_cast<long long>(class_sizes.size()); }
};

// Classes of U under right multiplication by the full element list of H_m.
CosetPartition left_cosets(const UpsilonSet& U, const std::vector<ProjMat>& hm);
// Classes under simultaneous left H_n and right H_m multiplication.
CosetPartition double_cosets(const UpsilonSet& U, const std::vector<ProjMat>& hn,
                             const std::vector<ProjMat>& hm);

// Convenience wrappers that build the subgroups themselves.
long long left_coset_count(const UpsilonSet& U);
long long double_coset_count(const UpsilonSet& U);

}  // namespace btq
