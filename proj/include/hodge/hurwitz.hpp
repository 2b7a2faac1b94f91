#pragma once

#include <string>
#include <vector>

#include "hodge/genus_series.hpp"
#include "hodge/permutation.hpp"

namespace hodge {

inline constexpr long kDefaultOracleBudget = 10'000'000;

// Number of r-tuples of transpositions in S_d with a given product and
// transitively acting factor group. Throws BudgetExceeded when
// (d(d-1)/2)^r > budget.
Integer oracle_count_for_target(const Permutation& sigma, int r, long budget);

// F(g, alpha): product fixed to the canonical permutation of cycle type alpha.
// Throws InvalidDomain when r < 0.
Integer oracle_count_F(int g, const Partition& alpha, long budget = kDefaultOracleBudget);

enum class Provenance { oracle, solver, cache };

struct HurwitzValue {
    int g = 0;
    Partition alpha;
    int r = 0;
    Rational H;
    Provenance provenance = Provenance::solver;
    Integer F;  // factorization count, only meaningful for oracle results
};

// H = F / prod(alpha_i).
HurwitzValue hurwitz_oracle(int g, const Partition& alpha, long budget = kDefaultOracleBudget);

// Join-cut solution on d <= d_max, g <= g_max, solved layer by layer in
// increasing transposition count from the base c(0,(1)) = 1.
//
// An optional cone bound n + 2g <= phi restricts the state space: the
// dependency cone of the recursion never leaves it (join moves to n+1 parts
// at genus g-1, cut to n-1 parts at genus g, and the quadratic term splits
// n+1 parts and g across two factors), so every retained key is still exact.
class HurwitzClosure {
public:
    HurwitzClosure(int d_max, int g_max, int n_plus_2g_max = -1);

    int d_max() const { return table_.d_max(); }
    int g_max() const { return g_max_; }
    int cone_bound() const { return phi_; }
    const PartitionTable& partitions() const { return table_; }

    bool covers(int g, const Partition& alpha) const {
        return g >= 0 && g <= g_max_ && alpha.degree() <= d_max() &&
               alpha.num_parts() + 2 * g <= phi_;
    }

    // Series coefficient c(g, alpha) = H / (r! |Aut alpha|).
    const Rational& series_coeff(int g, const Partition& alpha) const;
    const Rational& series_coeff(int g, int pid) const { return c_[g][pid]; }

    // Hurwitz number H^g_alpha; total (0 for unreachable covers).
    Rational hurwitz(int g, const Partition& alpha) const;

    GenusSeries to_genus_series() const;

private:
    int g_max_;
    PartitionTable table_;
    std::vector<std::vector<Rational>> c_;  // [g][pid]
};

HurwitzValue hurwitz_solve(int g, const Partition& alpha, const HurwitzClosure& closure);

inline constexpr const char* kCacheNormalizationTag = "F-over-prod-alpha";
inline constexpr int kCacheVersion = 1;

// JSON-lines persistence: a header record followed by one record per (g,
// alpha), sorted by (r, g, canonical partition order). Values are "num/den"
// strings; re-saving an unchanged cache is byte identical.
class HurwitzCache {
public:
    HurwitzCache() = default;

    int d_max() const { return d_max_; }
    int g_max() const { return g_max_; }
    bool empty() const { return entries_.empty(); }
    size_t size() const { return entries_.size(); }

    bool has(int g, const Partition& alpha) const;
    Rational value(int g, const Partition& alpha) const;

    // Adds every closure value; existing overlapping entries must agree.
    void absorb(const HurwitzClosure& closure);

    static HurwitzCache load(const std::string& path);
    void save(const std::string& path) const;  // write temp + rename

private:
    int d_max_ = 0;
    int g_max_ = -1;
    std::map<SeriesKey, Rational> entries_;
};

}  // namespace hodge
