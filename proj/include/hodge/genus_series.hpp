#pragma once

#include <map>

#include "hodge/partition.hpp"

namespace hodge {

struct SeriesKey {
    int g = 0;
    Partition alpha;
    auto operator<=>(const SeriesKey&) const = default;
};

// Sparse truncation of the genus series: entry (g, alpha) is the coefficient
// of p_alpha z^d x^g. Keys outside (d_max, g_max) are silently dropped by
// every operation.
class GenusSeries {
public:
    GenusSeries(int d_max, int g_max) : d_max_(d_max), g_max_(g_max) {}

    int d_max() const { return d_max_; }
    int g_max() const { return g_max_; }

    bool in_bounds(int g, const Partition& alpha) const {
        return g >= 0 && g <= g_max_ && alpha.degree() <= d_max_;
    }
    void add(int g, const Partition& alpha, const Rational& value);
    void set(int g, const Partition& alpha, const Rational& value);
    Rational coeff(int g, const Partition& alpha) const;

    const std::map<SeriesKey, Rational>& entries() const { return coeffs_; }
    bool is_zero() const;
    // Entries whose transposition count equals r.
    GenusSeries layer(int r) const;

    GenusSeries& operator+=(const GenusSeries& o);
    GenusSeries& operator*=(const Rational& s);

private:
    int d_max_, g_max_;
    std::map<SeriesKey, Rational> coeffs_;
};

// Diagonal left-hand-side factor of the join-cut equation on the monomial
// p_alpha z^d x^g: d + 2g - 2 + n (= the transposition count).
int lhs_eigenvalue(int g, const Partition& alpha);

// (1/2) sum_{i,j} i j x p_{i+j} d^2/dp_i dp_j  — join inside one factorization.
GenusSeries join_within(const GenusSeries& s);
// (1/2) sum_{i,j} i j p_{i+j} (dS/dp_i)(dS/dp_j) — join across two factorizations.
GenusSeries join_across(const GenusSeries& s);
// (1/2) sum_{i,j} (i+j) p_i p_j d/dp_{i+j} — cut one cycle in two.
GenusSeries cut(const GenusSeries& s);

// LHS - RHS of the join-cut equation at every key within bounds. Identically
// zero exactly when s satisfies the equation there.
GenusSeries joincut_residual(const GenusSeries& s);

}  // namespace hodge
