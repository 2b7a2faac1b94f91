#include "hodge/genus_series.hpp"

#include <algorithm>

namespace hodge {

namespace {

// alpha with one copy each of the listed values removed and `added` appended.
// Values to remove must be present.
std::vector<int> replace_parts(const std::vector<int>& alpha, std::initializer_list<int> removed,
                               std::initializer_list<int> added) {
    std::vector<int> v = alpha;
    for (int r : removed) {
        auto it = std::find(v.begin(), v.end(), r);
        v.erase(it);
    }
    for (int a : added) v.push_back(a);
    std::sort(v.rbegin(), v.rend());
    return v;
}

}  // namespace

void GenusSeries::add(int g, const Partition& alpha, const Rational& value) {
    if (!in_bounds(g, alpha) || value == 0) return;
    SeriesKey key{g, alpha};
    auto [it, inserted] = coeffs_.emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) coeffs_.erase(it);
    }
}

void GenusSeries::set(int g, const Partition& alpha, const Rational& value) {
    if (!in_bounds(g, alpha)) return;
    if (value == 0) {
        coeffs_.erase(SeriesKey{g, alpha});
    } else {
        coeffs_[SeriesKey{g, alpha}] = value;
    }
}

Rational GenusSeries::coeff(int g, const Partition& alpha) const {
    auto it = coeffs_.find(SeriesKey{g, alpha});
    return it == coeffs_.end() ? Rational(0) : it->second;
}

bool GenusSeries::is_zero() const {
    return coeffs_.empty();
}

GenusSeries GenusSeries::layer(int r) const {
    GenusSeries out(d_max_, g_max_);
    for (const auto& [key, value] : coeffs_) {
        if (transposition_count(key.g, key.alpha) == r) out.add(key.g, key.alpha, value);
    }
    return out;
}

GenusSeries& GenusSeries::operator+=(const GenusSeries& o) {
    for (const auto& [key, value] : o.coeffs_) add(key.g, key.alpha, value);
    return *this;
}

GenusSeries& GenusSeries::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [key, value] : coeffs_) value *= s;
    return *this;
}

int lhs_eigenvalue(int g, const Partition& alpha) {
    return transposition_count(g, alpha);
}

GenusSeries join_within(const GenusSeries& s) {
    GenusSeries out(s.d_max(), s.g_max());
    for (const auto& [key, c] : s.entries()) {
        const auto mults = key.alpha.multiplicities();
        for (size_t a = 0; a < mults.size(); ++a) {
            for (size_t b = a; b < mults.size(); ++b) {
                auto [i, mi] = mults[a];
                auto [j, mj] = mults[b];
                Rational w;
                if (a == b) {
                    if (mi < 2) continue;
                    // i = j: (1/2) i^2 m_i (m_i - 1)
                    w = Rational(i) * i * mi * (mi - 1) / 2;
                    out.add(key.g + 1, Partition(replace_parts(key.alpha.parts(), {i, i}, {2 * i})),
                            w * c);
                } else {
                    // two ordered (i,j) pairs cancel the 1/2
                    w = Rational(i) * j * mi * mj;
                    out.add(key.g + 1, Partition(replace_parts(key.alpha.parts(), {i, j}, {i + j})),
                            w * c);
                }
            }
        }
    }
    return out;
}

namespace {

// Full bilinear form sum_{i,j} i j p_{i+j} (dA/dp_i)(dB/dp_j) between two
// single entries; symmetric in its arguments.
void join_across_pair(GenusSeries& out, const SeriesKey& ka, const Rational& ca,
                      const SeriesKey& kb, const Rational& cb, const Rational& scale) {
    const int g = ka.g + kb.g;
    if (g > out.g_max() || ka.alpha.degree() + kb.alpha.degree() > out.d_max()) return;
    for (auto [i, mi] : ka.alpha.multiplicities()) {
        for (auto [j, mj] : kb.alpha.multiplicities()) {
            std::vector<int> merged = replace_parts(ka.alpha.parts(), {i}, {});
            for (int p : kb.alpha.parts()) merged.push_back(p);
            merged = replace_parts(merged, {j}, {i + j});
            out.add(g, Partition(std::move(merged)),
                    scale * Rational(i) * j * mi * mj * ca * cb);
        }
    }
}

}  // namespace

GenusSeries join_across(const GenusSeries& s) {
    GenusSeries out(s.d_max(), s.g_max());
    const auto& entries = s.entries();
    for (auto it1 = entries.begin(); it1 != entries.end(); ++it1) {
        join_across_pair(out, it1->first, it1->second, it1->first, it1->second, Rational(1, 2));
        for (auto it2 = std::next(it1); it2 != entries.end(); ++it2) {
            join_across_pair(out, it1->first, it1->second, it2->first, it2->second, Rational(1));
        }
    }
    return out;
}

GenusSeries cut(const GenusSeries& s) {
    GenusSeries out(s.d_max(), s.g_max());
    for (const auto& [key, c] : s.entries()) {
        for (auto [v, mv] : key.alpha.multiplicities()) {
            if (v < 2) continue;
            for (int i = 1; 2 * i <= v; ++i) {
                const int j = v - i;
                // ordered (i,j)+(j,i) cancel the 1/2 unless i == j
                Rational w = (i == j) ? Rational(v, 2) : Rational(v);
                out.add(key.g, Partition(replace_parts(key.alpha.parts(), {v}, {i, j})),
                        w * mv * c);
            }
        }
    }
    return out;
}

GenusSeries joincut_residual(const GenusSeries& s) {
    GenusSeries rhs = join_within(s);
    rhs += join_across(s);
    rhs += cut(s);
    GenusSeries res(s.d_max(), s.g_max());
    for (const auto& [key, c] : s.entries()) {
        res.add(key.g, key.alpha, Rational(lhs_eigenvalue(key.g, key.alpha)) * c);
    }
    for (const auto& [key, c] : rhs.entries()) {
        res.add(key.g, key.alpha, -c);
    }
    return res;
}

}  // namespace hodge
