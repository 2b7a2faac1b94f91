#include "hodge/hurwitz.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unordered_map>

#include "json.hpp"

namespace hodge {

namespace {

// DFS state for the factorization count. The residual permutation
// rho = (prefix product)^-1 * sigma is updated in place; appending a
// transposition (a b) to the prefix replaces rho by (a b) o rho, i.e. swaps
// the values a and b in the image array. A union-find over the chosen
// transpositions tracks transitivity and is unwound on backtrack.
class FactorizationSearch {
public:
    FactorizationSearch(const Permutation& sigma, int r)
        : d_(sigma.degree()), r_(r), rho_(sigma.images()), rho_inv_(sigma.inverse().images()),
          parent_(d_), size_(d_, 1), components_(d_) {
        for (int i = 0; i < d_; ++i) parent_[i] = i;
        for (int a = 0; a < d_; ++a) {
            for (int b = a + 1; b < d_; ++b) pairs_.emplace_back(a, b);
        }
    }

    Integer run() {
        count_ = 0;
        descend(0);
        return count_;
    }

private:
    int cycle_count() const {
        // rho has at most d <= ~8 points; a direct walk is fine here.
        int count = 0;
        unsigned seen = 0;
        for (int i = 0; i < d_; ++i) {
            if (seen & (1u << i)) continue;
            ++count;
            for (int j = i; !(seen & (1u << j)); j = rho_[j]) seen |= 1u << j;
        }
        return count;
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    void descend(int depth) {
        const int remaining = r_ - depth;
        const int need = d_ - cycle_count();
        if (remaining < need || (remaining - need) % 2 != 0) return;
        if (remaining == 0) {
            if (components_ == 1) ++count_;
            return;
        }
        for (auto [a, b] : pairs_) {
            // rho <- (a b) o rho
            const int pa = rho_inv_[a], pb = rho_inv_[b];
            std::swap(rho_[pa], rho_[pb]);
            std::swap(rho_inv_[a], rho_inv_[b]);

            int ra = find(a), rb = find(b);
            bool united = false;
            if (ra != rb) {
                if (size_[ra] < size_[rb]) std::swap(ra, rb);
                parent_[rb] = ra;
                size_[ra] += size_[rb];
                --components_;
                united = true;
            }

            descend(depth + 1);

            if (united) {
                size_[ra] -= size_[rb];
                parent_[rb] = rb;
                ++components_;
            }
            std::swap(rho_inv_[a], rho_inv_[b]);
            std::swap(rho_[pa], rho_[pb]);
        }
    }

    int d_, r_;
    std::vector<int> rho_, rho_inv_;
    std::vector<int> parent_, size_;
    int components_;
    std::vector<std::pair<int, int>> pairs_;
    Integer count_ = 0;
};

}  // namespace

Integer oracle_count_for_target(const Permutation& sigma, int r, long budget) {
    if (r < 0) throw InvalidDomain("negative transposition count");
    const int d = sigma.degree();
    if (d > 30) throw BudgetExceeded("degree too large for enumeration");
    Integer space;
    mpz_ui_pow_ui(space.get_mpz_t(), static_cast<unsigned long>(d * (d - 1) / 2),
                  static_cast<unsigned long>(r));
    if (space > budget) {
        throw BudgetExceeded("search space " + space.get_str() + " exceeds budget " +
                             std::to_string(budget));
    }
    if (d == 0) return r == 0 ? 1 : 0;
    return FactorizationSearch(sigma, r).run();
}

Integer oracle_count_F(int g, const Partition& alpha, long budget) {
    const int r = transposition_count(g, alpha);
    if (r < 0) throw InvalidDomain("r < 0: no such cover");
    return oracle_count_for_target(Permutation::canonical_with_type(alpha), r, budget);
}

HurwitzValue hurwitz_oracle(int g, const Partition& alpha, long budget) {
    HurwitzValue v;
    v.g = g;
    v.alpha = alpha;
    v.r = transposition_count(g, alpha);
    v.F = oracle_count_F(g, alpha, budget);
    Integer prod = 1;
    for (int p : alpha.parts()) prod *= p;
    v.H = Rational(v.F) / Rational(prod);
    v.H.canonicalize();
    v.provenance = Provenance::oracle;
    return v;
}

HurwitzClosure::HurwitzClosure(int d_max, int g_max) : g_max_(g_max), table_(d_max) {
    if (d_max < 1 || g_max < 0) throw Error("closure bounds must satisfy d_max >= 1, g_max >= 0");
    const int P = table_.size();
    c_.assign(g_max + 1, std::vector<Rational>(P, Rational(0)));

    // Keys grouped by layer r = d + n + 2g - 2; within a layer, by (g, d) so
    // the quadratic term can skip out-of-bound pairs wholesale.
    struct Bucket {
        int g, d;
        std::vector<int> pids;
    };
    const int r_max = 2 * d_max + 2 * g_max - 2;
    std::vector<std::vector<Bucket>> layers(r_max + 1);
    for (int g = 0; g <= g_max; ++g) {
        for (int pid = 0; pid < P; ++pid) {
            const Partition& a = table_[pid];
            if (a.num_parts() == 0) continue;
            const int r = transposition_count(g, a);
            if (r < 0 || r > r_max) continue;
            auto& lay = layers[r];
            if (lay.empty() || lay.back().g != g || lay.back().d != a.degree()) {
                lay.push_back(Bucket{g, a.degree(), {}});
            }
            lay.back().pids.push_back(pid);
        }
    }

    const int base = table_.id_of(std::vector<int>{1});
    c_[0][base] = 1;

    std::unordered_map<long long, Rational> acc;
    std::vector<int> scratch;
    auto key_of = [P](int g, int pid) { return static_cast<long long>(g) * P + pid; };

    auto add_acc = [&](int g, std::vector<int>&& parts, const Rational& value) {
        const int pid = table_.id_of(parts);
        acc[key_of(g, pid)] += value;
    };

    // sum_{i,j} i j p_{i+j} (dA/dp_i)(dB/dp_j) applied to the single keys
    // (ga, a) and (gb, b); symmetric, so each unordered key pair is visited
    // once (with scale 1) and the diagonal with scale 1/2.
    auto bilinear = [&](int ga, int pa, int gb, int pb, const Rational& scale) {
        const Partition& a = table_[pa];
        const Partition& b = table_[pb];
        const Rational cc = scale * c_[ga][pa] * c_[gb][pb];
        if (cc == 0) return;
        for (auto [i, mi] : a.multiplicities()) {
            for (auto [j, mj] : b.multiplicities()) {
                scratch.clear();
                bool removed_i = false, removed_j = false;
                for (int p : a.parts()) {
                    if (!removed_i && p == i) {
                        removed_i = true;
                        continue;
                    }
                    scratch.push_back(p);
                }
                for (int p : b.parts()) {
                    if (!removed_j && p == j) {
                        removed_j = true;
                        continue;
                    }
                    scratch.push_back(p);
                }
                scratch.push_back(i + j);
                std::sort(scratch.rbegin(), scratch.rend());
                add_acc(ga + gb, std::vector<int>(scratch), cc * (Rational(i) * j * mi * mj));
            }
        }
    };

    for (int r = 1; r <= r_max; ++r) {
        acc.clear();

        // join_within and cut move layer r-1 to layer r
        for (const auto& bucket : layers[r - 1]) {
            for (int pid : bucket.pids) {
                const Rational& cv = c_[bucket.g][pid];
                if (cv == 0) continue;
                const Partition& a = table_[pid];
                const auto mults = a.multiplicities();

                if (bucket.g + 1 <= g_max) {
                    for (size_t x = 0; x < mults.size(); ++x) {
                        for (size_t y = x; y < mults.size(); ++y) {
                            auto [i, mi] = mults[x];
                            auto [j, mj] = mults[y];
                            Rational w;
                            if (x == y) {
                                if (mi < 2) continue;
                                w = Rational(i) * i * mi * (mi - 1) / 2;
                            } else {
                                w = Rational(i) * j * mi * mj;
                            }
                            scratch.clear();
                            int drop_i = (x == y) ? 2 : 1, drop_j = (x == y) ? 0 : 1;
                            for (int p : a.parts()) {
                                if (p == i && drop_i > 0) {
                                    --drop_i;
                                    continue;
                                }
                                if (p == j && drop_j > 0) {
                                    --drop_j;
                                    continue;
                                }
                                scratch.push_back(p);
                            }
                            scratch.push_back(i + j);
                            std::sort(scratch.rbegin(), scratch.rend());
                            add_acc(bucket.g + 1, std::vector<int>(scratch), w * cv);
                        }
                    }
                }

                for (auto [v, mv] : mults) {
                    if (v < 2) continue;
                    for (int i = 1; 2 * i <= v; ++i) {
                        const int j = v - i;
                        Rational w = (i == j) ? Rational(v, 2) : Rational(v);
                        scratch.clear();
                        int skip = 1;
                        for (int p : a.parts()) {
                            if (p == v && skip) {
                                --skip;
                                continue;
                            }
                            scratch.push_back(p);
                        }
                        scratch.push_back(i);
                        scratch.push_back(j);
                        std::sort(scratch.rbegin(), scratch.rend());
                        add_acc(bucket.g, std::vector<int>(scratch), w * mv * cv);
                    }
                }
            }
        }

        // join_across combines layers (la, lb) with la + lb = r - 1
        for (int la = 0; 2 * la <= r - 1; ++la) {
            const int lb = r - 1 - la;
            for (const auto& ba : layers[la]) {
                for (const auto& bb : layers[lb]) {
                    if (ba.d + bb.d > d_max || ba.g + bb.g > g_max) continue;
                    for (size_t ia = 0; ia < ba.pids.size(); ++ia) {
                        if (la == lb && &ba == &bb) {
                            bilinear(ba.g, ba.pids[ia], ba.g, ba.pids[ia], Rational(1, 2));
                            for (size_t ib = ia + 1; ib < bb.pids.size(); ++ib) {
                                bilinear(ba.g, ba.pids[ia], bb.g, bb.pids[ib], Rational(1));
                            }
                        } else if (la == lb && &ba > &bb) {
                            // unordered bucket pairs within one layer
                        } else {
                            for (int pb : bb.pids) {
                                bilinear(ba.g, ba.pids[ia], bb.g, pb, Rational(1));
                            }
                        }
                    }
                }
            }
        }

        for (auto& [key, value] : acc) {
            const int g = static_cast<int>(key / P);
            const int pid = static_cast<int>(key % P);
            value /= r;
            value.canonicalize();
            c_[g][pid] = value;
        }
    }
}

const Rational& HurwitzClosure::series_coeff(int g, const Partition& alpha) const {
    static const Rational zero(0);
    if (!covers(g, alpha)) throw CacheIncomplete("key outside closure bounds");
    const int pid = table_.id_of(alpha);
    return pid < 0 ? zero : c_[g][pid];
}

Rational HurwitzClosure::hurwitz(int g, const Partition& alpha) const {
    const int r = transposition_count(g, alpha);
    if (r < 0) return Rational(0);
    Rational h = series_coeff(g, alpha) * Rational(factorial(r)) * Rational(alpha.aut_order());
    h.canonicalize();
    return h;
}

GenusSeries HurwitzClosure::to_genus_series() const {
    GenusSeries s(d_max(), g_max_);
    for (int g = 0; g <= g_max_; ++g) {
        for (int pid = 0; pid < table_.size(); ++pid) {
            if (c_[g][pid] != 0) s.set(g, table_[pid], c_[g][pid]);
        }
    }
    return s;
}

HurwitzValue hurwitz_solve(int g, const Partition& alpha, const HurwitzClosure& closure) {
    HurwitzValue v;
    v.g = g;
    v.alpha = alpha;
    v.r = transposition_count(g, alpha);
    v.H = v.r < 0 ? Rational(0) : closure.hurwitz(g, alpha);
    v.provenance = Provenance::solver;
    return v;
}

bool HurwitzCache::has(int g, const Partition& alpha) const {
    return entries_.count(SeriesKey{g, alpha}) > 0;
}

Rational HurwitzCache::value(int g, const Partition& alpha) const {
    auto it = entries_.find(SeriesKey{g, alpha});
    if (it == entries_.end()) throw CacheIncomplete("cache has no entry for the requested key");
    return it->second;
}

void HurwitzCache::absorb(const HurwitzClosure& closure) {
    for (int g = 0; g <= closure.g_max(); ++g) {
        for (int pid = 0; pid < closure.partitions().size(); ++pid) {
            const Partition& a = closure.partitions()[pid];
            if (a.num_parts() == 0) continue;
            Rational h = closure.hurwitz(g, a);
            auto [it, inserted] = entries_.emplace(SeriesKey{g, a}, h);
            if (!inserted && it->second != h) {
                throw CacheFormatError("cache value conflicts with solver at g=" +
                                       std::to_string(g) + " alpha=" + a.to_string());
            }
        }
    }
    d_max_ = std::max(d_max_, closure.d_max());
    g_max_ = std::max(g_max_, closure.g_max());
}

HurwitzCache HurwitzCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CacheFormatError("cannot open cache file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw CacheFormatError("empty cache file");
    nlohmann::json header = nlohmann::json::parse(line);
    if (header.value("format", "") != "hwz") throw CacheFormatError("bad cache format id");
    if (header.value("version", 0) != kCacheVersion) throw CacheFormatError("bad cache version");
    if (header.value("normalization", "") != kCacheNormalizationTag) {
        throw CacheFormatError("cache normalization tag mismatch: expected '" +
                               std::string(kCacheNormalizationTag) + "'");
    }
    HurwitzCache cache;
    cache.d_max_ = header.value("d_max", 0);
    cache.g_max_ = header.value("g_max", -1);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json rec = nlohmann::json::parse(line);
        Partition alpha(rec.at("alpha").get<std::vector<int>>());
        cache.entries_[SeriesKey{rec.at("g").get<int>(), alpha}] =
            rational_from_string(rec.at("H").get<std::string>());
    }
    return cache;
}

void HurwitzCache::save(const std::string& path) const {
    std::vector<const std::pair<const SeriesKey, Rational>*> order;
    order.reserve(entries_.size());
    for (const auto& e : entries_) order.push_back(&e);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        const int ra = transposition_count(a->first.g, a->first.alpha);
        const int rb = transposition_count(b->first.g, b->first.alpha);
        if (ra != rb) return ra < rb;
        if (a->first.g != b->first.g) return a->first.g < b->first.g;
        return a->first.alpha < b->first.alpha;
    });

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error("cannot write cache file: " + tmp);
        nlohmann::json header{{"format", "hwz"},
                              {"version", kCacheVersion},
                              {"d_max", d_max_},
                              {"g_max", g_max_},
                              {"normalization", kCacheNormalizationTag}};
        out << header.dump() << "\n";
        for (const auto* e : order) {
            nlohmann::json rec{{"g", e->first.g},
                               {"alpha", e->first.alpha.parts()},
                               {"r", transposition_count(e->first.g, e->first.alpha)},
                               {"H", to_fraction_string(e->second)}};
            out << rec.dump() << "\n";
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace hodge
