#include "hodge/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace hodge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw Error("partition parts must be positive");
    }
    std::sort(parts_.rbegin(), parts_.rend());
    degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < parts_.size();) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        out.emplace_back(parts_[i], static_cast<int>(j - i));
        i = j;
    }
    return out;
}

Integer Partition::aut_order() const {
    Integer a = 1;
    for (auto [v, m] : multiplicities()) a *= factorial(m);
    return a;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (degree_ != o.degree_) return degree_ <=> o.degree_;
    // Larger leading parts first within a degree.
    for (size_t i = 0; i < std::min(parts_.size(), o.parts_.size()); ++i) {
        if (parts_[i] != o.parts_[i]) return o.parts_[i] <=> parts_[i];
    }
    return parts_.size() <=> o.parts_.size();
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

ZeroPaddedPartition::ZeroPaddedPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 0) throw Error("zero-padded partition parts must be non-negative");
    }
    std::sort(parts_.rbegin(), parts_.rend());
}

ZeroPaddedPartition ZeroPaddedPartition::padded(const std::vector<int>& parts, int length) {
    if (static_cast<int>(parts.size()) > length) throw Error("padded: too many parts");
    std::vector<int> v = parts;
    v.resize(length, 0);
    return ZeroPaddedPartition(std::move(v));
}

int ZeroPaddedPartition::total() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::strong_ordering ZeroPaddedPartition::operator<=>(const ZeroPaddedPartition& o) const {
    if (length() != o.length()) return length() <=> o.length();
    if (total() != o.total()) return total() <=> o.total();
    for (int i = 0; i < length(); ++i) {
        if (parts_[i] != o.parts_[i]) return o.parts_[i] <=> parts_[i];
    }
    return std::strong_ordering::equal;
}

std::string ZeroPaddedPartition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

int transposition_count(int g, const Partition& alpha) {
    return alpha.degree() + alpha.num_parts() + 2 * g - 2;
}

Integer class_size(const Partition& alpha) {
    Integer den = 1;
    for (int p : alpha.parts()) den *= p;
    den *= alpha.aut_order();
    return factorial(alpha.degree()) / den;
}

Integer aut_order(const ZeroPaddedPartition& beta) {
    Integer a = 1;
    const auto& p = beta.parts();
    for (size_t i = 0; i < p.size();) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        a *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return a;
}

namespace {

// Partitions of exactly d with parts <= max_part, largest-first lex order.
void gen_partitions(int d, int max_part, std::vector<int>& stack,
                    const std::function<void(const std::vector<int>&)>& emit) {
    if (d == 0) {
        emit(stack);
        return;
    }
    for (int p = std::min(d, max_part); p >= 1; --p) {
        stack.push_back(p);
        gen_partitions(d - p, p, stack, emit);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d_max, const PartitionConstraints& c) {
    if (d_max < 0) throw Error("enumerate_partitions: d_max must be >= 0");
    std::vector<Partition> out;
    const int want_exact = c.exact_parts.value_or(-1);
    for (int d = 0; d <= d_max; ++d) {
        std::vector<int> stack;
        gen_partitions(d, c.max_part.value_or(d), stack, [&](const std::vector<int>& parts) {
            const int n = static_cast<int>(parts.size());
            if (want_exact >= 0 && n != want_exact) return;
            if (c.max_parts && n > *c.max_parts) return;
            out.push_back(Partition(parts));
        });
    }
    return out;
}

size_t PartitionTable::VecHash::operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

PartitionTable::PartitionTable(int d_max) : d_max_(d_max) {
    all_ = enumerate_partitions(d_max);
    index_.reserve(all_.size() * 2);
    for (int i = 0; i < static_cast<int>(all_.size()); ++i) {
        index_.emplace(all_[i].parts(), i);
    }
}

int PartitionTable::id_of(const std::vector<int>& sorted_desc_parts) const {
    auto it = index_.find(sorted_desc_parts);
    return it == index_.end() ? -1 : it->second;
}

}  // namespace hodge
