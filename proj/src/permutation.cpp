#include "hodge/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace hodge {

Permutation::Permutation(int d) : img_(d) {
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= degree() || seen[v]) throw Error("not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (degree() != o.degree()) throw Error("degree mismatch");
    std::vector<int> out(img_.size());
    for (int i = 0; i < degree(); ++i) out[i] = img_[o.img_[i]];
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<int> out(img_.size());
    for (int i = 0; i < degree(); ++i) out[img_[i]] = i;
    return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i) {
        if (img_[i] != i) return false;
    }
    return true;
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lengths;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(lengths);
}

int Permutation::cycle_count() const {
    std::vector<bool> seen(img_.size(), false);
    int count = 0;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        ++count;
        for (int j = i; !seen[j]; j = img_[j]) seen[j] = true;
    }
    return count;
}

Permutation Permutation::transposition(int d, int a, int b) {
    Permutation t(d);
    std::swap(t.img_[a], t.img_[b]);
    return t;
}

Permutation Permutation::canonical_with_type(const Partition& type) {
    std::vector<int> img(type.degree());
    int base = 0;
    for (int len : type.parts()) {
        for (int i = 0; i < len; ++i) img[base + i] = base + (i + 1) % len;
        base += len;
    }
    return Permutation(std::move(img));
}

}  // namespace hodge
