#pragma once

#include <vector>

#include "hodge/partition.hpp"

namespace hodge {

// Bijection on {0,...,d-1}. Composition convention: (a*b)(i) = a(b(i)),
// the right factor acts first.
class Permutation {
public:
    explicit Permutation(int d);  // identity
    explicit Permutation(std::vector<int> images);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    bool is_identity() const;
    bool operator==(const Permutation& o) const { return img_ == o.img_; }

    Partition cycle_type() const;
    int cycle_count() const;  // including fixed points

    // Transposition swapping a and b.
    static Permutation transposition(int d, int a, int b);
    // Cycles laid out on consecutive integers, largest part first:
    // (3,2) -> (0 1 2)(3 4).
    static Permutation canonical_with_type(const Partition& type);

private:
    std::vector<int> img_;
};

}  // namespace hodge
