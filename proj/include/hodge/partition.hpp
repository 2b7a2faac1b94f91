#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

// Integer partition: weakly decreasing positive parts. The default value is
// the empty partition of 0. Input is sorted on construction so that equal
// multisets always compare equal and hash the same.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return degree_; }     // d = sum of parts
    int num_parts() const { return static_cast<int>(parts_.size()); }  // n

    // (value, multiplicity) pairs, values descending.
    std::vector<std::pair<int, int>> multiplicities() const;
    Integer aut_order() const;  // prod_j m_j!

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Canonical order: by degree, then lexicographically by parts (largest
    // first), so (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1) within degree 4.
    std::strong_ordering operator<=>(const Partition& o) const;

    std::string to_string() const;  // "(3,1,1)"

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

// Weakly decreasing tuple of fixed length with zero parts allowed; the key
// type for monomial-symmetric-function coefficients and Witten symbols.
class ZeroPaddedPartition {
public:
    ZeroPaddedPartition() = default;
    explicit ZeroPaddedPartition(std::vector<int> parts);  // sorts descending
    static ZeroPaddedPartition padded(const std::vector<int>& parts, int length);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int total() const;

    bool operator==(const ZeroPaddedPartition& o) const { return parts_ == o.parts_; }
    // Graded order (total ascending, then lex descending parts) — matches the
    // display order used for table rows when iterated in reverse.
    std::strong_ordering operator<=>(const ZeroPaddedPartition& o) const;

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

// r = d + n + 2g - 2; negative means "no such cover".
int transposition_count(int g, const Partition& alpha);

// |C_alpha| = d! / (prod_i alpha_i * prod_j m_j!)
Integer class_size(const Partition& alpha);

// |Aut beta| = prod over distinct values (including 0) of multiplicity!
Integer aut_order(const ZeroPaddedPartition& beta);

struct PartitionConstraints {
    std::optional<int> max_parts;
    std::optional<int> exact_parts;
    std::optional<int> max_part;
};

// All partitions of every d <= d_max meeting the constraints, in canonical
// order (degree ascending, then largest-part-first lexicographic). The empty
// partition of 0 is included when exact_parts is unset or 0.
std::vector<Partition> enumerate_partitions(int d_max, const PartitionConstraints& c = {});

// All partitions registered once, indexable both ways. Used by the join-cut
// solver to avoid keying maps on part vectors in inner loops.
class PartitionTable {
public:
    explicit PartitionTable(int d_max);

    int size() const { return static_cast<int>(all_.size()); }
    int d_max() const { return d_max_; }
    const Partition& operator[](int id) const { return all_[id]; }
    // -1 when the (descending-sorted) part vector exceeds d_max.
    int id_of(const std::vector<int>& sorted_desc_parts) const;
    int id_of(const Partition& p) const { return id_of(p.parts()); }

private:
    int d_max_;
    std::vector<Partition> all_;
    struct VecHash {
        size_t operator()(const std::vector<int>& v) const;
    };
    std::unordered_map<std::vector<int>, int, VecHash> index_;
};

}  // namespace hodge
