#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace a3res {

using BigInt = boost::multiprecision::cpp_int;

/// Integer partition: nonincreasing, nonnegative, trailing zeros stripped.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int size() const;

    /// Part k (zero-based); zero past the end.
    int operator[](std::size_t k) const { return k < parts_.size() ? parts_[k] : 0; }

    /// (c^r) rectangle.
    static Partition rectangle(int cols, int rows);

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Highest weight of GL(n): nonincreasing integers of explicit length n.
class DominantWeight {
public:
    DominantWeight() = default;
    explicit DominantWeight(std::vector<int> entries);

    /// Zero-pads a partition to rank n; throws if it has more than n parts.
    static DominantWeight from_partition(const Partition& p, int rank);

    const std::vector<int>& entries() const { return entries_; }
    int rank() const { return static_cast<int>(entries_.size()); }
    int operator[](std::size_t k) const { return entries_[k]; }

    bool is_partition() const { return entries_.empty() || entries_.back() >= 0; }
    /// Throws std::domain_error if some entry is negative.
    Partition to_partition() const;

    std::string to_string() const;

    auto operator<=>(const DominantWeight&) const = default;
    bool operator==(const DominantWeight&) const = default;

private:
    std::vector<int> entries_;
};

Partition conjugate(const Partition& p);

bool fits_in_box(const Partition& p, int rows, int cols);

/// Every partition inside the rows x cols box, colexicographic order
/// (last part varies slowest, smaller first).
std::vector<Partition> partitions_in_box(int rows, int cols);

/// Dimension of the irreducible GL(n) module of highest weight w.
BigInt weyl_dimension(const DominantWeight& w);
/// Partition form; zero when p has more than n parts.
BigInt weyl_dimension(const Partition& p, int n);

/// Highest weight of the contragredient: negate and reverse.
DominantWeight dual_weight(const DominantWeight& w);
DominantWeight dual_weight(const Partition& p, int n);

}  // namespace a3res
