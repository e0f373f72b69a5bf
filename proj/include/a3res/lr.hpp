#pragma once

#include "a3res/partition.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <tuple>

namespace a3res {

/// S_lambda (x) S_mu = sum over nu of c^nu S_nu; only nonzero coefficients stored.
using LRExpansion = std::map<Partition, std::uint64_t>;

/// Littlewood-Richardson coefficients by enumerating skew fillings of nu/lambda
/// with content mu whose reverse row reading word is a lattice word.
/// max_rows < 0 means unbounded; otherwise only nu with at most max_rows parts
/// are produced (the enumeration prunes as soon as a row would exceed it).
LRExpansion lr_expand_uncached(const Partition& lambda, const Partition& mu, int max_rows = -1);

/// Memo for lr_expand. Concurrent lookups share a reader lock; inserts are
/// insert-if-absent, so racing workers computing the same key agree.
class LRCache {
public:
    std::shared_ptr<const LRExpansion> get(const Partition& lambda, const Partition& mu, int max_rows);
    std::size_t size() const;
    void clear();
    /// The table is dropped wholesale once it grows past this many keys.
    void set_capacity(std::size_t keys);

    static LRCache& global();

private:
    using Key = std::tuple<Partition, Partition, int>;
    mutable std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const LRExpansion>> table_;
    std::size_t capacity_ = 1u << 18;
};

/// Cached expansion through LRCache::global().
LRExpansion lr_expand(const Partition& lambda, const Partition& mu, int max_rows = -1);

}  // namespace a3res
