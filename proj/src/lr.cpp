#include "a3res/lr.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

namespace a3res {

namespace {

// Row-by-row filling. Row r holds count[r][k] copies of letter k, placed after
// lambda_r. Semistandard columns: the letters <= k of row r end no later than
// the letters < k of row r-1. Lattice: reading row r right to left, the k's
// are met before the (k-1)'s of that row.
//
// What rows r, r+1, ... can hold depends only on r, the letters used so far
// and the content of row r-1, so the tallies of the remaining row ends of nu
// are memoized on that state.
class Filler {
public:
    Filler(const Partition& lambda, const Partition& mu, int max_rows)
        : lam_(lambda.parts()), mu_(mu.parts()) {
        const int natural = static_cast<int>(lam_.size() + mu_.size());
        limit_ = max_rows < 0 ? natural : std::min(max_rows, natural);
        total_ = mu.size();
    }

    LRExpansion run() {
        LRExpansion out;
        if (static_cast<int>(lam_.size()) > limit_) return out;
        const std::vector<int> zero(mu_.size(), 0);
        for (const auto& [rows, count] : solve(0, zero, zero)) out.emplace(Partition(rows), count);
        return out;
    }

private:
    using Tally = std::map<std::vector<int>, std::uint64_t>;

    int lam(int r) const { return r < static_cast<int>(lam_.size()) ? lam_[static_cast<std::size_t>(r)] : 0; }

    const Tally& solve(int r, const std::vector<int>& used, const std::vector<int>& prev) {
        std::vector<int> key;
        key.reserve(1 + 2 * used.size());
        key.push_back(r);
        key.insert(key.end(), used.begin(), used.end());
        key.insert(key.end(), prev.begin(), prev.end());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        Tally tally;
        int placed_so_far = 0;
        for (int x : used) placed_so_far += x;
        if (placed_so_far == total_) {
            std::vector<int> tail;
            for (int k = r; k < static_cast<int>(lam_.size()); ++k) tail.push_back(lam(k));
            tally.emplace(std::move(tail), 1);
        } else if (r < limit_) {
            std::vector<int> row(used.size(), 0);
            place(r, 0, lam(r), used, prev, row, tally);
        }
        return memo_.emplace(std::move(key), std::move(tally)).first->second;
    }

    void place(int r, int k, int pos, const std::vector<int>& used, const std::vector<int>& prev,
               std::vector<int>& row, Tally& tally) {
        const int letters = static_cast<int>(mu_.size());
        if (k == letters || k > r) {
            finish_row(r, pos, used, row, tally);
            return;
        }
        const auto kk = static_cast<std::size_t>(k);
        int cap = mu_[kk] - used[kk];
        if (r > 0) {
            int above = lam(r - 1);
            for (std::size_t j = 0; j < kk; ++j) above += prev[j];
            cap = std::min(cap, above - pos);
        }
        if (k > 0) cap = std::min(cap, used[kk - 1] - used[kk]);
        for (int x = 0; x <= cap; ++x) {
            row[kk] = x;
            place(r, k + 1, pos + x, used, prev, row, tally);
        }
        row[kk] = 0;
    }

    void finish_row(int r, int end, const std::vector<int>& used, const std::vector<int>& row, Tally& tally) {
        int placed = 0;
        for (int x : row) placed += x;
        if (placed == 0 && r >= static_cast<int>(lam_.size())) return;  // nothing can sit below an empty row
        std::vector<int> next_used = used;
        for (std::size_t k = 0; k < row.size(); ++k) next_used[k] += row[k];
        const Tally& below = solve(r + 1, next_used, row);
        for (const auto& [rows, count] : below) {
            std::vector<int> nu;
            nu.reserve(rows.size() + 1);
            nu.push_back(end);
            nu.insert(nu.end(), rows.begin(), rows.end());
            tally[std::move(nu)] += count;
        }
    }

    const std::vector<int>& lam_;
    const std::vector<int>& mu_;
    int limit_ = 0;
    int total_ = 0;
    std::map<std::vector<int>, Tally> memo_;
};

}  // namespace

LRExpansion lr_expand_uncached(const Partition& lambda, const Partition& mu, int max_rows) {
    return Filler(lambda, mu, max_rows).run();
}

std::shared_ptr<const LRExpansion> LRCache::get(const Partition& lambda, const Partition& mu, int max_rows) {
    Key key{lambda, mu, max_rows};
    {
        std::shared_lock lock(mutex_);
        if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    auto value = std::make_shared<const LRExpansion>(lr_expand_uncached(lambda, mu, max_rows));
    std::unique_lock lock(mutex_);
    if (table_.size() >= capacity_) table_.clear();
    return table_.try_emplace(std::move(key), std::move(value)).first->second;
}

std::size_t LRCache::size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
}

void LRCache::clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
}

void LRCache::set_capacity(std::size_t keys) {
    std::unique_lock lock(mutex_);
    capacity_ = keys;
}

LRCache& LRCache::global() {
    static LRCache cache;
    return cache;
}

LRExpansion lr_expand(const Partition& lambda, const Partition& mu, int max_rows) {
    return *LRCache::global().get(lambda, mu, max_rows);
}

}  // namespace a3res
