#include "a3res/lr.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <thread>

using namespace a3res;

namespace {

// Cell-by-cell filler: tries every semistandard filling of nu/lambda with
// content mu and keeps those whose right-to-left, top-to-bottom reading word
// is a lattice word. Independent of the row-count enumeration in the library.
std::uint64_t lr_brute(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    for (std::size_t i = 0; i < nu.length(); ++i)
        if (lambda[i] > nu[i]) return 0;
    if (lambda.length() > nu.length()) return 0;

    std::vector<std::pair<int, int>> cells;  // reading order
    for (std::size_t i = 0; i < nu.length(); ++i)
        for (int j = nu[i] - 1; j >= lambda[i]; --j) cells.emplace_back(static_cast<int>(i), j);

    const int letters = static_cast<int>(mu.length());
    std::vector<std::vector<int>> grid(nu.length(), std::vector<int>(static_cast<std::size_t>(nu[0]), -1));
    std::vector<int> used(static_cast<std::size_t>(letters), 0);
    std::uint64_t count = 0;

    std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[k];
        for (int x = 0; x < letters; ++x) {
            if (used[static_cast<std::size_t>(x)] == mu[static_cast<std::size_t>(x)]) continue;
            if (x > 0 && used[static_cast<std::size_t>(x)] + 1 > used[static_cast<std::size_t>(x - 1)]) continue;
            // right neighbour already filled (reading right to left): weakly increasing rows
            if (c + 1 < nu[static_cast<std::size_t>(r)] && grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)] >= 0 &&
                grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)] < x)
                continue;
            // strictly increasing columns against the cell above
            if (r > 0 && c >= lambda[static_cast<std::size_t>(r - 1)] &&
                grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= x)
                continue;
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = x;
            ++used[static_cast<std::size_t>(x)];
            go(k + 1);
            --used[static_cast<std::size_t>(x)];
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = -1;
        }
    };
    go(0);
    return count;
}

std::vector<Partition> partitions_of(int n, int max_part) {
    std::vector<Partition> out;
    std::function<void(int, int, std::vector<int>&)> rec = [&](int left, int cap, std::vector<int>& cur) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int x = std::min(left, cap); x >= 1; --x) {
            cur.push_back(x);
            rec(left - x, x, cur);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    rec(n, max_part, cur);
    return out;
}

}  // namespace

TEST_CASE("lr_expand examples") {
    CHECK(lr_expand(Partition{1}, Partition{1}) == LRExpansion{{Partition{2}, 1}, {Partition{1, 1}, 1}});
    CHECK(lr_expand(Partition{}, Partition{2, 1}) == LRExpansion{{Partition{2, 1}, 1}});
    CHECK(lr_expand(Partition{2, 1}, Partition{2, 1}).at(Partition{3, 2, 1}) == 2);
    CHECK(lr_expand(Partition{}, Partition{}) == LRExpansion{{Partition{}, 1}});
}

TEST_CASE("row bound drops long nu") {
    const auto full = lr_expand(Partition{1}, Partition{1, 1});
    const auto cut = lr_expand(Partition{1}, Partition{1, 1}, 2);
    CHECK(full.size() == 2);
    CHECK(cut == LRExpansion{{Partition{2, 1}, 1}});
    CHECK(lr_expand(Partition{1, 1, 1}, Partition{1}, 2).empty());
}

TEST_CASE("lr_expand matches the brute-force filler on a 3x3 box") {
    for (const auto& l : partitions_in_box(3, 3))
        for (const auto& m : partitions_in_box(3, 3)) {
            const auto exp = lr_expand_uncached(l, m);
            for (const auto& nu : partitions_of(l.size() + m.size(), l[0] + m[0])) {
                if (nu.length() > l.length() + m.length()) continue;
                const auto it = exp.find(nu);
                const std::uint64_t got = it == exp.end() ? 0 : it->second;
                REQUIRE_MESSAGE(got == lr_brute(l, m, nu), l.to_string() << " x " << m.to_string() << " -> " << nu.to_string());
            }
        }
}

static void check_pair(const Partition& a, const Partition& b) {
    const auto ab = lr_expand_uncached(a, b);
    REQUIRE(ab == lr_expand_uncached(b, a));
    for (const auto& [nu, c] : ab) {
        REQUIRE(nu.size() == a.size() + b.size());
        REQUIRE(c > 0);
        // nu contains both factors and is dominated by their row sum
        int prefix_nu = 0, prefix_sum = 0;
        for (std::size_t k = 0; k < nu.length(); ++k) {
            REQUIRE(nu[k] >= std::max(a[k], b[k]));
            prefix_nu += nu[k];
            prefix_sum += a[k] + b[k];
            REQUIRE(prefix_nu <= prefix_sum);
        }
    }
}

TEST_CASE("expansion sizes are consistent and symmetric on a 4x4 box") {
    const auto box = partitions_in_box(4, 4);
    for (std::size_t i = 0; i < box.size(); ++i)
        for (std::size_t j = i; j < box.size(); ++j) check_pair(box[i], box[j]);
}

TEST_CASE("expansion symmetry on random pairs from a 5x5 box") {
    const auto box = partitions_in_box(5, 5);
    std::mt19937 rng(515);
    std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
    for (int n = 0; n < 600; ++n) check_pair(box[pick(rng)], box[pick(rng)]);
}

TEST_CASE("dimension identity on a 4x4 box, ranks 3 to 6") {
    const auto box = partitions_in_box(4, 4);
    for (const auto& l : box)
        for (const auto& m : box) {
            const auto exp = lr_expand(l, m);
            for (int n = 3; n <= 6; ++n) {
                BigInt lhs = 0;
                for (const auto& [nu, c] : exp) lhs += weyl_dimension(nu, n) * c;
                REQUIRE(lhs == weyl_dimension(l, n) * weyl_dimension(m, n));
            }
        }
}

TEST_CASE("cache is shared safely across threads") {
    LRCache cache;
    const auto box = partitions_in_box(3, 3);
    std::vector<std::jthread> pool;
    std::vector<int> mismatches(4, 0);
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] {
            for (const auto& l : box)
                for (const auto& m : box)
                    if (*cache.get(l, m, 4) != lr_expand_uncached(l, m, 4)) ++mismatches[static_cast<std::size_t>(t)];
        });
    pool.clear();
    CHECK(mismatches == std::vector<int>(4, 0));
    CHECK(cache.size() == box.size() * box.size());
    cache.set_capacity(3);
    cache.get(Partition{5}, Partition{5}, -1);
    CHECK(cache.size() == 1);
}
