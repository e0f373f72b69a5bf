#include "a3res/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace a3res {

namespace {

std::string join_parts(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(v[k]);
    }
    return out + ")";
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 0) throw std::invalid_argument("partition has a negative part");
        if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
            throw std::invalid_argument("partition parts must be nonincreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::rectangle(int cols, int rows) {
    if (cols <= 0 || rows <= 0) return {};
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

std::string Partition::to_string() const { return join_parts(parts_); }

DominantWeight::DominantWeight(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t k = 0; k + 1 < entries_.size(); ++k)
        if (entries_[k] < entries_[k + 1])
            throw std::invalid_argument("dominant weight must be nonincreasing");
}

DominantWeight DominantWeight::from_partition(const Partition& p, int rank) {
    if (static_cast<int>(p.length()) > rank)
        throw std::invalid_argument("partition " + p.to_string() + " has more than " +
                                    std::to_string(rank) + " parts");
    std::vector<int> e(static_cast<std::size_t>(rank), 0);
    std::copy(p.parts().begin(), p.parts().end(), e.begin());
    return DominantWeight(std::move(e));
}

Partition DominantWeight::to_partition() const {
    if (!is_partition()) throw std::domain_error("weight " + to_string() + " is not a partition");
    return Partition(entries_);
}

std::string DominantWeight::to_string() const { return join_parts(entries_); }

Partition conjugate(const Partition& p) {
    std::vector<int> out(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
    for (int part : p.parts())
        for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
}

bool fits_in_box(const Partition& p, int rows, int cols) {
    return static_cast<int>(p.length()) <= rows && (p.empty() || p[0] <= cols);
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    if (rows < 0 || cols < 0) return out;
    std::vector<int> cur(static_cast<std::size_t>(rows), 0);
    auto fill = [&](auto&& self, int row, int cap) -> void {
        if (row == rows) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            cur[static_cast<std::size_t>(row)] = v;
            self(self, row + 1, v);
        }
        cur[static_cast<std::size_t>(row)] = 0;
    };
    fill(fill, 0, cols);
    std::sort(out.begin(), out.end(), [rows](const Partition& x, const Partition& y) {
        for (int k = rows - 1; k >= 0; --k) {
            auto kk = static_cast<std::size_t>(k);
            if (x[kk] != y[kk]) return x[kk] < y[kk];
        }
        return false;
    });
    return out;
}

BigInt weyl_dimension(const DominantWeight& w) {
    const int n = w.rank();
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(j)] + j - i;
            den *= j - i;
        }
    }
    return num / den;
}

BigInt weyl_dimension(const Partition& p, int n) {
    if (static_cast<int>(p.length()) > n) return 0;
    return weyl_dimension(DominantWeight::from_partition(p, n));
}

DominantWeight dual_weight(const DominantWeight& w) {
    std::vector<int> e(w.entries().rbegin(), w.entries().rend());
    for (int& x : e) x = -x;
    return DominantWeight(std::move(e));
}

DominantWeight dual_weight(const Partition& p, int n) {
    return dual_weight(DominantWeight::from_partition(p, n));
}

}  // namespace a3res
