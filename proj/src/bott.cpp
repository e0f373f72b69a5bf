#include "a3res/bott.hpp"

#include <algorithm>
#include <stdexcept>

namespace a3res {

BottResult bott_normalize(const RawWeight& w) {
    RawWeight a = w;
    int exchanges = 0;
    for (;;) {
        std::size_t i = 0;
        while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
        if (i + 1 >= a.size()) break;
        if (a[i + 1] == a[i] + 1) return std::nullopt;
        const int left = a[i + 1] - 1;
        a[i + 1] = a[i] + 1;
        a[i] = left;
        ++exchanges;
    }
    return BottNormalized{DominantWeight(std::move(a)), exchanges};
}

BottResult bott_rho_oracle(const RawWeight& w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> shifted(w.size());
    for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] + (n - 1 - i);

    int inversions = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int x = shifted[static_cast<std::size_t>(i)];
            const int y = shifted[static_cast<std::size_t>(j)];
            if (x == y) return std::nullopt;
            if (x < y) ++inversions;
        }
    }
    std::sort(shifted.begin(), shifted.end(), std::greater<>());
    for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i)] -= n - 1 - i;
    return BottNormalized{DominantWeight(std::move(shifted)), inversions};
}

BottResult normalize_prefixed(int zeros, const Partition& p) {
    RawWeight w(static_cast<std::size_t>(zeros), 0);
    w.insert(w.end(), p.parts().begin(), p.parts().end());
    return bott_rho_oracle(w);
}

RawWeight negated_reversed_block(const Partition& nu, int length, int zeros) {
    if (static_cast<int>(nu.length()) > length) throw std::invalid_argument("partition longer than block");
    RawWeight w;
    w.reserve(static_cast<std::size_t>(length + zeros));
    for (int k = length - 1; k >= 0; --k) w.push_back(-nu[static_cast<std::size_t>(k)]);
    w.insert(w.end(), static_cast<std::size_t>(zeros), 0);
    return w;
}

std::optional<int> compute_D(const Partition& lambda, const Partition& mu, const Partition& nu,
                             int gamma1, int gamma2, int beta3) {
    if (nu.size() != lambda.size() + mu.size()) throw std::invalid_argument("|nu| must equal |lambda| + |mu|");
    const auto b1 = normalize_prefixed(gamma1, lambda);
    if (!b1) return std::nullopt;
    const auto b2 = normalize_prefixed(gamma2, mu);
    if (!b2) return std::nullopt;
    const auto b3 = bott_rho_oracle(negated_reversed_block(nu, static_cast<int>(nu.length()), beta3));
    if (!b3) return std::nullopt;
    return lambda.size() + mu.size() - (b1->exchanges + b2->exchanges + b3->exchanges);
}

int quadratic_uvw(int u, int v, int w) { return u * u + v * v + w * w - u * w - v * w; }

}  // namespace a3res
