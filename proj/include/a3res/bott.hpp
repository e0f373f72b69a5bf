#pragma once

#include "a3res/partition.hpp"

#include <optional>
#include <vector>

namespace a3res {

/// Arbitrary integer weight of GL(n), n = size().
using RawWeight = std::vector<int>;

struct BottNormalized {
    DominantWeight weight;
    int exchanges = 0;

    bool operator==(const BottNormalized&) const = default;
};

/// Empty optional means the cohomology vanishes.
using BottResult = std::optional<BottNormalized>;

/// Literal exchange loop: repeatedly take the leftmost ascent
/// a_i < a_{i+1}; vanish if a_{i+1} = a_i + 1, otherwise replace the pair by
/// (a_{i+1} - 1, a_i + 1).
BottResult bott_normalize(const RawWeight& w);

/// Same contract via w + rho: vanish on a repeated entry, else sort
/// descending, count inversions, subtract rho.
BottResult bott_rho_oracle(const RawWeight& w);

/// Bott on (0^zeros, p).
BottResult normalize_prefixed(int zeros, const Partition& p);

/// (-nu_last, ..., -nu_1, 0^zeros), the sink block of a Cauchy summand
/// written as a GL weight on V3*-coordinates.
RawWeight negated_reversed_block(const Partition& nu, int length, int zeros);

/// |lambda| + |mu| - (N1 + N2 + N3) for the three blocks (0^g1, lambda),
/// (0^g2, mu), (-nu reversed, 0^b3); empty when a block vanishes.
/// Throws std::invalid_argument when |nu| != |lambda| + |mu|.
std::optional<int> compute_D(const Partition& lambda, const Partition& mu, const Partition& nu,
                             int gamma1, int gamma2, int beta3);

/// u^2 + v^2 + w^2 - uw - vw, the Euler form of A3 on (u, v, w) placed at
/// (source1, source2, sink).
int quadratic_uvw(int u, int v, int w);

}  // namespace a3res
