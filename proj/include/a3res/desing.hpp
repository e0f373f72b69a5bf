#pragma once

#include "a3res/bott.hpp"
#include "a3res/quiver.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace a3res {

struct DirectedPartition {
    std::vector<Indecomposable> first;
    std::vector<Indecomposable> second;
};

struct DirectedCheck {
    bool valid = false;
    std::string violation;  // empty when valid
};

/// Ext^1(x, y) = 0 inside each part; Hom(y, x) = 0 = Ext^1(x, y) for x in
/// the first part and y in the second. Reports the first failing pair.
DirectedCheck validate_directed(const DirectedPartition& p);

/// Projectives first, injectives second: the ordering that passes
/// validate_directed and yields the flag below.
DirectedPartition reineke_partition();

/// 1-step flag: subspace dimensions beta and quotient dimensions gamma at
/// (source1, source2, sink).
struct FlagData {
    std::array<int, 3> beta{0, 0, 0};
    std::array<int, 3> gamma{0, 0, 0};

    std::array<int, 3> alpha() const { return {beta[0] + gamma[0], beta[1] + gamma[1], beta[2] + gamma[2]}; }
    /// The multiplicities whose Reineke flag this is, if any.
    std::optional<Multiplicities> as_reineke() const;
    std::string to_string() const;

    bool operator==(const FlagData&) const = default;
};

/// beta = (d+f, d+e, d), gamma = (b, c, a+b+c).
FlagData reineke_flag(const Multiplicities& m);

/// xi = R1 (x) Q3* + R2 (x) Q3*.
struct XiBundle {
    int factor1_dim = 0;  // beta1 * gamma3
    int factor2_dim = 0;  // beta2 * gamma3
    int t = 0;            // dim xi
    int m = 0;            // dim of the flag variety, sum beta_v gamma_v
};

XiBundle xi_of(const FlagData& f);

/// Weight blocks of the top exterior power of xi:
/// (0^g1, g3^b1), (0^g2, g3^b2), ((-(b1+b2))^g3, 0^b3). Empty when dim xi = 0.
std::array<RawWeight, 3> top_weight(const FlagData& f);

/// a = d, b = e, c = f.
bool tau_constant(const Multiplicities& m);
/// <e_x, gamma> = -<beta, e_x> at every vertex x.
bool tau_constant_euler(const Multiplicities& m);

/// Case table: b != 0 needs a+c >= d+f, c != 0 needs a+b >= d+e,
/// d != 0 needs d+e+f >= a+b+c.
bool top_contributes(const Multiplicities& m);

}  // namespace a3res
