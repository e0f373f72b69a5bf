#pragma once

#include "a3res/desing.hpp"
#include "a3res/lr.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace a3res {

/// S_{w1}V1 (x) S_{w2}V2 (x) S_{w3}V3*.
struct SchurTriple {
    Partition w1, w2, w3;

    std::string to_string() const;
    auto operator<=>(const SchurTriple&) const = default;
    bool operator==(const SchurTriple&) const = default;
};

struct BettiEntry {
    int i = 0;  // homological degree
    int t = 0;  // exterior power of xi
    int N = 0;  // Bott exchanges, i = t - N
    SchurTriple triple;
    std::uint64_t mult = 0;
    BigInt dim;  // mult times the Weyl dimensions at the ambient ranks

    int shift_standard() const { return t; }
    int shift_example() const { return t + N; }
};

/// A nonvanishing triple whose D fell below u^2+v^2+w^2-uw-vw.
struct BoundViolation {
    Partition lambda, mu, nu;
    int D = 0;
    int u = 0, v = 0, w = 0;
};

struct EngineAudit {
    std::uint64_t pairs_visited = 0;      // (lambda, mu) with both outer blocks nonvanishing
    std::uint64_t pairs_pruned = 0;       // skipped by the degree bound
    std::uint64_t triples_enumerated = 0; // (lambda, mu, nu) reaching the sink block
    std::uint64_t triples_nonvanishing = 0;
    std::uint64_t negative_degree = 0;
    std::vector<BoundViolation> violations;  // first few only
    std::uint64_t violation_count = 0;
};

struct ResolutionOptions {
    /// Only collect entries with i <= max_degree; pairs whose degree lower
    /// bound exceeds it are skipped before the LR expansion.
    std::optional<int> max_degree;
    int jobs = 1;
};

struct BettiTable {
    FlagData flag;
    std::optional<Multiplicities> mult;  // set for Reineke flags
    int xi_dim = 0;
    int flag_dim = 0;
    std::optional<int> max_degree;  // truncation, if any
    std::vector<BettiEntry> entries;  // sorted by (i, t, triple)
    EngineAudit audit;

    int codim() const { return xi_dim - flag_dim; }
    bool is_reineke() const { return mult.has_value(); }
    std::vector<BettiEntry> degree(int i) const;
    /// Largest i with an entry; -1 for an empty table.
    int top_degree() const;
    BigInt total_dim(int i) const;
};

BettiTable compute_resolution(const FlagData& f, const ResolutionOptions& opts = {});

/// One summand S_lambda R1 (x) S_mu R2 (x) S_nu Q3* of the exterior power,
/// with the raw Bott blocks and, if nonvanishing, its contribution.
struct CauchySummand {
    Partition lambda, mu, nu;
    std::uint64_t coefficient = 0;
    RawWeight block1, block2, block3;
    std::optional<BettiEntry> contribution;
};

/// Every summand of the t-th exterior power of xi, enumeration order.
std::vector<CauchySummand> exterior_power_summands(const FlagData& f, int t);

/// Bott-normalized top exterior power as a triple, placed at i = t - N.
std::optional<BettiEntry> top_term(const FlagData& f);

}  // namespace a3res
