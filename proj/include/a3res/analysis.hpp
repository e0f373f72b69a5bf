#pragma once

#include "a3res/resolution.hpp"

#include <optional>
#include <string>
#include <vector>

namespace a3res {

struct WeightedTriple {
    SchurTriple triple;
    std::uint64_t mult = 1;

    auto operator<=>(const WeightedTriple&) const = default;
    bool operator==(const WeightedTriple&) const = default;
};

/// First syzygies from the ranks: Lambda^{p+1}V1 (x) Lambda^{p+1}V3*,
/// Lambda^{q+1}V2 (x) Lambda^{q+1}V3*, and Lambda^i V1 (x) Lambda^j V2 (x)
/// Lambda^{r+1}V3* for b < i <= b+d, i + j = r+1. Terms that are zero at
/// the ambient ranks are dropped. Sorted.
std::vector<WeightedTriple> f1_closed_form(const Multiplicities& m);

struct MinorFamily {
    std::string matrix;  // "phi", "psi" or "phi|psi"
    int size = 0;        // minor order
    int cols_phi = 0;    // columns taken from phi
    int cols_psi = 0;    // columns taken from psi
    BigInt count;        // number of minors = rank of the matching F_1 summand
};

struct GeneratorSet {
    std::vector<MinorFamily> families;
    BigInt total() const;
};

GeneratorSet minimal_generators(const Multiplicities& m);

enum class NormalityStatus { Normal, Violation, NotApplicable };

struct NormalityReport {
    NormalityStatus status = NormalityStatus::NotApplicable;
    std::string message;
};

/// F_0 must be exactly the trivial module and nothing may sit in negative
/// degree; bound violations from the audit are reported too.
NormalityReport normality_report(const BettiTable& tbl);

struct GorensteinReport {
    bool gorenstein = false;
    int top_degree = -1;
    BigInt top_dim;
    std::optional<int> family;  // 1..5 when one of the five rank families matches
    std::string reason;
};

/// Index (1..5) of the first family the multiplicities satisfy:
/// a=d,b=e,c=f | a=d+e,b=0,c=f | a=d+e,b=f=0 | a=d+f,c=0,b=e | a=d+f,c=e=0.
std::optional<int> gorenstein_family(const Multiplicities& m);
std::string gorenstein_family_text(int family);

GorensteinReport gorenstein_report(const Multiplicities& m, const BettiTable& tbl);
GorensteinReport gorenstein_report(const Multiplicities& m, int jobs = 1);

/// F_{codim-i} is the factor-wise dual of F_i twisted by the one-dimensional
/// top term; false when the top term is not one-dimensional.
bool self_duality_check(const BettiTable& tbl);

/// Closed-form top term by nonvanishing pattern of (b, c, d). Throws
/// std::domain_error when top_contributes(m) is false.
SchurTriple f_top_closed_form(const Multiplicities& m);

}  // namespace a3res
