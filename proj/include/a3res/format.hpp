#pragma once

#include "a3res/analysis.hpp"
#include "a3res/scan.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace a3res {

enum class ShiftConvention { Standard, Example };

/// Unset fields mean "not applicable" and serialize as null.
struct Verdicts {
    std::optional<bool> normal;
    std::optional<bool> gorenstein;
    std::optional<bool> self_dual;
};

/// Normality whenever applicable; Gorenstein and self-duality only for
/// untruncated tables.
Verdicts verdicts_for(const BettiTable& tbl);

/// S_(2,1)V1, with columns as Λ^kV1; empty for the trivial partition.
std::string schur_factor(const Partition& p, const std::string& space);

/// Factors of one summand joined by ⊗, ending with the twisted A(-k).
std::string render_entry(const BettiEntry& e, ShiftConvention shift);

/// One line per homological degree, summands joined by ⊕.
std::string render_text(const BettiTable& tbl, ShiftConvention shift, const Verdicts& v);

nlohmann::json table_json(const BettiTable& tbl, const Verdicts& v);

/// Betti diagram: rows i, columns internal degree, total rank per cell.
std::string render_csv(const BettiTable& tbl, ShiftConvention shift);

std::string render_generators(const Multiplicities& m, const GeneratorSet& g);
nlohmann::json generators_json(const Multiplicities& m, const GeneratorSet& g);

nlohmann::json scan_record_json(const ScanRecord& r);
std::string render_scan_record(const ScanRecord& r);

/// Number if it fits in 64 bits, decimal string otherwise.
nlohmann::json big_json(const BigInt& x);

}  // namespace a3res
