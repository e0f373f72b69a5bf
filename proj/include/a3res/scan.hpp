#pragma once

#include "a3res/analysis.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace a3res {

enum ScanCheck : unsigned {
    kCheckBound = 1u << 0,      // D >= <(u,v,w),(u,v,w)> on every enumerated triple
    kCheckNormality = 1u << 1,  // F_0 trivial, nothing in negative degree
    kCheckGorenstein = 1u << 2, // the five families are Gorenstein
    kCheckDuality = 1u << 3,    // self-dual when tau-constant or Gorenstein
    kCheckCodim = 1u << 4,      // dim xi - flag dim = codim, both tau tests agree
    kCheckF1 = 1u << 5,         // engine F_1 equals the closed form
    kCheckTop = 1u << 6,        // case tables against the normalized top weight
    kCheckAll = (1u << 7) - 1,
};

/// "all" or a comma list of bound,normality,gorenstein,duality,codim,f1,top.
/// Throws std::invalid_argument on an unknown name.
unsigned parse_checks(const std::string& list);

struct ScanRecord {
    Multiplicities mult;
    int codim = 0;
    int xi_dim = 0;
    std::uint64_t triples = 0;  // enumerated (lambda, mu, nu)
    std::optional<GorensteinReport> gorenstein;
    std::optional<bool> self_dual;
    std::vector<std::string> failures;
};

/// Checks for one multiplicity vector. Only F_1, normality and bound checks
/// selected: the table is truncated at degree 1, otherwise computed in full.
ScanRecord scan_one(const Multiplicities& m, unsigned checks, int jobs = 1);

/// Every (a, ..., f) in [0, max_mult]^6, lexicographic, one record each.
void scan(int max_mult, unsigned checks, int jobs, const std::function<void(const ScanRecord&)>& sink);

}  // namespace a3res
