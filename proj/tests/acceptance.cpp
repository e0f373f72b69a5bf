// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "a3res/analysis.hpp"
#include "a3res/bott.hpp"
#include "a3res/desing.hpp"
#include "a3res/lr.hpp"
#include "a3res/resolution.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace a3res;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void report(const char* id, const char* what, double budget_s, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& ex) {
        out = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (budget_s > 0 && secs > budget_s) {
        out.ok = false;
        out.detail += (out.detail.empty() ? "" : "; ") + std::string("over the time budget");
    }
    if (!out.ok) ++failures;
    std::printf("%s %s %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, what, secs,
                out.detail.empty() ? "" : ": ", out.detail.c_str());
    std::fflush(stdout);
}

void for_each_mult(int max, const std::function<void(const Multiplicities&)>& f) {
    std::array<int, 6> v{};
    while (true) {
        f(Multiplicities::from_array(v));
        int k = 5;
        while (k >= 0 && v[static_cast<std::size_t>(k)] == max) v[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) return;
        ++v[static_cast<std::size_t>(k)];
    }
}

using Row = std::tuple<int, SchurTriple>;

std::multiset<Row> rows_of(const BettiTable& tbl) {
    std::multiset<Row> out;
    for (const auto& e : tbl.entries)
        for (std::uint64_t k = 0; k < e.mult; ++k) out.insert({e.i, e.triple});
    return out;
}

// terms of the all-ones case
const std::vector<std::tuple<int, Partition, Partition, Partition>> kAllOnes = {
    {0, {}, {}, {}},
    {1, {1, 1, 1}, {}, {1, 1, 1}},
    {1, {}, {1, 1, 1}, {1, 1, 1}},
    {1, {1, 1}, {1, 1}, {1, 1, 1, 1}},
    {2, {2, 1, 1}, {}, {1, 1, 1, 1}},
    {2, {}, {2, 1, 1}, {1, 1, 1, 1}},
    {2, {1, 1, 1}, {1, 1}, {2, 1, 1, 1}},
    {2, {1, 1}, {1, 1, 1}, {2, 1, 1, 1}},
    {2, {1, 1, 1}, {1, 1, 1}, {2, 2, 2}},
    {3, {2, 1, 1}, {1, 1, 1}, {2, 2, 2, 1}},
    {3, {1, 1, 1}, {2, 1, 1}, {2, 2, 2, 1}},
    {3, {1, 1}, {2, 2, 2}, {2, 2, 2, 2}},
    {3, {2, 2, 2}, {1, 1}, {2, 2, 2, 2}},
    {3, {1, 1, 1}, {1, 1, 1}, {3, 1, 1, 1}},
    {4, {2, 1, 1}, {2, 1, 1}, {2, 2, 2, 2}},
    {4, {2, 2, 2}, {1, 1, 1}, {3, 2, 2, 2}},
    {4, {1, 1, 1}, {2, 2, 2}, {3, 2, 2, 2}},
    {5, {2, 2, 2}, {2, 2, 2}, {3, 3, 3, 3}},
};

std::string str(const Multiplicities& m) { return "(" + m.to_string() + ")"; }

// Shared by the F_1, normality and bound criteria: one truncated table per vector.
struct SweepResult {
    int f1_mismatch = 0, normality_fail = 0, cases = 0, small_cases = 0;
    std::uint64_t triples = 0, violations = 0;
    std::string first_f1, first_normality, first_violation;
    double seconds = 0;
};

SweepResult run_sweep() {
    SweepResult r;
    const auto start = Clock::now();
    for_each_mult(3, [&](const Multiplicities& m) {
        ResolutionOptions opts;
        opts.max_degree = 1;
        const BettiTable tbl = compute_resolution(reineke_flag(m), opts);
        ++r.cases;
        r.triples += tbl.audit.triples_enumerated;
        r.violations += tbl.audit.violation_count;
        if (tbl.audit.violation_count > 0 && r.first_violation.empty()) r.first_violation = str(m);

        std::vector<WeightedTriple> engine;
        for (const auto& e : tbl.degree(1)) engine.push_back({e.triple, e.mult});
        std::sort(engine.begin(), engine.end());
        if (engine != f1_closed_form(m)) {
            if (r.f1_mismatch++ == 0) r.first_f1 = str(m);
        }

        const auto a = m.to_array();
        if (*std::max_element(a.begin(), a.end()) <= 2) {
            ++r.small_cases;
            const auto f0 = tbl.degree(0);
            const bool ok = tbl.audit.negative_degree == 0 && f0.size() == 1 && f0.front().mult == 1 &&
                            f0.front().triple == SchurTriple{} &&
                            normality_report(tbl).status == NormalityStatus::Normal;
            if (!ok && r.normality_fail++ == 0) r.first_normality = str(m);
        }
    });
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

}  // namespace

int main() {
    report("AC1", "all-ones case end to end", 5.0, [] {
        const BettiTable tbl = compute_resolution(reineke_flag({1, 1, 1, 1, 1, 1}));
        std::multiset<Row> expect;
        for (const auto& [i, w1, w2, w3] : kAllOnes) expect.insert({i, SchurTriple{w1, w2, w3}});
        Outcome o;
        std::ostringstream d;
        if (tbl.xi_dim != 12) o.ok = false, d << "dim xi " << tbl.xi_dim << " ";
        if (tbl.flag_dim != 7) o.ok = false, d << "flag dim " << tbl.flag_dim << " ";
        if (tbl.codim() != 5 || tbl.top_degree() != 5) o.ok = false, d << "length " << tbl.top_degree() << " ";
        if (rows_of(tbl) != expect) o.ok = false, d << "terms differ ";
        if (o.ok) d << "dim xi 12, flag dim 7, codim 5, " << tbl.entries.size() << " terms F_0..F_5 match";
        o.detail = d.str();
        return o;
    });

    report("AC2", "third exterior power, two of twelve summands contribute", 1.0, [] {
        const auto summands = exterior_power_summands(reineke_flag({1, 1, 1, 1, 1, 1}), 3);
        int contributing = 0, in_f1 = 0;
        bool first = false, last = false;
        for (std::size_t k = 0; k < summands.size(); ++k)
            if (summands[k].contribution) {
                ++contributing;
                if (summands[k].contribution->i == 1) ++in_f1;
                const std::vector<RawWeight> w{summands[k].block1, summands[k].block2, summands[k].block3};
                first |= w == std::vector<RawWeight>{{0, 2, 1}, {0, 0, 0}, {0, -1, -2, 0}};
                last |= w == std::vector<RawWeight>{{0, 0, 0}, {0, 2, 1}, {0, -1, -2, 0}};
            }
        Outcome o;
        o.ok = summands.size() == 12 && contributing == 2 && in_f1 == 2 && first && last;
        o.detail = std::to_string(summands.size()) + " summands, " + std::to_string(contributing) +
                   " contribute, " + std::to_string(in_f1) + " in F_1";
        return o;
    });

    SweepResult sweep;
    report("AC3", "F_1 equals the closed form for all 4096 vectors with entries <= 3", 600.0, [&] {
        sweep = run_sweep();
        Outcome o;
        o.ok = sweep.cases == 4096 && sweep.f1_mismatch == 0;
        o.detail = std::to_string(sweep.cases) + " vectors, " + std::to_string(sweep.f1_mismatch) + " mismatches";
        if (!sweep.first_f1.empty()) o.detail += ", first " + sweep.first_f1;
        return o;
    });

    report("AC4", "normality for all 729 vectors with entries <= 2", 0, [&] {
        Outcome o;
        o.ok = sweep.small_cases == 729 && sweep.normality_fail == 0;
        o.detail = std::to_string(sweep.small_cases) + " vectors, " + std::to_string(sweep.normality_fail) +
                   " failures (checked inside the AC3 sweep)";
        if (!sweep.first_normality.empty()) o.detail += ", first " + sweep.first_normality;
        return o;
    });

    // full tables at entries <= 2, shared by the bound, Gorenstein and duality criteria
    std::vector<std::pair<Multiplicities, BettiTable>> full;
    report("AC5", "degree bound D >= u^2+v^2+w^2-uw-vw on every enumerated triple", 0, [&] {
        std::uint64_t triples = 0, violations = 0;
        for_each_mult(2, [&](const Multiplicities& m) {
            full.emplace_back(m, compute_resolution(reineke_flag(m)));
            triples += full.back().second.audit.triples_enumerated;
            violations += full.back().second.audit.violation_count;
            if (violations > 0 && sweep.first_violation.empty()) sweep.first_violation = str(m);
        });
        Outcome o;
        o.ok = sweep.violations == 0 && violations == 0 && sweep.triples > 0;
        o.detail = std::to_string(sweep.triples) + " triples in the truncated sweep, " + std::to_string(triples) +
                   " in full tables for entries <= 2, " + std::to_string(sweep.violations + violations) +
                   " violations";
        if (!sweep.first_violation.empty()) o.detail += ", first " + sweep.first_violation;
        return o;
    });

    report("AC6", "dim xi - flag dim = ad+ae+af+be+cf for entries <= 3", 1.0, [] {
        int bad = 0, cases = 0;
        for_each_mult(3, [&](const Multiplicities& m) {
            ++cases;
            const auto [a, b, c, d, e, f] = m.to_array();
            const XiBundle xi = xi_of(reineke_flag(m));
            if (xi.t - xi.m != a * d + a * e + a * f + b * e + c * f || codim(m) != xi.t - xi.m) ++bad;
        });
        return Outcome{bad == 0, std::to_string(cases) + " vectors, " + std::to_string(bad) + " mismatches"};
    });

    report("AC7", "Gorenstein census for entries <= 2", 0, [&] {
        int gorenstein = 0, in_family = 0, family_applicable = 0, family_fail = 0, family_vanishing = 0;
        int extra = 0, extra_codim0 = 0, inconsistent = 0;
        std::string first_fail;
        for (const auto& [m, tbl] : full) {
            const auto rep = gorenstein_report(m, tbl);
            const bool top_one = rep.top_degree == codim(m) && rep.top_dim == 1;
            if (top_one != rep.gorenstein) ++inconsistent;
            if (rep.gorenstein) ++gorenstein;
            if (rep.family) {
                ++in_family;
                if (top_contributes(m)) {
                    ++family_applicable;
                    if (!rep.gorenstein && family_fail++ == 0) first_fail = str(m);
                } else {
                    ++family_vanishing;
                }
            } else if (rep.gorenstein) {
                ++extra;
                if (codim(m) == 0) ++extra_codim0;
            }
        }
        std::ostringstream d;
        d << gorenstein << " Gorenstein of 729; families: " << in_family << " members, " << family_applicable
          << " with contributing top term, " << family_fail << " exceptions";
        if (family_vanishing) d << ", " << family_vanishing << " with vanishing top term";
        d << "; determinantal cases outside the families: " << extra << " (" << extra_codim0
          << " of codimension 0)";
        if (inconsistent) d << "; " << inconsistent << " reports disagree with dim F_top";
        if (!first_fail.empty()) d << "; first exception " << first_fail;
        return Outcome{family_fail == 0 && inconsistent == 0, d.str()};
    });

    report("AC8", "self-duality for tau-constant vectors with entries <= 2", 0, [&] {
        int cases = 0, bad = 0;
        std::string first;
        for (const auto& [m, tbl] : full)
            if (tau_constant(m)) {
                ++cases;
                if (!self_duality_check(tbl) && bad++ == 0) first = str(m);
            }
        std::string detail = std::to_string(cases) + " vectors, " + std::to_string(bad) + " not self-dual";
        if (!first.empty()) detail += ", first " + first;
        return Outcome{bad == 0 && cases == 27, detail};
    });

    report("AC9", "exchange loop agrees with the rho shift on 10^4 random weights", 0, [] {
        std::mt19937 rng(20261015);
        std::uniform_int_distribution<int> len(1, 10), entry(-8, 8);
        int bad = 0, vanished = 0;
        for (int k = 0; k < 10000; ++k) {
            RawWeight w(static_cast<std::size_t>(len(rng)));
            for (auto& x : w) x = entry(rng);
            const auto a = bott_normalize(w);
            if (a != bott_rho_oracle(w)) ++bad;
            if (!a) ++vanished;
        }
        return Outcome{bad == 0, "10000 weights, " + std::to_string(vanished) + " vanish, " +
                                     std::to_string(bad) + " disagreements"};
    });

    report("AC10", "LR symmetry and rank 3..6 dimension identity on a 4x4 box", 0, [] {
        const auto box = partitions_in_box(4, 4);
        int asym = 0, dim_bad = 0, pairs = 0;
        for (const auto& l : box)
            for (const auto& m : box) {
                ++pairs;
                const auto lm = lr_expand(l, m);
                if (lm != *LRCache::global().get(m, l, -1)) ++asym;
                for (int n = 3; n <= 6; ++n) {
                    BigInt lhs = 0;
                    for (const auto& [nu, c] : lm) lhs += weyl_dimension(nu, n) * c;
                    if (lhs != weyl_dimension(l, n) * weyl_dimension(m, n)) ++dim_bad;
                }
            }
        return Outcome{asym == 0 && dim_bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(asym) +
                                                      " asymmetric, " + std::to_string(dim_bad) +
                                                      " dimension mismatches"};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "PASSED", failures);
    return failures ? 1 : 0;
}
