#include "a3res/scan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace a3res {

unsigned parse_checks(const std::string& list) {
    static const std::pair<const char*, unsigned> names[] = {
        {"bound", kCheckBound}, {"normality", kCheckNormality}, {"gorenstein", kCheckGorenstein},
        {"duality", kCheckDuality}, {"codim", kCheckCodim}, {"f1", kCheckF1}, {"top", kCheckTop}, {"all", kCheckAll}};
    unsigned out = 0;
    std::istringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        bool found = false;
        for (const auto& [name, bit] : names)
            if (item == name) {
                out |= bit;
                found = true;
            }
        if (!found) throw std::invalid_argument("unknown check '" + item + "'");
    }
    if (out == 0) throw std::invalid_argument("no checks selected");
    return out;
}

namespace {

std::string describe(const std::vector<WeightedTriple>& v) {
    std::string s = "{";
    for (const auto& w : v) s += " " + w.triple.to_string() + "x" + std::to_string(w.mult);
    return s + " }";
}

}  // namespace

ScanRecord scan_one(const Multiplicities& m, unsigned checks, int jobs) {
    ScanRecord rec;
    rec.mult = m;
    rec.codim = codim(m);
    const FlagData flag = reineke_flag(m);
    const XiBundle xi = xi_of(flag);
    rec.xi_dim = xi.t;
    auto fail = [&](std::string what) { rec.failures.push_back(std::move(what)); };

    if (checks & kCheckCodim) {
        if (xi.t - xi.m != rec.codim)
            fail("codim: dim xi - flag dim = " + std::to_string(xi.t - xi.m) + " but codim = " + std::to_string(rec.codim));
        if (tau_constant(m) != tau_constant_euler(m)) fail("codim: tau tests disagree");
    }

    const unsigned full_checks = kCheckGorenstein | kCheckDuality | kCheckTop;
    if (!(checks & (full_checks | kCheckNormality | kCheckF1 | kCheckBound))) return rec;

    ResolutionOptions opts;
    opts.jobs = jobs;
    // normality only looks at degrees <= 0, F_1 at degree 1
    if (!(checks & full_checks)) opts.max_degree = (checks & kCheckF1) ? 1 : 0;
    const BettiTable tbl = compute_resolution(flag, opts);
    rec.triples = tbl.audit.triples_enumerated;

    if ((checks & kCheckBound) && tbl.audit.violation_count > 0) {
        const auto& v = tbl.audit.violations.front();
        fail("bound: " + std::to_string(tbl.audit.violation_count) + " violations, first at lambda=" +
             v.lambda.to_string() + " mu=" + v.mu.to_string() + " nu=" + v.nu.to_string());
    }

    if (checks & kCheckF1) {
        std::vector<WeightedTriple> engine;
        for (const auto& e : tbl.degree(1)) engine.push_back({e.triple, e.mult});
        std::sort(engine.begin(), engine.end());
        const auto closed = f1_closed_form(m);
        if (engine != closed) fail("f1: engine " + describe(engine) + " closed form " + describe(closed));
    }

    if (checks & kCheckNormality) {
        const auto rep = normality_report(tbl);
        if (rep.status != NormalityStatus::Normal) fail("normality: " + rep.message);
        if (!tbl.max_degree && tbl.top_degree() > rec.codim) fail("normality: terms beyond the codimension");
    }

    if (checks & (kCheckGorenstein | kCheckDuality)) {
        rec.gorenstein = gorenstein_report(m, tbl);
        rec.self_dual = self_duality_check(tbl);
        if ((checks & kCheckGorenstein) && rec.gorenstein->family && !rec.gorenstein->gorenstein)
            fail("gorenstein: " + rec.gorenstein->reason);
        if ((checks & kCheckDuality) && (tau_constant(m) || rec.gorenstein->gorenstein) && !*rec.self_dual)
            fail("duality: resolution is not self-dual");
    }

    if (checks & kCheckTop) {
        const auto top = top_term(flag);
        if (top.has_value() != top_contributes(m)) fail("top: case table disagrees with Bott on the top weight");
        if (top) {
            if (top->i != rec.codim) fail("top: top term lands in degree " + std::to_string(top->i));
            if (f_top_closed_form(m) != top->triple)
                fail("top: closed form " + f_top_closed_form(m).to_string() + " vs " + top->triple.to_string());
            bool present = false;
            for (const auto& e : tbl.degree(top->i))
                if (e.t == top->t && e.triple == top->triple) present = true;
            if (!present) fail("top: top term missing from the table");
        }
    }
    return rec;
}

void scan(int max_mult, unsigned checks, int jobs, const std::function<void(const ScanRecord&)>& sink) {
    if (max_mult < 0) throw std::invalid_argument("max_mult must be nonnegative");
    std::array<int, 6> v{};
    for (;;) {
        sink(scan_one(Multiplicities::from_array(v), checks, jobs));
        int k = 5;
        while (k >= 0 && v[static_cast<std::size_t>(k)] == max_mult) v[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
        ++v[static_cast<std::size_t>(k)];
    }
}

}  // namespace a3res
