#include "a3res/format.hpp"

#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace a3res {

namespace {

bool is_column(const Partition& p) {
    for (int x : p.parts())
        if (x != 1) return false;
    return true;
}

nlohmann::json parts_json(const Partition& p) { return nlohmann::json(p.parts()); }

nlohmann::json optional_json(const std::optional<bool>& b) { return b ? nlohmann::json(*b) : nlohmann::json(nullptr); }

std::string verdict_text(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; }

}  // namespace

nlohmann::json big_json(const BigInt& x) {
    if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(x);
    return x.str();
}

std::string schur_factor(const Partition& p, const std::string& space) {
    if (p.empty()) return {};
    if (is_column(p)) return "Λ^" + std::to_string(p.length()) + space;
    return "S_" + p.to_string() + space;
}

std::string render_entry(const BettiEntry& e, ShiftConvention shift) {
    std::string s;
    for (const auto& f : {schur_factor(e.triple.w1, "V1"), schur_factor(e.triple.w2, "V2"), schur_factor(e.triple.w3, "V3*")})
        if (!f.empty()) s += f + "⊗";
    const int twist = shift == ShiftConvention::Standard ? e.shift_standard() : e.shift_example();
    s += twist == 0 ? "A" : "A(-" + std::to_string(twist) + ")";
    if (e.mult > 1) s = std::to_string(e.mult) + "·(" + s + ")";
    return s;
}

std::string render_text(const BettiTable& tbl, ShiftConvention shift, const Verdicts& v) {
    std::ostringstream os;
    os << "flag " << tbl.flag.to_string();
    if (tbl.mult) os << " from multiplicities " << tbl.mult->to_string();
    else os << " (not a Reineke flag)";
    os << "\ndim xi = " << tbl.xi_dim << ", flag dim = " << tbl.flag_dim << ", codim = " << tbl.codim() << "\n";
    const int top = tbl.top_degree();
    for (int i = std::min(0, top); i <= top; ++i) {
        os << "F_" << i << ":";
        bool first = true;
        for (const auto& e : tbl.entries) {
            if (e.i != i) continue;
            os << (first ? " " : " ⊕ ") << render_entry(e, shift);
            first = false;
        }
        if (first) os << " 0";
        os << "   [rank " << tbl.total_dim(i).str() << "]\n";
    }
    if (tbl.max_degree) os << "(truncated at degree " << *tbl.max_degree << ")\n";
    os << "normal: " << verdict_text(v.normal) << ", Gorenstein: " << verdict_text(v.gorenstein)
       << ", self-dual: " << verdict_text(v.self_dual) << "\n";
    return os.str();
}

nlohmann::json table_json(const BettiTable& tbl, const Verdicts& v) {
    nlohmann::json j;
    if (tbl.mult) {
        j["input"]["mult"] = tbl.mult->to_array();
    } else {
        j["input"]["flag"]["beta"] = tbl.flag.beta;
        j["input"]["flag"]["gamma"] = tbl.flag.gamma;
    }
    j["xi_dim"] = tbl.xi_dim;
    j["flag_dim"] = tbl.flag_dim;
    j["codim"] = tbl.codim();
    j["entries"] = nlohmann::json::array();
    for (const auto& e : tbl.entries) {
        j["entries"].push_back({{"i", e.i},
                                {"t", e.t},
                                {"N", e.N},
                                {"w1", parts_json(e.triple.w1)},
                                {"w2", parts_json(e.triple.w2)},
                                {"w3_dual", parts_json(e.triple.w3)},
                                {"mult", e.mult},
                                {"dim", big_json(e.dim)},
                                {"shift_standard", e.shift_standard()},
                                {"shift_example", e.shift_example()}});
    }
    j["verdicts"] = {{"normal", optional_json(v.normal)},
                     {"gorenstein", optional_json(v.gorenstein)},
                     {"self_dual", optional_json(v.self_dual)}};
    if (tbl.max_degree) j["max_degree"] = *tbl.max_degree;
    return j;
}

std::string render_csv(const BettiTable& tbl, ShiftConvention shift) {
    std::map<std::pair<int, int>, BigInt> cells;
    std::set<int> degrees, rows;
    for (const auto& e : tbl.entries) {
        const int twist = shift == ShiftConvention::Standard ? e.shift_standard() : e.shift_example();
        cells[{e.i, twist}] += e.dim;
        degrees.insert(twist);
        rows.insert(e.i);
    }
    std::ostringstream os;
    os << "i";
    for (int d : degrees) os << ',' << d;
    os << '\n';
    if (rows.empty()) return os.str();
    for (int i = std::min(0, *rows.begin()); i <= *rows.rbegin(); ++i) {
        os << i;
        for (int d : degrees) {
            os << ',';
            if (auto it = cells.find({i, d}); it != cells.end()) os << it->second.str();
        }
        os << '\n';
    }
    return os.str();
}

std::string render_generators(const Multiplicities& m, const GeneratorSet& g) {
    std::ostringstream os;
    const auto [p, q, r] = ranks(m);
    os << "multiplicities " << m.to_string() << ": rank phi = " << p << ", rank psi = " << q
       << ", rank phi|psi = " << r << "\n";
    if (g.families.empty()) os << "no generators (the orbit closure is the whole space)\n";
    for (const auto& f : g.families) {
        os << f.size << "x" << f.size << " minors of " << f.matrix;
        if (f.matrix == "phi|psi") os << " using " << f.cols_phi << " columns of phi and " << f.cols_psi << " of psi";
        os << ": " << f.count.str() << "\n";
    }
    os << "total: " << g.total().str() << "\n";
    return os.str();
}

nlohmann::json generators_json(const Multiplicities& m, const GeneratorSet& g) {
    nlohmann::json j;
    j["input"]["mult"] = m.to_array();
    const auto r = ranks(m);
    j["ranks"] = {r.p, r.q, r.r};
    j["families"] = nlohmann::json::array();
    for (const auto& f : g.families)
        j["families"].push_back({{"matrix", f.matrix},
                                 {"size", f.size},
                                 {"cols_phi", f.cols_phi},
                                 {"cols_psi", f.cols_psi},
                                 {"count", big_json(f.count)}});
    j["total"] = big_json(g.total());
    return j;
}

nlohmann::json scan_record_json(const ScanRecord& r) {
    nlohmann::json j;
    j["mult"] = r.mult.to_array();
    j["codim"] = r.codim;
    j["xi_dim"] = r.xi_dim;
    j["triples"] = r.triples;
    j["failures"] = r.failures;
    if (r.gorenstein) {
        j["gorenstein"] = {{"gorenstein", r.gorenstein->gorenstein},
                           {"top_degree", r.gorenstein->top_degree},
                           {"top_dim", big_json(r.gorenstein->top_dim)},
                           {"reason", r.gorenstein->reason}};
    }
    if (r.self_dual) j["self_dual"] = *r.self_dual;
    return j;
}

std::string render_scan_record(const ScanRecord& r) {
    std::ostringstream os;
    os << r.mult.to_string() << " codim=" << r.codim;
    if (r.gorenstein) os << " gorenstein=" << (r.gorenstein->gorenstein ? "yes" : "no") << " (" << r.gorenstein->reason << ")";
    if (r.self_dual) os << " self_dual=" << (*r.self_dual ? "yes" : "no");
    if (r.failures.empty()) {
        os << " ok";
    } else {
        for (const auto& f : r.failures) os << " FAIL[" << f << "]";
    }
    return os.str();
}

Verdicts verdicts_for(const BettiTable& tbl) {
    Verdicts v;
    const auto norm = normality_report(tbl);
    if (norm.status != NormalityStatus::NotApplicable) v.normal = norm.status == NormalityStatus::Normal;
    if (!tbl.max_degree) {
        if (tbl.is_reineke()) v.gorenstein = gorenstein_report(*tbl.mult, tbl).gorenstein;
        v.self_dual = self_duality_check(tbl);
    }
    return v;
}

}  // namespace a3res
