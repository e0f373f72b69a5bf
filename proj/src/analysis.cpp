#include "a3res/analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace a3res {

namespace {

Partition column(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(std::max(k, 0)), 1)); }

// Concatenation of rectangles (value^rows), in the given order.
Partition blocks(std::initializer_list<std::pair<int, int>> parts) {
    std::vector<int> v;
    for (auto [value, rows] : parts) v.insert(v.end(), static_cast<std::size_t>(rows), value);
    return Partition(std::move(v));
}

BigInt binomial(int n, int k) { return weyl_dimension(column(k), n); }

}  // namespace

std::vector<WeightedTriple> f1_closed_form(const Multiplicities& m) {
    const auto [p, q, r] = ranks(m);
    std::vector<WeightedTriple> out;
    if (m.f >= 1 && m.a + m.c >= 1) out.push_back({{column(p + 1), {}, column(p + 1)}, 1});
    if (m.e >= 1 && m.a + m.b >= 1) out.push_back({{{}, column(q + 1), column(q + 1)}, 1});
    if (m.d >= 1 && m.a >= 1)
        for (int i = m.b + 1; i <= m.b + m.d; ++i) out.push_back({{column(i), column(r + 1 - i), column(r + 1)}, 1});
    std::sort(out.begin(), out.end());
    return out;
}

BigInt GeneratorSet::total() const {
    BigInt s = 0;
    for (const auto& f : families) s += f.count;
    return s;
}

GeneratorSet minimal_generators(const Multiplicities& m) {
    const auto [p, q, r] = ranks(m);
    const auto dv = m.dimension_vector();
    GeneratorSet g;
    if (m.f >= 1 && m.a + m.c >= 1)
        g.families.push_back({"phi", p + 1, p + 1, 0, binomial(dv[0], p + 1) * binomial(dv[2], p + 1)});
    if (m.e >= 1 && m.a + m.b >= 1)
        g.families.push_back({"psi", q + 1, 0, q + 1, binomial(dv[1], q + 1) * binomial(dv[2], q + 1)});
    if (m.d >= 1 && m.a >= 1)
        for (int k = 0; k < m.d; ++k) {
            const int i = m.b + k + 1;
            const int j = m.c + (m.d - 1 - k) + 1;
            g.families.push_back(
                {"phi|psi", r + 1, i, j, binomial(dv[0], i) * binomial(dv[1], j) * binomial(dv[2], r + 1)});
        }
    return g;
}

NormalityReport normality_report(const BettiTable& tbl) {
    if (!tbl.is_reineke()) return {NormalityStatus::NotApplicable, "not applicable (not a Reineke flag)"};
    if (tbl.audit.violation_count > 0) {
        const auto& v = tbl.audit.violations.front();
        return {NormalityStatus::Violation, "degree bound violated at lambda=" + v.lambda.to_string() +
                                                " mu=" + v.mu.to_string() + " nu=" + v.nu.to_string() +
                                                " D=" + std::to_string(v.D)};
    }
    for (const auto& e : tbl.entries)
        if (e.i < 0)
            return {NormalityStatus::Violation, "term in negative degree " + std::to_string(e.i) + ": " + e.triple.to_string()};
    const auto f0 = tbl.degree(0);
    if (f0.size() != 1 || f0.front().mult != 1 || !(f0.front().triple == SchurTriple{}))
        return {NormalityStatus::Violation, "F_0 is not the trivial module"};
    return {NormalityStatus::Normal, "normal with rational singularities"};
}

std::optional<int> gorenstein_family(const Multiplicities& m) {
    const auto [a, b, c, d, e, f] = m.to_array();
    if (a == d && b == e && c == f) return 1;
    if (a == d + e && b == 0 && c == f) return 2;
    if (a == d + e && b == 0 && f == 0) return 3;
    if (a == d + f && c == 0 && b == e) return 4;
    if (a == d + f && c == 0 && e == 0) return 5;
    return std::nullopt;
}

std::string gorenstein_family_text(int family) {
    switch (family) {
        case 1: return "a=d, b=e, c=f";
        case 2: return "a=d+e, b=0, c=f";
        case 3: return "a=d+e, b=f=0";
        case 4: return "a=d+f, c=0, b=e";
        case 5: return "a=d+f, c=e=0";
    }
    throw std::out_of_range("family index");
}

GorensteinReport gorenstein_report(const Multiplicities& m, const BettiTable& tbl) {
    GorensteinReport rep;
    rep.top_degree = tbl.top_degree();
    rep.top_dim = tbl.total_dim(rep.top_degree);
    rep.gorenstein = rep.top_dim == 1;
    rep.family = gorenstein_family(m);
    if (rep.gorenstein)
        rep.reason = rep.family ? "family " + gorenstein_family_text(*rep.family) : "determinantal case";
    else if (rep.family)
        rep.reason = "family " + gorenstein_family_text(*rep.family) + " predicted, but dim F_top = " + rep.top_dim.str();
    else
        rep.reason = "dim F_top = " + rep.top_dim.str();
    return rep;
}

GorensteinReport gorenstein_report(const Multiplicities& m, int jobs) {
    ResolutionOptions opts;
    opts.jobs = jobs;
    return gorenstein_report(m, compute_resolution(reineke_flag(m), opts));
}

bool self_duality_check(const BettiTable& tbl) {
    if (tbl.max_degree) return false;
    const int top = tbl.top_degree();
    if (top != tbl.codim()) return false;
    const auto top_entries = tbl.degree(top);
    if (top_entries.size() != 1 || top_entries.front().mult != 1 || top_entries.front().dim != 1) return false;

    const auto alpha = tbl.flag.alpha();
    const SchurTriple& tt = top_entries.front().triple;
    const std::array<int, 3> shift{tt.w1[0], tt.w2[0], tt.w3[0]};
    auto dual_part = [&](const Partition& p, int k) {
        const int n = alpha[static_cast<std::size_t>(k)];
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = shift[static_cast<std::size_t>(k)] - p[static_cast<std::size_t>(n - 1 - j)];
        return v;
    };

    using Multiset = std::map<SchurTriple, std::uint64_t>;
    std::vector<Multiset> by_degree(static_cast<std::size_t>(top) + 1);
    for (const auto& e : tbl.entries) {
        if (e.i < 0) return false;
        by_degree[static_cast<std::size_t>(e.i)][e.triple] += e.mult;
    }
    for (int i = 0; i <= top; ++i) {
        Multiset dual;
        for (const auto& [tr, c] : by_degree[static_cast<std::size_t>(i)]) {
            const auto v1 = dual_part(tr.w1, 0), v2 = dual_part(tr.w2, 1), v3 = dual_part(tr.w3, 2);
            for (const auto* v : {&v1, &v2, &v3})
                if (!v->empty() && v->back() < 0) return false;
            dual[SchurTriple{Partition(v1), Partition(v2), Partition(v3)}] += c;
        }
        if (dual != by_degree[static_cast<std::size_t>(top - i)]) return false;
    }
    return true;
}

SchurTriple f_top_closed_form(const Multiplicities& m) {
    if (!top_contributes(m)) throw std::domain_error("top exterior power vanishes for " + m.to_string());
    const auto [a, b, c, d, e, f] = m.to_array();
    const int pattern = (b != 0 ? 4 : 0) | (c != 0 ? 2 : 0) | (d != 0 ? 1 : 0);
    switch (pattern) {
        case 0:  // b = c = d = 0
            return {blocks({{a, f}}), blocks({{a, e}}), blocks({{e + f, a}})};
        case 4:  // b only
            return {blocks({{a, f}, {f, b}}), blocks({{a + b, e}}), blocks({{e + f, a + b}})};
        case 2:  // c only
            return {blocks({{a + c, f}}), blocks({{a, e}, {e, c}}), blocks({{e + f, a + c}})};
        case 1:  // d only
            return {blocks({{a, d + f}}), blocks({{a, d + e}}), blocks({{d + e + f, a}, {a, d}})};
        case 3:  // c and d
            return {blocks({{a + c, d + f}}), blocks({{a, d + e}, {d + e, c}}), blocks({{d + e + f, a + c}, {a + c, d}})};
        case 5:  // b and d
            return {blocks({{a, d + f}, {d + f, b}}), blocks({{a + b, d + e}}), blocks({{d + e + f, a + b}, {a + b, d}})};
        case 6:  // b and c
            return {blocks({{a + c, f}, {f, b}}), blocks({{a + b, e}, {e, c}}), blocks({{e + f, a + b + c}})};
        default:  // b, c and d
            return {blocks({{a + c, d + f}, {d + f, b}}), blocks({{a + b, d + e}, {d + e, c}}),
                    blocks({{d + e + f, a + b + c}, {a + b + c, d}})};
    }
}

}  // namespace a3res
