#include "a3res/desing.hpp"

#include <sstream>

namespace a3res {

DirectedCheck validate_directed(const DirectedPartition& p) {
    std::array<int, 6> seen{};
    for (auto x : p.first) ++seen[static_cast<std::size_t>(x)];
    for (auto x : p.second) ++seen[static_cast<std::size_t>(x)];
    for (auto x : kIndecomposables) {
        if (seen[static_cast<std::size_t>(x)] != 1)
            return {false, label(x) + " must appear in exactly one part"};
    }

    auto rep = [](Indecomposable x) { return RepresentationA3::indecomposable(x); };
    for (const auto* part : {&p.first, &p.second}) {
        for (auto x : *part)
            for (auto y : *part)
                if (hom_ext(rep(x), rep(y)).ext != 0)
                    return {false, "Ext^1(" + label(x) + "," + label(y) + ") != 0 within a part"};
    }
    for (auto x : p.first)
        for (auto y : p.second) {
            if (hom_dim(rep(y), rep(x)) != 0)
                return {false, "Hom(" + label(y) + "," + label(x) + ") != 0 across parts"};
            if (hom_ext(rep(x), rep(y)).ext != 0)
                return {false, "Ext^1(" + label(x) + "," + label(y) + ") != 0 across parts"};
        }
    return {true, {}};
}

DirectedPartition reineke_partition() {
    return {{Indecomposable::I0K0, Indecomposable::I0KK, Indecomposable::IKK0},
            {Indecomposable::IK00, Indecomposable::IKKK, Indecomposable::I00K}};
}

std::optional<Multiplicities> FlagData::as_reineke() const {
    const int b = gamma[0], c = gamma[1];
    const Multiplicities m{gamma[2] - b - c, b, c, beta[2], beta[1] - beta[2], beta[0] - beta[2]};
    for (int x : m.to_array())
        if (x < 0) return std::nullopt;
    return m;
}

std::string FlagData::to_string() const {
    std::ostringstream os;
    os << beta[0] << ',' << beta[1] << ',' << beta[2] << '/' << gamma[0] << ',' << gamma[1] << ',' << gamma[2];
    return os.str();
}

FlagData reineke_flag(const Multiplicities& m) {
    return FlagData{{m.d + m.f, m.d + m.e, m.d}, {m.b, m.c, m.a + m.b + m.c}};
}

XiBundle xi_of(const FlagData& f) {
    XiBundle xi;
    xi.factor1_dim = f.beta[0] * f.gamma[2];
    xi.factor2_dim = f.beta[1] * f.gamma[2];
    xi.t = xi.factor1_dim + xi.factor2_dim;
    xi.m = f.beta[0] * f.gamma[0] + f.beta[1] * f.gamma[1] + f.beta[2] * f.gamma[2];
    return xi;
}

std::array<RawWeight, 3> top_weight(const FlagData& f) {
    if (xi_of(f).t == 0) return {};
    const auto [b1, b2, b3] = f.beta;
    const auto [g1, g2, g3] = f.gamma;
    RawWeight w1(static_cast<std::size_t>(g1), 0), w2(static_cast<std::size_t>(g2), 0);
    w1.insert(w1.end(), static_cast<std::size_t>(b1), g3);
    w2.insert(w2.end(), static_cast<std::size_t>(b2), g3);
    RawWeight w3(static_cast<std::size_t>(g3), -(b1 + b2));
    w3.insert(w3.end(), static_cast<std::size_t>(b3), 0);
    return {w1, w2, w3};
}

bool tau_constant(const Multiplicities& m) { return m.a == m.d && m.b == m.e && m.c == m.f; }

bool tau_constant_euler(const Multiplicities& m) {
    const FlagData fl = reineke_flag(m);
    const Quiver q = Quiver::a3();
    const DimensionVector lower(fl.gamma.begin(), fl.gamma.end());
    const DimensionVector upper(fl.beta.begin(), fl.beta.end());
    for (int v = 0; v < q.vertices; ++v) {
        DimensionVector simple(3, 0);
        simple[static_cast<std::size_t>(v)] = 1;
        if (euler_form(q, simple, lower) != -euler_form(q, upper, simple)) return false;
    }
    return true;
}

bool top_contributes(const Multiplicities& m) {
    if (m.b != 0 && m.a + m.c < m.d + m.f) return false;
    if (m.c != 0 && m.a + m.b < m.d + m.e) return false;
    if (m.d != 0 && m.d + m.e + m.f < m.a + m.b + m.c) return false;
    return true;
}

}  // namespace a3res
