#include "a3res/quiver.hpp"

#include <sstream>
#include <stdexcept>

namespace a3res {

Quiver Quiver::a3() { return Quiver{3, {{kSource1, kSink}, {kSource2, kSink}}}; }

long long euler_form(const Quiver& q, const DimensionVector& x, const DimensionVector& y) {
    const auto n = static_cast<std::size_t>(q.vertices);
    if (x.size() != n || y.size() != n) throw std::invalid_argument("dimension vector length mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<long long>(x[i]) * y[i];
    for (auto [tail, head] : q.arrows)
        s -= static_cast<long long>(x[static_cast<std::size_t>(tail)]) * y[static_cast<std::size_t>(head)];
    return s;
}

RationalMatrix cartan_matrix(const Quiver& q) {
    const auto n = static_cast<std::size_t>(q.vertices);
    // paths[i][j] by relaxation; terminates because the quiver is acyclic
    std::vector<std::vector<long long>> paths(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long long> reach(n, 0);
        reach[i] = 1;
        for (std::size_t step = 0; step < n; ++step) {
            std::vector<long long> next(n, 0);
            next[i] = 1;
            for (auto [tail, head] : q.arrows) next[static_cast<std::size_t>(head)] += reach[static_cast<std::size_t>(tail)];
            reach = std::move(next);
        }
        paths[i] = reach;
    }
    RationalMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(j, i) = paths[i][j];
    return c;
}

long long euler_via_cartan(const Quiver& q, const DimensionVector& x, const DimensionVector& y) {
    const auto n = static_cast<std::size_t>(q.vertices);
    if (x.size() != n || y.size() != n) throw std::invalid_argument("dimension vector length mismatch");
    const RationalMatrix form = cartan_matrix(q).inverse().transpose();
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += x[i] * form(i, j) * y[j];
    if (denominator(s) != 1) throw std::domain_error("non-integral Euler form");
    return static_cast<long long>(numerator(s));
}

std::string label(Indecomposable x) {
    switch (x) {
        case Indecomposable::I0K0: return "0K0";
        case Indecomposable::I0KK: return "0KK";
        case Indecomposable::IKK0: return "KK0";
        case Indecomposable::IKKK: return "KKK";
        case Indecomposable::IK00: return "K00";
        case Indecomposable::I00K: return "00K";
    }
    return "?";
}

Indecomposable parse_indecomposable(const std::string& s) {
    for (auto x : kIndecomposables)
        if (label(x) == s) return x;
    throw std::invalid_argument("unknown indecomposable '" + s + "'");
}

DimensionVector dimension_vector(Indecomposable x) {
    const std::string l = label(x);
    return {l[2] == 'K' ? 1 : 0, l[0] == 'K' ? 1 : 0, l[1] == 'K' ? 1 : 0};
}

Multiplicities Multiplicities::from_array(const std::array<int, 6>& v) {
    return Multiplicities{v[0], v[1], v[2], v[3], v[4], v[5]};
}

DimensionVector Multiplicities::dimension_vector() const { return {b + d + f, c + d + e, a + b + c + d}; }

std::string Multiplicities::to_string() const {
    std::ostringstream os;
    os << a << ',' << b << ',' << c << ',' << d << ',' << e << ',' << f;
    return os.str();
}

RepresentationA3::RepresentationA3(DimensionVector d, RationalMatrix phi_, RationalMatrix psi_)
    : dims(std::move(d)), phi(std::move(phi_)), psi(std::move(psi_)) {
    const auto n1 = static_cast<std::size_t>(dims.at(0));
    const auto n2 = static_cast<std::size_t>(dims.at(1));
    const auto n3 = static_cast<std::size_t>(dims.at(2));
    if (phi.rows() != n3 || phi.cols() != n1 || psi.rows() != n3 || psi.cols() != n2)
        throw std::invalid_argument("matrix shapes do not match the dimension vector");
}

RepresentationA3 RepresentationA3::from_multiplicities(const Multiplicities& m) {
    const DimensionVector dv = m.dimension_vector();
    RationalMatrix phi(static_cast<std::size_t>(dv[2]), static_cast<std::size_t>(dv[0]));
    RationalMatrix psi(static_cast<std::size_t>(dv[2]), static_cast<std::size_t>(dv[1]));
    std::size_t i1 = 0, i2 = 0, i3 = 0;
    for (auto x : kIndecomposables) {
        const DimensionVector d = dimension_vector(x);
        for (int copy = 0; copy < m[x]; ++copy) {
            if (d[2] && d[0]) phi(i3, i1) = 1;
            if (d[2] && d[1]) psi(i3, i2) = 1;
            i1 += static_cast<std::size_t>(d[0]);
            i2 += static_cast<std::size_t>(d[1]);
            i3 += static_cast<std::size_t>(d[2]);
        }
    }
    return RepresentationA3(dv, std::move(phi), std::move(psi));
}

RepresentationA3 RepresentationA3::indecomposable(Indecomposable x) {
    auto v = std::array<int, 6>{};
    v[static_cast<std::size_t>(x)] = 1;
    return from_multiplicities(Multiplicities::from_array(v));
}

long long hom_dim(const RepresentationA3& x, const RepresentationA3& y) {
    // unknowns: f1 (y1 x x1), f2 (y2 x x2), f3 (y3 x x3), row-major, in that order
    const auto x1 = static_cast<std::size_t>(x.dims[0]), x2 = static_cast<std::size_t>(x.dims[1]),
               x3 = static_cast<std::size_t>(x.dims[2]);
    const auto y1 = static_cast<std::size_t>(y.dims[0]), y2 = static_cast<std::size_t>(y.dims[1]),
               y3 = static_cast<std::size_t>(y.dims[2]);
    const std::size_t off2 = y1 * x1, off3 = off2 + y2 * x2, unknowns = off3 + y3 * x3;
    auto f1 = [&](std::size_t r, std::size_t c) { return r * x1 + c; };
    auto f2 = [&](std::size_t r, std::size_t c) { return off2 + r * x2 + c; };
    auto f3 = [&](std::size_t r, std::size_t c) { return off3 + r * x3 + c; };

    RationalMatrix sys(y3 * x1 + y3 * x2, unknowns);
    std::size_t row = 0;
    // f3 * phiX - phiY * f1 = 0, entry (r, c) with r < y3, c < x1
    for (std::size_t r = 0; r < y3; ++r)
        for (std::size_t c = 0; c < x1; ++c, ++row) {
            for (std::size_t k = 0; k < x3; ++k) sys(row, f3(r, k)) += x.phi(k, c);
            for (std::size_t k = 0; k < y1; ++k) sys(row, f1(k, c)) -= y.phi(r, k);
        }
    for (std::size_t r = 0; r < y3; ++r)
        for (std::size_t c = 0; c < x2; ++c, ++row) {
            for (std::size_t k = 0; k < x3; ++k) sys(row, f3(r, k)) += x.psi(k, c);
            for (std::size_t k = 0; k < y2; ++k) sys(row, f2(k, c)) -= y.psi(r, k);
        }
    return static_cast<long long>(sys.nullity());
}

HomExt hom_ext(const RepresentationA3& x, const RepresentationA3& y) {
    const long long h = hom_dim(x, y);
    return {h, h - euler_form(Quiver::a3(), x.dims, y.dims)};
}

bool deg_leq(const Multiplicities& v, const Multiplicities& w) {
    if (v.dimension_vector() != w.dimension_vector()) throw std::invalid_argument("dimension vectors differ");
    const auto rv = RepresentationA3::from_multiplicities(v);
    const auto rw = RepresentationA3::from_multiplicities(w);
    for (auto x : kIndecomposables) {
        const auto rx = RepresentationA3::indecomposable(x);
        if (hom_dim(rx, rv) > hom_dim(rx, rw)) return false;
    }
    return true;
}

Ranks ranks(const Multiplicities& m) { return {m.b + m.d, m.c + m.d, m.b + m.c + m.d}; }

Multiplicities mult_from_ranks(const DimensionVector& dv, int p, int q, int r) {
    if (dv.size() != 3) throw std::invalid_argument("dimension vector must have three entries");
    const Multiplicities m{dv[2] - r, r - q, r - p, p + q - r, dv[1] - q, dv[0] - p};
    for (int x : m.to_array())
        if (x < 0) throw std::invalid_argument("rank triple is not realizable for this dimension vector");
    return m;
}

int codim(const Multiplicities& m) {
    return m.a * m.d + m.a * m.e + m.a * m.f + m.b * m.e + m.c * m.f;
}

}  // namespace a3res
