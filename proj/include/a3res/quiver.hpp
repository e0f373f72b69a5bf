#pragma once

#include "a3res/rational_matrix.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace a3res {

/// Vertex indices of the A3 quiver source1 -> sink <- source2.
inline constexpr int kSource1 = 0;
inline constexpr int kSource2 = 1;
inline constexpr int kSink = 2;

using DimensionVector = std::vector<int>;

struct Quiver {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows;  // (tail, head)

    /// source1 -> sink <- source2 with vertex order (source1, source2, sink).
    static Quiver a3();
};

/// sum x_i y_i - sum over arrows x_tail y_head. Throws std::invalid_argument
/// on length mismatch.
long long euler_form(const Quiver& q, const DimensionVector& x, const DimensionVector& y);

/// Path-count matrix P (P_ij = paths i -> j), Cartan C = P^T.
RationalMatrix cartan_matrix(const Quiver& q);

/// x^T (C^-1)^T y; throws std::domain_error if C is singular.
long long euler_via_cartan(const Quiver& q, const DimensionVector& x, const DimensionVector& y);

/// The six indecomposables, ordered as the multiplicities (a, ..., f).
/// Labels list the spaces at (source2, sink, source1).
enum class Indecomposable { I0K0, I0KK, IKK0, IKKK, IK00, I00K };

inline constexpr std::array<Indecomposable, 6> kIndecomposables = {
    Indecomposable::I0K0, Indecomposable::I0KK, Indecomposable::IKK0,
    Indecomposable::IKKK, Indecomposable::IK00, Indecomposable::I00K};

std::string label(Indecomposable x);
/// Throws std::invalid_argument on an unknown label.
Indecomposable parse_indecomposable(const std::string& s);
DimensionVector dimension_vector(Indecomposable x);

struct Multiplicities {
    int a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

    static Multiplicities from_array(const std::array<int, 6>& v);
    std::array<int, 6> to_array() const { return {a, b, c, d, e, f}; }
    int operator[](Indecomposable x) const { return to_array()[static_cast<std::size_t>(x)]; }

    /// (b+d+f, c+d+e, a+b+c+d).
    DimensionVector dimension_vector() const;
    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0 && e == 0 && f == 0; }
    std::string to_string() const;

    bool operator==(const Multiplicities&) const = default;
    auto operator<=>(const Multiplicities&) const = default;
};

/// Explicit matrices phi: V1 -> V3 and psi: V2 -> V3 (V3 the sink).
struct RepresentationA3 {
    DimensionVector dims{0, 0, 0};
    RationalMatrix phi;  // dims[2] x dims[0]
    RationalMatrix psi;  // dims[2] x dims[1]

    RepresentationA3() : phi(0, 0), psi(0, 0) {}
    RepresentationA3(DimensionVector d, RationalMatrix phi_, RationalMatrix psi_);

    /// Canonical direct sum: each summand contributes basis vectors, with
    /// identity entries along its arrows.
    static RepresentationA3 from_multiplicities(const Multiplicities& m);
    static RepresentationA3 indecomposable(Indecomposable x);
};

struct HomExt {
    long long hom = 0;
    long long ext = 0;
};

/// dim Hom(X, Y) as the nullity of the commuting-square system; ext is
/// hom minus the Euler form.
long long hom_dim(const RepresentationA3& x, const RepresentationA3& y);
HomExt hom_ext(const RepresentationA3& x, const RepresentationA3& y);

/// hom(X, V) <= hom(X, W) for all six indecomposables X. Throws
/// std::invalid_argument when the dimension vectors differ.
bool deg_leq(const Multiplicities& v, const Multiplicities& w);

struct Ranks {
    int p = 0, q = 0, r = 0;
    bool operator==(const Ranks&) const = default;
};

/// rank phi = b+d, rank psi = c+d, rank (phi|psi) = b+c+d.
Ranks ranks(const Multiplicities& m);

/// Inverse of ranks for a fixed dimension vector (source1, source2, sink).
/// Throws std::invalid_argument if some multiplicity would be negative.
Multiplicities mult_from_ranks(const DimensionVector& dv, int p, int q, int r);

/// ad + ae + af + be + cf.
int codim(const Multiplicities& m);

}  // namespace a3res
