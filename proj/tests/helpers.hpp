#pragma once

#include "cubiclat/family.hpp"

#include <optional>

namespace cubiclat::testhelp {

inline IntMat gram(long g12, long g22, long g13, long g33, long tau) {
    return {{3, g12, g13}, {g12, g22, tau}, {g13, tau, g33}};
}

inline Lattice lat(IntMat g) { return Lattice{std::move(g)}; }

// Rational coordinates of v in the span of a rank-2 basis in Z^3, if any.
inline std::optional<std::pair<Rat, Rat>> coords_in_span(
    const std::vector<IntVec>& basis, const IntVec& v) {
    const IntVec &a = basis[0], &b = basis[1];
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            const Int det = a[i] * b[j] - a[j] * b[i];
            if (det == 0) continue;
            const Rat x = Rat(v[i] * b[j] - v[j] * b[i]) / det;
            const Rat y = Rat(a[i] * v[j] - a[j] * v[i]) / det;
            for (std::size_t k = 0; k < 3; ++k)
                if (x * a[k] + y * b[k] != v[k]) return std::nullopt;
            return std::make_pair(x, y);
        }
    return std::nullopt;
}

// v is an integer combination of the basis vectors.
inline bool in_integer_span(const std::vector<IntVec>& basis, const IntVec& v) {
    auto c = coords_in_span(basis, v);
    return c && denominator(c->first) == 1 && denominator(c->second) == 1;
}

// Two rank-2 bases generate the same sublattice of Z^3.
inline bool same_sublattice(const std::vector<IntVec>& a,
                            const std::vector<IntVec>& b) {
    for (const auto& v : b)
        if (!in_integer_span(a, v)) return false;
    for (const auto& v : a)
        if (!in_integer_span(b, v)) return false;
    return true;
}

// gcd of the 2x2 minors of a rank-2 basis matrix; equals 1 for a basis
// that is saturated relative to the kernel of a primitive functional.
inline Int minors_gcd(const std::vector<IntVec>& basis) {
    const IntVec &a = basis[0], &b = basis[1];
    Int g = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            g = gcd_int(g, a[i] * b[j] - a[j] * b[i]);
    return g;
}

}  // namespace cubiclat::testhelp
