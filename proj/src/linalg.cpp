#include "cubiclat/linalg.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <numeric>

namespace cubiclat {

IntMat identity_mat(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

bool is_square(const IntMat& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) return false;
    return !m.empty();
}

bool is_symmetric(const IntMat& m) {
    if (!is_square(m)) return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

bool is_symmetric(const RatMat& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) return false;
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m[i][j] != m[j][i]) return false;
    }
    return !m.empty();
}

bool is_integral(const RatMat& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (denominator(x) != 1) return false;
    return true;
}

RatMat to_rational(const IntMat& m) {
    RatMat r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        r[i].assign(m[i].begin(), m[i].end());
    return r;
}

IntMat to_integer(const RatMat& m) {
    IntMat r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        r[i].reserve(m[i].size());
        for (const auto& x : m[i]) {
            if (denominator(x) != 1)
                throw std::domain_error("to_integer: non-integral entry");
            r[i].push_back(numerator(x));
        }
    }
    return r;
}

Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int content(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd_int(g, x);
    return g;
}

IntVec canonical_sign(IntVec v) {
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Int det_exact(const IntMat& input) {
    if (!is_square(input)) throw std::invalid_argument("det_exact: matrix not square");
    IntMat m = input;
    const std::size_t n = m.size();
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    Int d = m[n - 1][n - 1];
    return sign > 0 ? d : Int(-d);
}

std::vector<Int> leading_principal_minors(const IntMat& m) {
    if (!is_symmetric(m))
        throw std::invalid_argument("leading_principal_minors: matrix not symmetric");
    std::vector<Int> minors;
    for (std::size_t k = 1; k <= m.size(); ++k) {
        IntMat block(k, IntVec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) block[i][j] = m[i][j];
        minors.push_back(det_exact(block));
    }
    return minors;
}

RatMat invert_rational(const IntMat& m) {
    if (!is_symmetric(m))
        throw std::invalid_argument("invert_rational: matrix not symmetric");
    const std::size_t n = m.size();
    RatMat a = to_rational(m);
    RatMat inv(n, RatVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    // Gauss-Jordan with exact rationals.
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw std::domain_error("invert_rational: singular matrix");
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        const Rat p = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= p;
            inv[c][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            const Rat f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

LDL ldl_decompose(const IntMat& m) {
    if (!is_symmetric(m))
        throw std::invalid_argument("ldl_decompose: matrix not symmetric");
    const std::size_t n = m.size();
    RatMat a = to_rational(m);
    LDL out;
    out.diag.assign(n, 0);
    out.upper.assign(n, RatVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) out.upper[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        Rat d = a[k][k];
        for (std::size_t j = 0; j < k; ++j)
            d -= out.diag[j] * out.upper[j][k] * out.upper[j][k];
        if (d <= 0) throw std::domain_error("ldl_decompose: matrix not positive definite");
        out.diag[k] = d;
        for (std::size_t i = k + 1; i < n; ++i) {
            Rat s = a[k][i];
            for (std::size_t j = 0; j < k; ++j)
                s -= out.diag[j] * out.upper[j][k] * out.upper[j][i];
            out.upper[k][i] = s / d;
        }
    }
    return out;
}

namespace {

// s*a + t*b = gcd(a, b), gcd normalized nonnegative.
void ext_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
    Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;  // truncated division is fine for the invariant
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    g = r0; s = s0; t = t0;
}

}  // namespace

std::vector<IntVec> kernel_of_functional(const IntVec& coeffs_in) {
    IntVec coeffs = coeffs_in;
    Int cont = content(coeffs);
    if (cont == 0) throw std::invalid_argument("kernel_of_functional: zero functional");
    for (auto& x : coeffs) x /= cont;

    if (coeffs.size() == 2) {
        const Int &a = coeffs[0], &b = coeffs[1];
        Int g = gcd_int(a, b);
        return {canonical_sign({b / g, -a / g})};
    }
    if (coeffs.size() != 3)
        throw std::invalid_argument("kernel_of_functional: only dimensions 2 and 3 supported");

    const Int &a = coeffs[0], &b = coeffs[1], &c = coeffs[2];
    if (a == 0 && b == 0) {
        // functional is z -> c*z with c = +-1 after content division
        return {IntVec{1, 0, 0}, IntVec{0, 1, 0}};
    }
    Int g, s, t;
    ext_gcd(a, b, g, s, t);
    IntVec v1 = canonical_sign({b / g, -a / g, 0});
    // a*(-s*c) + b*(-t*c) + c*g = 0; after content division gcd(g, c) = 1,
    // so {v1, v2} is a saturated basis (the 2x2 minors are +-a, +-b, +-c).
    IntVec v2 = canonical_sign({-s * c, -t * c, g});
    return {v1, v2};
}

}  // namespace cubiclat
