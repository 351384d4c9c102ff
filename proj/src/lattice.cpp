#include "cubiclat/lattice.hpp"

#include <algorithm>
#include <set>

namespace cubiclat {

Int inner(const Lattice& l, const IntVec& u, const IntVec& v) {
    const std::size_t n = l.rank();
    if (u.size() != n || v.size() != n)
        throw std::invalid_argument("inner: dimension mismatch");
    Int acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc += u[i] * l.gram[i][j] * v[j];
    return acc;
}

Rat inner_rat(const RatMat& gram, const RatVec& u, const RatVec& v) {
    const std::size_t n = gram.size();
    if (u.size() != n || v.size() != n)
        throw std::invalid_argument("inner_rat: dimension mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc += u[i] * gram[i][j] * v[j];
    return acc;
}

bool is_positive_definite(const Lattice& l) {
    for (const auto& d : leading_principal_minors(l.gram))
        if (d <= 0) return false;
    return true;
}

Int discriminant(const Lattice& l) { return det_exact(l.gram); }

namespace {

// Largest integer s >= 0 with s*s <= t (t a nonnegative rational).
Int rat_floor_sqrt(const Rat& t) {
    if (t < 0) throw std::domain_error("rat_floor_sqrt: negative input");
    Int s = boost::multiprecision::sqrt(numerator(t) / denominator(t));
    while (Rat((s + 1) * (s + 1)) <= t) ++s;
    while (s > 0 && Rat(s * s) > t) --s;
    return s;
}

void finalize(std::vector<IntVec>& out) {
    std::set<IntVec> seen;
    std::vector<IntVec> uniq;
    for (auto& v : out) {
        IntVec c = canonical_sign(std::move(v));
        if (seen.insert(c).second) uniq.push_back(std::move(c));
    }
    std::sort(uniq.begin(), uniq.end(), lex_less);
    out = std::move(uniq);
}

void fp_recurse(const LDL& f, const Rat& bound, std::size_t i, Rat used,
                IntVec& x, std::vector<IntVec>& out) {
    // Q(x) = sum_k d_k (x_k + sum_{j>k} u_kj x_j)^2; fill coordinate i.
    Rat c = 0;
    for (std::size_t j = i + 1; j < x.size(); ++j) c += f.upper[i][j] * x[j];
    const Rat budget = (bound - used) / f.diag[i];
    const Int radius = rat_floor_sqrt(budget);
    // center -c: scan the integer window around it
    const Rat center = -c;
    Int lo = numerator(center) / denominator(center) - radius - 2;
    Int hi = lo + 2 * radius + 4;
    for (Int z = lo; z <= hi; ++z) {
        const Rat term = f.diag[i] * (z + c) * (z + c);
        if (term + used > bound) continue;
        x[i] = z;
        if (i == 0) {
            bool zero = std::all_of(x.begin(), x.end(),
                                    [](const Int& v) { return v == 0; });
            if (!zero) out.push_back(x);
        } else {
            fp_recurse(f, bound, i - 1, used + term, x, out);
        }
    }
    x[i] = 0;
}

}  // namespace

std::vector<IntVec> short_vectors(const Lattice& l, const Int& bound) {
    if (!is_positive_definite(l))
        throw std::domain_error("short_vectors: lattice not positive definite");
    std::vector<IntVec> out;
    if (bound <= 0) return out;
    const LDL f = ldl_decompose(l.gram);
    IntVec x(l.rank(), 0);
    fp_recurse(f, Rat(bound), l.rank() - 1, 0, x, out);
    finalize(out);
    return out;
}

std::vector<IntVec> short_vectors_bruteforce(const Lattice& l, const Int& bound) {
    if (!is_positive_definite(l))
        throw std::domain_error("short_vectors_bruteforce: lattice not positive definite");
    std::vector<IntVec> out;
    if (bound <= 0) return out;
    const RatMat inv = invert_rational(l.gram);
    const std::size_t n = l.rank();
    std::vector<Int> box(n);
    for (std::size_t i = 0; i < n; ++i) box[i] = rat_floor_sqrt(Rat(bound) * inv[i][i]);
    IntVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = -box[i];
    while (true) {
        bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
        if (!zero && inner(l, v, v) <= bound) out.push_back(v);
        // odometer
        std::size_t i = 0;
        while (i < n && v[i] == box[i]) { v[i] = -box[i]; ++i; }
        if (i == n) break;
        ++v[i];
    }
    finalize(out);
    return out;
}

Sublattice orthogonal_complement(const MarkedLattice& ml) {
    const std::size_t n = ml.lattice.rank();
    bool nonzero = std::any_of(ml.marked.begin(), ml.marked.end(),
                               [](const Int& x) { return x != 0; });
    if (!nonzero)
        throw std::invalid_argument("orthogonal_complement: marked vector is zero");
    // <v, marked> = 0 is the kernel of the functional gram * marked.
    IntVec coeffs(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            coeffs[i] += ml.lattice.gram[i][j] * ml.marked[j];
    Sublattice s;
    s.parent = ml.lattice;
    s.basis = kernel_of_functional(coeffs);
    const std::size_t r = s.basis.size();
    s.gram.assign(r, IntVec(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            s.gram[i][j] = inner(ml.lattice, s.basis[i], s.basis[j]);
    return s;
}

bool is_even(const IntMat& gram) {
    for (std::size_t i = 0; i < gram.size(); ++i)
        if (gram[i][i] % 2 != 0) return false;
    return true;
}

bool is_even(const Lattice& l) { return is_even(l.gram); }
bool is_even(const Sublattice& s) { return is_even(s.gram); }

}  // namespace cubiclat
