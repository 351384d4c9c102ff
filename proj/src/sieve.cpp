#include "cubiclat/sieve.hpp"

namespace cubiclat {

const char* to_string(RejectionReason r) {
    switch (r) {
        case RejectionReason::None: return "none";
        case RejectionReason::BNotIntegral: return "B-not-integral";
        case RejectionReason::B0NotIntegral: return "B0-not-integral";
        case RejectionReason::B0NotEven: return "B0-not-even";
    }
    return "?";
}

std::vector<Int> candidate_indices(const Int& d) {
    if (d <= 0) throw std::invalid_argument("candidate_indices: d must be positive");
    std::vector<Int> out;
    for (Int n = 2; n * n <= d; ++n)
        if (d % (n * n) == 0) out.push_back(n);
    return out;
}

namespace {

void check_params(const Int& n, const Int& xprime, const Int& yprime) {
    if (n < 1) throw std::invalid_argument("overlattice: n must be >= 1");
    if (xprime < 0 || xprime >= n || yprime < 0 || yprime >= n)
        throw std::invalid_argument("overlattice: x', y' must lie in [0, n)");
}

}  // namespace

RatMat overlattice_gram(const FamilySpec& f, const Int& tau, const Int& n,
                        const Int& xprime, const Int& yprime) {
    check_params(n, xprime, yprime);
    const Lattice a = gram_at_tau(f, tau).lattice;
    const IntVec v = {xprime, yprime, 1};
    const Rat alpha = Rat(3 * xprime + f.g12 * yprime + f.g13) / n;
    const Rat beta = Rat(f.g12 * xprime + f.g22 * yprime + tau) / n;
    const Rat gamma = Rat(inner(a, v, v)) / (n * n);
    return {{3, Rat(f.g12), alpha},
            {Rat(f.g12), Rat(f.g22), beta},
            {alpha, beta, gamma}};
}

RatMat complement_gram(const FamilySpec& f, const Int& tau, const Int& n,
                       const Int& xprime, const Int& yprime) {
    const RatMat gb = overlattice_gram(f, tau, n, xprime, yprime);
    // Pairing with h2 = e1 in B coordinates, cleared of denominators:
    // n * (<e1,h2>, <e2,h2>, <V,h2>) is an integer functional.
    const IntVec coeffs = {3 * n, f.g12 * n, 3 * xprime + f.g12 * yprime + f.g13};
    const auto basis = kernel_of_functional(coeffs);
    RatMat out(2, RatVec(2));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            RatVec u(basis[i].begin(), basis[i].end());
            RatVec w(basis[j].begin(), basis[j].end());
            out[i][j] = inner_rat(gb, u, w);
        }
    return out;
}

RatMat glue_complement_gram(const FamilySpec& f, const Int& tau, const Int& n,
                            const Int& xprime, const Int& yprime) {
    check_params(n, xprime, yprime);
    const RatMat ga = to_rational(gram_at_tau(f, tau).lattice.gram);
    const Int g = gcd_int(3, f.g12);
    const RatVec w1 = {Rat(f.g12) / g, Rat(-3) / g, 0};
    Rat c1 = 0, c2 = 0;
    if (f.g12 != 0 && f.g13 % f.g12 == 0)
        c2 = Rat(f.g13) / f.g12;
    else
        c1 = Rat(f.g13) / 3;
    const RatVec w2 = {-c1 / n, -c2 / n, Rat(1) / n};
    return {{inner_rat(ga, w1, w1), inner_rat(ga, w1, w2)},
            {inner_rat(ga, w2, w1), inner_rat(ga, w2, w2)}};
}

IrreducibilityVerdict sieve(const FamilySpec& f, const Int& tau) {
    const ComponentClass cc = classify_component(f, tau);
    if (cc.empty) throw std::invalid_argument("sieve: component is empty");
    IrreducibilityVerdict verdict;
    verdict.tau = tau;
    const auto indices = candidate_indices(cc.discriminant);
    verdict.shortcut = indices.empty() ? SieveShortcut::SquarefreeDiscriminant
                                       : SieveShortcut::FullSieve;
    for (const Int& n : indices) {
        for (Int xp = 0; xp < n; ++xp) {
            for (Int yp = 0; yp < n; ++yp) {
                OverlatticeCandidate cand;
                cand.n = n;
                cand.xprime = xp;
                cand.yprime = yp;
                cand.gram_B = overlattice_gram(f, tau, n, xp, yp);
                cand.gram_B0 = glue_complement_gram(f, tau, n, xp, yp);
                if (!is_integral(cand.gram_B))
                    cand.reason = RejectionReason::BNotIntegral;
                else if (!is_integral(cand.gram_B0))
                    cand.reason = RejectionReason::B0NotIntegral;
                else if (!is_even(to_integer(cand.gram_B0)))
                    cand.reason = RejectionReason::B0NotEven;
                else
                    cand.accepted = true;
                ++verdict.candidates_checked;
                if (cand.accepted) verdict.survivors.push_back(cand);
                verdict.candidates.push_back(std::move(cand));
            }
        }
    }
    verdict.irreducible = verdict.survivors.empty();
    return verdict;
}

}  // namespace cubiclat
