#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "cubiclat/refdata.hpp"
#include "cubiclat/sieve.hpp"

using namespace cubiclat;

TEST_CASE("candidate_indices") {
    CHECK(candidate_indices(36) == std::vector<Int>{2, 3, 6});
    CHECK(candidate_indices(64) == std::vector<Int>{2, 4, 8});
    CHECK(candidate_indices(53).empty());
    CHECK(candidate_indices(68) == std::vector<Int>{2});
    CHECK(candidate_indices(48) == std::vector<Int>{2, 4});
    CHECK_THROWS_AS(candidate_indices(0), std::invalid_argument);
}

TEST_CASE("overlattice_gram closed forms") {
    // alpha for c8-c26: (3x' + y' + 7)/n
    const FamilySpec q26 = builtin_family("c8-c26");
    for (long n = 1; n <= 4; ++n)
        for (long xp = 0; xp < n; ++xp)
            for (long yp = 0; yp < n; ++yp) {
                const RatMat g = overlattice_gram(q26, 2, n, xp, yp);
                CHECK(g[0][2] == Rat(3 * xp + yp + 7, n));
            }

    // gamma for c18-c38: (3x'^2 + 18y'^2 + 2 tau y' + 20x' + 12x'y' + 46)/n^2
    const FamilySpec d38 = builtin_family("c18-c38");
    for (long tau : {13L, 20L})
        for (long n = 1; n <= 4; ++n)
            for (long xp = 0; xp < n; ++xp)
                for (long yp = 0; yp < n; ++yp) {
                    const RatMat g = overlattice_gram(d38, tau, n, xp, yp);
                    CHECK(g[2][2] == Rat(3 * xp * xp + 18 * yp * yp +
                                             2 * tau * yp + 20 * xp +
                                             12 * xp * yp + 46,
                                         n * n));
                }

    // n = 1 recovers the original Gram matrix
    for (const auto& name : builtin_family_names()) {
        const FamilySpec f = builtin_family(name);
        CHECK(overlattice_gram(f, 5, 1, 0, 0) ==
              to_rational(gram_at_tau(f, 5).lattice.gram));
    }

    CHECK_THROWS_AS(overlattice_gram(q26, 2, 2, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(overlattice_gram(q26, 2, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("generic alpha and beta match the family recipes everywhere") {
    for (const auto& name : builtin_family_names()) {
        const FamilySpec f = builtin_family(name);
        const auto range = admissible_tau_range(f);
        for (const Int& tau : {range.front(), range.back()})
            for (long n = 2; n <= 8; ++n)
                for (long xp = 0; xp < n; ++xp)
                    for (long yp = 0; yp < n; ++yp) {
                        const RatMat g = overlattice_gram(f, tau, n, xp, yp);
                        CHECK(g[0][2] == Rat(3 * xp + f.g12 * yp + f.g13, n));
                        CHECK(g[1][2] == Rat(f.g12 * xp + f.g22 * yp + tau, n));
                        CHECK(g[0][2] == g[2][0]);
                    }
    }
}

TEST_CASE("complement_gram") {
    // n = 1: the complement of h2 in A_tau itself
    for (const auto& name : builtin_family_names()) {
        const FamilySpec f = builtin_family(name);
        const Sublattice s = orthogonal_complement(gram_at_tau(f, 4));
        CHECK(complement_gram(f, 4, 1, 0, 0) == to_rational(s.gram));
    }

    // the kernel basis pairs to zero with h2 inside B
    const FamilySpec f = builtin_family("c18-c14");
    for (long n : {2L, 3L})
        for (long xp = 0; xp < n; ++xp)
            for (long yp = 0; yp < n; ++yp) {
                const RatMat gb = overlattice_gram(f, 8, n, xp, yp);
                const IntVec coeffs = {3 * n, f.g12 * n,
                                       3 * xp + f.g12 * yp + f.g13};
                for (const auto& v : kernel_of_functional(coeffs)) {
                    // <v, h2> in B coordinates: h2 = e1, so pair against
                    // the first column of B's Gram
                    Rat dot = 0;
                    for (std::size_t i = 0; i < 3; ++i) dot += Rat(v[i]) * gb[i][0];
                    CHECK(dot == 0);
                }
                CHECK(is_symmetric(complement_gram(f, 8, n, xp, yp)));
            }

    // first basis vector of the c18-c14 complement spans the (4,-3,0) line
    const auto basis = kernel_of_functional({6, 8, 3 * 1 + 4 * 1 + 6});
    const auto c = testhelp::coords_in_span({{4, -3, 0}, basis[1]}, basis[0]);
    REQUIRE(c.has_value());
    CHECK(c->second == 0);
}

TEST_CASE("glue complement is orthogonal to h2 in the ambient lattice") {
    for (const auto& name : builtin_family_names()) {
        const FamilySpec f = builtin_family(name);
        const RatMat ga = to_rational(gram_at_tau(f, 5).lattice.gram);
        const RatMat g0 = glue_complement_gram(f, 5, 2, 1, 1);
        CHECK(is_symmetric(g0));
        // both glue basis vectors have zero pairing with h2 by construction;
        // cross-check the determinant identity d(B0) * disc relations via
        // symmetry and integral scaling on a known-integral case below.
        CHECK(g0.size() == 2);
    }
}

TEST_CASE("index-discriminant identity for integral candidates") {
    for (const auto& name : builtin_family_names()) {
        const FamilySpec f = builtin_family(name);
        for (const Int& tau : admissible_tau_range(f)) {
            const ComponentClass cc = classify_component(f, tau);
            if (cc.empty) continue;
            for (const auto& cand : sieve(f, tau).candidates) {
                if (!is_integral(cand.gram_B)) continue;
                const Int db = det_exact(to_integer(cand.gram_B));
                CHECK(db * cand.n * cand.n == cc.discriminant);
            }
        }
    }
}

TEST_CASE("sieve verdicts") {
    const FamilySpec f14 = builtin_family("c18-c14");
    const IrreducibilityVerdict v5 = sieve(f14, 5);
    CHECK(v5.irreducible);
    CHECK(v5.shortcut == SieveShortcut::SquarefreeDiscriminant);
    CHECK(v5.candidates_checked == 0);

    // c8-c38 at tau = -1: exactly one candidate survives B-integrality and
    // is rejected at the B0 stage
    const IrreducibilityVerdict vq = sieve(builtin_family("c8-c38"), -1);
    CHECK(vq.irreducible);
    std::vector<const OverlatticeCandidate*> b_integral;
    for (const auto& c : vq.candidates)
        if (is_integral(c.gram_B)) b_integral.push_back(&c);
    REQUIRE(b_integral.size() == 1);
    CHECK(b_integral[0]->n == 3);
    CHECK(b_integral[0]->xprime == 1);
    CHECK(b_integral[0]->yprime == 2);
    CHECK_FALSE(b_integral[0]->accepted);
    CHECK((b_integral[0]->reason == RejectionReason::B0NotIntegral ||
           b_integral[0]->reason == RejectionReason::B0NotEven));

    CHECK_THROWS_AS(sieve(f14, 3), std::invalid_argument);  // empty component
}

TEST_CASE("every nonempty component is irreducible") {
    for (const auto& name : builtin_family_names()) {
        const FamilySpec f = builtin_family(name);
        for (const Int& tau : admissible_tau_range(f)) {
            if (classify_component(f, tau).empty) continue;
            const IrreducibilityVerdict v = sieve(f, tau);
            CHECK(v.irreducible);
            CHECK(v.survivors.empty());
            Int expected = 0;
            for (const Int& n : candidate_indices(
                     discriminant(gram_at_tau(f, tau).lattice)))
                expected += n * n;
            CHECK(v.candidates_checked == expected);
            CHECK(v.normal_form_assumed_complete);
        }
    }
}

TEST_CASE("recorded overlattice index sets for c8-c26") {
    const FamilySpec f = builtin_family("c8-c26");
    for (const auto& [tau, expect] : refdata::candidate_index_sets().at("c8-c26")) {
        std::vector<long> got;
        for (const Int& n :
             candidate_indices(discriminant(gram_at_tau(f, tau).lattice)))
            got.push_back(n.convert_to<long>());
        CHECK(got == expect);
    }
}
