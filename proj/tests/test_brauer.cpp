#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "cubiclat/brauer.hpp"
#include "cubiclat/refdata.hpp"

using namespace cubiclat;

TEST_CASE("fiber pairing forms") {
    auto form = [](const char* name, long tau) {
        return fiber_pairing_form(builtin_family(name), tau);
    };
    for (long tau : {4L, 8L, 12L}) {
        CHECK(form("c18-c14", tau) == IntVec{6, 16 - tau, 6});
        CHECK(form("c18-c26", tau) == IntVec{6, 6, 28 - tau});
        CHECK(form("c18-c38", tau) == IntVec{6, 6, 40 - tau});
        CHECK(form("c8-c26", tau) == IntVec{2, -2, 7 - tau});
        CHECK(form("c8-c38", tau) == IntVec{2, -2, 10 - tau});
    }
    FamilySpec bare = builtin_family("c18-c14");
    bare.fiber.reset();
    CHECK_THROWS_AS(fiber_pairing_form(bare, 5), std::domain_error);
}

TEST_CASE("multisection witnesses in normal form") {
    const auto w1 = multisection_witness(builtin_family("c18-c14"), 5, 2);
    REQUIRE(w1.has_value());
    CHECK(w1->a == 0); CHECK(w1->b == 4); CHECK(w1->c == -7);

    const auto w2 = multisection_witness(builtin_family("c18-c26"), 9, 3);
    REQUIRE(w2.has_value());
    CHECK(w2->a == 0); CHECK(w2->b == 10); CHECK(w2->c == -3);

    CHECK_FALSE(multisection_witness(builtin_family("c18-c38"), 16, 2).has_value());
}

TEST_CASE("witness existence iff gcd divides k, and pairing is exact") {
    for (const auto& name : builtin_family_names()) {
        const FamilySpec f = builtin_family(name);
        for (const Int& tau : admissible_tau_range(f)) {
            const IntVec c = fiber_pairing_form(f, tau);
            const Int g = gcd_int(gcd_int(c[0], c[1]), c[2]);
            const Lattice l = gram_at_tau(f, tau).lattice;
            for (long k = 1; k <= 3; ++k) {
                const auto w = multisection_witness(f, tau, k);
                CHECK(w.has_value() == (k % g == 0));
                if (w) {
                    CHECK(w->pairing_value == k);
                    CHECK(inner(l, {w->a, w->b, w->c}, f.fiber->coefficients) == k);
                }
            }
        }
    }
}

TEST_CASE("dp6 reports") {
    const DP6Report r4 = dp6_report(builtin_family("c18-c14"), 4);
    CHECK_FALSE(r4.b2_trivial);
    CHECK_FALSE(r4.b3_trivial);
    CHECK_FALSE(r4.both_trivial);

    const DP6Report r25 = dp6_report(builtin_family("c18-c38"), 25);
    CHECK_FALSE(r25.b2_trivial);
    REQUIRE(r25.b3_trivial);
    CHECK(r25.b3_witness->a == 0);
    CHECK(r25.b3_witness->b == 3);
    CHECK(r25.b3_witness->c == -1);

    const DP6Report r17 = dp6_report(builtin_family("c18-c26"), 17);
    REQUIRE(r17.b2_trivial);
    CHECK(r17.b2_witness->b == 4);
    CHECK(r17.b2_witness->c == -2);
    REQUIRE(r17.b3_trivial);
    CHECK(r17.b3_witness->b == 6);
    CHECK(r17.b3_witness->c == -3);
    CHECK(r17.both_trivial);
    CHECK(r17.rational_via_fibration);
    CHECK(r17.rational_via_divisor);

    CHECK_THROWS_AS(dp6_report(builtin_family("c8-c26"), 4), std::domain_error);
    CHECK_THROWS_AS(dp6_report(builtin_family("c18-c14"), 3),
                    std::invalid_argument);
}

TEST_CASE("dp6 tables reproduce row for row") {
    for (const auto& [name, table] : refdata::dp6_tables()) {
        const FamilySpec f = builtin_family(name);
        for (const auto& row : table) {
            const DP6Report rep = dp6_report(f, row.tau);
            CHECK(rep.b2_trivial == row.w2.has_value());
            CHECK(rep.b3_trivial == row.w3.has_value());
            if (row.w2) {
                REQUIRE(rep.b2_witness.has_value());
                CHECK(rep.b2_witness->a == (*row.w2)[0]);
                CHECK(rep.b2_witness->b == (*row.w2)[1]);
                CHECK(rep.b2_witness->c == (*row.w2)[2]);
            }
            if (row.w3) {
                REQUIRE(rep.b3_witness.has_value());
                CHECK(rep.b3_witness->a == (*row.w3)[0]);
                CHECK(rep.b3_witness->b == (*row.w3)[1]);
                CHECK(rep.b3_witness->c == (*row.w3)[2]);
            }
        }
    }
}

TEST_CASE("flagged triviality sets for c18-c14") {
    std::vector<long> b2, b3, not_both;
    for (long tau = 4; tau <= 12; ++tau) {
        const DP6Report r = dp6_report(builtin_family("c18-c14"), tau);
        if (r.b2_trivial) b2.push_back(tau);
        if (r.b3_trivial) b3.push_back(tau);
        if (r.rational_via_divisor && !r.both_trivial) not_both.push_back(tau);
    }
    CHECK(b2 == std::vector<long>{5, 6, 8, 9, 11, 12});
    CHECK(b3 == std::vector<long>{5, 7, 9, 11});
    CHECK(not_both == std::vector<long>{4, 6, 7, 8, 10, 12});
}

TEST_CASE("quadric reports") {
    const QuadricReport r4 = quadric_report(builtin_family("c8-c26"), 4);
    REQUIRE(r4.beta_trivial);
    REQUIRE(r4.canonical_witness.has_value());
    CHECK(r4.canonical_witness->a == 0);
    CHECK(r4.canonical_witness->b == 3);
    CHECK(r4.canonical_witness->c == 1);
    CHECK(r4.canonical_witness->pairing_value == 1 - 4);
    REQUIRE(r4.witness.has_value());
    CHECK(r4.witness->pairing_value % 2 != 0);

    const QuadricReport r2 = quadric_report(builtin_family("c8-c38"), 2);
    CHECK_FALSE(r2.beta_trivial);
    CHECK(r2.justification == NontrivialityJustification::EvenDiscriminantRank3);
    CHECK(discriminant(gram_at_tau(builtin_family("c8-c38"), 2).lattice) == 96);

    const QuadricReport r7 = quadric_report(builtin_family("c8-c38"), 7);
    REQUIRE(r7.beta_trivial);
    CHECK(r7.canonical_witness->b == 5);
    CHECK(r7.canonical_witness->pairing_value == -7);

    CHECK_THROWS_AS(quadric_report(builtin_family("c18-c14"), 5),
                    std::domain_error);
    CHECK_THROWS_AS(quadric_report(builtin_family("c8-c26"), 7),
                    std::invalid_argument);
}

TEST_CASE("quadric parity theorems and discriminant parity") {
    for (const auto& [name, trivial_even] : refdata::quadric_trivial_at_even_tau()) {
        const FamilySpec f = builtin_family(name);
        std::vector<long> no_section;
        for (const Int& tau : admissible_tau_range(f)) {
            if (classify_component(f, tau).empty) continue;
            const QuadricReport q = quadric_report(f, tau);
            const bool even = tau % 2 == 0;
            CHECK(q.beta_trivial == (trivial_even ? even : !even));
            if (!q.beta_trivial) {
                no_section.push_back(tau.convert_to<long>());
                CHECK(discriminant(gram_at_tau(f, tau).lattice) % 2 == 0);
            }
        }
        CHECK(no_section == refdata::quadric_no_section_taus().at(name));
    }
}
