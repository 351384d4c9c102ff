#pragma once

// The built-in intersection families and user-defined ones: admissible tau
// ranges and the empty/nonempty classification of each component.

#include "cubiclat/lattice.hpp"

#include <array>
#include <optional>
#include <string>

namespace cubiclat {

enum class FiberKind { DelPezzo6, QuadricSurface };

struct FiberSpec {
    IntVec coefficients;  // fiber class in the family basis
    FiberKind kind;
};

struct FamilySpec {
    std::string name;
    std::array<std::string, 3> basis_labels;
    // Fixed pairings; g11 is always 3 (the square of the hyperplane class)
    // and the (2,3) slot is the free parameter tau.
    Int g12, g22, g13, g33;
    std::optional<FiberSpec> fiber;
    bool rational_via_divisor = false;

    Int g11() const { return 3; }
};

enum class WitnessLocation { FullLattice, PrimitivePart };

struct ComponentClass {
    Int tau;
    bool empty;
    // Empty: a norm-2 witness and where it lives.
    IntVec witness;
    WitnessLocation located_in = WitnessLocation::FullLattice;
    // Nonempty: the discriminant d(A_tau).
    Int discriminant;
};

const std::vector<std::string>& builtin_family_names();
FamilySpec builtin_family(const std::string& name);

MarkedLattice gram_at_tau(const FamilySpec& f, const Int& tau);

// All integer tau with gram_at_tau positive definite (a finite interval:
// the discriminant is a concave quadratic in tau).
std::vector<Int> admissible_tau_range(const FamilySpec& f);

// Coefficients (c2, c1, c0) of d(A_tau) = c2*tau^2 + c1*tau + c0.
std::array<Int, 3> discriminant_polynomial(const FamilySpec& f);

// Empty with a norm-2 witness if one exists, else Nonempty with discriminant.
// Witness choice: prefer vectors pairing to 0 with h2, then lexicographically
// smallest canonical-sign vector.
ComponentClass classify_component(const FamilySpec& f, const Int& tau);

// Built-in families only: the closed-form discriminant polynomial matches
// det(gram_at_tau) for every tau in [-50, 50].
bool discriminant_polynomial_check(const FamilySpec& f);

// User-defined families: simple line-based config file, documented in the
// README.  Throws std::runtime_error on malformed input.
std::vector<FamilySpec> parse_family_config(const std::string& path);

}  // namespace cubiclat
