#pragma once

// Brauer-class (non)triviality for sextic del Pezzo fibrations (classes
// b2, b3; trivial iff a 2- resp. 3-multisection exists) and for quadric
// surface bundles (class beta; trivial iff some cycle pairs oddly with
// the quadric class).

#include "cubiclat/family.hpp"

#include <optional>

namespace cubiclat {

struct CycleWitness {
    Int a, b, c;  // cycle W = a e1 + b e2 + c e3
    Int pairing_value;
};

struct DP6Report {
    Int tau;
    bool b2_trivial = false;
    bool b3_trivial = false;
    std::optional<CycleWitness> b2_witness;
    std::optional<CycleWitness> b3_witness;
    bool both_trivial = false;
    bool rational_via_fibration = false;
    bool rational_via_divisor = false;
};

enum class NontrivialityJustification { None, EvenDiscriminantRank3 };

struct QuadricReport {
    Int tau;
    bool beta_trivial = false;
    std::optional<CycleWitness> witness;            // normal-form odd-pairing cycle
    std::optional<CycleWitness> canonical_witness;  // fixed per-family section class
    NontrivialityJustification justification = NontrivialityJustification::None;
};

// Coefficients of the linear form W -> <W, fiber>, i.e. gram * fiber.
IntVec fiber_pairing_form(const FamilySpec& f, const Int& tau);

// A cycle with <W, fiber> = k in normal form (a = 0, smallest positive b),
// if the Diophantine equation is solvable; absent otherwise.
std::optional<CycleWitness> multisection_witness(const FamilySpec& f,
                                                 const Int& tau, const Int& k);

DP6Report dp6_report(const FamilySpec& f, const Int& tau);
QuadricReport quadric_report(const FamilySpec& f, const Int& tau);

}  // namespace cubiclat
