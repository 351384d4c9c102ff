#pragma once

// Finite-index overlattice enumeration in normal form and the
// irreducibility sieve.
//
// A candidate overlattice B of A_tau keeps e1, e2 and adjoins
// V = (x' e1 + y' e2 + e3) / n with n >= 2 and 0 <= x', y' < n.
// B is admissible only if its Gram matrix is integral and the rank-2
// part B0 orthogonal to h2 (in glue normal form, see complement below)
// is integral and even.

#include "cubiclat/family.hpp"

namespace cubiclat {

enum class RejectionReason { None, BNotIntegral, B0NotIntegral, B0NotEven };

const char* to_string(RejectionReason r);

struct OverlatticeCandidate {
    Int n, xprime, yprime;
    RatMat gram_B;   // 3x3 Gram of (e1, e2, V)
    RatMat gram_B0;  // 2x2 Gram of the glue normal-form basis of B0
    bool accepted = false;
    RejectionReason reason = RejectionReason::None;
};

enum class SieveShortcut { SquarefreeDiscriminant, FullSieve };

struct IrreducibilityVerdict {
    Int tau;
    Int candidates_checked = 0;
    std::vector<OverlatticeCandidate> candidates;  // full ledger, scan order
    std::vector<OverlatticeCandidate> survivors;
    bool irreducible = true;
    SieveShortcut shortcut = SieveShortcut::FullSieve;
    // The (e1, e2, V) normal form is taken as exhausting all finite
    // overlattices; this flag records that assumption in the verdict.
    bool normal_form_assumed_complete = true;
};

// All n >= 2 with n^2 | d.
std::vector<Int> candidate_indices(const Int& d);

// Gram of (e1, e2, V); n = 1 gives back Gram(A_tau).
RatMat overlattice_gram(const FamilySpec& f, const Int& tau, const Int& n,
                        const Int& xprime, const Int& yprime);

// Gram of the rank-2 sublattice of B orthogonal to h2, computed via
// kernel_of_functional on the pairing-with-h2 functional in the
// (e1, e2, V) basis.
RatMat complement_gram(const FamilySpec& f, const Int& tau, const Int& n,
                       const Int& xprime, const Int& yprime);

// Gram of the glue normal-form basis {w1, w2} for B0, where
// w1 = (g12/g, -3/g, 0) with g = gcd(3, g12) spans A_{tau,0} in the
// e1, e2 plane and w2 = (-c1/n, -c2/n, 1/n) is the glue vector with
// 3 c1 + g12 c2 = g13 (c1 = 0 when g12 | g13, else c2 = 0).
RatMat glue_complement_gram(const FamilySpec& f, const Int& tau, const Int& n,
                            const Int& xprime, const Int& yprime);

// Sieve every candidate; rejection priority is
// B-not-integral -> B0-not-integral -> B0-not-even.
IrreducibilityVerdict sieve(const FamilySpec& f, const Int& tau);

}  // namespace cubiclat
