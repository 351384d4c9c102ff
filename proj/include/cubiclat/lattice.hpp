#pragma once

// Lattices with integral bilinear forms: norms, definiteness, discriminants,
// short-vector enumeration, orthogonal complements, evenness.

#include "cubiclat/linalg.hpp"

namespace cubiclat {

struct Lattice {
    IntMat gram;  // symmetric

    std::size_t rank() const { return gram.size(); }
};

struct MarkedLattice {
    Lattice lattice;
    IntVec marked;  // coordinates of the distinguished norm-3 class
};

struct Sublattice {
    Lattice parent;
    std::vector<IntVec> basis;  // saturated in parent
    IntMat gram;                // induced form on the basis
};

// u^T * gram * v, exactly.
Int inner(const Lattice& l, const IntVec& u, const IntVec& v);
Rat inner_rat(const RatMat& gram, const RatVec& u, const RatVec& v);

// Sylvester: all leading principal minors positive.
bool is_positive_definite(const Lattice& l);

Int discriminant(const Lattice& l);

// All nonzero v with <v,v> <= bound, one representative per +-pair
// (first nonzero coordinate positive), sorted lexicographically.
// Fincke-Pohst over the exact LDL decomposition.
std::vector<IntVec> short_vectors(const Lattice& l, const Int& bound);

// Same contract, independent implementation: brute-force box search with
// per-coordinate bound v_i^2 <= bound * (gram^-1)_ii.
std::vector<IntVec> short_vectors_bruteforce(const Lattice& l, const Int& bound);

// Saturated rank-(r-1) sublattice of vectors pairing to 0 with the marked
// vector, with its induced Gram matrix.
Sublattice orthogonal_complement(const MarkedLattice& ml);

// All diagonal Gram entries even (equivalently <v,v> even for all v).
bool is_even(const IntMat& gram);
bool is_even(const Lattice& l);
bool is_even(const Sublattice& s);

}  // namespace cubiclat
