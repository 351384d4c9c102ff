#pragma once

// Exact integer and rational linear algebra used everywhere else.
// No floating point anywhere in this library.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubiclat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// --- small helpers -------------------------------------------------------

IntMat identity_mat(std::size_t n);
bool is_square(const IntMat& m);
bool is_symmetric(const IntMat& m);
bool is_symmetric(const RatMat& m);
bool is_integral(const RatMat& m);
RatMat to_rational(const IntMat& m);
IntMat to_integer(const RatMat& m);  // throws if any entry is not integral

Int gcd_int(const Int& a, const Int& b);
Int content(const IntVec& v);  // gcd of entries (0 for the zero vector)

// Flip sign so the first nonzero coordinate is positive; zero stays zero.
IntVec canonical_sign(IntVec v);

// Lexicographic comparison for deterministic ordering of vector lists.
bool lex_less(const IntVec& a, const IntVec& b);

// --- operations ----------------------------------------------------------

// Exact determinant by fraction-free (Bareiss) elimination.
Int det_exact(const IntMat& m);

// Determinants of the leading principal k-by-k blocks, k = 1..n.
std::vector<Int> leading_principal_minors(const IntMat& m);

// Exact inverse of a nonsingular symmetric integer matrix.
RatMat invert_rational(const IntMat& m);

struct LDL {
    RatVec diag;    // positive pivots d_k
    RatMat upper;   // unit upper triangular U with m = U^T diag U
};

// LDL^T factorization of a positive definite symmetric matrix.
LDL ldl_decompose(const IntMat& m);

// Integer basis of the saturated rank-(dim-1) kernel of a nonzero linear
// functional v -> sum coeffs[i] * v[i].  The basis is primitive: every
// integer vector annihilated by the functional is an integer combination
// of the returned vectors.
std::vector<IntVec> kernel_of_functional(const IntVec& coeffs);

}  // namespace cubiclat
