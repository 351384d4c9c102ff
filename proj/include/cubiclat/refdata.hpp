#pragma once

// Reference values for the built-in families, used by `verify` and by the
// test suite.  Everything here is recomputable by the library; the tables
// exist so that recomputation is checked against frozen values.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cubiclat::refdata {

using Triple = std::array<long, 3>;

struct RangeRef {
    long lo, hi;
};

struct EmptyRef {
    long tau;
    Triple witness;  // canonical sign (first nonzero coordinate positive)
    bool primitive_part;
};

struct DP6Row {
    long tau;
    std::optional<Triple> w2;  // degree-2 multisection witness, a = 0 form
    std::optional<Triple> w3;  // degree-3 multisection witness
};

const std::map<std::string, RangeRef>& admissible_ranges();
const std::map<std::string, std::vector<EmptyRef>>& empty_components();
// Discriminants of the nonempty components, tau ascending.
const std::map<std::string, std::vector<long>>& discriminant_lists();
const std::map<std::string, std::vector<DP6Row>>& dp6_tables();
// Quadric families: true if beta is trivial exactly at even tau.
const std::map<std::string, bool>& quadric_trivial_at_even_tau();
// tau values with no rational section (beta nontrivial).
const std::map<std::string, std::vector<long>>& quadric_no_section_taus();
// tau -> expected overlattice index set, where recorded.
const std::map<std::string, std::map<long, std::vector<long>>>& candidate_index_sets();

}  // namespace cubiclat::refdata
