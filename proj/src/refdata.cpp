#include "cubiclat/refdata.hpp"

namespace cubiclat::refdata {

const std::map<std::string, RangeRef>& admissible_ranges() {
    static const std::map<std::string, RangeRef> m = {
        {"c18-c14", {3, 13}},  {"c18-c26", {7, 21}}, {"c18-c38", {12, 28}},
        {"c8-c26", {-2, 7}},   {"c8-c38", {-2, 9}},
    };
    return m;
}

const std::map<std::string, std::vector<EmptyRef>>& empty_components() {
    static const std::map<std::string, std::vector<EmptyRef>> m = {
        {"c18-c14", {{3, {4, -1, -1}, false}, {13, {0, 1, -1}, false}}},
        {"c18-c26", {{7, {5, -1, -1}, false}, {21, {1, 1, -1}, false}}},
        {"c18-c38", {}},
        {"c8-c26", {{-2, {3, -2, -1}, true}, {7, {2, 1, -1}, true}}},
        {"c8-c38", {{-2, {4, -2, -1}, true}, {9, {2, 2, -1}, false}}},
    };
    return m;
}

const std::map<std::string, std::vector<long>>& discriminant_lists() {
    static const std::map<std::string, std::vector<long>> m = {
        {"c18-c14", {36, 57, 72, 81, 84, 81, 72, 57, 36}},
        {"c18-c26", {48, 81, 108, 129, 144, 153, 156, 153, 144, 129, 108, 81, 48}},
        {"c18-c38", {36, 81, 120, 153, 180, 201, 216, 225, 228, 225, 216, 201,
                     180, 153, 120, 81, 36}},
        {"c8-c26", {36, 53, 64, 69, 68, 61, 48, 29}},
        {"c8-c38", {45, 68, 85, 96, 101, 100, 93, 80, 61, 36}},
    };
    return m;
}

const std::map<std::string, std::vector<DP6Row>>& dp6_tables() {
    static const std::map<std::string, std::vector<DP6Row>> m = {
        {"c18-c14",
         {{4, {}, {}},
          {5, Triple{0, 4, -7}, Triple{0, 3, -5}},
          {6, Triple{0, 2, -3}, {}},
          {7, {}, Triple{0, 1, -1}},
          {8, Triple{0, 1, -1}, {}},
          {9, Triple{0, 2, -2}, Triple{0, 3, -3}},
          {10, {}, {}},
          {11, Triple{0, 4, -3}, Triple{0, 3, -2}},
          {12, Triple{0, 2, -1}, {}}}},
        {"c18-c26",
         {{8, Triple{0, 7, -2}, {}},
          {9, Triple{0, 13, -4}, Triple{0, 10, -3}},
          {10, {}, {}},
          {11, Triple{0, 6, -2}, Triple{0, 9, -3}},
          {12, Triple{0, 3, -1}, {}},
          {13, {}, Triple{0, 3, -1}},
          {14, Triple{0, 5, -2}, {}},
          {15, Triple{0, 9, -4}, Triple{0, 7, -3}},
          {16, {}, {}},
          {17, Triple{0, 4, -2}, Triple{0, 6, -3}},
          {18, Triple{0, 2, -1}, {}},
          {19, {}, Triple{0, 2, -1}},
          {20, Triple{0, 3, -2}, {}}}},
        {"c18-c38",
         {{12, Triple{0, 5, -1}, {}},
          {13, {}, Triple{0, 5, -1}},
          {14, Triple{0, 9, -2}, {}},
          {15, Triple{0, 17, -4}, Triple{0, 13, -3}},
          {16, {}, {}},
          {17, Triple{0, 8, -2}, Triple{0, 12, -3}},
          {18, Triple{0, 4, -1}, {}},
          {19, {}, Triple{0, 4, -1}},
          {20, Triple{0, 7, -2}, {}},
          {21, Triple{0, 13, -4}, Triple{0, 10, -3}},
          {22, {}, {}},
          {23, Triple{0, 6, -2}, Triple{0, 9, -3}},
          {24, Triple{0, 3, -1}, {}},
          {25, {}, Triple{0, 3, -1}},
          {26, Triple{0, 5, -2}, {}},
          {27, Triple{0, 9, -4}, Triple{0, 7, -3}},
          {28, {}, {}}}},
    };
    return m;
}

const std::map<std::string, bool>& quadric_trivial_at_even_tau() {
    static const std::map<std::string, bool> m = {
        {"c8-c26", true},
        {"c8-c38", false},
    };
    return m;
}

const std::map<std::string, std::vector<long>>& quadric_no_section_taus() {
    static const std::map<std::string, std::vector<long>> m = {
        {"c8-c26", {-1, 1, 3, 5}},
        {"c8-c38", {0, 2, 4, 6, 8}},
    };
    return m;
}

const std::map<std::string, std::map<long, std::vector<long>>>& candidate_index_sets() {
    static const std::map<std::string, std::map<long, std::vector<long>>> m = {
        {"c8-c26", {{-1, {2, 3, 6}}, {1, {2, 4, 8}}, {3, {2}}, {5, {2, 4}}}},
    };
    return m;
}

}  // namespace cubiclat::refdata
