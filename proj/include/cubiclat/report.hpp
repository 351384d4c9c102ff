#pragma once

// Report assembly and serialization (json / markdown / csv), plus the
// one-shot verification of the built-in reference tables.

#include "cubiclat/brauer.hpp"
#include "cubiclat/sieve.hpp"

#include <optional>

namespace cubiclat {

struct ReportRow {
    Int tau;
    bool empty = false;
    Int discriminant;
    std::optional<IntVec> witness;  // empty components only
    std::optional<WitnessLocation> witness_location;
    std::optional<bool> irreducible;  // nonempty components only
    std::optional<Int> candidates_checked;
    std::optional<DP6Report> dp6;
    std::optional<QuadricReport> quadric;
};

struct IntersectionReport {
    std::string family;
    std::string generated_by;
    std::vector<std::string> assumptions;
    std::vector<ReportRow> rows;  // tau ascending, one per admissible tau
};

enum class ReportFormat { Json, Markdown, Csv };

ReportFormat parse_format(const std::string& s);  // throws on unknown format

IntersectionReport build_report(const FamilySpec& f);

std::string serialize(const IntersectionReport& r, ReportFormat fmt);

// Parse an emitted JSON report back (used for round-trip checks).
// Throws std::runtime_error if the payload does not match the schema.
IntersectionReport parse_json_report(const std::string& text);

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> lines;  // one "[ok]/[FAIL] ..." line per check
    std::string summary;
};

// Re-derives every reference table for the requested built-in families
// (all of them when the filter is empty) and reports mismatches.
VerifyResult run_verify(const std::string& family_filter = "");

const char* to_string(WitnessLocation loc);
std::string version_string();

}  // namespace cubiclat
