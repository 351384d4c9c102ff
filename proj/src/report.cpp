#include "cubiclat/report.hpp"

#include "cubiclat/refdata.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace cubiclat {

using ordered_json = nlohmann::ordered_json;

const char* to_string(WitnessLocation loc) {
    return loc == WitnessLocation::FullLattice ? "full-lattice" : "primitive-part";
}

std::string version_string() { return "1.0.0"; }

ReportFormat parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "markdown") return ReportFormat::Markdown;
    if (s == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown format: " + s);
}

namespace {

std::string int_str(const Int& x) {
    std::ostringstream ss;
    ss << x;
    return ss.str();
}

// Integers go out as JSON numbers when they fit in 64 bits, otherwise as
// decimal strings (the schema permits both).
ordered_json json_int(const Int& x) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (x >= lo && x <= hi) return x.convert_to<long long>();
    return int_str(x);
}

Int int_from_json(const ordered_json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<long long>());
}

ordered_json json_vec(const IntVec& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(json_int(x));
    return a;
}

IntVec vec_from_json(const ordered_json& j) {
    IntVec v;
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

std::string vec_str(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += int_str(v[i]);
    }
    return s + ")";
}

IntVec witness_vec(const CycleWitness& w) { return {w.a, w.b, w.c}; }

const char* triv(bool b) { return b ? "trivial" : "nontrivial"; }
const char* yesno(bool b) { return b ? "yes" : "no"; }

enum class Kind { Plain, DP6, Quadric };

Kind report_kind(const IntersectionReport& r) {
    for (const auto& row : r.rows) {
        if (row.dp6) return Kind::DP6;
        if (row.quadric) return Kind::Quadric;
    }
    return Kind::Plain;
}

std::vector<std::string> columns(Kind k) {
    std::vector<std::string> cols = {"tau",     "status",          "discriminant",
                                     "witness", "witness_location", "irreducible",
                                     "candidates_checked"};
    if (k == Kind::DP6) {
        for (const char* c : {"w2", "w3", "b2", "b3", "both_trivial",
                              "rational_via_fibration", "rational_via_divisor"})
            cols.push_back(c);
    } else if (k == Kind::Quadric) {
        for (const char* c : {"beta", "beta_witness", "canonical_witness",
                              "nontriviality_justification"})
            cols.push_back(c);
    }
    return cols;
}

std::vector<std::string> row_cells(const ReportRow& row, Kind k) {
    std::vector<std::string> cells;
    cells.push_back(int_str(row.tau));
    cells.push_back(row.empty ? "empty" : "nonempty");
    cells.push_back(int_str(row.discriminant));
    cells.push_back(row.witness ? vec_str(*row.witness) : "-");
    cells.push_back(row.witness_location ? to_string(*row.witness_location) : "-");
    cells.push_back(row.irreducible ? yesno(*row.irreducible) : "-");
    cells.push_back(row.candidates_checked ? int_str(*row.candidates_checked) : "-");
    if (k == Kind::DP6) {
        if (row.dp6) {
            const auto& d = *row.dp6;
            cells.push_back(d.b2_witness ? vec_str(witness_vec(*d.b2_witness)) : "-");
            cells.push_back(d.b3_witness ? vec_str(witness_vec(*d.b3_witness)) : "-");
            cells.push_back(triv(d.b2_trivial));
            cells.push_back(triv(d.b3_trivial));
            cells.push_back(yesno(d.both_trivial));
            cells.push_back(yesno(d.rational_via_fibration));
            cells.push_back(yesno(d.rational_via_divisor));
        } else {
            for (int i = 0; i < 7; ++i) cells.push_back("-");
        }
    } else if (k == Kind::Quadric) {
        if (row.quadric) {
            const auto& q = *row.quadric;
            cells.push_back(triv(q.beta_trivial));
            cells.push_back(q.witness ? vec_str(witness_vec(*q.witness)) : "-");
            cells.push_back(q.canonical_witness
                                ? vec_str(witness_vec(*q.canonical_witness))
                                : "-");
            cells.push_back(q.justification ==
                                    NontrivialityJustification::EvenDiscriminantRank3
                                ? "even-discriminant-rank-3"
                                : "-");
        } else {
            for (int i = 0; i < 4; ++i) cells.push_back("-");
        }
    }
    return cells;
}

ordered_json witness_json(const std::optional<CycleWitness>& w) {
    if (!w) return nullptr;
    return json_vec(witness_vec(*w));
}

}  // namespace

IntersectionReport build_report(const FamilySpec& f) {
    IntersectionReport r;
    r.family = f.name;
    r.generated_by = "cubiclat " + version_string();
    if (f.fiber) {
        if (f.fiber->kind == FiberKind::DelPezzo6)
            r.assumptions.push_back("good sextic del Pezzo fibration");
        else
            r.assumptions.push_back("quadric surface bundle from a contained plane");
    }
    for (const Int& tau : admissible_tau_range(f)) {
        const ComponentClass cc = classify_component(f, tau);
        ReportRow row;
        row.tau = tau;
        row.empty = cc.empty;
        row.discriminant = discriminant(gram_at_tau(f, tau).lattice);
        if (cc.empty) {
            row.witness = cc.witness;
            row.witness_location = cc.located_in;
        } else {
            const IrreducibilityVerdict v = sieve(f, tau);
            row.irreducible = v.irreducible;
            row.candidates_checked = v.candidates_checked;
            if (f.fiber) {
                if (f.fiber->kind == FiberKind::DelPezzo6)
                    row.dp6 = dp6_report(f, tau);
                else
                    row.quadric = quadric_report(f, tau);
            }
        }
        r.rows.push_back(std::move(row));
    }
    return r;
}

std::string serialize(const IntersectionReport& r, ReportFormat fmt) {
    const Kind kind = report_kind(r);
    if (fmt == ReportFormat::Json) {
        ordered_json j;
        j["family"] = r.family;
        j["generated_by"] = r.generated_by;
        j["assumptions"] = r.assumptions;
        j["rows"] = ordered_json::array();
        for (const auto& row : r.rows) {
            ordered_json o;
            o["tau"] = json_int(row.tau);
            o["status"] = row.empty ? "empty" : "nonempty";
            o["discriminant"] = json_int(row.discriminant);
            o["witness"] = row.witness ? json_vec(*row.witness) : ordered_json(nullptr);
            o["witness_location"] =
                row.witness_location ? ordered_json(to_string(*row.witness_location))
                                     : ordered_json(nullptr);
            o["irreducible"] =
                row.irreducible ? ordered_json(*row.irreducible) : ordered_json(nullptr);
            o["candidates_checked"] = row.candidates_checked
                                          ? json_int(*row.candidates_checked)
                                          : ordered_json(nullptr);
            if (row.dp6) {
                const auto& d = *row.dp6;
                o["b2"] = triv(d.b2_trivial);
                o["b2_witness"] = witness_json(d.b2_witness);
                o["b3"] = triv(d.b3_trivial);
                o["b3_witness"] = witness_json(d.b3_witness);
                o["both_trivial"] = d.both_trivial;
                o["rational_via_fibration"] = d.rational_via_fibration;
                o["rational_via_divisor"] = d.rational_via_divisor;
            }
            if (row.quadric) {
                const auto& q = *row.quadric;
                o["beta"] = triv(q.beta_trivial);
                o["beta_witness"] = witness_json(q.witness);
                o["canonical_witness"] = witness_json(q.canonical_witness);
                o["nontriviality_justification"] =
                    q.justification == NontrivialityJustification::EvenDiscriminantRank3
                        ? ordered_json("even-discriminant-rank-3")
                        : ordered_json(nullptr);
            }
            j["rows"].push_back(std::move(o));
        }
        return j.dump(2) + "\n";
    }

    const auto cols = columns(kind);
    std::string out;
    if (fmt == ReportFormat::Markdown) {
        out += "# Component report: " + r.family + "\n\n";
        out += "Generated by: " + r.generated_by + "\n\n";
        if (!r.assumptions.empty()) {
            out += "Assumptions:\n";
            for (const auto& a : r.assumptions) out += "- " + a + "\n";
            out += "\n";
        }
        auto line = [&out](const std::vector<std::string>& cells) {
            out += "|";
            for (const auto& c : cells) out += " " + c + " |";
            out += "\n";
        };
        line(cols);
        line(std::vector<std::string>(cols.size(), "---"));
        for (const auto& row : r.rows) line(row_cells(row, kind));
        return out;
    }

    // csv
    for (std::size_t i = 0; i < cols.size(); ++i)
        out += (i ? "," : "") + cols[i];
    out += "\n";
    for (const auto& row : r.rows) {
        const auto cells = row_cells(row, kind);
        for (std::size_t i = 0; i < cells.size(); ++i)
            out += (i ? "," : "") + cells[i];
        out += "\n";
    }
    return out;
}

IntersectionReport parse_json_report(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("invalid report JSON: ") + e.what());
    }
    IntersectionReport r;
    try {
        r.family = j.at("family").get<std::string>();
        r.generated_by = j.at("generated_by").get<std::string>();
        for (const auto& a : j.at("assumptions"))
            r.assumptions.push_back(a.get<std::string>());
        for (const auto& o : j.at("rows")) {
            ReportRow row;
            row.tau = int_from_json(o.at("tau"));
            row.empty = o.at("status").get<std::string>() == "empty";
            row.discriminant = int_from_json(o.at("discriminant"));
            if (!o.at("witness").is_null()) row.witness = vec_from_json(o.at("witness"));
            if (!o.at("witness_location").is_null())
                row.witness_location =
                    o.at("witness_location").get<std::string>() == "full-lattice"
                        ? WitnessLocation::FullLattice
                        : WitnessLocation::PrimitivePart;
            if (!o.at("irreducible").is_null())
                row.irreducible = o.at("irreducible").get<bool>();
            if (!o.at("candidates_checked").is_null())
                row.candidates_checked = int_from_json(o.at("candidates_checked"));
            auto load_witness = [&](const char* key) -> std::optional<CycleWitness> {
                if (!o.contains(key) || o.at(key).is_null()) return std::nullopt;
                const IntVec v = vec_from_json(o.at(key));
                return CycleWitness{v[0], v[1], v[2], 0};
            };
            if (o.contains("b2")) {
                DP6Report d;
                d.tau = row.tau;
                d.b2_trivial = o.at("b2").get<std::string>() == "trivial";
                d.b3_trivial = o.at("b3").get<std::string>() == "trivial";
                d.b2_witness = load_witness("b2_witness");
                d.b3_witness = load_witness("b3_witness");
                d.both_trivial = o.at("both_trivial").get<bool>();
                d.rational_via_fibration = o.at("rational_via_fibration").get<bool>();
                d.rational_via_divisor = o.at("rational_via_divisor").get<bool>();
                row.dp6 = std::move(d);
            }
            if (o.contains("beta")) {
                QuadricReport q;
                q.tau = row.tau;
                q.beta_trivial = o.at("beta").get<std::string>() == "trivial";
                q.witness = load_witness("beta_witness");
                q.canonical_witness = load_witness("canonical_witness");
                q.justification =
                    o.at("nontriviality_justification").is_null()
                        ? NontrivialityJustification::None
                        : NontrivialityJustification::EvenDiscriminantRank3;
                row.quadric = std::move(q);
            }
            r.rows.push_back(std::move(row));
        }
    } catch (const ordered_json::exception& e) {
        throw std::runtime_error(std::string("report JSON schema mismatch: ") + e.what());
    }
    return r;
}

VerifyResult run_verify(const std::string& family_filter) {
    VerifyResult res;
    auto check = [&res](const std::string& name, bool pass) {
        res.lines.push_back(std::string(pass ? "[ok]   " : "[FAIL] ") + name);
        if (!pass) res.ok = false;
    };

    std::vector<std::string> names;
    if (family_filter.empty()) {
        names = builtin_family_names();
    } else {
        builtin_family(family_filter);  // throws on unknown name
        names = {family_filter};
    }

    long rows_verified = 0;
    for (const auto& name : names) {
        const FamilySpec f = builtin_family(name);
        const auto range = admissible_tau_range(f);
        rows_verified += static_cast<long>(range.size());

        // 1. admissible range
        const auto& rr = refdata::admissible_ranges().at(name);
        bool range_ok = !range.empty() && range.front() == rr.lo && range.back() == rr.hi &&
                        range.size() == static_cast<std::size_t>(rr.hi - rr.lo + 1);
        check(name + ": admissible tau range " + std::to_string(rr.lo) + ".." +
                  std::to_string(rr.hi),
              range_ok);

        // 2. discriminant polynomial closed form
        check(name + ": discriminant polynomial closed form",
              discriminant_polynomial_check(f));

        // 3. empty components and witnesses
        bool empties_ok = true;
        const auto& erefs = refdata::empty_components().at(name);
        std::vector<Int> empty_taus;
        for (const Int& tau : range) {
            const ComponentClass cc = classify_component(f, tau);
            if (cc.empty) empty_taus.push_back(tau);
        }
        if (empty_taus.size() != erefs.size()) empties_ok = false;
        for (const auto& e : erefs) {
            const ComponentClass cc = classify_component(f, e.tau);
            if (!cc.empty) { empties_ok = false; continue; }
            const IntVec expect(e.witness.begin(), e.witness.end());
            if (cc.witness != expect) empties_ok = false;
            if (inner(gram_at_tau(f, e.tau).lattice, cc.witness, cc.witness) != 2)
                empties_ok = false;
            const bool prim = cc.located_in == WitnessLocation::PrimitivePart;
            if (prim != e.primitive_part) empties_ok = false;
        }
        check(name + ": empty components and norm-2 witnesses", empties_ok);

        // 4. discriminant list over the nonempty components
        std::vector<long> discs;
        for (const Int& tau : range) {
            const ComponentClass cc = classify_component(f, tau);
            if (!cc.empty) discs.push_back(cc.discriminant.convert_to<long>());
        }
        check(name + ": discriminant list",
              discs == refdata::discriminant_lists().at(name));

        // 5. irreducibility sieve
        bool sieve_ok = true;
        for (const Int& tau : range) {
            if (classify_component(f, tau).empty) continue;
            const IrreducibilityVerdict v = sieve(f, tau);
            if (!v.irreducible) sieve_ok = false;
            Int expect_checked = 0;
            for (const Int& n : candidate_indices(discriminant(gram_at_tau(f, tau).lattice)))
                expect_checked += n * n;
            if (v.candidates_checked != expect_checked) sieve_ok = false;
        }
        check(name + ": all nonempty components irreducible", sieve_ok);

        // 5b. recorded overlattice index sets
        auto cit = refdata::candidate_index_sets().find(name);
        if (cit != refdata::candidate_index_sets().end()) {
            bool sets_ok = true;
            for (const auto& [tau, expect] : cit->second) {
                std::vector<long> got;
                for (const Int& n :
                     candidate_indices(discriminant(gram_at_tau(f, tau).lattice)))
                    got.push_back(n.convert_to<long>());
                if (got != expect) sets_ok = false;
            }
            check(name + ": overlattice index sets", sets_ok);
        }

        // 6. Brauer tables / theorems
        if (f.fiber && f.fiber->kind == FiberKind::DelPezzo6) {
            bool table_ok = true;
            for (const auto& row : refdata::dp6_tables().at(name)) {
                const DP6Report rep = dp6_report(f, row.tau);
                if (rep.b2_trivial != row.w2.has_value()) table_ok = false;
                if (rep.b3_trivial != row.w3.has_value()) table_ok = false;
                auto match = [](const std::optional<CycleWitness>& got,
                                const std::optional<refdata::Triple>& want) {
                    if (got.has_value() != want.has_value()) return false;
                    if (!got) return true;
                    return got->a == (*want)[0] && got->b == (*want)[1] &&
                           got->c == (*want)[2];
                };
                if (!match(rep.b2_witness, row.w2)) table_ok = false;
                if (!match(rep.b3_witness, row.w3)) table_ok = false;
            }
            check(name + ": multisection table", table_ok);
        }
        if (f.fiber && f.fiber->kind == FiberKind::QuadricSurface) {
            bool parity_ok = true;
            std::vector<long> no_section;
            const bool trivial_even = refdata::quadric_trivial_at_even_tau().at(name);
            for (const Int& tau : range) {
                if (classify_component(f, tau).empty) continue;
                const QuadricReport q = quadric_report(f, tau);
                const bool even = tau % 2 == 0;
                if (q.beta_trivial != (trivial_even ? even : !even)) parity_ok = false;
                if (!q.beta_trivial) {
                    no_section.push_back(tau.convert_to<long>());
                    if (discriminant(gram_at_tau(f, tau).lattice) % 2 != 0)
                        parity_ok = false;
                }
            }
            if (no_section != refdata::quadric_no_section_taus().at(name))
                parity_ok = false;
            check(name + ": quadric parity theorem", parity_ok);
        }

        // 7. oracle agreement
        bool oracle_ok = true;
        for (const Int& tau : range)
            for (int bound = 2; bound <= 4; ++bound) {
                const Lattice l = gram_at_tau(f, tau).lattice;
                if (short_vectors(l, bound) != short_vectors_bruteforce(l, bound))
                    oracle_ok = false;
            }
        check(name + ": short-vector oracle agreement (bounds 2-4)", oracle_ok);

        // 8. serialization round-trip
        const IntersectionReport rep = build_report(f);
        const std::string js = serialize(rep, ReportFormat::Json);
        IntersectionReport parsed = parse_json_report(js);
        check(name + ": report serialization round-trip",
              serialize(parsed, ReportFormat::Json) == js);
    }

    std::ostringstream summary;
    summary << names.size() << (names.size() == 1 ? " family, " : " families, ")
            << names.size() << " discriminant polynomial"
            << (names.size() == 1 ? "" : "s") << ", " << rows_verified
            << " component rows verified";
    res.summary = summary.str();
    return res;
}

}  // namespace cubiclat
