#include "cubiclat/brauer.hpp"
#include "cubiclat/report.hpp"
#include "cubiclat/sieve.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cubiclat;

namespace {

struct FamilyRegistry {
    std::string config_path;

    FamilySpec resolve(const std::string& name) const {
        if (!config_path.empty())
            for (auto& f : parse_family_config(config_path))
                if (f.name == name) return f;
        return builtin_family(name);
    }
};

std::string rat_str(const Rat& x) {
    std::ostringstream ss;
    ss << x;
    return ss.str();
}

std::string ratmat_str(const RatMat& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m[i].size(); ++j)
            s += (j ? ", " : "") + rat_str(m[i][j]);
        s += "]";
    }
    return s + "]";
}

std::string vec_str(const IntVec& v) {
    std::ostringstream ss;
    ss << "(";
    for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? " " : "") << v[i];
    ss << ")";
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write to " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubiclat: exact lattice classification of cubic fourfold "
                 "intersection loci"};
    app.require_subcommand(1);

    FamilyRegistry registry;
    app.add_option("--config", registry.config_path,
                   "family config file with user-defined families")
        ->check(CLI::ExistingFile);

    std::string family, format = "json", out_path;
    long long tau = 0, bound = 2, k = 2;

    auto* rep = app.add_subcommand("report", "full component report for a family");
    rep->add_option("--family", family, "family name")->required();
    rep->add_option("--format", format, "json | markdown | csv");
    rep->add_option("--out", out_path, "write output to a file");

    std::string verify_family;
    auto* ver = app.add_subcommand("verify",
                                   "recompute and check the built-in reference tables");
    ver->add_option("--family", verify_family, "restrict to one built-in family");

    auto* cls = app.add_subcommand("classify", "empty/nonempty verdict for one component");
    cls->add_option("family", family, "family name")->required();
    cls->add_option("--tau", tau, "tau value")->required();

    auto* sv = app.add_subcommand("shortvec", "enumerate short vectors");
    sv->add_option("family", family, "family name")->required();
    sv->add_option("--tau", tau, "tau value")->required();
    sv->add_option("--bound", bound, "norm bound");

    auto* ov = app.add_subcommand("overlattices", "overlattice candidate ledger");
    ov->add_option("family", family, "family name")->required();
    ov->add_option("--tau", tau, "tau value")->required();

    auto* br = app.add_subcommand("brauer", "Brauer class report for one component");
    br->add_option("family", family, "family name")->required();
    br->add_option("--tau", tau, "tau value")->required();
    br->add_option("--k", k, "also print the degree-k multisection witness");

    auto* fam = app.add_subcommand("families", "list registered family specs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (rep->parsed()) {
            const FamilySpec f = registry.resolve(family);
            emit(serialize(build_report(f), parse_format(format)), out_path);
            return 0;
        }
        if (ver->parsed()) {
            const VerifyResult res = run_verify(verify_family);
            for (const auto& line : res.lines) std::cout << line << "\n";
            std::cout << res.summary << "\n";
            return res.ok ? 0 : 1;
        }
        if (cls->parsed()) {
            const FamilySpec f = registry.resolve(family);
            const ComponentClass cc = classify_component(f, tau);
            std::cout << "family=" << f.name << " tau=" << tau;
            if (cc.empty)
                std::cout << " status=empty witness=" << vec_str(cc.witness)
                          << " located_in=" << to_string(cc.located_in) << "\n";
            else
                std::cout << " status=nonempty d=" << cc.discriminant << "\n";
            return 0;
        }
        if (sv->parsed()) {
            const FamilySpec f = registry.resolve(family);
            const Lattice l = gram_at_tau(f, tau).lattice;
            for (const auto& v : short_vectors(l, bound))
                std::cout << vec_str(v) << " norm=" << inner(l, v, v) << "\n";
            return 0;
        }
        if (ov->parsed()) {
            const FamilySpec f = registry.resolve(family);
            const IrreducibilityVerdict v = sieve(f, tau);
            std::cout << "family=" << f.name << " tau=" << tau
                      << " candidates=" << v.candidates_checked << " shortcut="
                      << (v.shortcut == SieveShortcut::SquarefreeDiscriminant
                              ? "squarefree-discriminant"
                              : "full-sieve")
                      << "\n";
            for (const auto& c : v.candidates) {
                std::cout << "n=" << c.n << " x'=" << c.xprime << " y'=" << c.yprime
                          << (c.accepted ? " ACCEPTED"
                                         : std::string(" rejected ") + to_string(c.reason))
                          << " gram_B=" << ratmat_str(c.gram_B)
                          << " gram_B0=" << ratmat_str(c.gram_B0) << "\n";
            }
            std::cout << "irreducible=" << (v.irreducible ? "yes" : "no") << "\n";
            return 0;
        }
        if (br->parsed()) {
            const FamilySpec f = registry.resolve(family);
            if (!f.fiber) throw std::domain_error("family has no fiber class");
            const IntVec form = fiber_pairing_form(f, tau);
            std::cout << "family=" << f.name << " tau=" << tau
                      << " pairing_form=" << vec_str(form) << "\n";
            if (f.fiber->kind == FiberKind::DelPezzo6) {
                const DP6Report r = dp6_report(f, tau);
                auto wit = [](const std::optional<CycleWitness>& w) {
                    if (!w) return std::string("-");
                    std::ostringstream ss;
                    ss << "W(" << w->a << "," << w->b << "," << w->c << ")";
                    return ss.str();
                };
                std::cout << "b2=" << (r.b2_trivial ? "trivial" : "nontrivial")
                          << " witness=" << wit(r.b2_witness) << "\n"
                          << "b3=" << (r.b3_trivial ? "trivial" : "nontrivial")
                          << " witness=" << wit(r.b3_witness) << "\n"
                          << "both_trivial=" << (r.both_trivial ? "yes" : "no") << "\n";
            } else {
                const QuadricReport r = quadric_report(f, tau);
                std::cout << "beta=" << (r.beta_trivial ? "trivial" : "nontrivial");
                if (r.witness)
                    std::cout << " witness=W(" << r.witness->a << "," << r.witness->b
                              << "," << r.witness->c << ")";
                if (r.justification == NontrivialityJustification::EvenDiscriminantRank3)
                    std::cout << " justification=even-discriminant-rank-3";
                std::cout << "\n";
            }
            if (auto w = multisection_witness(f, tau, k))
                std::cout << "k=" << k << " witness=W(" << w->a << "," << w->b << ","
                          << w->c << ")\n";
            else
                std::cout << "k=" << k << " witness=-\n";
            return 0;
        }
        if (fam->parsed()) {
            std::vector<FamilySpec> specs;
            for (const auto& name : builtin_family_names())
                specs.push_back(builtin_family(name));
            if (!registry.config_path.empty())
                for (auto& f : parse_family_config(registry.config_path))
                    specs.push_back(std::move(f));
            for (const auto& f : specs) {
                std::cout << f.name << ": basis (" << f.basis_labels[0] << ", "
                          << f.basis_labels[1] << ", " << f.basis_labels[2]
                          << ") g12=" << f.g12 << " g22=" << f.g22
                          << " g13=" << f.g13 << " g33=" << f.g33;
                if (f.fiber)
                    std::cout << " fiber=" << vec_str(f.fiber->coefficients) << " kind="
                              << (f.fiber->kind == FiberKind::DelPezzo6
                                      ? "del-pezzo-6"
                                      : "quadric-surface");
                std::cout << "\n";
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
