#include "cubiclat/brauer.hpp"
#include "cubiclat/report.hpp"
#include "cubiclat/sieve.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace cubiclat;

namespace {

// The bindings stay at the 64-bit boundary; every built-in value fits
// comfortably, and the JSON layer covers anything bigger.
long long to_ll(const Int& x) { return x.convert_to<long long>(); }

IntMat mat_from(const std::vector<std::vector<long long>>& m) {
    IntMat out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        out[i].assign(m[i].begin(), m[i].end());
    return out;
}

std::vector<std::vector<long long>> vecs_to(const std::vector<IntVec>& vs) {
    std::vector<std::vector<long long>> out;
    for (const auto& v : vs) {
        std::vector<long long> row;
        for (const auto& x : v) row.push_back(to_ll(x));
        out.push_back(std::move(row));
    }
    return out;
}

FamilySpec resolve(const std::string& name) { return builtin_family(name); }

}  // namespace

PYBIND11_MODULE(_cubiclat, m) {
    m.doc() = "exact lattice classification of cubic fourfold intersection loci";

    m.def("version", &version_string);
    m.def("builtin_families", [] { return builtin_family_names(); });

    m.def("det_exact", [](const std::vector<std::vector<long long>>& mat) {
        return to_ll(det_exact(mat_from(mat)));
    });

    m.def("admissible_tau_range", [](const std::string& family) {
        std::vector<long long> out;
        for (const auto& tau : admissible_tau_range(resolve(family)))
            out.push_back(to_ll(tau));
        return out;
    });

    m.def("short_vectors", [](const std::string& family, long long tau, long long bound) {
        const Lattice l = gram_at_tau(resolve(family), tau).lattice;
        return vecs_to(short_vectors(l, bound));
    });

    m.def("classify", [](const std::string& family, long long tau) {
        const FamilySpec f = resolve(family);
        const ComponentClass cc = classify_component(f, tau);
        py::dict d;
        d["family"] = family;
        d["tau"] = tau;
        d["status"] = cc.empty ? "empty" : "nonempty";
        if (cc.empty) {
            d["witness"] = vecs_to({cc.witness})[0];
            d["located_in"] = to_string(cc.located_in);
        } else {
            d["discriminant"] = to_ll(cc.discriminant);
        }
        return d;
    });

    m.def("sieve", [](const std::string& family, long long tau) {
        const IrreducibilityVerdict v = sieve(resolve(family), tau);
        py::dict d;
        d["tau"] = tau;
        d["irreducible"] = v.irreducible;
        d["candidates_checked"] = to_ll(v.candidates_checked);
        d["shortcut"] = v.shortcut == SieveShortcut::SquarefreeDiscriminant
                            ? "squarefree-discriminant"
                            : "full-sieve";
        py::list ledger;
        for (const auto& c : v.candidates) {
            py::dict e;
            e["n"] = to_ll(c.n);
            e["xprime"] = to_ll(c.xprime);
            e["yprime"] = to_ll(c.yprime);
            e["accepted"] = c.accepted;
            e["reason"] = to_string(c.reason);
            ledger.append(std::move(e));
        }
        d["candidates"] = std::move(ledger);
        return d;
    });

    m.def("brauer", [](const std::string& family, long long tau) {
        const FamilySpec f = resolve(family);
        if (!f.fiber) throw std::domain_error("family has no fiber class");
        py::dict d;
        d["tau"] = tau;
        auto wit = [](const std::optional<CycleWitness>& w) -> py::object {
            if (!w) return py::none();
            return py::make_tuple(to_ll(w->a), to_ll(w->b), to_ll(w->c));
        };
        if (f.fiber->kind == FiberKind::DelPezzo6) {
            const DP6Report r = dp6_report(f, tau);
            d["kind"] = "del-pezzo-6";
            d["b2"] = r.b2_trivial ? "trivial" : "nontrivial";
            d["b2_witness"] = wit(r.b2_witness);
            d["b3"] = r.b3_trivial ? "trivial" : "nontrivial";
            d["b3_witness"] = wit(r.b3_witness);
            d["both_trivial"] = r.both_trivial;
        } else {
            const QuadricReport r = quadric_report(f, tau);
            d["kind"] = "quadric-surface";
            d["beta"] = r.beta_trivial ? "trivial" : "nontrivial";
            d["beta_witness"] = wit(r.witness);
            d["canonical_witness"] = wit(r.canonical_witness);
        }
        return d;
    });

    m.def("report", [](const std::string& family, const std::string& format) {
        return serialize(build_report(resolve(family)), parse_format(format));
    });

    m.def("verify", [](const std::string& family) {
        const VerifyResult res = run_verify(family);
        py::dict d;
        d["ok"] = res.ok;
        d["lines"] = res.lines;
        d["summary"] = res.summary;
        return d;
    }, py::arg("family") = "");
}
