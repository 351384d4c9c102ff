#include "cubiclat/family.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace cubiclat {

namespace {

std::map<std::string, FamilySpec> make_builtins() {
    std::map<std::string, FamilySpec> m;
    auto add = [&m](const std::string& name, std::array<std::string, 3> labels,
                    long g12, long g22, long g13, long g33, IntVec fiber,
                    FiberKind kind) {
        FamilySpec f;
        f.name = name;
        f.basis_labels = std::move(labels);
        f.g12 = g12; f.g22 = g22; f.g13 = g13; f.g33 = g33;
        f.fiber = FiberSpec{std::move(fiber), kind};
        f.rational_via_divisor = true;
        m.emplace(name, std::move(f));
    };
    add("c18-c14", {"h2", "S14", "T"}, 4, 10, 6, 18, {4, 0, -1}, FiberKind::DelPezzo6);
    add("c18-c26", {"h2", "T", "S26"}, 6, 18, 7, 25, {4, -1, 0}, FiberKind::DelPezzo6);
    add("c18-c38", {"h2", "T", "S38"}, 6, 18, 10, 46, {4, -1, 0}, FiberKind::DelPezzo6);
    add("c8-c26", {"h2", "P", "S26"}, 1, 3, 7, 25, {1, -1, 0}, FiberKind::QuadricSurface);
    add("c8-c38", {"h2", "P", "S38"}, 1, 3, 10, 46, {1, -1, 0}, FiberKind::QuadricSurface);
    return m;
}

const std::map<std::string, FamilySpec>& builtins() {
    static const std::map<std::string, FamilySpec> m = make_builtins();
    return m;
}

// Reference closed forms for the built-in discriminant polynomials.
const std::map<std::string, std::array<long, 3>> kDiscPoly = {
    {"c18-c14", {-3, 48, -108}},
    {"c18-c26", {-3, 84, -432}},
    {"c18-c38", {-3, 120, -972}},
    {"c8-c26", {-3, 14, 53}},
    {"c8-c38", {-3, 20, 68}},
};

}  // namespace

const std::vector<std::string>& builtin_family_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, f] : builtins()) v.push_back(name);
        return v;
    }();
    return names;
}

FamilySpec builtin_family(const std::string& name) {
    auto it = builtins().find(name);
    if (it == builtins().end())
        throw std::invalid_argument("unknown family: " + name);
    return it->second;
}

MarkedLattice gram_at_tau(const FamilySpec& f, const Int& tau) {
    MarkedLattice ml;
    ml.lattice.gram = {{f.g11(), f.g12, f.g13},
                       {f.g12, f.g22, tau},
                       {f.g13, tau, f.g33}};
    ml.marked = {1, 0, 0};
    return ml;
}

std::array<Int, 3> discriminant_polynomial(const FamilySpec& f) {
    // det of [[3,g12,g13],[g12,g22,tau],[g13,tau,g33]] expanded in tau
    return {Int(-3), 2 * f.g12 * f.g13,
            3 * f.g22 * f.g33 - f.g12 * f.g12 * f.g33 - f.g13 * f.g13 * f.g22};
}

std::vector<Int> admissible_tau_range(const FamilySpec& f) {
    std::vector<Int> out;
    if (3 * f.g22 - f.g12 * f.g12 <= 0) return out;  // 2x2 minor, tau-free
    const auto [c2, c1, c0] = discriminant_polynomial(f);
    // -3 tau^2 + c1 tau + c0 > 0 requires c1^2 + 12 c0 > 0
    const Int disc = c1 * c1 - 4 * c2 * c0;
    if (disc <= 0) return out;
    const Int radius = boost::multiprecision::sqrt(disc) + 1;
    const Int lo = (c1 - radius) / 6 - 2;
    const Int hi = (c1 + radius) / 6 + 2;
    for (Int tau = lo; tau <= hi; ++tau)
        if (is_positive_definite(gram_at_tau(f, tau).lattice)) out.push_back(tau);
    return out;
}

ComponentClass classify_component(const FamilySpec& f, const Int& tau) {
    const auto range = admissible_tau_range(f);
    if (std::find(range.begin(), range.end(), tau) == range.end())
        throw std::invalid_argument("classify_component: tau outside admissible range");
    const MarkedLattice ml = gram_at_tau(f, tau);
    ComponentClass cc;
    cc.tau = tau;
    cc.discriminant = discriminant(ml.lattice);
    std::vector<IntVec> roots;
    for (auto& v : short_vectors(ml.lattice, 2))
        if (inner(ml.lattice, v, v) == 2) roots.push_back(std::move(v));
    if (roots.empty()) {
        cc.empty = false;
        return cc;
    }
    cc.empty = true;
    // Prefer witnesses orthogonal to h2 (the primitive part), then lex order.
    auto rank = [&](const IntVec& v) { return inner(ml.lattice, v, ml.marked) != 0; };
    auto best = std::min_element(roots.begin(), roots.end(),
                                 [&](const IntVec& a, const IntVec& b) {
                                     const bool ra = rank(a), rb = rank(b);
                                     if (ra != rb) return !ra;
                                     return lex_less(a, b);
                                 });
    cc.witness = *best;
    cc.located_in = rank(cc.witness) ? WitnessLocation::FullLattice
                                     : WitnessLocation::PrimitivePart;
    return cc;
}

bool discriminant_polynomial_check(const FamilySpec& f) {
    auto it = kDiscPoly.find(f.name);
    if (it == kDiscPoly.end())
        throw std::domain_error("discriminant_polynomial_check: not a built-in family");
    const auto& [c2, c1, c0] = it->second;
    for (Int tau = -50; tau <= 50; ++tau) {
        const Int d = discriminant(gram_at_tau(f, tau).lattice);
        if (d != c2 * tau * tau + c1 * tau + c0) return false;
    }
    return true;
}

std::vector<FamilySpec> parse_family_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::vector<FamilySpec> out;
    std::optional<FamilySpec> cur;
    std::map<std::string, bool> seen;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string key;
        if (!(ss >> key) || key[0] == '#') continue;
        if (key == "family") {
            if (cur) fail("nested family block");
            std::string name;
            if (!(ss >> name)) fail("family needs a name");
            cur.emplace();
            cur->name = name;
            cur->basis_labels = {"e1", "e2", "e3"};
            seen.clear();
            continue;
        }
        if (!cur) fail("directive outside a family block");
        if (key == "end") {
            for (const char* req : {"g12", "g22", "g13", "g33"})
                if (!seen.count(req)) fail(std::string("missing pairing ") + req);
            out.push_back(std::move(*cur));
            cur.reset();
        } else if (key == "basis") {
            std::array<std::string, 3> labels;
            if (!(ss >> labels[0] >> labels[1] >> labels[2]))
                fail("basis needs three labels");
            cur->basis_labels = labels;
        } else if (key == "g12" || key == "g22" || key == "g13" || key == "g33") {
            long long v;
            if (!(ss >> v)) fail(key + " needs an integer");
            seen[key] = true;
            if (key == "g12") cur->g12 = v;
            else if (key == "g22") cur->g22 = v;
            else if (key == "g13") cur->g13 = v;
            else cur->g33 = v;
        } else if (key == "fiber") {
            long long a, b, c;
            if (!(ss >> a >> b >> c)) fail("fiber needs three integers");
            if (!cur->fiber) cur->fiber = FiberSpec{{}, FiberKind::DelPezzo6};
            cur->fiber->coefficients = {a, b, c};
        } else if (key == "kind") {
            std::string kind;
            if (!(ss >> kind)) fail("kind needs a value");
            if (!cur->fiber) cur->fiber = FiberSpec{{0, 0, 0}, FiberKind::DelPezzo6};
            if (kind == "del-pezzo-6") cur->fiber->kind = FiberKind::DelPezzo6;
            else if (kind == "quadric-surface") cur->fiber->kind = FiberKind::QuadricSurface;
            else fail("unknown kind: " + kind);
        } else if (key == "rational-divisor") {
            std::string v;
            if (!(ss >> v) || (v != "true" && v != "false"))
                fail("rational-divisor needs true or false");
            cur->rational_via_divisor = (v == "true");
        } else {
            fail("unknown directive: " + key);
        }
    }
    if (cur) fail("family block not closed with 'end'");
    return out;
}

}  // namespace cubiclat
