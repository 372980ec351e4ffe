#include "bidisc/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace bidisc {

namespace {

using Json = nlohmann::ordered_json;

Complex parse_complex(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im") ||
        !j["re"].is_number() || !j["im"].is_number())
        throw ParseError(where + ": complex values are {re, im} objects");
    return {j["re"].get<double>(), j["im"].get<double>()};
}

const std::set<std::string> kKnownChecks = {
    "coeff_criterion", "radial_constancy", "cross_condition",  "is_wandering_span",
    "orthonormal_system", "contains",      "wandering_recovery", "isometry",
    "factorization"};

}  // namespace

const std::vector<VectorRecord>* Scenario::find_vector(const std::string& name) const {
    for (const auto& [n, v] : vectors)
        if (n == name) return &v;
    return nullptr;
}

const SubspaceSpec* Scenario::find_subspace(const std::string& name) const {
    for (const auto& [n, s] : subspaces)
        if (n == name) return &s;
    return nullptr;
}

Scenario parse_scenario(const std::string& json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("scenario root must be an object");

    Scenario s;
    try {
        if (j.contains("name")) s.name = j["name"].get<std::string>();
        if (j.contains("cap")) s.cap = j["cap"].get<int>();
        if (j.contains("tol")) s.tol = j["tol"].get<double>();
        if (j.contains("samples")) s.samples = j["samples"].get<int>();

        if (j.contains("vectors")) {
            if (!j["vectors"].is_object()) throw ParseError("'vectors' must be an object");
            for (const auto& [name, arr] : j["vectors"].items()) {
                if (!arr.is_array()) throw ParseError("vector '" + name + "' must be a record list");
                std::vector<VectorRecord> recs;
                for (const Json& r : arr) {
                    VectorRecord rec;
                    if (!r.contains("basis") || !r["basis"].is_string())
                        throw ParseError("vector '" + name + "': records need a 'basis' tag");
                    rec.basis = r["basis"].get<std::string>();
                    if (rec.basis == "monomial_zw") {
                        if (!r.contains("index") || !r["index"].is_array() || r["index"].size() != 2)
                            throw ParseError("vector '" + name + "': monomial_zw index is [m, n]");
                        rec.m = r["index"][0].get<int>();
                        rec.n = r["index"][1].get<int>();
                    } else {
                        if (!r.contains("index") || !r["index"].is_number_integer())
                            throw ParseError("vector '" + name + "': index must be an integer");
                        rec.n = r["index"].get<int>();
                    }
                    if (!r.contains("re") || !r.contains("im"))
                        throw ParseError("vector '" + name + "': records need re and im");
                    rec.amplitude = {r["re"].get<double>(), r["im"].get<double>()};
                    recs.push_back(rec);
                }
                s.vectors.emplace_back(name, std::move(recs));
            }
        }

        if (j.contains("subspaces")) {
            if (!j["subspaces"].is_object()) throw ParseError("'subspaces' must be an object");
            for (const auto& [name, spec] : j["subspaces"].items()) {
                SubspaceSpec sp;
                if (spec.contains("generators")) {
                    for (const Json& g : spec["generators"]) sp.generators.push_back(g.get<std::string>());
                }
                if (spec.contains("zeros")) {
                    for (const Json& z : spec["zeros"])
                        sp.zeros.push_back(parse_complex(z, "subspace '" + name + "'"));
                }
                s.subspaces.emplace_back(name, std::move(sp));
            }
        }

        if (j.contains("checks")) {
            if (!j["checks"].is_array()) throw ParseError("'checks' must be an array");
            for (const Json& c : j["checks"]) {
                CheckSpec spec;
                if (!c.contains("check") || !c["check"].is_string())
                    throw ParseError("every check needs a 'check' name");
                spec.check = c["check"].get<std::string>();
                if (c.contains("vector")) spec.vectors.push_back(c["vector"].get<std::string>());
                if (c.contains("vectors"))
                    for (const Json& v : c["vectors"]) spec.vectors.push_back(v.get<std::string>());
                if (c.contains("subspace")) spec.subspace = c["subspace"].get<std::string>();
                if (c.contains("chain"))
                    for (const Json& v : c["chain"]) spec.chain.push_back(v.get<std::string>());
                if (c.contains("weight")) spec.weight = c["weight"].get<std::string>();
                if (c.contains("tol")) spec.tol = c["tol"].get<double>();
                s.checks.push_back(std::move(spec));
            }
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string("scenario field has the wrong type: ") + e.what());
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

void validate_scenario(const Scenario& s) {
    if (s.cap < 1) throw ValidationError("cap must be at least 1");
    if (!(s.tol > 0.0)) throw ValidationError("tol must be positive");
    if (s.samples < 1) throw ValidationError("samples must be at least 1");

    for (const auto& [name, recs] : s.vectors) {
        for (const VectorRecord& r : recs) {
            if (r.basis != "monomial_zw" && r.basis != "sym_e" && r.basis != "bergman_z")
                throw ValidationError("vector '" + name + "': unknown basis '" + r.basis + "'");
            if (r.m < 0 || r.n < 0)
                throw ValidationError("vector '" + name + "': negative index");
            int d = (r.basis == "monomial_zw") ? r.m + r.n : r.n;
            if (d > s.cap)
                throw ValidationError("vector '" + name + "' declares degree " + std::to_string(d) +
                                      " above cap " + std::to_string(s.cap));
        }
    }

    for (const auto& [name, spec] : s.subspaces) {
        if (spec.generators.empty() == spec.zeros.empty())
            throw ValidationError("subspace '" + name + "' needs exactly one of generators or zeros");
        for (const std::string& g : spec.generators)
            if (!s.find_vector(g))
                throw ValidationError("subspace '" + name + "' references undefined vector '" + g + "'");
        for (const Complex& z : spec.zeros)
            if (std::abs(z) >= 1.0)
                throw ValidationError("subspace '" + name + "': zeros must lie inside the open disk");
        if (static_cast<int>(spec.zeros.size()) > s.cap)
            throw ValidationError("subspace '" + name + "': more zeros than the cap allows");
    }

    for (const CheckSpec& c : s.checks) {
        if (!kKnownChecks.count(c.check)) throw ValidationError("unknown check '" + c.check + "'");
        for (const std::string& v : c.vectors)
            if (!s.find_vector(v)) throw ValidationError("check '" + c.check + "' references undefined vector '" + v + "'");
        if (!c.subspace.empty() && !s.find_subspace(c.subspace))
            throw ValidationError("check '" + c.check + "' references undefined subspace '" + c.subspace + "'");
        for (const std::string& n : c.chain)
            if (!s.find_subspace(n)) throw ValidationError("check '" + c.check + "' references undefined subspace '" + n + "'");
        if (c.tol && !(*c.tol > 0.0)) throw ValidationError("check '" + c.check + "': tol must be positive");

        if (c.check == "coeff_criterion" || c.check == "radial_constancy") {
            bool on_vector = c.vectors.size() == 1;
            bool on_subspace = !c.subspace.empty();
            if (c.check == "coeff_criterion" && !on_vector)
                throw ValidationError("coeff_criterion takes exactly one vector");
            if (c.check == "radial_constancy" && on_vector == on_subspace)
                throw ValidationError("radial_constancy takes a vector or a subspace");
            if (c.weight != "corrected" && c.weight != "paper")
                throw ValidationError("weight must be 'corrected' or 'paper'");
        } else if (c.check == "cross_condition") {
            if (c.vectors.size() != 2) throw ValidationError("cross_condition takes exactly two vectors");
        } else if (c.check == "is_wandering_span") {
            if (c.vectors.empty()) throw ValidationError("is_wandering_span needs at least one vector");
        } else if (c.check == "orthonormal_system" || c.check == "wandering_recovery") {
            if (c.subspace.empty()) throw ValidationError(c.check + " takes a subspace");
        } else if (c.check == "contains") {
            if (c.subspace.empty() || c.vectors.size() != 1)
                throw ValidationError("contains takes a subspace and one vector");
        } else if (c.check == "isometry") {
            if (c.chain.size() != 2) throw ValidationError("isometry takes a chain of two subspaces");
        } else if (c.check == "factorization") {
            if (c.chain.size() != 3) throw ValidationError("factorization takes a chain of three subspaces");
        }
    }
}

SymVector build_vector(const std::vector<VectorRecord>& records, int cap) {
    SymVector acc = SymVector::zero(0);
    BidiscPoly grid = BidiscPoly::zero(cap);
    bool any_monomial = false;
    for (const VectorRecord& r : records) {
        if (r.basis == "monomial_zw") {
            grid.ref(r.m, r.n) += r.amplitude;
            any_monomial = true;
        } else if (r.basis == "sym_e") {
            SymVector e = SymVector::zero(r.n);
            e.coords[static_cast<size_t>(r.n)] = r.amplitude;
            acc = add(acc, e);
        } else {  // bergman_z
            BergmanPoly b;
            b.deg = r.n;
            b.coeffs.assign(static_cast<size_t>(r.n) + 1, Complex{0.0, 0.0});
            b.coeffs[static_cast<size_t>(r.n)] = r.amplitude;
            acc = add(acc, to_symmetric(b));
        }
    }
    if (any_monomial) {
        // Monomial blocks must already be symmetric; projection here would
        // silently discard the antisymmetric part.
        double scale = 0.0;
        for (const Complex& c : grid.coeffs) scale = std::max(scale, std::abs(c));
        for (int n = 0; n <= grid.deg; ++n) {
            Complex first = grid.at(0, n);
            for (int i = 1; i <= n; ++i)
                if (std::abs(grid.at(i, n - i) - first) > 1e-12 * std::max(scale, 1.0))
                    throw ValidationError("monomial coefficients do not form a symmetric vector");
        }
        acc = add(acc, project_sym(grid));
    }
    return trimmed(acc);
}

InvariantModel build_model(const Scenario& s, const SubspaceSpec& spec, int cap) {
    if (!spec.zeros.empty()) return zero_set_model(spec.zeros, cap);
    std::vector<SymVector> gens;
    for (const std::string& name : spec.generators)
        gens.push_back(build_vector(*s.find_vector(name), cap));
    return generate_invariant(gens, cap);
}

}  // namespace bidisc
