#pragma once

// Scenario files: JSON descriptions of vectors, subspaces, and the checks to
// run on them.  Complex numbers are {re, im} records; vectors are lists of
// basis-tagged coefficient records; subspaces are either generator lists or
// zero-set specs.  parse_scenario throws ParseError on malformed input and
// validate_scenario throws ValidationError on unresolved names or caps.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bidisc/subspace.hpp"

namespace bidisc {

struct VectorRecord {
    std::string basis;  // "monomial_zw" | "sym_e" | "bergman_z"
    int m = 0;          // monomial_zw uses [m, n]; the others use n only
    int n = 0;
    Complex amplitude;
};

struct SubspaceSpec {
    std::vector<std::string> generators;  // names of declared vectors
    std::vector<Complex> zeros;           // zero-set spec; exactly one of the two
};

struct CheckSpec {
    std::string check;
    std::vector<std::string> vectors;   // referenced vector names
    std::string subspace;               // referenced subspace name
    std::vector<std::string> chain;     // referenced subspace names, outer first
    std::string weight = "corrected";   // coeff_criterion only
    std::optional<double> tol;          // per-check override
};

struct Scenario {
    std::string name;
    int cap = 40;
    double tol = 1e-10;
    int samples = 161;
    std::vector<std::pair<std::string, std::vector<VectorRecord>>> vectors;
    std::vector<std::pair<std::string, SubspaceSpec>> subspaces;
    std::vector<CheckSpec> checks;

    const std::vector<VectorRecord>* find_vector(const std::string& name) const;
    const SubspaceSpec* find_subspace(const std::string& name) const;
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);
void validate_scenario(const Scenario& s);

/// Materialize a declared vector at the given cap.  Monomial records must
/// assemble to a symmetric (constant-antidiagonal) grid.
SymVector build_vector(const std::vector<VectorRecord>& records, int cap);

/// Materialize a declared subspace at the given cap.
InvariantModel build_model(const Scenario& s, const SubspaceSpec& spec, int cap);

}  // namespace bidisc
