#include "bidisc/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <map>
#include <sstream>

#include "bidisc/factorization.hpp"

namespace bidisc {

namespace {

std::string fmt_double(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// Models are rebuilt per (name, cap); cache them within one run.
struct ModelCache {
    const Scenario& scenario;
    std::map<std::pair<std::string, int>, InvariantModel> models;

    const InvariantModel& get(const std::string& name, int cap) {
        auto key = std::make_pair(name, cap);
        auto it = models.find(key);
        if (it == models.end())
            it = models.emplace(key, build_model(scenario, *scenario.find_subspace(name), cap)).first;
        return it->second;
    }
};

CriterionReport from_residual(double residual, long index, double tol) {
    CriterionReport r;
    r.worst_value = residual;
    r.worst_index = index;
    r.tol = tol;
    r.passed = residual <= tol;
    return r;
}

// Criterion-style recovery check: the wandering frame of the model generated
// by W must contain W, and any surplus direction must either lie in span(W)
// or be confined to degrees above cap - guard.
CriterionReport wandering_recovery(const InvariantModel& model, double tol) {
    Frame w = wandering_of(model);
    if (w.rank() == 0) return from_residual(std::numeric_limits<double>::infinity(), 0, tol);
    InvariantModel regen = generate_invariant(w, model.cap);
    Frame w2 = wandering_of(regen);

    double worst = 0.0;
    long worst_index = 0;
    for (size_t i = 0; i < w.vectors.size(); ++i) {
        double r = contains(w2, w.vectors[i], 0.0).residual;
        if (r > worst) {
            worst = r;
            worst_index = static_cast<long>(i);
        }
    }
    Frame wf = w;
    for (size_t i = 0; i < w2.vectors.size(); ++i) {
        double r = contains(wf, w2.vectors[i], 0.0).residual;
        bool surplus = r > tol;
        if (surplus && exact_degree(w2.vectors[i]) <= model.cap - kWanderingGuard) {
            if (r > worst) {
                worst = r;
                worst_index = static_cast<long>(i);
            }
        }
    }
    return from_residual(worst, worst_index, tol);
}

CriterionReport run_one_check(const Scenario& s, const CheckSpec& c, int cap, double tol,
                              int samples, ModelCache& cache) {
    auto vec = [&](size_t i) { return build_vector(*s.find_vector(c.vectors[i]), cap); };

    if (c.check == "coeff_criterion") {
        CoeffWeight w = c.weight == "paper" ? CoeffWeight::PaperJ : CoeffWeight::CorrectedJPlus1;
        return coeff_criterion(vec(0), w, tol);
    }
    if (c.check == "radial_constancy") {
        if (!c.vectors.empty()) return radial_constancy(vec(0), tol);
        Frame w = wandering_of(cache.get(c.subspace, cap));
        CriterionReport out;
        out.tol = tol;
        out.passed = w.rank() > 0;
        if (!out.passed) out.worst_value = std::numeric_limits<double>::infinity();
        for (const SymVector& q : w.vectors) {
            CriterionReport r = radial_constancy(q, tol);
            out.passed = out.passed && r.passed;
            if (r.worst_value > out.worst_value) {
                out.worst_value = r.worst_value;
                out.worst_index = r.worst_index;
                out.tol = r.tol;
            }
        }
        return out;
    }
    if (c.check == "cross_condition") return cross_condition(vec(0), vec(1), tol);
    if (c.check == "is_wandering_span") {
        std::vector<SymVector> vs;
        for (size_t i = 0; i < c.vectors.size(); ++i) vs.push_back(vec(i));
        return is_wandering_span(vs, tol);
    }
    if (c.check == "orthonormal_system") {
        Frame w = wandering_of(cache.get(c.subspace, cap));
        return orthonormal_system_check(w.vectors, tol);
    }
    if (c.check == "contains") {
        ContainsResult r = contains(cache.get(c.subspace, cap).basis, vec(0), tol);
        return from_residual(r.residual, 0, tol * vec(0).norm());
    }
    if (c.check == "wandering_recovery")
        return wandering_recovery(cache.get(c.subspace, cap), tol);
    if (c.check == "isometry") {
        const InvariantModel& outer = cache.get(c.chain[0], cap);
        const InvariantModel& inner = cache.get(c.chain[1], cap);
        for (const SymVector& g : inner.generators)
            if (!contains(outer.basis, g, tol).inside)
                throw ChainBrokenError("isometry: inner subspace not contained in outer");
        PairedIsometry iso = make_paired_isometry(wandering_of(outer), wandering_of(inner));
        double r = isometry_residual(iso, circle_samples(samples), tol);
        return from_residual(r, 0, tol);
    }
    if (c.check == "factorization") {
        SubspaceChain chain = make_chain(cache.get(c.chain[0], cap), cache.get(c.chain[1], cap),
                                         cache.get(c.chain[2], cap), tol, tol);
        double r = factorization_residual(chain, circle_samples(samples));
        return from_residual(r, 0, tol);
    }
    throw ValidationError("unknown check '" + c.check + "'");
}

std::string object_label(const CheckSpec& c) {
    std::vector<std::string> parts = c.vectors;
    if (!c.subspace.empty()) parts.push_back(c.subspace);
    for (const std::string& n : c.chain) parts.push_back(n);
    return join(parts, "+");
}

ReportRow execute_check(const Scenario& s, const CheckSpec& c, int cap, double scenario_tol,
                        int samples, ModelCache& cache) {
    ReportRow row;
    row.scenario = s.name;
    row.check = c.check;
    row.object = object_label(c);
    row.cap = cap;
    double tol = c.tol.value_or(scenario_tol);

    auto t0 = std::chrono::steady_clock::now();
    try {
        CriterionReport r = run_one_check(s, c, cap, tol, samples, cache);
        row.passed = r.passed;
        row.worst_value = r.worst_value;
        row.worst_index = r.worst_index;
        row.tol = r.tol;
    } catch (const PremiseViolatedError&) {
        row.passed = false;
        row.worst_value = std::numeric_limits<double>::infinity();
        row.tol = tol;
    } catch (const ChainBrokenError&) {
        row.passed = false;
        row.worst_value = std::numeric_limits<double>::infinity();
        row.tol = tol;
    }
    auto t1 = std::chrono::steady_clock::now();
    row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return row;
}

}  // namespace

RunResult run_scenario(const Scenario& s, const RunOptions& opt) {
    Scenario eff = s;
    if (opt.cap) eff.cap = *opt.cap;
    if (opt.tol) eff.tol = *opt.tol;
    if (opt.samples) eff.samples = *opt.samples;
    validate_scenario(eff);

    RunResult result;
    result.rows.resize(eff.checks.size());

    if (opt.jobs <= 1) {
        ModelCache cache{eff, {}};
        for (size_t i = 0; i < eff.checks.size(); ++i)
            result.rows[i] = execute_check(eff, eff.checks[i], eff.cap, eff.tol, eff.samples, cache);
    } else {
        // Independent checks run concurrently; each worker keeps its own model
        // cache and writes its slot, so row order stays the scenario order.
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            ModelCache cache{eff, {}};
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= eff.checks.size()) break;
                result.rows[i] = execute_check(eff, eff.checks[i], eff.cap, eff.tol, eff.samples, cache);
            }
        };
        std::vector<std::future<void>> futs;
        for (int j = 0; j < opt.jobs; ++j) futs.push_back(std::async(std::launch::async, worker));
        for (auto& f : futs) f.get();
    }

    for (const ReportRow& row : result.rows)
        if (!row.passed) result.exit_code = 1;
    return result;
}

RunResult run_convergence(const Scenario& s, const std::string& subspace,
                          const std::vector<int>& caps, const std::string& check,
                          const RunOptions& opt) {
    Scenario eff = s;
    if (opt.tol) eff.tol = *opt.tol;
    if (opt.samples) eff.samples = *opt.samples;
    if (caps.empty()) throw ValidationError("convergence needs at least one cap");
    for (size_t i = 1; i < caps.size(); ++i)
        if (caps[i] <= caps[i - 1]) throw ValidationError("caps must be strictly increasing");
    if (!eff.find_subspace(subspace))
        throw ValidationError("undefined subspace '" + subspace + "'");
    if (check != "radial_constancy" && check != "orthonormal_system" && check != "wandering_recovery")
        throw ValidationError("convergence supports radial_constancy, orthonormal_system, wandering_recovery");

    CheckSpec cs;
    cs.check = check;
    cs.subspace = subspace;

    RunResult result;
    for (int cap : caps) {
        Scenario at_cap = eff;
        at_cap.cap = cap;
        validate_scenario(at_cap);
        ModelCache cache{at_cap, {}};
        result.rows.push_back(execute_check(at_cap, cs, cap, at_cap.tol, at_cap.samples, cache));
    }

    // Verdict: residuals non-increasing up to 10% slack.
    ReportRow verdict;
    verdict.scenario = eff.name;
    verdict.check = "convergence_verdict";
    verdict.object = subspace;
    verdict.cap = caps.back();
    verdict.tol = eff.tol;
    verdict.passed = true;
    for (size_t i = 1; i < result.rows.size(); ++i) {
        double prev = result.rows[i - 1].worst_value;
        double cur = result.rows[i].worst_value;
        double excess = cur - (1.1 * prev + 1e-15);
        if (excess > verdict.worst_value) {
            verdict.worst_value = excess;
            verdict.worst_index = static_cast<long>(i);
        }
        if (excess > 0.0) verdict.passed = false;
    }
    result.rows.push_back(verdict);
    result.exit_code = verdict.passed ? 0 : 1;
    return result;
}

OracleResult run_oracle(const Scenario& s, const std::string& vector_name, int kmax,
                        const RunOptions& opt) {
    Scenario eff = s;
    if (opt.cap) eff.cap = *opt.cap;
    if (opt.tol) eff.tol = *opt.tol;
    validate_scenario(eff);
    if (!eff.find_vector(vector_name))
        throw ValidationError("undefined vector '" + vector_name + "'");
    if (kmax < 1) throw ValidationError("kmax must be at least 1");

    SymVector q = build_vector(*eff.find_vector(vector_name), eff.cap);
    if (exact_degree(q) + kmax > eff.cap)
        throw ValidationError("kmax " + std::to_string(kmax) + " plus degree " +
                              std::to_string(exact_degree(q)) + " exceeds cap " +
                              std::to_string(eff.cap));

    TrigPoly rs = radial_sum(q);
    std::vector<Complex> corr = coeff_criterion_values(q, CoeffWeight::CorrectedJPlus1, kmax);
    std::vector<Complex> paper = coeff_criterion_values(q, CoeffWeight::PaperJ, kmax);
    std::vector<Complex> gram = shift_gram(q, q, kmax, eff.cap);
    double tol = eff.tol * std::max(q.norm_sq(), 1e-300);

    OracleResult out;
    for (int k = 1; k <= kmax; ++k) {
        OracleRow row;
        row.k = k;
        row.radial = rs.at(-k);  // the coefficient the w^k moment extracts
        row.corrected = corr[static_cast<size_t>(k - 1)];
        row.paper = paper[static_cast<size_t>(k - 1)];
        row.gram = gram[static_cast<size_t>(k - 1)];
        row.radial_eq_corrected = std::abs(row.radial - row.corrected) <= tol;
        row.corrected_eq_gram = std::abs(row.corrected - row.gram) <= tol;
        row.paper_weight_agrees = std::abs(row.paper - row.corrected) <= tol;
        if (!row.radial_eq_corrected || !row.corrected_eq_gram) out.exit_code = 1;
        out.rows.push_back(row);
    }
    return out;
}

std::string render_report(const std::vector<ReportRow>& rows, const RunOptions& opt) {
    std::ostringstream os;
    if (opt.format == "jsonl") {
        for (const ReportRow& r : rows) {
            os << "{\"scenario\":\"" << json_escape(r.scenario) << "\",\"check\":\"" << json_escape(r.check)
               << "\",\"object\":\"" << json_escape(r.object) << "\",\"passed\":" << fmt_bool(r.passed)
               << ",\"worst_value\":";
            if (std::isfinite(r.worst_value))
                os << fmt_double(r.worst_value);
            else
                os << "null";
            os << ",\"worst_index\":" << r.worst_index << ",\"tol\":" << fmt_double(r.tol)
               << ",\"cap\":" << r.cap << ",\"elapsed_ms\":" << (opt.stable ? 0 : r.elapsed_ms) << "}\n";
        }
        return os.str();
    }
    os << "scenario,check,object,passed,worst_value,worst_index,tol,cap,elapsed_ms\n";
    for (const ReportRow& r : rows) {
        os << r.scenario << ',' << r.check << ',' << r.object << ',' << fmt_bool(r.passed) << ','
           << fmt_double(r.worst_value) << ',' << r.worst_index << ',' << fmt_double(r.tol) << ','
           << r.cap << ',' << (opt.stable ? 0 : r.elapsed_ms) << '\n';
    }
    return os.str();
}

std::string render_oracle(const std::vector<OracleRow>& rows, const RunOptions& opt) {
    std::ostringstream os;
    if (opt.format == "jsonl") {
        for (const OracleRow& r : rows) {
            os << "{\"k\":" << r.k << ",\"radial\":[" << fmt_double(r.radial.real()) << ','
               << fmt_double(r.radial.imag()) << "],\"corrected\":[" << fmt_double(r.corrected.real())
               << ',' << fmt_double(r.corrected.imag()) << "],\"paper\":[" << fmt_double(r.paper.real())
               << ',' << fmt_double(r.paper.imag()) << "],\"gram\":[" << fmt_double(r.gram.real()) << ','
               << fmt_double(r.gram.imag()) << "],\"radial_eq_corrected\":" << fmt_bool(r.radial_eq_corrected)
               << ",\"corrected_eq_gram\":" << fmt_bool(r.corrected_eq_gram)
               << ",\"paper_weight_agrees\":" << fmt_bool(r.paper_weight_agrees) << "}\n";
        }
        return os.str();
    }
    os << "k,radial_re,radial_im,corrected_re,corrected_im,paper_re,paper_im,gram_re,gram_im,"
          "radial_eq_corrected,corrected_eq_gram,paper_weight_agrees\n";
    for (const OracleRow& r : rows) {
        os << r.k << ',' << fmt_double(r.radial.real()) << ',' << fmt_double(r.radial.imag()) << ','
           << fmt_double(r.corrected.real()) << ',' << fmt_double(r.corrected.imag()) << ','
           << fmt_double(r.paper.real()) << ',' << fmt_double(r.paper.imag()) << ','
           << fmt_double(r.gram.real()) << ',' << fmt_double(r.gram.imag()) << ','
           << fmt_bool(r.radial_eq_corrected) << ',' << fmt_bool(r.corrected_eq_gram) << ','
           << fmt_bool(r.paper_weight_agrees) << '\n';
    }
    return os.str();
}

}  // namespace bidisc
