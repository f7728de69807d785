// Command-line front end: classify / canonicalize / verify / fuzz for pairs
// of symmetric bilinear forms on a 2D real space, the first of signature
// (+,-). JSON in, JSON out; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 parse error, 2 domain/signature error,
// 3 indeterminate classification, 4 verification or fuzz check failed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minkpair/json_io.hpp"

namespace {

using namespace minkpair;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitDomain = 2;
constexpr int kExitIndeterminate = 3;
constexpr int kExitCheckFailed = 4;

struct CommonOpts {
    std::string input = "-";
    std::string backend = "approx";
    double tol = 0.0;      // meaningful only when tol_set
    bool tol_set = false;  // --tol was supplied on the command line
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw ParseError("cannot open input file: " + path);
        buf << f.rdbuf();
    }
    return buf.str();
}

double checked_tol(double tol) {
    if (!std::isfinite(tol) || tol < 0.0)
        throw DomainError("--tol must be a finite non-negative number");
    return tol;
}

TolerancePolicy policy_from(const CommonOpts& o) {
    if (!o.tol_set) return TolerancePolicy::classification();
    return TolerancePolicy::uniform(checked_tol(o.tol));
}

const MetricPair<Rational>& require_exact(const PairDocument& doc) {
    if (!doc.exact)
        throw ParseError(
            "exact backend requires every entry to be an integer or a \"p/q\" "
            "string");
    return *doc.exact;
}

// --- emitters (fixed key order, byte-stable) ------------------------------

std::string tolerance_json(const TolerancePolicy& p) {
    return "{\"atol\": " + json_double(p.atol) +
           ", \"rtol\": " + json_double(p.rtol) + "}";
}

std::string transition_json(const Transition<double>& t) {
    return "[[" + json_double(t.s00) + ", " + json_double(t.s01) + "], [" +
           json_double(t.s10) + ", " + json_double(t.s11) + "]]";
}

std::string rational_json(const Rational& r) {
    return "\"" + json_escape(r.str()) + "\"";
}

std::string invariants_json(const PairInvariants<double>& inv) {
    std::string out = "{\"det\": " + json_double(inv.determinant) +
                      ", \"disc\": " + json_double(inv.discriminant);
    if (inv.sigma) out += ", \"sigma\": " + std::to_string(*inv.sigma);
    out += ", \"trace\": " + json_double(inv.trace) + "}";
    return out;
}

std::string invariants_json(const PairInvariants<Rational>& inv) {
    std::string out = "{\"det\": " + rational_json(inv.determinant) +
                      ", \"disc\": " + rational_json(inv.discriminant);
    if (inv.sigma) out += ", \"sigma\": " + std::to_string(*inv.sigma);
    out += ", \"trace\": " + rational_json(inv.trace) + "}";
    return out;
}

std::string candidates_json(const std::vector<CanonicalClass>& cs) {
    std::string out = "[";
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + class_label(cs[i]) + "\"";
    }
    return out + "]";
}

std::string classification_prefix(const std::string& backend,
                                  const std::string& label,
                                  bool indeterminate,
                                  const std::vector<CanonicalClass>& candidates) {
    std::string out = "{\"backend\": \"" + backend + "\", \"class\": \"" +
                      label + "\"";
    if (indeterminate) out += ", \"candidates\": " + candidates_json(candidates);
    out += ", \"indeterminate\": ";
    out += indeterminate ? "true" : "false";
    return out;
}

std::string canonical_body(const CanonicalResult& r) {
    std::string out = ", \"a\": " + json_double(r.a);
    if (r.b) out += ", \"b\": " + json_double(*r.b);
    out += ", \"S_total\": " + transition_json(r.total);
    out += ", \"residuals\": {\"g\": " + json_double(r.residual_g) +
           ", \"gcheck\": " + json_double(r.residual_gcheck) + "}";
    return out;
}

// --- commands --------------------------------------------------------------

int run_classify(const CommonOpts& opts) {
    const PairDocument doc = parse_pair_document(read_input(opts.input));
    const TolerancePolicy pol = policy_from(opts);
    const Backend be = parse_backend(opts.backend);

    std::string out;
    bool indeterminate = false;
    if (be == Backend::Exact) {
        const MetricPair<Rational>& pair = require_exact(doc);
        const CanonicalClass label = classify(pair);
        out = classification_prefix("exact", class_label(label), false, {});
        out += ", \"invariants\": " + invariants_json(invariants(pair));
    } else {
        const Classification c = classify(doc.approx, pol);
        indeterminate = c.indeterminate;
        out = classification_prefix("approx", class_label(c.label),
                                    c.indeterminate, c.candidates);
        out += ", \"invariants\": " + invariants_json(invariants(doc.approx, pol));
    }
    out += ", \"tolerance\": " + tolerance_json(pol) + "}";
    std::cout << out << "\n";
    return indeterminate ? kExitIndeterminate : kExitOk;
}

int run_canonicalize(const CommonOpts& opts) {
    const PairDocument doc = parse_pair_document(read_input(opts.input));
    const TolerancePolicy pol = policy_from(opts);
    const Backend be = parse_backend(opts.backend);

    std::string out;
    CanonicalResult r;
    if (be == Backend::Exact) {
        // Label and invariants decided exactly; the transition itself is
        // always constructed in floating point.
        const MetricPair<Rational>& pair = require_exact(doc);
        const CanonicalClass label = classify(pair);
        r = canonical_form(doc.approx, Classification{label}, pol);
        out = classification_prefix("exact", class_label(label), false, {});
        out += ", \"invariants\": " + invariants_json(invariants(pair));
    } else {
        const Classification c = classify(doc.approx, pol);
        r = canonical_form(doc.approx, c, pol);
        out = classification_prefix("approx", class_label(r.cls),
                                    r.indeterminate, r.candidates);
        out += ", \"invariants\": " + invariants_json(invariants(doc.approx, pol));
    }
    out += canonical_body(r);
    out += ", \"tolerance\": " + tolerance_json(pol) + "}";
    std::cout << out << "\n";
    return r.indeterminate ? kExitIndeterminate : kExitOk;
}

struct VerifyOpts : CommonOpts {
    std::string report;
    std::string transition;  // optional override of the report's S_total
};

int run_verify(const VerifyOpts& opts) {
    const PairDocument doc = parse_pair_document(read_input(opts.input));
    const ReportData report = parse_report(read_input(opts.report));
    const Backend be = parse_backend(opts.backend);
    if (be == Backend::Exact) require_exact(doc);  // entries must be declared

    Transition<double> s{};
    if (!opts.transition.empty()) {
        s = parse_transition_document(read_input(opts.transition));
    } else if (report.s_total) {
        s = *report.s_total;
    } else {
        throw ParseError(
            "report carries no S_total and no --transition was given");
    }
    require_invertible(s, TolerancePolicy::identity());

    const std::optional<CanonicalClass> cls = parse_class_label(report.cls);
    if (!cls) throw ParseError("unknown class label in report: " + report.cls);
    if (!report.a) throw ParseError("report does not carry parameter a");

    const SymForm<double> g2 = congruence(doc.approx.g, s);
    const SymForm<double> gc2 = congruence(doc.approx.gcheck, s);
    const double residual_g = deviation_inf(g2, canonical_g(*cls));
    const double residual_gcheck =
        deviation_inf(gc2, canonical_gcheck(*cls, *report.a, report.b));

    const double tol = opts.tol_set ? checked_tol(opts.tol) : 1e-9;
    const bool pass = residual_g <= tol * norm_inf(doc.approx.g) &&
                      residual_gcheck <= tol * norm_inf(doc.approx.gcheck);

    std::string out = "{\"backend\": \"" + backend_label(be) + "\", \"class\": \"" +
                      report.cls + "\", \"pass\": ";
    out += pass ? "true" : "false";
    out += ", \"residual_g\": " + json_double(residual_g);
    out += ", \"residual_gcheck\": " + json_double(residual_gcheck);
    out += ", \"tolerance\": " + json_double(tol) + "}";
    std::cout << out << "\n";
    return pass ? kExitOk : kExitCheckFailed;
}

struct FuzzOpts {
    std::uint64_t seed = 0;
    std::uint64_t count = 100;
    std::string cls;  // optional class filter
    double max_condition = 20.0;
    std::string backend = "approx";
    double tol = 0.0;
    bool tol_set = false;
};

bool check_exact_instance(const Instance& inst,
                          std::map<int, std::uint64_t>& sigma_counts) {
    const CanonicalClass label = classify(inst.pair);
    const PairInvariants<Rational> inv = invariants(inst.pair);
    if (inv.sigma) ++sigma_counts[*inv.sigma];
    return label == inst.truth.cls;
}

bool check_approx_instance(const Instance& inst, const TolerancePolicy& pol,
                           std::map<int, std::uint64_t>& sigma_counts) {
    const MetricPair<double> pd = to_double_pair(inst.pair);
    const Classification c = classify(pd, pol);
    const PairInvariants<double> inv = invariants(pd, pol);
    if (inv.sigma) ++sigma_counts[*inv.sigma];

    if (c.indeterminate)  // acceptable only if the truth is among candidates
        return std::find(c.candidates.begin(), c.candidates.end(),
                         inst.truth.cls) != c.candidates.end();
    if (c.label != inst.truth.cls) return false;

    const CanonicalResult r = canonical_form(pd, c, pol);
    if (r.residual_g > 1e-9 * norm_inf(pd.g)) return false;
    if (r.residual_gcheck > 1e-9 * std::max(1.0, norm_inf(pd.gcheck)))
        return false;

    const auto close = [](double x, double y) {
        return std::abs(x - y) <= 1e-8 * std::max({1.0, std::abs(x), std::abs(y)});
    };
    if (!close(r.a, inst.truth.a.to_double())) return false;
    if (inst.truth.b && (!r.b || !close(*r.b, inst.truth.b->to_double())))
        return false;
    return true;
}

int run_fuzz(const FuzzOpts& opts) {
    FuzzConfig cfg;
    cfg.seed = opts.seed;
    cfg.count = opts.count;
    cfg.max_condition = opts.max_condition;
    if (!opts.cls.empty()) {
        cfg.class_filter = parse_class_label(opts.cls);
        if (!cfg.class_filter)
            throw ParseError("unknown class filter: " + opts.cls);
    }
    if (cfg.count == 0) throw DomainError("--count must be positive");
    const Backend be = parse_backend(opts.backend);
    const TolerancePolicy pol = opts.tol_set
                                    ? TolerancePolicy::uniform(checked_tol(opts.tol))
                                    : TolerancePolicy::classification();

    std::map<std::string, std::uint64_t> class_counts;
    std::map<int, std::uint64_t> sigma_counts;
    std::vector<std::string> witnesses;
    std::uint64_t failures = 0;

    for (std::uint64_t i = 0; i < cfg.count; ++i) {
        const Instance inst = random_instance(cfg, i);
        ++class_counts[class_label(inst.truth.cls)];
        const bool ok = be == Backend::Exact
                            ? check_exact_instance(inst, sigma_counts)
                            : check_approx_instance(inst, pol, sigma_counts);
        if (!ok) {
            ++failures;
            const std::string path = "fuzz-witness-" + std::to_string(i) + ".json";
            std::ofstream f(path);
            f << pair_json(inst.pair) << "\n";
            witnesses.push_back(path);
            std::cerr << "fuzz: instance " << i << " failed ("
                      << class_label(inst.truth.cls) << "); witness written to "
                      << path << "\n";
        }
    }

    std::string out = "{\"backend\": \"" + backend_label(be) + "\"";
    out += ", \"class_counts\": {";
    bool first = true;
    for (const auto& [label, n] : class_counts) {
        if (!first) out += ", ";
        first = false;
        out += "\"" + label + "\": " + std::to_string(n);
    }
    out += "}, \"count\": " + std::to_string(cfg.count);
    out += ", \"failures\": " + std::to_string(failures);
    out += ", \"max_condition\": " + json_double(cfg.max_condition);
    out += ", \"seed\": " + std::to_string(cfg.seed);
    out += ", \"sigma_counts\": {";
    first = true;
    for (const auto& [sig, n] : sigma_counts) {
        if (!first) out += ", ";
        first = false;
        out += "\"" + std::to_string(sig) + "\": " + std::to_string(n);
    }
    out += "}, \"witnesses\": [";
    for (size_t i = 0; i < witnesses.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + json_escape(witnesses[i]) + "\"";
    }
    out += "]}";
    std::cout << out << "\n";
    return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Classify pairs of symmetric bilinear forms on a 2D real space (first "
        "form of signature (+,-)) and construct canonical presentations"};
    app.require_subcommand(1);

    CommonOpts classify_opts;
    CLI::App* cmd_classify =
        app.add_subcommand("classify", "Class label and invariants of a pair");
    CommonOpts canon_opts;
    CLI::App* cmd_canonicalize = app.add_subcommand(
        "canonicalize", "Canonical matrices, parameters and change of basis");
    VerifyOpts verify_opts;
    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "Recompute congruences for a reported transition");
    FuzzOpts fuzz_opts;
    CLI::App* cmd_fuzz = app.add_subcommand(
        "fuzz", "Generate labeled random instances and check the pipeline");

    const auto add_common = [](CLI::App* cmd, CommonOpts& o) {
        cmd->add_option("--input", o.input, "Input file (default: stdin)");
        cmd->add_option("--backend", o.backend, "Arithmetic backend")
            ->check(CLI::IsMember({"approx", "exact"}));
        cmd->add_option("--tol", o.tol,
                        "Sets atol = rtol for classification decisions")
            ->each([&o](const std::string&) { o.tol_set = true; });
    };
    add_common(cmd_classify, classify_opts);
    add_common(cmd_canonicalize, canon_opts);
    add_common(cmd_verify, verify_opts);
    cmd_verify->add_option("--report", verify_opts.report,
                           "Report JSON produced by canonicalize")
        ->required();
    cmd_verify->add_option("--transition", verify_opts.transition,
                           "2x2 matrix file overriding the report's S_total");

    cmd_fuzz->add_option("--seed", fuzz_opts.seed, "Stream seed");
    cmd_fuzz->add_option("--count", fuzz_opts.count, "Number of instances");
    cmd_fuzz->add_option("--class", fuzz_opts.cls, "Restrict to one class");
    cmd_fuzz->add_option("--max-condition", fuzz_opts.max_condition,
                         "Condition bound for scrambling congruences");
    cmd_fuzz->add_option("--backend", fuzz_opts.backend, "Arithmetic backend")
        ->check(CLI::IsMember({"approx", "exact"}));
    cmd_fuzz->add_option("--tol", fuzz_opts.tol,
                         "Sets atol = rtol for classification decisions")
        ->each([&fuzz_opts](const std::string&) { fuzz_opts.tol_set = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        if (app.got_subcommand(cmd_classify)) return run_classify(classify_opts);
        if (app.got_subcommand(cmd_canonicalize))
            return run_canonicalize(canon_opts);
        if (app.got_subcommand(cmd_verify)) return run_verify(verify_opts);
        return run_fuzz(fuzz_opts);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomain;
    }
}
