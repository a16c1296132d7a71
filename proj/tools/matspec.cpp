#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "matspec/bateman.hpp"
#include "matspec/catalog.hpp"
#include "matspec/gamma.hpp"
#include "matspec/hyper.hpp"
#include "matspec/io.hpp"
#include "matspec/young.hpp"

using namespace matspec;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct EvalArgs {
    std::string function;
    std::string a, b, num = "[]", den = "[]";
    int n = 0;
    std::string z = "0";
    std::size_t dim = 0;
};

SquareMatrix need(const std::string& text, const char* name) {
    if (text.empty()) throw Error(ErrorCode::DomainError, std::string("missing --") + name);
    return parse_matrix(text);
}

double positive_real(Complex z) {
    if (z.imag() != 0.0 || !(z.real() > 0.0)) throw Error(ErrorCode::DomainError, "--z must be a positive real here");
    return z.real();
}

ordered_json value_json(const SquareMatrix& m) { return ordered_json::parse(matrix_to_json(m)); }

ordered_json evaluate(const EvalArgs& args) {
    const Complex z = parse_complex(args.z);
    ordered_json out;
    out["function"] = args.function;
    const std::string& f = args.function;
    if (f == "pFq") {
        const std::vector<SquareMatrix> num = parse_matrix_list(args.num), den = parse_matrix_list(args.den);
        std::size_t dim = args.dim;
        if (dim == 0 && num.empty() && den.empty()) dim = 1;
        const SeriesValue v = eval_pFq(HyperParams(num, den, dim), z);
        out["value"] = value_json(v.value);
        out["terms"] = v.terms;
        out["tail_bound"] = v.tail_bound;
        out["condition"] = v.condition;
    } else if (f == "batemanB" || f == "batemanJ") {
        const BatemanParams p(need(args.a, "a"), need(args.b, "b"));
        out["value"] = value_json(f == "batemanB" ? bateman_B(args.n, p, z) : bateman_J(args.n, p, z));
        out["n"] = args.n;
    } else if (f == "youngY") {
        out["value"] = value_json(young_Y(need(args.a, "matrix"), positive_real(z)));
    } else if (f == "besselJ") {
        out["value"] = value_json(bessel_J_matrix(need(args.a, "matrix"), positive_real(z)));
    } else if (f == "gamma") {
        out["value"] = value_json(matrix_gamma(need(args.a, "matrix")));
    } else if (f == "beta") {
        out["value"] = value_json(matrix_beta(need(args.a, "a"), need(args.b, "b")));
    } else if (f == "pochhammer") {
        if (args.n < 0) throw Error(ErrorCode::DomainError, "--n must be non-negative");
        out["value"] = value_json(pochhammer_value(need(args.a, "matrix"), args.n));
        out["n"] = args.n;
    } else if (f == "laguerreL") {
        out["value"] = value_json(laguerre_L(args.n, need(args.a, "matrix"), z));
        out["n"] = args.n;
    } else {
        throw Error(ErrorCode::UnknownFunction,
                    "unknown function '" + f +
                        "'; expected one of pFq, batemanB, batemanJ, youngY, besselJ, gamma, beta, pochhammer, laguerreL");
    }
    return out;
}

std::vector<IdentityEntry> selftest_entries() {
    IdentityEntry ok;
    ok.id = "selftest-identity";
    ok.paperEq = "selftest";
    ok.description = "A - A = 0";
    ok.mode = CheckMode::Pointwise;
    ok.printed = [](const SampleContext& c) {
        SpectralSampler s = c.sampler();
        const SquareMatrix a = s.matrix(s.eigenvalues(0.3, 2.0));
        return (a - a).norm();
    };
    IdentityEntry broken = ok;
    broken.id = "selftest-broken";
    broken.description = "A = 2A, deliberately false";
    broken.printed = [](const SampleContext& c) {
        SpectralSampler s = c.sampler();
        const SquareMatrix a = s.matrix(s.eigenvalues(0.3, 2.0));
        return relative_difference(a, a * 2.0);
    };
    return {ok, broken};
}

int run_verify(const std::string& filter, const std::string& config_path, const std::string& out_path,
               bool selftest) {
    RunConfig cfg = config_path.empty() ? RunConfig{} : parse_config(read_file(config_path));
    apply_seed_override(cfg, std::getenv("MATSPEC_SEED"));
    cfg.validate();

    std::vector<IdentityEntry> entries = full_catalog();
    if (selftest) {
        for (IdentityEntry& e : selftest_entries()) entries.push_back(std::move(e));
    }
    const std::vector<const IdentityEntry*> chosen = select_entries(entries, filter);
    if (chosen.empty()) {
        std::cerr << "matspec: no catalog entry matches '" << filter << "'\n";
        return kExitError;
    }
    const std::vector<IdentityCheckReport> reports = run_catalog(chosen, cfg);

    std::string path = out_path.empty() ? cfg.outputPath : out_path;
    if (path.empty()) path = "matspec-report.json";
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error(ErrorCode::ConfigError, "cannot write " + path);
        out << report_to_json(reports);
    }

    int pass = 0, corrected = 0, fail = 0;
    for (const IdentityCheckReport& r : reports) {
        switch (r.status) {
        case CheckStatus::Pass: ++pass; break;
        case CheckStatus::Corrected:
            ++corrected;
            std::cerr << "warning: " << r.id << " holds only in corrected form: " << r.correctedForm.value_or("")
                      << "\n";
            break;
        case CheckStatus::Fail:
            ++fail;
            std::cerr << "FAIL: " << r.id << ": " << r.correctedForm.value_or("") << "\n";
            break;
        }
    }
    std::cout << reports.size() << " entries: " << pass << " PASS, " << corrected << " CORRECTED, " << fail
              << " FAIL; report written to " << path << "\n";
    return fail > 0 ? kExitFail : 0;
}

int run_report(const std::string& path) {
    std::cout << render_table(report_from_json(read_file(path)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix special functions: evaluation and identity verification"};
    app.require_subcommand(1);

    EvalArgs ev;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate one function and print the value as JSON");
    eval->add_option("function", ev.function,
                     "pFq, batemanB, batemanJ, youngY, besselJ, gamma, beta, pochhammer or laguerreL")
        ->required();
    eval->add_option("--matrix,--a", ev.a, "Matrix argument (A, or P for beta)");
    eval->add_option("--b", ev.b, "Second matrix (B, or Q for beta)");
    eval->add_option("--num", ev.num, "pFq numerator parameters, a JSON list of matrices");
    eval->add_option("--den", ev.den, "pFq denominator parameters, a JSON list of matrices");
    eval->add_option("--n", ev.n, "Degree or index");
    eval->add_option("--z", ev.z, "Argument as re,im (positive real for youngY and besselJ)");
    eval->add_option("--dim", ev.dim, "Dimension for a pFq with no parameters");

    std::string filter, config_path, out_path;
    bool selftest = false;
    CLI::App* verify = app.add_subcommand("verify", "Run the identity catalog and write a JSON report");
    verify->add_option("--filter", filter, "Shell glob on entry ids");
    verify->add_option("--config", config_path, "JSON run configuration");
    verify->add_option("--out", out_path, "Report path");
    verify->add_flag("--include-selftest", selftest)->group("");

    std::string report_path;
    CLI::App* report = app.add_subcommand("report", "Render a JSON report as a table");
    report->add_option("file", report_path, "Report written by verify")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*eval) {
            std::cout << evaluate(ev).dump() << "\n";
            return 0;
        }
        if (*verify) return run_verify(filter, config_path, out_path, selftest);
        return run_report(report_path);
    } catch (const std::exception& e) {
        std::cerr << "matspec: " << e.what() << "\n";
        return kExitError;
    }
}
