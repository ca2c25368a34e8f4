#include "gsp/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsp/asymptotics.hpp"
#include "gsp/equiangular.hpp"
#include "gsp/io.hpp"
#include "gsp/random.hpp"
#include "gsp/verify.hpp"

namespace gsp::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
    std::optional<fs::path> input_path;
    std::optional<fs::path> z_path;
    std::optional<fs::path> output_path;
    std::optional<fs::path> report_path;
    std::optional<double> p;
    std::optional<double> d;
    Index n = 0;
    Index dim = 0;
    std::uint64_t seed = 0;
    Method method = Method::recurrence;
    double tol = kDefaultTolerance;
    bool reorthogonalize = true;
    bool header = false;
    std::vector<Index> k_grid{1000, 10000, 100000, 1000000};
};

void emit_report(const RunConfig& cfg, const nlohmann::ordered_json& doc, std::ostream& out) {
    if (cfg.report_path) {
        io::write_report(*cfg.report_path, doc);
    } else {
        io::write_report(out, doc);
    }
}

void emit_vectors(const RunConfig& cfg, const VectorSet<double>& S, std::ostream& out) {
    if (cfg.output_path) {
        io::write_csv(*cfg.output_path, S);
    } else {
        io::write_csv(out, S);
    }
}

/// Exactly one of --p / --d, resolved to the pairwise cosine.
double resolve_p(const RunConfig& cfg) {
    if (cfg.p && cfg.d) throw ParamError("give either --p or --d, not both");
    if (cfg.p) return *cfg.p;
    if (cfg.d) return p_from_d(*cfg.d);
    throw ParamError("one of --p or --d is required");
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n < 1 || cfg.dim < 1) throw ParamError("--n and --dim must be positive");
    if (cfg.n > cfg.dim) {
        throw ParamError("--n (" + std::to_string(cfg.n) + ") must not exceed --dim (" +
                         std::to_string(cfg.dim) + ")");
    }
    emit_vectors(cfg, random_independent_set(cfg.n, cfg.dim, cfg.seed), out);
    return kSuccess;
}

int cmd_transform(const RunConfig& cfg, std::ostream& out) {
    if (cfg.p && cfg.d) throw ParamError("give either --p or --d, not both");
    if (!cfg.p && !cfg.d) throw ParamError("one of --p or --d is required");
    if (!(cfg.tol > 0.0)) throw ParamError("--tol must be positive");

    const VectorSet<double> X = io::read_csv(*cfg.input_path, cfg.header);
    if (X.cols() > X.rows()) {
        throw ParamError("input holds " + std::to_string(X.cols()) + " vectors of dimension " +
                         std::to_string(X.rows()) + "; need n <= dim");
    }

    TransformOptions<double> opts;
    opts.method = cfg.method;
    opts.tol = cfg.tol;
    opts.reorthogonalize = cfg.reorthogonalize;
    const auto Z = cfg.p ? transform(X, Angle<double>{*cfg.p}, opts)
                         : transform(X, Distance<double>{*cfg.d}, opts);

    emit_vectors(cfg, Z.vectors, out);
    emit_report(cfg, io::to_json(verify(X, Z)), out);
    return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const double p = resolve_p(cfg);
    const VectorSet<double> X = io::read_csv(*cfg.input_path, cfg.header);
    const VectorSet<double> Z = io::read_csv(*cfg.z_path, cfg.header);
    emit_report(cfg, io::to_json(verify(X, Z, p)), out);
    return kSuccess;
}

int cmd_asymptotics(const RunConfig& cfg, std::ostream& out) {
    if (cfg.d) throw ParamError("asymptotics takes --p only");
    if (!cfg.p) throw ParamError("--p is required");
    for (Index k : cfg.k_grid) {
        if (k < 2) throw ParamError("--k values must be >= 2");
    }
    const auto est = estimate_constant(*cfg.p, cfg.k_grid);
    emit_report(cfg, io::to_json(est, *cfg.p), out);
    return kSuccess;
}

void add_p_or_d(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--p", cfg.p, "pairwise cosine of the output vectors");
    sub->add_option("--d", cfg.d, "pairwise distance of the output vectors");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Equiangular sets with nested spans via the Gram-Schmidt p-algorithm", "gsp"};
    app.require_subcommand(1);

    const std::map<std::string, Method> methods{{"recurrence", Method::recurrence},
                                                {"closed_form", Method::closed_form}};

    auto* generate = app.add_subcommand("generate", "write a seeded random independent vector set");
    generate->add_option("--n", cfg.n, "number of vectors")->required();
    generate->add_option("--dim", cfg.dim, "vector dimension")->required();
    generate->add_option("--seed", cfg.seed, "generator seed")->required();
    generate->add_option("--output", cfg.output_path, "CSV destination (default stdout)");

    auto* transform_cmd = app.add_subcommand("transform", "make input vectors pairwise equiangular");
    transform_cmd->add_option("--input", cfg.input_path, "CSV of input vectors")->required();
    transform_cmd->add_option("--output", cfg.output_path, "CSV destination for the result")->required();
    transform_cmd->add_option("--report", cfg.report_path, "verification report (default stdout)");
    add_p_or_d(transform_cmd, cfg);
    transform_cmd->add_option("--method", cfg.method, "recurrence or closed_form")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    transform_cmd->add_option("--tol", cfg.tol, "relative independence tolerance");
    transform_cmd->add_flag("!--no-reorthogonalize", cfg.reorthogonalize,
                            "skip the second orthogonalization sweep");
    transform_cmd->add_flag("--header", cfg.header, "skip the first input line");

    auto* verify_cmd = app.add_subcommand("verify", "check an equiangular set against its source");
    verify_cmd->add_option("--input", cfg.input_path, "CSV of source vectors")->required();
    verify_cmd->add_option("--z", cfg.z_path, "CSV of equiangular vectors")->required();
    verify_cmd->add_option("--report", cfg.report_path, "verification report (default stdout)");
    add_p_or_d(verify_cmd, cfg);
    verify_cmd->add_flag("--header", cfg.header, "skip the first line of both files");

    auto* asym = app.add_subcommand("asymptotics", "large-k residuals and the limiting constant");
    asym->add_option("--p", cfg.p, "pairwise cosine, 0 < p < 1");
    asym->add_option("--d", cfg.d);
    asym->add_option("--k", cfg.k_grid, "increasing k values (default 1e3 1e4 1e5 1e6)");
    asym->add_option("--report", cfg.report_path, "report destination (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kIoError;
    }

    try {
        if (generate->parsed()) return cmd_generate(cfg, out);
        if (transform_cmd->parsed()) return cmd_transform(cfg, out);
        if (verify_cmd->parsed()) return cmd_verify(cfg, out);
        return cmd_asymptotics(cfg, out);
    } catch (const ParamError& e) {
        err << "error: " << e.what() << '\n';
        return kParamError;
    } catch (const DependentInputError& e) {
        err << "error: " << e.what() << '\n';
        return kDependentInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
}

}  // namespace gsp::cli
