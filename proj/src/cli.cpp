#include "symstats/cli.hpp"

#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "symstats/bivariate.hpp"
#include "symstats/diagnostics.hpp"
#include "symstats/errors.hpp"
#include "symstats/io.hpp"
#include "symstats/univariate.hpp"

namespace symstats {

namespace {

Estimator estimator_from(const std::string& name) {
    if (name == "bg") return Estimator::bg;
    if (name == "billard") return Estimator::billard;
    return Estimator::means;
}

struct StatsArgs {
    std::string file;
    std::string variable; // empty: all variables
};

struct CovArgs {
    std::string file, x, y, estimator;
};

struct QuantileArgs {
    std::string file, variable;
    std::size_t unit = 1; // 1-based
    double t = 0.0;
};

struct RefineArgs {
    std::string file, x, y;
    int splits = 0;
    std::string side = "both";
};

struct DiagnoseArgs {
    std::string file, variable, estimator;
};

int dispatch(const std::string& command, const StatsArgs& stats,
             const CovArgs& cov, const QuantileArgs& quant,
             const RefineArgs& refine, const DiagnoseArgs& diagnose,
             OutputFormat format, std::ostream& out) {
    if (command == "stats") {
        const SymbolicDataset d = load_dataset_file(stats.file);
        std::vector<Record> records;
        if (!stats.variable.empty()) {
            const auto& v = d.variable(stats.variable);
            records.push_back(to_record(v.name(), variance_decomposition(v)));
        } else {
            for (const auto& v : d.variables()) {
                records.push_back(to_record(v.name(), variance_decomposition(v)));
            }
        }
        write_records(out, records, format);
    } else if (command == "cov") {
        const SymbolicDataset d = load_dataset_file(cov.file);
        const CovReport r = covariance(d.variable(cov.x), d.variable(cov.y),
                                       estimator_from(cov.estimator));
        write_records(out, {to_record(cov.x, cov.y, r)}, format);
    } else if (command == "quantile") {
        const SymbolicDataset d = load_dataset_file(quant.file);
        const auto& v = d.variable(quant.variable);
        if (quant.unit < 1 || quant.unit > v.size()) {
            throw Error(errc::out_of_range,
                        "unit " + std::to_string(quant.unit) +
                            " outside 1.." + std::to_string(v.size()));
        }
        const Cell& cell = v.cell(quant.unit - 1);
        double value = 0.0;
        if (const auto* iv = std::get_if<Interval>(&cell)) {
            value = iv->lower() + quant.t * iv->width();
        } else {
            value = std::get<Histogram>(cell).quantile(quant.t);
        }
        if (format == OutputFormat::table) {
            out << format_number(value) << "\n";
        } else {
            Record rec;
            rec.add("variable", FieldValue::of(quant.variable));
            rec.add("unit", FieldValue::of(static_cast<long long>(quant.unit)));
            rec.add("t", FieldValue::of(quant.t));
            rec.add("value", FieldValue::of(value));
            write_records(out, {rec}, format);
        }
    } else if (command == "refine") {
        const SymbolicDataset d = load_dataset_file(refine.file);
        RefineSide side = RefineSide::both;
        if (refine.side == "x") side = RefineSide::first;
        if (refine.side == "y") side = RefineSide::second;
        const RefinementTrace trace = refinement_experiment(
            d.variable(refine.x), d.variable(refine.y), refine.splits, side);
        write_records(out, to_records(refine.x, refine.y, trace), format);
    } else if (command == "diagnose") {
        const SymbolicDataset d = load_dataset_file(diagnose.file);
        const SelfCovarianceReport r = self_covariance_check(
            d.variable(diagnose.variable), estimator_from(diagnose.estimator));
        write_records(out, {to_record(diagnose.variable, r)}, format);
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Descriptive statistics for interval- and histogram-valued data"};
    app.name("symstats");
    app.require_subcommand(1);
    // lets --format appear after the subcommand name
    app.fallthrough();

    std::string format_name = "table";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json-lines"}))
        ->capture_default_str();

    const auto estimators = CLI::IsMember({"bg", "billard", "means"});

    StatsArgs stats;
    auto* stats_cmd = app.add_subcommand(
        "stats", "Univariate report (mean, variance, ssw/ssb/sst) per variable");
    stats_cmd->add_option("file", stats.file, "Dataset file")->required();
    stats_cmd->add_option("--var", stats.variable, "Report a single variable");

    CovArgs cov;
    auto* cov_cmd = app.add_subcommand(
        "cov", "Covariance report (csw/csb/cst) for a pair of variables");
    cov_cmd->add_option("file", cov.file, "Dataset file")->required();
    cov_cmd->add_option("--x", cov.x, "First variable")->required();
    cov_cmd->add_option("--y", cov.y, "Second variable")->required();
    cov_cmd->add_option("--estimator", cov.estimator, "Covariance estimator")
        ->required()
        ->check(estimators);

    QuantileArgs quant;
    auto* quant_cmd =
        app.add_subcommand("quantile", "Quantile of one unit's distribution");
    quant_cmd->add_option("file", quant.file, "Dataset file")->required();
    quant_cmd->add_option("--var", quant.variable, "Variable")->required();
    quant_cmd->add_option("--unit", quant.unit, "Unit index (1-based)")->required();
    quant_cmd->add_option("--t", quant.t, "Quantile level in [0, 1]")
        ->required()
        ->check(CLI::Range(0.0, 1.0));

    RefineArgs refine;
    auto* refine_cmd = app.add_subcommand(
        "refine", "Bisect bins repeatedly and trace covariance drift");
    refine_cmd->add_option("file", refine.file, "Dataset file")->required();
    refine_cmd->add_option("--x", refine.x, "First variable")->required();
    refine_cmd->add_option("--y", refine.y, "Second variable")->required();
    refine_cmd->add_option("--splits", refine.splits, "Number of bisection steps")
        ->required();
    refine_cmd->add_option("--side", refine.side, "Which variables to bisect")
        ->check(CLI::IsMember({"both", "x", "y"}))
        ->capture_default_str();

    DiagnoseArgs diagnose;
    auto* diagnose_cmd = app.add_subcommand(
        "diagnose", "Self-covariance check: cst(v,v) against n*variance(v)");
    diagnose_cmd->add_option("file", diagnose.file, "Dataset file")->required();
    diagnose_cmd->add_option("--var", diagnose.variable, "Variable")->required();
    diagnose_cmd->add_option("--estimator", diagnose.estimator, "Covariance estimator")
        ->required()
        ->check(estimators);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("symstats");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        const std::string command = app.get_subcommands().front()->get_name();
        return dispatch(command, stats, cov, quant, refine, diagnose,
                        parse_output_format(format_name), out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace symstats
