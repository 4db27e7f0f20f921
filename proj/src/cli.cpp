#include "zeck/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "zeck/decomposition.hpp"
#include "zeck/error.hpp"
#include "zeck/far_difference.hpp"
#include "zeck/spectral.hpp"
#include "zeck/statistics.hpp"
#include "zeck/verify/acceptance.hpp"

namespace zeck::cli {

namespace {

std::string real(double x) { return fmt::format("{:.15g}", x); }

/// x rounded to 15 significant digits, so JSON output matches the CSV text.
double real15(double x) { return std::isfinite(x) ? std::stod(real(x)) : x; }

Natural parse_integer(const std::string& text, bool allow_negative) {
    const std::size_t start = (allow_negative && !text.empty() && text[0] == '-') ? 1 : 0;
    if (text.size() == start || text.find_first_not_of("0123456789", start) != std::string::npos) {
        throw Error(ErrorKind::InvalidArgument, "'" + text + "' is not a" +
                                                    (allow_negative ? "n integer" : " nonnegative integer"));
    }
    return Natural(text, 10);
}

std::size_t parse_index(const std::string& text, const char* what) {
    const Natural value = parse_integer(text, false);
    if (value == 0 || !value.fits_ulong_p()) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be a positive integer, got '" + text + "'");
    }
    return value.get_ui();
}

std::vector<std::uint64_t> parse_digits(const std::string& text) {
    std::vector<std::uint64_t> digits;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const std::string field = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const Natural value = parse_integer(field, false);
        if (!value.fits_ulong_p()) throw Error(ErrorKind::InvalidArgument, "digit '" + field + "' too large");
        digits.push_back(value.get_ui());
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return digits;
}

const std::string& arg(const RunConfig& config, std::size_t i, const char* what) {
    if (i >= config.args.size()) throw Error(ErrorKind::InvalidArgument, std::string("missing argument ") + what);
    return config.args[i];
}

bool json_lines(const RunConfig& config) { return config.format == Format::JsonLines; }

void cmd_seq(const RunConfig& config, const RecurrenceSpec& spec, std::ostream& data) {
    const SequenceTable table = generate(spec, parse_index(arg(config, 0, "n"), "n"));
    if (json_lines(config)) {
        for (std::size_t i = 1; i <= table.size(); ++i) {
            data << nlohmann::json{{"index", i}, {"term", table.term(i).get_str()}}.dump() << '\n';
        }
    } else {
        table.write_csv(data);
    }
}

void cmd_decomp(const RunConfig& config, const RecurrenceSpec& spec, std::ostream& data) {
    const Natural first = parse_integer(arg(config, 0, "N"), false);
    const Natural last = config.args.size() > 1 ? parse_integer(config.args[1], false) : first;
    if (last < first) throw Error(ErrorKind::InvalidArgument, "range end below range start");
    SequenceTable table = generate(spec, 2).covering(last);
    for (Natural n = first; n <= last; ++n) {
        const Decomposition d = decompose(n, table);
        switch (config.format) {
            case Format::Tsv: data << to_line(d, n) << '\n'; break;
            case Format::JsonLines: data << to_json(d, n).dump() << '\n'; break;
            default: data << format_sum(d, n) << '\n'; break;
        }
    }
}

void cmd_legal(const RunConfig& config, const RecurrenceSpec& spec, std::ostream& data) {
    const auto digits = parse_digits(arg(config, 0, "digits"));
    const Decomposition d(spec, digits);
    const bool legal = is_legal(d, spec);
    const Natural value = recompose(d, generate(spec, std::max<std::size_t>(1, digits.size())));
    if (json_lines(config)) {
        data << nlohmann::json{{"digits", digits}, {"legal", legal}, {"value", value.get_str()}}.dump() << '\n';
    } else {
        data << arg(config, 0, "digits") << ": " << (legal ? "legal" : "illegal") << " (value " << value.get_str()
             << ")\n";
    }
}

void cmd_count(const RunConfig& config, const RecurrenceSpec& spec, std::ostream& data) {
    const std::size_t n = parse_index(arg(config, 0, "n"), "n");
    const CountTable table = config.exhaustive ? count_exhaustive(spec, n, config.threads) : count_dp(spec, n);
    if (json_lines(config)) {
        for (const auto& [k, count] : table.counts) {
            data << nlohmann::json{{"n", n}, {"k", k}, {"count", count.get_str()}}.dump() << '\n';
        }
    } else {
        data << "n,k,count\n";
        for (const auto& [k, count] : table.counts) data << n << ',' << k << ',' << count.get_str() << '\n';
    }
}

void cmd_stats(const RunConfig& config, const RecurrenceSpec& spec, std::ostream& data) {
    const std::size_t n_min = parse_index(arg(config, 0, "n_min"), "n_min");
    const std::size_t n_max = parse_index(arg(config, 1, "n_max"), "n_max");
    const MomentFits fits = fit_moments(spec, n_min, n_max);
    const auto series = count_dp_series(spec, n_max);

    std::vector<std::optional<double>> ks;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        const CountTable& t = series[n - 1];
        ks.push_back(moments(t).variance == 0 ? std::nullopt : std::optional(ks_distance(t)));
    }
    const std::pair<const char*, const LinearFit*> fit_rows[] = {{"mean", &fits.mean}, {"variance", &fits.variance}};

    if (json_lines(config)) {
        for (std::size_t i = 0; i < fits.per_n.size(); ++i) {
            const MomentSummary& m = fits.per_n[i];
            nlohmann::json row{{"type", "moments"},
                               {"n", m.n},
                               {"mean", m.mean.get_str()},
                               {"variance", m.variance.get_str()},
                               {"mean_approx", real15(m.mean_approx)},
                               {"variance_approx", real15(m.variance_approx)},
                               {"ks", ks[i] ? nlohmann::json(real15(*ks[i])) : nlohmann::json(nullptr)}};
            data << row.dump() << '\n';
        }
        for (const auto& [name, fit] : fit_rows) {
            data << nlohmann::json{{"type", "fit"},     {"quantity", name},           {"spec", spec.to_string()},
                                   {"n_min", n_min},    {"n_max", n_max},             {"slope", real15(fit->slope)},
                                   {"intercept", real15(fit->intercept)}, {"residual", real15(fit->residual)}}
                        .dump()
                 << '\n';
        }
        return;
    }
    data << "n,mean,variance,ks\n";
    for (std::size_t i = 0; i < fits.per_n.size(); ++i) {
        const MomentSummary& m = fits.per_n[i];
        data << m.n << ',' << real(m.mean_approx) << ',' << real(m.variance_approx) << ','
             << (ks[i] ? real(*ks[i]) : "") << '\n';
    }
    data << "\nquantity,spec,n_min,n_max,slope,intercept,residual\n";
    for (const auto& [name, fit] : fit_rows) {
        data << name << ",\"" << spec.to_string() << "\"," << n_min << ',' << n_max << ',' << real(fit->slope) << ','
             << real(fit->intercept) << ',' << real(fit->residual) << '\n';
    }
}

void cmd_fardiff(const RunConfig& config, std::ostream& data) {
    const Natural n = parse_integer(arg(config, 0, "N"), true);
    const SignedDecomposition d = fardiff_decompose(n, generate(RecurrenceSpec::fibonacci(), 2));
    if (json_lines(config)) {
        data << to_json(d, n).dump() << '\n';
    } else {
        data << format_fardiff(d, n) << '\n';
    }
}

void cmd_fdstats(const RunConfig& config, std::ostream& data, std::ostream& out) {
    const std::size_t n = parse_index(arg(config, 0, "n"), "n");
    const JointCountTable table = joint_counts(n, config.interval, config.threads);
    const double target = correlation_target(dominant_root(RecurrenceSpec::fibonacci(), 1e-14));
    std::optional<double> r;
    try {
        r = correlation(table);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateMarginal) throw;
    }
    const bool to_stdout = &data == &out;
    if (json_lines(config)) {
        for (const auto& [key, count] : table.counts) {
            data << nlohmann::json{{"n", n}, {"k_plus", key.first}, {"k_minus", key.second}, {"count", std::to_string(count)}}
                        .dump()
                 << '\n';
        }
        out << nlohmann::json{{"correlation", r ? nlohmann::json(real15(*r)) : nlohmann::json(nullptr)},
                              {"target", real15(target)}}
                   .dump()
            << '\n';
        return;
    }
    data << "n,k_plus,k_minus,count\n";
    for (const auto& [key, count] : table.counts) {
        data << n << ',' << key.first << ',' << key.second << ',' << count << '\n';
    }
    if (to_stdout) data << '\n';
    out << "correlation=" << (r ? real(*r) : std::string("undefined")) << ", target=" << fmt::format("{:.6f}", target)
        << '\n';
}

void cmd_root(const RunConfig& config, const RecurrenceSpec& spec, std::ostream& data) {
    RootReport report = root_report(spec, config.tol);
    if (config.format != Format::Text) {
        report.lambda = real15(report.lambda);
        report.growth_deviation = real15(report.growth_deviation);
    }
    switch (config.format) {
        case Format::JsonLines: data << report.to_json().dump() << '\n'; break;
        case Format::Csv:
            data << "spec,lambda,tol,growth_deviation\n"
                 << '"' << spec.to_string() << "\"," << real(report.lambda) << ',' << real(report.tol) << ','
                 << real(report.growth_deviation) << '\n';
            break;
        default: data << fmt::format("λ = {}\n", report.lambda); break;
    }
}

}  // namespace

std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Generalized Zeckendorf and far-difference decompositions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::string interval = "leading";
    std::uint64_t seed = 0;
    app.add_option("--spec", config.spec, "Recurrence coefficients, e.g. 1,1 or 2,0,3")->capture_default_str();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "tsv", "json-lines"}))
        ->capture_default_str();
    app.add_option("-o,--output", config.output, "Write data to this file instead of standard output");
    app.add_option("--tol", config.tol, "Root-finding tolerance")->capture_default_str();
    app.add_option("--threads", config.threads, "Worker threads for exhaustive tallies (0 = all cores)");
    auto* seed_opt = app.add_option("--seed", seed, "Reserved; no command uses randomness yet");

    struct Sub {
        Command command;
        const char* name;
        const char* help;
        std::vector<const char*> positional;
        std::size_t required;
    };
    const std::vector<Sub> subs = {
        {Command::Seq, "seq", "Export H_1..H_n", {"n"}, 1},
        {Command::Decomp, "decomp", "Legal decomposition of N (or of every integer in N..M)", {"N", "M"}, 1},
        {Command::Legal, "legal", "Check a comma-separated digit string, leading digit first", {"digits"}, 1},
        {Command::Count, "count", "Counts of integers in [H_n, H_{n+1}) by number of summands", {"n"}, 1},
        {Command::Stats, "stats", "Moments, KS distance and linear fits over a window", {"n_min", "n_max"}, 2},
        {Command::Fardiff, "fardiff", "Far-difference representation of N", {"N"}, 1},
        {Command::Fdstats, "fdstats", "Joint positive/negative summand counts and their correlation", {"n"}, 1},
        {Command::Root, "root", "Dominant root of the characteristic polynomial", {}, 0},
        {Command::Verify, "verify", "Run the acceptance criteria", {}, 0},
    };
    std::map<CLI::App*, Command> commands;
    std::vector<std::vector<std::string>> values(subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) {
        CLI::App* sub = app.add_subcommand(subs[i].name, subs[i].help);
        commands[sub] = subs[i].command;
        values[i].resize(subs[i].positional.size());
        for (std::size_t p = 0; p < subs[i].positional.size(); ++p) {
            auto* opt = sub->add_option(subs[i].positional[p], values[i][p]);
            if (p < subs[i].required) opt->required();
        }
        if (subs[i].command == Command::Count) sub->add_flag("--exhaustive", config.exhaustive, "Brute-force oracle mode");
        if (subs[i].command == Command::Fdstats) {
            sub->add_option("--interval", interval, "leading: leading term F_n; fibonacci: [F_n, F_{n+1})")
                ->check(CLI::IsMember({"leading", "fibonacci"}))
                ->capture_default_str();
        }
        if (subs[i].command == Command::Verify) sub->add_option("--only", config.only, "Criterion numbers to run");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    for (std::size_t i = 0; i < subs.size(); ++i) {
        CLI::App* sub = app.get_subcommand(subs[i].name);
        if (!sub->parsed()) continue;
        config.command = subs[i].command;
        for (std::size_t p = 0; p < values[i].size(); ++p) {
            if (sub->count(subs[i].positional[p]) > 0) config.args.push_back(values[i][p]);
        }
    }
    config.format = format == "csv"   ? Format::Csv
                    : format == "tsv" ? Format::Tsv
                    : format == "json-lines" ? Format::JsonLines
                                             : Format::Text;
    config.interval = interval == "fibonacci" ? FarDifferenceInterval::Fibonacci : FarDifferenceInterval::LeadingIndex;
    if (seed_opt->count() > 0) config.seed = seed;
    return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.format == Format::Tsv && config.command != Command::Decomp) {
            throw Error(ErrorKind::InvalidArgument, "--format tsv only applies to decomp");
        }
        if (config.command == Command::Verify) {
            acceptance::Options options;
            options.threads = config.threads;
            options.only = config.only;
            const auto results = acceptance::run(options, out);
            std::size_t passed = 0;
            for (const auto& r : results) passed += r.passed ? 1 : 0;
            out << passed << '/' << results.size() << " criteria passed\n";
            return acceptance::all_passed(results) ? kExitOk : kExitFailed;
        }

        const RecurrenceSpec spec = RecurrenceSpec::parse(config.spec);
        std::ofstream file;
        if (!config.output.empty()) {
            file.open(config.output, std::ios::binary);
            if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open output file '" + config.output + "'");
        }
        std::ostream& data = config.output.empty() ? out : file;

        switch (config.command) {
            case Command::Seq: cmd_seq(config, spec, data); break;
            case Command::Decomp: cmd_decomp(config, spec, data); break;
            case Command::Legal: cmd_legal(config, spec, data); break;
            case Command::Count: cmd_count(config, spec, data); break;
            case Command::Stats: cmd_stats(config, spec, data); break;
            case Command::Fardiff: cmd_fardiff(config, data); break;
            case Command::Fdstats: cmd_fdstats(config, data, out); break;
            case Command::Root: cmd_root(config, spec, data); break;
            case Command::Verify: break;
        }
        data.flush();
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::ScaleTooLarge ? kExitScale : kExitValidation;
    }
}

}  // namespace zeck::cli
