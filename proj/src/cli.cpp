#include "zetalab/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "zetalab/experiments.hpp"
#include "zetalab/zeros.hpp"

namespace zetalab {

namespace {

const char* command_name(Command c) {
    switch (c) {
        case Command::Eval: return "eval";
        case Command::Theta: return "theta";
        case Command::Z: return "z";
        case Command::Zeros: return "zeros";
        case Command::Mean: return "mean";
        case Command::Lemma2: return "lemma2";
        case Command::Bound: return "bound";
        case Command::Convexity: return "convexity";
        case Command::Growth: return "growth";
        case Command::Search: return "search";
        case Command::Density: return "density";
        case Command::ExploreZ: return "explore-z";
        case Command::Report: return "report";
    }
    return "eval";
}

const std::vector<std::pair<std::string, Command>>& command_table() {
    static const std::vector<std::pair<std::string, Command>> table = {
        {"eval", Command::Eval},       {"theta", Command::Theta},
        {"z", Command::Z},             {"zeros", Command::Zeros},
        {"mean", Command::Mean},       {"lemma2", Command::Lemma2},
        {"bound", Command::Bound},     {"convexity", Command::Convexity},
        {"growth", Command::Growth},   {"search", Command::Search},
        {"density", Command::Density}, {"explore-z", Command::ExploreZ},
        {"report", Command::Report},
    };
    return table;
}

std::vector<double> parse_double_list(const std::string& s, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": cannot parse number '" + item + "'");
        }
    }
    return out;
}

// Expand --config <file> into flag tokens placed right after the
// subcommand, so later command-line flags override them.
std::vector<std::string> merge_config(std::vector<std::string> tokens) {
    std::string config_path;
    for (size_t i = 0; i < tokens.size();) {
        if (tokens[i] == "--config") {
            if (i + 1 >= tokens.size()) throw UsageError("--config requires a file path");
            config_path = tokens[i + 1];
            tokens.erase(tokens.begin() + static_cast<long>(i), tokens.begin() + static_cast<long>(i) + 2);
        } else if (tokens[i].rfind("--config=", 0) == 0) {
            config_path = tokens[i].substr(9);
            tokens.erase(tokens.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    if (config_path.empty()) return tokens;

    std::ifstream in(config_path);
    if (!in) throw UsageError("cannot open config file: " + config_path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw UsageError("bad JSON in config file " + config_path + ": " + e.what());
    }
    if (!doc.is_object()) throw UsageError("config file must hold a JSON object of flag values");

    std::vector<std::string> extra;
    for (const auto& [key, value] : doc.items()) {
        if (value.is_boolean()) {
            if (value.get<bool>()) extra.push_back("--" + key);
            continue;
        }
        extra.push_back("--" + key);
        if (value.is_string())
            extra.push_back(value.get<std::string>());
        else if (value.is_array()) {
            std::string joined;
            for (const auto& item : value) {
                if (!joined.empty()) joined += ",";
                joined += item.is_string() ? item.get<std::string>() : item.dump();
            }
            extra.push_back(joined);
        } else {
            extra.push_back(value.dump());
        }
    }

    // Insert after the subcommand token.
    size_t insert_at = tokens.size();
    for (size_t i = 1; i < tokens.size(); ++i) {
        const auto& tok = tokens[i];
        for (const auto& [name, cmd] : command_table()) {
            (void)cmd;
            if (tok == name) {
                insert_at = i + 1;
                break;
            }
        }
        if (insert_at != tokens.size()) break;
    }
    tokens.insert(tokens.begin() + static_cast<long>(insert_at), extra.begin(), extra.end());
    return tokens;
}

std::string timestamp() {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y%m%d-%H%M%S", std::localtime(&now));
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write output file: " + path);
    out << content;
}

std::string swap_extension(const std::string& path, const std::string& ext) {
    const auto dot = path.find_last_of('.');
    const auto slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + ext;
    return path.substr(0, dot) + ext;
}

// Writes the record per --format; default filename isolates the timestamp.
void write_record(const ExperimentRecord& rec, const RunConfig& config) {
    std::string base = config.out;
    if (base.empty()) base = rec.name + "-" + timestamp() + ".json";
    if (config.format == OutputFormat::Json || config.format == OutputFormat::Both)
        write_file(config.format == OutputFormat::Csv ? swap_extension(base, ".json") : base,
                   rec.to_json() + "\n");
    if (config.format == OutputFormat::Csv || config.format == OutputFormat::Both) {
        const std::string path =
            config.format == OutputFormat::Csv && !config.out.empty() ? base : swap_extension(base, ".csv");
        write_file(path, rec.to_csv());
    }
}

int finish_record(const ExperimentRecord& rec, const RunConfig& config) {
    write_record(rec, config);
    std::cout << rec.name << ": " << to_string(rec.verdict) << "\n";
    for (const auto& [k, v] : rec.computed) std::cout << "  " << k << " = " << format_double(v) << "\n";
    return rec.verdict == Verdict::Fail ? 1 : 0;
}

QuadratureConfig make_cfg(const RunConfig& config, double length, double height,
                          bool fast_zeta) {
    QuadratureConfig cfg = QuadratureConfig::for_segment(length, height, config.tol);
    cfg.zeta_acc.abs_tol = fast_zeta ? config.tol : std::min(1e-8, config.tol);
    return cfg;
}

ShiftGrid make_grid(const RunConfig& config) {
    if (!(config.grid_min > 0.0 && config.grid_max >= config.grid_min))
        throw UsageError("need --grid-min and --grid-max with 0 < min <= max");
    if (config.grid_step > 0.0)
        return ShiftGrid::uniform(config.grid_min, config.grid_max, config.grid_step);
    return ShiftGrid::phase_locked(config.grid_min, config.grid_max);
}

std::string format_complex(const Complex& v) {
    if (std::abs(v.imag()) < 1e-12) return format_double(v.real());
    return format_double(v.real()) + (v.imag() < 0 ? "-" : "+") +
           format_double(std::abs(v.imag())) + "i";
}

int run_eval(const RunConfig& config) {
    EvalAccuracy acc;
    acc.abs_tol = config.tol;
    const Complex value = eval_zeta(Complex(config.sigma, config.t), acc);
    std::cout << format_complex(value) << "\n";
    if (!config.out.empty()) {
        std::ostringstream csv;
        csv << "sigma,t,re,im\n"
            << format_double(config.sigma) << "," << format_double(config.t) << ","
            << format_double(value.real()) << "," << format_double(value.imag()) << "\n";
        write_file(config.out, csv.str());
    }
    return 0;
}

int run_theta(const RunConfig& config) {
    std::cout << format_double(riemann_siegel_theta(config.t)) << "\n";
    return 0;
}

int run_z(const RunConfig& config) {
    EvalAccuracy acc = EvalAccuracy::for_height(config.t);
    acc.abs_tol = std::min(acc.abs_tol, config.tol);
    const HardyZValue z = hardy_z_full(config.t, acc);
    std::cout << format_double(z.value) << " (im residual " << format_double(z.im_residual)
              << ")\n";
    return 0;
}

int run_zeros(const RunConfig& config) {
    if (!(config.to > config.from)) throw UsageError("zeros: need --from < --to");
    const double lo = std::max(config.from, 1e-3);
    const double step = config.step > 0.0 ? config.step : default_grid_step(config.to);
    const ScanResult scan = scan_zero_ordinates(lo, config.to, step);
    if (scan.grid_too_coarse)
        std::cerr << "{\"warning\":\"grid too coarse: estimate "
                  << format_double(scan.estimated_count) << " vs observed "
                  << scan.zeros.size() << "\"}\n";
    const std::string csv = zeros_to_csv(scan.zeros);
    if (config.out.empty())
        std::cout << csv;
    else
        write_file(config.out, csv);
    std::cout << scan.zeros.size() << " zeros in [" << format_double(lo) << ", "
              << format_double(config.to) << "]\n";
    return 0;
}

int run_mean(const RunConfig& config) {
    const LineSegment seg{config.sigma, config.T, config.delta};
    const QuadratureConfig cfg = make_cfg(config, config.delta, config.T, false);
    const IntegralResult res = short_interval_mean(seg, cfg);
    ExperimentRecord rec;
    rec.name = "short_interval_mean";
    rec.inputs["sigma"] = format_double(config.sigma);
    rec.inputs["T"] = format_double(config.T);
    rec.inputs["delta"] = format_double(config.delta);
    rec.inputs["abs_tol"] = format_double(cfg.abs_tol);
    rec.computed["value"] = res.value;
    rec.computed["quadrature_error"] = res.abs_error;
    rec.verdict = res.tolerance_met ? Verdict::Pass : Verdict::Informational;
    return finish_record(rec, config);
}

int run_lemma2(const RunConfig& config) {
    const QuadratureConfig cfg = make_cfg(config, config.B - config.A, config.T, false);
    if (!config.T_list.empty())
        return finish_record(
            sine_phase_sweep(config.T_list, config.A, config.B, config.C, cfg), config);
    return finish_record(sine_phase_average(config.A, config.B, config.C, config.T, cfg),
                         config);
}

int run_bound(const RunConfig& config) {
    const TargetFunction f = TargetFunction::parse(config.target, config.H);
    const WeightFunction g = WeightFunction::parse(config.weight);
    const ShiftGrid grid = make_grid(config);
    const LineSegment seg{0.5, grid.t_min, f.domain_length()};
    const QuadratureConfig cfg = make_cfg(config, f.domain_length(), grid.t_max, true);
    return finish_record(nonuniversality_bound_run(f, g, seg, grid, cfg, config.slack), config);
}

int run_convexity(const RunConfig& config) {
    ConvexityParams params = lemma1_parameters(config.sigma, config.delta, config.M, config.A);
    params.t0 = config.t0;
    const QuadratureConfig cfg = make_cfg(config, params.height, config.t0, false);
    return finish_record(convexity_check(params, cfg), config);
}

int run_growth(const RunConfig& config) {
    if (config.T_list.size() < 3) throw UsageError("growth: need --T-list with >= 3 heights");
    const double t_hi = *std::max_element(config.T_list.begin(), config.T_list.end());
    const QuadratureConfig cfg = make_cfg(config, config.delta, t_hi, false);
    return finish_record(growth_exponent_fit(config.sigma, config.delta, config.T_list, cfg),
                         config);
}

int run_search(const RunConfig& config) {
    const TargetFunction f = TargetFunction::parse(config.target, config.H);
    const ShiftGrid grid = make_grid(config);
    const LineSegment seg{config.sigma, grid.t_min, f.domain_length()};
    DistanceNorm norm;
    if (config.norm == "L1")
        norm = DistanceNorm::L1;
    else if (config.norm == "sup")
        norm = DistanceNorm::Sup;
    else
        throw UsageError("--norm must be L1 or sup");
    const bool fast = config.sigma == 0.5;
    const QuadratureConfig cfg = make_cfg(config, f.domain_length(), grid.t_max, fast);
    return finish_record(translate_search(f, seg, grid, norm, cfg), config);
}

int run_density(const RunConfig& config) {
    const TargetFunction f = TargetFunction::parse(config.target, config.H);
    if (!(config.T_max > 0.0)) throw UsageError("density: need --T-max > 0");
    const LineSegment seg{config.sigma, config.sample_step, f.domain_length()};
    const QuadratureConfig cfg = make_cfg(config, f.domain_length(), config.T_max, false);
    return finish_record(
        density_measure(f, seg, config.eps, config.T_max, config.sample_step, cfg, false),
        config);
}

int run_explore_z(const RunConfig& config) {
    const TargetFunction f = TargetFunction::parse(config.target, config.H);
    const ShiftGrid grid = make_grid(config);
    ZSearchMode mode;
    if (config.mode == "Z")
        mode = ZSearchMode::Z;
    else if (config.mode == "absZ")
        mode = ZSearchMode::AbsZ;
    else if (config.mode == "loglog-normalized-abs" || config.mode == "loglog")
        mode = ZSearchMode::LogLogNormalizedAbs;
    else
        throw UsageError("--mode must be Z, absZ, or loglog-normalized-abs");
    const QuadratureConfig cfg = make_cfg(config, f.domain_length(), grid.t_max, true);
    return finish_record(z_universality_search(f, config.H, grid, mode, cfg), config);
}

int run_report(const RunConfig& config) {
    if (config.in.empty()) throw UsageError("report: need --in <record.json>");
    std::ifstream in(config.in);
    if (!in) throw UsageError("cannot open record file: " + config.in);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad record JSON: ") + e.what());
    }
    const nlohmann::json payload = doc.contains("payload") ? doc["payload"] : doc;
    std::cout << payload.dump(2) << "\n";
    if (doc.contains("runtime_seconds"))
        std::cout << "runtime_seconds: " << doc["runtime_seconds"].dump() << "\n";
    if (!config.out.empty()) {
        ExperimentRecord rec;
        rec.name = payload.value("name", "record");
        if (payload.contains("inputs"))
            for (const auto& [k, v] : payload["inputs"].items())
                rec.inputs[k] = v.is_string() ? v.get<std::string>() : v.dump();
        if (payload.contains("computed"))
            for (const auto& [k, v] : payload["computed"].items()) rec.computed[k] = v.get<double>();
        if (payload.contains("reference"))
            for (const auto& [k, v] : payload["reference"].items()) rec.reference[k] = v.get<double>();
        const std::string verdict = payload.value("verdict", "informational");
        rec.verdict = verdict == "pass" ? Verdict::Pass
                                        : (verdict == "fail" ? Verdict::Fail : Verdict::Informational);
        write_file(config.out, rec.to_csv());
    }
    return 0;
}

} // namespace

RunConfig parse_args(const std::vector<std::string>& argv) {
    const std::vector<std::string> tokens = merge_config(argv);

    RunConfig config;
    std::string t_list_raw, format_raw = "json";

    CLI::App app{"zetalab: numerical experiments around the zeta function on vertical lines"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, cmd] : command_table()) {
        (void)cmd;
        subs[name] = app.add_subcommand(name);
    }

    std::map<const CLI::App*, double> tol_defaults;
    auto add_common = [&](CLI::App* sub, double default_tol) {
        sub->add_option("--tol", config.tol, "absolute tolerance");
        tol_defaults[sub] = default_tol;
        sub->add_option("--out", config.out, "output path");
        sub->add_option("--format", format_raw, "json|csv|both");
        sub->add_option("--threads", config.threads, "worker thread cap");
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--grid-min", config.grid_min)->required();
        sub->add_option("--grid-max", config.grid_max)->required();
        sub->add_option("--grid-step", config.grid_step,
                        "shift spacing; omit for the phase-locked default");
    };

    add_common(subs["eval"], 1e-10);
    subs["eval"]->add_option("--sigma", config.sigma)->required();
    subs["eval"]->add_option("--t", config.t)->required();

    add_common(subs["theta"], 1e-10);
    subs["theta"]->add_option("--t", config.t)->required();

    add_common(subs["z"], 1e-10);
    subs["z"]->add_option("--t", config.t)->required();

    add_common(subs["zeros"], 1e-10);
    subs["zeros"]->add_option("--from", config.from)->required();
    subs["zeros"]->add_option("--to", config.to)->required();
    subs["zeros"]->add_option("--step", config.step);

    add_common(subs["mean"], 1e-8);
    subs["mean"]->add_option("--sigma", config.sigma)->required();
    subs["mean"]->add_option("--T", config.T)->required();
    subs["mean"]->add_option("--delta", config.delta)->required();

    add_common(subs["lemma2"], 1e-8);
    subs["lemma2"]->add_option("--T", config.T);
    subs["lemma2"]->add_option("--T-list", t_list_raw, "comma-separated heights (sweep mode)");
    subs["lemma2"]->add_option("--A", config.A);
    subs["lemma2"]->add_option("--B", config.B);
    subs["lemma2"]->add_option("--C", config.C);

    add_common(subs["bound"], 1e-3);
    subs["bound"]->add_option("--target", config.target)->required();
    subs["bound"]->add_option("--weight", config.weight);
    subs["bound"]->add_option("--H", config.H)->required();
    subs["bound"]->add_option("--slack", config.slack);
    add_grid(subs["bound"]);

    add_common(subs["convexity"], 1e-8);
    subs["convexity"]->add_option("--sigma", config.sigma)->required();
    subs["convexity"]->add_option("--delta", config.delta)->required();
    subs["convexity"]->add_option("--t0", config.t0)->required();
    subs["convexity"]->add_option("--A", config.A)->required();
    subs["convexity"]->add_option("--M", config.M);

    add_common(subs["growth"], 1e-6);
    subs["growth"]->add_option("--sigma", config.sigma)->required();
    subs["growth"]->add_option("--delta", config.delta)->required();
    subs["growth"]->add_option("--T-list", t_list_raw, "comma-separated heights")->required();

    add_common(subs["search"], 1e-6);
    subs["search"]->add_option("--target", config.target)->required();
    subs["search"]->add_option("--sigma", config.sigma)->required();
    subs["search"]->add_option("--H", config.H)->required();
    subs["search"]->add_option("--norm", config.norm);
    add_grid(subs["search"]);

    add_common(subs["density"], 1e-6);
    subs["density"]->add_option("--target", config.target)->required();
    subs["density"]->add_option("--sigma", config.sigma)->required();
    subs["density"]->add_option("--H", config.H)->required();
    subs["density"]->add_option("--eps", config.eps)->required();
    subs["density"]->add_option("--T-max", config.T_max)->required();
    subs["density"]->add_option("--sample-step", config.sample_step)->required();

    add_common(subs["explore-z"], 1e-3);
    subs["explore-z"]->add_option("--target", config.target)->required();
    subs["explore-z"]->add_option("--H", config.H)->required();
    subs["explore-z"]->add_option("--mode", config.mode);
    add_grid(subs["explore-z"]);

    add_common(subs["report"], 1e-10);
    subs["report"]->add_option("--in", config.in)->required();

    std::vector<const char*> cargv;
    cargv.reserve(tokens.size());
    for (const auto& tok : tokens) cargv.push_back(tok.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        throw UsageError("help requested");
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    for (const auto& [name, sub] : subs) {
        if (sub->parsed()) {
            for (const auto& [cname, cmd] : command_table())
                if (cname == name) config.command = cmd;
            if (sub->count("--tol") == 0) config.tol = tol_defaults.at(sub);
        }
    }
    if (!t_list_raw.empty()) config.T_list = parse_double_list(t_list_raw, "--T-list");
    if (format_raw == "json")
        config.format = OutputFormat::Json;
    else if (format_raw == "csv")
        config.format = OutputFormat::Csv;
    else if (format_raw == "both")
        config.format = OutputFormat::Both;
    else
        throw UsageError("--format must be json, csv, or both");
    return config;
}

int run(const RunConfig& config) {
    int threads = config.threads;
    if (threads <= 0) {
        if (const char* env = std::getenv("ZLAB_THREADS")) threads = std::atoi(env);
    }
    set_worker_threads(threads);

    switch (config.command) {
        case Command::Eval: return run_eval(config);
        case Command::Theta: return run_theta(config);
        case Command::Z: return run_z(config);
        case Command::Zeros: return run_zeros(config);
        case Command::Mean: return run_mean(config);
        case Command::Lemma2: return run_lemma2(config);
        case Command::Bound: return run_bound(config);
        case Command::Convexity: return run_convexity(config);
        case Command::Growth: return run_growth(config);
        case Command::Search: return run_search(config);
        case Command::Density: return run_density(config);
        case Command::ExploreZ: return run_explore_z(config);
        case Command::Report: return run_report(config);
    }
    return 2;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> tokens(argv, argv + argc);
    try {
        const RunConfig config = parse_args(tokens);
        return run(config);
    } catch (const UsageError& e) {
        if (std::string(e.what()) == "help requested") return 0;
        nlohmann::json err{{"error", "usage"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const NumericError& e) {
        nlohmann::json err{{"error", "numeric"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 3;
    } catch (const std::exception& e) {
        nlohmann::json err{{"error", "internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 3;
    }
}

} // namespace zetalab
