#include "wfh/cli.hpp"

#include <optional>

#include "CLI11.hpp"
#include "wfh/mbss.hpp"
#include "wfh/models.hpp"
#include "wfh/render.hpp"
#include "wfh/rsindex.hpp"
#include "wfh/verdict.hpp"

namespace wfh {

namespace {

struct CommonOpts {
    std::string format = "ascii";
    std::string max_action = "20pi";
    std::string convention = "flow-derived";
    std::uint64_t seed = 0;
};

void add_format(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "ascii", "svg"}));
}

void add_max_action(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--max-action", opts.max_action,
                    "action bound as '<rational>pi' (default 20pi)");
}

void add_convention(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--period-convention", opts.convention,
                    "which minimal chord period to use")
        ->check(CLI::IsMember({"paper", "flow-derived"}));
}

PeriodConvention convention_of(const CommonOpts& opts) {
    return opts.convention == "paper" ? PeriodConvention::Paper
                                      : PeriodConvention::FlowDerived;
}

Boundary boundary_of(const std::string& s) {
    if (s == "lagrangian")
        return Boundary::LagrangianHorizontal;
    if (s == "graph")
        return Boundary::GraphDiagonal;
    throw std::invalid_argument("boundary type must be 'lagrangian' or 'graph'");
}

std::vector<long long> parse_weights(const std::string& csv) {
    std::vector<long long> weights;
    for (const auto& block : parse_blocks(csv)) {
        if (!block.speed.is_integer() || block.speed.num() <= 0)
            throw std::invalid_argument("weights must be positive integers");
        weights.push_back(block.speed.num());
    }
    return weights;
}

void emit(std::ostream& out, const std::string& format, const ordered_json& doc,
          const std::string& ascii) {
    if (format == "svg")
        throw std::invalid_argument("svg output is only available for ss-page");
    if (format == "json")
        out << doc.dump(2) << "\n";
    else
        out << ascii;
}

int cmd_model(const std::string& preset, const CommonOpts& opts, std::ostream& out) {
    ChordSystem system = build(ModelFamily::parse(preset), convention_of(opts));
    MorseBottReport validity = morse_bott_validity(system);
    ordered_json doc = system_to_json(system, validity);
    std::ostringstream ascii;
    ascii << "model " << system.model_name << " (n=" << system.n << ")\n"
          << "  minimal chord period: " << system.minimal_chord_period_pi.str() << "pi"
          << " (flow " << system.flow_period_pi.str() << "pi, literature "
          << system.paper_period_pi.str() << "pi)\n"
          << "  component topology:   " << system.component_topology.str() << "\n"
          << "  Lagrangian:           " << system.lagrangian_topology.str() << " ("
          << system.real_component_count << " real component"
          << (system.real_component_count == 1 ? "" : "s") << ")\n"
          << "  contractible divisor: " << system.contractible_divisor << "\n"
          << "  pi1 order:            "
          << (system.fundamental_group_order ? std::to_string(*system.fundamental_group_order)
                                             : std::string("infinite"))
          << "\n"
          << "  H^1_c vanishes:       " << (system.h1c_vanishes ? "yes" : "no") << "\n";
    if (system.index_data_available)
        ascii << "  index of iterate N:   " << system.index_slope << "*N\n";
    else
        ascii << "  index data:           unavailable\n";
    for (const auto& check : validity.checks)
        ascii << "  [" << (check.pass ? "pass" : "FAIL") << "] " << check.name << ": "
              << check.detail << "\n";
    emit(out, opts.format, doc, ascii.str());
    return 0;
}

int cmd_spectrum(const std::string& preset, const std::string& weights_csv,
                 const CommonOpts& opts, std::ostream& out) {
    if (!preset.empty() && !weights_csv.empty())
        throw std::invalid_argument("give either a preset or --weights, not both");
    if (!weights_csv.empty()) {
        std::vector<long long> weights = parse_weights(weights_csv);
        Rational t0 = chord_spectrum_from_flow(weights, convention_of(opts));
        Rational full(2 * weights_lcm(weights));
        ordered_json doc;
        doc["weights"] = weights;
        doc["t0_pi"] = t0.str();
        doc["full_period_pi"] = full.str();
        std::ostringstream ascii;
        ascii << "minimal chord period: " << t0.str() << "pi\n"
              << "full flow period:     " << full.str() << "pi\n";
        emit(out, opts.format, doc, ascii.str());
        return 0;
    }
    ChordSystem system = build(ModelFamily::parse(preset), convention_of(opts));
    Rational bound = parse_pi(opts.max_action);
    Rational gap = system.minimal_chord_period_pi * Rational(system.contractible_divisor);
    if ((bound / gap).floor() > 1000000)
        throw std::invalid_argument("action bound admits more than 10^6 chords");
    ordered_json actions = ordered_json::array();
    std::ostringstream ascii;
    ascii << "admitted chord actions of " << system.model_name << " up to "
          << bound.str() << "pi:\n";
    for (long long N = 1;; ++N) {
        Rational action = gap * Rational(N);
        if (action > bound)
            break;
        actions.push_back(action.str());
        ascii << "  l=" << N * system.contractible_divisor << ": " << action.str() << "pi\n";
    }
    ordered_json doc;
    doc["model"] = system.model_name;
    doc["t0_pi"] = system.minimal_chord_period_pi.str();
    doc["contractible_divisor"] = system.contractible_divisor;
    doc["admitted_actions_pi"] = actions;
    emit(out, opts.format, doc, ascii.str());
    return 0;
}

int cmd_index(const std::string& preset, long long iterates, const CommonOpts& opts,
              std::ostream& out) {
    ChordSystem system = build(ModelFamily::parse(preset), convention_of(opts));
    ordered_json list = ordered_json::array();
    std::ostringstream ascii;
    for (long long N = 1; N <= iterates; ++N) {
        long long mu = system.index_of_iterate(N);  // refuses without index data
        list.push_back(ordered_json{{"N", N}, {"mu", mu}});
        ascii << "mu(" << N << "*L) = " << mu << "\n";
    }
    ordered_json doc;
    doc["model"] = system.model_name;
    doc["iterates"] = list;
    emit(out, opts.format, doc, ascii.str());
    return 0;
}

int cmd_rs_index(const std::string& blocks_csv, const std::string& duration,
                 const std::string& type, bool numeric, long long samples, double tolerance,
                 const CommonOpts& opts, std::ostream& out) {
    RotationPath path;
    path.blocks = parse_blocks(blocks_csv);
    path.duration_pi = parse_pi(duration);
    path.boundary = boundary_of(type);
    HalfInt index = rs_index(path);
    ordered_json doc;
    ordered_json blocks = ordered_json::array();
    for (const auto& block : path.blocks)
        blocks.push_back(block.speed.str());
    doc["blocks"] = blocks;
    doc["duration_pi"] = path.duration_pi.str();
    doc["boundary"] = type;
    doc["index"] = index.str();
    std::ostringstream ascii;
    ascii << index.str() << "\n";
    if (numeric) {
        HalfInt oracle = rs_index_numeric(path, samples, tolerance, opts.seed);
        doc["numeric_index"] = oracle.str();
        doc["samples"] = samples;
        ascii << "numeric: " << oracle.str() << " (" << samples << " samples)\n";
    }
    emit(out, opts.format, doc, ascii.str());
    return 0;
}

std::pair<SpectralPage, WfhReport> analyzed_page(const std::string& preset,
                                                 const CommonOpts& opts) {
    ChordSystem system = build(ModelFamily::parse(preset), convention_of(opts));
    SpectralPage page = degeneration_check(assemble_e1(system, parse_pi(opts.max_action)));
    WfhReport report = extract_wfh(page);
    return {std::move(page), std::move(report)};
}

int cmd_ss_page(const std::string& preset, const CommonOpts& opts, std::ostream& out) {
    auto [page, report] = analyzed_page(preset, opts);
    if (opts.format == "svg") {
        out << render_page_svg(page);
        return 0;
    }
    emit(out, opts.format, page_to_json(page), render_page_ascii(page));
    return 0;
}

int cmd_wfh(const std::string& preset, const CommonOpts& opts, std::ostream& out) {
    auto [page, report] = analyzed_page(preset, opts);
    ordered_json doc = wfh_document(page, report);
    std::ostringstream ascii;
    ascii << "WFH of " << report.model_name << " below action " << report.max_action_pi.str()
          << "pi\n  degrees:";
    for (const auto& [deg, dims] : report.by_degree) {
        ascii << " " << deg << ":";
        if (dims.determined())
            ascii << dims.lower;
        else
            ascii << "[" << dims.lower << "," << dims.upper << "]";
    }
    ascii << "\n  determined: " << (report.fully_determined ? "yes" : "no") << "\n  filtered:";
    for (const auto& point : report.filtered) {
        ascii << " <" << point.cutoff_pi.str() << "pi:";
        if (point.lower == point.upper)
            ascii << point.lower;
        else
            ascii << "[" << point.lower << "," << point.upper << "]";
    }
    ascii << "\n  slope: " << (Rational(report.per_column_dim) / report.column_gap_pi).str()
          << " per pi\n";
    emit(out, opts.format, doc, ascii.str());
    return 0;
}

int cmd_growth(const std::string& preset, const CommonOpts& opts, std::ostream& out) {
    auto [page, report] = analyzed_page(preset, opts);
    GrowthEstimate growth = growth_slope(report);
    ordered_json doc;
    doc["model"] = report.model_name;
    doc["max_action_pi"] = report.max_action_pi.str();
    doc["exact_slope_per_pi"] = growth.exact_per_pi.str();
    doc["empirical_slope_per_pi"] = growth.empirical_per_pi.str();
    doc["window_ok"] = growth.window_ok;
    doc["warning"] = growth.warning;
    std::ostringstream ascii;
    ascii << "growth of " << report.model_name << " below action "
          << report.max_action_pi.str() << "pi\n"
          << "  exact slope:     " << growth.exact_per_pi.str() << " per pi\n"
          << "  window estimate: " << growth.empirical_per_pi.str() << " per pi\n";
    if (!growth.warning.empty())
        ascii << "  warning: " << growth.warning << "\n";
    emit(out, opts.format, doc, ascii.str());
    return 0;
}

int cmd_verdict(const std::string& preset, const CommonOpts& opts, std::ostream& out) {
    ChordSystem system = build(ModelFamily::parse(preset), convention_of(opts));
    SpectralPage page = degeneration_check(assemble_e1(system, parse_pi(opts.max_action)));
    WfhReport report = extract_wfh(page);
    Verdict verdict = evaluate(system, report);
    ordered_json doc = verdict_to_json(system.model_name, verdict);
    std::ostringstream ascii;
    ascii << "verdict for " << system.model_name << " (action < "
          << report.max_action_pi.str() << "pi)\n"
          << "  volume growth bound: " << (verdict.theorem_a.applies ? "applies" : "no") << " - "
          << verdict.theorem_a.conclusion << "\n"
          << "  infinite order:      " << (verdict.theorem_b.applies ? "applies" : "no") << " - "
          << verdict.theorem_b.conclusion << "\n"
          << "  finite-order test:   " << verdict.finite_order_note << "\n";
    for (const auto& entry : verdict.trace)
        ascii << "  [" << entry.status << "] " << entry.hypothesis << " (" << entry.source
              << ")\n";
    emit(out, opts.format, doc, ascii.str());
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reeb chord index and wrapped Floer homology calculator"};
    app.require_subcommand(1);
    CommonOpts opts;

    std::string preset, weights_csv, blocks_csv, duration, type = "lagrangian";
    bool numeric = false;
    long long iterates = 10, samples = 10000;
    double tolerance = -1.0;

    CLI::App* model = app.add_subcommand("model", "chord system summary for a preset");
    model->add_option("preset", preset)->required();
    add_format(model, opts);
    add_convention(model, opts);

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "chord spectrum of a preset or of explicit weights");
    spectrum->add_option("preset", preset);
    spectrum->add_option("--weights", weights_csv, "comma-separated positive integer weights");
    add_format(spectrum, opts);
    add_max_action(spectrum, opts);
    add_convention(spectrum, opts);

    CLI::App* index = app.add_subcommand("index", "Maslov indices of chord iterates");
    index->add_option("preset", preset)->required();
    index->add_option("--iterates", iterates, "how many iterates to list");
    add_format(index, opts);
    add_convention(index, opts);

    CLI::App* rsindex_cmd =
        app.add_subcommand("rs-index", "Robbin-Salamon index of a rotation path");
    rsindex_cmd->add_option("--blocks", blocks_csv, "comma-separated rational speeds")
        ->required();
    rsindex_cmd->add_option("--duration", duration, "duration as '<rational>pi'")->required();
    rsindex_cmd->add_option("--type", type, "boundary condition: lagrangian|graph")
        ->check(CLI::IsMember({"lagrangian", "graph"}));
    rsindex_cmd->add_flag("--numeric", numeric, "also run the sampled crossing-form oracle");
    rsindex_cmd->add_option("--samples", samples, "sample count for the numeric oracle");
    rsindex_cmd->add_option("--tolerance", tolerance, "bisection tolerance for the oracle");
    rsindex_cmd->add_option("--seed", opts.seed, "sampling jitter seed for the oracle");
    add_format(rsindex_cmd, opts);

    CLI::App* ss_page = app.add_subcommand("ss-page", "assembled first page with survival flags");
    ss_page->add_option("preset", preset)->required();
    add_format(ss_page, opts);
    add_max_action(ss_page, opts);
    add_convention(ss_page, opts);

    CLI::App* wfh_cmd = app.add_subcommand("wfh", "graded homology report");
    wfh_cmd->add_option("preset", preset)->required();
    add_format(wfh_cmd, opts);
    add_max_action(wfh_cmd, opts);
    add_convention(wfh_cmd, opts);

    CLI::App* growth = app.add_subcommand("growth", "action-filtered growth slope");
    growth->add_option("preset", preset)->required();
    add_format(growth, opts);
    add_max_action(growth, opts);
    add_convention(growth, opts);

    CLI::App* verdict_cmd = app.add_subcommand("verdict", "theorem hypothesis gates");
    verdict_cmd->add_option("preset", preset)->required();
    add_format(verdict_cmd, opts);
    add_max_action(verdict_cmd, opts);
    add_convention(verdict_cmd, opts);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error[usage]: " << e.what() << "\n";
        return 2;
    }

    try {
        if (model->parsed())
            return cmd_model(preset, opts, out);
        if (spectrum->parsed()) {
            if (preset.empty() && weights_csv.empty())
                throw std::invalid_argument("spectrum needs a preset or --weights");
            return cmd_spectrum(preset, weights_csv, opts, out);
        }
        if (index->parsed())
            return cmd_index(preset, iterates, opts, out);
        if (rsindex_cmd->parsed())
            return cmd_rs_index(blocks_csv, duration, type, numeric, samples, tolerance, opts,
                                out);
        if (ss_page->parsed())
            return cmd_ss_page(preset, opts, out);
        if (wfh_cmd->parsed())
            return cmd_wfh(preset, opts, out);
        if (growth->parsed())
            return cmd_growth(preset, opts, out);
        if (verdict_cmd->parsed())
            return cmd_verdict(preset, opts, out);
        err << "error[usage]: no subcommand\n";
        return 2;
    } catch (const ModelRefusal& e) {
        err << "error[model-refusal]: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error[usage]: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        // Unmet preconditions: unresolved crossing clusters, windows whose
        // lower bounds are undetermined.
        err << "error[data]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error[internal]: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace wfh
