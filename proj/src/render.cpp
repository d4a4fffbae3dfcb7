#include "wfh/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace wfh {

ordered_json graded_to_json(const GradedDims& g) {
    ordered_json out = ordered_json::object();
    for (const auto& [deg, dim] : g.entries())
        out[std::to_string(deg)] = dim;
    return out;
}

ordered_json page_to_json(const SpectralPage& page) {
    ordered_json columns = ordered_json::array();
    for (const auto& col : page.columns) {
        ordered_json gens = ordered_json::array();
        for (const auto& gen : col.gens) {
            gens.push_back(ordered_json{{"degree", gen.degree},
                                        {"survives", gen.flag == Survival::Survives}});
        }
        columns.push_back(ordered_json{
            {"p", col.p}, {"action_pi", col.action_pi.str()}, {"generators", gens}});
    }
    return ordered_json{{"columns", columns}};
}

ordered_json wfh_document(const SpectralPage& page, const WfhReport& report) {
    ordered_json doc = page_to_json(page);
    doc["wfh"] = graded_to_json(report.wfh);
    ordered_json filtered = ordered_json::array();
    for (const auto& point : report.filtered)
        filtered.push_back(ordered_json::array({point.cutoff_pi.str(), point.lower, point.upper}));
    doc["filtered"] = filtered;
    doc["slope_per_pi"] = (Rational(report.per_column_dim) / report.column_gap_pi).str();
    return doc;
}

ordered_json system_to_json(const ChordSystem& system, const MorseBottReport& validity) {
    ordered_json doc;
    doc["model"] = system.model_name;
    doc["n"] = system.n;
    doc["t0_pi"] = system.minimal_chord_period_pi.str();
    doc["t0_flow_pi"] = system.flow_period_pi.str();
    doc["t0_paper_pi"] = system.paper_period_pi.str();
    doc["component"] = system.component_topology.str();
    doc["lagrangian"] = system.lagrangian_topology.str();
    doc["real_components"] = system.real_component_count;
    doc["contractible_divisor"] = system.contractible_divisor;
    if (system.fundamental_group_order)
        doc["pi1_order"] = *system.fundamental_group_order;
    else
        doc["pi1_order"] = "infinite";
    doc["h1c_vanishes"] = system.h1c_vanishes;
    doc["index_data_available"] = system.index_data_available;
    if (system.index_data_available)
        doc["index_slope"] = system.index_slope;
    ordered_json checks = ordered_json::array();
    for (const auto& check : validity.checks)
        checks.push_back(ordered_json{
            {"check", check.name}, {"pass", check.pass}, {"detail", check.detail}});
    doc["morse_bott"] = checks;
    return doc;
}

ordered_json verdict_to_json(const std::string& model, const Verdict& verdict) {
    ordered_json doc;
    doc["model"] = model;
    doc["theorem_a"] = ordered_json{{"applies", verdict.theorem_a.applies},
                                    {"conclusion", verdict.theorem_a.conclusion}};
    doc["theorem_b"] = ordered_json{{"applies", verdict.theorem_b.applies},
                                    {"conclusion", verdict.theorem_b.conclusion}};
    doc["finite_order"] = verdict.finite_order_note;
    doc["corollary_gate"] =
        verdict.corollary_gate ? ordered_json(*verdict.corollary_gate) : ordered_json(nullptr);
    doc["gate_agrees"] =
        verdict.gate_agrees ? ordered_json(*verdict.gate_agrees) : ordered_json(nullptr);
    doc["inconclusive"] = verdict.inconclusive;
    ordered_json trace = ordered_json::array();
    for (const auto& entry : verdict.trace)
        trace.push_back(ordered_json{{"hypothesis", entry.hypothesis},
                                     {"status", entry.status},
                                     {"source", entry.source}});
    doc["trace"] = trace;
    return doc;
}

namespace {

struct Cell {
    long long survives = 0;
    long long undetermined = 0;
};

std::map<int, std::map<long long, Cell>> cells_of(const SpectralPage& page, int& deg_min,
                                                  int& deg_max) {
    std::map<int, std::map<long long, Cell>> cells;
    deg_min = 0;
    deg_max = 0;
    bool first = true;
    for (const auto& col : page.columns) {
        for (const auto& gen : col.gens) {
            auto& cell = cells[gen.degree][col.p];
            if (gen.flag == Survival::Undetermined)
                ++cell.undetermined;
            else
                ++cell.survives;
            if (first || gen.degree < deg_min)
                deg_min = gen.degree;
            if (first || gen.degree > deg_max)
                deg_max = gen.degree;
            first = false;
        }
    }
    return cells;
}

}  // namespace

std::string render_page_ascii(const SpectralPage& page) {
    int deg_min = 0, deg_max = 0;
    auto cells = cells_of(page, deg_min, deg_max);
    const long long p_max = page.columns.empty() ? 0 : page.columns.back().p;

    std::ostringstream out;
    out << "E1 page of " << page.model_name << " below action " << page.max_action_pi.str()
        << "pi (columns by iterate, rows by total degree)\n";
    for (int d = deg_max; d >= deg_min; --d) {
        std::string row = std::to_string(d);
        row = std::string(5 - std::min<size_t>(5, row.size()), ' ') + row + " |";
        auto row_it = cells.find(d);
        for (long long p = 0; p <= p_max; ++p) {
            std::string mark = ".";
            if (row_it != cells.end()) {
                auto it = row_it->second.find(p);
                if (it != row_it->second.end()) {
                    long long count = it->second.survives + it->second.undetermined;
                    mark = it->second.undetermined > 0 ? "?" : "*";
                    if (count > 1)
                        mark = std::to_string(count) + mark;
                }
            }
            row += std::string(5 - std::min<size_t>(4, mark.size()), ' ') + mark;
        }
        out << row << "\n";
    }
    out << "      +";
    for (long long p = 0; p <= p_max; ++p)
        out << "-----";
    out << "\n       ";
    for (long long p = 0; p <= p_max; ++p) {
        std::string label = "p=" + std::to_string(p);
        out << std::string(5 - std::min<size_t>(4, label.size()), ' ') << label;
    }
    out << "\n";
    return out.str();
}

std::string render_page_svg(const SpectralPage& page) {
    int deg_min = 0, deg_max = 0;
    auto cells = cells_of(page, deg_min, deg_max);
    const long long p_max = page.columns.empty() ? 0 : page.columns.back().p;

    const int cell = 36;
    const int left = 70, top = 30, bottom = 46;
    const int width = left + cell * static_cast<int>(p_max + 1) + 30;
    const int height = top + cell * (deg_max - deg_min + 1) + bottom;
    auto x_of = [&](long long p) { return left + cell / 2 + cell * static_cast<int>(p); };
    auto y_of = [&](int d) { return top + cell / 2 + cell * (deg_max - d); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    out << "  <line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << (height - bottom) << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << left << "\" y1=\"" << (height - bottom) << "\" x2=\""
        << (width - 10) << "\" y2=\"" << (height - bottom) << "\" stroke=\"black\"/>\n";
    for (int d = deg_min; d <= deg_max; ++d)
        out << "  <text x=\"" << (left - 8) << "\" y=\"" << (y_of(d) + 4)
            << "\" text-anchor=\"end\" font-size=\"12\">" << d << "</text>\n";
    for (long long p = 0; p <= p_max; ++p)
        out << "  <text x=\"" << x_of(p) << "\" y=\"" << (height - bottom + 18)
            << "\" text-anchor=\"middle\" font-size=\"12\">p=" << p << "</text>\n";
    for (const auto& [degree, row] : cells) {
        for (const auto& [p, c] : row) {
            long long count = c.survives + c.undetermined;
            bool open = c.undetermined > 0;
            out << "  <circle cx=\"" << x_of(p) << "\" cy=\"" << y_of(degree) << "\" r=\"6\" "
                << (open ? "fill=\"white\" stroke=\"black\" stroke-width=\"2\""
                         : "fill=\"black\"")
                << "/>\n";
            if (count > 1)
                out << "  <text x=\"" << (x_of(p) + 9) << "\" y=\"" << (y_of(degree) - 6)
                    << "\" font-size=\"11\">" << count << "</text>\n";
        }
    }
    out << "  <text x=\"" << left << "\" y=\"16\" font-size=\"12\">" << page.model_name
        << " (action &lt; " << page.max_action_pi.str() << "pi)</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace wfh
