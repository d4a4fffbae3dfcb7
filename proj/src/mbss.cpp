#include "wfh/mbss.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wfh {

SpectralPage assemble_e1(const ChordSystem& system, const Rational& max_action_pi) {
    if (!system.index_data_available)
        throw ModelRefusal("cannot assemble the first page: model '" + system.model_name +
                           "' carries no chord index data");
    if (!(max_action_pi > Rational(0)))
        throw std::invalid_argument("max action must be positive");
    Rational admitted = max_action_pi /
                        (system.minimal_chord_period_pi * Rational(system.contractible_divisor));
    if (admitted.floor() > 1000000)
        throw std::invalid_argument("action bound admits more than 10^6 columns");

    SpectralPage page;
    page.model_name = system.model_name;
    page.n = system.n;
    page.index_slope = system.index_slope;
    page.per_column_dim = homology(system.component_topology).total();
    page.column_gap_pi =
        system.minimal_chord_period_pi * Rational(system.contractible_divisor);
    page.max_action_pi = max_action_pi;

    PageColumn col0;
    col0.p = 0;
    col0.action_pi = Rational(0);
    const GradedDims lagrangian_h = homology(system.lagrangian_topology);
    for (const auto& [deg, dim] : lagrangian_h.entries())
        for (long long i = 0; i < dim; ++i)
            col0.gens.push_back({deg - system.n, Survival::Unknown});
    page.columns.push_back(std::move(col0));

    const GradedDims component_h = homology(system.component_topology);
    for (long long N = 1;; ++N) {
        Rational action = page.column_gap_pi * Rational(N);
        if (action > max_action_pi)
            break;
        PageColumn col;
        col.p = N;
        col.contractible_iterate = N;
        col.raw_iterate = N * system.contractible_divisor;
        col.action_pi = action;
        long long mu = system.index_of_iterate(N);
        for (const auto& [deg, dim] : component_h.entries())
            for (long long i = 0; i < dim; ++i)
                col.gens.push_back(
                    {static_cast<int>(deg + mu - system.n + 1), Survival::Unknown});
        std::sort(col.gens.begin(), col.gens.end(),
                  [](const Generator& a, const Generator& b) { return a.degree < b.degree; });
        page.columns.push_back(std::move(col));
    }
    return page;
}

SpectralPage degeneration_check(SpectralPage page) {
    std::map<int, std::set<long long>> columns_by_degree;
    for (const auto& col : page.columns)
        for (const auto& gen : col.gens)
            columns_by_degree[gen.degree].insert(col.p);

    auto occupied_below = [&](int degree, long long p) {
        auto it = columns_by_degree.find(degree);
        return it != columns_by_degree.end() && *it->second.begin() < p;
    };
    auto occupied_above = [&](int degree, long long p) {
        auto it = columns_by_degree.find(degree);
        return it != columns_by_degree.end() && *it->second.rbegin() > p;
    };

    page.fully_degenerate = true;
    for (auto& col : page.columns) {
        for (auto& gen : col.gens) {
            bool blocked = occupied_below(gen.degree - 1, col.p) ||
                           occupied_above(gen.degree + 1, col.p);
            gen.flag = blocked ? Survival::Undetermined : Survival::Survives;
            if (blocked)
                page.fully_degenerate = false;
        }
    }
    page.checked = true;
    return page;
}

WfhReport extract_wfh(const SpectralPage& page) {
    if (!page.checked)
        throw std::logic_error("run degeneration_check before extracting homology");

    WfhReport report;
    report.model_name = page.model_name;
    report.n = page.n;
    report.fully_determined = page.fully_degenerate;
    report.column_count = static_cast<long long>(page.columns.size()) - 1;
    report.index_slope = page.index_slope;
    report.per_column_dim = page.per_column_dim;
    report.column_gap_pi = page.column_gap_pi;
    report.max_action_pi = page.max_action_pi;

    for (const auto& col : page.columns) {
        for (const auto& gen : col.gens) {
            auto& dims = report.by_degree[gen.degree];
            ++dims.upper;
            if (gen.flag == Survival::Survives) {
                ++dims.lower;
                report.wfh.add(gen.degree, 1);
            }
        }
    }

    std::set<Rational> cutoffs;
    for (const auto& col : page.columns)
        if (col.p > 0)
            cutoffs.insert(col.action_pi);
    cutoffs.insert(page.max_action_pi);
    for (const auto& c : cutoffs) {
        FilteredPoint point;
        point.cutoff_pi = c;
        for (const auto& col : page.columns) {
            if (!(col.action_pi < c))
                continue;
            for (const auto& gen : col.gens) {
                ++point.upper;
                if (gen.flag == Survival::Survives)
                    ++point.lower;
            }
        }
        report.filtered.push_back(point);
    }
    return report;
}

GrowthEstimate growth_slope(const WfhReport& report) {
    GrowthEstimate est;
    est.exact_per_pi = Rational(report.per_column_dim) / report.column_gap_pi;

    if (report.column_count == 0) {
        est.empirical_per_pi = Rational(0);
        est.window_ok = false;
        est.warning = "window too small: no admitted columns below the action bound";
        return est;
    }

    long long determined_points = 0;
    for (const auto& point : report.filtered)
        if (point.lower == point.upper)
            ++determined_points;
    if (determined_points < 3 && !report.fully_determined)
        throw std::runtime_error(
            "insufficient data: need at least 3 filtered points with determined lower bounds");

    // The staircase dim(<c)/c is decreasing between column actions, so its
    // infimum over the upper half window is attained at the recorded cutoffs.
    Rational half = report.max_action_pi / Rational(2);
    bool have = false;
    Rational best;
    for (const auto& point : report.filtered) {
        if (point.cutoff_pi < half)
            continue;
        Rational value = Rational(point.lower) / point.cutoff_pi;
        if (!have || value < best) {
            best = value;
            have = true;
        }
    }
    est.empirical_per_pi = have ? best : Rational(0);
    est.window_ok = determined_points >= 3;
    if (!est.window_ok)
        est.warning = "window too small: fewer than 3 determined filtered points";
    return est;
}

}  // namespace wfh
