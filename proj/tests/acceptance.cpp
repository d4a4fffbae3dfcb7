#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "model_helpers.hpp"
#include "wfh/mbss.hpp"
#include "wfh/models.hpp"
#include "wfh/rsindex.hpp"
#include "wfh/verdict.hpp"

using namespace wfh;
using namespace wfh::testing;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
    if (!condition)
        throw Failure(message);
}

template <typename T>
void require_eq(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
        std::ostringstream msg;
        msg << what << ": mismatch";
        throw Failure(msg.str());
    }
}

long long samples_for(const RotationPath& path) {
    double max_speed = 0.0;
    for (const auto& block : path.blocks)
        max_speed = std::max(max_speed, std::abs(block.speed.to_double()));
    double crossings = path.duration_pi.to_double() * max_speed;
    return std::max<long long>(10000, static_cast<long long>(8.0 * crossings) + 16);
}

std::vector<std::vector<long long>> random_weight_vectors(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> entry(1, 9), length(1, 6);
    std::vector<std::vector<long long>> out;
    for (int i = 0; i < count; ++i) {
        std::vector<long long> weights;
        long long len = length(rng);
        for (long long j = 0; j < len; ++j)
            weights.push_back(entry(rng));
        out.push_back(weights);
    }
    return out;
}

std::set<int> degree_set(const WfhReport& report) {
    std::set<int> out;
    for (const auto& [deg, dim] : report.wfh.entries())
        out.insert(deg);
    return out;
}

GradedDims expected_dims(long long mu_p, int n, long long columns) {
    GradedDims expected;
    expected.add(0, 1);
    for (long long l = 1; l <= columns; ++l) {
        expected.add(static_cast<int>(mu_p * l - n + 1), 1);
        expected.add(static_cast<int>(mu_p * l), 1);
    }
    return expected;
}

/* Closed-form homology degrees across the Milnor grid, under 5 seconds. */
void criterion_1() {
    auto start = std::chrono::steady_clock::now();
    for (int n = 3; n <= 8; ++n) {
        for (int k = 1; k <= 10; ++k) {
            ChordSystem sys = build(ModelFamily::ak_milnor(n, k));
            WfhReport report = analyze(sys, sys.minimal_chord_period_pi * Rational(3));
            require(report.fully_determined, "page must fully degenerate");
            const long long M = (n - 2) * (k + 1) + 2;
            require_eq(report.wfh, expected_dims(M, n, 3),
                       "degrees at n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(elapsed < 5.0, "grid took " + std::to_string(elapsed) + "s, budget is 5s");
}

/* Dot positions of the assembled first pages at (3,2) and (3,3). */
void criterion_2() {
    SpectralPage page32 =
        degeneration_check(assemble_e1(build(ModelFamily::ak_milnor(3, 2)), Rational(13)));
    require(page32.columns.size() == 3, "(3,2) needs three columns");
    require_eq(column_degrees(page32.columns[0]), std::vector<int>{0}, "(3,2) column 0");
    require_eq(column_degrees(page32.columns[1]), std::vector<int>{3, 5}, "(3,2) column 1");
    require_eq(column_degrees(page32.columns[2]), std::vector<int>{8, 10}, "(3,2) column 2");

    SpectralPage page33 =
        degeneration_check(assemble_e1(build(ModelFamily::ak_milnor(3, 3)), Rational(17)));
    require(page33.columns.size() == 3, "(3,3) needs three columns");
    require_eq(column_degrees(page33.columns[0]), std::vector<int>{0}, "(3,3) column 0");
    require_eq(column_degrees(page33.columns[1]), std::vector<int>{4, 6}, "(3,3) column 1");
    require_eq(column_degrees(page33.columns[2]), std::vector<int>{10, 12}, "(3,3) column 2");
}

/* Orbit indices: crossing count vs closed form vs sampled oracle. */
void criterion_3() {
    auto vectors = random_weight_vectors(50, 20240501);
    std::mt19937_64 rng(977);
    std::uniform_int_distribution<long long> cover_dist(1, 4);
    for (const auto& weights : vectors) {
        long long cover = cover_dist(rng);
        HalfInt computed = weighted_homogeneous_orbit_index(weights, cover);

        long long l = weights_lcm(weights);
        Rational sum(0);
        for (long long a : weights)
            sum += Rational(1, a);
        Rational closed = Rational(2 * cover * l) * (sum - Rational(1));
        require(closed.is_integer(), "orbit index must be an integer");
        require(computed == HalfInt::of(closed.num()), "closed form disagrees");

        RotationPath path = weighted_flow_path(weights, Rational(2 * cover * l),
                                               Boundary::GraphDiagonal);
        require(rs_index_numeric(path, samples_for(path), -1.0, 555) == computed,
                "sampled oracle disagrees");
    }
}

/* Doubling: graph index over the full period vs half-period chord index. */
void criterion_4() {
    auto vectors = random_weight_vectors(50, 20240501);
    std::mt19937_64 rng(977);
    std::uniform_int_distribution<long long> cover_dist(1, 4);
    for (const auto& weights : vectors) {
        long long cover = cover_dist(rng);
        HalfInt orbit = weighted_homogeneous_orbit_index(weights, cover);
        HalfInt half = half_chord_index(weights, cover);
        require(orbit.twice == 2 * half.twice, "orbit index must double the half chord");
    }
}

/* Loops: when every block closes up, both boundary conditions agree. */
void criterion_5() {
    std::mt19937_64 rng(31415);
    std::uniform_int_distribution<long long> num(-12, 12), den(1, 12);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> speeds;
        long long period_lcm = 1;
        int count = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < count; ++i) {
            Rational s(num(rng), den(rng));
            speeds.push_back(s);
            if (!s.is_zero())
                period_lcm = lcm_ll(period_lcm, s.den());
        }
        RotationPath lagr, graph;
        for (const auto& s : speeds) {
            lagr.blocks.push_back({s});
            graph.blocks.push_back({s});
        }
        lagr.duration_pi = Rational(2 * period_lcm * (1 + static_cast<long long>(rng() % 3)));
        graph.duration_pi = lagr.duration_pi;
        lagr.boundary = Boundary::LagrangianHorizontal;
        graph.boundary = Boundary::GraphDiagonal;
        require(rs_index(lagr) == rs_index(graph), "loop indices must agree");
    }
}

/* Case-table indices vs crossing counts across the Milnor grid. */
void criterion_6() {
    for (int n = 3; n <= 8; ++n) {
        for (int k = 1; k <= 10; ++k) {
            ChordSystem sys = build(ModelFamily::ak_milnor(n, k));
            std::vector<long long> weights(static_cast<size_t>(n) + 1, 2);
            weights[0] = k + 1;
            for (long long N = 1; N <= 20; ++N) {
                HalfInt expected = HalfInt::of(sys.index_of_iterate(N));
                HalfInt route = k % 2 == 0 ? half_chord_index(weights, N)
                                           : weighted_homogeneous_orbit_index(weights, N);
                require(route == expected, "cover route disagrees with the case table");
                RotationPath chord = weighted_flow_path(weights, sys.flow_period_pi * Rational(N),
                                                        Boundary::LagrangianHorizontal);
                require(rs_index(chord) == expected, "chord route disagrees with the case table");
            }
        }
    }
}

/* Degree-gap degeneration matches the closed-form gap inequality. */
void criterion_7() {
    for (int n = 3; n <= 8; ++n) {
        for (int k = 1; k <= 10; ++k) {
            ChordSystem sys = build(ModelFamily::ak_milnor(n, k));
            SpectralPage page = degeneration_check(
                assemble_e1(sys, sys.minimal_chord_period_pi * Rational(3)));
            bool gap = (n - 2) * (k + 1) + 1 < 2 * (n - 2) * (k + 1) - n + 3;
            require(gap, "the gap inequality must hold for n >= 3");
            require(page.fully_degenerate == gap, "survival must match the gap inequality");
        }
    }

    SpectralPage fabricated;
    fabricated.n = 3;
    fabricated.max_action_pi = Rational(2);
    PageColumn col0, col1;
    col0.p = 0;
    col0.action_pi = Rational(0);
    col0.gens.push_back({0, Survival::Unknown});
    col1.p = 1;
    col1.contractible_iterate = 1;
    col1.raw_iterate = 1;
    col1.action_pi = Rational(1);
    col1.gens.push_back({1, Survival::Unknown});
    fabricated.columns = {col0, col1};
    SpectralPage flagged = degeneration_check(fabricated);
    require(!flagged.fully_degenerate &&
                flagged.columns[0].gens[0].flag == Survival::Undetermined &&
                flagged.columns[1].gens[0].flag == Survival::Undetermined,
            "adjacent degrees must stay undetermined");
}

/* Complement families around the corollary thresholds. */
void criterion_8() {
    struct Side {
        std::vector<int> below, above;
    };
    auto split = [](int threshold, int parity) {
        Side side;
        for (int v = threshold + (threshold % 2 == parity ? 2 : 1);
             static_cast<int>(side.above.size()) < 5; v += 2)
            if (v % 2 == parity)
                side.above.push_back(v);
        for (int v = parity == 1 ? 1 : 2; v <= threshold; v += 2)
            side.below.push_back(v);
        while (side.below.size() > 5)
            side.below.erase(side.below.begin());
        return side;
    };

    for (int n : {3, 4, 5}) {
        struct FamilyCase {
            std::function<ChordSystem(int)> make;
            std::function<long long(int)> mu;
            int threshold_odd, threshold_even;
        };
        std::vector<FamilyCase> cases;
        cases.push_back({[&](int k) { return build(ModelFamily::projective_complement(n, k)); },
                         [&](int k) {
                             return k % 2 == 1 ? (n + 1 - k) : 2 * (n + 1 - k);
                         },
                         2 * n - 1, (3 * n) / 2});
        cases.push_back({[&](int d) { return build(ModelFamily::hypersurface_complement(n, d)); },
                         [&](int d) { return d % 2 == 1 ? (n - d) : 2 * (n - d); },
                         2 * n - 2, (3 * n) / 2 - 1});

        for (const auto& fam : cases) {
            for (int parity : {1, 0}) {
                Side side = split(parity == 1 ? fam.threshold_odd : fam.threshold_even, parity);
                for (int p : side.above) {
                    ChordSystem sys = fam.make(p);
                    require(sys.index_slope == fam.mu(p), "table mu_P disagrees");
                    Rational window = sys.minimal_chord_period_pi *
                                      Rational(4 * sys.contractible_divisor);
                    WfhReport report = analyze(sys, window);
                    require(report.fully_determined, "above the gate the page degenerates");
                    require_eq(report.wfh, expected_dims(fam.mu(p), n, 4),
                               "degree table at n=" + std::to_string(n) +
                                   ", parameter=" + std::to_string(p));
                    Verdict verdict = evaluate(sys, report);
                    require(verdict.theorem_a.applies && verdict.theorem_b.applies,
                            "verdicts must apply above the gate");
                    require(verdict.corollary_gate && *verdict.corollary_gate,
                            "gate must pass above the threshold");
                    require(verdict.gate_agrees && *verdict.gate_agrees,
                            "gate and computed route must agree above the threshold");
                }
                for (int p : side.below) {
                    ChordSystem sys = fam.make(p);
                    require(sys.index_slope == fam.mu(p), "table mu_P disagrees");
                    Rational window = sys.minimal_chord_period_pi *
                                      Rational(4 * sys.contractible_divisor);
                    SpectralPage page = degeneration_check(assemble_e1(sys, window));
                    for (size_t col = 1; col < page.columns.size(); ++col) {
                        long long l = page.columns[col].contractible_iterate;
                        std::vector<int> expected{static_cast<int>(fam.mu(p) * l - n + 1),
                                                  static_cast<int>(fam.mu(p) * l)};
                        std::sort(expected.begin(), expected.end());
                        require_eq(column_degrees(page.columns[col]), expected,
                                   "page degrees below the gate");
                    }
                    Verdict verdict = evaluate(sys, extract_wfh(page));
                    require(verdict.corollary_gate && !*verdict.corollary_gate,
                            "gate must fail below the threshold");
                }
            }
        }
    }
}

/* k = 1 fibers against the loop-space dimension series of the sphere. */
void criterion_9() {
    for (int n = 3; n <= 8; ++n) {
        ChordSystem sys = build(ModelFamily::ak_milnor(n, 1));
        WfhReport report = analyze(sys, sys.minimal_chord_period_pi * Rational(5));
        // Independent series: one generator in each degree m(n-1), m >= 0.
        std::set<int> series;
        GradedDims series_dims;
        for (int m = 0; m <= 10; ++m) {
            series.insert(m * (n - 1));
            series_dims.add(m * (n - 1), 1);
        }
        require_eq(degree_set(report), series, "degree support at n=" + std::to_string(n));
        require_eq(report.wfh, series_dims, "series dims at n=" + std::to_string(n));
    }
}

/* Positive growth with the exact periodic slope and a converging window
 * estimate. */
void criterion_10() {
    auto first_five_above = [](int threshold, int parity) {
        std::vector<int> out;
        for (int v = threshold + 1; static_cast<int>(out.size()) < 5; ++v)
            if (v % 2 == parity)
                out.push_back(v);
        return out;
    };

    std::vector<ChordSystem> systems;
    for (int n = 3; n <= 8; ++n)
        for (int k = 1; k <= 10; ++k)
            systems.push_back(build(ModelFamily::ak_milnor(n, k)));
    for (int n : {3, 4, 5}) {
        for (int parity : {1, 0}) {
            int proj_threshold = parity == 1 ? 2 * n - 1 : (3 * n) / 2;
            for (int k : first_five_above(proj_threshold, parity))
                systems.push_back(build(ModelFamily::projective_complement(n, k)));
            int hyp_threshold = parity == 1 ? 2 * n - 2 : (3 * n) / 2 - 1;
            for (int d : first_five_above(hyp_threshold, parity))
                systems.push_back(build(ModelFamily::hypersurface_complement(n, d)));
        }
    }

    for (const auto& sys : systems) {
        Rational expected_slope =
            Rational(2) / (sys.minimal_chord_period_pi * Rational(sys.contractible_divisor));
        std::vector<Rational> estimates;
        Rational exact;
        for (long long window : {20, 40, 80, 160}) {
            WfhReport report = analyze(sys, Rational(window));
            GrowthEstimate growth = growth_slope(report);
            exact = growth.exact_per_pi;
            require(exact == expected_slope, "exact slope must be 2 over the action gap");
            require(exact > Rational(0), "slope must be positive");
            estimates.push_back(growth.empirical_per_pi);
        }
        for (size_t i = 1; i < estimates.size(); ++i)
            require(estimates[i] >= estimates[i - 1], "window estimates must not decrease");
        for (const auto& est : estimates)
            require(est <= exact, "window estimates stay below the exact slope");
        require(estimates.back() > estimates[estimates.size() - 2],
                "the final doubling must strictly improve the estimate");
        require(estimates.back() > Rational(0), "the final estimate must be positive");
    }
}

/* Contractibility: admitted iterates are exactly the multiples of k. */
void criterion_11() {
    for (int n : {3, 4, 5}) {
        for (int k = 2; k <= 9; ++k) {
            ChordSystem sys = build(ModelFamily::projective_complement(n, k));
            SpectralPage page =
                assemble_e1(sys, sys.minimal_chord_period_pi * Rational(40));
            std::set<long long> admitted;
            for (size_t col = 1; col < page.columns.size(); ++col)
                admitted.insert(page.columns[col].raw_iterate);
            std::set<long long> expected;
            for (long long l = k; l <= 40; l += k)
                expected.insert(l);
            require_eq(admitted, expected,
                       "admitted iterates at n=" + std::to_string(n) +
                           ", k=" + std::to_string(k));
        }
    }
}

/* Index-zero edge: unbounded degree-0 growth and the finite-order
 * contrapositive. */
void criterion_12() {
    for (int n : {4, 6}) {
        ChordSystem sys = fermat_zero_index_system(n);
        require(sys.index_slope == 0, "the Fermat threshold has index zero");

        long long previous = 0;
        for (long long window : {30, 60}) {
            SpectralPage page = degeneration_check(assemble_e1(sys, Rational(window)));
            require(page.fully_degenerate, "every generator survives at index zero");
            WfhReport report = extract_wfh(page);
            long long at_zero = report.by_degree.at(0).lower;
            long long at_bottom = report.by_degree.at(1 - n).lower;
            require(at_zero == report.column_count + 1, "degree 0 collects every column");
            require(at_bottom == report.column_count, "degree 1-n collects every iterate");
            require(at_zero > previous, "the degree-0 count grows with the window");
            previous = at_zero;

            Verdict verdict = evaluate(sys, report);
            require(verdict.theorem_b.applies, "infinite order must be certified");
            require(verdict.finite_order_note.find("cannot have finite order") !=
                        std::string::npos,
                    "the finite-order contrapositive must fire");
        }
    }
}

struct Criterion {
    int id;
    std::string title;
    std::function<void()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "closed-form homology degrees across the Milnor grid (< 5 s)", criterion_1},
        {2, "first-page dot positions for (n,k) = (3,2) and (3,3)", criterion_2},
        {3, "orbit indices: crossing count = closed form = sampled oracle, 50 systems",
         criterion_3},
        {4, "full-period graph index doubles the half-period chord index, 50 systems",
         criterion_4},
        {5, "closed loops: Lagrangian and graph indices agree, 100 loops", criterion_5},
        {6, "case-table indices match crossing counts across the Milnor grid", criterion_6},
        {7, "degeneration matches the degree-gap inequality, plus the adjacent counterexample",
         criterion_7},
        {8, "complement families around the corollary thresholds", criterion_8},
        {9, "k = 1 fibers reproduce the sphere loop-space series", criterion_9},
        {10, "positive growth with exact slope and converging window estimates", criterion_10},
        {11, "admitted iterates are exactly the multiples of the degree", criterion_11},
        {12, "index-zero edge: unbounded degree-0 growth forces infinite order", criterion_12},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        try {
            criterion.run();
            std::cout << "PASS [" << (criterion.id < 10 ? " " : "") << criterion.id << "] "
                      << criterion.title << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL [" << (criterion.id < 10 ? " " : "") << criterion.id << "] "
                      << criterion.title << ": " << e.what() << "\n";
        }
    }
    if (failures == 0)
        std::cout << "all acceptance criteria pass\n";
    else
        std::cout << failures << " acceptance criteria failing\n";
    return failures == 0 ? 0 : 1;
}
