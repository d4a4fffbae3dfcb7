#include "wfh/verdict.hpp"

namespace wfh {

namespace {

const char* kTheoremAStatement =
    "s_n(phi) >= 1 for every compactly supported symplectomorphism in the class of a "
    "nonzero power of the fibered twist";
const char* kTheoremBStatement = "the fibered twist class has infinite order";

std::string pass_fail(bool b) {
    return b ? "pass" : "fail";
}

/* Closed-form parameter gates of the two complement corollaries. */
std::optional<bool> corollary_gate_for(const ModelFamily& family) {
    const long long p = family.param;
    const long long n = family.n;
    switch (family.kind) {
        case ModelFamily::Kind::ProjectiveComplement:
            return p % 2 == 1 ? p > 2 * n - 1 : p > (3 * n) / 2;
        case ModelFamily::Kind::HypersurfaceComplement:
            return p % 2 == 1 ? p > 2 * n - 2 : p > (3 * n) / 2 - 1;
        default:
            return std::nullopt;
    }
}

}  // namespace

std::string finite_order_consistency(const WfhReport& report, int n) {
    long long lower_total = 0;
    for (const auto& [deg, dims] : report.by_degree)
        lower_total += dims.lower;
    long long bound = homology(SpaceModel::ball_pair(n)).total();  // = 1
    if (lower_total > bound)
        return "the twist class cannot have finite order: determined dim WFH >= " +
               std::to_string(lower_total) + " exceeds dim H_*(B^n, S^{n-1}) = " +
               std::to_string(bound);
    return "no obstruction from this test: determined dim WFH = " +
           std::to_string(lower_total) + " does not exceed " + std::to_string(bound);
}

Verdict evaluate(const ChordSystem& system, const WfhReport& report) {
    Verdict verdict;

    const bool h1c = system.h1c_vanishes;
    verdict.trace.push_back({"H^1_c(W;R) = 0", pass_fail(h1c), "model table"});

    bool ball = false;
    if (system.family) {
        try {
            ball = real_lagrangian_components(*system.family).second.kind ==
                   SpaceModel::Kind::Ball;
        } catch (const ModelRefusal&) {
            // Cotangent models: the fiber itself is the Lagrangian ball.
            ball = system.lagrangian_topology.kind == SpaceModel::Kind::BallPair;
        }
    } else {
        ball = system.lagrangian_topology.kind == SpaceModel::Kind::BallPair;
    }
    verdict.trace.push_back(
        {"admissible Lagrangian ball component", pass_fail(ball), "real Lagrangian table"});

    const bool determined = report.fully_determined;
    verdict.trace.push_back({"first page degenerates (degree gaps)", pass_fail(determined),
                             "degeneration check"});

    const bool has_columns = report.column_count >= 1;
    bool positive_slope = false;
    std::string slope_note = "no admitted columns below the action bound";
    if (determined && has_columns) {
        GrowthEstimate growth = growth_slope(report);
        positive_slope = growth.exact_per_pi > Rational(0);
        slope_note = "slope " + growth.exact_per_pi.str() + " per pi";
    }
    verdict.trace.push_back({"linear growth of filtered dimensions",
                             determined && has_columns ? pass_fail(positive_slope) : "fail",
                             slope_note});

    // Periodic fully-surviving columns force infinite total dimension; the
    // degree support is additionally unbounded whenever the index slope is
    // nonzero.
    const bool infinite_dim = determined && has_columns;
    const bool unbounded_support = infinite_dim && report.index_slope != 0;
    verdict.trace.push_back({"infinite dimensionality via periodic columns",
                             pass_fail(infinite_dim),
                             unbounded_support ? "degree support unbounded"
                                               : "generators recur in fixed degrees"});

    long long determined_degrees = 0;
    for (const auto& [deg, dims] : report.by_degree)
        if (dims.determined())
            ++determined_degrees;
    verdict.inconclusive = !report.by_degree.empty() && determined_degrees == 0;

    verdict.theorem_a.applies = h1c && ball && determined && positive_slope;
    verdict.theorem_a.conclusion =
        verdict.theorem_a.applies
            ? kTheoremAStatement
            : (verdict.inconclusive ? "inconclusive: every degree is undetermined"
                                    : "hypotheses not certified; see trace");

    verdict.theorem_b.applies = h1c && ball && infinite_dim;
    verdict.theorem_b.conclusion =
        verdict.theorem_b.applies
            ? kTheoremBStatement
            : (verdict.inconclusive ? "inconclusive: every degree is undetermined"
                                    : "hypotheses not certified; see trace");

    verdict.finite_order_note = finite_order_consistency(report, system.n);

    if (system.family) {
        verdict.corollary_gate = corollary_gate_for(*system.family);
        if (verdict.corollary_gate) {
            verdict.gate_agrees = *verdict.corollary_gate == verdict.theorem_a.applies;
            verdict.trace.push_back({"corollary parameter gate",
                                     pass_fail(*verdict.corollary_gate), "closed form"});
            verdict.trace.push_back(
                {"gate route agrees with computed route", pass_fail(*verdict.gate_agrees),
                 "comparison"});
        }
        // The index gate of the underlying proposition, for the trace.
        if (system.index_data_available) {
            long long mu = system.index_slope;
            bool index_gate = mu > system.n || mu < 2 - system.n;
            verdict.trace.push_back({"index gate: mu_P > n or mu_P < 2-n",
                                     pass_fail(index_gate), "closed form"});
        }
    }
    return verdict;
}

}  // namespace wfh
