#include "wfh/rsindex.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace wfh {

namespace {

/* Crossings of a block against the reference happen where speed * t is a
 * multiple of step * pi (step = 1 for lines, 2 for graphs). In units of pi
 * that reads speed * s in step * Z for s in [s0, s1]. */
struct BlockCrossings {
    long long interior = 0;
    int endpoints = 0;  // 0, 1 or 2 of {s0, s1} are crossings
};

BlockCrossings count_crossings(const Rational& speed, const Rational& s0, const Rational& s1,
                               int step) {
    BlockCrossings out;
    if (speed.is_zero())
        return out;
    // m ranges over integers with m * step / speed in [s0, s1].
    Rational lo = s0 * speed / Rational(step);
    Rational hi = s1 * speed / Rational(step);
    if (hi < lo)
        std::swap(lo, hi);
    long long m_lo = (-lo).floor() * -1;  // ceil(lo)
    long long m_hi = hi.floor();
    if (m_hi < m_lo)
        return out;
    long long total = m_hi - m_lo + 1;
    if (lo.is_integer())
        ++out.endpoints;
    if (hi.is_integer())
        ++out.endpoints;
    out.interior = total - out.endpoints;
    return out;
}

int rank_of(Boundary boundary) {
    return boundary == Boundary::GraphDiagonal ? 2 : 1;
}

int step_of(Boundary boundary) {
    return boundary == Boundary::GraphDiagonal ? 2 : 1;
}

}  // namespace

void RotationPath::validate() const {
    if (blocks.empty())
        throw std::invalid_argument("rotation path needs at least one block");
    if (!(duration_pi > Rational(0)))
        throw std::invalid_argument("rotation path duration must be positive");
}

HalfInt rs_index_interval(const RotationPath& path, const Rational& t0_pi, const Rational& t1_pi) {
    path.validate();
    if (!(t0_pi < t1_pi))
        throw std::invalid_argument("empty time window");
    const int rank = rank_of(path.boundary);
    const int step = step_of(path.boundary);
    long long twice = 0;
    for (const auto& block : path.blocks) {
        if (block.speed.is_zero())
            continue;
        BlockCrossings c = count_crossings(block.speed, t0_pi, t1_pi, step);
        twice += block.speed.sign() * rank * (2 * c.interior + c.endpoints);
    }
    return HalfInt::halves(twice);
}

HalfInt rs_index(const RotationPath& path) {
    return rs_index_interval(path, Rational(0), path.duration_pi);
}

namespace {

constexpr double kPi = 3.14159265358979323846;

struct DetectedCrossing {
    double t;
    bool at_start;
    bool at_end;
};

/* Angle of the moving object relative to the crossing lattice: g vanishes
 * exactly at crossings and changes sign transversally for nonzero speed. */
double crossing_gap(double angle, int step) {
    return std::sin(angle / step);
}

}  // namespace

HalfInt rs_index_numeric(const RotationPath& path, long long samples, double tolerance,
                         std::uint64_t seed) {
    path.validate();
    if (samples < 2)
        throw std::invalid_argument("need at least 2 samples");
    const double duration = path.duration_pi.to_double() * kPi;
    if (tolerance <= 0.0)
        tolerance = 1e-10 * duration;
    const int rank = rank_of(path.boundary);
    const int step = step_of(path.boundary);
    const double dt = duration / static_cast<double>(samples);
    const double cluster_limit = 2.0 * dt;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.25, 0.25);

    long long twice = 0;
    for (const auto& block : path.blocks) {
        const double w = block.speed.to_double();
        auto angle = [&](double t) { return w * t; };

        // Constant block: the path never leaves the reference transversally.
        double probe = std::max(std::abs(angle(duration)), std::abs(angle(duration / 3.0)));
        if (probe < tolerance)
            continue;

        // Scan for sign changes of the gap function on a jittered grid.
        std::vector<DetectedCrossing> found;
        double t_prev = 0.0;
        double g_prev = crossing_gap(angle(t_prev), step);
        if (std::abs(g_prev) < tolerance)
            found.push_back({0.0, true, false});
        for (long long i = 1; i <= samples; ++i) {
            double t = static_cast<double>(i) * dt;
            if (i < samples)
                t += jitter(rng) * dt;
            else
                t = duration;
            double g = crossing_gap(angle(t), step);
            if (std::abs(g) < tolerance) {
                found.push_back({t, t < tolerance, duration - t < tolerance});
            } else if (g_prev * g < 0.0 && std::abs(g_prev) >= tolerance) {
                // Bisect the bracket down to the tolerance.
                double a = t_prev, b = t, ga = g_prev;
                while (b - a > tolerance) {
                    double mid = 0.5 * (a + b);
                    double gm = crossing_gap(angle(mid), step);
                    if (gm == 0.0) {
                        a = b = mid;
                        break;
                    }
                    if (ga * gm < 0.0) {
                        b = mid;
                    } else {
                        a = mid;
                        ga = gm;
                    }
                }
                double t_star = 0.5 * (a + b);
                found.push_back({t_star, t_star < tolerance, duration - t_star < tolerance});
            }
            t_prev = t;
            g_prev = g;
        }

        // Merge duplicate detections of one crossing, then enforce separation.
        // Distinct crossings closer than the cluster limit error out below, so
        // merging within half a sample step only ever glues re-detections.
        std::sort(found.begin(), found.end(),
                  [](const DetectedCrossing& a, const DetectedCrossing& b) { return a.t < b.t; });
        std::vector<DetectedCrossing> merged;
        for (const auto& c : found) {
            if (!merged.empty() && c.t - merged.back().t < 0.5 * dt) {
                merged.back().at_start = merged.back().at_start || c.at_start;
                merged.back().at_end = merged.back().at_end || c.at_end;
                continue;
            }
            merged.push_back(c);
        }
        for (size_t i = 1; i < merged.size(); ++i) {
            if (merged[i].t - merged[i - 1].t < cluster_limit)
                throw std::runtime_error("unresolved crossing cluster: crossings at t=" +
                                         std::to_string(merged[i - 1].t) + " and t=" +
                                         std::to_string(merged[i].t) + " need more samples");
        }

        // Crossing form sign from a finite difference of the angle function.
        const double h = std::max(tolerance, dt * 1e-3);
        for (const auto& c : merged) {
            double slope = (angle(c.t + h) - angle(c.t - h)) / (2.0 * h);
            int sgn = slope > 0.0 ? 1 : (slope < 0.0 ? -1 : 0);
            twice += sgn * rank * ((c.at_start || c.at_end) ? 1 : 2);
        }
    }
    return HalfInt::halves(twice);
}

long long weights_lcm(const std::vector<long long>& weights) {
    if (weights.empty())
        throw std::invalid_argument("weights must be non-empty");
    long long l = 1;
    for (long long a : weights) {
        if (a <= 0)
            throw std::invalid_argument("weights must be positive");
        l = lcm_ll(l, a);
    }
    return l;
}

RotationPath weighted_flow_path(const std::vector<long long>& weights, Rational duration_pi,
                                Boundary boundary) {
    RotationPath path;
    for (long long a : weights) {
        if (a <= 0)
            throw std::invalid_argument("weights must be positive");
        path.blocks.push_back({Rational(1, a)});
    }
    path.blocks.push_back({Rational(-1)});
    path.duration_pi = duration_pi;
    path.boundary = boundary;
    return path;
}

HalfInt weighted_homogeneous_orbit_index(const std::vector<long long>& weights, long long cover) {
    if (cover < 0)
        throw std::invalid_argument("cover must be >= 0");
    if (cover == 0)
        return HalfInt::of(0);
    Rational duration(2 * cover * weights_lcm(weights));
    return rs_index(weighted_flow_path(weights, duration, Boundary::GraphDiagonal));
}

HalfInt half_chord_index(const std::vector<long long>& weights, long long cover) {
    if (cover < 0)
        throw std::invalid_argument("cover must be >= 0");
    if (cover == 0)
        return HalfInt::of(0);
    Rational duration(cover * weights_lcm(weights));
    return rs_index(weighted_flow_path(weights, duration, Boundary::LagrangianHorizontal));
}

std::vector<RotationBlock> parse_blocks(const std::string& csv) {
    std::vector<RotationBlock> blocks;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string tok =
            comma == std::string::npos ? csv.substr(pos) : csv.substr(pos, comma - pos);
        blocks.push_back({Rational::parse(tok)});
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return blocks;
}

}  // namespace wfh
