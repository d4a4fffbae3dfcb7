#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wfh/rational.hpp"

namespace wfh {

/* Reference against which crossings of a rotation path are counted.
 * LagrangianHorizontal: path of lines e^{i w t} R in C against the fixed
 * horizontal line; crossings where w t lies in pi Z, crossing form rank 1.
 * GraphDiagonal: graph of the rotation against the diagonal; crossings
 * where w t lies in 2 pi Z, crossing form rank 2. */
enum class Boundary { LagrangianHorizontal, GraphDiagonal };

/* One planar rotation factor of a linearized flow. speed is the angular
 * speed in radians per unit time, exact rational; zero means a constant
 * block. */
struct RotationBlock {
    Rational speed;
};

/* A direct sum of rotation blocks run for duration_pi * pi units of time,
 * together with the boundary condition the index is taken against. */
struct RotationPath {
    std::vector<RotationBlock> blocks;
    Rational duration_pi;  // must be > 0
    Boundary boundary = Boundary::LagrangianHorizontal;

    void validate() const;
};

/* Robbin-Salamon index by exact crossing counting. Interior crossings of a
 * block with speed w contribute sign(w) * rank, endpoint crossings half
 * that; rank is 1 for the Lagrangian boundary condition and 2 for the
 * graph. Zero-speed blocks contribute nothing. */
HalfInt rs_index(const RotationPath& path);

/* Index of the same path restricted to the time window
 * [t0_pi * pi, t1_pi * pi], endpoint crossings at the cut counted half.
 * rs_index(path) equals rs_index_interval(path, 0, path.duration_pi). */
HalfInt rs_index_interval(const RotationPath& path, const Rational& t0_pi, const Rational& t1_pi);

/* Sampled crossing-form oracle: locates crossings of each block's angle
 * trajectory by sign scanning and bisection in floating point, reads the
 * crossing form's sign off finite differences of the angle function, and
 * sums the same rank-weighted contributions as rs_index. Kept independent
 * of the divisibility arithmetic above so the two routes check each other.
 *
 * tolerance <= 0 selects the default of 1e-10 * duration. seed jitters the
 * interior sample points deterministically.
 *
 * Throws std::runtime_error("unresolved crossing cluster ...") when two
 * detected crossings of one block are closer than 2 * duration / samples. */
HalfInt rs_index_numeric(const RotationPath& path, long long samples, double tolerance = -1.0,
                         std::uint64_t seed = 0);

/* Path of the linearized flow of a weighted-homogeneous model with weights
 * (a_0..a_n): blocks at speeds 1/a_j plus the unit-speed normal correction
 * block at speed -1. Duration and boundary are supplied by the callers
 * below. */
RotationPath weighted_flow_path(const std::vector<long long>& weights, Rational duration_pi,
                                Boundary boundary);

/* Index of the cover-fold periodic orbit of the weighted flow over its full
 * common period 2 pi lcm(a) per cover; equals
 * 2 * cover * lcm(a) * (sum 1/a_j - 1). */
HalfInt weighted_homogeneous_orbit_index(const std::vector<long long>& weights, long long cover);

/* Index of the half chord of that orbit: Lagrangian boundary condition over
 * half the duration; equals cover * lcm(a) * (sum 1/a_j - 1). */
HalfInt half_chord_index(const std::vector<long long>& weights, long long cover);

long long weights_lcm(const std::vector<long long>& weights);

/* "1/3,1/2,1/2,1/2,-1" */
std::vector<RotationBlock> parse_blocks(const std::string& csv);

}  // namespace wfh
