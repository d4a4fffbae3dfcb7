#pragma once

#include <map>
#include <string>
#include <vector>

#include "wfh/graded.hpp"
#include "wfh/models.hpp"
#include "wfh/rational.hpp"

namespace wfh {

enum class Survival { Unknown, Survives, Undetermined };

struct Generator {
    int degree = 0;  // total degree p+q
    Survival flag = Survival::Unknown;
};

struct PageColumn {
    long long p = 0;                    // column index; 0 is the low-action column
    long long contractible_iterate = 0; // N, renumbered over contractible iterates
    long long raw_iterate = 0;          // N * contractible divisor
    Rational action_pi;
    std::vector<Generator> gens;  // sorted by degree
};

/* First page of the action-filtered Morse-Bott spectral sequence, indexed
 * externally by total degree. Column 0 holds H_{*+n}(L, dL) at total degree
 * *; column N >= 1 holds the homology of the N-th contractible component,
 * its degree-d class placed at total degree d + mu_N - n + 1. */
struct SpectralPage {
    std::string model_name;
    int n = 0;
    long long index_slope = 0;
    long long per_column_dim = 0;
    Rational column_gap_pi;  // action gap between consecutive columns
    Rational max_action_pi;
    bool checked = false;
    bool fully_degenerate = false;
    std::vector<PageColumn> columns;
};

SpectralPage assemble_e1(const ChordSystem& system, const Rational& max_action_pi);

/* Flags each generator. A generator at total degree m in column p survives
 * when no lower column holds a generator at degree m-1 and no higher column
 * holds one at degree m+1 (the differentials drop total degree by 1 and
 * strictly drop the column index, so both target and source slots are then
 * empty on every page). Anything else is left undetermined rather than
 * guessed. */
SpectralPage degeneration_check(SpectralPage page);

struct DegreeDims {
    long long lower = 0;  // surviving generators
    long long upper = 0;  // surviving + undetermined
    bool determined() const { return lower == upper; }
};

struct FilteredPoint {
    Rational cutoff_pi;
    long long lower = 0;
    long long upper = 0;
};

struct WfhReport {
    std::string model_name;
    int n = 0;
    std::map<int, DegreeDims> by_degree;
    GradedDims wfh;  // lower bounds; exact when fully_determined
    std::vector<FilteredPoint> filtered;
    bool fully_determined = false;
    long long column_count = 0;  // iterate columns inside the window
    long long index_slope = 0;
    long long per_column_dim = 0;
    Rational column_gap_pi;
    Rational max_action_pi;
};

WfhReport extract_wfh(const SpectralPage& page);

struct GrowthEstimate {
    Rational exact_per_pi;      // per-column dimension over the action gap
    Rational empirical_per_pi;  // min of dim/c over the upper half window
    bool window_ok = false;
    std::string warning;
};

/* The exact slope comes from the periodic column structure: every action
 * gap contributes one component's worth of homology. The empirical value
 * rechecks it against the filtered dimensions actually assembled. */
GrowthEstimate growth_slope(const WfhReport& report);

}  // namespace wfh
