#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfh/graded.hpp"
#include "wfh/rational.hpp"
#include "wfh/rsindex.hpp"

namespace wfh {

/* Raised when a model declines a query it has no data for, e.g. index
 * queries on cotangent bundles over non-sphere bases. The CLI maps this to
 * exit code 3. */
class ModelRefusal : public std::runtime_error {
public:
    explicit ModelRefusal(const std::string& what) : std::runtime_error(what) {}
};

enum class CrossBase { Sphere, RealProjective, ComplexProjective, QuaternionProjective, Cayley };

/* Which minimal chord period to report for models where the literature
 * value and the value obtained by solving the return conditions of the
 * flow disagree (they differ by a factor of 2 for the Milnor fibers with
 * k even). Indices never depend on this; only actions and growth slopes
 * rescale. */
enum class PeriodConvention { Paper, FlowDerived };

struct ModelFamily {
    enum class Kind { AkMilnor, ProjectiveComplement, HypersurfaceComplement, CrossCotangent };

    Kind kind = Kind::AkMilnor;
    int n = 0;      // half-dimension of the ambient Liouville domain
    int param = 0;  // k (AkMilnor, ProjectiveComplement) or d (HypersurfaceComplement)
    CrossBase base = CrossBase::Sphere;

    static ModelFamily ak_milnor(int n, int k);
    static ModelFamily projective_complement(int n, int k);
    static ModelFamily hypersurface_complement(int n, int d);
    static ModelFamily cross_cotangent(CrossBase base, int n);

    /* "ak:n=3,k=2", "cpn-complement:n=3,k=7", "hypersurface-complement:n=3,d=5",
     * "cross:base=sphere,n=4" */
    static ModelFamily parse(const std::string& preset);
    std::string preset() const;
};

/* The linearized flow backing a chord system, for the Morse-Bott validity
 * checks: per-block angular speeds and the common period of the flow. */
struct FlowModel {
    std::vector<Rational> speeds;
    Rational full_period_pi;
};

/* Everything the spectral sequence needs to know about one model family's
 * Reeb chords: the chord spectrum T0 * N, the topology of the Morse-Bott
 * components and of the chosen Lagrangian, which iterates are contractible,
 * and the Maslov index of the contractible iterates. */
struct ChordSystem {
    std::string model_name;
    std::optional<ModelFamily> family;
    int n = 0;

    Rational minimal_chord_period_pi;  // T0 under the chosen convention
    Rational flow_period_pi;           // T0 from the return conditions
    Rational paper_period_pi;          // T0 as stated in the literature

    SpaceModel component_topology;   // each Morse-Bott component
    SpaceModel lagrangian_topology;  // the chosen component of the real Lagrangian
    int real_component_count = 1;

    long long contractible_divisor = 1;  // chord iterate l is contractible iff divisor | l
    long long index_slope = 0;           // mu of the N-th contractible iterate is N * slope
    bool index_data_available = false;

    std::optional<long long> fundamental_group_order;  // nullopt marks infinite
    bool h1c_vanishes = false;

    std::optional<FlowModel> flow;

    /* mu(N * L) for the N-th contractible iterate. */
    long long index_of_iterate(long long N) const;
};

ChordSystem build(const ModelFamily& model,
                  PeriodConvention convention = PeriodConvention::FlowDerived);

/* Number of connected components of the real Lagrangian and the topology of
 * the chosen (always ball) component. Refuses CrossCotangent: the fiber is
 * the Lagrangian there, not a fixed-point set. */
std::pair<int, SpaceModel> real_lagrangian_components(const ModelFamily& model);

/* Least T > 0 (as a multiple of pi) such that every block of the weighted
 * flow carries the axis condition of the real Legendrian back to itself,
 * and, when the Legendrian is disconnected, the chosen component is
 * preserved. Under the Paper convention, weights of the form (k+1, 2,..,2)
 * report the literature value instead; other weights fall back to the
 * solved value. */
Rational chord_spectrum_from_flow(const std::vector<long long>& weights,
                                  PeriodConvention convention = PeriodConvention::FlowDerived);

struct MorseBottCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct MorseBottReport {
    std::vector<MorseBottCheck> checks;
    bool all_pass() const;
};

/* Checks that the chord spectrum half-embeds into the orbit spectrum and
 * that the flow really closes up at its common period, per block. */
MorseBottReport morse_bott_validity(const ChordSystem& system);

std::string cross_base_name(CrossBase base);

}  // namespace wfh
