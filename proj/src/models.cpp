#include "wfh/models.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace wfh {

namespace {

std::map<std::string, std::string> parse_kv(const std::string& s) {
    std::map<std::string, std::string> kv;
    size_t pos = 0;
    while (true) {
        size_t comma = s.find(',', pos);
        std::string item =
            comma == std::string::npos ? s.substr(pos) : s.substr(pos, comma - pos);
        size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("expected key=value, got '" + item + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return kv;
}

void check_keys(const std::map<std::string, std::string>& kv,
                std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : kv) {
        bool known = false;
        for (const char* a : allowed)
            known = known || key == a;
        if (!known)
            throw std::invalid_argument("unknown model parameter '" + key + "'");
    }
}

int require_int(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw std::invalid_argument("missing '" + key + "' in model preset");
    return static_cast<int>(Rational::parse(it->second).num());
}

CrossBase parse_base(const std::string& s) {
    if (s == "sphere")
        return CrossBase::Sphere;
    if (s == "rpn")
        return CrossBase::RealProjective;
    if (s == "cpn")
        return CrossBase::ComplexProjective;
    if (s == "hpn")
        return CrossBase::QuaternionProjective;
    if (s == "cap2")
        return CrossBase::Cayley;
    throw std::invalid_argument("unknown cross base '" + s +
                                "' (expected sphere|rpn|cpn|hpn|cap2)");
}

bool is_ak_form(const std::vector<long long>& weights) {
    if (weights.size() < 2)
        return false;
    return std::all_of(weights.begin() + 1, weights.end(), [](long long a) { return a == 2; });
}

}  // namespace

std::string cross_base_name(CrossBase base) {
    switch (base) {
        case CrossBase::Sphere:
            return "sphere";
        case CrossBase::RealProjective:
            return "rpn";
        case CrossBase::ComplexProjective:
            return "cpn";
        case CrossBase::QuaternionProjective:
            return "hpn";
        case CrossBase::Cayley:
            return "cap2";
    }
    return "?";
}

ModelFamily ModelFamily::ak_milnor(int n, int k) {
    if (n < 3)
        throw std::invalid_argument("Milnor fiber model requires n >= 3");
    if (k < 1)
        throw std::invalid_argument("Milnor fiber model requires k >= 1");
    return ModelFamily{Kind::AkMilnor, n, k, CrossBase::Sphere};
}

ModelFamily ModelFamily::projective_complement(int n, int k) {
    if (n < 3)
        throw std::invalid_argument("projective complement model requires n >= 3");
    if (k < 1)
        throw std::invalid_argument("projective complement model requires k >= 1");
    return ModelFamily{Kind::ProjectiveComplement, n, k, CrossBase::Sphere};
}

ModelFamily ModelFamily::hypersurface_complement(int n, int d) {
    if (n < 3)
        throw std::invalid_argument("hypersurface complement model requires n >= 3");
    if (d < 1)
        throw std::invalid_argument("hypersurface complement model requires d >= 1");
    return ModelFamily{Kind::HypersurfaceComplement, n, d, CrossBase::Sphere};
}

ModelFamily ModelFamily::cross_cotangent(CrossBase base, int n) {
    if (n < 1)
        throw std::invalid_argument("cross cotangent model requires n >= 1");
    switch (base) {
        case CrossBase::Sphere:
        case CrossBase::RealProjective:
            break;
        case CrossBase::ComplexProjective:
            if (n % 2 != 0 || n < 2)
                throw std::invalid_argument("cpn base needs even real dimension n >= 2");
            break;
        case CrossBase::QuaternionProjective:
            if (n % 4 != 0 || n < 4)
                throw std::invalid_argument("hpn base needs real dimension divisible by 4");
            break;
        case CrossBase::Cayley:
            if (n != 16)
                throw std::invalid_argument("cap2 base has real dimension 16");
            break;
    }
    return ModelFamily{Kind::CrossCotangent, n, 0, base};
}

ModelFamily ModelFamily::parse(const std::string& preset) {
    size_t colon = preset.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("model preset needs the form '<family>:<params>'");
    std::string family = preset.substr(0, colon);
    auto kv = parse_kv(preset.substr(colon + 1));
    if (family == "ak") {
        check_keys(kv, {"n", "k"});
        return ak_milnor(require_int(kv, "n"), require_int(kv, "k"));
    }
    if (family == "cpn-complement") {
        check_keys(kv, {"n", "k"});
        return projective_complement(require_int(kv, "n"), require_int(kv, "k"));
    }
    if (family == "hypersurface-complement") {
        check_keys(kv, {"n", "d"});
        return hypersurface_complement(require_int(kv, "n"), require_int(kv, "d"));
    }
    if (family == "cross") {
        check_keys(kv, {"base", "n"});
        auto it = kv.find("base");
        if (it == kv.end())
            throw std::invalid_argument("cross preset needs base=");
        return cross_cotangent(parse_base(it->second), require_int(kv, "n"));
    }
    throw std::invalid_argument("unknown model family '" + family + "'");
}

std::string ModelFamily::preset() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::AkMilnor:
            out << "ak:n=" << n << ",k=" << param;
            break;
        case Kind::ProjectiveComplement:
            out << "cpn-complement:n=" << n << ",k=" << param;
            break;
        case Kind::HypersurfaceComplement:
            out << "hypersurface-complement:n=" << n << ",d=" << param;
            break;
        case Kind::CrossCotangent:
            out << "cross:base=" << cross_base_name(base) << ",n=" << n;
            break;
    }
    return out.str();
}

long long ChordSystem::index_of_iterate(long long N) const {
    if (!index_data_available)
        throw ModelRefusal("model '" + model_name + "' carries no chord index data");
    if (N < 0)
        throw std::invalid_argument("iterate must be >= 0");
    return N * index_slope;
}

Rational chord_spectrum_from_flow(const std::vector<long long>& weights,
                                  PeriodConvention convention) {
    if (weights.empty())
        throw std::invalid_argument("weights must be non-empty");
    for (long long a : weights)
        if (a <= 0)
            throw std::invalid_argument("weights must be positive");

    if (convention == PeriodConvention::Paper && is_ak_form(weights)) {
        long long k = weights[0] - 1;
        return Rational(k % 2 == 0 ? (k + 1) : 2 * (k + 1));
    }

    // Block j returns the axis condition to itself when t/a_j is a multiple
    // of pi. The first coordinate flips sign at odd multiples; when the real
    // Legendrian is disconnected that flip swaps components, so the first
    // block must complete full turns. It is disconnected when a_0 is even
    // (both signs of x_0 solve x_0^{a_0} = |y|^2), and always for a single
    // weight (the Legendrian is a point pair).
    long long period = weights_lcm(weights);
    bool disconnected = weights.size() == 1 || weights[0] % 2 == 0;
    if (disconnected)
        period = lcm_ll(period, 2 * weights[0]);
    return Rational(period);
}

std::pair<int, SpaceModel> real_lagrangian_components(const ModelFamily& model) {
    switch (model.kind) {
        case ModelFamily::Kind::AkMilnor:
            return {model.param % 2 == 1 ? 2 : 1, SpaceModel::ball(model.n)};
        case ModelFamily::Kind::ProjectiveComplement:
            return {model.param % 2 == 0 ? 2 : 1, SpaceModel::ball(model.n)};
        case ModelFamily::Kind::HypersurfaceComplement:
            return {model.param % 2 == 0 ? 2 : 1, SpaceModel::ball(model.n)};
        case ModelFamily::Kind::CrossCotangent:
            throw ModelRefusal("fiber is the Lagrangian; not a fixed-point set");
    }
    throw std::invalid_argument("unknown model kind");
}

namespace {

ChordSystem build_ak(const ModelFamily& model, PeriodConvention convention) {
    const int n = model.n;
    const int k = model.param;
    std::vector<long long> weights(static_cast<size_t>(n) + 1, 2);
    weights[0] = k + 1;

    ChordSystem sys;
    sys.model_name = model.preset();
    sys.family = model;
    sys.n = n;
    sys.flow_period_pi = chord_spectrum_from_flow(weights, PeriodConvention::FlowDerived);
    sys.paper_period_pi = chord_spectrum_from_flow(weights, PeriodConvention::Paper);
    sys.minimal_chord_period_pi =
        convention == PeriodConvention::Paper ? sys.paper_period_pi : sys.flow_period_pi;
    sys.component_topology = SpaceModel::sphere(n - 1);
    sys.lagrangian_topology = SpaceModel::ball_pair(n);
    sys.real_component_count = real_lagrangian_components(model).first;
    sys.contractible_divisor = 1;
    sys.index_slope = 2 + static_cast<long long>(n - 2) * (k + 1);
    sys.index_data_available = true;
    sys.fundamental_group_order = 1;
    sys.h1c_vanishes = true;

    FlowModel flow;
    flow.speeds.emplace_back(1, k + 1);
    for (int j = 0; j < n; ++j)
        flow.speeds.emplace_back(1, 2);
    flow.full_period_pi = Rational(2 * lcm_ll(k + 1, 2));
    sys.flow = flow;
    return sys;
}

/* Shared by both complement families. The boundary is a prequantization
 * bundle; we normalize the common orbit period to 2 pi, so the minimal
 * chord period is pi when the Legendrian is connected (half orbits) and
 * 2 pi when it has two components (full orbits). */
ChordSystem build_complement(const ModelFamily& model, long long mu_p, long long divisor,
                             long long pi1_order) {
    const bool two_components = real_lagrangian_components(model).first == 2;

    ChordSystem sys;
    sys.model_name = model.preset();
    sys.family = model;
    sys.n = model.n;
    sys.flow_period_pi = Rational(two_components ? 2 : 1);
    sys.paper_period_pi = sys.flow_period_pi;
    sys.minimal_chord_period_pi = sys.flow_period_pi;
    sys.component_topology = SpaceModel::sphere(model.n - 1);
    sys.lagrangian_topology = SpaceModel::ball_pair(model.n);
    sys.real_component_count = two_components ? 2 : 1;
    sys.contractible_divisor = divisor;
    sys.index_slope = mu_p;
    sys.index_data_available = true;
    sys.fundamental_group_order = pi1_order;
    sys.h1c_vanishes = true;

    FlowModel flow;
    flow.speeds.emplace_back(1);
    flow.full_period_pi = Rational(2);
    sys.flow = flow;
    return sys;
}

ChordSystem build_cross(const ModelFamily& model, PeriodConvention convention) {
    if (model.base == CrossBase::Sphere && model.n >= 3) {
        ChordSystem sys = build_ak(ModelFamily::ak_milnor(model.n, 1), convention);
        sys.model_name = model.preset();
        sys.family = model;
        return sys;
    }

    // Spectrum and component topology only; the chord index data for the
    // remaining bases is not modeled. Common orbit period normalized to 2 pi.
    ChordSystem sys;
    sys.model_name = model.preset();
    sys.family = model;
    sys.n = model.n;
    sys.flow_period_pi = Rational(2);
    sys.paper_period_pi = Rational(2);
    sys.minimal_chord_period_pi = Rational(2);
    sys.component_topology = SpaceModel::sphere(model.n - 1);
    sys.lagrangian_topology = SpaceModel::ball_pair(model.n);
    sys.real_component_count = 1;
    sys.contractible_divisor = model.base == CrossBase::RealProjective ? 2 : 1;
    sys.index_slope = 0;
    sys.index_data_available = false;
    sys.fundamental_group_order = model.base == CrossBase::RealProjective ? 2 : 1;
    sys.h1c_vanishes = model.n >= 2;

    FlowModel flow;
    flow.speeds.emplace_back(1);
    flow.full_period_pi = Rational(2);
    sys.flow = flow;
    return sys;
}

}  // namespace

ChordSystem build(const ModelFamily& model, PeriodConvention convention) {
    switch (model.kind) {
        case ModelFamily::Kind::AkMilnor:
            return build_ak(model, convention);
        case ModelFamily::Kind::ProjectiveComplement: {
            // c_1(CP^n) = (n+1) omega; hypersurface degree k.
            long long c = model.n + 1;
            long long mu_p = model.param % 2 == 1 ? (c - model.param) : 2 * (c - model.param);
            return build_complement(model, mu_p, model.param, model.param);
        }
        case ModelFamily::Kind::HypersurfaceComplement: {
            // Degree-d hypersurface with c_1 = (n+1-d) omega, hyperplane
            // section of degree 1.
            long long c = model.n + 1 - model.param;
            long long mu_p = model.param % 2 == 1 ? (c - 1) : 2 * (c - 1);
            return build_complement(model, mu_p, 1, 1);
        }
        case ModelFamily::Kind::CrossCotangent:
            return build_cross(model, convention);
    }
    throw std::invalid_argument("unknown model kind");
}

bool MorseBottReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const MorseBottCheck& c) { return c.pass; });
}

MorseBottReport morse_bott_validity(const ChordSystem& system) {
    MorseBottReport report;
    if (!system.flow) {
        report.checks.push_back({"flow model available", false, "system carries no flow model"});
        return report;
    }
    const FlowModel& flow = *system.flow;

    // Spec(Sigma, alpha, L) must sit inside half the orbit spectrum: twice
    // any chord period is a multiple of the common orbit period.
    Rational ratio = (system.minimal_chord_period_pi * Rational(2)) / flow.full_period_pi;
    bool half_ok = ratio.is_integer() && ratio.num() >= 1;
    report.checks.push_back({"spectrum half-containment",
                             half_ok,
                             "2*T0 = " + (system.minimal_chord_period_pi * Rational(2)).str() +
                                 "pi vs common period " + flow.full_period_pi.str() + "pi"});

    // The flow must genuinely close up at the common period, block by block.
    bool identity_ok = true;
    for (const auto& speed : flow.speeds) {
        Rational turns = speed * flow.full_period_pi / Rational(2);
        if (!turns.is_integer()) {
            identity_ok = false;
            break;
        }
    }
    report.checks.push_back({"periodic flow identity at common period",
                             identity_ok,
                             "each block speed times " + flow.full_period_pi.str() +
                                 "pi must be a multiple of 2pi"});
    return report;
}

}  // namespace wfh
