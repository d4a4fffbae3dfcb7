#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wfh/mbss.hpp"
#include "wfh/models.hpp"

namespace wfh {

struct HypothesisEntry {
    std::string hypothesis;
    std::string status;  // "pass", "fail", or a short note
    std::string source;
};

struct TheoremGate {
    bool applies = false;
    std::string conclusion;  // conclusion when it applies, reason otherwise
};

/* Conditional conclusions about the model, with the hypothesis checks that
 * led to them. These certify hypotheses computationally; the theorems
 * themselves are inputs. */
struct Verdict {
    TheoremGate theorem_a;  // slow volume growth s_n >= 1 on the twist classes
    TheoremGate theorem_b;  // the twist class has infinite order
    std::string finite_order_note;
    std::vector<HypothesisEntry> trace;
    std::optional<bool> corollary_gate;  // closed-form parameter gate, where one exists
    std::optional<bool> gate_agrees;     // corollary gate vs the computed route
    bool inconclusive = false;
};

Verdict evaluate(const ChordSystem& system, const WfhReport& report);

/* Contrapositive of the finite-order bound: a finite-order twist class
 * forces dim WFH <= dim H_*(B^n, S^{n-1}) = 1, so any determined dimension
 * above 1 rules finite order out. */
std::string finite_order_consistency(const WfhReport& report, int n);

}  // namespace wfh
