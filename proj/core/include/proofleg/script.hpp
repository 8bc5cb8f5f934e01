#ifndef PROOFLEG_SCRIPT_HPP
#define PROOFLEG_SCRIPT_HPP

#include <string>
#include <vector>

#include "proofleg/graph.hpp"
#include "proofleg/metrics.hpp"

namespace proofleg {

enum class StepKind { Plain, Consider, Thus };

struct Step {
    int vertex = 0;   // source vertex of the step
    int position = 0; // 1-based rank in the generating order
    StepKind kind = StepKind::Plain;
    std::string label;                       // "A<position>"
    std::string statement;                   // conjunction text, no terminator
    std::vector<std::string> justification;  // referenced labels, ascending rank
};

struct Script {
    std::vector<Step> steps; // in order of position
    int thesis_vertex = 0;
};

inline constexpr int kReferenceCap = 25;

// Builds the proof script of g under order t. The thesis step is the
// qualifying vertex (every incident arc a pure reference arc) placed last
// by t; NoThesisVertex when none qualifies. With strict_cap, a step citing
// more than 25 labels raises ReferenceCapExceeded.
Script generate_script(const ProofGraph& g, const TopoOrder& t, bool strict_cap = false);

enum class ScriptStyle { Verbose, Legible };

// Verbose: every step labelled, full justification lists, no "then".
// Legible: "then" replaces the citation of the immediately preceding step,
// only labels that are still cited survive, and surviving labels are
// renumbered consecutively.
std::string render_script(const Script& s, ScriptStyle style,
                          LabelRule rule = LabelRule::Miz);

// One line per step: kind, citation count and conjunct count, used by tests
// to compare scripts structurally.
std::string structure_of(const Script& s);

} // namespace proofleg

#endif
