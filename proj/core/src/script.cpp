#include "proofleg/script.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "proofleg/errors.hpp"

namespace proofleg {

namespace {

// Positions of the given in-neighbours under t, ascending.
std::vector<int> in_positions(const std::vector<int>& ins, const TopoOrder& t) {
    std::vector<int> ps;
    ps.reserve(ins.size());
    for (int u : ins) ps.push_back(t.position(u));
    std::sort(ps.begin(), ps.end());
    return ps;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

} // namespace

Script generate_script(const ProofGraph& g, const TopoOrder& t, bool strict_cap) {
    const int n = g.vertex_count();
    int thesis = 0;
    for (int p = 1; p <= n; ++p) {
        const int v = t.vertex_at(p);
        if (g.var_in(v).empty() && g.var_out(v).empty()) thesis = v;
    }
    if (thesis == 0)
        fail(Errc::NoThesisVertex,
             "every vertex touches a variable arc, so no step can carry the goal");

    Script s;
    s.thesis_vertex = thesis;
    s.steps.reserve(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p) {
        const int v = t.vertex_at(p);
        Step step;
        step.vertex = v;
        step.position = p;
        step.kind = v == thesis               ? StepKind::Thus
                    : !g.var_out(v).empty()   ? StepKind::Consider
                                              : StepKind::Plain;
        step.label = "A" + std::to_string(p);

        const std::vector<int> var_ps = in_positions(g.var_in(v), t);
        if (var_ps.empty()) {
            step.statement = "not contradiction";
        } else {
            std::vector<std::string> conjuncts;
            conjuncts.reserve(var_ps.size());
            for (int q : var_ps) {
                const std::string x = "x" + std::to_string(q);
                conjuncts.push_back(x + " = " + x);
            }
            step.statement = join(conjuncts, " & ");
        }

        for (int q : in_positions(g.ref_in(v), t))
            step.justification.push_back("A" + std::to_string(q));
        if (strict_cap && static_cast<int>(step.justification.size()) > kReferenceCap)
            fail(Errc::ReferenceCapExceeded,
                 "step at position " + std::to_string(p) + " cites " +
                     std::to_string(step.justification.size()) + " references");
        s.steps.push_back(std::move(step));
    }
    return s;
}

namespace {

std::string render_verbose(const Script& s) {
    std::string out = "not contradiction\nproof\n";
    for (const Step& st : s.steps) {
        std::string line = "  ";
        if (st.kind == StepKind::Thus) line += "thus ";
        if (st.kind == StepKind::Consider)
            line += "consider x" + std::to_string(st.position) + " be set such that ";
        line += st.label + ": ";
        if (st.kind == StepKind::Consider)
            line += "x" + std::to_string(st.position) + " = " + std::to_string(st.position) + " & ";
        line += st.statement;
        if (!st.justification.empty()) line += " by " + join(st.justification, ", ");
        out += line + ";\n";
    }
    out += "end;\n";
    return out;
}

std::string render_legible(const Script& s, LabelRule rule) {
    const int n = static_cast<int>(s.steps.size());
    std::map<std::string, int> pos_of_label;
    for (const Step& st : s.steps) pos_of_label.emplace(st.label, st.position);

    // A step links with "then" when it cites the immediately preceding step.
    std::vector<bool> uses_then(static_cast<std::size_t>(n) + 1, false);
    // labelled[p]: the step at position p keeps a label, i.e. it is cited with
    // a gap above one, or (Miz) it is a cited consider step.
    std::vector<bool> labelled(static_cast<std::size_t>(n) + 1, false);
    for (const Step& st : s.steps) {
        for (const std::string& ref : st.justification) {
            const auto it = pos_of_label.find(ref);
            if (it == pos_of_label.end())
                fail(Errc::InternalInvariantViolation,
                     "justification cites unknown label " + ref);
            const int q = it->second;
            if (q == st.position - 1) uses_then[static_cast<std::size_t>(st.position)] = true;
            const bool consider =
                s.steps[static_cast<std::size_t>(q) - 1].kind == StepKind::Consider;
            if (st.position - q > 1 || (rule == LabelRule::Miz && consider))
                labelled[static_cast<std::size_t>(q)] = true;
        }
    }

    std::vector<std::string> new_label(static_cast<std::size_t>(n) + 1);
    int next = 1;
    for (int p = 1; p <= n; ++p)
        if (labelled[static_cast<std::size_t>(p)]) new_label[static_cast<std::size_t>(p)] = "A" + std::to_string(next++);

    std::string out = "not contradiction\nproof\n";
    for (const Step& st : s.steps) {
        std::string line = "  ";
        if (st.kind == StepKind::Thus) line += "thus ";
        if (uses_then[static_cast<std::size_t>(st.position)]) line += "then ";
        if (st.kind == StepKind::Consider)
            line += "consider x" + std::to_string(st.position) + " be set such that ";
        if (labelled[static_cast<std::size_t>(st.position)])
            line += new_label[static_cast<std::size_t>(st.position)] + ": ";
        if (st.kind == StepKind::Consider)
            line += "x" + std::to_string(st.position) + " = " + std::to_string(st.position) + " & ";
        line += st.statement;

        std::vector<std::string> surviving;
        for (const std::string& ref : st.justification) {
            const int q = pos_of_label.at(ref);
            if (q == st.position - 1) continue; // consumed by "then"
            if (!labelled[static_cast<std::size_t>(q)])
                fail(Errc::InternalInvariantViolation,
                     "step at position " + std::to_string(st.position) +
                         " cites the unlabelled step at position " + std::to_string(q));
            surviving.push_back(new_label[static_cast<std::size_t>(q)]);
        }
        if (!surviving.empty()) line += " by " + join(surviving, ", ");
        out += line + ";\n";
    }
    out += "end;\n";
    return out;
}

} // namespace

std::string render_script(const Script& s, ScriptStyle style, LabelRule rule) {
    return style == ScriptStyle::Verbose ? render_verbose(s) : render_legible(s, rule);
}

std::string structure_of(const Script& s) {
    std::string out;
    for (const Step& st : s.steps) {
        switch (st.kind) {
            case StepKind::Plain: out += "plain"; break;
            case StepKind::Consider: out += "consider"; break;
            case StepKind::Thus: out += "thus"; break;
        }
        int conjuncts = 1 + (st.kind == StepKind::Consider ? 1 : 0);
        conjuncts += static_cast<int>(std::count(st.statement.begin(), st.statement.end(), '&'));
        out += ' ' + std::to_string(st.justification.size()) + ' ' + std::to_string(conjuncts) + '\n';
    }
    return out;
}

} // namespace proofleg
