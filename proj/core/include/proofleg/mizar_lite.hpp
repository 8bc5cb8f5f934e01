#ifndef PROOFLEG_MIZAR_LITE_HPP
#define PROOFLEG_MIZAR_LITE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "proofleg/graph.hpp"

namespace proofleg {

// Extraction of the abstract graph from a proof script written in the
// Mizar-like surface syntax produced by render_script (and by hand).
//
// The text is a prelude (everything up to a lone "proof"), a ';'-separated
// list of steps, and a closing "end;". Recognized step forms:
//
//   let <idents> ...
//   assume [L:] <statement>
//   consider <idents> be ... such that [L:] <statement> [by <refs>]
//   [thus] [then] [L:] <statement> [by <refs>]
//
// Steps become vertices in textual order. "then" adds a reference arc from
// the directly preceding step; "by L" adds one from the step labelled L
// (UnknownLabel if none; references containing ':' or starting with "def"
// are external and ignored). A step mentioning an identifier introduced by
// an earlier let/consider step gets a variable arc from the introducing
// step. Labels may not repeat (DuplicateLabel). SyntaxError otherwise; all
// errors carry the line number.
struct ParsedScript {
    ProofGraph graph;
    std::vector<int> line_of_step; // 1-based line where each step starts
};

ParsedScript parse_mizar_lite(std::istream& in);
ParsedScript parse_mizar_lite_file(const std::string& path);

} // namespace proofleg

#endif
