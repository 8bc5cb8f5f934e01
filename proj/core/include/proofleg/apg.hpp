#ifndef PROOFLEG_APG_HPP
#define PROOFLEG_APG_HPP

#include <iosfwd>
#include <string>

#include "proofleg/digraph.hpp"
#include "proofleg/graph.hpp"
#include "proofleg/reductions.hpp"

namespace proofleg {

// Text formats. Lines are whitespace-separated tokens; blank lines and lines
// starting with '#' are skipped. Every parser throws Error with the
// offending line number on malformed input.
//
//   .apg   "apg 1", "nodes N", then "ref U V" / "var U V"
//   .ug    "ug 1",  "nodes N", then "edge U V"
//   .dg    "dg 1",  "nodes N", then "arc U V"

ProofGraph parse_apg(std::istream& in);
ProofGraph parse_apg_file(const std::string& path);
std::string emit_apg(const ProofGraph& g);

UndirectedGraph parse_ug(std::istream& in);
UndirectedGraph parse_ug_file(const std::string& path);
std::string emit_ug(const UndirectedGraph& g);

Digraph parse_dg(std::istream& in);
Digraph parse_dg_file(const std::string& path);
std::string emit_dg(const Digraph& g);

} // namespace proofleg

#endif
