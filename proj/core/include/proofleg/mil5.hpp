#ifndef PROOFLEG_MIL5_HPP
#define PROOFLEG_MIL5_HPP

#include "proofleg/graph.hpp"

namespace proofleg {

struct Mil5Result {
    long long label_count = 0;
    TopoOrder witness; // attains label_count under the Miz rule
};

// Polynomial-time exact minimization of the Miz label count. Steps that are
// forced to carry a label under every order are collected first; among the
// remaining candidates one "then"-predecessor per vertex is kept (the
// smallest-id in-neighbour) and the rest are labelled. The witness is built
// by concatenating the maximal paths of the residual reference graph in a
// topological order of their quotient.
Mil5Result mil5_miz_polynomial(const ProofGraph& g);

} // namespace proofleg

#endif
