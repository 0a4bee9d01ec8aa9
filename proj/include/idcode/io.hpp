#pragma once

#include <string>
#include <string_view>

#include "idcode/bipartite.hpp"
#include "idcode/digraph.hpp"
#include "idcode/family.hpp"
#include "idcode/set_system.hpp"

namespace idcode {

// Digraph text format: first non-comment line "n <count>", then one arc
// "<u> <v>" per line (0-indexed). Lines starting with '#' and blank lines are
// ignored. Duplicate arcs, self-loops and out-of-range indices are errors.
Digraph parse_digraph(std::string_view text);

// Emits "n <count>" followed by the arcs sorted lexicographically.
std::string serialize_digraph(const Digraph& d);

// Set-system JSON: {"ground_size": <m>, "sets": [[<e>, ...], ...]},
// elements 0-indexed, sets kept in listed order. Unknown keys are rejected.
SetSystem parse_set_system(std::string_view json_text);
std::string serialize_set_system(const SetSystem& sys);

// Bipartite JSON: {"s_size": <k>, "t_size": <m>, "edges": [[s, t], ...],
// "matching": [[s, t], ...]} with "matching" optional.
BipartiteGraph parse_bipartite(std::string_view json_text);
std::string serialize_bipartite(const BipartiteGraph& g);

// Forest text format: one "<child> <parent>" line per non-root vertex,
// children ascending.
std::string serialize_forest(const RootedForest& f);

}  // namespace idcode
