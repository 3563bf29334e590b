#pragma once

// Text formats.
//
//   .hg   hypergraphs:   "# comment", "V <id> ...", "E <edge-id> : <vertex-id> ..."
//         The V line is optional (contents imply the vertex set); empty edge
//         contents are written "E e :". Incidence graphs are persisted via
//         their hypergraph view.
//   .ef   elimination forests: "N <node-id> parent=<node-id|-> edge=<edge-id>"
//         Parents must be declared before their children; strictness is not
//         stored, it is inferred by the validators.

#include <iosfwd>
#include <string>

#include "hgx/elimination.hpp"
#include "hgx/hypergraph.hpp"

namespace hgx {

Hypergraph read_hg(std::istream& in);
Hypergraph read_hg_file(const std::string& path);
std::string write_hg(const Hypergraph& h);

EliminationForest read_ef(std::istream& in, const IncidenceGraph& instance);
EliminationForest read_ef_file(const std::string& path, const IncidenceGraph& instance);
std::string write_ef(const EliminationForest& ef, const IncidenceGraph& instance);

}  // namespace hgx
