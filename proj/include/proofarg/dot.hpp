// proofarg/dot.hpp - Graphviz rendering of argument graphs
#pragma once

#include <string>

#include "proofarg/argument.hpp"

namespace proofarg
{

/// Renders the graph as DOT text. Each argument becomes a cluster holding its
/// qualifier node and the propositions it introduces; data point at the
/// qualifier, the qualifier points at the claim, the warrant and rebuttals
/// attach to the qualifier and the backing points at the warrant.
///
/// Output is byte-deterministic: clusters and nodes are sorted by id, LF line
/// endings. Throws InvalidArgument if validate_graph reports an error.
std::string export_dot(const ArgumentGraph& graph);

}  // namespace proofarg
