// proofarg/dot.cpp - Graphviz rendering of argument graphs
#include "proofarg/dot.hpp"

#include <map>
#include <set>
#include <sstream>

namespace proofarg
{

namespace
{

std::string quote(std::string_view s)
{
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        out += c;
    }
  }
  out += '"';
  return out;
}

std::string prop_node(const PropositionId& id) { return quote("p:" + id); }
std::string qual_node(const ArgumentId& id) { return quote("q:" + id); }

std::vector<PropositionId> referenced(const ToulminArgument& arg)
{
  std::vector<PropositionId> out(arg.data.begin(), arg.data.end());
  for (const auto* slot : {&arg.warrant, &arg.backing, &arg.claim}) {
    if (*slot) {
      out.push_back(**slot);
    }
  }
  out.insert(out.end(), arg.rebuttals.begin(), arg.rebuttals.end());
  return out;
}

void emit_prop(std::ostringstream& out, const Proposition& prop, std::string_view indent)
{
  out << indent << prop_node(prop.id) << " [shape=box, label=" << quote(prop.id + "\n" + prop.text)
      << "];\n";
}

}  // namespace

std::string export_dot(const ArgumentGraph& graph)
{
  auto diags = validate_graph(graph);
  for (const auto& d : diags) {
    if (d.severity == Severity::Error) {
      throw InvalidArgument("cannot export graph: " + d.message);
    }
  }

  // Each proposition lives in the cluster of the first argument (by id) that uses it.
  std::map<ArgumentId, std::set<PropositionId>> homed;
  std::set<PropositionId> placed;
  for (const auto& [id, arg] : graph.arguments) {
    for (const auto& p : referenced(arg)) {
      if (placed.insert(p).second) {
        homed[id].insert(p);
      }
    }
  }

  std::ostringstream out;
  out << "digraph arguments {\n";
  out << "  rankdir=LR;\n";
  out << "  node [fontname=\"Helvetica\"];\n";

  for (const auto& [id, prop] : graph.propositions) {
    if (!placed.contains(id)) {
      emit_prop(out, prop, "  ");
    }
  }

  for (const auto& [id, arg] : graph.arguments) {
    out << "  subgraph " << quote("cluster_" + id) << " {\n";
    out << "    label=" << quote(id) << ";\n";
    for (const auto& p : homed[id]) {
      emit_prop(out, graph.propositions.at(p), "    ");
    }
    if (arg.qualifier) {
      out << "    " << qual_node(id) << " [shape=ellipse, label=" << quote(arg.qualifier->label())
          << "];\n";
    } else {
      out << "    " << qual_node(id) << " [shape=point];\n";
    }
    out << "  }\n";
  }

  for (const auto& [id, arg] : graph.arguments) {
    std::set<PropositionId> data(arg.data.begin(), arg.data.end());
    for (const auto& d : data) {
      out << "  " << prop_node(d) << " -> " << qual_node(id) << ";\n";
    }
    out << "  " << qual_node(id) << " -> " << prop_node(*arg.claim) << ";\n";
    out << "  " << prop_node(*arg.warrant) << " -> " << qual_node(id)
        << " [style=dashed, label=\"since\"];\n";
    if (arg.backing) {
      out << "  " << prop_node(*arg.backing) << " -> " << prop_node(*arg.warrant)
          << " [label=\"on account of\"];\n";
    }
    std::set<PropositionId> rebuttals(arg.rebuttals.begin(), arg.rebuttals.end());
    for (const auto& r : rebuttals) {
      out << "  " << prop_node(r) << " -> " << qual_node(id)
          << " [arrowhead=tee, label=\"unless\"];\n";
    }
  }

  std::set<ArgumentLink> links(graph.links.begin(), graph.links.end());
  for (const auto& link : links) {
    out << "  " << qual_node(link.source) << " -> " << qual_node(link.target)
        << " [style=dotted, label=" << quote(to_string(link.role)) << "];\n";
  }

  out << "}\n";
  return out.str();
}

}  // namespace proofarg
