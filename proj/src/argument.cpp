// proofarg/argument.cpp - Toulmin layout validation, qualifier order, chaining
#include "proofarg/argument.hpp"

#include <algorithm>
#include <set>

namespace proofarg
{

namespace
{

std::string canonical_label(QualifierKind kind)
{
  switch (kind) {
    case QualifierKind::Necessarily:
      return "necessarily";
    case QualifierKind::AlmostCertainly:
      return "almost certainly";
    case QualifierKind::Probably:
      return "probably";
    case QualifierKind::Presumably:
      return "presumably";
    case QualifierKind::Custom:
      break;
  }
  return {};
}

// Higher is stronger; Custom has no rank.
int strength(QualifierKind kind)
{
  switch (kind) {
    case QualifierKind::Necessarily:
      return 4;
    case QualifierKind::AlmostCertainly:
      return 3;
    case QualifierKind::Probably:
      return 2;
    case QualifierKind::Presumably:
      return 1;
    case QualifierKind::Custom:
      break;
  }
  return 0;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep)
{
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) {
      out += sep;
    }
    out += parts[i];
  }
  return out;
}

bool occupies(const ToulminArgument& target, const PropositionId& prop, LinkRole role)
{
  if (role == LinkRole::Datum) {
    return std::find(target.data.begin(), target.data.end(), prop) != target.data.end();
  }
  return target.backing && *target.backing == prop;
}

}  // namespace

Qualifier::Qualifier(QualifierKind kind) : kind_(kind), label_(canonical_label(kind))
{
  if (kind == QualifierKind::Custom) {
    throw std::invalid_argument("custom qualifier requires a label; use Qualifier::custom");
  }
}

Qualifier Qualifier::custom(std::string label)
{
  if (label.empty()) {
    throw std::invalid_argument("custom qualifier label must be non-empty");
  }
  return Qualifier(QualifierKind::Custom, std::move(label));
}

QualifierOrder compare_qualifiers(const Qualifier& a, const Qualifier& b)
{
  if (a.kind() == QualifierKind::Custom || b.kind() == QualifierKind::Custom) {
    return a == b ? QualifierOrder::Equal : QualifierOrder::Incomparable;
  }
  const int sa = strength(a.kind());
  const int sb = strength(b.kind());
  if (sa == sb) {
    return QualifierOrder::Equal;
  }
  return sa > sb ? QualifierOrder::Stronger : QualifierOrder::Weaker;
}

const Proposition* ArgumentGraph::find_proposition(std::string_view id) const
{
  auto it = propositions.find(std::string(id));
  return it == propositions.end() ? nullptr : &it->second;
}

const ToulminArgument* ArgumentGraph::find_argument(std::string_view id) const
{
  auto it = arguments.find(std::string(id));
  return it == arguments.end() ? nullptr : &it->second;
}

bool operator==(const ArgumentGraph& a, const ArgumentGraph& b)
{
  if (a.propositions != b.propositions || a.arguments != b.arguments) {
    return false;
  }
  std::set<ArgumentLink> la(a.links.begin(), a.links.end());
  std::set<ArgumentLink> lb(b.links.begin(), b.links.end());
  return la == lb;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics)
{
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::vector<Diagnostic> validate_argument(const ToulminArgument& arg, const ArgumentGraph& graph)
{
  std::vector<Diagnostic> out;
  auto error = [&](std::string rule, std::string slot, std::string message) {
    out.push_back({Severity::Error, std::move(rule), arg.id, std::move(slot), std::move(message)});
  };

  if (arg.id.empty()) {
    error("missing-id", "id", "argument has no id");
  }

  auto check_ref = [&](const PropositionId& ref, const std::string& slot) {
    const Proposition* prop = graph.find_proposition(ref);
    if (prop == nullptr) {
      error("unresolved-reference", slot, "unresolved reference '" + ref + "' in " + slot);
    } else if (prop->text.empty()) {
      error("empty-proposition-text", slot, "proposition '" + ref + "' has empty text");
    }
  };

  if (arg.data.empty()) {
    error("missing-data", "data", "missing data");
  }
  for (const auto& d : arg.data) {
    check_ref(d, "data");
  }
  if (!arg.warrant) {
    error("missing-warrant", "warrant", "missing warrant");
  } else {
    check_ref(*arg.warrant, "warrant");
  }
  if (!arg.claim) {
    error("missing-claim", "claim", "missing claim");
  } else {
    check_ref(*arg.claim, "claim");
    if (std::find(arg.data.begin(), arg.data.end(), *arg.claim) != arg.data.end()) {
      error("claim-coincides-with-datum", "claim",
            "claim coincides with datum '" + *arg.claim + "'");
    }
  }
  if (arg.backing) {
    check_ref(*arg.backing, "backing");
  }
  for (const auto& r : arg.rebuttals) {
    check_ref(r, "rebuttal");
  }
  if (arg.qualifier && arg.qualifier->kind() == QualifierKind::Necessarily &&
      !arg.rebuttals.empty()) {
    out.push_back({Severity::Warning, "necessarily-with-rebuttals", arg.id, "qualifier",
                   "qualifier 'necessarily' admits no rebuttal within the field, but " +
                       std::to_string(arg.rebuttals.size()) + " given"});
  }
  return out;
}

bool reaches(const ArgumentGraph& graph, const ArgumentId& from, const ArgumentId& to)
{
  std::set<ArgumentId> seen;
  std::vector<ArgumentId> stack{from};
  while (!stack.empty()) {
    ArgumentId cur = std::move(stack.back());
    stack.pop_back();
    if (cur == to) {
      return true;
    }
    if (!seen.insert(cur).second) {
      continue;
    }
    for (const auto& link : graph.links) {
      if (link.source == cur) {
        stack.push_back(link.target);
      }
    }
  }
  return false;
}

std::vector<Diagnostic> validate_graph(const ArgumentGraph& graph)
{
  std::vector<Diagnostic> out;
  for (const auto& [key, prop] : graph.propositions) {
    if (prop.id.empty() || prop.id != key) {
      out.push_back({Severity::Error, "proposition-id-mismatch", "", "proposition",
                     "proposition stored under '" + key + "' has id '" + prop.id + "'"});
    }
    if (prop.text.empty()) {
      out.push_back({Severity::Error, "empty-proposition-text", "", "proposition",
                     "proposition '" + key + "' has empty text"});
    }
  }
  for (const auto& [key, arg] : graph.arguments) {
    if (arg.id != key) {
      out.push_back({Severity::Error, "argument-id-mismatch", arg.id, "id",
                     "argument stored under '" + key + "' has id '" + arg.id + "'"});
    }
    auto diags = validate_argument(arg, graph);
    out.insert(out.end(), diags.begin(), diags.end());
  }

  bool links_resolve = true;
  for (const auto& link : graph.links) {
    const ToulminArgument* source = graph.find_argument(link.source);
    const ToulminArgument* target = graph.find_argument(link.target);
    if (source == nullptr || target == nullptr) {
      links_resolve = false;
      out.push_back({Severity::Error, "unresolved-link", link.target, "link",
                     "link " + link.source + " -> " + link.target + " names an unknown argument"});
      continue;
    }
    if (!source->claim || !occupies(*target, *source->claim, link.role)) {
      out.push_back({Severity::Error, "link-slot-mismatch", link.target, "link",
                     "claim of '" + link.source + "' does not occupy the " +
                         std::string(to_string(link.role)) + " slot of '" + link.target + "'"});
    }
  }
  if (links_resolve) {
    for (const auto& [id, arg] : graph.arguments) {
      bool cyclic = false;
      for (const auto& link : graph.links) {
        if (link.source == id && reaches(graph, link.target, id)) {
          cyclic = true;
          break;
        }
      }
      if (cyclic) {
        out.push_back({Severity::Error, "support-cycle", id, "link",
                       "argument '" + id + "' transitively supports itself"});
      }
    }
  }
  return out;
}

ArgumentGraph add_link(ArgumentGraph graph, const ArgumentId& source, const ArgumentId& target,
                       LinkRole role)
{
  const ToulminArgument* src = graph.find_argument(source);
  const ToulminArgument* tgt = graph.find_argument(target);
  if (src == nullptr) {
    throw UnknownArgument("unknown argument '" + source + "'");
  }
  if (tgt == nullptr) {
    throw UnknownArgument("unknown argument '" + target + "'");
  }
  if (source == target || reaches(graph, target, source)) {
    throw CycleError("link " + source + " -> " + target + " closes a support cycle");
  }
  if (!src->claim || !occupies(*tgt, *src->claim, role)) {
    throw SlotMismatch("claim of '" + source + "' does not occupy the " +
                       std::string(to_string(role)) + " slot of '" + target + "'");
  }
  ArgumentLink link{source, target, role};
  if (std::find(graph.links.begin(), graph.links.end(), link) == graph.links.end()) {
    graph.links.push_back(std::move(link));
  }
  return graph;
}

std::string render_reading(const ToulminArgument& arg, const ArgumentGraph& graph)
{
  auto diags = validate_argument(arg, graph);
  if (has_errors(diags)) {
    for (const auto& d : diags) {
      if (d.severity == Severity::Error) {
        throw InvalidArgument("cannot render '" + arg.id + "': " + d.message);
      }
    }
  }
  auto text = [&](const PropositionId& id) { return graph.find_proposition(id)->text; };

  std::vector<std::string> data;
  for (const auto& d : arg.data) {
    data.push_back(text(d));
  }
  std::string out = "Given " + join(data, ", and ") + ", we can ";
  if (arg.qualifier) {
    out += arg.qualifier->label() + " ";
  }
  out += "claim " + text(*arg.claim) + ", since " + text(*arg.warrant);
  if (arg.backing) {
    out += " (on account of " + text(*arg.backing) + ")";
  }
  if (!arg.rebuttals.empty()) {
    std::vector<std::string> rebuttals;
    for (const auto& r : arg.rebuttals) {
      rebuttals.push_back(text(r));
    }
    out += ", unless " + join(rebuttals, ", or ");
  }
  return out;
}

std::string_view to_string(QualifierKind kind)
{
  switch (kind) {
    case QualifierKind::Necessarily:
      return "necessarily";
    case QualifierKind::AlmostCertainly:
      return "almost_certainly";
    case QualifierKind::Probably:
      return "probably";
    case QualifierKind::Presumably:
      return "presumably";
    case QualifierKind::Custom:
      return "custom";
  }
  return "?";
}

std::string_view to_string(TruthTag tag)
{
  switch (tag) {
    case TruthTag::ProvedConventionally:
      return "proved_conventionally";
    case TruthTag::ComputerVerified:
      return "computer_verified";
    case TruthTag::Assumed:
      return "assumed";
    case TruthTag::Unknown:
      return "unknown";
  }
  return "?";
}

std::string_view to_string(LinkRole role)
{
  return role == LinkRole::Datum ? "datum" : "backing";
}

std::string_view to_string(Severity severity)
{
  return severity == Severity::Error ? "error" : "warning";
}

std::string_view to_string(ArgumentKind kind)
{
  return kind == ArgumentKind::Regular ? "regular" : "critical";
}

}  // namespace proofarg
