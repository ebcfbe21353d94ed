// proofarg/argument.hpp - Toulmin layout, argument chaining and structural validation
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace proofarg
{

using PropositionId = std::string;
using ArgumentId = std::string;

enum class TruthTag { ProvedConventionally, ComputerVerified, Assumed, Unknown };

struct Proposition
{
  PropositionId id;
  std::string text;
  std::optional<TruthTag> truth_tag;

  friend bool operator==(const Proposition&, const Proposition&) = default;
};

enum class QualifierKind { Necessarily, AlmostCertainly, Probably, Presumably, Custom };

/// Modal qualifier attached to a claim. Custom qualifiers carry their own
/// label and are incomparable with every other qualifier.
class Qualifier
{
public:
  explicit Qualifier(QualifierKind kind);
  static Qualifier custom(std::string label);

  [[nodiscard]] QualifierKind kind() const { return kind_; }
  [[nodiscard]] const std::string& label() const { return label_; }

  friend bool operator==(const Qualifier&, const Qualifier&) = default;

private:
  Qualifier(QualifierKind kind, std::string label) : kind_(kind), label_(std::move(label)) {}

  QualifierKind kind_;
  std::string label_;
};

enum class QualifierOrder { Stronger, Weaker, Equal, Incomparable };

QualifierOrder compare_qualifiers(const Qualifier& a, const Qualifier& b);

enum class ArgumentKind { Regular, Critical };

struct ToulminArgument
{
  ArgumentId id;
  std::vector<PropositionId> data;
  std::optional<PropositionId> warrant;
  std::optional<PropositionId> claim;
  std::optional<PropositionId> backing;
  std::optional<Qualifier> qualifier;
  std::vector<PropositionId> rebuttals;
  ArgumentKind kind = ArgumentKind::Regular;
  std::optional<std::string> field_label;

  friend bool operator==(const ToulminArgument&, const ToulminArgument&) = default;
};

enum class LinkRole { Datum, Backing };

/// The source argument's claim serves in `role` for the target argument.
struct ArgumentLink
{
  ArgumentId source;
  ArgumentId target;
  LinkRole role;

  friend auto operator<=>(const ArgumentLink&, const ArgumentLink&) = default;
};

struct ArgumentGraph
{
  std::map<PropositionId, Proposition> propositions;
  std::map<ArgumentId, ToulminArgument> arguments;
  std::vector<ArgumentLink> links;

  [[nodiscard]] const Proposition* find_proposition(std::string_view id) const;
  [[nodiscard]] const ToulminArgument* find_argument(std::string_view id) const;

  // Links compare as a set; insertion order is not structural.
  friend bool operator==(const ArgumentGraph& a, const ArgumentGraph& b);
};

enum class Severity { Error, Warning };

struct Diagnostic
{
  Severity severity;
  std::string rule;      // stable identifier of the violated invariant
  std::string argument;  // offending argument id (empty for graph-level problems)
  std::string slot;      // "data", "warrant", "claim", "backing", "qualifier", "rebuttal", "link", ...
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

[[nodiscard]] bool has_errors(const std::vector<Diagnostic>& diagnostics);

/// Structural check of one argument against the propositions of `graph`.
/// Never throws; an empty result means every invariant holds.
std::vector<Diagnostic> validate_argument(const ToulminArgument& arg, const ArgumentGraph& graph);

/// Every argument plus the link invariants (resolution, slot occupancy, acyclicity).
std::vector<Diagnostic> validate_graph(const ArgumentGraph& graph);

class GraphError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class CycleError : public GraphError
{
public:
  using GraphError::GraphError;
};

class SlotMismatch : public GraphError
{
public:
  using GraphError::GraphError;
};

class UnknownArgument : public GraphError
{
public:
  using GraphError::GraphError;
};

class InvalidArgument : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

ArgumentGraph add_link(ArgumentGraph graph, const ArgumentId& source, const ArgumentId& target,
                       LinkRole role);

/// True if `to` is reachable from `from` following source -> target links.
/// Every argument reaches itself.
[[nodiscard]] bool reaches(const ArgumentGraph& graph, const ArgumentId& from, const ArgumentId& to);

/// "Given D, we can Q claim C, since W (on account of B), unless R".
/// Throws InvalidArgument if validation reports an error.
std::string render_reading(const ToulminArgument& arg, const ArgumentGraph& graph);

std::string_view to_string(QualifierKind kind);
std::string_view to_string(TruthTag tag);
std::string_view to_string(LinkRole role);
std::string_view to_string(Severity severity);
std::string_view to_string(ArgumentKind kind);

}  // namespace proofarg
