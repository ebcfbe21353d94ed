// proofarg/analysis.hpp - whole-document checks and JSON reports
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "proofarg/markup.hpp"
#include "proofarg/shift.hpp"

namespace proofarg
{

struct LocatedDiagnostic
{
  markup::SourceSpan span;
  Diagnostic diagnostic;
};

/// Argument, graph and dialogue-header problems of a parsed document, in
/// source order. Arguments are located at their block.
std::vector<LocatedDiagnostic> validate_document(const markup::Document& doc);

/// `file:line:col: severity: message`
std::string format_diagnostic(const std::string& file, const LocatedDiagnostic& d);

struct ProofDialogueClassification
{
  std::optional<InitialSituation> situation;
  std::optional<ProofDialogueKind> kind;
  std::string note;  // why no row applies, when kind is empty
};

/// Places a dialogue header in the proof-dialogue catalogue. Eristic and
/// debate dialogues count as irreconcilable conflicts.
ProofDialogueClassification classify_script(const DialogueScript& script);

/// Situation, goal, survey cell and proof-dialogue row of one dialogue header.
nlohmann::json classification_json(const DialogueScript& script);

struct DialogueAnalysis
{
  std::string dialogue_id;
  DialogueType declared_type = DialogueType::Inquiry;
  // Set when replay could not start: rule id and message.
  std::optional<std::pair<std::string, std::string>> header_error;
  std::optional<ReplayResult> replay;
  GoalVerdict goal;
  std::vector<Segment> segments;
  std::vector<Shift> shifts;
  ProofDialogueClassification classification;

  [[nodiscard]] bool failed() const
  {
    return header_error.has_value() || (replay && replay->violation.has_value());
  }
  /// Success iff the goal was reached without a protocol violation.
  [[nodiscard]] Outcome outcome() const
  {
    return !failed() && goal.achieved ? Outcome::Success : Outcome::Failure;
  }
};

DialogueAnalysis analyze_dialogue(const DialogueScript& script, const DialogueContext& context,
                                  int shift_window = kDefaultShiftWindow);

struct ProofAnalysis
{
  std::string proof_id;
  std::vector<std::string> dialogues;
  OutcomeMap outcomes;
  ProofStatus status;
};

struct DocumentAnalysis
{
  std::vector<DialogueAnalysis> dialogues;
  std::vector<ProofAnalysis> proofs;

  [[nodiscard]] bool has_violation() const;
};

/// Outcomes of dialogues sharing a proof-dialogue kind combine; a failure wins.
DocumentAnalysis analyze_document(const markup::Document& doc,
                                  int shift_window = kDefaultShiftWindow);

nlohmann::json to_json(const DialogueAnalysis& a);
nlohmann::json to_json(const DocumentAnalysis& a);

/// The three typology tables as data.
nlohmann::json typology_json();

/// Two-space indented, sorted keys, trailing newline.
std::string dump_report(const nlohmann::json& j);

}  // namespace proofarg
