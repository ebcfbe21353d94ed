// proofarg/typology.hpp - dialogue typology and proof-dialogue classification
//
// Three finite tables drive this module: the survey of dialogue types indexed
// by initial situation and main goal, the profile of each dialogue type, and
// the catalogue of proof dialogues. Table text is stored verbatim.
#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace proofarg
{

enum class EpistemicStance { True, False, Unknown };

enum class SituationKind { Conflict, OpenProblem, InfoAsymmetry };

enum class AsymmetryDirection { InterlocutorLacks, ProverLacks };

class InitialSituation
{
public:
  static InitialSituation conflict(bool irreconcilable = false);
  static InitialSituation open_problem();
  /// Open-mindedness: mutual ignorance or at least lack of commitment. Same
  /// cell as an open problem.
  static InitialSituation open_mindedness() { return open_problem(); }
  static InitialSituation info_asymmetry(AsymmetryDirection direction);

  [[nodiscard]] SituationKind kind() const { return kind_; }
  [[nodiscard]] std::optional<AsymmetryDirection> direction() const { return direction_; }
  [[nodiscard]] bool irreconcilable() const { return irreconcilable_; }

  friend bool operator==(const InitialSituation&, const InitialSituation&) = default;

private:
  InitialSituation(SituationKind kind, std::optional<AsymmetryDirection> direction,
                   bool irreconcilable)
      : kind_(kind), direction_(direction), irreconcilable_(irreconcilable)
  {
  }

  SituationKind kind_;
  std::optional<AsymmetryDirection> direction_;
  bool irreconcilable_;
};

struct NoDispute
{
  friend bool operator==(NoDispute, NoDispute) = default;
};

using StanceInference = std::variant<NoDispute, InitialSituation>;

/// Total over the 3x3 stance table. `prover` is the party advancing the
/// crucial proposition; in an asymmetry the committed party is the one
/// holding the information.
StanceInference infer_initial_situation(EpistemicStance prover, EpistemicStance interlocutor);

enum class MainGoal { StableResolution, PracticalSettlement, ProvisionalAccommodation };

enum class DialogueType {
  Persuasion,
  Inquiry,
  Deliberation,
  Negotiation,
  InformationSeeking,
  Eristic,
  Debate,
  Pedagogical,
};

inline constexpr DialogueType kAllDialogueTypes[] = {
    DialogueType::Persuasion,   DialogueType::Inquiry,
    DialogueType::Deliberation, DialogueType::Negotiation,
    DialogueType::InformationSeeking, DialogueType::Eristic,
    DialogueType::Debate,       DialogueType::Pedagogical,
};

/// Empty for the six basic types; {Persuasion, Eristic} for Debate and
/// {InformationSeeking} for Pedagogical.
std::span<const DialogueType> base_types(DialogueType type);

[[nodiscard]] bool is_derived(DialogueType type);

class UndefinedCell : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// Throws UndefinedCell for the three cells the survey leaves empty.
DialogueType classify_dialogue(const InitialSituation& situation, MainGoal goal);

/// The survey cell a type occupies. Derived types resolve through their bases:
/// Pedagogical sits with InformationSeeking; Debate, mixing persuasion with
/// eristic, takes the conflict column and the weaker eristic goal.
SituationKind situation_of(DialogueType type);
MainGoal goal_of(DialogueType type);

/// Goal grade, StableResolution > PracticalSettlement > ProvisionalAccommodation.
int goal_grade(MainGoal goal);

struct DialogueProfile
{
  DialogueType type;
  std::string_view name;
  std::string_view initial_situation_text;
  std::string_view individual_goals_text;
  std::string_view collective_goal_text;
  // Stored as published; the pedagogical row reads "Reserve transfer".
  std::string_view benefits_text;
};

const DialogueProfile& dialogue_profile(DialogueType type);

enum class ProofDialogueKind {
  ProofAsInquiry,
  ProofAsPersuasion,
  ProofAsPedagogical,
  SuspectInfoSeeking,
  SuspectDeliberation,
  SuspectNegotiation,
  SuspectEristic,
};

inline constexpr ProofDialogueKind kAllProofDialogueKinds[] = {
    ProofDialogueKind::ProofAsInquiry,      ProofDialogueKind::ProofAsPersuasion,
    ProofDialogueKind::ProofAsPedagogical,  ProofDialogueKind::SuspectInfoSeeking,
    ProofDialogueKind::SuspectDeliberation, ProofDialogueKind::SuspectNegotiation,
    ProofDialogueKind::SuspectEristic,
};

struct ProofDialogueType
{
  ProofDialogueKind kind;
  bool suspect;
  std::string_view name;
  std::string_view initial_situation_text;
  std::string_view main_goal_text;
  std::string_view prover_goal_text;
  std::string_view interlocutor_goal_text;
};

const ProofDialogueType& proof_dialogue_profile(ProofDialogueKind kind);

/// Throws UndefinedCell outside the seven catalogued rows.
const ProofDialogueType& classify_proof_dialogue(const InitialSituation& situation, MainGoal goal);

enum class Outcome { Success, Failure, NotAttempted };

enum class ProofStatusKind { IdealProof, Proof, NotProof, HeuristicOnly, NonRigorousSettlement };

struct ProofStatus
{
  ProofStatusKind kind;
  std::vector<std::string> diagnostics;
};

using OutcomeMap = std::map<ProofDialogueKind, Outcome>;

/// Missing entries count as NotAttempted, and NotAttempted never counts as a
/// success.
ProofStatus assess_proof_status(const OutcomeMap& outcomes);

std::string_view to_string(EpistemicStance stance);
std::string_view to_string(SituationKind kind);
std::string_view to_string(AsymmetryDirection direction);
std::string_view to_string(MainGoal goal);
std::string_view to_string(DialogueType type);
std::string_view to_string(ProofDialogueKind kind);
std::string_view to_string(Outcome outcome);
std::string_view to_string(ProofStatusKind kind);

/// Parses the snake_case names used in markup ("inquiry", "information_seeking", ...).
std::optional<DialogueType> dialogue_type_from_string(std::string_view name);

}  // namespace proofarg
