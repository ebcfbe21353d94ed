// proofarg/dialogue.hpp - dialogue protocol engine with commitment stores
#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "proofarg/argument.hpp"
#include "proofarg/typology.hpp"

namespace proofarg
{

using ParticipantId = std::string;

enum class Role { Prover, Interlocutor, Neutral };

struct Participant
{
  ParticipantId id;
  Role role = Role::Neutral;
  EpistemicStance initial_stance = EpistemicStance::Unknown;
  // Obliged to resist the crucial proposition whatever its private view, as a
  // referee is.
  bool adversarial = false;

  friend bool operator==(const Participant&, const Participant&) = default;
};

enum class MoveKind {
  Assert,
  Challenge,
  Question,
  Concede,
  Retract,
  DeclareShift,
  Close,
  Propose,  // put forward a provisional or practical conclusion
  Offer,    // bargaining: exchange for a concession
  Threat,
};

inline constexpr MoveKind kAllMoveKinds[] = {
    MoveKind::Assert, MoveKind::Challenge,    MoveKind::Question, MoveKind::Concede,
    MoveKind::Retract, MoveKind::DeclareShift, MoveKind::Close,    MoveKind::Propose,
    MoveKind::Offer,  MoveKind::Threat,
};

// DeclareShift names a dialogue type; every other kind names a proposition.
using MoveSubject = std::variant<PropositionId, DialogueType>;

struct Move
{
  int turn = 0;
  ParticipantId speaker;
  MoveKind kind = MoveKind::Assert;
  MoveSubject subject;

  friend bool operator==(const Move&, const Move&) = default;
};

enum class Polarity { Affirmed, Denied };

struct Commitment
{
  PropositionId proposition;
  Polarity polarity;

  friend auto operator<=>(const Commitment&, const Commitment&) = default;
};

class CommitmentStore
{
public:
  CommitmentStore() = default;
  explicit CommitmentStore(ParticipantId owner) : owner_(std::move(owner)) {}

  [[nodiscard]] const ParticipantId& owner() const { return owner_; }
  [[nodiscard]] const std::set<Commitment>& commitments() const { return commitments_; }
  [[nodiscard]] std::optional<Polarity> polarity(const PropositionId& p) const;
  [[nodiscard]] bool holds(const PropositionId& p) const { return polarity(p).has_value(); }
  [[nodiscard]] bool affirms(const PropositionId& p) const;
  /// No proposition carries both polarities.
  [[nodiscard]] bool consistent() const;

  /// Record a commitment, replacing any opposite one.
  void commit(const PropositionId& p, Polarity polarity);
  void remove(const PropositionId& p);

  friend bool operator==(const CommitmentStore&, const CommitmentStore&) = default;

private:
  ParticipantId owner_;
  std::set<Commitment> commitments_;
};

enum class Phase { Open, Closed };

/// What a transcript may refer to beyond its own header.
struct DialogueContext
{
  std::set<PropositionId> propositions;
  // claim -> propositions that support it (data, warrant, backing)
  std::map<PropositionId, std::set<PropositionId>> supports;

  friend bool operator==(const DialogueContext&, const DialogueContext&) = default;
};

struct DialogueState
{
  DialogueType declared_type = DialogueType::Inquiry;
  // Changes only on DeclareShift; legality is judged against it.
  DialogueType operative_type = DialogueType::Inquiry;
  PropositionId crucial;
  std::optional<PropositionId> settlement;
  std::vector<Participant> participants;
  std::map<ParticipantId, CommitmentStore> stores;
  std::vector<Move> history;
  Phase phase = Phase::Open;
  DialogueContext context;

  [[nodiscard]] const Participant* find_participant(const ParticipantId& id) const;
  /// The participant with role Prover, else the first listed.
  [[nodiscard]] const Participant& prover() const;
  [[nodiscard]] const Participant& counterpart(const ParticipantId& id) const;
  [[nodiscard]] int next_turn() const { return static_cast<int>(history.size()) + 1; }

  friend bool operator==(const DialogueState&, const DialogueState&) = default;
};

class DialogueError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class StanceMismatch : public DialogueError
{
public:
  using DialogueError::DialogueError;
};

class ProtocolViolation : public std::runtime_error
{
public:
  ProtocolViolation(std::string rule, const std::string& message)
      : std::runtime_error(message), rule_(std::move(rule))
  {
  }
  [[nodiscard]] const std::string& rule() const { return rule_; }

private:
  std::string rule_;
};

/// Two participants with distinct ids; their stances must place the dialogue
/// in the survey cell of `type` (StanceMismatch otherwise). Stores are seeded
/// from stances: True affirms the crucial proposition, False denies it.
DialogueState new_dialogue(DialogueType type, PropositionId crucial,
                           std::vector<Participant> participants, DialogueContext context = {},
                           std::optional<PropositionId> settlement = std::nullopt);

/// The stance a participant's behaviour counts as: an adversarial party with
/// no view of its own opposes the prover.
EpistemicStance effective_stance(const Participant& p, const Participant& prover);

/// Rule id the move would break, or nullopt if apply_move accepts it.
std::optional<std::string> check_move(const DialogueState& state, const Move& move);

/// Throws ProtocolViolation carrying the rule id.
DialogueState apply_move(const DialogueState& state, const Move& move);

std::vector<MoveKind> legal_moves(const DialogueState& state, const ParticipantId& speaker);

inline constexpr int kDefaultAnswerWindow = 2;

struct GoalVerdict
{
  bool achieved = false;
  std::string reason;
};

/// Judged against the declared type's collective goal. A challenge not
/// answered within `answer_window` of the challenged party's turns defeats
/// a persuasion.
GoalVerdict goal_achieved(const DialogueState& state, int answer_window = kDefaultAnswerWindow);

/// Stance implied by a store: affirmed -> True, denied -> False, absent -> Unknown.
EpistemicStance implied_stance(const CommitmentStore& store, const PropositionId& p);

struct DialogueScript
{
  std::string id;
  DialogueType type = DialogueType::Inquiry;
  PropositionId crucial;
  std::vector<Participant> participants;
  std::optional<PropositionId> settlement;
  std::vector<Move> moves;

  friend bool operator==(const DialogueScript&, const DialogueScript&) = default;
};

struct ReplayViolation
{
  int turn = 0;      // turn number as written in the offending move
  size_t index = 0;  // 0-based position in the transcript
  std::string rule;
  std::string message;
};

struct ReplayResult
{
  // Final state, or the state just before the offending move.
  DialogueState state;
  std::optional<ReplayViolation> violation;
};

/// Folds apply_move over the script's moves. Throws StanceMismatch or
/// DialogueError when the header itself is unusable.
ReplayResult replay_transcript(const DialogueScript& script, const DialogueContext& context = {});

std::string_view to_string(Role role);
std::string_view to_string(MoveKind kind);
std::string_view to_string(Polarity polarity);
std::string_view to_string(Phase phase);
std::optional<MoveKind> move_kind_from_string(std::string_view word);

}  // namespace proofarg
