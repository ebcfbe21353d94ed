// proofarg/dialogue.cpp - dialogue protocol engine
#include "proofarg/dialogue.hpp"

#include <algorithm>

namespace proofarg
{

namespace
{

Polarity polarity_of(EpistemicStance s) { return s == EpistemicStance::False ? Polarity::Denied : Polarity::Affirmed; }

EpistemicStance opposite(EpistemicStance s)
{
  switch (s) {
    case EpistemicStance::True:
      return EpistemicStance::False;
    case EpistemicStance::False:
      return EpistemicStance::True;
    case EpistemicStance::Unknown:
      break;
  }
  return EpistemicStance::Unknown;
}

bool others_hold(const DialogueState& state, const ParticipantId& speaker, const PropositionId& p,
                 bool affirmed_only)
{
  for (const auto& [owner, store] : state.stores) {
    if (owner == speaker) {
      continue;
    }
    if (affirmed_only ? store.affirms(p) : store.holds(p)) {
      return true;
    }
  }
  return false;
}

std::string subject_text(const MoveSubject& subject)
{
  if (const auto* p = std::get_if<PropositionId>(&subject)) {
    return *p;
  }
  return std::string(to_string(std::get<DialogueType>(subject)));
}

std::string describe(const Move& move)
{
  return "turn " + std::to_string(move.turn) + ": " + move.speaker + " " +
         std::string(to_string(move.kind)) + " " + subject_text(move.subject);
}

// First unanswered challenge in the transcript, if any.
std::optional<std::pair<const Move*, PropositionId>> unanswered_challenge(const DialogueState& state,
                                                                          int window)
{
  const auto& h = state.history;
  for (size_t i = 0; i < h.size(); ++i) {
    if (h[i].kind != MoveKind::Challenge) {
      continue;
    }
    const auto& p = std::get<PropositionId>(h[i].subject);
    const ParticipantId& challenged = state.counterpart(h[i].speaker).id;
    std::set<PropositionId> answers{p};
    if (auto it = state.context.supports.find(p); it != state.context.supports.end()) {
      answers.insert(it->second.begin(), it->second.end());
    }
    int seen = 0;
    bool answered = false;
    for (size_t j = i + 1; j < h.size() && seen < window; ++j) {
      if (h[j].speaker != challenged) {
        continue;
      }
      ++seen;
      if (h[j].kind == MoveKind::Assert && answers.contains(std::get<PropositionId>(h[j].subject))) {
        answered = true;
        break;
      }
    }
    if (!answered && (seen >= window || state.phase == Phase::Closed)) {
      return std::pair{&h[i], p};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Polarity> CommitmentStore::polarity(const PropositionId& p) const
{
  if (commitments_.contains({p, Polarity::Affirmed})) {
    return Polarity::Affirmed;
  }
  if (commitments_.contains({p, Polarity::Denied})) {
    return Polarity::Denied;
  }
  return std::nullopt;
}

bool CommitmentStore::affirms(const PropositionId& p) const
{
  return commitments_.contains({p, Polarity::Affirmed});
}

bool CommitmentStore::consistent() const
{
  for (const auto& c : commitments_) {
    if (c.polarity == Polarity::Affirmed && commitments_.contains({c.proposition, Polarity::Denied})) {
      return false;
    }
  }
  return true;
}

void CommitmentStore::commit(const PropositionId& p, Polarity polarity)
{
  remove(p);
  commitments_.insert({p, polarity});
}

void CommitmentStore::remove(const PropositionId& p)
{
  commitments_.erase({p, Polarity::Affirmed});
  commitments_.erase({p, Polarity::Denied});
}

const Participant* DialogueState::find_participant(const ParticipantId& id) const
{
  auto it = std::find_if(participants.begin(), participants.end(),
                         [&](const Participant& p) { return p.id == id; });
  return it == participants.end() ? nullptr : &*it;
}

const Participant& DialogueState::prover() const
{
  auto it = std::find_if(participants.begin(), participants.end(),
                         [](const Participant& p) { return p.role == Role::Prover; });
  return it == participants.end() ? participants.front() : *it;
}

const Participant& DialogueState::counterpart(const ParticipantId& id) const
{
  return participants[0].id == id ? participants[1] : participants[0];
}

EpistemicStance effective_stance(const Participant& p, const Participant& prover)
{
  if (p.adversarial && p.initial_stance == EpistemicStance::Unknown && p.id != prover.id) {
    return opposite(prover.initial_stance);
  }
  return p.initial_stance;
}

DialogueState new_dialogue(DialogueType type, PropositionId crucial,
                           std::vector<Participant> participants, DialogueContext context,
                           std::optional<PropositionId> settlement)
{
  if (participants.size() != 2) {
    throw DialogueError("a dialogue needs exactly two participants, got " +
                        std::to_string(participants.size()));
  }
  if (participants[0].id.empty() || participants[1].id.empty()) {
    throw DialogueError("participant ids must be non-empty");
  }
  if (participants[0].id == participants[1].id) {
    throw DialogueError("duplicate participant '" + participants[0].id + "'");
  }
  if (crucial.empty()) {
    throw DialogueError("dialogue has no crucial proposition");
  }

  DialogueState state;
  state.declared_type = type;
  state.operative_type = type;
  state.crucial = crucial;
  state.settlement = settlement;
  state.participants = std::move(participants);
  state.context = std::move(context);
  state.context.propositions.insert(crucial);
  if (settlement) {
    state.context.propositions.insert(*settlement);
  }

  const Participant& prover = state.prover();
  const Participant& other = state.counterpart(prover.id);
  const auto inferred =
      infer_initial_situation(effective_stance(prover, prover), effective_stance(other, prover));
  auto mismatch = [&](const std::string& why) {
    throw StanceMismatch("stances of " + prover.id + " (" +
                         std::string(to_string(prover.initial_stance)) + ") and " + other.id + " (" +
                         std::string(to_string(other.initial_stance)) + ") do not fit " +
                         std::string(to_string(type)) + ": " + why);
  };
  const auto* situation = std::get_if<InitialSituation>(&inferred);
  if (situation == nullptr) {
    mismatch("no dispute");
  }
  DialogueType cell{};
  try {
    cell = classify_dialogue(*situation, goal_of(type));
  } catch (const UndefinedCell& e) {
    mismatch(e.what());
  }
  auto bases = base_types(type);
  const bool fits = cell == type || std::find(bases.begin(), bases.end(), cell) != bases.end();
  if (!fits) {
    mismatch("situation classifies as " + std::string(to_string(cell)));
  }
  if (type == DialogueType::Pedagogical &&
      situation->direction() != AsymmetryDirection::InterlocutorLacks) {
    mismatch("a pedagogical dialogue needs the prover to hold the information");
  }

  for (const auto& p : state.participants) {
    CommitmentStore store(p.id);
    if (p.initial_stance != EpistemicStance::Unknown) {
      store.commit(crucial, polarity_of(p.initial_stance));
    }
    state.stores.emplace(p.id, std::move(store));
  }
  return state;
}

std::optional<std::string> check_move(const DialogueState& state, const Move& move)
{
  if (state.phase == Phase::Closed) {
    return "move-after-close";
  }
  if (move.turn != state.next_turn()) {
    return "turn-out-of-order";
  }
  if (state.find_participant(move.speaker) == nullptr) {
    return "unknown-speaker";
  }
  const bool names_type = std::holds_alternative<DialogueType>(move.subject);
  if (names_type != (move.kind == MoveKind::DeclareShift)) {
    return "malformed-subject";
  }
  if (names_type) {
    if (std::get<DialogueType>(move.subject) == state.operative_type) {
      return "shift-to-same-type";
    }
    return std::nullopt;
  }

  const auto& p = std::get<PropositionId>(move.subject);
  if (!state.context.propositions.contains(p)) {
    return "unknown-proposition";
  }
  const CommitmentStore& own = state.stores.at(move.speaker);
  switch (move.kind) {
    case MoveKind::Challenge:
      if (own.affirms(p)) {
        return "challenge-own-assertion";
      }
      if (!others_hold(state, move.speaker, p, false)) {
        return "challenge-without-commitment";
      }
      break;
    case MoveKind::Concede:
      if (own.affirms(p)) {
        return "concede-already-committed";
      }
      if (!others_hold(state, move.speaker, p, true)) {
        return "concede-without-assertion";
      }
      break;
    case MoveKind::Retract:
      if (state.operative_type == DialogueType::Inquiry) {
        return "retract-forbidden-in-inquiry";
      }
      if (!own.holds(p)) {
        return "retract-without-commitment";
      }
      break;
    case MoveKind::Offer:
      if (state.operative_type == DialogueType::Persuasion) {
        return "offer-move-in-persuasion";
      }
      break;
    case MoveKind::Threat:
      if (state.operative_type != DialogueType::Negotiation) {
        return "threat-move-outside-negotiation";
      }
      break;
    case MoveKind::Assert:
    case MoveKind::Question:
    case MoveKind::Close:
    case MoveKind::Propose:
    case MoveKind::DeclareShift:
      break;
  }
  return std::nullopt;
}

DialogueState apply_move(const DialogueState& state, const Move& move)
{
  if (auto rule = check_move(state, move)) {
    throw ProtocolViolation(*rule, *rule + " at " + describe(move));
  }
  DialogueState next = state;
  switch (move.kind) {
    case MoveKind::Assert:
    case MoveKind::Concede:
      next.stores.at(move.speaker).commit(std::get<PropositionId>(move.subject), Polarity::Affirmed);
      break;
    case MoveKind::Retract:
      next.stores.at(move.speaker).remove(std::get<PropositionId>(move.subject));
      break;
    case MoveKind::DeclareShift:
      next.operative_type = std::get<DialogueType>(move.subject);
      break;
    case MoveKind::Close:
      next.phase = Phase::Closed;
      break;
    case MoveKind::Challenge:
    case MoveKind::Question:
    case MoveKind::Propose:
    case MoveKind::Offer:
    case MoveKind::Threat:
      break;
  }
  next.history.push_back(move);
  return next;
}

std::vector<MoveKind> legal_moves(const DialogueState& state, const ParticipantId& speaker)
{
  std::vector<MoveKind> out;
  if (state.phase == Phase::Closed || state.find_participant(speaker) == nullptr) {
    return out;
  }
  for (MoveKind kind : kAllMoveKinds) {
    Move move{state.next_turn(), speaker, kind, PropositionId{}};
    bool ok = false;
    if (kind == MoveKind::DeclareShift) {
      for (DialogueType t : kAllDialogueTypes) {
        move.subject = t;
        if (!check_move(state, move)) {
          ok = true;
          break;
        }
      }
    } else {
      for (const auto& p : state.context.propositions) {
        move.subject = p;
        if (!check_move(state, move)) {
          ok = true;
          break;
        }
      }
    }
    if (ok) {
      out.push_back(kind);
    }
  }
  return out;
}

EpistemicStance implied_stance(const CommitmentStore& store, const PropositionId& p)
{
  auto pol = store.polarity(p);
  if (!pol) {
    return EpistemicStance::Unknown;
  }
  return *pol == Polarity::Affirmed ? EpistemicStance::True : EpistemicStance::False;
}

GoalVerdict goal_achieved(const DialogueState& state, int answer_window)
{
  const PropositionId& p = state.crucial;
  const Participant& prover = state.prover();
  const Participant& other = state.counterpart(prover.id);

  switch (state.declared_type) {
    case DialogueType::Inquiry: {
      std::optional<Polarity> shared;
      for (const auto& [owner, store] : state.stores) {
        auto pol = store.polarity(p);
        if (!pol || (shared && *shared != *pol)) {
          return {false, "participants do not share a position on '" + p + "'"};
        }
        shared = pol;
      }
      return {true, "all participants " +
                        std::string(*shared == Polarity::Affirmed ? "endorse" : "reject") + " '" +
                        p + "'"};
    }
    case DialogueType::Persuasion: {
      if (auto open = unanswered_challenge(state, answer_window)) {
        return {false, "unanswered challenge of '" + open->second + "' at turn " +
                           std::to_string(open->first->turn)};
      }
      EpistemicStance position = prover.initial_stance;
      if (position == EpistemicStance::Unknown) {
        position = opposite(effective_stance(other, prover));
      }
      const Polarity wanted = polarity_of(position);
      if (state.stores.at(other.id).polarity(p) == wanted) {
        return {true, "dissenting party '" + other.id + "' now holds the proposer's position on '" +
                          p + "'"};
      }
      return {false, "dissenting party '" + other.id + "' not persuaded of '" + p + "'"};
    }
    case DialogueType::InformationSeeking:
    case DialogueType::Pedagogical: {
      const Participant* seeker = nullptr;
      const Participant* source = nullptr;
      for (const auto& part : state.participants) {
        if (effective_stance(part, prover) == EpistemicStance::Unknown) {
          seeker = &part;
        } else {
          source = &part;
        }
      }
      if (seeker == nullptr || source == nullptr) {
        return {false, "no information asymmetry on '" + p + "'"};
      }
      const Polarity wanted = polarity_of(source->initial_stance);
      if (state.stores.at(seeker->id).polarity(p) == wanted) {
        return {true, "'" + seeker->id + "' has obtained '" + p + "'"};
      }
      return {false, "'" + seeker->id + "' has not obtained '" + p + "'"};
    }
    case DialogueType::Deliberation:
    case DialogueType::Negotiation: {
      if (!state.settlement) {
        return {false, "no settlement proposition designated"};
      }
      for (const auto& [owner, store] : state.stores) {
        if (!store.affirms(*state.settlement)) {
          return {false, "settlement '" + *state.settlement + "' not affirmed by '" + owner + "'"};
        }
      }
      return {true, "settlement '" + *state.settlement + "' jointly affirmed"};
    }
    case DialogueType::Eristic:
    case DialogueType::Debate: {
      for (const auto& [owner, store] : state.stores) {
        if (!store.holds(p)) {
          return {false, "position of '" + owner + "' on '" + p + "' not explicit"};
        }
      }
      return {true, "both positions on '" + p + "' explicit: deeper conflict revealed"};
    }
  }
  return {false, "unknown dialogue type"};
}

ReplayResult replay_transcript(const DialogueScript& script, const DialogueContext& context)
{
  ReplayResult result{new_dialogue(script.type, script.crucial, script.participants, context,
                                   script.settlement),
                      std::nullopt};
  for (size_t i = 0; i < script.moves.size(); ++i) {
    const Move& move = script.moves[i];
    if (auto rule = check_move(result.state, move)) {
      result.violation = ReplayViolation{move.turn, i, *rule, *rule + " at " + describe(move)};
      break;
    }
    result.state = apply_move(result.state, move);
  }
  return result;
}

std::string_view to_string(Role role)
{
  switch (role) {
    case Role::Prover:
      return "prover";
    case Role::Interlocutor:
      return "interlocutor";
    case Role::Neutral:
      return "neutral";
  }
  return "?";
}

std::string_view to_string(MoveKind kind)
{
  switch (kind) {
    case MoveKind::Assert:
      return "assert";
    case MoveKind::Challenge:
      return "challenge";
    case MoveKind::Question:
      return "question";
    case MoveKind::Concede:
      return "concede";
    case MoveKind::Retract:
      return "retract";
    case MoveKind::DeclareShift:
      return "shift";
    case MoveKind::Close:
      return "close";
    case MoveKind::Propose:
      return "propose";
    case MoveKind::Offer:
      return "offer";
    case MoveKind::Threat:
      return "threat";
  }
  return "?";
}

std::string_view to_string(Polarity polarity)
{
  return polarity == Polarity::Affirmed ? "affirmed" : "denied";
}

std::string_view to_string(Phase phase) { return phase == Phase::Open ? "open" : "closed"; }

std::optional<MoveKind> move_kind_from_string(std::string_view word)
{
  for (MoveKind k : kAllMoveKinds) {
    if (to_string(k) == word) {
      return k;
    }
  }
  return std::nullopt;
}

}  // namespace proofarg
