// proofarg/shift.cpp - dialogue-type shift detection
#include "proofarg/shift.hpp"

#include <algorithm>
#include <stdexcept>

namespace proofarg
{

namespace
{

bool native(MoveKind kind, DialogueType type) { return native_types(kind).contains(type); }

// Prefer a type arising from the same initial situation as the one left behind.
DialogueType choose_target(const std::set<DialogueType>& candidates, DialogueType current)
{
  for (DialogueType t : candidates) {
    if (situation_of(t) == situation_of(current)) {
      return t;
    }
  }
  return *candidates.begin();
}

std::string grade_word(MainGoal goal)
{
  return goal == MainGoal::PracticalSettlement ? "settlement" : "accommodation";
}

}  // namespace

std::set<DialogueType> native_types(MoveKind kind)
{
  std::set<DialogueType> all(std::begin(kAllDialogueTypes), std::end(kAllDialogueTypes));
  switch (kind) {
    case MoveKind::Propose:
      return {DialogueType::Deliberation, DialogueType::Negotiation};
    case MoveKind::Offer:
    case MoveKind::Threat:
      return {DialogueType::Negotiation};
    case MoveKind::Retract:
      all.erase(DialogueType::Inquiry);
      return all;
    default:
      return all;
  }
}

std::vector<Segment> segment_transcript(const DialogueState& state, int window)
{
  if (window < 1) {
    throw std::invalid_argument("shift window must be at least 1");
  }
  const auto& h = state.history;
  std::vector<Segment> out;
  if (h.empty()) {
    return out;
  }

  Segment current{h.front().turn, h.front().turn, state.declared_type, false, false};
  size_t segment_begin = 0;  // index of the current segment's first move

  auto open = [&](size_t index, DialogueType type, bool declared, bool gradual) {
    if (index > segment_begin) {
      current.end_turn = h[index - 1].turn;
      out.push_back(current);
      current = Segment{h[index].turn, h[index].turn, type, declared, gradual};
    } else {
      current.operative_type = type;
      current.declared = declared;
      current.gradual_onset = gradual;
    }
    segment_begin = index;
  };

  for (size_t i = 0; i < h.size(); ++i) {
    const Move& m = h[i];
    if (m.kind == MoveKind::DeclareShift) {
      open(i, std::get<DialogueType>(m.subject), true, false);
      continue;
    }
    const DialogueType type = current.operative_type;
    if (native(m.kind, type) || i + window > h.size()) {
      continue;
    }
    std::set<DialogueType> candidates = native_types(m.kind);
    bool run = true;
    for (size_t j = i; j < i + window && run; ++j) {
      if (h[j].kind == MoveKind::DeclareShift || native(h[j].kind, type)) {
        run = false;
        break;
      }
      std::set<DialogueType> keep;
      for (DialogueType t : native_types(h[j].kind)) {
        if (candidates.contains(t)) {
          keep.insert(t);
        }
      }
      candidates = std::move(keep);
    }
    candidates.erase(type);
    if (!run || candidates.empty()) {
      continue;
    }
    const DialogueType target = choose_target(candidates, type);
    bool gradual = false;
    const size_t lookback = i >= static_cast<size_t>(window) ? i - window : 0;
    for (size_t j = std::max(lookback, segment_begin); j < i; ++j) {
      if (native(h[j].kind, target) && !native(h[j].kind, type)) {
        gradual = true;
      }
    }
    open(i, target, false, gradual);
  }
  current.end_turn = h.back().turn;
  out.push_back(current);
  return out;
}

std::vector<Shift> detect_shifts(const std::vector<Segment>& segments)
{
  std::vector<Shift> out;
  for (size_t k = 1; k < segments.size(); ++k) {
    const Segment& prev = segments[k - 1];
    const Segment& next = segments[k];
    if (prev.operative_type == next.operative_type) {
      continue;
    }
    Shift shift;
    shift.at_turn = next.start_turn;
    shift.from_type = prev.operative_type;
    shift.to_type = next.operative_type;
    shift.declared = next.declared;
    shift.kind = (next.declared || !next.gradual_onset) ? ShiftKind::Abrupt : ShiftKind::Gradual;
    const bool resumed = std::any_of(segments.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                                     segments.end(), [&](const Segment& s) {
                                       return s.operative_type == prev.operative_type;
                                     });
    shift.mode = resumed ? ShiftMode::Embedding : ShiftMode::Replacement;
    shift.verdict = judge_licitness(shift, next.declared);
    out.push_back(std::move(shift));
  }
  return out;
}

LicitnessVerdict judge_licitness(const Shift& shift, bool declared)
{
  if (declared) {
    return {Licitness::Licit, "declared shift"};
  }
  const MainGoal from = goal_of(shift.from_type);
  const MainGoal to = goal_of(shift.to_type);
  if (goal_grade(to) > goal_grade(from)) {
    return {Licitness::Licit, "goal grade strengthens"};
  }
  if (goal_grade(to) == goal_grade(from)) {
    return {Licitness::Licit, "goal grade preserved"};
  }
  if (from == MainGoal::StableResolution) {
    return {Licitness::Illicit, grade_word(to) + "-grade conclusion presented in " +
                                    std::string(to_string(shift.from_type)) + " context"};
  }
  return {Licitness::Licit, "goal grade weakens below settlement; no resolution claimed"};
}

std::string_view to_string(ShiftKind kind)
{
  return kind == ShiftKind::Gradual ? "gradual" : "abrupt";
}

std::string_view to_string(ShiftMode mode)
{
  return mode == ShiftMode::Replacement ? "replacement" : "embedding";
}

std::string_view to_string(Licitness licitness)
{
  return licitness == Licitness::Licit ? "licit" : "illicit";
}

}  // namespace proofarg
