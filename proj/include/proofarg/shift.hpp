// proofarg/shift.hpp - detection and assessment of dialogue-type shifts
#pragma once

#include <set>
#include <string>
#include <vector>

#include "proofarg/dialogue.hpp"

namespace proofarg
{

struct Segment
{
  int start_turn = 1;
  int end_turn = 1;
  DialogueType operative_type = DialogueType::Inquiry;
  bool declared = false;       // opened by DeclareShift
  bool gradual_onset = false;  // undeclared, with foreign moves leaking in before the boundary

  friend bool operator==(const Segment&, const Segment&) = default;
};

enum class ShiftKind { Gradual, Abrupt };
enum class ShiftMode { Replacement, Embedding };
enum class Licitness { Licit, Illicit };

struct LicitnessVerdict
{
  Licitness licitness = Licitness::Licit;
  std::string reason;
};

struct Shift
{
  int at_turn = 0;
  DialogueType from_type = DialogueType::Inquiry;
  DialogueType to_type = DialogueType::Inquiry;
  ShiftKind kind = ShiftKind::Abrupt;
  ShiftMode mode = ShiftMode::Replacement;
  bool declared = false;
  LicitnessVerdict verdict;
};

inline constexpr int kDefaultShiftWindow = 3;

/// Types under which a move kind is native. Base moves are native
/// everywhere; proposals belong to the settlement-seeking types, offers and
/// threats to negotiation.
std::set<DialogueType> native_types(MoveKind kind);

/// Cuts the history into segments at DeclareShift moves and at undeclared
/// signature changes: `window` consecutive moves none of which is native to
/// the operative type, but all native to some other type. Segments partition
/// [1, last turn]; an empty history yields no segments.
std::vector<Segment> segment_transcript(const DialogueState& state, int window = kDefaultShiftWindow);

/// One shift per adjacent pair of segments with differing types.
std::vector<Shift> detect_shifts(const std::vector<Segment>& segments);

/// Undeclared moves from a resolution-seeking type to a settlement or
/// accommodation type are illicit; declared shifts and strengthening shifts
/// are always licit.
LicitnessVerdict judge_licitness(const Shift& shift, bool declared);

std::string_view to_string(ShiftKind kind);
std::string_view to_string(ShiftMode mode);
std::string_view to_string(Licitness licitness);

}  // namespace proofarg
