// Shift segmentation, detection and licitness.
#include <gtest/gtest.h>

#include <random>

#include "proofarg/shift.hpp"

using namespace proofarg;
using S = EpistemicStance;
using T = DialogueType;

namespace
{

DialogueState inquiry()
{
  DialogueContext ctx;
  ctx.propositions = {"p", "q"};
  return new_dialogue(T::Inquiry, "p",
                      {{"a", Role::Prover, S::Unknown, false}, {"b", Role::Interlocutor, S::Unknown, false}},
                      ctx);
}

// Applies moves, alternating speakers; subjects default to "q".
DialogueState play(DialogueState s, const std::vector<MoveKind>& kinds,
                   const std::map<int, T>& shifts = {})
{
  for (MoveKind k : kinds) {
    const int turn = s.next_turn();
    const std::string who = turn % 2 == 1 ? "a" : "b";
    MoveSubject subject = PropositionId("q");
    if (k == MoveKind::DeclareShift) {
      subject = shifts.at(turn);
    }
    s = apply_move(s, Move{turn, who, k, subject});
  }
  return s;
}

Segment seg(int a, int b, T t, bool declared = false)
{
  return Segment{a, b, t, declared, false};
}

constexpr auto A = MoveKind::Assert;
constexpr auto Q = MoveKind::Question;
constexpr auto P = MoveKind::Propose;
constexpr auto D = MoveKind::DeclareShift;
constexpr auto O = MoveKind::Offer;

}  // namespace

TEST(NativeTypes, Table)
{
  EXPECT_EQ(native_types(P), (std::set<T>{T::Deliberation, T::Negotiation}));
  EXPECT_EQ(native_types(O), std::set<T>{T::Negotiation});
  EXPECT_EQ(native_types(MoveKind::Threat), std::set<T>{T::Negotiation});
  EXPECT_FALSE(native_types(MoveKind::Retract).contains(T::Inquiry));
  EXPECT_EQ(native_types(A).size(), std::size(kAllDialogueTypes));
}

TEST(Segment, EmptyAndUniform)
{
  EXPECT_TRUE(segment_transcript(inquiry()).empty());
  const auto s = play(inquiry(), {A, Q, A, Q, A, Q});
  EXPECT_EQ(segment_transcript(s), (std::vector<Segment>{seg(1, 6, T::Inquiry)}));
}

TEST(Segment, DeclaredShifts)
{
  const auto s =
      play(inquiry(), {A, Q, A, Q, D, P, A, P, D, A, Q, A}, {{5, T::Deliberation}, {9, T::Inquiry}});
  EXPECT_EQ(segment_transcript(s),
            (std::vector<Segment>{seg(1, 4, T::Inquiry), seg(5, 8, T::Deliberation, true),
                                  seg(9, 12, T::Inquiry, true)}));
}

TEST(Segment, UndeclaredDriftStartsAtFirstForeignMove)
{
  const auto s = play(inquiry(), {A, Q, A, P, P, P, P});
  const auto segs = segment_transcript(s);
  ASSERT_EQ(segs.size(), 2u);
  EXPECT_EQ(segs[0], seg(1, 3, T::Inquiry));
  EXPECT_EQ(segs[1], seg(4, 7, T::Deliberation));
  const auto shifts = detect_shifts(segs);
  ASSERT_EQ(shifts.size(), 1u);
  EXPECT_EQ(shifts[0].at_turn, 4);
  EXPECT_EQ(shifts[0].kind, ShiftKind::Abrupt);
  EXPECT_EQ(shifts[0].mode, ShiftMode::Replacement);
  EXPECT_EQ(shifts[0].verdict.licitness, Licitness::Illicit);
}

TEST(Segment, ShortRunsAreNotShifts)
{
  const auto s = play(inquiry(), {A, P, P, A, P, Q});
  EXPECT_EQ(segment_transcript(s).size(), 1u);
  // A window of one reacts to every foreign move.
  EXPECT_GT(segment_transcript(s, 1).size(), 1u);
  EXPECT_THROW(segment_transcript(s, 0), std::invalid_argument);
}

TEST(Segment, LeakBeforeBoundaryMakesShiftGradual)
{
  const auto s = play(inquiry(), {A, P, A, P, P, P});
  const auto segs = segment_transcript(s);
  ASSERT_EQ(segs.size(), 2u);
  EXPECT_EQ(segs[1].start_turn, 4);
  EXPECT_TRUE(segs[1].gradual_onset);
  EXPECT_EQ(detect_shifts(segs).at(0).kind, ShiftKind::Gradual);
}

TEST(Segment, OffersPointToNegotiation)
{
  const auto s = play(inquiry(), {A, Q, O, O, O});
  const auto segs = segment_transcript(s);
  ASSERT_EQ(segs.size(), 2u);
  EXPECT_EQ(segs[1].operative_type, T::Negotiation);
}

TEST(Detect, EmbeddingAndReturn)
{
  const auto shifts = detect_shifts(
      {seg(1, 4, T::Inquiry), seg(5, 8, T::Deliberation), seg(9, 12, T::Inquiry)});
  ASSERT_EQ(shifts.size(), 2u);
  EXPECT_EQ(shifts[0].from_type, T::Inquiry);
  EXPECT_EQ(shifts[0].to_type, T::Deliberation);
  EXPECT_EQ(shifts[0].mode, ShiftMode::Embedding);
  EXPECT_EQ(shifts[1].at_turn, 9);
  EXPECT_EQ(shifts[1].to_type, T::Inquiry);
  EXPECT_EQ(shifts[1].verdict.licitness, Licitness::Licit);
}

TEST(Detect, Replacement)
{
  const auto shifts = detect_shifts({seg(1, 6, T::Inquiry), seg(7, 10, T::Negotiation)});
  ASSERT_EQ(shifts.size(), 1u);
  EXPECT_EQ(shifts[0].at_turn, 7);
  EXPECT_EQ(shifts[0].mode, ShiftMode::Replacement);
  EXPECT_EQ(shifts[0].verdict.licitness, Licitness::Illicit);
}

TEST(Licitness, Examples)
{
  Shift s;
  s.from_type = T::Inquiry;
  s.to_type = T::Negotiation;
  EXPECT_EQ(judge_licitness(s, false).licitness, Licitness::Illicit);
  EXPECT_EQ(judge_licitness(s, true).licitness, Licitness::Licit);
  s.from_type = T::Persuasion;
  s.to_type = T::Deliberation;
  EXPECT_EQ(judge_licitness(s, false).licitness, Licitness::Illicit);
  s.from_type = T::Negotiation;
  s.to_type = T::Inquiry;
  EXPECT_EQ(judge_licitness(s, false).licitness, Licitness::Licit);
  s.from_type = T::Deliberation;
  s.to_type = T::Eristic;
  EXPECT_EQ(judge_licitness(s, false).licitness, Licitness::Licit);
  s.from_type = T::Persuasion;
  s.to_type = T::InformationSeeking;
  EXPECT_EQ(judge_licitness(s, false).licitness, Licitness::Licit);
}

TEST(Licitness, IllicitExactlyWhenUndeclaredAndWeakeningFromResolution)
{
  for (T from : kAllDialogueTypes) {
    for (T to : kAllDialogueTypes) {
      Shift s;
      s.from_type = from;
      s.to_type = to;
      EXPECT_EQ(judge_licitness(s, true).licitness, Licitness::Licit);
      const bool expect_illicit =
          goal_of(from) == MainGoal::StableResolution && goal_of(to) != MainGoal::StableResolution;
      EXPECT_EQ(judge_licitness(s, false).licitness == Licitness::Illicit, expect_illicit)
          << to_string(from) << " -> " << to_string(to);
    }
  }
}

TEST(Detect, CountsAndModesOnGeneratedLists)
{
  std::mt19937 rng(7);
  const T pool[] = {T::Inquiry, T::Persuasion, T::Deliberation, T::Negotiation};
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = static_cast<int>(rng() % 6);  // 0..5 segments
    std::vector<Segment> segs;
    int turn = 1;
    for (int i = 0; i < n; ++i) {
      const int len = 1 + static_cast<int>(rng() % 3);
      segs.push_back(Segment{turn, turn + len - 1, pool[rng() % 4], rng() % 2 == 0, rng() % 2 == 0});
      turn += len;
    }
    const auto shifts = detect_shifts(segs);
    size_t expected = 0;
    for (size_t k = 1; k < segs.size(); ++k) {
      if (segs[k].operative_type != segs[k - 1].operative_type) {
        ++expected;
      }
    }
    ASSERT_EQ(shifts.size(), expected);
    for (const auto& sh : shifts) {
      ASSERT_NE(sh.from_type, sh.to_type);
      auto at = std::find_if(segs.begin(), segs.end(),
                             [&](const Segment& sg) { return sg.start_turn == sh.at_turn; });
      ASSERT_NE(at, segs.end());
      const bool resumed = std::any_of(at + 1, segs.end(), [&](const Segment& sg) {
        return sg.operative_type == sh.from_type;
      });
      EXPECT_EQ(sh.mode == ShiftMode::Embedding, resumed);
      EXPECT_EQ(sh.verdict.licitness, judge_licitness(sh, at->declared).licitness);
      if (at->declared) {
        EXPECT_EQ(sh.kind, ShiftKind::Abrupt);
        EXPECT_EQ(sh.verdict.licitness, Licitness::Licit);
      }
    }
  }
}

TEST(Segment, PartitionOnRandomTranscripts)
{
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    DialogueState s = inquiry();
    const int length = 1 + static_cast<int>(rng() % 14);
    for (int i = 0; i < length && s.phase == Phase::Open; ++i) {
      const std::string who = rng() % 2 == 0 ? "a" : "b";
      std::vector<Move> options;
      for (MoveKind k : legal_moves(s, who)) {
        if (k == MoveKind::Close) {
          continue;
        }
        if (k == MoveKind::DeclareShift) {
          for (T t : kAllDialogueTypes) {
            options.push_back({s.next_turn(), who, k, t});
          }
        } else {
          for (const char* p : {"p", "q"}) {
            options.push_back({s.next_turn(), who, k, PropositionId(p)});
          }
        }
      }
      std::shuffle(options.begin(), options.end(), rng);
      for (const auto& m : options) {
        if (!check_move(s, m)) {
          s = apply_move(s, m);
          break;
        }
      }
    }
    const int window = 1 + static_cast<int>(rng() % 4);
    const auto segs = segment_transcript(s, window);
    if (s.history.empty()) {
      EXPECT_TRUE(segs.empty());
      continue;
    }
    ASSERT_FALSE(segs.empty());
    EXPECT_EQ(segs.front().start_turn, 1);
    EXPECT_EQ(segs.back().end_turn, s.history.back().turn);
    for (size_t k = 0; k < segs.size(); ++k) {
      EXPECT_LE(segs[k].start_turn, segs[k].end_turn);
      if (k > 0) {
        EXPECT_EQ(segs[k].start_turn, segs[k - 1].end_turn + 1);
      }
    }
    EXPECT_EQ(segment_transcript(s, window), segs);
  }
}
