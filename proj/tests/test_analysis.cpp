// Document-level analysis and its JSON report.
#include <gtest/gtest.h>

#include "proofarg/analysis.hpp"
#include "support.hpp"

using namespace proofarg;
using proofarg::testing::load_corpus;
using proofarg::testing::parse_or_throw;

namespace
{

const DialogueAnalysis& find(const DocumentAnalysis& a, const std::string& id)
{
  for (const auto& d : a.dialogues) {
    if (d.dialogue_id == id) {
      return d;
    }
  }
  throw std::runtime_error("no dialogue " + id);
}

}  // namespace

TEST(Analysis, WilesAttemptIsNotAProof)
{
  const auto a = analyze_document(load_corpus("wiles_attempt.arg"));
  EXPECT_FALSE(a.has_violation());
  const auto& lectures = find(a, "lectures");
  EXPECT_EQ(lectures.outcome(), Outcome::Success);
  EXPECT_EQ(lectures.classification.kind, ProofDialogueKind::ProofAsInquiry);
  const auto& ref = find(a, "refereeing");
  EXPECT_EQ(ref.outcome(), Outcome::Failure);
  EXPECT_EQ(ref.classification.kind, ProofDialogueKind::ProofAsPersuasion);
  EXPECT_EQ(ref.goal.reason, "unanswered challenge of 'modularity' at turn 2");
  ASSERT_EQ(a.proofs.size(), 1u);
  EXPECT_EQ(a.proofs[0].status.kind, ProofStatusKind::NotProof);
  EXPECT_EQ(a.proofs[0].outcomes,
            (OutcomeMap{{ProofDialogueKind::ProofAsInquiry, Outcome::Success},
                        {ProofDialogueKind::ProofAsPersuasion, Outcome::Failure}}));
}

TEST(Analysis, KempeAcceptanceIsNotAProof)
{
  const auto a = analyze_document(load_corpus("kempe_acceptance.arg"));
  EXPECT_EQ(find(a, "reception").outcome(), Outcome::Success);
  EXPECT_EQ(find(a, "teaching").classification.kind, ProofDialogueKind::ProofAsPedagogical);
  EXPECT_EQ(find(a, "heawood").outcome(), Outcome::Failure);
  EXPECT_EQ(a.proofs.at(0).status.kind, ProofStatusKind::NotProof);
}

TEST(Analysis, ShiftFixtureHandTraced)
{
  const auto a = analyze_document(load_corpus("shift_illicit.arg"));
  const auto& drift = find(a, "theoretical-drift");
  EXPECT_EQ(drift.segments,
            (std::vector<Segment>{{1, 3, DialogueType::Inquiry, false, false},
                                  {4, 7, DialogueType::Deliberation, false, false}}));
  ASSERT_EQ(drift.shifts.size(), 1u);
  const Shift& s = drift.shifts[0];
  EXPECT_EQ(s.at_turn, 4);
  EXPECT_EQ(s.kind, ShiftKind::Abrupt);
  EXPECT_EQ(s.mode, ShiftMode::Replacement);
  EXPECT_EQ(s.verdict.licitness, Licitness::Illicit);
  EXPECT_EQ(s.verdict.reason, "settlement-grade conclusion presented in inquiry context");
  EXPECT_FALSE(drift.goal.achieved);

  const auto& adv = find(a, "advertised-speculation");
  EXPECT_EQ(adv.segments,
            (std::vector<Segment>{{1, 2, DialogueType::Inquiry, false, false},
                                  {3, 6, DialogueType::Deliberation, true, false},
                                  {7, 10, DialogueType::Inquiry, true, false}}));
  ASSERT_EQ(adv.shifts.size(), 2u);
  EXPECT_EQ(adv.shifts[0].mode, ShiftMode::Embedding);
  EXPECT_EQ(adv.shifts[0].verdict.reason, "declared shift");
  EXPECT_EQ(adv.shifts[1].mode, ShiftMode::Replacement);
  EXPECT_EQ(adv.shifts[1].verdict.licitness, Licitness::Licit);
  EXPECT_TRUE(adv.goal.achieved);
}

TEST(Analysis, ReportJson)
{
  const auto doc = load_corpus("shift_illicit.arg");
  const auto j = to_json(analyze_document(doc));
  const auto& d = j["dialogues"][0];
  EXPECT_EQ(d["dialogue_id"], "theoretical-drift");
  EXPECT_EQ(d["outcome"], "failure");
  EXPECT_EQ(d["final_phase"], "closed");
  EXPECT_EQ(d["shifts"][0]["licitness"], "illicit");
  EXPECT_EQ(d["shifts"][0]["from"], "inquiry");
  EXPECT_EQ(d["shifts"][0]["to"], "deliberation");
  EXPECT_EQ(d["stores"]["theorist"],
            nlohmann::json::parse(R"([["conj","affirmed"],["heuristic","affirmed"]])"));
  EXPECT_TRUE(d["stores"]["colleague"].empty());
  EXPECT_TRUE(d["violations"].empty());
  EXPECT_EQ(d["proof_dialogue"]["kind"], "proof_as_inquiry");
  EXPECT_TRUE(j["proofs"].empty());

  // Byte-stable across runs and independent re-parses.
  const std::string first = dump_report(j);
  EXPECT_EQ(dump_report(to_json(analyze_document(load_corpus("shift_illicit.arg")))), first);
  EXPECT_EQ(dump_report(to_json(analyze_document(parse_or_throw(markup::serialize(doc))))), first);
}

TEST(Analysis, ViolationAndHeaderErrors)
{
  const auto doc = parse_or_throw(
      proofarg::testing::read_text(proofarg::testing::data_path("illegal_move.arg")));
  const auto a = analyze_document(doc);
  ASSERT_TRUE(a.has_violation());
  const auto j = to_json(a.dialogues[0]);
  EXPECT_EQ(j["violations"][0]["turn"], 2);
  EXPECT_EQ(j["violations"][0]["rule"], "retract-forbidden-in-inquiry");
  EXPECT_EQ(j["outcome"], "failure");

  const auto bad = parse_or_throw(
      "prop p: \"P\"\n"
      "dialogue \"d\" { type: inquiry participants: a, b stance a p: true stance b p: false }\n");
  const auto diags = validate_document(bad);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].diagnostic.rule, "stance-mismatch");
  EXPECT_EQ(diags[0].span.line, 2u);
  const auto ba = analyze_document(bad);
  EXPECT_TRUE(ba.has_violation());
  EXPECT_EQ(to_json(ba.dialogues[0])["violations"][0]["turn"], 0);
}

TEST(Analysis, ProofWithUnclassifiableDialogue)
{
  const auto doc = parse_or_throw(
      "prop p: \"P\"\n"
      "dialogue \"chat\" { type: deliberation participants: a, b stance a p: true stance b p: unknown }\n"
      "dialogue \"inq\" { type: inquiry participants: a, b stance a p: unknown stance b p: unknown "
      "move 1 a assert p move 2 b concede p }\n"
      "proof \"x\" { dialogues: chat, inq }\n");
  const auto a = analyze_document(doc);
  ASSERT_EQ(a.proofs.size(), 1u);
  EXPECT_EQ(a.proofs[0].outcomes.size(), 1u);
  const auto& notes = a.proofs[0].status.diagnostics;
  EXPECT_TRUE(std::any_of(notes.begin(), notes.end(), [](const std::string& n) {
    return n.find("\"chat\" fits no proof-dialogue row") != std::string::npos;
  }));
}

TEST(Classification, CorpusDialogues)
{
  const auto doc = load_corpus("wiles_attempt.arg");
  const auto j = classification_json(*doc.find_dialogue("refereeing"));
  EXPECT_EQ(j["initial_situation"]["kind"], "conflict");
  EXPECT_EQ(j["initial_situation"]["irreconcilable"], false);
  EXPECT_EQ(j["survey_cell"], "persuasion");
  EXPECT_EQ(j["proof_dialogue"]["kind"], "proof_as_persuasion");
  const auto teach = classification_json(*load_corpus("kempe_acceptance.arg").find_dialogue("teaching"));
  EXPECT_EQ(teach["initial_situation"]["direction"], "interlocutor_lacks");
  EXPECT_EQ(teach["survey_cell"], "information_seeking");
}

TEST(Diagnostics, Format)
{
  LocatedDiagnostic d{{4, 1, 40, 8}, {Severity::Error, "missing-warrant", "a", "warrant", "missing warrant"}};
  EXPECT_EQ(format_diagnostic("f.arg", d), "f.arg:4:1: error: missing warrant (argument \"a\")");
}

TEST(Report, TypologyJsonShape)
{
  const auto t = typology_json();
  EXPECT_EQ(t["dialogue_survey"].size(), 9u);
  EXPECT_EQ(t["dialogue_profiles"].size(), std::size(kAllDialogueTypes));
  EXPECT_EQ(t["proof_dialogues"].size(), 7u);
  EXPECT_EQ(dump_report(t), dump_report(typology_json()));
}
