// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "coherence.hpp"
#include "expected_tables.hpp"
#include "proofarg/analysis.hpp"
#include "support.hpp"

#ifndef PROOFARG_CLI
#error "PROOFARG_CLI must name the command-line binary"
#endif

using namespace proofarg;
using namespace proofarg::testing;
using K = ProofDialogueKind;
using S = EpistemicStance;

namespace
{

// Collects the reasons a criterion failed.
struct Check
{
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what)
  {
    if (!ok) {
      problems.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void table1(Check& c)
{
  int defined = 0;
  int gaps = 0;
  for (int g = 0; g < 3; ++g) {
    for (int s = 0; s < 3; ++s) {
      const auto& want = kSurvey[g][s];
      try {
        const DialogueType got = classify_dialogue(kSurveySituations[s], kSurveyGoals[g]);
        c.expect(want && got == *want, "cell " + std::to_string(g) + "," + std::to_string(s) +
                                           " gave " + std::string(to_string(got)));
        ++defined;
      } catch (const UndefinedCell&) {
        c.expect(!want, "cell " + std::to_string(g) + "," + std::to_string(s) + " rejected");
        ++gaps;
      }
    }
  }
  c.expect(defined == 6, "defined cells: " + std::to_string(defined));
  c.expect(gaps == 3, "empty cells: " + std::to_string(gaps));
}

void table2(Check& c)
{
  std::set<DialogueType> seen;
  for (const auto& r : kProfileRows) {
    const auto& p = dialogue_profile(r.type);
    const std::string_view got[] = {p.name, p.initial_situation_text, p.individual_goals_text,
                                    p.collective_goal_text, p.benefits_text};
    for (int i = 0; i < 5; ++i) {
      c.expect(got[i] == r.cells[i], std::string(r.cells[0]) + ": '" + std::string(got[i]) + "'");
    }
    seen.insert(r.type);
  }
  c.expect(seen.size() == 8, "rows: " + std::to_string(seen.size()));
}

void table3(Check& c)
{
  int suspects = 0;
  for (const auto& r : kProofRows) {
    const auto& p = proof_dialogue_profile(r.kind);
    const std::string_view got[] = {p.name, p.initial_situation_text, p.main_goal_text,
                                    p.prover_goal_text, p.interlocutor_goal_text};
    for (int i = 0; i < 5; ++i) {
      c.expect(got[i] == r.cells[i], std::string(r.cells[0]) + ": '" + std::string(got[i]) + "'");
    }
    c.expect(p.suspect == r.suspect, std::string(r.cells[0]) + ": suspect flag");
    suspects += p.suspect ? 1 : 0;
  }
  c.expect(suspects == 4, "suspect rows: " + std::to_string(suspects));

  const std::pair<InitialSituation, int> grid[] = {
      {InitialSituation::conflict(false), 0},
      {InitialSituation::conflict(true), 1},
      {InitialSituation::open_mindedness(), 2},
      {InitialSituation::info_asymmetry(AsymmetryDirection::InterlocutorLacks), 3},
      {InitialSituation::info_asymmetry(AsymmetryDirection::ProverLacks), 4},
  };
  // expected[situation][goal]
  const std::optional<K> expected[5][3] = {
      {K::ProofAsPersuasion, K::SuspectNegotiation, std::nullopt},
      {std::nullopt, std::nullopt, K::SuspectEristic},
      {K::ProofAsInquiry, K::SuspectDeliberation, std::nullopt},
      {K::ProofAsPedagogical, std::nullopt, std::nullopt},
      {K::SuspectInfoSeeking, std::nullopt, std::nullopt},
  };
  std::set<K> covered;
  for (const auto& [situation, row] : grid) {
    for (int g = 0; g < 3; ++g) {
      const auto& want = expected[row][g];
      try {
        const K got = classify_proof_dialogue(situation, kSurveyGoals[g]).kind;
        c.expect(want && got == *want, "grid " + std::to_string(row) + "," + std::to_string(g));
        covered.insert(got);
      } catch (const UndefinedCell&) {
        c.expect(!want, "grid " + std::to_string(row) + "," + std::to_string(g) + " rejected");
      }
    }
  }
  c.expect(covered.size() == 7, "rows reached: " + std::to_string(covered.size()));
}

bool is_proof(ProofStatusKind k) { return k == ProofStatusKind::Proof || k == ProofStatusKind::IdealProof; }

void status_rules(Check& c)
{
  const Outcome values[] = {Outcome::Success, Outcome::Failure, Outcome::NotAttempted};
  int maps = 0;
  for (int code = 0; code < 2187; ++code) {
    OutcomeMap m;
    int rest = code;
    for (K k : kAllProofDialogueKinds) {
      m[k] = values[rest % 3];
      rest /= 3;
    }
    ++maps;
    const bool proof = is_proof(assess_proof_status(m).kind);
    if (m[K::ProofAsPersuasion] == Outcome::Failure && proof) {
      c.expect(false, "persuasion failure yields proof at map " + std::to_string(code));
    }
    if (m[K::ProofAsInquiry] == Outcome::Success && m[K::ProofAsPersuasion] == Outcome::Success &&
        !proof) {
      c.expect(false, "inquiry and persuasion success is not proof at map " + std::to_string(code));
    }
    for (Outcome ped : values) {
      OutcomeMap flipped = m;
      flipped[K::ProofAsPedagogical] = ped;
      if (is_proof(assess_proof_status(flipped).kind) != proof) {
        c.expect(false, "pedagogical outcome crosses the proof boundary at map " + std::to_string(code));
      }
    }
  }
  c.expect(maps == 2187, "maps: " + std::to_string(maps));
}

void stance_inference(Check& c)
{
  const S stances[] = {S::True, S::False, S::Unknown};
  int pairs = 0;
  for (S p : stances) {
    for (S q : stances) {
      ++pairs;
      const auto got = infer_initial_situation(p, q);
      const std::string label = std::string(to_string(p)) + "/" + std::string(to_string(q));
      const bool pk = p != S::Unknown;
      const bool qk = q != S::Unknown;
      if (pk && qk && p == q) {
        c.expect(std::holds_alternative<NoDispute>(got), label + " should show no dispute");
      } else if (!std::holds_alternative<InitialSituation>(got)) {
        c.expect(false, label + " gave no situation");
      } else {
        const auto& s = std::get<InitialSituation>(got);
        if (pk && qk) {
          c.expect(s == InitialSituation::conflict(), label + " should be a conflict");
        } else if (!pk && !qk) {
          c.expect(s == InitialSituation::open_problem(), label + " should be an open problem");
        } else {
          c.expect(s == InitialSituation::info_asymmetry(pk ? AsymmetryDirection::InterlocutorLacks
                                                            : AsymmetryDirection::ProverLacks),
                   label + " should be an asymmetry");
        }
      }
    }
  }
  c.expect(pairs == 9, "pairs");
}

void corpus(Check& c)
{
  for (const char* name : kCorpusFiles) {
    try {
      const auto doc = load_corpus(name);
      for (const auto& d : validate_document(doc)) {
        c.expect(d.diagnostic.severity != Severity::Error,
                 std::string(name) + ": " + d.diagnostic.message);
      }
      const auto again = parse_or_throw(markup::serialize(doc));
      c.expect(again == doc, std::string(name) + ": round-trip changed the document");
    } catch (const std::exception& e) {
      c.expect(false, std::string(name) + ": " + e.what());
    }
  }
  try {
    const auto alcolea = load_corpus("four_colour_alcolea.arg").graph.arguments.at("alcolea-four-colour");
    c.expect(alcolea.data.size() == 3 && alcolea.warrant && alcolea.backing && alcolea.claim,
             "Alcolea slot counts");
    const auto alt = load_corpus("four_colour_alternative.arg").graph.arguments.begin()->second;
    c.expect(alt.qualifier && alt.qualifier->kind() == QualifierKind::AlmostCertainly,
             "alternative qualifier");
    c.expect(alt.rebuttals.size() == 2, "alternative rebuttals");
  } catch (const std::exception& e) {
    c.expect(false, e.what());
  }
}

void engine_coherence(Check& c, std::string& detail)
{
  DialogueContext ctx;
  ctx.propositions = {"p", "q"};
  const auto start = new_dialogue(
      DialogueType::Inquiry, "p",
      {{"a", Role::Prover, S::Unknown, false}, {"b", Role::Interlocutor, S::Unknown, false}}, ctx);
  const auto ex = explore(start, 4);
  detail = std::to_string(ex.states) + " states";
  c.expect(ex.states > 0, "no states");
  c.expect(ex.mismatches == 0, std::to_string(ex.mismatches) + " legality mismatches");
  c.expect(ex.inconsistent == 0, std::to_string(ex.inconsistent) + " inconsistent stores");
  c.expect(ex.unaudited == 0, std::to_string(ex.unaudited) + " stores disagree with their history");
}

std::string run_cli(const std::string& args, int& status)
{
  const std::string cmd = std::string(PROOFARG_CLI) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return "";
  }
  std::string out;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), n);
  }
  status = pclose(pipe);
  return out;
}

nlohmann::json segment(int a, int b, const char* type, bool declared)
{
  return {{"start_turn", a}, {"end_turn", b}, {"operative_type", type}, {"declared", declared}};
}

void shift_analysis(Check& c)
{
  for (const char* name : {"wiles_attempt.arg", "shift_illicit.arg"}) {
    int s1 = 0;
    int s2 = 0;
    const std::string path = "'" + corpus_path(name) + "'";
    const std::string first = run_cli("analyze --format json " + path, s1);
    const std::string second = run_cli("analyze --format json " + path, s2);
    c.expect(s1 == 0 && s2 == 0, std::string(name) + ": analyze exit status");
    c.expect(!first.empty() && first == second, std::string(name) + ": output not byte-stable");
    if (first.empty()) {
      continue;
    }
    const auto j = nlohmann::json::parse(first);
    const auto& d = j["dialogues"];
    if (std::string(name) == "wiles_attempt.arg") {
      c.expect(d[0]["segments"] == nlohmann::json::array({segment(1, 8, "inquiry", false)}),
               "lectures segments");
      c.expect(d[1]["segments"] == nlohmann::json::array({segment(1, 6, "persuasion", false)}),
               "refereeing segments");
      c.expect(d[0]["shifts"].empty() && d[1]["shifts"].empty(), "wiles shifts");
      c.expect(j["proofs"][0]["status"] == "not_proof", "wiles status");
    } else {
      c.expect(d[0]["segments"] == nlohmann::json::array({segment(1, 3, "inquiry", false),
                                                          segment(4, 7, "deliberation", false)}),
               "drift segments");
      const auto& drift = d[0]["shifts"];
      c.expect(drift.size() == 1 && drift[0]["at_turn"] == 4 && drift[0]["kind"] == "abrupt" &&
                   drift[0]["mode"] == "replacement" && drift[0]["licitness"] == "illicit",
               "drift shift");
      c.expect(d[1]["segments"] == nlohmann::json::array({segment(1, 2, "inquiry", false),
                                                          segment(3, 6, "deliberation", true),
                                                          segment(7, 10, "inquiry", true)}),
               "declared segments");
      const auto& declared = d[1]["shifts"];
      c.expect(declared.size() == 2 && declared[0]["mode"] == "embedding" &&
                   declared[0]["licitness"] == "licit" && declared[1]["mode"] == "replacement" &&
                   declared[1]["licitness"] == "licit",
               "declared shifts");
    }
  }
}

void reading(Check& c)
{
  const auto doc = load_corpus("harry.arg");
  const std::string got = render_reading(doc.graph.arguments.at("harry"), doc.graph);
  const std::string want =
      "Given that Harry was born in Bermuda, we can presumably claim that he is British, since "
      "anyone born in Bermuda will generally be British (on account of various statutes and legal "
      "provisions), unless he's a naturalized American, or his parents were aliens";
  c.expect(got == want, "got: " + got);
}

}  // namespace

int main()
{
  struct Criterion
  {
    const char* name;
    double budget_seconds;  // 0: no time limit
    std::function<void(Check&, std::string&)> run;
  };
  const Criterion criteria[] = {
      {"table-1-dialogue-survey", 1.0, [](Check& c, std::string&) { table1(c); }},
      {"table-2-dialogue-profiles", 0, [](Check& c, std::string&) { table2(c); }},
      {"table-3-proof-dialogues", 0, [](Check& c, std::string&) { table3(c); }},
      {"proof-status-rules", 5.0, [](Check& c, std::string&) { status_rules(c); }},
      {"stance-inference", 0, [](Check& c, std::string&) { stance_inference(c); }},
      {"corpus", 0, [](Check& c, std::string&) { corpus(c); }},
      {"engine-coherence", 30.0, engine_coherence},
      {"shift-analysis", 0, [](Check& c, std::string&) { shift_analysis(c); }},
      {"reading-renderer", 0, [](Check& c, std::string&) { reading(c); }},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    std::string detail;
    const auto t0 = Clock::now();
    try {
      cr.run(check, detail);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double took = seconds_since(t0);
    if (cr.budget_seconds > 0 && took > cr.budget_seconds) {
      check.expect(false, "took " + std::to_string(took) + " s");
    }
    std::ostringstream line;
    line << (check.problems.empty() ? "PASS" : "FAIL") << "  " << cr.name << " ("
         << static_cast<long>(took * 1000) << " ms" << (detail.empty() ? "" : ", " + detail) << ")";
    std::cout << line.str() << "\n";
    for (const auto& p : check.problems) {
      std::cout << "      " << p << "\n";
    }
    failed += check.problems.empty() ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
