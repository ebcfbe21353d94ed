// proofarg/analysis.cpp - document validation, replay analysis, reports
#include "proofarg/analysis.hpp"

#include <algorithm>

namespace proofarg
{

using nlohmann::json;

namespace
{

markup::SourceSpan span_or_start(const std::map<std::string, markup::SourceSpan>& table,
                                 const std::string& id)
{
  auto it = table.find(id);
  return it == table.end() ? markup::SourceSpan{} : it->second;
}

std::string header_rule(const DialogueError& e)
{
  return dynamic_cast<const StanceMismatch*>(&e) != nullptr ? "stance-mismatch" : "dialogue-header";
}

json stores_json(const DialogueState& state)
{
  json out = json::object();
  for (const auto& [id, store] : state.stores) {
    json entries = json::array();
    for (const auto& c : store.commitments()) {
      entries.push_back({c.proposition, to_string(c.polarity)});
    }
    out[id] = std::move(entries);
  }
  return out;
}

json proof_dialogue_json(const ProofDialogueClassification& c)
{
  if (!c.kind) {
    return {{"kind", nullptr}, {"note", c.note}};
  }
  const auto& row = proof_dialogue_profile(*c.kind);
  return {{"kind", to_string(row.kind)}, {"name", row.name}, {"suspect", row.suspect}};
}

}  // namespace

std::vector<LocatedDiagnostic> validate_document(const markup::Document& doc)
{
  std::vector<LocatedDiagnostic> out;
  for (auto& d : validate_graph(doc.graph)) {
    out.push_back({span_or_start(doc.spans.arguments, d.argument), std::move(d)});
  }
  const DialogueContext ctx = markup::dialogue_context(doc);
  for (const auto& script : doc.dialogues) {
    try {
      (void)new_dialogue(script.type, script.crucial, script.participants, ctx, script.settlement);
    } catch (const DialogueError& e) {
      out.push_back({span_or_start(doc.spans.dialogues, script.id),
                     {Severity::Error, header_rule(e), "", "dialogue",
                      "dialogue \"" + script.id + "\": " + e.what()}});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const LocatedDiagnostic& a, const LocatedDiagnostic& b) {
    return a.span.offset < b.span.offset;
  });
  return out;
}

std::string format_diagnostic(const std::string& file, const LocatedDiagnostic& d)
{
  std::string msg = d.diagnostic.message;
  if (!d.diagnostic.argument.empty()) {
    msg += " (argument \"" + d.diagnostic.argument + "\")";
  }
  return file + ":" + std::to_string(d.span.line) + ":" + std::to_string(d.span.column) + ": " +
         std::string(to_string(d.diagnostic.severity)) + ": " + msg;
}

ProofDialogueClassification classify_script(const DialogueScript& script)
{
  if (script.participants.size() != 2) {
    return {std::nullopt, std::nullopt, "needs exactly two participants"};
  }
  const auto& ps = script.participants;
  const Participant& prover = ps[1].role == Role::Prover && ps[0].role != Role::Prover ? ps[1] : ps[0];
  const Participant& other = &prover == &ps[0] ? ps[1] : ps[0];

  const MainGoal goal = goal_of(script.type);
  std::optional<InitialSituation> situation;
  if (situation_of(script.type) == SituationKind::Conflict &&
      goal == MainGoal::ProvisionalAccommodation) {
    situation = InitialSituation::conflict(true);
  } else {
    auto inferred =
        infer_initial_situation(effective_stance(prover, prover), effective_stance(other, prover));
    if (const auto* s = std::get_if<InitialSituation>(&inferred)) {
      situation = *s;
    } else {
      return {std::nullopt, std::nullopt, "stances show no dispute"};
    }
  }
  try {
    return {situation, classify_proof_dialogue(*situation, goal).kind, ""};
  } catch (const UndefinedCell& e) {
    return {situation, std::nullopt, e.what()};
  }
}

json classification_json(const DialogueScript& script)
{
  const ProofDialogueClassification c = classify_script(script);
  const MainGoal goal = goal_of(script.type);
  json j = {{"dialogue_id", script.id},
            {"declared_type", to_string(script.type)},
            {"main_goal", to_string(goal)}};
  if (c.situation) {
    json s = {{"kind", to_string(c.situation->kind())}};
    if (c.situation->direction()) {
      s["direction"] = to_string(*c.situation->direction());
    }
    if (c.situation->kind() == SituationKind::Conflict) {
      s["irreconcilable"] = c.situation->irreconcilable();
    }
    j["initial_situation"] = std::move(s);
    try {
      j["survey_cell"] = to_string(classify_dialogue(*c.situation, goal));
    } catch (const UndefinedCell&) {
      j["survey_cell"] = nullptr;
    }
  } else {
    j["initial_situation"] = nullptr;
    j["survey_cell"] = nullptr;
  }
  j["proof_dialogue"] = proof_dialogue_json(c);
  return j;
}

DialogueAnalysis analyze_dialogue(const DialogueScript& script, const DialogueContext& context,
                                  int shift_window)
{
  DialogueAnalysis a;
  a.dialogue_id = script.id;
  a.declared_type = script.type;
  a.classification = classify_script(script);
  try {
    a.replay = replay_transcript(script, context);
  } catch (const DialogueError& e) {
    a.header_error = {header_rule(e), e.what()};
    a.goal = {false, "dialogue could not start"};
    return a;
  }
  a.goal = goal_achieved(a.replay->state);
  a.segments = segment_transcript(a.replay->state, shift_window);
  a.shifts = detect_shifts(a.segments);
  return a;
}

bool DocumentAnalysis::has_violation() const
{
  return std::any_of(dialogues.begin(), dialogues.end(),
                     [](const DialogueAnalysis& d) { return d.failed(); });
}

DocumentAnalysis analyze_document(const markup::Document& doc, int shift_window)
{
  DocumentAnalysis out;
  const DialogueContext ctx = markup::dialogue_context(doc);
  for (const auto& script : doc.dialogues) {
    out.dialogues.push_back(analyze_dialogue(script, ctx, shift_window));
  }
  for (const auto& proof : doc.proofs) {
    ProofAnalysis pa;
    pa.proof_id = proof.id;
    pa.dialogues = proof.dialogues;
    std::vector<std::string> notes;
    for (const auto& name : proof.dialogues) {
      auto it = std::find_if(out.dialogues.begin(), out.dialogues.end(),
                             [&](const DialogueAnalysis& d) { return d.dialogue_id == name; });
      if (it == out.dialogues.end()) {
        notes.push_back("dialogue \"" + name + "\" not found");
        continue;
      }
      if (!it->classification.kind) {
        notes.push_back("dialogue \"" + name + "\" fits no proof-dialogue row: " +
                        it->classification.note);
        continue;
      }
      const Outcome o = it->outcome();
      auto [slot, fresh] = pa.outcomes.emplace(*it->classification.kind, o);
      if (!fresh && o == Outcome::Failure) {
        slot->second = Outcome::Failure;
      }
      for (const auto& s : it->shifts) {
        if (s.verdict.licitness == Licitness::Illicit) {
          notes.push_back("dialogue \"" + name + "\" has an illicit shift at turn " +
                          std::to_string(s.at_turn));
        }
      }
    }
    pa.status = assess_proof_status(pa.outcomes);
    pa.status.diagnostics.insert(pa.status.diagnostics.end(), notes.begin(), notes.end());
    out.proofs.push_back(std::move(pa));
  }
  return out;
}

json to_json(const DialogueAnalysis& a)
{
  json j;
  j["dialogue_id"] = a.dialogue_id;
  j["declared_type"] = to_string(a.declared_type);
  j["goal"] = {{"achieved", a.goal.achieved}, {"reason", a.goal.reason}};
  j["outcome"] = to_string(a.outcome());

  json violations = json::array();
  if (a.header_error) {
    violations.push_back(
        {{"turn", 0}, {"rule", a.header_error->first}, {"message", a.header_error->second}});
  } else if (a.replay->violation) {
    const auto& v = *a.replay->violation;
    violations.push_back({{"turn", v.turn}, {"rule", v.rule}, {"message", v.message}});
  }
  j["violations"] = std::move(violations);

  if (a.replay) {
    j["final_phase"] = to_string(a.replay->state.phase);
    j["stores"] = stores_json(a.replay->state);
  } else {
    j["final_phase"] = to_string(Phase::Open);
    j["stores"] = json::object();
  }

  json segments = json::array();
  for (const auto& s : a.segments) {
    segments.push_back({{"start_turn", s.start_turn},
                        {"end_turn", s.end_turn},
                        {"operative_type", to_string(s.operative_type)},
                        {"declared", s.declared}});
  }
  j["segments"] = std::move(segments);

  json shifts = json::array();
  for (const auto& s : a.shifts) {
    shifts.push_back({{"at_turn", s.at_turn},
                      {"from", to_string(s.from_type)},
                      {"to", to_string(s.to_type)},
                      {"kind", to_string(s.kind)},
                      {"mode", to_string(s.mode)},
                      {"licitness", to_string(s.verdict.licitness)},
                      {"reason", s.verdict.reason}});
  }
  j["shifts"] = std::move(shifts);

  j["proof_dialogue"] = proof_dialogue_json(a.classification);
  return j;
}

json to_json(const DocumentAnalysis& a)
{
  json dialogues = json::array();
  for (const auto& d : a.dialogues) {
    dialogues.push_back(to_json(d));
  }
  json proofs = json::array();
  for (const auto& p : a.proofs) {
    json outcomes = json::object();
    for (const auto& [kind, o] : p.outcomes) {
      outcomes[std::string(to_string(kind))] = to_string(o);
    }
    proofs.push_back({{"proof_id", p.proof_id},
                      {"dialogues", p.dialogues},
                      {"outcomes", std::move(outcomes)},
                      {"status", to_string(p.status.kind)},
                      {"diagnostics", p.status.diagnostics}});
  }
  return {{"dialogues", std::move(dialogues)}, {"proofs", std::move(proofs)}};
}

json typology_json()
{
  const std::pair<const char*, InitialSituation> situations[] = {
      {"conflict", InitialSituation::conflict()},
      {"open_problem", InitialSituation::open_problem()},
      {"info_asymmetry", InitialSituation::info_asymmetry(AsymmetryDirection::InterlocutorLacks)},
  };
  const MainGoal goals[] = {MainGoal::StableResolution, MainGoal::PracticalSettlement,
                            MainGoal::ProvisionalAccommodation};
  json survey = json::array();
  for (const auto& [name, situation] : situations) {
    for (MainGoal g : goals) {
      json cell = {{"initial_situation", name}, {"main_goal", to_string(g)}};
      try {
        cell["dialogue_type"] = to_string(classify_dialogue(situation, g));
      } catch (const UndefinedCell&) {
        cell["dialogue_type"] = nullptr;
      }
      survey.push_back(std::move(cell));
    }
  }

  json profiles = json::array();
  for (DialogueType t : kAllDialogueTypes) {
    const auto& p = dialogue_profile(t);
    json bases = json::array();
    for (DialogueType b : base_types(t)) {
      bases.push_back(to_string(b));
    }
    profiles.push_back({{"type", to_string(t)},
                        {"name", p.name},
                        {"initial_situation", p.initial_situation_text},
                        {"individual_goals", p.individual_goals_text},
                        {"collective_goal", p.collective_goal_text},
                        {"benefits", p.benefits_text},
                        {"bases", std::move(bases)}});
  }

  json rows = json::array();
  for (ProofDialogueKind k : kAllProofDialogueKinds) {
    const auto& r = proof_dialogue_profile(k);
    rows.push_back({{"kind", to_string(k)},
                    {"name", r.name},
                    {"suspect", r.suspect},
                    {"initial_situation", r.initial_situation_text},
                    {"main_goal", r.main_goal_text},
                    {"prover_goal", r.prover_goal_text},
                    {"interlocutor_goal", r.interlocutor_goal_text}});
  }
  return {{"dialogue_survey", std::move(survey)},
          {"dialogue_profiles", std::move(profiles)},
          {"proof_dialogues", std::move(rows)}};
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace proofarg
