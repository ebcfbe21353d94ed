// proofarg/typology.cpp - dialogue typology tables and proof-status rules
#include "proofarg/typology.hpp"

#include <algorithm>
#include <array>

namespace proofarg
{

namespace
{

constexpr DialogueType kDebateBases[] = {DialogueType::Persuasion, DialogueType::Eristic};
constexpr DialogueType kPedagogicalBases[] = {DialogueType::InformationSeeking};

constexpr std::array<DialogueProfile, 8> kProfiles = {{
    {DialogueType::Persuasion, "Persuasion", "Difference of opinion", "Persuade other party",
     "Resolve difference of opinion", "Understand positions"},
    {DialogueType::Inquiry, "Inquiry", "Ignorance", "Contribute findings",
     "Prove or disprove conjecture", "Obtain knowledge"},
    {DialogueType::Deliberation, "Deliberation", "Contemplation of future consequences",
     "Promote personal goals", "Act on a thoughtful basis", "Formulate personal priorities"},
    {DialogueType::Negotiation, "Negotiation", "Conflict of interest",
     "Maximize gains (self-interest)", "Settlement (without undue inequity)", "Harmony"},
    {DialogueType::InformationSeeking, "Information-Seeking", "One party lacks information",
     "Obtain information", "Transfer of knowledge", "Help in goal activity"},
    {DialogueType::Eristic, "Quarrel (Eristic)", "Personal conflict",
     "Verbally hit out at and humiliate opponent", "Reveal deeper conflict", "Vent emotions"},
    {DialogueType::Debate, "Debate", "Adversarial", "Persuade third party",
     "Air strongest arguments for both sides", "Spread information"},
    {DialogueType::Pedagogical, "Pedagogical", "Ignorance of one party", "Teaching and learning",
     "Transfer of knowledge", "Reserve transfer"},
}};

constexpr std::array<ProofDialogueType, 7> kProofDialogues = {{
    {ProofDialogueKind::ProofAsInquiry, false, "Proof as Inquiry", "Open-mindedness",
     "Prove or disprove conjecture", "Contribute to outcome", "Obtain knowledge"},
    {ProofDialogueKind::ProofAsPersuasion, false, "Proof as Persuasion", "Difference of opinion",
     "Resolve difference of opinion with rigour", "Persuade interlocutor", "Persuade prover"},
    {ProofDialogueKind::ProofAsPedagogical, false, "Proof as Information-Seeking (Pedagogical)",
     "Interlocutor lacks information", "Transfer of knowledge",
     "Disseminate knowledge of results & methods", "Obtain knowledge"},
    {ProofDialogueKind::SuspectInfoSeeking, true,
     "‘Proof’ as Information-Seeking (e.g. Tymoczko)", "Prover lacks information",
     "Transfer of knowledge", "Obtain information", "Presumably inscrutable"},
    {ProofDialogueKind::SuspectDeliberation, true, "‘Proof’ as Deliberation (e.g. Swart)",
     "Open-mindedness", "Reach a provisional conclusion", "Contribute to outcome",
     "Obtain warranted belief"},
    {ProofDialogueKind::SuspectNegotiation, true,
     "‘Proof’ as Negotiation (e.g. Zeilberger)", "Difference of opinion",
     "Exchange resources for a provisional conclusion", "Contribute to outcome",
     "Maximize value of exchange"},
    {ProofDialogueKind::SuspectEristic, true, "‘Proof’ as Eristic/ Debate",
     "Irreconcilable difference of opinion", "Reveal deeper conflict", "Clarify position",
     "Clarify position"},
}};

std::string describe(const InitialSituation& s)
{
  std::string out(to_string(s.kind()));
  if (s.direction()) {
    out += " (";
    out += to_string(*s.direction());
    out += ")";
  }
  if (s.irreconcilable()) {
    out += " (irreconcilable)";
  }
  return out;
}

[[noreturn]] void undefined(const InitialSituation& s, MainGoal g, std::string_view table)
{
  throw UndefinedCell(std::string(table) + " has no entry for " + describe(s) + " x " +
                      std::string(to_string(g)));
}

}  // namespace

InitialSituation InitialSituation::conflict(bool irreconcilable)
{
  return {SituationKind::Conflict, std::nullopt, irreconcilable};
}

InitialSituation InitialSituation::open_problem()
{
  return {SituationKind::OpenProblem, std::nullopt, false};
}

InitialSituation InitialSituation::info_asymmetry(AsymmetryDirection direction)
{
  return {SituationKind::InfoAsymmetry, direction, false};
}

StanceInference infer_initial_situation(EpistemicStance prover, EpistemicStance interlocutor)
{
  using S = EpistemicStance;
  if (prover == interlocutor) {
    if (prover == S::Unknown) {
      return InitialSituation::open_problem();
    }
    return NoDispute{};
  }
  if (prover == S::Unknown) {
    return InitialSituation::info_asymmetry(AsymmetryDirection::ProverLacks);
  }
  if (interlocutor == S::Unknown) {
    return InitialSituation::info_asymmetry(AsymmetryDirection::InterlocutorLacks);
  }
  return InitialSituation::conflict();
}

std::span<const DialogueType> base_types(DialogueType type)
{
  switch (type) {
    case DialogueType::Debate:
      return kDebateBases;
    case DialogueType::Pedagogical:
      return kPedagogicalBases;
    default:
      return {};
  }
}

bool is_derived(DialogueType type) { return !base_types(type).empty(); }

DialogueType classify_dialogue(const InitialSituation& situation, MainGoal goal)
{
  switch (situation.kind()) {
    case SituationKind::Conflict:
      switch (goal) {
        case MainGoal::StableResolution:
          return DialogueType::Persuasion;
        case MainGoal::PracticalSettlement:
          return DialogueType::Negotiation;
        case MainGoal::ProvisionalAccommodation:
          return DialogueType::Eristic;
      }
      break;
    case SituationKind::OpenProblem:
      if (goal == MainGoal::StableResolution) {
        return DialogueType::Inquiry;
      }
      if (goal == MainGoal::PracticalSettlement) {
        return DialogueType::Deliberation;
      }
      break;
    case SituationKind::InfoAsymmetry:
      if (goal == MainGoal::StableResolution) {
        return DialogueType::InformationSeeking;
      }
      break;
  }
  undefined(situation, goal, "dialogue survey");
}

SituationKind situation_of(DialogueType type)
{
  switch (type) {
    case DialogueType::Persuasion:
    case DialogueType::Negotiation:
    case DialogueType::Eristic:
    case DialogueType::Debate:
      return SituationKind::Conflict;
    case DialogueType::Inquiry:
    case DialogueType::Deliberation:
      return SituationKind::OpenProblem;
    case DialogueType::InformationSeeking:
    case DialogueType::Pedagogical:
      return SituationKind::InfoAsymmetry;
  }
  return SituationKind::OpenProblem;
}

MainGoal goal_of(DialogueType type)
{
  switch (type) {
    case DialogueType::Persuasion:
    case DialogueType::Inquiry:
    case DialogueType::InformationSeeking:
    case DialogueType::Pedagogical:
      return MainGoal::StableResolution;
    case DialogueType::Deliberation:
    case DialogueType::Negotiation:
      return MainGoal::PracticalSettlement;
    case DialogueType::Eristic:
    case DialogueType::Debate:
      return MainGoal::ProvisionalAccommodation;
  }
  return MainGoal::StableResolution;
}

int goal_grade(MainGoal goal)
{
  switch (goal) {
    case MainGoal::StableResolution:
      return 2;
    case MainGoal::PracticalSettlement:
      return 1;
    case MainGoal::ProvisionalAccommodation:
      return 0;
  }
  return 0;
}

const DialogueProfile& dialogue_profile(DialogueType type)
{
  return kProfiles[static_cast<size_t>(type)];
}

const ProofDialogueType& proof_dialogue_profile(ProofDialogueKind kind)
{
  return kProofDialogues[static_cast<size_t>(kind)];
}

const ProofDialogueType& classify_proof_dialogue(const InitialSituation& situation, MainGoal goal)
{
  using K = ProofDialogueKind;
  switch (situation.kind()) {
    case SituationKind::OpenProblem:
      if (goal == MainGoal::StableResolution) {
        return proof_dialogue_profile(K::ProofAsInquiry);
      }
      if (goal == MainGoal::PracticalSettlement) {
        return proof_dialogue_profile(K::SuspectDeliberation);
      }
      break;
    case SituationKind::Conflict:
      if (situation.irreconcilable()) {
        if (goal == MainGoal::ProvisionalAccommodation) {
          return proof_dialogue_profile(K::SuspectEristic);
        }
      } else if (goal == MainGoal::StableResolution) {
        return proof_dialogue_profile(K::ProofAsPersuasion);
      } else if (goal == MainGoal::PracticalSettlement) {
        return proof_dialogue_profile(K::SuspectNegotiation);
      }
      break;
    case SituationKind::InfoAsymmetry:
      if (goal == MainGoal::StableResolution) {
        return proof_dialogue_profile(situation.direction() == AsymmetryDirection::ProverLacks
                                          ? K::SuspectInfoSeeking
                                          : K::ProofAsPedagogical);
      }
      break;
  }
  undefined(situation, goal, "proof dialogue catalogue");
}

ProofStatus assess_proof_status(const OutcomeMap& outcomes)
{
  using K = ProofDialogueKind;
  auto outcome = [&](K kind) {
    auto it = outcomes.find(kind);
    return it == outcomes.end() ? Outcome::NotAttempted : it->second;
  };
  auto succeeded = [&](K kind) { return outcome(kind) == Outcome::Success; };
  auto phrase = [&](K kind) {
    return std::string(to_string(kind)) + " " +
           (outcome(kind) == Outcome::Failure ? "failed" : "not attempted");
  };

  const bool inquiry = succeeded(K::ProofAsInquiry);
  const bool persuasion = succeeded(K::ProofAsPersuasion);
  const bool pedagogical = succeeded(K::ProofAsPedagogical);

  if (inquiry && persuasion) {
    if (pedagogical) {
      return {ProofStatusKind::IdealProof,
              {"succeeded in inquiry, persuasion and pedagogical proof dialogues"}};
    }
    return {ProofStatusKind::Proof,
            {"succeeded in inquiry and persuasion proof dialogues",
             phrase(K::ProofAsPedagogical) + "; pedagogic success is not necessary for proof"}};
  }

  ProofStatus status{ProofStatusKind::NotProof, {}};
  for (K kind : {K::ProofAsInquiry, K::ProofAsPersuasion}) {
    if (!succeeded(kind)) {
      status.diagnostics.push_back(phrase(kind) +
                                   "; success in inquiry and persuasion is necessary for proof");
    }
  }

  std::vector<K> successes;
  for (K kind : kAllProofDialogueKinds) {
    if (succeeded(kind)) {
      successes.push_back(kind);
    }
  }
  const bool any_suspect = std::any_of(successes.begin(), successes.end(), [](K k) {
    return proof_dialogue_profile(k).suspect;
  });

  if (successes.size() == 1 && successes.front() == K::ProofAsPedagogical) {
    status.kind = ProofStatusKind::HeuristicOnly;
    status.diagnostics.push_back(
        "pedagogical success alone: heuristic value, insufficient for proof");
  } else if (inquiry || persuasion) {
    status.diagnostics.push_back("partial rigorous success does not amount to proof");
  } else if (any_suspect) {
    status.kind = ProofStatusKind::NonRigorousSettlement;
    status.diagnostics.push_back("successes lie only in suspect proof dialogues");
  }
  return status;
}

std::string_view to_string(EpistemicStance stance)
{
  switch (stance) {
    case EpistemicStance::True:
      return "true";
    case EpistemicStance::False:
      return "false";
    case EpistemicStance::Unknown:
      return "unknown";
  }
  return "?";
}

std::string_view to_string(SituationKind kind)
{
  switch (kind) {
    case SituationKind::Conflict:
      return "conflict";
    case SituationKind::OpenProblem:
      return "open_problem";
    case SituationKind::InfoAsymmetry:
      return "info_asymmetry";
  }
  return "?";
}

std::string_view to_string(AsymmetryDirection direction)
{
  return direction == AsymmetryDirection::InterlocutorLacks ? "interlocutor_lacks"
                                                            : "prover_lacks";
}

std::string_view to_string(MainGoal goal)
{
  switch (goal) {
    case MainGoal::StableResolution:
      return "stable_resolution";
    case MainGoal::PracticalSettlement:
      return "practical_settlement";
    case MainGoal::ProvisionalAccommodation:
      return "provisional_accommodation";
  }
  return "?";
}

std::string_view to_string(DialogueType type)
{
  switch (type) {
    case DialogueType::Persuasion:
      return "persuasion";
    case DialogueType::Inquiry:
      return "inquiry";
    case DialogueType::Deliberation:
      return "deliberation";
    case DialogueType::Negotiation:
      return "negotiation";
    case DialogueType::InformationSeeking:
      return "information_seeking";
    case DialogueType::Eristic:
      return "eristic";
    case DialogueType::Debate:
      return "debate";
    case DialogueType::Pedagogical:
      return "pedagogical";
  }
  return "?";
}

std::string_view to_string(ProofDialogueKind kind)
{
  switch (kind) {
    case ProofDialogueKind::ProofAsInquiry:
      return "proof_as_inquiry";
    case ProofDialogueKind::ProofAsPersuasion:
      return "proof_as_persuasion";
    case ProofDialogueKind::ProofAsPedagogical:
      return "proof_as_pedagogical";
    case ProofDialogueKind::SuspectInfoSeeking:
      return "suspect_information_seeking";
    case ProofDialogueKind::SuspectDeliberation:
      return "suspect_deliberation";
    case ProofDialogueKind::SuspectNegotiation:
      return "suspect_negotiation";
    case ProofDialogueKind::SuspectEristic:
      return "suspect_eristic";
  }
  return "?";
}

std::string_view to_string(Outcome outcome)
{
  switch (outcome) {
    case Outcome::Success:
      return "success";
    case Outcome::Failure:
      return "failure";
    case Outcome::NotAttempted:
      return "not_attempted";
  }
  return "?";
}

std::string_view to_string(ProofStatusKind kind)
{
  switch (kind) {
    case ProofStatusKind::IdealProof:
      return "ideal_proof";
    case ProofStatusKind::Proof:
      return "proof";
    case ProofStatusKind::NotProof:
      return "not_proof";
    case ProofStatusKind::HeuristicOnly:
      return "heuristic_only";
    case ProofStatusKind::NonRigorousSettlement:
      return "non_rigorous_settlement";
  }
  return "?";
}

std::optional<DialogueType> dialogue_type_from_string(std::string_view name)
{
  for (DialogueType t : kAllDialogueTypes) {
    if (to_string(t) == name) {
      return t;
    }
  }
  return std::nullopt;
}

}  // namespace proofarg
