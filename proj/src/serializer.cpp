// proofarg/serializer.cpp - canonical text form of a Document
#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "proofarg/markup.hpp"

namespace proofarg::markup
{

namespace
{

bool is_identifier(std::string_view s)
{
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
      return false;
    }
  }
  return !is_keyword(s);
}

bool has_newline(std::string_view s) { return s.find('\n') != std::string_view::npos; }

std::string quote(std::string_view s)
{
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string qualifier_text(const Qualifier& q)
{
  switch (q.kind()) {
    case QualifierKind::Custom:
      return "custom(" + quote(q.label()) + ")";
    default:
      return std::string(to_string(q.kind()));
  }
}

Role default_role(size_t index)
{
  return index == 0 ? Role::Prover : index == 1 ? Role::Interlocutor : Role::Neutral;
}

std::set<PropositionId> argument_refs(const ToulminArgument& a)
{
  std::set<PropositionId> out(a.data.begin(), a.data.end());
  out.insert(a.rebuttals.begin(), a.rebuttals.end());
  for (const auto* slot : {&a.warrant, &a.backing, &a.claim}) {
    if (*slot) {
      out.insert(**slot);
    }
  }
  return out;
}

void graph_problems(const ArgumentGraph& g, std::vector<std::string>& out)
{
  for (const auto& [id, p] : g.propositions) {
    if (id != p.id) {
      out.push_back("proposition keyed '" + id + "' has id '" + p.id + "'");
    }
    if (!is_identifier(p.id)) {
      out.push_back("proposition id '" + p.id + "' is not an identifier");
    }
    if (has_newline(p.text)) {
      out.push_back("text of proposition '" + p.id + "' contains a newline");
    }
  }
  for (const auto& [id, a] : g.arguments) {
    if (id != a.id) {
      out.push_back("argument keyed '" + id + "' has id '" + a.id + "'");
    }
    if (has_newline(a.id)) {
      out.push_back("argument name '" + a.id + "' contains a newline");
    }
    if (a.field_label && has_newline(*a.field_label)) {
      out.push_back("field of argument '" + a.id + "' contains a newline");
    }
    if (a.qualifier && a.qualifier->kind() == QualifierKind::Custom &&
        (a.qualifier->label().empty() || has_newline(a.qualifier->label()))) {
      out.push_back("custom qualifier of argument '" + a.id + "' cannot be written");
    }
    for (const auto& ref : argument_refs(a)) {
      if (!g.propositions.contains(ref)) {
        out.push_back("argument '" + a.id + "' refers to unknown proposition '" + ref + "'");
      }
    }
  }
  for (const auto& link : g.links) {
    const ToulminArgument* src = g.find_argument(link.source);
    const ToulminArgument* tgt = g.find_argument(link.target);
    if (src == nullptr || tgt == nullptr || !src->claim) {
      out.push_back("link " + link.source + " -> " + link.target + " is dangling");
      continue;
    }
    const bool in_data = std::find(tgt->data.begin(), tgt->data.end(), *src->claim) != tgt->data.end();
    const bool in_backing = tgt->backing == src->claim;
    // The written form derives the role from the slot, data first.
    const bool ok = link.role == LinkRole::Datum ? in_data : (in_backing && !in_data);
    if (!ok) {
      out.push_back("link " + link.source + " -> " + link.target + " cannot be expressed as 'uses'");
    }
  }
}

void dialogue_problems(const Document& doc, std::vector<std::string>& out)
{
  std::set<std::string> ids;
  for (const auto& d : doc.dialogues) {
    const std::string where = "dialogue '" + d.id + "'";
    if (!ids.insert(d.id).second) {
      out.push_back("duplicate " + where);
    }
    if (has_newline(d.id)) {
      out.push_back(where + " has a newline in its name");
    }
    if (d.participants.size() < 2) {
      out.push_back(where + " needs at least two participants");
    }
    std::set<std::string> people;
    for (const auto& p : d.participants) {
      if (!is_identifier(p.id)) {
        out.push_back(where + ": participant '" + p.id + "' is not an identifier");
      }
      if (!people.insert(p.id).second) {
        out.push_back(where + ": duplicate participant '" + p.id + "'");
      }
    }
    auto need_prop = [&](const PropositionId& p) {
      if (!doc.graph.propositions.contains(p)) {
        out.push_back(where + " refers to unknown proposition '" + p + "'");
      }
    };
    need_prop(d.crucial);
    if (d.settlement) {
      need_prop(*d.settlement);
    }
    for (const auto& m : d.moves) {
      if (m.turn < 0) {
        out.push_back(where + ": negative turn number");
      }
      if (!people.contains(m.speaker)) {
        out.push_back(where + ": unknown speaker '" + m.speaker + "'");
      }
      const bool shift = m.kind == MoveKind::DeclareShift;
      if (shift != std::holds_alternative<DialogueType>(m.subject)) {
        out.push_back(where + ": move subject does not fit its kind");
      } else if (!shift) {
        need_prop(std::get<PropositionId>(m.subject));
      }
    }
  }
  std::set<std::string> proof_ids;
  for (const auto& p : doc.proofs) {
    if (!proof_ids.insert(p.id).second) {
      out.push_back("duplicate proof '" + p.id + "'");
    }
    if (has_newline(p.id)) {
      out.push_back("proof '" + p.id + "' has a newline in its name");
    }
    if (p.dialogues.empty()) {
      out.push_back("proof '" + p.id + "' lists no dialogues");
    }
    for (const auto& name : p.dialogues) {
      if (!ids.contains(name)) {
        out.push_back("proof '" + p.id + "' refers to unknown dialogue '" + name + "'");
      }
    }
  }
}

class Writer
{
public:
  explicit Writer(const Document& doc) : doc_(doc) {}

  std::string run()
  {
    const auto& g = doc_.graph;
    std::set<PropositionId> used;
    for (const auto& [id, a] : g.arguments) {
      auto refs = argument_refs(a);
      used.insert(refs.begin(), refs.end());
    }
    bool wrote_props = false;
    for (const auto& [id, p] : g.propositions) {
      if (!used.contains(id)) {
        out_ << "prop " << definition(p) << '\n';
        wrote_props = true;
      }
    }
    if (wrote_props) {
      separate_ = true;
    }
    for (const auto& [id, a] : g.arguments) {
      argument(a);
    }
    for (const auto& d : doc_.dialogues) {
      dialogue(d);
    }
    for (const auto& p : doc_.proofs) {
      block_start();
      out_ << "proof " << quote(p.id) << " {\n  dialogues: ";
      for (size_t i = 0; i < p.dialogues.size(); ++i) {
        out_ << (i ? ", " : "") << quote(p.dialogues[i]);
      }
      out_ << "\n}\n";
    }
    return out_.str();
  }

private:
  static std::string definition(const Proposition& p)
  {
    std::string s = p.id + ": " + quote(p.text);
    if (p.truth_tag) {
      s += " tag " + std::string(to_string(*p.truth_tag));
    }
    return s;
  }

  void block_start()
  {
    if (separate_) {
      out_ << '\n';
    }
    separate_ = true;
  }

  void slot(std::string_view keyword, const PropositionId& id)
  {
    out_ << "  " << keyword << ' ';
    if (defined_.insert(id).second) {
      out_ << definition(doc_.graph.propositions.at(id));
    } else {
      out_ << id;
    }
    out_ << '\n';
  }

  void argument(const ToulminArgument& a)
  {
    block_start();
    out_ << "argument " << quote(a.id) << " {\n";
    if (a.kind == ArgumentKind::Critical) {
      out_ << "  kind: critical\n";
    }
    if (a.field_label) {
      out_ << "  field: " << quote(*a.field_label) << '\n';
    }
    for (const auto& d : a.data) {
      slot("data", d);
    }
    if (a.warrant) {
      slot("warrant", *a.warrant);
    }
    if (a.backing) {
      slot("backing", *a.backing);
    }
    if (a.qualifier) {
      out_ << "  qualifier: " << qualifier_text(*a.qualifier) << '\n';
    }
    for (const auto& r : a.rebuttals) {
      slot("rebuttal", r);
    }
    if (a.claim) {
      slot("claim", *a.claim);
    }
    std::vector<ArgumentLink> incoming;
    for (const auto& l : doc_.graph.links) {
      if (l.target == a.id) {
        incoming.push_back(l);
      }
    }
    std::sort(incoming.begin(), incoming.end());
    incoming.erase(std::unique(incoming.begin(), incoming.end()), incoming.end());
    for (const auto& l : incoming) {
      out_ << "  uses " << *doc_.graph.arguments.at(l.source).claim << " <- argument "
           << quote(l.source) << '\n';
    }
    out_ << "}\n";
  }

  void dialogue(const DialogueScript& d)
  {
    block_start();
    out_ << "dialogue " << quote(d.id) << " {\n";
    out_ << "  type: " << to_string(d.type) << '\n';
    out_ << "  participants: ";
    for (size_t i = 0; i < d.participants.size(); ++i) {
      out_ << (i ? ", " : "") << d.participants[i].id;
    }
    out_ << '\n';
    for (size_t i = 0; i < d.participants.size(); ++i) {
      const auto& p = d.participants[i];
      if (p.role != default_role(i)) {
        out_ << "  role " << p.id << ": " << to_string(p.role) << '\n';
      }
    }
    for (const auto& p : d.participants) {
      if (p.adversarial) {
        out_ << "  adversarial " << p.id << '\n';
      }
    }
    for (const auto& p : d.participants) {
      out_ << "  stance " << p.id << ' ' << d.crucial << ": " << to_string(p.initial_stance) << '\n';
    }
    if (d.settlement) {
      out_ << "  settlement " << *d.settlement << '\n';
    }
    for (const auto& m : d.moves) {
      out_ << "  move " << m.turn << ' ' << m.speaker << ' ' << to_string(m.kind) << ' ';
      if (const auto* t = std::get_if<DialogueType>(&m.subject)) {
        out_ << to_string(*t);
      } else {
        out_ << std::get<PropositionId>(m.subject);
      }
      out_ << '\n';
    }
    out_ << "}\n";
  }

  const Document& doc_;
  std::ostringstream out_;
  std::set<PropositionId> defined_;
  bool separate_ = false;
};

}  // namespace

std::vector<std::string> integrity_problems(const Document& doc)
{
  std::vector<std::string> out;
  graph_problems(doc.graph, out);
  dialogue_problems(doc, out);
  return out;
}

std::string serialize(const Document& doc)
{
  const auto problems = integrity_problems(doc);
  if (!problems.empty()) {
    throw InvalidArgument("cannot serialize document: " + problems.front());
  }
  return Writer(doc).run();
}

}  // namespace proofarg::markup
