// proofarg/parser.cpp - recursive-descent parser for .arg markup
#include <algorithm>
#include <charconv>
#include <set>

#include "lexer.hpp"

namespace proofarg::markup
{

namespace
{

struct SyntaxError
{
  ParseError error;
};

struct Ref
{
  std::string id;
  SourceSpan span;
};

struct PropDef
{
  Proposition prop;
  SourceSpan span;
};

struct UsesDraft
{
  Ref slot;
  Ref source;
};

struct ArgumentDraft
{
  ToulminArgument arg;
  SourceSpan span;
  SourceSpan id_span;
  std::vector<Ref> refs;  // every proposition mentioned by a slot
  std::vector<UsesDraft> uses;
};

struct DialogueDraft
{
  DialogueScript script;
  SourceSpan span;
  SourceSpan id_span;
  std::vector<Ref> props;
  std::vector<Ref> speakers;
  std::vector<Ref> participant_decls;
};

struct ProofDraft
{
  ProofAttempt proof;
  SourceSpan span;
  SourceSpan id_span;
  std::vector<Ref> dialogues;
};

bool is_move_kind_word(std::string_view w) { return move_kind_from_string(w).has_value(); }

std::optional<TruthTag> truth_tag_from(std::string_view w)
{
  for (TruthTag t : {TruthTag::ProvedConventionally, TruthTag::ComputerVerified, TruthTag::Assumed,
                     TruthTag::Unknown}) {
    if (to_string(t) == w) {
      return t;
    }
  }
  return std::nullopt;
}

SourceSpan cover(const SourceSpan& first, const SourceSpan& last)
{
  SourceSpan s = first;
  s.length = last.offset + last.length - first.offset;
  return s;
}

class Parser
{
public:
  explicit Parser(const std::vector<Token>& tokens) : t_(tokens) {}

  void run(std::vector<ParseError>& errors)
  {
    if (at_keyword("version")) {
      try {
        advance();
        const Token& n = expect(TokenKind::Integer, "version number");
        if (n.lexeme != "1") {
          fail_at(n, "version 1", "only version 1 is understood");
        }
        accept(TokenKind::Semicolon);
      } catch (const SyntaxError& e) {
        errors.push_back(e.error);
        synchronize(0);
      }
    }
    while (!at_end()) {
      const size_t block_start = pos_;
      try {
        if (at_keyword("prop")) {
          parse_prop();
        } else if (at_keyword("argument")) {
          parse_argument();
        } else if (at_keyword("dialogue")) {
          parse_dialogue();
        } else if (at_keyword("proof")) {
          parse_proof();
        } else {
          fail("'prop', 'argument', 'dialogue' or 'proof'");
        }
      } catch (const SyntaxError& e) {
        errors.push_back(e.error);
        synchronize(block_start);
      }
    }
  }

  std::vector<PropDef> props;
  std::vector<ArgumentDraft> arguments;
  std::vector<DialogueDraft> dialogues;
  std::vector<ProofDraft> proofs;

private:
  [[nodiscard]] bool at_end() const { return pos_ >= t_.size(); }
  [[nodiscard]] const Token* peek(size_t ahead = 0) const
  {
    return pos_ + ahead < t_.size() ? &t_[pos_ + ahead] : nullptr;
  }
  [[nodiscard]] bool at(TokenKind k) const { return !at_end() && t_[pos_].kind == k; }
  [[nodiscard]] bool at_keyword(std::string_view w) const
  {
    return at(TokenKind::Keyword) && t_[pos_].lexeme == w;
  }
  const Token& advance() { return t_[pos_++]; }

  [[noreturn]] void fail_at(const Token& tok, std::string expected,
                            std::optional<std::string> hint = std::nullopt)
  {
    throw SyntaxError{{tok.span, std::move(expected), tok.lexeme, std::move(hint)}};
  }

  [[noreturn]] void fail(std::string expected, std::optional<std::string> hint = std::nullopt)
  {
    if (at_end()) {
      // Points at the last token so the span stays inside the source.
      throw SyntaxError{{t_.back().span, std::move(expected), "", std::move(hint)}};
    }
    fail_at(t_[pos_], std::move(expected), std::move(hint));
  }

  const Token& expect(TokenKind k, std::string_view what)
  {
    if (!at(k)) {
      fail(std::string(what));
    }
    return advance();
  }

  const Token& expect_keyword(std::string_view w)
  {
    if (!at_keyword(w)) {
      fail("'" + std::string(w) + "'");
    }
    return advance();
  }

  bool accept(TokenKind k)
  {
    if (at(k)) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool block_start_here() const
  {
    if (!at(TokenKind::Keyword)) {
      return false;
    }
    const auto& w = t_[pos_].lexeme;
    if (w == "prop" || w == "dialogue" || w == "proof") {
      return true;
    }
    if (w == "argument") {
      const Token* a = peek(1);
      const Token* b = peek(2);
      return a && b && a->kind == TokenKind::String && b->kind == TokenKind::LBrace;
    }
    return false;
  }

  // Skip to the end of the block that began at `block_start`, or to the next
  // block keyword, whichever comes first.
  void synchronize(size_t block_start)
  {
    int depth = 0;
    for (size_t i = block_start; i < pos_ && i < t_.size(); ++i) {
      if (t_[i].kind == TokenKind::LBrace) {
        ++depth;
      } else if (t_[i].kind == TokenKind::RBrace) {
        --depth;
      }
    }
    if (pos_ == block_start && !at_end()) {
      ++pos_;
    }
    while (!at_end()) {
      if (at(TokenKind::LBrace)) {
        ++depth;
      } else if (at(TokenKind::RBrace)) {
        --depth;
        ++pos_;
        if (depth <= 0) {
          return;
        }
        continue;
      } else if (block_start_here()) {
        return;
      }
      ++pos_;
    }
  }

  std::optional<TruthTag> parse_tag()
  {
    if (!at_keyword("tag")) {
      return std::nullopt;
    }
    advance();
    const Token& w = expect(TokenKind::Identifier, "truth tag");
    auto tag = truth_tag_from(w.lexeme);
    if (!tag) {
      fail_at(w, "truth tag", "one of proved_conventionally, computer_verified, assumed, unknown");
    }
    return tag;
  }

  void parse_prop()
  {
    advance();
    const Token& id = expect(TokenKind::Identifier, "proposition id");
    expect(TokenKind::Colon, "':'");
    const Token& text = expect(TokenKind::String, "proposition text");
    auto tag = parse_tag();
    accept(TokenKind::Semicolon);
    props.push_back({{id.lexeme, text.value, tag}, id.span});
  }

  void parse_argument()
  {
    const Token& kw = advance();
    const Token& name = expect(TokenKind::String, "argument name");
    expect(TokenKind::LBrace, "'{'");
    ArgumentDraft d;
    d.arg.id = name.value;
    d.id_span = name.span;
    std::vector<PropDef> defs;
    bool has_qualifier = false;
    bool has_kind = false;

    while (!at(TokenKind::RBrace)) {
      if (at_end() || !at(TokenKind::Keyword)) {
        fail("argument slot or '}'");
      }
      const Token& slot = advance();
      const std::string& w = slot.lexeme;
      if (w == "data" || w == "rebuttal" || w == "warrant" || w == "backing" || w == "claim") {
        const Token& id = expect(TokenKind::Identifier, "proposition id");
        if (accept(TokenKind::Colon)) {
          const Token& text = expect(TokenKind::String, "proposition text");
          auto tag = parse_tag();
          defs.push_back({{id.lexeme, text.value, tag}, id.span});
        }
        d.refs.push_back({id.lexeme, id.span});
        if (w == "data") {
          d.arg.data.push_back(id.lexeme);
        } else if (w == "rebuttal") {
          d.arg.rebuttals.push_back(id.lexeme);
        } else {
          auto& target = w == "warrant" ? d.arg.warrant : w == "backing" ? d.arg.backing : d.arg.claim;
          if (target) {
            fail_at(slot, "at most one " + w + " per argument");
          }
          target = id.lexeme;
        }
      } else if (w == "qualifier") {
        if (has_qualifier) {
          fail_at(slot, "at most one qualifier per argument");
        }
        has_qualifier = true;
        expect(TokenKind::Colon, "':'");
        d.arg.qualifier = parse_qualifier();
      } else if (w == "uses") {
        const Token& id = expect(TokenKind::Identifier, "proposition id");
        expect(TokenKind::Arrow, "'<-'");
        expect_keyword("argument");
        const Token& src = expect(TokenKind::String, "argument name");
        d.uses.push_back({{id.lexeme, id.span}, {src.value, src.span}});
      } else if (w == "kind") {
        if (has_kind) {
          fail_at(slot, "at most one kind per argument");
        }
        has_kind = true;
        expect(TokenKind::Colon, "':'");
        const Token& k = expect(TokenKind::Identifier, "'regular' or 'critical'");
        if (k.lexeme == "regular") {
          d.arg.kind = ArgumentKind::Regular;
        } else if (k.lexeme == "critical") {
          d.arg.kind = ArgumentKind::Critical;
        } else {
          fail_at(k, "'regular' or 'critical'");
        }
      } else if (w == "field") {
        if (d.arg.field_label) {
          fail_at(slot, "at most one field per argument");
        }
        expect(TokenKind::Colon, "':'");
        d.arg.field_label = expect(TokenKind::String, "field label").value;
      } else {
        fail_at(slot, "argument slot");
      }
      accept(TokenKind::Semicolon);
    }
    const Token& close = advance();
    accept(TokenKind::Semicolon);
    d.span = cover(kw.span, close.span);
    props.insert(props.end(), defs.begin(), defs.end());
    arguments.push_back(std::move(d));
  }

  Qualifier parse_qualifier()
  {
    const Token& w = expect(TokenKind::Identifier, "qualifier");
    if (w.lexeme == "necessarily") {
      return Qualifier(QualifierKind::Necessarily);
    }
    if (w.lexeme == "almost_certainly") {
      return Qualifier(QualifierKind::AlmostCertainly);
    }
    if (w.lexeme == "probably") {
      return Qualifier(QualifierKind::Probably);
    }
    if (w.lexeme == "presumably") {
      return Qualifier(QualifierKind::Presumably);
    }
    if (w.lexeme == "custom") {
      expect(TokenKind::LParen, "'('");
      const Token& label = expect(TokenKind::String, "qualifier label");
      if (label.value.empty()) {
        fail_at(label, "non-empty qualifier label");
      }
      expect(TokenKind::RParen, "')'");
      return Qualifier::custom(label.value);
    }
    fail_at(w, "qualifier",
            "one of necessarily, almost_certainly, probably, presumably, custom(\"...\")");
  }

  void parse_dialogue()
  {
    const Token& kw = advance();
    const Token& name = expect(TokenKind::String, "dialogue name");
    expect(TokenKind::LBrace, "'{'");
    DialogueDraft d;
    d.script.id = name.value;
    d.id_span = name.span;
    bool has_type = false;
    bool has_participants = false;
    std::vector<std::pair<Ref, Role>> roles;
    std::vector<Ref> adversaries;
    std::vector<std::pair<Ref, EpistemicStance>> stances;
    std::optional<Ref> crucial;

    while (!at(TokenKind::RBrace)) {
      if (at_end() || !at(TokenKind::Keyword)) {
        fail("dialogue statement or '}'");
      }
      const Token& st = advance();
      const std::string& w = st.lexeme;
      if (w == "type") {
        if (has_type) {
          fail_at(st, "one type per dialogue");
        }
        has_type = true;
        expect(TokenKind::Colon, "':'");
        const Token& tn = expect(TokenKind::Identifier, "dialogue type");
        auto type = dialogue_type_from_string(tn.lexeme);
        if (!type) {
          fail_at(tn, "dialogue type");
        }
        d.script.type = *type;
      } else if (w == "participants") {
        if (has_participants) {
          fail_at(st, "one participants list per dialogue");
        }
        has_participants = true;
        expect(TokenKind::Colon, "':'");
        const Token& first = expect(TokenKind::Identifier, "participant id");
        d.participant_decls.push_back({first.lexeme, first.span});
        if (!at(TokenKind::Comma)) {
          fail("',' and a second participant");
        }
        while (accept(TokenKind::Comma)) {
          const Token& p = expect(TokenKind::Identifier, "participant id");
          d.participant_decls.push_back({p.lexeme, p.span});
        }
      } else if (w == "role") {
        const Token& who = expect(TokenKind::Identifier, "participant id");
        expect(TokenKind::Colon, "':'");
        const Token& r = expect(TokenKind::Identifier, "role");
        Role role{};
        if (r.lexeme == "prover") {
          role = Role::Prover;
        } else if (r.lexeme == "interlocutor") {
          role = Role::Interlocutor;
        } else if (r.lexeme == "neutral") {
          role = Role::Neutral;
        } else {
          fail_at(r, "'prover', 'interlocutor' or 'neutral'");
        }
        roles.push_back({{who.lexeme, who.span}, role});
      } else if (w == "adversarial") {
        const Token& who = expect(TokenKind::Identifier, "participant id");
        adversaries.push_back({who.lexeme, who.span});
      } else if (w == "stance") {
        const Token& who = expect(TokenKind::Identifier, "participant id");
        const Token& prop = expect(TokenKind::Identifier, "proposition id");
        expect(TokenKind::Colon, "':'");
        const Token& v = expect(TokenKind::Identifier, "'true', 'false' or 'unknown'");
        EpistemicStance s{};
        if (v.lexeme == "true") {
          s = EpistemicStance::True;
        } else if (v.lexeme == "false") {
          s = EpistemicStance::False;
        } else if (v.lexeme == "unknown") {
          s = EpistemicStance::Unknown;
        } else {
          fail_at(v, "'true', 'false' or 'unknown'");
        }
        if (crucial && crucial->id != prop.lexeme) {
          fail_at(prop, "stance on the crucial proposition '" + crucial->id + "'",
                  "all stances in a dialogue address one crucial proposition");
        }
        if (!crucial) {
          crucial = Ref{prop.lexeme, prop.span};
        }
        stances.push_back({{who.lexeme, who.span}, s});
      } else if (w == "settlement") {
        if (d.script.settlement) {
          fail_at(st, "one settlement per dialogue");
        }
        const Token& p = expect(TokenKind::Identifier, "proposition id");
        d.script.settlement = p.lexeme;
        d.props.push_back({p.lexeme, p.span});
      } else if (w == "move") {
        d.script.moves.push_back(parse_move(d));
      } else {
        fail_at(st, "dialogue statement");
      }
      accept(TokenKind::Semicolon);
    }
    const Token& close = advance();
    accept(TokenKind::Semicolon);
    d.span = cover(kw.span, close.span);

    if (!has_type) {
      fail_at(kw, "'type' statement in dialogue");
    }
    if (!has_participants) {
      fail_at(kw, "'participants' statement in dialogue");
    }
    if (!crucial) {
      fail_at(kw, "'stance' statement naming the crucial proposition");
    }
    d.script.crucial = crucial->id;
    d.props.push_back(*crucial);

    for (size_t i = 0; i < d.participant_decls.size(); ++i) {
      Participant p;
      p.id = d.participant_decls[i].id;
      p.role = i == 0 ? Role::Prover : i == 1 ? Role::Interlocutor : Role::Neutral;
      d.script.participants.push_back(std::move(p));
    }
    auto find = [&](const Ref& who) -> Participant* {
      d.speakers.push_back(who);
      for (auto& p : d.script.participants) {
        if (p.id == who.id) {
          return &p;
        }
      }
      return nullptr;
    };
    for (const auto& [who, role] : roles) {
      if (Participant* p = find(who)) {
        p->role = role;
      }
    }
    for (const auto& who : adversaries) {
      if (Participant* p = find(who)) {
        p->adversarial = true;
      }
    }
    for (const auto& [who, stance] : stances) {
      if (Participant* p = find(who)) {
        p->initial_stance = stance;
      }
    }
    dialogues.push_back(std::move(d));
  }

  Move parse_move(DialogueDraft& d)
  {
    const Token& n = expect(TokenKind::Integer, "turn number");
    int turn = 0;
    auto [ptr, ec] = std::from_chars(n.lexeme.data(), n.lexeme.data() + n.lexeme.size(), turn);
    if (ec != std::errc() || ptr != n.lexeme.data() + n.lexeme.size()) {
      fail_at(n, "turn number that fits in an int");
    }
    const Token& speaker = expect(TokenKind::Identifier, "speaker id");
    d.speakers.push_back({speaker.lexeme, speaker.span});
    if (!at(TokenKind::Keyword) || !is_move_kind_word(peek()->lexeme)) {
      fail("move kind");
    }
    const Token& kind_tok = advance();
    const MoveKind kind = *move_kind_from_string(kind_tok.lexeme);
    Move move{turn, speaker.lexeme, kind, PropositionId{}};
    if (kind == MoveKind::DeclareShift) {
      const Token& tn = expect(TokenKind::Identifier, "dialogue type");
      auto type = dialogue_type_from_string(tn.lexeme);
      if (!type) {
        fail_at(tn, "dialogue type");
      }
      move.subject = *type;
    } else {
      const Token& p = expect(TokenKind::Identifier, "proposition id");
      move.subject = p.lexeme;
      d.props.push_back({p.lexeme, p.span});
    }
    return move;
  }

  void parse_proof()
  {
    const Token& kw = advance();
    const Token& name = expect(TokenKind::String, "proof name");
    expect(TokenKind::LBrace, "'{'");
    ProofDraft d;
    d.proof.id = name.value;
    d.id_span = name.span;
    expect_keyword("dialogues");
    expect(TokenKind::Colon, "':'");
    do {
      if (!at(TokenKind::String) && !at(TokenKind::Identifier)) {
        fail("dialogue name");
      }
      const Token& t = advance();
      d.proof.dialogues.push_back(t.value);
      d.dialogues.push_back({t.value, t.span});
    } while (accept(TokenKind::Comma));
    accept(TokenKind::Semicolon);
    const Token& close = expect(TokenKind::RBrace, "'}'");
    accept(TokenKind::Semicolon);
    d.span = cover(kw.span, close.span);
    proofs.push_back(std::move(d));
  }

  const std::vector<Token>& t_;
  size_t pos_ = 0;
};

std::string at_line(const SourceSpan& s) { return "first defined at line " + std::to_string(s.line); }

void resolve(Parser& p, Document& doc, std::vector<ParseError>& errors)
{
  auto err = [&](const SourceSpan& span, std::string expected, std::string found,
                 std::optional<std::string> hint = std::nullopt) {
    errors.push_back({span, std::move(expected), std::move(found), std::move(hint)});
  };

  for (const auto& def : p.props) {
    auto [it, fresh] = doc.spans.propositions.emplace(def.prop.id, def.span);
    if (!fresh) {
      err(def.span, "unique proposition id", def.prop.id, at_line(it->second));
      continue;
    }
    doc.graph.propositions.emplace(def.prop.id, def.prop);
  }

  for (const auto& d : p.arguments) {
    auto [it, fresh] = doc.spans.arguments.emplace(d.arg.id, d.span);
    if (!fresh) {
      err(d.id_span, "unique argument name", "\"" + d.arg.id + "\"", at_line(it->second));
      continue;
    }
    for (const auto& ref : d.refs) {
      if (!doc.graph.propositions.contains(ref.id)) {
        err(ref.span, "defined proposition", ref.id);
      }
    }
    doc.graph.arguments.emplace(d.arg.id, d.arg);
  }

  for (const auto& d : p.arguments) {
    for (const auto& use : d.uses) {
      const ToulminArgument* source = doc.graph.find_argument(use.source.id);
      const ToulminArgument& target = doc.graph.arguments.at(d.arg.id);
      if (source == nullptr) {
        err(use.source.span, "known argument", "\"" + use.source.id + "\"");
        continue;
      }
      std::optional<LinkRole> role;
      if (std::find(target.data.begin(), target.data.end(), use.slot.id) != target.data.end()) {
        role = LinkRole::Datum;
      } else if (target.backing == use.slot.id) {
        role = LinkRole::Backing;
      }
      if (!role) {
        err(use.slot.span, "a datum or backing of this argument", use.slot.id);
        continue;
      }
      if (source->claim != use.slot.id) {
        err(use.slot.span, "the claim of argument \"" + use.source.id + "\"", use.slot.id);
        continue;
      }
      try {
        doc.graph = add_link(std::move(doc.graph), use.source.id, d.arg.id, *role);
      } catch (const GraphError& e) {
        err(use.source.span, "acyclic support", "\"" + use.source.id + "\"", e.what());
      }
    }
  }

  for (auto& d : p.dialogues) {
    auto [it, fresh] = doc.spans.dialogues.emplace(d.script.id, d.span);
    if (!fresh) {
      err(d.id_span, "unique dialogue name", "\"" + d.script.id + "\"", at_line(it->second));
      continue;
    }
    std::set<std::string> declared;
    for (const auto& decl : d.participant_decls) {
      if (!declared.insert(decl.id).second) {
        err(decl.span, "distinct participant ids", decl.id);
      }
    }
    for (const auto& ref : d.speakers) {
      if (!declared.contains(ref.id)) {
        err(ref.span, "declared participant", ref.id);
      }
    }
    for (const auto& ref : d.props) {
      if (!doc.graph.propositions.contains(ref.id)) {
        err(ref.span, "defined proposition", ref.id);
      }
    }
    doc.dialogues.push_back(std::move(d.script));
  }

  for (auto& d : p.proofs) {
    auto [it, fresh] = doc.spans.proofs.emplace(d.proof.id, d.span);
    if (!fresh) {
      err(d.id_span, "unique proof name", "\"" + d.proof.id + "\"", at_line(it->second));
      continue;
    }
    for (const auto& ref : d.dialogues) {
      if (!doc.spans.dialogues.contains(ref.id)) {
        err(ref.span, "known dialogue", ref.id);
      }
    }
    doc.proofs.push_back(std::move(d.proof));
  }
}

}  // namespace

const DialogueScript* Document::find_dialogue(std::string_view id) const
{
  auto it = std::find_if(dialogues.begin(), dialogues.end(),
                         [&](const DialogueScript& d) { return d.id == id; });
  return it == dialogues.end() ? nullptr : &*it;
}

std::variant<Document, std::vector<ParseError>> parse_document(std::string_view source)
{
  std::vector<Token> tokens;
  std::vector<ParseError> errors;
  detail::lex(source, tokens, errors);

  Parser parser(tokens);
  parser.run(errors);

  Document doc;
  resolve(parser, doc, errors);

  if (!errors.empty()) {
    std::stable_sort(errors.begin(), errors.end(), [](const ParseError& a, const ParseError& b) {
      return a.span.offset < b.span.offset;
    });
    return errors;
  }
  return doc;
}

DialogueContext dialogue_context(const Document& doc)
{
  DialogueContext ctx;
  for (const auto& [id, prop] : doc.graph.propositions) {
    ctx.propositions.insert(id);
  }
  for (const auto& [id, arg] : doc.graph.arguments) {
    if (!arg.claim) {
      continue;
    }
    auto& s = ctx.supports[*arg.claim];
    s.insert(arg.data.begin(), arg.data.end());
    if (arg.warrant) {
      s.insert(*arg.warrant);
    }
    if (arg.backing) {
      s.insert(*arg.backing);
    }
  }
  return ctx;
}

}  // namespace proofarg::markup
