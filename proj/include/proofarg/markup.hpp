// proofarg/markup.hpp - the .arg markup language: lexer, parser, serializer
//
//   document     := ["version" INT] (prop_decl | argument | dialogue | proof)*
//   prop_decl    := "prop" IDENT ":" STRING ["tag" TAG]
//   argument     := "argument" STRING "{" slot* "}"
//   slot         := ("data"|"warrant"|"backing"|"rebuttal"|"claim") IDENT [":" STRING ["tag" TAG]]
//                 | "qualifier" ":" QUAL | "uses" IDENT "<-" "argument" STRING
//                 | "kind" ":" ("regular"|"critical") | "field" ":" STRING
//   dialogue     := "dialogue" STRING "{" "type" ":" TYPENAME
//                   "participants" ":" IDENT ("," IDENT)+
//                   ("role" IDENT ":" ROLE | "adversarial" IDENT)*
//                   ("stance" IDENT IDENT ":" ("true"|"false"|"unknown"))*
//                   ["settlement" IDENT] move* "}"
//   move         := "move" INT IDENT MOVEKIND (IDENT | TYPENAME)
//   proof        := "proof" STRING "{" "dialogues" ":" NAME ("," NAME)* "}"
//
// A slot without ":" STRING refers to a proposition defined elsewhere. The
// stance lines name the crucial proposition. Statements may end in ";".
// Comments run from '#' to end of line.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "proofarg/argument.hpp"
#include "proofarg/dialogue.hpp"

namespace proofarg::markup
{

/// 1-based line and column (columns count bytes), 0-based byte offset.
struct SourceSpan
{
  size_t line = 1;
  size_t column = 1;
  size_t offset = 0;
  size_t length = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class TokenKind {
  Keyword,
  Identifier,
  String,
  Integer,
  Colon,
  Comma,
  Semicolon,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Arrow,
};

struct Token
{
  TokenKind kind;
  std::string lexeme;  // exact source text
  std::string value;   // decoded contents for strings, lexeme otherwise
  SourceSpan span;

  friend bool operator==(const Token&, const Token&) = default;
};

struct ParseError
{
  SourceSpan span;
  std::string expected;
  std::string found;  // token text at `span`; empty at end of input
  std::optional<std::string> hint;

  [[nodiscard]] std::string message() const;

  friend bool operator==(const ParseError&, const ParseError&) = default;
};

[[nodiscard]] bool is_keyword(std::string_view word);

std::variant<std::vector<Token>, ParseError> tokenize(std::string_view source);

struct ProofAttempt
{
  std::string id;
  std::vector<std::string> dialogues;

  friend bool operator==(const ProofAttempt&, const ProofAttempt&) = default;
};

/// Where things were declared; not part of a document's structure.
struct SpanTable
{
  std::map<ArgumentId, SourceSpan> arguments;  // whole block
  std::map<std::string, SourceSpan> dialogues;
  std::map<std::string, SourceSpan> proofs;
  std::map<PropositionId, SourceSpan> propositions;
};

struct Document
{
  ArgumentGraph graph;
  std::vector<DialogueScript> dialogues;
  std::vector<ProofAttempt> proofs;
  SpanTable spans;

  [[nodiscard]] const DialogueScript* find_dialogue(std::string_view id) const;

  // Structural equality; spans are ignored.
  friend bool operator==(const Document& a, const Document& b)
  {
    return a.graph == b.graph && a.dialogues == b.dialogues && a.proofs == b.proofs;
  }
};

/// Errors are sorted by offset; the parser resynchronises at block
/// boundaries so one bad block does not hide the next.
std::variant<Document, std::vector<ParseError>> parse_document(std::string_view source);

/// Canonical text: propositions used by no argument first, then arguments by
/// id (slots ordered data, warrant, backing, qualifier, rebuttal, claim), then
/// dialogues and proof attempts in document order. Two-space indent, LF.
/// Throws InvalidArgument if the document has dangling references or names
/// that cannot be written back.
std::string serialize(const Document& doc);

/// Problems that make a document unrepresentable (dangling references,
/// duplicate or malformed names). Empty for anything parse_document returns.
std::vector<std::string> integrity_problems(const Document& doc);

/// Propositions and support relation for replaying the document's dialogues.
DialogueContext dialogue_context(const Document& doc);

}  // namespace proofarg::markup
