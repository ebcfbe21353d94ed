// Shared helpers for the test binaries.
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "proofarg/markup.hpp"

#ifndef PROOFARG_CORPUS_DIR
#error "PROOFARG_CORPUS_DIR must point at the shipped corpus"
#endif
#ifndef PROOFARG_TEST_DATA_DIR
#error "PROOFARG_TEST_DATA_DIR must point at tests/data"
#endif

namespace proofarg::testing
{

inline std::string read_text(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string corpus_path(const std::string& name)
{
  return std::string(PROOFARG_CORPUS_DIR) + "/" + name;
}

inline std::string data_path(const std::string& name)
{
  return std::string(PROOFARG_TEST_DATA_DIR) + "/" + name;
}

inline markup::Document parse_or_throw(const std::string& source)
{
  auto parsed = markup::parse_document(source);
  if (auto* errors = std::get_if<std::vector<markup::ParseError>>(&parsed)) {
    throw std::runtime_error("parse failed: " + errors->front().message() + " at line " +
                             std::to_string(errors->front().span.line));
  }
  return std::get<markup::Document>(std::move(parsed));
}

inline markup::Document load_corpus(const std::string& name)
{
  return parse_or_throw(read_text(corpus_path(name)));
}

inline const char* const kCorpusFiles[] = {
    "harry.arg",          "theaetetus.arg",       "four_colour_alcolea.arg",
    "four_colour_alternative.arg", "wiles_attempt.arg", "kempe_acceptance.arg",
    "shift_illicit.arg",
};

}  // namespace proofarg::testing
