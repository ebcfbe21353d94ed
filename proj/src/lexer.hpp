// Internal: lexer entry point that keeps going after errors.
#pragma once

#include <string_view>
#include <vector>

#include "proofarg/markup.hpp"

namespace proofarg::markup::detail
{

void lex(std::string_view source, std::vector<Token>& tokens, std::vector<ParseError>& errors);

}  // namespace proofarg::markup::detail
