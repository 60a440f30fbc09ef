#pragma once

// Text grammars shared by the command line and the golden files.
//
//   word:    tokens f<k>, f<k>^-1, s<k> separated by '.' or whitespace; e = identity
//   braid:   tokens b<k>, b<k>^-1
//   tuple:   (w1, w2, ..., wn)
//   element: [w1][w2]...[wk]
//
// Printers emit '.'-separated tokens and `e` for the identity, so that every
// printed value parses back to itself. All parsers throw ParseError.

#include <string>
#include <string_view>
#include <vector>

#include "ncg/hurwitz.hpp"
#include "ncg/words.hpp"

namespace ncg {

  FreeWord parse_free_word(std::string_view text);
  CoxWord parse_cox_word(std::string_view text);
  BraidWord parse_braid(std::string_view text);
  // Whether a word or tuple is written with s-tokens.
  bool is_cox_text(std::string_view text);
  FreeTuple parse_free_tuple(std::string_view text);
  CoxTuple parse_cox_tuple(std::string_view text);
  std::vector<FreeWord> parse_element(std::string_view text);

  std::string to_string(const FreeWord& w);
  std::string to_string(const CoxWord& w);
  std::string to_string(const BraidWord& b);
  std::string to_string(const FreeTuple& t);
  std::string to_string(const CoxTuple& t);
  // {1,2}
  std::string format_set(const std::vector<int>& s);

}  // namespace ncg
