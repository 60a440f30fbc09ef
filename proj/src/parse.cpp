#include "ncg/parse.hpp"

#include <cctype>
#include <charconv>

#include "ncg/errors.hpp"

namespace ncg {

  namespace {
    struct Token {
      char kind;  // 'f', 's', 'b'
      int index;
      int sign;
    };

    bool is_sep(char c) { return c == '.' || std::isspace(static_cast<unsigned char>(c)); }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    }

    [[noreturn]] void fail(std::string_view what, std::string_view text) {
      throw ParseError(std::string(what) + " in \"" + std::string(text) + "\"");
    }

    std::vector<Token> tokenize(std::string_view text, std::string_view kinds) {
      std::vector<Token> out;
      std::size_t i = 0;
      bool dangling_dot = true;  // a '.' must sit between two tokens
      while (i < text.size()) {
        if (is_sep(text[i])) {
          if (text[i] == '.') {
            if (dangling_dot) fail("misplaced '.'", text);
            dangling_dot = true;
          }
          ++i;
          continue;
        }
        dangling_dot = false;
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j])) ++j;
        std::string_view tok = text.substr(i, j - i);
        i = j;
        if (tok == "e") continue;
        if (kinds.find(tok[0]) == std::string_view::npos) fail("unexpected token", text);
        Token t{tok[0], 0, 1};
        std::string_view rest = tok.substr(1);
        if (rest.ends_with("^-1")) {
          if (t.kind == 's') fail("Coxeter generators are involutions", text);
          t.sign = -1;
          rest.remove_suffix(3);
        }
        if (rest.empty() || !std::isdigit(static_cast<unsigned char>(rest[0]))) {
          fail("missing generator index", text);
        }
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), t.index);
        if (ec != std::errc{} || ptr != rest.data() + rest.size() || t.index < 1) {
          fail("bad generator index", text);
        }
        out.push_back(t);
      }
      if (dangling_dot && !text.empty() && trim(text).ends_with('.')) fail("misplaced '.'", text);
      return out;
    }

    std::vector<std::string_view> split_tuple(std::string_view text) {
      std::string_view s = trim(text);
      if (s.size() < 2 || s.front() != '(' || s.back() != ')') fail("expected a parenthesized tuple", text);
      s = s.substr(1, s.size() - 2);
      std::vector<std::string_view> parts;
      std::size_t start = 0;
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
          std::string_view p = trim(s.substr(start, i - start));
          if (p.empty()) fail("empty tuple entry", text);
          parts.push_back(p);
          start = i + 1;
        }
      }
      return parts;
    }

    template <class List>
    std::string join(const List& items, std::string_view sep) {
      std::string out;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += sep;
        out += to_string(items[i]);
      }
      return out;
    }
  }  // namespace

  FreeWord parse_free_word(std::string_view text) {
    if (trim(text).empty()) fail("empty word (write e for the identity)", text);
    std::vector<Letter> letters;
    for (const Token& t : tokenize(text, "f")) letters.push_back({t.index, t.sign});
    return FreeWord(letters);
  }

  CoxWord parse_cox_word(std::string_view text) {
    if (trim(text).empty()) fail("empty word (write e for the identity)", text);
    std::vector<int> letters;
    for (const Token& t : tokenize(text, "s")) letters.push_back(t.index);
    return CoxWord(letters);
  }

  BraidWord parse_braid(std::string_view text) {
    if (trim(text).empty()) fail("empty braid (write e for the identity)", text);
    std::vector<BraidLetter> letters;
    for (const Token& t : tokenize(text, "b")) letters.push_back({t.index, t.sign});
    return BraidWord(letters);
  }

  bool is_cox_text(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == 's') return true;
      if (text[i] == 'f') return false;
    }
    return false;
  }

  FreeTuple parse_free_tuple(std::string_view text) {
    FreeTuple t;
    for (auto p : split_tuple(text)) t.push_back(parse_free_word(p));
    return t;
  }

  CoxTuple parse_cox_tuple(std::string_view text) {
    CoxTuple t;
    for (auto p : split_tuple(text)) t.push_back(parse_cox_word(p));
    return t;
  }

  std::vector<FreeWord> parse_element(std::string_view text) {
    std::string_view s = trim(text);
    std::vector<FreeWord> out;
    if (s.empty() || s == "e") return out;
    std::size_t i = 0;
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
        continue;
      }
      if (s[i] != '[') fail("expected '['", text);
      std::size_t close = s.find(']', i);
      if (close == std::string_view::npos) fail("unterminated factor", text);
      out.push_back(parse_free_word(s.substr(i + 1, close - i - 1)));
      i = close + 1;
    }
    return out;
  }

  std::string to_string(const FreeWord& w) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) out += '.';
      out += 'f' + std::to_string(w[i].index);
      if (w[i].sign < 0) out += "^-1";
    }
    return out;
  }

  std::string to_string(const CoxWord& w) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) out += '.';
      out += 's' + std::to_string(w[i]);
    }
    return out;
  }

  std::string to_string(const BraidWord& b) {
    if (b.empty()) return "e";
    std::string out;
    auto l = b.letters();
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (i > 0) out += '.';
      out += 'b' + std::to_string(l[i].index);
      if (l[i].sign < 0) out += "^-1";
    }
    return out;
  }

  std::string to_string(const FreeTuple& t) { return "(" + join(t, ", ") + ")"; }
  std::string to_string(const CoxTuple& t) { return "(" + join(t, ", ") + ")"; }

  std::string format_set(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(s[i]);
    }
    return out + "}";
  }

}  // namespace ncg
