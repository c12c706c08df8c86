#ifndef ARTIN_PRESENTATION_HPP_
#define ARTIN_PRESENTATION_HPP_

// Finite presentations and their text format:
//
//   gens: <name>+ ; rels: <word> (= <word>)? (; <word> (= <word>)?)* ;
//
// A word is a juxtaposition of generator names and parenthesised words, each
// optionally raised to an integer power with ^k. "u = v" denotes the relator
// u v^-1. '#' starts a comment running to the end of the line.

#include <cctype>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artin/word.hpp"

namespace artin {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column "
                           + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// lhs = rhs; rhs is empty for a plain relator.
struct Relation {
  Word lhs;
  Word rhs;

  Word relator() const { return concat(lhs, inverse(rhs)); }
  bool operator==(Relation const&) const = default;
};

class FpPresentation {
 public:
  FpPresentation() = default;
  FpPresentation(std::vector<std::string> names, std::vector<Relation> relations)
      : names_(std::move(names)), relations_(std::move(relations)) {
    for (auto const& r : relations_) {
      check_word(r.lhs);
      check_word(r.rhs);
    }
  }

  std::size_t number_of_generators() const noexcept { return names_.size(); }
  std::vector<std::string> const& generator_names() const noexcept { return names_; }
  std::vector<Relation> const& relations() const noexcept { return relations_; }

  std::vector<Word> relators() const {
    std::vector<Word> out;
    out.reserve(relations_.size());
    for (auto const& r : relations_) out.push_back(r.relator());
    return out;
  }

  void add_relation(Relation r) {
    check_word(r.lhs);
    check_word(r.rhs);
    relations_.push_back(std::move(r));
  }

  void add_relator(Word w) { add_relation({std::move(w), {}}); }

  // Index (1-based) of a generator name; 0 if unknown.
  int generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return static_cast<int>(i) + 1;
    }
    return 0;
  }

  bool operator==(FpPresentation const&) const = default;

 private:
  void check_word(Word const& w) const {
    for (Letter l : w) {
      if (l == 0 || generator_of(l) > static_cast<int>(names_.size())) {
        throw std::invalid_argument("relator letter " + std::to_string(l)
                                    + " out of range");
      }
    }
  }

  std::vector<std::string> names_;
  std::vector<Relation> relations_;
};

namespace detail {

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  FpPresentation parse() {
    expect_keyword("gens");
    std::vector<std::string> names;
    skip_space();
    while (!at_end() && peek() != ';') {
      auto [l, c] = position();
      std::string name = identifier();
      if (name.empty()) throw ParseError("expected generator name", l, c);
      for (auto const& n : names) {
        if (n == name) throw ParseError("duplicate generator '" + name + "'", l, c);
      }
      names.push_back(name);
      skip_space();
    }
    if (names.empty()) error("expected at least one generator");
    expect(';');
    expect_keyword("rels");
    names_ = &names;
    std::vector<Relation> rels;
    skip_space();
    if (!at_end() && peek() == ';') {
      ++pos_;
      skip_space();
    }
    while (!at_end()) {
      Relation r;
      r.lhs = word("relator");
      skip_space();
      if (!at_end() && peek() == '=') {
        ++pos_;
        r.rhs = word("right-hand side");
        skip_space();
      }
      rels.push_back(std::move(r));
      if (at_end()) error("expected ';' after relation");
      expect(';');
      skip_space();
    }
    names_ = nullptr;
    return FpPresentation(std::move(names), std::move(rels));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::pair<std::size_t, std::size_t> position() const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void error(std::string const& msg) const {
    auto [l, c] = position();
    throw ParseError(msg, l, c);
  }

  void skip_space() {
    while (!at_end()) {
      char ch = peek();
      if (ch == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char ch) {
    skip_space();
    if (at_end() || peek() != ch) error(std::string("expected '") + ch + "'");
    ++pos_;
  }

  void expect_keyword(std::string_view kw) {
    skip_space();
    if (text_.substr(pos_, kw.size()) != kw) error("expected '" + std::string(kw) + ":'");
    pos_ += kw.size();
    expect(':');
  }

  std::string identifier() {
    std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      return {};
    }
    while (!at_end()
           && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  long exponent() {
    skip_space();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_space();
    bool neg = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("expected integer exponent");
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  // word := factor+, factor := (name | '(' word ')') ('^' int)?
  Word word(char const* what) {
    Word out;
    skip_space();
    while (!at_end()) {
      char ch = peek();
      Word factor;
      if (ch == '(') {
        ++pos_;
        factor = word("parenthesised word");
        expect(')');
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        auto [l, c] = position();
        std::string name = identifier();
        int idx = 0;
        for (std::size_t i = 0; i < names_->size(); ++i) {
          if ((*names_)[i] == name) idx = static_cast<int>(i) + 1;
        }
        if (idx == 0) throw ParseError("unknown generator '" + name + "'", l, c);
        factor = {idx};
      } else {
        break;
      }
      Word p = power(factor, exponent());
      out.insert(out.end(), p.begin(), p.end());
      skip_space();
    }
    if (out.empty()) error(std::string("empty ") + what);
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> const* names_ = nullptr;
};

inline std::string print_word(Word const& w, std::vector<std::string> const& names) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long run = static_cast<long>(j - i);
    if (!out.empty()) out += ' ';
    out += names.at(static_cast<std::size_t>(generator_of(w[i]) - 1));
    long e = is_inverse(w[i]) ? -run : run;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace detail

inline FpPresentation parse_presentation(std::string_view text) {
  return detail::PresentationParser(text).parse();
}

inline std::string print_presentation(FpPresentation const& p) {
  auto const& names = p.generator_names();
  std::string out = "gens:";
  for (auto const& n : names) out += " " + n;
  out += "; rels:";
  if (p.relations().empty()) return out + " ;";
  for (auto const& r : p.relations()) {
    out += " " + detail::print_word(r.lhs, names);
    if (!r.rhs.empty()) out += " = " + detail::print_word(r.rhs, names);
    out += ";";
  }
  return out;
}

// Presentation with generators named prefix1 .. prefixN.
inline std::vector<std::string> numbered_names(std::size_t n, std::string const& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// True if the two relators define the same normal closure element up to
// cyclic rotation and inversion (after free and cyclic reduction).
inline bool same_relator_up_to_rotation(Word const& a, Word const& b) {
  Word x = cyclic_reduce(a);
  Word y = cyclic_reduce(b);
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  for (Word cand : {y, inverse(y)}) {
    for (std::size_t r = 0; r < cand.size(); ++r) {
      if (x == cand) return true;
      std::rotate(cand.begin(), cand.begin() + 1, cand.end());
    }
  }
  return false;
}

}  // namespace artin

#endif  // ARTIN_PRESENTATION_HPP_
