#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ontic/lexicon.hpp"

namespace ontic {

struct ProperNP {
  std::string name;
  friend bool operator==(const ProperNP&, const ProperNP&) = default;
};

/// "a black cat"; adjectives in surface order.
struct IndefNP {
  std::vector<std::string> adjs;
  std::string noun;
  friend bool operator==(const IndefNP&, const IndefNP&) = default;
};

/// "the party"
struct DefNP {
  std::vector<std::string> adjs;
  std::string noun;
  friend bool operator==(const DefNP&, const DefNP&) = default;
};

using NP = std::variant<ProperNP, IndefNP, DefNP>;

/// "Sheba is a thief"
struct CopulaNP {
  NP subject;
  IndefNP pred;
  friend bool operator==(const CopulaNP&, const CopulaNP&) = default;
};

/// "Julie is articulate"
struct CopulaAdj {
  NP subject;
  std::vector<std::string> adjs;
  friend bool operator==(const CopulaAdj&, const CopulaAdj&) = default;
};

/// "Sara owns a black cat"
struct Transitive {
  NP subject;
  std::string verb;
  NP object;
  friend bool operator==(const Transitive&, const Transitive&) = default;
};

/// "Jon bought and studied Das Kapital"
struct CoordTransitive {
  NP subject;
  std::vector<std::string> verbs;
  NP object;
  friend bool operator==(const CoordTransitive&, const CoordTransitive&) = default;
};

using ParseTree = std::variant<CopulaNP, CopulaAdj, Transitive, CoordTransitive>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No grammar rule applies at token `position`.
class OutOfFragment : public ParseError {
 public:
  OutOfFragment(std::size_t position, std::string expected, std::string found);
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// A content word the lexicon does not list.
class UnknownWord : public ParseError {
 public:
  UnknownWord(std::size_t position, std::string token);
  std::size_t position() const { return position_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t position_;
  std::string token_;
};

/// Splits on whitespace and drops punctuation. Function words are lowercased;
/// other tokens keep their case.
std::vector<std::string> tokenize(std::string_view sentence);

/// As above, then merges multiword proper names listed in the lexicon
/// (longest first): "Das Kapital" becomes `Das_Kapital`.
std::vector<std::string> tokenize(std::string_view sentence, const Lexicon& lex);

///   S   -> NP VP
///   VP  -> "is" IndefNP | "is" Adj+ | TV NP | TV "and" TV NP
///   NP  -> ProperName | ("a"|"an"|"the") Adj* Noun
ParseTree parse(const std::vector<std::string>& tokens, const Lexicon& lex);

std::string to_string(const NP& np);
std::string to_string(const ParseTree& tree);

}  // namespace ontic
