#include "ontic/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "text_util.hpp"

namespace ontic {

OutOfFragment::OutOfFragment(std::size_t position, std::string expected, std::string found)
    : ParseError("out of fragment at token " + std::to_string(position) + ": expected " +
                 expected + ", found " + found),
      position_(position),
      expected_(std::move(expected)) {}

UnknownWord::UnknownWord(std::size_t position, std::string token)
    : ParseError("unknown word '" + token + "' at token " + std::to_string(position)),
      position_(position),
      token_(std::move(token)) {}

namespace {

constexpr std::array<std::string_view, 5> kFunctionWords = {"a", "an", "the", "is", "and"};

bool is_function_word(std::string_view lowered) {
  return std::find(kFunctionWords.begin(), kFunctionWords.end(), lowered) !=
         kFunctionWords.end();
}

bool is_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) && c != '_' && c != '-';
}

class Parser {
 public:
  Parser(const std::vector<std::string>& toks, const Lexicon& lex) : toks_(toks), lex_(lex) {}

  ParseTree sentence() {
    if (toks_.empty()) throw OutOfFragment(0, "a sentence", "end of input");
    NP subject = np();
    ParseTree tree = vp(std::move(subject));
    if (pos_ != toks_.size()) throw OutOfFragment(pos_, "end of sentence", found());
    return tree;
  }

 private:
  bool at_end() const { return pos_ >= toks_.size(); }
  const std::string& peek(std::size_t ahead = 0) const {
    static const std::string kEnd;
    return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead] : kEnd;
  }
  std::string found() const { return at_end() ? "end of input" : "'" + peek() + "'"; }

  bool is_adj(const std::string& t) const { return lex_.has(t, PartOfSpeech::Adjective); }
  bool is_noun(const std::string& t) const { return lex_.has(t, PartOfSpeech::Noun); }
  bool is_verb(const std::string& t) const { return lex_.has(t, PartOfSpeech::Verb); }
  bool is_name(const std::string& t) const { return lex_.has(t, PartOfSpeech::ProperNoun); }

  [[noreturn]] void reject(const std::string& expected) const {
    if (!at_end() && !is_function_word(peek()) && !lex_.knows(peek()))
      throw UnknownWord(pos_, peek());
    throw OutOfFragment(pos_, expected, found());
  }

  // Adj* Noun. A word listed as both adjective and noun is an adjective only
  // when another adjective or noun follows it.
  IndefNP nominal() {
    IndefNP out;
    while (!at_end() && is_adj(peek())) {
      const auto& next = peek(1);
      if (is_noun(peek()) && !(is_adj(next) || is_noun(next))) break;
      out.adjs.push_back(peek());
      ++pos_;
    }
    if (at_end() || !is_noun(peek())) reject("a noun");
    out.noun = peek();
    ++pos_;
    return out;
  }

  NP np() {
    if (at_end()) reject("a noun phrase");
    const auto& t = peek();
    if (t == "a" || t == "an") {
      ++pos_;
      return nominal();
    }
    if (t == "the") {
      ++pos_;
      auto n = nominal();
      return DefNP{std::move(n.adjs), std::move(n.noun)};
    }
    if (is_name(t)) {
      ++pos_;
      return ProperNP{t};
    }
    reject("a noun phrase");
  }

  ParseTree vp(NP subject) {
    if (at_end()) reject("a verb phrase");
    if (peek() == "is") {
      ++pos_;
      if (peek() == "a" || peek() == "an") {
        ++pos_;
        return CopulaNP{std::move(subject), nominal()};
      }
      if (at_end() || !is_adj(peek())) reject("'a', 'an' or an adjective");
      CopulaAdj out{std::move(subject), {}};
      while (!at_end() && is_adj(peek())) out.adjs.push_back(toks_[pos_++]);
      return out;
    }
    if (!is_verb(peek())) reject("'is' or a verb");
    std::string verb = toks_[pos_++];
    if (peek() == "and") {
      ++pos_;
      if (at_end() || !is_verb(peek())) reject("a verb");
      std::string second = toks_[pos_++];
      return CoordTransitive{std::move(subject), {std::move(verb), std::move(second)}, np()};
    }
    return Transitive{std::move(subject), std::move(verb), np()};
  }

  const std::vector<std::string>& toks_;
  const Lexicon& lex_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : ", ") + w;
  return out;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> out;
  for (auto word : text::words(sentence)) {
    while (!word.empty() && is_punct(word.front())) word.remove_prefix(1);
    while (!word.empty() && is_punct(word.back())) word.remove_suffix(1);
    if (word.empty()) continue;
    auto lowered = text::lower(word);
    out.push_back(is_function_word(lowered) ? lowered : std::string(word));
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view sentence, const Lexicon& lex) {
  auto toks = tokenize(sentence);
  const auto names = lex.multiword_names();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < toks.size();) {
    bool merged = false;
    for (const auto& parts : names) {
      if (i + parts.size() > toks.size()) continue;
      if (!std::equal(parts.begin(), parts.end(), toks.begin() + static_cast<long>(i))) continue;
      std::string joined;
      for (const auto& p : parts) joined += (joined.empty() ? "" : "_") + p;
      out.push_back(std::move(joined));
      i += parts.size();
      merged = true;
      break;
    }
    if (!merged) out.push_back(toks[i++]);
  }
  return out;
}

ParseTree parse(const std::vector<std::string>& tokens, const Lexicon& lex) {
  return Parser(tokens, lex).sentence();
}

std::string to_string(const NP& np) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ProperNP>) {
          return "Proper(" + n.name + ")";
        } else {
          std::string head = std::is_same_v<T, IndefNP> ? "Indef([" : "Def([";
          for (std::size_t i = 0; i < n.adjs.size(); ++i) head += (i ? ", " : "") + n.adjs[i];
          return head + "], " + n.noun + ")";
        }
      },
      np);
}

std::string to_string(const ParseTree& tree) {
  return std::visit(
      [](const auto& t) -> std::string {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, CopulaNP>) {
          return "CopulaNP(" + to_string(t.subject) + ", " + to_string(NP{t.pred}) + ")";
        } else if constexpr (std::is_same_v<T, CopulaAdj>) {
          return "CopulaAdj(" + to_string(t.subject) + ", [" + join(t.adjs) + "])";
        } else if constexpr (std::is_same_v<T, Transitive>) {
          return "Transitive(" + to_string(t.subject) + ", " + t.verb + ", " +
                 to_string(t.object) + ")";
        } else {
          return "CoordTransitive(" + to_string(t.subject) + ", [" + join(t.verbs) + "], " +
                 to_string(t.object) + ")";
        }
      },
      tree);
}

}  // namespace ontic
