#include "ontic/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "text_util.hpp"

namespace ontic {

LexiconError::LexiconError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

std::string_view to_string(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::Noun: return "noun";
    case PartOfSpeech::Adjective: return "adj";
    case PartOfSpeech::Verb: return "verb";
    case PartOfSpeech::ProperNoun: return "pn";
  }
  return "?";
}

namespace {

std::string join_types(const std::vector<std::string>& types) {
  std::string out;
  for (std::size_t i = 0; i < types.size(); ++i) out += (i ? ", " : "") + types[i];
  return out;
}

struct SenseToText {
  std::string operator()(const TypeSense& s) const { return "type " + s.type; }
  std::string operator()(const PredSense& s) const {
    return "pred " + s.pred + "(" + join_types(s.arg_types) + ")";
  }
  std::string operator()(const DefinedNounSense& s) const {
    return "defined " + s.pred + " " + s.subject_type + " " + s.event_type + " " + s.role;
  }
  std::string operator()(const VerbFrame& s) const {
    std::string out = "frame " + s.activity_pred + " subj " + s.subject_type;
    if (s.object_type) out += " obj " + *s.object_type;
    return out;
  }
  std::string operator()(const ProperName& s) const {
    return s.type ? "type " + *s.type : "";
  }
};

class EntryParser {
 public:
  EntryParser(const Ontology& g, std::size_t line) : g_(g), line_(line) {}

  Sense parse(PartOfSpeech pos, std::string_view text) const {
    auto toks = text::words(text);
    if (toks.empty()) fail("empty sense");
    auto kind = toks[0];
    if (kind == "type") {
      if (toks.size() != 2) fail("expected 'type <t>'");
      if (pos != PartOfSpeech::Noun && pos != PartOfSpeech::ProperNoun)
        fail("'type' senses belong to nouns");
      auto t = type(toks[1]);
      if (pos == PartOfSpeech::ProperNoun) return ProperName{t};
      return TypeSense{t};
    }
    if (kind == "pred") {
      std::string_view name;
      std::vector<std::string_view> args;
      auto call = text::trim(text.substr(text.find("pred") + 4));
      if (!text::parse_call(call, name, args) || !text::is_identifier(name))
        fail("expected 'pred NAME(<t>, ...)'");
      PredSense sense{std::string(name), {}};
      for (auto a : args) sense.arg_types.push_back(type(a));
      const std::size_t want = pos == PartOfSpeech::Verb ? 2 : 1;
      if (pos == PartOfSpeech::ProperNoun) fail("proper names take no predicate");
      if (sense.arg_types.size() != want)
        fail(std::string(to_string(pos)) + " predicates take " + std::to_string(want) +
             " argument type(s)");
      return sense;
    }
    if (kind == "defined") {
      if (pos != PartOfSpeech::Noun) fail("'defined' senses belong to nouns");
      if (toks.size() != 5) fail("expected 'defined <PRED> <subjectType> <eventType> <ROLE>'");
      DefinedNounSense sense{std::string(toks[1]), type(toks[2]), type(toks[3]),
                             std::string(toks[4])};
      if (!text::is_identifier(sense.pred) || !text::is_identifier(sense.role))
        fail("malformed predicate or role name");
      if (!g_.subsumes(sense.event_type, g_.activity_type()))
        fail("event type '" + sense.event_type + "' is not an " + g_.activity_type());
      return sense;
    }
    if (kind == "frame") {
      if (pos != PartOfSpeech::Verb) fail("'frame' senses belong to verbs");
      if ((toks.size() != 4 && toks.size() != 6) || toks[2] != "subj" ||
          (toks.size() == 6 && toks[4] != "obj"))
        fail("expected 'frame <PRED> subj <t> [obj <t>]'");
      if (!text::is_identifier(toks[1])) fail("malformed activity predicate");
      VerbFrame frame{std::string(toks[1]), type(toks[3]), std::nullopt};
      if (toks.size() == 6) frame.object_type = type(toks[5]);
      return frame;
    }
    fail("unknown sense kind '" + std::string(kind) + "'");
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw LexiconError(line_, what); }

  std::string type(std::string_view name) const {
    if (!g_.contains(name)) fail("unknown type '" + std::string(name) + "'");
    return std::string(name);
  }

  const Ontology& g_;
  std::size_t line_;
};

}  // namespace

std::string to_string(const Sense& sense) { return std::visit(SenseToText{}, sense); }

std::string Lexicon::key(std::string_view word, PartOfSpeech pos) {
  return std::string(to_string(pos)) + ":" +
         (pos == PartOfSpeech::ProperNoun ? std::string(word) : text::lower(word));
}

Lexicon Lexicon::load(std::string_view source, const Ontology& g) {
  Lexicon lex;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    auto end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    auto line = text::strip_comment(source.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;

    auto colon = line.find(':');
    auto head = text::words(line.substr(0, colon));
    if (head.size() != 2) throw LexiconError(line_no, "expected '<pos> <word> : <senses>'");

    LexEntry entry;
    if (head[0] == "noun") entry.pos = PartOfSpeech::Noun;
    else if (head[0] == "adj") entry.pos = PartOfSpeech::Adjective;
    else if (head[0] == "verb") entry.pos = PartOfSpeech::Verb;
    else if (head[0] == "pn") entry.pos = PartOfSpeech::ProperNoun;
    else throw LexiconError(line_no, "unknown part of speech '" + std::string(head[0]) + "'");
    entry.word = head[1];

    EntryParser parser(g, line_no);
    if (colon == std::string_view::npos) {
      if (entry.pos != PartOfSpeech::ProperNoun)
        throw LexiconError(line_no, "empty sense list for '" + entry.word + "'");
      entry.senses.push_back(ProperName{});
    } else {
      for (auto sense : text::split(line.substr(colon + 1), '|')) {
        if (sense.empty()) throw LexiconError(line_no, "empty sense");
        entry.senses.push_back(parser.parse(entry.pos, sense));
      }
      if (entry.pos == PartOfSpeech::ProperNoun && entry.senses.size() != 1)
        throw LexiconError(line_no, "a proper name has exactly one sense");
    }

    auto k = key(entry.word, entry.pos);
    if (lex.index_.count(k))
      throw LexiconError(line_no, "duplicate entry for " + std::string(head[0]) + " '" +
                                      entry.word + "'");
    lex.index_.emplace(k, lex.entries_.size());
    lex.entries_.push_back(std::move(entry));
  }
  return lex;
}

Lexicon Lexicon::load_file(const std::filesystem::path& path, const Ontology& g) {
  std::ifstream in(path);
  if (!in) throw LexiconError(0, "cannot open lexicon file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load(buffer.str(), g);
}

std::vector<Sense> Lexicon::lookup(std::string_view word, PartOfSpeech pos) const {
  auto it = index_.find(key(word, pos));
  if (it == index_.end()) return {};
  return entries_[it->second].senses;
}

bool Lexicon::has(std::string_view word, PartOfSpeech pos) const {
  return index_.count(key(word, pos)) != 0;
}

bool Lexicon::knows(std::string_view word) const {
  return has(word, PartOfSpeech::Noun) || has(word, PartOfSpeech::Adjective) ||
         has(word, PartOfSpeech::Verb) || has(word, PartOfSpeech::ProperNoun);
}

std::vector<std::vector<std::string>> Lexicon::multiword_names() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& e : entries_) {
    if (e.pos != PartOfSpeech::ProperNoun || e.word.find('_') == std::string::npos) continue;
    std::vector<std::string> parts;
    for (auto p : text::split(e.word, '_'))
      if (!p.empty()) parts.emplace_back(p);
    if (parts.size() > 1) out.push_back(std::move(parts));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

std::string Lexicon::print() const {
  std::string out;
  for (const auto& e : entries_) {
    out += std::string(to_string(e.pos)) + " " + e.word;
    std::string senses;
    for (std::size_t i = 0; i < e.senses.size(); ++i) {
      auto s = to_string(e.senses[i]);
      if (!s.empty()) senses += (i ? " | " : "") + s;
    }
    if (!senses.empty()) out += " : " + senses;
    out += '\n';
  }
  return out;
}

}  // namespace ontic
