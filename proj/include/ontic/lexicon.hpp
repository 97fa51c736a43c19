#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ontic/ontology.hpp"

namespace ontic {

class LexiconError : public std::runtime_error {
 public:
  LexiconError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class PartOfSpeech { Noun, Adjective, Verb, ProperNoun };

std::string_view to_string(PartOfSpeech pos);

/// Common noun naming an ontological type.
struct TypeSense {
  std::string type;
  friend bool operator==(const TypeSense&, const TypeSense&) = default;
};

/// A type-constrained predicate. Adjectives and THIEF-style nouns are unary;
/// relational verbs such as OWN are binary.
struct PredSense {
  std::string pred;
  std::vector<std::string> arg_types;
  friend bool operator==(const PredSense&, const PredSense&) = default;
};

/// Deverbal noun: "dancer" is the AGENT of some dancing.
struct DefinedNounSense {
  std::string pred;
  std::string subject_type;
  std::string event_type;
  std::string role;
  friend bool operator==(const DefinedNounSense&, const DefinedNounSense&) = default;
};

/// Verb reified as an activity with SUBJECT/OBJECT role constraints.
struct VerbFrame {
  std::string activity_pred;
  std::string subject_type;
  std::optional<std::string> object_type;
  friend bool operator==(const VerbFrame&, const VerbFrame&) = default;
};

/// A name starts out as a `thing` unless the entry pins a type (titles of
/// works such as Das Kapital are books).
struct ProperName {
  std::optional<std::string> type;
  friend bool operator==(const ProperName&, const ProperName&) = default;
};

using Sense = std::variant<TypeSense, PredSense, DefinedNounSense, VerbFrame, ProperName>;

/// The sense in lexicon-file syntax, e.g. `pred TALL(physical)`.
std::string to_string(const Sense& sense);

struct LexEntry {
  std::string word;
  PartOfSpeech pos;
  std::vector<Sense> senses;
};

class Lexicon {
 public:
  static Lexicon load(std::string_view source, const Ontology& ontology);
  static Lexicon load_file(const std::filesystem::path& path, const Ontology& ontology);

  /// Case-insensitive except for proper nouns; empty when absent.
  std::vector<Sense> lookup(std::string_view word, PartOfSpeech pos) const;
  bool has(std::string_view word, PartOfSpeech pos) const;
  /// True when the word is listed under any part of speech.
  bool knows(std::string_view word) const;

  const std::vector<LexEntry>& entries() const { return entries_; }

  /// Proper names spanning several surface words, split into those words
  /// and ordered longest first.
  std::vector<std::vector<std::string>> multiword_names() const;

  /// Lexicon file text that loads back to an equivalent lexicon.
  std::string print() const;

 private:
  static std::string key(std::string_view word, PartOfSpeech pos);

  std::vector<LexEntry> entries_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace ontic
