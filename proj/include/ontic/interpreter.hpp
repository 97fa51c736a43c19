#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ontic/lexicon.hpp"
#include "ontic/logical_form.hpp"
#include "ontic/ontology.hpp"
#include "ontic/parser.hpp"

namespace ontic {

/// A parse tree the lexicon cannot translate (missing entry, frame arity).
class TranslationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One fully resolved logical form.
struct Reading {
  Formula form;
  std::string gloss;
};

enum class UnifyCase { SubsumeLeft, SubsumeRight, MsrBridge, Bottom };

std::string_view to_string(UnifyCase c);

struct TraceStep {
  std::string var;
  TypeSet left;
  TypeSet right;
  UnifyCase kind;
  TypeSet output;        // empty for bottom and msr-bridge
  std::string relation;  // msr-bridge only, e.g. HASCONTENT(book, infContent)
  int phase = 1;         // 1: local unification, 2: bridging

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Final type of one variable's annotation fold within one branch.
struct FoldResult {
  std::string var;
  std::size_t branch;
  int phase;
  TypeSet result;
};

struct UnifyTrace {
  std::vector<TraceStep> steps;
  std::vector<FoldResult> folds;
};

/// No branch and no sense survives, even after bridging.
class NoReading : public std::runtime_error {
 public:
  NoReading(std::string what, UnifyTrace trace);
  const UnifyTrace& trace() const { return trace_; }

 private:
  UnifyTrace trace_;
};

/// Every translation of the tree; one per combination of verb senses.
std::vector<Formula> translate_all(const ParseTree& tree, const Lexicon& lex,
                                   const Ontology& g);

/// The initial, unresolved logical form. Throws TranslationError when a verb
/// in the tree has more than one sense (use translate_all).
Formula translate(const ParseTree& tree, const Lexicon& lex, const Ontology& g);

struct CastStep {
  std::string pred;  // the adjective doing the cast
  std::string from;
  std::string to;
  bool allowed;
};

/// Walks every cast chain inner-to-outer. A cast is allowed only upwards.
std::vector<CastStep> check_adjective_order(const Formula& f, const Ontology& g);

/// Replaces every cast chain containing a downward cast by bottom.
Formula block_downward_casts(const Formula& f, const Ontology& g);

struct ResolveOptions {
  /// One reading per surviving modifier attachment instead of keeping the
  /// disjunction inside a single reading.
  bool expand_attachment = false;
  /// Test hook: the order in which a variable's `count` annotations are
  /// folded. Must return a permutation of 0..count-1.
  std::function<std::vector<std::size_t>(const std::string& var, std::size_t count)>
      fold_order;
};

struct Resolution {
  std::vector<Reading> readings;
  UnifyTrace trace;
  std::vector<std::string> warnings;
};

/// Local unification, then msr bridging for variables no branch could type.
/// Throws NoReading.
Resolution resolve(const Formula& f, const Ontology& g, const ResolveOptions& options = {});

struct InterpretResult {
  std::string sentence;
  std::vector<std::string> tokens;
  std::vector<std::string> initial_forms;  // annotated, one per translation
  std::vector<CastStep> casts;
  std::vector<Reading> readings;
  UnifyTrace trace;
  std::vector<std::string> warnings;

  bool blocked() const { return readings.empty(); }
};

/// tokenize, parse, translate, cast check, resolve. Parse and translation
/// errors propagate; a sentence without readings yields an empty result
/// with a warning.
InterpretResult interpret(std::string_view sentence, const Lexicon& lex, const Ontology& g,
                          const ResolveOptions& options = {});

}  // namespace ontic
