#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ontic/type_set.hpp"

namespace ontic {

/// Raised by load_ontology for malformed or inconsistent sources.
class OntologyError : public std::runtime_error {
 public:
  OntologyError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A query named a type the ontology does not declare.
class UnknownType : public std::out_of_range {
 public:
  explicit UnknownType(std::string_view name);
};

/// A type-signed relation, e.g. DRIVE(human, car).
struct RelationSig {
  std::string name;
  std::vector<std::string> arg_types;
  /// Verbal relations are realized as a reified activity when bridged.
  bool verbal = false;
  std::string activity_pred;
  std::size_t order = 0;  // declaration order, the msr tie-break

  std::size_t arity() const { return arg_types.size(); }
  std::string to_string() const;

  friend bool operator==(const RelationSig& a, const RelationSig& b) {
    return a.name == b.name && a.arg_types == b.arg_types;
  }
};

struct UnifySingle {
  std::string type;
  friend bool operator==(const UnifySingle&, const UnifySingle&) = default;
};

/// Neither type subsumes the other, but a salient relation links them. Both
/// original types survive; `left_slot` is the relation argument filled by
/// `kept_left` (the other input fills `1 - left_slot`).
struct UnifyBridge {
  RelationSig relation;
  std::string kept_left;
  std::string kept_right;
  std::size_t left_slot = 0;
  bool tie = false;  // msr picked among incomparable candidates
  friend bool operator==(const UnifyBridge&, const UnifyBridge&) = default;
};

struct UnifyBottom {
  friend bool operator==(const UnifyBottom&, const UnifyBottom&) = default;
};

using UnifyOutcome = std::variant<UnifySingle, UnifyBridge, UnifyBottom>;

std::string to_string(const UnifyOutcome& outcome);

/// One pairwise unification performed by Ontology::unify_sets.
struct PairUnification {
  std::string left;
  std::string right;
  UnifyOutcome outcome;
};

struct SetUnification {
  TypeSet types;                     // every Single result; bottom if none
  std::vector<UnifyBridge> bridges;  // only populated when bridging is allowed
  std::vector<PairUnification> pairs;
};

/// The result of an msr query with the orientation the query types took.
struct SalientMatch {
  RelationSig relation;
  std::size_t left_slot = 0;
  bool tie = false;
};

/// Strongly-typed subsumption hierarchy rooted at `thing`, plus the registry
/// of type-signed relations. Immutable once loaded.
class Ontology {
 public:
  static constexpr std::string_view kRoot = "thing";

  static Ontology load(std::string_view source);
  static Ontology load_file(const std::filesystem::path& path);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& types() const { return names_; }
  bool contains(std::string_view type) const;
  /// Declared parents of `type`, in declaration order.
  std::vector<std::string> parents(std::string_view type) const;
  const std::vector<RelationSig>& relations() const { return relations_; }

  /// s <= t: t is reachable from s along parent edges (reflexive).
  bool subsumes(std::string_view s, std::string_view t) const;

  UnifyOutcome unify_pair(std::string_view s, std::string_view t,
                          bool allow_bridge) const;

  /// Most salient binary relation between objects of types s and t.
  std::optional<RelationSig> msr(std::string_view s, std::string_view t) const;
  std::optional<SalientMatch> salient_match(std::string_view s,
                                            std::string_view t) const;

  SetUnification unify_sets(const TypeSet& s, const TypeSet& t,
                            bool allow_bridge) const;

  /// The type reified verb events range over: `activity` when declared,
  /// otherwise the root.
  std::string activity_type() const;

  /// Ontology file text that loads back to an identical ontology.
  std::string print() const;

 private:
  Ontology() = default;

  std::size_t id(std::string_view type) const;
  bool below(std::size_t s, std::size_t t) const {
    return closure_[s * names_.size() + t] != 0;
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<std::uint8_t> closure_;  // row-major reachability matrix
  std::vector<RelationSig> relations_;
};

}  // namespace ontic
