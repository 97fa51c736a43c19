#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ontic/type_set.hpp"

namespace ontic {

enum class Quantifier { Exists, ExistsUnique, ForAll };

class Formula;
struct FormulaNode;

/// One argument position: the variable and the types this position demands.
struct Arg {
  std::string var;
  TypeSet types;
  friend bool operator==(const Arg&, const Arg&) = default;
};

struct Atom {
  std::string pred;
  std::vector<Arg> args;
};

/// Immutable, cheaply copyable formula handle.
class Formula {
 public:
  /// Bottom.
  Formula();

  static Formula bottom() { return {}; }
  static Formula atom(std::string pred, std::vector<Arg> args);
  /// `annotations` lists every type mention attached at the binding site; the
  /// `(x :: (thing . human))` has two.
  static Formula quant(Quantifier kind, std::string var, std::vector<TypeSet> annotations,
                       Formula body);
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  /// pred(inner :: target), where inner is an Atom or another Cast.
  static Formula cast(std::string pred, std::string target, Formula inner);

  /// Left-associated conjunction; bottom-free empty lists are not allowed.
  static Formula conj_all(const std::vector<Formula>& parts);

  const FormulaNode& node() const { return *node_; }
  bool is_bottom() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FormulaNode> node_;
};

struct Quant {
  Quantifier kind;
  std::string var;
  std::vector<TypeSet> annotations;
  Formula body;
};

struct And {
  Formula left;
  Formula right;
};

struct Or {
  Formula left;
  Formula right;
};

struct Cast {
  std::string pred;
  std::string target;
  Formula inner;
};

struct Bottom {};

struct FormulaNode : std::variant<Quant, Atom, And, Or, Cast, Bottom> {
  using variant::variant;
};

class UnboundVariable : public std::invalid_argument {
 public:
  explicit UnboundVariable(std::string_view var);
};

/// Every TypeSet attached to `var`, in left-to-right syntactic order: the
/// binding-site annotations, then each argument position (both sides of
/// every disjunction, casts included).
std::vector<TypeSet> collect_annotations(const Formula& f, std::string_view var);

/// Propagates bottom to a fixpoint: it annihilates conjunctions, quantifier
/// bodies, casts and atoms, and is the identity of disjunction. An atom with
/// a bottom argument, or a binder with a bottom annotation, is bottom.
Formula simplify(const Formula& f);

/// Deterministic rendering with variables renamed v1, v2, ... in binding
/// order. `(E! v1 :: human)(THIEF(v1))`.
std::string print_canonical(const Formula& f);

/// Like print_canonical, but keeps source variable names and shows every
/// annotation: `(E! Sheba :: thing)(THIEF(Sheba :: human))`.
std::string print_annotated(const Formula& f);

/// Variable names bound by quantifiers, in binding (pre-)order.
std::vector<std::string> bound_variables(const Formula& f);

/// Renames every occurrence (binders and arguments) of the mapped variables.
Formula rename_variables(const Formula& f,
                         const std::vector<std::pair<std::string, std::string>>& mapping);

}  // namespace ontic
