// Reference implementations the library is checked against. They share no
// code with src/ and favour the obvious algorithm over the fast one.
#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ontic/logical_form.hpp"

namespace oracle {

/// A random rooted DAG: node 0 is the root, every other node has between one
/// and three parents drawn from earlier nodes.
struct Dag {
  std::vector<std::string> names;
  std::vector<std::vector<int>> parents;
  struct Rel {
    std::string name;
    int a, b;
  };
  std::vector<Rel> relations;

  int size() const { return static_cast<int>(names.size()); }

  std::string ontology_text() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
      out += "type " + names[i];
      for (std::size_t p = 0; p < parents[i].size(); ++p)
        out += (p ? ", " : " < ") + names[parents[i][p]];
      out += "\n";
    }
    for (const auto& r : relations)
      out += "rel " + r.name + "(" + names[r.a] + ", " + names[r.b] + ")\n";
    return out;
  }
};

inline Dag random_dag(std::mt19937& rng, int max_nodes = 15, int max_relations = 6) {
  std::uniform_int_distribution<int> count(1, max_nodes);
  Dag d;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    d.names.push_back(i == 0 ? "thing" : "t" + std::to_string(i));
    std::vector<int> ps;
    if (i > 0) {
      std::uniform_int_distribution<int> k(1, std::min(3, i));
      std::uniform_int_distribution<int> pick(0, i - 1);
      int want = k(rng);
      while (static_cast<int>(ps.size()) < want) {
        int p = pick(rng);
        if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
      }
    }
    d.parents.push_back(ps);
  }
  std::uniform_int_distribution<int> rels(0, max_relations);
  std::uniform_int_distribution<int> node(0, n - 1);
  const int m = rels(rng);
  for (int r = 0; r < m; ++r) d.relations.push_back({"R" + std::to_string(r), node(rng), node(rng)});
  return d;
}

/// Floyd-Warshall transitive closure; le[s][t] means s <= t.
inline std::vector<std::vector<bool>> closure(const Dag& d) {
  const int n = d.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    le[i][i] = true;
    for (int p : d.parents[i]) le[i][p] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  return le;
}

/// Expected pairwise unification: the subsumed type, else the most specific
/// relation spanning the pair (first declared among equals), else nothing.
struct Expected {
  enum Kind { Single, Bridge, Bottom } kind;
  std::string type;      // Single
  std::string relation;  // Bridge
};

inline Expected unify(const Dag& d, const std::vector<std::vector<bool>>& le, int s, int t,
                      bool allow_bridge) {
  if (le[s][t]) return {Expected::Single, d.names[s], {}};
  if (le[t][s]) return {Expected::Single, d.names[t], {}};
  if (!allow_bridge) return {Expected::Bottom, {}, {}};
  // A relation fits when the pair fits its slots in either orientation;
  // each fit is recorded as (relation, type s meets, type t meets).
  struct Fit {
    int rel, sa, ta;
  };
  std::vector<Fit> fit;
  for (int r = 0; r < static_cast<int>(d.relations.size()); ++r) {
    const auto& R = d.relations[r];
    if (le[s][R.a] && le[t][R.b]) fit.push_back({r, R.a, R.b});
    if (le[t][R.a] && le[s][R.b]) fit.push_back({r, R.b, R.a});
  }
  auto beats = [&](const Fit& x, const Fit& y) {
    return le[x.sa][y.sa] && le[x.ta][y.ta] && !(x.sa == y.sa && x.ta == y.ta);
  };
  int best = -1;
  for (const auto& f : fit) {
    bool dominated = std::any_of(fit.begin(), fit.end(), [&](const Fit& o) { return beats(o, f); });
    if (!dominated && (best < 0 || f.rel < best)) best = f.rel;
  }
  if (best >= 0) return {Expected::Bridge, {}, d.relations[best].name};
  return {Expected::Bottom, {}, {}};
}

// ---- formulas --------------------------------------------------------------

/// Random formula over variables x0..x{vars-1}, bound at the top in order.
/// Argument type sets are bottom with probability `p_bottom`.
class FormulaGen {
 public:
  FormulaGen(std::mt19937& rng, double p_bottom) : rng_(rng), p_bottom_(p_bottom) {}

  ontic::Formula operator()(int vars, int depth) {
    vars_ = vars;
    auto body = node(depth);
    for (int v = vars - 1; v >= 0; --v) {
      std::vector<ontic::TypeSet> ann{types()};
      body = ontic::Formula::quant(v % 2 ? ontic::Quantifier::Exists
                                         : ontic::Quantifier::ExistsUnique,
                                   var(v), ann, body);
    }
    return body;
  }

 private:
  std::string var(int v) const { return "x" + std::to_string(v); }

  ontic::TypeSet types() {
    if (std::bernoulli_distribution(p_bottom_)(rng_)) return ontic::TypeSet::bottom();
    static const std::vector<std::string> pool{"thing", "human", "cat", "physical", "event"};
    ontic::TypeSet t;
    const int n = std::uniform_int_distribution<int>(1, 2)(rng_);
    for (int i = 0; i < n; ++i)
      t.insert(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng_)]);
    return t;
  }

  ontic::Formula leaf() {
    const int arity = std::uniform_int_distribution<int>(1, 2)(rng_);
    std::vector<ontic::Arg> args;
    for (int i = 0; i < arity; ++i)
      args.push_back({var(std::uniform_int_distribution<int>(0, vars_ - 1)(rng_)), types()});
    return ontic::Formula::atom("P" + std::to_string(std::uniform_int_distribution<int>(0, 4)(rng_)),
                                std::move(args));
  }

  ontic::Formula node(int depth) {
    if (depth == 0) return leaf();
    switch (std::uniform_int_distribution<int>(0, 5)(rng_)) {
      case 0: return leaf();
      case 1: return ontic::Formula::bottom();
      case 2: return ontic::Formula::cast("C", "thing", node(depth - 1));
      case 3: return ontic::Formula::disj(node(depth - 1), node(depth - 1));
      default: return ontic::Formula::conj(node(depth - 1), node(depth - 1));
    }
  }

  std::mt19937& rng_;
  double p_bottom_;
  int vars_ = 1;
};

/// Whether the formula denotes bottom: a conjunction, binder, cast or atom
/// with any bottom part is bottom; a disjunction only when both sides are.
inline bool denotes_bottom(const ontic::Formula& f) {
  using namespace ontic;
  const auto& n = static_cast<const FormulaNode::variant&>(f.node());
  if (std::holds_alternative<Bottom>(n)) return true;
  if (auto* a = std::get_if<Atom>(&n))
    return std::any_of(a->args.begin(), a->args.end(),
                       [](const Arg& x) { return x.types.is_bottom(); });
  if (auto* q = std::get_if<Quant>(&n))
    return std::any_of(q->annotations.begin(), q->annotations.end(),
                       [](const TypeSet& t) { return t.is_bottom(); }) ||
           denotes_bottom(q->body);
  if (auto* c = std::get_if<And>(&n)) return denotes_bottom(c->left) || denotes_bottom(c->right);
  if (auto* o = std::get_if<Or>(&n)) return denotes_bottom(o->left) && denotes_bottom(o->right);
  return denotes_bottom(std::get<Cast>(n).inner);
}

/// Every atom in the formula, in pre-order.
inline void atoms(const ontic::Formula& f, std::vector<ontic::Atom>& out) {
  using namespace ontic;
  const auto& n = static_cast<const FormulaNode::variant&>(f.node());
  if (auto* a = std::get_if<Atom>(&n)) out.push_back(*a);
  else if (auto* q = std::get_if<Quant>(&n)) atoms(q->body, out);
  else if (auto* c = std::get_if<And>(&n)) atoms(c->left, out), atoms(c->right, out);
  else if (auto* o = std::get_if<Or>(&n)) atoms(o->left, out), atoms(o->right, out);
  else if (auto* k = std::get_if<Cast>(&n)) atoms(k->inner, out);
}

inline bool contains_bottom_node(const ontic::Formula& f) {
  using namespace ontic;
  const auto& n = static_cast<const FormulaNode::variant&>(f.node());
  if (std::holds_alternative<Bottom>(n)) return true;
  if (auto* q = std::get_if<Quant>(&n)) return contains_bottom_node(q->body);
  if (auto* c = std::get_if<And>(&n)) return contains_bottom_node(c->left) || contains_bottom_node(c->right);
  if (auto* o = std::get_if<Or>(&n)) return contains_bottom_node(o->left) || contains_bottom_node(o->right);
  if (auto* k = std::get_if<Cast>(&n)) return contains_bottom_node(k->inner);
  return false;
}

}  // namespace oracle
