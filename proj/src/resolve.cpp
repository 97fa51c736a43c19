#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "ontic/interpreter.hpp"

namespace ontic {

std::string_view to_string(UnifyCase c) {
  switch (c) {
    case UnifyCase::SubsumeLeft: return "subsume-left";
    case UnifyCase::SubsumeRight: return "subsume-right";
    case UnifyCase::MsrBridge: return "msr-bridge";
    case UnifyCase::Bottom: return "bottom";
  }
  return "?";
}

NoReading::NoReading(std::string what, UnifyTrace trace)
    : std::runtime_error(std::move(what)), trace_(std::move(trace)) {}

namespace {

constexpr std::size_t kMaxBranches = 4096;

struct Binder {
  Quantifier kind;
  std::string var;
  std::vector<TypeSet> annotations;
};

struct Occurrence {
  std::size_t pos;  // argument position in the matrix; bridge atoms use ids past the end
  std::string var;
  TypeSet types;
};

/// One way through the disjunctions of the matrix: the side taken at each
/// reachable Or node and the argument positions that remain in play.
struct Branch {
  std::map<std::size_t, bool> choices;  // Or id -> took right side
  std::vector<Occurrence> occs;
};

/// A bridge introduced for `var`: the positions that failed are rebound to
/// `fresh`, which fills the other slot of `relation`.
struct Splice {
  std::string var;
  RelationSig relation;
  std::size_t left_slot = 0;
  std::string fresh;
  std::string event;  // verbal relations only
  std::vector<std::size_t> rebound;

  std::string key() const {
    std::string k = var + "|" + relation.to_string() + "|" + std::to_string(left_slot) + "|" +
                    fresh + "|" + event;
    for (auto p : rebound) k += "|" + std::to_string(p);
    return k;
  }
};

struct Survivor {
  std::size_t branch;
  std::vector<Binder> binders;  // including bridge binders
  std::map<std::string, TypeSet> types;
  std::vector<Splice> splices;
};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

class Enumerator {
 public:
  std::vector<Branch> run(const Formula& f) { return walk(f); }
  std::size_t positions() const { return next_pos_; }

 private:
  std::vector<Branch> walk(const Formula& f) {
    return std::visit(
        Overloaded{
            [&](const Atom& a) {
              Branch b;
              for (const auto& arg : a.args) b.occs.push_back({next_pos_++, arg.var, arg.types});
              return std::vector<Branch>{b};
            },
            [&](const And& a) {
              auto left = walk(a.left);
              auto right = walk(a.right);
              if (left.size() * right.size() > kMaxBranches)
                throw std::length_error("too many modifier attachments to enumerate");
              std::vector<Branch> out;
              for (const auto& l : left) {
                for (const auto& r : right) {
                  Branch b = l;
                  b.choices.insert(r.choices.begin(), r.choices.end());
                  b.occs.insert(b.occs.end(), r.occs.begin(), r.occs.end());
                  out.push_back(std::move(b));
                }
              }
              return out;
            },
            [&](const Or& o) {
              const auto id = next_or_++;
              auto out = walk(o.left);
              for (auto& b : out) b.choices[id] = false;
              auto right = walk(o.right);
              for (auto& b : right) {
                b.choices[id] = true;
                out.push_back(std::move(b));
              }
              return out;
            },
            [&](const Cast& c) { return walk(c.inner); },
            [&](const Bottom&) { return std::vector<Branch>{}; },
            [&](const Quant&) -> std::vector<Branch> {
              throw std::invalid_argument("resolve expects all binders in front of the matrix");
            },
        },
        static_cast<const FormulaNode::variant&>(f.node()));
  }

  std::size_t next_pos_ = 0;
  std::size_t next_or_ = 0;
};

/// Rebuilds the matrix for a group of branches, replaying the enumeration
/// order so Or ids and argument positions line up.
class Builder {
 public:
  Builder(const std::map<std::size_t, std::set<bool>>& sides,
          const std::map<std::size_t, std::string>& rebind,
          const std::map<std::string, std::string>& types)
      : sides_(sides), rebind_(rebind), types_(types) {}

  Formula run(const Formula& f) {
    return std::visit(
        Overloaded{
            [&](const Atom& a) {
              std::vector<Arg> args;
              for (const auto& arg : a.args) {
                auto pos = next_pos_++;
                auto it = rebind_.find(pos);
                const auto& var = it == rebind_.end() ? arg.var : it->second;
                args.push_back({var, TypeSet{types_.at(var)}});
              }
              return Formula::atom(a.pred, std::move(args));
            },
            [&](const And& a) {
              auto l = run(a.left);
              return Formula::conj(l, run(a.right));
            },
            [&](const Or& o) {
              const auto id = next_or_++;
              auto l = run(o.left);
              auto r = run(o.right);
              auto it = sides_.find(id);
              if (it == sides_.end()) return Formula::bottom();
              if (it->second.size() == 2) return Formula::disj(l, r);
              return *it->second.begin() ? r : l;
            },
            [&](const Cast& c) { return Formula::cast(c.pred, c.target, run(c.inner)); },
            [&](const auto&) { return Formula::bottom(); },
        },
        static_cast<const FormulaNode::variant&>(f.node()));
  }

 private:
  const std::map<std::size_t, std::set<bool>>& sides_;
  const std::map<std::size_t, std::string>& rebind_;
  const std::map<std::string, std::string>& types_;
  std::size_t next_pos_ = 0;
  std::size_t next_or_ = 0;
};

class Resolver {
 public:
  Resolver(const Ontology& g, const ResolveOptions& options) : g_(g), options_(options) {}

  Resolution run(const Formula& input) {
    Formula f = simplify(input);
    if (f.is_bottom()) throw NoReading("the form reduces to bottom", trace_);

    const Formula* cur = &f;
    while (auto* q = std::get_if<Quant>(&cur->node())) {
      binders_.push_back({q->kind, q->var, q->annotations});
      cur = &q->body;
    }
    matrix_ = *cur;

    Enumerator enumerator;
    branches_ = enumerator.run(matrix_);
    next_bridge_pos_ = enumerator.positions();

    // Phase 1: local unification in every branch.
    std::vector<std::optional<std::map<std::string, TypeSet>>> local(branches_.size());
    std::map<std::string, bool> typed_somewhere;
    for (std::size_t b = 0; b < branches_.size(); ++b) {
      auto types = fold_branch(b, binders_, branches_[b].occs, 1);
      bool ok = true;
      for (const auto& [var, t] : types) {
        if (!t.is_bottom()) typed_somewhere[var] = true;
        ok = ok && !t.is_bottom();
      }
      if (ok) local[b] = std::move(types);
    }

    std::vector<Survivor> survivors;
    for (std::size_t b = 0; b < branches_.size(); ++b)
      if (local[b]) survivors.push_back({b, binders_, *local[b], {}});

    // Phase 2: only when every branch failed locally, and only for variables
    // that no branch could type.
    if (survivors.empty()) {
      for (std::size_t b = 0; b < branches_.size(); ++b)
        if (auto s = bridge_branch(b, typed_somewhere)) survivors.push_back(std::move(*s));
    }
    if (survivors.empty()) throw NoReading("no branch survives type unification", trace_);

    Resolution out;
    out.readings = readings(survivors);
    out.trace = std::move(trace_);
    out.warnings = std::move(warnings_);
    sense_warnings(out);
    return out;
  }

 private:
  std::vector<std::size_t> order(const std::string& var, std::size_t n) const {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    if (options_.fold_order) {
      auto custom = options_.fold_order(var, n);
      auto sorted = custom;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != idx) throw std::invalid_argument("fold_order must return a permutation");
      idx = std::move(custom);
    }
    return idx;
  }

  void record(const std::string& var, const SetUnification& u, int phase) {
    for (const auto& p : u.pairs) {
      TraceStep step{var, TypeSet{p.left}, TypeSet{p.right}, UnifyCase::Bottom, {}, {}, phase};
      if (auto* single = std::get_if<UnifySingle>(&p.outcome)) {
        step.kind = single->type == p.left ? UnifyCase::SubsumeLeft : UnifyCase::SubsumeRight;
        step.output = TypeSet{single->type};
      } else if (auto* bridge = std::get_if<UnifyBridge>(&p.outcome)) {
        step.kind = UnifyCase::MsrBridge;
        step.relation = bridge->relation.to_string();
      }
      add_step(std::move(step));
    }
  }

  void add_step(TraceStep step) {
    if (std::find(trace_.steps.begin(), trace_.steps.end(), step) == trace_.steps.end())
      trace_.steps.push_back(std::move(step));
  }

  TypeSet fold(const std::string& var, const std::vector<TypeSet>& items, int phase) {
    if (items.empty()) return TypeSet{std::string(Ontology::kRoot)};
    auto idx = order(var, items.size());
    TypeSet acc = items[idx[0]];
    for (std::size_t i = 1; i < idx.size() && !acc.is_bottom(); ++i) {
      auto u = g_.unify_sets(acc, items[idx[i]], false);
      record(var, u, phase);
      acc = std::move(u.types);
    }
    return acc;
  }

  std::map<std::string, TypeSet> fold_branch(std::size_t branch,
                                             const std::vector<Binder>& binders,
                                             const std::vector<Occurrence>& occs, int phase) {
    std::map<std::string, TypeSet> out;
    for (const auto& b : binders) {
      std::vector<TypeSet> items = b.annotations;
      for (const auto& o : occs)
        if (o.var == b.var) items.push_back(o.types);
      auto result = fold(b.var, items, phase);
      trace_.folds.push_back({b.var, branch, phase, result});
      out[b.var] = std::move(result);
    }
    return out;
  }

  std::string fresh(const std::string& base, std::set<std::string>& used) const {
    for (int i = 1;; ++i) {
      auto name = base + std::to_string(i);
      if (used.insert(name).second) return name;
    }
  }

  std::optional<Survivor> bridge_branch(std::size_t b,
                                        const std::map<std::string, bool>& typed_somewhere) {
    const auto& branch = branches_[b];
    std::set<std::string> used;
    for (const auto& bd : binders_) used.insert(bd.var);

    std::vector<Splice> splices;
    std::map<std::size_t, std::string> rebind;
    for (const auto& bd : binders_) {
      if (typed_somewhere.count(bd.var)) continue;

      // The binder annotations fix the lexical type; argument positions that
      // cannot be reconciled with it are bridged.
      TypeSet acc = fold(bd.var, bd.annotations, 2);
      if (acc.is_bottom()) return std::nullopt;

      std::vector<TypeSet> items = bd.annotations;
      std::vector<const Occurrence*> occs;
      for (const auto& o : branch.occs)
        if (o.var == bd.var) {
          items.push_back(o.types);
          occs.push_back(&o);
        }
      for (auto i : order(bd.var, items.size())) {
        if (i < bd.annotations.size()) continue;
        const auto& occ = *occs[i - bd.annotations.size()];
        auto local = g_.unify_sets(acc, occ.types, false);
        if (!local.types.is_bottom()) {
          record(bd.var, local, 2);
          acc = std::move(local.types);
          continue;
        }
        auto bridged = g_.unify_sets(acc, occ.types, true);
        record(bd.var, bridged, 2);
        if (bridged.bridges.empty()) return std::nullopt;
        const auto& chosen = bridged.bridges.front();
        note_bridge(bd.var, bridged.bridges);

        auto it = std::find_if(splices.begin(), splices.end(), [&](const Splice& s) {
          return s.var == bd.var && s.relation == chosen.relation &&
                 s.left_slot == chosen.left_slot;
        });
        if (it == splices.end()) {
          Splice s{bd.var, chosen.relation, chosen.left_slot, {}, {}, {}};
          if (s.relation.verbal) s.event = fresh("a", used);
          s.fresh = fresh("x", used);
          splices.push_back(std::move(s));
          it = std::prev(splices.end());
        }
        it->rebound.push_back(occ.pos);
        rebind[occ.pos] = it->fresh;
        acc = TypeSet{chosen.kept_left};
      }
    }
    if (splices.empty()) return std::nullopt;

    Survivor out{b, binders_, {}, splices};
    std::vector<Occurrence> occs;
    for (const auto& o : branch.occs) {
      auto it = rebind.find(o.pos);
      occs.push_back({o.pos, it == rebind.end() ? o.var : it->second, o.types});
    }
    const TypeSet activity{g_.activity_type()};
    for (const auto& s : splices) {
      const auto& arg = s.relation.arg_types;
      const std::size_t other = 1 - s.left_slot;
      std::string fillers[2];
      fillers[s.left_slot] = s.var;
      fillers[other] = s.fresh;
      if (s.relation.verbal) {
        out.binders.push_back({Quantifier::Exists, s.event, {activity}});
        occs.push_back({next_bridge_pos_++, s.event, activity});
        occs.push_back({next_bridge_pos_++, s.event, activity});
        occs.push_back({next_bridge_pos_++, fillers[0], TypeSet{arg[0]}});
        occs.push_back({next_bridge_pos_++, s.event, activity});
        occs.push_back({next_bridge_pos_++, fillers[1], TypeSet{arg[1]}});
      } else {
        occs.push_back({next_bridge_pos_++, fillers[0], TypeSet{arg[0]}});
        occs.push_back({next_bridge_pos_++, fillers[1], TypeSet{arg[1]}});
      }
      out.binders.push_back({Quantifier::Exists, s.fresh, {TypeSet{arg[other]}}});
    }

    out.types = fold_branch(b, out.binders, occs, 2);
    for (const auto& [var, t] : out.types)
      if (t.is_bottom()) return std::nullopt;
    return out;
  }

  void note_bridge(const std::string& var, const std::vector<UnifyBridge>& bridges) {
    const auto& chosen = bridges.front();
    if (chosen.tie)
      warnings_.push_back("msr tie for " + var + " (" + chosen.kept_left + ", " +
                          chosen.kept_right + "): chose " + chosen.relation.to_string() +
                          ", the earliest declared");
    for (const auto& other : bridges)
      if (!(other.relation == chosen.relation)) {
        warnings_.push_back("several bridges for " + var + ": chose " +
                            chosen.relation.to_string() + " over " +
                            other.relation.to_string());
        break;
      }
  }

  static Formula bridge_block(const Splice& s, const std::map<std::string, std::string>& types) {
    auto arg = [&](const std::string& var) { return Arg{var, TypeSet{types.at(var)}}; };
    std::string fillers[2];
    fillers[s.left_slot] = s.var;
    fillers[1 - s.left_slot] = s.fresh;
    if (!s.relation.verbal)
      return Formula::atom(s.relation.name, {arg(fillers[0]), arg(fillers[1])});
    return Formula::conj_all({
        Formula::atom(s.relation.activity_pred, {arg(s.event)}),
        Formula::atom("SUBJECT", {arg(s.event), arg(fillers[0])}),
        Formula::atom("OBJECT", {arg(s.event), arg(fillers[1])}),
    });
  }

  struct Candidate {
    const Survivor* survivor;
    std::map<std::string, std::string> types;
  };

  std::vector<Reading> readings(const std::vector<Survivor>& survivors) {
    // Each surviving branch expands into one candidate per combination of the
    // senses still open after unification.
    std::vector<Candidate> candidates;
    for (const auto& s : survivors) {
      std::vector<Candidate> partial{{&s, {}}};
      for (const auto& b : s.binders) {
        std::vector<Candidate> next;
        for (const auto& c : partial)
          for (const auto& t : s.types.at(b.var)) {
            auto copy = c;
            copy.types[b.var] = t;
            next.push_back(std::move(copy));
          }
        partial = std::move(next);
      }
      candidates.insert(candidates.end(), partial.begin(), partial.end());
    }

    // Candidates that agree on every type and bridge differ only in modifier
    // attachment and share one reading.
    std::vector<std::pair<std::string, std::vector<const Candidate*>>> groups;
    for (const auto& c : candidates) {
      std::string key;
      for (const auto& b : c.survivor->binders) key += b.var + "=" + c.types.at(b.var) + ";";
      for (const auto& s : c.survivor->splices) key += s.key() + ";";
      if (options_.expand_attachment) key += "#" + std::to_string(c.survivor->branch);
      auto it = std::find_if(groups.begin(), groups.end(),
                             [&](const auto& g) { return g.first == key; });
      if (it == groups.end()) groups.push_back({key, {&c}});
      else it->second.push_back(&c);
    }

    std::vector<Reading> out;
    for (const auto& [key, members] : groups) {
      const auto& first = *members.front();
      std::map<std::size_t, std::set<bool>> sides;
      for (const auto* c : members)
        for (const auto& [id, right] : branches_[c->survivor->branch].choices)
          sides[id].insert(right);
      std::map<std::size_t, std::string> rebind;
      for (const auto& s : first.survivor->splices)
        for (auto p : s.rebound) rebind[p] = s.fresh;

      Formula body = Builder(sides, rebind, first.types).run(matrix_);
      for (const auto& s : first.survivor->splices)
        body = Formula::conj(body, bridge_block(s, first.types));
      const auto& binders = first.survivor->binders;
      for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        body = Formula::quant(it->kind, it->var, {TypeSet{first.types.at(it->var)}}, body);
      body = simplify(body);
      out.push_back({body, print_canonical(body)});
    }
    return out;
  }

  void sense_warnings(Resolution& out) const {
    for (const auto& b : binders_) {
      for (const auto& ann : b.annotations) {
        if (ann.size() < 2) continue;
        for (const auto& t : ann) {
          bool kept = false;
          for (const auto& r : out.readings)
            for (auto ann2 : collect_annotations(r.form, b.var)) kept = kept || ann2.contains(t);
          if (!kept) out.warnings.push_back("sense " + t + " of " + b.var + " pruned");
        }
      }
    }
  }

  const Ontology& g_;
  const ResolveOptions& options_;
  std::vector<Binder> binders_;
  Formula matrix_;
  std::vector<Branch> branches_;
  std::size_t next_bridge_pos_ = 0;
  UnifyTrace trace_;
  std::vector<std::string> warnings_;
};

}  // namespace

Resolution resolve(const Formula& f, const Ontology& g, const ResolveOptions& options) {
  return Resolver(g, options).run(f);
}

}  // namespace ontic
