#include <algorithm>

#include "ontic/interpreter.hpp"

namespace ontic {

namespace {

// Steps of one cast chain rooted at `c`, innermost first.
std::vector<CastStep> chain_steps(const Cast& outer, const Ontology& g) {
  std::vector<const Cast*> chain{&outer};
  const Formula* inner = &outer.inner;
  while (auto* c = std::get_if<Cast>(&inner->node())) {
    chain.push_back(c);
    inner = &c->inner;
  }
  std::vector<CastStep> steps;
  auto* atom = std::get_if<Atom>(&inner->node());
  if (!atom || atom->args.empty()) return steps;

  TypeSet current = atom->args.front().types;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const auto& target = (*it)->target;
    bool allowed = std::any_of(current.begin(), current.end(),
                               [&](const std::string& s) { return g.subsumes(s, target); });
    steps.push_back({(*it)->pred, current.to_string(), target, allowed});
    current = TypeSet{target};
  }
  return steps;
}

void walk_casts(const Formula& f, const Ontology& g, std::vector<CastStep>& out) {
  const auto& node = f.node();
  if (auto* c = std::get_if<Cast>(&node)) {
    auto steps = chain_steps(*c, g);
    out.insert(out.end(), steps.begin(), steps.end());
  } else if (auto* q = std::get_if<Quant>(&node)) {
    walk_casts(q->body, g, out);
  } else if (auto* a = std::get_if<And>(&node)) {
    walk_casts(a->left, g, out);
    walk_casts(a->right, g, out);
  } else if (auto* o = std::get_if<Or>(&node)) {
    walk_casts(o->left, g, out);
    walk_casts(o->right, g, out);
  }
}

Formula block(const Formula& f, const Ontology& g) {
  const auto& node = f.node();
  if (auto* c = std::get_if<Cast>(&node)) {
    auto steps = chain_steps(*c, g);
    bool ok = std::all_of(steps.begin(), steps.end(), [](const CastStep& s) { return s.allowed; });
    return ok ? f : Formula::bottom();
  }
  if (auto* q = std::get_if<Quant>(&node))
    return Formula::quant(q->kind, q->var, q->annotations, block(q->body, g));
  if (auto* a = std::get_if<And>(&node))
    return Formula::conj(block(a->left, g), block(a->right, g));
  if (auto* o = std::get_if<Or>(&node))
    return Formula::disj(block(o->left, g), block(o->right, g));
  return f;
}

void merge_trace(UnifyTrace& into, const UnifyTrace& from) {
  for (const auto& s : from.steps)
    if (std::find(into.steps.begin(), into.steps.end(), s) == into.steps.end())
      into.steps.push_back(s);
  into.folds.insert(into.folds.end(), from.folds.begin(), from.folds.end());
}

}  // namespace

std::vector<CastStep> check_adjective_order(const Formula& f, const Ontology& g) {
  std::vector<CastStep> out;
  walk_casts(f, g, out);
  return out;
}

Formula block_downward_casts(const Formula& f, const Ontology& g) { return block(f, g); }

InterpretResult interpret(std::string_view sentence, const Lexicon& lex, const Ontology& g,
                          const ResolveOptions& options) {
  InterpretResult out;
  out.sentence = std::string(sentence);
  out.tokens = tokenize(sentence, lex);
  auto warn = [&out](std::string w) {
    if (std::find(out.warnings.begin(), out.warnings.end(), w) == out.warnings.end())
      out.warnings.push_back(std::move(w));
  };
  auto tree = parse(out.tokens, lex);

  for (const auto& form : translate_all(tree, lex, g)) {
    out.initial_forms.push_back(print_annotated(form));
    auto casts = check_adjective_order(form, g);
    for (const auto& c : casts)
      if (!c.allowed)
        warn("downward cast blocked: " + c.pred + " casts " + c.from + " to " + c.to);
    out.casts.insert(out.casts.end(), casts.begin(), casts.end());
    try {
      auto res = resolve(block_downward_casts(form, g), g, options);
      merge_trace(out.trace, res.trace);
      for (auto& r : res.readings) {
        bool seen = std::any_of(out.readings.begin(), out.readings.end(),
                                [&](const Reading& x) { return x.gloss == r.gloss; });
        if (!seen) out.readings.push_back(std::move(r));
      }
      for (auto& w : res.warnings) warn(std::move(w));
    } catch (const NoReading& e) {
      merge_trace(out.trace, e.trace());
      warn(std::string("no reading: ") + e.what());
    }
  }
  if (!out.readings.empty()) {
    // a failed verb sense is not worth reporting when another one succeeded
    std::erase_if(out.warnings, [](const std::string& w) { return w.rfind("no reading:", 0) == 0; });
  }
  return out;
}

}  // namespace ontic
