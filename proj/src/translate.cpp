#include <algorithm>
#include <set>

#include "ontic/interpreter.hpp"
#include "text_util.hpp"

namespace ontic {

namespace {

struct Binder {
  Quantifier kind;
  std::string var;
  std::vector<TypeSet> annotations;
};

/// Builds one translation for a fixed choice of verb senses. Noun-phrase
/// variables are bound first (subject, object), then event variables.
class Translator {
 public:
  Translator(const Lexicon& lex, const Ontology& g, std::vector<std::size_t> verb_choice)
      : lex_(lex), g_(g), verb_choice_(std::move(verb_choice)) {}

  Formula run(const ParseTree& tree) {
    std::visit([&](const auto& t) { clause(t); }, tree);
    std::vector<Binder> binders = nps_;
    binders.insert(binders.end(), events_.begin(), events_.end());
    Formula body = conjuncts_.empty() ? Formula::bottom() : Formula::conj_all(conjuncts_);
    for (auto it = binders.rbegin(); it != binders.rend(); ++it)
      body = Formula::quant(it->kind, it->var, it->annotations, body);
    return body;
  }

 private:
  void clause(const CopulaNP& c) {
    auto subject = np(c.subject);
    predicate_noun(subject, c.pred.noun, c.pred.adjs);
  }

  void clause(const CopulaAdj& c) {
    auto subject = np(c.subject);
    conjuncts_.push_back(adjectives(c.adjs, subject));
  }

  void clause(const Transitive& c) {
    auto subject = np(c.subject);
    auto object = np(c.object);
    verb(c.verb, subject, object);
  }

  void clause(const CoordTransitive& c) {
    auto subject = np(c.subject);
    auto object = np(c.object);
    for (const auto& v : c.verbs) verb(v, subject, object);
  }

  std::string fresh(std::string base) {
    if (base.empty() || !text::is_identifier(base)) base = "x";
    std::string name = base;
    for (int i = 1; used_.count(name); ++i) name = base + std::to_string(i);
    used_.insert(name);
    return name;
  }

  Binder& binder(const std::string& var) {
    for (auto* list : {&nps_, &events_})
      for (auto& b : *list)
        if (b.var == var) return b;
    throw std::logic_error("no binder for " + var);
  }

  std::string np(const NP& phrase) {
    if (auto* p = std::get_if<ProperNP>(&phrase)) {
      auto senses = lex_.lookup(p->name, PartOfSpeech::ProperNoun);
      if (senses.empty()) throw TranslationError("no lexical entry for name '" + p->name + "'");
      const auto& pn = std::get<ProperName>(senses.front());
      auto var = fresh(p->name);
      nps_.push_back({Quantifier::ExistsUnique, var,
                      {TypeSet{pn.type.value_or(std::string(Ontology::kRoot))}}});
      return var;
    }
    const bool definite = std::holds_alternative<DefNP>(phrase);
    const auto& noun = definite ? std::get<DefNP>(phrase).noun : std::get<IndefNP>(phrase).noun;
    const auto& adjs = definite ? std::get<DefNP>(phrase).adjs : std::get<IndefNP>(phrase).adjs;
    auto var = fresh(text::lower(noun));
    nps_.push_back({definite ? Quantifier::ExistsUnique : Quantifier::Exists, var, {}});
    predicate_noun(var, noun, adjs);
    return var;
  }

  // The noun's content said of `var`: a type (set) at the binder, a
  // predicate, or a defined-noun event template. Adjectives follow.
  void predicate_noun(const std::string& var, const std::string& noun,
                      const std::vector<std::string>& adjs) {
    auto senses = lex_.lookup(noun, PartOfSpeech::Noun);
    if (senses.empty()) throw TranslationError("no lexical entry for noun '" + noun + "'");

    const bool all_types = std::all_of(senses.begin(), senses.end(), [](const Sense& s) {
      return std::holds_alternative<TypeSense>(s);
    });
    if (all_types) {
      TypeSet types;
      for (const auto& s : senses) types.insert(std::get<TypeSense>(s).type);
      binder(var).annotations.push_back(types);
      if (!adjs.empty()) conjuncts_.push_back(adjectives(adjs, var));
      return;
    }
    if (senses.size() != 1)
      throw TranslationError("noun '" + noun + "' mixes type senses with predicate senses");

    auto& b = binder(var);
    if (auto* pred = std::get_if<PredSense>(&senses.front())) {
      if (b.annotations.empty()) b.annotations.push_back(TypeSet{pred->arg_types[0]});
      conjuncts_.push_back(Formula::atom(pred->pred, {{var, TypeSet{pred->arg_types[0]}}}));
      if (!adjs.empty()) conjuncts_.push_back(adjectives(adjs, var));
      return;
    }
    const auto& def = std::get<DefinedNounSense>(senses.front());
    if (b.annotations.empty()) b.annotations.push_back(TypeSet{def.subject_type});
    auto event = fresh("a");
    events_.push_back({Quantifier::Exists, event, {TypeSet{def.event_type}}});
    conjuncts_.push_back(Formula::atom(
        def.role, {{event, TypeSet{g_.activity_type()}}, {var, TypeSet{def.subject_type}}}));
    // Modifying a defined noun leaves open whether the adjective describes
    // the agent or the event.
    if (!adjs.empty())
      conjuncts_.push_back(Formula::disj(adjectives(adjs, var), adjectives(adjs, event)));
  }

  // A single adjective is an atom; a stack nests outer-to-inner in surface
  // order, each outer adjective casting the inner predication to its type.
  Formula adjectives(const std::vector<std::string>& adjs, const std::string& var) {
    std::vector<PredSense> preds;
    for (const auto& adj : adjs) {
      auto senses = lex_.lookup(adj, PartOfSpeech::Adjective);
      if (senses.empty()) throw TranslationError("no lexical entry for adjective '" + adj + "'");
      PredSense merged{std::get<PredSense>(senses.front()).pred, {}};
      for (const auto& s : senses) {
        const auto& p = std::get<PredSense>(s);
        if (p.pred != merged.pred)
          throw TranslationError("adjective '" + adj + "' has senses with different predicates");
        merged.arg_types.push_back(p.arg_types[0]);
      }
      preds.push_back(std::move(merged));
    }
    const auto& innermost = preds.back();
    Formula out = Formula::atom(innermost.pred, {{var, TypeSet(innermost.arg_types)}});
    for (std::size_t i = preds.size() - 1; i-- > 0;) {
      if (TypeSet(preds[i].arg_types).size() != 1)
        throw TranslationError("adjective '" + adjs[i] + "' is ambiguous in a stacked position");
      out = Formula::cast(preds[i].pred, preds[i].arg_types[0], out);
    }
    return out;
  }

  void verb(const std::string& word, const std::string& subject, const std::string& object) {
    auto senses = lex_.lookup(word, PartOfSpeech::Verb);
    if (senses.empty()) throw TranslationError("no lexical entry for verb '" + word + "'");
    const auto choice = verb_index_ < verb_choice_.size() ? verb_choice_[verb_index_] : 0;
    ++verb_index_;
    const auto& sense = senses.at(choice);

    if (auto* rel = std::get_if<PredSense>(&sense)) {
      conjuncts_.push_back(Formula::atom(
          rel->pred, {{subject, TypeSet{rel->arg_types[0]}}, {object, TypeSet{rel->arg_types[1]}}}));
      return;
    }
    const auto& frame = std::get<VerbFrame>(sense);
    if (!frame.object_type)
      throw TranslationError("verb '" + word + "' takes no object but is used transitively");
    const TypeSet activity{g_.activity_type()};
    auto event = fresh("a");
    events_.push_back({Quantifier::Exists, event, {activity}});
    conjuncts_.push_back(Formula::atom(frame.activity_pred, {{event, activity}}));
    conjuncts_.push_back(
        Formula::atom("SUBJECT", {{event, activity}, {subject, TypeSet{frame.subject_type}}}));
    conjuncts_.push_back(
        Formula::atom("OBJECT", {{event, activity}, {object, TypeSet{*frame.object_type}}}));
  }

  const Lexicon& lex_;
  const Ontology& g_;
  std::vector<std::size_t> verb_choice_;
  std::size_t verb_index_ = 0;
  std::set<std::string> used_;
  std::vector<Binder> nps_;
  std::vector<Binder> events_;
  std::vector<Formula> conjuncts_;
};

std::vector<std::string> verbs_of(const ParseTree& tree) {
  if (auto* t = std::get_if<Transitive>(&tree)) return {t->verb};
  if (auto* t = std::get_if<CoordTransitive>(&tree)) return t->verbs;
  return {};
}

}  // namespace

std::vector<Formula> translate_all(const ParseTree& tree, const Lexicon& lex,
                                   const Ontology& g) {
  auto verbs = verbs_of(tree);
  std::vector<std::size_t> counts;
  for (const auto& v : verbs) {
    auto n = lex.lookup(v, PartOfSpeech::Verb).size();
    if (n == 0) throw TranslationError("no lexical entry for verb '" + v + "'");
    counts.push_back(n);
  }
  std::vector<Formula> out;
  std::vector<std::size_t> choice(verbs.size(), 0);
  for (;;) {
    out.push_back(Translator(lex, g, choice).run(tree));
    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < counts[i]) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
  }
  return out;
}

Formula translate(const ParseTree& tree, const Lexicon& lex, const Ontology& g) {
  auto all = translate_all(tree, lex, g);
  if (all.size() != 1)
    throw TranslationError("the sentence has " + std::to_string(all.size()) +
                           " verb-sense combinations; use translate_all");
  return all.front();
}

}  // namespace ontic
