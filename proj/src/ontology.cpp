#include "ontic/ontology.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "text_util.hpp"

namespace ontic {

OntologyError::OntologyError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

UnknownType::UnknownType(std::string_view name)
    : std::out_of_range("unknown type '" + std::string(name) + "'") {}

std::string RelationSig::to_string() const {
  std::string out = name + "(";
  for (std::size_t i = 0; i < arg_types.size(); ++i) {
    if (i) out += ", ";
    out += arg_types[i];
  }
  return out + ")";
}

std::string to_string(const UnifyOutcome& outcome) {
  if (auto* single = std::get_if<UnifySingle>(&outcome)) return single->type;
  if (auto* bridge = std::get_if<UnifyBridge>(&outcome))
    return bridge->relation.to_string();
  return "_|_";
}

namespace {

struct TypeDecl {
  std::string name;
  std::vector<std::string> parents;
  std::size_t line;
};

struct RelDecl {
  RelationSig sig;
  std::size_t line;
};

}  // namespace

Ontology Ontology::load(std::string_view source) {
  std::vector<TypeDecl> types;
  std::vector<RelDecl> rels;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    auto end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    auto line = text::strip_comment(source.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;

    auto space = line.find_first_of(" \t");
    auto keyword = line.substr(0, space);
    auto rest = space == std::string_view::npos ? std::string_view{}
                                                : text::trim(line.substr(space));
    if (keyword == "type") {
      TypeDecl decl{{}, {}, line_no};
      auto lt = rest.find('<');
      auto name = text::trim(rest.substr(0, lt));
      if (!text::is_identifier(name))
        throw OntologyError(line_no, "malformed type name '" + std::string(name) + "'");
      decl.name = name;
      if (lt != std::string_view::npos) {
        for (auto parent : text::split(rest.substr(lt + 1), ',')) {
          if (!text::is_identifier(parent))
            throw OntologyError(line_no, "malformed parent '" + std::string(parent) + "'");
          decl.parents.emplace_back(parent);
        }
      }
      types.push_back(std::move(decl));
    } else if (keyword == "rel") {
      auto close = rest.find(')');
      std::string_view name;
      std::vector<std::string_view> args;
      if (close == std::string_view::npos ||
          !text::parse_call(rest.substr(0, close + 1), name, args) ||
          !text::is_identifier(name))
        throw OntologyError(line_no, "malformed relation '" + std::string(rest) + "'");
      if (args.empty() || args.size() > 2)
        throw OntologyError(line_no, "relation " + std::string(name) + " must have arity 1 or 2");
      RelationSig sig;
      sig.name = name;
      for (auto arg : args) {
        if (!text::is_identifier(arg))
          throw OntologyError(line_no, "malformed argument type '" + std::string(arg) + "'");
        sig.arg_types.emplace_back(arg);
      }
      auto tags = text::words(rest.substr(close + 1));
      if (!tags.empty()) {
        if (tags[0] != "verbal" || tags.size() > 2)
          throw OntologyError(line_no, "unexpected text after relation signature");
        if (sig.arity() != 2)
          throw OntologyError(line_no, "only binary relations can be verbal");
        sig.verbal = true;
        sig.activity_pred = tags.size() == 2 ? std::string(tags[1]) : sig.name;
        if (!text::is_identifier(sig.activity_pred))
          throw OntologyError(line_no, "malformed activity predicate");
      }
      rels.push_back({std::move(sig), line_no});
    } else {
      throw OntologyError(line_no, "expected 'type' or 'rel', got '" + std::string(keyword) + "'");
    }
  }

  Ontology g;
  for (auto& decl : types) {
    if (g.index_.count(decl.name))
      throw OntologyError(decl.line, "duplicate type '" + decl.name + "'");
    g.index_.emplace(decl.name, g.names_.size());
    g.names_.push_back(decl.name);
  }
  if (!g.index_.count(std::string(kRoot)))
    throw OntologyError(0, "the root type 'thing' is not declared");

  const std::size_t n = g.names_.size();
  g.parents_.resize(n);
  for (auto& decl : types) {
    auto self = g.index_.at(decl.name);
    if (decl.name == kRoot && !decl.parents.empty())
      throw OntologyError(decl.line, "the root type 'thing' cannot have parents");
    if (decl.name != kRoot && decl.parents.empty())
      throw OntologyError(decl.line, "type '" + decl.name + "' has no parent");
    for (auto& parent : decl.parents) {
      auto it = g.index_.find(parent);
      if (it == g.index_.end())
        throw OntologyError(decl.line, "unknown parent '" + parent + "'");
      if (std::find(g.parents_[self].begin(), g.parents_[self].end(), it->second) ==
          g.parents_[self].end())
        g.parents_[self].push_back(it->second);
    }
  }

  // Depth-first over parent edges: detects cycles and fills the reachability
  // closure in post-order.
  g.closure_.assign(n * n, 0);
  std::vector<std::uint8_t> state(n, 0);  // 0 new, 1 on stack, 2 done
  auto visit = [&](auto&& self, std::size_t v) -> void {
    state[v] = 1;
    g.closure_[v * n + v] = 1;
    for (auto p : g.parents_[v]) {
      if (state[p] == 1)
        throw OntologyError(types[v].line, "cycle through type '" + g.names_[v] + "'");
      if (state[p] == 0) self(self, p);
      for (std::size_t k = 0; k < n; ++k)
        g.closure_[v * n + k] |= g.closure_[p * n + k];
    }
    state[v] = 2;
  };
  for (std::size_t v = 0; v < n; ++v)
    if (state[v] == 0) visit(visit, v);

  for (std::size_t i = 0; i < rels.size(); ++i) {
    auto& [sig, line] = rels[i];
    for (auto& t : sig.arg_types)
      if (!g.contains(t))
        throw OntologyError(line, "relation " + sig.name + " names unknown type '" + t + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (rels[j].sig == sig)
        throw OntologyError(line, "duplicate relation " + sig.to_string());
    sig.order = i;
    g.relations_.push_back(sig);
  }
  return g;
}

Ontology Ontology::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw OntologyError(0, "cannot open ontology file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load(buffer.str());
}

bool Ontology::contains(std::string_view type) const {
  return index_.find(std::string(type)) != index_.end();
}

std::size_t Ontology::id(std::string_view type) const {
  auto it = index_.find(std::string(type));
  if (it == index_.end()) throw UnknownType(type);
  return it->second;
}

std::vector<std::string> Ontology::parents(std::string_view type) const {
  std::vector<std::string> out;
  for (auto p : parents_[id(type)]) out.push_back(names_[p]);
  return out;
}

bool Ontology::subsumes(std::string_view s, std::string_view t) const {
  return below(id(s), id(t));
}

std::optional<SalientMatch> Ontology::salient_match(std::string_view s,
                                                    std::string_view t) const {
  const auto si = id(s);
  const auto ti = id(t);

  struct Candidate {
    const RelationSig* rel;
    std::size_t left_slot;  // argument filled by s
    std::size_t s_arg;
    std::size_t t_arg;
  };
  std::vector<Candidate> candidates;
  for (const auto& rel : relations_) {
    if (rel.arity() != 2) continue;
    const std::size_t a0 = id(rel.arg_types[0]);
    const std::size_t a1 = id(rel.arg_types[1]);
    if (below(si, a0) && below(ti, a1)) candidates.push_back({&rel, 0, a0, a1});
    if (below(si, a1) && below(ti, a0)) candidates.push_back({&rel, 1, a1, a0});
  }
  if (candidates.empty()) return std::nullopt;

  auto dominates = [&](const Candidate& a, const Candidate& b) {
    return below(a.s_arg, b.s_arg) && below(a.t_arg, b.t_arg) &&
           (a.s_arg != b.s_arg || a.t_arg != b.t_arg);
  };
  std::vector<const Candidate*> best;
  for (const auto& c : candidates) {
    bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                 [&](const Candidate& o) { return dominates(o, c); });
    if (!dominated) best.push_back(&c);
  }

  // Declaration order first; between the two orientations of one relation,
  // the lexicographically smaller query type takes slot 0 so that (s, t) and
  // (t, s) agree.
  auto orientation_rank = [&](const Candidate& c) {
    const auto& slot0 = c.left_slot == 0 ? s : t;
    const auto& slot1 = c.left_slot == 0 ? t : s;
    return slot0 <= slot1 ? 0 : 1;
  };
  auto winner = *std::min_element(best.begin(), best.end(), [&](auto* a, auto* b) {
    if (a->rel->order != b->rel->order) return a->rel->order < b->rel->order;
    return orientation_rank(*a) < orientation_rank(*b);
  });
  bool tie = std::any_of(best.begin(), best.end(),
                         [&](auto* c) { return c->rel != winner->rel; });
  return SalientMatch{*winner->rel, winner->left_slot, tie};
}

std::optional<RelationSig> Ontology::msr(std::string_view s, std::string_view t) const {
  if (auto match = salient_match(s, t)) return match->relation;
  return std::nullopt;
}

UnifyOutcome Ontology::unify_pair(std::string_view s, std::string_view t,
                                  bool allow_bridge) const {
  const auto si = id(s);
  const auto ti = id(t);
  if (below(si, ti)) return UnifySingle{std::string(s)};
  if (below(ti, si)) return UnifySingle{std::string(t)};
  if (allow_bridge) {
    if (auto match = salient_match(s, t))
      return UnifyBridge{match->relation, std::string(s), std::string(t),
                         match->left_slot, match->tie};
  }
  return UnifyBottom{};
}

SetUnification Ontology::unify_sets(const TypeSet& s, const TypeSet& t,
                                    bool allow_bridge) const {
  SetUnification out;
  for (const auto& a : s) {
    for (const auto& b : t) {
      auto outcome = unify_pair(a, b, allow_bridge);
      if (auto* single = std::get_if<UnifySingle>(&outcome))
        out.types.insert(single->type);
      else if (auto* bridge = std::get_if<UnifyBridge>(&outcome))
        out.bridges.push_back(*bridge);
      out.pairs.push_back({a, b, std::move(outcome)});
    }
  }
  return out;
}

std::string Ontology::activity_type() const {
  return contains("activity") ? "activity" : std::string(kRoot);
}

std::string Ontology::print() const {
  std::string out;
  for (std::size_t v = 0; v < names_.size(); ++v) {
    out += "type " + names_[v];
    for (std::size_t i = 0; i < parents_[v].size(); ++i)
      out += (i ? ", " : " < ") + names_[parents_[v][i]];
    out += '\n';
  }
  for (const auto& rel : relations_) {
    out += "rel " + rel.to_string();
    if (rel.verbal) out += " verbal " + rel.activity_pred;
    out += '\n';
  }
  return out;
}

}  // namespace ontic
