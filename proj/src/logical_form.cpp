#include "ontic/logical_form.hpp"

#include <algorithm>
#include <map>

namespace ontic {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string_view quantifier_symbol(Quantifier kind) {
  switch (kind) {
    case Quantifier::Exists: return "E";
    case Quantifier::ExistsUnique: return "E!";
    case Quantifier::ForAll: return "A";
  }
  return "?";
}

std::string annotation_text(const std::vector<TypeSet>& annotations) {
  if (annotations.size() == 1) return annotations.front().to_string();
  std::string out = "(";
  for (std::size_t i = 0; i < annotations.size(); ++i)
    out += (i ? " . " : "") + annotations[i].to_string();
  return out + ")";
}

class Printer {
 public:
  explicit Printer(bool annotated) : annotated_(annotated) {}

  std::string top(const Formula& f) {
    const auto& node = f.node();
    if (std::holds_alternative<Quant>(node)) return quant_chain(f);
    return body(f);
  }

 private:
  std::string name(const std::string& var) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
      if (it->first == var) return it->second;
    return var;
  }

  // Consecutive binders, then the matrix in one pair of parentheses.
  std::string quant_chain(const Formula& f) {
    std::string out;
    std::size_t pushed = 0;
    const Formula* cur = &f;
    while (auto* q = std::get_if<Quant>(&cur->node())) {
      std::string shown = annotated_ ? q->var : "v" + std::to_string(++counter_);
      scopes_.emplace_back(q->var, shown);
      ++pushed;
      out += "(" + std::string(quantifier_symbol(q->kind)) + " " + shown + " :: " +
             annotation_text(q->annotations) + ")";
      cur = &q->body;
    }
    const auto& m = cur->node();
    if (std::holds_alternative<And>(m) || std::holds_alternative<Or>(m))
      out += body(*cur);
    else
      out += "(" + body(*cur) + ")";
    scopes_.resize(scopes_.size() - pushed);
    return out;
  }

  std::string body(const Formula& f) {
    return std::visit(
        Overloaded{
            [&](const Quant&) { return quant_chain(f); },
            [&](const Atom& a) {
              std::string out = a.pred + "(";
              for (std::size_t i = 0; i < a.args.size(); ++i) {
                out += (i ? ", " : "") + name(a.args[i].var);
                if (annotated_) out += " :: " + a.args[i].types.to_string();
              }
              return out + ")";
            },
            [&](const And& a) { return "(" + body(a.left) + " & " + body(a.right) + ")"; },
            [&](const Or& o) { return "(" + body(o.left) + " | " + body(o.right) + ")"; },
            [&](const Cast& c) {
              std::string out = c.pred + "(" + body(c.inner);
              if (annotated_) out += " :: " + c.target;
              return out + ")";
            },
            [&](const Bottom&) { return std::string("_|_"); },
        },
        static_cast<const FormulaNode::variant&>(f.node()));
  }

  bool annotated_;
  std::size_t counter_ = 0;
  std::vector<std::pair<std::string, std::string>> scopes_;
};

void collect(const Formula& f, std::string_view var, std::vector<TypeSet>& out) {
  std::visit(Overloaded{
                 [&](const Quant& q) {
                   if (q.var == var)
                     out.insert(out.end(), q.annotations.begin(), q.annotations.end());
                   collect(q.body, var, out);
                 },
                 [&](const Atom& a) {
                   for (const auto& arg : a.args)
                     if (arg.var == var) out.push_back(arg.types);
                 },
                 [&](const And& a) {
                   collect(a.left, var, out);
                   collect(a.right, var, out);
                 },
                 [&](const Or& o) {
                   collect(o.left, var, out);
                   collect(o.right, var, out);
                 },
                 [&](const Cast& c) { collect(c.inner, var, out); },
                 [&](const Bottom&) {},
             },
             static_cast<const FormulaNode::variant&>(f.node()));
}

bool binds(const Formula& f, std::string_view var) {
  return std::visit(Overloaded{
                        [&](const Quant& q) { return q.var == var || binds(q.body, var); },
                        [&](const And& a) { return binds(a.left, var) || binds(a.right, var); },
                        [&](const Or& o) { return binds(o.left, var) || binds(o.right, var); },
                        [&](const Cast& c) { return binds(c.inner, var); },
                        [&](const auto&) { return false; },
                    },
                    static_cast<const FormulaNode::variant&>(f.node()));
}

}  // namespace

Formula::Formula() : node_(std::make_shared<const FormulaNode>(Bottom{})) {}

Formula Formula::atom(std::string pred, std::vector<Arg> args) {
  return Formula(std::make_shared<const FormulaNode>(Atom{std::move(pred), std::move(args)}));
}

Formula Formula::quant(Quantifier kind, std::string var, std::vector<TypeSet> annotations,
                       Formula body) {
  return Formula(std::make_shared<const FormulaNode>(
      Quant{kind, std::move(var), std::move(annotations), std::move(body)}));
}

Formula Formula::conj(Formula left, Formula right) {
  return Formula(std::make_shared<const FormulaNode>(And{std::move(left), std::move(right)}));
}

Formula Formula::disj(Formula left, Formula right) {
  return Formula(std::make_shared<const FormulaNode>(Or{std::move(left), std::move(right)}));
}

Formula Formula::cast(std::string pred, std::string target, Formula inner) {
  return Formula(std::make_shared<const FormulaNode>(
      Cast{std::move(pred), std::move(target), std::move(inner)}));
}

Formula Formula::conj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) throw std::invalid_argument("conj_all of an empty list");
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = conj(out, parts[i]);
  return out;
}

bool Formula::is_bottom() const { return std::holds_alternative<Bottom>(*node_); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node();
  const auto& y = b.node();
  if (x.index() != y.index()) return false;
  return std::visit(
      Overloaded{
          [&](const Quant& q) {
            const auto& r = std::get<Quant>(y);
            return q.kind == r.kind && q.var == r.var && q.annotations == r.annotations &&
                   q.body == r.body;
          },
          [&](const Atom& p) {
            const auto& r = std::get<Atom>(y);
            return p.pred == r.pred && p.args == r.args;
          },
          [&](const And& p) {
            const auto& r = std::get<And>(y);
            return p.left == r.left && p.right == r.right;
          },
          [&](const Or& p) {
            const auto& r = std::get<Or>(y);
            return p.left == r.left && p.right == r.right;
          },
          [&](const Cast& p) {
            const auto& r = std::get<Cast>(y);
            return p.pred == r.pred && p.target == r.target && p.inner == r.inner;
          },
          [&](const Bottom&) { return true; },
      },
      static_cast<const FormulaNode::variant&>(x));
}

UnboundVariable::UnboundVariable(std::string_view var)
    : std::invalid_argument("variable '" + std::string(var) + "' is not bound") {}

std::vector<TypeSet> collect_annotations(const Formula& f, std::string_view var) {
  if (!binds(f, var)) throw UnboundVariable(var);
  std::vector<TypeSet> out;
  collect(f, var, out);
  return out;
}

Formula simplify(const Formula& f) {
  return std::visit(
      Overloaded{
          [&](const Quant& q) -> Formula {
            if (std::any_of(q.annotations.begin(), q.annotations.end(),
                            [](const TypeSet& t) { return t.is_bottom(); }))
              return Formula::bottom();
            auto body = simplify(q.body);
            if (body.is_bottom()) return body;
            if (body == q.body) return f;
            return Formula::quant(q.kind, q.var, q.annotations, body);
          },
          [&](const Atom& a) -> Formula {
            for (const auto& arg : a.args)
              if (arg.types.is_bottom()) return Formula::bottom();
            return f;
          },
          [&](const And& a) -> Formula {
            auto l = simplify(a.left);
            if (l.is_bottom()) return l;
            auto r = simplify(a.right);
            if (r.is_bottom()) return r;
            if (l == a.left && r == a.right) return f;
            return Formula::conj(l, r);
          },
          [&](const Or& o) -> Formula {
            auto l = simplify(o.left);
            auto r = simplify(o.right);
            if (l.is_bottom()) return r;
            if (r.is_bottom()) return l;
            if (l == o.left && r == o.right) return f;
            return Formula::disj(l, r);
          },
          [&](const Cast& c) -> Formula {
            auto inner = simplify(c.inner);
            if (inner.is_bottom()) return inner;
            if (inner == c.inner) return f;
            return Formula::cast(c.pred, c.target, inner);
          },
          [&](const Bottom&) -> Formula { return f; },
      },
      static_cast<const FormulaNode::variant&>(f.node()));
}

std::string print_canonical(const Formula& f) { return Printer(false).top(f); }

std::string print_annotated(const Formula& f) { return Printer(true).top(f); }

std::vector<std::string> bound_variables(const Formula& f) {
  std::vector<std::string> out;
  auto walk = [&](auto&& self, const Formula& g) -> void {
    std::visit(Overloaded{
                   [&](const Quant& q) {
                     out.push_back(q.var);
                     self(self, q.body);
                   },
                   [&](const And& a) {
                     self(self, a.left);
                     self(self, a.right);
                   },
                   [&](const Or& o) {
                     self(self, o.left);
                     self(self, o.right);
                   },
                   [&](const Cast& c) { self(self, c.inner); },
                   [&](const auto&) {},
               },
               static_cast<const FormulaNode::variant&>(g.node()));
  };
  walk(walk, f);
  return out;
}

Formula rename_variables(const Formula& f,
                         const std::vector<std::pair<std::string, std::string>>& mapping) {
  auto rn = [&](const std::string& v) {
    for (const auto& [from, to] : mapping)
      if (from == v) return to;
    return v;
  };
  return std::visit(
      Overloaded{
          [&](const Quant& q) {
            return Formula::quant(q.kind, rn(q.var), q.annotations,
                                  rename_variables(q.body, mapping));
          },
          [&](const Atom& a) {
            auto args = a.args;
            for (auto& arg : args) arg.var = rn(arg.var);
            return Formula::atom(a.pred, std::move(args));
          },
          [&](const And& a) {
            return Formula::conj(rename_variables(a.left, mapping),
                                 rename_variables(a.right, mapping));
          },
          [&](const Or& o) {
            return Formula::disj(rename_variables(o.left, mapping),
                                 rename_variables(o.right, mapping));
          },
          [&](const Cast& c) {
            return Formula::cast(c.pred, c.target, rename_variables(c.inner, mapping));
          },
          [&](const Bottom&) { return f; },
      },
      static_cast<const FormulaNode::variant&>(f.node()));
}

}  // namespace ontic
