#include <doctest.h>

#include <random>

#include "ontic/logical_form.hpp"
#include "support/oracles.hpp"

using namespace ontic;

namespace {

Formula atom1(const std::string& p, const std::string& v, TypeSet t) {
  return Formula::atom(p, {{v, std::move(t)}});
}

// (E! Sheba :: thing)(THIEF(Sheba :: human))
Formula form16() {
  return Formula::quant(Quantifier::ExistsUnique, "Sheba", {{"thing"}},
                        atom1("THIEF", "Sheba", {"human"}));
}

// Olga is a beautiful dancer, before unification
Formula form22() {
  auto role = Formula::atom("AGENT", {{"a", {"activity"}}, {"Olga", {"human"}}});
  auto mods = Formula::disj(atom1("BEAUTIFUL", "Olga", {"entity"}),
                            atom1("BEAUTIFUL", "a", {"entity"}));
  return Formula::quant(Quantifier::ExistsUnique, "Olga", {{"thing"}},
                        Formula::quant(Quantifier::Exists, "a", {{"dancing"}},
                                       Formula::conj(role, mods)));
}

std::string atom_key(const Atom& a) {
  std::string out = a.pred;
  for (const auto& x : a.args) out += "|" + x.var + ":" + x.types.to_string();
  return out;
}

}  // namespace

TEST_CASE("collect_annotations: worked forms") {
  CHECK(collect_annotations(form16(), "Sheba") == std::vector<TypeSet>{{"thing"}, {"human"}});
  CHECK(collect_annotations(form22(), "a") ==
        std::vector<TypeSet>{{"dancing"}, {"activity"}, {"entity"}});
  CHECK(collect_annotations(form22(), "Olga") ==
        std::vector<TypeSet>{{"thing"}, {"human"}, {"entity"}});
}

TEST_CASE("collect_annotations: single occurrence and unbound") {
  auto f = Formula::quant(Quantifier::Exists, "x", {{"cat"}}, Formula::atom("P", {}));
  CHECK(collect_annotations(f, "x") == std::vector<TypeSet>{{"cat"}});
  CHECK_THROWS_AS(collect_annotations(form16(), "Olga"), UnboundVariable);
}

TEST_CASE("collect_annotations: casts are searched") {
  auto inner = atom1("TALL", "x", {"physical"});
  auto f = Formula::quant(Quantifier::Exists, "x", {{"human"}},
                          Formula::cast("BEAUTIFUL", "entity", inner));
  CHECK(collect_annotations(f, "x") == std::vector<TypeSet>{{"human"}, {"physical"}});
}

TEST_CASE("simplify: bottom rules") {
  auto p = atom1("P", "x", {"thing"});
  auto q = atom1("Q", "x", {"thing"});
  auto rec = atom1("RECREATIONAL", "a", {"dancing"});
  CHECK(simplify(Formula::disj(Formula::bottom(), rec)) == rec);
  CHECK(simplify(Formula::disj(rec, Formula::bottom())) == rec);
  CHECK(simplify(Formula::conj(Formula::bottom(), p)).is_bottom());
  CHECK(simplify(Formula::conj(p, Formula::bottom())).is_bottom());
  CHECK(simplify(Formula::disj(p, q)) == Formula::disj(p, q));
  CHECK(simplify(atom1("P", "x", TypeSet::bottom())).is_bottom());
  CHECK(simplify(Formula::quant(Quantifier::Exists, "x", {{"cat"}}, Formula::bottom())).is_bottom());
  CHECK(simplify(Formula::quant(Quantifier::Exists, "x", {TypeSet::bottom()}, p)).is_bottom());
  CHECK(simplify(Formula::cast("C", "thing", Formula::bottom())).is_bottom());
  // EXPERIENCED(Olga :: human) | _|_
  auto exp = atom1("EXPERIENCED", "Olga", {"human"});
  CHECK(simplify(Formula::disj(exp, atom1("EXPERIENCED", "a", TypeSet::bottom()))) == exp);
}

TEST_CASE("simplify: nested bottoms reach a fixpoint in one call") {
  auto p = atom1("P", "x", {"thing"});
  auto f = Formula::disj(Formula::conj(p, Formula::disj(Formula::bottom(), Formula::bottom())), p);
  CHECK(simplify(f) == p);
}

TEST_CASE("print_canonical: worked forms") {
  CHECK(print_canonical(Formula::bottom()) == "_|_");
  auto f18 = Formula::quant(Quantifier::ExistsUnique, "Sheba", {{"human"}},
                            atom1("THIEF", "Sheba", {"human"}));
  CHECK(print_canonical(f18) == "(E! v1 :: human)(THIEF(v1))");

  auto body = Formula::conj(atom1("BLACK", "c", {"cat"}),
                            Formula::atom("OWN", {{"Sara", {"human"}}, {"c", {"cat"}}}));
  auto f20 = Formula::quant(Quantifier::ExistsUnique, "Sara", {{"human"}},
                            Formula::quant(Quantifier::Exists, "c", {{"cat"}}, body));
  CHECK(print_canonical(f20) == "(E! v1 :: human)(E v2 :: cat)(BLACK(v2) & OWN(v1, v2))");

  auto all = Formula::quant(Quantifier::ForAll, "x", {{"human"}}, atom1("P", "x", {"human"}));
  CHECK(print_canonical(all) == "(A v1 :: human)(P(v1))");
}

TEST_CASE("print_canonical: casts and disjunctions") {
  auto cast = Formula::cast("BEAUTIFUL", "entity", atom1("TALL", "o", {"physical"}));
  auto f = Formula::quant(Quantifier::ExistsUnique, "o", {{"human"}},
                          Formula::disj(cast, atom1("P", "o", {"human"})));
  CHECK(print_canonical(f) == "(E! v1 :: human)(BEAUTIFUL(TALL(v1)) | P(v1))");
}

TEST_CASE("print_annotated keeps names and annotations") {
  CHECK(print_annotated(form16()) == "(E! Sheba :: thing)(THIEF(Sheba :: human))");
}

TEST_CASE("bound_variables and rename_variables") {
  CHECK(bound_variables(form22()) == std::vector<std::string>{"Olga", "a"});
  auto renamed = rename_variables(form22(), {{"Olga", "o"}, {"a", "e"}});
  CHECK(bound_variables(renamed) == std::vector<std::string>{"o", "e"});
  CHECK(collect_annotations(renamed, "e") ==
        std::vector<TypeSet>{{"dancing"}, {"activity"}, {"entity"}});
}

TEST_CASE("simplify: properties on random formulas") {
  std::mt19937 rng(3);
  for (int i = 0; i < 2000; ++i) {
    oracle::FormulaGen gen(rng, 0.15);
    auto f = gen(1 + i % 3, 4);
    auto s = simplify(f);
    REQUIRE(simplify(s) == s);
    REQUIRE(s.is_bottom() == oracle::denotes_bottom(f));
    if (!s.is_bottom()) REQUIRE_FALSE(oracle::contains_bottom_node(s));
    if (!oracle::contains_bottom_node(f) && !oracle::denotes_bottom(f)) {
      // nothing to remove: every atom survives
      std::vector<Atom> before, after;
      oracle::atoms(f, before);
      oracle::atoms(s, after);
      bool any_bottom_arg = false;
      for (const auto& a : before)
        for (const auto& x : a.args) any_bottom_arg |= x.types.is_bottom();
      if (!any_bottom_arg) REQUIRE(before.size() == after.size());
    }
    std::vector<Atom> before, after;
    oracle::atoms(f, before);
    oracle::atoms(s, after);
    std::vector<std::string> keys;
    for (const auto& a : before) keys.push_back(atom_key(a));
    for (const auto& a : after)
      REQUIRE(std::find(keys.begin(), keys.end(), atom_key(a)) != keys.end());
  }
}

TEST_CASE("print_canonical: alpha-renaming invariance") {
  std::mt19937 rng(5);
  for (int i = 0; i < 1000; ++i) {
    oracle::FormulaGen gen(rng, 0.0);
    const int vars = 1 + i % 4;
    auto f = gen(vars, 3);
    std::vector<std::pair<std::string, std::string>> mapping;
    for (int v = 0; v < vars; ++v)
      mapping.emplace_back("x" + std::to_string(v), "y" + std::to_string((v * 7 + i) % 97) + "_" +
                                                        std::to_string(v));
    auto g = rename_variables(f, mapping);
    REQUIRE(print_canonical(simplify(g)) == print_canonical(simplify(f)));
  }
}
