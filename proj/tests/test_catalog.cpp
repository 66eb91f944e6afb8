#include <doctest.h>

#include "fawaid/catalog.hpp"

using namespace fawaid;

TEST_CASE("bundled catalog shape") {
  const Catalog& c = bundled_catalog();
  CHECK(c.problems.size() == 33);
  int with_relations = 0;
  for (const auto& p : c.problems)
    if (!p.relations.empty()) ++with_relations;
  CHECK(with_relations == 31);
  CHECK(get_problem(c, 7).classification == Classification::Missing);
  CHECK(get_problem(c, 24).classification == Classification::Missing);
  for (const auto& p : c.problems)
    CHECK((p.classification == Classification::Missing) == (p.id == 7 || p.id == 24));
}

TEST_CASE("classification sets match the source sections") {
  const Catalog& c = bundled_catalog();
  auto ids_of = [&](Classification cls) {
    std::set<int> ids;
    for (const auto* p : list_problems(c, cls)) ids.insert(p->id);
    return ids;
  };
  CHECK(ids_of(Classification::Congruence) == std::set<int>{1, 18, 19});
  CHECK(ids_of(Classification::Degree3) == std::set<int>{15, 21, 22, 25, 28, 29, 32, 33});
  CHECK(ids_of(Classification::Multiplicative) == std::set<int>{10, 30, 31});
  CHECK(ids_of(Classification::Missing) == std::set<int>{7, 24});
  // Problem 20 sits in the quartic section (it is also printed among the
  // Diophantine problems; the catalog notes record the duplication).
  CHECK(ids_of(Classification::Diophantine) == std::set<int>{2, 3, 8, 9, 12, 13, 14, 23});
  CHECK(ids_of(Classification::Degree4Plus) == std::set<int>{4, 5, 6, 11, 16, 17, 20, 26, 27});
}

TEST_CASE("problem 20 is cataloged once with a duplication note") {
  const auto& p = get_problem(bundled_catalog(), 20);
  bool noted = false;
  for (const auto& n : p.notes)
    if (n.find("twice") != std::string::npos) noted = true;
  CHECK(noted);
  CHECK(p.variants.count("alt-root") == 1);
}

TEST_CASE("spot checks of encoded relations") {
  const Catalog& c = bundled_catalog();
  const auto& p1 = get_problem(c, 1);
  REQUIRE(p1.relations.size() == 2);
  CHECK(render(p1.relations[0]) == "is_square(x^2 + y^2)");
  CHECK(render(p1.relations[1]) == "is_square(x^2 - y^2)");

  CHECK(get_problem(c, 28).classification == Classification::Degree3);
  const auto& p24 = get_problem(c, 24);
  bool cites_amili = false;
  for (const auto& n : p24.notes)
    if (n.find("al-'Amili") != std::string::npos) cites_amili = true;
  CHECK(cites_amili);

  // Problem 18's parameter defaults to the statement's ten dirhams.
  const auto& p18 = get_problem(c, 18);
  REQUIRE(p18.parameters.size() == 1);
  CHECK(p18.parameters[0].name == "n");
  CHECK(p18.parameters[0].default_value == Rational(10));

  CHECK_THROWS_AS(get_problem(c, 0), std::out_of_range);
  CHECK_THROWS_AS(get_problem(c, 34), std::out_of_range);
}

TEST_CASE("list_problems ordering and filters") {
  const Catalog& c = bundled_catalog();
  auto all = list_problems(c);
  REQUIRE(all.size() == 33);
  for (size_t i = 0; i < all.size(); ++i) CHECK(all[i]->id == static_cast<int>(i) + 1);
  CHECK(list_problems(c, Classification::Congruence).size() == 3);
}

TEST_CASE("round trip") {
  const std::string& text = bundled_catalog_text();
  Catalog c = load_catalog(text);
  std::string saved = save_catalog(c);
  Catalog again = load_catalog(saved);
  REQUIRE(again.problems.size() == c.problems.size());
  for (size_t i = 0; i < c.problems.size(); ++i) {
    const auto& a = c.problems[i];
    const auto& b = again.problems[i];
    CHECK(a.id == b.id);
    CHECK(a.title == b.title);
    CHECK(a.prose == b.prose);
    CHECK(a.unknowns == b.unknowns);
    CHECK(a.classification == b.classification);
    CHECK(a.notes == b.notes);
    CHECK(a.citations == b.citations);
    REQUIRE(a.relations.size() == b.relations.size());
    for (size_t j = 0; j < a.relations.size(); ++j)
      CHECK(render(a.relations[j]) == render(b.relations[j]));
  }
  // Serialization is stable.
  CHECK(save_catalog(again) == saved);
}

TEST_CASE("every relation evaluates under an arbitrary total assignment") {
  const Catalog& c = bundled_catalog();
  for (const auto& p : c.problems) {
    Assignment a;
    for (const auto& u : p.unknowns) a[u] = make_rational(3, 2);
    for (const auto& ps : p.parameters) a[ps.name] = Rational(2);
    for (const auto& rels : {p.relations}) {
      auto report = check_relations(rels, a);  // must not throw
      CHECK(report.entries.size() == rels.size());
    }
    for (const auto& [name, rels] : p.variants) {
      (void)name;
      check_relations(rels, a);
    }
  }
}

TEST_CASE("loader rejects malformed catalogs") {
  // Duplicate id.
  std::string dup = save_catalog(bundled_catalog());
  auto pos = dup.find("\"id\": 3,");
  REQUIRE(pos != std::string::npos);
  std::string broken = dup;
  broken.replace(pos, 8, "\"id\": 2,");
  CHECK_THROWS_AS(load_catalog(broken), CatalogError);

  // Undeclared symbol in a relation.
  std::string undeclared = dup;
  auto rel = undeclared.find("(isSquare (+ (^ x 2) (^ y 2)))");
  REQUIRE(rel != std::string::npos);
  undeclared.replace(rel, 30, "(isSquare (+ (^ x 2) (^ w 2)))");
  CHECK_THROWS_AS(load_catalog(undeclared), CatalogError);

  // Unknown field.
  std::string extra = dup;
  extra.replace(extra.find("\"version\""), 9, "\"version2\"");
  CHECK_THROWS_AS(load_catalog(extra), CatalogError);

  // Not JSON at all.
  CHECK_THROWS_AS(load_catalog("not json"), CatalogError);

  // Wrong entry count.
  Catalog c = bundled_catalog();
  c.problems.pop_back();
  CHECK_THROWS_AS(load_catalog(save_catalog(c)), CatalogError);
}
