#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rdfgen/rdf/turtle.hpp"
#include "rdfgen/shacl/constraints.hpp"
#include "rdfgen/shacl/shape_map.hpp"
#include "test_util.hpp"

using namespace rdfgen;
using rdf::Term;
using shacl::ConstraintSet;
using shacl::PairRelation;

namespace {

std::string schema(const char* local) { return std::string(testutil::kSchema) + local; }

ConstraintSet node_model(const char* fixture, const char* shape_local) {
  auto graph = testutil::fixture_graph(fixture);
  auto root = shacl::extract_shape_maps(graph);
  const shacl::ShapeMap* shape = root.find(schema(shape_local));
  REQUIRE(shape);
  return shacl::normalize(*shape);
}

const ConstraintSet& property_of(const ConstraintSet& model, const std::string& path) {
  for (auto& cs : model.properties) {
    if (cs.path == path) return cs;
  }
  FAIL("no property ", path);
  static ConstraintSet dummy;
  return dummy;
}

}  // namespace

TEST_CASE("normalize types the person name property") {
  auto graph = rdf::parse_turtle(testutil::kPersonExample);
  auto root = shacl::extract_shape_maps(graph);
  ConstraintSet model = shacl::normalize(root.shapes.at(0));

  const ConstraintSet& name = property_of(model, std::string(testutil::kEx) + "name");
  CHECK(name.datatype == std::string(testutil::kXsd) + "string");
  CHECK(name.max_count == 1);
  CHECK(name.name == "Person's name");
  CHECK(!name.min_count);
  CHECK(!name.pattern);

  // The synthesized deathDate map normalizes to a path-only set.
  const ConstraintSet& death = property_of(model, std::string(testutil::kEx) + "deathDate");
  CHECK(death.synthesized_only);
  CHECK(!death.datatype);
  CHECK(!death.min_count);
}

TEST_CASE("normalize keeps or-branch datatypes and outer bounds") {
  ConstraintSet model = node_model("input-shape-person.ttl", "AddressShape");
  const ConstraintSet& postal = property_of(model, schema("postalCode"));
  REQUIRE(postal.or_.size() == 2);
  CHECK(postal.or_[0].datatype == std::string(testutil::kXsd) + "string");
  CHECK(postal.or_[1].datatype == std::string(testutil::kXsd) + "integer");
  REQUIRE(postal.min_inclusive);
  CHECK(postal.min_inclusive->lexical() == "10000");
  REQUIRE(postal.max_inclusive);
  CHECK(postal.max_inclusive->lexical() == "99999");
}

TEST_CASE("normalize rejects unparseable counts") {
  auto graph = rdf::parse_turtle(
      "@prefix sh: <http://www.w3.org/ns/shacl#> .\n"
      "@prefix ex: <http://example.com/ns#> .\n"
      "ex:S a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:minCount \"abc\" ] .\n");
  auto root = shacl::extract_shape_maps(graph);
  CHECK_THROWS_AS(shacl::normalize(root.shapes.at(0)), Error);
  try {
    shacl::normalize(root.shapes.at(0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TypeMismatch);
  }
}

TEST_CASE("normalize rejects blank-node sh:node references") {
  auto graph = rdf::parse_turtle(
      "@prefix sh: <http://www.w3.org/ns/shacl#> .\n"
      "@prefix ex: <http://example.com/ns#> .\n"
      "ex:S a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:node [ sh:path ex:q ] ] .\n");
  auto root = shacl::extract_shape_maps(graph);
  try {
    shacl::normalize(root.shapes.at(0));
    FAIL("expected UnsupportedNodeRef");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedNodeRef);
  }
}

TEST_CASE("normalize warns on unknown keywords instead of failing") {
  auto graph = rdf::parse_turtle(
      "@prefix sh: <http://www.w3.org/ns/shacl#> .\n"
      "@prefix ex: <http://example.com/ns#> .\n"
      "ex:S a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:uniqueLang true ] .\n");
  auto root = shacl::extract_shape_maps(graph);
  WarningLog log;
  ConstraintSet model = shacl::normalize(root.shapes.at(0), &log);
  CHECK(model.properties.at(0).extras.size() == 1);
  REQUIRE(log.size() == 1);
  CHECK(log[0].code == "UnknownKeyword");
}

TEST_CASE("normalize is total over the bundled fixtures") {
  for (const char* fixture : {"input-shape-person.ttl", "input-shape-books.ttl",
                              "input-shape-tvseries.ttl", "input-shape-unknown.ttl"}) {
    CAPTURE(fixture);
    auto graph = testutil::fixture_graph(fixture);
    auto root = shacl::extract_shape_maps(graph);
    for (auto& shape : root.shapes) {
      ConstraintSet model = shacl::normalize(shape);
      for (auto& cs : model.properties) {
        auto count = shacl::effective_count(cs);
        CHECK(count.low >= 0);
        CHECK(count.high >= count.low);
      }
    }
  }
}

TEST_CASE("effective_count policy") {
  ConstraintSet genre;
  genre.min_count = 2;
  genre.max_count = 4;
  auto count = shacl::effective_count(genre);
  CHECK(count.low == 2);
  CHECK(count.high == 4);

  ConstraintSet plain;
  count = shacl::effective_count(plain);
  CHECK(count.low == 1);
  CHECK(count.high == 1);

  ConstraintSet actor;
  actor.min_count = 3;
  count = shacl::effective_count(actor);
  CHECK(count.low == 3);
  CHECK(count.high == 3);

  ConstraintSet max_only;
  max_only.max_count = 3;
  count = shacl::effective_count(max_only);
  CHECK(count.low == 1);
  CHECK(count.high == 3);

  ConstraintSet synthesized;
  synthesized.synthesized_only = true;
  count = shacl::effective_count(synthesized);
  CHECK(count.low == 0);
  CHECK(count.high == 1);
  CHECK(count.optional_if_pair_target);

  ConstraintSet contradictory;
  contradictory.min_count = 5;
  contradictory.max_count = 2;
  CHECK_THROWS_AS(shacl::effective_count(contradictory), Error);
}

TEST_CASE("plan_pairs orders the tvseries properties") {
  ConstraintSet model = node_model("input-shape-tvseries.ttl", "TVSeriesShape");
  auto plan = shacl::plan_pairs(model.properties);

  auto index = [&](const std::string& path) {
    for (std::size_t i = 0; i < plan.order.size(); ++i) {
      if (plan.order[i] == path) return i;
    }
    FAIL("missing ", path);
    return std::size_t(0);
  };

  CHECK(index(schema("numberOfEpisodes")) < index(schema("numberOfSeasons")));
  CHECK(index(schema("numberOfSeasons")) < index(schema("season")));
  CHECK(index(schema("endDate")) < index(schema("datePublished")));
  CHECK(index(schema("datePublished")) < index(schema("startDate")));

  // Every lessThan-family edge is respected.
  for (auto& edge : plan.edges) {
    if (edge.relation == PairRelation::Disjoint) continue;
    CHECK(index(edge.target) < index(edge.source));
  }
}

TEST_CASE("plan_pairs keeps declaration order without pair constraints") {
  ConstraintSet model = node_model("input-shape-books.ttl", "AuthorShape");
  auto plan = shacl::plan_pairs(model.properties);
  std::vector<std::string> declared;
  for (auto& cs : model.properties) declared.push_back(cs.path);
  // Author has one lessThan (birthDate -> deathDate); removing that pair
  // from consideration, relative order matches declaration.
  CHECK(plan.order.size() == declared.size());
  auto index = [&](const std::string& p) {
    return std::find(plan.order.begin(), plan.order.end(), p) - plan.order.begin();
  };
  CHECK(index(schema("givenName")) < index(schema("gender")));
  CHECK(index(schema("gender")) < index(schema("email")));
  CHECK(index(schema("email")) < index(schema("telephone")));
}

TEST_CASE("plan_pairs detects cycles") {
  ConstraintSet a;
  a.path = "http://example.com/ns#a";
  a.less_than = "http://example.com/ns#b";
  ConstraintSet b;
  b.path = "http://example.com/ns#b";
  b.less_than = "http://example.com/ns#a";
  CHECK_THROWS_AS(shacl::plan_pairs({a, b}), Error);
  try {
    shacl::plan_pairs({a, b});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PairCycle);
  }
}

TEST_CASE("infer_datatype rules") {
  ConstraintSet model = node_model("input-shape-unknown.ttl", "ExampleShape");
  const std::string ex_ns = "http://example.com/ns#";

  // Declared datatype dominates.
  const ConstraintSet& name = property_of(model, ex_ns + "name");
  CHECK(shacl::infer_datatype(name) == std::string(testutil::kXsd) + "string");

  // "date" in the local name.
  const ConstraintSet& production = property_of(model, ex_ns + "dateOfProduction");
  CHECK(shacl::infer_datatype(production) == std::string(testutil::kXsd) + "date");

  // Date-typed range bounds.
  const ConstraintSet& expiration = property_of(model, ex_ns + "dateOfExpiration");
  CHECK(shacl::infer_datatype(expiration) == std::string(testutil::kXsd) + "date");

  // No signal at all.
  const ConstraintSet& identifier = property_of(model, ex_ns + "identifier");
  CHECK(!shacl::infer_datatype(identifier));

  // Peer fallback.
  ConstraintSet bare;
  bare.path = ex_ns + "p";
  CHECK(infer_datatype(bare, &expiration) == std::string(testutil::kXsd) + "date");

  // Integer bounds on tvseries numberOfEpisodes.
  ConstraintSet tv = node_model("input-shape-tvseries.ttl", "TVSeriesShape");
  const ConstraintSet& episodes = property_of(tv, schema("numberOfEpisodes"));
  CHECK(shacl::infer_datatype(episodes) == std::string(testutil::kXsd) + "integer");

  // Declared integer never overridden by a date-named peer.
  ConstraintSet declared;
  declared.path = ex_ns + "someDate";
  declared.datatype = std::string(testutil::kXsd) + "integer";
  CHECK(shacl::infer_datatype(declared) == std::string(testutil::kXsd) + "integer");
}

TEST_CASE("value space helpers") {
  using shacl::ValueSpace;
  CHECK(shacl::value_space(Term::literal("5", std::string(testutil::kXsd) + "integer")) ==
        ValueSpace::Integer);
  CHECK(shacl::value_space(Term::literal("2007-02-10", std::string(testutil::kXsd) + "date")) ==
        ValueSpace::Date);
  CHECK(shacl::value_space(Term::literal("x")) == ValueSpace::String);
  CHECK(shacl::parse_integer(Term::literal("42", std::string(testutil::kXsd) + "integer")) == 42);
  CHECK(!shacl::parse_integer(Term::literal("4x")));

  auto days = shacl::parse_date_days(
      Term::literal("1970-01-02", std::string(testutil::kXsd) + "date"));
  CHECK(days == 1);
  CHECK(shacl::format_date(1) == "1970-01-02");
  CHECK(shacl::format_date(*shacl::parse_date_days(
            Term::literal("2007-05-10", std::string(testutil::kXsd) + "date"))) == "2007-05-10");
  CHECK(!shacl::parse_date_days(Term::literal("2007-02-30", std::string(testutil::kXsd) + "date")));
}
