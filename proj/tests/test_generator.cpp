#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "rdfgen/gen/generator.hpp"
#include "rdfgen/rdf/turtle.hpp"
#include "rdfgen/rdf/vocab.hpp"
#include "rdfgen/shacl/constraints.hpp"
#include "test_util.hpp"

using namespace rdfgen;
using gen::GenContext;
using rdf::Graph;
using rdf::Term;

namespace {

std::string schema(const char* local) { return std::string(testutil::kSchema) + local; }
Term iri(const std::string& s) { return Term::iri(s); }

Graph generate_fixture(const char* name, std::uint64_t count, std::uint64_t seed) {
  return gen::run_pipeline(testutil::fixture_text(name), count, seed);
}

std::vector<Term> entities_of_shape(const Graph& g, const std::string& shape_iri,
                                    const std::string& shacl_ns) {
  std::vector<Term> out;
  for (auto& t : g.match(std::nullopt, iri(shacl_ns + "description"), iri(shape_iri))) {
    out.push_back(t.subject);
  }
  return out;
}

constexpr const char* kShaclUpper = "http://www.w3.org/ns/SHACL#";

}  // namespace

TEST_CASE("person fixture: 2 entities produce 2 persons and 2 addresses") {
  Graph g = generate_fixture("input-shape-person.ttl", 2, 7);

  auto persons = entities_of_shape(g, schema("PersonShape"), kShaclUpper);
  auto addresses = entities_of_shape(g, schema("AddressShape"), kShaclUpper);
  CHECK(persons.size() == 2);
  CHECK(addresses.size() == 2);

  // Every person is typed; addresses have no target class and stay untyped.
  for (auto& person : persons) {
    CHECK(g.contains({person, iri(testutil::kRdfType), iri(schema("Person"))}));
    CHECK(g.objects(person, iri(schema("address"))).size() == 1);
    CHECK(g.objects(person, iri(schema("birthDate"))).size() == 1);
    for (const char* property : {"email", "gender", "jobTitle", "telephone"}) {
      CAPTURE(property);
      CHECK(g.objects(person, iri(schema(property))).size() == 1);
    }
  }
  for (auto& address : addresses) {
    CHECK(g.match(address, iri(testutil::kRdfType), std::nullopt).empty());
    CHECK(g.objects(address, iri(schema("postalCode"))).size() == 1);
    CHECK(g.objects(address, iri(schema("streetAddress"))).size() == 1);
  }
}

TEST_CASE("node IRIs are unique, sequential and above the start index") {
  Graph g = generate_fixture("input-shape-person.ttl", 3, 11);
  std::set<std::string> nodes;
  for (auto& t : g.triples()) {
    REQUIRE(t.subject.is_iri());
    const std::string& s = t.subject.iri_value();
    CHECK(s.starts_with("http://example.org/ns#Node"));
    long long n = std::stoll(s.substr(std::string("http://example.org/ns#Node").size()));
    CHECK(n >= 100);
    nodes.insert(s);
  }
  // 3 persons + 3 addresses.
  CHECK(nodes.size() == 6);
}

TEST_CASE("no invented predicates appear in the output") {
  Graph shapes = testutil::fixture_graph("input-shape-tvseries.ttl");
  Graph g = generate_fixture("input-shape-tvseries.ttl", 2, 13);

  std::set<std::string> allowed = {std::string(testutil::kRdfType),
                                   std::string(kShaclUpper) + "description"};
  for (auto& t : shapes.match(std::nullopt, iri(std::string(kShaclUpper) + "path"),
                              std::nullopt)) {
    allowed.insert(t.object.iri_value());
  }
  for (auto& t : g.triples()) CHECK(allowed.count(t.predicate.iri_value()) == 1);
}

TEST_CASE("xone exclusivity: never both name and givenName") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = generate_fixture("input-shape-person.ttl", 2, seed);
    for (auto& person : entities_of_shape(g, schema("PersonShape"), kShaclUpper)) {
      bool has_name = !g.objects(person, iri(schema("name"))).empty();
      bool has_given = !g.objects(person, iri(schema("givenName"))).empty();
      bool has_family = !g.objects(person, iri(schema("familyName"))).empty();
      CHECK(has_name != (has_given && has_family));
      CHECK(!(has_name && has_given));
    }
  }
}

TEST_CASE("both xone branches occur across seeds") {
  int full = 0;
  int split = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = generate_fixture("input-shape-person.ttl", 1, seed);
    for (auto& person : entities_of_shape(g, schema("PersonShape"), kShaclUpper)) {
      if (g.objects(person, iri(schema("name"))).empty()) {
        ++split;
      } else {
        ++full;
      }
    }
  }
  CHECK(full > 0);
  CHECK(split > 0);
}

TEST_CASE("deathDate appears for roughly half the persons and stays above birthDate") {
  int with_death = 0;
  int total = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = generate_fixture("input-shape-person.ttl", 1, seed);
    for (auto& person : entities_of_shape(g, schema("PersonShape"), kShaclUpper)) {
      ++total;
      auto births = g.objects(person, iri(schema("birthDate")));
      auto deaths = g.objects(person, iri(schema("deathDate")));
      REQUIRE(births.size() == 1);
      if (deaths.empty()) continue;
      ++with_death;
      CHECK(*shacl::parse_date_days(births[0]) < *shacl::parse_date_days(deaths[0]));
    }
  }
  CHECK(total == 60);
  CHECK(with_death > 10);
  CHECK(with_death < 50);
}

TEST_CASE("book fixture cardinalities") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = generate_fixture("input-shape-books.ttl", 1, seed);
    auto books = entities_of_shape(g, schema("BookShape"), kShaclUpper);
    REQUIRE(books.size() == 1);
    const Term& book = books[0];

    auto authors = g.objects(book, iri(schema("author")));
    CHECK(authors.size() >= 1);
    CHECK(authors.size() <= 3);
    CHECK(entities_of_shape(g, schema("AuthorShape"), kShaclUpper).size() == authors.size());

    CHECK(g.objects(book, iri(schema("genre"))).size() >= 2);
    CHECK(g.objects(book, iri(schema("genre"))).size() <= 4);
    CHECK(g.objects(book, iri(schema("isbn"))).size() == 1);
    CHECK(g.objects(book, iri(schema("identifier"))).size() == 1);
  }
}

TEST_CASE("property with exact count 2 emits exactly 2 triples") {
  const char* shapes =
      "@prefix sh: <http://www.w3.org/ns/shacl#> .\n"
      "@prefix ex: <http://example.com/ns#> .\n"
      "ex:S a sh:NodeShape ;\n"
      "  sh:property [ sh:path ex:tag ; sh:minCount 2 ; sh:maxCount 2 ] .\n";
  Graph g = gen::run_pipeline(shapes, 1, 5);
  auto nodes = entities_of_shape(g, std::string(testutil::kEx) + "S",
                                 "http://www.w3.org/ns/shacl#");
  REQUIRE(nodes.size() == 1);
  CHECK(g.objects(nodes[0], iri(std::string(testutil::kEx) + "tag")).size() == 2);
}

TEST_CASE("propertyless shape yields only the description triple") {
  const char* shapes =
      "@prefix sh: <http://www.w3.org/ns/shacl#> .\n"
      "@prefix ex: <http://example.com/ns#> .\n"
      "ex:S a sh:NodeShape .\n";
  Graph g = gen::run_pipeline(shapes, 1, 5);
  CHECK(g.size() == 1);

  const char* typed =
      "@prefix sh: <http://www.w3.org/ns/shacl#> .\n"
      "@prefix ex: <http://example.com/ns#> .\n"
      "ex:S a sh:NodeShape ; sh:targetClass ex:T .\n";
  Graph g2 = gen::run_pipeline(typed, 1, 5);
  CHECK(g2.size() == 2);
}

TEST_CASE("unrelated root shapes each get entity_count entities") {
  const char* shapes =
      "@prefix sh: <http://www.w3.org/ns/shacl#> .\n"
      "@prefix ex: <http://example.com/ns#> .\n"
      "ex:A a sh:NodeShape ; sh:targetClass ex:TA .\n"
      "ex:B a sh:NodeShape ; sh:targetClass ex:TB .\n";
  Graph g = gen::run_pipeline(shapes, 3, 5);
  std::string ns = "http://www.w3.org/ns/shacl#";
  CHECK(entities_of_shape(g, std::string(testutil::kEx) + "A", ns).size() == 3);
  CHECK(entities_of_shape(g, std::string(testutil::kEx) + "B", ns).size() == 3);
}

TEST_CASE("choose_branch semantics") {
  GenContext ctx(3);
  std::vector<shacl::ConstraintSet> branches(3);
  branches[0].path = "a";
  branches[1].path = "b";
  branches[2].path = "c";

  std::set<std::string> seen;
  for (int i = 0; i < 100; ++i) {
    auto xone = gen::choose_branch(gen::LogicalKind::Xone, branches, ctx);
    REQUIRE(xone.size() == 1);
    seen.insert(xone[0]->path);
  }
  CHECK(seen.size() == 3);

  auto all = gen::choose_branch(gen::LogicalKind::And, branches, ctx);
  CHECK(all.size() == 3);

  std::vector<shacl::ConstraintSet> one_branch = {branches[0]};
  auto single = gen::choose_branch(gen::LogicalKind::Xone, one_branch, ctx);
  REQUIRE(single.size() == 1);
  CHECK(single[0]->path == "a");

  CHECK_THROWS_AS(gen::choose_branch(gen::LogicalKind::Or, {}, ctx), Error);
}

TEST_CASE("or branches split postalCode between strings and in-range integers") {
  int strings = 0;
  int integers = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = generate_fixture("input-shape-person.ttl", 1, seed);
    for (auto& address : entities_of_shape(g, schema("AddressShape"), kShaclUpper)) {
      for (auto& value : g.objects(address, iri(schema("postalCode")))) {
        if (shacl::value_space(value) == shacl::ValueSpace::Integer) {
          ++integers;
          CHECK(*shacl::parse_integer(value) >= 10000);
          CHECK(*shacl::parse_integer(value) <= 99999);
        } else {
          ++strings;
        }
      }
    }
  }
  CHECK(strings > 0);
  CHECK(integers > 0);
}

TEST_CASE("a branch refining a declared property merges into one plan entry") {
  const char* shapes =
      "@prefix sh: <http://www.w3.org/ns/shacl#> .\n"
      "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
      "@prefix ex: <http://example.com/ns#> .\n"
      "ex:S a sh:NodeShape ;\n"
      "  sh:xone ( [ sh:path ex:v ; sh:minLength 4 ; sh:maxLength 4 ]\n"
      "            [ sh:path ex:v ; sh:minLength 7 ; sh:maxLength 7 ] ) ;\n"
      "  sh:property [ sh:path ex:v ; sh:datatype xsd:string ; sh:minCount 2 ;\n"
      "                sh:maxCount 2 ] .\n";
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = gen::run_pipeline(shapes, 1, seed);
    auto nodes = entities_of_shape(g, std::string(testutil::kEx) + "S",
                                   "http://www.w3.org/ns/shacl#");
    REQUIRE(nodes.size() == 1);
    auto values = g.objects(nodes[0], iri(std::string(testutil::kEx) + "v"));
    CHECK(values.size() == 2);  // the declared cardinality survives the merge
    for (auto& v : values) {
      bool sized = v.lexical().size() == 4 || v.lexical().size() == 7;
      CHECK(sized);
    }
  }
}

TEST_CASE("cyclic sh:node chains hit the recursion cap") {
  const char* shapes =
      "@prefix sh: <http://www.w3.org/ns/shacl#> .\n"
      "@prefix ex: <http://example.com/ns#> .\n"
      "ex:A a sh:NodeShape ; sh:property [ sh:path ex:next ; sh:node ex:A ] .\n";
  CHECK_THROWS_AS(gen::run_pipeline(shapes, 1, 5), Error);
  try {
    gen::run_pipeline(shapes, 1, 5);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RecursionLimit);
  }
}

TEST_CASE("unknown sh:node target raises MissingShape") {
  const char* shapes =
      "@prefix sh: <http://www.w3.org/ns/shacl#> .\n"
      "@prefix ex: <http://example.com/ns#> .\n"
      "ex:A a sh:NodeShape ; sh:property [ sh:path ex:next ; sh:node ex:Ghost ] .\n";
  try {
    gen::run_pipeline(shapes, 1, 5);
    FAIL("expected MissingShape");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingShape);
  }
}

TEST_CASE("a one-entry dictionary cannot starve a multi-valued property") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "rdfgen_small_dict";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "genres.csv");
    out << "Only Genre\n";
  }
  gen::PipelineOptions options;
  options.dict_dir = dir.string();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = gen::run_pipeline(testutil::fixture_text("input-shape-books.ttl"), 1, seed,
                                options);
    auto books = entities_of_shape(g, schema("BookShape"), kShaclUpper);
    REQUIRE(books.size() == 1);
    auto genres = g.objects(books[0], iri(schema("genre")));
    CHECK(genres.size() >= 2);  // distinct fallbacks fill in past the dictionary
  }
  fs::remove_all(dir);
}

TEST_CASE("run_pipeline determinism and seed sensitivity") {
  std::string source = testutil::fixture_text("input-shape-person.ttl");
  Graph a = gen::run_pipeline(source, 2, 99);
  Graph b = gen::run_pipeline(source, 2, 99);
  CHECK(rdf::serialize_turtle(a) == rdf::serialize_turtle(b));
  CHECK(a == b);

  Graph c = gen::run_pipeline(source, 2, 100);
  CHECK(rdf::serialize_turtle(a) != rdf::serialize_turtle(c));
}

TEST_CASE("run_pipeline rejects a zero entity count") {
  CHECK_THROWS_AS(gen::run_pipeline("", 0, 1), Error);
}

TEST_CASE("generated output parses back to the same triple set") {
  for (const char* fixture : {"input-shape-person.ttl", "input-shape-books.ttl",
                              "input-shape-tvseries.ttl", "input-shape-unknown.ttl"}) {
    CAPTURE(fixture);
    Graph g = generate_fixture(fixture, 2, 21);
    Graph back = rdf::parse_turtle(rdf::serialize_turtle(g));
    CHECK(back == g);
  }
}

TEST_CASE("pipeline options control base IRI and start index") {
  gen::PipelineOptions options;
  options.base_iri = "http://data.test/g#";
  options.start_index = 500;
  Graph g = gen::run_pipeline(testutil::fixture_text("input-shape-unknown.ttl"), 1, 3, options);
  bool found = false;
  for (auto& t : g.triples()) {
    CHECK(t.subject.iri_value().starts_with("http://data.test/g#Node5"));
    if (t.subject.iri_value() == "http://data.test/g#Node500") found = true;
  }
  CHECK(found);
}
