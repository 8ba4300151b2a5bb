#ifndef RDFGEN_TESTS_TEST_UTIL_HPP
#define RDFGEN_TESTS_TEST_UTIL_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "rdfgen/rdf/turtle.hpp"

#ifndef RDFGEN_FIXTURE_DIR
#define RDFGEN_FIXTURE_DIR "fixtures"
#endif

namespace testutil {

inline std::string fixture_path(const std::string& name) {
  return std::string(RDFGEN_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string fixture_text(const std::string& name) {
  return read_file(fixture_path(name));
}

inline rdfgen::rdf::Graph fixture_graph(const std::string& name) {
  return rdfgen::rdf::parse_turtle(fixture_text(name));
}

// The person shape used across the parser and extractor tests.
inline const char* kPersonExample = R"ttl(
@prefix sh: <http://www.w3.org/ns/SHACL#> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
@prefix ex: <http://example.com/ns#> .

ex:PersonShape
    a sh:NodeShape ;
    sh:targetClass ex:Person ;
    sh:property [
        sh:path ex:name ;
        sh:datatype xsd:string ;
        sh:maxCount 1;
        sh:name "Person's name" ;
    ] ;
    sh:property [
        sh:path ex:birthDate ;
        sh:lessThan ex:deathDate ;
        sh:maxCount 1 ;
    ] ;
    sh:property [
        sh:path ex:gender ;
        sh:in ( "female" "male" ) ;
    ] .
)ttl";

inline constexpr const char* kShacl = "http://www.w3.org/ns/SHACL#";
inline constexpr const char* kSchema = "http://schema.org/";
inline constexpr const char* kEx = "http://example.com/ns#";
inline constexpr const char* kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

}  // namespace testutil

#endif
