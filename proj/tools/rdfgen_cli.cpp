// rdfgen command line: generate a synthetic RDF graph from a SHACL shapes
// file. Talks to the core exclusively through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rdfgen/rdfgen.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;    // parse or shape errors
constexpr int kExitGenerate = 3;
constexpr int kExitViolations = 4;

int exit_code_for(rdfgen_status status) {
  switch (status) {
    case RDFGEN_OK: return kExitOk;
    case RDFGEN_ERR_INVALID_ARGUMENT: return kExitUsage;
    case RDFGEN_ERR_IO:
    case RDFGEN_ERR_SYNTAX:
    case RDFGEN_ERR_SHAPE: return kExitInput;
    default: return kExitGenerate;
  }
}

struct GeneratorHandle {
  rdfgen_generator* ptr = nullptr;
  ~GeneratorHandle() { rdfgen_generator_destroy(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic RDF graph generator driven by SHACL shapes"};

  std::string input_path;
  std::string output_path;
  std::uint64_t entity_count = 0;
  std::optional<std::uint64_t> seed;
  std::string dict_dir;
  std::string base_iri;
  std::optional<std::uint64_t> start_index;
  bool validate_after = false;
  std::string report_path;

  app.add_option("input", input_path, "SHACL shapes file (Turtle)")->required();
  app.add_option("output", output_path, "output file for the generated graph")->required();
  app.add_option("count", entity_count, "number of entities to generate")
      ->required()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "RNG seed; omit for a random one");
  app.add_option("--dict-dir", dict_dir, "directory of *.csv value dictionaries");
  app.add_option("--base-iri", base_iri, "IRI prefix for generated nodes");
  app.add_option("--start-index", start_index, "first node number (default 100)");
  app.add_flag("--validate", validate_after, "validate the output against the shapes");
  app.add_option("--report", report_path, "write the validation report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  GeneratorHandle generator;
  if (rdfgen_generator_create(&generator.ptr) != RDFGEN_OK) {
    std::cerr << "error: cannot initialize generator\n";
    return kExitGenerate;
  }

  if (seed) {
    rdfgen_generator_set_seed(generator.ptr, *seed);
  } else {
    std::cerr << "seed: " << rdfgen_generator_seed(generator.ptr) << "\n";
  }
  if (!dict_dir.empty()) rdfgen_generator_set_dictionary_dir(generator.ptr, dict_dir.c_str());
  if (!base_iri.empty()) rdfgen_generator_set_base_iri(generator.ptr, base_iri.c_str());
  if (start_index) rdfgen_generator_set_start_index(generator.ptr, *start_index);

  rdfgen_status status =
      rdfgen_generate_file(generator.ptr, input_path.c_str(), output_path.c_str(), entity_count);
  if (const char* warnings = rdfgen_generator_warnings(generator.ptr); warnings && *warnings) {
    std::cerr << warnings;
  }
  if (status != RDFGEN_OK) {
    std::cerr << "error: " << rdfgen_generator_error(generator.ptr) << "\n";
    return exit_code_for(status);
  }

  if (!validate_after && report_path.empty()) return kExitOk;

  int conforms = 0;
  char* report_text = nullptr;
  status = rdfgen_validate_file(generator.ptr, input_path.c_str(), output_path.c_str(), &conforms,
                                &report_text);
  if (status != RDFGEN_OK) {
    std::cerr << "error: " << rdfgen_generator_error(generator.ptr) << "\n";
    return exit_code_for(status);
  }
  if (!report_path.empty() && report_text) {
    std::ofstream report(report_path, std::ios::trunc);
    if (!report) {
      std::cerr << "error: cannot write report to " << report_path << "\n";
      rdfgen_string_free(report_text);
      return kExitInput;
    }
    report << report_text;
  } else if (report_text && !conforms) {
    std::cerr << report_text;
  }
  rdfgen_string_free(report_text);

  if (!conforms) {
    std::cerr << "validation found violations\n";
    return kExitViolations;
  }
  return kExitOk;
}
