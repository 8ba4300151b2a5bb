#include "rdfgen/rdfgen.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <random>
#include <sstream>

#include "rdfgen/check/validator.hpp"
#include "rdfgen/error.hpp"
#include "rdfgen/gen/generator.hpp"
#include "rdfgen/rdf/turtle.hpp"
#include "rdfgen/shacl/shape_map.hpp"

using rdfgen::Error;
using rdfgen::ErrorKind;

struct rdfgen_generator {
  std::uint64_t seed;
  rdfgen::gen::PipelineOptions options;
  std::string last_error;
  std::string last_warnings;
};

namespace {

rdfgen_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax:
    case ErrorKind::UnresolvedPrefix:
    case ErrorKind::MalformedList: return RDFGEN_ERR_SYNTAX;
    case ErrorKind::MissingPath:
    case ErrorKind::UnsupportedNodeRef:
    case ErrorKind::TypeMismatch: return RDFGEN_ERR_SHAPE;
    case ErrorKind::Io: return RDFGEN_ERR_IO;
    case ErrorKind::InvalidArgument: return RDFGEN_ERR_INVALID_ARGUMENT;
    default: return RDFGEN_ERR_GENERATION;
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, std::string("cannot open file: ") + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void store_warnings(rdfgen_generator* generator, const rdfgen::WarningLog& log) {
  std::ostringstream out;
  for (auto& warning : log) out << warning.code << ": " << warning.message << "\n";
  generator->last_warnings = out.str();
}

template <typename Fn>
rdfgen_status guarded(rdfgen_generator* generator, Fn&& fn) {
  generator->last_error.clear();
  try {
    fn();
    return RDFGEN_OK;
  } catch (const Error& e) {
    generator->last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    generator->last_error = e.what();
    return RDFGEN_ERR_UNKNOWN;
  } catch (...) {
    generator->last_error = "unknown error";
    return RDFGEN_ERR_UNKNOWN;
  }
}

}  // namespace

extern "C" {

const char* rdfgen_version(void) { return "0.1.0"; }

rdfgen_status rdfgen_generator_create(rdfgen_generator** out) {
  if (!out) return RDFGEN_ERR_INVALID_ARGUMENT;
  auto* generator = new (std::nothrow) rdfgen_generator;
  if (!generator) return RDFGEN_ERR_UNKNOWN;
  generator->seed = std::random_device{}();
  *out = generator;
  return RDFGEN_OK;
}

void rdfgen_generator_destroy(rdfgen_generator* generator) { delete generator; }

rdfgen_status rdfgen_generator_set_seed(rdfgen_generator* generator, uint64_t seed) {
  if (!generator) return RDFGEN_ERR_INVALID_ARGUMENT;
  generator->seed = seed;
  return RDFGEN_OK;
}

uint64_t rdfgen_generator_seed(const rdfgen_generator* generator) {
  return generator ? generator->seed : 0;
}

rdfgen_status rdfgen_generator_set_dictionary_dir(rdfgen_generator* generator, const char* path) {
  if (!generator || !path) return RDFGEN_ERR_INVALID_ARGUMENT;
  generator->options.dict_dir = path;
  return RDFGEN_OK;
}

rdfgen_status rdfgen_generator_set_base_iri(rdfgen_generator* generator, const char* iri) {
  if (!generator || !iri || !*iri) return RDFGEN_ERR_INVALID_ARGUMENT;
  generator->options.base_iri = iri;
  return RDFGEN_OK;
}

rdfgen_status rdfgen_generator_set_start_index(rdfgen_generator* generator, uint64_t index) {
  if (!generator) return RDFGEN_ERR_INVALID_ARGUMENT;
  generator->options.start_index = index;
  return RDFGEN_OK;
}

rdfgen_status rdfgen_generate_string(rdfgen_generator* generator, const char* shapes_ttl,
                                     uint64_t entity_count, char** out_ttl) {
  if (!generator || !shapes_ttl || !out_ttl || entity_count < 1) {
    if (generator) generator->last_error = "invalid argument";
    return RDFGEN_ERR_INVALID_ARGUMENT;
  }
  return guarded(generator, [&] {
    rdfgen::WarningLog log;
    rdfgen::rdf::Graph graph = rdfgen::gen::run_pipeline(shapes_ttl, entity_count,
                                                         generator->seed, generator->options, &log);
    store_warnings(generator, log);
    *out_ttl = copy_string(rdfgen::rdf::serialize_turtle(graph));
    if (!*out_ttl) throw Error(ErrorKind::Io, "out of memory");
  });
}

rdfgen_status rdfgen_generate_file(rdfgen_generator* generator, const char* shapes_path,
                                   const char* output_path, uint64_t entity_count) {
  if (!generator || !shapes_path || !output_path || entity_count < 1) {
    if (generator) generator->last_error = "invalid argument";
    return RDFGEN_ERR_INVALID_ARGUMENT;
  }
  return guarded(generator, [&] {
    std::string source = read_file(shapes_path);
    rdfgen::WarningLog log;
    rdfgen::rdf::Graph graph = rdfgen::gen::run_pipeline(source, entity_count, generator->seed,
                                                         generator->options, &log);
    store_warnings(generator, log);
    std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, std::string("cannot write file: ") + output_path);
    out << rdfgen::rdf::serialize_turtle(graph);
  });
}

rdfgen_status rdfgen_validate_file(rdfgen_generator* generator, const char* shapes_path,
                                   const char* data_path, int* conforms, char** report_text) {
  if (!generator || !shapes_path || !data_path || !conforms) {
    if (generator) generator->last_error = "invalid argument";
    return RDFGEN_ERR_INVALID_ARGUMENT;
  }
  return guarded(generator, [&] {
    rdfgen::rdf::Graph shapes = rdfgen::rdf::parse_turtle_file(shapes_path);
    rdfgen::rdf::Graph data = rdfgen::rdf::parse_turtle_file(data_path);
    rdfgen::WarningLog log;
    rdfgen::shacl::RootShapeMap root = rdfgen::shacl::extract_shape_maps(shapes, &log);
    store_warnings(generator, log);
    rdfgen::check::Report report = rdfgen::check::validate(data, root);
    *conforms = report.conforms ? 1 : 0;
    if (report_text) {
      *report_text = copy_string(report.to_text());
      if (!*report_text) throw Error(ErrorKind::Io, "out of memory");
    }
  });
}

const char* rdfgen_generator_error(const rdfgen_generator* generator) {
  return generator ? generator->last_error.c_str() : "";
}

const char* rdfgen_generator_warnings(const rdfgen_generator* generator) {
  return generator ? generator->last_warnings.c_str() : "";
}

void rdfgen_string_free(char* text) { std::free(text); }

}  // extern "C"
