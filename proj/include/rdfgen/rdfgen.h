/* C interface to the rdfgen shared library.
 *
 * All functions return rdfgen_status; RDFGEN_OK means success. A generator
 * handle carries its configuration and the message of the last error, which
 * stays valid until the next call on the same handle. Handles are not
 * thread-safe; use one handle per thread.
 */
#ifndef RDFGEN_RDFGEN_H
#define RDFGEN_RDFGEN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rdfgen_status {
  RDFGEN_OK = 0,
  RDFGEN_ERR_INVALID_ARGUMENT = 1,
  RDFGEN_ERR_IO = 2,
  RDFGEN_ERR_SYNTAX = 3,   /* malformed Turtle */
  RDFGEN_ERR_SHAPE = 4,    /* unusable shape definitions */
  RDFGEN_ERR_GENERATION = 5,
  RDFGEN_ERR_UNKNOWN = 6
} rdfgen_status;

typedef struct rdfgen_generator rdfgen_generator;

const char* rdfgen_version(void);

/* Creates a generator with a seed drawn from system entropy. */
rdfgen_status rdfgen_generator_create(rdfgen_generator** out);
void rdfgen_generator_destroy(rdfgen_generator* generator);

rdfgen_status rdfgen_generator_set_seed(rdfgen_generator* generator, uint64_t seed);
uint64_t rdfgen_generator_seed(const rdfgen_generator* generator);

/* Directory of *.csv dictionaries overriding the built-in value sets. */
rdfgen_status rdfgen_generator_set_dictionary_dir(rdfgen_generator* generator, const char* path);

/* IRI prefix for generated nodes; default "http://example.org/ns#". */
rdfgen_status rdfgen_generator_set_base_iri(rdfgen_generator* generator, const char* iri);

/* First node number; default 100. */
rdfgen_status rdfgen_generator_set_start_index(rdfgen_generator* generator, uint64_t index);

/* Reads a SHACL shapes graph from shapes_path and writes a synthetic RDF
 * graph of entity_count entities (per root shape) to output_path. */
rdfgen_status rdfgen_generate_file(rdfgen_generator* generator, const char* shapes_path,
                                   const char* output_path, uint64_t entity_count);

/* In-memory variant: Turtle in, Turtle out. Free *out_ttl with
 * rdfgen_string_free. */
rdfgen_status rdfgen_generate_string(rdfgen_generator* generator, const char* shapes_ttl,
                                     uint64_t entity_count, char** out_ttl);

/* Validates a data graph against a shapes graph. *conforms is set to 1 or 0;
 * when report_text is non-null it receives the full report (free with
 * rdfgen_string_free). Constraint violations are reported through *conforms,
 * not through the return status. */
rdfgen_status rdfgen_validate_file(rdfgen_generator* generator, const char* shapes_path,
                                   const char* data_path, int* conforms, char** report_text);

/* Message of the last failed call on this handle; empty string if none. */
const char* rdfgen_generator_error(const rdfgen_generator* generator);

/* Warnings (unknown keywords, duplicate paths, ...) from the last call,
 * newline-separated; empty string if none. */
const char* rdfgen_generator_warnings(const rdfgen_generator* generator);

void rdfgen_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* RDFGEN_RDFGEN_H */
