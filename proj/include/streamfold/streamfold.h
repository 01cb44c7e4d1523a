/*
   Copyright 2026 The Streamfold Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef STREAMFOLD_STREAMFOLD_H
#define STREAMFOLD_STREAMFOLD_H

/*
 * C interface to the streaming hash/MAC layer and the specializer.
 *
 * All objects are opaque handles owned by the library. Functions return an
 * sf_status; outputs are written through pointer arguments only on success.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(SF_BUILDING_LIBRARY)
#define SF_API __attribute__((visibility("default")))
#else
#define SF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sf_status {
  SF_OK = 0,
  SF_MAXIMUM_LENGTH_EXCEEDED = 1,
  SF_KEY_LENGTH_MISMATCH = 2,
  SF_OPTION_REJECTED = 3,
  SF_INVALID_ARGUMENT = 4,
  SF_INVALID_HANDLE = 5,
  SF_BUFFER_TOO_SMALL = 6,
  SF_IR_ERROR = 7,
  SF_INTERNAL_ERROR = 8
} sf_status;

typedef enum sf_alg {
  SF_ALG_MD5 = 0,
  SF_ALG_SHA1 = 1,
  SF_ALG_SHA2_256 = 2,
  SF_ALG_SHA2_512 = 3,
  SF_ALG_BLAKE2S = 4,
  SF_ALG_BLAKE2B = 5,
  SF_ALG_POLY1305 = 6
} sf_alg;

SF_API const char* sf_status_str(sf_status status);
SF_API const char* sf_alg_name(sf_alg alg);
/* Returns 0 and sets *out for a known name such as "sha256". */
SF_API sf_status sf_alg_from_name(const char* name, sf_alg* out);

typedef struct sf_stream sf_stream;

typedef struct sf_stream_config {
  sf_alg alg;
  int agile;                 /* nonzero: run `alg` through the agile instance */
  const uint8_t* key;        /* Poly1305 (32 bytes) or keyed Blake2 */
  size_t key_len;
  size_t digest_len;         /* Blake2 only; 0 selects the maximum */
  size_t buf_multiple;       /* 0 means 1 */
  uint64_t max_input_length; /* 0 keeps the algorithm's limit */
} sf_stream_config;

SF_API sf_status sf_stream_new(const sf_stream_config* config, sf_stream** out);
SF_API sf_status sf_stream_free(sf_stream* stream);
/* Restarts the stream; `key` must have the configured length. */
SF_API sf_status sf_stream_reinit(sf_stream* stream, const uint8_t* key, size_t key_len);
/* On SF_MAXIMUM_LENGTH_EXCEEDED the stream is unchanged and still usable. */
SF_API sf_status sf_stream_update(sf_stream* stream, const uint8_t* data, size_t len);
/* Does not consume the stream; `out_len` must be at least sf_stream_digest_len. */
SF_API sf_status sf_stream_digest(const sf_stream* stream, uint8_t* out, size_t out_len);
SF_API size_t sf_stream_digest_len(const sf_stream* stream);
SF_API uint64_t sf_stream_total_len(const sf_stream* stream);
SF_API size_t sf_stream_buffered_len(const sf_stream* stream);
/* Number of streams created and not yet freed. */
SF_API size_t sf_live_stream_count(void);

typedef struct sf_ir_binding {
  const char* extern_name;
  const char* impl_name;
} sf_ir_binding;

typedef struct sf_ir_stage {
  const char* index_value;
  const sf_ir_binding* bindings;
  size_t n_bindings;
  const char* const* entries; /* may be NULL for the default entry points */
  size_t n_entries;
  const char* suffix;
} sf_ir_stage;

typedef struct sf_ir_result sf_ir_result;

/*
 * Parses `program`, functorizes it and runs the stages in order. A result is
 * always produced; on SF_IR_ERROR it carries only the error message.
 */
SF_API sf_status sf_ir_specialize(const char* program, const sf_ir_stage* stages, size_t n_stages,
                                  sf_ir_result** out);
/* Parses and validates `program`, returning its functorized form. */
SF_API sf_status sf_ir_functorize(const char* program, sf_ir_result** out);
SF_API const char* sf_ir_result_text(const sf_ir_result* result);
SF_API size_t sf_ir_result_name_count(const sf_ir_result* result);
SF_API const char* sf_ir_result_name(const sf_ir_result* result, size_t i);
/* "<Kind>: <detail>", or an empty string on success. */
SF_API const char* sf_ir_result_error(const sf_ir_result* result);
SF_API void sf_ir_result_free(sf_ir_result* result);

/* Evaluates `entry`. `index_value` may be NULL for non-indexed entries. */
SF_API sf_status sf_ir_eval(const char* program, const char* entry, const uint64_t* args,
                            size_t n_args, const char* index_value, const sf_ir_binding* bindings,
                            size_t n_bindings, uint64_t* out, sf_ir_result** diag);

#ifdef __cplusplus
}
#endif

#endif /* STREAMFOLD_STREAMFOLD_H */
