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

#include "streamfold/streamfold.h"

#include <memory>
#include <mutex>
#include <new>
#include <string>
#include <unordered_set>
#include <vector>

#include "streamfold/algorithms.hpp"
#include "streamfold/specializer.hpp"

using namespace streamfold;

struct sf_stream {
  AnyStream impl;
};

struct sf_ir_result {
  std::string text;
  std::vector<std::string> names;
  std::string error;
};

namespace {

std::mutex g_registry_mutex;
std::unordered_set<const sf_stream*>& registry() {
  static std::unordered_set<const sf_stream*> live;
  return live;
}

bool is_live(const sf_stream* s) {
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  return s != nullptr && registry().count(s) != 0;
}

sf_status from_status(Status s) {
  switch (s) {
    case Status::Ok: return SF_OK;
    case Status::MaximumLengthExceeded: return SF_MAXIMUM_LENGTH_EXCEEDED;
    case Status::KeyLengthMismatch: return SF_KEY_LENGTH_MISMATCH;
    case Status::OptionRejected: return SF_OPTION_REJECTED;
  }
  return SF_INTERNAL_ERROR;
}

// Runs `fn`, mapping exceptions onto status codes.
template <typename Fn>
sf_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return from_status(e.status());
  } catch (const ContractViolation&) {
    return SF_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    return SF_INTERNAL_ERROR;
  } catch (...) {
    return SF_INTERNAL_ERROR;
  }
}

ByteView bytes(const uint8_t* p, size_t n) { return n == 0 ? ByteView{} : ByteView(p, n); }

template <typename A>
void limit(A& alg, uint64_t max_input_length) {
  if (max_input_length != 0) alg.set_max_input_length(max_input_length);
}

AnyStream make_stream(const sf_stream_config& cfg) {
  const std::size_t bm = cfg.buf_multiple == 0 ? 1 : cfg.buf_multiple;
  ByteView key = bytes(cfg.key, cfg.key_len);
  if (cfg.agile) {
    auto id = to_agile(static_cast<AlgId>(cfg.alg));
    if (!id) throw Error(Status::OptionRejected, "algorithm is not in the agile roster");
    if (cfg.key_len != 0 || cfg.digest_len != 0)
      throw Error(Status::OptionRejected, "the agile instance takes no options");
    Agile alg = agile_instance(bm);
    limit(alg, cfg.max_input_length);
    return Stream<Agile>(alg, *id, key);
  }
  InstanceOptions opts{cfg.alg == SF_ALG_POLY1305 ? 0 : cfg.key_len, cfg.digest_len, bm};
  AnyAlgorithm alg = instance(static_cast<AlgId>(cfg.alg), opts);
  return std::visit(
      [&](auto& a) -> AnyStream {
        limit(a, cfg.max_input_length);
        return Stream<std::decay_t<decltype(a)>>(a, key);
      },
      alg);
}

bool valid_alg(int alg) { return alg >= SF_ALG_MD5 && alg <= SF_ALG_POLY1305; }

std::vector<std::string> split_names(const char* const* names, size_t n) {
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) out.emplace_back(names[i] ? names[i] : "");
  return out;
}

std::map<std::string, std::string> to_bindings(const sf_ir_binding* b, size_t n) {
  std::map<std::string, std::string> out;
  for (size_t i = 0; i < n; ++i) {
    if (!b[i].extern_name || !b[i].impl_name)
      throw ir::IrError(ir::ErrorKind::InvalidRequest, "binding with a null name");
    out[b[i].extern_name] = b[i].impl_name;
  }
  return out;
}

template <typename Fn>
sf_status run_ir(sf_ir_result** out, Fn&& fn) {
  if (!out) return SF_INVALID_ARGUMENT;
  *out = nullptr;
  auto result = std::make_unique<sf_ir_result>();
  sf_status st = SF_OK;
  try {
    fn(*result);
  } catch (const ir::IrError& e) {
    result->text.clear();
    result->names.clear();
    result->error = e.what();
    st = SF_IR_ERROR;
  } catch (const std::exception& e) {
    result->error = std::string("InternalError: ") + e.what();
    st = SF_INTERNAL_ERROR;
  }
  *out = result.release();
  return st;
}

}  // namespace

extern "C" {

const char* sf_status_str(sf_status status) {
  switch (status) {
    case SF_OK: return "ok";
    case SF_MAXIMUM_LENGTH_EXCEEDED: return "maximum input length exceeded";
    case SF_KEY_LENGTH_MISMATCH: return "key length mismatch";
    case SF_OPTION_REJECTED: return "option rejected";
    case SF_INVALID_ARGUMENT: return "invalid argument";
    case SF_INVALID_HANDLE: return "invalid handle";
    case SF_BUFFER_TOO_SMALL: return "output buffer too small";
    case SF_IR_ERROR: return "specializer error";
    case SF_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* sf_alg_name(sf_alg alg) {
  if (!valid_alg(alg)) return "unknown";
  return to_string(static_cast<AlgId>(alg));
}

sf_status sf_alg_from_name(const char* name, sf_alg* out) {
  if (!name || !out) return SF_INVALID_ARGUMENT;
  auto id = alg_id_from_string(name);
  if (!id) return SF_OPTION_REJECTED;
  *out = static_cast<sf_alg>(*id);
  return SF_OK;
}

sf_status sf_stream_new(const sf_stream_config* config, sf_stream** out) {
  if (!config || !out) return SF_INVALID_ARGUMENT;
  if (!valid_alg(config->alg)) return SF_OPTION_REJECTED;
  if (config->key_len != 0 && !config->key) return SF_INVALID_ARGUMENT;
  return guarded([&] {
    auto s = std::make_unique<sf_stream>(sf_stream{make_stream(*config)});
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    registry().insert(s.get());
    *out = s.release();
    return SF_OK;
  });
}

sf_status sf_stream_free(sf_stream* stream) {
  if (!stream) return SF_OK;
  {
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    if (registry().erase(stream) == 0) return SF_INVALID_HANDLE;
  }
  delete stream;
  return SF_OK;
}

sf_status sf_stream_reinit(sf_stream* stream, const uint8_t* key, size_t key_len) {
  if (!is_live(stream)) return SF_INVALID_HANDLE;
  if (key_len != 0 && !key) return SF_INVALID_ARGUMENT;
  return guarded([&] {
    std::visit([&](auto& s) { s.reinit(bytes(key, key_len)); }, stream->impl);
    return SF_OK;
  });
}

sf_status sf_stream_update(sf_stream* stream, const uint8_t* data, size_t len) {
  if (!is_live(stream)) return SF_INVALID_HANDLE;
  if (len != 0 && !data) return SF_INVALID_ARGUMENT;
  return guarded([&] {
    return from_status(std::visit([&](auto& s) { return s.update(bytes(data, len)); }, stream->impl));
  });
}

sf_status sf_stream_digest(const sf_stream* stream, uint8_t* out, size_t out_len) {
  if (!is_live(stream)) return SF_INVALID_HANDLE;
  if (!out) return SF_INVALID_ARGUMENT;
  return guarded([&] {
    return std::visit(
        [&](const auto& s) {
          const std::size_t n = s.output_len();
          if (out_len < n) return SF_BUFFER_TOO_SMALL;
          s.digest(MutableByteView(out, n));
          return SF_OK;
        },
        stream->impl);
  });
}

size_t sf_stream_digest_len(const sf_stream* stream) {
  if (!is_live(stream)) return 0;
  return std::visit([](const auto& s) { return s.output_len(); }, stream->impl);
}

uint64_t sf_stream_total_len(const sf_stream* stream) {
  if (!is_live(stream)) return 0;
  return std::visit([](const auto& s) { return s.total_len(); }, stream->impl);
}

size_t sf_stream_buffered_len(const sf_stream* stream) {
  if (!is_live(stream)) return 0;
  return std::visit([](const auto& s) { return s.buffered_len(); }, stream->impl);
}

size_t sf_live_stream_count(void) {
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  return registry().size();
}

sf_status sf_ir_specialize(const char* program, const sf_ir_stage* stages, size_t n_stages,
                           sf_ir_result** out) {
  if (!program || (n_stages != 0 && !stages)) return SF_INVALID_ARGUMENT;
  return run_ir(out, [&](sf_ir_result& r) {
    std::vector<ir::SpecializationRequest> reqs;
    for (size_t i = 0; i < n_stages; ++i) {
      const sf_ir_stage& s = stages[i];
      ir::SpecializationRequest req;
      req.index_value = s.index_value ? s.index_value : "";
      req.bindings = to_bindings(s.bindings, s.n_bindings);
      req.entry_points = split_names(s.entries, s.entries ? s.n_entries : 0);
      req.mangle_suffix = s.suffix ? s.suffix : "";
      reqs.push_back(std::move(req));
    }
    auto inst = ir::specialize(ir::parse_program(program), reqs);
    r.text = ir::emit(inst.program);
    r.names = std::move(inst.generated);
  });
}

sf_status sf_ir_functorize(const char* program, sf_ir_result** out) {
  if (!program) return SF_INVALID_ARGUMENT;
  return run_ir(out, [&](sf_ir_result& r) {
    auto p = ir::functorize(ir::parse_program(program));
    r.text = ir::emit(p);
    for (const auto& f : p.functions)
      if (f.indexed) r.names.push_back(f.name);
  });
}

const char* sf_ir_result_text(const sf_ir_result* result) {
  return result ? result->text.c_str() : "";
}

size_t sf_ir_result_name_count(const sf_ir_result* result) {
  return result ? result->names.size() : 0;
}

const char* sf_ir_result_name(const sf_ir_result* result, size_t i) {
  if (!result || i >= result->names.size()) return nullptr;
  return result->names[i].c_str();
}

const char* sf_ir_result_error(const sf_ir_result* result) {
  return result ? result->error.c_str() : "";
}

void sf_ir_result_free(sf_ir_result* result) { delete result; }

sf_status sf_ir_eval(const char* program, const char* entry, const uint64_t* args, size_t n_args,
                     const char* index_value, const sf_ir_binding* bindings, size_t n_bindings,
                     uint64_t* out, sf_ir_result** diag) {
  if (!program || !entry || !out || (n_args != 0 && !args)) return SF_INVALID_ARGUMENT;
  sf_ir_result* local = nullptr;
  sf_status st = run_ir(&local, [&](sf_ir_result&) {
    std::optional<std::string> idx;
    if (index_value) idx = index_value;
    *out = ir::interpret(ir::parse_program(program), entry,
                         std::vector<uint64_t>(args, args + n_args), idx,
                         to_bindings(bindings, n_bindings));
  });
  if (diag)
    *diag = local;
  else
    sf_ir_result_free(local);
  return st;
}

}  // extern "C"
