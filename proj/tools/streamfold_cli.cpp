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

// streamfold: command-line front end over the C API.
//
// Exit codes: 0 success, 1 I/O or specializer error, 2 usage error,
// 3 input longer than the algorithm accepts. With several inputs the
// highest code wins and every readable input is still reported.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kat_file.hpp"
#include "streamfold/streamfold.h"

#ifndef SF_DEFAULT_KAT
#define SF_DEFAULT_KAT "data/kat_vectors.txt"
#endif

namespace {

enum Exit : int { kOk = 0, kIoError = 1, kUsage = 2, kTooLong = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StreamOptions {
  std::string alg;
  std::string key_hex;
  std::size_t chunk_size = 65536;
  std::size_t buf_multiple = 1;
  std::size_t digest_len = 0;
  std::uint64_t max_input_length = 0;
  bool agile = false;
  std::vector<std::string> inputs;
};

struct StageOptions {
  std::string index;
  std::vector<std::string> binds;
  std::vector<std::string> entries;
  std::string suffix;
};

struct SpecializeOptions {
  std::string file;
  std::string output;
  bool print_names = false;
  std::vector<StageOptions> stages;
};

struct SelftestOptions {
  std::string vectors = SF_DEFAULT_KAT;
  std::string filter;
};

struct EvalOptions {
  std::string file;
  std::string entry;
  std::vector<std::string> args;
  std::string index;
  std::vector<std::string> binds;
};

using StreamPtr = std::unique_ptr<sf_stream, decltype(&sf_stream_free)>;
using ResultPtr = std::unique_ptr<sf_ir_result, decltype(&sf_ir_result_free)>;

std::string hex(const std::vector<std::uint8_t>& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (auto b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 15];
  }
  return out;
}

sf_alg parse_alg(const std::string& name) {
  sf_alg alg;
  if (sf_alg_from_name(name.c_str(), &alg) != SF_OK) throw UsageError("unknown algorithm '" + name + "'");
  return alg;
}

StreamPtr open_stream(sf_alg alg, const StreamOptions& o, const std::vector<std::uint8_t>& key) {
  sf_stream_config cfg{};
  cfg.alg = alg;
  cfg.agile = o.agile ? 1 : 0;
  cfg.key = key.empty() ? nullptr : key.data();
  cfg.key_len = key.size();
  cfg.digest_len = o.digest_len;
  cfg.buf_multiple = o.buf_multiple;
  cfg.max_input_length = o.max_input_length;
  sf_stream* s = nullptr;
  sf_status st = sf_stream_new(&cfg, &s);
  if (st != SF_OK) throw UsageError(std::string("cannot set up ") + sf_alg_name(alg) + ": " + sf_status_str(st));
  return StreamPtr(s, &sf_stream_free);
}

// Streams one input; prints its digest line on success.
int digest_input(sf_alg alg, const StreamOptions& o, const std::vector<std::uint8_t>& key,
                 const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path, std::ios::binary);
    if (!file) {
      std::cerr << "streamfold: " << path << ": cannot open\n";
      return kIoError;
    }
    in = &file;
  }
  StreamPtr s = open_stream(alg, o, key);
  std::vector<char> buf(o.chunk_size);
  while (true) {
    in->read(buf.data(), static_cast<std::streamsize>(buf.size()));
    const auto got = static_cast<std::size_t>(in->gcount());
    if (got > 0) {
      sf_status st = sf_stream_update(s.get(), reinterpret_cast<const std::uint8_t*>(buf.data()), got);
      if (st == SF_MAXIMUM_LENGTH_EXCEEDED) {
        std::cerr << "streamfold: " << path << ": input exceeds the maximum length\n";
        return kTooLong;
      }
      if (st != SF_OK) {
        std::cerr << "streamfold: " << path << ": " << sf_status_str(st) << "\n";
        return kIoError;
      }
    }
    if (in->eof()) break;
    if (in->fail()) {
      std::cerr << "streamfold: " << path << ": read error\n";
      return kIoError;
    }
  }
  std::vector<std::uint8_t> out(sf_stream_digest_len(s.get()));
  if (sf_stream_digest(s.get(), out.data(), out.size()) != SF_OK) {
    std::cerr << "streamfold: " << path << ": digest failed\n";
    return kIoError;
  }
  std::cout << hex(out) << "  " << path << "\n";
  return kOk;
}

int run_stream(const StreamOptions& o, bool mac) {
  const sf_alg alg = parse_alg(o.alg);
  if (o.chunk_size == 0) throw UsageError("--chunk-size must be at least 1");
  std::vector<std::uint8_t> key;
  if (mac) {
    if (alg != SF_ALG_POLY1305 && alg != SF_ALG_BLAKE2S && alg != SF_ALG_BLAKE2B)
      throw UsageError(o.alg + " is not a MAC");
    auto k = streamfold::kat::decode_hex(o.key_hex);
    if (!k || k->empty()) throw UsageError("--key must be non-empty hex");
    key = *k;
  }
  if (o.agile && mac) throw UsageError("--agile does not take a key");
  // Reject bad options once, before touching any input.
  open_stream(alg, o, key);
  int rc = kOk;
  std::vector<std::string> inputs = o.inputs.empty() ? std::vector<std::string>{"-"} : o.inputs;
  for (const auto& path : inputs) rc = std::max(rc, digest_input(alg, o, key, path));
  return rc;
}

std::pair<std::string, std::string> split_binding(const std::string& b) {
  const auto eq = b.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == b.size())
    throw UsageError("--bind expects <extern>=<impl>, got '" + b + "'");
  return {b.substr(0, eq), b.substr(eq + 1)};
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

int run_specialize(const SpecializeOptions& o) {
  std::string text;
  if (!read_file(o.file, text)) {
    std::cerr << "streamfold: " << o.file << ": cannot open\n";
    return kIoError;
  }
  // Keep every string alive for the duration of the C call.
  std::vector<std::vector<std::pair<std::string, std::string>>> bind_store;
  std::vector<std::vector<sf_ir_binding>> bindings;
  std::vector<std::vector<const char*>> entries;
  for (const auto& s : o.stages) {
    auto& pairs = bind_store.emplace_back();
    for (const auto& b : s.binds) pairs.push_back(split_binding(b));
  }
  std::vector<sf_ir_stage> stages;
  for (std::size_t i = 0; i < o.stages.size(); ++i) {
    auto& bs = bindings.emplace_back();
    for (const auto& [e, impl] : bind_store[i]) bs.push_back({e.c_str(), impl.c_str()});
    auto& es = entries.emplace_back();
    for (const auto& e : o.stages[i].entries) es.push_back(e.c_str());
  }
  for (std::size_t i = 0; i < o.stages.size(); ++i) {
    const auto& s = o.stages[i];
    stages.push_back({s.index.empty() ? nullptr : s.index.c_str(), bindings[i].data(),
                      bindings[i].size(), entries[i].empty() ? nullptr : entries[i].data(),
                      entries[i].size(), s.suffix.c_str()});
  }
  sf_ir_result* raw = nullptr;
  sf_status st = sf_ir_specialize(text.c_str(), stages.data(), stages.size(), &raw);
  ResultPtr result(raw, &sf_ir_result_free);
  if (st != SF_OK) {
    std::cerr << "streamfold: " << o.file << ": " << (result ? sf_ir_result_error(result.get()) : sf_status_str(st))
              << "\n";
    return kIoError;
  }
  const std::string program = sf_ir_result_text(result.get());
  if (o.output.empty() || o.output == "-") {
    std::cout << program;
  } else {
    std::ofstream out(o.output, std::ios::binary);
    if (!(out << program)) {
      std::cerr << "streamfold: " << o.output << ": cannot write\n";
      return kIoError;
    }
  }
  if (o.print_names)
    for (std::size_t i = 0; i < sf_ir_result_name_count(result.get()); ++i)
      std::cout << sf_ir_result_name(result.get(), i) << "\n";
  return kOk;
}

// Runs one vector through a fresh stream, in one piece and in 7-byte pieces.
bool check_vector(const streamfold::kat::Vector& v, std::string& why) {
  sf_alg alg;
  if (sf_alg_from_name(v.alg.c_str(), &alg) != SF_OK) {
    why = "unknown algorithm";
    return false;
  }
  const bool blake2 = alg == SF_ALG_BLAKE2S || alg == SF_ALG_BLAKE2B;
  for (std::size_t chunk : {v.message.size() + 1, std::size_t{7}}) {
    sf_stream_config cfg{};
    cfg.alg = alg;
    cfg.key = v.key.empty() ? nullptr : v.key.data();
    cfg.key_len = v.key.size();
    cfg.digest_len = blake2 ? v.digest.size() : 0;
    sf_stream* raw = nullptr;
    sf_status st = sf_stream_new(&cfg, &raw);
    StreamPtr s(raw, &sf_stream_free);
    if (st != SF_OK) {
      why = sf_status_str(st);
      return false;
    }
    for (std::size_t off = 0; off < v.message.size(); off += chunk) {
      const std::size_t n = std::min(chunk, v.message.size() - off);
      if ((st = sf_stream_update(s.get(), v.message.data() + off, n)) != SF_OK) {
        why = sf_status_str(st);
        return false;
      }
    }
    std::vector<std::uint8_t> out(sf_stream_digest_len(s.get()));
    sf_stream_digest(s.get(), out.data(), out.size());
    if (out != v.digest) {
      why = "digest mismatch";
      return false;
    }
  }
  return true;
}

int run_selftest(const SelftestOptions& o) {
  if (!o.filter.empty()) parse_alg(o.filter);
  std::ifstream in(o.vectors);
  if (!in) {
    std::cerr << "streamfold: " << o.vectors << ": cannot open\n";
    return kIoError;
  }
  std::vector<streamfold::kat::Vector> vectors;
  try {
    vectors = streamfold::kat::parse(in);
  } catch (const streamfold::kat::ParseError& e) {
    std::cerr << "streamfold: " << o.vectors << ": corrupt vector file, " << e.what() << "\n";
    return kIoError;
  }
  std::size_t passed = 0, failed = 0;
  for (const auto& v : vectors) {
    if (!o.filter.empty() && v.alg != o.filter) continue;
    std::string why;
    const bool ok = check_vector(v, why);
    ok ? ++passed : ++failed;
    std::cout << (ok ? "PASS " : "FAIL ") << v.alg << " line " << v.line;
    if (!ok) std::cout << " (" << why << ")";
    std::cout << "\n";
  }
  std::cout << passed << " passed, " << failed << " failed\n";
  if (passed + failed == 0) {
    std::cerr << "streamfold: no vectors selected\n";
    return kIoError;
  }
  return failed == 0 ? kOk : kIoError;
}

int run_eval(const EvalOptions& o) {
  std::string text;
  if (!read_file(o.file, text)) {
    std::cerr << "streamfold: " << o.file << ": cannot open\n";
    return kIoError;
  }
  std::vector<std::uint64_t> args;
  for (const auto& a : o.args) {
    try {
      std::size_t used = 0;
      const bool neg = !a.empty() && a[0] == '-';
      std::uint64_t v = std::stoull(neg ? a.substr(1) : a, &used, 0);
      if (used != a.size() - (neg ? 1 : 0)) throw std::invalid_argument(a);
      args.push_back(neg ? std::uint64_t{0} - v : v);
    } catch (const std::exception&) {
      throw UsageError("bad integer argument '" + a + "'");
    }
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& b : o.binds) pairs.push_back(split_binding(b));
  std::vector<sf_ir_binding> bindings;
  for (const auto& [e, impl] : pairs) bindings.push_back({e.c_str(), impl.c_str()});
  std::uint64_t value = 0;
  sf_ir_result* raw = nullptr;
  sf_status st = sf_ir_eval(text.c_str(), o.entry.c_str(), args.data(), args.size(),
                            o.index.empty() ? nullptr : o.index.c_str(), bindings.data(),
                            bindings.size(), &value, &raw);
  ResultPtr diag(raw, &sf_ir_result_free);
  if (st != SF_OK) {
    std::cerr << "streamfold: " << o.file << ": " << (diag ? sf_ir_result_error(diag.get()) : sf_status_str(st))
              << "\n";
    return kIoError;
  }
  std::cout << value << "\n";
  return kOk;
}

void add_stream_options(CLI::App* cmd, StreamOptions& o, bool mac) {
  cmd->add_option("--alg", o.alg, "md5, sha1, sha256, sha512, blake2s, blake2b, poly1305")->required();
  if (mac) cmd->add_option("--key", o.key_hex, "key as hex")->required();
  cmd->add_option("--chunk-size", o.chunk_size, "bytes per read")->check(CLI::PositiveNumber);
  cmd->add_option("--buf-multiple", o.buf_multiple, "buffer size in blocks")->check(CLI::Range(1, 16));
  cmd->add_option("--digest-len", o.digest_len, "Blake2 output length in bytes");
  cmd->add_option("--max-input-length", o.max_input_length, "lower the input limit (testing)")
      ->check(CLI::PositiveNumber);
  if (!mac) cmd->add_flag("--agile", o.agile, "dispatch through the agile instance");
  cmd->add_option("inputs", o.inputs, "files, or - for stdin");
}

void add_stage_options(CLI::App* cmd, StageOptions& s) {
  cmd->add_option("--index", s.index, "index value");
  cmd->add_option("--bind", s.binds, "<extern>=<impl>, repeatable");
  cmd->add_option("--entry", s.entries, "entry point, repeatable");
  cmd->add_option("--suffix", s.suffix, "suffix appended to generated names");
}

}  // namespace

int main(int argc, char** argv) {
  // `specialize ... --then <stage options> --then ...` adds stages.
  std::vector<std::string> args(argv + 1, argv + argc);
  std::vector<std::vector<std::string>> later_stages;
  if (!args.empty() && args[0] == "specialize") {
    auto it = std::find(args.begin(), args.end(), "--then");
    std::vector<std::string> head(args.begin(), it);
    while (it != args.end()) {
      auto next = std::find(it + 1, args.end(), "--then");
      later_stages.emplace_back(it + 1, next);
      it = next;
    }
    args = head;
  }

  CLI::App app{"streamfold: streaming hashes and MACs, and an IR specializer"};
  app.require_subcommand(1);
  StreamOptions hash_opts, mac_opts;
  SpecializeOptions spec_opts;
  StageOptions first_stage;
  SelftestOptions self_opts;
  EvalOptions eval_opts;

  auto* hash = app.add_subcommand("hash", "digest files or stdin");
  add_stream_options(hash, hash_opts, false);
  auto* mac = app.add_subcommand("mac", "authenticate files or stdin with a key");
  add_stream_options(mac, mac_opts, true);
  auto* spec = app.add_subcommand("specialize", "functorize and instantiate an IR program");
  spec->add_option("file", spec_opts.file, "IR program")->required();
  add_stage_options(spec, first_stage);
  spec->add_option("-o", spec_opts.output, "output path (default stdout)");
  spec->add_flag("--print-names", spec_opts.print_names, "list generated names");
  auto* self = app.add_subcommand("selftest", "run the known-answer vectors");
  self->add_option("--vectors", self_opts.vectors, "vector file");
  self->add_option("--filter", self_opts.filter, "only this algorithm");
  auto* eval = app.add_subcommand("eval", "interpret an IR function");
  eval->add_option("file", eval_opts.file, "IR program")->required();
  eval->add_option("entry", eval_opts.entry, "function name")->required();
  eval->add_option("args", eval_opts.args, "integer arguments");
  eval->add_option("--index", eval_opts.index, "index value");
  eval->add_option("--bind", eval_opts.binds, "<extern>=<impl>, repeatable");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    spec_opts.stages.push_back(first_stage);
    for (auto& stage_args : later_stages) {
      CLI::App stage_app{"specialization stage"};
      StageOptions s;
      add_stage_options(&stage_app, s);
      std::vector<std::string> rev(stage_args.rbegin(), stage_args.rend());
      stage_app.parse(rev);
      spec_opts.stages.push_back(s);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (hash->parsed()) return run_stream(hash_opts, false);
    if (mac->parsed()) return run_stream(mac_opts, true);
    if (spec->parsed()) return run_specialize(spec_opts);
    if (self->parsed()) return run_selftest(self_opts);
    if (eval->parsed()) return run_eval(eval_opts);
  } catch (const UsageError& e) {
    std::cerr << "streamfold: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
