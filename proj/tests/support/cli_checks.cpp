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

#include "cli_checks.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracle.hpp"

namespace sftest {

namespace fs = std::filesystem;
using streamfold::AlgId;
using streamfold::Bytes;

namespace {

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  return out + "'";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Bytes file_bytes(const std::string& path) {
  std::string s = slurp(path);
  return Bytes(s.begin(), s.end());
}

fs::path scratch_dir() {
  static fs::path dir = [] {
    std::string tmpl = (fs::temp_directory_path() / "streamfold-cli-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    return fs::path(tmpl);
  }();
  return dir;
}

std::string line(const Bytes& digest, const std::string& path) {
  return streamfold::to_hex(digest) + "  " + path + "\n";
}

// Collects failures; the first one is reported.
struct Checker {
  CheckResult r;
  void expect(bool ok, const std::string& what) {
    ++r.cases;
    if (!ok) r.fail(what);
  }
  void expect_run(const CliRun& run, int code, const std::string& what) {
    expect(run.exit_code == code, what + ": exit " + std::to_string(run.exit_code) + ", want " +
                                      std::to_string(code) + " (stderr: " + run.err + ")");
  }
};

}  // namespace

std::string fixture(const std::string& name) {
  return std::string(SF_SOURCE_DIR) + "/tests/fixtures/" + name;
}

CliRun run_cli(const std::vector<std::string>& args, const std::string& stdin_path) {
  const fs::path out = scratch_dir() / "stdout";
  const fs::path err = scratch_dir() / "stderr";
  std::string cmd = quote(SF_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " >" + quote(out.string()) + " 2>" + quote(err.string());
  cmd += " <" + quote(stdin_path.empty() ? "/dev/null" : stdin_path);
  const int status = std::system(cmd.c_str());
  CliRun r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

CheckResult check_cli_contract() {
  Checker c;
  const std::vector<std::string> files = {fixture("abc.txt"), fixture("blob.bin"),
                                          fixture("empty.bin")};
  const std::vector<std::size_t> chunks = {1, 3, 64, 65, 4096};
  std::vector<std::string> digests_seen;

  // hash: oracle agreement and chunk invariance, with and without agility.
  const std::pair<const char*, AlgId> hashes[] = {
      {"md5", AlgId::MD5},         {"sha1", AlgId::SHA1},       {"sha256", AlgId::SHA2_256},
      {"sha512", AlgId::SHA2_512}, {"blake2s", AlgId::Blake2S}, {"blake2b", AlgId::Blake2B}};
  for (const auto& [name, id] : hashes) {
    std::string want;
    for (const auto& f : files) want += line(*reference_digest(id, {}, 0, file_bytes(f)), f);
    digests_seen.push_back(want);
    for (std::size_t chunk : chunks) {
      for (bool agile : {false, true}) {
        std::vector<std::string> args = {"hash", "--alg", name, "--chunk-size",
                                         std::to_string(chunk)};
        if (agile) args.push_back("--agile");
        args.insert(args.end(), files.begin(), files.end());
        CliRun run = run_cli(args);
        c.expect_run(run, 0, std::string("hash ") + name);
        c.expect(run.out == want, std::string("hash ") + name + " chunk " + std::to_string(chunk) +
                                      (agile ? " agile" : "") + ": output differs");
      }
    }
  }
  {
    CliRun run = run_cli({"hash", "--alg", "sha256", fixture("abc.txt")});
    c.expect(run.out == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad  " +
                            fixture("abc.txt") + "\n",
             "hash sha256 abc: wrong line");
    CliRun piped = run_cli({"hash", "--alg", "sha256", "-"}, fixture("abc.txt"));
    c.expect(piped.out == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad  -\n",
             "hash from stdin: wrong line");
    CliRun bm = run_cli({"hash", "--alg", "sha256", "--buf-multiple", "16", "--chunk-size", "3",
                         fixture("abc.txt")});
    c.expect(bm.out == run.out, "hash with --buf-multiple 16 differs");
  }

  // Missing input: reported, others still digested, highest code wins.
  {
    const std::string missing = (scratch_dir() / "does-not-exist").string();
    CliRun run = run_cli({"hash", "--alg", "sha256", fixture("abc.txt"), missing, fixture("empty.bin")});
    c.expect_run(run, 1, "hash with a missing file");
    std::string want =
        line(*reference_digest(AlgId::SHA2_256, {}, 0, file_bytes(fixture("abc.txt"))),
             fixture("abc.txt")) +
        line(*reference_digest(AlgId::SHA2_256, {}, 0, {}), fixture("empty.bin"));
    c.expect(run.out == want, "hash with a missing file: other digests not printed");
    c.expect(run.err.find(missing) != std::string::npos, "missing file not named on stderr");
  }

  // Input limit surfaces as 3; the other inputs still print.
  {
    CliRun run = run_cli({"hash", "--alg", "sha256", "--max-input-length", "100",
                          fixture("blob.bin"), fixture("abc.txt")});
    c.expect_run(run, 3, "hash over the input limit");
    c.expect(run.out == line(*reference_digest(AlgId::SHA2_256, {}, 0,
                                               file_bytes(fixture("abc.txt"))),
                             fixture("abc.txt")),
             "hash over the input limit: other digest not printed");
  }

  // Usage errors.
  const std::vector<std::vector<std::string>> usage = {
      {},
      {"hash"},
      {"hash", "--alg", "sha3", fixture("abc.txt")},
      {"hash", "--alg", "sha256", "--chunk-size", "0", fixture("abc.txt")},
      {"hash", "--alg", "sha256", "--buf-multiple", "17", fixture("abc.txt")},
      {"mac", "--alg", "poly1305", "--key", "zz", fixture("abc.txt")},
      {"mac", "--alg", "poly1305", "--key", "abc", fixture("abc.txt")},
      {"mac", "--alg", "poly1305", "--key", "0011", fixture("abc.txt")},
      {"mac", "--alg", "sha256", "--key", "0011", fixture("abc.txt")},
      {"mac", "--alg", "blake2s", "--key", std::string(66, 'a'), fixture("abc.txt")},
      {"specialize", fixture("hpke.ir"), "--bind", "sign"},
      {"selftest", "--filter", "sha3"},
      {"nonsense"}};
  for (const auto& args : usage) {
    CliRun run = run_cli(args);
    std::string joined;
    for (const auto& a : args) joined += " " + a;
    c.expect_run(run, 2, "usage error:" + joined);
    c.expect(run.out.find("  ") == std::string::npos, "usage error printed digests:" + joined);
  }

  // mac: RFC 8439 vector, empty message, keyed Blake2, chunk invariance.
  {
    const std::string key = "85d6be7857556d337f4452fe42d506a80103808afb0db2fd4abff6af4149f51b";
    const std::string msg = fixture("rfc8439_msg.txt");
    for (std::size_t chunk : chunks) {
      CliRun run = run_cli({"mac", "--alg", "poly1305", "--key", key, "--chunk-size",
                            std::to_string(chunk), msg});
      c.expect_run(run, 0, "mac poly1305");
      c.expect(run.out == "a8061dc1305136c6c22b8baf0c0127a9  " + msg + "\n",
               "mac poly1305: RFC 8439 tag not reproduced");
    }
    Bytes k = *streamfold::from_hex(key);
    CliRun empty = run_cli({"mac", "--alg", "poly1305", "--key", key, fixture("empty.bin")});
    c.expect(empty.out == line(*reference_digest(AlgId::Poly1305, k, 0, {}), fixture("empty.bin")),
             "mac poly1305 of the empty message differs from the reference");
    digests_seen.push_back(empty.out);
    for (const auto& [name, id, klen] :
         {std::tuple{"blake2b", AlgId::Blake2B, 64}, std::tuple{"blake2s", AlgId::Blake2S, 32},
          std::tuple{"blake2b", AlgId::Blake2B, 16}}) {
      Bytes bkey(static_cast<std::size_t>(klen));
      for (std::size_t i = 0; i < bkey.size(); ++i) bkey[i] = static_cast<std::uint8_t>(i);
      std::string want;
      for (const auto& f : files) want += line(*reference_digest(id, bkey, 0, file_bytes(f)), f);
      digests_seen.push_back(want);
      for (std::size_t chunk : chunks) {
        std::vector<std::string> args = {"mac", "--alg", name, "--key", streamfold::to_hex(bkey),
                                         "--chunk-size", std::to_string(chunk)};
        args.insert(args.end(), files.begin(), files.end());
        CliRun run = run_cli(args);
        c.expect_run(run, 0, std::string("mac ") + name);
        c.expect(run.out == want, std::string("mac ") + name + " chunk " +
                                      std::to_string(chunk) + ": output differs");
      }
    }
  }

  // specialize: goldens, names, error exits.
  {
    const fs::path out = scratch_dir() / "hpke.out.ir";
    CliRun run = run_cli({"specialize", fixture("hpke.ir"), "--index", "ChachaPolyP256", "--bind",
                          "sign=sign_p256", "--bind", "enc=enc_chachapoly", "--suffix", "cp256",
                          "-o", out.string(), "--print-names"});
    c.expect_run(run, 0, "specialize hpke");
    c.expect(slurp(out) == slurp(std::string(SF_SOURCE_DIR) + "/tests/golden/hpke.cp256.ir"),
             "specialize hpke: output differs from golden");
    c.expect(run.out == "hpke_cp256\n", "specialize hpke: generated names");

    CliRun curve = run_cli({"specialize", fixture("curve.ir"), "--index", "M64", "--entry",
                            "field64_fadd", "--entry", "field64_fmul", "--bind",
                            "core_add=core_hacl_add", "--bind", "core_mul=core_hacl_mul",
                            "--suffix", "hacl", "--then", "--index", "M64", "--entry",
                            "curve_scalarmult", "--bind", "fadd=field64_fadd_hacl", "--bind",
                            "fmul=field64_fmul_hacl", "--suffix", "c64hacl"});
    c.expect_run(curve, 0, "specialize curve");
    c.expect(curve.out == slurp(std::string(SF_SOURCE_DIR) + "/tests/golden/curve.c64hacl.ir"),
             "specialize curve: output differs from golden");

    CliRun cycle = run_cli({"specialize", fixture("cycle.ir"), "--index", "A"});
    c.expect_run(cycle, 1, "specialize cycle");
    c.expect(cycle.err.find("CycleDetected") != std::string::npos, "cycle not reported");

    CliRun unbound = run_cli({"specialize", fixture("hpke.ir"), "--index", "ChachaPolyP256",
                              "--bind", "sign=sign_p256", "--suffix", "x"});
    c.expect_run(unbound, 1, "specialize with a missing binding");
    c.expect(unbound.err.find("UnboundExtern") != std::string::npos, "missing binding not reported");

    CliRun missing = run_cli({"specialize", fixture("no-such.ir")});
    c.expect_run(missing, 1, "specialize a missing file");
  }

  // selftest.
  {
    CliRun all = run_cli({"selftest"});
    c.expect_run(all, 0, "selftest");
    c.expect(all.out.find("FAIL") == std::string::npos && all.out.find(" 0 failed") != std::string::npos,
             "selftest reported failures");
    CliRun poly = run_cli({"selftest", "--filter", "poly1305"});
    c.expect_run(poly, 0, "selftest --filter poly1305");
    std::istringstream lines(poly.out);
    std::string l;
    std::size_t n = 0;
    bool only_poly = true;
    while (std::getline(lines, l))
      if (l.rfind("PASS", 0) == 0 || l.rfind("FAIL", 0) == 0) {
        ++n;
        only_poly = only_poly && l.find(" poly1305 ") != std::string::npos;
      }
    c.expect(n > 0 && only_poly, "selftest --filter poly1305 ran other vectors");
    CliRun corrupt = run_cli({"selftest", "--vectors", fixture("corrupt_kat.txt")});
    c.expect_run(corrupt, 1, "selftest on a corrupt vector file");
  }

  // stderr never carries digest bytes.
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"hash", "--alg", "sha256", fixture("abc.txt"), "/nonexistent/x"},
           {"mac", "--alg", "blake2s", "--key", "00", fixture("blob.bin"), "/nonexistent/x"}}) {
    CliRun run = run_cli(args);
    bool clean = true;
    std::istringstream out(run.out);
    std::string l;
    while (std::getline(out, l)) {
      const std::string hex = l.substr(0, l.find(' '));
      if (!hex.empty() && run.err.find(hex) != std::string::npos) clean = false;
    }
    for (const auto& d : digests_seen) {
      const std::string hex = d.substr(0, d.find(' '));
      if (run.err.find(hex) != std::string::npos) clean = false;
    }
    c.expect(clean && !run.out.empty(), "digest bytes leaked to stderr");
  }
  return c.r;
}

}  // namespace sftest
