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

#include <doctest.h>

#include "cli_checks.hpp"

using namespace sftest;

TEST_CASE("end-to-end contract") {
  CheckResult r = check_cli_contract();
  INFO(r.failure);
  CHECK(r.ok);
  CHECK(r.cases > 100);
}

TEST_CASE("eval subcommand") {
  CliRun run = run_cli({"eval", fixture("hpke.ir"), "hpke", "2", "3", "--index", "AesGcmP256",
                        "--bind", "sign=sign_p256", "--bind", "enc=enc_chachapoly"});
  CHECK(run.exit_code == 0);
  CHECK(run.out == "97\n");
  CliRun bad = run_cli({"eval", fixture("hpke.ir"), "hpke", "x"});
  CHECK(bad.exit_code == 2);
}

TEST_CASE("hash writes digests in input order") {
  CliRun run = run_cli({"hash", "--alg", "md5", fixture("empty.bin"), fixture("abc.txt")});
  CHECK(run.exit_code == 0);
  CHECK(run.out == "d41d8cd98f00b204e9800998ecf8427e  " + fixture("empty.bin") + "\n" +
                       "900150983cd24fb0d6963f7d28e17f72  " + fixture("abc.txt") + "\n");
  CHECK(run.err.empty());
}

TEST_CASE("truncated Blake2 from the command line") {
  CliRun run = run_cli({"hash", "--alg", "blake2b", "--digest-len", "32", fixture("abc.txt")});
  CHECK(run.exit_code == 0);
  CHECK(run.out.rfind("bddd813c634239723171ef3fee98579b94964e3bb1cb3e427262c8c068d52319", 0) == 0);
}
