#!/usr/bin/env python3
#    Copyright 2026 The Streamfold Authors
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.

# Regenerates data/kat_vectors.txt. Published vectors are checked against
# hashlib / cryptography before being written; extra keyed and truncated
# vectors are taken from those libraries directly.
import hashlib
import sys
from cryptography.hazmat.primitives.poly1305 import Poly1305

def enc_msg(m: bytes) -> str:
    if not m:
        return "-"
    if len(m) >= 64 and m == m[:1] * len(m):
        return f"rep:{len(m)}:{m[:1].hex()}"
    return "hex:" + m.hex()

def compute(alg, key, msg, outlen):
    if alg == "md5": return hashlib.md5(msg).digest()
    if alg == "sha1": return hashlib.sha1(msg).digest()
    if alg == "sha256": return hashlib.sha256(msg).digest()
    if alg == "sha512": return hashlib.sha512(msg).digest()
    if alg == "blake2s": return hashlib.blake2s(msg, key=key, digest_size=outlen or 32).digest()
    if alg == "blake2b": return hashlib.blake2b(msg, key=key, digest_size=outlen or 64).digest()
    if alg == "poly1305": return Poly1305.generate_tag(key, msg)
    raise ValueError(alg)

lines = []

def vec(alg, msg, expected=None, key=b"", outlen=0, note=None):
    got = compute(alg, key, msg, outlen)
    if expected is not None and bytes.fromhex(expected) != got:
        sys.exit(f"published vector mismatch: {alg} {msg[:16]!r}")
    if note:
        lines.append(f"# {note}")
    lines.append(f"{alg} {key.hex() if key else '-'} {enc_msg(msg)} {got.hex()}")

lines.append("# alg key message digest")
lines.append("# key and message: '-' for empty; message 'hex:<bytes>' or 'rep:<count>:<byte>'")
lines.append("")
lines.append("# RFC 1321 A.5")
vec("md5", b"", "d41d8cd98f00b204e9800998ecf8427e")
vec("md5", b"a", "0cc175b9c0f1b6a831c399e269772661")
vec("md5", b"abc", "900150983cd24fb0d6963f7d28e17f72")
vec("md5", b"message digest", "f96b697d7cb7938d525a2f31aaf161d0")
vec("md5", b"abcdefghijklmnopqrstuvwxyz", "c3fcd3d76192e4007dfb496cca67e13b")
vec("md5", b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789",
    "d174ab98d277d9f5a5611c2c9f419d9f")
vec("md5", b"1234567890" * 8, "57edf4a22be3c955ac49da2e2107b67a")
lines.append("")
lines.append("# RFC 3174 section 7.3")
vec("sha1", b"abc", "a9993e364706816aba3e25717850c26c9cd0d89d")
vec("sha1", b"abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq",
    "84983e441c3bd26ebaae4aa1f95129e5e54670f1")
vec("sha1", b"a" * 1000000, "34aa973cd4c4daa4f61eeb2bdbad27316534016f")
vec("sha1", b"01234567" * 80, "dea356a2cddd90c7a7ecedc5ebb563934f460452")
lines.append("")
lines.append("# FIPS 180-4 examples")
vec("sha256", b"", "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855")
vec("sha256", b"abc", "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad")
vec("sha256", b"abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq",
    "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1")
vec("sha256", b"a" * 1000000, "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0")
vec("sha512", b"", "cf83e1357eefb8bdf1542850d66d8007d620e4050b5715dc83f4a921d36ce9ce"
                   "47d0d13c5d85f2b0ff8318d2877eec2f63b931bd47417a81a538327af927da3e")
vec("sha512", b"abc", "ddaf35a193617abacc417349ae20413112e6fa4e89a97ea20a9eeee64b55d39a"
                      "2192992a274fc1a836ba3c23a3feebbd454d4423643ce80e2a9ac94fa54ca49f")
vec("sha512", b"abcdefghbcdefghicdefghijdefghijkefghijklfghijklmghijklmnhijklmnoijklmnopjklmnopqklmnopqrlmnopqrsmnopqrstnopqrstu",
    "8e959b75dae313da8cf4f72814fc143f8f7779c6eb9f7fa17299aeadb6889018"
    "501d289e4900f7e4331b99dec4b5433ac7d329eeb6dd26545e96e55b874be909")
vec("sha512", b"a" * 1000000, "e718483d0ce769644e2e42c7bc15b4638e1f98b13b2044285632a803afa973eb"
                              "de0ff244877ea60a4cb0432ce577c31beb009c5c2c49aa2e4eadb217ad8cc09b")
lines.append("")
lines.append("# RFC 7693 Appendix A and B")
vec("blake2b", b"abc", "ba80a53f981c4d0d6a2797b69f12f6e94c212f14685ac4b74b12bb6fdbffa2d1"
                       "7d87c5392aab792dc252d5de4533cc9518d38aa8dbf1925ab92386edd4009923")
vec("blake2s", b"abc", "508c5e8c327c14e2e1a72ba34eeb452f37458b209ed63a294d999b4c86675982")
lines.append("# unkeyed, empty and block-boundary messages")
for alg in ("blake2b", "blake2s"):
    bl = 128 if alg == "blake2b" else 64
    for n in (0, 1, bl - 1, bl, bl + 1, 2 * bl, 1000):
        vec(alg, bytes(i % 251 for i in range(n)))
lines.append("# keyed: key 00..(len-1), message 00..(n-1) as in the reference KAT set")
for alg, kl, expected_empty in (
        ("blake2b", 64, "10ebb67700b1868efb4417987acf4690ae9d972fb7a590c2f02871799aaa4786"
                        "b5e996e8f0f4eb981fc214b005f42d2ff4233499391653df7aefcbc13fc51568"),
        ("blake2s", 32, "48a8997da407876b3d79c0d92325ad3b89cbb754d86ab71aee047ad345fd2c49")):
    key = bytes(range(kl))
    vec(alg, b"", expected_empty, key=key)
    for n in (1, 63, 64, 65, 127, 128, 129, 255):
        vec(alg, bytes(range(n)), key=key)
lines.append("# truncated digests")
vec("blake2b", b"abc", "bddd813c634239723171ef3fee98579b94964e3bb1cb3e427262c8c068d52319", outlen=32)
vec("blake2s", b"abc", outlen=16)
vec("blake2b", b"", key=bytes(range(16)), outlen=20)
lines.append("")
lines.append("# RFC 8439 2.5.2 and A.3")
vec("poly1305", b"Cryptographic Forum Research Group", "a8061dc1305136c6c22b8baf0c0127a9",
    key=bytes.fromhex("85d6be7857556d337f4452fe42d506a80103808afb0db2fd4abff6af4149f51b"))
vec("poly1305", bytes(64), "00000000000000000000000000000000", key=bytes(32))
vec("poly1305", bytes.fromhex("ffffffffffffffffffffffffffffffff"), "03000000000000000000000000000000",
    key=bytes.fromhex("02" + "00" * 31))
vec("poly1305", bytes.fromhex("02" + "00" * 15), "03000000000000000000000000000000",
    key=bytes.fromhex("02" + "00" * 15 + "ff" * 16))
vec("poly1305", b"", key=bytes(range(32)))
vec("poly1305", bytes(range(200)), key=bytes(range(100, 132)))

out = sys.argv[1] if len(sys.argv) > 1 else "data/kat_vectors.txt"
with open(out, "w") as f:
    f.write("\n".join(lines) + "\n")
