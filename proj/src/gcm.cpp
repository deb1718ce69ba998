#include "cwk/gcm.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <stdexcept>

namespace cwk::gcm {

using gf2::Gf128;
using gf2::Gf128Field;

struct Aes256::Impl {
  Key256 key;
  EVP_CIPHER_CTX* ctx = nullptr;
};

Aes256::Aes256(const Key256& key) : impl_(std::make_unique<Impl>()) {
  impl_->key = key;
  impl_->ctx = EVP_CIPHER_CTX_new();
  if (!impl_->ctx || EVP_EncryptInit_ex(impl_->ctx, EVP_aes_256_ecb(), nullptr, key.data(),
                                        nullptr) != 1 ||
      EVP_CIPHER_CTX_set_padding(impl_->ctx, 0) != 1)
    throw std::runtime_error("Aes256: cipher context setup failed");
}

Aes256::Aes256(const Aes256& other) : Aes256(other.impl_->key) {}

Aes256::~Aes256() {
  if (impl_ && impl_->ctx) EVP_CIPHER_CTX_free(impl_->ctx);
}

Block Aes256::encrypt_block(const Block& in) const {
  Block out;
  int len = 0;
  if (EVP_EncryptUpdate(impl_->ctx, out.data(), &len, in.data(), int(in.size())) != 1 ||
      len != int(out.size()))
    throw std::runtime_error("Aes256: block encryption failed");
  return out;
}

std::vector<std::uint8_t> GcmRecord::serialize() const {
  std::vector<std::uint8_t> out;
  out.reserve(36 + payload.size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), iv.begin(), iv.end());
  out.insert(out.end(), payload.begin(), payload.end());
  out.insert(out.end(), tag.begin(), tag.end());
  return out;
}

GcmRecord GcmRecord::parse(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 36) throw std::invalid_argument("GcmRecord: shorter than 36 bytes");
  GcmRecord r;
  std::memcpy(r.header.data(), bytes.data(), 8);
  std::memcpy(r.iv.data(), bytes.data() + 8, 12);
  r.payload.assign(bytes.begin() + 20, bytes.end() - 16);
  std::memcpy(r.tag.data(), bytes.data() + bytes.size() - 16, 16);
  return r;
}

std::vector<std::uint8_t> build_aad(const Header& header, const Iv& iv) {
  std::vector<std::uint8_t> aad(header.begin(), header.end());
  aad.insert(aad.end(), iv.begin(), iv.end());
  return aad;
}

std::vector<std::uint8_t> build_aad(const Header& header, const Iv& iv,
                                    const std::array<std::uint8_t, 8>& secret) {
  auto aad = build_aad(header, iv);
  aad.insert(aad.end(), secret.begin(), secret.end());
  return aad;
}

// T_1..T_N: zero-padded AAD blocks, zero-padded ciphertext blocks, then
// len(A) || len(C) as two 64-bit big-endian bit counts.
static std::vector<Block> tag_blocks(const std::vector<std::uint8_t>& aad,
                                     const std::vector<std::uint8_t>& ciphertext) {
  std::vector<Block> blocks;
  auto absorb = [&](const std::vector<std::uint8_t>& data) {
    for (std::size_t off = 0; off < data.size(); off += 16) {
      Block b{};
      std::size_t len = std::min<std::size_t>(16, data.size() - off);
      std::memcpy(b.data(), data.data() + off, len);
      blocks.push_back(b);
    }
  };
  absorb(aad);
  absorb(ciphertext);
  Block len_block{};
  std::uint64_t abits = std::uint64_t(aad.size()) * 8;
  std::uint64_t cbits = std::uint64_t(ciphertext.size()) * 8;
  for (int i = 0; i < 8; ++i) {
    len_block[i] = std::uint8_t(abits >> (56 - 8 * i));
    len_block[8 + i] = std::uint8_t(cbits >> (56 - 8 * i));
  }
  blocks.push_back(len_block);
  return blocks;
}

gf2::Gf128 ghash(const Gf128& h, const std::vector<std::uint8_t>& aad,
                 const std::vector<std::uint8_t>& ciphertext) {
  Gf128 acc = Gf128::zero();
  for (const Block& b : tag_blocks(aad, ciphertext))
    acc = gf_mul(gf_add(acc, Gf128::from_block(b.data())), h);
  return acc;
}

static Block counter_block(const Iv& iv, std::uint32_t counter) {
  Block cb{};
  std::memcpy(cb.data(), iv.data(), 12);
  for (int i = 0; i < 4; ++i) cb[12 + i] = std::uint8_t(counter >> (24 - 8 * i));
  return cb;
}

static std::vector<std::uint8_t> ctr_xor(const Aes256& cipher, const Iv& iv,
                                         const std::vector<std::uint8_t>& data) {
  std::vector<std::uint8_t> out(data.size());
  std::uint32_t counter = 2;  // CB_0 has counter 1, payload starts at 2
  for (std::size_t off = 0; off < data.size(); off += 16, ++counter) {
    Block ks = cipher.encrypt_block(counter_block(iv, counter));
    std::size_t len = std::min<std::size_t>(16, data.size() - off);
    for (std::size_t i = 0; i < len; ++i) out[off + i] = data[off + i] ^ ks[i];
  }
  return out;
}

static Gf128 hash_key(const Aes256& cipher) {
  return Gf128::from_block(cipher.encrypt_block(Block{}).data());
}

static Tag compute_tag(const Aes256& cipher, const Iv& iv, const std::vector<std::uint8_t>& aad,
                       const std::vector<std::uint8_t>& ciphertext) {
  Gf128 sum = ghash(hash_key(cipher), aad, ciphertext);
  Block ek_cb0 = cipher.encrypt_block(counter_block(iv, 1));
  Gf128 tag = gf_add(Gf128::from_block(ek_cb0.data()), sum);
  Tag out{};
  tag.to_block(out.data());
  return out;
}

GcmRecord gcm_seal(const Aes256& cipher, const Header& header, const Iv& iv,
                   const std::vector<std::uint8_t>& plaintext,
                   const std::vector<std::uint8_t>& aad) {
  GcmRecord r;
  r.header = header;
  r.iv = iv;
  r.payload = ctr_xor(cipher, iv, plaintext);
  r.tag = compute_tag(cipher, iv, aad, r.payload);
  return r;
}

std::optional<std::vector<std::uint8_t>> gcm_open(const Aes256& cipher, const GcmRecord& record,
                                                  const std::vector<std::uint8_t>& aad) {
  if (compute_tag(cipher, record.iv, aad, record.payload) != record.tag) return std::nullopt;
  return ctr_xor(cipher, record.iv, record.payload);
}

std::vector<std::uint8_t> keystream_reuse_decrypt(const GcmRecord& known,
                                                  const std::vector<std::uint8_t>& known_plain,
                                                  const GcmRecord& target) {
  if (known.iv != target.iv)
    throw std::invalid_argument("keystream_reuse_decrypt: records use different IVs");
  std::size_t len = std::min({known.payload.size(), known_plain.size(), target.payload.size()});
  std::vector<std::uint8_t> out(len);
  for (std::size_t i = 0; i < len; ++i)
    out[i] = target.payload[i] ^ known.payload[i] ^ known_plain[i];
  return out;
}

static std::vector<std::uint8_t> attack_aad(const GcmRecord& record, AadMode mode) {
  if (mode == AadMode::kHeaderIv) return build_aad(record.header, record.iv);
  return build_aad(record.header, record.iv, {});  // secret bytes zeroed
}

gf2::Gf128 known_tag_sum(const GcmRecord& record, AadMode mode, const Gf128& h) {
  return ghash(h, attack_aad(record, mode), record.payload);
}

// Coefficient list (ascending powers of H) of the known part of the tag
// equation: T_i contributes at exponent N+1-i.
static std::vector<Gf128> known_coeffs(const GcmRecord& record, AadMode mode) {
  auto blocks = tag_blocks(attack_aad(record, mode), record.payload);
  std::size_t n = blocks.size();
  std::vector<Gf128> coeffs(n + 1, Gf128::zero());
  for (std::size_t i = 0; i < n; ++i)
    coeffs[n - i] = Gf128::from_block(blocks[i].data());  // exponent N+1-(i+1)
  return coeffs;
}

std::vector<HCandidate> recover_h_from_pair(const GcmRecord& r1, const GcmRecord& r2,
                                            AadMode mode, Rng& rng) {
  if (r1.iv != r2.iv) throw std::invalid_argument("recover_h_from_pair: IVs differ");
  if (r1 == r2) throw std::invalid_argument("recover_h_from_pair: records identical");
  if (mode == AadMode::kHeaderIvSecret &&
      (r1.header != r2.header || r1.payload.size() != r2.payload.size()))
    throw std::invalid_argument(
        "recover_h_from_pair: secret-AAD mode needs equal headers and payload lengths");

  auto c1 = known_coeffs(r1, mode);
  auto c2 = known_coeffs(r2, mode);
  std::vector<Gf128> diff(std::max(c1.size(), c2.size()), Gf128::zero());
  for (std::size_t i = 0; i < diff.size(); ++i)
    diff[i] = gf_add(i < c1.size() ? c1[i] : Gf128::zero(),
                     i < c2.size() ? c2[i] : Gf128::zero());
  diff[0] = gf_add(diff[0], gf_add(Gf128::from_block(r1.tag.data()),
                                   Gf128::from_block(r2.tag.data())));
  gf2::Poly<Gf128Field> g(std::move(diff));
  if (g.is_zero())
    throw std::invalid_argument("recover_h_from_pair: identical tag polynomials");
  if (g.degree() < 1) return {};

  std::vector<HCandidate> out;
  for (const Gf128& h : find_roots(g, rng)) {
    Gf128 base = gf_add(Gf128::from_block(r1.tag.data()), known_tag_sum(r1, mode, h));
    out.push_back({h, base});
  }
  return out;
}

std::vector<HCandidate> filter_candidates(const std::vector<GcmRecord>& records, AadMode mode,
                                          std::vector<HCandidate> candidates) {
  std::vector<HCandidate> kept;
  for (const auto& cand : candidates) {
    bool ok = true;
    for (const auto& rec : records) {
      Gf128 expect = gf_add(cand.tag_base, known_tag_sum(rec, mode, cand.h));
      if (expect != Gf128::from_block(rec.tag.data())) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(cand);
  }
  return kept;
}

std::vector<gf2::Gf128> recover_h_from_triple(const GcmRecord& r1, const GcmRecord& r2,
                                              const GcmRecord& r3, Rng& rng) {
  if (r1.header != r2.header || r1.header != r3.header || r1.iv != r2.iv || r1.iv != r3.iv ||
      r1.payload.size() != r2.payload.size() || r1.payload.size() != r3.payload.size())
    throw std::invalid_argument(
        "recover_h_from_triple: records must share header, IV and ciphertext length");
  if (r1 == r2 || r1 == r3 || r2 == r3)
    throw std::invalid_argument("recover_h_from_triple: records must be pairwise distinct");
  auto c12 = recover_h_from_pair(r1, r2, AadMode::kHeaderIvSecret, rng);
  auto c13 = recover_h_from_pair(r1, r3, AadMode::kHeaderIvSecret, rng);
  std::vector<gf2::Gf128> intersection;
  for (const auto& a : c12)
    for (const auto& b : c13)
      if (a.h == b.h) intersection.push_back(a.h);
  return intersection;
}

GcmRecord forge(const GcmRecord& record, const std::vector<std::uint8_t>& new_payload,
                const Gf128& h, const Gf128& ek_cb0) {
  GcmRecord out = record;
  out.payload = new_payload;
  Gf128 tag = gf_add(ek_cb0, known_tag_sum(out, AadMode::kHeaderIv, h));
  tag.to_block(out.tag.data());
  return out;
}

GcmRecord reforge_same_shape(const GcmRecord& record,
                             const std::vector<std::uint8_t>& new_payload, const Gf128& h,
                             AadMode mode) {
  if ((record.payload.size() + 15) / 16 != (new_payload.size() + 15) / 16)
    throw std::invalid_argument("reforge_same_shape: payload block count must not change");
  Gf128 base = gf_add(Gf128::from_block(record.tag.data()), known_tag_sum(record, mode, h));
  GcmRecord out = record;
  out.payload = new_payload;
  Gf128 tag = gf_add(base, known_tag_sum(out, mode, h));
  tag.to_block(out.tag.data());
  return out;
}

}  // namespace cwk::gcm
