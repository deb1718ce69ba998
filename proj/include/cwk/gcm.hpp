#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cwk/gf2.hpp"
#include "cwk/rng.hpp"

namespace cwk::gcm {

using Block = std::array<std::uint8_t, 16>;
using Header = std::array<std::uint8_t, 8>;
using Iv = std::array<std::uint8_t, 12>;
using Tag = std::array<std::uint8_t, 16>;
using Key256 = std::array<std::uint8_t, 32>;

// AES-256 block encryption (OpenSSL-backed). Only the forward direction is
// needed: GCM is counter mode plus a polynomial MAC. Not thread-safe; clone
// per thread.
class Aes256 {
 public:
  explicit Aes256(const Key256& key);
  Aes256(const Aes256& other);
  Aes256& operator=(const Aes256&) = delete;
  ~Aes256();
  Block encrypt_block(const Block& in) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Wire format: Header(8) || IV(12) || EncryptedPayload(n) || AuthTag(16).
struct GcmRecord {
  Header header{};
  Iv iv{};
  std::vector<std::uint8_t> payload;
  Tag tag{};

  std::vector<std::uint8_t> serialize() const;
  static GcmRecord parse(const std::vector<std::uint8_t>& bytes);
  bool operator==(const GcmRecord&) const = default;
};

// What the AAD contains: header || iv, or header || iv || 8 secret bytes.
enum class AadMode { kHeaderIv, kHeaderIvSecret };

std::vector<std::uint8_t> build_aad(const Header& header, const Iv& iv);
std::vector<std::uint8_t> build_aad(const Header& header, const Iv& iv,
                                    const std::array<std::uint8_t, 8>& secret);

// AuthTag = E_k(CB_0) + sum_i T_i H^(N+1-i) over GF(2^128), where the T_i
// are the padded AAD blocks, the padded ciphertext blocks and the length
// block, and H = E_k(0).
gf2::Gf128 ghash(const gf2::Gf128& h, const std::vector<std::uint8_t>& aad,
                 const std::vector<std::uint8_t>& ciphertext);

GcmRecord gcm_seal(const Aes256& cipher, const Header& header, const Iv& iv,
                   const std::vector<std::uint8_t>& plaintext,
                   const std::vector<std::uint8_t>& aad);
// Verifies the tag, then decrypts; empty on mismatch.
std::optional<std::vector<std::uint8_t>> gcm_open(const Aes256& cipher, const GcmRecord& record,
                                                  const std::vector<std::uint8_t>& aad);

// Records sharing an IV share keystream: target XOR known XOR known-plain.
std::vector<std::uint8_t> keystream_reuse_decrypt(const GcmRecord& known,
                                                  const std::vector<std::uint8_t>& known_plain,
                                                  const GcmRecord& target);

// Tag-equation sum over the blocks an attacker knows (secret AAD bytes are
// zeroed in kHeaderIvSecret mode; they cancel between same-shape records).
gf2::Gf128 known_tag_sum(const GcmRecord& record, AadMode mode, const gf2::Gf128& h);

struct HCandidate {
  gf2::Gf128 h;
  // E_k(CB_0) in kHeaderIv mode; in secret mode the unknown-AAD term is
  // lumped in, still usable for same-shape re-tagging.
  gf2::Gf128 tag_base;
  bool operator==(const HCandidate&) const = default;
};

// Forbidden attack: the tag difference of two same-IV records is a known
// polynomial in H; its roots are the candidates.
std::vector<HCandidate> recover_h_from_pair(const GcmRecord& r1, const GcmRecord& r2,
                                            AadMode mode, Rng& rng);

// Keeps candidates explaining every record (all sharing the IV).
std::vector<HCandidate> filter_candidates(const std::vector<GcmRecord>& records, AadMode mode,
                                          std::vector<HCandidate> candidates);

// Same-IV same-shape triple with a secret AAD suffix: both the secret block
// and E_k(CB_0) cancel in differences; the root sets of two difference
// polynomials intersect in the true H (a non-singleton set is returned as-is).
std::vector<gf2::Gf128> recover_h_from_triple(const GcmRecord& r1, const GcmRecord& r2,
                                              const GcmRecord& r3, Rng& rng);

// New payload, recomputed tag from recovered (H, E_k(CB_0)); AAD taken as
// header || iv. Length changes re-derive the length block.
GcmRecord forge(const GcmRecord& record, const std::vector<std::uint8_t>& new_payload,
                const gf2::Gf128& h, const gf2::Gf128& ek_cb0);

// Block-count-preserving re-tag that tolerates unknown AAD bytes (Q3-style
// forging where only H is known).
GcmRecord reforge_same_shape(const GcmRecord& record,
                             const std::vector<std::uint8_t>& new_payload, const gf2::Gf128& h,
                             AadMode mode);

}  // namespace cwk::gcm
