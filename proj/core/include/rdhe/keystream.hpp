#pragma once

// Keyed keystreams and XOR encryption for pixels and message bits.
//
// A keystream is ChaCha20 (RFC 8439, block counter 0) with
//   key   = SHA-256(key material)
//   nonce = SHA-256(context label)[0..12)
// so any implementation following the same recipe is byte-compatible.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdhe/errors.hpp"

namespace rdhe::cipher {

using Bytes = std::vector<std::uint8_t>;
using Bits = std::vector<bool>;

inline constexpr std::string_view kImageLabel = "image";
inline constexpr std::string_view kMessageLabel = "message";

/// Opaque key bytes tagged with the role they serve.
template <class Tag>
class Key {
 public:
  /// Throws RejectedInputError when `material` is empty.
  explicit Key(Bytes material) : material_(std::move(material)) {
    if (material_.empty()) throw RejectedInputError("key material must not be empty");
  }
  /// Text keys use their raw bytes as material.
  static Key from_text(std::string_view text) { return Key(Bytes(text.begin(), text.end())); }

  std::span<const std::uint8_t> material() const noexcept { return material_; }

 private:
  Bytes material_;
};

struct EncryptionKeyTag;
struct HidingKeyTag;
using EncryptionKey = Key<EncryptionKeyTag>;  // k_e: provider and receiver
using HidingKey = Key<HidingKeyTag>;          // k_w: hider and receiver

/// Source of keystream bytes. The pipeline only ever asks for the prefix of
/// a given length, so implementations must be prefix-consistent.
class KeystreamSource {
 public:
  virtual ~KeystreamSource() = default;
  virtual Bytes generate(std::size_t length) const = 0;
};

/// ChaCha20 keystream bound to (key material, context label).
class ChaChaKeystream final : public KeystreamSource {
 public:
  ChaChaKeystream(std::span<const std::uint8_t> key_material, std::string_view context_label);

  Bytes generate(std::size_t length) const override;

 private:
  std::array<std::uint8_t, 32> key_{};
  std::array<std::uint8_t, 12> nonce_{};
};

/// Literal pad: the stored bytes are the keystream. Requesting more bytes than
/// stored throws RejectedInputError.
class PadKeystream final : public KeystreamSource {
 public:
  explicit PadKeystream(Bytes pad) : pad_(std::move(pad)) {}

  Bytes generate(std::size_t length) const override;

 private:
  Bytes pad_;
};

ChaChaKeystream image_keystream(const EncryptionKey& key);
ChaChaKeystream message_keystream(const HidingKey& key);

/// Raw ChaCha20 block output for an explicit key and nonce, counter starting at 0.
Bytes chacha20_stream(std::span<const std::uint8_t, 32> key, std::span<const std::uint8_t, 12> nonce,
                      std::size_t length);

Bytes sha256(std::span<const std::uint8_t> data);

/// Deterministic bytes for (key material, label); equivalent to
/// ChaChaKeystream(key_material, context_label).generate(length).
Bytes derive_keystream(std::span<const std::uint8_t> key_material, std::size_t length,
                       std::string_view context_label);

/// Element-wise XOR. Throws RejectedInputError on length mismatch.
Bytes xor_bytes(std::span<const std::uint8_t> data, std::span<const std::uint8_t> stream);

/// XORs each bit with the keystream bits, most significant bit of each
/// keystream byte first. Self-inverse.
Bits encrypt_message_bits(const Bits& bits, const KeystreamSource& stream);

/// Big-endian bit order within each byte.
Bits bytes_to_bits(std::span<const std::uint8_t> bytes);
/// Inverse of bytes_to_bits; a short final byte is zero-padded at the low end.
Bytes bits_to_bytes(const Bits& bits);

}  // namespace rdhe::cipher
