#include "rdhe/keystream.hpp"

#include <sodium.h>

#include <algorithm>
#include <stdexcept>

#include "rdhe/errors.hpp"

namespace rdhe::cipher {
namespace {

void ensure_sodium() {
  static const int status = sodium_init();
  if (status < 0) throw std::runtime_error("libsodium failed to initialise");
}

}  // namespace

Bytes sha256(std::span<const std::uint8_t> data) {
  ensure_sodium();
  Bytes digest(crypto_hash_sha256_BYTES);
  crypto_hash_sha256(digest.data(), data.data(), data.size());
  return digest;
}

Bytes chacha20_stream(std::span<const std::uint8_t, 32> key, std::span<const std::uint8_t, 12> nonce,
                      std::size_t length) {
  static_assert(crypto_stream_chacha20_ietf_KEYBYTES == 32);
  static_assert(crypto_stream_chacha20_ietf_NONCEBYTES == 12);
  ensure_sodium();
  Bytes out(length);
  if (length > 0) crypto_stream_chacha20_ietf(out.data(), out.size(), nonce.data(), key.data());
  return out;
}

ChaChaKeystream::ChaChaKeystream(std::span<const std::uint8_t> key_material,
                                 std::string_view context_label) {
  const Bytes key = sha256(key_material);
  std::copy(key.begin(), key.end(), key_.begin());
  const auto* label = reinterpret_cast<const std::uint8_t*>(context_label.data());
  const Bytes nonce = sha256({label, context_label.size()});
  std::copy_n(nonce.begin(), nonce_.size(), nonce_.begin());
}

Bytes ChaChaKeystream::generate(std::size_t length) const {
  return chacha20_stream(key_, nonce_, length);
}

Bytes PadKeystream::generate(std::size_t length) const {
  if (length > pad_.size()) {
    throw RejectedInputError("keystream pad holds " + std::to_string(pad_.size()) +
                             " bytes, " + std::to_string(length) + " needed");
  }
  return Bytes(pad_.begin(), pad_.begin() + static_cast<std::ptrdiff_t>(length));
}

ChaChaKeystream image_keystream(const EncryptionKey& key) {
  return ChaChaKeystream(key.material(), kImageLabel);
}

ChaChaKeystream message_keystream(const HidingKey& key) {
  return ChaChaKeystream(key.material(), kMessageLabel);
}

Bytes derive_keystream(std::span<const std::uint8_t> key_material, std::size_t length,
                       std::string_view context_label) {
  return ChaChaKeystream(key_material, context_label).generate(length);
}

Bytes xor_bytes(std::span<const std::uint8_t> data, std::span<const std::uint8_t> stream) {
  if (data.size() != stream.size()) {
    throw RejectedInputError("xor operands differ in length: " + std::to_string(data.size()) +
                             " vs " + std::to_string(stream.size()));
  }
  Bytes out(data.size());
  std::transform(data.begin(), data.end(), stream.begin(), out.begin(),
                 [](std::uint8_t a, std::uint8_t b) { return static_cast<std::uint8_t>(a ^ b); });
  return out;
}

Bits encrypt_message_bits(const Bits& bits, const KeystreamSource& stream) {
  if (bits.empty()) return {};
  const Bits key_bits = bytes_to_bits(stream.generate((bits.size() + 7) / 8));
  Bits out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) out[i] = bits[i] != key_bits[i];
  return out;
}

Bits bytes_to_bits(std::span<const std::uint8_t> bytes) {
  Bits bits;
  bits.reserve(bytes.size() * 8);
  for (std::uint8_t b : bytes) {
    for (int k = 7; k >= 0; --k) bits.push_back(((b >> k) & 1u) != 0);
  }
  return bits;
}

Bytes bits_to_bytes(const Bits& bits) {
  Bytes bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) bytes[i / 8] = static_cast<std::uint8_t>(bytes[i / 8] | (0x80u >> (i % 8)));
  }
  return bytes;
}

}  // namespace rdhe::cipher
