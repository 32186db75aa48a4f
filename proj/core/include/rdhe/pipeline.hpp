#pragma once

// Provider, hider and receiver roles over a MarkedContainer.
//
// Body layout: triple i encodes the 2x1 block of encrypted pixels (2i, 2i+1)
// in row-major order, with p1 = pixel 2i and p2 = pixel 2i+1. Triples 0..2
// are reserved: the ID is stamped into the least significant bits of body
// bytes 0..3 (most significant ID bit in byte 0) and nothing is ever embedded
// there. Triples 3.. carry the payload
//
//   beta (4 bits) | message length (32 bits, big-endian) | k_w-encrypted message
//
// packed most-significant-bit first into symbols, two symbols per triple
// (first -> s2, second -> s1). Unused triples receive the zero secret.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "rdhe/container.hpp"
#include "rdhe/keystream.hpp"
#include "rdhe/poly_codec.hpp"
#include "rdhe/raster.hpp"

namespace rdhe::pipeline {

inline constexpr std::size_t kReservedTriples = 3;
inline constexpr std::size_t kIdStampBytes = 4;
inline constexpr std::size_t kBetaBits = 4;
inline constexpr std::size_t kLengthFieldBits = 32;
inline constexpr std::size_t kFramingBits = kBetaBits + kLengthFieldBits;
inline constexpr std::size_t kMinPixels = 8;

/// Original LSBs of body bytes 0..3, most significant bit = byte 0.
struct Beta {
  std::uint8_t bits = 0;
  friend bool operator==(Beta, Beta) = default;
};

struct Capacity {
  std::uint64_t total_bits = 0;              // all symbol slots in triples 3..
  std::uint64_t reserved_overhead_bits = 0;  // beta + length field
  std::uint64_t usable_message_bits = 0;     // total - overhead, clamped at 0
};

/// Throws RejectedInputError when width * height < 8.
Capacity capacity_of(std::uint32_t width, std::uint32_t height, codec::EmbedMode mode);

struct ProviderOutput {
  MarkedContainer container;
  Beta beta;
};

/// XOR-encrypts the raster and encodes every pixel pair, without the ID stamp
/// and without size checks. Returns the body only.
std::vector<std::uint8_t> encrypt_and_encode(const GrayRaster& image, const cipher::KeystreamSource& image_stream,
                                             codec::PublicId id);

/// Full provider role: encrypt, encode, stamp the ID and hand back the
/// displaced LSBs. Throws RejectedInputError for images under 8 pixels or an
/// id the mode cannot carry.
ProviderOutput provider_encrypt(const GrayRaster& image, const cipher::KeystreamSource& image_stream,
                                codec::PublicId id, codec::EmbedMode mode);

/// Hider role. Throws CapacityError when the framed payload exceeds the slots.
MarkedContainer hider_embed(MarkedContainer container, Beta beta, const cipher::Bits& message,
                            const cipher::KeystreamSource& message_stream);

/// Reads the stamped ID. Throws CorruptionError when it is not valid for the
/// container's mode.
codec::PublicId read_id(const MarkedContainer& container);

/// Key-free half of the receiver: decodes every data triple.
struct ExtractedPayload {
  Beta beta;
  cipher::Bits encrypted_message;
  std::vector<codec::SecretPair> secrets;  // one per data triple, in order
};
ExtractedPayload extract_payload(const MarkedContainer& container);

/// Receiver with k_w only: the plaintext message.
cipher::Bits extract_message(const MarkedContainer& container, const cipher::KeystreamSource& message_stream);

/// Receiver with k_e only: the original raster.
GrayRaster recover_image(const MarkedContainer& container, const cipher::KeystreamSource& image_stream);

struct ReceiverResult {
  std::optional<GrayRaster> image;
  std::optional<cipher::Bits> message;
};

/// Dispatches on which keystreams are present. Throws MissingKeyError when
/// both are null.
ReceiverResult receiver_process(const MarkedContainer& container, const cipher::KeystreamSource* image_stream,
                                const cipher::KeystreamSource* message_stream);

/// Lays the triple bytes out as a raster for statistical analysis. With an
/// even width each image row becomes one row of 3m/2 bytes; otherwise the
/// bytes form a single row. The trailing pixel is dropped.
GrayRaster body_as_raster(const MarkedContainer& container);

}  // namespace rdhe::pipeline
