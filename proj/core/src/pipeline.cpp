#include "rdhe/pipeline.hpp"

#include <limits>
#include <string>

#include "rdhe/errors.hpp"

namespace rdhe::pipeline {
namespace {

using codec::EmbedMode;
using codec::PublicId;

void check_body(const MarkedContainer& c) {
  if (c.body.size() != MarkedContainer::expected_body_size(c.width, c.height)) {
    throw MalformedPayloadError("container body is " + std::to_string(c.body.size()) + " bytes, expected " +
                                std::to_string(MarkedContainer::expected_body_size(c.width, c.height)));
  }
}

std::size_t data_triples(const MarkedContainer& c) {
  return c.triple_count() > kReservedTriples ? c.triple_count() - kReservedTriples : 0;
}

Beta lsbs_of_prefix(const std::vector<std::uint8_t>& body) {
  Beta beta;
  for (std::size_t k = 0; k < kIdStampBytes; ++k) {
    beta.bits = static_cast<std::uint8_t>(beta.bits << 1 | (body[k] & 1u));
  }
  return beta;
}

void write_prefix_lsbs(std::vector<std::uint8_t>& body, std::uint8_t nibble) {
  for (std::size_t k = 0; k < kIdStampBytes; ++k) {
    const unsigned bit = (nibble >> (kIdStampBytes - 1 - k)) & 1u;
    body[k] = static_cast<std::uint8_t>((body[k] & 0xFEu) | bit);
  }
}

void append_bits(cipher::Bits& out, std::uint64_t value, std::size_t width) {
  for (std::size_t k = width; k-- > 0;) out.push_back(((value >> k) & 1u) != 0);
}

std::uint64_t read_bits(const cipher::Bits& bits, std::size_t from, std::size_t width) {
  std::uint64_t value = 0;
  for (std::size_t k = 0; k < width; ++k) value = value << 1 | (bits[from + k] ? 1u : 0u);
  return value;
}

// Slot bits carried by the data triples, MSB-first within each symbol.
cipher::Bits unpack_symbols(const std::vector<codec::SecretPair>& secrets, EmbedMode mode) {
  const auto width = static_cast<std::size_t>(codec::bits_per_symbol(mode));
  cipher::Bits bits;
  bits.reserve(secrets.size() * 2 * width);
  for (const auto& s : secrets) {
    append_bits(bits, s.s2, width);
    append_bits(bits, s.s1, width);
  }
  return bits;
}

}  // namespace

Capacity capacity_of(std::uint32_t width, std::uint32_t height, EmbedMode mode) {
  const std::uint64_t pixels = std::uint64_t{width} * height;
  if (pixels < kMinPixels) {
    throw RejectedInputError("image has " + std::to_string(pixels) + " pixels, at least 8 required");
  }
  const std::uint64_t triples = pixels / 2 - kReservedTriples;
  Capacity cap;
  cap.total_bits = triples * 2 * static_cast<std::uint64_t>(codec::bits_per_symbol(mode));
  cap.reserved_overhead_bits = kFramingBits;
  cap.usable_message_bits = cap.total_bits > kFramingBits ? cap.total_bits - kFramingBits : 0;
  return cap;
}

std::vector<std::uint8_t> encrypt_and_encode(const GrayRaster& image, const cipher::KeystreamSource& image_stream,
                                             PublicId id) {
  if (!image.consistent()) throw RejectedInputError("raster pixel buffer does not match its dimensions");
  const auto encrypted = cipher::xor_bytes(image.pixels, image_stream.generate(image.pixel_count()));

  std::vector<std::uint8_t> body;
  body.reserve(MarkedContainer::expected_body_size(image.width, image.height));
  for (std::size_t i = 0; i + 1 < encrypted.size(); i += 2) {
    const auto t = codec::encode_group({.p2 = encrypted[i + 1], .p1 = encrypted[i]}, id);
    body.insert(body.end(), {t.a2, t.a1, t.a0});
  }
  if (encrypted.size() % 2 == 1) body.push_back(encrypted.back());
  return body;
}

ProviderOutput provider_encrypt(const GrayRaster& image, const cipher::KeystreamSource& image_stream, PublicId id,
                                EmbedMode mode) {
  if (image.pixel_count() < kMinPixels) {
    throw RejectedInputError("image has " + std::to_string(image.pixel_count()) + " pixels, at least 8 required");
  }
  if (!codec::validate_mode_id(mode, id)) {
    throw RejectedInputError("id " + std::to_string(id.value()) + " cannot carry " +
                             std::to_string(codec::bits_per_symbol(mode)) + "-bit symbols");
  }
  ProviderOutput out;
  out.container.width = image.width;
  out.container.height = image.height;
  out.container.mode = mode;
  out.container.trailing_pixel = image.pixel_count() % 2 == 1;
  out.container.body = encrypt_and_encode(image, image_stream, id);
  out.beta = lsbs_of_prefix(out.container.body);
  write_prefix_lsbs(out.container.body, id.value());
  return out;
}

MarkedContainer hider_embed(MarkedContainer container, Beta beta, const cipher::Bits& message,
                            const cipher::KeystreamSource& message_stream) {
  check_body(container);
  if (container.pixel_count() < kMinPixels) throw MalformedPayloadError("container smaller than 8 pixels");
  const PublicId id = read_id(container);
  const Capacity cap = capacity_of(container.width, container.height, container.mode);
  if (message.size() > std::numeric_limits<std::uint32_t>::max() || message.size() > cap.usable_message_bits ||
      cap.total_bits < kFramingBits) {
    throw CapacityError("payload of " + std::to_string(message.size()) + " message bits exceeds capacity of " +
                        std::to_string(cap.usable_message_bits) + " (" + std::to_string(cap.total_bits) +
                        " slot bits, " + std::to_string(kFramingBits) + " reserved)");
  }

  cipher::Bits payload;
  payload.reserve(kFramingBits + message.size());
  append_bits(payload, beta.bits, kBetaBits);
  append_bits(payload, message.size(), kLengthFieldBits);
  const auto encrypted = cipher::encrypt_message_bits(message, message_stream);
  payload.insert(payload.end(), encrypted.begin(), encrypted.end());

  const auto width = static_cast<std::size_t>(codec::bits_per_symbol(container.mode));
  const std::size_t bits_per_triple = 2 * width;
  auto symbol_at = [&](std::size_t bit) -> std::uint8_t {
    std::uint8_t v = 0;
    for (std::size_t k = 0; k < width; ++k) {
      const bool b = bit + k < payload.size() && payload[bit + k];
      v = static_cast<std::uint8_t>(v << 1 | (b ? 1u : 0u));
    }
    return v;
  };

  const std::size_t used = (payload.size() + bits_per_triple - 1) / bits_per_triple;
  for (std::size_t t = 0; t < used; ++t) {
    const std::size_t bit = t * bits_per_triple;
    const codec::SecretPair secret{.s2 = symbol_at(bit), .s1 = symbol_at(bit + width)};
    const std::size_t index = kReservedTriples + t;
    const auto c = container.triple(index);
    container.set_triple(index, codec::embed_secret({c.c2, c.c1, c.c0}, secret, id, container.mode));
  }
  return container;
}

PublicId read_id(const MarkedContainer& container) {
  if (container.body.size() < kIdStampBytes) throw MalformedPayloadError("body too short to hold the id stamp");
  const int value = lsbs_of_prefix(container.body).bits;
  if (value < PublicId::kMin) throw CorruptionError("stamped id " + std::to_string(value) + " is below 2");
  const PublicId id(value);
  if (!codec::validate_mode_id(container.mode, id)) {
    throw CorruptionError("stamped id " + std::to_string(value) + " is invalid for " +
                          std::to_string(codec::bits_per_symbol(container.mode)) + "-bit symbols");
  }
  return id;
}

ExtractedPayload extract_payload(const MarkedContainer& container) {
  check_body(container);
  const PublicId id = read_id(container);

  ExtractedPayload out;
  const std::size_t count = data_triples(container);
  out.secrets.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    out.secrets.push_back(codec::extract_secret(container.triple(kReservedTriples + t), id, container.mode));
  }

  const cipher::Bits slots = unpack_symbols(out.secrets, container.mode);
  if (slots.size() < kFramingBits) {
    throw MalformedPayloadError("container carries " + std::to_string(slots.size()) +
                                " slot bits, fewer than the 36-bit framing");
  }
  out.beta.bits = static_cast<std::uint8_t>(read_bits(slots, 0, kBetaBits));
  const std::uint64_t length = read_bits(slots, kBetaBits, kLengthFieldBits);
  if (length > slots.size() - kFramingBits) {
    throw MalformedPayloadError("length field " + std::to_string(length) + " exceeds capacity " +
                                std::to_string(slots.size() - kFramingBits));
  }
  const auto first = slots.begin() + static_cast<std::ptrdiff_t>(kFramingBits);
  out.encrypted_message.assign(first, first + static_cast<std::ptrdiff_t>(length));
  return out;
}

cipher::Bits extract_message(const MarkedContainer& container, const cipher::KeystreamSource& message_stream) {
  return cipher::encrypt_message_bits(extract_payload(container).encrypted_message, message_stream);
}

GrayRaster recover_image(const MarkedContainer& container, const cipher::KeystreamSource& image_stream) {
  const ExtractedPayload payload = extract_payload(container);
  const PublicId id = read_id(container);

  std::vector<std::uint8_t> body = container.body;
  write_prefix_lsbs(body, payload.beta.bits);

  std::vector<std::uint8_t> encrypted(container.pixel_count());
  for (std::size_t t = 0; t < container.triple_count(); ++t) {
    const codec::MarkedTriple marked{body[3 * t], body[3 * t + 1], body[3 * t + 2]};
    const codec::SecretPair secret = t < kReservedTriples ? codec::SecretPair{} : payload.secrets[t - kReservedTriples];
    const codec::PlainGroup group = codec::recover_group(codec::strip_secret(marked, secret), id);
    encrypted[2 * t] = group.p1;
    encrypted[2 * t + 1] = group.p2;
  }
  if (container.trailing_pixel) encrypted.back() = body.back();

  GrayRaster image;
  image.width = container.width;
  image.height = container.height;
  image.pixels = cipher::xor_bytes(encrypted, image_stream.generate(encrypted.size()));
  return image;
}

ReceiverResult receiver_process(const MarkedContainer& container, const cipher::KeystreamSource* image_stream,
                                const cipher::KeystreamSource* message_stream) {
  if (image_stream == nullptr && message_stream == nullptr) {
    throw MissingKeyError("receiver holds neither the encryption key nor the hiding key");
  }
  ReceiverResult result;
  if (message_stream != nullptr) result.message = extract_message(container, *message_stream);
  if (image_stream != nullptr) result.image = recover_image(container, *image_stream);
  return result;
}

GrayRaster body_as_raster(const MarkedContainer& container) {
  const std::size_t bytes = 3 * container.triple_count();
  GrayRaster r;
  if (container.width % 2 == 0) {
    r.width = container.width / 2 * 3;
    r.height = container.height;
  } else {
    r.width = static_cast<std::uint32_t>(bytes);
    r.height = 1;
  }
  r.pixels.assign(container.body.begin(), container.body.begin() + static_cast<std::ptrdiff_t>(bytes));
  return r;
}

}  // namespace rdhe::pipeline
