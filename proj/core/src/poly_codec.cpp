#include "rdhe/poly_codec.hpp"

#include <string>

#include "rdhe/errors.hpp"

namespace rdhe::codec {
namespace {

constexpr std::uint8_t byte(unsigned v) noexcept { return static_cast<std::uint8_t>(v & 0xFFu); }

}  // namespace

PublicId::PublicId(int value) : value_(0) {
  if (value < kMin || value > kMax) {
    throw RejectedInputError("public id " + std::to_string(value) + " outside [2, 15]");
  }
  value_ = static_cast<std::uint8_t>(value);
}

EmbedMode embed_mode_from_bits(int bits) {
  switch (bits) {
    case 1: return EmbedMode::OneBit;
    case 2: return EmbedMode::TwoBit;
    default: throw RejectedInputError("embed mode must be 1 or 2 bits, got " + std::to_string(bits));
  }
}

bool validate_mode_id(EmbedMode mode, PublicId id) noexcept {
  const int v = id.value();
  switch (mode) {
    case EmbedMode::OneBit: return v >= 2 && v <= 15;
    case EmbedMode::TwoBit: return v >= 4 && v <= 9;
  }
  return false;
}

bool secret_fits(SecretPair secret, PublicId id, EmbedMode mode) noexcept {
  const unsigned limit = static_cast<unsigned>(symbol_alphabet_size(mode));
  const unsigned v = id.value();
  return secret.s2 < limit && secret.s1 < limit && secret.s1 < v && secret.s2 * v * v < 256u;
}

EncodedTriple encode_group(PlainGroup group, PublicId id) noexcept {
  const unsigned v = id.value();
  const unsigned p2 = group.p2;
  const unsigned p1 = group.p1;
  return {byte(p2), byte(2u * v * p2 + p1), byte(v * v * p2 + v * p1)};
}

MarkedTriple embed_secret(EncodedTriple triple, SecretPair secret, PublicId id, EmbedMode mode) {
  if (!validate_mode_id(mode, id)) {
    throw RejectedInputError("id " + std::to_string(id.value()) + " is not valid for " +
                             std::to_string(bits_per_symbol(mode)) + "-bit symbols");
  }
  if (!secret_fits(secret, id, mode)) {
    throw RejectedInputError("secret (" + std::to_string(secret.s2) + ", " +
                             std::to_string(secret.s1) + ") outside the symbol alphabet");
  }
  return {byte(triple.a2 + secret.s2), triple.a1, byte(triple.a0 + secret.s1)};
}

std::uint8_t evaluate_at_neg_id(MarkedTriple triple, PublicId id) noexcept {
  const unsigned neg = 256u - id.value();
  return byte(triple.c2 * neg * neg + triple.c1 * neg + triple.c0);
}

SecretPair extract_secret(MarkedTriple triple, PublicId id, EmbedMode mode) {
  const unsigned v = id.value();
  const unsigned h = evaluate_at_neg_id(triple, id);
  const unsigned s1 = h % v;
  const unsigned rest = h - s1;
  if (rest % (v * v) != 0) {
    throw CorruptionError("H(-ID) = " + std::to_string(h) + " is not s2*ID^2 + s1 for ID " +
                          std::to_string(v));
  }
  const unsigned s2 = rest / (v * v);
  const unsigned limit = static_cast<unsigned>(symbol_alphabet_size(mode));
  if (s1 >= limit || s2 >= limit) {
    throw CorruptionError("extracted symbols (" + std::to_string(s2) + ", " + std::to_string(s1) +
                          ") outside the " + std::to_string(bits_per_symbol(mode)) +
                          "-bit alphabet");
  }
  return {static_cast<std::uint8_t>(s2), static_cast<std::uint8_t>(s1)};
}

EncodedTriple strip_secret(MarkedTriple triple, SecretPair secret) noexcept {
  return {byte(triple.c2 - unsigned{secret.s2}), triple.c1, byte(triple.c0 - unsigned{secret.s1})};
}

PlainGroup recover_group(EncodedTriple triple, PublicId id) {
  const unsigned v = id.value();
  const std::uint8_t p2 = triple.a2;
  const std::uint8_t p1 = byte(triple.a1 - 2u * v * p2);
  if (byte(v * v * p2 + v * p1) != triple.a0) {
    throw CorruptionError("a0 coefficient inconsistent with (a2, a1) under ID " +
                          std::to_string(v));
  }
  return {p2, p1};
}

}  // namespace rdhe::codec
