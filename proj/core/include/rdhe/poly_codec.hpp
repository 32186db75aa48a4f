#pragma once

// Quadratic-polynomial encoding of encrypted pixel pairs over Z/256.
//
// A pair (p2, p1) is encoded as the coefficients of
//   f(x) = p2 (x + ID)^2 + p1 (x + ID)   (mod 256)
// so that f(-ID) = 0. A hider adds g(x) = s2 x^2 + s1 coefficient-wise; the
// receiver reads g(-ID) = H(-ID) back without knowing the pixels, subtracts it
// and inverts the expansion. Every routine here is a pure function.

#include <compare>
#include <cstdint>

namespace rdhe::codec {

/// Shared root offset of the encoding polynomial, 2..15 (fits in 4 bits).
class PublicId {
 public:
  static constexpr int kMin = 2;
  static constexpr int kMax = 15;

  /// Throws RejectedInputError outside [2, 15].
  explicit PublicId(int value);

  std::uint8_t value() const noexcept { return value_; }

  friend bool operator==(PublicId, PublicId) = default;

 private:
  std::uint8_t value_;
};

/// Symbol width per polynomial coefficient. The underlying value is the bit count.
enum class EmbedMode : std::uint8_t { OneBit = 1, TwoBit = 2 };

constexpr int bits_per_symbol(EmbedMode mode) noexcept { return static_cast<int>(mode); }
constexpr int symbol_alphabet_size(EmbedMode mode) noexcept { return 1 << bits_per_symbol(mode); }

/// Throws RejectedInputError for anything but 1 or 2.
EmbedMode embed_mode_from_bits(int bits);

struct PlainGroup {
  std::uint8_t p2 = 0;
  std::uint8_t p1 = 0;
  friend auto operator<=>(const PlainGroup&, const PlainGroup&) = default;
};

/// Coefficients (a2, a1, a0) of f(x).
struct EncodedTriple {
  std::uint8_t a2 = 0;
  std::uint8_t a1 = 0;
  std::uint8_t a0 = 0;
  friend auto operator<=>(const EncodedTriple&, const EncodedTriple&) = default;
};

struct SecretPair {
  std::uint8_t s2 = 0;
  std::uint8_t s1 = 0;
  friend auto operator<=>(const SecretPair&, const SecretPair&) = default;
};

/// Coefficients (c2, c1, c0) of H(x) = f(x) + g(x).
struct MarkedTriple {
  std::uint8_t c2 = 0;
  std::uint8_t c1 = 0;
  std::uint8_t c0 = 0;
  friend auto operator<=>(const MarkedTriple&, const MarkedTriple&) = default;
};

/// True iff every symbol of `mode` can be extracted exactly under `id`:
/// 2..15 for one-bit symbols, 4..9 for two-bit symbols.
bool validate_mode_id(EmbedMode mode, PublicId id) noexcept;

/// Whether `secret` lies in the alphabet of `mode` and satisfies
/// s1 < ID and s2 * ID^2 < 256.
bool secret_fits(SecretPair secret, PublicId id, EmbedMode mode) noexcept;

EncodedTriple encode_group(PlainGroup group, PublicId id) noexcept;

/// Throws RejectedInputError if `secret` does not fit (`id`, `mode`) or if the
/// pair itself is invalid.
MarkedTriple embed_secret(EncodedTriple triple, SecretPair secret, PublicId id, EmbedMode mode);

/// H(-ID) reduced to [0, 255]; -ID is taken as the residue 256 - ID.
std::uint8_t evaluate_at_neg_id(MarkedTriple triple, PublicId id) noexcept;

/// Reads (s2, s1) from H(-ID). Throws CorruptionError when the value does not
/// decompose as s2 * ID^2 + s1 with both symbols in the alphabet of `mode`.
SecretPair extract_secret(MarkedTriple triple, PublicId id, EmbedMode mode);

EncodedTriple strip_secret(MarkedTriple triple, SecretPair secret) noexcept;

/// Inverts encode_group. The redundant a0 is checked against (p2, p1) and a
/// mismatch raises CorruptionError.
PlainGroup recover_group(EncodedTriple triple, PublicId id);

/// Reinterprets an unmarked triple as a marked one (zero secret).
constexpr MarkedTriple as_marked(EncodedTriple t) noexcept { return {t.a2, t.a1, t.a0}; }

}  // namespace rdhe::codec
