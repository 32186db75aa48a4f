#pragma once

// Embedding-rate, fidelity and statistical-security measurements.

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string>

#include "rdhe/raster.hpp"

namespace rdhe::metrics {

/// PSNR of identical rasters. Compared by value, never approximated.
inline constexpr double kPsnrInfinite = std::numeric_limits<double>::infinity();

/// Result of a correlation over a constant sequence.
inline constexpr double kUndefined = std::numeric_limits<double>::quiet_NaN();

/// Embedded bits per pixel of `denominator_pixels`. Throws RejectedInputError
/// on a zero denominator.
double embedding_rate(std::uint64_t embedded_bits, std::uint64_t denominator_pixels);

struct Fidelity {
  double mse = 0.0;
  double psnr_db = kPsnrInfinite;
  bool lossless() const noexcept { return mse == 0.0; }
};

/// MSE and PSNR with peak 255. Throws RejectedInputError on a dimension mismatch.
Fidelity psnr(const GrayRaster& original, const GrayRaster& candidate);

inline constexpr int kSsimWindow = 8;

/// Mean SSIM over all 8x8 windows at unit stride, K1 = 0.01, K2 = 0.03,
/// L = 255, population statistics per window. Both rasters must share
/// dimensions of at least 8x8.
double ssim(const GrayRaster& original, const GrayRaster& candidate);

using Histogram = std::array<std::uint64_t, 256>;

Histogram histogram(std::span<const std::uint8_t> values);
inline Histogram histogram(const GrayRaster& r) { return histogram(r.pixels); }

/// Shannon entropy in bits per symbol, in [0, 8].
double entropy(const Histogram& h);
inline double entropy(const GrayRaster& r) { return entropy(histogram(r)); }

enum class Direction { Horizontal, Vertical, Diagonal };
const char* to_string(Direction d) noexcept;

/// Pearson coefficient over every (pixel, neighbour) pair in `direction`.
/// Returns kUndefined when either side is constant or no pair exists.
double adjacent_correlation(const GrayRaster& r, Direction direction);

/// Body bytes per original pixel. Throws RejectedInputError on zero pixels.
double expansion_factor(std::uint64_t original_pixels, std::uint64_t container_body_bytes);

struct QualityReport {
  double ec_bpp = 0.0;           // embedded bits per marked (expanded) byte
  double ec_original_bpp = 0.0;  // embedded bits per original pixel
  double psnr_db = kPsnrInfinite;
  double ssim = 1.0;
  double mse = 0.0;
  double expansion = 0.0;
};

struct SecurityReport {
  Histogram histogram{};
  double entropy_bits = 0.0;
  double correlation_horizontal = kUndefined;
  double correlation_vertical = kUndefined;
  double correlation_diagonal = kUndefined;
};

SecurityReport analyze(const GrayRaster& r);

/// Line-oriented key=value text. Infinite PSNR prints as "inf", undefined
/// correlations as "nan".
std::string to_key_value(const QualityReport& q, const SecurityReport& s);
/// JSON object with "quality" and "security" members; non-finite numbers
/// become the strings "inf" / "nan".
std::string to_json(const QualityReport& q, const SecurityReport& s);
/// 256 comma-separated counts, no trailing newline.
std::string histogram_csv(const Histogram& h);

}  // namespace rdhe::metrics
