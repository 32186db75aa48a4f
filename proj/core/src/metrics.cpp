#include "rdhe/metrics.hpp"

#include <cmath>
#include <cstddef>
#include <iomanip>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "rdhe/errors.hpp"

namespace rdhe::metrics {
namespace {

void require_same_shape(const GrayRaster& a, const GrayRaster& b) {
  if (a.width != b.width || a.height != b.height || !a.consistent() || !b.consistent()) {
    throw RejectedInputError("rasters differ in dimensions: " + std::to_string(a.width) + "x" +
                             std::to_string(a.height) + " vs " + std::to_string(b.width) + "x" +
                             std::to_string(b.height));
  }
}

// Summed-area table with one row and column of zero padding.
class Integral {
 public:
  template <class F>
  Integral(std::uint32_t w, std::uint32_t h, F value) : stride_(std::size_t{w} + 1), sums_(stride_ * (h + 1), 0) {
    for (std::uint32_t y = 0; y < h; ++y) {
      std::int64_t row = 0;
      for (std::uint32_t x = 0; x < w; ++x) {
        row += value(x, y);
        sums_[(y + 1) * stride_ + x + 1] = sums_[y * stride_ + x + 1] + row;
      }
    }
  }

  std::int64_t box(std::uint32_t x, std::uint32_t y, std::uint32_t size) const {
    const std::size_t x0 = x, y0 = y, x1 = x0 + size, y1 = y0 + size;
    return sums_[y1 * stride_ + x1] - sums_[y0 * stride_ + x1] - sums_[y1 * stride_ + x0] + sums_[y0 * stride_ + x0];
  }

 private:
  std::size_t stride_;
  std::vector<std::int64_t> sums_;
};

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream out;
  out << std::setprecision(10) << v;
  return out.str();
}

nlohmann::json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

}  // namespace

double embedding_rate(std::uint64_t embedded_bits, std::uint64_t denominator_pixels) {
  if (denominator_pixels == 0) throw RejectedInputError("embedding rate needs a non-zero pixel count");
  return static_cast<double>(embedded_bits) / static_cast<double>(denominator_pixels);
}

Fidelity psnr(const GrayRaster& original, const GrayRaster& candidate) {
  require_same_shape(original, candidate);
  if (original.pixels.empty()) throw RejectedInputError("psnr of empty rasters");
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < original.pixels.size(); ++i) {
    const int d = int{original.pixels[i]} - int{candidate.pixels[i]};
    sum += static_cast<std::uint64_t>(d * d);
  }
  Fidelity f;
  f.mse = static_cast<double>(sum) / static_cast<double>(original.pixels.size());
  f.psnr_db = sum == 0 ? kPsnrInfinite : 10.0 * std::log10(255.0 * 255.0 / f.mse);
  return f;
}

double ssim(const GrayRaster& original, const GrayRaster& candidate) {
  require_same_shape(original, candidate);
  const std::uint32_t w = original.width;
  const std::uint32_t h = original.height;
  if (w < kSsimWindow || h < kSsimWindow) throw RejectedInputError("ssim needs rasters of at least 8x8");

  auto px = [](const GrayRaster& r) {
    return [&r](std::uint32_t x, std::uint32_t y) { return std::int64_t{r.at(x, y)}; };
  };
  const auto a = px(original);
  const auto b = px(candidate);
  const Integral sa(w, h, a);
  const Integral sb(w, h, b);
  const Integral saa(w, h, [&](auto x, auto y) { return a(x, y) * a(x, y); });
  const Integral sbb(w, h, [&](auto x, auto y) { return b(x, y) * b(x, y); });
  const Integral sab(w, h, [&](auto x, auto y) { return a(x, y) * b(x, y); });

  constexpr double kL = 255.0;
  constexpr double c1 = (0.01 * kL) * (0.01 * kL);
  constexpr double c2 = (0.03 * kL) * (0.03 * kL);
  constexpr double n = kSsimWindow * kSsimWindow;

  double total = 0.0;
  std::size_t windows = 0;
  for (std::uint32_t y = 0; y + kSsimWindow <= h; ++y) {
    for (std::uint32_t x = 0; x + kSsimWindow <= w; ++x) {
      const double mu_a = static_cast<double>(sa.box(x, y, kSsimWindow)) / n;
      const double mu_b = static_cast<double>(sb.box(x, y, kSsimWindow)) / n;
      const double var_a = static_cast<double>(saa.box(x, y, kSsimWindow)) / n - mu_a * mu_a;
      const double var_b = static_cast<double>(sbb.box(x, y, kSsimWindow)) / n - mu_b * mu_b;
      const double cov = static_cast<double>(sab.box(x, y, kSsimWindow)) / n - mu_a * mu_b;
      total += ((2 * mu_a * mu_b + c1) * (2 * cov + c2)) /
               ((mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2));
      ++windows;
    }
  }
  return total / static_cast<double>(windows);
}

Histogram histogram(std::span<const std::uint8_t> values) {
  Histogram h{};
  for (std::uint8_t v : values) ++h[v];
  return h;
}

double entropy(const Histogram& h) {
  std::uint64_t total = 0;
  for (auto c : h) total += c;
  if (total == 0) return 0.0;
  double e = 0.0;
  for (auto c : h) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    e -= p * std::log2(p);
  }
  return e;
}

const char* to_string(Direction d) noexcept {
  switch (d) {
    case Direction::Horizontal: return "horizontal";
    case Direction::Vertical: return "vertical";
    case Direction::Diagonal: return "diagonal";
  }
  return "unknown";
}

double adjacent_correlation(const GrayRaster& r, Direction direction) {
  const std::uint32_t dx = direction == Direction::Vertical ? 0 : 1;
  const std::uint32_t dy = direction == Direction::Horizontal ? 0 : 1;
  if (r.width <= dx || r.height <= dy) return kUndefined;

  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  std::uint64_t n = 0;
  for (std::uint32_t y = 0; y + dy < r.height; ++y) {
    for (std::uint32_t x = 0; x + dx < r.width; ++x) {
      const double a = r.at(x, y);
      const double b = r.at(x + dx, y + dy);
      sx += a;
      sy += b;
      sxx += a * a;
      syy += b * b;
      sxy += a * b;
      ++n;
    }
  }
  const double count = static_cast<double>(n);
  const double cov = sxy - sx * sy / count;
  const double var_a = sxx - sx * sx / count;
  const double var_b = syy - sy * sy / count;
  if (var_a <= 0.0 || var_b <= 0.0) return kUndefined;
  return cov / std::sqrt(var_a * var_b);
}

double expansion_factor(std::uint64_t original_pixels, std::uint64_t container_body_bytes) {
  if (original_pixels == 0) throw RejectedInputError("expansion factor needs a non-zero pixel count");
  return static_cast<double>(container_body_bytes) / static_cast<double>(original_pixels);
}

SecurityReport analyze(const GrayRaster& r) {
  SecurityReport s;
  s.histogram = histogram(r);
  s.entropy_bits = entropy(s.histogram);
  s.correlation_horizontal = adjacent_correlation(r, Direction::Horizontal);
  s.correlation_vertical = adjacent_correlation(r, Direction::Vertical);
  s.correlation_diagonal = adjacent_correlation(r, Direction::Diagonal);
  return s;
}

std::string to_key_value(const QualityReport& q, const SecurityReport& s) {
  std::ostringstream out;
  out << "ec_bpp=" << format_number(q.ec_bpp) << '\n'
      << "ec_original_bpp=" << format_number(q.ec_original_bpp) << '\n'
      << "mse=" << format_number(q.mse) << '\n'
      << "psnr_db=" << format_number(q.psnr_db) << '\n'
      << "ssim=" << format_number(q.ssim) << '\n'
      << "expansion=" << format_number(q.expansion) << '\n'
      << "entropy_bits=" << format_number(s.entropy_bits) << '\n'
      << "correlation_horizontal=" << format_number(s.correlation_horizontal) << '\n'
      << "correlation_vertical=" << format_number(s.correlation_vertical) << '\n'
      << "correlation_diagonal=" << format_number(s.correlation_diagonal) << '\n'
      << "histogram=" << histogram_csv(s.histogram) << '\n';
  return out.str();
}

std::string to_json(const QualityReport& q, const SecurityReport& s) {
  nlohmann::json j;
  j["quality"] = {{"ec_bpp", json_number(q.ec_bpp)},
                  {"ec_original_bpp", json_number(q.ec_original_bpp)},
                  {"mse", json_number(q.mse)},
                  {"psnr_db", json_number(q.psnr_db)},
                  {"ssim", json_number(q.ssim)},
                  {"expansion", json_number(q.expansion)}};
  j["security"] = {{"entropy_bits", json_number(s.entropy_bits)},
                   {"correlation", {{"horizontal", json_number(s.correlation_horizontal)},
                                    {"vertical", json_number(s.correlation_vertical)},
                                    {"diagonal", json_number(s.correlation_diagonal)}}},
                   {"histogram", s.histogram}};
  return j.dump(2);
}

std::string histogram_csv(const Histogram& h) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(h[i]);
  }
  return out;
}

}  // namespace rdhe::metrics
