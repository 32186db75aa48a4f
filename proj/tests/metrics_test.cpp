#include "rdhe/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <json.hpp>

#include "rdhe/errors.hpp"
#include "test_support.hpp"

namespace {

using rdhe::GrayRaster;
using namespace rdhe::metrics;

// Direct window-by-window SSIM with the same constants, no summed-area tables.
double ssim_oracle(const GrayRaster& a, const GrayRaster& b) {
  const double c1 = std::pow(0.01 * 255, 2), c2 = std::pow(0.03 * 255, 2);
  double total = 0;
  int windows = 0;
  for (std::uint32_t y = 0; y + 8 <= a.height; ++y) {
    for (std::uint32_t x = 0; x + 8 <= a.width; ++x) {
      double ma = 0, mb = 0;
      for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) {
          ma += a.at(x + i, y + j);
          mb += b.at(x + i, y + j);
        }
      ma /= 64;
      mb /= 64;
      double va = 0, vb = 0, cov = 0;
      for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) {
          const double da = a.at(x + i, y + j) - ma, db = b.at(x + i, y + j) - mb;
          va += da * da;
          vb += db * db;
          cov += da * db;
        }
      va /= 64;
      vb /= 64;
      cov /= 64;
      total += (2 * ma * mb + c1) * (2 * cov + c2) / ((ma * ma + mb * mb + c1) * (va + vb + c2));
      ++windows;
    }
  }
  return total / windows;
}

TEST(EmbeddingRate, Conventions) {
  EXPECT_NEAR(embedding_rate(524280, 393216), 1.3333, 1e-4);
  EXPECT_EQ(embedding_rate(0, 17), 0.0);
  EXPECT_EQ(embedding_rate(524288, 262144), 2.0);
  EXPECT_THROW(embedding_rate(5, 0), rdhe::RejectedInputError);
  EXPECT_DOUBLE_EQ(embedding_rate(2000, 1000), 2 * embedding_rate(1000, 1000));
}

TEST(Psnr, Examples) {
  const GrayRaster a{2, 1, {0, 0}};
  const auto same = psnr(a, a);
  EXPECT_EQ(same.mse, 0.0);
  EXPECT_EQ(same.psnr_db, kPsnrInfinite);
  EXPECT_TRUE(same.lossless());

  const auto worst = psnr(GrayRaster{1, 1, {0}}, GrayRaster{1, 1, {255}});
  EXPECT_EQ(worst.mse, 65025.0);
  EXPECT_DOUBLE_EQ(worst.psnr_db, 0.0);

  const auto unit = psnr(a, GrayRaster{2, 1, {1, 1}});
  EXPECT_EQ(unit.mse, 1.0);
  EXPECT_NEAR(unit.psnr_db, 48.1308, 1e-4);
  EXPECT_FALSE(unit.lossless());
}

TEST(Psnr, SymmetricAndMonotone) {
  std::mt19937_64 rng(1);
  const auto a = rdhe::testkit::random_raster(rng, 16, 16);
  auto b = a;
  double last = kPsnrInfinite;
  for (std::size_t i = 0; i < b.pixels.size(); i += 7) {
    b.pixels[i] = static_cast<std::uint8_t>(b.pixels[i] ^ 0x40);
    const auto f = psnr(a, b);
    EXPECT_EQ(f.mse, psnr(b, a).mse);
    EXPECT_LT(f.psnr_db, last);
    last = f.psnr_db;
  }
}

TEST(Psnr, DimensionMismatch) {
  EXPECT_THROW(psnr(GrayRaster{2, 1, {0, 0}}, GrayRaster{1, 2, {0, 0}}), rdhe::RejectedInputError);
}

TEST(Ssim, IdentityInversionSymmetry) {
  std::mt19937_64 rng(2);
  // Image without mid-gray values so the inversion never maps a pixel to itself.
  GrayRaster a{32, 32, std::vector<std::uint8_t>(1024)};
  for (std::uint32_t y = 0; y < 32; ++y)
    for (std::uint32_t x = 0; x < 32; ++x) a.pixels[y * 32 + x] = static_cast<std::uint8_t>((x * 4 + y * 2) % 120);
  EXPECT_DOUBLE_EQ(ssim(a, a), 1.0);

  GrayRaster inv = a;
  for (auto& p : inv.pixels) p = static_cast<std::uint8_t>(255 - p);
  EXPECT_LT(ssim(a, inv), 0.5);

  for (int trial = 0; trial < 10; ++trial) {
    const auto x = rdhe::testkit::random_raster(rng, 12, 9);
    const auto y = rdhe::testkit::random_raster(rng, 12, 9);
    EXPECT_DOUBLE_EQ(ssim(x, y), ssim(y, x));
  }
}

TEST(Ssim, MatchesDirectWindowOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = rdhe::testkit::random_raster(rng, 20, 14);
    auto b = a;
    for (auto& p : b.pixels) p = static_cast<std::uint8_t>(std::min(255, p + static_cast<int>(rng() % 30)));
    EXPECT_NEAR(ssim(a, b), ssim_oracle(a, b), 1e-9);
  }
}

TEST(Ssim, Errors) {
  const GrayRaster small{7, 8, std::vector<std::uint8_t>(56)};
  EXPECT_THROW(ssim(small, small), rdhe::RejectedInputError);
  const GrayRaster a{8, 8, std::vector<std::uint8_t>(64)};
  const GrayRaster b{16, 4, std::vector<std::uint8_t>(64)};
  EXPECT_THROW(ssim(a, b), rdhe::RejectedInputError);
}

TEST(Histogram, SumsAndEntropyBounds) {
  const GrayRaster constant{10, 10, std::vector<std::uint8_t>(100, 42)};
  const auto h = histogram(constant);
  EXPECT_EQ(h[42], 100u);
  EXPECT_EQ(entropy(constant), 0.0);

  GrayRaster uniform{256, 4, std::vector<std::uint8_t>(1024)};
  for (std::size_t i = 0; i < uniform.pixels.size(); ++i) uniform.pixels[i] = static_cast<std::uint8_t>(i % 256);
  EXPECT_DOUBLE_EQ(entropy(uniform), 8.0);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = rdhe::testkit::random_raster(rng, 1 + rng() % 50, 1 + rng() % 50);
    const auto rh = histogram(r);
    std::uint64_t sum = 0;
    for (auto c : rh) sum += c;
    EXPECT_EQ(sum, r.pixel_count());
    EXPECT_LT(entropy(r), 8.0);
    EXPECT_GE(entropy(r), 0.0);
  }
}

TEST(AdjacentCorrelation, KnownCases) {
  const GrayRaster constant{8, 8, std::vector<std::uint8_t>(64, 9)};
  EXPECT_TRUE(std::isnan(adjacent_correlation(constant, Direction::Horizontal)));

  // Horizontal ramp: each row is 0..15, rows identical.
  GrayRaster ramp{16, 16, std::vector<std::uint8_t>(256)};
  for (std::uint32_t y = 0; y < 16; ++y)
    for (std::uint32_t x = 0; x < 16; ++x) ramp.pixels[y * 16 + x] = static_cast<std::uint8_t>(x * 10);
  EXPECT_NEAR(adjacent_correlation(ramp, Direction::Horizontal), 1.0, 1e-12);
  EXPECT_NEAR(adjacent_correlation(ramp, Direction::Vertical), 1.0, 1e-12);  // identical rows
  EXPECT_NEAR(adjacent_correlation(ramp, Direction::Diagonal), 1.0, 1e-12);

  // Alternating columns: neighbours are perfectly anti-correlated horizontally.
  GrayRaster stripes{16, 4, std::vector<std::uint8_t>(64)};
  for (std::uint32_t y = 0; y < 4; ++y)
    for (std::uint32_t x = 0; x < 16; ++x) stripes.pixels[y * 16 + x] = x % 2 ? 200 : 10;
  EXPECT_NEAR(adjacent_correlation(stripes, Direction::Horizontal), -1.0, 1e-12);

  const GrayRaster row{5, 1, {1, 2, 3, 4, 5}};
  EXPECT_TRUE(std::isnan(adjacent_correlation(row, Direction::Vertical)));
}

TEST(ExpansionFactor, Examples) {
  EXPECT_EQ(expansion_factor(262144, 393216), 1.5);
  EXPECT_EQ(expansion_factor(2, 3), 1.5);
  EXPECT_NEAR(expansion_factor(9, 13), 1.4444444, 1e-6);
  EXPECT_THROW(expansion_factor(0, 3), rdhe::RejectedInputError);
}

TEST(Reports, SerializeSentinels) {
  QualityReport q;
  q.ec_bpp = 1.5;
  SecurityReport s;
  s.histogram[3] = 7;
  const auto kv = to_key_value(q, s);
  EXPECT_NE(kv.find("psnr_db=inf\n"), std::string::npos);
  EXPECT_NE(kv.find("correlation_vertical=nan\n"), std::string::npos);
  EXPECT_NE(kv.find("ec_bpp=1.5\n"), std::string::npos);

  const auto j = nlohmann::json::parse(to_json(q, s));
  EXPECT_EQ(j["quality"]["psnr_db"], "inf");
  EXPECT_EQ(j["quality"]["ec_bpp"], 1.5);
  EXPECT_EQ(j["security"]["histogram"][3], 7);
  EXPECT_EQ(j["security"]["histogram"].size(), 256u);

  const auto csv = histogram_csv(s.histogram);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), ','), 255);
  EXPECT_EQ(csv.substr(0, 8), "0,0,0,7,");
}

}  // namespace
