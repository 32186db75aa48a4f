#include "rdhe/image_io.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "rdhe/errors.hpp"
#include "test_support.hpp"

namespace {

using rdhe::GrayRaster;
using rdhe::MarkedContainer;
using namespace rdhe::io;

std::vector<std::uint8_t> bytes_of(const std::string& header, std::vector<std::uint8_t> pixels) {
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), pixels.begin(), pixels.end());
  return out;
}

TEST(ReadPgm, MinimalFixtures) {
  EXPECT_EQ(read_pgm(bytes_of("P5\n2 1\n255\n", {132, 35})), (GrayRaster{2, 1, {132, 35}}));
  EXPECT_EQ(read_pgm(bytes_of("P5 1 1 255\n", {0})), (GrayRaster{1, 1, {0}}));
}

TEST(ReadPgm, CommentsAndWhitespaceInHeader) {
  const auto r = read_pgm(bytes_of("P5\n# made by hand\n  3\t# width\n2\n255\n", {1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(r, (GrayRaster{3, 2, {1, 2, 3, 4, 5, 6}}));
}

TEST(ReadPgm, RasterMayStartWithWhitespaceByteValue) {
  // 0x0A and 0x20 are valid pixel values right after the single separator.
  EXPECT_EQ(read_pgm(bytes_of("P5\n2 1\n255\n", {0x0A, 0x20})), (GrayRaster{2, 1, {0x0A, 0x20}}));
}

TEST(ReadPgm, Errors) {
  EXPECT_THROW(read_pgm(bytes_of("P5\n2 2\n255\n", {1, 2, 3})), rdhe::ParseError);
  EXPECT_THROW(read_pgm(bytes_of("P2\n1 1\n255\n", {0})), rdhe::ParseError);
  EXPECT_THROW(read_pgm(bytes_of("P5\n1 1\n65535\n", {0, 0})), rdhe::ParseError);
  EXPECT_THROW(read_pgm(bytes_of("P5\n1 1\n15\n", {0})), rdhe::ParseError);
  EXPECT_THROW(read_pgm(bytes_of("P5\n0 1\n255\n", {})), rdhe::ParseError);
  EXPECT_THROW(read_pgm(bytes_of("P5\nx 1\n255\n", {0})), rdhe::ParseError);
  EXPECT_THROW(read_pgm(bytes_of("P5\n1 1\n255", {})), rdhe::ParseError);
  EXPECT_THROW(read_pgm(std::vector<std::uint8_t>{}), rdhe::ParseError);
}

TEST(WritePgm, ExactBytesAndRoundTrip) {
  const GrayRaster r{2, 1, {132, 35}};
  EXPECT_EQ(write_pgm(r), bytes_of("P5\n2 1\n255\n", {132, 35}));
  for (const auto& fixture : {r, GrayRaster{1, 1, {0}}, GrayRaster{3, 2, {1, 2, 3, 4, 5, 6}}}) {
    EXPECT_EQ(read_pgm(write_pgm(fixture)), fixture);
  }
  std::mt19937_64 rng(5);
  const auto big = rdhe::testkit::random_raster(rng, 37, 19);
  EXPECT_EQ(read_pgm(write_pgm(big)), big);
}

MarkedContainer sample_container() {
  MarkedContainer c;
  c.width = 3;
  c.height = 3;
  c.mode = rdhe::codec::EmbedMode::OneBit;
  c.trailing_pixel = true;
  c.body.resize(13);
  for (std::size_t i = 0; i < c.body.size(); ++i) c.body[i] = static_cast<std::uint8_t>(i * 17);
  return c;
}

TEST(Container, GoldenLayout) {
  const auto bytes = write_container(sample_container());
  const std::vector<std::uint8_t> header = {'R', 'D', 'H', 'E', 1, 1, 0, 0, 0, 3, 0, 0, 0, 3, 1};
  ASSERT_EQ(bytes.size(), header.size() + 13);
  EXPECT_TRUE(std::equal(header.begin(), header.end(), bytes.begin()));
  EXPECT_EQ(bytes[15], 0);
  EXPECT_EQ(bytes[16], 17);
}

TEST(Container, BigEndianDimensions) {
  MarkedContainer c;
  c.width = 0x01020304;
  c.height = 0;
  c.body = {};
  const auto bytes = write_container(c);
  EXPECT_EQ(bytes[6], 0x01);
  EXPECT_EQ(bytes[9], 0x04);
  EXPECT_EQ(bytes[5], 2);
}

TEST(Container, RoundTrip) {
  const auto c = sample_container();
  EXPECT_EQ(read_container(write_container(c)), c);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    MarkedContainer r;
    r.width = static_cast<std::uint32_t>(1 + rng() % 40);
    r.height = static_cast<std::uint32_t>(1 + rng() % 40);
    r.mode = trial % 2 ? rdhe::codec::EmbedMode::OneBit : rdhe::codec::EmbedMode::TwoBit;
    r.trailing_pixel = r.pixel_count() % 2 == 1;
    r.body = rdhe::testkit::random_bytes(rng, MarkedContainer::expected_body_size(r.width, r.height));
    ASSERT_EQ(read_container(write_container(r)), r);
  }
}

TEST(Container, ParseErrors) {
  auto good = write_container(sample_container());

  auto bad_magic = good;
  std::copy_n("XXXX", 4, bad_magic.begin());
  EXPECT_THROW(read_container(bad_magic), rdhe::ParseError);

  auto bad_version = good;
  bad_version[4] = 2;
  EXPECT_THROW(read_container(bad_version), rdhe::ParseError);

  auto bad_mode = good;
  bad_mode[5] = 3;
  EXPECT_THROW(read_container(bad_mode), rdhe::ParseError);

  auto bad_flag = good;
  bad_flag[14] = 0;
  EXPECT_THROW(read_container(bad_flag), rdhe::ParseError);

  auto short_body = good;
  short_body.pop_back();
  EXPECT_THROW(read_container(short_body), rdhe::MalformedPayloadError);

  auto long_body = good;
  long_body.push_back(0);
  EXPECT_THROW(read_container(long_body), rdhe::MalformedPayloadError);

  EXPECT_THROW(read_container(std::vector<std::uint8_t>(good.begin(), good.begin() + 10)), rdhe::ParseError);
}

TEST(Container, EvenBodyOneByteShortIsMalformed) {
  MarkedContainer c;
  c.width = 4;
  c.height = 2;
  c.body.assign(12, 0);
  auto bytes = write_container(c);
  bytes.pop_back();
  try {
    read_container(bytes);
    FAIL() << "expected MalformedPayloadError";
  } catch (const rdhe::MalformedPayloadError& e) {
    EXPECT_NE(std::string(e.what()).find("malformed payload"), std::string::npos);
  }
}

}  // namespace
