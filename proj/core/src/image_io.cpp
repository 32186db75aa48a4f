#include "rdhe/image_io.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "rdhe/errors.hpp"

namespace rdhe::io {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'R', 'D', 'H', 'E'};

class HeaderCursor {
 public:
  explicit HeaderCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments that run to end of line.
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::uint64_t read_number(const char* what) {
    skip_separators();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw ParseError(std::string("pgm: expected ") + what);
    }
    std::uint64_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw ParseError(std::string("pgm: ") + what + " too large");
      }
      ++pos_;
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void expect_single_whitespace() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw ParseError("pgm: missing whitespace after maxval");
    }
    ++pos_;
  }

  std::size_t position() const noexcept { return pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void put_u32_be(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

std::uint32_t get_u32_be(std::span<const std::uint8_t> bytes, std::size_t at) {
  return std::uint32_t{bytes[at]} << 24 | std::uint32_t{bytes[at + 1]} << 16 |
         std::uint32_t{bytes[at + 2]} << 8 | std::uint32_t{bytes[at + 3]};
}

}  // namespace

GrayRaster read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw ParseError("pgm: not a binary (P5) graymap");
  }
  HeaderCursor cursor(bytes.subspan(2));
  const auto width = cursor.read_number("width");
  const auto height = cursor.read_number("height");
  const auto maxval = cursor.read_number("maxval");
  if (width == 0 || height == 0) throw ParseError("pgm: zero dimension");
  if (maxval != 255) throw ParseError("pgm: maxval " + std::to_string(maxval) + " unsupported, need 255");
  cursor.expect_single_whitespace();

  const std::size_t offset = 2 + cursor.position();
  const std::size_t count = static_cast<std::size_t>(width * height);
  if (bytes.size() - offset < count) {
    throw ParseError("pgm: truncated raster, " + std::to_string(bytes.size() - offset) + " of " +
                     std::to_string(count) + " bytes");
  }
  GrayRaster raster;
  raster.width = static_cast<std::uint32_t>(width);
  raster.height = static_cast<std::uint32_t>(height);
  const auto first = bytes.begin() + static_cast<std::ptrdiff_t>(offset);
  raster.pixels.assign(first, first + static_cast<std::ptrdiff_t>(count));
  return raster;
}

std::vector<std::uint8_t> write_pgm(const GrayRaster& raster) {
  const std::string header =
      "P5\n" + std::to_string(raster.width) + " " + std::to_string(raster.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), raster.pixels.begin(), raster.pixels.end());
  return out;
}

MarkedContainer read_container(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kContainerHeaderSize) throw ParseError("container: header truncated");
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) throw ParseError("container: bad magic");
  if (bytes[4] != kContainerVersion) {
    throw ParseError("container: unsupported version " + std::to_string(bytes[4]));
  }
  if (bytes[5] != 1 && bytes[5] != 2) throw ParseError("container: bad mode byte " + std::to_string(bytes[5]));
  if (bytes[14] > 1) throw ParseError("container: bad trailing-pixel flag");

  MarkedContainer c;
  c.mode = codec::embed_mode_from_bits(bytes[5]);
  c.width = get_u32_be(bytes, 6);
  c.height = get_u32_be(bytes, 10);
  c.trailing_pixel = bytes[14] == 1;
  if (c.trailing_pixel != (c.pixel_count() % 2 == 1)) {
    throw ParseError("container: trailing-pixel flag disagrees with dimensions");
  }
  const std::size_t expected = MarkedContainer::expected_body_size(c.width, c.height);
  const std::size_t actual = bytes.size() - kContainerHeaderSize;
  if (actual != expected) {
    throw MalformedPayloadError("container body is " + std::to_string(actual) + " bytes, expected " +
                                std::to_string(expected));
  }
  c.body.assign(bytes.begin() + kContainerHeaderSize, bytes.end());
  return c;
}

std::vector<std::uint8_t> write_container(const MarkedContainer& container) {
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.reserve(kContainerHeaderSize + container.body.size());
  out.push_back(kContainerVersion);
  out.push_back(static_cast<std::uint8_t>(codec::bits_per_symbol(container.mode)));
  put_u32_be(out, container.width);
  put_u32_be(out, container.height);
  out.push_back(container.trailing_pixel ? 1 : 0);
  out.insert(out.end(), container.body.begin(), container.body.end());
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw ParseError("short write to " + path.string());
}

}  // namespace rdhe::io
