// Copyright 2026 The fuzzyedge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fuzzyedge/image_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>

namespace fuzzyedge {
namespace {

bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Cursor over a PNM byte stream. Header tokens and ASCII payload tokens are
// read the same way; comments run from '#' to end of line.
class PnmReader {
 public:
  explicit PnmReader(std::span<const unsigned char> bytes) : bytes_(bytes) {}

  std::size_t offset() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

  char ReadMagic() {
    if (bytes_.size() < 2 || bytes_[0] != 'P') {
      throw PnmParseError(PnmParseError::Kind::kBadMagic, 0,
                          "missing PNM magic number");
    }
    const char kind = static_cast<char>(bytes_[1]);
    if (kind < '1' || kind > '6') {
      throw PnmParseError(PnmParseError::Kind::kBadMagic, 1,
                          std::string("unknown PNM type P") + kind);
    }
    pos_ = 2;
    return kind;
  }

  void SkipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      if (IsSpace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  // Reads an unsigned decimal. `truncated_kind` is reported when the stream
  // ends before any digit is found.
  std::size_t ReadNumber(PnmParseError::Kind truncated_kind,
                         const char* what) {
    SkipSpaceAndComments();
    if (pos_ >= bytes_.size()) {
      throw PnmParseError(truncated_kind, pos_,
                          std::string("unexpected end of data reading ") + what);
    }
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) ++pos_;
    if (pos_ == start || (pos_ < bytes_.size() && !IsSpace(bytes_[pos_]) &&
                          bytes_[pos_] != '#')) {
      throw PnmParseError(truncated_kind == PnmParseError::Kind::kTruncated
                              ? PnmParseError::Kind::kBadValue
                              : PnmParseError::Kind::kMalformedHeader,
                          start, std::string("expected a number for ") + what);
    }
    std::size_t value = 0;
    const auto* first = reinterpret_cast<const char*>(bytes_.data() + start);
    const auto* last = reinterpret_cast<const char*>(bytes_.data() + pos_);
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc()) {
      throw PnmParseError(PnmParseError::Kind::kMalformedHeader, start,
                          std::string("number out of range for ") + what);
    }
    return value;
  }

  // P1 packs digits without separators, so each bit is its own token.
  std::uint8_t ReadBitDigit() {
    SkipSpaceAndComments();
    if (pos_ >= bytes_.size()) {
      throw PnmParseError(PnmParseError::Kind::kTruncated, pos_,
                          "unexpected end of bitmap data");
    }
    const unsigned char c = bytes_[pos_];
    if (c != '0' && c != '1') {
      throw PnmParseError(PnmParseError::Kind::kBadValue, pos_,
                          "bitmap values must be 0 or 1");
    }
    ++pos_;
    return c == '1' ? 1 : 0;
  }

  // Exactly one whitespace byte separates a binary header from its payload.
  void ConsumeHeaderTerminator() {
    if (pos_ >= bytes_.size()) {
      throw PnmParseError(PnmParseError::Kind::kTruncated, pos_,
                          "missing payload");
    }
    if (!IsSpace(bytes_[pos_])) {
      throw PnmParseError(PnmParseError::Kind::kMalformedHeader, pos_,
                          "header must end with whitespace");
    }
    ++pos_;
  }

  std::span<const unsigned char> TakeBytes(std::size_t n) {
    if (remaining() < n) {
      throw PnmParseError(PnmParseError::Kind::kTruncated, bytes_.size(),
                          "payload truncated: need " + std::to_string(n) +
                              " bytes, have " + std::to_string(remaining()));
    }
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

 private:
  std::span<const unsigned char> bytes_;
  std::size_t pos_ = 0;
};

struct Header {
  char kind;
  std::size_t width;
  std::size_t height;
};

Header ReadHeader(PnmReader& reader, bool with_maxval) {
  Header h{};
  h.kind = reader.ReadMagic();
  h.width = reader.ReadNumber(PnmParseError::Kind::kMalformedHeader, "width");
  h.height = reader.ReadNumber(PnmParseError::Kind::kMalformedHeader, "height");
  if (h.width == 0 || h.height == 0) {
    throw PnmParseError(PnmParseError::Kind::kMalformedHeader, reader.offset(),
                        "image dimensions must be positive");
  }
  if (with_maxval) {
    reader.SkipSpaceAndComments();
    const std::size_t maxval_at = reader.offset();
    const std::size_t maxval =
        reader.ReadNumber(PnmParseError::Kind::kMalformedHeader, "maxval");
    if (maxval != 255) {
      throw PnmParseError(PnmParseError::Kind::kUnsupportedMaxval, maxval_at,
                          "maxval must be 255, got " + std::to_string(maxval));
    }
  }
  return h;
}

std::vector<Intensity> ReadAsciiSamples(PnmReader& reader, std::size_t count) {
  std::vector<Intensity> out(count);
  for (auto& v : out) {
    const std::size_t at = reader.offset();
    const std::size_t value =
        reader.ReadNumber(PnmParseError::Kind::kTruncated, "sample");
    if (value > 255) {
      throw PnmParseError(PnmParseError::Kind::kBadValue, at,
                          "sample exceeds maxval");
    }
    v = static_cast<Intensity>(value);
  }
  return out;
}

std::string HeaderText(const char* magic, std::size_t w, std::size_t h,
                       bool with_maxval) {
  std::string out = magic;
  out += '\n' + std::to_string(w) + ' ' + std::to_string(h) + '\n';
  if (with_maxval) out += "255\n";
  return out;
}

void Append(Bytes& out, std::string_view text) {
  out.insert(out.end(), text.begin(), text.end());
}

Bytes AsciiSamples(const char* magic, std::size_t w, std::size_t h,
                   std::span<const GrayImage* const> planes) {
  Bytes out;
  Append(out, HeaderText(magic, w, h, true));
  const std::size_t n = w * h;
  for (std::size_t i = 0; i < n; ++i) {
    std::string line;
    for (std::size_t c = 0; c < planes.size(); ++c) {
      if (c) line += ' ';
      line += std::to_string(planes[c]->pixels()[i]);
    }
    line += ((i + 1) % w == 0) ? '\n' : ' ';
    Append(out, line);
  }
  return out;
}

}  // namespace

PnmParseError::PnmParseError(Kind kind, std::size_t offset,
                             const std::string& what)
    : std::runtime_error("PNM parse error at byte " + std::to_string(offset) +
                         ": " + what),
      kind_(kind),
      offset_(offset) {}

PnmImage read_pnm(std::span<const unsigned char> bytes) {
  if (bytes.size() >= 2 && (bytes[1] == '1' || bytes[1] == '4')) {
    throw PnmParseError(PnmParseError::Kind::kBadMagic, 1,
                        "bitmap formats hold edge maps; use read_pbm");
  }
  PnmReader reader(bytes);
  const Header h = ReadHeader(reader, true);
  const std::size_t n = h.width * h.height;
  switch (h.kind) {
    case '2':
      return GrayImage(h.width, h.height, ReadAsciiSamples(reader, n));
    case '5': {
      reader.ConsumeHeaderTerminator();
      auto payload = reader.TakeBytes(n);
      return GrayImage(h.width, h.height,
                       std::vector<Intensity>(payload.begin(), payload.end()));
    }
    case '3':
    case '6': {
      std::vector<Intensity> interleaved;
      if (h.kind == '3') {
        interleaved = ReadAsciiSamples(reader, 3 * n);
      } else {
        reader.ConsumeHeaderTerminator();
        auto payload = reader.TakeBytes(3 * n);
        interleaved.assign(payload.begin(), payload.end());
      }
      std::vector<Intensity> r(n), g(n), b(n);
      for (std::size_t i = 0; i < n; ++i) {
        r[i] = interleaved[3 * i];
        g[i] = interleaved[3 * i + 1];
        b[i] = interleaved[3 * i + 2];
      }
      return RgbImage(GrayImage(h.width, h.height, std::move(r)),
                      GrayImage(h.width, h.height, std::move(g)),
                      GrayImage(h.width, h.height, std::move(b)));
    }
    default:
      throw PnmParseError(PnmParseError::Kind::kBadMagic, 1,
                          "unsupported PNM type");
  }
}

EdgeMap read_pbm(std::span<const unsigned char> bytes) {
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] != '1' &&
      bytes[1] != '4') {
    throw PnmParseError(PnmParseError::Kind::kBadMagic, 1,
                        "expected a P1 or P4 bitmap");
  }
  PnmReader reader(bytes);
  const Header h = ReadHeader(reader, false);
  std::vector<std::uint8_t> bits(h.width * h.height);
  if (h.kind == '1') {
    for (auto& b : bits) b = reader.ReadBitDigit();
  } else if (h.kind == '4') {
    reader.ConsumeHeaderTerminator();
    const std::size_t stride = (h.width + 7) / 8;
    auto payload = reader.TakeBytes(stride * h.height);
    for (std::size_t y = 0; y < h.height; ++y) {
      for (std::size_t x = 0; x < h.width; ++x) {
        const unsigned char byte = payload[y * stride + x / 8];
        bits[y * h.width + x] = (byte >> (7 - x % 8)) & 1;
      }
    }
  } else {
    throw PnmParseError(PnmParseError::Kind::kBadMagic, 1,
                        "expected a P1 or P4 bitmap");
  }
  return EdgeMap(h.width, h.height, std::move(bits));
}

Bytes write_pnm(const GrayImage& image, PnmFormat format) {
  if (format == PnmFormat::kP2) {
    const GrayImage* planes[] = {&image};
    return AsciiSamples("P2", image.width(), image.height(), planes);
  }
  if (format == PnmFormat::kP5) {
    Bytes out;
    Append(out, HeaderText("P5", image.width(), image.height(), true));
    out.insert(out.end(), image.pixels().begin(), image.pixels().end());
    return out;
  }
  throw std::invalid_argument("gray images are written as P2 or P5");
}

Bytes write_pnm(const RgbImage& image, PnmFormat format) {
  if (format == PnmFormat::kP3) {
    const GrayImage* planes[] = {&image.r(), &image.g(), &image.b()};
    return AsciiSamples("P3", image.width(), image.height(), planes);
  }
  if (format == PnmFormat::kP6) {
    Bytes out;
    Append(out, HeaderText("P6", image.width(), image.height(), true));
    const std::size_t n = image.width() * image.height();
    out.reserve(out.size() + 3 * n);
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(image.r().pixels()[i]);
      out.push_back(image.g().pixels()[i]);
      out.push_back(image.b().pixels()[i]);
    }
    return out;
  }
  throw std::invalid_argument("RGB images are written as P3 or P6");
}

Bytes write_pnm(const EdgeMap& map, PnmFormat format) {
  const std::size_t w = map.width();
  const std::size_t h = map.height();
  Bytes out;
  if (format == PnmFormat::kP1) {
    Append(out, HeaderText("P1", w, h, false));
    for (std::size_t y = 0; y < h; ++y) {
      std::string line;
      for (std::size_t x = 0; x < w; ++x) {
        if (x) line += ' ';
        line += map.at(y, x) ? '1' : '0';
      }
      line += '\n';
      Append(out, line);
    }
    return out;
  }
  if (format == PnmFormat::kP4) {
    Append(out, HeaderText("P4", w, h, false));
    const std::size_t stride = (w + 7) / 8;
    for (std::size_t y = 0; y < h; ++y) {
      std::vector<unsigned char> row(stride, 0);
      for (std::size_t x = 0; x < w; ++x) {
        if (map.at(y, x)) row[x / 8] |= static_cast<unsigned char>(0x80 >> (x % 8));
      }
      out.insert(out.end(), row.begin(), row.end());
    }
    return out;
  }
  throw std::invalid_argument("edge maps are written as P1 or P4");
}

GrayImage read_text_channel(std::string_view text, std::size_t width,
                            std::size_t height) {
  if (width == 0 || height == 0) {
    throw DimensionError("text channel dimensions must be positive");
  }
  const std::size_t n = width * height;
  std::vector<Intensity> values;
  values.reserve(n);
  std::size_t pos = 0;
  while (values.size() < n) {
    while (pos < text.size() && IsSpace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !IsSpace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    const std::string_view token = text.substr(pos, end - pos);
    unsigned value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range ||
        (ec == std::errc() && ptr == token.data() + token.size() && value > 255)) {
      throw TextChannelError("value '" + std::string(token) +
                             "' out of range [0,255] at offset " +
                             std::to_string(pos));
    }
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw TextChannelError("non-numeric token '" + std::string(token) +
                             "' at offset " + std::to_string(pos));
    }
    values.push_back(static_cast<Intensity>(value));
    pos = end;
  }
  if (values.size() < n) {
    throw TextChannelError("text channel has " + std::to_string(values.size()) +
                           " values, expected " + std::to_string(n));
  }
  return GrayImage(width, height, std::move(values));
}

std::string write_text_channel(const GrayImage& plane) {
  std::string out;
  out.reserve(plane.size() * 4);
  for (Intensity v : plane.pixels()) {
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::tuple<GrayImage, GrayImage, GrayImage> split_channels(
    const RgbImage& image) {
  return {image.r(), image.g(), image.b()};
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return Bytes(std::istreambuf_iterator<char>(in),
               std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, std::span<const unsigned char> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

void write_file(const std::string& path, std::string_view text) {
  write_file(path, std::span<const unsigned char>(
                       reinterpret_cast<const unsigned char*>(text.data()),
                       text.size()));
}

}  // namespace fuzzyedge
