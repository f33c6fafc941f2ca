#include "ancc/pgm.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace ancc {
namespace {

// Upper bound on pixel count accepted from a header, so a corrupt header
// cannot trigger a huge allocation before the data is found to be missing.
constexpr std::uint64_t kMaxPixels = std::uint64_t{1} << 28;

// Skips whitespace and '#' comments between header tokens.
void skip_separators(std::istream& in) {
  for (;;) {
    const int c = in.peek();
    if (c == std::char_traits<char>::eof()) {
      return;
    }
    if (c == '#') {
      std::string discard;
      std::getline(in, discard);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

// Returns false at end of stream; throws on a non-numeric token.
bool read_number(std::istream& in, std::uint64_t& value, const char* field) {
  skip_separators(in);
  std::string token;
  while (in.peek() != std::char_traits<char>::eof() && !std::isspace(in.peek()) &&
         in.peek() != '#') {
    token.push_back(static_cast<char>(in.get()));
  }
  if (token.empty()) {
    return false;
  }
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw PgmError(PgmErrorKind::MalformedHeader,
                   std::string("pgm: invalid ") + field + " '" + token + "'");
  }
  return true;
}

std::uint64_t header_number(std::istream& in, const char* field) {
  std::uint64_t value = 0;
  if (!read_number(in, value, field)) {
    throw PgmError(PgmErrorKind::MalformedHeader, std::string("pgm: missing ") + field);
  }
  return value;
}

}  // namespace

GrayImage read_pgm(std::istream& in) {
  char magic[2] = {};
  if (!in.read(magic, 2) || magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5')) {
    throw PgmError(PgmErrorKind::MalformedHeader, "pgm: expected P2 or P5 magic");
  }
  const bool binary = magic[1] == '5';

  const auto width = header_number(in, "width");
  const auto height = header_number(in, "height");
  if (width == 0 || height == 0 || width > static_cast<std::uint64_t>(kMaxImageDimension) ||
      height > static_cast<std::uint64_t>(kMaxImageDimension) || width * height > kMaxPixels) {
    throw PgmError(PgmErrorKind::MalformedHeader, "pgm: unsupported dimensions");
  }
  const auto maxval = header_number(in, "maxval");
  if (maxval == 0 || maxval > 65535) {
    throw PgmError(PgmErrorKind::BadMaxval, "pgm: maxval must be in [1, 65535]");
  }
  const int depth = maxval <= 255 ? 8 : 16;
  const auto count = static_cast<std::size_t>(width * height);
  std::vector<Intensity> data(count);

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (!std::isspace(in.get())) {
      throw PgmError(PgmErrorKind::MalformedHeader, "pgm: missing separator before raster");
    }
    const std::size_t sample_bytes = depth == 8 ? 1 : 2;
    std::vector<unsigned char> raw(count * sample_bytes);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
      throw PgmError(PgmErrorKind::Truncated, "pgm: raster data truncated");
    }
    for (std::size_t i = 0; i < count; ++i) {
      data[i] = sample_bytes == 1
                    ? raw[i]
                    : static_cast<Intensity>((raw[2 * i] << 8) | raw[2 * i + 1]);
      if (data[i] > maxval) {
        throw PgmError(PgmErrorKind::MalformedHeader, "pgm: sample exceeds maxval");
      }
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      std::uint64_t value = 0;
      if (!read_number(in, value, "sample")) {
        throw PgmError(PgmErrorKind::Truncated, "pgm: raster data truncated");
      }
      if (value > maxval) {
        throw PgmError(PgmErrorKind::MalformedHeader, "pgm: sample exceeds maxval");
      }
      data[i] = static_cast<Intensity>(value);
    }
  }
  if (in.bad()) {
    throw PgmError(PgmErrorKind::Io, "pgm: read error");
  }
  return GrayImage(static_cast<std::int32_t>(width), static_cast<std::int32_t>(height), depth,
                   std::move(data));
}

GrayImage load_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw PgmError(PgmErrorKind::Io, "pgm: cannot open " + path.string());
  }
  return read_pgm(in);
}

void write_pgm(const GrayImage& img, std::ostream& out) {
  const bool wide = img.depth() == 16;
  out << "P5\n" << img.width() << ' ' << img.height() << '\n' << (wide ? 65535 : 255) << '\n';
  std::vector<char> raw;
  raw.reserve(img.pixels().size() * (wide ? 2 : 1));
  for (const auto v : img.pixels()) {
    if (wide) {
      raw.push_back(static_cast<char>(v >> 8));
    }
    raw.push_back(static_cast<char>(v & 0xFF));
  }
  out.write(raw.data(), static_cast<std::streamsize>(raw.size()));
  if (!out) {
    throw PgmError(PgmErrorKind::Io, "pgm: write failed");
  }
}

void save_pgm(const GrayImage& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw PgmError(PgmErrorKind::Io, "pgm: cannot create " + path.string());
  }
  write_pgm(img, out);
  out.close();
  if (!out) {
    throw PgmError(PgmErrorKind::Io, "pgm: write failed for " + path.string());
  }
}

}  // namespace ancc
