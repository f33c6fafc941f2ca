#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ancc/image.hpp"

namespace ancc {

enum class PgmErrorKind {
  Io,               ///< file could not be opened, read or written
  MalformedHeader,  ///< bad magic, bad dimensions, non-numeric tokens, sample > maxval
  Truncated,        ///< pixel data ended early
  BadMaxval,        ///< maxval of 0 or above 65535
};

class PgmError : public std::runtime_error {
 public:
  PgmError(PgmErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  [[nodiscard]] PgmErrorKind kind() const { return kind_; }

 private:
  PgmErrorKind kind_;
};

/// Reads a P2 or P5 PGM. Depth is 8 when maxval <= 255, else 16. Samples are
/// kept as stored (no rescaling to the depth).
[[nodiscard]] GrayImage read_pgm(std::istream& in);
[[nodiscard]] GrayImage load_pgm(const std::filesystem::path& path);

/// Writes binary P5 with maxval 255 (depth 8) or 65535 (depth 16, big-endian).
void write_pgm(const GrayImage& img, std::ostream& out);
void save_pgm(const GrayImage& img, const std::filesystem::path& path);

}  // namespace ancc
