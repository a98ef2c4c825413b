#pragma once

#include <string>
#include <string_view>

#include "discop/image.hpp"

namespace discop {

enum class PbmEncoding { Plain /* P1 */, Raw /* P4 */ };

/// Parses a single P1 or P4 image. Value 1 (black) marks curve pixels.
/// Throws FormatError on a malformed header, oversized dimensions, short
/// rasters or non-whitespace bytes after the raster.
BinaryImage load_pbm(std::string_view bytes);
std::string save_pbm(const BinaryImage& image, PbmEncoding encoding = PbmEncoding::Raw);

BinaryImage read_pbm_file(const std::string& path);
/// Writes via a temporary file and a rename.
void write_pbm_file(const std::string& path, const BinaryImage& image, PbmEncoding encoding = PbmEncoding::Raw);

}  // namespace discop
