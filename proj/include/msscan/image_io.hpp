#pragma once

#include <string>

#include "msscan/errors.hpp"
#include "msscan/image.hpp"

namespace msscan {

// Binary PGM (P5). 16-bit samples are big-endian on disk per the PNM
// convention; maxval is 255 or 65535 to match the image bit depth.
void write_pgm(const GrayImage& image, const std::string& path);
GrayImage read_pgm(const std::string& path);

// Binary PPM (P6), 8-bit, maxval 255.
void write_ppm(const RgbImage& image, const std::string& path);
RgbImage read_ppm(const std::string& path);

}  // namespace msscan
