#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace msscan {

/// Single-channel intensity image. Samples are stored widened to 16 bits;
/// every value stays below 2^bit_depth.
struct GrayImage {
    int width = 0;
    int height = 0;
    int bit_depth = 8;  // 8 or 16
    std::vector<std::uint16_t> pixels;  // row-major

    std::uint16_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint16_t& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint32_t maxval() const { return bit_depth == 8 ? 255u : 65535u; }
};

/// Validates dimensions and bit depth, zero-fills.
GrayImage make_gray_image(int width, int height, int bit_depth);

/// Interleaved 8-bit RGB, used for composites.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // 3 * width * height, row-major RGB
};

}  // namespace msscan
