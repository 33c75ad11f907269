#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msscan/image.hpp"
#include "msscan/scanner.hpp"

namespace msscan {

/// Registered band stack, band-sequential, with per-band center wavelengths.
/// Wavelengths are strictly monotone (the LED bank order, either direction).
struct Cube {
    int width = 0;
    int height = 0;
    int bit_depth = 8;
    std::vector<double> wavelengths_nm;
    std::vector<std::uint16_t> data;  // band-sequential, row-major per band
    std::vector<PixelOffset> offsets_applied;

    int band_count() const { return static_cast<int>(wavelengths_nm.size()); }
    std::uint16_t at(int band, int x, int y) const {
        return data[(static_cast<std::size_t>(band) * height + y) * width + x];
    }
    GrayImage band_image(int band) const;
};

/// Integer translation per band maximizing normalized cross-correlation with
/// the reference band, searched exhaustively over [-max_offset, +max_offset]^2.
/// The reference band maps to (0, 0). Returned offsets satisfy
/// band(x + dx, y + dy) ~ reference(x, y) over the overlap.
std::vector<PixelOffset> register_bands(const std::vector<BandScan>& bands,
                                        int reference_index, int max_offset_px = 8);

/// Shifts every band by the negated offset, crops to the common valid region
/// and stacks. Every cube pixel is observed in every band.
Cube assemble_cube(const std::vector<BandScan>& bands,
                   const std::vector<PixelOffset>& offsets);

// MSQB container, bit-exact: magic "MSQB", u16 LE version = 1, u16 LE
// bit_depth, u32 LE width/height/band_count, band_count x f64 LE wavelengths,
// then band-sequential samples (u8, or u16 LE), row-major within band.
void write_cube(const Cube& cube, const std::string& path);
Cube read_cube(const std::string& path);

/// 8-bit P6 composite mapping three bands to R, G, B with a per-band min-max
/// stretch; a flat band maps to 128.
void composite_rgb(const Cube& cube, int r_band, int g_band, int b_band,
                   const std::string& path);

}  // namespace msscan
