#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msscan/spectral.hpp"

namespace msscan {

struct PaletteEntry {
    std::string name;
    Spectrum reflectance;
};

/// One yellow-dot disk stamped over the ink layers.
struct DotStamp {
    double x = 0.0;
    double y = 0.0;
    double radius_px = 1.0;
};

/// Named rectangle of a logo element; kept for reports and measurements.
struct Region {
    std::string name;
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;
};

/// Tiny binary matrix: the repeating dot pattern, row-major.
struct BinaryTile {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> cells;

    bool at(int r, int c) const {
        return cells[static_cast<std::size_t>(r) * cols + c] != 0;
    }
    bool empty() const { return rows == 0 || cols == 0; }
    int ones() const;
};

BinaryTile make_binary_tile(int rows, int cols, std::vector<std::uint8_t> cells);

/// "110,010" -> 2x3 tile (rows separated by ',' or '|').
BinaryTile parse_binary_tile(const std::string& text);

/// Synthetic page: a per-pixel palette index map plus a dot overlay. Palette
/// entry 0 is always paper white (reflectance 0.9 across the grid); dots use
/// dot_palette_index and occlude whatever ink sits beneath them.
struct DocumentModel {
    int width_px = 0;
    int height_px = 0;
    std::vector<PaletteEntry> palette;
    std::vector<std::uint8_t> index_map;  // row-major palette indices
    std::vector<DotStamp> dots;
    int dot_palette_index = 0;
    std::vector<Region> regions;

    std::uint8_t index_at(int x, int y) const {
        return index_map[static_cast<std::size_t>(y) * width_px + x];
    }
};

void validate_document(const DocumentModel& doc);

/// Index map with the dot disks stamped in; what the scanner actually sees.
std::vector<std::uint8_t> rasterize_indices(const DocumentModel& doc);

/// paper-white, black, red, orange, green, blue, yellow. Ink curves are
/// smooth logistic band edges; yellow matches paper almost exactly above
/// ~550 nm so the dots vanish outside the blue band.
std::vector<PaletteEntry> default_palette(const WavelengthGrid& grid);

/// Test page: four colored rectangles, a dashed black text band, and the dot
/// pattern tiled at (dot_hps_px, dot_vps_px). Tile cell (r, c) is stamped at
/// the center of sub-cell (r, c) of every lattice cell whose disk fits on the
/// page; dots falling off the page edge are skipped.
DocumentModel build_test_document(int width_px, int height_px, double dot_hps_px,
                                  double dot_vps_px, const BinaryTile& pattern,
                                  double dot_radius_px = 1.0,
                                  const WavelengthGrid& grid = default_grid());

}  // namespace msscan
