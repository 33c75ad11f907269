#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msscan/document.hpp"
#include "msscan/image.hpp"
#include "msscan/light_source.hpp"

namespace msscan {

struct ScanConfig {
    int dpi = 100;
    double noise_sigma = 0.0;     // additive Gaussian, fraction of full scale
    int max_feed_offset_px = 0;   // misfeed window half-width
    int bit_depth = 8;            // 8 or 16
    std::uint64_t rng_seed = 0;
};

void validate_scan_config(const ScanConfig& config);

struct PixelOffset {
    int dx = 0;
    int dy = 0;
    bool operator==(const PixelOffset&) const = default;
};

/// One pass: the page under a single LED. true_offset_px records the injected
/// misfeed so registration can be checked against ground truth.
struct BandScan {
    std::string band_name;
    double center_nm = 0.0;
    GrayImage image;
    PixelOffset true_offset_px;
};

/// round(value * (2^bit_depth - 1)), half away from zero, saturating.
std::uint32_t quantize(double value, int bit_depth);

/// Seed for one pass: rng_seed XOR pass_index. Part of the contract so each
/// pass is reproducible on its own.
std::uint64_t pass_seed(std::uint64_t rng_seed, int pass_index);

/// Renders one pass line by line. Per pixel: band response of the local
/// reflectance under the emission, scaled by the emission peak, plus clamped
/// Gaussian noise, quantized. A rigid integer feed offset drawn from
/// [-max_feed_offset_px, +max_feed_offset_px]^2 shifts the whole pass; pixels
/// that sample outside the page see paper white.
BandScan scan_band(const DocumentModel& doc, const std::optional<Spectrum>& emission,
                   const Spectrum& sensor, const ScanConfig& config, int pass_index);

/// Rotates the source through positions 1..leds.size() and scans once per
/// settled position; transitioning states emit nothing and produce no scan.
std::vector<BandScan> scan_sequence(const DocumentModel& doc, const LightSource& source,
                                    const Spectrum& sensor, const ScanConfig& config);

}  // namespace msscan
