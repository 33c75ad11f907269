#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msscan/spectral.hpp"

namespace msscan {

/// Constant-current driver variants. Both deliver 350 mA to one LED; only the
/// high-voltage module has a dimming control.
enum class DriverVariant { LowVoltage, HighVoltage };

inline constexpr double kDriveCurrentMa = 350.0;
inline constexpr double kSwitchRatingMa = 500.0;  // rotary contact rating
inline constexpr int kSwitchPositions = 12;       // 12-way unipolar switch
inline constexpr int kMaxLeds = 7;                // terminals 1-7 wired, 8-12 unused
inline constexpr double kDefaultCollectionEfficiency = 0.85;

/// Snapshot of the light source: driver, LED bank, rotary position and the
/// break-before-make flag. Immutable; operations return new states.
struct LightSource {
    DriverVariant variant = DriverVariant::HighVoltage;
    std::vector<LedSpec> leds;              // positions 1..leds.size()
    int position = 1;                       // 1..12
    double dimming = 1.0;                   // in [0,1], high-voltage only
    bool transitioning = false;             // contacts open, nothing energized
    double collection_efficiency = kDefaultCollectionEfficiency;
};

LightSource new_source(DriverVariant variant, std::vector<LedSpec> leds,
                       double collection_efficiency = kDefaultCollectionEfficiency);

/// Rotation always passes through an open-contact state before settling, so
/// two energized states can never be adjacent.
struct RotationSequence {
    LightSource intermediate;  // transitioning == true
    LightSource settled;
};

RotationSequence rotate_to(const LightSource& source, int position);

/// 0-based index into source.leds, or nullopt when nothing is energized
/// (transitioning, or the wiper sits on an unused terminal).
std::optional<int> energized_led_index(const LightSource& source);

/// 350 when an LED is energized, 0 otherwise.
double drive_current_ma(const LightSource& source);

LightSource set_dimming(const LightSource& source, double level);

/// Emission of the currently energized LED on the given grid: the Gaussian
/// SPD scaled by flux ratio, dimming and collection efficiency. nullopt when
/// nothing is energized. The flux reference is the largest flux among the
/// source's configured LEDs.
std::optional<Spectrum> active_emission(const LightSource& source,
                                        const WavelengthGrid& grid);

DriverVariant parse_driver_variant(const std::string& text);

/// "table1" (case-insensitive) for the built-in bank, or a ';'-separated list
/// of name:center_nm:fwhm_nm:flux[:part_number] entries.
std::vector<LedSpec> parse_led_list(const std::string& text);

}  // namespace msscan
