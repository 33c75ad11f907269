#pragma once

#include <string>
#include <vector>

#include "msscan/errors.hpp"

namespace msscan {

/// Uniformly sampled wavelength axis. Sample i sits at start_nm + i * step_nm;
/// the covered range must stay inside [300, 900] nm.
struct WavelengthGrid {
    double start_nm = 380.0;
    double step_nm = 1.0;
    int count = 401;

    double wavelength(int i) const { return start_nm + i * step_nm; }
    double stop_nm() const { return wavelength(count - 1); }
    bool operator==(const WavelengthGrid&) const = default;
};

WavelengthGrid make_wavelength_grid(double start_nm, double step_nm, int count);

/// 380-780 nm at 1 nm: covers the visible range with margin on both sides.
WavelengthGrid default_grid();

/// Index of the grid sample closest to wavelength_nm, clamped to the grid.
int nearest_sample(const WavelengthGrid& grid, double wavelength_nm);

/// Sampled spectral function on a grid. Depending on role the values are a
/// relative power distribution, a reflectance fraction or a sensor
/// sensitivity; they are non-negative in every role and additionally <= 1
/// for reflectances.
struct Spectrum {
    WavelengthGrid grid;
    std::vector<double> values;
};

Spectrum make_spectrum(const WavelengthGrid& grid, std::vector<double> values);
Spectrum constant_spectrum(const WavelengthGrid& grid, double value);

/// Flat sensitivity (== 1 everywhere), the default sensor model.
Spectrum flat_sensor(const WavelengthGrid& grid);

/// Reflectance-role check: values within [0, 1].
void validate_reflectance(const Spectrum& s);

double trapezoid_integral(const Spectrum& s);
double peak_value(const Spectrum& s);

/// One LED row: emission center, bandwidth (interpreted as FWHM) and relative
/// luminous output on the shared brightness scale.
struct LedSpec {
    std::string name;
    double center_nm = 0.0;
    double fwhm_nm = 0.0;
    double flux = 0.0;
    std::string part_number;
};

void validate_led(const LedSpec& led);

/// sigma = fwhm / 2.3548
inline constexpr double kFwhmPerSigma = 2.3548;

/// Gaussian emission model sampled on the grid, normalized so the sample
/// nearest the center wavelength is exactly 1.0. Half-maximum falls at
/// center +- fwhm/2 up to sampling error.
Spectrum gaussian_spd(const LedSpec& led, const WavelengthGrid& grid);

/// Scales an SPD by flux / flux_reference. The single-argument overload uses
/// the largest flux in the built-in LED table as the reference.
Spectrum scale_to_flux(const Spectrum& spd, double flux, double flux_reference);
Spectrum scale_to_flux(const Spectrum& spd, double flux);

/// Relative band response: integral of reflectance * illumination * sensor
/// over the grid, normalized by the integral of illumination * sensor.
/// In [0, 1] whenever the reflectance is. All three spectra must share a grid.
double band_response(const Spectrum& reflectance, const Spectrum& illumination,
                     const Spectrum& sensor);

/// Unnormalized variant: the raw reflected-energy integral, exposure included.
double band_energy(const Spectrum& reflectance, const Spectrum& illumination,
                   const Spectrum& sensor);

/// The six-LED complement of the light source, in descending wavelength
/// order (Deep Red first, Royal Blue last).
const std::vector<LedSpec>& led_table();

/// Largest flux among led_table() entries (the brightness reference).
double led_table_max_flux();

/// "Royal Blue" -> "royal-blue"; used for band naming in files and CLI flags.
std::string band_slug(const std::string& name);

/// Two-column plain text (wavelength_nm value), '#' starts a comment line.
/// Reading requires at least two rows on a uniform grid.
void write_spectrum_text(const Spectrum& s, const std::string& path);
Spectrum read_spectrum_text(const std::string& path);

}  // namespace msscan
