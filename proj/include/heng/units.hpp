#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heng {

// Internal convention: every energy and frequency is an angular frequency in
// ps^-1 (hbar = 1); temperatures stay in kelvin. Config ingestion converts
// tagged user values (meV, eV, K, ps, ps^-1) here and nowhere else.
struct UnitSystem {
  double hbar = 0.6582119569;               // meV ps
  double meV_to_psinv = 1.0 / 0.6582119569; // ps^-1 per meV
  double kB_over_hbar = 0.0861733 / 0.6582119569; // ps^-1 per K
};

inline constexpr double kHbarMeVps = 0.6582119569;
inline constexpr double kBoltzmannMeVperK = 0.0861733;
inline constexpr double kMeV = 1.0 / kHbarMeVps;         // 1 meV in ps^-1
inline constexpr double kEV = 1000.0 * kMeV;             // 1 eV in ps^-1
inline constexpr double kKelvin = kBoltzmannMeVperK / kHbarMeVps; // kB*1K in ps^-1

static_assert(kMeV > 1.519267 && kMeV < 1.519268);
static_assert(kKelvin > 0.130919 && kKelvin < 0.130921);

// Converts a value carrying one of the accepted unit tags to the internal
// representation (ps^-1 for energies/rates, K for temperatures, with "ps"
// interpreted as an inverse rate: x ps -> 1/x ps^-1).
inline double to_internal(double value, std::string_view unit) {
  if (unit == "ps^-1" || unit == "ps-1" || unit == "1/ps") return value;
  if (unit == "meV") return value * kMeV;
  if (unit == "eV") return value * kEV;
  if (unit == "K") return value;
  if (unit == "ps") {
    if (value == 0.0) throw std::domain_error("cannot convert 0 ps to a rate");
    return 1.0 / value;
  }
  throw std::invalid_argument("unknown unit tag '" + std::string(unit) +
                              "' (accepted: meV | eV | ps^-1 | K | ps)");
}

} // namespace heng
