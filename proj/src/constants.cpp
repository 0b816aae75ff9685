#include "pnt/constants.hpp"

#include <array>
#include <cstdio>

#include "pnt/error.hpp"

namespace pnt {

namespace {

struct Slot {
  const char* name;
  double ConstantsConfig::*member;
  bool at_least_one;
};

constexpr std::array kSlots{
    Slot{"c_zfr", &ConstantsConfig::c_zfr, false},
    Slot{"c_siegel_effective", &ConstantsConfig::c_siegel_effective, true},
    Slot{"c_siegel_1", &ConstantsConfig::c_siegel_1, false},
    Slot{"c_siegel_2", &ConstantsConfig::c_siegel_2, false},
    Slot{"c_density_exp", &ConstantsConfig::c_density_exp, false},
    Slot{"c_density_coeff", &ConstantsConfig::c_density_coeff, false},
    Slot{"c_repulsion", &ConstantsConfig::c_repulsion, true},
    Slot{"c_main1", &ConstantsConfig::c_main1, true},
    Slot{"c_main2", &ConstantsConfig::c_main2, false},
    Slot{"c_main3", &ConstantsConfig::c_main3, true},
    Slot{"c_ik", &ConstantsConfig::c_ik, false},
    Slot{"c_unsmoothing", &ConstantsConfig::c_unsmoothing, false},
    Slot{"c_zero_count", &ConstantsConfig::c_zero_count, false},
    Slot{"c_discretization", &ConstantsConfig::c_discretization, false},
    Slot{"c_kernel_main", &ConstantsConfig::c_kernel_main, false},
    Slot{"c_l1", &ConstantsConfig::c_l1, false},
    Slot{"c_short_interval", &ConstantsConfig::c_short_interval, false},
    Slot{"kappa_nu", &ConstantsConfig::kappa_nu, false},
};

}  // namespace

void ConstantsConfig::validate() const {
  for (const auto& s : kSlots) {
    const double v = this->*s.member;
    if (!(v > 0.0)) fail(ErrorKind::invariant_violation, std::string(s.name) + " must be positive");
    if (s.at_least_one && v < 1.0) {
      fail(ErrorKind::invariant_violation, std::string(s.name) + " must be at least 1");
    }
  }
}

bool ConstantsConfig::set(std::string_view name, double value) {
  for (const auto& s : kSlots) {
    if (name == s.name) {
      this->*s.member = value;
      return true;
    }
  }
  return false;
}

std::vector<std::pair<std::string, double>> ConstantsConfig::entries() const {
  std::vector<std::pair<std::string, double>> out;
  out.reserve(kSlots.size());
  for (const auto& s : kSlots) out.emplace_back(s.name, this->*s.member);
  return out;
}

std::string ConstantsConfig::echo() const {
  std::string out;
  char buf[64];
  for (const auto& [name, value] : entries()) {
    if (!out.empty()) out += ' ';
    std::snprintf(buf, sizeof buf, "%.12g", value);
    out += name + "=" + buf;
  }
  return out;
}

}  // namespace pnt
