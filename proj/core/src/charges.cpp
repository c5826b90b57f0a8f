#include "colorgates/charges.hpp"

#include <bit>
#include <stdexcept>

namespace colorgates {

namespace {

std::string colors_name(std::uint8_t mask) {
  if (mask == 0) return "0";
  std::string s;
  for (Color c = 0; c < kNumColors; ++c) {
    if ((mask >> c) & 1U) s += (s.empty() ? "" : "+") + color_name(c);
  }
  return s;
}

}  // namespace

Flux::Flux(std::uint8_t mask) : mask_(mask) {
  if (mask > 0xF || std::popcount(static_cast<unsigned>(mask)) % 2 != 0) {
    throw std::invalid_argument("flux labels have an even number of colors");
  }
}

std::string Flux::name() const {
  if (mask_ == 0) return "0";
  if (mask_ == 0xF) return "k1k2k3k4";
  return ColorPair::from_mask(mask_).name();
}

std::array<Flux, 8> Flux::all() {
  return {Flux(0x0), Flux(0x3), Flux(0x5), Flux(0x6), Flux(0x9), Flux(0xA), Flux(0xC), Flux(0xF)};
}

Charge::Charge(std::uint8_t mask) {
  if (mask > 0xF) throw std::invalid_argument("charge mask has more than four colors");
  const auto alt = static_cast<std::uint8_t>(mask ^ 0xF);
  const int w = std::popcount(static_cast<unsigned>(mask));
  const int wa = std::popcount(static_cast<unsigned>(alt));
  if (w < wa || (w == wa && (mask & 1U))) {
    mask_ = mask;
  } else {
    mask_ = alt;
  }
}

std::string Charge::name() const { return colors_name(mask_); }

std::array<Charge, 8> Charge::all() {
  return {Charge(0x0), Charge(0x1), Charge(0x2), Charge(0x4),
          Charge(0x8), Charge(0x3), Charge(0x5), Charge(0x9)};
}

int pairing(Charge c, Flux f) {
  return std::popcount(static_cast<unsigned>(c.mask() & f.mask())) % 2 ? -1 : 1;
}

std::optional<Charge> charge_from_signs(const std::array<int, 8>& signs) {
  const auto fluxes = Flux::all();
  for (auto c : Charge::all()) {
    bool match = true;
    for (std::size_t i = 0; i < fluxes.size(); ++i) match = match && pairing(c, fluxes[i]) == signs[i];
    if (match) return c;
  }
  return std::nullopt;
}

}  // namespace colorgates
