#pragma once

// Charge and flux groups, both Z2^3, presented through the four colors.
//
// Flux labels are the even-weight subsets of the colors (the six pairs, the
// empty set and all four). Charges are subsets of colors modulo the full set,
// since k1+k2+k3+k4 = 0. Pairing <c, f> is |c & f| mod 2, which is a
// well-defined duality because every flux mask has even weight.

#include <array>
#include <cstdint>
#include <string>

#include "colorgates/colex.hpp"

namespace colorgates {

class Flux {
 public:
  constexpr Flux() = default;
  explicit Flux(std::uint8_t mask);  // must have even weight
  Flux(ColorPair p) : mask_(p.mask()) {}  // NOLINT: color pairs are fluxes

  constexpr std::uint8_t mask() const noexcept { return mask_; }
  constexpr bool zero() const noexcept { return mask_ == 0; }
  friend Flux operator+(Flux a, Flux b) { return Flux(static_cast<std::uint8_t>(a.mask_ ^ b.mask_)); }
  Flux& operator+=(Flux b) { return *this = *this + b; }
  friend constexpr bool operator==(Flux, Flux) noexcept = default;
  std::string name() const;

  static std::array<Flux, 8> all();

 private:
  std::uint8_t mask_ = 0;
};

class Charge {
 public:
  constexpr Charge() = default;
  explicit Charge(std::uint8_t mask);  // any subset of colors; reduced mod 1111
  static Charge color(Color c) { return Charge(static_cast<std::uint8_t>(1U << c)); }

  // Canonical representative: fewest colors, ties broken toward k1.
  constexpr std::uint8_t mask() const noexcept { return mask_; }
  constexpr bool zero() const noexcept { return mask_ == 0; }
  friend Charge operator+(Charge a, Charge b) {
    return Charge(static_cast<std::uint8_t>(a.mask_ ^ b.mask_));
  }
  Charge& operator+=(Charge b) { return *this = *this + b; }
  friend constexpr bool operator==(Charge, Charge) noexcept = default;
  std::string name() const;

  static std::array<Charge, 8> all();

 private:
  std::uint8_t mask_ = 0;
};

// +1 or -1: the commutator of a charge-c string with an f-flux membrane it
// pierces once.
int pairing(Charge c, Flux f);

// The charge whose pairings with every flux equal the given signs, if the
// sign pattern is a group character. Index i of `signs` is Flux::all()[i].
std::optional<Charge> charge_from_signs(const std::array<int, 8>& signs);

}  // namespace colorgates
