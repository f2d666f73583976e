#pragma once

#include <array>
#include <cstdint>

#include "setfa/state160.hpp"

namespace setfa {

// 16-entry nibble -> nibble mapping. The fault-free Spongent Sbox is a
// bijection; faulty tables extracted from the gate-level model need not be.
struct SboxTable {
    std::array<std::uint8_t, 16> entries{};

    std::uint8_t operator[](int x) const { return entries[x]; }

    bool is_bijective() const;
    // Bitmask over [0,15] of values present in the image.
    std::uint16_t image_mask() const;
    // Inverse table; only valid for bijective tables.
    SboxTable inverse() const;
};

const SboxTable& spongent_sbox();
const SboxTable& identity_sbox();

// 7-bit round-constant LFSR, p(x) = x^7 + x^6 + 1, seed 1000101.
inline constexpr std::uint8_t kICounterSeed = 0b1000101;

// One LFSR step: left shift, feedback b6 ^ b5 into b0. Rejects the
// degenerate all-zero state.
std::uint8_t icounter_next(std::uint8_t s);

// X ^= Rc ^ Rev_Rc with the 7-bit counter in bits 6..0 (b0 at bit 0)
// and its 160-bit reversal in bits 153..159.
State160 add_round_constant(const State160& x, std::uint8_t counter);

State160 sbox_layer(const State160& x, const SboxTable& t);

// Bit j -> 40*j mod 159, bit 159 fixed.
State160 p_layer(const State160& x);
State160 p_layer_inv(const State160& x);

int p160(int j);
int p160_inv(int j);

inline constexpr int kRounds = 80;

// Counter value used by round r (1-based); round 1 uses the seed itself.
std::array<std::uint8_t, kRounds> round_constants();

// 80 rounds of constant addition, Sbox layer, pLayer.
State160 permute(const State160& x, const SboxTable& t = spongent_sbox());

// Same, but round 80 uses `last` instead of `t` (fault confined to the
// final round).
State160 permute_mixed(const State160& x, const SboxTable& t,
                       const SboxTable& last);

// Exact inverse of permute; rejects non-bijective tables.
State160 permute_inv(const State160& x, const SboxTable& t = spongent_sbox());

}  // namespace setfa
