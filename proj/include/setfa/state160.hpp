#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace setfa {

// 160-bit Spongent/Dumbo state. Bit j of the state is bit (j % 8) of
// octet j/8. Nibble i covers bits 4i..4i+3, with bit 4i+3 the nibble MSB.
struct State160 {
    std::array<std::uint8_t, 20> octets{};

    int bit(int j) const { return (octets[j >> 3] >> (j & 7)) & 1; }

    void set_bit(int j, int v) {
        std::uint8_t m = static_cast<std::uint8_t>(1u << (j & 7));
        if (v)
            octets[j >> 3] |= m;
        else
            octets[j >> 3] &= static_cast<std::uint8_t>(~m);
    }

    // Nibble value with bit 4i+3 as MSB.
    int nibble(int i) const {
        int v = (octets[i >> 1] >> ((i & 1) * 4)) & 0xF;
        return v;
    }

    void set_nibble(int i, int v) {
        int sh = (i & 1) * 4;
        octets[i >> 1] = static_cast<std::uint8_t>(
            (octets[i >> 1] & ~(0xF << sh)) | ((v & 0xF) << sh));
    }

    State160 operator^(const State160& o) const {
        State160 r;
        for (int i = 0; i < 20; ++i) r.octets[i] = octets[i] ^ o.octets[i];
        return r;
    }

    State160& operator^=(const State160& o) {
        for (int i = 0; i < 20; ++i) octets[i] ^= o.octets[i];
        return *this;
    }

    bool operator==(const State160&) const = default;
};

// 40 lowercase hex digits, octet 0 first, high nibble of each octet first.
std::string to_hex(const State160& s);
State160 state_from_hex(const std::string& hex);

std::string bytes_to_hex(const std::vector<std::uint8_t>& v);
std::vector<std::uint8_t> bytes_from_hex(const std::string& hex);

}  // namespace setfa
