#include "setfa/state160.hpp"

#include <stdexcept>

namespace setfa {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
}

}  // namespace

std::string to_hex(const State160& s) {
    std::string out;
    out.reserve(40);
    for (std::uint8_t b : s.octets) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0xF]);
    }
    return out;
}

State160 state_from_hex(const std::string& hex) {
    if (hex.size() != 40)
        throw std::invalid_argument("state_from_hex: expected 40 hex digits");
    State160 s;
    for (int i = 0; i < 20; ++i)
        s.octets[i] = static_cast<std::uint8_t>((hex_val(hex[2 * i]) << 4) |
                                                hex_val(hex[2 * i + 1]));
    return s;
}

std::string bytes_to_hex(const std::vector<std::uint8_t>& v) {
    std::string out;
    out.reserve(2 * v.size());
    for (std::uint8_t b : v) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0xF]);
    }
    return out;
}

std::vector<std::uint8_t> bytes_from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0)
        throw std::invalid_argument("bytes_from_hex: odd-length hex string");
    std::vector<std::uint8_t> v(hex.size() / 2);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = static_cast<std::uint8_t>((hex_val(hex[2 * i]) << 4) |
                                         hex_val(hex[2 * i + 1]));
    return v;
}

}  // namespace setfa
