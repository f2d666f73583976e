#include "setfa/spongent.hpp"

#include <stdexcept>

namespace setfa {

bool SboxTable::is_bijective() const { return image_mask() == 0xFFFF; }

std::uint16_t SboxTable::image_mask() const {
    std::uint16_t m = 0;
    for (int x = 0; x < 16; ++x) m |= static_cast<std::uint16_t>(1u << entries[x]);
    return m;
}

SboxTable SboxTable::inverse() const {
    if (!is_bijective())
        throw std::invalid_argument("SboxTable::inverse: table is not a bijection");
    SboxTable inv;
    for (int x = 0; x < 16; ++x) inv.entries[entries[x]] = static_cast<std::uint8_t>(x);
    return inv;
}

const SboxTable& spongent_sbox() {
    static const SboxTable t{{0xE, 0xD, 0xB, 0x0, 0x2, 0x1, 0x4, 0xF,
                              0x7, 0xA, 0x8, 0x5, 0x9, 0xC, 0x3, 0x6}};
    return t;
}

const SboxTable& identity_sbox() {
    static const SboxTable t{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}};
    return t;
}

std::uint8_t icounter_next(std::uint8_t s) {
    if (s == 0) throw std::invalid_argument("icounter_next: zero LFSR state");
    std::uint8_t fb = ((s >> 6) ^ (s >> 5)) & 1;
    return static_cast<std::uint8_t>(((s << 1) | fb) & 0x7F);
}

State160 add_round_constant(const State160& x, std::uint8_t counter) {
    State160 r = x;
    for (int k = 0; k < 7; ++k) {
        int b = (counter >> k) & 1;
        if (b) {
            r.set_bit(k, r.bit(k) ^ 1);
            r.set_bit(159 - k, r.bit(159 - k) ^ 1);
        }
    }
    return r;
}

State160 sbox_layer(const State160& x, const SboxTable& t) {
    State160 r;
    for (int i = 0; i < 20; ++i) {
        std::uint8_t b = x.octets[i];
        r.octets[i] = static_cast<std::uint8_t>(t.entries[b & 0xF] |
                                                (t.entries[b >> 4] << 4));
    }
    return r;
}

namespace {

struct PTables {
    std::array<std::uint8_t, 160> fwd{};  // fwd[j] = destination of bit j
    std::array<std::uint8_t, 160> inv{};
    PTables() {
        for (int j = 0; j < 159; ++j) fwd[j] = static_cast<std::uint8_t>((40 * j) % 159);
        fwd[159] = 159;
        for (int j = 0; j < 160; ++j) inv[fwd[j]] = static_cast<std::uint8_t>(j);
    }
};

const PTables& ptables() {
    static const PTables t;
    return t;
}

State160 move_bits(const State160& x, const std::array<std::uint8_t, 160>& dst) {
    State160 r;
    for (int j = 0; j < 160; ++j)
        if (x.bit(j)) r.set_bit(dst[j], 1);
    return r;
}

}  // namespace

int p160(int j) { return ptables().fwd[j]; }
int p160_inv(int j) { return ptables().inv[j]; }

State160 p_layer(const State160& x) { return move_bits(x, ptables().fwd); }
State160 p_layer_inv(const State160& x) { return move_bits(x, ptables().inv); }

std::array<std::uint8_t, kRounds> round_constants() {
    std::array<std::uint8_t, kRounds> rc{};
    std::uint8_t c = kICounterSeed;
    for (int r = 0; r < kRounds; ++r) {
        rc[r] = c;
        c = icounter_next(c);
    }
    return rc;
}

State160 permute(const State160& x, const SboxTable& t) {
    return permute_mixed(x, t, t);
}

State160 permute_mixed(const State160& x, const SboxTable& t,
                       const SboxTable& last) {
    static const auto rc = round_constants();
    State160 s = x;
    for (int r = 0; r < kRounds; ++r) {
        s = add_round_constant(s, rc[r]);
        s = sbox_layer(s, r == kRounds - 1 ? last : t);
        s = p_layer(s);
    }
    return s;
}

State160 permute_inv(const State160& x, const SboxTable& t) {
    if (!t.is_bijective())
        throw std::invalid_argument("permute_inv: Sbox table is not invertible");
    static const auto rc = round_constants();
    SboxTable inv = t.inverse();
    State160 s = x;
    for (int r = kRounds - 1; r >= 0; --r) {
        s = p_layer_inv(s);
        s = sbox_layer(s, inv);
        s = add_round_constant(s, rc[r]);
    }
    return s;
}

}  // namespace setfa
