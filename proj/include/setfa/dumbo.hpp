#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "setfa/gf2.hpp"
#include "setfa/spongent.hpp"
#include "setfa/state160.hpp"

namespace setfa {

// Dumbo parameters: 128-bit key, 96-bit nonce, 160-bit block, 64-bit tag.
inline constexpr int kKeyBytes = 16;
inline constexpr int kNonceBytes = 12;
inline constexpr int kBlockBytes = 20;
inline constexpr int kTagBytes = 8;

using Key = std::array<std::uint8_t, kKeyBytes>;
using Nonce = std::array<std::uint8_t, kNonceBytes>;
using Tag = std::array<std::uint8_t, kTagBytes>;
using Bytes = std::vector<std::uint8_t>;

// Word LFSR on the 20-octet state: (x0,...,x19) -> (x1,...,x19, x0<<<3 ^
// (x3 << 7) ^ (x13 >> 7)).
State160 phi1(const State160& s);
// phi2 = phi1 ^ id.
State160 phi2(const State160& s);

// K || 0^32 as a state.
State160 expand_key(const Key& k);
// N || 0^64 as a state.
State160 expand_nonce(const Nonce& n);

// phi2^a ( phi1^b ( P(K || 0^32) ) ), fault-free permutation.
State160 mask(const Key& k, int a, int b);

// GF(2) matrix of phi1, phi2 or phi2 o phi1^b.
Bin160Map phi1_matrix();
Bin160Map phi2_matrix();
Bin160Map phi2_phi1_matrix(int b);

struct Ciphertext {
    Bytes c;
    Tag tag{};
};

Ciphertext encrypt(const Key& k, const Nonce& n, const Bytes& ad, const Bytes& m);

// Returns the message on tag match, nullopt for the failure symbol.
std::optional<Bytes> decrypt(const Key& k, const Nonce& n, const Bytes& ad,
                             const Bytes& c, const Tag& tag);

}  // namespace setfa
