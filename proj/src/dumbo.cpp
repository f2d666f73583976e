#include "setfa/dumbo.hpp"

#include <algorithm>
#include <cstring>

namespace setfa {

State160 phi1(const State160& s) {
    State160 r;
    std::uint8_t x0 = s.octets[0];
    std::uint8_t fresh = static_cast<std::uint8_t>(
        ((x0 << 3) | (x0 >> 5)) ^ (s.octets[3] << 7) ^ (s.octets[13] >> 7));
    for (int i = 0; i < 19; ++i) r.octets[i] = s.octets[i + 1];
    r.octets[19] = fresh;
    return r;
}

State160 phi2(const State160& s) { return phi1(s) ^ s; }

State160 expand_key(const Key& k) {
    State160 s;
    std::copy(k.begin(), k.end(), s.octets.begin());
    return s;
}

State160 expand_nonce(const Nonce& n) {
    State160 s;
    std::copy(n.begin(), n.end(), s.octets.begin());
    return s;
}

State160 mask(const Key& k, int a, int b) {
    State160 s = permute(expand_key(k));
    for (int i = 0; i < b; ++i) s = phi1(s);
    for (int i = 0; i < a; ++i) s = phi2(s);
    return s;
}

Bin160Map phi1_matrix() {
    return Bin160Map::from_function([](const State160& s) { return phi1(s); });
}

Bin160Map phi2_matrix() {
    return Bin160Map::from_function([](const State160& s) { return phi2(s); });
}

Bin160Map phi2_phi1_matrix(int b) {
    return Bin160Map::from_function([b](const State160& s) {
        State160 r = s;
        for (int i = 0; i < b; ++i) r = phi1(r);
        return phi2(r);
    });
}

namespace {

// n-bit blocks of data || 1 with zero fill; always at least one block.
std::vector<State160> padded_blocks(const Bytes& prefix, const Bytes& data) {
    Bytes all = prefix;
    all.insert(all.end(), data.begin(), data.end());
    all.push_back(0x01);
    std::size_t n_blocks = (all.size() + kBlockBytes - 1) / kBlockBytes;
    std::vector<State160> out(n_blocks);
    for (std::size_t i = 0; i < all.size(); ++i)
        out[i / kBlockBytes].octets[i % kBlockBytes] = all[i];
    return out;
}

Tag compute_tag(const Key& k, const Nonce& n, const Bytes& ad, const Bytes& c) {
    auto a_blocks = padded_blocks(Bytes(n.begin(), n.end()), ad);
    auto c_blocks = padded_blocks({}, c);

    State160 base = permute(expand_key(k));  // mask(K,0,0)

    State160 t = a_blocks[0];
    State160 lfsr = base;
    for (std::size_t i = 1; i < a_blocks.size(); ++i) {
        lfsr = phi1(lfsr);  // mask(K,0,i)
        t ^= permute(a_blocks[i] ^ lfsr) ^ lfsr;
    }
    lfsr = base;
    for (std::size_t i = 0; i < c_blocks.size(); ++i) {
        State160 m = phi2(phi2(lfsr));  // mask(K,2,i)
        t ^= permute(c_blocks[i] ^ m) ^ m;
        lfsr = phi1(lfsr);
    }
    t = permute(t ^ base) ^ base;

    Tag tag{};
    std::copy_n(t.octets.begin(), kTagBytes, tag.begin());
    return tag;
}

// XOR of message with per-block keystream ceil(permute(N||0 ^ K'_i) ^ K'_i).
Bytes apply_keystream(const Key& k, const Nonce& n, const Bytes& in) {
    Bytes out(in.size());
    State160 nst = expand_nonce(n);
    State160 lfsr = permute(expand_key(k));
    std::size_t n_blocks = (in.size() + kBlockBytes - 1) / kBlockBytes;
    for (std::size_t i = 0; i < n_blocks; ++i) {
        State160 kp = phi2(lfsr);  // mask(K,1,i)
        State160 ks = permute(nst ^ kp) ^ kp;
        std::size_t lo = i * kBlockBytes;
        std::size_t hi = std::min(in.size(), lo + kBlockBytes);
        for (std::size_t j = lo; j < hi; ++j)
            out[j] = in[j] ^ ks.octets[j - lo];
        lfsr = phi1(lfsr);
    }
    return out;
}

}  // namespace

Ciphertext encrypt(const Key& k, const Nonce& n, const Bytes& ad, const Bytes& m) {
    Ciphertext res;
    res.c = apply_keystream(k, n, m);
    res.tag = compute_tag(k, n, ad, res.c);
    return res;
}

std::optional<Bytes> decrypt(const Key& k, const Nonce& n, const Bytes& ad,
                             const Bytes& c, const Tag& tag) {
    if (compute_tag(k, n, ad, c) != tag) return std::nullopt;
    return apply_keystream(k, n, c);
}

}  // namespace setfa
