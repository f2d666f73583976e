#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "setfa/spongent.hpp"

using namespace setfa;

namespace {

State160 random_state(std::mt19937_64& rng) {
    State160 s;
    for (auto& b : s.octets) b = static_cast<std::uint8_t>(rng());
    return s;
}

}  // namespace

TEST_CASE("state bit/nibble round trip") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) {
        State160 s = random_state(rng);
        State160 t;
        for (int i = 0; i < 40; ++i) t.set_nibble(i, s.nibble(i));
        CHECK(t == s);
        for (int j = 0; j < 160; ++j) CHECK(s.bit(j) == ((s.nibble(j / 4) >> (j % 4)) & 1));
    }
}

TEST_CASE("hex round trip") {
    std::mt19937_64 rng(8);
    State160 s = random_state(rng);
    CHECK(state_from_hex(to_hex(s)) == s);
    CHECK(to_hex(State160{}) == std::string(40, '0'));
    CHECK_THROWS_AS(state_from_hex("abc"), std::invalid_argument);
}

TEST_CASE("icounter single step") {
    CHECK(icounter_next(0b1000101) == 0b0001011);
    CHECK_THROWS_AS(icounter_next(0), std::invalid_argument);
}

TEST_CASE("icounter has period 127 and avoids zero") {
    for (int start = 1; start < 128; ++start) {
        std::uint8_t s = static_cast<std::uint8_t>(start);
        std::set<std::uint8_t> seen;
        for (int i = 0; i < 127; ++i) {
            CHECK(s != 0);
            seen.insert(s);
            s = icounter_next(s);
        }
        CHECK(s == start);
        CHECK(seen.size() == 127);
    }
}

TEST_CASE("add_round_constant places counter and reversal") {
    State160 r = add_round_constant(State160{}, 0b1000101);
    std::set<int> expect = {0, 2, 6, 153, 157, 159};
    for (int j = 0; j < 160; ++j) CHECK(r.bit(j) == (expect.count(j) ? 1 : 0));
}

TEST_CASE("add_round_constant is an involution and touches only the ends") {
    std::mt19937_64 rng(9);
    State160 x = random_state(rng);
    State160 once = add_round_constant(x, 0x5B);
    CHECK(add_round_constant(once, 0x5B) == x);
    for (int j = 7; j <= 152; ++j) CHECK(once.bit(j) == x.bit(j));
}

TEST_CASE("sbox_layer basics") {
    State160 zero;
    State160 s = sbox_layer(zero, spongent_sbox());
    for (int i = 0; i < 40; ++i) CHECK(s.nibble(i) == 0xE);

    State160 ones;
    ones.octets.fill(0xFF);
    s = sbox_layer(ones, spongent_sbox());
    for (int i = 0; i < 40; ++i) CHECK(s.nibble(i) == 0x6);

    std::mt19937_64 rng(10);
    State160 x = random_state(rng);
    CHECK(sbox_layer(x, identity_sbox()) == x);
}

TEST_CASE("p_layer single-bit examples") {
    State160 b1;
    b1.set_bit(1, 1);
    CHECK(p_layer(b1).bit(40) == 1);

    State160 b159;
    b159.set_bit(159, 1);
    CHECK(p_layer(b159).bit(159) == 1);

    State160 b4;
    b4.set_bit(4, 1);
    CHECK(p_layer(b4).bit(1) == 1);
}

TEST_CASE("p_layer inverse law over all single-bit states") {
    for (int j = 0; j < 160; ++j) {
        CHECK(p160_inv(p160(j)) == j);
        if (j < 159) CHECK(p160_inv(j) == (4 * j) % 159);
        State160 s;
        s.set_bit(j, 1);
        CHECK(p_layer_inv(p_layer(s)) == s);
    }
    CHECK(p160_inv(159) == 159);
}

TEST_CASE("permute_inv inverts permute") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 1000; ++it) {
        State160 x = random_state(rng);
        CHECK(permute_inv(permute(x)) == x);
    }
    CHECK(permute_inv(permute(State160{})) == State160{});
}

TEST_CASE("fault-free permute keeps distinct inputs distinct") {
    std::mt19937_64 rng(12);
    State160 a = random_state(rng);
    State160 b = random_state(rng);
    REQUIRE(!(a == b));
    CHECK(!(permute(a) == permute(b)));
}

TEST_CASE("permute_inv rejects non-bijective tables") {
    SboxTable t = spongent_sbox();
    t.entries[3] = 0xE;  // collides with S(0)
    CHECK(!t.is_bijective());
    CHECK_THROWS(permute_inv(State160{}, t));
}

TEST_CASE("faulty permute output nibbles stay in the table image") {
    SboxTable t = spongent_sbox();
    t.entries[3] = 0xE;
    std::uint16_t image = t.image_mask();
    std::mt19937_64 rng(13);
    for (int it = 0; it < 100; ++it) {
        State160 out = permute(random_state(rng), t);
        State160 pre = p_layer_inv(out);
        for (int i = 0; i < 40; ++i) CHECK(((image >> pre.nibble(i)) & 1) != 0);
    }
}

TEST_CASE("no output collisions over many random inputs") {
    std::mt19937_64 rng(14);
    std::set<std::string> seen;
    for (int it = 0; it < 10000; ++it) {
        auto h = to_hex(permute(random_state(rng)));
        CHECK(seen.insert(h).second);
    }
}
