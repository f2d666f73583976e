#include "setfa/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace setfa {

Bin160Map Bin160Map::identity() {
    Bin160Map m;
    for (int i = 0; i < 160; ++i) m.rows_[i].set(i);
    return m;
}

Bin160Map Bin160Map::from_function(
    const std::function<State160(const State160&)>& f) {
    Bin160Map m;
    for (int j = 0; j < 160; ++j) {
        State160 e;
        e.set_bit(j, 1);
        State160 fe = f(e);
        for (int i = 0; i < 160; ++i)
            if (fe.bit(i)) m.rows_[i].set(j);
    }
    return m;
}

State160 Bin160Map::apply(const State160& v) const {
    std::bitset<160> x;
    for (int j = 0; j < 160; ++j)
        if (v.bit(j)) x.set(j);
    State160 out;
    for (int i = 0; i < 160; ++i)
        out.set_bit(i, static_cast<int>((rows_[i] & x).count() & 1));
    return out;
}

Bin160Map Bin160Map::compose(const Bin160Map& rhs) const {
    Bin160Map out;
    for (int i = 0; i < 160; ++i) {
        std::bitset<160> acc;
        for (int k = 0; k < 160; ++k)
            if (rows_[i][k]) acc ^= rhs.rows_[k];
        out.rows_[i] = acc;
    }
    return out;
}

namespace {

// Row-reduce a, mirroring every row operation into b. Returns the rank.
int eliminate(std::array<std::bitset<160>, 160>& a,
              std::array<std::bitset<160>, 160>* b) {
    int rank = 0;
    for (int col = 0; col < 160 && rank < 160; ++col) {
        int pivot = -1;
        for (int r = rank; r < 160; ++r)
            if (a[r][col]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        if (b) std::swap((*b)[rank], (*b)[pivot]);
        for (int r = 0; r < 160; ++r) {
            if (r != rank && a[r][col]) {
                a[r] ^= a[rank];
                if (b) (*b)[r] ^= (*b)[rank];
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Bin160Map Bin160Map::inverse() const {
    std::array<std::bitset<160>, 160> a = rows_;
    Bin160Map inv = identity();
    if (eliminate(a, &inv.rows_) != 160)
        throw std::runtime_error("Bin160Map::inverse: mask layer not invertible");
    return inv;
}

int Bin160Map::rank() const {
    std::array<std::bitset<160>, 160> a = rows_;
    return eliminate(a, nullptr);
}

}  // namespace setfa
