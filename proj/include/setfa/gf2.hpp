#pragma once

#include <bitset>
#include <functional>

#include "setfa/state160.hpp"

namespace setfa {

// 160x160 matrix over GF(2) acting on State160 (bit j of the state is
// coordinate j of the vector).
class Bin160Map {
  public:
    Bin160Map() = default;

    static Bin160Map identity();
    // Column j is f applied to the j-th unit vector.
    static Bin160Map from_function(const std::function<State160(const State160&)>& f);

    State160 apply(const State160& v) const;
    Bin160Map compose(const Bin160Map& rhs) const;  // this * rhs

    // Gaussian elimination over GF(2); throws on a singular matrix.
    Bin160Map inverse() const;
    int rank() const;

    bool operator==(const Bin160Map&) const = default;

  private:
    std::array<std::bitset<160>, 160> rows_{};
};

}  // namespace setfa
