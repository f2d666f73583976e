#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "setfa/spongent.hpp"

namespace setfa {

using WireId = std::uint16_t;

enum class GateOp : std::uint8_t { Input, Not, And, Or, Xor, Xnor };

enum class SetFault : std::uint8_t { Set0 = 0, Set1 = 1 };

struct Gate {
    GateOp op;
    WireId a = 0;
    WireId b = 0;

    int arity() const {
        switch (op) {
            case GateOp::Input: return 0;
            case GateOp::Not: return 1;
            default: return 2;
        }
    }
};

// Partial assignment of stuck-at faults to wires; at most one per wire.
class FaultMap {
  public:
    void assign(WireId w, SetFault f);
    bool empty() const { return faults_.empty(); }
    std::size_t size() const { return faults_.size(); }
    const std::map<WireId, SetFault>& assignments() const { return faults_; }

    // Parses "w12=0,w30=1"; wire ids validated against [0, n_wires).
    static FaultMap parse(const std::string& spec, std::size_t n_wires);
    std::string to_string() const;

  private:
    std::map<WireId, SetFault> faults_;
};

// Gate-level combinational circuit with 4 inputs (X0..X3, X0 = MSB) and
// 4 designated outputs (Y0..Y3, Y0 = MSB). Gates are stored in
// topological order; inputs are wires 0..3.
struct Netlist {
    std::vector<Gate> gates;
    std::array<WireId, 4> outputs{};

    std::size_t n_wires() const { return gates.size(); }

    // Evaluates input nibble x under the fault map: after each wire's
    // value is computed it is overridden by its stuck-at fault, so every
    // consumer of a faulted shared wire sees the forced value.
    int eval(int x, const FaultMap& f = {}) const;

    // One wire per line: "w<id> = <OP>(<args>)", then "output Y<k> = w<id>".
    std::string dump() const;
};

// Fixed gate decomposition of the Spongent Sbox Boolean equations,
// 4 inputs + 49 gates = 53 wires. The Y3 output carries a final
// inversion; without it the equation disagrees with the Sbox table.
const Netlist& canonical_netlist();

SboxTable faulty_truth_table(const Netlist& n, const FaultMap& f);

// Bitmask over [0,15] of values absent from the table's image.
std::uint16_t missing_values(const SboxTable& t);

std::vector<int> mask_to_values(std::uint16_t mask);

}  // namespace setfa
