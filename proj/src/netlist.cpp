#include "setfa/netlist.hpp"

#include <sstream>
#include <stdexcept>

namespace setfa {

void FaultMap::assign(WireId w, SetFault f) {
    auto [it, inserted] = faults_.emplace(w, f);
    if (!inserted)
        throw std::invalid_argument("FaultMap: wire w" + std::to_string(w) +
                                    " already has a fault assigned");
}

FaultMap FaultMap::parse(const std::string& spec, std::size_t n_wires) {
    FaultMap fm;
    if (spec.empty()) return fm;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (item.size() < 4 || item[0] != 'w' || eq == std::string::npos)
            throw std::invalid_argument("FaultMap: bad fault spec '" + item +
                                        "', expected w<id>=<0|1>");
        unsigned long id = std::stoul(item.substr(1, eq - 1));
        std::string pol = item.substr(eq + 1);
        if (id >= n_wires)
            throw std::invalid_argument("FaultMap: unknown wire id w" +
                                        std::to_string(id));
        if (pol != "0" && pol != "1")
            throw std::invalid_argument("FaultMap: polarity must be 0 or 1 in '" +
                                        item + "'");
        fm.assign(static_cast<WireId>(id),
                  pol == "0" ? SetFault::Set0 : SetFault::Set1);
    }
    return fm;
}

std::string FaultMap::to_string() const {
    std::string out;
    for (const auto& [w, f] : faults_) {
        if (!out.empty()) out += ',';
        out += 'w' + std::to_string(w) + '=' +
               (f == SetFault::Set0 ? '0' : '1');
    }
    return out;
}

int Netlist::eval(int x, const FaultMap& f) const {
    if (x < 0 || x > 15)
        throw std::invalid_argument("Netlist::eval: input nibble out of range");
    std::vector<std::uint8_t> val(gates.size());
    const auto& faults = f.assignments();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        std::uint8_t v = 0;
        switch (g.op) {
            case GateOp::Input: v = static_cast<std::uint8_t>((x >> (3 - i)) & 1); break;
            case GateOp::Not: v = val[g.a] ^ 1; break;
            case GateOp::And: v = val[g.a] & val[g.b]; break;
            case GateOp::Or: v = val[g.a] | val[g.b]; break;
            case GateOp::Xor: v = val[g.a] ^ val[g.b]; break;
            case GateOp::Xnor: v = (val[g.a] ^ val[g.b]) ^ 1; break;
        }
        if (auto it = faults.find(static_cast<WireId>(i)); it != faults.end())
            v = static_cast<std::uint8_t>(it->second);
        val[i] = v;
    }
    return (val[outputs[0]] << 3) | (val[outputs[1]] << 2) |
           (val[outputs[2]] << 1) | val[outputs[3]];
}

namespace {

const char* op_name(GateOp op) {
    switch (op) {
        case GateOp::Input: return "INPUT";
        case GateOp::Not: return "NOT";
        case GateOp::And: return "AND";
        case GateOp::Or: return "OR";
        case GateOp::Xor: return "XOR";
        case GateOp::Xnor: return "XNOR";
    }
    return "?";
}

class Builder {
  public:
    WireId input() { return push({GateOp::Input}); }
    WireId nt(WireId a) { return push({GateOp::Not, a}); }
    WireId an(WireId a, WireId b) { return push({GateOp::And, a, b}); }
    WireId orr(WireId a, WireId b) { return push({GateOp::Or, a, b}); }
    WireId xr(WireId a, WireId b) { return push({GateOp::Xor, a, b}); }
    WireId xn(WireId a, WireId b) { return push({GateOp::Xnor, a, b}); }

    std::vector<Gate> gates;

  private:
    WireId push(Gate g) {
        gates.push_back(g);
        return static_cast<WireId>(gates.size() - 1);
    }
};

Netlist build_canonical() {
    Builder b;
    WireId x0 = b.input(), x1 = b.input(), x2 = b.input(), x3 = b.input();

    // Y0 = ~((X0^X1)|X2) | ~(X1|(X2 xnor X3)) | ~(~(~X0&X1) | ~(X2&X3))
    WireId y0;
    {
        WireId t1 = b.nt(b.orr(b.xr(x0, x1), x2));
        WireId t2 = b.nt(b.orr(x1, b.xn(x2, x3)));
        WireId t3 = b.nt(b.orr(b.nt(b.an(b.nt(x0), x1)), b.nt(b.an(x2, x3))));
        y0 = b.orr(b.orr(t1, t2), t3);
    }

    // Y1 = ~(X0|(X1^X2)) | ~(X1|(X2|X3)) | ~(~(X0&X3) | ~(X1|X2))
    WireId y1;
    {
        WireId t1 = b.nt(b.orr(x0, b.xr(x1, x2)));
        WireId t2 = b.nt(b.orr(x1, b.orr(x2, x3)));
        WireId t3 = b.nt(b.orr(b.nt(b.an(x0, x3)), b.nt(b.orr(x1, x2))));
        y1 = b.orr(b.orr(t1, t2), t3);
    }

    // Y2 = (X0&(X1 xnor X2)) | (X1&(X2&X3)) | (~(X0|X3) & ~(X1&X2))
    WireId y2;
    {
        WireId t1 = b.an(x0, b.xn(x1, x2));
        WireId t2 = b.an(x1, b.an(x2, x3));
        WireId t3 = b.an(b.nt(b.orr(x0, x3)), b.nt(b.an(x1, x2)));
        y2 = b.orr(b.orr(t1, t2), t3);
    }

    // Y3 = ~( ~(~a | c) | (~a & c) ) with a = X0 xnor X3, c = ~X1 & X2;
    // the printed equation lacks the outer inversion and contradicts the
    // Sbox table, so the final NOT is part of the canonical circuit.
    WireId y3;
    {
        WireId a = b.xn(x0, x3);
        WireId na = b.nt(a);
        WireId c = b.an(b.nt(x1), x2);
        WireId term1 = b.nt(b.orr(na, c));
        WireId term2 = b.an(na, c);
        y3 = b.nt(b.orr(term1, term2));
    }

    Netlist n;
    n.gates = std::move(b.gates);
    n.outputs = {y0, y1, y2, y3};
    return n;
}

}  // namespace

const Netlist& canonical_netlist() {
    static const Netlist n = build_canonical();
    return n;
}

std::string Netlist::dump() const {
    std::ostringstream os;
    int n_inputs = 0;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        os << 'w' << i << " = " << op_name(g.op) << '(';
        if (g.op == GateOp::Input)
            os << 'X' << n_inputs++;
        else if (g.arity() == 1)
            os << 'w' << g.a;
        else
            os << 'w' << g.a << ",w" << g.b;
        os << ")\n";
    }
    for (int k = 0; k < 4; ++k)
        os << "output Y" << k << " = w" << outputs[k] << "\n";
    return os.str();
}

SboxTable faulty_truth_table(const Netlist& n, const FaultMap& f) {
    SboxTable t;
    for (int x = 0; x < 16; ++x)
        t.entries[x] = static_cast<std::uint8_t>(n.eval(x, f));
    return t;
}

std::uint16_t missing_values(const SboxTable& t) {
    return static_cast<std::uint16_t>(~t.image_mask());
}

std::vector<int> mask_to_values(std::uint16_t mask) {
    std::vector<int> v;
    for (int i = 0; i < 16; ++i)
        if (mask & (1u << i)) v.push_back(i);
    return v;
}

}  // namespace setfa
