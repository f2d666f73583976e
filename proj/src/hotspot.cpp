#include "setfa/hotspot.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace setfa {

FaultMap HotspotRecord::fault_map() const {
    FaultMap fm;
    for (std::size_t i = 0; i < wires.size(); ++i)
        fm.assign(wires[i], polarities[i]);
    return fm;
}

std::uint16_t stabilizer(std::uint16_t missing_mask) {
    std::uint16_t stab = 0;
    for (int d = 0; d < 16; ++d) {
        std::uint16_t shifted = 0;
        for (int v = 0; v < 16; ++v)
            if (missing_mask & (1u << v)) shifted |= 1u << (v ^ d);
        if (shifted == missing_mask) stab |= 1u << d;
    }
    return stab;
}

namespace {

HotspotRecord classify(const Netlist& n, std::uint32_t id,
                       std::vector<WireId> wires, std::vector<SetFault> pols) {
    HotspotRecord r;
    r.combo_id = id;
    r.wires = std::move(wires);
    r.polarities = std::move(pols);
    r.missing_mask = missing_values(faulty_truth_table(n, r.fault_map()));
    r.missing_count = std::popcount(r.missing_mask);
    if (r.missing_count > 0) {
        r.survivors_per_nibble = std::popcount(stabilizer(r.missing_mask));
        r.usable = true;
    } else {
        r.survivors_per_nibble = 16;
        r.usable = false;
    }
    r.residual_keyspace_log2 = 40.0 * std::log2(double(r.survivors_per_nibble));
    return r;
}

void combos(const Netlist& n, int order, std::vector<HotspotRecord>& out) {
    const int nw = static_cast<int>(n.n_wires());
    std::vector<int> idx(order);
    for (int i = 0; i < order; ++i) idx[i] = i;
    while (true) {
        for (unsigned p = 0; p < (1u << order); ++p) {
            std::vector<WireId> ws(order);
            std::vector<SetFault> pols(order);
            for (int i = 0; i < order; ++i) {
                ws[i] = static_cast<WireId>(idx[i]);
                // SET0 before SET1, first wire's polarity most significant
                pols[i] = (p >> (order - 1 - i)) & 1 ? SetFault::Set1
                                                     : SetFault::Set0;
            }
            out.push_back(classify(n, static_cast<std::uint32_t>(out.size()),
                                   std::move(ws), std::move(pols)));
        }
        int i = order - 1;
        while (i >= 0 && idx[i] == nw - order + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < order; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<HotspotRecord> enumerate_hotspots(const Netlist& n, int max_order) {
    if (max_order < 1 || max_order > 3)
        throw std::invalid_argument("enumerate_hotspots: max_order must be in [1,3]");
    std::vector<HotspotRecord> out;
    for (int k = 1; k <= max_order; ++k) combos(n, k, out);
    return out;
}

const HotspotRecord& select_fault_combination(
    const std::vector<HotspotRecord>& records, SelectPolicy policy) {
    if (records.empty())
        throw std::invalid_argument("select_fault_combination: no records");
    const HotspotRecord* best = nullptr;
    for (const auto& r : records) {
        if (!r.usable) continue;
        if (policy == SelectPolicy::MinResidual && r.survivors_per_nibble != 1)
            continue;
        if (!best || r.missing_count < best->missing_count) best = &r;
    }
    if (!best)
        throw std::runtime_error("select_fault_combination: no usable hotspot");
    return *best;
}

const HotspotRecord& select_fault_combination(
    const std::vector<HotspotRecord>& records, const FaultMap& explicit_map) {
    for (const auto& r : records)
        if (r.fault_map().assignments() == explicit_map.assignments()) return r;
    throw std::runtime_error(
        "select_fault_combination: explicit fault map not in enumeration");
}

std::string hotspots_csv_header() {
    return "combo_id,wires,polarities,missing_count,missing_values_hex,"
           "survivors_per_nibble,residual_keyspace_log2,usable";
}

std::string hotspot_csv_row(const HotspotRecord& r) {
    std::ostringstream os;
    os << r.combo_id << ',';
    for (std::size_t i = 0; i < r.wires.size(); ++i)
        os << (i ? ";" : "") << 'w' << r.wires[i];
    os << ',';
    for (std::size_t i = 0; i < r.polarities.size(); ++i)
        os << (i ? ";" : "") << (r.polarities[i] == SetFault::Set0 ? '0' : '1');
    os << ',' << r.missing_count << ',';
    for (int v : mask_to_values(r.missing_mask)) os << std::hex << v << std::dec;
    os << ',' << r.survivors_per_nibble << ',' << r.residual_keyspace_log2
       << ',' << (r.usable ? 1 : 0);
    return os.str();
}

std::array<int, 17> missing_count_histogram(
    const std::vector<HotspotRecord>& records) {
    std::array<int, 17> h{};
    for (const auto& r : records) ++h[r.missing_count];
    return h;
}

}  // namespace setfa
