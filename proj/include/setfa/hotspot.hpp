#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "setfa/netlist.hpp"

namespace setfa {

// Classification of one fault combination.
struct HotspotRecord {
    std::uint32_t combo_id = 0;
    std::vector<WireId> wires;
    std::vector<SetFault> polarities;
    std::uint16_t missing_mask = 0;
    int missing_count = 0;
    // |{d : missing ^ d = missing}| for nonempty missing sets; 16 for
    // combinations that leave the table surjective (unusable).
    int survivors_per_nibble = 16;
    double residual_keyspace_log2 = 0.0;
    bool usable = false;

    FaultMap fault_map() const;
};

// {d in [0,15] : missing ^ d = missing}, as a bitmask of deltas. Always
// contains 0; its size is a power of two.
std::uint16_t stabilizer(std::uint16_t missing_mask);

// Every wire subset of size <= max_order with every SET polarity
// assignment, in lexicographic order (smaller subsets first, then wire
// ids, then polarities with SET0 before SET1).
std::vector<HotspotRecord> enumerate_hotspots(const Netlist& n, int max_order);

enum class SelectPolicy { MinMissingNonzero, MinResidual };

// MinResidual picks a record with survivors_per_nibble = 1 and minimal
// missing_count >= 1, ties broken by enumeration order.
const HotspotRecord& select_fault_combination(
    const std::vector<HotspotRecord>& records, SelectPolicy policy);
const HotspotRecord& select_fault_combination(
    const std::vector<HotspotRecord>& records, const FaultMap& explicit_map);

std::string hotspots_csv_header();
std::string hotspot_csv_row(const HotspotRecord& r);

// Count of records per missing_count value, indices 0..16.
std::array<int, 17> missing_count_histogram(const std::vector<HotspotRecord>& records);

}  // namespace setfa
