#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "setfa/dumbo.hpp"
#include "setfa/netlist.hpp"

namespace setfa {

enum class FaultScope { AllRounds, LastRoundOnly };
enum class AttackerModel { Kpa, Cpa };

struct AttackConfig {
    FaultMap fault_map;
    FaultScope fault_scope = FaultScope::AllRounds;
    int max_queries = 250;
    AttackerModel attacker_model = AttackerModel::Kpa;
    std::uint64_t rng_seed = 0;
};

// Per nibble position s, the bitmask of still-viable 4-bit guesses for
// the expanded-key bits at {P160(4s+3),...,P160(4s)}.
struct NibbleCandidates {
    std::array<std::uint16_t, 40> masks;

    NibbleCandidates() { masks.fill(0xFFFF); }

    int survivors(int s) const;
    bool all_singletons() const;
    std::array<int, 40> survivor_counts() const;
};

struct TrialResult {
    bool success = false;
    int queries_used = 0;
    std::optional<Key> recovered_key;
    std::array<int, 40> survivors_final{};
    std::string diagnostic;
};

struct CampaignReport {
    std::vector<TrialResult> trials;
    std::vector<std::uint64_t> sub_seeds;
    int bucket_width = 20;
    int max_queries = 250;
    // success counts per bucket; bucket b covers queries in
    // (b*width, (b+1)*width].
    std::vector<int> histogram;

    double success_rate() const;
    std::string campaign_csv() const;
    std::string histogram_csv() const;
};

// splitmix64; used to derive per-trial sub-seeds as split(seed ^ index).
std::uint64_t splitmix64(std::uint64_t x);

// First-branch faulty encryption oracle. The mask path is fault-free;
// the ciphertext-path permutation uses the faulty Sbox table, either in
// every round or only in round 80.
State160 faulty_encrypt_block1(const Key& k, const Nonce& n, const State160& m1,
                               const SboxTable& faulty, FaultScope scope);

// Hypothesized round-80 Sbox output at position s given expanded-key
// guess kappa for the bits of I1 at {P160(4s+3)..P160(4s)}.
int extract_candidate_nibble(const State160& i1, int s, int kappa);

// Reads the true expanded-key nibble for position s (test/soundness use).
int expanded_key_nibble(const State160& kp, int s);

// Removes every guess whose hypothesized Sbox output lies in the missing
// set. Throws if a candidate set empties (model inconsistency).
void eliminate(NibbleCandidates& cand, const State160& i1,
               std::uint16_t missing_mask);

// Assembles K' from singleton candidate sets; throws "not converged"
// listing survivor counts otherwise.
State160 recover_expanded_key(const NibbleCandidates& cand);

// K' -> K: invert phi2 as a GF(2) matrix, invert the permutation, check
// the 32 zero padding bits.
Key recover_master_key(const State160& expanded);

TrialResult run_trial(const AttackConfig& cfg, const Netlist& netlist);

CampaignReport campaign(const AttackConfig& cfg, const Netlist& netlist,
                        int n_trials, int bucket_width = 20, int n_threads = 0);

}  // namespace setfa
