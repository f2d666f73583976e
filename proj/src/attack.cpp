#include "setfa/attack.hpp"

#include <atomic>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace setfa {

int NibbleCandidates::survivors(int s) const { return std::popcount(masks[s]); }

bool NibbleCandidates::all_singletons() const {
    for (auto m : masks)
        if (std::popcount(m) != 1) return false;
    return true;
}

std::array<int, 40> NibbleCandidates::survivor_counts() const {
    std::array<int, 40> c{};
    for (int s = 0; s < 40; ++s) c[s] = survivors(s);
    return c;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

State160 faulty_encrypt_block1(const Key& k, const Nonce& n, const State160& m1,
                               const SboxTable& faulty, FaultScope scope) {
    State160 kp = phi2(permute(expand_key(k)));  // mask path stays fault-free
    State160 inner = expand_nonce(n) ^ kp;
    State160 pout = scope == FaultScope::AllRounds
                        ? permute(inner, faulty)
                        : permute_mixed(inner, spongent_sbox(), faulty);
    return m1 ^ pout ^ kp;
}

namespace {

// Bit positions of Sbox-output nibble s after the final pLayer, MSB first.
std::array<int, 4> nibble_positions(int s) {
    return {p160(4 * s + 3), p160(4 * s + 2), p160(4 * s + 1), p160(4 * s)};
}

int read_nibble_at(const State160& st, int s) {
    auto pos = nibble_positions(s);
    return (st.bit(pos[0]) << 3) | (st.bit(pos[1]) << 2) |
           (st.bit(pos[2]) << 1) | st.bit(pos[3]);
}

}  // namespace

int extract_candidate_nibble(const State160& i1, int s, int kappa) {
    if (s < 0 || s >= 40 || kappa < 0 || kappa > 15)
        throw std::invalid_argument("extract_candidate_nibble: index out of range");
    return read_nibble_at(i1, s) ^ kappa;
}

int expanded_key_nibble(const State160& kp, int s) { return read_nibble_at(kp, s); }

void eliminate(NibbleCandidates& cand, const State160& i1,
               std::uint16_t missing_mask) {
    if (missing_mask == 0)
        throw std::invalid_argument("eliminate: empty missing set");
    for (int s = 0; s < 40; ++s) {
        int base = read_nibble_at(i1, s);
        // kappa maps to missing output m iff kappa == base ^ m
        std::uint16_t removed = 0;
        for (int m = 0; m < 16; ++m)
            if (missing_mask & (1u << m)) removed |= 1u << (base ^ m);
        std::uint16_t next = cand.masks[s] & static_cast<std::uint16_t>(~removed);
        if (next == 0)
            throw std::runtime_error(
                "eliminate: candidate set for nibble " + std::to_string(s) +
                " emptied; missing set or fault scope is inconsistent");
        cand.masks[s] = next;
    }
}

State160 recover_expanded_key(const NibbleCandidates& cand) {
    State160 kp;
    for (int s = 0; s < 40; ++s) {
        if (cand.survivors(s) != 1) {
            std::ostringstream os;
            os << "recover_expanded_key: not converged, survivors:";
            for (int i = 0; i < 40; ++i) os << ' ' << cand.survivors(i);
            throw std::runtime_error(os.str());
        }
        int kappa = std::countr_zero(cand.masks[s]);
        auto pos = nibble_positions(s);
        kp.set_bit(pos[0], (kappa >> 3) & 1);
        kp.set_bit(pos[1], (kappa >> 2) & 1);
        kp.set_bit(pos[2], (kappa >> 1) & 1);
        kp.set_bit(pos[3], kappa & 1);
    }
    return kp;
}

Key recover_master_key(const State160& expanded) {
    static const Bin160Map phi2_inv = phi2_matrix().inverse();
    State160 pre_mask = phi2_inv.apply(expanded);
    State160 w = permute_inv(pre_mask);
    for (int i = kKeyBytes; i < kBlockBytes; ++i)
        if (w.octets[i] != 0)
            throw std::runtime_error(
                "recover_master_key: inversion sanity failed, padding nonzero");
    Key k;
    std::copy_n(w.octets.begin(), kKeyBytes, k.begin());
    return k;
}

TrialResult run_trial(const AttackConfig& cfg, const Netlist& netlist) {
    if (cfg.max_queries < 1)
        throw std::invalid_argument("run_trial: max_queries must be >= 1");
    std::mt19937_64 rng(splitmix64(cfg.rng_seed));
    auto rand_bytes = [&rng](std::uint8_t* p, int n) {
        for (int i = 0; i < n; ++i)
            p[i] = static_cast<std::uint8_t>(rng() & 0xFF);
    };

    TrialResult res;
    Key key;
    rand_bytes(key.data(), kKeyBytes);
    State160 m1;
    if (cfg.attacker_model == AttackerModel::Kpa)
        rand_bytes(m1.octets.data(), kBlockBytes);

    SboxTable faulty = faulty_truth_table(netlist, cfg.fault_map);
    std::uint16_t missing = missing_values(faulty);

    NibbleCandidates cand;
    if (missing == 0) {
        res.queries_used = cfg.max_queries;
        res.survivors_final = cand.survivor_counts();
        res.diagnostic = "fault map leaves the Sbox surjective; nothing to eliminate";
        return res;
    }

    State160 true_kp = phi2(permute(expand_key(key)));
    bool converged = false;
    for (int q = 1; q <= cfg.max_queries; ++q) {
        Nonce nonce;
        rand_bytes(nonce.data(), kNonceBytes);
        State160 c1 = faulty_encrypt_block1(key, nonce, m1, faulty,
                                            cfg.fault_scope);
        State160 i1 = c1 ^ m1;
        res.queries_used = q;
        try {
            eliminate(cand, i1, missing);
        } catch (const std::exception& e) {
            res.survivors_final = cand.survivor_counts();
            res.diagnostic = e.what();
            return res;
        }
        for (int s = 0; s < 40; ++s) {
            if (!(cand.masks[s] >> expanded_key_nibble(true_kp, s) & 1)) {
                res.survivors_final = cand.survivor_counts();
                res.diagnostic = "soundness violation: true key nibble eliminated";
                return res;
            }
        }
        if (cand.all_singletons()) {
            converged = true;
            break;
        }
    }
    res.survivors_final = cand.survivor_counts();
    if (!converged) {
        res.diagnostic = "not converged within max_queries";
        return res;
    }

    try {
        State160 kp = recover_expanded_key(cand);
        Key rec = recover_master_key(kp);
        // verification by one fault-free encryption comparison
        Nonce vn;
        rand_bytes(vn.data(), kNonceBytes);
        State160 ref = faulty_encrypt_block1(key, vn, m1, spongent_sbox(),
                                             FaultScope::AllRounds);
        State160 got = faulty_encrypt_block1(rec, vn, m1, spongent_sbox(),
                                             FaultScope::AllRounds);
        if (!(ref == got)) {
            res.diagnostic = "verification encryption mismatch";
            return res;
        }
        res.recovered_key = rec;
        res.success = true;
    } catch (const std::exception& e) {
        res.diagnostic = e.what();
    }
    return res;
}

double CampaignReport::success_rate() const {
    if (trials.empty()) return 0.0;
    int n = 0;
    for (const auto& t : trials) n += t.success ? 1 : 0;
    return double(n) / double(trials.size());
}

std::string CampaignReport::campaign_csv() const {
    std::ostringstream os;
    os << "trial,sub_seed,success,queries_used,survivors_max\n";
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const auto& t = trials[i];
        int smax = 0;
        for (int v : t.survivors_final) smax = std::max(smax, v);
        os << i << ',' << sub_seeds[i] << ',' << (t.success ? 1 : 0) << ','
           << t.queries_used << ',' << smax << '\n';
    }
    return os.str();
}

std::string CampaignReport::histogram_csv() const {
    std::ostringstream os;
    os << "bucket_upper_bound,success_count\n";
    for (std::size_t b = 0; b < histogram.size(); ++b)
        os << (b + 1) * bucket_width << ',' << histogram[b] << '\n';
    return os.str();
}

CampaignReport campaign(const AttackConfig& cfg, const Netlist& netlist,
                        int n_trials, int bucket_width, int n_threads) {
    if (n_trials < 1)
        throw std::invalid_argument("campaign: n_trials must be >= 1");
    if (bucket_width < 1)
        throw std::invalid_argument("campaign: bucket_width must be >= 1");

    CampaignReport rep;
    rep.bucket_width = bucket_width;
    rep.max_queries = cfg.max_queries;
    rep.trials.resize(n_trials);
    rep.sub_seeds.resize(n_trials);
    for (int t = 0; t < n_trials; ++t)
        rep.sub_seeds[t] = splitmix64(cfg.rng_seed ^ std::uint64_t(t));

    if (n_threads <= 0)
        n_threads = std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min(n_threads, n_trials);

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int t = next.fetch_add(1);
            if (t >= n_trials) return;
            AttackConfig tcfg = cfg;
            tcfg.rng_seed = rep.sub_seeds[t];
            rep.trials[t] = run_trial(tcfg, netlist);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < n_threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    rep.histogram.assign((cfg.max_queries + bucket_width - 1) / bucket_width, 0);
    for (const auto& t : rep.trials)
        if (t.success) ++rep.histogram[(t.queries_used - 1) / bucket_width];
    return rep;
}

}  // namespace setfa
