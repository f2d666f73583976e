#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "setfa/attack.hpp"
#include "setfa/dumbo.hpp"
#include "setfa/hotspot.hpp"
#include "setfa/netlist.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace setfa;

namespace {

constexpr const char* kVersion = "1.0.0";

// Exit codes: 0 ok, 1 usage, 2 authentication failure, 3 non-convergence.
constexpr int kExitUsage = 1;
constexpr int kExitAuthFail = 2;
constexpr int kExitNoConverge = 3;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

std::string netlist_fingerprint() {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a(canonical_netlist().dump())));
    return buf;
}

void write_manifest(const fs::path& dir, const std::string& command,
                    const json& flags, std::uint64_t seed) {
    json m;
    m["command"] = command;
    m["flags"] = flags;
    m["rng_seed"] = seed;
    m["netlist_fingerprint"] = netlist_fingerprint();
    m["version"] = kVersion;
    std::ofstream out(dir / "manifest.json");
    out << m.dump(2) << '\n';
}

Key parse_key(const std::string& hex) {
    auto v = bytes_from_hex(hex);
    if (v.size() != kKeyBytes)
        throw std::invalid_argument("--key must be 32 hex digits");
    Key k;
    std::copy(v.begin(), v.end(), k.begin());
    return k;
}

Nonce parse_nonce(const std::string& hex) {
    auto v = bytes_from_hex(hex);
    if (v.size() != kNonceBytes)
        throw std::invalid_argument("--nonce must be 24 hex digits");
    Nonce n;
    std::copy(v.begin(), v.end(), n.begin());
    return n;
}

Tag parse_tag(const std::string& hex) {
    auto v = bytes_from_hex(hex);
    if (v.size() != kTagBytes)
        throw std::invalid_argument("--tag must be 16 hex digits");
    Tag t;
    std::copy(v.begin(), v.end(), t.begin());
    return t;
}

FaultScope parse_scope(const std::string& s) {
    if (s == "all") return FaultScope::AllRounds;
    if (s == "last") return FaultScope::LastRoundOnly;
    throw std::invalid_argument("--scope must be 'all' or 'last'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dumbo (Elephant AEAD) laboratory: gate-level Sbox fault "
                 "injection, hot-spot search and statistical key recovery"};
    app.require_subcommand(1);

    std::string key_hex, nonce_hex, ad_hex, msg_hex, ct_hex, tag_hex;
    std::string fault_spec, scope_str = "all", out_dir = ".";
    int max_order = 2, max_queries = 250, trials = 1000, bucket = 20;
    std::uint64_t seed = 1;

    auto* enc = app.add_subcommand("encrypt", "Dumbo AEAD encryption");
    enc->add_option("--key", key_hex, "128-bit key, 32 hex digits")->required();
    enc->add_option("--nonce", nonce_hex, "96-bit nonce, 24 hex digits")->required();
    enc->add_option("--ad", ad_hex, "associated data, hex (may be empty)");
    enc->add_option("--msg", msg_hex, "message, hex (may be empty)");

    auto* dec = app.add_subcommand("decrypt", "Dumbo AEAD decryption");
    dec->add_option("--key", key_hex)->required();
    dec->add_option("--nonce", nonce_hex)->required();
    dec->add_option("--ad", ad_hex);
    dec->add_option("--ct", ct_hex, "ciphertext, hex (may be empty)");
    dec->add_option("--tag", tag_hex, "64-bit tag, 16 hex digits")->required();

    auto* net = app.add_subcommand("netlist", "dump the canonical Sbox netlist");

    auto* hot = app.add_subcommand("hotspots",
                                   "enumerate SET fault combinations");
    hot->add_option("--max-order", max_order, "max faults per combination")
        ->check(CLI::Range(1, 3));
    hot->add_option("--out", out_dir, "output directory");

    auto* atk = app.add_subcommand("attack", "single SETFA key-recovery trial");
    atk->add_option("--fault", fault_spec, "fault map, e.g. w10=0,w30=1");
    atk->add_option("--scope", scope_str, "fault scope: all|last");
    atk->add_option("--max-queries", max_queries)->check(CLI::PositiveNumber);
    atk->add_option("--seed", seed, "trial RNG seed");

    auto* cam = app.add_subcommand("campaign", "Monte-Carlo success-rate run");
    cam->add_option("--trials", trials)->check(CLI::PositiveNumber);
    cam->add_option("--bucket", bucket, "histogram bucket width")
        ->check(CLI::PositiveNumber);
    cam->add_option("--fault", fault_spec);
    cam->add_option("--scope", scope_str);
    cam->add_option("--max-queries", max_queries)->check(CLI::PositiveNumber);
    cam->add_option("--seed", seed);
    cam->add_option("--out", out_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        const Netlist& netlist = canonical_netlist();

        if (*enc) {
            Ciphertext c = encrypt(parse_key(key_hex), parse_nonce(nonce_hex),
                                   bytes_from_hex(ad_hex), bytes_from_hex(msg_hex));
            std::cout << "C=" << bytes_to_hex(c.c) << '\n'
                      << "T=" << bytes_to_hex({c.tag.begin(), c.tag.end()}) << '\n';
            return 0;
        }

        if (*dec) {
            auto m = decrypt(parse_key(key_hex), parse_nonce(nonce_hex),
                             bytes_from_hex(ad_hex), bytes_from_hex(ct_hex),
                             parse_tag(tag_hex));
            if (!m) {
                std::cout << "BOT\n";
                return kExitAuthFail;
            }
            std::cout << "M=" << bytes_to_hex(*m) << '\n';
            return 0;
        }

        if (*net) {
            std::cout << netlist.dump();
            return 0;
        }

        if (*hot) {
            fs::create_directories(out_dir);
            auto records = enumerate_hotspots(netlist, max_order);
            {
                std::ofstream csv(fs::path(out_dir) / "hotspots.csv");
                csv << hotspots_csv_header() << '\n';
                for (const auto& r : records) csv << hotspot_csv_row(r) << '\n';
            }
            {
                std::ofstream nd(fs::path(out_dir) / "netlist.txt");
                nd << netlist.dump();
            }
            write_manifest(out_dir, "hotspots",
                           {{"max_order", max_order}, {"out", out_dir}}, 0);
            auto hist = missing_count_histogram(records);
            std::cout << "records=" << records.size() << '\n';
            for (int m = 0; m <= 16; ++m)
                if (hist[m])
                    std::cout << "missing_count=" << m << " combos=" << hist[m]
                              << '\n';
            return 0;
        }

        if (*atk) {
            AttackConfig cfg;
            cfg.fault_map = FaultMap::parse(fault_spec, netlist.n_wires());
            cfg.fault_scope = parse_scope(scope_str);
            cfg.max_queries = max_queries;
            cfg.rng_seed = seed;
            TrialResult r = run_trial(cfg, netlist);
            if (!r.success) {
                std::cout << "non-convergence: " << r.diagnostic << '\n'
                          << "survivors=";
                for (int s : r.survivors_final) std::cout << s << ' ';
                std::cout << '\n';
                return kExitNoConverge;
            }
            std::cout << "recovered_key="
                      << bytes_to_hex({r.recovered_key->begin(),
                                       r.recovered_key->end()})
                      << '\n'
                      << "queries_used=" << r.queries_used << '\n';
            return 0;
        }

        if (*cam) {
            AttackConfig cfg;
            cfg.fault_map = FaultMap::parse(fault_spec, netlist.n_wires());
            cfg.fault_scope = parse_scope(scope_str);
            cfg.max_queries = max_queries;
            cfg.rng_seed = seed;
            CampaignReport rep = campaign(cfg, netlist, trials, bucket);
            fs::create_directories(out_dir);
            {
                std::ofstream c(fs::path(out_dir) / "campaign.csv");
                c << rep.campaign_csv();
            }
            {
                std::ofstream h(fs::path(out_dir) / "histogram.csv");
                h << rep.histogram_csv();
            }
            write_manifest(out_dir, "campaign",
                           {{"trials", trials},
                            {"bucket", bucket},
                            {"fault", fault_spec},
                            {"scope", scope_str},
                            {"max_queries", max_queries},
                            {"out", out_dir}},
                           seed);
            int qmin = 0, qmax = 0;
            std::vector<int> qs;
            for (const auto& t : rep.trials)
                if (t.success) qs.push_back(t.queries_used);
            std::sort(qs.begin(), qs.end());
            if (!qs.empty()) {
                qmin = qs.front();
                qmax = qs.back();
            }
            std::cout << "success_rate=" << rep.success_rate() << '\n';
            if (!qs.empty())
                std::cout << "queries_min=" << qmin << " queries_median="
                          << qs[qs.size() / 2] << " queries_max=" << qmax << '\n';
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
