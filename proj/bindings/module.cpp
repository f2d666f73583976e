#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "setfa/attack.hpp"
#include "setfa/dumbo.hpp"
#include "setfa/hotspot.hpp"
#include "setfa/netlist.hpp"

namespace py = pybind11;
using namespace setfa;

namespace {

Key key_from_bytes(py::bytes b) {
    std::string s = b;
    if (s.size() != kKeyBytes) throw std::invalid_argument("key must be 16 bytes");
    Key k;
    std::copy(s.begin(), s.end(), k.begin());
    return k;
}

Nonce nonce_from_bytes(py::bytes b) {
    std::string s = b;
    if (s.size() != kNonceBytes)
        throw std::invalid_argument("nonce must be 12 bytes");
    Nonce n;
    std::copy(s.begin(), s.end(), n.begin());
    return n;
}

Bytes vec_from_bytes(py::bytes b) {
    std::string s = b;
    return Bytes(s.begin(), s.end());
}

py::bytes to_py(const Bytes& v) {
    return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dumbo AEAD, gate-level Sbox fault model and SETFA key recovery";

    m.def("encrypt",
          [](py::bytes key, py::bytes nonce, py::bytes ad, py::bytes msg) {
              Ciphertext c = encrypt(key_from_bytes(key), nonce_from_bytes(nonce),
                                     vec_from_bytes(ad), vec_from_bytes(msg));
              return py::make_tuple(to_py(c.c),
                                    py::bytes(reinterpret_cast<const char*>(
                                                  c.tag.data()),
                                              c.tag.size()));
          },
          py::arg("key"), py::arg("nonce"), py::arg("ad"), py::arg("msg"));

    m.def("decrypt",
          [](py::bytes key, py::bytes nonce, py::bytes ad, py::bytes ct,
             py::bytes tag) -> py::object {
              std::string ts = tag;
              if (ts.size() != kTagBytes)
                  throw std::invalid_argument("tag must be 8 bytes");
              Tag t;
              std::copy(ts.begin(), ts.end(), t.begin());
              auto msg = decrypt(key_from_bytes(key), nonce_from_bytes(nonce),
                                 vec_from_bytes(ad), vec_from_bytes(ct), t);
              if (!msg) return py::none();
              return to_py(*msg);
          },
          py::arg("key"), py::arg("nonce"), py::arg("ad"), py::arg("ct"),
          py::arg("tag"));

    m.def("spongent_permute", [](std::string hex) {
        return to_hex(permute(state_from_hex(hex)));
    });
    m.def("spongent_permute_inv", [](std::string hex) {
        return to_hex(permute_inv(state_from_hex(hex)));
    });

    m.def("netlist_dump", [] { return canonical_netlist().dump(); });
    m.def("netlist_wire_count", [] { return canonical_netlist().n_wires(); });

    m.def("faulty_sbox_table", [](std::string fault_spec) {
        const Netlist& n = canonical_netlist();
        auto t = faulty_truth_table(n, FaultMap::parse(fault_spec, n.n_wires()));
        return std::vector<int>(t.entries.begin(), t.entries.end());
    });
    m.def("missing_values", [](std::string fault_spec) {
        const Netlist& n = canonical_netlist();
        auto t = faulty_truth_table(n, FaultMap::parse(fault_spec, n.n_wires()));
        return mask_to_values(missing_values(t));
    });

    m.def("enumerate_hotspots", [](int max_order) {
        auto records = enumerate_hotspots(canonical_netlist(), max_order);
        py::list out;
        for (const auto& r : records) {
            py::dict d;
            d["combo_id"] = r.combo_id;
            d["fault_spec"] = r.fault_map().to_string();
            d["missing_count"] = r.missing_count;
            d["missing_values"] = mask_to_values(r.missing_mask);
            d["survivors_per_nibble"] = r.survivors_per_nibble;
            d["residual_keyspace_log2"] = r.residual_keyspace_log2;
            d["usable"] = r.usable;
            out.append(std::move(d));
        }
        return out;
    });

    m.def("run_trial",
          [](std::string fault_spec, std::string scope, int max_queries,
             std::uint64_t seed) {
              const Netlist& n = canonical_netlist();
              AttackConfig cfg;
              cfg.fault_map = FaultMap::parse(fault_spec, n.n_wires());
              cfg.fault_scope = scope == "last" ? FaultScope::LastRoundOnly
                                                : FaultScope::AllRounds;
              cfg.max_queries = max_queries;
              cfg.rng_seed = seed;
              TrialResult r = run_trial(cfg, n);
              py::dict d;
              d["success"] = r.success;
              d["queries_used"] = r.queries_used;
              d["recovered_key"] =
                  r.recovered_key
                      ? py::object(py::bytes(reinterpret_cast<const char*>(
                                                 r.recovered_key->data()),
                                             r.recovered_key->size()))
                      : py::object(py::none());
              d["survivors_final"] = std::vector<int>(r.survivors_final.begin(),
                                                      r.survivors_final.end());
              d["diagnostic"] = r.diagnostic;
              return d;
          },
          py::arg("fault_spec"), py::arg("scope") = "all",
          py::arg("max_queries") = 250, py::arg("seed") = 1);

    m.def("campaign",
          [](std::string fault_spec, int trials, int bucket, int max_queries,
             std::uint64_t seed) {
              const Netlist& n = canonical_netlist();
              AttackConfig cfg;
              cfg.fault_map = FaultMap::parse(fault_spec, n.n_wires());
              cfg.max_queries = max_queries;
              cfg.rng_seed = seed;
              CampaignReport rep = campaign(cfg, n, trials, bucket);
              py::dict d;
              d["success_rate"] = rep.success_rate();
              d["campaign_csv"] = rep.campaign_csv();
              d["histogram_csv"] = rep.histogram_csv();
              return d;
          },
          py::arg("fault_spec"), py::arg("trials") = 100, py::arg("bucket") = 20,
          py::arg("max_queries") = 250, py::arg("seed") = 1);

    m.attr("__version__") = "1.0.0";
}
