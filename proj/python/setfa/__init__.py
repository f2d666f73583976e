from ._core import (
    __version__,
    campaign,
    decrypt,
    encrypt,
    enumerate_hotspots,
    faulty_sbox_table,
    missing_values,
    netlist_dump,
    netlist_wire_count,
    run_trial,
    spongent_permute,
    spongent_permute_inv,
)

__all__ = [
    "__version__",
    "campaign",
    "decrypt",
    "encrypt",
    "enumerate_hotspots",
    "faulty_sbox_table",
    "missing_values",
    "netlist_dump",
    "netlist_wire_count",
    "run_trial",
    "spongent_permute",
    "spongent_permute_inv",
]
