"""Polar code encoding, bit- and symbol-decision list decoding, and the
analytical decoder models, backed by the C++ core."""

from ._core import (  # noqa: F401
    CodeSpec,
    ConfigError,
    CrcConfig,
    IoError,
    UnsupportedOperation,
    attach_crc,
    ca_scl_decode,
    channel_lls,
    check_crc,
    construct,
    encode,
    extract_info,
    frozen_set_to_text,
    hw,
    load_frozen_set,
    oracle_suite_names,
    place_info,
    polar_transform,
    run_oracle_suite,
    run_sweep,
    save_frozen_set,
    sc_decode,
    scl_decode,
    sdsc_decode,
    sdscl_decode,
    transmit,
)

__all__ = [
    "CodeSpec",
    "ConfigError",
    "CrcConfig",
    "IoError",
    "UnsupportedOperation",
    "attach_crc",
    "ca_scl_decode",
    "channel_lls",
    "check_crc",
    "construct",
    "encode",
    "extract_info",
    "frozen_set_to_text",
    "hw",
    "load_frozen_set",
    "oracle_suite_names",
    "place_info",
    "polar_transform",
    "run_oracle_suite",
    "run_sweep",
    "save_frozen_set",
    "sc_decode",
    "scl_decode",
    "sdsc_decode",
    "sdscl_decode",
    "transmit",
]
