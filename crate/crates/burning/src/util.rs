//! Small shared helpers.

/// One splitmix64 step: maps a state to a well-mixed 64-bit value.
///
/// Used wherever a deterministic hash of a few integers is needed without
/// dragging in a stateful RNG.
pub(crate) fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Folds a byte slice into a seed, one splitmix64 step per byte.
pub(crate) fn mix_bytes(mut state: u64, bytes: &[u8]) -> u64 {
    for &b in bytes {
        state = splitmix64(state ^ u64::from(b));
    }
    state
}
