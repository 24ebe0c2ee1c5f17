pub mod compare;
pub mod constants;
pub mod lambda;
pub mod phase_scan;
pub mod phi;
pub mod pn;
pub mod sieve;
pub mod spectrum;
pub mod stitch;
