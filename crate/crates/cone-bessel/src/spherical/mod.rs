//! Partition combinatorics and the spherical-polynomial engine.

mod jack;
mod kernels;
mod partition;
mod poch;

pub use jack::{jack_c, table_for, table_for_params, JackTable};
pub use kernels::{
    dim_dm, kernel_km, kernel_km_auto, pair_spectrum, phi_m, phi_m_auto, spherical_table,
};
pub use partition::{partitions_upto, Partition};
pub use poch::{
    c_lambda, gindikin_gamma_log, gindikin_gamma_log_scalar, poch_log_abs, poch_scalar, poch_vec,
    rank_lambda, wallach_member,
};
