//! Pinned regression grid for the secrecy expressions.
//!
//! Reference values were computed once with 30-digit adaptive quadrature of
//! the defining integrals and are shipped alongside the code.

use crate::system_model::{
    db_to_linear, derive_params, DerivedParams, ModelError, ModelOptions, NetworkGeometry,
    RadioConfig,
};

/// CSV text of the pinned grid: `omega_p_db,omega_e_db,n_ris,sop_sc,sop_mrc,pnsc_sc,pnsc_mrc`.
pub const ORACLE_GRID_FIXTURE: &str = include_str!("oracle_grid.csv");

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub omega_p_db: f64,
    pub omega_e_db: f64,
    pub n_ris: usize,
    pub sop_sc: f64,
    pub sop_mrc: f64,
    pub pnsc_sc: f64,
    pub pnsc_mrc: f64,
}

impl GridPoint {
    /// Desk layout with `N_P = N_E = 3`, overridden to this point's `ω_p`, `ω_e` and `N`.
    pub fn params(&self, opts: ModelOptions) -> Result<DerivedParams, ModelError> {
        let radio = RadioConfig {
            n_ris: self.n_ris,
            n_pt: 3,
            n_eav: 3,
            ..RadioConfig::desk()
        };
        derive_params(&NetworkGeometry::desk(), &radio, opts)?
            .with_omega_p(db_to_linear(self.omega_p_db))?
            .with_omega_e(db_to_linear(self.omega_e_db))
    }
}

/// The 20 pinned points: `ω_p ∈ {0,…,40} dB`, `ω_e ∈ {5, 10} dB`, `N ∈ {20, 50}`.
pub fn oracle_grid() -> Vec<GridPoint> {
    ORACLE_GRID_FIXTURE
        .lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let f: Vec<f64> = line
                .split(',')
                .map(|s| s.trim().parse().expect("fixture field"))
                .collect();
            GridPoint {
                omega_p_db: f[0],
                omega_e_db: f[1],
                n_ris: f[2] as usize,
                sop_sc: f[3],
                sop_mrc: f[4],
                pnsc_sc: f[5],
                pnsc_mrc: f[6],
            }
        })
        .collect()
}
