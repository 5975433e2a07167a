//! Secrecy and outage analysis of RIS-aided underlay cognitive radio links.
//!
//! [`analytics`] holds the closed forms and their quadrature oracles,
//! [`montecarlo`] simulates the physical channels they approximate.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0.0)` also rejects NaN

pub mod analytics;
pub mod exec;
pub mod montecarlo;
pub mod quadrature;
pub mod specfun;
pub mod system_model;
