//! Exact computational algebra for finite simple groups acting on threefolds:
//! cyclotomic arithmetic, permutation groups, computed character tables,
//! polynomial invariants of matrix groups, and the Fano-threefold numerics.

pub mod exactnum;
pub mod permgrp;
pub mod chartab;
pub mod polyinv;
pub mod fano;
