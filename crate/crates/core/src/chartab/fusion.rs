//! Subgroup class fusion and restriction.

use std::sync::Arc;

use super::{CharError, ClassFunction};
use crate::permgrp::{ConjClasses, PermError};

/// For each class of a subgroup, the ambient class containing it.
#[derive(Clone, Debug)]
pub struct FusionMap {
    sub: Arc<ConjClasses>,
    ambient: Arc<ConjClasses>,
    map: Vec<usize>,
}

impl FusionMap {
    /// Locates every subgroup class representative in the enumerated ambient group.
    pub fn new(sub: Arc<ConjClasses>, ambient: Arc<ConjClasses>) -> Result<Self, CharError> {
        let map = sub
            .reps()
            .iter()
            .map(|h| ambient.class_of(h).ok_or_else(|| PermError::NotSubgroup(format!("element {h}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FusionMap { sub, ambient, map })
    }

    pub fn sub(&self) -> &Arc<ConjClasses> {
        &self.sub
    }

    pub fn ambient(&self) -> &Arc<ConjClasses> {
        &self.ambient
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn restrict(&self, chi: &ClassFunction) -> Result<ClassFunction, CharError> {
        if !Arc::ptr_eq(chi.classes(), &self.ambient) {
            return Err(CharError::GroupMismatch);
        }
        let values = self.map.iter().map(|&c| chi.value(c).clone()).collect();
        Ok(ClassFunction::new(self.sub.clone(), values))
    }
}
