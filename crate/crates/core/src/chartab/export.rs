//! Serializable snapshot of a character table.

use std::collections::BTreeMap;

use serde::Serialize;

use super::CharacterTable;

/// Class data and character values in the exact text form.
#[derive(Clone, Debug, Serialize)]
pub struct TableExport {
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub element_orders: Vec<u64>,
    pub class_representatives: Vec<String>,
    /// Power maps for each `k` dividing the exponent.
    pub power_maps: BTreeMap<u64, Vec<u32>>,
    pub prime: u64,
    pub characters: Vec<Vec<String>>,
}

impl From<&CharacterTable> for TableExport {
    fn from(t: &CharacterTable) -> Self {
        let cc = t.classes();
        let e = cc.exponent();
        TableExport {
            order: cc.group_order(),
            class_sizes: cc.sizes(),
            element_orders: cc.orders().to_vec(),
            class_representatives: cc.reps().iter().map(|g| g.to_string()).collect(),
            power_maps: (1..=e).filter(|k| e % k == 0).map(|k| (k, cc.power_map(k as i64).to_vec())).collect(),
            prime: t.prime(),
            characters: t.irreducibles().iter().map(|chi| chi.values().iter().map(|v| v.to_string()).collect()).collect(),
        }
    }
}
