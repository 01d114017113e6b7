//! Matching printed (partial) character tables against computed ones.

use super::CharacterTable;
use crate::exactnum::Cyclotomic;

/// A partial character table with its own column order.
#[derive(Clone, Debug)]
pub struct PrintedTable {
    pub column_labels: Vec<String>,
    /// Element order of each column.
    pub column_orders: Vec<u64>,
    pub rows: Vec<(String, Vec<Cyclotomic>)>,
}

/// A column bijection under which every printed row is a computed row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableMatch {
    /// `columns[i]` is the computed class for printed column `i`.
    pub columns: Vec<usize>,
    /// `rows[i]` is the computed row equal to printed row `i`.
    pub rows: Vec<usize>,
}

/// First column bijection (in lexicographic order of computed class
/// indices) respecting element orders and making every printed row equal
/// to some computed row.
pub fn match_printed_table(table: &CharacterTable, printed: &PrintedTable) -> Option<TableMatch> {
    let cc = table.classes();
    let ncols = printed.column_orders.len();
    if ncols != cc.len() {
        return None;
    }
    let mut columns = Vec::with_capacity(ncols);
    let mut used = vec![false; ncols];
    search(table, printed, &mut columns, &mut used)?;
    let rows = printed
        .rows
        .iter()
        .map(|(_, vals)| {
            (0..table.len())
                .find(|&r| vals.iter().enumerate().all(|(i, v)| table.row(r).value(columns[i]) == v))
                .expect("checked during search")
        })
        .collect();
    Some(TableMatch { columns, rows })
}

fn consistent(table: &CharacterTable, printed: &PrintedTable, columns: &[usize]) -> bool {
    printed.rows.iter().all(|(_, vals)| {
        (0..table.len()).any(|r| columns.iter().enumerate().all(|(i, &c)| table.row(r).value(c) == &vals[i]))
    })
}

fn search(table: &CharacterTable, printed: &PrintedTable, columns: &mut Vec<usize>, used: &mut [bool]) -> Option<()> {
    let i = columns.len();
    if i == used.len() {
        return Some(());
    }
    for c in 0..used.len() {
        if used[c] || table.classes().orders()[c] != printed.column_orders[i] {
            continue;
        }
        columns.push(c);
        used[c] = true;
        if consistent(table, printed, columns) && search(table, printed, columns, used).is_some() {
            return Some(());
        }
        used[c] = false;
        columns.pop();
    }
    None
}
