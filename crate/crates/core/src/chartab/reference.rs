//! Classical printed character tables (partial), each in its customary
//! column order.

use super::PrintedTable;
use crate::exactnum::{rat, Cyclotomic};

fn ints(v: &[i64]) -> Vec<Cyclotomic> {
    v.iter().map(|&x| Cyclotomic::from_int(x)).collect()
}

fn labels(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// `(-1 + sqrt(-d)) / 2`.
fn half_root(d: i64) -> Cyclotomic {
    (Cyclotomic::sqrt_int(-d) - Cyclotomic::one()).scale(&rat(1, 2))
}

/// `A_7`, rows of degree below 14.
pub fn a7() -> PrintedTable {
    let a = half_root(7);
    let ab = a.complex_conjugate();
    let mut chi3 = ints(&[10, -2, 1, 1, 1, 0, 0]);
    chi3.extend([a.clone(), ab.clone()]);
    let mut chi4 = ints(&[10, -2, 1, 1, 1, 0, 0]);
    chi4.extend([ab, a]);
    PrintedTable {
        column_labels: labels(&["1", "2", "3'", "6", "3''", "4", "5", "7'", "7''"]),
        column_orders: vec![1, 2, 3, 6, 3, 4, 5, 7, 7],
        rows: vec![
            ("chi1".into(), ints(&[1; 9])),
            ("chi2".into(), ints(&[6, 2, 3, -1, 0, 0, 1, -1, -1])),
            ("chi3".into(), chi3),
            ("chi4".into(), chi4),
        ],
    }
}

/// `S_5`, all rows.
pub fn s5() -> PrintedTable {
    PrintedTable {
        column_labels: labels(&["1", "2'", "2''", "3", "6", "4", "5"]),
        column_orders: vec![1, 2, 2, 3, 6, 4, 5],
        rows: vec![
            ("chi1'".into(), ints(&[1, -1, 1, 1, -1, -1, 1])),
            ("chi2'".into(), ints(&[4, -2, 0, 1, 1, 0, -1])),
            ("chi3'".into(), ints(&[5, -1, 1, -1, -1, 1, 0])),
            ("chi4'".into(), ints(&[6, 0, -2, 0, 0, 0, 1])),
            ("chi5'".into(), ints(&[5, 1, 1, -1, 1, -1, 0])),
            ("chi6'".into(), ints(&[4, 2, 0, 1, -1, 0, -1])),
            ("chi7'".into(), ints(&[1; 7])),
        ],
    }
}

/// `PSL_2(11)`, rows of degree at most 10.
pub fn psl2_11() -> PrintedTable {
    let b = half_root(11);
    let bb = b.complex_conjugate();
    let five = |x: &Cyclotomic, y: &Cyclotomic| {
        let mut v = ints(&[5, 0, 0]);
        v.extend([x.clone(), y.clone()]);
        v.extend(ints(&[1, -1, 1]));
        v
    };
    PrintedTable {
        column_labels: labels(&["1", "5'", "5''", "11'", "11''", "2", "3", "6"]),
        column_orders: vec![1, 5, 5, 11, 11, 2, 3, 6],
        rows: vec![
            ("chi1".into(), ints(&[1; 8])),
            ("chi2".into(), five(&b, &bb)),
            ("chi3".into(), five(&bb, &b)),
            ("chi4".into(), ints(&[10, 0, 0, -1, -1, -2, 1, 1])),
            ("chi5".into(), ints(&[10, 0, 0, -1, -1, 2, 1, -1])),
        ],
    }
}

/// `A_5`, all rows.
pub fn a5() -> PrintedTable {
    let s5 = Cyclotomic::sqrt_int(5);
    let alpha = (Cyclotomic::one() - s5.clone()).scale(&rat(1, 2));
    let alpha_star = (Cyclotomic::one() + s5).scale(&rat(1, 2));
    let three = |x: &Cyclotomic, y: &Cyclotomic| {
        let mut v = ints(&[3, -1, 0]);
        v.extend([x.clone(), y.clone()]);
        v
    };
    PrintedTable {
        column_labels: labels(&["1", "2", "3", "5'", "5''"]),
        column_orders: vec![1, 2, 3, 5, 5],
        rows: vec![
            ("chi1'".into(), ints(&[1; 5])),
            ("chi2'".into(), three(&alpha, &alpha_star)),
            ("chi3'".into(), three(&alpha_star, &alpha)),
            ("chi4'".into(), ints(&[4, 0, 1, -1, -1])),
            ("chi5'".into(), ints(&[5, 1, -1, 0, 0])),
        ],
    }
}
