//! Small GF(2) row reduction over 128-bit coefficient vectors.

/// Row echelon form of a system A·x = b with up to 128 columns.
pub struct Echelon {
    /// (coefficient row, rhs) with distinct pivot columns, sorted by pivot.
    rows: Vec<(u128, bool)>,
    pivots: Vec<usize>,
    consistent: bool,
    cols: usize,
}

pub fn reduce(rows: impl IntoIterator<Item = (u128, bool)>, cols: usize) -> Echelon {
    let mut ech: Vec<(u128, bool)> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut consistent = true;
    for (mut row, mut rhs) in rows {
        for (i, &(r, b)) in ech.iter().enumerate() {
            if row >> pivots[i] & 1 == 1 {
                row ^= r;
                rhs ^= b;
            }
        }
        if row == 0 {
            if rhs {
                consistent = false;
            }
            continue;
        }
        let p = row.trailing_zeros() as usize;
        // keep existing rows reduced against the new pivot
        for (i, (r, b)) in ech.iter_mut().enumerate() {
            let _ = i;
            if *r >> p & 1 == 1 {
                *r ^= row;
                *b ^= rhs;
            }
        }
        ech.push((row, rhs));
        pivots.push(p);
        let mut order: Vec<usize> = (0..ech.len()).collect();
        order.sort_by_key(|&i| pivots[i]);
        let ech2: Vec<_> = order.iter().map(|&i| ech[i]).collect();
        let piv2: Vec<_> = order.iter().map(|&i| pivots[i]).collect();
        ech = ech2;
        pivots = piv2;
    }
    Echelon { rows: ech, pivots, consistent, cols }
}

impl Echelon {
    pub fn consistent(&self) -> bool {
        self.consistent
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Particular solution with all free variables zero, if consistent.
    pub fn particular(&self) -> Option<u128> {
        if !self.consistent {
            return None;
        }
        let mut x = 0u128;
        for (i, &(_, rhs)) in self.rows.iter().enumerate() {
            if rhs {
                x |= 1u128 << self.pivots[i];
            }
        }
        Some(x)
    }

    /// Basis of the kernel of the coefficient matrix.
    pub fn kernel_basis(&self) -> Vec<u128> {
        let pivot_mask: u128 = self.pivots.iter().fold(0, |acc, &p| acc | 1u128 << p);
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_mask >> f & 1 == 1 {
                continue;
            }
            let mut v = 1u128 << f;
            for (i, &(row, _)) in self.rows.iter().enumerate() {
                if row >> f & 1 == 1 {
                    v |= 1u128 << self.pivots[i];
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Does `v` lie in the row space of the coefficient matrix?
    pub fn in_row_space(&self, mut v: u128) -> bool {
        for (i, &(row, _)) in self.rows.iter().enumerate() {
            if v >> self.pivots[i] & 1 == 1 {
                v ^= row;
            }
        }
        v == 0
    }
}

/// Is `v` in the span of `basis`?
pub fn in_span(basis: &[u128], v: u128) -> bool {
    let ech = reduce(basis.iter().map(|&b| (b, false)), 128);
    ech.in_row_space(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_small_system() {
        // x0 + x1 = 1, x1 + x2 = 0, x0 + x2 = 1
        let ech = reduce(vec![(0b011, true), (0b110, false), (0b101, true)], 3);
        assert!(ech.consistent());
        let x = ech.particular().unwrap();
        assert_eq!((x ^ (x >> 1)) & 1, 1);
        let k = ech.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], 0b111);
    }

    #[test]
    fn detects_inconsistency() {
        let ech = reduce(vec![(0b01, true), (0b01, false)], 2);
        assert!(!ech.consistent());
    }

    #[test]
    fn span_membership() {
        assert!(in_span(&[0b011, 0b110], 0b101));
        assert!(!in_span(&[0b011], 0b001));
    }
}
