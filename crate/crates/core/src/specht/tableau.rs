use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

use super::poly::MultilinearPoly;

/// A filling of the two-row shape `(n−k, k)` by `1..n`. Rows are listed
/// left to right; the first `k` cells of each row form the columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoRowTableau {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl TwoRowTableau {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        if bottom.len() > top.len() {
            return Err(Error::Invalid(format!("rows of length {} and {} are not a partition", top.len(), bottom.len())));
        }
        let n = top.len() + bottom.len();
        let mut seen = vec![false; n + 1];
        for &x in top.iter().chain(&bottom) {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Invalid(format!("labels must be a permutation of 1..{n}")));
            }
            seen[x] = true;
        }
        Ok(TwoRowTableau { top, bottom })
    }

    pub fn n(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    pub fn k(&self) -> usize {
        self.bottom.len()
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    /// Label pairs `(u_i, v_i)` of the columns of height two.
    pub fn columns(&self) -> Vec<(usize, usize)> {
        self.top.iter().zip(&self.bottom).map(|(&u, &v)| (u, v)).collect()
    }

    /// `Π (z_{u_i} + z_{v_i})` over the columns.
    pub fn polynomial(&self) -> MultilinearPoly {
        MultilinearPoly::product_of_pairs(self.n(), &self.columns()).expect("labels are in range")
    }
}

impl Serialize for TwoRowTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.top, &self.bottom).serialize(s)
    }
}

impl<'de> Deserialize<'de> for TwoRowTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (top, bottom) = <(Vec<usize>, Vec<usize>)>::deserialize(d)?;
        TwoRowTableau::new(top, bottom).map_err(serde::de::Error::custom)
    }
}

/// All sets of `k` disjoint pairs from `1..n`, each pair sorted, sets sorted.
/// Tableau polynomials depend only on these pairs, so this enumerates every
/// distinct polynomial of shape `(n−k, k)`.
pub fn column_matchings(n: usize, k: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(n: usize, k: usize, next: usize, used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        // the smallest point of the next pair must exceed the previous one
        for a in next..=n {
            if used[a] {
                continue;
            }
            used[a] = true;
            for b in a + 1..=n {
                if used[b] {
                    continue;
                }
                used[b] = true;
                cur.push((a, b));
                go(n, k, a + 1, used, cur, out);
                cur.pop();
                used[b] = false;
            }
            used[a] = false;
        }
    }
    let mut out = Vec::new();
    if 2 * k <= n {
        go(n, k, 1, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
    }
    out
}

/// The tableau with the given columns and the remaining labels in
/// increasing order on the top row.
pub fn tableau_from_columns(n: usize, columns: &[(usize, usize)]) -> Result<TwoRowTableau> {
    let mut top: Vec<usize> = columns.iter().map(|c| c.0).collect();
    let bottom: Vec<usize> = columns.iter().map(|c| c.1).collect();
    top.extend((1..=n).filter(|x| !columns.iter().any(|&(a, b)| a == *x || b == *x)));
    TwoRowTableau::new(top, bottom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let t = TwoRowTableau::new(vec![1, 3, 2], vec![4]).unwrap();
        assert_eq!(t.polynomial().to_string(), "z1 + z4");
        let t = TwoRowTableau::new(vec![1, 2], vec![3, 4]).unwrap();
        assert_eq!(t.polynomial().to_string(), "z1*z2 + z1*z4 + z2*z3 + z3*z4");
        let t = TwoRowTableau::new(vec![1, 2, 3], vec![]).unwrap();
        assert_eq!(t.polynomial().to_string(), "1");
        assert!(TwoRowTableau::new(vec![1], vec![2, 3]).is_err());
        assert!(TwoRowTableau::new(vec![1, 1], vec![2]).is_err());
        let back: TwoRowTableau = serde_json::from_str("[[1,3,2],[4]]").unwrap();
        assert_eq!(back.columns(), vec![(1, 4)]);
    }

    #[test]
    fn matching_counts() {
        // C(n, 2k) (2k-1)!!
        assert_eq!(column_matchings(4, 2).len(), 3);
        assert_eq!(column_matchings(6, 2).len(), 45);
        assert_eq!(column_matchings(8, 4).len(), 105);
        assert_eq!(column_matchings(5, 0), vec![Vec::<(usize, usize)>::new()]);
    }
}
