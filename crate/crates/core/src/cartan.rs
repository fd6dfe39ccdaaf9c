//! Root-system data for the finite classical types in Kac's convention.
//!
//! Only the Cartan matrix and coroot pairings enter any formula downstream;
//! inner-product normalizations are never materialized.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The four classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Usage(format!("unknown family {other:?}, expected A|B|C|D"))),
        }
    }

    pub const ALL: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A positive root together with its coroot, both as integer coefficient
/// vectors over the simple roots / simple coroots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PositiveRoot {
    /// Coefficients of `α = Σ c_i α_i`.
    pub root: Vec<i64>,
    /// Coefficients of `α^∨ = Σ d_i h_i`.
    pub coroot: Vec<i64>,
}

/// Root-system data for one of the types `A_n`, `B_n`, `C_n`, `D_n`.
///
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// Cartan matrix `a[i][j] = ⟨h_{i+1}, α_{j+1}⟩` (0-based storage).
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<PositiveRoot>,
}

/// A dominant integral weight in fundamental-weight coordinates
/// `λ_k = ⟨h_k, λ⟩ ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DominantWeight(pub Vec<i64>);

impl DominantWeight {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.iter().any(|&c| c < 0) {
            return Err(Error::Usage(format!("weight {coords:?} has a negative coordinate")));
        }
        Ok(DominantWeight(coords))
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight(vec![0; rank])
    }

    /// `⟨h_i, λ⟩` for `i ∈ [1, n]`.
    pub fn coord(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Builds the root system of the given family and rank.
///
/// Rank bounds: `n ≥ 2` for A/B/C (a shorter chain admits no valid sequence)
/// and `n ≥ 4` for D (so the four indices `n-3, n-2, n-1, n` are distinct).
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let min = match family {
        Family::A | Family::B | Family::C => 2,
        Family::D => 4,
    };
    if rank < min {
        return Err(Error::RankOutOfRange {
            family: family.letter(),
            rank,
            reason: format!("type {} requires rank ≥ {min}", family.letter()),
        });
    }
    let cartan = cartan_matrix(family, rank);
    let positive_roots = positive_roots(&cartan);
    let expected = match family {
        Family::A => rank * (rank + 1) / 2,
        Family::B | Family::C => rank * rank,
        Family::D => rank * (rank - 1),
    };
    assert_eq!(
        positive_roots.len(),
        expected,
        "positive root count mismatch for {}{}",
        family.letter(),
        rank
    );
    Ok(RootSystem {
        family,
        rank,
        cartan,
        positive_roots,
    })
}

fn cartan_matrix(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
        if i + 1 < n {
            row[i + 1] = -1;
        }
        if i >= 1 {
            row[i - 1] = -1;
        }
    }
    match family {
        Family::A => {}
        // B_n: a_{n,n-1} = -2, a_{n-1,n} = -1 (α_n short).
        Family::B => {
            a[n - 1][n - 2] = -2;
            a[n - 2][n - 1] = -1;
        }
        // C_n: a_{n-1,n} = -2, a_{n,n-1} = -1 (α_n long).
        Family::C => {
            a[n - 2][n - 1] = -2;
            a[n - 1][n - 2] = -1;
        }
        // D_n: fork at n-2; nodes n-1 and n are not adjacent.
        Family::D => {
            a[n - 1][n - 2] = 0;
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 3] = -1;
            a[n - 3][n - 1] = -1;
        }
    }
    a
}

/// Closes the simple (root, coroot) pairs under simple reflections and keeps
/// the positive ones. `s_i` acts on root coefficients via the columns of the
/// Cartan matrix and on coroot coefficients via its rows.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<PositiveRoot> {
    let n = cartan.len();
    let mut seen = std::collections::BTreeSet::new();
    let mut queue = std::collections::VecDeque::new();
    for i in 0..n {
        let mut root = vec![0i64; n];
        let mut coroot = vec![0i64; n];
        root[i] = 1;
        coroot[i] = 1;
        let pr = PositiveRoot { root, coroot };
        seen.insert(pr.clone());
        queue.push_back(pr);
    }
    while let Some(pr) = queue.pop_front() {
        for i in 0..n {
            // ⟨h_i, α⟩ and ⟨α^∨, α_i⟩.
            let pair_root: i64 = (0..n).map(|j| cartan[i][j] * pr.root[j]).sum();
            let pair_coroot: i64 = (0..n).map(|j| pr.coroot[j] * cartan[j][i]).sum();
            let mut root = pr.root.clone();
            let mut coroot = pr.coroot.clone();
            root[i] -= pair_root;
            coroot[i] -= pair_coroot;
            if root.iter().all(|&c| c >= 0) {
                let next = PositiveRoot { root, coroot };
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen.into_iter().collect()
}

impl RootSystem {
    /// `⟨h_i, α_j⟩` with 1-based indices.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_root_list(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    /// `⟨α^∨, λ⟩` for a positive root and a weight in fundamental-weight
    /// coordinates.
    pub fn coroot_pairing(&self, root: &PositiveRoot, weight: &[i64]) -> i64 {
        root.coroot
            .iter()
            .zip(weight.iter())
            .map(|(d, w)| d * w)
            .sum()
    }
}

/// Weyl dimension formula: `dim V(λ) = Π_{α>0} ⟨λ+ρ, α^∨⟩ / ⟨ρ, α^∨⟩`,
/// computed in exact integer arithmetic.
pub fn weyl_dimension(rs: &RootSystem, lambda: &DominantWeight) -> BigInt {
    assert_eq!(lambda.rank(), rs.rank, "weight rank mismatch");
    let shifted: Vec<i64> = lambda.0.iter().map(|&c| c + 1).collect();
    let rho = vec![1i64; rs.rank];
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for root in &rs.positive_roots {
        num *= BigInt::from(rs.coroot_pairing(root, &shifted));
        den *= BigInt::from(rs.coroot_pairing(root, &rho));
    }
    let (q, r) = num_integer_div_rem(&num, &den);
    assert!(r.is_zero(), "Weyl dimension product is not integral");
    q
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

/// All dominant weights of the given rank with coordinate sum at most `max_total`.
pub fn dominant_weights_up_to(rank: usize, max_total: i64) -> Vec<DominantWeight> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank];
    fn rec(cur: &mut Vec<i64>, pos: usize, left: i64, out: &mut Vec<DominantWeight>) {
        if pos == cur.len() {
            out.push(DominantWeight(cur.clone()));
            return;
        }
        for v in 0..=left {
            cur[pos] = v;
            rec(cur, pos + 1, left - v, out);
        }
        cur[pos] = 0;
    }
    rec(&mut cur, 0, max_total, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_cartan_matrix() {
        let rs = build_root_system(Family::A, 2).unwrap();
        assert_eq!(rs.cartan_matrix(), &[vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn bc_orientation() {
        // Pinned here directly; the box-identity suite pins it behaviorally.
        let c3 = build_root_system(Family::C, 3).unwrap();
        assert_eq!(c3.a(2, 3), -2);
        assert_eq!(c3.a(3, 2), -1);
        let b2 = build_root_system(Family::B, 2).unwrap();
        assert_eq!(b2.a(2, 1), -2);
        assert_eq!(b2.a(1, 2), -1);
    }

    #[test]
    fn cartan_invariants() {
        for family in Family::ALL {
            let min = if family == Family::D { 4 } else { 2 };
            for n in min..=5 {
                let rs = build_root_system(family, n).unwrap();
                for i in 1..=n {
                    assert_eq!(rs.a(i, i), 2);
                    for j in 1..=n {
                        if i != j {
                            assert!(rs.a(i, j) <= 0);
                            assert_eq!(rs.a(i, j) == 0, rs.a(j, i) == 0);
                        }
                    }
                }
                // Symmetrizability: d_i a_{ij} = d_j a_{ji} with d_i the
                // squared-length ratios; existence is checked by search.
                let d = symmetrizer(&rs);
                for i in 1..=n {
                    for j in 1..=n {
                        assert_eq!(d[i - 1] * rs.a(i, j), d[j - 1] * rs.a(j, i));
                    }
                }
            }
        }
    }

    fn symmetrizer(rs: &RootSystem) -> Vec<i64> {
        // Small search over d_i ∈ [1, 4] suffices for classical types.
        let n = rs.rank;
        let mut d = vec![1i64; n];
        'outer: loop {
            let ok = (0..n).all(|i| {
                (0..n).all(|j| d[i] * rs.a(i + 1, j + 1) == d[j] * rs.a(j + 1, i + 1))
            });
            if ok {
                return d;
            }
            for i in 0..n {
                if d[i] < 4 {
                    d[i] += 1;
                    continue 'outer;
                }
                d[i] = 1;
            }
            panic!("no symmetrizer found");
        }
    }

    #[test]
    fn rank_bounds_enforced() {
        assert!(build_root_system(Family::A, 1).is_err());
        assert!(build_root_system(Family::B, 1).is_err());
        assert!(build_root_system(Family::C, 1).is_err());
        assert!(build_root_system(Family::D, 3).is_err());
        assert!(build_root_system(Family::D, 4).is_ok());
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(build_root_system(Family::A, 4).unwrap().positive_root_list().len(), 10);
        assert_eq!(build_root_system(Family::B, 3).unwrap().positive_root_list().len(), 9);
        assert_eq!(build_root_system(Family::C, 3).unwrap().positive_root_list().len(), 9);
        assert_eq!(build_root_system(Family::D, 4).unwrap().positive_root_list().len(), 12);
    }

    #[test]
    fn weyl_dimension_a2() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let dim = |l: Vec<i64>| weyl_dimension(&rs, &DominantWeight::new(l).unwrap());
        assert_eq!(dim(vec![0, 0]), BigInt::from(1));
        // Frozen from the enumeration oracle exercised in the acceptance
        // suite (BFS of B(λ) must agree).
        assert_eq!(dim(vec![1, 0]), BigInt::from(3));
        assert_eq!(dim(vec![1, 1]), BigInt::from(8));
    }

    #[test]
    fn weyl_dimension_known_values() {
        // Standard module dimensions: A3 vector 4, C3 third fundamental 14,
        // B3 spin 8, D4 vector 8.
        let a3 = build_root_system(Family::A, 3).unwrap();
        assert_eq!(weyl_dimension(&a3, &DominantWeight(vec![1, 0, 0])), BigInt::from(4));
        let c3 = build_root_system(Family::C, 3).unwrap();
        assert_eq!(weyl_dimension(&c3, &DominantWeight(vec![0, 0, 1])), BigInt::from(14));
        let b3 = build_root_system(Family::B, 3).unwrap();
        assert_eq!(weyl_dimension(&b3, &DominantWeight(vec![0, 0, 1])), BigInt::from(8));
        let d4 = build_root_system(Family::D, 4).unwrap();
        assert_eq!(weyl_dimension(&d4, &DominantWeight(vec![1, 0, 0, 0])), BigInt::from(8));
        assert_eq!(weyl_dimension(&d4, &DominantWeight(vec![0, 1, 0, 0])), BigInt::from(28));
    }

    #[test]
    fn dominant_weight_enumeration() {
        let ws = dominant_weights_up_to(2, 2);
        assert_eq!(ws.len(), 6); // (0,0),(0,1),(0,2),(1,0),(1,1),(2,0)
        assert!(ws.contains(&DominantWeight(vec![1, 1])));
    }
}
