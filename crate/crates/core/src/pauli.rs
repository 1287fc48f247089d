//! The generalized Pauli group of a single qudit in normal form
//! `w^a X^b Z^c`, with an exact generalized-permutation-matrix model.
//!
//! `w` stands for a primitive `d`-th root of unity. Only its multiplicative
//! order matters, so it is carried purely as an exponent.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::projline::perp_size_formula;
use crate::ring::Modulus;
use crate::symplectic::{form, Vector2};

/// Largest `d` for which the group closure is materialized.
pub const MAX_CLOSURE_D: u64 = 32;

/// The operator `w^a X^b Z^c`, exponents reduced modulo `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PauliOp {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

/// JSON form of an operator: `{"a":..,"b":..,"c":..,"d":..}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PauliRecord {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl PauliOp {
    pub const IDENTITY: PauliOp = PauliOp { a: 0, b: 0, c: 0 };
    pub const X: PauliOp = PauliOp { a: 0, b: 1, c: 0 };
    pub const Z: PauliOp = PauliOp { a: 0, b: 0, c: 1 };

    pub const fn new(a: u64, b: u64, c: u64) -> Self {
        PauliOp { a, b, c }
    }

    pub fn reduced(a: u64, b: u64, c: u64, m: &Modulus) -> Result<Self> {
        Ok(PauliOp {
            a: m.check_reduced(a)?,
            b: m.check_reduced(b)?,
            c: m.check_reduced(c)?,
        })
    }

    /// `w^a I`.
    pub const fn scalar(a: u64) -> Self {
        PauliOp { a, b: 0, c: 0 }
    }

    /// The coset of this operator modulo the centre, as a vector `(b, c)`.
    pub fn coset(&self) -> Vector2 {
        Vector2::new(self.b, self.c)
    }

    pub fn record(&self, m: &Modulus) -> PauliRecord {
        PauliRecord {
            a: self.a,
            b: self.b,
            c: self.c,
            d: m.d(),
        }
    }
}

impl fmt::Display for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = [("w", self.a), ("X", self.b), ("Z", self.c)]
            .iter()
            .filter(|(_, e)| *e != 0)
            .map(|(s, e)| if *e == 1 { s.to_string() } else { format!("{s}^{e}") })
            .collect();
        match (factors.is_empty(), self.b == 0 && self.c == 0) {
            (true, _) => f.write_str("I"),
            (false, true) => write!(f, "{} I", factors[0]),
            (false, false) => f.write_str(&factors.join(" ")),
        }
    }
}

/// All `d^3` operators, ordered by `(a, b, c)`.
pub fn all_ops(m: &Modulus) -> impl Iterator<Item = PauliOp> {
    let d = m.d();
    (0..d).flat_map(move |a| {
        (0..d).flat_map(move |b| (0..d).map(move |c| PauliOp::new(a, b, c)))
    })
}

/// `(w^a X^b Z^c)(w^a' X^b' Z^c') = w^(b'c + a + a') X^(b+b') Z^(c+c')`.
pub fn multiply(w: PauliOp, w2: PauliOp, m: &Modulus) -> PauliOp {
    PauliOp {
        a: m.add(m.mul(w2.b, w.c), m.add(w.a, w2.a)),
        b: m.add(w.b, w2.b),
        c: m.add(w.c, w2.c),
    }
}

/// Inverse of `(a, b, c)` is `(bc - a, -b, -c)`.
pub fn inverse(w: PauliOp, m: &Modulus) -> PauliOp {
    PauliOp {
        a: m.sub(m.mul(w.b, w.c), w.a),
        b: m.neg(w.b),
        c: m.neg(w.c),
    }
}

/// `[W, W'] = w^(c b' - c' b) I`.
pub fn commutator(w: PauliOp, w2: PauliOp, m: &Modulus) -> PauliOp {
    PauliOp::scalar(form(w.coset(), w2.coset(), m))
}

/// `W W' W^-1 W'^-1` evaluated with four multiplications.
pub fn commutator_by_products(w: PauliOp, w2: PauliOp, m: &Modulus) -> PauliOp {
    let ww2 = multiply(w, w2, m);
    multiply(multiply(ww2, inverse(w, m), m), inverse(w2, m), m)
}

pub fn commutes(w: PauliOp, w2: PauliOp, m: &Modulus) -> bool {
    form(w.coset(), w2.coset(), m) == 0
}

/// The centre `{w^a I}`.
pub fn centre(m: &Modulus) -> Vec<PauliOp> {
    (0..m.d()).map(PauliOp::scalar).collect()
}

/// `d` times the perp-set size of the coset of `w`. Square-free `d` only.
pub fn commuting_count(w: PauliOp, m: &Modulus) -> Result<u64> {
    Ok(m.d() * perp_size_formula(w.coset(), m)?)
}

/// Counts the operators commuting with `w` by scanning all `d^3` of them.
pub fn commuting_count_by_enumeration(w: PauliOp, m: &Modulus) -> u64 {
    all_ops(m).filter(|&w2| commutes(w, w2, m)).count() as u64
}

/// A `d x d` matrix with exactly one non-zero entry per column, each entry a
/// power of `w`. Column `s` has entry `w^expo[s]` in row `perm[s]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenPermMatrix {
    d: u64,
    perm: Vec<u32>,
    expo: Vec<u32>,
}

impl GenPermMatrix {
    pub fn identity(m: &Modulus) -> Self {
        let d = m.d();
        GenPermMatrix {
            d,
            perm: (0..d as u32).collect(),
            expo: vec![0; d as usize],
        }
    }

    pub fn dim(&self) -> u64 {
        self.d
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn expo(&self) -> &[u32] {
        &self.expo
    }

    /// Exponent of the entry at `(row, col)`, or `None` for a zero entry.
    pub fn entry(&self, row: usize, col: usize) -> Option<u64> {
        (self.perm[col] as usize == row).then(|| self.expo[col] as u64)
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &GenPermMatrix) -> GenPermMatrix {
        assert_eq!(self.d, rhs.d, "dimension mismatch");
        let d = self.d as u32;
        let (perm, expo) = rhs
            .perm
            .iter()
            .zip(&rhs.expo)
            .map(|(&r, &e)| {
                let r = r as usize;
                (self.perm[r], (e + self.expo[r]) % d)
            })
            .unzip();
        GenPermMatrix {
            d: self.d,
            perm,
            expo,
        }
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.d as usize];
        self.perm
            .iter()
            .all(|&r| (r as u64) < self.d && !std::mem::replace(&mut seen[r as usize], true))
    }
}

/// `w^a X^b Z^c` maps basis vector `s` to `w^(a + cs)` times basis vector `s + b`.
pub fn to_matrix(w: PauliOp, m: &Modulus) -> GenPermMatrix {
    let d = m.d();
    let (perm, expo) = (0..d)
        .map(|s| (m.add(s, w.b) as u32, m.add(w.a, m.mul(w.c, s)) as u32))
        .unzip();
    GenPermMatrix { d, perm, expo }
}

/// Breadth-first closure of `{X, Z}` under matrix multiplication.
pub fn group_closure(m: &Modulus) -> Result<HashSet<GenPermMatrix>> {
    if m.d() > MAX_CLOSURE_D {
        return Err(Error::TooLarge {
            d: m.d(),
            max: MAX_CLOSURE_D,
            what: "group closure",
        });
    }
    let gens = [to_matrix(PauliOp::X, m), to_matrix(PauliOp::Z, m)];
    let mut seen: HashSet<GenPermMatrix> = gens.iter().cloned().collect();
    let mut frontier: Vec<GenPermMatrix> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for h in &gens {
                let k = g.mul(h);
                if !seen.contains(&k) {
                    seen.insert(k.clone());
                    next.push(k);
                }
            }
        }
        frontier = next;
    }
    Ok(seen)
}

/// Order of the group generated by `X` and `Z`. Fails for `d > 32`, or if
/// the `d^3` normal-form matrices are not pairwise distinct.
pub fn group_closure_order(m: &Modulus) -> Result<u64> {
    let closure = group_closure(m)?;
    let normal_forms: HashSet<GenPermMatrix> = all_ops(m).map(|w| to_matrix(w, m)).collect();
    assert_eq!(
        normal_forms.len() as u64,
        m.d().pow(3),
        "normal form is not unique"
    );
    Ok(closure.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn op(a: u64, b: u64, c: u64) -> PauliOp {
        PauliOp::new(a, b, c)
    }

    fn random_op(rng: &mut ChaCha8Rng, d: u64) -> PauliOp {
        op(rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d))
    }

    #[test]
    fn multiply_examples() {
        for d in 2..12 {
            let m = Modulus::new(d).unwrap();
            assert_eq!(multiply(PauliOp::Z, PauliOp::X, &m), op(1, 1, 1));
            assert_eq!(multiply(PauliOp::X, PauliOp::Z, &m), op(0, 1, 1));
            for w in all_ops(&m) {
                assert_eq!(multiply(PauliOp::IDENTITY, w, &m), w);
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let m6 = Modulus::new(6).unwrap();
        assert_eq!(inverse(PauliOp::X, &m6), op(0, 5, 0));
        assert_eq!(inverse(PauliOp::IDENTITY, &m6), PauliOp::IDENTITY);
        assert_eq!(inverse(op(0, 1, 1), &m6), op(1, 5, 5));
        assert_eq!(multiply(op(0, 1, 1), op(1, 5, 5), &m6), PauliOp::IDENTITY);
    }

    #[test]
    fn inverse_is_two_sided() {
        for d in 2..=10 {
            let m = Modulus::new(d).unwrap();
            for w in all_ops(&m) {
                let inv = inverse(w, &m);
                assert_eq!(multiply(w, inv, &m), PauliOp::IDENTITY);
                assert_eq!(multiply(inv, w, &m), PauliOp::IDENTITY);
            }
        }
    }

    #[test]
    fn commutator_examples() {
        let m6 = Modulus::new(6).unwrap();
        assert_eq!(commutator(PauliOp::Z, PauliOp::X, &m6), op(1, 0, 0));
        let x2 = op(0, 2, 0);
        assert_eq!(commutator(x2, x2, &m6), PauliOp::IDENTITY);
        assert_eq!(commutator(x2, PauliOp::IDENTITY, &m6), PauliOp::IDENTITY);
    }

    #[test]
    fn commutator_closed_form_matches_products_exhaustive() {
        for d in 2..=6 {
            let m = Modulus::new(d).unwrap();
            for w in all_ops(&m) {
                for w2 in all_ops(&m) {
                    assert_eq!(commutator(w, w2, &m), commutator_by_products(w, w2, &m));
                }
            }
        }
    }

    #[test]
    fn commutator_closed_form_matches_products_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for d in 2..=30 {
            let m = Modulus::new(d).unwrap();
            for _ in 0..10_000 {
                let (w, w2) = (random_op(&mut rng, d), random_op(&mut rng, d));
                assert_eq!(commutator(w, w2, &m), commutator_by_products(w, w2, &m));
            }
        }
    }

    #[test]
    fn multiply_is_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for d in 2..=30 {
            let m = Modulus::new(d).unwrap();
            for _ in 0..10_000 {
                let (x, y, z) = (
                    random_op(&mut rng, d),
                    random_op(&mut rng, d),
                    random_op(&mut rng, d),
                );
                assert_eq!(
                    multiply(multiply(x, y, &m), z, &m),
                    multiply(x, multiply(y, z, &m), &m)
                );
            }
        }
    }

    #[test]
    fn commutes_examples() {
        let m6 = Modulus::new(6).unwrap();
        assert!(commutes(op(3, 2, 0), op(1, 5, 0), &m6));
        assert!(!commutes(PauliOp::X, PauliOp::Z, &m6));
        for w in all_ops(&m6) {
            for a in 0..6 {
                assert!(commutes(w, PauliOp::scalar(a), &m6));
            }
        }
    }

    #[test]
    fn commutes_ignores_phases() {
        for d in 2..=6 {
            let m = Modulus::new(d).unwrap();
            for w in all_ops(&m).filter(|w| w.a == 0) {
                for w2 in all_ops(&m).filter(|w| w.a == 0) {
                    let base = commutes(w, w2, &m);
                    for a in 0..d {
                        for a2 in 0..d {
                            let (x, y) = (op(a, w.b, w.c), op(a2, w2.b, w2.c));
                            assert_eq!(commutes(x, y, &m), base);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn matrix_commutation_agrees() {
        for d in 2..=6 {
            let m = Modulus::new(d).unwrap();
            let mats: Vec<_> = all_ops(&m).map(|w| (w, to_matrix(w, &m))).collect();
            for (w, mw) in &mats {
                for (w2, mw2) in &mats {
                    assert_eq!(commutes(*w, *w2, &m), mw.mul(mw2) == mw2.mul(mw));
                }
            }
        }
    }

    #[test]
    fn centre_examples() {
        let m6 = Modulus::new(6).unwrap();
        assert_eq!(centre(&m6), (0..6).map(PauliOp::scalar).collect::<Vec<_>>());
        let m2 = Modulus::new(2).unwrap();
        assert_eq!(centre(&m2), vec![PauliOp::IDENTITY, PauliOp::scalar(1)]);
        for d in 2..=10 {
            let m = Modulus::new(d).unwrap();
            let brute: Vec<_> = all_ops(&m)
                .filter(|&w| all_ops(&m).all(|w2| commutes(w, w2, &m)))
                .collect();
            assert_eq!(brute, centre(&m));
        }
    }

    #[test]
    fn every_centre_element_is_a_commutator() {
        for d in 2..=30 {
            let m = Modulus::new(d).unwrap();
            for a in 0..d {
                let witness = op(0, a, 0);
                assert_eq!(commutator(PauliOp::Z, witness, &m), PauliOp::scalar(a));
            }
        }
    }

    #[test]
    fn commuting_count_examples() {
        let m6 = Modulus::new(6).unwrap();
        assert_eq!(commuting_count(op(0, 2, 0), &m6), Ok(72));
        assert_eq!(commuting_count_by_enumeration(op(0, 2, 0), &m6), 72);
        assert_eq!(commuting_count(PauliOp::scalar(4), &m6), Ok(216));
        assert_eq!(commuting_count(PauliOp::X, &m6), Ok(36));
        assert_eq!(commuting_count_by_enumeration(PauliOp::X, &m6), 36);
        assert_eq!(
            commuting_count(PauliOp::X, &Modulus::new(8).unwrap()),
            Err(Error::NotSquareFree { d: 8 })
        );
    }

    #[test]
    fn matrix_examples() {
        let m3 = Modulus::new(3).unwrap();
        let x = to_matrix(PauliOp::X, &m3);
        assert_eq!(x.perm(), &[1, 2, 0]);
        assert_eq!(x.expo(), &[0, 0, 0]);
        // shift matrix: ones on the subdiagonal and in the top-right corner
        assert_eq!(x.entry(1, 0), Some(0));
        assert_eq!(x.entry(0, 2), Some(0));
        assert_eq!(x.entry(0, 0), None);
        let z = to_matrix(PauliOp::Z, &m3);
        assert_eq!(z.perm(), &[0, 1, 2]);
        assert_eq!(z.expo(), &[0, 1, 2]);
        assert_eq!(to_matrix(PauliOp::IDENTITY, &m3), GenPermMatrix::identity(&m3));
    }

    #[test]
    fn normal_form_matrices_are_distinct() {
        for d in 2..=15 {
            let m = Modulus::new(d).unwrap();
            let mats: HashSet<_> = all_ops(&m).map(|w| to_matrix(w, &m)).collect();
            assert_eq!(mats.len() as u64, d * d * d);
            assert!(mats.iter().all(GenPermMatrix::is_permutation));
        }
    }

    #[test]
    fn closure_order_examples() {
        assert_eq!(group_closure_order(&Modulus::new(2).unwrap()), Ok(8));
        assert_eq!(group_closure_order(&Modulus::new(6).unwrap()), Ok(216));
        assert_eq!(group_closure_order(&Modulus::new(15).unwrap()), Ok(3375));
        assert!(matches!(
            group_closure_order(&Modulus::new(33).unwrap()),
            Err(Error::TooLarge { d: 33, max: 32, .. })
        ));
    }

    #[test]
    fn pretty_and_json() {
        let m = Modulus::new(6).unwrap();
        assert_eq!(PauliOp::IDENTITY.to_string(), "I");
        assert_eq!(op(1, 0, 0).to_string(), "w I");
        assert_eq!(op(3, 0, 0).to_string(), "w^3 I");
        assert_eq!(op(1, 1, 1).to_string(), "w X Z");
        assert_eq!(op(0, 2, 5).to_string(), "X^2 Z^5");
        assert_eq!(op(2, 0, 3).to_string(), "w^2 Z^3");
        assert_eq!(
            serde_json::to_string(&op(1, 2, 3).record(&m)).unwrap(),
            r#"{"a":1,"b":2,"c":3,"d":6}"#
        );
    }

    proptest! {
        #[test]
        fn matrix_model_is_a_homomorphism(
            d in 2u64..=24,
            a in any::<u64>(), b in any::<u64>(), c in any::<u64>(),
            a2 in any::<u64>(), b2 in any::<u64>(), c2 in any::<u64>(),
        ) {
            let m = Modulus::new(d).unwrap();
            let w = op(a % d, b % d, c % d);
            let w2 = op(a2 % d, b2 % d, c2 % d);
            prop_assert_eq!(
                to_matrix(multiply(w, w2, &m), &m),
                to_matrix(w, &m).mul(&to_matrix(w2, &m))
            );
        }

        #[test]
        fn commutator_lies_in_centre(
            d in 2u64..=200,
            a in any::<u64>(), b in any::<u64>(), c in any::<u64>(),
            a2 in any::<u64>(), b2 in any::<u64>(), c2 in any::<u64>(),
        ) {
            let m = Modulus::new(d).unwrap();
            let k = commutator_by_products(op(a % d, b % d, c % d), op(a2 % d, b2 % d, c2 % d), &m);
            prop_assert_eq!((k.b, k.c), (0, 0));
        }
    }
}
