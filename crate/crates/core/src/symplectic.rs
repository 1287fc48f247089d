//! The free module `Z_d^2` with its alternating bilinear form
//! `[(b,c),(b',c')] = c*b' - c'*b` and perpendicular sets.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::{Serialize, SerializeStruct, SerializeTuple, Serializer};

use crate::error::Result;
use crate::ring::Modulus;

/// A row vector `(b, c)` of `Z_d^2`. Ordered lexicographically on `(b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Vector2 {
    pub b: u64,
    pub c: u64,
}

impl Vector2 {
    pub const ZERO: Vector2 = Vector2 { b: 0, c: 0 };

    pub const fn new(b: u64, c: u64) -> Self {
        Vector2 { b, c }
    }

    /// Validates that both entries are already reduced modulo `d`.
    pub fn reduced(b: u64, c: u64, m: &Modulus) -> Result<Self> {
        Ok(Vector2 {
            b: m.check_reduced(b)?,
            c: m.check_reduced(c)?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.b == 0 && self.c == 0
    }

    pub fn scale(&self, u: u64, m: &Modulus) -> Self {
        Vector2::new(m.mul(u, self.b), m.mul(u, self.c))
    }

    pub fn add(&self, other: &Vector2, m: &Modulus) -> Self {
        Vector2::new(m.add(self.b, other.b), m.add(self.c, other.c))
    }

    /// Per-prime components `(b mod p_k, c mod p_k)`; square-free `d` only.
    pub fn components(&self, m: &Modulus) -> Result<Vec<Vector2>> {
        m.require_square_free()?;
        Ok(m.primes().map(|p| Vector2::new(self.b % p, self.c % p)).collect())
    }

    /// Position of this vector in the lexicographic enumeration of `Z_d^2`.
    pub fn index(&self, m: &Modulus) -> usize {
        (self.b * m.d() + self.c) as usize
    }
}

impl fmt::Display for Vector2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.b, self.c)
    }
}

impl From<(u64, u64)> for Vector2 {
    fn from((b, c): (u64, u64)) -> Self {
        Vector2::new(b, c)
    }
}

impl Serialize for Vector2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.b)?;
        t.serialize_element(&self.c)?;
        t.end()
    }
}

/// All `d^2` vectors in lexicographic order.
pub fn all_vectors(m: &Modulus) -> impl Iterator<Item = Vector2> {
    let d = m.d();
    (0..d).flat_map(move |b| (0..d).map(move |c| Vector2::new(b, c)))
}

/// `v.c * w.b - w.c * v.b (mod d)`: the exponent of the group commutator of
/// the operators whose cosets are `v` and `w`.
pub fn form(v: Vector2, w: Vector2, m: &Modulus) -> u64 {
    m.sub(m.mul(v.c, w.b), m.mul(w.c, v.b))
}

pub fn is_perp(v: Vector2, w: Vector2, m: &Modulus) -> bool {
    form(v, w, m) == 0
}

/// The set of vectors perpendicular to `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerpSet {
    base: Vector2,
    members: BTreeSet<Vector2>,
}

impl PerpSet {
    pub fn base(&self) -> Vector2 {
        self.base
    }

    pub fn members(&self) -> &BTreeSet<Vector2> {
        &self.members
    }

    pub fn into_members(self) -> BTreeSet<Vector2> {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &Vector2) -> bool {
        self.members.contains(v)
    }
}

impl Serialize for PerpSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PerpSet", 3)?;
        s.serialize_field("base", &self.base)?;
        s.serialize_field("members", &self.members)?;
        s.serialize_field("size", &self.members.len())?;
        s.end()
    }
}

/// Enumerates all of `Z_d^2` and keeps the vectors perpendicular to `v`.
pub fn perp_set(v: Vector2, m: &Modulus) -> PerpSet {
    PerpSet {
        base: v,
        members: all_vectors(m).filter(|&w| is_perp(v, w, m)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(pairs: &[(u64, u64)]) -> BTreeSet<Vector2> {
        pairs.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn form_examples() {
        let m6 = Modulus::new(6).unwrap();
        assert_eq!(form(Vector2::new(2, 0), Vector2::new(2, 3), &m6), 0);
        assert_eq!(form(Vector2::new(3, 5), Vector2::new(3, 5), &m6), 0);
        for d in 2..20 {
            let m = Modulus::new(d).unwrap();
            assert_eq!(form(Vector2::new(0, 1), Vector2::new(1, 0), &m), 1);
        }
    }

    #[test]
    fn form_is_determinant_with_rows_swapped() {
        let m = Modulus::new(10).unwrap();
        for v in all_vectors(&m) {
            for w in all_vectors(&m) {
                let det = w.b as i64 * v.c as i64 - w.c as i64 * v.b as i64;
                assert_eq!(form(v, w, &m), m.reduce(det));
            }
        }
    }

    #[test]
    fn is_perp_examples() {
        let m6 = Modulus::new(6).unwrap();
        assert!(is_perp(Vector2::new(2, 0), Vector2::new(5, 0), &m6));
        assert!(!is_perp(Vector2::new(0, 1), Vector2::new(1, 0), &m6));
        for w in all_vectors(&m6) {
            assert!(is_perp(Vector2::ZERO, w, &m6));
        }
    }

    #[test]
    fn perp_set_examples() {
        let m6 = Modulus::new(6).unwrap();
        let perp = perp_set(Vector2::new(2, 0), &m6);
        let expected = vs(&[
            (5, 0), (4, 0), (3, 0), (2, 0), (1, 0), (0, 0),
            (2, 3), (0, 3), (4, 3), (5, 3), (3, 3), (1, 3),
        ]);
        assert_eq!(perp.members(), &expected);
        assert_eq!(perp.len(), 12);

        assert_eq!(perp_set(Vector2::ZERO, &m6).len(), 36);
        let perp = perp_set(Vector2::new(1, 0), &m6);
        assert_eq!(perp.members(), &(0..6).map(|u| Vector2::new(u, 0)).collect());
    }

    #[test]
    fn bilinear_exhaustive() {
        for d in 2..=10 {
            let m = Modulus::new(d).unwrap();
            for u in all_vectors(&m) {
                for w in all_vectors(&m) {
                    for a in 0..d {
                        assert_eq!(form(u.scale(a, &m), w, &m), m.mul(a, form(u, w, &m)));
                    }
                    for u2 in all_vectors(&m) {
                        assert_eq!(
                            form(u.add(&u2, &m), w, &m),
                            m.add(form(u, w, &m), form(u2, w, &m))
                        );
                    }
                    assert_eq!(m.add(form(u, w, &m), form(w, u, &m)), 0);
                }
            }
        }
    }

    #[test]
    fn alternating() {
        for d in 2..=30 {
            let m = Modulus::new(d).unwrap();
            assert!(all_vectors(&m).all(|v| form(v, v, &m) == 0));
        }
    }

    #[test]
    fn non_degenerate() {
        for d in 2..=30 {
            let m = Modulus::new(d).unwrap();
            let full: Vec<_> = all_vectors(&m)
                .filter(|&v| all_vectors(&m).all(|w| is_perp(v, w, &m)))
                .collect();
            assert_eq!(full, vec![Vector2::ZERO], "d = {d}");
        }
    }

    #[test]
    fn perp_sets_are_submodules() {
        for d in 2..=15 {
            let m = Modulus::new(d).unwrap();
            for v in all_vectors(&m) {
                let perp = perp_set(v, &m);
                assert!(perp.contains(&v));
                for x in perp.members() {
                    for a in 0..d {
                        assert!(perp.contains(&x.scale(a, &m)));
                        assert!(perp.contains(&v.scale(a, &m)));
                    }
                    for y in perp.members() {
                        assert!(perp.contains(&x.add(y, &m)));
                    }
                }
            }
        }
    }

    #[test]
    fn perp_set_json_is_lexicographic() {
        let m = Modulus::new(2).unwrap();
        let json = serde_json::to_string(&perp_set(Vector2::new(1, 1), &m)).unwrap();
        assert_eq!(json, r#"{"base":[1,1],"members":[[0,0],[1,1]],"size":2}"#);
    }
}
