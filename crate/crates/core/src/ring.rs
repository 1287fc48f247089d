//! Arithmetic in `Z_d`: factorization, units, and the Chinese-remainder
//! decomposition of a square-free modulus into prime fields.
//!
//! Components of an element `y` are represented as residues `y mod p_k`.
//! This is the image of the ideal component `y * e_k` under the unique field
//! isomorphism onto `Z_{p_k}`; the idempotents `e_k` recover the ideal view.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// A modulus `d > 1` together with its prime factorization and, when `d` is
/// square-free, the CRT idempotents `e_k` (`e_k = 1 mod p_k`, `e_k = 0 mod p_j`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Modulus {
    d: u64,
    factors: Vec<(u64, u32)>,
    square_free: bool,
    idempotents: Vec<u64>,
}

impl Modulus {
    pub fn new(d: u64) -> Result<Self> {
        if d <= 1 {
            return Err(Error::InvalidModulus(d));
        }
        let factors = factorize(d);
        let square_free = factors.iter().all(|&(_, m)| m == 1);
        let idempotents = if square_free {
            factors
                .iter()
                .map(|&(p, _)| crt_idempotent(p, d / p, d))
                .collect()
        } else {
            Vec::new()
        };
        Ok(Modulus {
            d,
            factors,
            square_free,
            idempotents,
        })
    }

    #[inline]
    pub fn d(&self) -> u64 {
        self.d
    }

    /// `(p_k, m_k)` with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Number of distinct prime factors `r`.
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_square_free(&self) -> bool {
        self.square_free
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Empty unless the modulus is square-free.
    pub fn idempotents(&self) -> &[u64] {
        &self.idempotents
    }

    pub fn require_square_free(&self) -> Result<()> {
        if self.square_free {
            Ok(())
        } else {
            Err(Error::NotSquareFree { d: self.d })
        }
    }

    pub fn check_reduced(&self, value: u64) -> Result<u64> {
        if value < self.d {
            Ok(value)
        } else {
            Err(Error::NotReduced { value, d: self.d })
        }
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.d as i64) as u64
    }

    #[inline]
    pub fn add(&self, x: u64, y: u64) -> u64 {
        (x + y) % self.d
    }

    #[inline]
    pub fn sub(&self, x: u64, y: u64) -> u64 {
        (x + self.d - y % self.d) % self.d
    }

    #[inline]
    pub fn neg(&self, x: u64) -> u64 {
        (self.d - x % self.d) % self.d
    }

    #[inline]
    pub fn mul(&self, x: u64, y: u64) -> u64 {
        ((x as u128 * y as u128) % self.d as u128) as u64
    }

    pub fn is_unit(&self, x: u64) -> bool {
        x.gcd(&self.d) == 1
    }

    /// Euler's totient of `d`. For square-free `d` this is `prod (p_k - 1)`.
    pub fn unit_count(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, m)| (p - 1) * p.pow(m - 1))
            .product()
    }

    pub fn invert(&self, x: u64) -> Result<u64> {
        inverse_mod(x % self.d, self.d).ok_or(Error::NotInvertible {
            x,
            d: self.d,
            gcd: x.gcd(&self.d),
        })
    }

    /// The `k`-th component (0-based) of `y`, as a residue modulo `p_k`.
    pub fn component(&self, y: u64, k: usize) -> Result<u64> {
        self.require_square_free()?;
        let &(p, _) = self.factors.get(k).ok_or(Error::ComponentOutOfRange {
            index: k,
            count: self.factors.len(),
        })?;
        Ok(y % p)
    }

    pub fn components(&self, y: u64) -> Result<Vec<u64>> {
        self.require_square_free()?;
        Ok(self.primes().map(|p| y % p).collect())
    }

    /// Reassembles an element of `Z_d` from residues modulo each prime,
    /// as `sum_k e_k * r_k`.
    pub fn from_components(&self, residues: &[u64]) -> Result<u64> {
        self.require_square_free()?;
        if residues.len() != self.rank() {
            return Err(Error::ComponentOutOfRange {
                index: residues.len(),
                count: self.rank(),
            });
        }
        Ok(self
            .idempotents
            .iter()
            .zip(residues)
            .fold(0, |acc, (&e, &r)| self.add(acc, self.mul(e, r))))
    }
}

/// Trial-division factorization of `n >= 2`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut m = 0;
            while n.is_multiple_of(p) {
                n /= p;
                m += 1;
            }
            out.push((p, m));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Inverse of `x` modulo `n` by the extended Euclidean algorithm.
pub fn inverse_mod(x: u64, n: u64) -> Option<u64> {
    let g = (x as i64).extended_gcd(&(n as i64));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(n as i64) as u64)
}

// e = 1 mod p, e = 0 mod q, with p*q = d and gcd(p, q) = 1.
fn crt_idempotent(p: u64, q: u64, d: u64) -> u64 {
    let q_inv = inverse_mod(q % p, p).unwrap_or(0);
    ((q as u128 * q_inv as u128) % d as u128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcd_brute(a: u64, b: u64) -> u64 {
        (1..=a.max(b)).rev().find(|&g| a.is_multiple_of(g) && b.is_multiple_of(g)).unwrap_or(0)
    }

    fn square_free_upto(n: u64) -> impl Iterator<Item = Modulus> {
        (2..=n)
            .map(|d| Modulus::new(d).unwrap())
            .filter(|m| m.is_square_free())
    }

    #[test]
    fn make_modulus_examples() {
        let m6 = Modulus::new(6).unwrap();
        assert_eq!(m6.factors(), &[(2, 1), (3, 1)]);
        assert!(m6.is_square_free());
        assert_eq!(m6.idempotents(), &[3, 4]);

        let m7 = Modulus::new(7).unwrap();
        assert_eq!(m7.factors(), &[(7, 1)]);
        assert_eq!(m7.idempotents(), &[1]);

        let m12 = Modulus::new(12).unwrap();
        assert_eq!(m12.factors(), &[(2, 2), (3, 1)]);
        assert!(!m12.is_square_free());
        assert!(m12.idempotents().is_empty());
    }

    #[test]
    fn rejects_small_moduli() {
        assert_eq!(Modulus::new(1), Err(Error::InvalidModulus(1)));
        assert_eq!(Modulus::new(0), Err(Error::InvalidModulus(0)));
    }

    #[test]
    fn factorization_invariants() {
        for d in 2..=2000u64 {
            let m = Modulus::new(d).unwrap();
            let prod: u64 = m.factors().iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, d);
            assert!(m.factors().windows(2).all(|w| w[0].0 < w[1].0));
            for &(p, _) in m.factors() {
                assert!((2..p).all(|q| p % q != 0), "{p} not prime");
            }
        }
    }

    #[test]
    fn units() {
        let m6 = Modulus::new(6).unwrap();
        assert!(m6.is_unit(5));
        assert!(!m6.is_unit(2));
        for d in 2..30 {
            assert!(Modulus::new(d).unwrap().is_unit(1));
        }
        assert_eq!(m6.unit_count(), 2);
        assert_eq!(Modulus::new(7).unwrap().unit_count(), 6);
        assert_eq!(Modulus::new(30).unwrap().unit_count(), 8);
    }

    #[test]
    fn unit_count_matches_exhaustive_count() {
        for d in 2..=60 {
            let m = Modulus::new(d).unwrap();
            let brute = (0..d).filter(|&x| gcd_brute(x, d) == 1).count() as u64;
            assert_eq!(m.unit_count(), brute, "d = {d}");
        }
    }

    #[test]
    fn square_free_unit_count_is_product_formula() {
        for m in square_free_upto(210) {
            let formula: u64 = m.primes().map(|p| p - 1).product();
            assert_eq!(m.unit_count(), formula);
        }
    }

    #[test]
    fn invert_examples() {
        assert_eq!(Modulus::new(6).unwrap().invert(5), Ok(5));
        assert_eq!(Modulus::new(7).unwrap().invert(2), Ok(4));
        assert_eq!(Modulus::new(30).unwrap().invert(7), Ok(13));
        assert_eq!(
            Modulus::new(6).unwrap().invert(4),
            Err(Error::NotInvertible { x: 4, d: 6, gcd: 2 })
        );
    }

    #[test]
    fn invert_round_trips_for_all_units() {
        for d in 2..=60 {
            let m = Modulus::new(d).unwrap();
            for x in (0..d).filter(|&x| m.is_unit(x)) {
                assert_eq!(m.mul(x, m.invert(x).unwrap()), 1 % d);
            }
        }
    }

    #[test]
    fn component_examples() {
        let m6 = Modulus::new(6).unwrap();
        assert_eq!(m6.component(2, 0), Ok(0));
        assert_eq!(m6.component(2, 1), Ok(2));
        for m in square_free_upto(30) {
            for k in 0..m.rank() {
                assert_eq!(m.component(1, k), Ok(1));
            }
        }
        assert_eq!(
            m6.component(1, 2),
            Err(Error::ComponentOutOfRange { index: 2, count: 2 })
        );
        assert_eq!(
            Modulus::new(12).unwrap().component(1, 0),
            Err(Error::NotSquareFree { d: 12 })
        );
    }

    #[test]
    fn components_respect_ring_operations() {
        for m in square_free_upto(30) {
            let d = m.d();
            for x in 0..d {
                for y in 0..d {
                    for (k, p) in m.primes().enumerate() {
                        let (cx, cy) = (m.component(x, k).unwrap(), m.component(y, k).unwrap());
                        assert_eq!(m.component(m.add(x, y), k).unwrap(), (cx + cy) % p);
                        assert_eq!(m.component(m.mul(x, y), k).unwrap(), (cx * cy) % p);
                    }
                }
            }
        }
    }

    #[test]
    fn unit_iff_all_components_nonzero() {
        for m in square_free_upto(30) {
            for x in 0..m.d() {
                let all_nonzero = m.components(x).unwrap().iter().all(|&c| c != 0);
                assert_eq!(m.is_unit(x), all_nonzero, "d = {}, x = {x}", m.d());
            }
        }
    }

    #[test]
    fn idempotent_identities() {
        for m in square_free_upto(210) {
            let d = m.d();
            let es = m.idempotents();
            assert_eq!(es.len(), m.rank());
            for (k, (&e, p)) in es.iter().zip(m.primes()).enumerate() {
                assert_eq!(e % p, 1);
                for (j, q) in m.primes().enumerate() {
                    if j != k {
                        assert_eq!(e % q, 0);
                    }
                }
                assert_eq!(m.mul(e, e), e);
                for (j, &f) in es.iter().enumerate() {
                    if j != k {
                        assert_eq!(m.mul(e, f), 0);
                    }
                }
            }
            assert_eq!(es.iter().fold(0, |acc, &e| m.add(acc, e)), 1 % d);
        }
    }

    #[test]
    fn from_components_inverts_components() {
        for m in square_free_upto(105) {
            for y in 0..m.d() {
                assert_eq!(m.from_components(&m.components(y).unwrap()), Ok(y));
            }
        }
    }

    #[test]
    fn modulus_json_shape() {
        let json = serde_json::to_string(&Modulus::new(6).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"d":6,"factors":[[2,1],[3,1]],"square_free":true,"idempotents":[3,4]}"#
        );
        let json = serde_json::to_string(&Modulus::new(12).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"d":12,"factors":[[2,2],[3,1]],"square_free":false,"idempotents":[]}"#
        );
    }

    #[test]
    fn reduction_helpers() {
        let m = Modulus::new(6).unwrap();
        assert_eq!(m.reduce(-1), 5);
        assert_eq!(m.reduce(-12), 0);
        assert_eq!(m.sub(1, 4), 3);
        assert_eq!(m.neg(0), 0);
        assert_eq!(m.neg(2), 4);
        assert_eq!(m.check_reduced(6), Err(Error::NotReduced { value: 6, d: 6 }));
    }
}
