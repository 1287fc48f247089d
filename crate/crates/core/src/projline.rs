//! The projective line `P1(Z_d)`: admissible vectors, points (free cyclic
//! submodules of `Z_d^2`), the distant/neighbour relation, and the counting
//! results for square-free moduli.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::Result;
use crate::ring::Modulus;
use crate::symplectic::{all_vectors, form, perp_set, Vector2};

/// `(b, c)` is admissible iff `gcd(b, c, d) = 1`, i.e. `ub + vc = 1` is solvable.
pub fn is_admissible(v: Vector2, m: &Modulus) -> bool {
    v.b.gcd(&v.c).gcd(&m.d()) == 1
}

/// Admissibility through the CRT components: every per-prime component of
/// `v` must be non-zero. Square-free `d` only.
pub fn is_admissible_by_components(v: Vector2, m: &Modulus) -> Result<bool> {
    Ok(v.components(m)?.iter().all(|c| !c.is_zero()))
}

/// `Z_d * v`, the orbit of `v` under scalar multiplication.
pub fn cyclic_submodule(v: Vector2, m: &Modulus) -> BTreeSet<Vector2> {
    (0..m.d()).map(|u| v.scale(u, m)).collect()
}

/// A point of the projective line: a free cyclic submodule with exactly `d`
/// members. The generator is the lexicographically smallest admissible member.
#[derive(Debug, Clone, Eq, Serialize)]
pub struct Point {
    generator: Vector2,
    members: BTreeSet<Vector2>,
}

impl PartialEq for Point {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.generator.cmp(&other.generator)
    }
}

impl Point {
    /// The point generated by `v`, or `None` when `v` is not admissible.
    pub fn generated_by(v: Vector2, m: &Modulus) -> Option<Point> {
        if !is_admissible(v, m) {
            return None;
        }
        let members = cyclic_submodule(v, m);
        let generator = *members
            .iter()
            .find(|&&w| is_admissible(w, m))
            .expect("admissible generator is a member");
        Some(Point { generator, members })
    }

    pub fn generator(&self) -> Vector2 {
        self.generator
    }

    pub fn members(&self) -> &BTreeSet<Vector2> {
        &self.members
    }

    pub fn contains(&self, v: &Vector2) -> bool {
        self.members.contains(v)
    }

    pub fn admissible_members(&self, m: &Modulus) -> impl Iterator<Item = &Vector2> + '_ {
        let m = m.clone();
        self.members.iter().filter(move |&&w| is_admissible(w, &m))
    }

    /// Label of the form `Z6(2,3)`.
    pub fn label(&self, m: &Modulus) -> String {
        format!("Z{}{}", m.d(), self.generator)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_d{}", self.generator)
    }
}

/// All points of `P1(Z_d)` together with a vector-to-points incidence index.
#[derive(Debug, Clone)]
pub struct ProjectiveLine {
    modulus: Modulus,
    points: Vec<Point>,
    // incidence[v.index()] lists the indices of points containing v
    incidence: Vec<Vec<usize>>,
}

impl ProjectiveLine {
    pub fn new(m: &Modulus) -> Self {
        let d = m.d() as usize;
        let mut covered = vec![false; d * d];
        let mut points = Vec::new();
        for v in all_vectors(m) {
            if covered[v.index(m)] || !is_admissible(v, m) {
                continue;
            }
            let point = Point::generated_by(v, m).expect("admissible");
            for w in point.members() {
                if is_admissible(*w, m) {
                    covered[w.index(m)] = true;
                }
            }
            points.push(point);
        }
        let mut incidence = vec![Vec::new(); d * d];
        for (i, p) in points.iter().enumerate() {
            for w in p.members() {
                incidence[w.index(m)].push(i);
            }
        }
        ProjectiveLine {
            modulus: m.clone(),
            points,
            incidence,
        }
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Indices of the points containing `v`, ascending.
    pub fn containing_indices(&self, v: Vector2) -> &[usize] {
        &self.incidence[v.index(&self.modulus)]
    }

    pub fn containing(&self, v: Vector2) -> impl Iterator<Item = &Point> + '_ {
        self.containing_indices(v).iter().map(|&i| &self.points[i])
    }
}

/// Points in ascending order of canonical generator.
pub fn enumerate_points(m: &Modulus) -> Vec<Point> {
    ProjectiveLine::new(m).points
}

/// `prod (p_k + 1)`, the number of points for square-free `d`.
pub fn point_count_formula(m: &Modulus) -> Result<u64> {
    m.require_square_free()?;
    Ok(m.primes().map(|p| p + 1).product())
}

/// 0-based indices `k` of the primes at which both components of `v` vanish.
pub fn index_set_k(v: Vector2, m: &Modulus) -> Result<Vec<usize>> {
    Ok(v
        .components(m)?
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_zero())
        .map(|(k, _)| k)
        .collect())
}

/// The primes `p_k` for `k` in the index set `K` of `v`.
pub fn index_set_primes(v: Vector2, m: &Modulus) -> Result<Vec<u64>> {
    let primes: Vec<u64> = m.primes().collect();
    Ok(index_set_k(v, m)?.into_iter().map(|k| primes[k]).collect())
}

/// `prod_{k in K} (p_k + 1)`: how many points contain `v`.
pub fn containing_count_formula(v: Vector2, m: &Modulus) -> Result<u64> {
    Ok(index_set_primes(v, m)?.iter().map(|p| p + 1).product())
}

/// `d * prod_{k in K} p_k`: the size of the perp-set of `v`.
pub fn perp_size_formula(v: Vector2, m: &Modulus) -> Result<u64> {
    Ok(m.d() * index_set_primes(v, m)?.iter().product::<u64>())
}

pub fn points_containing(v: Vector2, m: &Modulus) -> Result<Vec<Point>> {
    m.require_square_free()?;
    Ok(enumerate_points(m)
        .into_iter()
        .filter(|p| p.contains(&v))
        .collect())
}

/// The union of all points through `v`; equals the perp-set of `v` for square-free `d`.
pub fn perp_as_point_union(v: Vector2, m: &Modulus) -> Result<BTreeSet<Vector2>> {
    Ok(points_containing(v, m)?
        .iter()
        .flat_map(|p| p.members().iter().copied())
        .collect())
}

/// Distant iff the generators form a basis, i.e. their determinant is a unit.
pub fn is_distant(p: &Point, q: &Point, m: &Modulus) -> bool {
    m.is_unit(form(p.generator, q.generator, m))
}

/// Distant iff the member sets meet only in the zero vector.
pub fn is_distant_by_members(p: &Point, q: &Point) -> bool {
    p.members()
        .intersection(q.members())
        .all(|v| v.is_zero())
}

/// Perp-set of `v` computed by enumeration and returned as a member set.
pub fn perp_members(v: Vector2, m: &Modulus) -> BTreeSet<Vector2> {
    perp_set(v, m).into_members()
}
