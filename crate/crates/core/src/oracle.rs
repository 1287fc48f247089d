//! Exhaustive verification of the counting results, the perp-set
//! decomposition, the point-construction recipe and the group structure.
//!
//! Each check compares a library routine against an independent brute-force
//! computation over all of `Z_d^2` (or all `d^3` operators). The bilinear form
//! used by the brute-force side is pluggable through [`Harness::with_form`],
//! so tests can inject a faulty convention and confirm that checks notice.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::pauli::{
    all_ops, centre, commutator_by_products, commuting_count, group_closure, to_matrix, PauliOp,
    MAX_CLOSURE_D,
};
use crate::projline::{
    containing_count_formula, cyclic_submodule, is_admissible, perp_size_formula, point_count_formula,
    Point, ProjectiveLine,
};
use crate::ring::{inverse_mod, Modulus};
use crate::symplectic::{all_vectors, form, Vector2};

/// Largest `d` for the exhaustive checks over `Z_d^2`.
pub const MAX_THEOREM_D: u64 = 105;
/// Largest `d` for which all pairs of operators are compared.
pub const MAX_OPERATOR_PAIRS_D: u64 = 12;
/// Up to this `d` the commutator set is collected over all pairs of operators,
/// above it over phase-free pairs.
const FULL_COMMUTATOR_SCAN_D: u64 = 10;

pub type FormFn = fn(Vector2, Vector2, &Modulus) -> u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Passed,
    Failed,
    Skipped,
}

/// Named checks, in the order they appear in a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Admissibility,
    Corollary,
    Group,
    OperatorOracle,
    PointCount,
    Ring,
    Theorem1,
    Theorem2,
    Witness,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Admissibility,
        Check::Corollary,
        Check::Group,
        Check::OperatorOracle,
        Check::PointCount,
        Check::Ring,
        Check::Theorem1,
        Check::Theorem2,
        Check::Witness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Admissibility => "admissibility",
            Check::Corollary => "corollary",
            Check::Group => "group",
            Check::OperatorOracle => "operator-oracle",
            Check::PointCount => "point-count",
            Check::Ring => "ring",
            Check::Theorem1 => "theorem1",
            Check::Theorem2 => "theorem2",
            Check::Witness => "witness",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownCheck(pub String);

impl fmt::Display for UnknownCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
        write!(f, "unknown check '{}' (expected one of: {})", self.0, names.join(", "))
    }
}

impl std::error::Error for UnknownCheck {}

impl FromStr for Check {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| UnknownCheck(s.to_string()))
    }
}

/// Outcome of a single named check. A failed entry always has a counterexample;
/// a skipped one always has a reason. Elapsed time is not serialized so that
/// reports are reproducible byte for byte.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub scope: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckResult {
    fn from_outcome(check: Check, scope: String, outcome: std::result::Result<(), Value>) -> Self {
        let (status, counterexample) = match outcome {
            Ok(()) => (Status::Passed, None),
            Err(witness) => (Status::Failed, Some(witness)),
        };
        CheckResult {
            name: check.name().to_string(),
            scope,
            status,
            reason: None,
            counterexample,
            elapsed: Duration::ZERO,
        }
    }

    fn skipped(check: Check, reason: String) -> Self {
        CheckResult {
            name: check.name().to_string(),
            scope: String::new(),
            status: Status::Skipped,
            reason: Some(reason),
            counterexample: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Passed
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub d: u64,
    pub checks: Vec<CheckResult>,
    /// True when no check failed. Skipped checks are listed but do not fail the report.
    pub all_passed: bool,
}

impl VerificationReport {
    pub fn new(d: u64, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|x, y| x.name.cmp(&y.name));
        let all_passed = checks.iter().all(|c| c.status != Status::Failed);
        VerificationReport {
            d,
            checks,
            all_passed,
        }
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn vec_json(v: Vector2) -> Value {
    json!([v.b, v.c])
}

fn set_json(s: &BTreeSet<Vector2>) -> Value {
    Value::Array(s.iter().map(|&v| vec_json(v)).collect())
}

fn op_json(w: PauliOp) -> Value {
    json!([w.a, w.b, w.c])
}

fn ensure<F: FnOnce() -> Value>(ok: bool, witness: F) -> std::result::Result<(), Value> {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

fn bound(m: &Modulus, max: u64, what: &'static str) -> Result<()> {
    if m.d() > max {
        Err(Error::TooLarge {
            d: m.d(),
            max,
            what,
        })
    } else {
        Ok(())
    }
}

/// The point through `base` and `target` built component by component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// `(b', c')`, admissible.
    pub generator: Vector2,
    /// `u` with `base = u (b', c')`.
    pub base_scalar: u64,
    /// `s` with `target = s (b', c')`.
    pub target_scalar: u64,
    /// 0-based prime indices where the `(1, 1)` fallback was used.
    pub fallback: Vec<usize>,
}

/// Builds an admissible `(b', c')` whose point contains both `base` and
/// `target`, for `target` perpendicular to `base` and square-free `d`.
///
/// Off the index set `K` of `base`, the components of `base` are copied and
/// `u = 1`. On `K`, the components of `target` are copied when non-zero,
/// otherwise `(1, 1)`, and `u = 0`. The scalar for `target` is `1` or `0` on
/// `K`, and off `K` it is the unique field element `s_j` with
/// `target_j = s_j * base_j`, which exists because the determinant vanishes.
pub fn construct_witness(base: Vector2, target: Vector2, m: &Modulus) -> Result<Witness> {
    m.require_square_free()?;
    let base_parts = base.components(m)?;
    let target_parts = target.components(m)?;
    let primes: Vec<u64> = m.primes().collect();

    let mut gen_b = Vec::with_capacity(primes.len());
    let mut gen_c = Vec::with_capacity(primes.len());
    let mut u = Vec::with_capacity(primes.len());
    let mut s = Vec::with_capacity(primes.len());
    let mut fallback = Vec::new();

    for (k, &p) in primes.iter().enumerate() {
        let (bk, tk) = (base_parts[k], target_parts[k]);
        if !bk.is_zero() {
            gen_b.push(bk.b);
            gen_c.push(bk.c);
            u.push(1);
            // target_k = s * base_k over Z_p
            let scalar = if bk.b != 0 {
                tk.b * inverse_mod(bk.b, p).expect("non-zero in a field") % p
            } else {
                tk.c * inverse_mod(bk.c, p).expect("non-zero in a field") % p
            };
            if (scalar * bk.b % p, scalar * bk.c % p) != (tk.b, tk.c) {
                return Err(Error::NotPerpendicular((target.b, target.c)));
            }
            s.push(scalar);
        } else if !tk.is_zero() {
            gen_b.push(tk.b);
            gen_c.push(tk.c);
            u.push(0);
            s.push(1);
        } else {
            gen_b.push(1);
            gen_c.push(1);
            u.push(0);
            s.push(0);
            fallback.push(k);
        }
    }

    Ok(Witness {
        generator: Vector2::new(m.from_components(&gen_b)?, m.from_components(&gen_c)?),
        base_scalar: m.from_components(&u)?,
        target_scalar: m.from_components(&s)?,
        fallback,
    })
}

/// Runs the checks with a chosen bilinear form on the brute-force side.
#[derive(Debug, Clone, Copy)]
pub struct Harness {
    form: FormFn,
}

impl Default for Harness {
    fn default() -> Self {
        Harness { form }
    }
}

impl Harness {
    pub fn with_form(form: FormFn) -> Self {
        Harness { form }
    }

    fn perp(&self, v: Vector2, m: &Modulus) -> BTreeSet<Vector2> {
        all_vectors(m).filter(|&w| (self.form)(v, w, m) == 0).collect()
    }

    fn commutes(&self, w: PauliOp, w2: PauliOp, m: &Modulus) -> bool {
        (self.form)(w.coset(), w2.coset(), m) == 0
    }

    /// Points through `v` lie in the perp-set of `v`; for admissible `v`
    /// the perp-set is `Z_d v` and is the only point through `v`.
    pub fn theorem1(&self, m: &Modulus) -> Result<CheckResult> {
        bound(m, MAX_THEOREM_D, "exhaustive perp-set checks")?;
        let line = ProjectiveLine::new(m);
        let outcome = all_vectors(m).try_for_each(|v| {
            let perp = self.perp(v, m);
            for p in line.containing(v) {
                ensure(p.members().is_subset(&perp), || {
                    json!({"claim": "point through v lies in perp(v)", "v": vec_json(v),
                           "point": p.generator().to_string(), "perp": set_json(&perp)})
                })?;
            }
            if is_admissible(v, m) {
                let span = cyclic_submodule(v, m);
                ensure(perp == span, || {
                    json!({"claim": "perp(v) = Z_d v for admissible v", "v": vec_json(v),
                           "perp": set_json(&perp), "span": set_json(&span)})
                })?;
                for p in line.containing(v) {
                    ensure(*p.members() == span, || {
                        json!({"claim": "only point through admissible v is Z_d v",
                               "v": vec_json(v), "point": p.generator().to_string()})
                    })?;
                }
            }
            Ok(())
        });
        Ok(CheckResult::from_outcome(
            Check::Theorem1,
            format!("all {} vectors of Z_{}^2", m.d() * m.d(), m.d()),
            outcome,
        ))
    }

    /// For every `v`: point count through `v`, union of those points equals
    /// the perp-set, and perp-set size, against the product formulas.
    pub fn theorem2(&self, m: &Modulus) -> Result<CheckResult> {
        m.require_square_free()?;
        bound(m, MAX_THEOREM_D, "exhaustive perp-set checks")?;
        let line = ProjectiveLine::new(m);
        let outcome = all_vectors(m).try_for_each(|v| {
            let through: Vec<&Point> = line.containing(v).collect();
            let expected = containing_count_formula(v, m).expect("square-free");
            ensure(through.len() as u64 == expected, || {
                json!({"claim": "points through v", "v": vec_json(v),
                       "enumerated": through.len(), "formula": expected})
            })?;
            let perp = self.perp(v, m);
            let union: BTreeSet<Vector2> = through
                .iter()
                .flat_map(|p| p.members().iter().copied())
                .collect();
            ensure(union == perp, || {
                json!({"claim": "union of points through v = perp(v)", "v": vec_json(v),
                       "points": through.iter().map(|p| p.generator().to_string()).collect::<Vec<_>>(),
                       "union": set_json(&union), "perp": set_json(&perp)})
            })?;
            let size = perp_size_formula(v, m).expect("square-free");
            ensure(perp.len() as u64 == size, || {
                json!({"claim": "|perp(v)| = d prod_K p", "v": vec_json(v),
                       "enumerated": perp.len(), "formula": size})
            })
        });
        Ok(CheckResult::from_outcome(
            Check::Theorem2,
            format!("all {} vectors of Z_{}^2", m.d() * m.d(), m.d()),
            outcome,
        ))
    }

    /// For every `v` and every `w` in its perp-set, the component recipe
    /// yields an admissible generator whose point holds both.
    pub fn witness(&self, m: &Modulus) -> Result<CheckResult> {
        m.require_square_free()?;
        bound(m, MAX_THEOREM_D, "exhaustive perp-set checks")?;
        let mut pairs = 0u64;
        let outcome = all_vectors(m).try_for_each(|v| {
            for w in self.perp(v, m) {
                pairs += 1;
                let fail = |detail: &str, gen: Option<Vector2>| {
                    json!({"claim": detail, "v": vec_json(v), "w": vec_json(w),
                           "generator": gen.map(vec_json)})
                };
                let wit = match construct_witness(v, w, m) {
                    Ok(wit) => wit,
                    Err(e) => return Err(fail(&e.to_string(), None)),
                };
                let g = wit.generator;
                ensure(is_admissible(g, m), || fail("generator admissible", Some(g)))?;
                ensure(g.scale(wit.base_scalar, m) == v, || fail("v = u (b',c')", Some(g)))?;
                ensure(g.scale(wit.target_scalar, m) == w, || fail("w = s (b',c')", Some(g)))?;
                let point = cyclic_submodule(g, m);
                ensure(point.contains(&v) && point.contains(&w), || {
                    fail("point contains v and w", Some(g))
                })?;
            }
            Ok(())
        });
        Ok(CheckResult::from_outcome(
            Check::Witness,
            format!("{pairs} perpendicular pairs in Z_{}^2", m.d()),
            outcome,
        ))
    }

    /// Closure of `{X, Z}` has `d^3` elements and coincides with the normal
    /// forms; the centre is `{w^a I}`; the commutator set equals the centre
    /// and matches the closed form.
    pub fn group(&self, m: &Modulus) -> Result<CheckResult> {
        bound(m, MAX_CLOSURE_D, "group closure")?;
        let d = m.d();
        let closure = group_closure(m)?;
        let outcome = (|| {
            let normal_forms: HashSet<_> = all_ops(m).map(|w| to_matrix(w, m)).collect();
            ensure(closure.len() as u64 == d * d * d, || {
                json!({"claim": "|<X,Z>| = d^3", "closure_order": closure.len()})
            })?;
            ensure(normal_forms.len() as u64 == d * d * d, || {
                json!({"claim": "normal forms are distinct", "distinct": normal_forms.len()})
            })?;
            ensure(closure == normal_forms, || {
                json!({"claim": "closure equals the set of normal-form matrices"})
            })?;

            let expected_centre = centre(m);
            let brute_centre: Vec<PauliOp> = all_ops(m)
                .filter(|&w| all_ops(m).all(|w2| self.commutes(w, w2, m)))
                .collect();
            ensure(brute_centre == expected_centre, || {
                json!({"claim": "centre = {w^a I}",
                       "brute_force": brute_centre.iter().map(|&w| op_json(w)).collect::<Vec<_>>()})
            })?;

            let mut commutators = BTreeSet::new();
            let full_scan = d <= FULL_COMMUTATOR_SCAN_D;
            for w in all_ops(m).filter(|w| full_scan || w.a == 0) {
                for w2 in all_ops(m).filter(|w| full_scan || w.a == 0) {
                    let k = commutator_by_products(w, w2, m);
                    let closed = PauliOp::scalar((self.form)(w.coset(), w2.coset(), m));
                    ensure(k == closed, || {
                        json!({"claim": "four-fold product = closed-form commutator",
                               "w": op_json(w), "w2": op_json(w2),
                               "product": op_json(k), "closed_form": op_json(closed)})
                    })?;
                    commutators.insert(k);
                }
            }
            let centre_set: BTreeSet<_> = expected_centre.into_iter().collect();
            ensure(commutators == centre_set, || {
                json!({"claim": "commutator set = centre",
                       "commutators": commutators.iter().map(|&w| op_json(w)).collect::<Vec<_>>()})
            })
        })();
        let scope = if d <= FULL_COMMUTATOR_SCAN_D {
            format!("{} operators, all pairs", d * d * d)
        } else {
            format!("{} operators, phase-free pairs for commutators", d * d * d)
        };
        Ok(CheckResult::from_outcome(Check::Group, scope, outcome))
    }

    /// For every operator, the enumerated commutant size equals `d` times
    /// the perp-set size formula.
    pub fn corollary(&self, m: &Modulus) -> Result<CheckResult> {
        m.require_square_free()?;
        bound(m, MAX_CLOSURE_D, "commutant enumeration")?;
        let outcome = all_ops(m).try_for_each(|w| {
            let brute = all_ops(m).filter(|&w2| self.commutes(w, w2, m)).count() as u64;
            let formula = commuting_count(w, m).expect("square-free");
            ensure(brute == formula, || {
                json!({"claim": "commutant size = d * |perp|", "operator": op_json(w),
                       "enumerated": brute, "formula": formula})
            })
        });
        Ok(CheckResult::from_outcome(
            Check::Corollary,
            format!("all {} operators", m.d().pow(3)),
            outcome,
        ))
    }

    /// Closed-form commutator vs four-fold product, and `commutes` vs exact
    /// matrix commutation, over all pairs of operators.
    pub fn operator_oracle(&self, m: &Modulus) -> Result<CheckResult> {
        bound(m, MAX_OPERATOR_PAIRS_D, "all-pairs operator comparison")?;
        let mats: Vec<_> = all_ops(m).map(|w| (w, to_matrix(w, m))).collect();
        let outcome = mats.iter().try_for_each(|(w, mw)| {
            for (w2, mw2) in &mats {
                let closed = PauliOp::scalar((self.form)(w.coset(), w2.coset(), m));
                let product = commutator_by_products(*w, *w2, m);
                ensure(closed == product, || {
                    json!({"claim": "closed-form commutator = four-fold product",
                           "w": op_json(*w), "w2": op_json(*w2),
                           "closed_form": op_json(closed), "product": op_json(product)})
                })?;
                let by_matrix = mw.mul(mw2) == mw2.mul(mw);
                ensure(self.commutes(*w, *w2, m) == by_matrix, || {
                    json!({"claim": "commutes agrees with matrix commutation",
                           "w": op_json(*w), "w2": op_json(*w2), "matrix_commute": by_matrix})
                })?;
            }
            Ok(())
        });
        Ok(CheckResult::from_outcome(
            Check::OperatorOracle,
            format!("{} operator pairs", mats.len() * mats.len()),
            outcome,
        ))
    }

    /// Number of points equals `prod (p_k + 1)`.
    pub fn point_count(&self, m: &Modulus) -> Result<CheckResult> {
        let formula = point_count_formula(m)?;
        let count = ProjectiveLine::new(m).len() as u64;
        Ok(CheckResult::from_outcome(
            Check::PointCount,
            format!("P1(Z_{})", m.d()),
            ensure(count == formula, || json!({"enumerated": count, "formula": formula})),
        ))
    }

    /// Gcd rule, unimodularity search, freeness of `Z_d v`, and (square-free)
    /// non-vanishing components agree for every vector.
    pub fn admissibility(&self, m: &Modulus) -> Result<CheckResult> {
        bound(m, MAX_THEOREM_D, "exhaustive admissibility search")?;
        let d = m.d();
        let outcome = all_vectors(m).try_for_each(|v| {
            let gcd_rule = is_admissible(v, m);
            let unimodular = (0..d).any(|x| {
                (0..d).any(|y| m.add(m.mul(x, v.b), m.mul(y, v.c)) == 1)
            });
            let free = cyclic_submodule(v, m).len() as u64 == d;
            let by_components = if m.is_square_free() {
                v.components(m).expect("square-free").iter().all(|c| !c.is_zero())
            } else {
                gcd_rule
            };
            ensure(gcd_rule == unimodular && gcd_rule == free && gcd_rule == by_components, || {
                json!({"v": vec_json(v), "gcd": gcd_rule, "unimodular": unimodular,
                       "free": free, "components": by_components})
            })
        });
        Ok(CheckResult::from_outcome(
            Check::Admissibility,
            format!("all {} vectors of Z_{}^2", d * d, d),
            outcome,
        ))
    }

    /// Idempotent identities, componentwise ring laws, and units as elements
    /// with no vanishing component.
    pub fn ring(&self, m: &Modulus) -> Result<CheckResult> {
        m.require_square_free()?;
        bound(m, MAX_THEOREM_D, "exhaustive ring checks")?;
        let d = m.d();
        let es = m.idempotents();
        let primes: Vec<u64> = m.primes().collect();
        let outcome = (|| {
            for (k, &e) in es.iter().enumerate() {
                ensure(m.mul(e, e) == e, || json!({"claim": "e_k^2 = e_k", "k": k, "e": e}))?;
                for (j, &f) in es.iter().enumerate().filter(|&(j, _)| j != k) {
                    ensure(m.mul(e, f) == 0, || json!({"claim": "e_j e_k = 0", "j": j, "k": k}))?;
                }
            }
            let sum = es.iter().fold(0, |acc, &e| m.add(acc, e));
            ensure(sum == 1, || json!({"claim": "sum e_k = 1", "sum": sum}))?;
            for x in 0..d {
                let all_nonzero = primes.iter().all(|p| x % p != 0);
                ensure(m.is_unit(x) == all_nonzero, || {
                    json!({"claim": "unit iff all components non-zero", "x": x})
                })?;
                for y in 0..d {
                    for (k, &p) in primes.iter().enumerate() {
                        let cx = m.component(x, k).expect("square-free");
                        let cy = m.component(y, k).expect("square-free");
                        ensure(
                            m.component(m.add(x, y), k).expect("square-free") == (cx + cy) % p
                                && m.component(m.mul(x, y), k).expect("square-free") == cx * cy % p,
                            || json!({"claim": "componentwise ring laws", "x": x, "y": y, "k": k}),
                        )?;
                    }
                }
            }
            let units = (0..d).filter(|&x| m.is_unit(x)).count() as u64;
            ensure(units == m.unit_count(), || {
                json!({"claim": "unit count", "enumerated": units, "formula": m.unit_count()})
            })
        })();
        Ok(CheckResult::from_outcome(
            Check::Ring,
            format!("all {} pairs of Z_{}", d * d, d),
            outcome,
        ))
    }

    /// Runs one check, turning a precondition failure into a skipped entry.
    pub fn run(&self, check: Check, m: &Modulus) -> CheckResult {
        let start = Instant::now();
        let result = match check {
            Check::Admissibility => self.admissibility(m),
            Check::Corollary => self.corollary(m),
            Check::Group => self.group(m),
            Check::OperatorOracle => self.operator_oracle(m),
            Check::PointCount => self.point_count(m),
            Check::Ring => self.ring(m),
            Check::Theorem1 => self.theorem1(m),
            Check::Theorem2 => self.theorem2(m),
            Check::Witness => self.witness(m),
        };
        let mut entry = match result {
            Ok(entry) => entry,
            Err(Error::NotSquareFree { .. }) => {
                CheckResult::skipped(check, "skipped: requires square-free d".to_string())
            }
            Err(e) => CheckResult::skipped(check, format!("skipped: {e}")),
        };
        entry.elapsed = start.elapsed();
        entry
    }

    pub fn verify(&self, m: &Modulus, checks: &[Check]) -> VerificationReport {
        let mut checks = checks.to_vec();
        checks.sort();
        checks.dedup();
        VerificationReport::new(m.d(), checks.into_iter().map(|c| self.run(c, m)).collect())
    }

    pub fn verify_all(&self, m: &Modulus) -> VerificationReport {
        self.verify(m, &Check::ALL)
    }
}

/// Deliberately wrong bilinear forms, for confirming that the checks detect
/// a broken convention.
pub mod faults {
    use crate::ring::Modulus;
    use crate::symplectic::{form, Vector2};

    /// `c'b - cb'`: the opposite sign convention.
    pub fn flipped_sign(v: Vector2, w: Vector2, m: &Modulus) -> u64 {
        m.neg(form(v, w, m))
    }

    /// `cb' + c'b`: symmetric rather than alternating.
    pub fn symmetric(v: Vector2, w: Vector2, m: &Modulus) -> u64 {
        m.add(m.mul(v.c, w.b), m.mul(w.c, v.b))
    }
}

pub fn verify_theorem1(m: &Modulus) -> Result<CheckResult> {
    Harness::default().theorem1(m)
}

pub fn verify_theorem2(m: &Modulus) -> Result<CheckResult> {
    Harness::default().theorem2(m)
}

pub fn verify_witness_construction(m: &Modulus) -> Result<CheckResult> {
    Harness::default().witness(m)
}

pub fn verify_group(m: &Modulus) -> Result<CheckResult> {
    Harness::default().group(m)
}

pub fn verify_corollary(m: &Modulus) -> Result<CheckResult> {
    Harness::default().corollary(m)
}

pub fn verify_all(m: &Modulus) -> VerificationReport {
    Harness::default().verify_all(m)
}
