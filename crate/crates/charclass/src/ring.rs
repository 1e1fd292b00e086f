//! Truncated graded-commutative polynomial rings over exact rationals.
//!
//! A [`RingSpec`] fixes named generators with positive (complex) degrees, a
//! truncation degree, an optional monomial ideal of relations, and an optional
//! integration functional that extracts the coefficient of a designated top
//! monomial. [`GradedClass`] is a sparse polynomial in such a ring, kept in
//! normal form: no zero coefficients, no terms above the truncation, no terms
//! divisible by a relation monomial.
//!
//! Degrees throughout are complex degrees, so a Chern class `c_i` lives in
//! degree `i` rather than cohomological degree `2i`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational coefficient type used everywhere in the crate.
pub type Rat = BigRational;

/// Build a `Rat` from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Build a `Rat` from a numerator/denominator pair.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Render a rational as `p` or `p/q` with `q > 0` and `gcd(p, q) = 1`.
pub fn rat_to_text(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` has degree 0; degrees must be >= 1")]
    ZeroDegree(String),
    #[error("generator name `{0}` is not a valid identifier")]
    BadGeneratorName(String),
    #[error("relation monomial `{monomial}` has degree {degree} > truncation + max generator degree = {bound}; it is redundant")]
    RedundantRelation {
        monomial: String,
        degree: u32,
        bound: u32,
    },
    #[error("relation exponent vector has length {got}, ring has {want} generators")]
    RelationArity { got: usize, want: usize },
    #[error("integration monomial has degree {got}, truncation is {want}")]
    IntegrationDegree { got: u32, want: u32 },
    #[error("integration monomial is divisible by a relation monomial; the pairing would vanish identically")]
    IntegrationReducible,
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("ring has no integration monomial; pairing is undefined")]
    NoIntegration,
    #[error("substitution image for `{name}` is not homogeneous of degree {degree}")]
    SubstitutionDegree { name: String, degree: u32 },
    #[error("no substitution image provided for generator `{0}`")]
    MissingImage(String),
}

/// A named generator with its complex degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// Integration functional: `pair(a) = scale * coefficient_of(monomial, a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Integration {
    pub monomial: Vec<u32>,
    pub scale: Rat,
}

/// Specification of a truncated graded ring with monomial relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    gens: Vec<Generator>,
    truncation: u32,
    relations: Vec<Vec<u32>>,
    integration: Option<Integration>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingSpec {
    /// Validate and construct a ring spec.
    ///
    /// Relations are monomial only (given as exponent vectors); a relation of
    /// degree above `truncation + max generator degree` is rejected as
    /// redundant. The integration monomial, when present, must have degree
    /// exactly `truncation` and must not itself reduce to zero.
    pub fn new(
        gens: Vec<(String, u32)>,
        truncation: u32,
        relations: Vec<Vec<u32>>,
        integration: Option<(Vec<u32>, Rat)>,
    ) -> Result<Arc<RingSpec>, RingError> {
        let mut seen = std::collections::BTreeSet::new();
        for (name, degree) in &gens {
            if !is_identifier(name) {
                return Err(RingError::BadGeneratorName(name.clone()));
            }
            if *degree == 0 {
                return Err(RingError::ZeroDegree(name.clone()));
            }
            if !seen.insert(name.clone()) {
                return Err(RingError::DuplicateGenerator(name.clone()));
            }
        }
        let gens: Vec<Generator> = gens
            .into_iter()
            .map(|(name, degree)| Generator { name, degree })
            .collect();
        let max_gen_degree = gens.iter().map(|g| g.degree).max().unwrap_or(0);
        let spec = RingSpec {
            gens,
            truncation,
            relations: Vec::new(),
            integration: None,
        };
        let mut spec = spec;
        for rel in relations {
            if rel.len() != spec.gens.len() {
                return Err(RingError::RelationArity {
                    got: rel.len(),
                    want: spec.gens.len(),
                });
            }
            let degree = spec.monomial_degree(&rel);
            let bound = truncation + max_gen_degree;
            if degree > bound {
                return Err(RingError::RedundantRelation {
                    monomial: spec.monomial_text(&rel),
                    degree,
                    bound,
                });
            }
            spec.relations.push(rel);
        }
        if let Some((monomial, scale)) = integration {
            if monomial.len() != spec.gens.len() {
                return Err(RingError::RelationArity {
                    got: monomial.len(),
                    want: spec.gens.len(),
                });
            }
            let got = spec.monomial_degree(&monomial);
            if got != truncation {
                return Err(RingError::IntegrationDegree {
                    got,
                    want: truncation,
                });
            }
            if spec.reduces_by_relation(&monomial) {
                return Err(RingError::IntegrationReducible);
            }
            spec.integration = Some(Integration { monomial, scale });
        }
        Ok(Arc::new(spec))
    }

    /// Convenience constructor from `(name, degree)` string pairs.
    pub fn with_gens(gens: &[(&str, u32)], truncation: u32) -> Result<Arc<RingSpec>, RingError> {
        RingSpec::new(
            gens.iter().map(|(n, d)| (n.to_string(), *d)).collect(),
            truncation,
            Vec::new(),
            None,
        )
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn relations(&self) -> &[Vec<u32>] {
        &self.relations
    }

    pub fn integration(&self) -> Option<&Integration> {
        self.integration.as_ref()
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn gen_degree(&self, name: &str) -> Option<u32> {
        self.gens.iter().find(|g| g.name == name).map(|g| g.degree)
    }

    /// Weighted complex degree of an exponent vector.
    pub fn monomial_degree(&self, exps: &[u32]) -> u32 {
        exps.iter()
            .zip(&self.gens)
            .map(|(e, g)| e * g.degree)
            .sum()
    }

    fn reduces_by_relation(&self, exps: &[u32]) -> bool {
        self.relations
            .iter()
            .any(|rel| rel.iter().zip(exps).all(|(r, e)| e >= r))
    }

    /// True when a monomial is killed by truncation or a relation.
    pub fn kills(&self, exps: &[u32]) -> bool {
        self.monomial_degree(exps) > self.truncation || self.reduces_by_relation(exps)
    }

    /// Text form of a monomial, e.g. `h^2` or `c1*c2`; `1` for the constant.
    pub fn monomial_text(&self, exps: &[u32]) -> String {
        let mut parts = Vec::new();
        for (e, g) in exps.iter().zip(&self.gens) {
            match e {
                0 => {}
                1 => parts.push(g.name.clone()),
                _ => parts.push(format!("{}^{}", g.name, e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// A sparse graded class: ring reference plus exponent-vector/coefficient map.
///
/// Values are immutable after construction; all operations return new classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedClass {
    ring: Arc<RingSpec>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl GradedClass {
    pub fn zero(ring: &Arc<RingSpec>) -> GradedClass {
        GradedClass {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<RingSpec>) -> GradedClass {
        GradedClass::constant(ring, Rat::one())
    }

    pub fn constant(ring: &Arc<RingSpec>, c: Rat) -> GradedClass {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; ring.generators().len()], c);
        }
        GradedClass {
            ring: Arc::clone(ring),
            terms,
        }
    }

    /// The class of a single named generator.
    pub fn generator(ring: &Arc<RingSpec>, name: &str) -> Result<GradedClass, RingError> {
        let idx = ring
            .gen_index(name)
            .ok_or_else(|| RingError::UnknownGenerator(name.to_string()))?;
        let mut exps = vec![0; ring.generators().len()];
        exps[idx] = 1;
        Ok(GradedClass::monomial(ring, exps, Rat::one()))
    }

    /// A single term `c * x^exps`, normalized.
    pub fn monomial(ring: &Arc<RingSpec>, exps: Vec<u32>, c: Rat) -> GradedClass {
        assert_eq!(exps.len(), ring.generators().len(), "exponent arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() && !ring.kills(&exps) {
            terms.insert(exps, c);
        }
        GradedClass {
            ring: Arc::clone(ring),
            terms,
        }
    }

    /// Build from raw terms, merging duplicates and normalizing.
    pub fn from_terms<I>(ring: &Arc<RingSpec>, iter: I) -> GradedClass
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (exps, c) in iter {
            assert_eq!(exps.len(), ring.generators().len(), "exponent arity");
            if c.is_zero() || ring.kills(&exps) {
                continue;
            }
            let entry = terms.entry(exps).or_insert_with(Rat::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        GradedClass {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    /// The constant (degree-0) coefficient.
    pub fn constant_term(&self) -> Rat {
        self.coefficient(&vec![0; self.ring.generators().len()])
    }

    fn same_ring(&self, other: &GradedClass) -> Result<(), RingError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(RingError::RingMismatch)
        }
    }

    /// Coefficient-wise sum. Fails on a ring mismatch.
    pub fn add(&self, other: &GradedClass) -> Result<GradedClass, RingError> {
        self.same_ring(other)?;
        let mut terms = self.terms.clone();
        for (exps, c) in &other.terms {
            let entry = terms.entry(exps.clone()).or_insert_with(Rat::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(GradedClass {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    pub fn sub(&self, other: &GradedClass) -> Result<GradedClass, RingError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GradedClass {
        GradedClass {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> GradedClass {
        if c.is_zero() {
            return GradedClass::zero(&self.ring);
        }
        GradedClass {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Product with truncation and relation reduction applied.
    pub fn mul(&self, other: &GradedClass) -> Result<GradedClass, RingError> {
        self.same_ring(other)?;
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                if self.ring.kills(&exps) {
                    continue;
                }
                let entry = terms.entry(exps).or_insert_with(Rat::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(GradedClass {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    pub fn pow(&self, mut n: u32) -> GradedClass {
        let mut acc = GradedClass::one(&self.ring);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// The sum of terms of complex degree exactly `d`.
    pub fn component(&self, d: u32) -> GradedClass {
        GradedClass {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| self.ring.monomial_degree(e) == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Largest degree with a nonzero term; 0 for the zero class.
    pub fn max_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| self.ring.monomial_degree(e))
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms
            .keys()
            .all(|e| self.ring.monomial_degree(e) == d)
    }

    /// Kronecker pairing against the fundamental class: the coefficient of
    /// the ring's integration monomial, times its normalization. Zero when
    /// the top component vanishes.
    pub fn pair(&self) -> Result<Rat, RingError> {
        let integration = self.ring.integration().ok_or(RingError::NoIntegration)?;
        Ok(&integration.scale * self.coefficient(&integration.monomial))
    }

    /// Apply the ring homomorphism sending each generator to `images[name]`.
    ///
    /// Every generator occurring in `self` must have an image in the target
    /// ring, homogeneous of the generator's degree.
    pub fn substitute(
        &self,
        target: &Arc<RingSpec>,
        images: &BTreeMap<String, GradedClass>,
    ) -> Result<GradedClass, RingError> {
        // Cache powers per generator as needed.
        let ngens = self.ring.generators().len();
        let mut powers: Vec<Vec<GradedClass>> = vec![Vec::new(); ngens];
        for (idx, g) in self.ring.generators().iter().enumerate() {
            let max_exp = self.terms.keys().map(|e| e[idx]).max().unwrap_or(0);
            if max_exp == 0 {
                continue;
            }
            let image = images
                .get(&g.name)
                .ok_or_else(|| RingError::MissingImage(g.name.clone()))?;
            if !Arc::ptr_eq(image.ring(), target) && **image.ring() != **target {
                return Err(RingError::RingMismatch);
            }
            if !image.is_homogeneous_of(g.degree) {
                return Err(RingError::SubstitutionDegree {
                    name: g.name.clone(),
                    degree: g.degree,
                });
            }
            let mut acc = GradedClass::one(target);
            let mut list = vec![acc.clone()];
            for _ in 1..=max_exp {
                acc = acc.mul(image)?;
                list.push(acc.clone());
            }
            powers[idx] = list;
        }
        let mut out = GradedClass::zero(target);
        for (exps, c) in &self.terms {
            let mut term = GradedClass::constant(target, c.clone());
            for (idx, e) in exps.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                term = term.mul(&powers[idx][*e as usize])?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Canonical text form: terms in graded-lex order (degree ascending,
    /// then lexicographically descending exponents), rationals as `p/q`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut sorted: Vec<(&Vec<u32>, &Rat)> = self.terms.iter().collect();
        sorted.sort_by(|(ea, _), (eb, _)| {
            let da = self.ring.monomial_degree(ea);
            let db = self.ring.monomial_degree(eb);
            da.cmp(&db).then_with(|| eb.cmp(ea))
        });
        let mut out = String::new();
        for (i, (exps, c)) in sorted.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let mono = self.ring.monomial_text(exps);
            if mono == "1" {
                out.push_str(&rat_to_text(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&rat_to_text(&mag));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp2() -> Arc<RingSpec> {
        RingSpec::new(
            vec![("h".to_string(), 1)],
            2,
            vec![vec![3]],
            Some((vec![2], Rat::one())),
        )
        .unwrap()
    }

    fn gen(ring: &Arc<RingSpec>, name: &str) -> GradedClass {
        GradedClass::generator(ring, name).unwrap()
    }

    #[test]
    fn add_inverse_and_doubling() {
        let r = cp2();
        let h = gen(&r, "h");
        assert!(h.add(&h.neg()).unwrap().is_zero());
        assert_eq!(h.add(&h).unwrap(), h.scale(&rat(2)));
    }

    #[test]
    fn add_mixed_generators() {
        let r = RingSpec::with_gens(&[("c1", 1), ("c2", 2)], 4).unwrap();
        let c1 = gen(&r, "c1");
        let c2 = gen(&r, "c2");
        let s = c1.add(&c2).unwrap().add(&c1).unwrap();
        assert_eq!(s.to_text(), "2*c1 + c2");
    }

    #[test]
    fn mul_relation_kill() {
        let r = cp2();
        let h = gen(&r, "h");
        let h2 = h.mul(&h).unwrap();
        assert_eq!(h2.to_text(), "h^2");
        assert!(h2.mul(&h).unwrap().is_zero());
    }

    #[test]
    fn whitney_pattern_product() {
        let r = RingSpec::with_gens(&[("a", 1), ("b", 1)], 2).unwrap();
        let one = GradedClass::one(&r);
        let a = one.add(&gen(&r, "a")).unwrap();
        let b = one.add(&gen(&r, "b")).unwrap();
        assert_eq!(a.mul(&b).unwrap().to_text(), "1 + a + b + a*b");
    }

    #[test]
    fn square_in_cp2() {
        let r = cp2();
        let f = GradedClass::one(&r).add(&gen(&r, "h")).unwrap();
        assert_eq!(f.pow(2).to_text(), "1 + 2*h + h^2");
    }

    #[test]
    fn component_selection() {
        let r = cp2();
        let h = gen(&r, "h");
        let f = GradedClass::one(&r)
            .add(&h.scale(&rat(2)))
            .unwrap()
            .add(&h.pow(2))
            .unwrap();
        assert_eq!(f.component(1).to_text(), "2*h");
        assert_eq!(f.component(0).to_text(), "1");
        assert!(f.component(2).is_homogeneous_of(2));
    }

    #[test]
    fn component_same_degree_mixed_monomials() {
        let r = RingSpec::with_gens(&[("c1", 1), ("c2", 2), ("c3", 3)], 3).unwrap();
        let c1c2 = GradedClass::monomial(&r, vec![1, 1, 0], Rat::one());
        let c3 = gen(&r, "c3");
        let f = c1c2.add(&c3).unwrap();
        assert_eq!(f.component(3), f);
        assert_eq!(f.to_text(), "c1*c2 + c3");
    }

    #[test]
    fn pairing_extracts_top_coefficient() {
        let r = cp2();
        let h = gen(&r, "h");
        assert_eq!(h.pow(2).scale(&rat(5)).pair().unwrap(), rat(5));
        let f = GradedClass::one(&r).add(&h).unwrap();
        assert_eq!(f.pair().unwrap(), rat(0));
    }

    #[test]
    fn cp2_euler_number() {
        let r = cp2();
        let tangent = GradedClass::one(&r).add(&gen(&r, "h")).unwrap().pow(3);
        assert_eq!(tangent.component(2).pair().unwrap(), rat(3));
    }

    #[test]
    fn ring_mismatch_detected() {
        let r1 = cp2();
        let r2 = RingSpec::with_gens(&[("h", 1)], 3).unwrap();
        let a = gen(&r1, "h");
        let b = gen(&r2, "h");
        assert_eq!(a.add(&b).unwrap_err(), RingError::RingMismatch);
        assert_eq!(a.mul(&b).unwrap_err(), RingError::RingMismatch);
    }

    #[test]
    fn structural_ring_equality_allows_interop() {
        let r1 = cp2();
        let r2 = cp2();
        let a = gen(&r1, "h");
        let b = gen(&r2, "h");
        assert_eq!(a.add(&b).unwrap().to_text(), "2*h");
    }

    #[test]
    fn spec_validation_errors() {
        assert!(matches!(
            RingSpec::new(
                vec![("h".into(), 1), ("h".into(), 2)],
                2,
                vec![],
                None
            ),
            Err(RingError::DuplicateGenerator(_))
        ));
        assert!(matches!(
            RingSpec::new(vec![("h".into(), 0)], 2, vec![], None),
            Err(RingError::ZeroDegree(_))
        ));
        // Relation of degree 4 > trunc 2 + maxdeg 1.
        assert!(matches!(
            RingSpec::new(vec![("h".into(), 1)], 2, vec![vec![4]], None),
            Err(RingError::RedundantRelation { .. })
        ));
        // Integration monomial must sit exactly at the truncation.
        assert!(matches!(
            RingSpec::new(
                vec![("h".into(), 1)],
                2,
                vec![],
                Some((vec![1], Rat::one()))
            ),
            Err(RingError::IntegrationDegree { got: 1, want: 2 })
        ));
    }

    #[test]
    fn pair_without_integration_errors() {
        let r = RingSpec::with_gens(&[("h", 1)], 2).unwrap();
        assert_eq!(
            GradedClass::one(&r).pair().unwrap_err(),
            RingError::NoIntegration
        );
    }

    #[test]
    fn integration_scale_applied() {
        let r = RingSpec::new(
            vec![("h".to_string(), 1)],
            2,
            vec![],
            Some((vec![2], ratio(1, 2))),
        )
        .unwrap();
        let h = gen(&r, "h");
        assert_eq!(h.pow(2).scale(&rat(6)).pair().unwrap(), rat(3));
    }

    #[test]
    fn substitution_is_graded() {
        // x of degree 1 mapped to 2h in CP^2.
        let src = RingSpec::with_gens(&[("x", 1)], 2).unwrap();
        let dst = cp2();
        let f = GradedClass::one(&src)
            .add(&gen(&src, "x"))
            .unwrap()
            .pow(2);
        let mut images = BTreeMap::new();
        images.insert("x".to_string(), gen(&dst, "h").scale(&rat(2)));
        let g = f.substitute(&dst, &images).unwrap();
        assert_eq!(g.to_text(), "1 + 4*h + 4*h^2");

        // Non-homogeneous image is rejected.
        let bad = GradedClass::one(&dst).add(&gen(&dst, "h")).unwrap();
        let mut images = BTreeMap::new();
        images.insert("x".to_string(), bad);
        assert!(matches!(
            f.substitute(&dst, &images),
            Err(RingError::SubstitutionDegree { .. })
        ));
    }
}
