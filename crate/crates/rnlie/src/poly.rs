//! Sparse multivariate polynomials over exact rationals.
//!
//! A polynomial carries a fixed, ordered variable list; its terms map dense
//! exponent vectors to nonzero coefficients. Two polynomials are equal iff
//! they have the same variables and the same term map, so canonical form is
//! the representation itself. Operations require both operands to share the
//! variable list; cross-list arithmetic must go through explicit alignment.

use crate::rat::Rat;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Ordered variable list shared by a family of polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Self {
        let names: Vec<String> = names.into_iter().map(|s| s.into()).collect();
        for (i, a) in names.iter().enumerate() {
            assert!(!a.is_empty(), "empty variable name");
            for b in &names[..i] {
                assert!(a != b, "duplicate variable name `{a}`");
            }
        }
        VarSet(Arc::new(names))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }
}

/// Sparse multivariate polynomial. Invariant: no stored coefficient is zero
/// and every exponent vector has length `vars.len()`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    vars: VarSet,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Poly {
    pub fn zero(vars: &VarSet) -> Self {
        Poly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: Rat) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    /// The variable `name` as a polynomial.
    pub fn var(vars: &VarSet, name: &str) -> Self {
        let i = vars
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown variable `{name}`"));
        let mut exp = vec![0u32; vars.len()];
        exp[i] = 1;
        let mut p = Poly::zero(vars);
        p.terms.insert(exp, Rat::one());
        p
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms(vars: &VarSet, raw: Vec<(Vec<u32>, Rat)>) -> Self {
        let mut p = Poly::zero(vars);
        for (exp, c) in raw {
            assert_eq!(exp.len(), vars.len(), "exponent vector length mismatch");
            p.add_term(exp, c);
        }
        p
    }

    fn add_term(&mut self, exp: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(old) => {
                *old += &c;
                if old.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    fn assert_same_vars(&self, other: &Poly) {
        assert!(
            self.vars == other.vars,
            "polynomial variable lists differ: {:?} vs {:?}",
            self.vars.names(),
            other.vars.names()
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.add_term(exp.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.add_term(exp.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (exp, c) in &self.terms {
            out.terms.insert(exp.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_same_vars(other);
        let mut out = Poly::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        let mut out = Poly::zero(&self.vars);
        for (exp, k) in &self.terms {
            out.terms.insert(exp.clone(), k * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::constant(&self.vars, Rat::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact formal partial derivative with respect to `var`.
    pub fn partial(&self, var: &str) -> Result<Poly, String> {
        let i = self
            .vars
            .index_of(var)
            .ok_or_else(|| format!("unknown variable `{var}`"))?;
        let mut out = Poly::zero(&self.vars);
        for (exp, c) in &self.terms {
            let k = exp[i];
            if k == 0 {
                continue;
            }
            let mut e = exp.clone();
            e[i] = k - 1;
            out.add_term(e, c * &Rat::from_int(k as i64));
        }
        Ok(out)
    }

    /// Exact evaluation at a full assignment (one value per variable, in
    /// variable order).
    pub fn eval(&self, point: &[Rat]) -> Result<Rat, String> {
        if point.len() != self.vars.len() {
            return Err(format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.vars.len()
            ));
        }
        let mut total = Rat::zero();
        for (exp, c) in &self.terms {
            let mut m = c.clone();
            for (i, &k) in exp.iter().enumerate() {
                if k > 0 {
                    m = &m * &point[i].pow(k);
                }
            }
            total += &m;
        }
        Ok(total)
    }

    /// Evaluation from a name → value map; every variable must be assigned.
    pub fn eval_map(&self, point: &BTreeMap<String, Rat>) -> Result<Rat, String> {
        let mut vals = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            let v = point
                .get(name)
                .ok_or_else(|| format!("missing assignment for `{name}`"))?;
            vals.push(v.clone());
        }
        self.eval(&vals)
    }

    /// Substitutes polynomials (over the same variable list) for a subset of
    /// variables; the result stays over the same variable list.
    pub fn substitute_polys(&self, bind: &BTreeMap<String, Poly>) -> Poly {
        for p in bind.values() {
            assert!(
                p.vars == self.vars,
                "replacement polynomials must share the variable list"
            );
        }
        let mut out = Poly::zero(&self.vars);
        for (exp, c) in &self.terms {
            let mut term = Poly::constant(&self.vars, c.clone());
            for (i, &k) in exp.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = &self.vars.names()[i];
                match bind.get(name) {
                    Some(p) => term = term.mul(&p.pow(k)),
                    None => {
                        let mut e = vec![0u32; self.vars.len()];
                        e[i] = k;
                        let mono = Poly::from_terms(&self.vars, vec![(e, Rat::one())]);
                        term = term.mul(&mono);
                    }
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Variables that actually occur (indices into the variable list).
    pub fn used_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.vars.len()];
        for exp in self.terms.keys() {
            for (i, &k) in exp.iter().enumerate() {
                if k > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter(|(_, &u)| u)
            .map(|(i, _)| i)
            .collect()
    }

    /// For a univariate polynomial, its coefficient vector in ascending
    /// degree (index = exponent of the single used variable). Returns `None`
    /// if more than one variable occurs.
    pub fn univariate_coeffs(&self) -> Option<(usize, Vec<Rat>)> {
        let used = self.used_vars();
        if used.len() != 1 {
            return None;
        }
        let var = used[0];
        let deg = self
            .terms
            .keys()
            .map(|e| e[var])
            .max()
            .unwrap_or(0) as usize;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (exp, c) in &self.terms {
            coeffs[exp[var] as usize] = c.clone();
        }
        Some((var, coeffs))
    }

    /// Substitutes rational values for a subset of variables, producing a
    /// polynomial over the remaining ones (in their original order).
    pub fn substitute(&self, bind: &BTreeMap<String, Rat>) -> Poly {
        let kept: Vec<String> = self
            .vars
            .names()
            .iter()
            .filter(|n| !bind.contains_key(*n))
            .cloned()
            .collect();
        let new_vars = VarSet::new(kept);
        let mut out = Poly::zero(&new_vars);
        for (exp, c) in &self.terms {
            let mut coeff = c.clone();
            let mut new_exp = vec![0u32; new_vars.len()];
            for (i, name) in self.vars.names().iter().enumerate() {
                match bind.get(name) {
                    Some(v) => coeff = &coeff * &v.pow(exp[i]),
                    None => {
                        let j = new_vars.index_of(name).unwrap();
                        new_exp[j] = exp[i];
                    }
                }
            }
            out.add_term(new_exp, coeff);
        }
        out
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            let (exp, c) = self.terms.iter().next().unwrap();
            if exp.iter().all(|&k| k == 0) {
                return Some(c.clone());
            }
        }
        None
    }
}

impl fmt::Display for Poly {
    /// Prints in the expression grammar of [`crate::parse`]; parsing the
    /// output reproduces the polynomial exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || exp.iter().all(|&k| k == 0) {
                factors.push(mag.to_string());
            }
            for (i, &k) in exp.iter().enumerate() {
                if k == 1 {
                    factors.push(self.vars.names()[i].clone());
                } else if k > 1 {
                    factors.push(format!("{}^{}", self.vars.names()[i], k));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x4() -> VarSet {
        VarSet::new(vec!["x1", "x2", "x3", "x4"])
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(
            (
                proptest::collection::vec(0u32..4, 4),
                (-9i64..=9, 1i64..=9),
            ),
            0..6,
        )
        .prop_map(|terms| {
            let vs = x4();
            Poly::from_terms(
                &vs,
                terms
                    .into_iter()
                    .map(|(exp, (p, q))| (exp, Rat::new(p, q)))
                    .collect(),
            )
        })
    }

    proptest! {
        /// Printing always parses back to the same canonical polynomial.
        #[test]
        fn print_parse_is_a_fixpoint(p in arb_poly()) {
            let printed = p.to_string();
            let reparsed = crate::parse::parse_polynomial(&printed, p.vars()).unwrap();
            prop_assert_eq!(reparsed, p);
        }

        /// Multiplication commutes and the formal derivative satisfies the
        /// product rule exactly.
        #[test]
        fn ring_and_derivative_identities(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!(p.mul(&q), q.mul(&p));
            let lhs = p.mul(&q).partial("x2").unwrap();
            let rhs = p
                .partial("x2")
                .unwrap()
                .mul(&q)
                .add(&q.partial("x2").unwrap().mul(&p));
            prop_assert_eq!(lhs, rhs);
        }

        /// Evaluation is a ring homomorphism.
        #[test]
        fn eval_is_a_homomorphism(p in arb_poly(), q in arb_poly()) {
            let point = vec![
                Rat::new(2, 3),
                Rat::new(-1, 2),
                Rat::from_int(3),
                Rat::new(5, 7),
            ];
            let pv = p.eval(&point).unwrap();
            let qv = q.eval(&point).unwrap();
            prop_assert_eq!(p.add(&q).eval(&point).unwrap(), &pv + &qv);
            prop_assert_eq!(p.mul(&q).eval(&point).unwrap(), &pv * &qv);
        }
    }

    #[test]
    fn product_rule_holds() {
        let vs = x4();
        let p = Poly::var(&vs, "x2").mul(&Poly::var(&vs, "x3"));
        let q = Poly::var(&vs, "x2").pow(2).add(&Poly::constant(&vs, Rat::from_int(3)));
        let lhs = p.mul(&q).partial("x2").unwrap();
        let rhs = p
            .partial("x2")
            .unwrap()
            .mul(&q)
            .add(&q.partial("x2").unwrap().mul(&p));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_and_eval_agree() {
        let vs = x4();
        // x2^2*x3 - 5*x4
        let p = Poly::from_terms(
            &vs,
            vec![
                (vec![0, 2, 1, 0], Rat::one()),
                (vec![0, 0, 0, 1], Rat::from_int(-5)),
            ],
        );
        let point = vec![
            Rat::from_int(7),
            Rat::new(1, 2),
            Rat::from_int(4),
            Rat::new(3, 5),
        ];
        assert_eq!(p.eval(&point).unwrap(), Rat::from_int(-2));
        let mut bind = BTreeMap::new();
        bind.insert("x2".to_string(), Rat::new(1, 2));
        bind.insert("x3".to_string(), Rat::from_int(4));
        let q = p.substitute(&bind);
        assert_eq!(q.vars().names(), &["x1".to_string(), "x4".to_string()]);
        assert_eq!(
            q.eval(&[Rat::from_int(7), Rat::new(3, 5)]).unwrap(),
            Rat::from_int(-2)
        );
    }
}
