//! Sparse multivariate polynomials with rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent vector indexed by parameter position. Trailing zero exponents are
/// never stored, so a constant has an empty vector whatever the parameter count.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(index: usize, power: u32) -> Self {
        if power == 0 {
            return Monomial::one();
        }
        let mut e = vec![0; index + 1];
        e[index] = power;
        Monomial(e)
    }

    pub fn from_exponents(mut e: Vec<u32>) -> Self {
        while e.last() == Some(&0) {
            e.pop();
        }
        Monomial(e)
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let e = (0..n).map(|i| self.exponent(i) + other.exponent(i)).collect();
        Monomial(e)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut e = self.0.clone();
        for (i, &d) in other.0.iter().enumerate() {
            if e[i] < d {
                return None;
            }
            e[i] -= d;
        }
        Some(Monomial::from_exponents(e))
    }

    /// Same monomial with the exponent of `index` set to zero.
    fn without(&self, index: usize) -> Monomial {
        let mut e = self.0.clone();
        if index < e.len() {
            e[index] = 0;
        }
        Monomial::from_exponents(e)
    }
}

// Graded lexicographic: total degree first, then lexicographic on exponents.
// Trimmed vectors compare lexicographically exactly as their zero-padded forms.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn var(index: usize) -> Self {
        Polynomial::term(Monomial::var(index, 1), BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value if this polynomial is constant (zero included).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.leading().map(|(_, c)| c)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Polynomial::one(), |acc, _| acc.mul(self))
    }

    /// Divide by the leading coefficient (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Highest parameter index occurring with a nonzero exponent.
    pub fn max_var(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter_map(|m| m.0.len().checked_sub(1))
            .max()
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(index)).max().unwrap_or(0)
    }

    /// Coefficient of `x_index^power` viewing `self` as univariate in `x_index`.
    pub fn coefficient_in(&self, index: usize, power: u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if m.exponent(index) == power {
                out.add_term(m.without(index), c.clone());
            }
        }
        out
    }

    fn coefficients_in(&self, index: usize) -> Vec<Polynomial> {
        let d = self.degree_in(index) as usize;
        let mut out = vec![Polynomial::zero(); d + 1];
        for (m, c) in &self.terms {
            out[m.exponent(index) as usize].add_term(m.without(index), c.clone());
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = d.leading()?;
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let mut r = self.clone();
        let mut q = Polynomial::zero();
        while let Some((rm, rc)) = r.leading() {
            let m = rm.div(lm)?;
            let c = rc / lc;
            let t = Polynomial::term(m, c);
            r = r.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some(q)
    }

    fn pseudo_rem(&self, q: &Polynomial, index: usize) -> Polynomial {
        let dq = q.degree_in(index);
        let lq = q.coefficient_in(index, dq);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(index) >= dq {
            let dr = r.degree_in(index);
            let lr = r.coefficient_in(index, dr);
            let shift = Polynomial::term(Monomial::var(index, dr - dq), BigRational::one());
            r = lq.mul(&r).sub(&lr.mul(&shift).mul(q));
        }
        r
    }

    fn content_in(&self, index: usize) -> Polynomial {
        self.coefficients_in(index)
            .iter()
            .fold(Polynomial::zero(), |g, c| gcd(&g, c))
    }

    fn primitive_in(&self, index: usize) -> Polynomial {
        let c = self.content_in(index);
        self.div_exact(&c).expect("content divides")
    }

    /// Substitute values for some parameters (`None` keeps the parameter).
    pub fn substitute(&self, values: &[Option<BigRational>]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e = m.0.clone();
            for (i, slot) in e.iter_mut().enumerate() {
                if let Some(Some(v)) = values.get(i) {
                    coeff *= num_traits::pow(v.clone(), *slot as usize);
                    *slot = 0;
                }
            }
            out.add_term(Monomial::from_exponents(e), coeff);
        }
        out
    }

    /// Render with the given parameter names, e.g. `a4*b - 1/2*lambda1`.
    /// Powers are written as repeated products since the scalar grammar has no `^`.
    pub fn render(&self, params: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&render_term(m, &c.abs(), params));
        }
        out
    }
}

fn param_name(params: &[String], i: usize) -> String {
    params.get(i).cloned().unwrap_or_else(|| format!("p{i}"))
}

/// Render `c * m` with `c > 0`.
fn render_term(m: &Monomial, c: &BigRational, params: &[String]) -> String {
    let mut vars = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        for _ in 0..e {
            vars.push(param_name(params, i));
        }
    }
    let numer = c.numer();
    let denom = c.denom();
    let mut s = String::new();
    if vars.is_empty() {
        write!(s, "{numer}").unwrap();
    } else {
        if !numer.is_one() {
            write!(s, "{numer}*").unwrap();
        }
        s.push_str(&vars.join("*"));
    }
    if !denom.is_one() {
        write!(s, "/{denom}").unwrap();
    }
    s
}

/// Monic greatest common divisor over Q. Recursive on the highest parameter:
/// gcd = gcd(contents) * primitive part of the last nonzero pseudo-remainder.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    if a == b {
        return a.monic();
    }
    let v = a.max_var().max(b.max_var()).expect("non-constant");
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let c = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        let r = p.pseudo_rem(&q, v);
        p = q;
        q = if r.is_zero() { r } else { r.primitive_in(v) };
    }
    c.mul(&p.primitive_in(v)).monic()
}
