//! Sparse multivariate polynomials over the integers in the variables
//! `x_ij`, one per cell of a Young diagram.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::PolyError;
use crate::par::{self, Exec};
use crate::partition::{Cell, Partition};

/// A power product of cell variables. Factors are sorted by cell and carry
/// positive exponents; the empty product is the monomial `1`.
#[derive(Clone, Debug, Default)]
pub struct Monomial {
    factors: Vec<(Cell, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(c: Cell) -> Self {
        Monomial { factors: vec![(c, 1)], degree: 1 }
    }

    /// Builds a monomial from arbitrary `(cell, exponent)` pairs; repeated
    /// cells are merged and zero exponents dropped.
    pub fn from_factors<I: IntoIterator<Item = (Cell, u32)>>(factors: I) -> Self {
        let mut map: BTreeMap<Cell, u32> = BTreeMap::new();
        for (c, e) in factors {
            *map.entry(c).or_default() += e;
        }
        let factors: Vec<(Cell, u32)> = map.into_iter().filter(|&(_, e)| e > 0).collect();
        let degree = factors.iter().map(|&(_, e)| e).sum();
        Monomial { factors, degree }
    }

    /// Product of the given distinct cells.
    pub fn product_of<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        Monomial::from_factors(cells.into_iter().map(|c| (c, 1)))
    }

    pub fn factors(&self) -> &[(Cell, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, c: Cell) -> u32 {
        self.factors
            .binary_search_by(|(f, _)| f.cmp(&c))
            .map(|k| self.factors[k].1)
            .unwrap_or(0)
    }

    pub fn max_exponent(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out, degree: self.degree + other.degree }
    }

    fn map_cells(&self, f: impl Fn(Cell) -> Cell) -> Monomial {
        Monomial::from_factors(self.factors.iter().map(|&(c, e)| (f(c), e)))
    }

    /// Lexicographic comparison of the factor sequences written out with
    /// multiplicity (`x^2 y` reads as `x x y`).
    fn cmp_expanded(&self, other: &Monomial) -> Ordering {
        let mut a = self.factors.iter().flat_map(|&(c, e)| std::iter::repeat_n(c, e as usize));
        let mut b = other.factors.iter().flat_map(|&(c, e)| std::iter::repeat_n(c, e as usize));
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.factors.hash(state);
    }
}

/// Graded order: higher total degree first, then lexicographic in the
/// row-major cell order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.degree.cmp(&self.degree).then_with(|| self.cmp_expanded(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of `Z[x_ij]`. Zero coefficients are never stored, so equality
/// of term maps is equality of polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

// Below this many term pairs a product is always formed sequentially.
const PAR_MUL_THRESHOLD: usize = 1 << 14;

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Polynomial::term(c.into(), Monomial::one())
    }

    pub fn var(c: Cell) -> Self {
        Polynomial::term(BigInt::one(), Monomial::var(c))
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(BigInt::one(), m)
    }

    pub fn term(coeff: BigInt, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        Polynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Self {
        let mut out = Polynomial::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// Terms in canonical order (descending degree, then lexicographic).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// If the polynomial is `1 * m` for a monomial `m`, returns `m`.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    /// Terms of maximal total degree.
    pub fn top_degree_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        match self.total_degree() {
            None => Vec::new(),
            Some(d) => self.terms.iter().take_while(|(m, _)| m.degree() == d).collect(),
        }
    }

    pub fn max_exponent(&self) -> u32 {
        self.terms.keys().map(Monomial::max_exponent).max().unwrap_or(0)
    }

    pub fn variables(&self) -> Vec<Cell> {
        let mut vars: Vec<Cell> = self
            .terms
            .keys()
            .flat_map(|m| m.factors.iter().map(|&(c, _)| c))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
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

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    /// Product with an explicit execution mode.
    pub fn mul_exec(&self, other: &Polynomial, exec: Exec) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        if let Some(m) = other.single_unit_term() {
            return self.mul_monomial(m);
        }
        if let Some(m) = self.single_unit_term() {
            return other.mul_monomial(m);
        }
        let (big, small) =
            if self.term_count() >= other.term_count() { (self, other) } else { (other, self) };
        let pairs = big.term_count() * small.term_count();
        let rows: Vec<(&Monomial, &BigInt)> = big.terms.iter().collect();
        let exec = if pairs >= PAR_MUL_THRESHOLD { exec } else { Exec::Sequential };
        let chunk = rows.len().div_ceil(64).max(1);
        let chunks: Vec<&[(&Monomial, &BigInt)]> = rows.chunks(chunk).collect();
        let acc = par::map_reduce(
            exec,
            &chunks,
            HashMap::new,
            |rows| {
                let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
                for &(ma, ca) in rows.iter() {
                    for (mb, cb) in &small.terms {
                        *acc.entry(ma.mul(mb)).or_default() += ca * cb;
                    }
                }
                acc
            },
            |mut a, b| {
                if a.len() < b.len() {
                    return merge_into(b, a);
                }
                for (m, c) in b {
                    *a.entry(m).or_default() += c;
                }
                a
            },
        );
        Polynomial { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    fn single_unit_term(&self) -> Option<&Monomial> {
        self.as_monomial()
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    /// Sum of all coefficients, i.e. the value at `x_ij = 1`.
    pub fn evaluate_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Evaluates with every variable set to `q`.
    pub fn evaluate_uniform(&self, q: &BigInt) -> BigInt {
        self.terms.iter().map(|(m, c)| c * num_traits::pow(q.clone(), m.degree as usize)).sum()
    }

    /// The image under `x_ij -> q` for all cells.
    pub fn substitute_uniform(&self) -> UniPoly {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (m, c) in &self.terms {
            let d = m.degree as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigInt::zero());
            }
            coeffs[d] += c;
        }
        UniPoly::new(coeffs)
    }

    /// Renames every variable `x_(r,c)` to `x_(r+drow, c+dcol)`.
    pub fn shift(&self, drow: usize, dcol: usize) -> Polynomial {
        if drow == 0 && dcol == 0 {
            return self.clone();
        }
        self.map_cells(|c| c.shifted(drow, dcol))
    }

    /// Renames every variable `x_(r,c)` to `x_(c,r)`.
    pub fn transpose_vars(&self) -> Polynomial {
        self.map_cells(Cell::transpose)
    }

    fn map_cells(&self, f: impl Fn(Cell) -> Cell) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.map_cells(&f), c.clone())))
    }

    pub fn render(&self, naming: &Naming) -> Result<String, PolyError> {
        if self.is_zero() {
            return Ok("0".to_string());
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mono = naming.render_monomial(m)?;
            let mut term = if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if *c == -BigInt::one() {
                format!("-{mono}")
            } else {
                format!("{c}{}{mono}", naming.separator())
            };
            if k > 0 && !term.starts_with('-') {
                term.insert(0, '+');
            }
            out.push_str(&term);
        }
        Ok(out)
    }
}

fn merge_into(
    mut a: HashMap<Monomial, BigInt>,
    b: HashMap<Monomial, BigInt>,
) -> HashMap<Monomial, BigInt> {
    for (m, c) in b {
        *a.entry(m).or_default() += c;
    }
    a
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::monomial(m)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_exec(rhs, Exec::default())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    monomial: Vec<[u64; 3]>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                monomial: m
                    .factors
                    .iter()
                    .map(|&(cell, e)| [cell.row as u64, cell.col as u64, e as u64])
                    .collect(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<TermJson>::deserialize(d)?;
        let mut out = Polynomial::zero();
        for t in raw {
            let coeff: BigInt = t
                .coeff
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.coeff)))?;
            let mut factors = Vec::with_capacity(t.monomial.len());
            for [r, c, e] in t.monomial {
                if r == 0 || c == 0 || e == 0 || e > u32::MAX as u64 {
                    return Err(D::Error::custom(format!("bad factor [{r},{c},{e}]")));
                }
                factors.push((Cell::new(r as usize, c as usize), e as u32));
            }
            out.add_term(Monomial::from_factors(factors), coeff);
        }
        Ok(out)
    }
}

/// How variables are printed.
#[derive(Clone, Debug)]
pub enum Naming {
    /// `x1_2` style names joined with `*`.
    Coords,
    /// Explicit single-token names, concatenated without separator.
    Table(BTreeMap<Cell, String>),
}

impl Naming {
    /// Letters `a, b, c, ...` over the cells of `lambda` in row-major order.
    pub fn letters(lambda: &Partition) -> Result<Naming, PolyError> {
        let n = lambda.size();
        if n > 26 {
            return Err(PolyError::TooManyVariables(n));
        }
        Ok(Naming::Table(
            lambda
                .cells()
                .zip(b'a'..=b'z')
                .map(|(c, l)| (c, (l as char).to_string()))
                .collect(),
        ))
    }

    /// A user supplied table; names must be distinct.
    pub fn table(names: BTreeMap<Cell, String>) -> Result<Naming, PolyError> {
        let mut seen: HashMap<&str, Cell> = HashMap::new();
        for (c, name) in &names {
            if let Some(&first) = seen.get(name.as_str()) {
                return Err(PolyError::NameCollision { name: name.clone(), first, second: *c });
            }
            seen.insert(name, *c);
        }
        Ok(Naming::Table(names))
    }

    fn separator(&self) -> &'static str {
        match self {
            Naming::Coords => "*",
            Naming::Table(_) => "",
        }
    }

    pub fn name(&self, c: Cell) -> Result<String, PolyError> {
        match self {
            Naming::Coords => Ok(format!("x{}_{}", c.row, c.col)),
            Naming::Table(t) => t.get(&c).cloned().ok_or(PolyError::UnnamedVariable(c)),
        }
    }

    pub fn render_monomial(&self, m: &Monomial) -> Result<String, PolyError> {
        let mut parts = Vec::with_capacity(m.factors.len());
        for &(c, e) in &m.factors {
            let name = self.name(c)?;
            parts.push(if e == 1 { name } else { format!("{name}^{e}") });
        }
        Ok(parts.join(self.separator()))
    }
}

/// Integer polynomial in the single variable `q`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        UniPoly { coeffs }
    }

    pub fn one() -> Self {
        UniPoly::q_pow(0)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// Embeds as a polynomial in the single cell variable `var`.
    pub fn to_polynomial(&self, var: Cell) -> Polynomial {
        Polynomial::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::from_factors([(var, k as u32)]), c.clone())),
        )
    }

    /// If the polynomial is `q^k`, returns `k`.
    pub fn as_q_power(&self) -> Option<usize> {
        let (last, rest) = self.coeffs.split_last()?;
        (last.is_one() && rest.iter().all(Zero::is_zero)).then_some(rest.len())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let body = match k {
                0 => mag.to_string(),
                _ => {
                    let var = if k == 1 { "q".to_string() } else { format!("q^{k}") };
                    if mag.is_one() { var } else { format!("{mag}{var}") }
                }
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(r: usize, c: usize) -> Cell {
        Cell::new(r, c)
    }

    fn x(r: usize, c: usize) -> Polynomial {
        Polynomial::var(cell(r, c))
    }

    fn one() -> Polynomial {
        Polynomial::one()
    }

    // letters of the (3,2) diagram
    fn letters() -> Naming {
        Naming::letters(&Partition::new(vec![3, 2]).unwrap()).unwrap()
    }

    fn abcde() -> [Polynomial; 5] {
        [x(1, 1), x(1, 2), x(1, 3), x(2, 1), x(2, 2)]
    }

    #[test]
    fn addition() {
        let sum = &(&x(1, 1) + &one()) + &Polynomial::constant(-1);
        assert_eq!(sum, x(1, 1));
        assert_eq!(&Polynomial::zero() + &x(2, 2), x(2, 2));
        let [_, _, _, d, e] = abcde();
        let p21 = &(&e + &one()) + &(&d * &e);
        assert_eq!(p21.render(&letters()).unwrap(), "de+e+1");
    }

    #[test]
    fn multiplication() {
        let [_, b, c, d, e] = abcde();
        let left = &(&one() + &c) + &(&b * &c);
        let right = &(&one() + &e) + &(&d * &e);
        let prod = &left * &right;
        assert_eq!(prod.render(&letters()).unwrap(), "bcde+bce+cde+bc+ce+de+c+e+1");
        assert_eq!(prod.term_count(), 9);
        assert!((&prod * &Polynomial::zero()).is_zero());
        let sq = &(&one() + &e) * &(&one() + &e);
        assert_eq!(sq.render(&letters()).unwrap(), "e^2+2e+1");
    }

    #[test]
    fn subtraction() {
        let [_, b, c, _, _] = abcde();
        let lhs = &c + &one();
        let rhs = &(&one() + &c) + &(&b * &c);
        assert_eq!((&lhs - &rhs).render(&letters()).unwrap(), "-bc");
        assert!((&rhs - &rhs).is_zero());
        assert!((-Polynomial::zero()).is_zero());
    }

    #[test]
    fn uniform_substitution() {
        let [a, b, c, d, e] = abcde();
        let prod = [a, b, c, d, e].iter().fold(one(), |acc, v| &acc * v);
        assert_eq!(prod.substitute_uniform(), UniPoly::q_pow(5));
        assert_eq!(one().substitute_uniform(), UniPoly::one());
        assert_eq!(UniPoly::from_i64(&[1, 2, 1, 1]).to_string(), "1+2q+q^2+q^3");
        assert_eq!(UniPoly::from_i64(&[0, -1, 0, 3]).to_string(), "-q+3q^3");
    }

    #[test]
    fn rendering() {
        assert_eq!(Polynomial::zero().render(&letters()).unwrap(), "0");
        let p = &(&x(1, 1) * &x(1, 2)) - &Polynomial::constant(3);
        assert_eq!(p.render(&Naming::Coords).unwrap(), "x1_1*x1_2-3");
        let p = &x(1, 1).scale(&BigInt::from(2)) * &x(2, 2);
        assert_eq!(p.render(&Naming::Coords).unwrap(), "2*x1_1*x2_2");
        assert_eq!(x(3, 3).render(&letters()), Err(PolyError::UnnamedVariable(cell(3, 3))));
        let names = [(cell(1, 1), "a".to_string()), (cell(1, 2), "a".to_string())];
        assert!(matches!(
            Naming::table(names.into_iter().collect()),
            Err(PolyError::NameCollision { .. })
        ));
        let big = Partition::new(vec![27]).unwrap();
        assert_eq!(Naming::letters(&big).unwrap_err(), PolyError::TooManyVariables(27));
    }

    #[test]
    fn graded_order() {
        // degree descending, then row-major lexicographic
        let [a, b, _, _, e] = abcde();
        let p = &(&(&(&a * &a) + &(&a * &b)) + &(&b * &e)) + &a;
        assert_eq!(p.render(&letters()).unwrap(), "a^2+ab+be+a");
    }

    #[test]
    fn json_round_trip() {
        let p = &(&x(1, 1) * &x(1, 2)).scale(&"123456789012345678901234567890".parse().unwrap())
            - &x(2, 1).pow(3);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(
            text,
            r#"[{"coeff":"-1","monomial":[[2,1,3]]},{"coeff":"123456789012345678901234567890","monomial":[[1,1,1],[1,2,1]]}]"#
        );
        let back: Polynomial = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Polynomial>(r#"[{"coeff":"x","monomial":[]}]"#).is_err());
        assert!(serde_json::from_str::<Polynomial>(r#"[{"coeff":"1","monomial":[[0,1,1]]}]"#).is_err());
    }

    #[test]
    fn parallel_and_sequential_products_agree() {
        let vars: Vec<Polynomial> = (1..=4).flat_map(|r| (1..=4).map(move |c| x(r, c))).collect();
        let a = vars[..10].iter().fold(one(), |acc, v| &acc * &(&one() + v));
        let b = vars[..8].iter().fold(one(), |acc, v| &acc * &(&one() - v));
        let seq = a.mul_exec(&b, Exec::Sequential);
        let par = a.mul_exec(&b, Exec::Parallel);
        assert_eq!(seq, par);
        assert_eq!(seq.evaluate_all_ones(), BigInt::zero());
    }
}
