//! Sparse bivariate polynomials in `x` and `y` over exact integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Int, Ring};

/// One of the two named parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
        }
    }
}

/// Exponent pair `x^dx y^dy`, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub dx: u32,
    pub dy: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { dx: 0, dy: 0 };

    pub fn new(dx: u32, dy: u32) -> Self {
        Monomial { dx, dy }
    }

    pub fn of(var: Var, deg: u32) -> Self {
        match var {
            Var::X => Monomial::new(deg, 0),
            Var::Y => Monomial::new(0, deg),
        }
    }

    pub fn degree(self) -> u32 {
        self.dx + self.dy
    }

    pub fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.dx + other.dx, self.dy + other.dy)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.dx.cmp(&other.dx))
            .then(self.dy.cmp(&other.dy))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `x`, `y` with no stored zero coefficients.
///
/// The zero polynomial is the empty term map, so derived equality is exact
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Int>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: impl Into<Int>) -> Self {
        MultiPoly::monomial(c, Monomial::ONE)
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::monomial(1, Monomial::of(v, 1))
    }

    pub fn x() -> Self {
        MultiPoly::var(Var::X)
    }

    pub fn y() -> Self {
        MultiPoly::var(Var::Y)
    }

    pub fn monomial(c: impl Into<Int>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// Builds a polynomial from arbitrary `(monomial, coefficient)` pairs,
    /// merging repeats and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<Int>,
    {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, &c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> Int {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Int)> {
        self.terms.iter()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| match v {
                Var::X => m.dx,
                Var::Y => m.dy,
            })
            .max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Returns the constant value if the polynomial has no `x`/`y` terms.
    pub fn as_constant(&self) -> Option<Int> {
        match self.terms.len() {
            0 => Some(Int::ZERO),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: &Int) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_product_term(&mut self, m: Monomial, a: &Int, b: &Int) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(a * b);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_mul_assign(a, b);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &Int) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    /// Substitutes a concrete integer for one variable.
    pub fn eval(&self, v: Var, value: &Int) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let (deg, rest) = match v {
                Var::X => (m.dx, Monomial::new(0, m.dy)),
                Var::Y => (m.dy, Monomial::new(m.dx, 0)),
            };
            out.add_term(rest, &(c * &value.pow(deg)));
        }
        out
    }

    /// Substitutes `var -> var^k`.
    pub fn subst_power(&self, v: Var, k: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let m = match v {
                        Var::X => Monomial::new(m.dx * k, m.dy),
                        Var::Y => Monomial::new(m.dx, m.dy * k),
                    };
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Evaluates at integer values of both variables.
    pub fn eval_all(&self, x: &Int, y: &Int) -> Int {
        self.eval(Var::X, x)
            .eval(Var::Y, y)
            .as_constant()
            .expect("fully evaluated polynomial is constant")
    }

    /// Replaces every coefficient by its image under `f` (zeros are pruned).
    pub fn map_coeffs(&self, f: impl Fn(Monomial, &Int) -> Int) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(*m, c))))
    }
}

impl fmt::Display for MultiPoly {
    /// Descending grlex, e.g. `x^2*y - 3*x + 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            if !mag.is_one() || *m == Monomial::ONE {
                factors.push(mag.to_string());
            }
            for (name, d) in [("x", m.dx), ("y", m.dy)] {
                match d {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{d}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let (mut out, other) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_product_term(ma.times(*mb), ca, cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl From<Int> for MultiPoly {
    fn from(c: Int) -> Self {
        MultiPoly::constant(c)
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::constant(1)
    }
    fn from_int(n: &Int) -> Self {
        MultiPoly::constant(n.clone())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_product_term(ma.times(*mb), ca, cb);
            }
        }
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(*m, c);
        }
    }
    fn scale(&self, k: &Int) -> Self {
        MultiPoly::scale(self, k)
    }
    fn unit_inverse(&self) -> Option<Self> {
        let c = self.as_constant()?;
        c.is_unit().then(|| MultiPoly::constant(c))
    }
}
