use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Field, Scalar, ScalarError};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero(field: Field) -> Poly {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Field) -> Poly {
        Poly::constant(field.one())
    }

    pub fn constant(c: Scalar) -> Poly {
        Poly::from_coeffs(c.field(), vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: Field) -> Poly {
        Poly::from_coeffs(field, vec![field.zero(), field.one()])
    }

    pub fn monomial(c: Scalar, degree: usize) -> Poly {
        let field = c.field();
        let mut coeffs = vec![field.zero(); degree];
        coeffs.push(c);
        Poly::from_coeffs(field, coeffs)
    }

    pub fn from_coeffs(field: Field, mut coeffs: Vec<Scalar>) -> Poly {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_i64s(field: Field, coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::from_coeffs(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, at: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * at) + c)
    }

    /// Divides out the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scale(&l.inv().expect("leading coefficient is nonzero")),
            None => self.clone(),
        }
    }

    /// Euclidean division: returns `(q, r)` with `self = q·divisor + r` and `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly), ScalarError> {
        let db = divisor.degree().ok_or(ScalarError::ZeroPolynomialDivisor)?;
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(da) = self.degree() else {
            return Ok((Poly::zero(self.field), Poly::zero(self.field)));
        };
        if da < db {
            return Ok((Poly::zero(self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); da - db + 1];
        for i in (db..=da).rev() {
            let c = &rem[i] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i - db + j] = &rem[i - db + j] - &(&c * d);
            }
            quot[i - db] = c;
        }
        rem.truncate(db);
        Ok((
            Poly::from_coeffs(self.field, quot),
            Poly::from_coeffs(self.field, rem),
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, ScalarError> {
        self.divmod(divisor).map(|(_, r)| r)
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.ext_gcd(other).0
    }

    /// Extended Euclid: `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let field = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(field), Poly::zero(field));
        let (mut t0, mut t1) = (Poly::zero(field), Poly::one(field));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            Some(l) => {
                let li = l.inv().unwrap();
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
            None => (r0, s0, t0),
        }
    }

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, mut exp: u64, modulus: &Poly) -> Result<Poly, ScalarError> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(self.field).rem(modulus)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            base = (&base * &base).rem(modulus)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Irreducibility over the polynomial's field.
    ///
    /// Over 𝔽_p the distinct-degree test is exact for every degree. Over ℚ the
    /// answer is exact up to degree 3 and [`Irreducibility::Undecided`] beyond.
    pub fn is_irreducible(&self) -> Result<Irreducibility, ScalarError> {
        let n = match self.degree() {
            None | Some(0) => return Err(ScalarError::ConstantPolynomial),
            Some(n) => n,
        };
        if n == 1 {
            return Ok(Irreducibility::Yes);
        }
        Ok(match self.field {
            Field::Prime(p) => self.irreducible_mod_p(p, n)?,
            Field::Rational => self.irreducible_over_q(n),
        })
    }

    fn irreducible_mod_p(&self, p: u64, n: usize) -> Result<Irreducibility, ScalarError> {
        let f = self.monic();
        let x = Poly::x(self.field);
        let mut h = x.clone();
        for _ in 1..=n / 2 {
            h = h.pow_mod(p, &f)?;
            let g = (&h - &x).gcd(&f);
            if !g.is_one() {
                return Ok(Irreducibility::No);
            }
        }
        Ok(Irreducibility::Yes)
    }

    fn irreducible_over_q(&self, n: usize) -> Irreducibility {
        if n > 3 {
            return Irreducibility::Undecided;
        }
        let ints = self.integer_coefficients();
        if ints[0].is_zero() {
            return Irreducibility::No;
        }
        if n == 2 {
            let disc = &ints[1] * &ints[1] - BigInt::from(4) * &ints[0] * &ints[2];
            let square = !disc.is_negative() && {
                let r = disc.sqrt();
                &r * &r == disc
            };
            return if square {
                Irreducibility::No
            } else {
                Irreducibility::Yes
            };
        }
        // A reducible cubic has a linear factor, hence a rational root ±d/e.
        let (Some(num_divs), Some(den_divs)) = (divisors(&ints[0]), divisors(&ints[n])) else {
            return Irreducibility::Undecided;
        };
        for d in &num_divs {
            for e in &den_divs {
                for sign in [1i64, -1] {
                    let num = BigInt::from(sign) * d;
                    // evaluate e^n f(num/e) in integers
                    let mut acc = BigInt::zero();
                    let mut num_pow = BigInt::one();
                    for (i, c) in ints.iter().enumerate() {
                        let e_pow = e.pow((n - i) as u32);
                        acc += c * &num_pow * e_pow;
                        num_pow *= &num;
                    }
                    if acc.is_zero() {
                        return Irreducibility::No;
                    }
                }
            }
        }
        Irreducibility::Yes
    }

    /// Scales a rational polynomial to integer coefficients.
    fn integer_coefficients(&self) -> Vec<BigInt> {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| match c {
            Scalar::Rational(r) => acc.lcm(r.denom()),
            Scalar::Prime { .. } => unreachable!("rational polynomial expected"),
        });
        self.coeffs
            .iter()
            .map(|c| match c {
                Scalar::Rational(r) => r.numer() * (&lcm / r.denom()),
                Scalar::Prime { .. } => unreachable!(),
            })
            .collect()
    }

    /// Parses the textual form `1 - x - x^2`, `1 - 2/3*x`, `3*x^2 + x`.
    pub fn parse(text: &str, field: Field) -> Result<Poly, String> {
        PolyParser::new(text, field).parse()
    }
}

/// Positive divisors of `|n|`, or `None` when `n` is too large to enumerate.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Irreducibility {
    Yes,
    No,
    Undecided,
}

/// How an [`IrrPoly`]'s irreducibility was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IrreducibilitySource {
    Verified,
    Asserted,
}

/// An irreducible polynomial normalized as `f = 1 - a_1 x - … - a_n x^n`,
/// together with its companion `f_1 = a_1 + a_2 x + … + a_n x^{n-1}`, so that
/// `f = 1 - x·f_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IrrPoly {
    poly: Poly,
    f1: Poly,
    source: IrreducibilitySource,
}

impl IrrPoly {
    /// Requires the irreducibility test to answer yes.
    pub fn new(poly: Poly) -> Result<IrrPoly, ScalarError> {
        let f1 = split_f1(&poly)?;
        match poly.is_irreducible()? {
            Irreducibility::Yes => Ok(IrrPoly {
                poly,
                f1,
                source: IrreducibilitySource::Verified,
            }),
            Irreducibility::No => Err(ScalarError::Reducible(poly.to_string())),
            Irreducibility::Undecided => Err(ScalarError::Undecided(poly.to_string())),
        }
    }

    /// Accepts an undecided polynomial on the caller's word. Polynomials the
    /// test proves reducible are still rejected.
    pub fn assume(poly: Poly) -> Result<IrrPoly, ScalarError> {
        let f1 = split_f1(&poly)?;
        let source = match poly.is_irreducible()? {
            Irreducibility::Yes => IrreducibilitySource::Verified,
            Irreducibility::No => return Err(ScalarError::Reducible(poly.to_string())),
            Irreducibility::Undecided => IrreducibilitySource::Asserted,
        };
        Ok(IrrPoly { poly, f1, source })
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn f1(&self) -> &Poly {
        &self.f1
    }

    pub fn source(&self) -> IrreducibilitySource {
        self.source
    }

    pub fn field(&self) -> Field {
        self.poly.field
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().expect("degree >= 1")
    }

    /// True for `f = 1 - x`, the case where the module is a Chen module.
    pub fn is_one_minus_x(&self) -> bool {
        self.poly == Poly::from_i64s(self.field(), &[1, -1])
    }
}

impl fmt::Display for IrrPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Reads off `f_1` from `f = 1 - x·f_1`.
pub fn split_f1(f: &Poly) -> Result<Poly, ScalarError> {
    match f.degree() {
        None | Some(0) => return Err(ScalarError::ConstantPolynomial),
        Some(_) => {}
    }
    if !f.coeff(0).is_one() {
        return Err(ScalarError::NotNormalized(f.to_string()));
    }
    let f1 = Poly::from_coeffs(f.field, f.coeffs[1..].iter().map(|c| -c).collect());
    debug_assert_eq!(&Poly::one(f.field) - &(&Poly::x(f.field) * &f1), *f);
    Ok(f1)
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs(
            self.field,
            (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect(),
        )
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(self.field, out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

struct PolyParser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    field: Field,
}

impl<'a> PolyParser<'a> {
    fn new(text: &'a str, field: Field) -> Self {
        PolyParser {
            chars: text.char_indices().peekable(),
            field,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn integer(&mut self) -> Option<BigInt> {
        let mut digits = String::new();
        while let Some((_, c)) = self.chars.next_if(|(_, c)| c.is_ascii_digit()) {
            digits.push(c);
        }
        digits.parse().ok()
    }

    fn parse(mut self) -> Result<Poly, String> {
        let mut acc = Poly::zero(self.field);
        let mut first = true;
        loop {
            self.skip_ws();
            let negative = match self.chars.peek() {
                Some((_, '+')) if !first => {
                    self.chars.next();
                    false
                }
                Some((_, '-')) => {
                    self.chars.next();
                    true
                }
                None if first => return Err("empty polynomial".into()),
                None => break,
                Some((i, c)) if !first => return Err(format!("unexpected '{c}' at {i}")),
                _ => false,
            };
            first = false;
            self.skip_ws();
            let term = self.term()?;
            acc = if negative { &acc - &term } else { &acc + &term };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, String> {
        let mut coeff = self.field.one();
        let mut have_coeff = false;
        if self.chars.peek().is_some_and(|(_, c)| c.is_ascii_digit()) {
            let num = self.integer().unwrap();
            self.skip_ws();
            let den = if self.chars.next_if(|(_, c)| *c == '/').is_some() {
                self.skip_ws();
                self.integer().ok_or("expected denominator")?
            } else {
                BigInt::one()
            };
            coeff = self
                .field
                .fraction(&num, &den)
                .map_err(|e| e.to_string())?;
            have_coeff = true;
            self.skip_ws();
            if self.chars.next_if(|(_, c)| *c == '*').is_some() {
                self.skip_ws();
                if !self.chars.peek().is_some_and(|(_, c)| *c == 'x') {
                    return Err("expected 'x' after '*'".into());
                }
            }
        }
        if self.chars.next_if(|(_, c)| *c == 'x').is_some() {
            self.skip_ws();
            let mut degree = 1usize;
            if self.chars.next_if(|(_, c)| *c == '^').is_some() {
                self.skip_ws();
                degree = self
                    .integer()
                    .and_then(|d| d.to_usize())
                    .ok_or("expected exponent after '^'")?;
            }
            return Ok(Poly::monomial(coeff, degree));
        }
        if have_coeff {
            Ok(Poly::constant(coeff))
        } else {
            match self.chars.peek() {
                Some((i, c)) => Err(format!("unexpected '{c}' at {i}")),
                None => Err("unexpected end of polynomial".into()),
            }
        }
    }
}
