//! Exact arithmetic in cyclotomic fields `Q(zeta_n)`.
//!
//! Elements are stored in the power basis `1, z, ..., z^(phi(n)-1)` of
//! `Q[x]/Phi_n(x)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
}

/// `Q(zeta_n)` presented as `Q[x]/Phi_n`.
#[derive(Debug)]
pub struct FieldContext {
    conductor: usize,
    cyclotomic_poly: Vec<Rational>,
    // x^(deg + k) mod Phi_n for k in 0..deg-1
    reduction: Vec<Vec<Rational>>,
}

pub type Field = Arc<FieldContext>;

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}

impl Eq for FieldContext {}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, FieldError> {
    let bad = || FieldError::BadRational(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

// Dense polynomials over Q, lowest degree first, no trailing zeros.
fn trim(p: &mut Vec<Rational>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r: Vec<Rational> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - 1 - db;
        let c = &r[r.len() - 1] / lead;
        for (i, bi) in b.iter().enumerate() {
            let t = &c * bi;
            r[shift + i] -= t;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Coefficients of `Phi_n`, lowest degree first.
pub fn cyclotomic_poly(n: usize) -> Vec<Rational> {
    assert!(n >= 1, "conductor must be positive");
    let mut p = vec![Rational::zero(); n + 1];
    p[0] = -Rational::one();
    p[n] = Rational::one();
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = poly_divrem(&p, &cyclotomic_poly(d));
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    p
}

pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count()
}

pub fn make_field(n: usize) -> Field {
    let cyclotomic_poly = cyclotomic_poly(n);
    let deg = cyclotomic_poly.len() - 1;
    let mut reduction = Vec::new();
    // x^deg = -(lower part of Phi)
    let mut cur: Vec<Rational> = cyclotomic_poly[..deg].iter().map(|c| -c).collect();
    for _ in 0..deg.saturating_sub(1) {
        reduction.push(cur.clone());
        // multiply by x and reduce
        let top = cur[deg - 1].clone();
        let mut next = vec![Rational::zero(); deg];
        for i in (1..deg).rev() {
            next[i] = cur[i - 1].clone();
        }
        for i in 0..deg {
            next[i] -= &top * &cyclotomic_poly[i];
        }
        cur = next;
    }
    if deg >= 1 {
        reduction.push(cur);
    }
    Arc::new(FieldContext { conductor: n, cyclotomic_poly, reduction })
}

impl FieldContext {
    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn cyclotomic_poly(&self) -> &[Rational] {
        &self.cyclotomic_poly
    }

    pub fn degree(&self) -> usize {
        self.cyclotomic_poly.len() - 1
    }
}

/// An element of `Q(zeta_n)`.
#[derive(Clone)]
pub struct Scalar {
    ctx: Field,
    coords: Vec<Rational>,
}

fn check_ctx(a: &Field, b: &Field) {
    if !Arc::ptr_eq(a, b) && a.conductor != b.conductor {
        panic!(
            "mixing scalars from Q(zeta_{}) and Q(zeta_{})",
            a.conductor, b.conductor
        );
    }
}

impl Scalar {
    pub fn zero(ctx: &Field) -> Scalar {
        Scalar { ctx: ctx.clone(), coords: vec![Rational::zero(); ctx.degree()] }
    }

    pub fn one(ctx: &Field) -> Scalar {
        Scalar::from_rational(ctx, Rational::one())
    }

    pub fn from_int(ctx: &Field, v: i64) -> Scalar {
        Scalar::from_rational(ctx, rational_int(v))
    }

    pub fn from_rational(ctx: &Field, r: Rational) -> Scalar {
        let mut s = Scalar::zero(ctx);
        s.coords[0] = r;
        s
    }

    /// Builds a scalar from power-basis coordinates; panics on a length mismatch.
    pub fn from_coords(ctx: &Field, coords: Vec<Rational>) -> Scalar {
        assert_eq!(coords.len(), ctx.degree(), "coordinate length must equal phi(n)");
        Scalar { ctx: ctx.clone(), coords }
    }

    /// Reduces an arbitrary polynomial in `zeta` modulo `Phi_n`.
    pub fn from_poly(ctx: &Field, poly: &[Rational]) -> Scalar {
        let deg = ctx.degree();
        if poly.len() > deg + ctx.reduction.len() {
            let (_, mut r) = poly_divrem(poly, &ctx.cyclotomic_poly);
            r.resize(deg, Rational::zero());
            return Scalar { ctx: ctx.clone(), coords: r };
        }
        let mut coords = vec![Rational::zero(); deg];
        for (i, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i < deg {
                coords[i] += c;
            } else {
                let red = &ctx.reduction[i - deg];
                for (j, r) in red.iter().enumerate() {
                    coords[j] += c * r;
                }
            }
        }
        Scalar { ctx: ctx.clone(), coords }
    }

    pub fn context(&self) -> &Field {
        &self.ctx
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Scalar {
        Scalar { ctx: self.ctx.clone(), coords: self.coords.iter().map(|c| c * r).collect() }
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        if self.ctx.degree() == 1 {
            return Ok(Scalar::from_rational(&self.ctx, self.coords[0].recip()));
        }
        // extended Euclid: track s with s*a = r (mod Phi)
        let mut r0: Vec<Rational> = self.ctx.cyclotomic_poly.clone();
        let mut r1: Vec<Rational> = self.coords.clone();
        trim(&mut r1);
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r1 is a nonzero constant since Phi_n is irreducible
        let c = r1[0].recip();
        let poly: Vec<Rational> = s1.iter().map(|x| x * &c).collect();
        Ok(Scalar::from_poly(&self.ctx, &poly))
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(&self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(rational_to_string).collect()
    }
}

/// `zeta_n^(k mod n)` in the power basis.
pub fn zeta_power(ctx: &Field, k: i64) -> Scalar {
    let n = ctx.conductor as i64;
    let e = k.rem_euclid(n) as usize;
    let mut poly = vec![Rational::zero(); e + 1];
    poly[e] = Rational::one();
    Scalar::from_poly(ctx, &poly)
}

/// Uniform-ish random element with small integer coordinates; used for axiom spot checks.
pub fn random_scalar<R: Rng>(ctx: &Field, rng: &mut R) -> Scalar {
    let coords = (0..ctx.degree())
        .map(|_| rational(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
        .collect();
    Scalar::from_coords(ctx, coords)
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        check_ctx(&self.ctx, &other.ctx);
        self.coords == other.coords
    }
}

impl Eq for Scalar {}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = rational_to_string(c);
            terms.push(match i {
                0 => cs,
                1 => format!("{}*z", cs),
                _ => format!("{}*z^{}", cs, i),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        check_ctx(&self.ctx, &rhs.ctx);
        Scalar {
            ctx: self.ctx.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        check_ctx(&self.ctx, &rhs.ctx);
        Scalar {
            ctx: self.ctx.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        check_ctx(&self.ctx, &rhs.ctx);
        let deg = self.ctx.degree();
        if deg == 1 {
            return Scalar { ctx: self.ctx.clone(), coords: vec![&self.coords[0] * &rhs.coords[0]] };
        }
        let mut prod = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Scalar::from_poly(&self.ctx, &prod)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { ctx: self.ctx.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        for c in self.coords.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: &Scalar) -> Scalar {
                (&self).$f(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        check_ctx(&self.ctx, &rhs.ctx);
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        check_ctx(&self.ctx, &rhs.ctx);
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl Scalar {
    /// `self += a * b`
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if self.ctx.degree() == 1 {
            check_ctx(&a.ctx, &b.ctx);
            self.coords[0] += &a.coords[0] * &b.coords[0];
            return;
        }
        *self += &(a * b);
    }

    pub fn is_negative_rational(&self) -> bool {
        self.as_rational().map_or(false, |r| r.is_negative())
    }
}

/// Field axioms on `count` pseudo-random triples drawn from a seeded generator.
pub fn check_field_axioms(ctx: &Field, seed: u64, count: usize) -> crate::report::VerificationReport {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<[Scalar; 3]> = (0..count)
        .map(|_| [random_scalar(ctx, &mut rng), random_scalar(ctx, &mut rng), random_scalar(ctx, &mut rng)])
        .collect();
    let one = Scalar::one(ctx);
    let zero = Scalar::zero(ctx);
    let mut rep = crate::report::VerificationReport::new();
    let find = |pred: &dyn Fn(&[Scalar; 3]) -> bool| -> Option<serde_json::Value> {
        triples.iter().position(|t| !pred(t)).map(|i| {
            serde_json::json!({
                "triple": i,
                "values": triples[i].iter().map(|x| x.to_strings()).collect::<Vec<_>>(),
            })
        })
    };
    rep.check("add-associative", || find(&|[a, b, c]| &(a + b) + c == a + &(b + c)));
    rep.check("add-commutative", || find(&|[a, b, _]| a + b == b + a));
    rep.check("mul-associative", || find(&|[a, b, c]| &(a * b) * c == a * &(b * c)));
    rep.check("mul-commutative", || find(&|[a, b, _]| a * b == b * a));
    rep.check("distributive", || find(&|[a, b, c]| a * &(b + c) == &(a * b) + &(a * c)));
    rep.check("identities", || find(&|[a, _, _]| &(a * &one) == a && &(a + &zero) == a && (a - a).is_zero()));
    rep.check("inverses", || {
        find(&|[a, _, _]| a.is_zero() || a.inv().map(|i| (a * &i).is_one()).unwrap_or(false))
    });
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn poly_strings(p: &[Rational]) -> Vec<String> {
        p.iter().map(rational_to_string).collect()
    }

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(poly_strings(&cyclotomic_poly(1)), ["-1", "1"]);
        assert_eq!(poly_strings(&cyclotomic_poly(2)), ["1", "1"]);
        assert_eq!(poly_strings(&cyclotomic_poly(4)), ["1", "0", "1"]);
        assert_eq!(poly_strings(&cyclotomic_poly(3)), ["1", "1", "1"]);
        assert_eq!(poly_strings(&cyclotomic_poly(6)), ["1", "-1", "1"]);
    }

    #[test]
    fn product_of_cyclotomics_is_xn_minus_one() {
        for n in 1..=12 {
            let mut acc = vec![Rational::one()];
            for d in 1..=n {
                if n % d == 0 {
                    acc = poly_mul(&acc, &cyclotomic_poly(d));
                }
            }
            let mut expect = vec![Rational::zero(); n + 1];
            expect[0] = -Rational::one();
            expect[n] = Rational::one();
            assert_eq!(acc, expect, "n = {}", n);
            assert_eq!(cyclotomic_poly(n).len() - 1, euler_phi(n));
        }
    }

    #[test]
    fn zeta_identities() {
        let f4 = make_field(4);
        let z = zeta_power(&f4, 1);
        assert_eq!(&z * &z, Scalar::from_int(&f4, -1));
        assert_eq!(zeta_power(&f4, 2), Scalar::from_int(&f4, -1));
        let f3 = make_field(3);
        assert!(zeta_power(&f3, 3).is_one());
        let f2 = make_field(2);
        assert_eq!(zeta_power(&f2, 1), Scalar::from_int(&f2, -1));
        for n in 1..=8 {
            let f = make_field(n);
            let z = zeta_power(&f, 1);
            assert!(z.pow(n as u64).is_one());
            let coeffs: Vec<Scalar> =
                f.cyclotomic_poly().iter().map(|c| Scalar::from_rational(&f, c.clone())).collect();
            let mut val = Scalar::zero(&f);
            for (i, c) in coeffs.iter().enumerate() {
                val += &(c * &z.pow(i as u64));
            }
            assert!(val.is_zero(), "zeta does not satisfy Phi_{}", n);
            assert_eq!(zeta_power(&f, -1), zeta_power(&f, n as i64 - 1));
        }
    }

    #[test]
    fn inverse_of_one_plus_zeta3() {
        let f = make_field(3);
        let a = &Scalar::one(&f) + &zeta_power(&f, 1);
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
        // 1 + z = -z^2 in Q(zeta_3), so the inverse is -z
        assert_eq!(b, -zeta_power(&f, 1));
        assert_eq!(Scalar::zero(&f).inv(), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn additive_identity() {
        let f = make_field(5);
        let a = &zeta_power(&f, 2) + &Scalar::from_int(&f, 3);
        assert_eq!(&a + &Scalar::zero(&f), a);
    }

    #[test]
    fn seeded_field_axioms() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in [3usize, 4, 5, 8] {
            let f = make_field(n);
            for _ in 0..100 {
                let a = random_scalar(&f, &mut rng);
                let b = random_scalar(&f, &mut rng);
                let c = random_scalar(&f, &mut rng);
                assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                if !a.is_zero() {
                    assert!((&a * &a.inv().unwrap()).is_one());
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "mixing scalars")]
    fn mixing_contexts_panics() {
        let a = Scalar::one(&make_field(3));
        let b = Scalar::one(&make_field(4));
        let _ = &a + &b;
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_to_string(&rational(3, 1)), "3");
        assert_eq!(rational_to_string(&rational(-2, 4)), "-1/2");
        assert_eq!(parse_rational("-1/2").unwrap(), rational(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), rational_int(7));
        assert!(parse_rational("1/0").is_err());
    }
}
