//! Piecewise-linear homeomorphisms of `[0, ∞)` with dyadic breakpoints and
//! power-of-two slopes, acting on the right. `x_i` maps to the function with
//! slope 1 on `[0, i]`, slope 2 on `[i, i+1]` and slope 1 afterwards.
//!
//! This is an independent model of F used to cross-check diagram equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::words::{GenWord, Sign};

/// `numerator / 2^exponent`, normalized so the numerator is odd or the
/// exponent is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: BigInt,
    exponent: u32,
}

impl Dyadic {
    pub fn new(numerator: impl Into<BigInt>, exponent: u32) -> Dyadic {
        let mut d = Dyadic { numerator: numerator.into(), exponent };
        d.normalize();
        d
    }

    pub fn from_int(n: i64) -> Dyadic {
        Dyadic { numerator: n.into(), exponent: 0 }
    }

    pub fn zero() -> Dyadic {
        Dyadic::from_int(0)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_normalized(&self) -> bool {
        self.exponent == 0 || self.numerator.bit(0)
    }

    fn normalize(&mut self) {
        if self.numerator.is_zero() {
            self.exponent = 0;
            return;
        }
        let tz = self.numerator.trailing_zeros().unwrap_or(0).min(self.exponent as u64) as u32;
        if tz > 0 {
            self.numerator >>= tz;
            self.exponent -= tz;
        }
    }

    /// `self * 2^e`.
    pub fn mul_pow2(&self, e: i64) -> Dyadic {
        if e >= 0 {
            Dyadic::new(&self.numerator << (e as u64), self.exponent)
        } else {
            Dyadic::new(self.numerator.clone(), self.exponent + (-e) as u32)
        }
    }

    /// Exponent `e` with `self = 2^e * other`, if the ratio is a power of two.
    /// Both values must be positive.
    pub fn ratio_pow2(&self, other: &Dyadic) -> Option<i64> {
        if !self.numerator.is_positive() || !other.numerator.is_positive() {
            return None;
        }
        let s = self.numerator.trailing_zeros()? as i64;
        let t = other.numerator.trailing_zeros()? as i64;
        if (&self.numerator >> s as u64) != (&other.numerator >> t as u64) {
            return None;
        }
        Some(s - t + other.exponent as i64 - self.exponent as i64)
    }

    fn aligned(&self, other: &Dyadic) -> (BigInt, BigInt, u32) {
        let m = self.exponent.max(other.exponent);
        (&self.numerator << (m - self.exponent) as u64, &other.numerator << (m - other.exponent) as u64, m)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.numerator, self.exponent)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, m) = self.aligned(rhs);
        Dyadic::new(a + b, m)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, m) = self.aligned(rhs);
        Dyadic::new(a - b, m)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.numerator * &rhs.numerator, self.exponent + rhs.exponent)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { numerator: -&self.numerator, exponent: self.exponent }
    }
}

/// A PL bijection of `[0, ∞)`: linear between consecutive breakpoints and
/// `t ↦ t + tail_offset` from the last breakpoint on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PLMap {
    points: Vec<(Dyadic, Dyadic)>,
    tail_offset: i64,
}

impl PLMap {
    /// Builds a map from breakpoints, which must start at `(0, 0)`, increase
    /// strictly in both coordinates, have power-of-two slopes and end on the
    /// line `y = x + tail_offset`.
    pub fn new(points: Vec<(Dyadic, Dyadic)>, tail_offset: i64) -> Result<PLMap> {
        let f = PLMap { points, tail_offset };
        f.validate()?;
        Ok(f.normalized())
    }

    pub fn breakpoints(&self) -> &[(Dyadic, Dyadic)] {
        &self.points
    }

    pub fn tail_offset(&self) -> i64 {
        self.tail_offset
    }

    /// Slope exponents of the finite segments.
    pub fn slopes(&self) -> Vec<i64> {
        self.points
            .windows(2)
            .map(|w| (&w[1].1 - &w[0].1).ratio_pow2(&(&w[1].0 - &w[0].0)).expect("power-of-two slope"))
            .collect()
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Domain(format!("invalid PL map: {m}")));
        match self.points.first() {
            Some((x, y)) if x.numerator.is_zero() && y.numerator.is_zero() => {}
            _ => return bad("first breakpoint must be (0, 0)"),
        }
        for w in self.points.windows(2) {
            let dx = &w[1].0 - &w[0].0;
            let dy = &w[1].1 - &w[0].1;
            if !dx.numerator.is_positive() || !dy.numerator.is_positive() {
                return bad("breakpoints must increase strictly");
            }
            if dy.ratio_pow2(&dx).is_none() {
                return bad("slopes must be powers of two");
            }
        }
        let (x, y) = self.points.last().expect("nonempty");
        if (y - x) != Dyadic::from_int(self.tail_offset) {
            return bad("last breakpoint must lie on the tail line");
        }
        if self.points.iter().any(|(x, y)| !x.is_normalized() || !y.is_normalized()) {
            return bad("dyadics must be normalized");
        }
        Ok(())
    }

    /// Drops breakpoints interior to a straight segment and trailing
    /// breakpoints already on the tail line.
    fn normalized(mut self) -> PLMap {
        let mut out: Vec<(Dyadic, Dyadic)> = Vec::with_capacity(self.points.len());
        for p in self.points.drain(..) {
            if out.len() >= 2 {
                let (a, b) = (&out[out.len() - 2], &out[out.len() - 1]);
                let lhs = &(&b.1 - &a.1) * &(&p.0 - &b.0);
                let rhs = &(&p.1 - &b.1) * &(&b.0 - &a.0);
                if lhs == rhs {
                    out.pop();
                }
            }
            out.push(p);
        }
        let on_tail = |p: &(Dyadic, Dyadic)| &p.1 - &p.0 == Dyadic::from_int(self.tail_offset);
        while out.len() >= 2 && on_tail(&out[out.len() - 2]) {
            out.pop();
        }
        PLMap { points: out, tail_offset: self.tail_offset }
    }

    pub fn eval(&self, t: &Dyadic) -> Dyadic {
        let last = self.points.last().expect("nonempty");
        if t >= &last.0 {
            return t + &Dyadic::from_int(self.tail_offset);
        }
        let k = self.points.partition_point(|(x, _)| x <= t) - 1;
        let (x0, y0) = &self.points[k];
        let (x1, y1) = &self.points[k + 1];
        let e = (y1 - y0).ratio_pow2(&(x1 - x0)).expect("power-of-two slope");
        y0 + &(t - x0).mul_pow2(e)
    }
}

impl fmt::Display for PLMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.points.iter().map(|(x, y)| format!("({x}, {y})")).collect();
        write!(f, "{} tail t+{}", pts.join(" "), self.tail_offset)
    }
}

pub fn pl_identity() -> PLMap {
    PLMap { points: vec![(Dyadic::zero(), Dyadic::zero())], tail_offset: 0 }
}

pub fn generator_map(i: usize) -> PLMap {
    let i = i as i64;
    let mut points = vec![
        (Dyadic::zero(), Dyadic::zero()),
        (Dyadic::from_int(i), Dyadic::from_int(i)),
        (Dyadic::from_int(i + 1), Dyadic::from_int(i + 2)),
    ];
    points.dedup();
    PLMap { points, tail_offset: 1 }.normalized()
}

pub fn invert_pl(f: &PLMap) -> PLMap {
    PLMap { points: f.points.iter().map(|(x, y)| (y.clone(), x.clone())).collect(), tail_offset: -f.tail_offset }
}

/// `f` followed by `g`: `t ↦ g(f(t))`.
pub fn compose_pl(f: &PLMap, g: &PLMap) -> PLMap {
    let f_inv = invert_pl(f);
    let mut xs: Vec<Dyadic> = f.points.iter().map(|(x, _)| x.clone()).collect();
    xs.extend(g.points.iter().map(|(x, _)| f_inv.eval(x)));
    xs.sort();
    xs.dedup();
    let points = xs
        .into_iter()
        .map(|x| {
            let y = g.eval(&f.eval(&x));
            (x, y)
        })
        .collect();
    PLMap { points, tail_offset: f.tail_offset + g.tail_offset }.normalized()
}

pub fn from_word_pl(w: &GenWord) -> PLMap {
    w.letters.iter().fold(pl_identity(), |acc, l| {
        let g = generator_map(l.index);
        let g = if l.sign == Sign::Neg { invert_pl(&g) } else { g };
        compose_pl(&acc, &g)
    })
}

pub fn pl_equal(f: &PLMap, g: &PLMap) -> bool {
    f == g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse_word, two_generator_relators, Letter};
    use proptest::prelude::*;

    fn d(n: i64, e: u32) -> Dyadic {
        Dyadic::new(n, e)
    }

    fn pl(s: &str) -> PLMap {
        from_word_pl(&parse_word(s).unwrap())
    }

    #[test]
    fn dyadic_arithmetic() {
        assert_eq!(d(4, 3), d(1, 1));
        assert_eq!(&d(1, 1) + &d(1, 2), d(3, 2));
        assert_eq!(&d(1, 1) - &d(1, 1), Dyadic::zero());
        assert_eq!(&d(3, 1) * &d(1, 1), d(3, 2));
        assert!(d(1, 1) < d(3, 2));
        assert_eq!(d(3, 2).ratio_pow2(&d(3, 0)), Some(-2));
        assert_eq!(d(6, 0).ratio_pow2(&d(3, 0)), Some(1));
        assert_eq!(d(5, 0).ratio_pow2(&d(3, 0)), None);
        assert_eq!(d(3, 2).mul_pow2(3), d(6, 0));
        assert_eq!(d(3, 2).to_string(), "3/2^2");
    }

    #[test]
    fn generator_values() {
        let f0 = generator_map(0);
        assert_eq!(f0.eval(&d(1, 1)), d(1, 0));
        assert_eq!(f0.eval(&d(1, 0)), d(2, 0));
        assert_eq!(f0.eval(&d(3, 0)), d(4, 0));
        assert_eq!(generator_map(2).eval(&d(1, 0)), d(1, 0));
        assert_eq!(generator_map(2).eval(&d(5, 1)), d(3, 0));
        for i in 0..6 {
            assert_eq!(generator_map(i).tail_offset(), 1);
            assert_eq!(generator_map(i).slopes(), if i == 0 { vec![1] } else { vec![0, 1] });
        }
    }

    #[test]
    fn relations() {
        assert!(pl_equal(&pl("x1 x0"), &pl("x0 x2")));
        assert!(!pl_equal(&generator_map(0), &generator_map(1)));
        assert_eq!(from_word_pl(&GenWord::empty()), pl_identity());
        for r in two_generator_relators() {
            assert_eq!(from_word_pl(&r), pl_identity(), "{r}");
        }
        for j in 1..7 {
            for i in 0..j {
                assert_eq!(
                    compose_pl(&generator_map(j), &generator_map(i)),
                    compose_pl(&generator_map(i), &generator_map(j + 1))
                );
            }
        }
    }

    #[test]
    fn validation() {
        assert!(PLMap::new(vec![(d(0, 0), d(0, 0)), (d(1, 0), d(2, 0))], 1).is_ok());
        assert!(PLMap::new(vec![(d(0, 0), d(0, 0)), (d(1, 0), d(3, 0))], 2).is_err());
        assert!(PLMap::new(vec![(d(1, 0), d(1, 0))], 0).is_err());
        assert!(PLMap::new(vec![(d(0, 0), d(0, 0)), (d(1, 0), d(2, 0))], 0).is_err());
        let f = PLMap::new(vec![(d(0, 0), d(0, 0)), (d(1, 0), d(1, 0)), (d(2, 0), d(3, 0))], 1).unwrap();
        assert_eq!(f, generator_map(1));
    }

    fn arb_word() -> impl Strategy<Value = GenWord> {
        prop::collection::vec((0usize..5, any::<bool>()), 0..12).prop_map(|v| {
            v.into_iter().map(|(i, p)| if p { Letter::pos(i) } else { Letter::neg(i) }).collect::<Vec<_>>().into()
        })
    }

    proptest! {
        #[test]
        fn homomorphism(u in arb_word(), v in arb_word()) {
            let f = from_word_pl(&u);
            let g = from_word_pl(&v);
            let fg = compose_pl(&f, &g);
            prop_assert_eq!(from_word_pl(&u.concat(&v)), fg.clone());
            prop_assert_eq!(fg.tail_offset(), f.tail_offset() + g.tail_offset());
            prop_assert!(fg.validate().is_ok());
        }

        #[test]
        fn inverse(u in arb_word()) {
            let f = from_word_pl(&u);
            prop_assert_eq!(compose_pl(&f, &invert_pl(&f)), pl_identity());
            prop_assert_eq!(from_word_pl(&u.inverse()), invert_pl(&f));
        }
    }
}
