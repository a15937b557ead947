//! Extended rationals, continued fractions and the modular-group action.
//!
//! Slopes live in `Q ∪ {1/0}`. Every value is kept in a canonical form
//! (coprime, denominator non-negative, infinity stored as `1/0`) so that
//! structural equality is value equality.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced slope `p/q`, including the point `1/0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtendedRational {
    p: BigInt,
    q: BigInt,
}

impl ExtendedRational {
    /// Reduces `p/q` to canonical form. Rejects `0/0`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::ZeroOverZero);
        }
        if q.is_zero() {
            return Ok(Self::infinity());
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        Ok(Self { p, q })
    }

    /// Builds a slope from a pair already known to be coprime (only the sign is fixed up).
    pub(crate) fn from_coprime(p: BigInt, q: BigInt) -> Self {
        debug_assert!(p.gcd(&q).is_one(), "{p}/{q} is not reduced");
        if q.is_zero() {
            return Self::infinity();
        }
        if q.is_negative() {
            Self { p: -p, q: -q }
        } else {
            Self { p, q }
        }
    }

    pub fn infinity() -> Self {
        Self {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self {
            p: n.into(),
            q: BigInt::one(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    /// The denominator; never negative.
    pub fn denom(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q.is_zero()
    }

    /// `floor(p/q)`; `None` at infinity.
    pub fn floor(&self) -> Option<BigInt> {
        (!self.is_infinite()).then(|| self.p.div_floor(&self.q))
    }

    /// `|ps - qr| = 1`.
    pub fn is_adjacent(&self, other: &Self) -> bool {
        det(self, other).abs().is_one()
    }
}

/// `p·s − q·r` for `x = p/q`, `y = r/s`.
pub fn det(x: &ExtendedRational, y: &ExtendedRational) -> BigInt {
    &x.p * &y.q - &x.q * &y.p
}

impl Ord for ExtendedRational {
    /// Numeric order with `1/0` above every finite slope.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.p * &other.q).cmp(&(&other.p * &self.q)),
        }
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl fmt::Debug for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExtendedRational {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseSlope(s.to_string());
        let t = s.trim();
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (t, "1"),
        };
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        Self::new(p, q)
    }
}

impl Serialize for ExtendedRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtendedRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// A continued fraction `[a1, ..., an] = 1/(a1 + 1/(a2 + ... + 1/an))`.
///
/// Entries are positive and, for `n >= 2`, the last entry is at least 2.
/// The empty expansion is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ContinuedFraction {
    entries: Vec<BigUint>,
}

impl ContinuedFraction {
    /// Validates positivity and folds a trailing `..., a, 1` into `..., a+1`
    /// (same value, canonical form).
    pub fn new(mut entries: Vec<BigUint>) -> Result<Self> {
        if let Some(z) = entries.iter().find(|a| a.is_zero()) {
            return Err(Error::NonPositiveEntry(z.to_string()));
        }
        if entries.len() >= 2 && entries.last().is_some_and(|a| a.is_one()) {
            entries.pop();
            if let Some(last) = entries.last_mut() {
                *last += 1u32;
            }
        }
        Ok(Self { entries })
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self> {
        Self::new(entries.iter().map(|&a| BigUint::from(a)).collect())
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of the entries (the triangle count of the matching ladder).
    pub fn entry_sum(&self) -> BigUint {
        self.entries.iter().sum()
    }

    /// Entries as machine integers, if they all fit.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.entries.iter().map(|a| a.to_u64()).collect()
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    /// Accepts `a1,a2,...`, optionally wrapped in brackets. Empty input is `[]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if t.is_empty() {
            return Ok(Self::default());
        }
        let mut entries = Vec::new();
        for part in t.split(',') {
            let v: BigInt = part
                .trim()
                .parse()
                .map_err(|_| Error::ParseContinuedFraction(s.to_string()))?;
            match v.to_biguint() {
                Some(u) if !u.is_zero() => entries.push(u),
                _ => return Err(Error::NonPositiveEntry(v.to_string())),
            }
        }
        Self::new(entries)
    }
}

// Entries that fit in u64 serialize as JSON numbers, larger ones as decimal strings.
impl Serialize for ContinuedFraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for a in &self.entries {
            match a.to_u64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&a.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for ContinuedFraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Entry {
            Small(u64),
            Big(String),
        }
        let raw = Vec::<Entry>::deserialize(deserializer)?;
        let mut entries = Vec::with_capacity(raw.len());
        for e in raw {
            entries.push(match e {
                Entry::Small(v) => BigUint::from(v),
                Entry::Big(s) => s.parse().map_err(de::Error::custom)?,
            });
        }
        let cf = Self::new(entries).map_err(de::Error::custom)?;
        Ok(cf)
    }
}

/// Canonical expansion of `x ∈ [0,1)`.
pub fn cf_expand(x: &ExtendedRational) -> Result<ContinuedFraction> {
    if x.is_infinite() || x.p.is_negative() || x.p >= x.q {
        return Err(Error::OutsideUnitInterval(x.to_string()));
    }
    // x = p/q = 1/(q/p); run Euclid on (q, p).
    let mut entries = Vec::new();
    let (mut num, mut den) = (x.q.clone(), x.p.clone());
    while !den.is_zero() {
        let (a, r) = num.div_rem(&den);
        entries.push(a.to_biguint().expect("Euclid quotients are non-negative"));
        num = den;
        den = r;
    }
    Ok(ContinuedFraction { entries })
}

/// Exact value of the nested reciprocal sum.
pub fn cf_eval(cf: &ContinuedFraction) -> ExtendedRational {
    let (mut p, mut q) = (BigInt::zero(), BigInt::one());
    for a in cf.entries.iter().rev() {
        let a = BigInt::from_biguint(Sign::Plus, a.clone());
        // 1 / (a + p/q) = q / (a q + p)
        let next_q = a * &q + &p;
        p = std::mem::replace(&mut q, next_q);
    }
    ExtendedRational::from_coprime(p, q)
}

/// Prefix values `[a1], [a1,a2], ..., [a1,...,an]`.
pub fn convergents(cf: &ContinuedFraction) -> Vec<ExtendedRational> {
    let mut out = Vec::with_capacity(cf.len());
    // (p_{k-2}, q_{k-2}) = (1, 0), (p_{k-1}, q_{k-1}) = (0, 1)
    let (mut p2, mut q2) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (BigInt::zero(), BigInt::one());
    for a in &cf.entries {
        let a = BigInt::from_biguint(Sign::Plus, a.clone());
        let p = &a * &p1 + &p2;
        let q = &a * &q1 + &q2;
        out.push(ExtendedRational::from_coprime(p.clone(), q.clone()));
        p2 = std::mem::replace(&mut p1, p);
        q2 = std::mem::replace(&mut q1, q);
    }
    out
}

/// An element of `PGL(2, Z)` acting by `x ↦ (ax + b)/(cx + d)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MobiusMap {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl MobiusMap {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        let det = m.det();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular {
                a: m.a.to_string(),
                b: m.b.to_string(),
                c: m.c.to_string(),
                d: m.d.to_string(),
                det: det.to_string(),
            });
        }
        Ok(m)
    }

    fn raw(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::translation(0)
    }

    /// `x ↦ x + k`.
    pub fn translation(k: impl Into<BigInt>) -> Self {
        Self::raw(BigInt::one(), k.into(), BigInt::zero(), BigInt::one())
    }

    /// `x ↦ 1/x`, swapping `1/0` and `0/1`.
    pub fn inversion() -> Self {
        Self::raw(BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero())
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn apply(&self, x: &ExtendedRational) -> ExtendedRational {
        let p = &self.a * &x.p + &self.b * &x.q;
        let q = &self.c * &x.p + &self.d * &x.q;
        ExtendedRational::from_coprime(p, q)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self::raw(
            &self.a * &other.a + &self.b * &other.c,
            &self.a * &other.b + &self.b * &other.d,
            &self.c * &other.a + &self.d * &other.c,
            &self.c * &other.b + &self.d * &other.d,
        )
    }

    pub fn inverse(&self) -> Self {
        // Adjugate; equal to det·M⁻¹, the same projective map since det = ±1.
        Self::raw(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }
}

impl fmt::Debug for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}

/// Finds `m` with `m(x) = 1/0` and `m(y) ∈ [0,1)`.
///
/// When `x` is already `1/0` the map is an integer translation. Otherwise
/// `m` sends `x` to `1/0` with a Bezout matrix, translates, and then reflects
/// by `z ↦ 1 − z` if needed so that `m(y) ≤ 1/2`.
pub fn normalize_pair(
    x: &ExtendedRational,
    y: &ExtendedRational,
) -> Result<(MobiusMap, ExtendedRational)> {
    if x == y {
        return Err(Error::EmptyLadder(x.to_string()));
    }
    let mut m = if x.is_infinite() {
        MobiusMap::identity()
    } else {
        // u·p + v·q = 1  ⇒  (u v; −q p) sends p/q to 1/0 with det 1.
        let e = x.p.extended_gcd(&x.q);
        let (mut u, mut v) = (e.x, e.y);
        if e.gcd.is_negative() {
            u = -u;
            v = -v;
        }
        MobiusMap::raw(u, v, -&x.q, x.p.clone())
    };
    let mut r = m.apply(y);
    let k = r.floor().expect("m(y) is finite because m is injective and m(x) = 1/0");
    if !k.is_zero() {
        m = MobiusMap::translation(-&k).compose(&m);
        r = m.apply(y);
    }
    if !x.is_infinite() && BigInt::from(2) * &r.p > r.q {
        let flip = MobiusMap::raw(-BigInt::one(), BigInt::one(), BigInt::zero(), BigInt::one());
        m = flip.compose(&m);
        r = m.apply(y);
    }
    Ok((m, r))
}
