//! Arithmetic in `Z_p` and the plane `Z_p ⊕ Z_p`.
//!
//! The plane has exactly `p + 1` subgroups of order `p`, parametrized here by
//! a slope `s` (the line `{(t, s·t)}`) or `Vertical` (the line `{(0, t)}`).
//! Each subgroup carries the canonical projection with that kernel:
//! `π(x, y) = y − s·x` for slope `s` and `π(x, y) = x` for the vertical line.
//! Coset profiles count a set's elements per fiber of `π`, and `M(A)` is the
//! largest such count over all subgroups and cosets.

use crate::{Error, Result};
use std::fmt;

/// A prime modulus. Construction rejects composites: everything in this crate
/// assumes `Z_p` with `p` prime.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Modulus(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    /// Reduce an arbitrary integer into `[0, p)`.
    pub fn residue(self, value: u64) -> Residue {
        Residue {
            value: value % self.0,
            modulus: self,
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic primality by trial division; fine at desk scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// All primes `<= n`, by sieve.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i as u64))
        .collect()
}

/// An element of `Z_p`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

impl Residue {
    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn add(self, other: Residue) -> Residue {
        debug_assert_eq!(self.modulus, other.modulus);
        let p = self.modulus.0;
        let mut v = self.value + other.value;
        if v >= p {
            v -= p;
        }
        Residue { value: v, ..self }
    }

    pub fn sub(self, other: Residue) -> Residue {
        self.add(other.neg())
    }

    pub fn neg(self) -> Residue {
        let p = self.modulus.0;
        Residue {
            value: if self.value == 0 { 0 } else { p - self.value },
            ..self
        }
    }

    pub fn mul(self, other: Residue) -> Residue {
        debug_assert_eq!(self.modulus, other.modulus);
        let p = self.modulus.0 as u128;
        Residue {
            value: ((self.value as u128 * other.value as u128) % p) as u64,
            ..self
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// An element of `Z_p ⊕ Z_p`, both coordinates reduced.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PlanePoint {
    x: u64,
    y: u64,
    p: u64,
}

impl PlanePoint {
    pub fn new(m: Modulus, x: u64, y: u64) -> Self {
        PlanePoint {
            x: x % m.value(),
            y: y % m.value(),
            p: m.value(),
        }
    }

    #[inline]
    pub fn x(self) -> u64 {
        self.x
    }

    #[inline]
    pub fn y(self) -> u64 {
        self.y
    }

    pub fn modulus(self) -> Modulus {
        Modulus(self.p)
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn add(self, other: PlanePoint) -> PlanePoint {
        debug_assert_eq!(self.p, other.p);
        PlanePoint {
            x: (self.x + other.x) % self.p,
            y: (self.y + other.y) % self.p,
            p: self.p,
        }
    }

    pub fn neg(self) -> PlanePoint {
        PlanePoint {
            x: if self.x == 0 { 0 } else { self.p - self.x },
            y: if self.y == 0 { 0 } else { self.p - self.y },
            p: self.p,
        }
    }

    /// The bilinear pairing `⟨a, α⟩ = a.x·α.x + a.y·α.y mod p` used by the
    /// additive characters of the plane.
    pub fn pairing(self, other: PlanePoint) -> u64 {
        debug_assert_eq!(self.p, other.p);
        let p = self.p as u128;
        ((self.x as u128 * other.x as u128 + self.y as u128 * other.y as u128) % p) as u64
    }

    /// Row-major position `x·p + y`.
    pub fn index(self) -> usize {
        (self.x * self.p + self.y) as usize
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Direction of an order-`p` subgroup of the plane.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Direction {
    /// The line `{(t, s·t) : t ∈ Z_p}`.
    Slope(u64),
    /// The line `{(0, t) : t ∈ Z_p}`.
    Vertical,
}

/// One of the `p + 1` order-`p` subgroups of `Z_p ⊕ Z_p`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subgroup {
    direction: Direction,
    modulus: Modulus,
}

impl Subgroup {
    pub fn slope(m: Modulus, s: u64) -> Self {
        Subgroup {
            direction: Direction::Slope(s % m.value()),
            modulus: m,
        }
    }

    pub fn vertical(m: Modulus) -> Self {
        Subgroup {
            direction: Direction::Vertical,
            modulus: m,
        }
    }

    pub fn direction(self) -> Direction {
        self.direction
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    /// A generator: `(1, s)` for slope `s`, `(0, 1)` for the vertical line.
    pub fn generator(self) -> PlanePoint {
        match self.direction {
            Direction::Slope(s) => PlanePoint::new(self.modulus, 1, s),
            Direction::Vertical => PlanePoint::new(self.modulus, 0, 1),
        }
    }

    /// Canonical projection with kernel exactly this subgroup:
    /// `π(x, y) = y − s·x` for slope `s`, `π(x, y) = x` for the vertical.
    pub fn project(self, a: PlanePoint) -> Result<Residue> {
        if a.modulus() != self.modulus {
            return Err(Error::ModulusMismatch(
                a.modulus().value(),
                self.modulus.value(),
            ));
        }
        let p = self.modulus.value();
        let v = match self.direction {
            Direction::Slope(s) => {
                let sx = (s as u128 * a.x as u128 % p as u128) as u64;
                (a.y + p - sx % p) % p
            }
            Direction::Vertical => a.x,
        };
        Ok(self.modulus.residue(v))
    }

    pub fn contains(self, a: PlanePoint) -> bool {
        self.project(a).map(|r| r.is_zero()).unwrap_or(false)
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.direction {
            Direction::Slope(s) => write!(f, "slope:{s}"),
            Direction::Vertical => write!(f, "vertical"),
        }
    }
}

/// All `p + 1` order-`p` subgroups, in canonical order: slopes `0..p`, then
/// the vertical line.
pub fn enumerate_subgroups(m: Modulus) -> Vec<Subgroup> {
    let mut out: Vec<Subgroup> = (0..m.value()).map(|s| Subgroup::slope(m, s)).collect();
    out.push(Subgroup::vertical(m));
    out
}

/// A finite set of distinct plane points, kept sorted by `(x, y)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaneSet {
    modulus: Modulus,
    points: Vec<PlanePoint>,
}

impl PlaneSet {
    /// Build from raw coordinate pairs; coordinates are reduced mod `p` and
    /// duplicates (after reduction) are rejected.
    pub fn new(m: Modulus, pairs: &[(u64, u64)]) -> Result<Self> {
        let mut points: Vec<PlanePoint> =
            pairs.iter().map(|&(x, y)| PlanePoint::new(m, x, y)).collect();
        points.sort();
        if points.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement);
        }
        Ok(PlaneSet { modulus: m, points })
    }

    pub fn from_points(m: Modulus, pts: Vec<PlanePoint>) -> Result<Self> {
        for pt in &pts {
            if pt.modulus() != m {
                return Err(Error::ModulusMismatch(pt.modulus().value(), m.value()));
            }
        }
        let pairs: Vec<(u64, u64)> = pts.iter().map(|pt| (pt.x(), pt.y())).collect();
        PlaneSet::new(m, &pairs)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[PlanePoint] {
        &self.points
    }

    pub fn contains(&self, pt: PlanePoint) -> bool {
        self.points.binary_search(&pt).is_ok()
    }

    /// Set difference `self ∖ other`.
    pub fn difference(&self, other: &PlaneSet) -> PlaneSet {
        PlaneSet {
            modulus: self.modulus,
            points: self
                .points
                .iter()
                .copied()
                .filter(|pt| !other.contains(*pt))
                .collect(),
        }
    }

    pub fn coordinate_pairs(&self) -> Vec<[u64; 2]> {
        self.points.iter().map(|pt| [pt.x(), pt.y()]).collect()
    }
}

/// The vector `λ_j = N(j, U, B)` of coset counts of a set along a subgroup.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CosetProfile {
    subgroup: Subgroup,
    lambda: Vec<u64>,
}

impl CosetProfile {
    pub fn subgroup(&self) -> Subgroup {
        self.subgroup
    }

    pub fn lambda(&self) -> &[u64] {
        &self.lambda
    }

    /// Sum of all entries, i.e. the cardinality of the profiled set.
    pub fn total(&self) -> u64 {
        self.lambda.iter().sum()
    }
}

/// `λ_j = |{a ∈ b : π_u(a) = j}|` for each coset index `j`.
pub fn coset_profile(b: &PlaneSet, u: Subgroup) -> CosetProfile {
    assert_eq!(
        b.modulus(),
        u.modulus(),
        "profiled set and subgroup must share a modulus"
    );
    let p = u.modulus().value() as usize;
    let mut lambda = vec![0u64; p];
    for &pt in b.points() {
        let j = u.project(pt).expect("modulus checked above").value();
        lambda[j as usize] += 1;
    }
    CosetProfile {
        subgroup: u,
        lambda,
    }
}

/// The concentration statistic `M(A)` together with a witness coset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Concentration {
    pub m: u64,
    pub coset: u64,
    pub subgroup: Subgroup,
}

/// `M(A) = max_{x, U} N(x, U, A)` over all `p + 1` subgroups and all cosets.
pub fn max_concentration(a: &PlaneSet) -> Concentration {
    let mut best = Concentration {
        m: 0,
        coset: 0,
        subgroup: Subgroup::slope(a.modulus(), 0),
    };
    for u in enumerate_subgroups(a.modulus()) {
        let profile = coset_profile(a, u);
        for (j, &count) in profile.lambda().iter().enumerate() {
            if count > best.m {
                best = Concentration {
                    m: count,
                    coset: j as u64,
                    subgroup: u,
                };
            }
        }
    }
    best
}
