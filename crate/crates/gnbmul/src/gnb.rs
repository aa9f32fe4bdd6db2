//! Gaussian normal basis existence checks and cyclotomic coset construction.
//!
//! A GNB of type `T` for GF(2^k) exists when `p = T·k + 1` is prime and
//! `gcd(T·k/s, k) = 1`, where `s` is the multiplicative order of 2 modulo
//! `p`. The basis element β is a sum of T powers of a primitive p-th root of
//! unity γ, selected by a primitive T-th root of unity λ modulo p. Nothing
//! here ever materializes γ as an element of GF(2^{Tk}): every computation is
//! exponent arithmetic modulo p, and the basis elements β_i appear only as
//! the cyclotomic cosets `D_i = { 2^i · λ^j mod p }`, which partition
//! `[1, p-1]` into k sets of size T.

use std::fmt;

/// Default search bound for [`smallest_type`].
pub const DEFAULT_T_MAX: usize = 200;

/// Errors from basis construction and the modular arithmetic helpers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GnbError {
    /// The modulus passed to an order computation is not prime.
    #[error("modulus {p} is not prime")]
    NotPrime { p: u64 },
    /// Order of `a` mod `p` is undefined because `a ≡ 0 (mod p)`.
    #[error("{a} is not a unit modulo {p}")]
    NotAUnit { a: u64, p: u64 },
    /// `T·k + 1` is composite, so no type-T basis exists for this k.
    #[error("no type-{t} basis for k={k}: {p} = {t}*{k}+1 is not prime")]
    TypeNotPrime { k: usize, t: usize, p: u64 },
    /// The order condition `gcd(T·k/s, k) = 1` fails.
    #[error("no type-{t} basis for k={k}: gcd({t}*{k}/{s}, {k}) = {g}, not 1")]
    TypeGcdCondition { k: usize, t: usize, s: u64, g: u64 },
    /// No primitive T-th root of unity exists modulo p.
    #[error("no primitive {t}-th root of unity mod {p}: {t} does not divide {p}-1")]
    NoRootOfUnity { p: u64, t: usize },
}

/// Outcome of the two existence conditions for a type-T basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GnbCheck {
    /// Both conditions hold; `p = T·k + 1` and `s = ord_p(2)`.
    Exists { p: u64, s: u64 },
    /// `p = T·k + 1` is composite.
    NotPrime { p: u64 },
    /// `gcd(T·k/s, k) = g ≠ 1`.
    GcdCondition { p: u64, s: u64, g: u64 },
}

impl GnbCheck {
    pub fn exists(&self) -> bool {
        matches!(self, GnbCheck::Exists { .. })
    }
}

impl fmt::Display for GnbCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GnbCheck::Exists { p, s } => write!(f, "exists (p={p}, s={s})"),
            GnbCheck::NotPrime { p } => write!(f, "{p} not prime"),
            GnbCheck::GcdCondition { p, s, g } => {
                write!(f, "gcd(({p}-1)/{s}, k) = {g}, not 1")
            }
        }
    }
}

/// Field and basis parameters for a type-T Gaussian normal basis of GF(2^k).
///
/// Construction via [`build_params`] guarantees: `p = T·k + 1` prime,
/// `s = ord_p(2)` with `gcd(T·k/s, k) = 1`, λ of exact order T, and the
/// cosets `D_0 … D_{k-1}` a partition of `[1, p-1]`.
#[derive(Debug, Clone)]
pub struct GnbParams {
    k: usize,
    t: usize,
    p: u64,
    s: u64,
    lambda: u64,
    cosets: Vec<Vec<u64>>,
    coset_map: CosetMap,
}

impl GnbParams {
    /// Extension degree k.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Basis type T.
    pub fn t(&self) -> usize {
        self.t
    }

    /// The prime modulus `p = T·k + 1`.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Multiplicative order of 2 modulo p.
    pub fn s(&self) -> u64 {
        self.s
    }

    /// The selected primitive T-th root of unity modulo p (smallest valid).
    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    /// Coset `D_i = { 2^i · λ^j mod p : 0 ≤ j < T }` in generation order.
    pub fn coset(&self, i: usize) -> &[u64] {
        &self.cosets[i]
    }

    /// All k cosets.
    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }

    /// The exponent-to-coset index map F.
    pub fn coset_map(&self) -> &CosetMap {
        &self.coset_map
    }
}

/// Inverse of the coset family: `F[e] = i` for every exponent `e ∈ D_i`.
///
/// Entry 0 is an unused sentinel; every `e ∈ [1, p-1]` has exactly one image.
#[derive(Debug, Clone)]
pub struct CosetMap {
    f: Vec<u32>,
}

impl CosetMap {
    /// Index i of the coset containing exponent `e ∈ [1, p-1]`.
    pub fn coset_of(&self, e: u64) -> usize {
        let idx = self.f[e as usize];
        debug_assert!(idx != u32::MAX, "exponent 0 has no coset");
        idx as usize
    }

    /// The modulus p (array length).
    pub fn modulus(&self) -> u64 {
        self.f.len() as u64
    }
}

/// Deterministic primality test by trial division.
///
/// The scan bound keeps p ≤ 200·1000 + 1, where this is instant.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Prime factors of n, each listed once.
fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut factors = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            factors.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push(n);
    }
    factors
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Smallest d ≥ 1 with `a^d ≡ 1 (mod p)`, for prime p and `a` a unit mod p.
///
/// Starts from the group order `p - 1` and divides out prime factors while
/// the power stays 1, so no iteration over all exponents is needed.
pub fn multiplicative_order(a: u64, p: u64) -> Result<u64, GnbError> {
    if !is_prime(p) {
        return Err(GnbError::NotPrime { p });
    }
    let a = a % p;
    if a == 0 {
        return Err(GnbError::NotAUnit { a, p });
    }
    let mut order = p - 1;
    for q in prime_factors(p - 1) {
        while order.is_multiple_of(q) && pow_mod(a, order / q, p) == 1 {
            order /= q;
        }
    }
    Ok(order)
}

/// Tests the two existence conditions for a type-T GNB of GF(2^k).
///
/// Total on valid inputs (`k ≥ 2`, `T ≥ 1`); the failing condition is
/// reported in the returned variant.
pub fn check_gnb(k: usize, t: usize) -> GnbCheck {
    assert!(k >= 2, "extension degree must be at least 2");
    assert!(t >= 1, "basis type must be at least 1");
    let p = t as u64 * k as u64 + 1;
    if !is_prime(p) {
        return GnbCheck::NotPrime { p };
    }
    let s = multiplicative_order(2, p).expect("p prime, 2 < p");
    let g = gcd((p - 1) / s, k as u64);
    if g != 1 {
        GnbCheck::GcdCondition { p, s, g }
    } else {
        GnbCheck::Exists { p, s }
    }
}

/// Smallest λ ∈ [2, p-1] of multiplicative order exactly T modulo p; 1 when
/// T = 1. Fails if T does not divide p-1.
pub fn find_lambda(p: u64, t: usize) -> Result<u64, GnbError> {
    if t == 1 {
        return Ok(1);
    }
    if !(p - 1).is_multiple_of(t as u64) {
        return Err(GnbError::NoRootOfUnity { p, t });
    }
    for candidate in 2..p {
        if multiplicative_order(candidate, p)? == t as u64 {
            return Ok(candidate);
        }
    }
    // Unreachable for prime p: the unit group is cyclic, so elements of
    // every order dividing p-1 exist.
    Err(GnbError::NoRootOfUnity { p, t })
}

/// Builds the full parameter set for a type-T GNB of GF(2^k), or reports the
/// failed existence condition.
pub fn build_params(k: usize, t: usize) -> Result<GnbParams, GnbError> {
    let (p, s) = match check_gnb(k, t) {
        GnbCheck::Exists { p, s } => (p, s),
        GnbCheck::NotPrime { p } => return Err(GnbError::TypeNotPrime { k, t, p }),
        GnbCheck::GcdCondition { s, g, .. } => {
            return Err(GnbError::TypeGcdCondition { k, t, s, g })
        }
    };
    let lambda = find_lambda(p, t)?;

    let mut cosets = Vec::with_capacity(k);
    let mut f = vec![u32::MAX; p as usize];
    let mut assigned = 0u64;
    let mut base = 1u64; // 2^i mod p
    for i in 0..k {
        let mut coset = Vec::with_capacity(t);
        let mut e = base; // 2^i * lambda^j mod p
        for _ in 0..t {
            debug_assert!(e != 0);
            coset.push(e);
            debug_assert!(f[e as usize] == u32::MAX, "cosets must be disjoint");
            f[e as usize] = i as u32;
            assigned += 1;
            e = ((e as u128 * lambda as u128) % p as u128) as u64;
        }
        cosets.push(coset);
        base = (base * 2) % p;
    }
    // The existence conditions guarantee the partition of [1, p-1];
    // a failure here would be a construction bug, not a bad input.
    assert_eq!(assigned, p - 1, "cosets must cover [1, p-1]");

    Ok(GnbParams {
        k,
        t,
        p,
        s,
        lambda,
        cosets,
        coset_map: CosetMap { f },
    })
}

/// Smallest type T ∈ [1, t_max] for which a GNB of GF(2^k) exists.
pub fn smallest_type(k: usize, t_max: usize) -> Option<usize> {
    (1..=t_max).find(|&t| check_gnb(k, t).exists())
}
