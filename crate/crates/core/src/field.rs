//! GF(p^k) arithmetic by table lookup, q ≤ 1024.
//!
//! An element `e` encodes the polynomial whose coefficient of x^i is the i-th base-p
//! digit of `e`, so the prime subfield is `0..p` with ordinary modular arithmetic.

use crate::error::{Error, Result};

pub type Elem = u16;

#[derive(Clone, Debug)]
pub struct FieldTable {
    p: usize,
    k: usize,
    q: usize,
    /// Coefficients c_0..c_k of the monic modulus, lowest degree first.
    modulus: Vec<usize>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    primitive: Elem,
}

/// `Some((p, k))` when `q = p^k` with p prime and k ≥ 1.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub fn is_prime_power(q: usize) -> bool {
    prime_power(q).is_some()
}

fn digits(mut e: usize, p: usize, k: usize) -> Vec<usize> {
    let mut d = vec![0; k];
    for c in d.iter_mut() {
        *c = e % p;
        e /= p;
    }
    d
}

fn encode(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic `m` over GF(p); both lowest degree first.
fn poly_rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().expect("non-empty");
        if lead != 0 {
            let off = r.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                r[off + i] = (r[off + i] + (p - lead) * c) % p;
            }
        }
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

/// Trial division by every monic polynomial of degree 1..=k/2.
fn is_irreducible(m: &[usize], p: usize) -> bool {
    let k = m.len() - 1;
    for deg in 1..=k / 2 {
        for low in 0..p.pow(deg as u32) {
            let mut f = digits(low, p, deg);
            f.push(1);
            if poly_rem(m, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The smallest monic irreducible of degree k, ordering candidates by the integer whose
/// base-p digits are c_0..c_{k-1}.
fn smallest_irreducible(p: usize, k: usize) -> Vec<usize> {
    if k == 1 {
        return vec![0, 1];
    }
    (0..p.pow(k as u32))
        .map(|low| {
            let mut m = digits(low, p, k);
            m.push(1);
            m
        })
        .find(|m| m[0] != 0 && is_irreducible(m, p))
        .expect("irreducible polynomials exist in every degree")
}

fn poly_mulmod(a: &[usize], b: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut prod = vec![0; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut r = poly_rem(&prod, m, p);
    r.resize(m.len() - 1, 0);
    r
}

pub fn make_field(q: usize) -> Result<FieldTable> {
    let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if q > 1024 {
        return Err(Error::FieldTooLarge(q));
    }
    let modulus = smallest_irreducible(p, k);

    let mut add = vec![0; q * q];
    let mut neg = vec![0; q];
    for a in 0..q {
        let da = digits(a, p, k);
        for b in 0..q {
            let db = digits(b, p, k);
            let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            add[a * q + b] = encode(&s, p) as Elem;
        }
        let n: Vec<usize> = da.iter().map(|x| (p - x) % p).collect();
        neg[a] = encode(&n, p) as Elem;
    }

    // Find a generator of the multiplicative group, then fill products from its logs.
    let mut exp = Vec::new();
    let mut primitive = 0;
    for g in 1..q {
        let dg = digits(g, p, k);
        let mut cur = digits(1, p, k);
        let mut powers = Vec::with_capacity(q - 1);
        loop {
            powers.push(encode(&cur, p));
            cur = poly_mulmod(&cur, &dg, &modulus, p);
            if encode(&cur, p) == 1 {
                break;
            }
            if powers.len() >= q {
                break;
            }
        }
        if powers.len() == q - 1 {
            exp = powers;
            primitive = g as Elem;
            break;
        }
    }
    if exp.len() != q - 1 {
        return Err(Error::Precondition(format!("no primitive element in GF({q})")));
    }
    let mut log = vec![0usize; q];
    for (i, &e) in exp.iter().enumerate() {
        log[e] = i;
    }
    let mut mul = vec![0; q * q];
    let mut inv = vec![0; q];
    for a in 1..q {
        for b in 1..q {
            mul[a * q + b] = exp[(log[a] + log[b]) % (q - 1)] as Elem;
        }
        inv[a] = exp[(q - 1 - log[a]) % (q - 1)] as Elem;
    }

    Ok(FieldTable { p, k, q, modulus, add, mul, neg, inv, primitive })
}

impl FieldTable {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    pub fn primitive_element(&self) -> Elem {
        self.primitive
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.inv[a as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, mut e: usize) -> Elem {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^(p^j)`, the j-th power of the Frobenius automorphism.
    pub fn frobenius(&self, a: Elem, j: usize) -> Elem {
        (0..j).fold(a, |x, _| self.pow(x, self.p))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q as Elem
    }
}

pub fn field_inv(f: &FieldTable, a: Elem) -> Result<Elem> {
    f.inv(a)
}

pub fn frobenius(f: &FieldTable, a: Elem, j: usize) -> Elem {
    f.frobenius(a, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(1024), Some((2, 10)));
        assert_eq!(prime_power(37), Some((37, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert!(make_field(6).is_err());
    }

    #[test]
    fn gf4_uses_x2_x_1() {
        let f = make_field(4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.add(2, 3), 1);
    }

    #[test]
    fn gf8_modulus() {
        assert_eq!(make_field(8).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(make_field(9).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn prime_field_inverse() {
        let f = make_field(7).unwrap();
        assert_eq!(f.inv(3).unwrap(), 5);
        assert!(f.inv(0).is_err());
    }
}
