//! Univariate polynomial arithmetic over the rationals, plus exact
//! factorization of integer polynomials at desk scale.
//!
//! Factorization drives the splitting of commutative semisimple algebras
//! (centers of associative hulls) into primitive idempotents: minimal
//! polynomials of center elements are squarefree there, and their rational
//! irreducible factors correspond to the simple summands. The pipeline is
//! the classical one: reduction mod a small prime, Berlekamp, Hensel
//! lifting to past the coefficient bound, then subset recombination.
//! Degrees stay small (bounded by the number of simple summands), so the
//! exponential recombination step is harmless.

use crate::exactmat::{rat, Matrix, Rational, Subspace};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense polynomial over Q, coefficients by ascending degree, no trailing
/// zeros. The zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyQ(pub Vec<Rational>);

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ(Vec::new())
    }

    pub fn from_coeffs(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        PolyQ(c)
    }

    pub fn constant(c: Rational) -> Self {
        PolyQ::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        PolyQ::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn monic(&self) -> PolyQ {
        match self.leading() {
            None => PolyQ::zero(),
            Some(lc) => {
                let inv = lc.recip();
                PolyQ::from_coeffs(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, other: &PolyQ) -> PolyQ {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c.clone();
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c.clone();
        }
        PolyQ::from_coeffs(out)
    }

    pub fn sub(&self, other: &PolyQ) -> PolyQ {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c.clone();
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] -= c.clone();
        }
        PolyQ::from_coeffs(out)
    }

    pub fn mul(&self, other: &PolyQ) -> PolyQ {
        if self.is_zero() || other.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    let prod = a * b;
                    out[i + j] += prod;
                }
            }
        }
        PolyQ::from_coeffs(out)
    }

    pub fn divrem(&self, d: &PolyQ) -> (PolyQ, PolyQ) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        if r.len() < dd + 1 {
            return (PolyQ::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        let lc = d.leading().unwrap().clone();
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lc;
            if !c.is_zero() {
                for (i, dc) in d.0.iter().enumerate() {
                    let delta = &c * dc;
                    r[k + i] -= delta;
                }
            }
            q[k] = c;
        }
        (PolyQ::from_coeffs(q), PolyQ::from_coeffs(r))
    }

    pub fn gcd(&self, other: &PolyQ) -> PolyQ {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> PolyQ {
        if self.0.len() <= 1 {
            return PolyQ::zero();
        }
        PolyQ::from_coeffs(
            self.0[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat(i as i64 + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        assert_eq!(m.rows, m.cols);
        let n = m.rows;
        let mut acc = Matrix::zeros(n, n);
        for c in self.0.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                acc[(i, i)] += c.clone();
            }
        }
        acc
    }

    /// Clears denominators and divides by integer content; also returns the
    /// sign-normalized primitive integer polynomial.
    pub fn primitive_integer(&self) -> PolyZ {
        if self.is_zero() {
            return PolyZ(Vec::new());
        }
        let mut denom = BigInt::one();
        for c in &self.0 {
            denom = denom.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.0.iter().map(|c| (c * Rational::from_integer(denom.clone())).to_integer()).collect();
        PolyZ(ints).primitive()
    }
}

/// Integer polynomial, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyZ(pub Vec<BigInt>);

impl PolyZ {
    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    fn trim(mut v: Vec<BigInt>) -> PolyZ {
        while v.last().is_some_and(|x| x.is_zero()) {
            v.pop();
        }
        PolyZ(v)
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
        }
        g
    }

    /// Divides out the content and normalizes the leading coefficient to be
    /// positive.
    pub fn primitive(&self) -> PolyZ {
        if self.0.is_empty() {
            return self.clone();
        }
        let mut g = self.content();
        if self.0.last().unwrap().is_negative() {
            g = -g;
        }
        PolyZ(self.0.iter().map(|c| c / &g).collect())
    }

    pub fn to_rational(&self) -> PolyQ {
        PolyQ::from_coeffs(self.0.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    pub fn max_abs(&self) -> BigInt {
        self.0.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }

    /// Exact division test over Z; `Some(quotient)` when `d` divides `self`.
    pub fn try_divide(&self, d: &PolyZ) -> Option<PolyZ> {
        let (q, r) = self.to_rational().divrem(&d.to_rational());
        if !r.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(q.0.len());
        for c in &q.0 {
            if !c.denom().is_one() {
                return None;
            }
            out.push(c.numer().clone());
        }
        Some(PolyZ::trim(out))
    }
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for one small prime p.

#[derive(Debug, Clone, PartialEq)]
struct FpPoly {
    c: Vec<u64>,
}

struct FpCtx {
    p: u64,
}

impl FpCtx {
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: u64) -> u64 {
        // Fermat; p is a small prime and a != 0.
        self.pow(a, self.p - 2)
    }
    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    fn trim(&self, mut v: Vec<u64>) -> FpPoly {
        while v.last() == Some(&0) {
            v.pop();
        }
        FpPoly { c: v }
    }

    fn reduce_bigint(&self, x: &BigInt) -> u64 {
        let m = x.mod_floor(&BigInt::from(self.p));
        m.to_u64().unwrap()
    }

    fn from_polyz(&self, f: &PolyZ) -> FpPoly {
        self.trim(f.0.iter().map(|c| self.reduce_bigint(c)).collect())
    }

    fn deg(&self, f: &FpPoly) -> Option<usize> {
        if f.c.is_empty() {
            None
        } else {
            Some(f.c.len() - 1)
        }
    }

    fn poly_sub(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let n = a.c.len().max(b.c.len());
        let mut out = vec![0u64; n];
        for (i, &x) in a.c.iter().enumerate() {
            out[i] = x;
        }
        for (i, &x) in b.c.iter().enumerate() {
            out[i] = self.sub(out[i], x);
        }
        self.trim(out)
    }

    fn poly_mul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        if a.c.is_empty() || b.c.is_empty() {
            return FpPoly { c: vec![] };
        }
        let mut out = vec![0u64; a.c.len() + b.c.len() - 1];
        for (i, &x) in a.c.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.c.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        self.trim(out)
    }

    fn poly_divrem(&self, a: &FpPoly, d: &FpPoly) -> (FpPoly, FpPoly) {
        let dd = self.deg(d).expect("division by zero");
        let mut r = a.c.clone();
        if r.len() < dd + 1 {
            return (FpPoly { c: vec![] }, a.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        let lcinv = self.inv(*d.c.last().unwrap());
        for k in (0..q.len()).rev() {
            let c = self.mul(r[k + dd], lcinv);
            if c != 0 {
                for (i, &dc) in d.c.iter().enumerate() {
                    r[k + i] = self.sub(r[k + i], self.mul(c, dc));
                }
            }
            q[k] = c;
        }
        (self.trim(q), self.trim(r))
    }

    fn poly_gcd(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.c.is_empty() {
            let r = self.poly_divrem(&a, &b).1;
            a = b;
            b = r;
        }
        self.make_monic(&a)
    }

    fn make_monic(&self, a: &FpPoly) -> FpPoly {
        match a.c.last() {
            None => a.clone(),
            Some(&lc) => {
                let inv = self.inv(lc);
                FpPoly { c: a.c.iter().map(|&x| self.mul(x, inv)).collect() }
            }
        }
    }

    fn poly_deriv(&self, a: &FpPoly) -> FpPoly {
        if a.c.len() <= 1 {
            return FpPoly { c: vec![] };
        }
        self.trim(
            a.c[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| self.mul(c, (i as u64 + 1) % self.p))
                .collect(),
        )
    }

    /// x^p mod f by square and multiply.
    fn x_pow_p(&self, f: &FpPoly) -> FpPoly {
        let mut acc = FpPoly { c: vec![1] };
        let x = FpPoly { c: vec![0, 1] };
        let mut base = self.poly_divrem(&x, f).1;
        let mut e = self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_divrem(&self.poly_mul(&acc, &base), f).1;
            }
            base = self.poly_divrem(&self.poly_mul(&base, &base), f).1;
            e >>= 1;
        }
        acc
    }

    /// Berlekamp factorization of a monic squarefree polynomial mod p into
    /// monic irreducibles.
    fn berlekamp(&self, f: &FpPoly) -> Vec<FpPoly> {
        let n = self.deg(f).unwrap();
        if n <= 1 {
            return vec![f.clone()];
        }
        // Frobenius matrix: column j holds x^{jp} mod f.
        let xp = self.x_pow_p(f);
        let mut col = FpPoly { c: vec![1] };
        let mut q = vec![vec![0u64; n]; n];
        for j in 0..n {
            for (i, &c) in col.c.iter().enumerate() {
                q[i][j] = c;
            }
            col = self.poly_divrem(&self.poly_mul(&col, &xp), f).1;
        }
        for (i, row) in q.iter_mut().enumerate() {
            row[i] = self.sub(row[i], 1);
        }
        let basis = self.fp_kernel(&q, n);
        let r = basis.len();
        let mut factors = vec![f.clone()];
        if r == 1 {
            return factors;
        }
        'outer: for v in basis.iter() {
            let vp = self.trim(v.clone());
            if self.deg(&vp).unwrap_or(0) == 0 {
                continue; // constants separate nothing
            }
            let mut next = Vec::new();
            for g in factors.drain(..) {
                if self.deg(&g).unwrap() <= 1 {
                    next.push(g);
                    continue;
                }
                let mut pieces = vec![g];
                for cval in 0..self.p {
                    let mut shifted = vp.clone();
                    if shifted.c.is_empty() {
                        shifted.c.push(0);
                    }
                    shifted.c[0] = self.sub(shifted.c[0], cval);
                    let shifted = self.trim(shifted.c);
                    let mut refined = Vec::new();
                    for piece in pieces.drain(..) {
                        if self.deg(&piece).unwrap() <= 1 {
                            refined.push(piece);
                            continue;
                        }
                        let d = self.poly_gcd(&piece, &shifted);
                        let dd = self.deg(&d).unwrap_or(0);
                        if dd == 0 || dd == self.deg(&piece).unwrap() {
                            refined.push(piece);
                        } else {
                            let (quot, rem) = self.poly_divrem(&piece, &d);
                            debug_assert!(rem.c.is_empty());
                            refined.push(d);
                            refined.push(self.make_monic(&quot));
                        }
                    }
                    pieces = refined;
                }
                next.extend(pieces);
            }
            factors = next;
            if factors.len() == r {
                break 'outer;
            }
        }
        factors
    }

    /// Kernel basis of an n x n matrix over F_p.
    fn fp_kernel(&self, m: &[Vec<u64>], n: usize) -> Vec<Vec<u64>> {
        let mut rows: Vec<Vec<u64>> = m.to_vec();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..n {
            let Some(pr) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pr);
            let inv = self.inv(rows[rank][col]);
            for x in rows[rank].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for r in 0..rows.len() {
                if r != rank && rows[r][col] != 0 {
                    let f = rows[r][col];
                    for c in 0..n {
                        let delta = self.mul(f, rows[rank][c]);
                        rows[r][c] = self.sub(rows[r][c], delta);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        let mut basis = Vec::new();
        for fcol in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; n];
            v[fcol] = 1;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = self.sub(0, rows[r][fcol]);
            }
            basis.push(v);
        }
        basis
    }
}

// ---------------------------------------------------------------------------
// Polynomials mod p^k with BigInt coefficients.

#[derive(Debug, Clone, PartialEq)]
struct PolyM {
    c: Vec<BigInt>,
}

struct ModCtx {
    m: BigInt,
}

impl ModCtx {
    fn red(&self, x: &BigInt) -> BigInt {
        x.mod_floor(&self.m)
    }

    fn trim(&self, mut v: Vec<BigInt>) -> PolyM {
        for x in v.iter_mut() {
            *x = self.red(x);
        }
        while v.last().is_some_and(|x| x.is_zero()) {
            v.pop();
        }
        PolyM { c: v }
    }

    fn from_polyz(&self, f: &PolyZ) -> PolyM {
        self.trim(f.0.clone())
    }

    fn add(&self, a: &PolyM, b: &PolyM) -> PolyM {
        let n = a.c.len().max(b.c.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in a.c.iter().enumerate() {
            out[i] += x;
        }
        for (i, x) in b.c.iter().enumerate() {
            out[i] += x;
        }
        self.trim(out)
    }

    fn sub(&self, a: &PolyM, b: &PolyM) -> PolyM {
        let n = a.c.len().max(b.c.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in a.c.iter().enumerate() {
            out[i] += x;
        }
        for (i, x) in b.c.iter().enumerate() {
            out[i] -= x;
        }
        self.trim(out)
    }

    fn mul(&self, a: &PolyM, b: &PolyM) -> PolyM {
        if a.c.is_empty() || b.c.is_empty() {
            return PolyM { c: vec![] };
        }
        let mut out = vec![BigInt::zero(); a.c.len() + b.c.len() - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.trim(out)
    }

    /// Division with remainder by a monic polynomial.
    fn divrem_monic(&self, a: &PolyM, d: &PolyM) -> (PolyM, PolyM) {
        assert!(d.c.last().is_some_and(|x| x.is_one()), "divisor must be monic");
        let dd = d.c.len() - 1;
        let mut r = a.c.clone();
        if r.len() < dd + 1 {
            return (PolyM { c: vec![] }, a.clone());
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = self.red(&r[k + dd]);
            if !c.is_zero() {
                for (i, dc) in d.c.iter().enumerate() {
                    let delta = &c * dc;
                    r[k + i] -= delta;
                }
            }
            q[k] = c;
        }
        (self.trim(q), self.trim(r))
    }

    /// Coefficients centered into (-m/2, m/2].
    fn center(&self, a: &PolyM) -> PolyZ {
        let half = &self.m / 2;
        PolyZ::trim(
            a.c.iter()
                .map(|x| {
                    let r = self.red(x);
                    if r > half {
                        r - &self.m
                    } else {
                        r
                    }
                })
                .collect(),
        )
    }
}

/// Quadratic Hensel lifting of a coprime monic factorization. Everything is
/// monic: `f = g*h mod p^k` lifts to `mod p^2k` while staying monic.
fn hensel_step(
    f: &PolyZ,
    g: &PolyM,
    h: &PolyM,
    s: &PolyM,
    t: &PolyM,
    m_next: &BigInt,
) -> (PolyM, PolyM, PolyM, PolyM) {
    let ctx = ModCtx { m: m_next.clone() };
    let fg = ctx.from_polyz(f);
    let g = PolyM { c: g.c.clone() };
    let h = PolyM { c: h.c.clone() };
    let s = PolyM { c: s.c.clone() };
    let t = PolyM { c: t.c.clone() };
    let e = ctx.sub(&fg, &ctx.mul(&g, &h));
    let (q, r) = ctx.divrem_monic(&ctx.mul(&s, &e), &h);
    let g_new = ctx.add(&g, &ctx.add(&ctx.mul(&t, &e), &ctx.mul(&q, &g)));
    let h_new = ctx.add(&h, &r);
    let one = PolyM { c: vec![BigInt::one()] };
    let b = ctx.sub(&ctx.add(&ctx.mul(&s, &g_new), &ctx.mul(&t, &h_new)), &one);
    let (c, d) = ctx.divrem_monic(&ctx.mul(&s, &b), &h_new);
    let s_new = ctx.sub(&s, &d);
    let t_new = ctx.sub(&ctx.sub(&t, &ctx.mul(&t, &b)), &ctx.mul(&c, &g_new));
    (g_new, h_new, s_new, t_new)
}

/// Lifts the monic factorization `fhat = prod(factors) mod p` to `mod p^2^L`
/// (first power of the squared tower at or above `target`), recursively over
/// a balanced factor tree.
fn hensel_tree(fhat: &PolyZ, factors: &[FpPoly], p: u64, target: &BigInt) -> Vec<PolyM> {
    if factors.len() == 1 {
        let ctx = ModCtx { m: target.clone() };
        return vec![ctx.from_polyz(fhat)];
    }
    let fp = FpCtx { p };
    let mid = factors.len() / 2;
    let (lf, rf) = factors.split_at(mid);
    let mut g0 = FpPoly { c: vec![1] };
    for f in lf {
        g0 = fp.poly_mul(&g0, f);
    }
    let mut h0 = FpPoly { c: vec![1] };
    for f in rf {
        h0 = fp.poly_mul(&h0, f);
    }
    // Bezout s*g + t*h = 1 mod p via extended Euclid.
    let (s0, t0) = fp_extended_gcd(&fp, &g0, &h0);
    let mut m = BigInt::from(p);
    let to_polym = |f: &FpPoly| PolyM { c: f.c.iter().map(|&x| BigInt::from(x)).collect() };
    let (mut g, mut h, mut s, mut t) = (to_polym(&g0), to_polym(&h0), to_polym(&s0), to_polym(&t0));
    while m < *target {
        let m2 = &m * &m;
        let (gn, hn, sn, tn) = hensel_step(fhat, &g, &h, &s, &t, &m2);
        g = gn;
        h = hn;
        s = sn;
        t = tn;
        m = m2;
    }
    let gz = ModCtx { m: m.clone() }.center(&g);
    let hz = ModCtx { m: m.clone() }.center(&h);
    let mut out = hensel_tree(&gz, lf, p, &m);
    out.extend(hensel_tree(&hz, rf, p, &m));
    // Renormalize all factors to the common modulus reached here.
    let ctx = ModCtx { m };
    out.into_iter().map(|f| ctx.trim(f.c)).collect()
}

/// Extended Euclid over F_p: returns (s, t) with s*a + t*b = 1 for coprime
/// monic a, b.
fn fp_extended_gcd(fp: &FpCtx, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (FpPoly { c: vec![1] }, FpPoly { c: vec![] });
    let (mut t0, mut t1) = (FpPoly { c: vec![] }, FpPoly { c: vec![1] });
    while !r1.c.is_empty() {
        let (q, r) = fp.poly_divrem(&r0, &r1);
        let s = fp.poly_sub(&s0, &fp.poly_mul(&q, &s1));
        let t = fp.poly_sub(&t0, &fp.poly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    // r0 = gcd is a nonzero constant; scale to make the combination equal 1.
    let c = r0.c[0];
    let inv = fp.inv(c);
    let scale = |f: &FpPoly| FpPoly { c: f.c.iter().map(|&x| fp.mul(x, inv)).collect() };
    (scale(&s0), scale(&t0))
}

/// Factors a rational polynomial into monic irreducible factors with
/// multiplicities, in a deterministic order.
pub fn factor(f: &PolyQ) -> Vec<(PolyQ, usize)> {
    assert!(!f.is_zero(), "factor of zero polynomial");
    if f.degree() == Some(0) {
        return Vec::new();
    }
    let mut out: Vec<(PolyQ, usize)> = Vec::new();
    for (sq, mult) in squarefree_decomposition(&f.monic()) {
        let prim = sq.primitive_integer();
        for g in factor_squarefree_z(&prim) {
            out.push((g.to_rational().monic(), mult));
        }
    }
    out.sort_by(|a, b| {
        a.0 .0
            .len()
            .cmp(&b.0 .0.len())
            .then_with(|| a.0 .0.iter().rev().cmp(b.0 .0.iter().rev()))
    });
    out
}

/// Yun's squarefree decomposition of a monic polynomial: returns pairs
/// (squarefree factor, multiplicity) with product f.
pub fn squarefree_decomposition(f: &PolyQ) -> Vec<(PolyQ, usize)> {
    let mut out = Vec::new();
    let df = f.derivative();
    let g = f.gcd(&df);
    if g.degree() == Some(0) {
        out.push((f.monic(), 1));
        return out;
    }
    let mut w = f.divrem(&g).0;
    let mut y = df.divrem(&g).0;
    let mut z = y.sub(&w.derivative());
    let mut i = 1usize;
    while w.degree().is_some_and(|d| d > 0) {
        let gi = w.gcd(&z);
        if gi.degree().is_some_and(|d| d > 0) {
            out.push((gi.monic(), i));
        }
        w = w.divrem(&gi).0;
        y = z.divrem(&gi).0;
        z = y.sub(&w.derivative());
        i += 1;
    }
    out
}

/// Factors a primitive squarefree integer polynomial into primitive
/// irreducible integer polynomials.
fn factor_squarefree_z(f: &PolyZ) -> Vec<PolyZ> {
    let n = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![f.clone()],
        Some(n) => n,
    };
    // Pick a prime keeping f squarefree with unit leading coefficient.
    let lc = f.0.last().unwrap().clone();
    let mut p = 3u64;
    let fp_ok = |p: u64| -> bool {
        let fp = FpCtx { p };
        if fp.reduce_bigint(&lc) == 0 {
            return false;
        }
        let fbar = fp.from_polyz(f);
        let d = fp.poly_gcd(&fbar, &fp.poly_deriv(&fbar));
        fp.deg(&d) == Some(0)
    };
    while !fp_ok(p) {
        p = next_prime(p);
    }
    let fp = FpCtx { p };
    let fbar = fp.make_monic(&fp.from_polyz(f));
    let modular = fp.berlekamp(&fbar);
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    // Coefficient bound for any irreducible factor of f (times lc), then the
    // modulus target p^k > 2*bound.
    let bound: BigInt = (BigInt::from(n) + 1) * (BigInt::one() << n) * f.max_abs() * lc.abs();
    let target = bound * 2 + 1;
    // Lift the monic factorization of lc^{-1} f.
    let mut modulus = BigInt::from(p);
    while modulus < target {
        modulus = &modulus * &modulus;
    }
    let ctx = ModCtx { m: modulus.clone() };
    let lc_inv = mod_inverse(&lc, &modulus);
    let fhat = ctx.center(&ctx.trim(f.0.iter().map(|c| c * &lc_inv).collect()));
    let lifted = hensel_tree(&fhat, &modular, p, &modulus);
    recombine(f, lifted, &modulus)
}

/// Searches subsets of the lifted modular factors for true integer factors,
/// smallest subsets first.
fn recombine(f: &PolyZ, lifted: Vec<PolyM>, modulus: &BigInt) -> Vec<PolyZ> {
    let ctx = ModCtx { m: modulus.clone() };
    let mut remaining: Vec<PolyM> = lifted;
    let mut f = f.clone();
    let mut out = Vec::new();
    let mut size = 1usize;
    'search: while 2 * size <= remaining.len() {
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for subset in combinations(&idxs, size) {
            let lc = f.0.last().unwrap().clone();
            let mut prod = PolyM { c: vec![ctx.red(&lc)] };
            for &i in &subset {
                prod = ctx.mul(&prod, &remaining[i]);
            }
            let candidate = ctx.center(&prod).primitive();
            if candidate.degree().is_none() {
                continue;
            }
            if let Some(quot) = f.try_divide(&candidate) {
                out.push(candidate);
                f = quot.primitive();
                let keep: Vec<PolyM> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g.clone())
                    .collect();
                remaining = keep;
                continue 'search;
            }
        }
        size += 1;
    }
    if f.degree().is_some_and(|d| d > 0) {
        out.push(f);
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(items: &[usize], k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            current.push(items[i]);
            go(items, k, i + 1, current, out);
            current.pop();
        }
    }
    go(items, k, 0, &mut current, &mut out);
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "element not invertible mod m");
    e.x.mod_floor(m)
}

fn next_prime(p: u64) -> u64 {
    let mut q = p + 2;
    loop {
        if (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0) {
            return q;
        }
        q += 2;
    }
}

/// Minimal polynomial of a square matrix: the first linear dependence among
/// flattened powers, solved exactly.
pub fn min_poly_matrix(m: &Matrix) -> PolyQ {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    if n == 0 {
        return PolyQ::from_coeffs(vec![Rational::zero(), Rational::one()]);
    }
    let mut powers: Vec<Vec<Rational>> = Vec::new();
    let mut current = Matrix::identity(n);
    loop {
        let flat = current.flatten();
        let span = Subspace::from_rows(n * n, powers.clone());
        if span.contains_vector(&flat) {
            // Express the new power in the earlier ones.
            let cols = Matrix::from_rows(powers.clone()).transpose();
            let (coeffs, _) = crate::exactmat::solve(&cols, &flat).expect("dependence is consistent");
            let k = powers.len();
            let mut poly = vec![Rational::zero(); k + 1];
            for (i, c) in coeffs.iter().enumerate() {
                poly[i] = -c.clone();
            }
            poly[k] = Rational::one();
            return PolyQ::from_coeffs(poly);
        }
        powers.push(flat);
        current = current.mul(m);
        assert!(powers.len() <= n + 1, "minimal polynomial search exceeded dimension bound");
    }
}
