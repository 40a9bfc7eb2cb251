//! Multivariate gcd by recursive content/primitive-part splitting and
//! subresultant pseudo-remainder sequences.

use super::monomial::Monomial;
use super::poly::MultiPoly;
use super::scalar::Coeff;

/// Normalized greatest common divisor. `gcd(0, 0) = 0`.
pub fn poly_gcd<C: Coeff>(a: &MultiPoly<C>, b: &MultiPoly<C>) -> MultiPoly<C> {
    assert_eq!(a.nvars(), b.nvars(), "polynomial arity mismatch");
    gcd_raw(a, b).normalized()
}

/// Normalized gcd of a list of polynomials.
pub fn poly_gcd_many<'a, C: Coeff, I>(nvars: usize, polys: I) -> MultiPoly<C>
where
    I: IntoIterator<Item = &'a MultiPoly<C>>,
{
    let mut acc = MultiPoly::zero(nvars);
    for p in polys {
        acc = gcd_raw(&acc, p);
        if acc.is_constant() && !acc.is_zero() {
            return MultiPoly::one(nvars);
        }
    }
    acc.normalized()
}

fn gcd_raw<C: Coeff>(a: &MultiPoly<C>, b: &MultiPoly<C>) -> MultiPoly<C> {
    let n = a.nvars();
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(n);
    }
    if a == b {
        return a.clone();
    }

    // Pull out monomial contents first; this settles the monomial cases and
    // keeps the remainder sequences short.
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mono = ma.gcd(&mb);
    if a.is_monomial() || b.is_monomial() {
        return MultiPoly::monomial(mono, C::one());
    }
    let a = strip_monomial(a, &ma);
    let b = strip_monomial(b, &mb);
    let mono_poly = MultiPoly::monomial(mono, C::one());

    let core = gcd_stripped(&a, &b);
    core.mul(&mono_poly)
}

fn strip_monomial<C: Coeff>(p: &MultiPoly<C>, m: &Monomial) -> MultiPoly<C> {
    if m.is_one() {
        return p.clone();
    }
    MultiPoly::from_terms(
        p.nvars(),
        p.terms()
            .iter()
            .map(|(t, c)| (t.div(m).expect("monomial content divides"), c.clone())),
    )
}

fn gcd_stripped<C: Coeff>(a: &MultiPoly<C>, b: &MultiPoly<C>) -> MultiPoly<C> {
    let n = a.nvars();
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(n);
    }
    let sa = a.support_vars();
    let sb = b.support_vars();
    let Some(var) = (0..n).find(|&i| sa[i] || sb[i]) else {
        return MultiPoly::one(n);
    };

    // A variable missing from one side: the gcd lies in the coefficient ring
    // with respect to that variable.
    if !sb[var] {
        return gcd_raw(&content(a, var), b);
    }
    if !sa[var] {
        return gcd_raw(a, &content(b, var));
    }

    let ca = content(a, var);
    let cb = content(b, var);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd_raw(&ca, &cb);
    let g = subresultant_gcd(&pa, &pb, var);
    let g = primitive_part(&g, var);
    c.mul(&g)
}

/// Gcd of the coefficients with respect to `x_{var+1}`.
fn content<C: Coeff>(p: &MultiPoly<C>, var: usize) -> MultiPoly<C> {
    let n = p.nvars();
    let mut acc = MultiPoly::zero(n);
    for coeff in p.to_univariate(var) {
        if coeff.is_zero() {
            continue;
        }
        acc = gcd_raw(&acc, &coeff);
        if acc.is_constant() {
            return MultiPoly::one(n);
        }
    }
    acc
}

fn primitive_part<C: Coeff>(p: &MultiPoly<C>, var: usize) -> MultiPoly<C> {
    let c = content(p, var);
    p.div_exact(&c).expect("content divides")
}

type Univariate<C> = Vec<MultiPoly<C>>;

fn trim<C: Coeff>(u: &mut Univariate<C>) {
    while u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
}

fn udeg<C: Coeff>(u: &Univariate<C>) -> Option<usize> {
    u.len().checked_sub(1)
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` over the
/// coefficient ring.
fn prem<C: Coeff>(a: &Univariate<C>, b: &Univariate<C>) -> Univariate<C> {
    let db = udeg(b).expect("nonzero divisor");
    let lcb = &b[db];
    let mut r = a.clone();
    trim(&mut r);
    let mut exponent = (udeg(&r).unwrap_or(0) + 1).saturating_sub(db);
    while let Some(dr) = udeg(&r) {
        if dr < db {
            break;
        }
        let shift = dr - db;
        let lead = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul(lcb);
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&bc.mul(&lead));
        }
        trim(&mut r);
        exponent -= 1;
    }
    if exponent > 0 && !r.is_empty() {
        let factor = lcb.pow(exponent as u32);
        for c in r.iter_mut() {
            *c = c.mul(&factor);
        }
    }
    r
}

fn subresultant_gcd<C: Coeff>(a: &MultiPoly<C>, b: &MultiPoly<C>, var: usize) -> MultiPoly<C> {
    let n = a.nvars();
    let mut ua = a.to_univariate(var);
    let mut ub = b.to_univariate(var);
    trim(&mut ua);
    trim(&mut ub);
    if ua.len() < ub.len() {
        std::mem::swap(&mut ua, &mut ub);
    }
    let mut g = MultiPoly::one(n);
    let mut h = MultiPoly::one(n);
    loop {
        let delta = (ua.len() - ub.len()) as u32;
        let r = prem(&ua, &ub);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return MultiPoly::one(n);
        }
        let divisor = g.mul(&h.pow(delta));
        let next: Univariate<C> = r
            .iter()
            .map(|c| {
                c.div_exact(&divisor)
                    .expect("subresultant division is exact")
            })
            .collect();
        ua = std::mem::replace(&mut ub, next);
        g = ua.last().expect("nonzero").clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g
                .pow(d)
                .div_exact(&h.pow(d - 1))
                .expect("subresultant division is exact"),
        };
    }
    MultiPoly::from_univariate(var, n, &ub)
}
