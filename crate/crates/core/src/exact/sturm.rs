//! Sturm chains: exact counting and isolation of real roots.
//!
//! Counting always happens on the square-free part, so the counts are of
//! distinct roots. Multiplicities are recovered separately from the
//! iterated gcd chain.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::field::{rational_sign, Ring};
use super::poly::Poly;
use super::rational::{format_rational, Rational};
use super::ExactError;

/// Sign of a rational: -1, 0, or 1.
pub fn sign(q: &Rational) -> i8 {
    rational_sign(q)
}

/// The canonical Sturm chain `p, p', -(p mod p'), ...`.
pub struct SturmChain {
    seq: Vec<Poly<Rational>>,
}

impl SturmChain {
    pub fn of(p: &Poly<Rational>) -> Self {
        let mut seq = vec![p.clone()];
        if p.degree().map_or(false, |d| d >= 1) {
            seq.push(p.derivative());
            loop {
                let n = seq.len();
                let (_, r) = seq[n - 2].divrem(&seq[n - 1]);
                if r.is_zero() {
                    break;
                }
                seq.push(-r);
            }
        }
        Self { seq }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.seq.iter().map(|p| sign(&p.eval(x))))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| p.leading().map_or(0, sign)))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| {
            let s = p.leading().map_or(0, sign);
            if p.degree().map_or(0, |d| d) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
/// Requires `p(lo) != 0` and `p(hi) != 0`; a root at an endpoint is a
/// `BoundaryRoot` error, not a miscount.
pub fn count_roots_in(
    p: &Poly<Rational>,
    lo: &Rational,
    hi: &Rational,
) -> Result<usize, ExactError> {
    if lo >= hi {
        return Err(ExactError::EmptyInterval);
    }
    if p.is_zero() {
        return Err(ExactError::Malformed("root count of zero polynomial".into()));
    }
    for end in [lo, hi] {
        if p.eval(end).is_zero() {
            return Err(ExactError::BoundaryRoot { at: format_rational(end) });
        }
    }
    let sf = p.squarefree();
    let chain = SturmChain::of(&sf);
    Ok(chain.variations_at(lo) - chain.variations_at(hi))
}

/// Number of distinct real roots of `p` in `(0, +inf)`.
pub fn count_roots_positive_axis(p: &Poly<Rational>) -> Result<usize, ExactError> {
    if p.is_zero() {
        return Err(ExactError::Malformed("root count of zero polynomial".into()));
    }
    let zero = Rational::from_integer(0.into());
    if p.eval(&zero).is_zero() {
        return Err(ExactError::BoundaryRoot { at: "0".into() });
    }
    let sf = p.squarefree();
    let chain = SturmChain::of(&sf);
    Ok(chain.variations_at(&zero) - chain.variations_at_pos_inf())
}

/// An interval certified to contain exactly one distinct root of the
/// polynomial it was produced for. Endpoints are exact rationals that are
/// not themselves roots.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsolatingInterval {
    #[serde(with = "super::rational::serde_rational")]
    pub lo: Rational,
    #[serde(with = "super::rational::serde_rational")]
    pub hi: Rational,
    pub multiplicity: u32,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        self.hi.clone() - self.lo.clone()
    }

    pub fn midpoint(&self) -> Rational {
        (self.lo.clone() + self.hi.clone()) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }
}

/// Isolate all distinct real roots of `p` in `(lo, hi)` into disjoint
/// intervals of width at most `tol`, sorted in increasing order.
/// Multiplicities come from the iterated gcd chain of `p`.
pub fn isolate_roots(
    p: &Poly<Rational>,
    lo: &Rational,
    hi: &Rational,
    tol: &Rational,
) -> Result<Vec<IsolatingInterval>, ExactError> {
    assert!(tol.is_positive(), "tolerance must be positive");
    if p.is_zero() {
        return Err(ExactError::Malformed("isolation of zero polynomial".into()));
    }
    for end in [lo, hi] {
        if p.eval(end).is_zero() {
            return Err(ExactError::BoundaryRoot { at: format_rational(end) });
        }
    }
    let sf = p.squarefree();
    let chain = SturmChain::of(&sf);
    let count = |a: &Rational, b: &Rational| chain.variations_at(a) - chain.variations_at(b);

    // Chain of iterated gcds: a root has multiplicity >= k+1 in p exactly
    // when it is a root of gcds[k].
    let mut gcds = vec![];
    let mut g = p.gcd(&p.derivative());
    while g.degree().map_or(false, |d| d >= 1) {
        let next = g.gcd(&g.derivative());
        gcds.push(g);
        g = next;
    }

    let two = Rational::from_integer(2.into());
    let mut done = vec![];
    let mut stack = vec![(lo.clone(), hi.clone(), count(lo, hi))];
    while let Some((a, b, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        let width = b.clone() - a.clone();
        if n == 1 && width <= *tol {
            done.push((a, b));
            continue;
        }
        let mid = (a.clone() + b.clone()) / two.clone();
        if sf.eval(&mid).is_zero() {
            // Exact rational root at the midpoint: carve out a
            // symmetric interval around it small enough to isolate.
            let mut delta = (width.clone() / two.clone()).min(tol.clone() / two.clone());
            loop {
                let l = mid.clone() - delta.clone();
                let r = mid.clone() + delta.clone();
                if !sf.eval(&l).is_zero() && !sf.eval(&r).is_zero() && count(&l, &r) == 1 {
                    done.push((l.clone(), r.clone()));
                    stack.push((a.clone(), l.clone(), count(&a, &l)));
                    stack.push((r.clone(), b.clone(), count(&r, &b)));
                    break;
                }
                delta = delta / two.clone();
            }
        } else {
            let left = count(&a, &mid);
            stack.push((a, mid.clone(), left));
            stack.push((mid, b, n - left));
        }
    }

    done.sort_by(|x, y| x.0.cmp(&y.0));
    let mut out = vec![];
    for (a, b) in done {
        let mut multiplicity = 1u32;
        for g in &gcds {
            // Endpoints avoid roots of p, hence of every gcd iterate.
            let gchain = SturmChain::of(&g.squarefree());
            if gchain.variations_at(&a) - gchain.variations_at(&b) == 1 {
                multiplicity += 1;
            } else {
                break;
            }
        }
        out.push(IsolatingInterval { lo: a, hi: b, multiplicity });
    }
    Ok(out)
}

/// If `p` has no root in the closed interval `[lo, hi]`, its sign there is
/// constant; return it. `None` when a root is present.
pub fn sign_constant_on(
    p: &Poly<Rational>,
    lo: &Rational,
    hi: &Rational,
) -> Result<Option<i8>, ExactError> {
    if p.is_zero() {
        return Ok(None);
    }
    if p.eval(lo).is_zero() || p.eval(hi).is_zero() {
        return Ok(None);
    }
    if count_roots_in(p, lo, hi)? > 0 {
        return Ok(None);
    }
    let mid = (lo.clone() + hi.clone()) / Rational::from_integer(2.into());
    Ok(Some(sign(&p.eval(&mid))))
}
