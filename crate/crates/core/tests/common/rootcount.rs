//! Brute-force real-root localization by derivative recursion, built as an
//! independent cross-check of the sign-variation counters in the library.
//! No Sturm chains: roots of the derivative are enclosed recursively, each
//! enclosure is shrunk by exact interval arithmetic until the polynomial is
//! sign-definite on it, and the monotone gaps in between are decided by
//! endpoint signs alone.

use std::cmp::Ordering;

use fiberjoin_core::{Poly, Rational};
use num_traits::{One, Signed, Zero};

fn half(x: &Rational) -> Rational {
    x / Rational::from_integer(2.into())
}

/// Exact bound on the range of `p` over `[lo, hi]` by interval Horner.
fn range_bound(p: &Poly<Rational>, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut bounds = (Rational::zero(), Rational::zero());
    for a in p.coeffs().iter().rev() {
        let candidates = [
            bounds.0.clone() * lo,
            bounds.0.clone() * hi,
            bounds.1.clone() * lo,
            bounds.1.clone() * hi,
        ];
        let min = candidates.iter().min().unwrap().clone();
        let max = candidates.iter().max().unwrap().clone();
        bounds = (min + a, max + a);
    }
    bounds
}

fn sign_definite_on(p: &Poly<Rational>, lo: &Rational, hi: &Rational) -> bool {
    let (min, max) = range_bound(p, lo, hi);
    min.is_positive() || max.is_negative()
}

/// All real roots of `p` lie strictly inside `(-bound, bound)`.
fn cauchy_bound(p: &Poly<Rational>) -> Rational {
    let lead = p.leading().expect("nonzero polynomial").clone();
    let mut m = Rational::zero();
    for a in p.coeffs() {
        let q = (a / &lead).abs();
        if q > m {
            m = q;
        }
    }
    m + Rational::one()
}

/// A window certain to contain exactly one critical point, shrinkable to
/// arbitrarily small width around it.
#[derive(Clone, Debug)]
enum Window {
    /// Exact critical point with a symmetric slack.
    Point { at: Rational, eps: Rational },
    /// Derivative sign change across the ends.
    Bracket { lo: Rational, hi: Rational },
}

impl Window {
    fn span(&self) -> (Rational, Rational) {
        match self {
            Window::Point { at, eps } => (at.clone() - eps.clone(), at.clone() + eps.clone()),
            Window::Bracket { lo, hi } => (lo.clone(), hi.clone()),
        }
    }

    /// Halve the window, keeping the critical point of `d` inside.
    fn shrink(&mut self, d: &Poly<Rational>) {
        match self {
            Window::Point { eps, .. } => *eps = half(eps),
            Window::Bracket { lo, hi } => {
                let m = half(&(lo.clone() + hi.clone()));
                let vm = d.eval(&m);
                if vm.is_zero() {
                    let eps = half(&half(&(hi.clone() - lo.clone())));
                    *self = Window::Point { at: m, eps };
                } else if vm.is_positive() != d.eval(lo).is_positive() {
                    *hi = m;
                } else {
                    *lo = m;
                }
            }
        }
    }
}

/// An enclosure of one real root: either an exact rational root or an open
/// interval with a sign change and no other root inside.
#[derive(Clone, Debug)]
pub enum RootEnclosure {
    Exact(Rational),
    Bracket(Rational, Rational),
}

impl RootEnclosure {
    /// Shrink until the enclosure lies entirely on one side of `x`. The
    /// enclosed root never equals `x`; callers exclude query points that
    /// are roots.
    fn avoid(&mut self, q: &Poly<Rational>, x: &Rational) {
        loop {
            match self {
                RootEnclosure::Exact(r) => {
                    assert_ne!(r, x, "enclosed root coincides with a query point");
                    return;
                }
                RootEnclosure::Bracket(lo, hi) => {
                    if x <= lo || &*hi <= x {
                        return;
                    }
                    let sl = q.eval(lo).is_positive();
                    let m = half(&(lo.clone() + hi.clone()));
                    let vm = q.eval(&m);
                    if vm.is_zero() {
                        *self = RootEnclosure::Exact(m);
                    } else if vm.is_positive() != sl {
                        *hi = m;
                    } else {
                        *lo = m;
                    }
                }
            }
        }
    }

    /// Where the enclosed root sits relative to `x`; call `avoid` first.
    fn side(&self, x: &Rational) -> Ordering {
        match self {
            RootEnclosure::Exact(r) => r.cmp(x),
            RootEnclosure::Bracket(lo, hi) => {
                if hi <= x {
                    Ordering::Less
                } else if lo >= x {
                    Ordering::Greater
                } else {
                    panic!("enclosure straddles the query point")
                }
            }
        }
    }
}

/// Ordered enclosures of all distinct real roots of `p`.
pub fn enclose_roots(p: &Poly<Rational>) -> Vec<RootEnclosure> {
    assert!(!p.is_zero(), "root localization of the zero polynomial");
    let q = p.squarefree();
    let deg = q.degree().unwrap();
    if deg == 0 {
        return vec![];
    }
    if deg == 1 {
        return vec![RootEnclosure::Exact(-q.coeff(0) / q.coeff(1))];
    }

    // the bracket invariants below are sign changes of the squarefree part,
    // so all bisection decisions must use the same normalization
    let d = q.derivative().squarefree();
    let mut frame = cauchy_bound(&q);
    while d.eval(&frame).is_zero() || d.eval(&(-frame.clone())).is_zero() {
        frame = frame + Rational::one();
    }
    assert!(!q.eval(&frame).is_zero() && !q.eval(&(-frame.clone())).is_zero());

    // refine every critical enclosure into a window on which q is
    // sign-definite, lying entirely inside or outside the frame
    let mut windows: Vec<Window> = Vec::new();
    'next: for c in enclose_roots(&d) {
        let mut w = match c {
            RootEnclosure::Exact(at) => Window::Point { at, eps: Rational::one() },
            RootEnclosure::Bracket(lo, hi) => Window::Bracket { lo, hi },
        };
        loop {
            let (lo, hi) = w.span();
            if hi <= -frame.clone() || lo >= frame {
                continue 'next;
            }
            if -frame.clone() <= lo && hi <= frame && sign_definite_on(&q, &lo, &hi) {
                windows.push(w);
                break;
            }
            w.shrink(&d);
        }
    }
    // the critical points are strictly ordered, so shrinking makes the
    // windows pairwise disjoint
    for i in 1..windows.len() {
        loop {
            let (_, prev_hi) = windows[i - 1].span();
            let (cur_lo, _) = windows[i].span();
            if prev_hi <= cur_lo {
                break;
            }
            windows[i - 1].shrink(&d);
            windows[i].shrink(&d);
        }
    }

    // q is strictly monotone on every gap between consecutive windows; a
    // sign flip across a gap is exactly one root, equal signs are none
    let mut points = vec![(-frame.clone(), -frame.clone())];
    points.extend(windows.iter().map(|w| w.span()));
    points.push((frame.clone(), frame));
    let mut out = Vec::new();
    for w in points.windows(2) {
        let (u, v) = (&w[0].1, &w[1].0);
        if u >= v {
            continue;
        }
        let (su, sv) = (q.eval(u), q.eval(v));
        assert!(!su.is_zero() && !sv.is_zero(), "gap endpoint hit a root");
        if su.is_positive() != sv.is_positive() {
            out.push(RootEnclosure::Bracket(u.clone(), v.clone()));
        }
    }
    out
}

/// Distinct real roots of `p` in the open interval `(lo, hi)`, counted
/// with no sign-variation machinery. Requires nonroot endpoints.
pub fn count_roots_oracle(p: &Poly<Rational>, lo: &Rational, hi: &Rational) -> usize {
    assert!(lo < hi);
    let q = p.squarefree();
    assert!(!q.eval(lo).is_zero() && !q.eval(hi).is_zero(), "endpoint root");
    enclose_roots(&q)
        .into_iter()
        .filter(|e| {
            let mut e = e.clone();
            e.avoid(&q, lo);
            e.avoid(&q, hi);
            e.side(lo) == Ordering::Greater && e.side(hi) == Ordering::Less
        })
        .count()
}

/// Distinct real roots of `p` on the positive axis.
pub fn count_positive_oracle(p: &Poly<Rational>) -> usize {
    let q = p.squarefree();
    let zero = Rational::zero();
    assert!(!q.eval(&zero).is_zero(), "root at the origin");
    enclose_roots(&q)
        .into_iter()
        .filter(|e| {
            let mut e = e.clone();
            e.avoid(&q, &zero);
            e.side(&zero) == Ordering::Greater
        })
        .count()
}
