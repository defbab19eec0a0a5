//! Coefficient tables of the corner and connecting-vertex recursions.
//!
//! Every recursion has the shape
//! `x_{n+1,i} = sum coef * y_{n,i-shift} * m(s_n, p_n, l_n)` where `y` is one
//! of four level-`n` corner series and `m` a quadratic monomial in the class
//! sizes. A shift of one means the vertex uses its edge into a neighbouring
//! copy. Keeping the terms as data lets the same table drive both the integer
//! evaluation and the class-normalised one.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use crate::count::{ClassRatios, ClassVector};
use crate::exact::int;

/// Level-`n` corner series feeding a recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Src {
    /// `s_{n,i}(c)` at a corner `c` next to the gluing point.
    S,
    /// `p_{n,i}(c)`: forests isolating the far corner 2, seen at corner `c`.
    P,
    /// `p_{n,i}(2)`: the same forests seen at the isolated corner.
    Q,
    /// `l_{n,i}(c)`.
    L,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mono {
    SS,
    SP,
    PP,
    SL,
    PL,
}

/// Size class of a target series: spanning trees, two-tree or three-tree forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Size {
    S,
    P,
    L,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Term {
    pub coef: u32,
    pub src: Src,
    pub shift: usize,
    pub mono: Mono,
}

const fn t(coef: u32, src: Src, mono: Mono) -> Term {
    Term {
        coef,
        src,
        shift: 0,
        mono,
    }
}

/// Term that also spends the edge leaving the copy.
const fn x(coef: u32, src: Src, mono: Mono) -> Term {
    Term {
        coef,
        src,
        shift: 1,
        mono,
    }
}

use Mono::*;
use Src::{L as Ls, P as Ps, Q as Qs, S as Ss};

pub(crate) struct Recursion {
    pub size: Size,
    pub terms: &'static [Term],
}

/// Corner recursions, targets `s(0)`, `p(0)`, `p(2)`, `l(0)` at level `n + 1`.
pub(crate) const OUTMOST: [Recursion; 4] = [
    Recursion {
        size: Size::S,
        terms: &[t(3, Ss, SS), t(2, Ps, SS), t(4, Ss, SP)],
    },
    Recursion {
        size: Size::P,
        terms: &[
            t(1, Ss, SS),
            t(1, Ps, SS),
            t(6, Ss, SP),
            t(4, Ps, SP),
            t(3, Ss, PP),
            t(1, Ss, SL),
        ],
    },
    Recursion {
        size: Size::P,
        terms: &[
            t(1, Ss, SS),
            t(2, Ps, SS),
            t(3, Qs, SS),
            t(1, Ls, SS),
            t(2, Ss, SP),
            t(2, Ps, SP),
            t(4, Qs, SP),
            t(1, Ss, PP),
        ],
    },
    Recursion {
        size: Size::L,
        terms: &[
            t(1, Ss, SS),
            t(2, Ps, SS),
            t(2, Qs, SS),
            t(1, Ls, SS),
            t(8, Ss, SP),
            t(12, Ps, SP),
            t(12, Qs, SP),
            t(4, Ls, SP),
            t(12, Ss, PP),
            t(8, Ps, PP),
            t(6, Qs, PP),
            t(2, Ss, SL),
            t(2, Ps, SL),
            t(2, Qs, SL),
            t(4, Ss, PL),
        ],
    },
];

/// Connecting-vertex recursions, targets `s(01)`, `p(01)`, `p(02)`, `p(20)`,
/// `l(01)` at level `n + 1`, fed by the level-`n` series of corner 1.
pub(crate) const CONNECTING: [Recursion; 5] = [
    Recursion {
        size: Size::S,
        terms: &[
            t(1, Ss, SS),
            x(2, Ss, SS),
            x(4, Ss, SP),
            x(1, Ps, SS),
            x(1, Qs, SS),
        ],
    },
    Recursion {
        size: Size::P,
        terms: &[
            t(1, Ss, SP),
            x(1, Ss, SS),
            x(5, Ss, SP),
            x(1, Ss, SL),
            x(3, Ss, PP),
            x(1, Ps, SS),
            x(3, Ps, SP),
            x(1, Qs, SP),
        ],
    },
    Recursion {
        size: Size::P,
        terms: &[
            t(1, Ss, SS),
            t(3, Ss, SP),
            x(3, Ss, SP),
            x(1, Ss, SL),
            x(3, Ss, PP),
            x(1, Qs, SS),
            x(3, Qs, SP),
            x(1, Ps, SP),
        ],
    },
    Recursion {
        size: Size::P,
        terms: &[
            t(1, Ss, SS),
            t(1, Ss, SP),
            t(2, Ps, SS),
            x(1, Ss, SP),
            x(1, Ss, PP),
            x(2, Ps, SS),
            x(5, Ps, SP),
            x(1, Qs, SS),
            x(1, Qs, SP),
            x(1, Ls, SS),
        ],
    },
    Recursion {
        size: Size::L,
        terms: &[
            t(1, Ss, SS),
            t(6, Ss, SP),
            t(1, Ss, SL),
            t(4, Ss, PP),
            t(2, Ps, SS),
            t(8, Ps, SP),
            x(2, Ss, SP),
            x(1, Ss, SL),
            x(8, Ss, PP),
            x(4, Ss, PL),
            x(1, Ps, SS),
            x(10, Ps, SP),
            x(3, Ps, SL),
            x(10, Ps, PP),
            x(1, Qs, SS),
            x(6, Qs, SP),
            x(1, Qs, SL),
            x(4, Qs, PP),
            x(1, Ls, SS),
            x(4, Ls, SP),
        ],
    },
];

fn src_index(src: Src) -> usize {
    match src {
        Src::S => 0,
        Src::P => 1,
        Src::Q => 2,
        Src::L => 3,
    }
}

/// Integer evaluation. `series` holds `[s, p, q, l]` degree counts at level `n`.
pub(crate) fn eval_counts(
    rec: &Recursion,
    series: &[[BigUint; 4]; 4],
    sizes: &ClassVector,
) -> [BigUint; 4] {
    let (s, p, l) = (&sizes.s, &sizes.p, &sizes.l);
    let monos = [s * s, s * p, p * p, s * l, p * l];
    std::array::from_fn(|i| {
        let mut acc = BigUint::zero();
        for term in rec.terms {
            if i < term.shift {
                continue;
            }
            let y = &series[src_index(term.src)][i - term.shift];
            if y.is_zero() {
                continue;
            }
            acc += y * &monos[term.mono as usize] * term.coef;
        }
        acc
    })
}

/// The same recursion on class-normalised series.
///
/// A term contributes `coef * Y_{i-shift} * |Y| m / |X_{n+1}|`, and all of
/// these ratios reduce to `p_n/s_n`, `l_n/s_n` and `s_n^3/s_{n+1}`.
pub(crate) fn eval_normalised(
    rec: &Recursion,
    series: &[[BigRational; 4]; 4],
    here: &ClassRatios,
    next: &ClassRatios,
) -> [BigRational; 4] {
    let rho = &here.p_over_s;
    let lam = &here.l_over_s;
    let src_size = |src: Src| match src {
        Src::S => int(1),
        Src::P | Src::Q => rho.clone(),
        Src::L => lam.clone(),
    };
    let mono = |m: Mono| match m {
        SS => int(1),
        SP => rho.clone(),
        PP => rho * rho,
        SL => lam.clone(),
        PL => rho * lam,
    };
    let target = match rec.size {
        Size::S => int(1),
        Size::P => next.p_over_s.clone(),
        Size::L => next.l_over_s.clone(),
    };
    let weights: Vec<BigRational> = rec
        .terms
        .iter()
        .map(|term| {
            int(term.coef as i64) * src_size(term.src) * mono(term.mono) * &here.cube_over_next
                / &target
        })
        .collect();
    std::array::from_fn(|i| {
        let mut acc = BigRational::zero();
        for (term, w) in rec.terms.iter().zip(&weights) {
            if i < term.shift {
                continue;
            }
            let y = &series[src_index(term.src)][i - term.shift];
            if !y.is_zero() {
                acc += y * w;
            }
        }
        acc
    })
}
