//! Globally adaptive Gauss-Kronrod (7, 15) on a finite interval.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::cx::{Complex, ZERO};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy)]
struct Piece {
    a: f64,
    b: f64,
    value: Complex,
    err: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then(other.a.total_cmp(&self.a))
    }
}

fn rule<F: Fn(f64) -> Complex>(f: &F, a: f64, b: f64) -> Piece {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    let mut fv1 = [ZERO; 7];
    let mut fv2 = [ZERO; 7];
    for j in 0..7 {
        let dx = h * XGK[j];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        k += (f1 + f2) * WGK[j];
        if j % 2 == 1 {
            g += (f1 + f2) * WG[j / 2];
        }
    }
    let mean = k * 0.5;
    let mut resasc = WGK[7] * (fc - mean).norm();
    for j in 0..7 {
        resasc += WGK[j] * ((fv1[j] - mean).norm() + (fv2[j] - mean).norm());
    }
    let mut resabs = WGK[7] * fc.norm();
    for j in 0..7 {
        resabs += WGK[j] * (fv1[j].norm() + fv2[j].norm());
    }
    let resasc = resasc * h.abs();
    let resabs = resabs * h.abs();
    let mut err = ((k - g) * h).norm();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    let value = k * h;
    if !(value.re.is_finite() && value.im.is_finite()) {
        err = f64::INFINITY;
    }
    Piece { a, b, value, err }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Adaptive {
    pub value: Complex,
    pub err: f64,
    pub evals: usize,
    pub converged: bool,
}

/// Integrates f over [a, b], starting from `pieces` equal subintervals.
pub(crate) fn integrate<F: Fn(f64) -> Complex>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    budget: usize,
    pieces: usize,
) -> Adaptive {
    let pieces = pieces.max(1);
    let mut heap = BinaryHeap::new();
    let w = (b - a) / pieces as f64;
    for i in 0..pieces {
        let lo = a + w * i as f64;
        let hi = if i + 1 == pieces { b } else { lo + w };
        heap.push(rule(f, lo, hi));
    }
    let mut evals = 15 * pieces;
    let totals = |heap: &BinaryHeap<Piece>| {
        let mut v: Vec<&Piece> = heap.iter().collect();
        v.sort_by(|x, y| x.a.total_cmp(&y.a));
        let value: Complex = v.iter().map(|p| p.value).sum();
        let err: f64 = v.iter().map(|p| p.err).sum();
        (value, err)
    };
    let (mut value, mut err) = totals(&heap);
    loop {
        let target = abs_tol.max(rel_tol * value.norm());
        if err <= target || evals + 30 > budget {
            // running sums drift; recompute in a fixed order before deciding
            let (v, e) = totals(&heap);
            value = v;
            err = e;
            let target = abs_tol.max(rel_tol * value.norm());
            if err <= target || evals + 30 > budget {
                return Adaptive {
                    value,
                    err,
                    evals,
                    converged: err <= target,
                };
            }
        }
        let worst = heap.pop().expect("nonempty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // the worst interval can no longer be split
            heap.push(worst);
            let (value, err) = totals(&heap);
            return Adaptive {
                value,
                err,
                evals,
                converged: false,
            };
        }
        let left = rule(f, worst.a, mid);
        let right = rule(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        evals += 30;
    }
}
