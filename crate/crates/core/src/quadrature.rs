//! Globally adaptive Gauss–Kronrod (10/21) integration.
//!
//! Used as the independent numerical oracle for every closed-form expression.
//! Semi-infinite ranges are mapped onto `[0, 1)` with `x = a + s·t/(1 − t)`.
#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadError {
    #[error("quadrature did not converge: achieved {achieved:e}, requested {requested:e}")]
    NotConverged { achieved: f64, requested: f64 },
    #[error("integrand is not finite at x = {x}")]
    NonFinite { x: f64 },
    #[error("invalid integration range")]
    InvalidRange,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_subdivisions: 4000,
        }
    }
}

impl QuadOptions {
    pub fn absolute(abs_tol: f64) -> Self {
        Self {
            abs_tol,
            rel_tol: 0.0,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error: f64,
    pub evaluations: usize,
}

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689,
    0.973_906_528_517_171_720_077_964_012_084,
    0.930_157_491_355_708_226_001_207_180_060,
    0.865_063_366_688_984_510_732_096_688_423,
    0.780_817_726_586_416_897_063_717_578_345,
    0.679_409_568_299_024_406_234_327_365_115,
    0.562_757_134_668_604_683_339_000_099_273,
    0.433_395_394_129_247_190_799_265_943_166,
    0.294_392_862_701_460_198_131_126_603_104,
    0.148_874_338_981_631_210_884_826_001_130,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062,
    0.032_558_162_307_964_727_478_818_972_459,
    0.054_755_896_574_351_996_031_381_300_245,
    0.075_039_674_810_919_952_767_043_140_916,
    0.093_125_454_583_697_605_535_065_465_083,
    0.109_387_158_802_297_641_899_210_590_326,
    0.123_491_976_262_065_851_077_958_109_831,
    0.134_709_217_311_473_325_928_054_001_772,
    0.142_775_938_577_060_080_797_094_273_139,
    0.147_739_104_901_338_491_374_841_515_972,
    0.149_445_554_002_916_905_664_936_468_390,
];

// Gauss weights for the odd-indexed Kronrod nodes.
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893,
    0.149_451_349_150_580_593_145_776_339_658,
    0.219_086_362_515_982_043_995_534_934_228,
    0.269_266_719_309_996_355_091_226_921_569,
    0.295_524_224_714_752_870_173_892_994_651,
];

#[derive(Debug, Clone, Copy)]
enum Map {
    Identity,
    Tail { origin: f64, scale: f64 },
}

impl Map {
    fn apply<F: Fn(f64) -> f64>(&self, f: &F, t: f64) -> f64 {
        match *self {
            Map::Identity => f(t),
            Map::Tail { origin, scale } => {
                let one_minus = 1.0 - t;
                let x = origin + scale * t / one_minus;
                if !x.is_finite() {
                    return 0.0;
                }
                f(x) * scale / (one_minus * one_minus)
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Interval {
    a: f64,
    b: f64,
    map: Map,
    value: f64,
    error: f64,
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Interval {}
impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(
    f: &F,
    map: Map,
    a: f64,
    b: f64,
) -> Result<Interval, QuadError> {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let eval = |t: f64| -> Result<f64, QuadError> {
        let v = map.apply(f, t);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(QuadError::NonFinite { x: t })
        }
    };
    let fc = eval(centre)?;
    let mut res_k = fc * WGK[10];
    let mut res_g = 0.0;
    let mut res_abs = res_k.abs();
    let mut fv = [(0.0, 0.0); 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = eval(centre - dx)?;
        let f2 = eval(centre + dx)?;
        fv[j] = (f1, f2);
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv[j].0 - mean).abs() + (fv[j].1 - mean).abs());
    }
    let res_k = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut err = (res_k - res_g * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok(Interval {
        a,
        b,
        map,
        value: res_k,
        error: err,
    })
}

fn run<F: Fn(f64) -> f64>(
    f: &F,
    seeds: Vec<(f64, f64, Map)>,
    opts: &QuadOptions,
) -> Result<QuadResult, QuadError> {
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0;
    for (a, b, map) in seeds {
        if b > a {
            heap.push(gauss_kronrod(f, map, a, b)?);
            evaluations += 21;
        }
    }
    let totals = |heap: &BinaryHeap<Interval>| {
        heap.iter()
            .fold((0.0, 0.0), |(v, e), iv| (v + iv.value, e + iv.error))
    };
    let mut subdivisions = heap.len();
    loop {
        let (value, error) = totals(&heap);
        let requested = opts.abs_tol.max(opts.rel_tol * value.abs());
        if error <= requested {
            return Ok(QuadResult {
                value,
                abs_error: error,
                evaluations,
            });
        }
        let worst = match heap.pop() {
            Some(iv) => iv,
            None => {
                return Ok(QuadResult {
                    value: 0.0,
                    abs_error: 0.0,
                    evaluations,
                })
            }
        };
        let mid = 0.5 * (worst.a + worst.b);
        if subdivisions >= opts.max_subdivisions || mid <= worst.a || mid >= worst.b {
            heap.push(worst);
            let (_, achieved) = totals(&heap);
            return Err(QuadError::NotConverged {
                achieved,
                requested,
            });
        }
        heap.push(gauss_kronrod(f, worst.map, worst.a, mid)?);
        heap.push(gauss_kronrod(f, worst.map, mid, worst.b)?);
        evaluations += 42;
        subdivisions += 1;
    }
}

/// `∫_a^b f(x) dx` over a finite range.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    opts: &QuadOptions,
) -> Result<QuadResult, QuadError> {
    integrate_with_breakpoints(f, &[a, b], opts)
}

/// Finite-range integral split at the given sorted points.
pub fn integrate_with_breakpoints<F: Fn(f64) -> f64>(
    f: F,
    points: &[f64],
    opts: &QuadOptions,
) -> Result<QuadResult, QuadError> {
    if points.len() < 2
        || points.iter().any(|p| !p.is_finite())
        || points.windows(2).any(|w| w[1] < w[0])
    {
        return Err(QuadError::InvalidRange);
    }
    let seeds = points
        .windows(2)
        .map(|w| (w[0], w[1], Map::Identity))
        .collect();
    run(&f, seeds, opts)
}

/// `∫_{points[0]}^∞ f(x) dx`.
///
/// Interior `points` mark kinks or discontinuities; `scale` sets the length
/// over which the tail beyond the last point decays.
pub fn integrate_to_infinity<F: Fn(f64) -> f64>(
    f: F,
    points: &[f64],
    scale: f64,
    opts: &QuadOptions,
) -> Result<QuadResult, QuadError> {
    if points.is_empty()
        || !(scale > 0.0)
        || points.iter().any(|p| !p.is_finite())
        || points.windows(2).any(|w| w[1] < w[0])
    {
        return Err(QuadError::InvalidRange);
    }
    let mut seeds: Vec<_> = points
        .windows(2)
        .map(|w| (w[0], w[1], Map::Identity))
        .collect();
    let origin = *points.last().unwrap_or(&0.0);
    seeds.push((0.0, 0.5, Map::Tail { origin, scale }));
    seeds.push((0.5, 1.0, Map::Tail { origin, scale }));
    run(&f, seeds, opts)
}
