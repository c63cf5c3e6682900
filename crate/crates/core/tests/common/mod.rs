#![allow(dead_code)]

use harmonic_zeros::{AnalyticPoly, Complex64, HarmonicPoly, RootRecord};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Plain bisection, 200 halvings.
pub fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let fa_neg = f(a) < 0.0;
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (f(m) < 0.0) == fa_neg {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

fn random_coeff(rng: &mut ChaCha8Rng, min_modulus: f64, max_modulus: f64) -> Complex64 {
    let r = rng.random_range(min_modulus..=max_modulus);
    let theta = rng.random_range(0.0..std::f64::consts::TAU);
    Complex64::from_polar(r, theta)
}

/// Random harmonic polynomial with `deg h = n`, `deg g = m < n` and
/// coefficient moduli at most 3 (leading coefficient of h at least 1).
pub fn random_harmonic(rng: &mut ChaCha8Rng, max_n: usize) -> HarmonicPoly {
    let n = rng.random_range(1..=max_n);
    let m = rng.random_range(0..n);
    let mut h: Vec<Complex64> = (0..n).map(|_| random_coeff(rng, 0.0, 3.0)).collect();
    h.push(random_coeff(rng, 1.0, 3.0));
    let mut g: Vec<Complex64> = (0..m).map(|_| random_coeff(rng, 0.0, 3.0)).collect();
    g.push(random_coeff(rng, 0.1, 3.0));
    HarmonicPoly::new(AnalyticPoly::new(h).unwrap(), AnalyticPoly::new(g).unwrap()).unwrap()
}

/// Brute-force modulus grid over `[-half, half]²`: every 8-connected group of
/// cells with `|f| < threshold` must have a cell within `reach` cells of a
/// reported zero. Returns the centers of groups that fail.
pub fn grid_oracle_misses(
    p: &HarmonicPoly,
    zeros: &[RootRecord],
    half: f64,
    cells: usize,
    threshold: f64,
    reach: f64,
) -> Vec<Complex64> {
    let h = 2.0 * half / cells as f64;
    let center = |i: usize, j: usize| {
        Complex64::new(-half + (i as f64 + 0.5) * h, -half + (j as f64 + 0.5) * h)
    };
    let low: Vec<bool> = (0..cells * cells)
        .map(|idx| p.eval(center(idx % cells, idx / cells)).norm() < threshold)
        .collect();
    let zero_cells: Vec<(f64, f64)> = zeros
        .iter()
        .map(|r| ((r.z.re + half) / h - 0.5, (r.z.im + half) / h - 0.5))
        .collect();
    let near_zero = |i: usize, j: usize| {
        zero_cells
            .iter()
            .any(|&(x, y)| (i as f64 - x).abs().max((j as f64 - y).abs()) <= reach)
    };

    let mut seen = vec![false; cells * cells];
    let mut misses = Vec::new();
    for start in 0..cells * cells {
        if !low[start] || seen[start] {
            continue;
        }
        let mut stack = vec![start];
        seen[start] = true;
        let mut found = false;
        let mut members = Vec::new();
        while let Some(idx) = stack.pop() {
            let (i, j) = (idx % cells, idx / cells);
            members.push(idx);
            found |= near_zero(i, j);
            for di in -1i64..=1 {
                for dj in -1i64..=1 {
                    let (ni, nj) = (i as i64 + di, j as i64 + dj);
                    if ni < 0 || nj < 0 || ni >= cells as i64 || nj >= cells as i64 {
                        continue;
                    }
                    let nidx = nj as usize * cells + ni as usize;
                    if low[nidx] && !seen[nidx] {
                        seen[nidx] = true;
                        stack.push(nidx);
                    }
                }
            }
        }
        if !found {
            let idx = members[members.len() / 2];
            misses.push(center(idx % cells, idx / cells));
        }
    }
    misses
}
