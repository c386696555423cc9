//! Computes ordinates of the first `n` nontrivial zeros of ζ on the critical
//! line and writes them one per line.
//!
//! Z(t) is evaluated from ζ(1/2 + it) by Euler–Maclaurin summation, zeros are
//! bracketed inside Gram blocks (Rosser's rule holds far beyond the heights
//! used here) and polished by Illinois regula falsi.
//!
//! Usage: cargo run --release --example zeta_zeros -- 10000 data/zeros.txt

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;

/// B_{2k} / (2k)! for k = 1..=12.
const BERN: [f64; 12] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    77683.0 / 14101100039391805440000.0,
    -236364091.0 / 1697624680600588533760000000.0,
];

fn theta(t: f64) -> f64 {
    let (t3, t5) = (t * t * t, t * t * t * t * t);
    t / 2.0 * (t / (2.0 * PI)).ln() - t / 2.0 - PI / 8.0 + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t3) + 31.0 / (80640.0 * t5)
}

fn zeta_half(t: f64) -> Complex64 {
    let s = Complex64::new(0.5, t);
    // Tail terms shrink like (t / 2πN)^2, so N ≈ 3t/2π makes twelve of them ample.
    let n = (3.0 * t / (2.0 * PI)).ceil() as usize + 10;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..n {
        let l = (k as f64).ln();
        sum += Complex64::from_polar((-0.5 * l).exp(), -t * l);
    }
    let nf = n as f64;
    let n_s = Complex64::from_polar((-0.5 * nf.ln()).exp(), -t * nf.ln());
    sum += n_s * nf / (s - 1.0) + n_s * 0.5;
    // Tail terms B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}.
    let mut rising = s;
    let mut power = n_s / nf;
    for (k, b) in BERN.iter().enumerate() {
        let term = rising * power * *b;
        sum += term;
        if term.norm() < 1e-17 {
            break;
        }
        let j = 2.0 * k as f64;
        rising = rising * (s + j + 1.0) * (s + j + 2.0);
        power /= nf * nf;
    }
    sum
}

fn hardy_z(t: f64) -> f64 {
    (Complex64::from_polar(1.0, theta(t)) * zeta_half(t)).re
}

/// The Gram point g_k, where θ(g_k) = kπ.
fn gram(k: i64, guess: f64) -> f64 {
    let mut t = guess;
    for _ in 0..60 {
        let step = (theta(t) - k as f64 * PI) / (0.5 * (t / (2.0 * PI)).ln());
        t -= step;
        if step.abs() < 1e-13 * t {
            break;
        }
    }
    t
}

fn refine(mut a: f64, mut b: f64, mut fa: f64, mut fb: f64) -> f64 {
    let mut side = 0;
    for _ in 0..200 {
        let c = (a * fb - b * fa) / (fb - fa);
        if (b - a).abs() < 1e-14 * b {
            return c;
        }
        let fc = hardy_z(c);
        if fc == 0.0 {
            return c;
        }
        if fc.signum() == fb.signum() {
            b = c;
            fb = fc;
            if side == -1 {
                fa /= 2.0;
            }
            side = -1;
        } else {
            a = c;
            fa = fc;
            if side == 1 {
                fb /= 2.0;
            }
            side = 1;
        }
    }
    (a + b) / 2.0
}

/// Zeros in (lo, hi), subdividing until `want` sign changes appear.
fn block_zeros(lo: f64, hi: f64, want: usize) -> Vec<f64> {
    let mut parts = want.max(1) * 4;
    loop {
        let xs: Vec<f64> = (0..=parts).map(|i| lo + (hi - lo) * i as f64 / parts as f64).collect();
        let zs: Vec<f64> = xs.iter().map(|&x| hardy_z(x)).collect();
        let brackets: Vec<usize> = (0..parts).filter(|&i| zs[i].signum() != zs[i + 1].signum()).collect();
        if brackets.len() >= want || parts > 1 << 16 {
            assert_eq!(brackets.len(), want, "block ({lo}, {hi}) has the wrong zero count");
            return brackets.iter().map(|&i| refine(xs[i], xs[i + 1], zs[i], zs[i + 1])).collect();
        }
        parts *= 4;
    }
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let count: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(10000);
    let path = args.get(2).cloned().unwrap_or_else(|| "zeros.txt".into());
    let good = |k: i64, g: f64| (if k % 2 == 0 { 1.0 } else { -1.0 }) * hardy_z(g) > 0.0;

    let mut zeros = Vec::with_capacity(count);
    let mut k = -1i64;
    let mut g = gram(k, 9.7);
    while zeros.len() < count {
        // Extend to the next good Gram point; the block then holds one zero per interval.
        let (start, mut j, mut h) = (g, k, g);
        loop {
            j += 1;
            h = gram(j, h + 2.0 * PI / (h / (2.0 * PI)).ln());
            if good(j, h) {
                break;
            }
        }
        zeros.extend(block_zeros(start, h, (j - k) as usize));
        k = j;
        g = h;
    }
    zeros.truncate(count);

    let mut out = std::io::BufWriter::new(std::fs::File::create(&path).expect("create output"));
    for z in &zeros {
        writeln!(out, "{z:.12}").expect("write");
    }
    eprintln!("wrote {} zeros to {path}, last {:.12}", zeros.len(), zeros[zeros.len() - 1]);
}
