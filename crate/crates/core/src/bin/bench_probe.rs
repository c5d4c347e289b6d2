use rug::{Integer, Rational};
use std::time::Instant;

fn sum_range(lo: u64, hi: u64) -> Rational {
    if hi - lo <= 64 {
        let mut acc = Rational::new();
        for m in lo..hi {
            let v: u32 = if m % 2 == 1 { 4 } else { 1 };
            // v * (1/m - 1/(m+1)) = v / (m(m+1))
            let den = Integer::from(m) * Integer::from(m + 1);
            acc += Rational::from((Integer::from(v), den));
        }
        acc
    } else {
        let mid = lo + (hi - lo) / 2;
        sum_range(lo, mid) + sum_range(mid, hi)
    }
}

fn main() {
    let t = Instant::now();
    let s = sum_range(1, 1_000_000);
    let d = s.to_f64();
    println!("sum over 1e6 cells = {:.15} (expect ~{:.15})", d, 1.0 + 3.0 * (2.0f64).ln() - 2.5e-6);
    println!("numer digits: {}", s.numer().to_string().len());
    println!("elapsed: {:?}", t.elapsed());
}
