//! Earth mover's distance between 1-D empirical distributions.

/// Wasserstein-1 distance between the empirical distributions of two sorted
/// samples: the integral of the absolute CDF difference. For equal-size
/// samples this equals the mean absolute gap between order statistics.
pub fn emd(a: &[f64], b: &[f64]) -> f64 {
    assert!(!a.is_empty() && !b.is_empty(), "emd needs nonempty samples");
    debug_assert!(is_sorted(a) && is_sorted(b), "emd inputs must be sorted");
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let mut ia = 0usize;
    let mut ib = 0usize;
    let mut prev: Option<f64> = None;
    let mut total = 0.0;
    while ia < a.len() || ib < b.len() {
        let x = match (a.get(ia), b.get(ib)) {
            (Some(&xa), Some(&xb)) => xa.min(xb),
            (Some(&xa), None) => xa,
            (None, Some(&xb)) => xb,
            (None, None) => unreachable!(),
        };
        if let Some(p) = prev {
            let fa = ia as f64 / na;
            let fb = ib as f64 / nb;
            total += (fa - fb).abs() * (x - p);
        }
        while ia < a.len() && a[ia] == x {
            ia += 1;
        }
        while ib < b.len() && b[ib] == x {
            ib += 1;
        }
        prev = Some(x);
    }
    total
}

fn is_sorted(xs: &[f64]) -> bool {
    xs.windows(2).all(|w| w[0] <= w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{sub_rng, Stream};
    use rand::Rng;

    #[test]
    fn unit_shift() {
        assert_eq!(emd(&[0.0, 1.0], &[1.0, 2.0]), 1.0);
    }

    #[test]
    fn identical_samples_are_zero() {
        let xs = [0.5, 1.5, 2.0, 9.0];
        assert_eq!(emd(&xs, &xs), 0.0);
    }

    #[test]
    fn unequal_sizes_use_the_cdf_integral() {
        // F_a: 1 on [0,∞); F_b: 2/3 on [0,3), 1 after. |diff| = 1/3 over [0,3).
        assert!((emd(&[0.0, 0.0], &[0.0, 0.0, 3.0]) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn metric_properties_on_random_samples() {
        let mut rng = sub_rng(51, Stream::Baseline, 0);
        for _ in 0..200 {
            let mut draw = |len: usize| -> Vec<f64> {
                let mut v: Vec<f64> = (0..len).map(|_| rng.gen_range(0.0..10.0)).collect();
                v.sort_by(|a, b| a.partial_cmp(b).unwrap());
                v
            };
            let x = draw(17);
            let y = draw(23);
            let z = draw(11);
            let dxy = emd(&x, &y);
            let dyx = emd(&y, &x);
            let dxz = emd(&x, &z);
            let dzy = emd(&z, &y);
            assert!((dxy - dyx).abs() < 1e-12, "symmetry");
            assert!(dxy >= 0.0);
            assert!(dxy <= dxz + dzy + 1e-9, "triangle inequality");
            assert_eq!(emd(&x, &x), 0.0);
        }
    }
}
