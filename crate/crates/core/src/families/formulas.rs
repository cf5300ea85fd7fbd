//! Closed forms for the distance-unbalancedness of the named families.
//!
//! Each function mirrors a generator in [`crate::families`] and is checked
//! against brute force in the tests and in [`crate::verify`].

use num_rational::Ratio;

use super::FamilyDescriptor;
use crate::error::{Error, Result};

fn to_count(value: i128) -> u64 {
    u64::try_from(value).expect("closed form produced a negative or oversized value")
}

fn exact_div(num: i128, den: i128) -> i128 {
    debug_assert_eq!(num % den, 0, "{num} not divisible by {den}");
    num / den
}

/// `sum_{i<j} n_i n_j (n_i - n_j)` over the parts sorted descending.
pub fn multipartite(parts: &[usize]) -> Result<u64> {
    if parts.len() < 2 || parts.contains(&0) {
        return Err(Error::bad_params(
            "multipartite needs at least two parts, each of size >= 1",
        ));
    }
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut total = 0u64;
    for (i, &a) in sorted.iter().enumerate() {
        for &b in &sorted[i + 1..] {
            total += (a * b * (a - b)) as u64;
        }
    }
    Ok(total)
}

/// `uB(S_n) = n(n - 1)`.
pub fn star(n: usize) -> Result<u64> {
    multipartite(&[n, 1])
}

/// `uB(W_n) = n(n - 3)`.
pub fn wheel(n: usize) -> Result<u64> {
    if n < 3 {
        return Err(Error::bad_params("wheel needs n >= 3"));
    }
    Ok((n * (n - 3)) as u64)
}

/// `uB(P_n)` and its average over vertex pairs (`None` for `n = 1`).
pub fn path(n: usize) -> Result<(u64, Option<Ratio<u64>>)> {
    if n < 1 {
        return Err(Error::bad_params("path needs n >= 1"));
    }
    let k = n as i128;
    let (total, average) = if n.is_multiple_of(2) {
        (
            exact_div((k - 2) * k * (2 * k + 1), 12),
            ((k - 2) * (2 * k + 1), 6 * (k - 1)),
        )
    } else {
        (
            exact_div((k - 1) * (k + 1) * (2 * k - 3), 12),
            ((k + 1) * (2 * k - 3), 6 * k),
        )
    };
    let average = (n >= 2).then(|| Ratio::new(to_count(average.0), to_count(average.1)));
    Ok((to_count(total), average))
}

/// `sum_{i=1}^{n-1} |n - 2i|`.
pub fn sum_abs(n: usize) -> Result<u64> {
    if n < 1 {
        return Err(Error::bad_params("sum_abs needs n >= 1"));
    }
    let k = n as u64;
    Ok(if n.is_multiple_of(2) {
        k * (k - 2) / 2
    } else {
        (k - 1) * (k - 1) / 2
    })
}

/// `uB(P_n □ C_m)` for `m` in `{3, 4, 5}`.
pub fn tube(n: usize, m: usize) -> Result<u64> {
    if n < 1 {
        return Err(Error::bad_params("tube needs n >= 1"));
    }
    let k = n as i128;
    let even = n.is_multiple_of(2);
    let value = match (m, even) {
        (3, true) => exact_div(3 * k * (k - 2) * (6 * k - 1), 4),
        (3, false) => exact_div(3 * (k - 1) * (2 * k + 1) * (3 * k - 5), 4),
        (4, true) => exact_div(2 * (k - 2) * (16 * k * k - 13 * k + 6), 3),
        (4, false) => exact_div(2 * (k - 1) * (16 * k * k - 29 * k + 3), 3),
        (5, true) => exact_div(5 * (k - 2) * (50 * k * k - 47 * k + 24), 12),
        (5, false) => exact_div(5 * (k - 1) * (50 * k * k - 97 * k + 21), 12),
        _ => return Err(Error::UnsupportedM(m)),
    };
    Ok(to_count(value))
}

fn check_star_pair(n: usize, m: usize) -> Result<()> {
    if n < m || m < 1 {
        return Err(Error::bad_params(format!(
            "merged stars need n >= m >= 1 (got n={n}, m={m})"
        )));
    }
    Ok(())
}

/// `Mo^1, Mo^2, Mo^3` of `SS(n, m)`.
pub fn merged_star_by_ell(n: usize, m: usize) -> Result<[u64; 3]> {
    check_star_pair(n, m)?;
    let (n, m) = (n as u64, m as u64);
    Ok([(n + m).pow(2) + (n - m), 2 * n * m, n * m * (n - m)])
}

/// `uB(SS(n, m)) = (n+m)^2 + (n-m)(nm+1) + 2nm`.
pub fn merged_star(n: usize, m: usize) -> Result<u64> {
    check_star_pair(n, m)?;
    let (n, m) = (n as u64, m as u64);
    Ok((n + m).pow(2) + (n - m) * (n * m + 1) + 2 * n * m)
}

/// `Mo^1..Mo^4` of `SSx(n, m)`.
pub fn subdivided_merged_star_by_ell(n: usize, m: usize) -> Result<[u64; 4]> {
    check_star_pair(n, m)?;
    let (n, m) = (n as u64, m as u64);
    let gap = n.abs_diff(m + 1);
    Ok([
        (n + m) * (n + m + 1) + gap + n - m + 1,
        n * (m + 1) + m * (n + 1) + n - m,
        n * gap + m * (n + 1 - m),
        n * m * (n - m),
    ])
}

/// `uB(SSx(n, m)) = (n+m)(n+m+1) + (n+1)|n-m-1| + (m+1)(3n-m+1) + nm(n-m)`.
///
/// Also defined at `(0, 0)`, the path on three vertices.
pub fn subdivided_merged_star(n: usize, m: usize) -> Result<u64> {
    if (n, m) != (0, 0) {
        check_star_pair(n, m)?;
    }
    let (n, m) = (n as u64, m as u64);
    Ok((n + m) * (n + m + 1)
        + (n + 1) * n.abs_diff(m + 1)
        + (m + 1) * (3 * n + 1 - m)
        + n * m * (n - m))
}

/// `4n` for even `n`, `2n(n - 2)` for odd `n`.
pub fn kite(n: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::bad_params("kite graph needs n >= 2"));
    }
    let k = n as u64;
    Ok(if n.is_multiple_of(2) {
        4 * k
    } else {
        2 * k * (k - 2)
    })
}

/// `uB(C̃_2n) = 8` for every `n >= 2`.
pub fn tilde_cycle(n: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::bad_params("tilde cycle needs n >= 2"));
    }
    Ok(8)
}

/// The member of smallest `uB` among merged and subdivided merged stars of
/// order `order`.
///
/// Even `order = 2(m+1)` gives `SS(m, m)` with `6m^2`; odd `order = 2m+3`
/// gives `SSx(m, m)` with `6m^2 + 6m + 2`. Order 3 has no member with
/// `m >= 1`, so the degenerate `SSx(0, 0)` (a path) is returned.
pub fn minimal_merged_family(order: usize) -> Result<(FamilyDescriptor, u64)> {
    if order < 3 {
        return Err(Error::bad_params("merged star families need order >= 3"));
    }
    if order.is_multiple_of(2) {
        let m = (order - 2) / 2;
        let m64 = m as u64;
        Ok((FamilyDescriptor::MergedStar(m, m), 6 * m64 * m64))
    } else {
        let m = (order - 3) / 2;
        let m64 = m as u64;
        Ok((
            FamilyDescriptor::SubdividedMergedStar(m, m),
            6 * m64 * m64 + 6 * m64 + 2,
        ))
    }
}

/// Closed-form `uB` for a descriptor, when one is known.
pub fn closed_form(family: &FamilyDescriptor) -> Option<u64> {
    use FamilyDescriptor as F;
    match family {
        F::Multipartite(parts) => multipartite(parts).ok(),
        F::Star(n) => star(*n).ok(),
        F::Wheel(n) => wheel(*n).ok(),
        F::Path(n) => path(*n).ok().map(|(v, _)| v),
        F::Cycle(n) if *n >= 3 => Some(0),
        F::Complete(n) if *n >= 1 => Some(0),
        F::MergedStar(n, m) => merged_star(*n, *m).ok(),
        F::SubdividedMergedStar(n, m) => subdivided_merged_star(*n, *m).ok(),
        F::Tube(n, m) => tube(*n, *m).ok(),
        F::Kite(n) => kite(*n).ok(),
        F::TildeCycle(n) => tilde_cycle(*n).ok(),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multipartite_values() {
        for n in 1..10 {
            assert_eq!(multipartite(&[n, 1]).unwrap(), (n * (n - 1)) as u64);
        }
        assert_eq!(multipartite(&[2, 2, 2]).unwrap(), 0);
        assert_eq!(multipartite(&[3, 2, 1]).unwrap(), 14);
        assert_eq!(multipartite(&[1, 3, 2]).unwrap(), 14);
        assert!(multipartite(&[4]).is_err());
    }

    #[test]
    fn wheel_values() {
        assert_eq!(wheel(3).unwrap(), 0);
        assert_eq!(wheel(5).unwrap(), 10);
        assert!(wheel(2).is_err());
    }

    #[test]
    fn path_values() {
        assert_eq!(path(1).unwrap(), (0, None));
        assert_eq!(path(2).unwrap().0, 0);
        assert_eq!(path(4).unwrap().0, 6);
        assert_eq!(path(5).unwrap(), (14, Some(Ratio::new(7, 5))));
    }

    #[test]
    fn sum_abs_matches_direct_sum() {
        for n in 1..60usize {
            let direct: u64 = (1..n)
                .map(|i| (n as i64 - 2 * i as i64).unsigned_abs())
                .sum();
            assert_eq!(sum_abs(n).unwrap(), direct, "n = {n}");
        }
        assert_eq!(sum_abs(4).unwrap(), 4);
        assert_eq!(sum_abs(5).unwrap(), 8);
        assert_eq!(sum_abs(2).unwrap(), 0);
    }

    #[test]
    fn tube_values() {
        assert_eq!(tube(1, 3).unwrap(), 0);
        assert_eq!(tube(2, 3).unwrap(), 0);
        assert_eq!(tube(3, 3).unwrap(), 42);
        for m in 3..=5 {
            assert_eq!(tube(1, m).unwrap(), 0);
            assert_eq!(tube(2, m).unwrap(), 0);
        }
        assert!(matches!(tube(4, 6), Err(Error::UnsupportedM(6))));
    }

    #[test]
    fn merged_star_values() {
        for m in 1..20 {
            assert_eq!(merged_star(m, m).unwrap(), 6 * (m * m) as u64);
            let mm = m as u64;
            assert_eq!(
                subdivided_merged_star(m, m).unwrap(),
                6 * mm * mm + 6 * mm + 2
            );
        }
        assert_eq!(merged_star(2, 1).unwrap(), 16);
        assert_eq!(merged_star(1, 1).unwrap(), 6);
        assert_eq!(merged_star_by_ell(2, 1).unwrap(), [10, 4, 2]);
        assert_eq!(subdivided_merged_star(1, 1).unwrap(), 14);
        assert_eq!(subdivided_merged_star(0, 0).unwrap(), 2);
    }

    #[test]
    fn per_ell_sums_match_totals() {
        for n in 1..15 {
            for m in 1..=n {
                let ss: u64 = merged_star_by_ell(n, m).unwrap().iter().sum();
                assert_eq!(ss, merged_star(n, m).unwrap());
                let ssx: u64 = subdivided_merged_star_by_ell(n, m).unwrap().iter().sum();
                assert_eq!(ssx, subdivided_merged_star(n, m).unwrap());
            }
        }
    }

    #[test]
    fn minimal_members() {
        assert_eq!(
            minimal_merged_family(8).unwrap(),
            (FamilyDescriptor::MergedStar(3, 3), 54)
        );
        assert_eq!(
            minimal_merged_family(9).unwrap(),
            (FamilyDescriptor::SubdividedMergedStar(3, 3), 74)
        );
        assert_eq!(
            minimal_merged_family(16).unwrap(),
            (FamilyDescriptor::MergedStar(7, 7), 294)
        );
        assert!(minimal_merged_family(2).is_err());
    }

    #[test]
    fn kite_and_tilde() {
        assert_eq!(kite(6).unwrap(), 24);
        assert_eq!(kite(5).unwrap(), 30);
        assert_eq!(kite(3).unwrap(), 6);
        assert_eq!(kite(4).unwrap(), 16);
        for n in 2..10 {
            assert_eq!(tilde_cycle(n).unwrap(), 8);
        }
    }
}
