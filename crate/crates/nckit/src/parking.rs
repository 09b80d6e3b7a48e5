//! Parking functions: `n` drivers with spot preferences try to park on a
//! one-way street with spots `1, .., n`, each taking the first free spot at
//! or after their preference.  A preference sequence parks everyone exactly
//! when its sorted version satisfies `b_i <= i`, and there are
//! `(n+1)^(n-1)` such sequences.

use crate::bounds::Bounds;
use crate::error::{Error, Result};

fn check_positive(prefs: &[usize]) -> Result<()> {
    if prefs.is_empty() {
        return Err(Error::InvalidPreferences("empty sequence".into()));
    }
    if prefs.contains(&0) {
        return Err(Error::InvalidPreferences("preferences are 1-based".into()));
    }
    Ok(())
}

/// Runs the parking process and reports where each driver ends up, or `None`
/// as soon as a driver runs off the end of the street.
pub fn park_assignment(prefs: &[usize]) -> Result<Option<Vec<usize>>> {
    check_positive(prefs)?;
    let n = prefs.len();
    let mut taken = vec![false; n];
    let mut spots = Vec::with_capacity(n);
    for &pref in prefs {
        let mut spot = pref;
        while spot <= n && taken[spot - 1] {
            spot += 1;
        }
        if spot > n {
            return Ok(None);
        }
        taken[spot - 1] = true;
        spots.push(spot);
    }
    Ok(Some(spots))
}

/// Runs the parking process: each driver in turn takes the first free spot
/// at or after their preference, and fails if there is none.
pub fn parks_by_simulation(prefs: &[usize]) -> Result<bool> {
    Ok(park_assignment(prefs)?.is_some())
}

/// The order-statistics characterization: after sorting, the `i`-th smallest
/// preference is at most `i`.
pub fn parks_by_sorted_rule(prefs: &[usize]) -> Result<bool> {
    check_positive(prefs)?;
    let mut sorted = prefs.to_vec();
    sorted.sort_unstable();
    Ok(sorted.iter().enumerate().all(|(i, &b)| b <= i + 1))
}

/// All parking functions of length `n`, in lexicographic order.
pub fn enumerate(n: usize, bounds: &Bounds) -> Result<Vec<Vec<usize>>> {
    bounds.check("parking function enumeration", n, bounds.parking)?;
    if n == 0 {
        return Err(Error::InvalidPreferences("length must be positive".into()));
    }
    let mut out = Vec::new();
    let mut prefs = vec![1usize; n];
    loop {
        if parks_by_sorted_rule(&prefs)? {
            out.push(prefs.clone());
        }
        // Odometer over [1, n]^n.
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if prefs[i] < n {
                prefs[i] += 1;
                for slot in prefs[i + 1..].iter_mut() {
                    *slot = 1;
                }
                break;
            }
        }
    }
}

/// `(n+1)^(n-1)`.
pub fn count(n: usize) -> u128 {
    let mut c: u128 = 1;
    for _ in 0..n.saturating_sub(1) {
        c *= n as u128 + 1;
    }
    c
}

/// Parses a comma-separated preference list such as `2,1,1`.
pub fn parse_preferences(s: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for piece in s.split(',') {
        let trimmed = piece.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse("empty entry in preference list".into()));
        }
        let value: usize = trimmed
            .parse()
            .map_err(|_| Error::Parse(format!("bad preference {trimmed:?}")))?;
        out.push(value);
    }
    check_positive(&out).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert!(parks_by_simulation(&[1, 1]).unwrap());
        assert!(parks_by_simulation(&[1, 2]).unwrap());
        assert!(parks_by_simulation(&[2, 1]).unwrap());
        assert!(!parks_by_simulation(&[2, 2]).unwrap());
        assert!(parks_by_simulation(&[2, 1, 1]).unwrap());
        assert_eq!(park_assignment(&[2, 1, 1]).unwrap(), Some(vec![2, 1, 3]));
        assert!(!parks_by_simulation(&[3, 3, 1]).unwrap());
        // The preference may exceed the street length; that driver never parks.
        assert!(!parks_by_simulation(&[5, 1]).unwrap());
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        assert!(matches!(
            parks_by_simulation(&[]),
            Err(Error::InvalidPreferences(_))
        ));
        assert!(matches!(
            parks_by_sorted_rule(&[1, 0]),
            Err(Error::InvalidPreferences(_))
        ));
    }

    #[test]
    fn both_characterizations_agree_exhaustively() {
        for n in 1..=5usize {
            // Range past n so out-of-range preferences are covered too.
            let base = n + 1;
            for code in 0..base.pow(n as u32) {
                let mut c = code;
                let prefs: Vec<usize> = (0..n)
                    .map(|_| {
                        let digit = c % base;
                        c /= base;
                        digit + 1
                    })
                    .collect();
                assert_eq!(
                    parks_by_simulation(&prefs).unwrap(),
                    parks_by_sorted_rule(&prefs).unwrap(),
                    "{prefs:?}"
                );
            }
        }
    }

    #[test]
    fn counts_match_the_closed_form() {
        let bounds = Bounds::default();
        for (n, want) in [(1, 1usize), (2, 3), (3, 16), (4, 125), (5, 1296)] {
            let all = enumerate(n, &bounds).unwrap();
            assert_eq!(all.len(), want);
            assert_eq!(count(n) as usize, want);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
        assert!(matches!(
            enumerate(99, &bounds),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn rearranging_preferences_preserves_parking() {
        let bounds = Bounds::default();
        for prefs in enumerate(4, &bounds).unwrap() {
            let mut rev = prefs.clone();
            rev.reverse();
            assert!(parks_by_simulation(&rev).unwrap());
        }
    }

    #[test]
    fn preference_parsing() {
        assert_eq!(parse_preferences("2,1,1").unwrap(), vec![2, 1, 1]);
        assert_eq!(parse_preferences(" 3 , 1 ").unwrap(), vec![3, 1]);
        for bad in ["", "1,,2", "a", "1,0", "-1", "1,2,"] {
            assert!(parse_preferences(bad).is_err(), "{bad:?}");
        }
    }
}
