//! Small integer helpers shared by the word constructions.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Returns `(g, s, t)` with `a*s + b*t = g = gcd(a, b)`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let quot = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
        (old_t, t) = (t, old_t - quot * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of `a` modulo `m`, in `[0, m)`. `None` when `gcd(a, m) != 1`.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    debug_assert!(m >= 1);
    if m == 1 {
        return Some(0);
    }
    let (g, s, _) = ext_gcd(a.rem_euclid(m), m);
    (g == 1).then(|| s.rem_euclid(m))
}

/// Solves `a*x + b*y = c` for `a, b >= 1`, picking the solution with the
/// smallest positive `y` (so `1 <= y <= a / gcd(a, b)`). `None` when
/// `gcd(a, b)` does not divide `c`.
pub fn solve_linear_window(a: i64, b: i64, c: i64) -> Option<(i64, i64)> {
    debug_assert!(a >= 1 && b >= 1);
    let g = gcd(a as u64, b as u64) as i64;
    if c % g != 0 {
        return None;
    }
    let (a, b, c) = (a / g, b / g, c / g);
    let b_inv = mod_inverse(b, a).expect("reduced coefficients are coprime");
    let mut y = (c.rem_euclid(a) * b_inv) % a;
    if y == 0 {
        y = a;
    }
    let x = (c - b * y) / a;
    debug_assert_eq!(a * x + b * y, c);
    Some((x, y))
}

/// True iff `a*x + b*y = c` has a solution with `x, y >= 1`.
pub fn has_positive_solution(a: i64, b: i64, c: i64) -> bool {
    solve_linear_window(a, b, c).is_some_and(|(x, _)| x >= 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_gcd_identity() {
        for a in -30i64..=30 {
            for b in -30i64..=30 {
                let (g, s, t) = ext_gcd(a, b);
                assert_eq!(a * s + b * t, g, "a = {a}, b = {b}");
                assert_eq!(g as u64, gcd(a.unsigned_abs(), b.unsigned_abs()));
            }
        }
    }

    #[test]
    fn inverse_matches_scan() {
        for m in 1i64..60 {
            for a in 0..m {
                let scan = (0..m).find(|&c| (a * c) % m == 1 % m);
                let expected = if gcd(a as u64, m as u64) == 1 {
                    scan
                } else {
                    None
                };
                assert_eq!(mod_inverse(a, m), expected, "a = {a}, m = {m}");
            }
        }
    }

    #[test]
    fn linear_window_matches_search() {
        for a in 1i64..=15 {
            for b in 1i64..=15 {
                for c in -40i64..=80 {
                    let g = gcd(a as u64, b as u64) as i64;
                    let window = a / g;
                    let found = (1..=window).find_map(|y| {
                        let rest = c - b * y;
                        (rest % a == 0).then_some((rest / a, y))
                    });
                    assert_eq!(solve_linear_window(a, b, c), found, "{a}x + {b}y = {c}");
                    let positive = (1..=80).any(|x| (1..=80).any(|y| a * x + b * y == c));
                    assert_eq!(
                        has_positive_solution(a, b, c),
                        positive,
                        "{a}x + {b}y = {c}"
                    );
                }
            }
        }
    }

    #[test]
    fn lcm_basics() {
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(lcm(13, 13), 13);
        assert_eq!(lcm(0, 5), 0);
    }
}
