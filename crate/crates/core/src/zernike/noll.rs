//! Noll's single-index ordering.
//!
//! Indices run by increasing `n`, within `n` by increasing `|m|`. Each
//! `|m| > 0` occupies two consecutive indices: the even one carries the
//! cosine term (`m > 0`), the odd one the sine term (`m < 0`).
//!
//! | j | 1 | 2 | 3  | 4 | 5  | 6 | 7  | 8 | 9  | 10 | 11 |
//! |---|---|---|----|---|----|---|----|---|----|----|----|
//! | n | 0 | 1 | 1  | 2 | 2  | 2 | 3  | 3 | 3  | 3  | 4  |
//! | m | 0 | 1 | -1 | 0 | -2 | 2 | -1 | 1 | -3 | 3  | 0  |

use crate::error::{Error, Result};

use super::check_order;

/// Number of `(n', m)` pairs with `n' < n`.
fn block_start(n: u32) -> u64 {
    u64::from(n) * (u64::from(n) + 1) / 2
}

pub fn noll_index(n: u32, m: i32) -> Result<u64> {
    check_order(n, m)?;
    let am = m.unsigned_abs();
    let first = block_start(n) + u64::from(am.saturating_sub(1)) + 1;
    if m == 0 {
        return Ok(first);
    }
    let even = first.is_multiple_of(2);
    Ok(if (m > 0) == even { first } else { first + 1 })
}

pub fn noll_inverse(j: u64) -> Result<(u32, i32)> {
    if j < 1 {
        return Err(Error::InvalidNollIndex(j));
    }
    // largest n with block_start(n) < j
    let mut n = (((8.0 * j as f64 + 1.0).sqrt() - 1.0) / 2.0) as u32;
    while block_start(n) >= j {
        n -= 1;
    }
    while block_start(n + 1) < j {
        n += 1;
    }
    let offset = j - block_start(n) - 1;
    let am = if n.is_multiple_of(2) {
        // slots: 0 | 2 2 | 4 4 | ...
        (offset.div_ceil(2) * 2) as u32
    } else {
        // slots: 1 1 | 3 3 | ...
        (offset / 2 * 2 + 1) as u32
    };
    let m = if am == 0 {
        0
    } else if j.is_multiple_of(2) {
        am as i32
    } else {
        -(am as i32)
    };
    Ok((n, m))
}
