//! Basis-tuple scanning for exhaustive checkers.
//!
//! Every identity in the crate is verified on all basis tuples of some
//! arity. The scan is embarrassingly parallel; with the `parallel` feature
//! (on by default) tuples are checked on a rayon pool, otherwise
//! sequentially. Both paths return the leftmost counterexample, so results
//! are deterministic either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Decode a flat index into a basis tuple (most significant slot first).
pub fn decode_tuple(mut flat: usize, arity: usize, dim: usize) -> Vec<usize> {
    let mut t = vec![0usize; arity];
    for slot in (0..arity).rev() {
        t[slot] = flat % dim;
        flat /= dim;
    }
    t
}

/// Number of basis tuples of the given arity.
pub fn tuple_count(arity: usize, dim: usize) -> usize {
    dim.pow(arity as u32)
}

/// Sequential scan: first index where `f` reports a failure.
pub fn scan_fail_seq<R, F>(count: usize, f: F) -> Option<R>
where
    F: Fn(usize) -> Option<R>,
{
    (0..count).find_map(f)
}

/// Parallel scan with deterministic (leftmost) failure selection.
#[cfg(feature = "parallel")]
pub fn scan_fail_par<R, F>(count: usize, f: F) -> Option<R>
where
    F: Fn(usize) -> Option<R> + Send + Sync,
    R: Send,
{
    (0..count).into_par_iter().find_map_first(f)
}

/// Default scan used by all checkers.
#[cfg(feature = "parallel")]
pub fn scan_fail<R, F>(count: usize, f: F) -> Option<R>
where
    F: Fn(usize) -> Option<R> + Send + Sync,
    R: Send,
{
    // Tiny scans are cheaper sequentially.
    if count < 64 {
        scan_fail_seq(count, f)
    } else {
        scan_fail_par(count, f)
    }
}

#[cfg(not(feature = "parallel"))]
pub fn scan_fail<R, F>(count: usize, f: F) -> Option<R>
where
    F: Fn(usize) -> Option<R> + Send + Sync,
    R: Send,
{
    scan_fail_seq(count, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_is_mixed_radix() {
        assert_eq!(decode_tuple(0, 3, 2), vec![0, 0, 0]);
        assert_eq!(decode_tuple(5, 3, 2), vec![1, 0, 1]);
        assert_eq!(decode_tuple(7, 3, 2), vec![1, 1, 1]);
    }

    #[test]
    fn scan_finds_leftmost() {
        let hit = |i: usize| if i % 3 == 2 { Some(i) } else { None };
        assert_eq!(scan_fail(100, hit), Some(2));
        assert_eq!(scan_fail_seq(100, hit), Some(2));
        #[cfg(feature = "parallel")]
        assert_eq!(scan_fail_par(100, hit), Some(2));
        assert_eq!(scan_fail(10, |_| None::<usize>), None);
    }
}
