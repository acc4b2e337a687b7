/// Largest `x` in `[lo, hi]` (to within `xtol`) with `pred(x)` true, for a
/// predicate that is true on a prefix of the interval and false after it.
///
/// Returns `None` if `pred(lo)` is false and `Some(hi)` if `pred(hi)` holds.
pub(crate) fn last_true<P: FnMut(f64) -> bool>(
    mut pred: P,
    mut lo: f64,
    mut hi: f64,
    xtol: f64,
) -> Option<f64> {
    if !pred(lo) {
        return None;
    }
    if pred(hi) {
        return Some(hi);
    }
    while hi - lo > xtol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if pred(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}
