//! Cooperative time limits for Gröbner basis computations.
//!
//! A limit is installed for the current thread with [`with_time_limit`];
//! long-running loops call [`check`] and bail out with
//! [`PolyError::TimeLimit`] once the deadline has passed.

use std::cell::Cell;
use std::time::{Duration, Instant};

use super::PolyError;

thread_local! {
    static DEADLINE: Cell<Option<Instant>> = const { Cell::new(None) };
}

/// Runs `f` with a deadline `limit` from now. Nested limits keep the earlier deadline.
pub fn with_time_limit<T>(limit: Option<Duration>, f: impl FnOnce() -> T) -> T {
    let previous = DEADLINE.with(Cell::get);
    let deadline = limit.map(|d| Instant::now() + d);
    let effective = match (previous, deadline) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    DEADLINE.with(|c| c.set(effective));
    let guard = Restore(previous);
    let out = f();
    drop(guard);
    out
}

struct Restore(Option<Instant>);

impl Drop for Restore {
    fn drop(&mut self) {
        DEADLINE.with(|c| c.set(self.0));
    }
}

pub fn check() -> Result<(), PolyError> {
    match DEADLINE.with(Cell::get) {
        Some(d) if Instant::now() >= d => Err(PolyError::TimeLimit),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expired_limit_reports() {
        let r = with_time_limit(Some(Duration::ZERO), check);
        assert_eq!(r, Err(PolyError::TimeLimit));
        assert_eq!(check(), Ok(()));
    }

    #[test]
    fn nested_limits_keep_earliest() {
        with_time_limit(Some(Duration::ZERO), || {
            let inner = with_time_limit(Some(Duration::from_secs(3600)), check);
            assert_eq!(inner, Err(PolyError::TimeLimit));
        });
    }
}
