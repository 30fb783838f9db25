//! Cooperative time budget for Groebner computations.
//!
//! A deadline is installed per thread with [`with_deadline`]; Buchberger's
//! main loop polls it between pairs and fails with
//! [`Error::BudgetExceeded`](crate::Error::BudgetExceeded) once it has passed.

use std::cell::Cell;
use std::time::Instant;

thread_local! {
    static DEADLINE: Cell<Option<Instant>> = const { Cell::new(None) };
}

/// Runs `f` with `deadline` in force on this thread. Nested scopes keep the
/// earlier of the two deadlines.
pub fn with_deadline<T>(deadline: Option<Instant>, f: impl FnOnce() -> T) -> T {
    let previous = DEADLINE.with(Cell::get);
    let effective = match (previous, deadline) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    DEADLINE.with(|d| d.set(effective));
    struct Restore(Option<Instant>);
    impl Drop for Restore {
        fn drop(&mut self) {
            DEADLINE.with(|d| d.set(self.0));
        }
    }
    let _restore = Restore(previous);
    f()
}

pub(crate) fn expired() -> bool {
    DEADLINE.with(|d| d.get().is_some_and(|t| Instant::now() >= t))
}
