use std::time::{Duration, Instant};

use stanley_core::Budget;

/// A [`Budget`] that runs out at a wall-clock deadline.
#[derive(Clone, Copy, Debug)]
pub struct Deadline {
    deadline: Option<Instant>,
    calls: u32,
}

impl Deadline {
    pub fn after(timeout: Option<Duration>) -> Self {
        Deadline { deadline: timeout.map(|t| Instant::now() + t), calls: 0 }
    }

    pub fn unlimited() -> Self {
        Deadline { deadline: None, calls: 0 }
    }
}

impl Budget for Deadline {
    fn exhausted(&mut self) -> bool {
        let Some(deadline) = self.deadline else { return false };
        self.calls = self.calls.wrapping_add(1);
        // clock is read on the first node and every 256 after
        self.calls % 256 == 1 && Instant::now() >= deadline
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expired_deadline_stops_at_once() {
        let mut b = Deadline::after(Some(Duration::ZERO));
        assert!(b.exhausted());
        let mut u = Deadline::unlimited();
        assert!((0..1000).all(|_| !u.exhausted()));
        let mut far = Deadline::after(Some(Duration::from_secs(3600)));
        assert!((0..1000).all(|_| !far.exhausted()));
    }
}
