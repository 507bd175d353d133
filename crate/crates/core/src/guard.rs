use crate::error::{Error, Result};

/// Default ceiling on the number of words an exhaustive routine may visit.
pub const DEFAULT_LIMIT: u128 = 1 << 20;

/// Size guard for routines that enumerate all of `Z_q^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    limit: Option<u128>,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            limit: Some(DEFAULT_LIMIT),
        }
    }
}

impl Guard {
    pub fn with_limit(limit: u128) -> Self {
        Guard { limit: Some(limit) }
    }

    /// No ceiling; what `--force` selects.
    pub fn unlimited() -> Self {
        Guard { limit: None }
    }

    pub fn forced(force: bool) -> Self {
        if force {
            Guard::unlimited()
        } else {
            Guard::default()
        }
    }

    /// Checks that `q^n` words may be enumerated and returns that count.
    pub fn check(&self, n: usize, q: u32) -> Result<u64> {
        let size = (q as u128).checked_pow(n as u32);
        let guard = self.limit.unwrap_or(u128::MAX);
        match size {
            Some(s) if s <= guard && s <= u64::MAX as u128 => Ok(s as u64),
            _ => Err(Error::InstanceTooLarge {
                size: format!("{q}^{n}"),
                guard,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_guard_is_two_to_the_twenty() {
        assert_eq!(Guard::default().check(20, 2).unwrap(), 1 << 20);
        assert!(matches!(
            Guard::default().check(21, 2),
            Err(Error::InstanceTooLarge { guard, .. }) if guard == 1 << 20
        ));
        assert!(Guard::default().check(30, 4).is_err());
        assert_eq!(Guard::unlimited().check(30, 2).unwrap(), 1 << 30);
    }
}
