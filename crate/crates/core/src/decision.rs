use serde::Serialize;

use crate::error::Undecided;

/// Outcome of a bounded decision procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    Undecided,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }

    pub fn from_result(r: &Result<bool, Undecided>) -> Self {
        match r {
            Ok(b) => Decision::from_bool(*b),
            Err(_) => Decision::Undecided,
        }
    }

    pub fn is_yes(self) -> bool {
        self == Decision::Yes
    }

    pub fn is_decided(self) -> bool {
        self != Decision::Undecided
    }

    pub fn and(self, other: Decision) -> Decision {
        match (self, other) {
            (Decision::No, _) | (_, Decision::No) => Decision::No,
            (Decision::Yes, Decision::Yes) => Decision::Yes,
            _ => Decision::Undecided,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjunction() {
        use Decision::*;
        assert_eq!(Yes.and(Yes), Yes);
        assert_eq!(Yes.and(No), No);
        assert_eq!(Undecided.and(No), No);
        assert_eq!(Undecided.and(Yes), Undecided);
    }
}
