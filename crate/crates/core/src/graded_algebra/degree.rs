use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Which coefficient system a class lives in: `Z(0)` (equivariant) or `Z(1)`
/// (the sign-twisted `±` theory).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Eq,
    Pm,
}

impl Variant {
    pub fn flip(self) -> Variant {
        match self {
            Variant::Eq => Variant::Pm,
            Variant::Pm => Variant::Eq,
        }
    }
}

impl Add for Variant {
    type Output = Variant;

    fn add(self, rhs: Variant) -> Variant {
        if self == rhs {
            Variant::Eq
        } else {
            Variant::Pm
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Eq => "eq",
            Variant::Pm => "pm",
        })
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "eq" | "z2" | "equivariant" => Ok(Variant::Eq),
            "pm" | "±" | "twisted" => Ok(Variant::Pm),
            _ => Err(format!("unknown variant `{s}` (expected eq or pm)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Degree {
    pub level: i64,
    pub variant: Variant,
}

impl Degree {
    pub const ZERO: Degree = Degree {
        level: 0,
        variant: Variant::Eq,
    };

    pub fn new(level: i64, variant: Variant) -> Self {
        Degree { level, variant }
    }

    pub fn eq(level: i64) -> Self {
        Degree::new(level, Variant::Eq)
    }

    pub fn pm(level: i64) -> Self {
        Degree::new(level, Variant::Pm)
    }

    pub fn shift(self, by: Degree) -> Degree {
        self + by
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        Degree {
            level: self.level + rhs.level,
            variant: self.variant + rhs.variant,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.level, self.variant)
    }
}

/// How a ring reduces degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GradingKind {
    /// Integer levels.
    Cohomology,
    /// Levels taken mod 2.
    KTheory,
    /// Integer levels; the variant is forgotten.
    NonEquivariant,
}

impl GradingKind {
    pub fn normalize(self, d: Degree) -> Degree {
        match self {
            GradingKind::Cohomology => d,
            GradingKind::KTheory => Degree::new(d.level.rem_euclid(2), d.variant),
            GradingKind::NonEquivariant => Degree::new(d.level, Variant::Eq),
        }
    }
}
