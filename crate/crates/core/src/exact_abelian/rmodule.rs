//! Modules over `R = Z[t]/(t^2 - 1)` and their classification.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{
    smith_normal_form, AbelianError, AbelianPresentation, FGAbelianGroup, GroupHom, IntegerMatrix,
};

/// An abelian group with an action of `t` squaring to the identity, stored on
/// the canonical generators of its invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RModule {
    group: FGAbelianGroup,
    t_action: IntegerMatrix,
}

impl RModule {
    /// Builds a module from any presentation together with the matrix of `t` on
    /// its generators.
    pub fn from_presentation(
        presentation: &AbelianPresentation,
        t: &IntegerMatrix,
    ) -> Result<Self, AbelianError> {
        let hom = GroupHom::new(presentation.clone(), presentation.clone(), t.clone())
            .map_err(|e| AbelianError::NotAnRModule(format!("t is not an endomorphism: {e}")))?;
        let n = presentation.generators();
        let t_sq_minus_one = hom
            .matrix()
            .mul(hom.matrix())?
            .sub(&IntegerMatrix::identity(n))?;
        for col in t_sq_minus_one.columns() {
            if !presentation.is_zero_element(&col)? {
                return Err(AbelianError::NotAnRModule("t^2 is not the identity".into()));
            }
        }

        let snf = smith_normal_form(presentation.relations());
        let diag = snf.diagonal();
        let keep: Vec<usize> = (0..n)
            .filter(|&i| i >= diag.len() || !diag[i].is_one())
            .collect();
        let orders: Vec<BigInt> = keep
            .iter()
            .map(|&i| {
                if i < diag.len() {
                    diag[i].clone()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        let conj = snf.u.mul(t)?.mul(&snf.u_inv)?;
        let mut t_new = IntegerMatrix::zeros(keep.len(), keep.len());
        for (a, &ia) in keep.iter().enumerate() {
            for (b, &ib) in keep.iter().enumerate() {
                let mut x = conj.get(ia, ib).clone();
                if !orders[a].is_zero() {
                    x = x.mod_floor(&orders[a]);
                }
                t_new.set(a, b, x);
            }
        }
        let group = FGAbelianGroup::from_cyclic_orders(&orders);
        debug_assert_eq!(group.invariant_factors(), &orders[..]);
        Ok(RModule {
            group,
            t_action: t_new,
        })
    }

    pub fn zero() -> Self {
        RModule {
            group: FGAbelianGroup::trivial(),
            t_action: IntegerMatrix::zeros(0, 0),
        }
    }

    pub fn group(&self) -> &FGAbelianGroup {
        &self.group
    }

    pub fn t_action(&self) -> &IntegerMatrix {
        &self.t_action
    }

    pub fn presentation(&self) -> AbelianPresentation {
        self.group.presentation()
    }

    pub fn direct_sum(&self, other: &RModule) -> RModule {
        let (n, m) = (self.t_action.rows(), other.t_action.rows());
        let mut orders = self.group.invariant_factors().to_vec();
        orders.extend(other.group.invariant_factors().iter().cloned());
        let mut t = IntegerMatrix::zeros(n + m, n + m);
        for i in 0..n {
            for j in 0..n {
                t.set(i, j, self.t_action.get(i, j).clone());
            }
        }
        for i in 0..m {
            for j in 0..m {
                t.set(n + i, n + j, other.t_action.get(i, j).clone());
            }
        }
        RModule::from_presentation(&AbelianPresentation::cyclic(&orders), &t)
            .expect("direct sum of modules is a module")
    }

    pub fn fingerprint(&self) -> Result<Fingerprint, AbelianError> {
        let pres = self.presentation();
        let n = pres.generators();
        let id = IntegerMatrix::identity(n);
        let one_minus_t = id.sub(&self.t_action)?;
        let mut one_plus_t = self.t_action.clone();
        for i in 0..n {
            let v = one_plus_t.get(i, i) + 1;
            one_plus_t.set(i, i, v);
        }
        let kernel = |m: &IntegerMatrix| -> Result<FGAbelianGroup, AbelianError> {
            Ok(GroupHom::new(pres.clone(), pres.clone(), m.clone())?
                .kernel()?
                .group())
        };
        Ok(Fingerprint {
            module: self.group.clone(),
            mod_one_minus_t: pres.quotient_by(&one_minus_t)?.group(),
            mod_one_plus_t: pres.quotient_by(&one_plus_t)?.group(),
            ker_one_minus_t: kernel(&one_minus_t)?,
            ker_one_plus_t: kernel(&one_plus_t)?,
        })
    }

    /// Decomposes into `R`, `R/I`, `R/J` and `I/2I` summands, using the
    /// fingerprint as a complete invariant.
    pub fn classify(&self) -> Result<RModuleDecomposition, AbelianError> {
        let fp = self.fingerprint()?;
        let fail =
            |why: &str| AbelianError::ClassificationFailure(format!("{why}; fingerprint {fp}"));
        let bad_torsion = fp
            .module
            .torsion_factors()
            .iter()
            .any(|d| *d != BigInt::from(2));
        if bad_torsion {
            return Err(fail("torsion other than Z/2"));
        }
        let d = fp.module.count_cyclic(2) as i64;
        let c = fp.mod_one_minus_t.count_cyclic(2) as i64 - d;
        let b = fp.mod_one_plus_t.count_cyclic(2) as i64 - d;
        let a = fp.mod_one_minus_t.rank() as i64 - b;
        if a < 0 || b < 0 || c < 0 {
            return Err(fail("negative multiplicity"));
        }
        let dec = RModuleDecomposition {
            r: a as usize,
            r_mod_i: b as usize,
            r_mod_j: c as usize,
            i_mod_2i: d as usize,
        };
        if dec.predicted_fingerprint() != fp {
            return Err(fail("fingerprint matches no sum of indecomposables"));
        }
        Ok(dec)
    }
}

/// Orders of `M`, `M/(1-t)M`, `M/(1+t)M`, `ker(1-t)` and `ker(1+t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub module: FGAbelianGroup,
    pub mod_one_minus_t: FGAbelianGroup,
    pub mod_one_plus_t: FGAbelianGroup,
    pub ker_one_minus_t: FGAbelianGroup,
    pub ker_one_plus_t: FGAbelianGroup,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[M = {}, M/(1-t) = {}, M/(1+t) = {}, ker(1-t) = {}, ker(1+t) = {}]",
            self.module,
            self.mod_one_minus_t,
            self.mod_one_plus_t,
            self.ker_one_minus_t,
            self.ker_one_plus_t
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Indecomposable {
    R,
    RModI,
    RModJ,
    IMod2I,
}

impl Indecomposable {
    pub const ALL: [Indecomposable; 4] = [
        Indecomposable::R,
        Indecomposable::RModI,
        Indecomposable::RModJ,
        Indecomposable::IMod2I,
    ];

    pub fn module(self) -> RModule {
        let (orders, t): (Vec<i64>, Vec<Vec<i64>>) = match self {
            Indecomposable::R => (vec![0, 0], vec![vec![0, 1], vec![1, 0]]),
            Indecomposable::RModI => (vec![0], vec![vec![1]]),
            Indecomposable::RModJ => (vec![0], vec![vec![-1]]),
            Indecomposable::IMod2I => (vec![2], vec![vec![1]]),
        };
        let orders: Vec<BigInt> = orders.into_iter().map(BigInt::from).collect();
        RModule::from_presentation(
            &AbelianPresentation::cyclic(&orders),
            &IntegerMatrix::from_rows(&t),
        )
        .expect("indecomposables are modules")
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Indecomposable::R => "R",
            Indecomposable::RModI => "R/I",
            Indecomposable::RModJ => "R/J",
            Indecomposable::IMod2I => "I/2I",
        }
    }
}

/// Multiplicities of the four indecomposables.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RModuleDecomposition {
    pub r: usize,
    pub r_mod_i: usize,
    pub r_mod_j: usize,
    pub i_mod_2i: usize,
}

impl RModuleDecomposition {
    pub fn new(r: usize, r_mod_i: usize, r_mod_j: usize, i_mod_2i: usize) -> Self {
        RModuleDecomposition {
            r,
            r_mod_i,
            r_mod_j,
            i_mod_2i,
        }
    }

    pub fn multiplicity(&self, k: Indecomposable) -> usize {
        match k {
            Indecomposable::R => self.r,
            Indecomposable::RModI => self.r_mod_i,
            Indecomposable::RModJ => self.r_mod_j,
            Indecomposable::IMod2I => self.i_mod_2i,
        }
    }

    fn multiplicity_mut(&mut self, k: Indecomposable) -> &mut usize {
        match k {
            Indecomposable::R => &mut self.r,
            Indecomposable::RModI => &mut self.r_mod_i,
            Indecomposable::RModJ => &mut self.r_mod_j,
            Indecomposable::IMod2I => &mut self.i_mod_2i,
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::default()
    }

    pub fn sum(&self, other: &Self) -> Self {
        RModuleDecomposition {
            r: self.r + other.r,
            r_mod_i: self.r_mod_i + other.r_mod_i,
            r_mod_j: self.r_mod_j + other.r_mod_j,
            i_mod_2i: self.i_mod_2i + other.i_mod_2i,
        }
    }

    pub fn scaled(&self, k: usize) -> Self {
        RModuleDecomposition {
            r: self.r * k,
            r_mod_i: self.r_mod_i * k,
            r_mod_j: self.r_mod_j * k,
            i_mod_2i: self.i_mod_2i * k,
        }
    }

    /// The explicit direct sum.
    pub fn module(&self) -> RModule {
        let mut m = RModule::zero();
        for k in Indecomposable::ALL {
            for _ in 0..self.multiplicity(k) {
                m = m.direct_sum(&k.module());
            }
        }
        m
    }

    pub fn predicted_fingerprint(&self) -> Fingerprint {
        let (a, b, c, d) = (self.r, self.r_mod_i, self.r_mod_j, self.i_mod_2i);
        let group = |free: usize, two: usize| {
            let mut orders = vec![BigInt::from(2); two];
            orders.extend(std::iter::repeat_n(BigInt::zero(), free));
            FGAbelianGroup::from_cyclic_orders(&orders)
        };
        Fingerprint {
            module: group(2 * a + b + c, d),
            mod_one_minus_t: group(a + b, c + d),
            mod_one_plus_t: group(a + c, b + d),
            ker_one_minus_t: group(a + b, d),
            ker_one_plus_t: group(a + c, d),
        }
    }
}

impl fmt::Display for RModuleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = Indecomposable::ALL
            .iter()
            .filter(|k| self.multiplicity(**k) > 0)
            .map(|k| match (self.multiplicity(*k), *k) {
                (1, k) => k.symbol().to_string(),
                (m, Indecomposable::R) => format!("R^{m}"),
                (m, k) => format!("({})^{m}", k.symbol()),
            })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

impl FromStr for RModuleDecomposition {
    type Err = AbelianError;

    /// Accepts sums such as `R/I ⊕ R/J`, `R^2 + (R/J)^2` or `0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut dec = RModuleDecomposition::default();
        let bad = || AbelianError::ClassificationFailure(format!("cannot parse module `{s}`"));
        for raw in s.split(['⊕', '+']) {
            let part = raw.trim();
            if part == "0" {
                continue;
            }
            let (base, mult) = match part.rsplit_once('^') {
                Some((b, m)) => (b.trim(), m.trim().parse::<usize>().map_err(|_| bad())?),
                None => (part, 1),
            };
            let base = base.trim_start_matches('(').trim_end_matches(')');
            let k = Indecomposable::ALL
                .into_iter()
                .find(|k| k.symbol() == base)
                .ok_or_else(bad)?;
            *dec.multiplicity_mut(k) += mult;
        }
        Ok(dec)
    }
}
