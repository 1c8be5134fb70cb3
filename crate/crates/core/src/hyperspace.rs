//! Hyperspace product strings, binary superpositions and the product-form
//! universe synthesis `Y = prod_r (L_r + H_r)`.
//!
//! A [`ProductString`] `W = X_1 X_2 ... X_N` picks `L_r` or `H_r` for every
//! noise-bit. Its textual form lists the picks in bit order, e.g. `"LHH"` is
//! `L_1 H_2 H_3`. Internally bit 1 is the most significant bit of the
//! selection mask (`L = 0`, `H = 1`), so the canonical order by mask value is
//! also the lexicographic order of the strings with `L < H`.
//!
//! Evaluation paths that carry complexity claims take an [`OpCounter`] and
//! record every sample-level addition and multiplication they perform.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{NblError, Result};
use crate::reference::ReferenceSystem;
use crate::seed::Role;
use crate::wave::{ClockedWave, IntegerWave};

/// Widest product string the `u64` selection mask can hold.
pub const MAX_PRODUCT_BITS: usize = 64;

/// Default cap on `N` for anything that enumerates all `2^N` strings.
pub const EXPANSION_CAP: usize = 16;

/// Cap on `N` for enumerating all `2^(2^N)` superpositions.
pub const SUPERPOSITION_COUNT_CAP: usize = 4;

/// Largest `N` whose universe samples (`±2^N`) fit in an `i64`.
pub const UNIVERSE_BITS_CAP: usize = 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductString {
    bits: usize,
    mask: u64,
}

impl ProductString {
    /// `mask` holds bit 1 in its most significant position (bit `N - 1`).
    pub fn new(bits: usize, mask: u64) -> Result<Self> {
        if bits > MAX_PRODUCT_BITS {
            return Err(NblError::CapExceeded {
                what: "product string bits",
                requested: bits,
                cap: MAX_PRODUCT_BITS,
            });
        }
        if bits < 64 && mask >> bits != 0 {
            return Err(NblError::Domain(format!(
                "selection mask {mask:#x} has bits beyond N = {bits}"
            )));
        }
        Ok(Self { bits, mask })
    }

    pub fn from_roles(roles: impl IntoIterator<Item = Role>) -> Result<Self> {
        let mut bits = 0;
        let mut mask = 0u64;
        for role in roles {
            bits += 1;
            if bits > MAX_PRODUCT_BITS {
                return Err(NblError::CapExceeded {
                    what: "product string bits",
                    requested: bits,
                    cap: MAX_PRODUCT_BITS,
                });
            }
            mask = (mask << 1) | (role == Role::H) as u64;
        }
        Ok(Self { bits, mask })
    }

    /// The all-`L` string.
    pub fn all_low(bits: usize) -> Result<Self> {
        Self::new(bits, 0)
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Selection for bit `r` (1-based).
    pub fn role(&self, r: usize) -> Result<Role> {
        if r == 0 || r > self.bits {
            return Err(NblError::BitOutOfRange {
                index: r,
                bits: self.bits,
            });
        }
        Ok(self.role_unchecked(r))
    }

    #[inline]
    pub(crate) fn role_unchecked(&self, r: usize) -> Role {
        if (self.mask >> (self.bits - r)) & 1 == 1 {
            Role::H
        } else {
            Role::L
        }
    }

    /// Selections in bit order `1..=N`.
    pub fn roles(&self) -> impl Iterator<Item = Role> + '_ {
        (1..=self.bits).map(|r| self.role_unchecked(r))
    }

    /// All `2^N` strings in canonical order.
    pub fn enumerate(bits: usize) -> Result<impl Iterator<Item = ProductString>> {
        check_expansion_cap(bits, EXPANSION_CAP)?;
        Ok((0..1u64 << bits).map(move |mask| ProductString { bits, mask }))
    }
}

impl fmt::Display for ProductString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for role in self.roles() {
            write!(f, "{}", role.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for ProductString {
    type Err = NblError;

    fn from_str(s: &str) -> Result<Self> {
        let roles = s
            .chars()
            .map(|c| match c {
                'L' => Ok(Role::L),
                'H' => Ok(Role::H),
                other => Err(NblError::Parse(format!(
                    "product string {s:?}: unexpected character {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        ProductString::from_roles(roles)
    }
}

impl Serialize for ProductString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ProductString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A set of product strings over `N` bits, each switched "on".
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Superposition {
    bits: usize,
    members: BTreeSet<ProductString>,
}

impl Superposition {
    pub fn empty(bits: usize) -> Self {
        Self {
            bits,
            members: BTreeSet::new(),
        }
    }

    pub fn from_members(
        bits: usize,
        members: impl IntoIterator<Item = ProductString>,
    ) -> Result<Self> {
        let mut s = Self::empty(bits);
        for m in members {
            s.insert(m)?;
        }
        Ok(s)
    }

    /// Adds a member. Returns `false` if it was already present.
    pub fn insert(&mut self, member: ProductString) -> Result<bool> {
        if member.bits() != self.bits {
            return Err(NblError::DimensionMismatch {
                expected: self.bits,
                actual: member.bits(),
            });
        }
        Ok(self.members.insert(member))
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, member: &ProductString) -> bool {
        self.members.contains(member)
    }

    /// Members in canonical order.
    pub fn members(&self) -> impl Iterator<Item = &ProductString> {
        self.members.iter()
    }
}

impl Serialize for Superposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.members.iter())
    }
}

/// Sample-level operation tally.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct OpCounter {
    pub additions: u64,
    pub multiplications: u64,
}

impl OpCounter {
    pub fn total(&self) -> u64 {
        self.additions + self.multiplications
    }

    /// Totals divided by the clock count (0 when `clocks == 0`).
    pub fn per_clock(&self, clocks: usize) -> (f64, f64) {
        if clocks == 0 {
            return (0.0, 0.0);
        }
        (
            self.additions as f64 / clocks as f64,
            self.multiplications as f64 / clocks as f64,
        )
    }
}

fn check_expansion_cap(bits: usize, cap: usize) -> Result<()> {
    if bits > cap {
        return Err(NblError::CapExceeded {
            what: "N",
            requested: bits,
            cap,
        });
    }
    Ok(())
}

/// Samplewise product of the selected reference waves.
pub fn realize_product(ps: &ProductString, refsys: &ReferenceSystem) -> Result<ClockedWave> {
    realize_product_counted(ps, refsys, &mut OpCounter::default())
}

/// [`realize_product`], folding from the all-ones wave: `N` multiplications
/// per clock.
pub fn realize_product_counted(
    ps: &ProductString,
    refsys: &ReferenceSystem,
    ops: &mut OpCounter,
) -> Result<ClockedWave> {
    refsys.check_bits(ps.bits())?;
    let mut acc = ClockedWave::ones(refsys.clocks());
    for ((l, h), role) in refsys.pairs().zip(ps.roles()) {
        acc.mul_assign_unchecked(match role {
            Role::L => l,
            Role::H => h,
        });
        ops.multiplications += refsys.clocks() as u64;
    }
    Ok(acc)
}

/// Samplewise sum of the realized members; the empty superposition is the
/// zero wave.
pub fn realize_superposition(s: &Superposition, refsys: &ReferenceSystem) -> Result<IntegerWave> {
    realize_superposition_counted(s, refsys, &mut OpCounter::default())
}

pub fn realize_superposition_counted(
    s: &Superposition,
    refsys: &ReferenceSystem,
    ops: &mut OpCounter,
) -> Result<IntegerWave> {
    refsys.check_bits(s.bits())?;
    let mut acc = IntegerWave::zeros(refsys.clocks());
    for member in s.members() {
        let w = realize_product_counted(member, refsys, ops)?;
        acc.add_assign_clocked(&w);
        ops.additions += refsys.clocks() as u64;
    }
    Ok(acc)
}

/// The universe `prod_r (L_r + H_r)` in product form.
pub fn synthesize_universe(refsys: &ReferenceSystem) -> Result<IntegerWave> {
    synthesize_universe_counted(refsys, &mut OpCounter::default())
}

/// Per clock: exactly `N` additions and `N - 1` multiplications. `N = 0`
/// gives the all-ones wave at zero cost.
pub fn synthesize_universe_counted(
    refsys: &ReferenceSystem,
    ops: &mut OpCounter,
) -> Result<IntegerWave> {
    check_expansion_cap(refsys.bits(), UNIVERSE_BITS_CAP)?;
    let clocks = refsys.clocks();
    let mut pairs = refsys.pairs();
    let Some((l1, h1)) = pairs.next() else {
        return Ok(IntegerWave::new(vec![1; clocks]));
    };
    let mut acc = IntegerWave::new(
        l1.samples()
            .iter()
            .zip(h1.samples())
            .map(|(&l, &h)| (l + h) as i64)
            .collect(),
    );
    ops.additions += clocks as u64;
    for (l, h) in pairs {
        for ((y, &lt), &ht) in acc
            .samples_mut()
            .iter_mut()
            .zip(l.samples())
            .zip(h.samples())
        {
            *y *= (lt + ht) as i64;
        }
        ops.additions += clocks as u64;
        ops.multiplications += clocks as u64;
    }
    Ok(acc)
}

/// Every `N`-bit product string, in canonical order. Refuses `N` above
/// [`EXPANSION_CAP`].
pub fn expand_universe(bits: usize) -> Result<Superposition> {
    expand_universe_with_cap(bits, EXPANSION_CAP)
}

pub fn expand_universe_with_cap(bits: usize, cap: usize) -> Result<Superposition> {
    check_expansion_cap(bits, cap)?;
    Ok(Superposition {
        bits,
        members: (0..1u64 << bits)
            .map(|mask| ProductString { bits, mask })
            .collect(),
    })
}

/// Builds every subset of the `2^N` product strings and counts the distinct
/// superpositions obtained. Refuses `N` above [`SUPERPOSITION_COUNT_CAP`].
pub fn enumerate_superpositions(bits: usize) -> Result<u64> {
    check_expansion_cap(bits, SUPERPOSITION_COUNT_CAP)?;
    let strings: Vec<ProductString> = ProductString::enumerate(bits)?.collect();
    let subsets = 1u64 << strings.len();
    let mut seen = HashSet::with_capacity(subsets as usize);
    for subset in 0..subsets {
        let s = Superposition::from_members(
            bits,
            strings
                .iter()
                .enumerate()
                .filter(|(i, _)| (subset >> i) & 1 == 1)
                .map(|(_, ps)| *ps),
        )?;
        seen.insert(s);
    }
    Ok(seen.len() as u64)
}
