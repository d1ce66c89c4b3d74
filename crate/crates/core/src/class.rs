//! Names of the basis classes of graph homology in low degree.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A connected basis graph: a necklace `theta_m`, or one of the residual
/// connected classes that are not necklaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Theta(u32),
    /// Connected class in degree 4 besides the necklace.
    G8b,
    /// Connected class in degree 5 besides the necklace.
    G10b,
}

impl Atom {
    pub fn degree(&self) -> u32 {
        match self {
            Atom::Theta(m) => *m,
            Atom::G8b => 4,
            Atom::G10b => 5,
        }
    }

    pub fn is_necklace(&self) -> bool {
        matches!(self, Atom::Theta(_))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Theta(1) => f.write_str("theta"),
            Atom::Theta(m) => write!(f, "theta{m}"),
            Atom::G8b => f.write_str("g8b"),
            Atom::G10b => f.write_str("g10b"),
        }
    }
}

/// A product of atoms, i.e. a disjoint union of connected basis graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassName {
    /// Sorted, with multiplicity.
    atoms: Vec<Atom>,
}

impl ClassName {
    pub fn new(mut atoms: Vec<Atom>) -> Self {
        atoms.sort();
        ClassName { atoms }
    }

    pub fn theta_power(k: u32) -> Self {
        ClassName::new((0..k).map(|_| Atom::Theta(1)).collect())
    }

    /// The necklace union with bead counts given by `p`.
    pub fn necklaces(p: &Partition) -> Self {
        ClassName::new(p.parts().iter().map(|&m| Atom::Theta(m)).collect())
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn degree(&self) -> u32 {
        self.atoms.iter().map(Atom::degree).sum()
    }

    pub fn is_necklace_union(&self) -> bool {
        self.atoms.iter().all(Atom::is_necklace)
    }

    pub fn is_connected(&self) -> bool {
        self.atoms.len() == 1
    }

    /// Bead counts when this is a necklace union.
    pub fn necklace_partition(&self) -> Option<Partition> {
        self.atoms
            .iter()
            .map(|a| match a {
                Atom::Theta(m) => Some(*m),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Partition::new)
    }

    pub fn times(&self, other: &ClassName) -> ClassName {
        ClassName::new(self.atoms.iter().chain(&other.atoms).copied().collect())
    }

    /// Number of `theta` factors.
    pub fn theta_count(&self) -> usize {
        self.atoms.iter().filter(|a| **a == Atom::Theta(1)).count()
    }

    /// Ordering used for basis listings: by the partition of atom degrees,
    /// necklace unions before classes containing a residual atom.
    pub fn listing_key(&self) -> (Partition, bool, Vec<Atom>) {
        let p = Partition::new(self.atoms.iter().map(Atom::degree).collect());
        (p, !self.is_necklace_union(), self.atoms.clone())
    }

    /// Parses `theta^2*theta2`, `theta_3`, `g8b`, `theta*g8b`. `g10a` names
    /// the connected degree-5 necklace.
    pub fn parse(text: &str) -> Result<Self> {
        let mut atoms = Vec::new();
        for factor in text.split('*') {
            let factor = factor.trim();
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => {
                    let e: usize = e.trim().parse().map_err(|_| Error::Parse(format!("bad exponent in {factor}")))?;
                    (b.trim(), e)
                }
                None => (factor, 1),
            };
            let atom = parse_atom(base)?;
            atoms.extend(core::iter::repeat_n(atom, exp));
        }
        if atoms.is_empty() {
            return Err(Error::Parse(format!("empty class name {text}")));
        }
        Ok(ClassName::new(atoms))
    }
}

fn parse_atom(s: &str) -> Result<Atom> {
    match s {
        "theta" => return Ok(Atom::Theta(1)),
        "g8b" => return Ok(Atom::G8b),
        "g10a" => return Ok(Atom::Theta(5)),
        "g10b" => return Ok(Atom::G10b),
        _ => {}
    }
    let m = s
        .strip_prefix("theta")
        .map(|r| r.trim_start_matches('_'))
        .and_then(|r| r.parse::<u32>().ok())
        .filter(|&m| m >= 1)
        .ok_or_else(|| Error::Parse(format!("unknown class {s}")))?;
    Ok(Atom::Theta(m))
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.atoms.len() {
            let a = self.atoms[i];
            let n = self.atoms[i..].iter().take_while(|&&b| b == a).count();
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if n > 1 {
                write!(f, "{a}^{n}")?;
            } else {
                write!(f, "{a}")?;
            }
            i += n;
        }
        Ok(())
    }
}

pub fn display_list(classes: &[ClassName]) -> String {
    classes.iter().map(|c| format!("{c}")).collect::<Vec<_>>().join(" ")
}
