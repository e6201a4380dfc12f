//! Polyhex graphs on the torus and the Klein bottle.
//!
//! Every family is a quotient of the brick-wall hexagonal lattice with
//! vertices `v(i, j)` and edges `v(i,j) v(i+1,j)` plus `v(i,j) v(i,j+1)` when
//! `i ≡ j (mod 2)`. The families differ in how the boundary of the
//! rectangle `L(k, q)` is glued:
//!
//! * `T(k,q,t)`: columns `0` and `k` glued, then layer `0` to layer `q`
//!   shifted by `q + 2t`.
//! * `Ke(k,q)`: columns `0` and `k` glued, then layer `0` to layer `q`
//!   reflected (`i ↦ k - i`, or `k + 1 - i` when `q` is odd).
//! * `Ko(k,q)`: layers `0` and `q` glued, then column `0` to column `k`
//!   reflected (`j ↦ q - 1 - j` for even `k`, `q - 2 - j` for odd `k`).

mod build;
mod predicates;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use build::{
    build_lattice, build_polyhex, validate_polyhex, Embedding, EmbeddingJson, HexFace, Lattice,
    Surface, ValidationCheck, ValidationReport,
};
pub use predicates::{
    face_width_class, face_width_witness, is_planar_polyhex, named_graph, torus_param_twin,
    FaceWidthClass, FaceWidthWitness,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    Torus,
    KleinBipartite,
    KleinNonBipartite,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Torus => "T",
            Family::KleinBipartite => "Ke",
            Family::KleinNonBipartite => "Ko",
        }
    }
}

/// Family and parameters of a polyhex graph. `t` is 0 for Klein families.
/// Constructors enforce the parameter ranges, so a value of this type always
/// describes a buildable graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PolyhexSpec {
    family: Family,
    k: usize,
    q: usize,
    t: usize,
}

impl PolyhexSpec {
    pub fn torus(k: usize, q: usize, t: usize) -> Result<Self> {
        if k < 2 || k % 2 == 1 || q < 1 {
            return Err(Error::InvalidSpec(format!(
                "T({k},{q},{t}): need k even, k >= 2, q >= 1"
            )));
        }
        if t >= k / 2 {
            return Err(Error::InvalidSpec(format!(
                "T({k},{q},{t}): need 0 <= t <= k/2 - 1"
            )));
        }
        let excluded = k == 2 || (k == 4 && q == 1) || (q == 1 && (t == 0 || t == k / 2 - 1));
        if excluded {
            return Err(Error::InvalidSpec(format!(
                "T({k},{q},{t}) is excluded: (k,q,t) must avoid (2,q,t), (4,1,t), (k,1,0) \
                 and (k,1,k/2-1), whose gluing is not a strong embedding"
            )));
        }
        Ok(PolyhexSpec {
            family: Family::Torus,
            k,
            q,
            t,
        })
    }

    pub fn klein_bipartite(k: usize, q: usize) -> Result<Self> {
        if k < 4 || k % 2 == 1 || q < 2 {
            return Err(Error::InvalidSpec(format!(
                "Ke({k},{q}): need k even, k >= 4, q >= 2"
            )));
        }
        Ok(PolyhexSpec {
            family: Family::KleinBipartite,
            k,
            q,
            t: 0,
        })
    }

    pub fn klein_non_bipartite(k: usize, q: usize) -> Result<Self> {
        if k < 3 || q < 2 || q % 2 == 1 {
            return Err(Error::InvalidSpec(format!(
                "Ko({k},{q}): need q even, q >= 2, k >= 3"
            )));
        }
        Ok(PolyhexSpec {
            family: Family::KleinNonBipartite,
            k,
            q,
            t: 0,
        })
    }

    pub fn new(family: Family, k: usize, q: usize, t: usize) -> Result<Self> {
        match family {
            Family::Torus => Self::torus(k, q, t),
            Family::KleinBipartite => Self::klein_bipartite(k, q),
            Family::KleinNonBipartite => Self::klein_non_bipartite(k, q),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn vertex_count(&self) -> usize {
        self.k * self.q
    }

    /// Every valid spec with `kq <= max_vertices`, sorted by (family, k, q, t).
    pub fn enumerate(max_vertices: usize) -> Vec<PolyhexSpec> {
        let mut out = Vec::new();
        for k in 2..=max_vertices {
            for q in 1..=max_vertices / k {
                for t in 0..k / 2 {
                    out.extend(Self::torus(k, q, t));
                }
                out.extend(Self::klein_bipartite(k, q));
                out.extend(Self::klein_non_bipartite(k, q));
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for PolyhexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Torus => write!(f, "T:{},{},{}", self.k, self.q, self.t),
            _ => write!(f, "{}:{},{}", self.family.tag(), self.k, self.q),
        }
    }
}

/// Parses `T:k,q,t`, `Ke:k,q` or `Ko:k,q`.
impl FromStr for PolyhexSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (tag, rest) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("`{s}`: expected FAMILY:k,q[,t]")))?;
        let nums = rest
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
        match (tag, nums.as_slice()) {
            ("T", &[k, q, t]) => Self::torus(k, q, t),
            ("Ke", &[k, q]) => Self::klein_bipartite(k, q),
            ("Ko", &[k, q]) => Self::klein_non_bipartite(k, q),
            _ => Err(Error::Parse(format!(
                "`{s}`: expected T:k,q,t | Ke:k,q | Ko:k,q"
            ))),
        }
    }
}

impl TryFrom<String> for PolyhexSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<PolyhexSpec> for String {
    fn from(s: PolyhexSpec) -> String {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn excluded_torus_triples() {
        for (k, q, t) in [(2, 3, 0), (4, 1, 0), (4, 1, 1), (10, 1, 0), (10, 1, 4)] {
            let err = PolyhexSpec::torus(k, q, t).unwrap_err();
            assert!(err.to_string().contains("excluded"), "{err}");
        }
        assert!(PolyhexSpec::torus(14, 1, 2).is_ok());
        assert!(PolyhexSpec::torus(14, 1, 7).is_err());
        assert!(PolyhexSpec::torus(7, 2, 0).is_err());
    }

    #[test]
    fn klein_ranges() {
        assert!(PolyhexSpec::klein_bipartite(4, 2).is_ok());
        assert!(PolyhexSpec::klein_bipartite(4, 1).is_err());
        assert!(PolyhexSpec::klein_bipartite(5, 2).is_err());
        assert!(PolyhexSpec::klein_non_bipartite(3, 2).is_ok());
        assert!(PolyhexSpec::klein_non_bipartite(3, 3).is_err());
        assert!(PolyhexSpec::klein_non_bipartite(2, 2).is_err());
    }

    #[test]
    fn parse_and_display() {
        for s in ["T:14,1,2", "Ke:4,2", "Ko:6,4"] {
            assert_eq!(s.parse::<PolyhexSpec>().unwrap().to_string(), s);
        }
        assert!("T:14,1".parse::<PolyhexSpec>().is_err());
        assert!("X:1,2".parse::<PolyhexSpec>().is_err());
        assert!("T:a,1,2".parse::<PolyhexSpec>().is_err());
        assert!("T:2,3,0".parse::<PolyhexSpec>().is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_bounded() {
        let specs = PolyhexSpec::enumerate(8);
        assert!(specs.windows(2).all(|w| w[0] < w[1]));
        assert!(specs.iter().all(|s| s.vertex_count() <= 8));
        let shown: Vec<String> = specs.iter().map(|s| s.to_string()).collect();
        assert!(shown.contains(&"T:6,1,1".to_string()));
        assert!(shown.contains(&"T:8,1,2".to_string()));
        assert!(shown.contains(&"T:4,2,0".to_string()));
        assert!(shown.contains(&"Ke:4,2".to_string()));
        assert!(shown.contains(&"Ko:3,2".to_string()));
    }
}
