use std::fmt;

use serde::Serialize;

use crate::polyhex::{is_planar_polyhex, torus_param_twin, Family, PolyhexSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PfaffianVerdict {
    Pfaffian,
    NotPfaffian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PfaffianReason {
    Planar,
    Heawood,
    CrossCapOdd,
    None,
}

impl fmt::Display for PfaffianReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PfaffianReason::Planar => "planar",
            PfaffianReason::Heawood => "heawood",
            PfaffianReason::CrossCapOdd => "cross-cap-odd",
            PfaffianReason::None => "none",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub verdict: PfaffianVerdict,
    pub reason: PfaffianReason,
}

impl Classification {
    pub fn is_pfaffian(&self) -> bool {
        self.verdict == PfaffianVerdict::Pfaffian
    }
}

/// Parameter-only classification: torus polyhexes are Pfaffian iff planar
/// or the Heawood graph, bipartite Klein ones iff `Ke(4,2)`, and every
/// non-bipartite Klein polyhex is Pfaffian.
pub fn classify_pfaffian(spec: &PolyhexSpec) -> Classification {
    use PfaffianReason as R;
    let reason = match spec.family() {
        Family::Torus => {
            let heawood = |s: &PolyhexSpec| (s.k(), s.q(), s.t()) == (14, 1, 2);
            if is_planar_polyhex(spec) {
                R::Planar
            } else if heawood(spec) || heawood(&torus_param_twin(spec).expect("torus spec")) {
                R::Heawood
            } else {
                R::None
            }
        }
        Family::KleinBipartite if is_planar_polyhex(spec) => R::Planar,
        Family::KleinBipartite => R::None,
        Family::KleinNonBipartite => R::CrossCapOdd,
    };
    let verdict = if reason == R::None {
        PfaffianVerdict::NotPfaffian
    } else {
        PfaffianVerdict::Pfaffian
    };
    Classification { verdict, reason }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reason(s: &str) -> PfaffianReason {
        classify_pfaffian(&s.parse().unwrap()).reason
    }

    #[test]
    fn examples() {
        assert_eq!(reason("T:10,2,4"), PfaffianReason::Planar);
        assert_eq!(reason("T:14,1,2"), PfaffianReason::Heawood);
        assert_eq!(reason("T:14,1,4"), PfaffianReason::Heawood);
        assert_eq!(reason("T:6,1,1"), PfaffianReason::None);
        assert_eq!(reason("Ke:4,2"), PfaffianReason::Planar);
        assert_eq!(reason("Ke:6,2"), PfaffianReason::None);
        assert_eq!(reason("Ko:6,4"), PfaffianReason::CrossCapOdd);
        assert!(!classify_pfaffian(&"Ke:6,2".parse().unwrap()).is_pfaffian());
    }

    #[test]
    fn reason_tags_serialise_in_kebab_case() {
        let c = classify_pfaffian(&"Ko:3,2".parse().unwrap());
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"verdict":"Pfaffian","reason":"cross-cap-odd"}"#);
    }
}
