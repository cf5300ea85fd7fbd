use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Which regular gluing to perform in [`super::glued_double`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GluedMode {
    /// Two 4-regular copies and one new vertex: odd order `2k + 1`.
    OddQuartic,
    /// Two cubic copies and two new adjacent vertices: even order `2k + 2`.
    EvenCubic,
}

impl fmt::Display for GluedMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GluedMode::OddQuartic => "odd 4-regular",
            GluedMode::EvenCubic => "even cubic",
        })
    }
}

/// A named family member with its parameters.
///
/// The textual form is `kind:p1,p2,...`, with `tube:NxM` as the one
/// two-dimensional form and `c8chords` taking no parameters:
///
/// | text                | graph                                    |
/// |---------------------|------------------------------------------|
/// | `multipartite:3,2,1`| `K_{3,2,1}` (alias `k:`)                 |
/// | `star:n`            | `S_n = K_{n,1}`                          |
/// | `wheel:n`           | `W_n`                                    |
/// | `path:n`, `cycle:n` | `P_n`, `C_n`                             |
/// | `complete:n`        | `K_n`                                    |
/// | `ss:n,m`, `ssx:n,m` | merged / subdivided merged star          |
/// | `sp:3,2,2,1`        | spider with the given legs               |
/// | `tube:NxM`          | `P_N □ C_M`                              |
/// | `kite:n`            | `Ki(n)`                                  |
/// | `tilde:n`           | `C̃_2n`                                   |
/// | `c8chords`          | 8-cycle plus chords 04, 13, 26, 57       |
/// | `glued4:G6,x,y`     | 4-regular glued double of a graph6 base  |
/// | `glued3:G6,x,y`     | cubic glued double of a graph6 base      |
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyDescriptor {
    Multipartite(Vec<usize>),
    Star(usize),
    Wheel(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    MergedStar(usize, usize),
    SubdividedMergedStar(usize, usize),
    Spider(Vec<usize>),
    Tube(usize, usize),
    Kite(usize),
    TildeCycle(usize),
    C8Chords,
    GluedDouble {
        base: Graph,
        x: usize,
        y: usize,
        mode: GluedMode,
    },
}

pub(crate) const KINDS: &[&str] = &[
    "multipartite",
    "k",
    "star",
    "wheel",
    "path",
    "cycle",
    "complete",
    "ss",
    "ssx",
    "sp",
    "tube",
    "kite",
    "tilde",
    "c8chords",
    "glued4",
    "glued3",
];

impl FamilyDescriptor {
    pub fn build(&self) -> Result<Graph> {
        use FamilyDescriptor as F;
        match self {
            F::Multipartite(parts) => super::complete_multipartite(parts),
            F::Star(n) => super::star(*n),
            F::Wheel(n) => super::wheel(*n),
            F::Path(n) => super::path(*n),
            F::Cycle(n) => super::cycle(*n),
            F::Complete(n) => super::complete(*n),
            F::MergedStar(n, m) => super::merged_star(*n, *m),
            F::SubdividedMergedStar(n, m) => super::subdivided_merged_star(*n, *m),
            F::Spider(legs) => super::spider(legs),
            F::Tube(n, m) => super::tube(*n, *m),
            F::Kite(n) => super::kite(*n),
            F::TildeCycle(n) => super::tilde_cycle(*n),
            F::C8Chords => Ok(super::c8_plus_chords()),
            F::GluedDouble { base, x, y, mode } => super::glued_double(base, *x, *y, *mode),
        }
    }

    /// Short kind name as used in the textual form.
    pub fn kind(&self) -> &'static str {
        use FamilyDescriptor as F;
        match self {
            F::Multipartite(_) => "multipartite",
            F::Star(_) => "star",
            F::Wheel(_) => "wheel",
            F::Path(_) => "path",
            F::Cycle(_) => "cycle",
            F::Complete(_) => "complete",
            F::MergedStar(..) => "ss",
            F::SubdividedMergedStar(..) => "ssx",
            F::Spider(_) => "sp",
            F::Tube(..) => "tube",
            F::Kite(_) => "kite",
            F::TildeCycle(_) => "tilde",
            F::C8Chords => "c8chords",
            F::GluedDouble {
                mode: GluedMode::OddQuartic,
                ..
            } => "glued4",
            F::GluedDouble {
                mode: GluedMode::EvenCubic,
                ..
            } => "glued3",
        }
    }
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyDescriptor as F;
        let kind = self.kind();
        match self {
            F::Multipartite(p) | F::Spider(p) => write!(f, "{kind}:{}", join(p)),
            F::Star(n) | F::Wheel(n) | F::Path(n) | F::Cycle(n) | F::Complete(n) => {
                write!(f, "{kind}:{n}")
            }
            F::Kite(n) | F::TildeCycle(n) => write!(f, "{kind}:{n}"),
            F::MergedStar(n, m) | F::SubdividedMergedStar(n, m) => write!(f, "{kind}:{n},{m}"),
            F::Tube(n, m) => write!(f, "tube:{n}x{m}"),
            F::C8Chords => f.write_str(kind),
            F::GluedDouble { base, x, y, .. } => {
                write!(f, "{kind}:{},{x},{y}", graph6::encode(base))
            }
        }
    }
}

fn parse_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::bad_params(format!("'{p}' is not a non-negative integer")))
        })
        .collect()
}

fn exactly<const N: usize>(kind: &str, text: &str) -> Result<[usize; N]> {
    let values = parse_list(text)?;
    values.try_into().map_err(|v: Vec<usize>| {
        Error::bad_params(format!("{kind} takes {N} parameter(s), got {}", v.len()))
    })
}

impl FromStr for FamilyDescriptor {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        use FamilyDescriptor as F;
        let text = text.trim();
        let (kind, params) = text.split_once(':').unwrap_or((text, ""));
        let family = match kind {
            "multipartite" | "k" => F::Multipartite(parse_list(params)?),
            "star" => F::Star(exactly::<1>(kind, params)?[0]),
            "wheel" => F::Wheel(exactly::<1>(kind, params)?[0]),
            "path" => F::Path(exactly::<1>(kind, params)?[0]),
            "cycle" => F::Cycle(exactly::<1>(kind, params)?[0]),
            "complete" => F::Complete(exactly::<1>(kind, params)?[0]),
            "ss" => {
                let [n, m] = exactly(kind, params)?;
                F::MergedStar(n, m)
            }
            "ssx" => {
                let [n, m] = exactly(kind, params)?;
                F::SubdividedMergedStar(n, m)
            }
            "sp" => F::Spider(parse_list(params)?),
            "tube" => {
                let (n, m) = params
                    .split_once(['x', 'X'])
                    .ok_or_else(|| Error::bad_params("tube expects NxM, e.g. tube:5x4"))?;
                F::Tube(exactly::<1>(kind, n)?[0], exactly::<1>(kind, m)?[0])
            }
            "kite" => F::Kite(exactly::<1>(kind, params)?[0]),
            "tilde" => F::TildeCycle(exactly::<1>(kind, params)?[0]),
            "c8chords" if params.is_empty() => F::C8Chords,
            "glued4" | "glued3" => {
                let mut parts = params.splitn(2, ',');
                let code = parts.next().unwrap_or_default();
                let [x, y] = exactly(kind, parts.next().unwrap_or_default())?;
                let base = graph6::decode(code.as_bytes())?;
                let mode = if kind == "glued4" {
                    GluedMode::OddQuartic
                } else {
                    GluedMode::EvenCubic
                };
                F::GluedDouble { base, x, y, mode }
            }
            _ => {
                return Err(Error::bad_params(format!(
                    "unknown family '{text}'; valid kinds: {}",
                    KINDS.join(", ")
                )))
            }
        };
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(
            "kite:4".parse::<FamilyDescriptor>().unwrap(),
            FamilyDescriptor::Kite(4)
        );
        assert_eq!(
            "ss:3,2".parse::<FamilyDescriptor>().unwrap(),
            FamilyDescriptor::MergedStar(3, 2)
        );
        assert_eq!(
            "tube:5x4".parse::<FamilyDescriptor>().unwrap(),
            FamilyDescriptor::Tube(5, 4)
        );
        assert_eq!(
            "sp:3,2,2,1".parse::<FamilyDescriptor>().unwrap(),
            FamilyDescriptor::Spider(vec![3, 2, 2, 1])
        );
        assert_eq!(
            "k:3,2,1".parse::<FamilyDescriptor>().unwrap(),
            FamilyDescriptor::Multipartite(vec![3, 2, 1])
        );
        assert_eq!(
            "c8chords".parse::<FamilyDescriptor>().unwrap(),
            FamilyDescriptor::C8Chords
        );
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "multipartite:3,2,1",
            "star:4",
            "wheel:5",
            "path:7",
            "cycle:9",
            "complete:5",
            "ss:3,2",
            "ssx:4,4",
            "sp:3,2,2,1",
            "tube:5x4",
            "kite:4",
            "tilde:6",
            "c8chords",
            "glued4:D~{,0,1",
        ] {
            let family: FamilyDescriptor = text.parse().unwrap();
            assert_eq!(family.to_string(), text);
        }
    }

    #[test]
    fn unknown_kind_lists_valid_kinds() {
        let err = "hypercube:3".parse::<FamilyDescriptor>().unwrap_err();
        let msg = err.to_string();
        assert!(
            msg.contains("unknown family") && msg.contains("kite"),
            "{msg}"
        );
    }

    #[test]
    fn malformed_parameters() {
        assert!("kite:".parse::<FamilyDescriptor>().is_err());
        assert!("kite:a".parse::<FamilyDescriptor>().is_err());
        assert!("ss:3".parse::<FamilyDescriptor>().is_err());
        assert!("tube:5".parse::<FamilyDescriptor>().is_err());
        assert!("star:1,2".parse::<FamilyDescriptor>().is_err());
    }

    #[test]
    fn glued_descriptor_builds() {
        let g = "glued4:D~{,0,1"
            .parse::<FamilyDescriptor>()
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(g.order(), 11);
        assert_eq!(g.regular_degree(), Some(4));
    }
}
