//! A fixed catalog of small networks used by tests, benches and the CLI.

use crate::dyck::build_dyck_network;
use crate::error::Result;
use crate::network::{Edge, NetworkSpec, PlanarNetwork};
use crate::partition::Partition;
use crate::rational::{frac, int};
use crate::schur::{build_schur_network, EvalPoint};

#[derive(Debug, Clone)]
pub struct BuiltinNetwork {
    pub name: String,
    pub network: PlanarNetwork,
}

/// `s -> t` with weight 2; its path matrix has determinant 2.
pub fn single_edge(weight: i64) -> PlanarNetwork {
    NetworkSpec {
        vertices: vec!["s".into(), "t".into()],
        edges: vec![Edge::new("s", "t", int(weight))],
        sources: vec!["s".into()],
        sinks: vec!["t".into()],
    }
    .build()
    .expect("valid by construction")
}

/// Two sources on the left, two sinks on the right and one shared middle
/// vertex, with rational weights; determinant 17/2.
pub fn diamond() -> PlanarNetwork {
    let names = ["s1", "s2", "c", "t1", "t2"];
    NetworkSpec {
        vertices: names.iter().map(|v| v.to_string()).collect(),
        edges: vec![
            Edge::new("s1", "t1", int(2)),
            Edge::new("s1", "c", frac(1, 2)),
            Edge::new("s2", "c", int(3)),
            Edge::new("c", "t1", int(1)),
            Edge::new("c", "t2", int(1)),
            Edge::new("s2", "t2", int(1)),
        ],
        sources: vec!["s1".into(), "s2".into()],
        sinks: vec!["t1".into(), "t2".into()],
    }
    .build()
    .expect("valid by construction")
}

fn schur(parts: &[usize], z: EvalPoint) -> Result<PlanarNetwork> {
    let lambda = Partition::new(parts.to_vec())?;
    build_schur_network(&lambda, z.len())?.instantiate(&z)
}

/// Every catalog entry, in a fixed order.
pub fn builtin_networks() -> Vec<BuiltinNetwork> {
    let mut out = vec![
        BuiltinNetwork {
            name: "single-edge-2".into(),
            network: single_edge(2),
        },
        BuiltinNetwork {
            name: "diamond".into(),
            network: diamond(),
        },
    ];
    for m in 0..=2 {
        for k in 0..=2 {
            if m + k > 0 {
                out.push(BuiltinNetwork {
                    name: format!("dyck-{m}-{k}"),
                    network: build_dyck_network(m, k).expect("m + k >= 1"),
                });
            }
        }
    }
    let grids: [(&str, &[usize], EvalPoint); 3] = [
        ("schur-1-z1", &[1], EvalPoint::from_i64(&[1])),
        (
            "schur-2-1-z2",
            &[2, 1],
            EvalPoint::new(vec![int(1), frac(1, 2)]),
        ),
        (
            "schur-1-1-z2",
            &[1, 1],
            EvalPoint::new(vec![int(2), frac(-1, 3)]),
        ),
    ];
    for (name, parts, z) in grids {
        out.push(BuiltinNetwork {
            name: name.into(),
            network: schur(parts, z).expect("valid grid"),
        });
    }
    out
}

pub fn builtin(name: &str) -> Option<PlanarNetwork> {
    builtin_networks()
        .into_iter()
        .find(|b| b.name == name)
        .map(|b| b.network)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(single_edge(2).path_matrix().det().unwrap(), int(2));
        assert_eq!(diamond().path_matrix().det().unwrap(), frac(17, 2));
        for b in builtin_networks() {
            let det = b.network.path_matrix().det().unwrap();
            let expected_one = b.name.starts_with("dyck") || b.name.starts_with("schur");
            assert_eq!(det == int(1), expected_one, "{}", b.name);
        }
    }

    #[test]
    fn names_are_unique() {
        let names: Vec<String> = builtin_networks().into_iter().map(|b| b.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        assert!(builtin("diamond").is_some());
        assert!(builtin("nope").is_none());
    }
}
