//! Named graphs used by the CLI and the suites.

use lptlab_core::paths::enumerate_longest_paths;
use lptlab_core::transversal::gallai_vertex_of;
use lptlab_core::treedecomp::exact_treewidth;
use lptlab_core::Graph;

use crate::{HarnessError, Result};

pub const FIXTURE_NAMES: [&str; 3] = ["walther", "bpg-fig2", "p4"];

pub const WALTHER_ORDER: usize = 12;

/// Treewidth the walther encoding is pinned to. The encoded graph is the
/// classical one (Petersen minus a vertex, with a pendant on each former
/// neighbour), whose treewidth is 3.
pub const WALTHER_TREEWIDTH: usize = 3;

pub fn load_fixture(name: &str) -> Result<Graph> {
    match name {
        "walther" => {
            let g = walther_encoding();
            check_walther(&g)?;
            Ok(g)
        }
        "bpg-fig2" => Ok(bpg_fig2()),
        "p4" => Ok(Graph::path(4).expect("small").with_name("p4")),
        other => Err(HarnessError::UnknownFixture(other.to_string())),
    }
}

/// A connected 12-vertex graph whose longest paths share no vertex.
pub fn walther_encoding() -> Graph {
    Graph::from_edges(
        12,
        &[
            (0, 5),
            (1, 2),
            (1, 6),
            (1, 10),
            (2, 3),
            (2, 7),
            (3, 4),
            (3, 8),
            (4, 9),
            (4, 11),
            (5, 7),
            (5, 8),
            (6, 8),
            (6, 9),
            (7, 9),
        ],
    )
    .expect("edges in range")
    .with_name("walther")
}

/// x0..x2 are vertices 0..2, y3..y6 are 3..6.
pub fn bpg_fig2() -> Graph {
    Graph::from_edges(7, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (1, 6), (2, 5), (2, 6)])
        .expect("edges in range")
        .with_name("bpg-fig2")
}

/// Rejects a candidate walther encoding unless it has the pinned order and
/// treewidth and no vertex on all longest paths.
pub fn check_walther(g: &Graph) -> Result<()> {
    let reject = |reason: String| Err(HarnessError::FixtureIntegrity { name: "walther".into(), reason });
    if g.n() != WALTHER_ORDER {
        return reject(format!("{} vertices, expected {WALTHER_ORDER}", g.n()));
    }
    if !g.is_connected() {
        return reject("disconnected".into());
    }
    let (tw, _) = exact_treewidth(g)?;
    if tw != WALTHER_TREEWIDTH {
        return reject(format!("treewidth {tw}, expected {WALTHER_TREEWIDTH}"));
    }
    let lps = enumerate_longest_paths(g)?;
    if let Some(v) = gallai_vertex_of(g, &lps) {
        return reject(format!("vertex {v} lies on every longest path"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_names_load() {
        for name in FIXTURE_NAMES {
            assert!(load_fixture(name).is_ok(), "{name}");
        }
        assert!(matches!(load_fixture("petersen"), Err(HarnessError::UnknownFixture(_))));
    }

    #[test]
    fn fig2_shape() {
        let g = load_fixture("bpg-fig2").unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 9));
        assert_eq!(load_fixture("p4").unwrap(), Graph::path(4).unwrap());
    }

    #[test]
    fn corrupted_walther_is_rejected() {
        let g = walther_encoding();
        // adding a chord through the middle creates a vertex on all longest paths
        let mut edges = g.edges();
        edges.push((5, 6));
        let bad = Graph::from_edges(12, &edges).unwrap();
        assert!(matches!(check_walther(&bad), Err(HarnessError::FixtureIntegrity { .. })));
        assert!(matches!(check_walther(&Graph::cycle(12).unwrap()), Err(HarnessError::FixtureIntegrity { .. })));
        let short =
            Graph::from_edges(11, &edges.iter().copied().filter(|&(u, v)| u < 11 && v < 11).collect::<Vec<_>>())
                .unwrap();
        assert!(check_walther(&short).is_err());
    }
}
