use crate::constructs::SimpleGraph;
use crate::error::{Error, Result};

/// A bundled cubic graph with its known automorphism group order.
#[derive(Clone, Debug)]
pub struct GraphCatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub graph: SimpleGraph,
    pub aut_order: u64,
}

const DATA: [(&str, &str, &str, u64); 4] = [
    ("k4", "complete graph K4", include_str!("data/k4.dimacs"), 24),
    ("k33", "complete bipartite graph K3,3", include_str!("data/k33.dimacs"), 72),
    ("petersen", "Petersen graph", include_str!("data/petersen.dimacs"), 120),
    ("frucht", "Frucht graph (asymmetric cubic graph)", include_str!("data/frucht.dimacs"), 1),
];

pub fn catalog() -> Vec<GraphCatalogEntry> {
    DATA.iter()
        .map(|&(name, description, text, aut_order)| GraphCatalogEntry {
            name,
            description,
            graph: SimpleGraph::from_dimacs(text).expect("bundled graph parses"),
            aut_order,
        })
        .collect()
}

/// Looks up a bundled graph by name, case-insensitively (`K4`, `k33`, `K3,3`...).
pub fn catalog_graph(name: &str) -> Result<GraphCatalogEntry> {
    let key: String = name.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
    let key = key.strip_suffix("dimacs").unwrap_or(&key).to_string();
    catalog().into_iter().find(|e| e.name == key).ok_or_else(|| Error::UnknownGraph(name.to_string()))
}

/// Bundled DIMACS text of a catalog graph.
pub fn catalog_dimacs(name: &str) -> Result<&'static str> {
    let entry = catalog_graph(name)?;
    Ok(DATA.iter().find(|d| d.0 == entry.name).expect("present").2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries() {
        let c = catalog();
        let shape: Vec<(&str, usize, usize)> = c.iter().map(|e| (e.name, e.graph.n(), e.graph.edges().len())).collect();
        assert_eq!(shape, vec![("k4", 4, 6), ("k33", 6, 9), ("petersen", 10, 15), ("frucht", 12, 18)]);
        assert!(c.iter().all(|e| e.graph.is_cubic()));
    }

    #[test]
    fn lookup() {
        assert_eq!(catalog_graph("K4").unwrap().aut_order, 24);
        assert_eq!(catalog_graph("K3,3").unwrap().name, "k33");
        assert_eq!(catalog_graph("petersen.dimacs").unwrap().graph.n(), 10);
        assert!(matches!(catalog_graph("cube"), Err(Error::UnknownGraph(_))));
    }
}
