//! The McKay graph of `D^w(G, N)` with respect to the canonical module,
//! its connected components, and their extended ADE types.

use std::fmt;

use serde::Serialize;

use crate::chartab::{character_table, inner_product_ordinary};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::fusion::{IrrepLabel, SimpleModules};
use crate::group::FiniteGroup;
use crate::par::Exec;
use crate::polyhedral::GroupSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AdeFamily {
    A,
    D,
    E,
}

/// An extended Dynkin diagram `X~_n`, with `n + 1` nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AdeLabel {
    pub family: AdeFamily,
    pub index: usize,
}

impl AdeLabel {
    pub fn new(family: AdeFamily, index: usize) -> Self {
        AdeLabel { family, index }
    }

    pub fn nodes(&self) -> usize {
        self.index + 1
    }
}

impl fmt::Display for AdeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            AdeFamily::A => "A",
            AdeFamily::D => "D",
            AdeFamily::E => "E",
        };
        write!(f, "{fam}~_{}", self.index)
    }
}

/// The diagram attached to a finite subgroup of SU(2).
pub fn expected_correspondent(spec: &GroupSpec) -> AdeLabel {
    match *spec {
        GroupSpec::Cyclic(m) => AdeLabel::new(AdeFamily::A, m as usize - 1),
        GroupSpec::BinaryDihedral(n) => AdeLabel::new(AdeFamily::D, n as usize + 2),
        GroupSpec::BinaryTetrahedral => AdeLabel::new(AdeFamily::E, 6),
        GroupSpec::BinaryOctahedral => AdeLabel::new(AdeFamily::E, 7),
        GroupSpec::BinaryIcosahedral => AdeLabel::new(AdeFamily::E, 8),
    }
}

fn degree_sequence(adj: &[Vec<u64>]) -> Vec<u64> {
    let mut d: Vec<u64> = adj.iter().map(|r| r.iter().sum()).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// Classifies a connected graph, given by a symmetric multiplicity matrix,
/// as an extended ADE diagram.
pub fn classify_ade(adj: &[Vec<u64>]) -> Result<AdeLabel> {
    let n = adj.len();
    let fail = |why: &str| Error::UnrecognizedDiagram(format!("{why}; degree sequence {:?}", degree_sequence(adj)));
    if n == 0 {
        return Err(fail("empty graph"));
    }
    if n == 1 {
        // the trivial group: W is twice the trivial character
        return if adj[0][0] == 2 { Ok(AdeLabel::new(AdeFamily::A, 0)) } else { Err(fail("single node")) };
    }
    if (0..n).any(|i| adj[i][i] != 0) {
        return Err(fail("loop"));
    }
    if n == 2 && adj[0][1] == 2 && adj[1][0] == 2 {
        return Ok(AdeLabel::new(AdeFamily::A, 1));
    }
    if adj.iter().flatten().any(|&m| m > 1) {
        return Err(fail("multiple edge"));
    }
    let deg: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&m| m > 0).count()).collect();
    let edges: usize = deg.iter().sum::<usize>() / 2;
    let nbrs = |i: usize| (0..n).filter(move |&j| adj[i][j] > 0);
    if edges == n && deg.iter().all(|&d| d == 2) && n >= 3 {
        return Ok(AdeLabel::new(AdeFamily::A, n - 1));
    }
    if edges != n - 1 {
        return Err(fail("neither a cycle nor a tree"));
    }
    let branch: Vec<usize> = (0..n).filter(|&i| deg[i] >= 3).collect();
    let leaf_count = |i: usize| nbrs(i).filter(|&j| deg[j] == 1).count();
    match branch.as_slice() {
        [c] if deg[*c] == 4 && n == 5 => Ok(AdeLabel::new(AdeFamily::D, 4)),
        [a, b] if deg[*a] == 3 && deg[*b] == 3 && leaf_count(*a) == 2 && leaf_count(*b) == 2 => {
            Ok(AdeLabel::new(AdeFamily::D, n - 1))
        }
        [c] if deg[*c] == 3 => {
            // node counts of the three arms hanging off the branch node
            let mut arms: Vec<usize> = nbrs(*c)
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (*c, start, 1);
                    while let Some(next) = nbrs(cur).find(|&j| j != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [2, 2, 2] => Ok(AdeLabel::new(AdeFamily::E, 6)),
                [1, 3, 3] => Ok(AdeLabel::new(AdeFamily::E, 7)),
                [1, 2, 5] => Ok(AdeLabel::new(AdeFamily::E, 8)),
                _ => Err(fail(&format!("tree with arms {arms:?}"))),
            }
        }
        _ => Err(fail("tree with unexpected branching")),
    }
}

/// McKay's graph of `h` for the 2-dimensional character `w` (one value per
/// element): node `i` joins node `j` with multiplicity `<χ_i χ_w, χ_j>`.
pub fn classical_mckay(h: &FiniteGroup, w: &[Cyclotomic]) -> Result<Vec<Vec<u64>>> {
    let t = character_table(h)?;
    let rows: Vec<Vec<Cyclotomic>> = (0..t.num_irreps()).map(|i| t.row_by_element(i)).collect();
    let mut adj = vec![vec![0u64; rows.len()]; rows.len()];
    for (i, ri) in rows.iter().enumerate() {
        let tensor: Vec<Cyclotomic> = ri.iter().zip(w).map(|(a, b)| a.mul(b)).collect();
        for (j, rj) in rows.iter().enumerate() {
            let m = inner_product_ordinary(&tensor, rj)?;
            adj[i][j] = m
                .to_i64()
                .filter(|&v| m.is_integer() && v >= 0)
                .ok_or_else(|| Error::Internal(format!("McKay multiplicity {m} is not a nonnegative integer")))?
                as u64;
        }
    }
    Ok(adj)
}

/// A connected component of the McKay graph.
#[derive(Clone, Debug, Serialize)]
pub struct Component {
    /// Class of `G/N` whose simples make up the component.
    pub class: usize,
    /// Indices into the graph's node list, in increasing order.
    pub nodes: Vec<usize>,
    /// The recognized diagram, or the reason recognition failed.
    pub diagram: std::result::Result<AdeLabel, String>,
}

#[derive(Clone, Debug)]
pub struct McKayGraph {
    pub nodes: Vec<IrrepLabel>,
    pub adjacency: Vec<Vec<u64>>,
    pub components: Vec<Component>,
}

fn find(parent: &mut [usize], mut a: usize) -> usize {
    while parent[a] != a {
        parent[a] = parent[parent[a]];
        a = parent[a];
    }
    a
}

/// Connected components of a multiplicity matrix, each sorted, ordered by
/// smallest node.
pub fn components(adj: &[Vec<u64>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in 0..n {
            if adj[i][j] > 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if index[r] == usize::MAX {
            index[r] = comps.len();
            comps.push(Vec::new());
        }
        comps[index[r]].push(i);
    }
    comps
}

fn submatrix(adj: &[Vec<u64>], nodes: &[usize]) -> Vec<Vec<u64>> {
    nodes.iter().map(|&i| nodes.iter().map(|&j| adj[i][j]).collect()).collect()
}

impl McKayGraph {
    /// Builds the graph with `adjacency[U][V]` the multiplicity of `V` in
    /// `U ⊗ W`, computed in the stabilizer of each class.
    pub fn build(modules: &SimpleModules, w: &[Cyclotomic], exec: Exec) -> Result<McKayGraph> {
        let nodes = modules.labels().to_vec();
        let n = nodes.len();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| nodes[i].class == nodes[j].class)
            .collect();
        let values = exec.map(&pairs, |&(i, j)| modules.fusion_with_g_module(&nodes[i], w, &nodes[j]));
        let mut adjacency = vec![vec![0u64; n]; n];
        for (&(i, j), v) in pairs.iter().zip(values) {
            adjacency[i][j] = v?;
        }
        for i in 0..n {
            for j in 0..i {
                if adjacency[i][j] != adjacency[j][i] {
                    return Err(Error::Internal(format!(
                        "McKay graph is not symmetric between {} and {}",
                        modules.label_name(&nodes[i]),
                        modules.label_name(&nodes[j])
                    )));
                }
            }
        }
        let components = components(&adjacency)
            .into_iter()
            .map(|c| Component {
                class: nodes[c[0]].class,
                diagram: classify_ade(&submatrix(&adjacency, &c)).map_err(|e| e.to_string()),
                nodes: c,
            })
            .collect();
        Ok(McKayGraph { nodes, adjacency, components })
    }

    pub fn to_json(&self, modules: &SimpleModules) -> serde_json::Value {
        let k = modules.algebra().quotient().target();
        serde_json::json!({
            "nodes": self.nodes.iter().map(|l| serde_json::json!({
                "name": modules.label_name(l),
                "class": l.class,
                "row": l.row,
                "dimension": l.dimension,
            })).collect::<Vec<_>>(),
            "edges": self.edges().iter().map(|&(i, j, m)| serde_json::json!([i, j, m])).collect::<Vec<_>>(),
            "components": self.components.iter().map(|c| serde_json::json!({
                "class": c.class,
                "class_rep": k.label(modules.classes()[c.class].representative),
                "type": match &c.diagram { Ok(d) => d.to_string(), Err(_) => "unrecognized".to_string() },
                "nodes": c.nodes,
            })).collect::<Vec<_>>(),
        })
    }

    /// Edges `(i, j, multiplicity)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, u64)> {
        let n = self.nodes.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adjacency[i][j] > 0)
            .map(|(i, j)| (i, j, self.adjacency[i][j]))
            .collect()
    }

    pub fn to_dot(&self, modules: &SimpleModules) -> String {
        let k = modules.algebra().quotient().target();
        let mut out = String::from("graph mckay {\n");
        for (ci, c) in self.components.iter().enumerate() {
            let ty = match &c.diagram {
                Ok(d) => d.to_string(),
                Err(_) => "unrecognized".to_string(),
            };
            let rep = k.label(modules.classes()[c.class].representative);
            out.push_str(&format!("  subgraph cluster_{ci} {{\n    label=\"class={rep} type={ty}\";\n"));
            for &i in &c.nodes {
                let l = &self.nodes[i];
                out.push_str(&format!("    n{i} [label=\"{} (dim {})\"];\n", modules.label_name(l), l.dimension));
            }
            out.push_str("  }\n");
        }
        for (i, j, m) in self.edges() {
            out.push_str(&format!("  n{i} -- n{j} [weight={m}];\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// One clause of the orbifold McKay verification.
#[derive(Clone, Debug, Serialize)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct McKayReport {
    /// Whether the configuration is one the correspondence is claimed for:
    /// `|N| <= 2` or `N = G`.
    pub in_scope: bool,
    pub clauses: Vec<Clause>,
    /// `(class rep, diagram, expected)` per component.
    pub components: Vec<(String, String, String)>,
}

impl McKayReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }
}

/// Checks that the McKay graph splits into one extended ADE diagram per class
/// of `G/N`, each the correspondent of the class stabilizer, with classes of
/// order above 2 giving `A~` diagrams on an even number of nodes.
pub fn verify_orbifold_mckay(modules: &SimpleModules, w: &[Cyclotomic], exec: Exec) -> Result<McKayReport> {
    let graph = McKayGraph::build(modules, w, exec)?;
    let a = modules.algebra();
    let k = a.quotient().target();
    let classes = modules.classes();
    let clause = |name: &str, witness: Option<String>| Clause { name: name.to_string(), passed: witness.is_none(), witness };
    let mut clauses = Vec::new();

    let count = graph.components.len();
    clauses.push(clause(
        "one component per conjugacy class",
        (count != classes.len()).then(|| format!("{count} components for {} classes", classes.len())),
    ));

    let mut w2 = None;
    for (ci, _) in classes.iter().enumerate() {
        let expected: Vec<usize> = (0..graph.nodes.len()).filter(|&i| graph.nodes[i].class == ci).collect();
        let comps: Vec<&Component> = graph.components.iter().filter(|c| c.class == ci).collect();
        if comps.len() != 1 || comps[0].nodes != expected {
            w2 = Some(format!("class {} splits into {} components", k.label(classes[ci].representative), comps.len()));
            break;
        }
    }
    clauses.push(clause("component nodes are the simples over one class", w2));

    let mut w3 = None;
    let mut w4 = None;
    let mut summary = Vec::new();
    for c in &graph.components {
        let info = &classes[c.class];
        let rep = k.label(info.representative).to_string();
        let expected = info.stabilizer_type().map(|s| expected_correspondent(&s));
        let got = c.diagram.clone();
        summary.push((
            rep.clone(),
            got.as_ref().map(|d| d.to_string()).unwrap_or_else(|e| e.clone()),
            expected.as_ref().map(|d| d.to_string()).unwrap_or_else(|e| e.to_string()),
        ));
        match (&got, &expected) {
            (Ok(g), Ok(e)) if g == e => {}
            _ if w3.is_none() => {
                w3 = Some(format!("class {rep}: diagram {:?}, stabilizer correspondent {:?}", got, expected));
            }
            _ => {}
        }
        if k.element_order(info.representative) > 2 && w4.is_none() {
            let even_a = matches!(got, Ok(AdeLabel { family: AdeFamily::A, index }) if (index + 1) % 2 == 0);
            if !even_a {
                w4 = Some(format!("class {rep} of order {} gives {:?}", k.element_order(info.representative), got));
            }
        }
    }
    clauses.push(clause("component diagram is the McKay correspondent of the stabilizer", w3));
    clauses.push(clause("classes of order above 2 give A~ diagrams with an even number of nodes", w4));

    let n = a.normal().order();
    Ok(McKayReport { in_scope: n <= 2 || n == a.group_order(), clauses, components: summary })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedral::build;

    fn cycle(n: usize) -> Vec<Vec<u64>> {
        let mut a = vec![vec![0; n]; n];
        for i in 0..n {
            a[i][(i + 1) % n] = 1;
            a[(i + 1) % n][i] = 1;
        }
        a
    }

    fn tree(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u64>> {
        let mut a = vec![vec![0; n]; n];
        for &(i, j) in edges {
            a[i][j] = 1;
            a[j][i] = 1;
        }
        a
    }

    #[test]
    fn recognizes_diagrams() {
        assert_eq!(classify_ade(&cycle(3)).unwrap().to_string(), "A~_2");
        assert_eq!(classify_ade(&[vec![0, 2], vec![2, 0]]).unwrap().to_string(), "A~_1");
        assert_eq!(classify_ade(&tree(5, &[(0, 1), (0, 2), (0, 3), (0, 4)])).unwrap().to_string(), "D~_4");
        assert_eq!(classify_ade(&tree(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)])).unwrap().to_string(), "D~_5");
        let e6 = tree(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        assert_eq!(classify_ade(&e6).unwrap().to_string(), "E~_6");
        let e8 = tree(9, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7), (7, 8)]);
        assert_eq!(classify_ade(&e8).unwrap().to_string(), "E~_8");
        assert!(classify_ade(&tree(4, &[(0, 1), (1, 2), (2, 3)])).is_err());
        let mut looped = cycle(3);
        looped[0][0] = 1;
        assert!(classify_ade(&looped).is_err());
    }

    #[test]
    fn classical_graphs_match_correspondents() {
        for spec in [
            GroupSpec::Cyclic(2),
            GroupSpec::Cyclic(5),
            GroupSpec::BinaryDihedral(2),
            GroupSpec::BinaryDihedral(5),
            GroupSpec::BinaryTetrahedral,
            GroupSpec::BinaryOctahedral,
            GroupSpec::BinaryIcosahedral,
        ] {
            let p = build(&spec).unwrap();
            let adj = classical_mckay(&p.group, p.w.values()).unwrap();
            assert_eq!(classify_ade(&adj).unwrap(), expected_correspondent(&spec), "{spec}");
        }
    }

    #[test]
    fn components_of_disjoint_cycles() {
        let mut a = vec![vec![0u64; 6]; 6];
        for (i, j) in [(0, 2), (2, 4), (4, 0), (1, 3), (3, 5), (5, 1)] {
            a[i][j] = 1;
            a[j][i] = 1;
        }
        assert_eq!(components(&a), vec![vec![0, 2, 4], vec![1, 3, 5]]);
    }
}
