//! Commutative-diagram checking over atlas groups and maps.
//!
//! A [`Diagram`] is plain data: nodes carry groups, arrows carry maps,
//! cells name two arrow paths that must agree pointwise, and degree
//! annotations pin the fiber size of single arrows. [`Diagram::check`]
//! first validates the wiring (arrow endpoints must be the very group
//! objects the nodes carry), then walks every cell element by element,
//! reporting the first disagreeing element as a witness.

use std::sync::Arc;

use crate::atlas::Atlas;
use crate::group::{ElementId, FiniteGroup, GroupMap};

/// Errors for structurally broken diagrams (checking failures are data,
/// not errors — see [`DiagramReport`]).
#[derive(Debug, thiserror::Error)]
pub enum DiagramError {
    #[error("malformed diagram {diagram}: {detail}")]
    Malformed { diagram: String, detail: String },
}

#[derive(Clone, Debug)]
pub struct Node {
    pub label: String,
    pub group: Arc<FiniteGroup>,
}

#[derive(Clone, Debug)]
pub struct Arrow {
    pub label: String,
    pub map: Arc<GroupMap>,
    pub from: String,
    pub to: String,
}

/// Two arrow paths (sequences of arrow labels, applied left to right)
/// that must agree on every element of their common domain.
#[derive(Clone, Debug)]
pub struct Cell {
    pub left: Vec<String>,
    pub right: Vec<String>,
}

/// An expected fiber degree for one arrow.
#[derive(Clone, Debug)]
pub struct DegreeAnnotation {
    pub arrow: String,
    pub degree: usize,
}

#[derive(Clone, Debug)]
pub struct Diagram {
    pub name: String,
    pub nodes: Vec<Node>,
    pub arrows: Vec<Arrow>,
    pub cells: Vec<Cell>,
    pub degree_annotations: Vec<DegreeAnnotation>,
}

/// Outcome of one cell or annotation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub subject: String,
    pub passed: bool,
    /// Empty on pass; first witness on failure.
    pub witness: String,
}

/// Every cell and annotation, in diagram order.
#[derive(Clone, Debug)]
pub struct DiagramReport {
    pub diagram: String,
    pub lines: Vec<CheckLine>,
}

impl DiagramReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }
}

impl Diagram {
    fn node(&self, label: &str) -> Result<&Node, DiagramError> {
        self.nodes
            .iter()
            .find(|n| n.label == label)
            .ok_or_else(|| DiagramError::Malformed {
                diagram: self.name.clone(),
                detail: format!("unknown node {label:?}"),
            })
    }

    fn arrow(&self, label: &str) -> Result<&Arrow, DiagramError> {
        self.arrows
            .iter()
            .find(|a| a.label == label)
            .ok_or_else(|| DiagramError::Malformed {
                diagram: self.name.clone(),
                detail: format!("unknown arrow {label:?}"),
            })
    }

    fn malformed(&self, detail: String) -> DiagramError {
        DiagramError::Malformed {
            diagram: self.name.clone(),
            detail,
        }
    }

    /// Check arrow wiring: endpoints exist and carry the same group
    /// objects as the maps' domains/codomains.
    fn validate(&self) -> Result<(), DiagramError> {
        for arrow in &self.arrows {
            let from = self.node(&arrow.from)?;
            let to = self.node(&arrow.to)?;
            if !Arc::ptr_eq(&from.group, arrow.map.domain()) {
                return Err(self.malformed(format!(
                    "arrow {} starts at node {} but its map has domain {}",
                    arrow.label,
                    from.label,
                    arrow.map.domain().name()
                )));
            }
            if !Arc::ptr_eq(&to.group, arrow.map.codomain()) {
                return Err(self.malformed(format!(
                    "arrow {} ends at node {} but its map has codomain {}",
                    arrow.label,
                    to.label,
                    arrow.map.codomain().name()
                )));
            }
        }
        for cell in &self.cells {
            let (lf, lt) = self.path_endpoints(&cell.left)?;
            let (rf, rt) = self.path_endpoints(&cell.right)?;
            if lf != rf || lt != rt {
                return Err(self.malformed(format!(
                    "cell paths {:?} and {:?} do not share endpoints",
                    cell.left, cell.right
                )));
            }
        }
        for ann in &self.degree_annotations {
            self.arrow(&ann.arrow)?;
        }
        Ok(())
    }

    /// Endpoints of a composable arrow path.
    fn path_endpoints(&self, path: &[String]) -> Result<(String, String), DiagramError> {
        if path.is_empty() {
            return Err(self.malformed("empty path in a cell".into()));
        }
        let first = self.arrow(&path[0])?;
        let mut at = first.to.clone();
        for label in &path[1..] {
            let arrow = self.arrow(label)?;
            if arrow.from != at {
                return Err(self.malformed(format!(
                    "path breaks at {label:?}: expected an arrow out of {at}"
                )));
            }
            at = arrow.to.clone();
        }
        Ok((first.from.clone(), at))
    }

    /// Apply a path to one element.
    fn apply_path(&self, path: &[String], x: ElementId) -> ElementId {
        let mut y = x;
        for label in path {
            let arrow = self.arrows.iter().find(|a| a.label == *label).unwrap();
            y = arrow.map.apply(y);
        }
        y
    }

    /// Validate the wiring, then check every cell elementwise and every
    /// degree annotation. Failures become report lines with witnesses.
    pub fn check(&self) -> Result<DiagramReport, DiagramError> {
        self.validate()?;
        let mut lines = Vec::new();
        for cell in &self.cells {
            let (from, to) = self.path_endpoints(&cell.left)?;
            let domain = &self.node(&from)?.group;
            let codomain = &self.node(&to)?.group;
            let subject = format!("cell {} = {}", cell.left.join("∘"), cell.right.join("∘"));
            let mut witness = String::new();
            for x in domain.element_ids() {
                let left = self.apply_path(&cell.left, x);
                let right = self.apply_path(&cell.right, x);
                if left != right {
                    witness = format!(
                        "at {}: {} vs {}",
                        domain.label(x),
                        codomain.label(left),
                        codomain.label(right)
                    );
                    break;
                }
            }
            lines.push(CheckLine {
                subject,
                passed: witness.is_empty(),
                witness,
            });
        }
        for ann in &self.degree_annotations {
            let arrow = self.arrow(&ann.arrow)?;
            let subject = format!("fiber degree of {} is {}", ann.arrow, ann.degree);
            let line = match arrow.map.fiber_degree() {
                Ok(d) if d == ann.degree => CheckLine {
                    subject,
                    passed: true,
                    witness: String::new(),
                },
                Ok(d) => CheckLine {
                    subject,
                    passed: false,
                    witness: format!("actual degree {d}"),
                },
                Err(e) => CheckLine {
                    subject,
                    passed: false,
                    witness: e.to_string(),
                },
            };
            lines.push(line);
        }
        Ok(DiagramReport {
            diagram: self.name.clone(),
            lines,
        })
    }

    /// Render as Graphviz DOT, deterministically: nodes in declaration
    /// order, then arrows in declaration order.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("digraph \"{}\" {{\n", self.name));
        out.push_str("  rankdir=LR;\n");
        for node in &self.nodes {
            out.push_str(&format!(
                "  \"{}\" [shape=box, label=\"{} (order {})\"];\n",
                node.label,
                node.label,
                node.group.order()
            ));
        }
        for arrow in &self.arrows {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                arrow.from, arrow.to, arrow.label
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// The three shipped diagrams.
///
/// `ladder`: two parallel rows of embeddings — the spin row through the
/// quaternion units into the zero-translation covering group, and the
/// rotation row through parity/time-reversal into the zero-translation
/// Lorentz-part group — joined by five vertical two-to-one maps, with the
/// four squares as cells.
///
/// `nu_square`: the single square relating ν and ν̄ through ψ and the
/// spin-to-rotation covering.
///
/// `varphi_square`: the single square relating the composites φ and φ̄
/// through ψ and the semidirect covering.
pub fn builtin_diagrams(atlas: &Atlas) -> Result<Vec<Diagram>, crate::atlas::AtlasError> {
    let node = |label: &str, name: &str| -> Result<Node, crate::atlas::AtlasError> {
        Ok(Node {
            label: label.to_string(),
            group: Arc::clone(atlas.group(name)?),
        })
    };
    let arrow = |label: &str,
                 name: &str,
                 from: &str,
                 to: &str|
     -> Result<Arrow, crate::atlas::AtlasError> {
        Ok(Arrow {
            label: label.to_string(),
            map: Arc::clone(atlas.map(name)?),
            from: from.to_string(),
            to: to.to_string(),
        })
    };
    let cell = |left: &[&str], right: &[&str]| Cell {
        left: left.iter().map(|s| s.to_string()).collect(),
        right: right.iter().map(|s| s.to_string()).collect(),
    };
    let degree = |arrow: &str, degree: usize| DegreeAnnotation {
        arrow: arrow.to_string(),
        degree,
    };

    let ladder = Diagram {
        name: "ladder".into(),
        nodes: vec![
            node("G_psi", "G_psi")?,
            node("Q", "Q")?,
            node("SU2", "H")?,
            node("SL2C", "SL2C_sub")?,
            node("Pbar4c", "Pbar4c_sub")?,
            node("G_A", "G_A")?,
            node("G_PT", "G_PT")?,
            node("SO3", "PhiH")?,
            node("SOc31", "SOc31_sub")?,
            node("P4c", "P4c_sub")?,
        ],
        arrows: vec![
            arrow("alpha", "alpha", "Q", "G_psi")?,
            arrow("mu", "lambda", "Q", "SU2")?,
            arrow("beta", "beta", "SU2", "SL2C")?,
            arrow("gamma", "gamma_map", "SL2C", "Pbar4c")?,
            arrow("alpha_bar", "alpha_bar", "G_PT", "G_A")?,
            arrow("mu_bar", "mu_bar", "G_PT", "SO3")?,
            arrow("beta_bar", "beta_bar", "SO3", "SOc31")?,
            arrow("gamma_bar", "gamma_bar", "SOc31", "P4c")?,
            arrow("psi", "psi", "G_psi", "G_A")?,
            arrow("rho", "rho", "Q", "G_PT")?,
            arrow("Phi", "phi_restricted", "SU2", "SO3")?,
            arrow("Phi_tilde", "phi_tilde_restricted", "SL2C", "SOc31")?,
            arrow("Phi_double", "phi_double_restricted", "Pbar4c", "P4c")?,
        ],
        cells: vec![
            cell(&["alpha", "psi"], &["rho", "alpha_bar"]),
            cell(&["mu", "Phi"], &["rho", "mu_bar"]),
            cell(&["beta", "Phi_tilde"], &["Phi", "beta_bar"]),
            cell(&["gamma", "Phi_double"], &["Phi_tilde", "gamma_bar"]),
        ],
        degree_annotations: vec![
            degree("psi", 2),
            degree("rho", 2),
            degree("Phi", 2),
            degree("Phi_tilde", 2),
            degree("Phi_double", 2),
        ],
    };

    let nu_square = Diagram {
        name: "nu_square".into(),
        nodes: vec![
            node("G_psi", "G_psi")?,
            node("SU2", "H")?,
            node("G_A", "G_A")?,
            node("SO3", "PhiH")?,
        ],
        arrows: vec![
            arrow("nu", "nu", "G_psi", "SU2")?,
            arrow("Phi", "phi_restricted", "SU2", "SO3")?,
            arrow("psi", "psi", "G_psi", "G_A")?,
            arrow("nu_bar", "nu_bar", "G_A", "SO3")?,
        ],
        cells: vec![cell(&["nu", "Phi"], &["psi", "nu_bar"])],
        degree_annotations: vec![degree("nu", 2), degree("nu_bar", 2)],
    };

    let varphi_square = Diagram {
        name: "varphi_square".into(),
        nodes: vec![
            node("G_psi", "G_psi")?,
            node("Pbar4c", "Pbar4c_sub")?,
            node("G_A", "G_A")?,
            node("P4c", "P4c_sub")?,
        ],
        arrows: vec![
            arrow("varphi", "varphi", "G_psi", "Pbar4c")?,
            arrow("Phi_double", "phi_double_restricted", "Pbar4c", "P4c")?,
            arrow("psi", "psi", "G_psi", "G_A")?,
            arrow("varphi_bar", "varphi_bar", "G_A", "P4c")?,
        ],
        cells: vec![cell(&["varphi", "Phi_double"], &["psi", "varphi_bar"])],
        degree_annotations: vec![degree("varphi", 2), degree("varphi_bar", 2)],
    };

    Ok(vec![ladder, nu_square, varphi_square])
}
