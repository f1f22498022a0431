//! Symbolic records of the asymptotic bounds the pipelines are compared
//! against. Their constants are unknown, so only the *shape* of each bound
//! is evaluated — every unknown constant and exponent set to 1 — and used
//! for qualitative (monotonicity, slope) comparisons, never as a threshold.

/// Quantities a bound may depend on.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ShapeVars {
    /// Size of the largest grid (or other treewidth certificate).
    pub k: f64,
    pub delta: f64,
    pub q: f64,
    /// Number of colors.
    pub h: f64,
    /// Clustering.
    pub c: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundFormula {
    pub name: &'static str,
    pub expression: &'static str,
    /// Constants that cannot be evaluated.
    pub placeholders: &'static [&'static str],
}

/// Treewidth forced by a large grid in a bounded-degree graph.
pub const DEGREE_GRID: BoundFormula = BoundFormula {
    name: "degree_grid",
    expression: "k^γ · 2^(Δ^5)",
    placeholders: &["γ"],
};

/// Treewidth of graphs excluding a subdivided biclique as induced minor.
pub const EXCLUDED_SUBDIVISION: BoundFormula = BoundFormula {
    name: "excluded_subdivision",
    expression: "k^O(1) · Δ^f(q), f(q) = 2^O(q)",
    placeholders: &["O(1)", "O(q)"],
};

/// Treewidth of a graph with a clustered `h`-edge-coloring.
pub const CLUSTERED_COLORING: BoundFormula = BoundFormula {
    name: "clustered_coloring",
    expression: "k^O(1) · 2^O(h^5 + h·log c)",
    placeholders: &["O(1)", "O(h^5 + h·log c)", "δ"],
};

impl BoundFormula {
    pub const ALL: [BoundFormula; 3] = [DEGREE_GRID, EXCLUDED_SUBDIVISION, CLUSTERED_COLORING];

    /// `log2` of the bound with every placeholder set to 1.
    pub fn log2_shape(&self, v: &ShapeVars) -> f64 {
        let lg = |x: f64| x.max(1.0).log2();
        match self.name {
            "degree_grid" => lg(v.k) + v.delta.powi(5),
            "excluded_subdivision" => lg(v.k) + 2f64.powf(v.q) * lg(v.delta),
            _ => lg(v.k) + v.h.powi(5) + v.h * lg(v.c),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_grow_with_their_arguments() {
        let base = ShapeVars {
            k: 4.0,
            delta: 3.0,
            q: 1.0,
            h: 2.0,
            c: 3.0,
        };
        for f in BoundFormula::ALL {
            let more = ShapeVars {
                k: 8.0,
                delta: 4.0,
                q: 2.0,
                h: 3.0,
                c: 5.0,
            };
            assert!(f.log2_shape(&more) > f.log2_shape(&base), "{}", f.name);
        }
        assert_eq!(
            CLUSTERED_COLORING.log2_shape(&ShapeVars {
                k: 1.0,
                h: 1.0,
                c: 1.0,
                ..base
            }),
            1.0
        );
    }
}
