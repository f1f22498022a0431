use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ops::subdivide, Graph};
use crate::error::{Error, Result};

/// Graph families with their parameters.
///
/// Labels are row-major for grids (`r * cols + c`). For
/// [`Family::PohoataDavies`] the `n*n` grid vertices come first and the apex
/// of column `c` is `n*n + c`.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Grid {
        rows: usize,
        cols: usize,
    },
    Path(usize),
    Cycle(usize),
    Clique(usize),
    Biclique(usize, usize),
    SubdividedBiclique {
        p: usize,
        q: usize,
        s: usize,
    },
    /// Elementary wall with `n` rows of `2n` bricks' corners; subcubic.
    Wall(usize),
    PohoataDavies(usize),
    RandomGnp {
        n: usize,
        p: f64,
        seed: u64,
    },
}

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidParameter(format!("{name} must be positive")))
    } else {
        Ok(())
    }
}

pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Grid { rows, cols } => {
            positive("rows", rows)?;
            positive("cols", cols)?;
            let mut edges = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    let v = r * cols + c;
                    if c + 1 < cols {
                        edges.push((v, v + 1));
                    }
                    if r + 1 < rows {
                        edges.push((v, v + cols));
                    }
                }
            }
            Graph::from_edges(rows * cols, edges)
        }
        Family::Path(n) => {
            positive("n", n)?;
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidParameter(
                    "cycle needs at least 3 vertices".into(),
                ));
            }
            Graph::from_edges(
                n,
                (0..n).map(|i| if i + 1 < n { (i, i + 1) } else { (0, i) }),
            )
        }
        Family::Clique(n) => {
            positive("n", n)?;
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::Biclique(p, q) => {
            positive("p", p)?;
            positive("q", q)?;
            Graph::from_edges(p + q, (0..p).flat_map(|a| (0..q).map(move |b| (a, p + b))))
        }
        Family::SubdividedBiclique { p, q, s } => subdivide(&generate(&Family::Biclique(p, q))?, s),
        Family::Wall(n) => {
            positive("n", n)?;
            let width = 2 * n;
            let mut edges = Vec::new();
            for r in 0..n {
                for c in 0..width {
                    let v = r * width + c;
                    if c + 1 < width {
                        edges.push((v, v + 1));
                    }
                    if r + 1 < n && c % 2 == r % 2 {
                        edges.push((v, v + width));
                    }
                }
            }
            Graph::from_edges(n * width, edges)
        }
        Family::PohoataDavies(n) => {
            positive("n", n)?;
            let mut edges = Vec::new();
            for r in 0..n {
                for c in 0..n {
                    let v = r * n + c;
                    if c + 1 < n {
                        edges.push((v, v + 1));
                    }
                    edges.push((v, n * n + c));
                }
            }
            Graph::from_edges(n * n + n, edges)
        }
        Family::RandomGnp { n, p, seed } => {
            positive("n", n)?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter(format!(
                    "edge probability {p} outside [0,1]"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges)
        }
    }
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Grid { .. } => "grid",
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Clique(_) => "clique",
            Family::Biclique(..) => "biclique",
            Family::SubdividedBiclique { .. } => "subdivided_biclique",
            Family::Wall(_) => "wall",
            Family::PohoataDavies(_) => "pohoata_davies",
            Family::RandomGnp { .. } => "random_gnp",
        }
    }

    /// Builds a family from its name and comma-separated parameters.
    /// `random_gnp` takes `n,p` here; its seed is supplied separately.
    pub fn from_parts(name: &str, params: &str, seed: u64) -> Result<Family> {
        let raw: Vec<&str> = params
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        let bad =
            || Error::InvalidParameter(format!("bad parameters `{params}` for family `{name}`"));
        let int =
            |i: usize| -> Result<usize> { raw.get(i).and_then(|s| s.parse().ok()).ok_or_else(bad) };
        let want = |k: usize| -> Result<()> {
            if raw.len() == k {
                Ok(())
            } else {
                Err(bad())
            }
        };
        Ok(match name {
            "grid" => {
                want(2)?;
                Family::Grid {
                    rows: int(0)?,
                    cols: int(1)?,
                }
            }
            "path" => {
                want(1)?;
                Family::Path(int(0)?)
            }
            "cycle" => {
                want(1)?;
                Family::Cycle(int(0)?)
            }
            "clique" => {
                want(1)?;
                Family::Clique(int(0)?)
            }
            "biclique" => {
                want(2)?;
                Family::Biclique(int(0)?, int(1)?)
            }
            "subdivided_biclique" => {
                want(3)?;
                Family::SubdividedBiclique {
                    p: int(0)?,
                    q: int(1)?,
                    s: int(2)?,
                }
            }
            "wall" => {
                want(1)?;
                Family::Wall(int(0)?)
            }
            "pohoata_davies" => {
                want(1)?;
                Family::PohoataDavies(int(0)?)
            }
            "random_gnp" => {
                want(2)?;
                let p = raw[1].parse::<f64>().map_err(|_| bad())?;
                Family::RandomGnp {
                    n: int(0)?,
                    p,
                    seed,
                }
            }
            other => return Err(Error::InvalidParameter(format!("unknown family `{other}`"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Grid { rows, cols } => write!(f, "grid({rows},{cols})"),
            Family::Path(n) => write!(f, "path({n})"),
            Family::Cycle(n) => write!(f, "cycle({n})"),
            Family::Clique(n) => write!(f, "clique({n})"),
            Family::Biclique(p, q) => write!(f, "biclique({p},{q})"),
            Family::SubdividedBiclique { p, q, s } => write!(f, "subdivided_biclique({p},{q},{s})"),
            Family::Wall(n) => write!(f, "wall({n})"),
            Family::PohoataDavies(n) => write!(f, "pohoata_davies({n})"),
            Family::RandomGnp { n, p, seed } => write!(f, "random_gnp({n},{p},{seed})"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name(a,b,...)`; `random_gnp(n,p,seed)` carries its seed inline.
    fn from_str(s: &str) -> Result<Family> {
        let s = s.trim();
        let open = s
            .find('(')
            .ok_or_else(|| Error::InvalidParameter(format!("expected name(params): `{s}`")))?;
        if !s.ends_with(')') {
            return Err(Error::InvalidParameter(format!(
                "expected name(params): `{s}`"
            )));
        }
        let name = &s[..open];
        let inner = &s[open + 1..s.len() - 1];
        if name == "random_gnp" {
            let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
            if parts.len() == 3 {
                let seed = parts[2]
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad seed in `{s}`")))?;
                return Family::from_parts(name, &parts[..2].join(","), seed);
            }
        }
        Family::from_parts(name, inner, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pohoata_davies_counts() {
        let g = generate(&Family::PohoataDavies(2)).unwrap();
        assert_eq!((g.n(), g.m()), (6, 6));
        for n in 1..7 {
            let g = generate(&Family::PohoataDavies(n)).unwrap();
            assert_eq!(g.n(), n * n + n);
            assert_eq!(g.m(), n * (n - 1) + n * n);
            // Each apex sees exactly its column.
            for c in 0..n {
                let col: Vec<usize> = (0..n).map(|r| r * n + c).collect();
                assert_eq!(g.neighbors(n * n + c), col.as_slice());
            }
        }
    }

    #[test]
    fn degenerate_grid_is_a_path() {
        for n in 1..6 {
            assert_eq!(
                generate(&Family::Grid { rows: 1, cols: n }).unwrap(),
                generate(&Family::Path(n)).unwrap()
            );
        }
    }

    #[test]
    fn biclique_2_2_is_c4() {
        let g = generate(&Family::Biclique(2, 2)).unwrap();
        assert_eq!((g.n(), g.m(), g.max_degree()), (4, 4, 2));
        assert!(g.is_connected());
    }

    #[test]
    fn nonpositive_dimensions_rejected() {
        assert!(generate(&Family::Grid { rows: 0, cols: 3 }).is_err());
        assert!(generate(&Family::Path(0)).is_err());
        assert!(generate(&Family::Cycle(2)).is_err());
        assert!(generate(&Family::PohoataDavies(0)).is_err());
    }

    #[test]
    fn wall_is_subcubic_and_connected() {
        for n in 1..6 {
            let w = generate(&Family::Wall(n)).unwrap();
            assert!(w.max_degree() <= 3);
            assert!(w.is_connected());
        }
    }

    #[test]
    fn gnp_is_reproducible() {
        let f = Family::RandomGnp {
            n: 30,
            p: 0.2,
            seed: 7,
        };
        assert_eq!(generate(&f).unwrap(), generate(&f).unwrap());
        let other = Family::RandomGnp {
            n: 30,
            p: 0.2,
            seed: 8,
        };
        assert_ne!(generate(&f).unwrap(), generate(&other).unwrap());
    }

    #[test]
    fn family_text_roundtrip() {
        for f in [
            Family::Grid { rows: 3, cols: 4 },
            Family::PohoataDavies(5),
            Family::SubdividedBiclique { p: 2, q: 3, s: 1 },
            Family::RandomGnp {
                n: 10,
                p: 0.25,
                seed: 3,
            },
        ] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert!("grid(3)".parse::<Family>().is_err());
        assert!("torus(3,3)".parse::<Family>().is_err());
    }
}
