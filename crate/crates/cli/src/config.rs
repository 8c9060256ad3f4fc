use std::path::PathBuf;
use std::str::FromStr;

use braidforge_core::corpus::Bounds;
use braidforge_core::invariants::DEFAULT_JONES_LIMIT;

/// Enumeration bounds written as `p,q,b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsArg(pub Bounds);

impl FromStr for BoundsArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}")))
            .collect::<Result<_, _>>()?;
        match parts[..] {
            [p, q, b] if p >= 2 && q >= 1 && b >= 1 => Ok(BoundsArg(Bounds::new(p, q, b))),
            [_, _, _] => Err("need p >= 2, q >= 1 and b >= 1".into()),
            _ => Err("expected three comma-separated integers p,q,b".into()),
        }
    }
}

impl Default for BoundsArg {
    fn default() -> Self {
        BoundsArg(Bounds::new(5, 4, 2))
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub jones_limit: usize,
    pub bounds: Bounds,
    /// Picks the extra conjugate presentation used by `verify`.
    pub seed: u64,
    pub workers: usize,
    pub output_path: Option<PathBuf>,
    pub resume: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            jones_limit: DEFAULT_JONES_LIMIT,
            bounds: BoundsArg::default().0,
            seed: 0,
            workers: 1,
            output_path: None,
            resume: false,
        }
    }
}
