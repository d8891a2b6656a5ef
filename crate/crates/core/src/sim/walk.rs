use crate::error::{domain, Error, Result};
use rand::seq::SliceRandom;
use rand::Rng;
use statrs::function::gamma::ln_gamma;
use std::io::{BufRead, Write};

/// One nearest-neighbour move on the square lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Step {
    Right,
    Left,
    Up,
    Down,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::Right, Step::Left, Step::Up, Step::Down];

    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::Right => (1, 0),
            Step::Left => (-1, 0),
            Step::Up => (0, 1),
            Step::Down => (0, -1),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::Right => 'R',
            Step::Left => 'L',
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'R' => Some(Step::Right),
            'L' => Some(Step::Left),
            'U' => Some(Step::Up),
            'D' => Some(Step::Down),
            _ => None,
        }
    }

    pub fn reverse(self) -> Self {
        match self {
            Step::Right => Step::Left,
            Step::Left => Step::Right,
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }
}

/// A closed lattice walk from the origin. Construction checks closure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClosedWalk {
    steps: Vec<Step>,
}

impl ClosedWalk {
    pub fn from_steps(steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() {
            return Err(domain("ClosedWalk", "walk has no steps"));
        }
        let (mut dx, mut dy) = (0i64, 0i64);
        for s in &steps {
            let (a, b) = s.delta();
            dx += a;
            dy += b;
        }
        if dx != 0 || dy != 0 {
            return Err(domain("ClosedWalk", format!("walk ends at ({dx}, {dy}), not the origin")));
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn n_steps(&self) -> usize {
        self.steps.len()
    }

    /// Visited lattice points, starting and ending at the origin
    /// (`n_steps + 1` points).
    pub fn vertices(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        std::iter::once((0, 0)).chain(self.steps.iter().scan((0i64, 0i64), |p, s| {
            let (dx, dy) = s.delta();
            p.0 += dx;
            p.1 += dy;
            Some(*p)
        }))
    }

    /// The same loop traversed backwards.
    pub fn reversed(&self) -> Self {
        Self {
            steps: self.steps.iter().rev().map(|s| s.reverse()).collect(),
        }
    }

    pub fn to_line(&self) -> String {
        self.steps.iter().map(|s| s.as_char()).collect()
    }

    pub fn parse_line(line: &str) -> Result<Self> {
        let steps = line
            .chars()
            .map(|c| Step::from_char(c).ok_or(c))
            .collect::<std::result::Result<Vec<_>, char>>()
            .map_err(|c| Error::Parse {
                line: 1,
                msg: format!("unexpected character {c:?}"),
            })?;
        Self::from_steps(steps).map_err(|e| Error::Parse {
            line: 1,
            msg: e.to_string(),
        })
    }
}

/// Writes one walk per line as `R`/`L`/`U`/`D` characters.
pub fn write_walks<W: Write>(mut out: W, walks: &[ClosedWalk]) -> std::io::Result<()> {
    for w in walks {
        out.write_all(w.to_line().as_bytes())?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Reads the format produced by [`write_walks`]. Blank lines are skipped.
pub fn read_walks<R: BufRead>(input: R) -> Result<Vec<ClosedWalk>> {
    let mut walks = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::Parse {
            line: i + 1,
            msg: e.to_string(),
        })?;
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let walk = ClosedWalk::parse_line(line).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::Parse { line: i + 1, msg },
            other => other,
        })?;
        walks.push(walk);
    }
    Ok(walks)
}

/// Exact uniform sampler over closed walks of a fixed even length.
///
/// A closed `N`-step walk has `a` steps each way horizontally and `b = N/2 − a`
/// each way vertically; there are `N!/(a!² b!²)` of them. The horizontal count
/// is drawn from that law by inverse CDF, then the step multiset is shuffled.
#[derive(Debug, Clone)]
pub struct ClosedWalkSampler {
    n_steps: usize,
    cdf: Vec<f64>,
}

impl ClosedWalkSampler {
    pub fn new(n_steps: usize) -> Result<Self> {
        if n_steps == 0 || !n_steps.is_multiple_of(2) {
            return Err(domain(
                "sample_closed_walk",
                format!("n_steps = {n_steps} must be even and positive"),
            ));
        }
        let half = n_steps / 2;
        let logw: Vec<f64> = (0..=half)
            .map(|a| {
                let b = half - a;
                -2.0 * (ln_gamma(a as f64 + 1.0) + ln_gamma(b as f64 + 1.0))
            })
            .collect();
        let top = logw.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mut cdf = Vec::with_capacity(logw.len());
        let mut acc = 0.0;
        for lw in &logw {
            acc += (lw - top).exp();
            cdf.push(acc);
        }
        for c in &mut cdf {
            *c /= acc;
        }
        Ok(Self { n_steps, cdf })
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> ClosedWalk {
        let u: f64 = rng.random();
        let a = self.cdf.partition_point(|&c| c <= u).min(self.cdf.len() - 1);
        let b = self.n_steps / 2 - a;
        let mut steps = Vec::with_capacity(self.n_steps);
        steps.extend(std::iter::repeat_n(Step::Right, a));
        steps.extend(std::iter::repeat_n(Step::Left, a));
        steps.extend(std::iter::repeat_n(Step::Up, b));
        steps.extend(std::iter::repeat_n(Step::Down, b));
        steps.shuffle(rng);
        ClosedWalk { steps }
    }
}

/// Draws one closed walk uniformly among all closed walks of `n_steps` steps.
pub fn sample_closed_walk<R: Rng + ?Sized>(n_steps: usize, rng: &mut R) -> Result<ClosedWalk> {
    Ok(ClosedWalkSampler::new(n_steps)?.sample(rng))
}

/// Signed enclosed area `Σ x Δy` (counterclockwise positive).
pub fn algebraic_area(walk: &ClosedWalk) -> i64 {
    let mut x = 0i64;
    let mut area = 0i64;
    for s in walk.steps() {
        match s {
            Step::Right => x += 1,
            Step::Left => x -= 1,
            Step::Up => area += x,
            Step::Down => area -= x,
        }
    }
    area
}
