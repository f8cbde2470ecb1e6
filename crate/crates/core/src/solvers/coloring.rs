use serde::Serialize;

use crate::budget::{Meter, SolverBudget};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::independence::clique_number_metered;

/// A colour assignment `v -> colors[v]` with colours drawn from `1..=k`.
///
/// Certificates produced by the solvers are proper and use every colour in
/// `1..=k`. Colourings built by hand or by the extension procedures may leave
/// gaps in the palette; [`ColoringCertificate::uses_every_color`] tells them
/// apart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ColoringCertificate {
    colors: Vec<u32>,
    k: u32,
}

impl ColoringCertificate {
    /// Wraps a colour vector; `k` becomes the largest colour. Colour 0 is
    /// rejected.
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::MalformedInput(format!("vertex {v} has colour 0; colours start at 1")));
        }
        let k = colors.iter().copied().max().unwrap_or(0);
        Ok(ColoringCertificate { colors, k })
    }

    pub fn empty() -> Self {
        ColoringCertificate {
            colors: Vec::new(),
            k: 0,
        }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    /// Size of the palette `1..=k`.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color_class(&self, c: u32) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == c)
            .map(|(v, _)| v)
            .collect()
    }

    /// Number of distinct colours actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn uses_every_color(&self) -> bool {
        self.colors_used() == self.k as usize
    }

    /// Edge scan: one colour per vertex, no monochromatic edge.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && g.edges()
                .into_iter()
                .all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// Proper and palette-compact.
    pub fn verify(&self, g: &Graph) -> bool {
        self.is_proper(g) && self.uses_every_color()
    }
}

/// Vertex order for backtracking: descending degree, ties by index.
fn coloring_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

struct KColoring<'a, 'm> {
    g: &'a Graph,
    k: u32,
    order: Vec<usize>,
    /// allowed colours per vertex, bit `c - 1` for colour `c`
    domain: Vec<u64>,
    colors: Vec<u32>,
    trail: Vec<(usize, u64)>,
    meter: &'m mut Meter,
}

impl KColoring<'_, '_> {
    fn solve(&mut self, pos: usize, max_used: u32) -> bool {
        if pos == self.order.len() {
            return true;
        }
        if !self.meter.tick() {
            return false;
        }
        let v = self.order[pos];
        // colour symmetry: at most one new colour per step
        let ceiling = (max_used + 1).min(self.k);
        let palette = if ceiling >= 64 { u64::MAX } else { (1u64 << ceiling) - 1 };
        let mut options = self.domain[v] & palette;
        while options != 0 {
            let bit = options & options.wrapping_neg();
            options &= options - 1;
            let c = bit.trailing_zeros() + 1;
            let mark = self.trail.len();
            let mut wiped = false;
            for u in self.g.neighbors(v) {
                if self.colors[u] == 0 && self.domain[u] & bit != 0 {
                    self.trail.push((u, self.domain[u]));
                    self.domain[u] &= !bit;
                    if self.domain[u] == 0 {
                        wiped = true;
                        break;
                    }
                }
            }
            if !wiped {
                self.colors[v] = c;
                if self.solve(pos + 1, max_used.max(c)) {
                    return true;
                }
                self.colors[v] = 0;
            }
            while self.trail.len() > mark {
                let (u, d) = self.trail.pop().unwrap();
                self.domain[u] = d;
            }
            if self.meter.exhausted() {
                return false;
            }
        }
        false
    }
}

pub(crate) fn is_k_colorable_metered(
    g: &Graph,
    k: usize,
    meter: &mut Meter,
) -> Result<Option<ColoringCertificate>> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(ColoringCertificate::empty()));
    }
    if k == 0 {
        return Ok(None);
    }
    let k = k.min(n) as u32;
    let full = if k >= 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut search = KColoring {
        g,
        k,
        order: coloring_order(g),
        domain: vec![full; n],
        colors: vec![0; n],
        trail: Vec::new(),
        meter,
    };
    if search.solve(0, 0) {
        let cert = ColoringCertificate::new(search.colors).expect("colours start at 1");
        debug_assert!(cert.verify(g));
        return Ok(Some(cert));
    }
    if search.meter.exhausted() {
        return Err(Error::BudgetExceeded {
            lower: 0,
            upper: n,
        });
    }
    Ok(None)
}

/// A proper colouring with at most `k` colours, if one exists.
///
/// Backtracking in a fixed order (descending degree, ties by index) with
/// forward checking; the vertex at position `i` may only open colour
/// `max_used + 1`, so it never uses a colour above `i + 1`.
pub fn is_k_colorable(g: &Graph, k: usize, budget: SolverBudget) -> Result<Option<ColoringCertificate>> {
    is_k_colorable_metered(g, k, &mut budget.meter())
}

/// Greedy colouring by saturation degree; an upper bound for the exact search.
pub fn dsatur_greedy(g: &Graph) -> ColoringCertificate {
    let n = g.n();
    let mut colors = vec![0u32; n];
    let mut seen = vec![0u64; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == 0)
            .max_by_key(|&v| (seen[v].count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (!seen[v]).trailing_zeros() + 1;
        colors[v] = c;
        for u in g.neighbors(v) {
            seen[u] |= 1u64 << (c - 1);
        }
    }
    ColoringCertificate::new(colors).unwrap_or_else(|_| ColoringCertificate::empty())
}

/// Chromatic number with an optimal colouring.
///
/// Starts at the clique number and increments `k` until a colouring exists;
/// a DSATUR colouring caps the search from above.
pub fn chromatic_number(g: &Graph, budget: SolverBudget) -> Result<(usize, ColoringCertificate)> {
    if g.n() == 0 {
        return Ok((0, ColoringCertificate::empty()));
    }
    let mut meter = budget.meter();
    let greedy = dsatur_greedy(g);
    let upper = greedy.k() as usize;
    let lower = match clique_number_metered(g, &mut meter) {
        Ok((omega, _)) => omega,
        Err(Error::BudgetExceeded { lower, .. }) => {
            return Err(Error::BudgetExceeded { lower, upper });
        }
        Err(e) => return Err(e),
    };
    for k in lower..upper {
        match is_k_colorable_metered(g, k, &mut meter) {
            Ok(Some(cert)) => return Ok((k, cert)),
            Ok(None) => {}
            Err(Error::BudgetExceeded { .. }) => {
                return Err(Error::BudgetExceeded { lower: k, upper });
            }
            Err(e) => return Err(e),
        }
    }
    Ok((upper, greedy))
}

/// Largest `n` for [`chromatic_numbers_all_subsets`] (about `3^n` steps).
pub const SUBSET_CHI_CAP: usize = 16;

/// `chi(G[S])` for every mask `S`: the colour class of the lowest vertex of
/// `S` ranges over independent subsets containing it.
pub fn chromatic_numbers_all_subsets(g: &Graph) -> Result<Vec<u8>> {
    let n = g.n();
    if n > SUBSET_CHI_CAP {
        return Err(Error::cap("subset chromatic table", n, SUBSET_CHI_CAP));
    }
    let size = 1usize << n;
    let mut independent = vec![true; size];
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        independent[s] = independent[rest] && g.neighbors(v).mask() as usize & rest == 0;
    }
    let mut chi = vec![0u8; size];
    for s in 1..size {
        let low = s & s.wrapping_neg();
        let others = s ^ low;
        let mut best = u8::MAX;
        // colour classes containing the lowest vertex
        let mut sub = others;
        loop {
            let class = sub | low;
            if independent[class] {
                best = best.min(1 + chi[s ^ class]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
        chi[s] = best;
    }
    Ok(chi)
}
