//! Divisors, Dhar's burning algorithm, q-reduced representatives, Baker–Norine
//! rank, and brute-force gonality.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Vertex-count limit for multiplicity-free gonality search.
pub const MFGON_MAX_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Divisor {
    coefficients: Vec<i64>,
}

impl Divisor {
    pub fn zero(vertex_count: usize) -> Self {
        Self {
            coefficients: vec![0; vertex_count],
        }
    }

    pub fn new(coefficients: Vec<i64>) -> Self {
        Self { coefficients }
    }

    /// `coefficient · v`.
    pub fn point(vertex_count: usize, v: usize, coefficient: i64) -> Self {
        let mut d = Self::zero(vertex_count);
        d.coefficients[v] = coefficient;
        d
    }

    /// Parses `"3@0,2@1"`; omitted vertices are zero and repeated vertices add up.
    pub fn parse(text: &str, vertex_count: usize) -> Result<Self> {
        let mut d = Self::zero(vertex_count);
        let text = text.trim();
        if text.is_empty() || text == "0" {
            return Ok(d);
        }
        for term in text.split(',') {
            let term = term.trim();
            let (c, v) = term
                .split_once('@')
                .ok_or_else(|| Error::Parse(format!("term `{term}` is not of the form c@v")))?;
            let c = i64::from_str(c.trim()).map_err(|e| Error::Parse(format!("`{c}`: {e}")))?;
            let v = usize::from_str(v.trim()).map_err(|e| Error::Parse(format!("`{v}`: {e}")))?;
            if v >= vertex_count {
                return Err(Error::VertexOutOfRange {
                    index: v,
                    vertices: vertex_count,
                });
            }
            d.coefficients[v] += c;
        }
        Ok(d)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn get(&self, v: usize) -> i64 {
        self.coefficients[v]
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.coefficients.iter().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.coefficients.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// `D - Δx`.
    pub fn fire(&self, g: &Multigraph, firing: &[i64]) -> Self {
        let lx = g.laplacian().apply(firing);
        Self::new(
            self.coefficients
                .iter()
                .zip(&lx)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// The canonical divisor `Σ (val(v) - 2) v`.
    pub fn canonical(g: &Multigraph) -> Self {
        Self::new(
            (0..g.vertex_count())
                .map(|v| i64::from(g.valence(v)) - 2)
                .collect(),
        )
    }

    fn check_graph(&self, g: &Multigraph) -> Result<()> {
        if self.len() == g.vertex_count() {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "divisor has {} coefficients, graph has {} vertices",
                self.len(),
                g.vertex_count()
            )))
        }
    }
}

impl fmt::Display for Divisor {
    /// Writes the `c@v` text form; the zero divisor is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, &c) in self.coefficients.iter().enumerate() {
            if c != 0 {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{c}@{v}")?;
                first = false;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A firing vector `x` witnessing `output = input - Δx`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiringCertificate {
    pub firing_vector: Vec<i64>,
}

impl FiringCertificate {
    pub fn verify(&self, g: &Multigraph, input: &Divisor, output: &Divisor) -> bool {
        input.fire(g, &self.firing_vector) == *output
    }
}

/// One round of the burning phase: the unburnt set and the divisor after firing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DharStep {
    pub fired: Vec<usize>,
    pub result: Divisor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub divisor: Divisor,
    pub certificate: FiringCertificate,
    /// Sets fired while the burning algorithm still left vertices unburnt.
    pub dhar_steps: Vec<DharStep>,
}

/// Working state for firing sets in place.
struct Chips<'g> {
    g: &'g Multigraph,
    d: Vec<i64>,
    firing: Vec<i64>,
}

impl Chips<'_> {
    fn fire_set(&mut self, in_set: &[bool], times: i64) {
        let n = self.g.vertex_count();
        for v in (0..n).filter(|&v| in_set[v]) {
            self.firing[v] += times;
            for w in (0..n).filter(|&w| !in_set[w]) {
                let m = i64::from(self.g.multiplicity(v, w));
                self.d[v] -= times * m;
                self.d[w] += times * m;
            }
        }
    }
}

fn unburnt(g: &Multigraph, d: &[i64], q: usize) -> Vec<bool> {
    let n = g.vertex_count();
    let mut burnt = vec![false; n];
    // Edges from each vertex into the burnt region.
    let mut exposure = vec![0i64; n];
    let mut queue = VecDeque::from([q]);
    burnt[q] = true;
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if burnt[w] {
                continue;
            }
            exposure[w] += i64::from(g.multiplicity(v, w));
            if d[w] < exposure[w] {
                burnt[w] = true;
                queue.push_back(w);
            }
        }
    }
    burnt.iter().map(|&b| !b).collect()
}

/// Runs Dhar's burning algorithm from `q` and returns the unburnt vertices.
///
/// An empty result means `D` is q-reduced.
pub fn dhar_burn(g: &Multigraph, d: &Divisor, q: usize) -> Result<Vec<usize>> {
    d.check_graph(g)?;
    g.check_vertex(q)?;
    if let Some(v) = (0..g.vertex_count()).find(|&v| v != q && d.get(v) < 0) {
        return Err(Error::Precondition(format!(
            "divisor is negative at v{v}, away from the burning vertex v{q}"
        )));
    }
    let mask = unburnt(g, d.coefficients(), q);
    Ok((0..mask.len()).filter(|&v| mask[v]).collect())
}

fn distances(g: &Multigraph, q: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[q] = 0;
    let mut queue = VecDeque::from([q]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// The unique q-reduced divisor equivalent to `D`, with a firing certificate.
///
/// Phase 1 makes `D` effective away from `q`: shells are processed from the
/// farthest inwards, and the ball strictly inside a shell is fired just often
/// enough to lift every vertex of that shell to zero. Firing that ball only
/// moves chips onto the shell, so outer shells are untouched. Phase 2 fires the
/// unburnt set until the whole graph burns.
pub fn q_reduce(g: &Multigraph, d: &Divisor, q: usize) -> Result<Reduction> {
    d.check_graph(g)?;
    g.check_vertex(q)?;
    g.require_connected()?;
    let n = g.vertex_count();
    let dist = distances(g, q);
    let max_dist = dist.iter().copied().max().unwrap_or(0);
    let mut chips = Chips {
        g,
        d: d.coefficients().to_vec(),
        firing: vec![0; n],
    };

    for shell in (1..=max_dist).rev() {
        let ball: Vec<bool> = dist.iter().map(|&x| x < shell).collect();
        let mut times = 0i64;
        for v in (0..n).filter(|&v| dist[v] == shell && chips.d[v] < 0) {
            let inflow: i64 = (0..n)
                .filter(|&u| ball[u])
                .map(|u| i64::from(g.multiplicity(u, v)))
                .sum();
            times = times.max((-chips.d[v] + inflow - 1) / inflow);
        }
        if times > 0 {
            chips.fire_set(&ball, times);
        }
    }

    let mut dhar_steps = Vec::new();
    loop {
        let mask = unburnt(g, &chips.d, q);
        if !mask.iter().any(|&b| b) {
            break;
        }
        chips.fire_set(&mask, 1);
        dhar_steps.push(DharStep {
            fired: (0..n).filter(|&v| mask[v]).collect(),
            result: Divisor::new(chips.d.clone()),
        });
    }

    Ok(Reduction {
        divisor: Divisor::new(chips.d),
        certificate: FiringCertificate {
            firing_vector: chips.firing,
        },
        dhar_steps,
    })
}

/// Is `D` equivalent to an effective divisor?
pub fn is_effective_class(g: &Multigraph, d: &Divisor) -> Result<bool> {
    Ok(q_reduce(g, d, 0)?.divisor.get(0) >= 0)
}

/// Default degree cap `2g + 2` for rank and gonality searches.
pub fn default_degree_cap(g: &Multigraph) -> i64 {
    2 * g.genus() + 2
}

/// Visits every effective divisor of degree `r` (multisets of vertices) in
/// lexicographic order until `f` returns `false`. Returns whether all passed.
fn all_effective_of_degree<F>(vertex_count: usize, r: usize, mut f: F) -> Result<bool>
where
    F: FnMut(&Divisor) -> Result<bool>,
{
    if r == 0 {
        return f(&Divisor::zero(vertex_count));
    }
    let mut idx = vec![0usize; r];
    loop {
        let mut e = Divisor::zero(vertex_count);
        for &v in &idx {
            e.coefficients[v] += 1;
        }
        if !f(&e)? {
            return Ok(false);
        }
        let Some(pos) = (0..r).rev().find(|&p| idx[p] + 1 < vertex_count) else {
            return Ok(true);
        };
        let v = idx[pos] + 1;
        idx[pos..].iter_mut().for_each(|x| *x = v);
    }
}

/// `rank(D) >= r`, by checking `D - E` for every effective `E` of degree `r`.
pub fn has_rank_at_least(g: &Multigraph, d: &Divisor, r: i64) -> Result<bool> {
    d.check_graph(g)?;
    if r < 0 {
        return Ok(true);
    }
    if r > d.degree() {
        return Ok(false);
    }
    all_effective_of_degree(g.vertex_count(), r as usize, |e| {
        is_effective_class(g, &d.sub(e))
    })
}

/// Baker–Norine rank with the default degree cap.
pub fn rank(g: &Multigraph, d: &Divisor) -> Result<i64> {
    rank_capped(g, d, default_degree_cap(g))
}

pub fn rank_capped(g: &Multigraph, d: &Divisor, degree_cap: i64) -> Result<i64> {
    d.check_graph(g)?;
    g.require_connected()?;
    let deg = d.degree();
    if deg < 0 {
        return Ok(-1);
    }
    if deg > degree_cap {
        return Err(Error::CapExceeded(format!(
            "divisor degree {deg} exceeds the rank search cap {degree_cap}"
        )));
    }
    let mut r = -1;
    while r < deg && has_rank_at_least(g, d, r + 1)? {
        r += 1;
    }
    Ok(r)
}

/// All q-superstable configurations with total degree at most `max_degree`:
/// effective divisors vanishing at `q` that burn completely from `q`.
///
/// Together with a chip count at `q`, these are exactly the q-reduced
/// divisors, one per linear equivalence class of each degree.
pub fn superstables(g: &Multigraph, q: usize, max_degree: i64) -> Result<Vec<Divisor>> {
    g.check_vertex(q)?;
    g.require_connected()?;
    let order: Vec<usize> = (0..g.vertex_count()).filter(|&v| v != q).collect();
    let mut out = Vec::new();
    let mut c = vec![0i64; g.vertex_count()];
    extend_superstable(g, q, &order, 0, max_degree, &mut c, &mut out);
    Ok(out)
}

fn extend_superstable(
    g: &Multigraph,
    q: usize,
    order: &[usize],
    pos: usize,
    budget: i64,
    c: &mut Vec<i64>,
    out: &mut Vec<Divisor>,
) {
    if pos == order.len() {
        out.push(Divisor::new(c.clone()));
        return;
    }
    let v = order[pos];
    let mut value = 0;
    // Superstables are downward closed, so the first failing value ends the loop.
    while value <= budget && value < i64::from(g.valence(v)) {
        c[v] = value;
        if !unburnt(g, c, q).iter().any(|&b| b) {
            extend_superstable(g, q, order, pos + 1, budget - value, c, out);
        } else {
            break;
        }
        value += 1;
    }
    c[v] = 0;
}

/// A divisor of least degree with rank at least `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GonalityWitness {
    pub degree: i64,
    pub divisor: Divisor,
}

/// `gon_r(G)` by searching one v0-reduced representative per divisor class.
pub fn gonality_dhar(g: &Multigraph, r: i64) -> Result<GonalityWitness> {
    gonality_dhar_capped(g, r, default_degree_cap(g).max(r))
}

pub fn gonality_dhar_capped(g: &Multigraph, r: i64, degree_cap: i64) -> Result<GonalityWitness> {
    g.require_connected()?;
    if r < 1 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    let q = 0;
    // A q-reduced divisor of rank >= r keeps at least r chips on q.
    let stable = superstables(g, q, degree_cap - r)?;
    for d in r..=degree_cap {
        for c in stable.iter().filter(|c| c.degree() <= d - r) {
            let mut candidate = c.clone();
            candidate.coefficients[q] = d - c.degree();
            if has_rank_at_least(g, &candidate, r)? {
                return Ok(GonalityWitness {
                    degree: d,
                    divisor: candidate,
                });
            }
        }
    }
    Err(Error::CapExceeded(format!(
        "no divisor of rank {r} up to degree {degree_cap}"
    )))
}

/// Least degree of a 0/1 divisor of positive rank.
pub fn mfgon(g: &Multigraph) -> Result<GonalityWitness> {
    let n = g.vertex_count();
    if n > MFGON_MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "multiplicity-free gonality search",
            limit: MFGON_MAX_VERTICES,
            got: n,
        });
    }
    g.require_connected()?;
    let mut masks: Vec<u32> = (1..1u32 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let d = Divisor::new((0..n).map(|v| i64::from(mask >> v & 1)).collect());
        if has_rank_at_least(g, &d, 1)? {
            return Ok(GonalityWitness {
                degree: d.degree(),
                divisor: d,
            });
        }
    }
    unreachable!("the all-ones divisor has positive rank on a connected graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn div(g: &Multigraph, s: &str) -> Divisor {
        Divisor::parse(s, g.vertex_count()).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let d = Divisor::parse("3@0, 2@1,-1@3", 4).unwrap();
        assert_eq!(d.coefficients(), &[3, 2, 0, -1]);
        assert_eq!(d.degree(), 4);
        assert_eq!(d.to_string(), "3@0,2@1,-1@3");
        assert_eq!(Divisor::zero(3).to_string(), "0");
        assert_eq!(Divisor::parse("0", 3).unwrap(), Divisor::zero(3));
        assert!(Divisor::parse("3@4", 4).is_err());
        assert!(Divisor::parse("3", 4).is_err());
        assert!(Divisor::parse("x@1", 4).is_err());
    }

    #[test]
    fn dhar_examples_on_strip_eight() {
        let g = Multigraph::strip(8);
        assert_eq!(dhar_burn(&g, &div(&g, "2@0,2@2"), 8).unwrap(), vec![0]);
        assert!(dhar_burn(&g, &div(&g, "3@4,1@5"), 8).unwrap().is_empty());
        assert!(dhar_burn(&g, &Divisor::zero(9), 3).unwrap().is_empty());
        assert!(dhar_burn(&g, &div(&g, "-1@2"), 8).is_err());
        // negative at q itself is fine
        assert!(dhar_burn(&g, &div(&g, "-4@8"), 8).is_ok());
    }

    #[test]
    fn traces_on_strip_eight() {
        let g = Multigraph::strip(8);
        let red = q_reduce(&g, &div(&g, "2@0,2@2"), 8).unwrap();
        assert_eq!(red.divisor, div(&g, "3@4,1@5"));
        let fired: Vec<_> = red.dhar_steps.iter().map(|s| s.fired.clone()).collect();
        assert_eq!(fired, vec![vec![0], vec![0, 1, 2], vec![0, 1, 2, 3]]);
        assert_eq!(red.dhar_steps[0].result, div(&g, "1@1,3@2"));
        assert_eq!(red.dhar_steps[1].result, div(&g, "1@2,2@3,1@4"));

        let red = q_reduce(&g, &div(&g, "2@0,1@2,1@4"), 8).unwrap();
        assert_eq!(red.divisor, div(&g, "1@3,2@5,1@6"));
        let red = q_reduce(&g, &div(&g, "2@0,1@2,1@6"), 8).unwrap();
        assert_eq!(red.divisor, div(&g, "2@3,1@4,1@6"));
    }

    #[test]
    fn reduced_divisor_is_a_fixed_point() {
        let g = Multigraph::strip(8);
        let d = div(&g, "3@4,1@5");
        let red = q_reduce(&g, &d, 8).unwrap();
        assert_eq!(red.divisor, d);
        assert!(red.certificate.firing_vector.iter().all(|&x| x == 0));
        assert!(red.dhar_steps.is_empty());
    }

    #[test]
    fn rank_examples() {
        let g = Multigraph::strip(8);
        assert_eq!(rank(&g, &div(&g, "-1@3")).unwrap(), -1);
        assert!(rank(&g, &div(&g, "3@0,2@1")).unwrap() >= 1);
        let g7 = Multigraph::strip(7);
        // the central pair carries rank 1; the pair shifted by one does not
        assert_eq!(rank(&g7, &div(&g7, "2@3,2@4")).unwrap(), 1);
        assert_eq!(rank(&g7, &div(&g7, "2@4,2@5")).unwrap(), 0);
        // degree 0 but not principal
        assert_eq!(rank(&g, &div(&g, "1@1,-1@0")).unwrap(), -1);
        assert_eq!(rank(&g, &Divisor::zero(9)).unwrap(), 0);
        assert!(matches!(
            rank(&g, &div(&g, "100@0")),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn single_vertex_rank() {
        let g = Multigraph::strip(0);
        assert_eq!(rank(&g, &Divisor::point(1, 0, 2)).unwrap(), 2);
    }

    #[test]
    fn gonality_examples() {
        assert_eq!(gonality_dhar(&Multigraph::strip(1), 1).unwrap().degree, 1);
        assert_eq!(gonality_dhar(&Multigraph::strip(0), 1).unwrap().degree, 1);
        assert_eq!(gonality_dhar(&Multigraph::strip(4), 1).unwrap().degree, 3);
        assert_eq!(gonality_dhar(&Multigraph::strip(8), 1).unwrap().degree, 5);
        // r-gonality of a tree is r
        assert_eq!(gonality_dhar(&Multigraph::strip(1), 2).unwrap().degree, 2);
    }

    #[test]
    fn superstable_count_is_tree_count() {
        for g in [Multigraph::strip(5), Multigraph::fan(5).unwrap()] {
            let s = superstables(&g, 0, i64::MAX / 2).unwrap();
            assert_eq!(s.len() as i128, g.spanning_tree_count().unwrap());
        }
    }

    #[test]
    fn mfgon_examples() {
        assert_eq!(mfgon(&Multigraph::strip(6)).unwrap().degree, 4);
        assert_eq!(mfgon(&Multigraph::strip(2)).unwrap().degree, 2);
        assert_eq!(mfgon(&Multigraph::fan(6).unwrap()).unwrap().degree, 4);
        assert!(mfgon(&Multigraph::strip(12)).is_err());
    }

    fn graphs() -> impl Strategy<Value = Multigraph> {
        prop_oneof![
            (1usize..9).prop_map(Multigraph::strip),
            (1usize..9).prop_map(|n| Multigraph::fan(n).unwrap()),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn reduction_is_certified_idempotent_and_class_invariant(
            g in graphs(),
            raw in proptest::collection::vec(-6i64..7, 10),
            shift in proptest::collection::vec(-3i64..4, 10),
            q_seed in 0usize..10,
        ) {
            let n = g.vertex_count();
            let q = q_seed % n;
            let d = Divisor::new(raw[..n].to_vec());
            let red = q_reduce(&g, &d, q).unwrap();
            prop_assert!(red.certificate.verify(&g, &d, &red.divisor));
            prop_assert!(dhar_burn(&g, &red.divisor, q).unwrap().is_empty());
            prop_assert_eq!(red.divisor.degree(), d.degree());

            let again = q_reduce(&g, &red.divisor, q).unwrap();
            prop_assert_eq!(&again.divisor, &red.divisor);

            let moved = d.fire(&g, &shift[..n]);
            prop_assert_eq!(q_reduce(&g, &moved, q).unwrap().divisor, red.divisor);
        }
    }
}
