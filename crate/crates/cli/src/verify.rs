use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sigswitch_core::classify::{gp_edge_layers, verify_lower_bound, SwitchingAction};
use sigswitch_core::signing::switching_equivalent;
use sigswitch_core::{BitVector, Graph, SignedGraph};

use crate::report::{size_summary, Classification};
use crate::source::{load, GraphSource, LoadedGraph};
use crate::CliError;

/// Largest edge count for the exhaustive class count.
const EXHAUSTIVE_MAX_EDGES: usize = 16;
/// Largest vertex count for the brute-force switching comparison.
const BRUTE_SWITCH_MAX_VERTICES: usize = 16;
const ORACLE_PAIRS: usize = 500;
const DICHOTOMY_TRIALS: usize = 1000;
const SEED: u64 = 0x5167_5717;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(passed: bool, detail: String) -> Self {
        Check { passed, detail }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.detail, if self.passed { "PASS" } else { "FAIL" })
    }
}

struct Expected {
    orbits: usize,
    /// `(count, size)` pairs.
    sizes: Option<&'static [(usize, usize)]>,
    mu: Option<&'static [usize]>,
}

/// Published classifications that a run can be held against.
fn expected(source: &GraphSource) -> Option<Expected> {
    match source {
        GraphSource::Complete(5) => Some(Expected {
            orbits: 7,
            sizes: Some(&[(2, 1), (2, 10), (1, 12), (2, 15)]),
            mu: Some(&[0, 1, 2, 2, 3, 3, 4]),
        }),
        GraphSource::Petersen { n: 7, k: 2 } => {
            Some(Expected { orbits: 36, sizes: Some(&[(4, 1), (28, 7), (4, 14)]), mu: None })
        }
        GraphSource::Petersen { n: 5, k: 2 } => Some(Expected { orbits: 6, sizes: None, mu: None }),
        _ => None,
    }
}

fn classification_checks(loaded: &LoadedGraph) -> Result<Vec<Check>, CliError> {
    let c = Classification::new(loaded)?;
    let label = &c.label;
    let mut checks = Vec::new();
    let count = c.orbits.len();
    if let Some(exp) = expected(&loaded.source) {
        checks.push(Check::new(count == exp.orbits, format!("{label} orbits: {count} (expected {})", exp.orbits)));
        if let Some(sizes) = exp.sizes {
            let want = size_summary(sizes.iter().flat_map(|&(count, size)| std::iter::repeat_n(size, count)));
            let got = c.size_summary();
            let note = if got == want { "expected".to_string() } else { format!("expected {want}") };
            checks.push(Check::new(got == want, format!("{label} orbit sizes: {got} ({note})")));
        }
        if let Some(mu) = exp.mu {
            let mut got: Vec<_> = c.orbits.iter().map(|o| o.mu).collect();
            got.sort_unstable();
            checks.push(Check::new(got == mu, format!("{label} mu values: {got:?} (expected {mu:?})")));
        }
    }
    checks.push(Check::new(
        c.burnside == count as u64,
        format!("{label} Burnside count: {} (orbits {count})", c.burnside),
    ));
    let sum: u64 = c.orbits.iter().map(|o| o.size as u64).sum();
    let divides = c.orbits.iter().all(|o| c.group_order % o.size == 0);
    checks.push(Check::new(
        sum == c.classes && divides,
        format!("{label} orbit sizes sum to {sum} of {} classes and divide |Aut| = {}", c.classes, c.group_order),
    ));
    Ok(checks)
}

fn star_masks(g: &Graph) -> Vec<u64> {
    let mut stars = vec![0u64; g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        stars[u] |= 1 << e;
        stars[v] |= 1 << e;
    }
    stars
}

/// Counts switching classes by flooding all `2^m` signings with single-vertex
/// switches and compares with `2^(m-n+c)`.
fn class_count_check(label: &str, g: &Graph) -> Check {
    let (n, m) = (g.vertex_count(), g.edge_count());
    let stars = star_masks(g);
    let mut seen = vec![false; 1 << m];
    let mut found = 0u64;
    let mut stack = Vec::new();
    for start in 0..1usize << m {
        if seen[start] {
            continue;
        }
        found += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(s) = stack.pop() {
            for &star in &stars {
                let t = s ^ star as usize;
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
    }
    let d = m + g.connected_components().count - n;
    Check::new(found == 1 << d, format!("{label} switching classes by exhaustion: {found} (2^(m-n+c) = 2^{d})"))
}

/// `switching_equivalent` against membership of `a ^ b` in the set of all
/// `2^n` vertex cuts, over random pairs of which half are related.
fn cut_space_check(label: &str, g: &Graph, rng: &mut ChaCha8Rng) -> Result<Check, CliError> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    let stars = star_masks(g);
    let cut = |t: u64| (0..n).filter(|v| t >> v & 1 == 1).fold(0u64, |acc, v| acc ^ stars[v]);
    let cuts: HashSet<u64> = (0..1u64 << n).map(cut).collect();
    let mask = if m == 0 { 0 } else { u64::MAX >> (64 - m) };
    let mut agree = 0;
    for trial in 0..ORACLE_PAIRS {
        let a = rng.gen::<u64>() & mask;
        let b = if trial % 2 == 0 { rng.gen::<u64>() & mask } else { a ^ cut(rng.gen::<u64>()) };
        let sa = SignedGraph::new(g, BitVector::from_u64(m, a))?;
        let sb = SignedGraph::new(g, BitVector::from_u64(m, b))?;
        agree += (switching_equivalent(&sa, &sb)? == cuts.contains(&(a ^ b))) as usize;
    }
    Ok(Check::new(
        agree == ORACLE_PAIRS,
        format!("{label} cut-space criterion agrees with brute force: {agree}/{ORACLE_PAIRS} pairs"),
    ))
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Whether the layer dichotomy for signed automorphisms applies: `p` prime,
/// `p >= 7`, `k² ≢ ±1 (mod p)`.
fn dichotomy_applies(n: usize, k: usize) -> bool {
    let r = k * k % n;
    n >= 7 && is_prime(n) && r != 1 && r != n - 1
}

fn dichotomy_check(loaded: &LoadedGraph, n: usize, k: usize, rng: &mut ChaCha8Rng) -> Result<Check, CliError> {
    let g = &loaded.graph;
    let m = g.edge_count();
    let group = loaded.automorphisms()?;
    let action = SwitchingAction::new(g, &group)?;
    let layers = gp_edge_layers(g, n, k)?;
    let mut constant = Vec::new();
    for mask in 0..8 {
        let s = SignedGraph::new(g, layers.layer_signing(m, mask))?;
        constant.push(action.signed_automorphism_group(&s)?.order());
    }
    let mut largest = 0;
    let mut trials = 0;
    while trials < DICHOTOMY_TRIALS {
        let signs = BitVector::from_bools(&(0..m).map(|_| rng.gen()).collect::<Vec<bool>>());
        if layers.is_monochromatic(&signs) {
            continue;
        }
        trials += 1;
        largest = largest.max(action.signed_automorphism_group(&SignedGraph::new(g, signs)?)?.order());
    }
    let passed = constant.iter().all(|&o| o == 2 * n) && largest <= 2;
    let detail = format!(
        "{} signed automorphisms: layer-constant orders {}, largest of {DICHOTOMY_TRIALS} others {largest} (expected {} and <= 2)",
        loaded.label(),
        size_summary(constant),
        2 * n
    );
    Ok(Check::new(passed, detail))
}

fn lower_bound_check(n: usize) -> Result<Check, CliError> {
    let delta = n / 4 - 1;
    let expected = if n == 8 { 5 } else { 1 };
    let result = verify_lower_bound(n)?;
    let iso = if result.verified { "pairwise non-isomorphic" } else { "NOT pairwise non-isomorphic" };
    let mut detail = format!("ψ({n},{delta})={}, {iso}", result.bound);
    if result.bound != expected {
        detail.push_str(&format!(" (expected ψ={expected})"));
    }
    Ok(Check::new(result.verified && result.bound == expected, detail))
}

fn graph_checks(loaded: &LoadedGraph, rng: &mut ChaCha8Rng) -> Result<Vec<Check>, CliError> {
    let g = &loaded.graph;
    let label = loaded.label();
    let mut checks = Vec::new();
    if g.edge_count() <= EXHAUSTIVE_MAX_EDGES {
        checks.push(class_count_check(&label, g));
    }
    if g.vertex_count() <= BRUTE_SWITCH_MAX_VERTICES && g.edge_count() <= 64 {
        checks.push(cut_space_check(&label, g, rng)?);
    }
    checks.extend(classification_checks(loaded)?);
    if let GraphSource::Petersen { n, k } = loaded.source {
        if dichotomy_applies(n, k) {
            checks.push(dichotomy_check(loaded, n, k, rng)?);
        }
    }
    Ok(checks)
}

/// Checks for one graph.
pub fn graph_suite(loaded: &LoadedGraph) -> Result<Vec<Check>, CliError> {
    graph_checks(loaded, &mut ChaCha8Rng::seed_from_u64(SEED))
}

/// The built-in suite: the published classifications, class counting, the
/// cut-space criterion, the signed automorphism dichotomy and the
/// complete-graph lower bound.
pub fn default_suite() -> Result<Vec<Check>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checks = Vec::new();
    for spec in ["k:4", "k:5", "gp:5:2", "gp:7:2"] {
        checks.extend(graph_checks(&load(&spec.parse().expect("valid spec"))?, &mut rng)?);
    }
    let gp11 = load(&GraphSource::Petersen { n: 11, k: 2 })?;
    checks.push(dichotomy_check(&gp11, 11, 2, &mut rng)?);
    for n in 4..=8 {
        checks.push(lower_bound_check(n)?);
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_check_renders_fail() {
        assert_eq!(Check::new(false, "x: 1 (expected 2)".into()).to_string(), "x: 1 (expected 2): FAIL");
    }

    #[test]
    fn dichotomy_conditions() {
        assert!(dichotomy_applies(7, 2));
        assert!(dichotomy_applies(11, 2));
        assert!(!dichotomy_applies(5, 2));
        assert!(!dichotomy_applies(13, 5));
        assert!(!dichotomy_applies(9, 2));
        assert!(!dichotomy_applies(7, 1));
    }

    #[test]
    fn lines_read_as_expected() {
        let line = lower_bound_check(8).unwrap().to_string();
        assert_eq!(line, "ψ(8,1)=5, pairwise non-isomorphic: PASS");
        let k5 = graph_suite(&load(&GraphSource::Complete(5)).unwrap()).unwrap();
        assert!(k5.iter().all(|c| c.passed), "{k5:?}");
        assert!(k5.iter().any(|c| c.to_string() == "K5 orbits: 7 (expected 7): PASS"));
    }

    #[test]
    fn gp72_size_line() {
        let checks = graph_suite(&load(&"gp:7:2".parse().unwrap()).unwrap()).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        assert!(checks.iter().any(|c| c.to_string() == "GP(7,2) orbit sizes: 4×1, 28×7, 4×14 (expected): PASS"));
    }
}
