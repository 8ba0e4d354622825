//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the lines appear in the
//! ordinary `cargo test` output. Any failing criterion makes the process
//! exit nonzero.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use anyhow::{ensure, Context, Result};
use compfactor::corpus::CONNECTED_COUNTS;
use compfactor::parse_graph6;
use compfactor_core::builder::find_factor;
use compfactor_core::extremal::{g1, remark31, remark41, remark51};
use compfactor_core::factor::{
    check_thm13, check_thm14, check_thm15, deficiency, extremal_edge_threshold, has_factor_thm11,
    independence_number,
};
use compfactor_core::spectral::{check_lemma21_with_spectrum, check_thm12, laplacian_spectrum};
use compfactor_core::tree::{canonical_code, construct_tr, decode_code, free_trees, validate_base};
use compfactor_core::{
    enumerate_catalog, verify_certificate, BaseTreeWitness, ConditionVerdict, Graph, Limits,
    StandardKind, TreeCatalog, VertexSet, Witness,
};
use rayon::prelude::*;

const CORPUS: &str = include_str!("../data/connected_le8.g6");
const TOL: f64 = 1e-9;

fn corpus() -> Vec<Graph> {
    CORPUS
        .lines()
        .map(|l| parse_graph6(l).expect("bundled corpus parses"))
        .collect()
}

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

fn within(start: Instant, limit: Duration) -> Result<Duration> {
    let took = start.elapsed();
    ensure!(took < limit, "took {took:?}, limit {limit:?}");
    Ok(took)
}

fn set(vs: impl IntoIterator<Item = usize>) -> VertexSet {
    vs.into_iter().collect()
}

fn criterion_1() -> Result<String> {
    let start = Instant::now();
    let g = remark31(9, 2, 1)?;
    // K1 ∨ (K5 ∪ 3K1): C(6,2) edges in the K6 part plus the three pendant edges
    ensure!(g.order() == 9);
    ensure!(g.size() == 18 && binom2(6) + 3 == 18, "m = {}", g.size());
    ensure!(extremal_edge_threshold(9, 2, 1)? == 18);
    let v = check_thm13(&g, 2, 1, &Limits::default())?;
    ensure!(
        v.applicable() && v.holds() == Some(false),
        "edge-count verdict {v:?}"
    );
    let r = deficiency(&g, 2)?;
    ensure!(r.value == 1, "deficiency {}", r.value);
    ensure!(r.best_set == set([0]), "maximizer {:?}", r.best_set);
    // floor(2.5 * 1) + 1 = 3
    ensure!(r.isolated == 3, "i = {}", r.isolated);
    let catalog = enumerate_catalog(2, 9)?;
    ensure!(
        find_factor(&g, 2, &catalog)?.is_none(),
        "search found a factor"
    );
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!(
        "m = threshold = 18, deficiency 1 at S = {{0}}, i = 3, no factor ({took:.0?})"
    ))
}

fn criterion_2() -> Result<String> {
    let start = Instant::now();
    let k = 2;
    let mut notes = Vec::new();
    for delta in [1, 3] {
        let g = remark41(k, delta)?;
        let n = g.order();
        ensure!((2 * k + 3) * delta == 2 * n - 1, "delta {delta}: n = {n}");
        let leaves: Vec<usize> = (delta..n).collect();
        ensure!(leaves.iter().all(|&v| g.degree(v) == delta));
        ensure!(g.min_degree()? == delta);
        let v = check_thm14(&g, k, &Limits::default())?;
        match v.witness() {
            Some(Witness::IndependentSet { vertices, degrees }) => {
                ensure!(
                    v.holds() == Some(false),
                    "delta {delta}: degree condition holds"
                );
                ensure!(*vertices == leaves, "delta {delta}: witness {vertices:?}");
                let max = *degrees.iter().max().context("empty witness")?;
                ensure!(
                    (2 * k + 3) * max == 2 * n - 1,
                    "delta {delta}: max degree {max}"
                );
            }
            other => anyhow::bail!("delta {delta}: unexpected verdict {other:?}"),
        }
        let r = deficiency(&g, k)?;
        ensure!(r.value > 0, "delta {delta}: deficiency {}", r.value);
        let catalog = enumerate_catalog(k, n)?;
        ensure!(
            find_factor(&g, k, &catalog)?.is_none(),
            "delta {delta}: factor found"
        );
        notes.push(format!(
            "delta {delta}: n = {n}, 7*delta = 2n-1, deficiency {}",
            r.value
        ));
    }
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!("{} ({took:.0?})", notes.join("; ")))
}

fn criterion_3() -> Result<String> {
    let start = Instant::now();
    let mut notes = Vec::new();
    for k in [2, 3] {
        for t in [0, 1] {
            let g = remark51(k, t)?;
            let delta = g.min_degree()?;
            let alpha = independence_number(&g)?;
            ensure!(delta == 2 + 2 * t, "k {k} t {t}: delta {delta}");
            ensure!(
                alpha == (1 + t) * (2 * k + 1) + 1,
                "k {k} t {t}: alpha {alpha}"
            );
            ensure!((2 * k + 1) * delta == 2 * alpha - 2);
            let v = check_thm15(&g, k, &Limits::default())?;
            ensure!(v.holds() == Some(false), "k {k} t {t}: {v:?}");
            let r = deficiency(&g, k)?;
            ensure!(r.value == 2, "k {k} t {t}: deficiency {}", r.value);
            ensure!(
                r.best_set == VertexSet::full(2 + 2 * t),
                "k {k} t {t}: maximizer {:?}",
                r.best_set
            );
            if g.order() <= Limits::default().factor {
                let catalog = enumerate_catalog(k, g.order())?;
                ensure!(
                    find_factor(&g, k, &catalog)?.is_none(),
                    "k {k} t {t}: factor found"
                );
            }
            notes.push(format!("(k={k},t={t}) delta {delta} alpha {alpha}"));
        }
    }
    let took = within(start, Duration::from_secs(5))?;
    Ok(format!(
        "{}; deficiency 2 at the clique ({took:.0?})",
        notes.join(", ")
    ))
}

fn criterion_4(graphs: &[Graph]) -> Result<String> {
    let start = Instant::now();
    let counts: Vec<usize> = (1..=8)
        .map(|n| graphs.iter().filter(|g| g.order() == n).count())
        .collect();
    ensure!(
        counts == CONNECTED_COUNTS[1..=8],
        "corpus counts {counts:?}"
    );
    ensure!(graphs.iter().all(Graph::is_connected));
    let catalog = enumerate_catalog(2, 8)?;
    let outcomes: Vec<Result<(bool, bool)>> = graphs
        .par_iter()
        .map(|g| {
            let exact = has_factor_thm11(g, 2)?;
            let found = match find_factor(g, 2, &catalog)? {
                Some(cert) => {
                    verify_certificate(g, 2, &cert, &catalog)
                        .map_err(|e| anyhow::anyhow!("{e}"))?;
                    true
                }
                None => false,
            };
            Ok((exact, found))
        })
        .collect();
    let mut disagreements = 0;
    let mut with_factor = 0;
    for o in outcomes {
        let (exact, found) = o?;
        disagreements += usize::from(exact != found);
        with_factor += usize::from(exact);
    }
    ensure!(disagreements == 0, "{disagreements} disagreements");
    Ok(format!(
        "{} graphs, {with_factor} with a factor, 0 disagreements, all certificates verify ({:.1?})",
        graphs.len(),
        start.elapsed()
    ))
}

fn sufficient_verdicts(g: &Graph, k: usize) -> Result<Vec<ConditionVerdict>> {
    let limits = Limits::default();
    let mut out = vec![check_thm12(g, k, TOL)?];
    for t in 1..k {
        out.push(check_thm13(g, k, t, &limits)?);
    }
    out.push(check_thm14(g, k, &limits)?);
    out.push(check_thm15(g, k, &limits)?);
    Ok(out)
}

/// Seeded supplement with orders 9..=12: the edge-count condition needs
/// `n ≥ 9` at `k = 2`, so the corpus alone never exercises it.
fn supplement() -> Vec<Graph> {
    (0..2000u64)
        .map(|i| {
            let n = 9 + (i % 4) as usize;
            let p = 0.3 + 0.65 * ((i / 4) % 14) as f64 / 13.0;
            Graph::random_gnp(n, p, i).expect("valid probability")
        })
        .collect()
}

fn criterion_5(graphs: &[Graph]) -> Result<String> {
    let start = Instant::now();
    let extra = supplement();
    let mut notes = Vec::new();
    let mut total_counterexamples = 0;
    for k in [2, 3] {
        let catalog = enumerate_catalog(k, 12)?;
        let rows: Vec<Result<(Vec<ConditionVerdict>, bool)>> = graphs
            .par_iter()
            .chain(extra.par_iter())
            .map(|g| {
                let verdicts = sufficient_verdicts(g, k)?;
                let exact = has_factor_thm11(g, k)?;
                if verdicts.iter().any(ConditionVerdict::implies_factor) {
                    let cert = find_factor(g, k, &catalog)?
                        .context("condition holds but search found nothing")?;
                    verify_certificate(g, k, &cert, &catalog)
                        .map_err(|e| anyhow::anyhow!("{e}"))?;
                }
                Ok((verdicts, exact))
            })
            .collect();
        let mut holds = std::collections::BTreeMap::<String, (usize, usize)>::new();
        let mut counterexamples = 0;
        for row in rows {
            let (verdicts, exact) = row?;
            for v in &verdicts {
                let e = holds.entry(v.theorem.to_string()).or_default();
                e.0 += usize::from(v.applicable());
                e.1 += usize::from(v.implies_factor());
                counterexamples += usize::from(v.implies_factor() && !exact);
            }
        }
        total_counterexamples += counterexamples;
        let tallies: Vec<String> = holds
            .iter()
            .map(|(t, (a, h))| format!("{t}: {h}/{a} hold"))
            .collect();
        notes.push(format!(
            "k={k} [{}] {counterexamples} counterexamples",
            tallies.join(", ")
        ));
        if k == 2 {
            let (_, edge_holds) = holds.get("1.3").copied().unwrap_or_default();
            ensure!(
                edge_holds > 0,
                "edge-count condition never held; the check would be vacuous"
            );
        }
    }
    ensure!(
        total_counterexamples == 0,
        "{total_counterexamples} counterexamples: {}",
        notes.join("; ")
    );
    Ok(format!(
        "{} corpus + {} seeded graphs (n = 9..12); {} ({:.1?})",
        graphs.len(),
        extra.len(),
        notes.join("; "),
        start.elapsed()
    ))
}

/// Smallest `n` with `2kn ≥ (2k²+5k+1)t + k²+5k+2`.
fn thm13_min_order(k: usize, t: usize) -> usize {
    ((2 * k * k + 5 * k + 1) * t + k * k + 5 * k + 2).div_ceil(2 * k)
}

fn criterion_6() -> Result<String> {
    let mut checked = 0;
    let mut strict = 0;
    for k in 2..=5 {
        for t in 1..k {
            for s in t + 1..=t + 6 {
                let lo = thm13_min_order(k, t).max((2 * k + 3) * s / 2 + 1);
                for n in lo..=lo + 10 {
                    let g = g1(n, k, s)?;
                    let n1 = n - (2 * k + 3) * s / 2 - 1;
                    let m_formula = binom2(s + n1) + s * ((2 * k + 1) * s / 2 + 1);
                    ensure!(
                        g.size() == m_formula,
                        "G1({n},{k},{s}): m = {} vs {m_formula}",
                        g.size()
                    );
                    let threshold = extremal_edge_threshold(n, k, t)? as i64;
                    let gap = threshold - g.size() as i64;
                    ensure!(gap >= 0, "k {k} t {t} s {s} n {n}: gap {gap}");
                    if s >= t + 2 {
                        ensure!(gap > 0, "k {k} t {t} s {s} n {n}: gap 0 with s >= t+2");
                        strict += 1;
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!(
        "{checked} (k,t,s,n) instances, {strict} strict, 0 violations"
    ))
}

fn closed_form_spectra() -> Result<usize> {
    use std::f64::consts::PI;
    let mut cases = 0;
    for n in 1..=12usize {
        let mut families: Vec<(Graph, Vec<f64>)> = Vec::new();
        let mut kn = vec![n as f64; n - 1];
        kn.push(0.0);
        families.push((Graph::complete(n), kn));
        families.push((
            Graph::standard(StandardKind::Path, n)?,
            (0..n)
                .map(|j| 2.0 - 2.0 * (PI * j as f64 / n as f64).cos())
                .collect(),
        ));
        if n >= 2 {
            let mut star = vec![n as f64];
            star.extend(std::iter::repeat_n(1.0, n - 2));
            star.push(0.0);
            families.push((Graph::standard(StandardKind::Star, n)?, star));
        }
        if n >= 3 {
            families.push((
                Graph::standard(StandardKind::Cycle, n)?,
                (0..n)
                    .map(|j| 2.0 - 2.0 * (2.0 * PI * j as f64 / n as f64).cos())
                    .collect(),
            ));
        }
        for (g, mut want) in families {
            want.sort_by(|a, b| b.total_cmp(a));
            let got = laplacian_spectrum(&g, TOL)?.values;
            ensure!(got.len() == want.len());
            for (a, b) in got.iter().zip(&want) {
                ensure!(
                    (a - b).abs() <= TOL,
                    "n {n}: eigenvalue {a} vs closed form {b}"
                );
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    Graph::new(n, &edges).expect("complement is simple")
}

/// Components of the subgraph induced on `keep` as vertex masks.
fn components(adj: &[u64], keep: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut left = keep;
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        loop {
            let mut grown = comp;
            let mut bits = comp;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                grown |= adj[v] & keep;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

fn separator_partitions(g: &Graph) -> Result<(usize, usize)> {
    let spec = laplacian_spectrum(g, TOL)?;
    let adj = g.adjacency_masks().context("small graph")?;
    let n = g.order();
    let full = (1u64 << n) - 1;
    let (mut checked, mut separator_checked) = (0, 0);
    for s in 0..full {
        let comps = components(&adj, full & !s);
        if comps.len() < 2 {
            continue;
        }
        for pick in 1..(1u32 << comps.len()) - 1 {
            let x: u64 = (0..comps.len())
                .filter(|&i| pick >> i & 1 == 1)
                .map(|i| comps[i])
                .sum();
            let y = full & !s & !x;
            if x.count_ones() > y.count_ones() {
                continue;
            }
            let o = check_lemma21_with_spectrum(
                g,
                &spec,
                &VertexSet::from_mask(s),
                &VertexSet::from_mask(x),
                &VertexSet::from_mask(y),
            )?;
            ensure!(o.size_bound, "size bound fails: S {s:#b} X {x:#b}");
            ensure!(
                o.separator_bound != Some(false),
                "separator bound fails: S {s:#b} X {x:#b}"
            );
            checked += 1;
            separator_checked += usize::from(o.separator_bound.is_some());
        }
    }
    Ok((checked, separator_checked))
}

fn criterion_7(graphs: &[Graph]) -> Result<String> {
    let start = Instant::now();
    let cases = closed_form_spectra()?;

    // the corpus is all connected, so complements supply disconnected graphs
    let probes: Vec<Graph> = graphs
        .iter()
        .flat_map(|g| [g.clone(), complement(g)])
        .collect();
    let mismatches = probes
        .par_iter()
        .map(|g| -> Result<usize> {
            let spec = laplacian_spectrum(g, TOL)?;
            let positive = spec.second_smallest().is_some_and(|mu| mu > TOL);
            Ok(usize::from(
                positive != (g.is_connected() && g.order() >= 2),
            ))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum::<usize>();
    let disconnected = probes.iter().filter(|g| !g.is_connected()).count();
    ensure!(
        mismatches == 0,
        "{mismatches} graphs where mu_(n-1) > tol disagrees with connectivity"
    );

    let counts = graphs
        .par_iter()
        .filter(|g| g.size() >= 1)
        .map(separator_partitions)
        .collect::<Result<Vec<_>>>()?;
    let partitions: usize = counts.iter().map(|c| c.0).sum();
    let separator: usize = counts.iter().map(|c| c.1).sum();
    ensure!(partitions > 0);
    Ok(format!(
        "{cases} closed-form spectra within {TOL:e}; connectivity agrees on {} graphs ({disconnected} disconnected); \
         {partitions} separator partitions, both bounds hold ({separator} with mu_1 > mu_(n-1)) ({:.1?})",
        probes.len(),
        start.elapsed()
    ))
}

fn catalog_closure(catalog: &TreeCatalog, k: usize) -> Result<usize> {
    let mut checked = 0;
    for (order, code, w) in catalog.iter() {
        let t = construct_tr(w, k);
        ensure!(t.order() == order && t.is_tree(), "member {code}");
        ensure!(
            canonical_code(&t)? == code,
            "member {code} does not reproduce its code"
        );
        ensure!(
            canonical_code(&decode_code(code)?)? == code,
            "member {code} does not decode"
        );
        pendant_invariant(w, k, code)?;
        checked += 1;
    }
    Ok(checked)
}

/// Every trimmed vertex of trimmed degree `2r+1` ends with exactly `k − r`
/// pendant leaves, and every trimmed edge is subdivided once.
fn pendant_invariant(w: &BaseTreeWitness, k: usize, code: &str) -> Result<()> {
    let t = construct_tr(w, k);
    ensure!(
        t.is_tree() && t.order() == w.member_order(k),
        "member {code}"
    );
    let tt = w.trimmed.order();
    for x in 0..tt {
        let r = (w.trimmed.degree(x) - 1) / 2;
        let pendant = t.neighbors(x).iter().filter(|&u| t.degree(u) == 1).count();
        ensure!(
            pendant == k - r,
            "member {code}: vertex {x} has {pendant} leaves, want {}",
            k - r
        );
        ensure!(w.leaf_counts[x] <= k - r, "member {code}: leaf budget");
    }
    // every vertex outside the trimmed tree is a subdivision vertex or a leaf
    ensure!((tt..t.order()).all(|v| t.degree(v) <= 2));
    ensure!((tt..tt + w.trimmed.size()).all(|v| t.degree(v) == 2));
    Ok(())
}

fn criterion_8() -> Result<String> {
    let start = Instant::now();
    ensure!(
        enumerate_catalog(2, 6)?.is_empty(),
        "catalog(2, 6) is not empty"
    );
    let c27 = enumerate_catalog(2, 7)?;
    ensure!(
        c27.len() == 1 && c27.count_at(7) == 1,
        "catalog(2, 7) has {} members",
        c27.len()
    );
    let (_, code, _) = c27.iter().next().context("member")?;
    let tree = decode_code(code)?;
    let mut degrees = tree.degrees();
    degrees.sort_unstable();
    ensure!(degrees == [1, 1, 1, 1, 2, 3, 3], "degrees {degrees:?}");
    // the two branch vertices are joined through one subdivision vertex
    let branch: Vec<usize> = (0..7).filter(|&v| tree.degree(v) == 3).collect();
    let middle = tree
        .neighbors(branch[0])
        .intersection(tree.neighbors(branch[1]));
    ensure!(middle.len() == 1 && tree.degree(middle.iter().next().unwrap_or(0)) == 2);
    let c39 = enumerate_catalog(3, 9)?;
    ensure!(
        c39.len() == 1 && c39.count_at(9) == 1,
        "catalog(3, 9) has {} members",
        c39.len()
    );

    let mut members = 0;
    for (k, max_order) in [(2, 16), (3, 16), (4, 16), (5, 14)] {
        members += catalog_closure(&enumerate_catalog(k, max_order)?, k)?;
    }
    // catalogs stay small at these orders, so also check every admissible
    // base tree directly
    let mut bases = 0;
    for level in free_trees(12) {
        for (code, r) in &level {
            for k in 2..=5 {
                if let Ok(w) = validate_base(r, k) {
                    pendant_invariant(&w, k, code)?;
                    bases += 1;
                }
            }
        }
    }
    let took = within(start, Duration::from_secs(30))?;
    Ok(format!(
        "catalog(2,6) empty; catalog(2,7) = {{{code}}}; catalog(3,9) one member; \
         catalog closure on {members} members; pendant invariant on {bases} admissible (base, k) pairs up to order 12 ({took:.1?})"
    ))
}

fn main() {
    let graphs = corpus();
    type Criterion<'a> = Box<dyn Fn() -> Result<String> + 'a>;
    let criteria: Vec<(&str, Criterion)> = vec![
        ("1 edge-count sharpness", Box::new(criterion_1)),
        ("2 degree sharpness", Box::new(criterion_2)),
        ("3 independence sharpness", Box::new(criterion_3)),
        (
            "4 exact criterion vs explicit search",
            Box::new(|| criterion_4(&graphs)),
        ),
        ("5 soundness chain", Box::new(|| criterion_5(&graphs))),
        ("6 G1 edge counts vs threshold", Box::new(criterion_6)),
        ("7 spectral suite", Box::new(|| criterion_7(&graphs))),
        ("8 tree family", Box::new(criterion_8)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(anyhow::anyhow!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {name}: PASS: {detail}"),
            Err(e) => {
                failed += 1;
                println!("criterion {name}: FAIL: {e:#}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
