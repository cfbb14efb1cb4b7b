//! Sound non-Gorenstein certificates.
//!
//! Three testers share a certificate format:
//!
//! * [`gors_test`] — closed form for socle degree 4: a generic linear
//!   section of `(1, r, h, r, 1)` has Hilbert function `(1, r-1, s-u, s)`
//!   with `u = r - h` and `s` at most Green's bound `g = ((r)_(3))^{-1}_0`;
//!   Macaulay's bound applied to the section at the extremal `s = g` must
//!   succeed, so `((g - u)_(2))^{+1}_{+1} < g` refutes the candidate.
//! * [`gorf_test`] — the socle-degree-5 analogue with `g = ((r)_(4))^{-1}_0`
//!   and a two-step growth `((g - u)_(2))^{+2}_{+2} < g`.
//! * [`section_eliminate`] — a branch-and-prune search over *all*
//!   decompositions `H_k = M_{k-1} + B_k` of a symmetric candidate into a
//!   symmetric socle-degree-(d-1) middle `M` (the generic-section colon
//!   algebra, itself Gorenstein) and a quotient line `B` constrained by
//!   Green's bound degreewise and by Macaulay growth as an O-sequence.
//!   Feasible middles are tested by the closed forms (socle 4/5), accepted
//!   structurally (socle <= 3), or recursed on (socle >= 6, depth-limited).
//!
//! The contract is sound-only: `Eliminated` certificates replay exactly;
//! `Pass` and `Unknown` carry no claim of Gorenstein existence.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::{binom_u64, expand, green_bound, macaulay_bound};
use crate::sequences::HilbertCandidate;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Eliminated,
    Pass,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rule {
    Gors,
    Gorf,
    SectionSearch,
    CitedFact,
}

/// One replayable arithmetic step.  `desc` starts with a stable tag token;
/// `values` are decimal integers in a tag-specific order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub desc: String,
    pub values: Vec<String>,
}

impl Step {
    fn new(desc: impl Into<String>, values: &[&BigInt]) -> Self {
        Step {
            desc: desc.into(),
            values: values.iter().map(|v| v.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationCertificate {
    pub candidate: Vec<String>,
    pub verdict: Verdict,
    pub rule: Rule,
    pub steps: Vec<Step>,
    pub depth: u32,
}

impl EliminationCertificate {
    pub fn candidate_entries(&self) -> Result<Vec<BigInt>> {
        self.candidate
            .iter()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad candidate entry `{t}`")))
            })
            .collect()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }
}

fn candidate_strings(entries: &[BigInt]) -> Vec<String> {
    entries.iter().map(|e| e.to_string()).collect()
}

/// Closed-form test shared by socle degrees 4 and 5.
///
/// `section_degree` is `d - 1` (3 or 4); `growth_shift` is 1 or 2.
fn closed_form(r: &BigInt, h: &BigInt, socle: u32) -> Result<EliminationCertificate> {
    if !r.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "codimension must be positive (got {r})"
        )));
    }
    if h > r {
        return Err(Error::InvalidArgument(format!(
            "middle entry {h} exceeds codimension {r}; the closed-form test assumes u = r - h >= 0"
        )));
    }
    let (rule, section_degree, growth_shift) = match socle {
        4 => (Rule::Gors, 3u32, 1i64),
        5 => (Rule::Gorf, 4u32, 2i64),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "no closed-form test for socle degree {socle}"
            )))
        }
    };
    let candidate = if socle == 4 {
        vec![
            BigInt::one(),
            r.clone(),
            h.clone(),
            r.clone(),
            BigInt::one(),
        ]
    } else {
        vec![
            BigInt::one(),
            r.clone(),
            h.clone(),
            h.clone(),
            r.clone(),
            BigInt::one(),
        ]
    };
    let u = r - h;
    let g = green_bound(r.clone(), section_degree)?;
    let v: BigInt = &g - &u;
    let mut steps = Vec::new();
    let expansion = expand(r.clone(), section_degree)?;
    steps.push(Step::new(
        format!("green: section entry bound g = (({r})_({section_degree}))^-1_0 with {expansion}"),
        &[r, &BigInt::from(section_degree), &g],
    ));
    steps.push(Step::new(
        "section: u = r - h, extremal section middle v = g - u".to_string(),
        &[&u, &v],
    ));
    let eliminated = if v.is_negative() {
        steps.push(Step::new(
            "negative: extremal section entry below zero",
            &[&v],
        ));
        true
    } else {
        let w = expand(v.clone(), 2)?.shift(growth_shift, growth_shift);
        steps.push(Step::new(
            format!("growth: ((v)_(2))^{growth_shift}_{growth_shift} = {w} vs g = {g}"),
            &[&v, &w, &g],
        ));
        w < g
    };
    Ok(EliminationCertificate {
        candidate: candidate_strings(&candidate),
        verdict: if eliminated {
            Verdict::Eliminated
        } else {
            Verdict::Pass
        },
        rule,
        steps,
        depth: 0,
    })
}

/// Socle-degree-4 test on `(1, r, h, r, 1)`.  Requires `h <= r`.
pub fn gors_test(r: &BigInt, h: &BigInt) -> Result<EliminationCertificate> {
    closed_form(r, h, 4)
}

/// Socle-degree-5 test on `(1, r, h, h, r, 1)`.  Requires `h <= r`.
pub fn gorf_test(r: &BigInt, h: &BigInt) -> Result<EliminationCertificate> {
    closed_form(r, h, 5)
}

/// Verifies `((C(k+1, 2))_(d-k))^{-1}_0 <= k - 2` for `2 <= k <= d/2`.
///
/// This inequality drives the general-socle-degree minimality argument; the
/// sweep over a grid is its mechanized check.  It fails at exactly
/// `(k, d) = (2, 4)`, where the left side is 1.
pub fn tec_check(k: u32, d: u32) -> Result<bool> {
    if d < 4 {
        return Err(Error::InvalidArgument(format!(
            "tec check requires d >= 4 (got {d})"
        )));
    }
    if k < 2 || k > d / 2 {
        return Err(Error::InvalidArgument(format!(
            "tec check requires 2 <= k <= d/2 (got k={k}, d={d})"
        )));
    }
    let value = expand(binom_u64(k as u64 + 1, 2), d - k)?.shift(-1, 0);
    Ok(value <= BigInt::from(k as i64 - 2))
}

/// Options for [`section_eliminate`].
#[derive(Debug, Clone, Copy)]
pub struct SectionOptions {
    pub max_depth: u32,
    pub branch_cap: u64,
}

impl Default for SectionOptions {
    fn default() -> Self {
        SectionOptions {
            max_depth: 2,
            branch_cap: 1_000_000,
        }
    }
}

struct SectionSearch<'a> {
    h: &'a [BigInt],
    d: usize,
    free: usize,
    green_caps: Vec<BigInt>,
    opts: SectionOptions,
    nodes: u64,
    steps: Vec<Step>,
    survivor: Option<Vec<BigInt>>,
    saw_unresolved: bool,
    cap_hit: bool,
}

enum LeafOutcome {
    Dead,
    Survivor,
    Unresolved,
}

impl<'a> SectionSearch<'a> {
    /// Base range of `M_j` from nonnegativity and the Green caps on the two
    /// section entries it determines; independent of earlier choices.
    fn base_range(&self, j: usize) -> (BigInt, BigInt) {
        let d = self.d;
        let mut lo = BigInt::zero();
        let mut hi = self.h[d - j].clone();
        if hi > self.h[j + 1] {
            hi = self.h[j + 1].clone();
        }
        let from_high = &self.h[d - j] - &self.green_caps[d - j];
        let from_low = &self.h[j + 1] - &self.green_caps[j + 1];
        if from_high > lo {
            lo = from_high;
        }
        if from_low > lo {
            lo = from_low;
        }
        (lo, hi)
    }

    /// Largest `m` in `[lo, hi]` with
    /// `((H_(d-j) - m)_(d-j))^{+1}_{+1} >= B_(d-j+1)`, or `None`.  The bound
    /// is monotone decreasing in `m`, so binary search applies.
    fn clip_upper_by_growth(
        &self,
        j: usize,
        b_next: &BigInt,
        lo: &BigInt,
        hi: &BigInt,
    ) -> Result<Option<BigInt>> {
        let d = self.d;
        let degree = (d - j) as u32;
        let fits = |m: &BigInt| -> Result<bool> {
            let b = &self.h[d - j] - m;
            Ok(macaulay_bound(b, degree)? >= *b_next)
        };
        if !fits(lo)? {
            return Ok(None);
        }
        let mut good = lo.clone();
        let mut bad = hi.clone() + 1u32;
        if fits(hi)? {
            return Ok(Some(hi.clone()));
        }
        // Invariant: fits(good), !fits(bad).
        while &good + 1u32 < bad {
            let mid: BigInt = (&good + &bad) / 2u32;
            if fits(&mid)? {
                good = mid;
            } else {
                bad = mid;
            }
        }
        Ok(Some(good))
    }

    fn middle_vector(&self, chosen: &[BigInt]) -> Vec<BigInt> {
        let len = self.d; // middle has socle degree d-1, so d entries
        let mut m = vec![BigInt::one(); len];
        for (idx, value) in chosen.iter().enumerate() {
            let j = idx + 1;
            m[j] = value.clone();
            m[len - 1 - j] = value.clone();
        }
        m
    }

    fn section_vector(&self, chosen: &[BigInt]) -> Vec<BigInt> {
        let middle = self.middle_vector(chosen);
        let mut b = Vec::with_capacity(self.d + 1);
        b.push(BigInt::one());
        for k in 1..=self.d {
            b.push(&self.h[k] - &middle[k - 1]);
        }
        b
    }

    fn leaf(&mut self, chosen: &[BigInt]) -> Result<LeafOutcome> {
        let middle = self.middle_vector(chosen);
        let section = self.section_vector(chosen);
        let d = self.d;
        // Junction growth pair not covered by the incremental checks when
        // d is even: both endpoints move with the last decision.
        if d.is_multiple_of(2) {
            let k = self.free; // = (d - 1) / 2, junction pair (B_k+1, B_k+2)
            let bound = macaulay_bound(section[k + 1].clone(), (k + 1) as u32)?;
            if section[k + 2] > bound {
                self.steps.push(Step::new(
                    "prune-junction: section growth violated at midpoint",
                    &[
                        &BigInt::from(k as u64 + 1),
                        &section[k + 1],
                        &section[k + 2],
                        &bound,
                    ],
                ));
                return Ok(LeafOutcome::Dead);
            }
        }
        let middle_candidate = HilbertCandidate::new(middle.clone());
        if !middle_candidate.is_o_sequence() {
            self.steps.push(Step::new(
                "middle-oseq-fail: middle is not an O-sequence",
                &middle.iter().collect::<Vec<_>>(),
            ));
            return Ok(LeafOutcome::Dead);
        }
        let middle_socle = d - 1;
        match middle_socle {
            0..=3 => {
                self.steps.push(Step::new(
                    "middle-weak: socle degree <= 3 middle accepted structurally",
                    &middle.iter().collect::<Vec<_>>(),
                ));
                self.record_survivor(&middle, &section);
                Ok(LeafOutcome::Survivor)
            }
            4 | 5 => {
                let (r, h) = (&middle[1], &middle[2]);
                if h > r {
                    self.steps.push(Step::new(
                        "middle-weak: closed form needs h <= r; middle accepted",
                        &middle.iter().collect::<Vec<_>>(),
                    ));
                    self.record_survivor(&middle, &section);
                    return Ok(LeafOutcome::Survivor);
                }
                let sub = closed_form(r, h, middle_socle as u32)?;
                let mut values: Vec<&BigInt> = vec![r, h];
                let parsed: Vec<BigInt> = sub
                    .steps
                    .iter()
                    .flat_map(|s| s.values.iter().map(|v| v.parse().unwrap()))
                    .collect();
                values.extend(parsed.iter());
                match sub.verdict {
                    Verdict::Eliminated => {
                        self.steps
                            .push(Step::new("middle-closed: eliminated", &values));
                        Ok(LeafOutcome::Dead)
                    }
                    _ => {
                        self.steps.push(Step::new("middle-closed: passed", &values));
                        self.record_survivor(&middle, &section);
                        Ok(LeafOutcome::Survivor)
                    }
                }
            }
            _ => {
                if self.opts.max_depth <= 1 {
                    self.steps.push(Step::new(
                        "middle-depth: recursion budget exhausted",
                        &middle.iter().collect::<Vec<_>>(),
                    ));
                    self.saw_unresolved = true;
                    return Ok(LeafOutcome::Unresolved);
                }
                let sub_opts = SectionOptions {
                    max_depth: self.opts.max_depth - 1,
                    branch_cap: self.opts.branch_cap,
                };
                let sub = section_eliminate(&middle_candidate, sub_opts)?;
                self.steps.push(Step::new(
                    format!("middle-recursed: verdict {:?}", sub.verdict),
                    &middle.iter().collect::<Vec<_>>(),
                ));
                match sub.verdict {
                    Verdict::Eliminated => Ok(LeafOutcome::Dead),
                    Verdict::Pass => {
                        self.record_survivor(&middle, &section);
                        Ok(LeafOutcome::Survivor)
                    }
                    Verdict::Unknown => {
                        self.saw_unresolved = true;
                        Ok(LeafOutcome::Unresolved)
                    }
                }
            }
        }
    }

    fn record_survivor(&mut self, middle: &[BigInt], section: &[BigInt]) {
        self.steps.push(Step::new(
            "survivor-middle: no in-scope test refutes this branch",
            &middle.iter().collect::<Vec<_>>(),
        ));
        self.steps.push(Step::new(
            "survivor-section: quotient line of the surviving branch",
            &section.iter().collect::<Vec<_>>(),
        ));
        self.survivor = Some(middle.to_vec());
    }

    /// Explores decisions `M_j, M_{j+1}, ...` given `chosen = [M_1..M_{j-1}]`.
    /// Returns `true` when a survivor was found (stops the whole search).
    fn explore(&mut self, j: usize, chosen: &mut Vec<BigInt>) -> Result<bool> {
        if j > self.free {
            return Ok(matches!(self.leaf(chosen)?, LeafOutcome::Survivor));
        }
        let d = self.d;
        let (base_lo, base_hi) = self.base_range(j);
        if chosen.is_empty() {
            self.steps.push(Step::new(
                format!("range: base interval for decision {j}"),
                &[&BigInt::from(j as u64), &base_lo, &base_hi],
            ));
        }
        // Growth of the section below the new low entry: B_(j+1) <= bound
        // from B_j, i.e. a prefix-dependent lower clip on M_j.
        let b_low_neighbor = if j == 1 {
            &self.h[1] - 1u32
        } else {
            &self.h[j] - &chosen[j - 2]
        };
        let low_growth = macaulay_bound(b_low_neighbor.clone(), j as u32)?;
        let mut lo = base_lo.clone();
        let from_growth = &self.h[j + 1] - &low_growth;
        if from_growth > lo {
            lo = from_growth;
        }
        // O-sequence of the middle along the prefix side.
        let mut hi = base_hi.clone();
        if j >= 2 {
            let m_prev = chosen[j - 2].clone();
            let m_cap = macaulay_bound(m_prev, (j - 1) as u32)?;
            if m_cap < hi {
                hi = m_cap;
            }
        }
        // Growth of the section above the new high entry: B_(d-j+1) <= bound
        // from B_(d-j); monotone in M_j, clipped by binary search.
        let b_high_next = if j == 1 {
            BigInt::zero() // B_(d) = 0
        } else {
            &self.h[d - j + 1] - &chosen[j - 2]
        };
        let clipped = if lo <= hi {
            self.clip_upper_by_growth(j, &b_high_next, &lo, &hi)?
        } else {
            None
        };
        let Some(hi) = clipped else {
            self.steps.push(Step::new(
                format!("clip-empty: decision {j} has no feasible value"),
                &[
                    &BigInt::from(j as u64),
                    &b_low_neighbor,
                    &low_growth,
                    &b_high_next,
                    &lo,
                ],
            ));
            return Ok(false);
        };
        self.steps.push(Step::new(
            format!("clip: feasible interval for decision {j}"),
            &[
                &BigInt::from(j as u64),
                &b_low_neighbor,
                &low_growth,
                &b_high_next,
                &lo,
                &hi,
            ],
        ));
        let mut m = lo.clone();
        while m <= hi {
            self.nodes += 1;
            if self.nodes > self.opts.branch_cap {
                self.cap_hit = true;
                self.steps.push(Step::new(
                    "cap-exceeded: node budget exhausted with live branches",
                    &[&BigInt::from(self.opts.branch_cap)],
                ));
                return Ok(false);
            }
            chosen.push(m.clone());
            let found = self.explore(j + 1, chosen)?;
            chosen.pop();
            if found || self.cap_hit {
                return Ok(found);
            }
            m += 1u32;
        }
        Ok(false)
    }
}

/// Branch-and-prune elimination by generic linear sections.
///
/// Enumerates every decomposition of the symmetric candidate into a
/// symmetric middle and an O-sequence quotient line under Green's bounds,
/// in descending order of the top section entry.  `Eliminated` means every
/// branch died; `Pass` records the first surviving branch; `Unknown` means
/// the node budget or recursion depth gave out first.
pub fn section_eliminate(
    candidate: &HilbertCandidate,
    opts: SectionOptions,
) -> Result<EliminationCertificate> {
    let d = candidate.socle_degree();
    if d < 3 {
        return Err(Error::InvalidArgument(format!(
            "section elimination requires socle degree >= 3 (got {d})"
        )));
    }
    if !candidate.is_symmetric() {
        return Err(Error::InvalidArgument(
            "section elimination requires a symmetric candidate".into(),
        ));
    }
    if !candidate.entries[0].is_one() || !candidate.entries[d].is_one() {
        return Err(Error::InvalidArgument(
            "section elimination requires h_0 = h_d = 1".into(),
        ));
    }
    if opts.max_depth == 0 {
        return Err(Error::InvalidArgument("max_depth must be >= 1".into()));
    }
    if opts.branch_cap == 0 {
        return Err(Error::InvalidArgument("branch_cap must be >= 1".into()));
    }
    let mut green_caps = Vec::with_capacity(d + 1);
    green_caps.push(BigInt::zero());
    for k in 1..=d {
        green_caps.push(green_bound(candidate.entries[k].clone(), k as u32)?);
    }
    let mut search = SectionSearch {
        h: &candidate.entries,
        d,
        free: (d - 1) / 2,
        green_caps,
        opts,
        nodes: 0,
        steps: Vec::new(),
        survivor: None,
        saw_unresolved: false,
        cap_hit: false,
    };
    search.steps.push(Step::new(
        "params: depth and node budget",
        &[
            &BigInt::from(opts.max_depth),
            &BigInt::from(opts.branch_cap),
        ],
    ));
    {
        let cap_refs: Vec<&BigInt> = search.green_caps[1..].iter().collect();
        let step = Step::new("green-caps: degreewise section bounds", &cap_refs);
        search.steps.push(step);
    }
    let mut chosen = Vec::new();
    let found = search.explore(1, &mut chosen)?;
    let verdict = if found {
        Verdict::Pass
    } else if search.cap_hit || search.saw_unresolved {
        Verdict::Unknown
    } else {
        Verdict::Eliminated
    };
    Ok(EliminationCertificate {
        candidate: candidate_strings(&candidate.entries),
        verdict,
        rule: Rule::SectionSearch,
        steps: search.steps,
        depth: opts.max_depth,
    })
}

fn parse_values(step: &Step) -> Result<Vec<BigInt>> {
    step.values
        .iter()
        .map(|v| {
            v.parse()
                .map_err(|_| Error::Parse(format!("bad step value `{v}`")))
        })
        .collect()
}

/// Re-checks every arithmetic step of a certificate against the binomial
/// calculus, and re-runs search certificates end to end.  Errors describe
/// the first mismatch.
pub fn replay_certificate(cert: &EliminationCertificate) -> Result<()> {
    let entries = cert.candidate_entries()?;
    match cert.rule {
        Rule::Gors | Rule::Gorf => {
            let (r, h) = (&entries[1], &entries[2]);
            let socle = if cert.rule == Rule::Gors { 4 } else { 5 };
            let fresh = closed_form(r, h, socle)?;
            if fresh != *cert {
                return Err(Error::InvalidArgument(
                    "closed-form certificate does not replay".into(),
                ));
            }
            replay_steps(cert, &entries)
        }
        Rule::SectionSearch => {
            let mut depth = cert.depth;
            let mut cap = SectionOptions::default().branch_cap;
            if let Some(step) = cert.steps.iter().find(|s| s.desc.starts_with("params")) {
                let v = parse_values(step)?;
                depth = u32::try_from(&v[0]).unwrap_or(depth);
                cap = u64::try_from(&v[1]).unwrap_or(cap);
            }
            let fresh = section_eliminate(
                &HilbertCandidate::new(entries.clone()),
                SectionOptions {
                    max_depth: depth,
                    branch_cap: cap,
                },
            )?;
            if fresh != *cert {
                return Err(Error::InvalidArgument(
                    "section certificate does not replay".into(),
                ));
            }
            replay_steps(cert, &entries)
        }
        Rule::CitedFact => Ok(()),
    }
}

/// Arithmetic re-checks per step tag.
fn replay_steps(cert: &EliminationCertificate, entries: &[BigInt]) -> Result<()> {
    let d = entries.len().saturating_sub(1);
    for step in &cert.steps {
        let tag = step.desc.split(':').next().unwrap_or("");
        let v = parse_values(step)?;
        let ok = match tag {
            "green" => {
                let degree = u32::try_from(&v[1])
                    .map_err(|_| Error::Parse("bad degree in green step".into()))?;
                green_bound(v[0].clone(), degree)? == v[2]
            }
            "growth" => {
                // values [v, w, g]; shift amount recovered from the rule
                let shift = if cert.rule == Rule::Gorf || step.desc.contains("^2_2") {
                    2
                } else {
                    1
                };
                expand(v[0].clone(), 2)?.shift(shift, shift) == v[1]
            }
            "negative" => v[0].is_negative(),
            "prune-junction" => {
                let k = u32::try_from(&v[0]).map_err(|_| Error::Parse("bad index".into()))?;
                let bound = macaulay_bound(v[1].clone(), k)?;
                bound == v[3] && v[2] > bound
            }
            "middle-oseq-fail" => !HilbertCandidate::new(v.clone()).is_o_sequence(),
            "clip" | "clip-empty" => {
                let j = u32::try_from(&v[0]).map_err(|_| Error::Parse("bad index".into()))?;
                macaulay_bound(v[1].clone(), j)? == v[2]
            }
            "green-caps" => {
                let mut all = v.len() == d;
                for (k, cap) in v.iter().enumerate() {
                    all = all && green_bound(entries[k + 1].clone(), (k + 1) as u32)? == *cap;
                }
                all
            }
            "middle-closed" => {
                // values: [r, h, <flattened closed-form step values>]
                let socle = (entries.len() - 2) as u32;
                let fresh = closed_form(&v[0], &v[1], socle)?;
                let fresh_flat: Vec<BigInt> = fresh
                    .steps
                    .iter()
                    .flat_map(|s| s.values.iter().map(|t| t.parse().unwrap()))
                    .collect();
                let verdict_matches = if step.desc.contains("eliminated") {
                    fresh.verdict == Verdict::Eliminated
                } else {
                    fresh.verdict == Verdict::Pass
                };
                verdict_matches && v[2..] == fresh_flat[..]
            }
            _ => true, // structural tags carry no independent arithmetic
        };
        if !ok {
            return Err(Error::InvalidArgument(format!(
                "step does not replay: {}",
                step.desc
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perazzo;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn gors(r: i64, h: i64) -> EliminationCertificate {
        gors_test(&big(r), &big(h)).unwrap()
    }

    fn gorf(r: i64, h: i64) -> EliminationCertificate {
        gorf_test(&big(r), &big(h)).unwrap()
    }

    #[test]
    fn gors_eliminates_worked_cases() {
        for (r, h) in [(24, 19), (25, 20), (40, 29), (62, 40)] {
            let cert = gors(r, h);
            assert_eq!(cert.verdict, Verdict::Eliminated, "({r},{h})");
            assert_eq!(cert.rule, Rule::Gors);
        }
        // Recorded arithmetic matches the worked computations.
        let cert = gors(24, 19);
        assert_eq!(cert.steps[0].values[2], "11");
        assert_eq!(cert.steps[2].values[1], "10");
        let cert = gors(62, 40);
        assert_eq!(cert.steps[0].values[2], "38");
        assert_eq!(cert.steps[2].values[1], "36");
    }

    #[test]
    fn gors_passes_feasible_cases() {
        assert_eq!(gors(13, 12).verdict, Verdict::Pass);
        assert_eq!(gors(20, 18).verdict, Verdict::Pass);
    }

    #[test]
    fn gors_rejects_h_above_r() {
        assert!(gors_test(&big(10), &big(11)).is_err());
        assert!(gors_test(&big(0), &big(0)).is_err());
    }

    #[test]
    fn gorf_eliminates_worked_cases() {
        let expected = [
            (39, 29, "16", "15"),
            (75, 49, "36", "35"),
            (132, 76, "71", "70"),
            (217, 111, "128", "127"),
            (338, 155, "212", "211"),
        ];
        for (r, h, g, w) in expected {
            let cert = gorf(r, h);
            assert_eq!(cert.verdict, Verdict::Eliminated, "({r},{h})");
            assert_eq!(cert.steps[0].values[2], g, "green bound at r={r}");
            assert_eq!(cert.steps[2].values[1], w, "growth value at r={r}");
        }
    }

    #[test]
    fn gorf_passes_feasible_cases() {
        assert_eq!(gorf(18, 16).verdict, Verdict::Pass);
        assert_eq!(gorf(39, 30).verdict, Verdict::Pass);
    }

    #[test]
    fn closed_forms_pass_on_perazzo_functions() {
        for m in 2..=10u32 {
            let p4 = perazzo::PerazzoParams::new(m, 4).unwrap();
            let h4 = perazzo::hilbert_function(p4);
            let cert = gors_test(&h4.entries[1], &h4.entries[2]).unwrap();
            assert_eq!(cert.verdict, Verdict::Pass, "gors on full Perazzo m={m}");

            let p5 = perazzo::PerazzoParams::new(m, 5).unwrap();
            let h5 = perazzo::hilbert_function(p5);
            let cert = gorf_test(&h5.entries[1], &h5.entries[2]).unwrap();
            assert_eq!(cert.verdict, Verdict::Pass, "gorf on full Perazzo m={m}");
        }
    }

    #[test]
    fn tec_examples() {
        // ((C(4,2))_(3))^-1_0 = C(3,3) + C(1,2) + C(0,1) = 1 <= 1.
        assert!(tec_check(3, 6).unwrap());
        assert!(tec_check(5, 10).unwrap());
        assert!(tec_check(2, 5).unwrap());
        assert!(tec_check(1, 6).is_err());
        assert!(tec_check(4, 6).is_err());
        assert!(tec_check(2, 3).is_err());
    }

    #[test]
    fn tec_boundary_counterexample_is_pinned() {
        // The k = 2, d = 4 instance genuinely fails: the expansion of
        // C(3,2) = 3 in degree 2 is C(3,2) itself, and shifting gives
        // C(2,2) = 1 > 0 = k - 2.  The sweep over 4 <= d <= 200 finds no
        // other failure.
        assert!(!tec_check(2, 4).unwrap());
        let mut failures = Vec::new();
        for d in 4..=200u32 {
            for k in 2..=d / 2 {
                if !tec_check(k, d).unwrap() {
                    failures.push((k, d));
                }
            }
        }
        assert_eq!(failures, vec![(2, 4)]);
    }

    fn section(entries: &[u64], depth: u32) -> EliminationCertificate {
        section_eliminate(
            &HilbertCandidate::from_u64(entries),
            SectionOptions {
                max_depth: depth,
                branch_cap: 1_000_000,
            },
        )
        .unwrap()
    }

    #[test]
    fn section_rejects_bad_candidates() {
        let asym = HilbertCandidate::from_u64(&[1, 3, 2, 4, 1]);
        assert!(section_eliminate(&asym, SectionOptions::default()).is_err());
        let short = HilbertCandidate::from_u64(&[1, 5, 1]);
        assert!(section_eliminate(&short, SectionOptions::default()).is_err());
        let no_one = HilbertCandidate::from_u64(&[2, 5, 5, 2]);
        assert!(section_eliminate(&no_one, SectionOptions::default()).is_err());
    }

    #[test]
    fn section_never_eliminates_stanley_example() {
        let cert = section(&[1, 13, 12, 13, 1], 2);
        assert_ne!(cert.verdict, Verdict::Eliminated);
        let cert = section(&[1, 13, 12, 13, 1], 4);
        assert_ne!(cert.verdict, Verdict::Eliminated);
    }

    #[test]
    fn section_subsumes_gors_eliminations() {
        for (r, h) in [(24u64, 19u64), (25, 20), (40, 29), (62, 40)] {
            assert_eq!(gors(r as i64, h as i64).verdict, Verdict::Eliminated);
            let cert = section(&[1, r, h, r, 1], 1);
            assert_eq!(
                cert.verdict,
                Verdict::Eliminated,
                "section on (1,{r},{h},{r},1)"
            );
        }
    }

    #[test]
    fn section_passes_on_realizable_functions() {
        for m in 2..=8u32 {
            for d in [4u32, 5] {
                let p = perazzo::PerazzoParams::new(m, d).unwrap();
                let h = perazzo::hilbert_function(p);
                let cert = section_eliminate(&h, SectionOptions::default()).unwrap();
                assert_ne!(cert.verdict, Verdict::Eliminated, "m={m} d={d}");
            }
        }
        // Extensions by power sums stay realizable.
        let p = perazzo::PerazzoParams::new(3, 5).unwrap();
        let extended = perazzo::extend_with_powers(p, 2);
        let cert = section_eliminate(&extended, SectionOptions::default()).unwrap();
        assert_ne!(cert.verdict, Verdict::Eliminated);
    }

    /// The two socle-degree-5 regression candidates have exactly one
    /// in-scope surviving branch each; the closed-form tests sit on their
    /// boundary there, so the complete search reports Pass rather than
    /// Eliminated.  Pinning the survivors documents the gap.
    #[test]
    fn section_survivors_for_socle_five_regressions() {
        let cert = section(&[1, 504, 209, 209, 504, 1], 2);
        assert_eq!(cert.verdict, Verdict::Pass);
        let survivor = cert
            .steps
            .iter()
            .find(|s| s.desc.starts_with("survivor-middle"))
            .expect("survivor recorded");
        assert_eq!(
            survivor.values,
            vec!["1", "171", "86", "171", "1"],
            "extremal feasible middle for the first candidate"
        );

        let cert = section(&[1, 725, 274, 274, 725, 1], 2);
        assert_eq!(cert.verdict, Verdict::Pass);
        let survivor = cert
            .steps
            .iter()
            .find(|s| s.desc.starts_with("survivor-middle"))
            .expect("survivor recorded");
        assert_eq!(survivor.values, vec!["1", "226", "105", "226", "1"]);
    }

    #[test]
    fn section_handles_socle_three() {
        let cert = section(&[1, 5, 5, 1], 2);
        assert_eq!(cert.verdict, Verdict::Pass);
    }

    #[test]
    fn section_unknown_on_tiny_budget() {
        // With one node of budget the first branch dies and the rest are
        // never explored, so the verdict degrades from Eliminated to Unknown.
        let cert = section_eliminate(
            &HilbertCandidate::from_u64(&[1, 24, 19, 24, 1]),
            SectionOptions {
                max_depth: 2,
                branch_cap: 1,
            },
        )
        .unwrap();
        assert_eq!(cert.verdict, Verdict::Unknown);
        // A found survivor still reports Pass regardless of the tiny budget.
        let cert = section_eliminate(
            &HilbertCandidate::from_u64(&[1, 13, 12, 13, 1]),
            SectionOptions {
                max_depth: 2,
                branch_cap: 1,
            },
        )
        .unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
    }

    #[test]
    fn deep_candidates_recurse_or_report_unknown() {
        // Socle degree 6: middles have socle degree 5 and get the closed form.
        let p = perazzo::PerazzoParams::new(3, 6).unwrap();
        let h = perazzo::hilbert_function(p);
        let cert = section_eliminate(&h, SectionOptions::default()).unwrap();
        assert_ne!(cert.verdict, Verdict::Eliminated);
        // Socle degree 7: middles have socle degree 6 and recurse.
        let p = perazzo::PerazzoParams::new(2, 7).unwrap();
        let h = perazzo::hilbert_function(p);
        let cert = section_eliminate(&h, SectionOptions::default()).unwrap();
        assert_ne!(cert.verdict, Verdict::Eliminated);
    }

    #[test]
    fn certificates_replay() {
        for cert in [
            gors(24, 19),
            gors(13, 12),
            gorf(39, 29),
            gorf(18, 16),
            section(&[1, 24, 19, 24, 1], 1),
            section(&[1, 13, 12, 13, 1], 2),
            section(&[1, 504, 209, 209, 504, 1], 2),
        ] {
            replay_certificate(&cert).unwrap();
        }
    }

    #[test]
    fn tampered_certificates_fail_replay() {
        let mut cert = gors(24, 19);
        cert.steps[0].values[2] = "12".into();
        assert!(replay_certificate(&cert).is_err());
        let mut cert = section(&[1, 24, 19, 24, 1], 1);
        cert.verdict = Verdict::Pass;
        assert!(replay_certificate(&cert).is_err());
    }

    #[test]
    fn certificate_json_roundtrip() {
        let cert = gors(24, 19);
        let json = cert.to_json().unwrap();
        let back: EliminationCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(cert, back);
        assert!(json.contains("\"verdict\":\"Eliminated\""));
        assert!(json.contains("\"rule\":\"Gors\""));
    }
}
