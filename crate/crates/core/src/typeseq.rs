//! Type sequences of an embedding and the reduction that drives the
//! optimality argument for the ring-cut half of the wirelength.
//!
//! For an embedding of Q_n into C_{2^{n1}} × P_{2^{n2}}, entry i of the
//! type sequence is Type(f^{-1}(A_i)). A sequence at level (n, n2) is
//! *admissible* when it is circularly continuous at step 2^{n2}, has at
//! least two entries ≥ 2^{n-3} − 2^{n2-1}, and stays within the small-type
//! cap 2^{n-3}. The reduction clamps once, then alternates an evenizing
//! pass with a halving pass until n2 reaches zero, never increasing the
//! (scaled) θ-sum along the way. Every intermediate sequence is recorded so
//! a run can be diffed against worked examples row by row.

use serde::Serialize;

use crate::cylinder::HostKind;
use crate::embedding::EmbeddingMap;
use crate::error::{Error, Result};
use crate::graycode::g_value;
use crate::hypercube::theta_small_type;

/// An integer sequence of length 2^{n1-1} with its ambient level (n, n2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeSeq {
    n: u32,
    n2: u32,
    entries: Vec<u64>,
}

/// Per-property result of the admissibility check.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ConditionReport {
    /// Circular neighbors differ by at most 2^{n2}.
    pub continuity: bool,
    /// At least two entries reach 2^{n-3} − 2^{n2-1}.
    pub two_large_entries: bool,
    /// The large-entry bound is ≤ 0, making that property trivially true.
    pub large_bound_vacuous: bool,
    /// Every entry is at most 2^{n-3}.
    pub within_cap: bool,
}

impl ConditionReport {
    pub fn satisfied(&self) -> bool {
        self.continuity && self.two_large_entries && self.within_cap
    }
}

/// One recorded step of the reduction.
#[derive(Clone, Debug, Serialize)]
pub struct Stage {
    pub stage_name: String,
    pub n: u32,
    pub n2: u32,
    pub entries: Vec<u64>,
    pub theta_sum: u64,
}

/// A full reduction run: every intermediate sequence, the admissibility
/// report for each, the final level-(n1, 0) sequence, and the factor 2^{n2}
/// that scales base θ-sums back to the original level.
#[derive(Clone, Debug, Serialize)]
pub struct Reduction {
    pub stages: Vec<Stage>,
    pub conditions: Vec<ConditionReport>,
    #[serde(skip)]
    pub base: TypeSeq,
    pub multiplier: u64,
}

impl Reduction {
    /// θ-sums rescaled to the original level (each halving doubles back).
    pub fn scaled_sums(&self) -> Vec<u64> {
        let n0 = self.stages[0].n;
        self.stages
            .iter()
            .map(|s| s.theta_sum << (n0 - s.n))
            .collect()
    }
}

/// θ(n, 2^{n-1}, t) for a pre-validated small-type entry.
fn theta_at(n: u32, t: u64) -> u64 {
    theta_small_type(n, t).expect("entry within small-type cap")
}

impl TypeSeq {
    pub fn new(n: u32, n2: u32, entries: Vec<u64>) -> Result<Self> {
        if n2 >= n {
            return Err(Error::Host {
                n1: n - n2.min(n),
                n2,
                reason: "type sequence needs n2 < n",
            });
        }
        let n1 = n - n2;
        if n1 < 2 || n > 32 {
            return Err(Error::Host {
                n1,
                n2,
                reason: "type sequence needs 2 <= n1 and n <= 32",
            });
        }
        let expected = 1u64 << (n1 - 1);
        if entries.len() as u64 != expected {
            return Err(Error::SeqLength {
                len: entries.len(),
                expected,
            });
        }
        Ok(TypeSeq { n, n2, entries })
    }

    /// The type sequence of the Gray embedding: entry i is 2^{n2}·g_i^{n1}.
    pub fn gray(n1: u32, n2: u32) -> Result<Self> {
        let entries = (1..=1u64 << (n1 - 1))
            .map(|i| Ok(g_value(n1, i)? << n2))
            .collect::<Result<Vec<_>>>()?;
        TypeSeq::new(n1 + n2, n2, entries)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn n2(&self) -> u32 {
        self.n2
    }

    pub fn n1(&self) -> u32 {
        self.n - self.n2
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Twice the small-type cap 2^{n-3}, kept doubled so n = 2 stays exact.
    fn cap2(&self) -> u64 {
        1u64 << (self.n - 2)
    }

    /// Checks the three admissibility properties at this level.
    ///
    /// Comparisons run on doubled values so the half-integer bounds at
    /// small n and at n2 = 0 need no rounding.
    pub fn check_condition(&self) -> ConditionReport {
        let level = 1u64 << self.n2;
        let len = self.entries.len();
        let continuity = (0..len).all(|i| {
            let a = self.entries[i];
            let b = self.entries[(i + 1) % len];
            a.abs_diff(b) <= level
        });
        let cap2 = self.cap2();
        let within_cap = self.entries.iter().all(|&e| 2 * e <= cap2);
        // bound is 2^{n-3} − 2^{n2-1}; doubled: cap2 − level
        let large_bound_vacuous = cap2 <= level;
        let two_large_entries = large_bound_vacuous
            || self
                .entries
                .iter()
                .filter(|&&e| 2 * e >= cap2 - level)
                .count()
                >= 2;
        ConditionReport {
            continuity,
            two_large_entries,
            large_bound_vacuous,
            within_cap,
        }
    }

    /// Caps every entry at 2^{n-3}. The θ-sum never increases because the
    /// big-type θ value is bounded below by the value at the cap.
    pub fn clamp_big_type(&self) -> TypeSeq {
        let cap = self.cap2() / 2;
        TypeSeq {
            n: self.n,
            n2: self.n2,
            entries: self.entries.iter().map(|&e| e.min(cap)).collect(),
        }
    }

    /// Σ_i θ(n, 2^{n-1}, s_i); every entry must be small type.
    pub fn theta_sum(&self) -> Result<u64> {
        let cap2 = self.cap2();
        let mut sum = 0u64;
        for (index, &value) in self.entries.iter().enumerate() {
            if 2 * value > cap2 {
                return Err(Error::EntryAboveCap {
                    index,
                    value,
                    cap: cap2 / 2,
                });
            }
            sum += theta_at(self.n, value);
        }
        Ok(sum)
    }

    /// Σ_i of the always-defined θ lower bound (entries clamped to the cap).
    pub fn theta_sum_lower_bound(&self) -> u64 {
        self.clamp_big_type().theta_sum().expect("clamped entries are small type")
    }

    fn require_admissible_shape(&self) -> Result<()> {
        let report = self.check_condition();
        if !report.within_cap {
            return Err(Error::Condition {
                condition: "small-type cap",
                n: self.n,
                n2: self.n2,
            });
        }
        if !report.continuity {
            return Err(Error::Condition {
                condition: "circular continuity",
                n: self.n,
                n2: self.n2,
            });
        }
        Ok(())
    }

    /// Produces an all-even sequence at the same level without increasing
    /// the θ-sum. See [`Self::evenize_stages`] for the recorded sub-steps.
    pub fn evenize(&self) -> Result<TypeSeq> {
        Ok(self.evenize_stages()?.into_iter().last().expect("at least one stage").1)
    }

    /// The evenizing pass with its recorded sub-steps.
    ///
    /// For n2 ≠ 1 there is one step: every maximal circular run of odd
    /// entries shifts uniformly by −1 or +1, whichever run has the smaller
    /// θ-sum (−1 on ties, and forced when +1 would breach the cap).
    ///
    /// For n2 = 1 a preliminary step runs first: unless two entries already
    /// sit at the cap, each odd entry at cap − 1 whose circular neighbor
    /// reaches cap − 1 anchors a longest strictly monotone run of odd
    /// entries, and all those runs shift by +1 together. The ordinary
    /// odd-run step then finishes the job. Continuity and the cap are
    /// restored by construction; the two-large-entries property is reported
    /// by the caller rather than enforced, since adversarial (non-embedding)
    /// sequences can lose it.
    pub fn evenize_stages(&self) -> Result<Vec<(&'static str, TypeSeq)>> {
        self.require_admissible_shape()?;
        let mut stages = Vec::new();
        let mut current = self.clone();
        if self.n2 == 1 {
            let shifted = current.shift_anchored_runs();
            debug_assert!(shifted.check_condition().continuity);
            debug_assert!(shifted.check_condition().within_cap);
            stages.push(("evenize_step1", shifted.clone()));
            current = shifted;
        }
        let evened = current.shift_odd_runs();
        debug_assert!(evened.entries.iter().all(|e| e % 2 == 0));
        debug_assert!(evened.check_condition().continuity);
        debug_assert!(evened.check_condition().within_cap);
        stages.push(("evenize", evened));
        Ok(stages)
    }

    /// Maximal circular runs of odd entries (the whole circle when every
    /// entry is odd).
    fn odd_runs(&self) -> Vec<Vec<usize>> {
        let len = self.entries.len();
        let odd = |i: usize| self.entries[i] % 2 == 1;
        if (0..len).all(odd) {
            return vec![(0..len).collect()];
        }
        let mut runs = Vec::new();
        for start in 0..len {
            if odd(start) && !odd((start + len - 1) % len) {
                let mut run = vec![start];
                let mut i = (start + 1) % len;
                while odd(i) {
                    run.push(i);
                    i = (i + 1) % len;
                }
                runs.push(run);
            }
        }
        runs
    }

    /// Shifts every odd run by the cheaper of −1 / +1.
    fn shift_odd_runs(&self) -> TypeSeq {
        let cap2 = self.cap2();
        let mut entries = self.entries.clone();
        for run in self.odd_runs() {
            let minus: u64 = run.iter().map(|&i| theta_at(self.n, self.entries[i] - 1)).sum();
            // +1 is infeasible when an odd entry already sits at the cap
            // (only possible when the cap itself is odd, i.e. n = 3)
            let plus_ok = run.iter().all(|&i| 2 * (self.entries[i] + 1) <= cap2);
            let delta: i64 = if !plus_ok {
                -1
            } else {
                let plus: u64 =
                    run.iter().map(|&i| theta_at(self.n, self.entries[i] + 1)).sum();
                if minus <= plus {
                    -1
                } else {
                    1
                }
            };
            let original: u64 = run.iter().map(|&i| theta_at(self.n, self.entries[i])).sum();
            for &i in &run {
                entries[i] = entries[i].checked_add_signed(delta).expect("entries stay >= 0");
            }
            let shifted: u64 = run.iter().map(|&i| theta_at(self.n, entries[i])).sum();
            debug_assert!(shifted <= original, "odd-run shift may not increase the sum");
        }
        TypeSeq {
            n: self.n,
            n2: self.n2,
            entries,
        }
    }

    /// The n2 = 1 preliminary step: +1 on every anchored monotone odd run.
    fn shift_anchored_runs(&self) -> TypeSeq {
        let cap = self.cap2() / 2;
        let len = self.entries.len();
        let at_cap = self.entries.iter().filter(|&&e| e == cap).count();
        if at_cap >= 2 || cap < 2 {
            return self.clone();
        }
        let prev = |i: usize| (i + len - 1) % len;
        let next = |i: usize| (i + 1) % len;
        let mut picked = vec![false; len];
        for j in 0..len {
            // anchor: an odd entry at cap − 1 with a neighbor at least cap − 1
            if self.entries[j] != cap - 1 || (cap - 1).is_multiple_of(2) {
                continue;
            }
            if self.entries[prev(j)].max(self.entries[next(j)]) < cap - 1 {
                continue;
            }
            // longest strictly monotone odd run ending at the anchor:
            // extend leftward while increasing into j, rightward while
            // decreasing out of j, then keep the longer side
            let mut left = vec![j];
            let mut cur = j;
            while left.len() < len {
                let p = prev(cur);
                if self.entries[p] % 2 == 1 && self.entries[p] < self.entries[cur] {
                    left.push(p);
                    cur = p;
                } else {
                    break;
                }
            }
            let mut right = vec![j];
            cur = j;
            while right.len() < len {
                let nx = next(cur);
                if self.entries[nx] % 2 == 1 && self.entries[nx] < self.entries[cur] {
                    right.push(nx);
                    cur = nx;
                } else {
                    break;
                }
            }
            let run = if left.len() >= right.len() { left } else { right };
            for i in run {
                picked[i] = true;
            }
        }
        let entries: Vec<u64> = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &e)| if picked[i] { e + 1 } else { e })
            .collect();
        if cfg!(debug_assertions) {
            let original: u64 = (0..len)
                .filter(|&i| picked[i])
                .map(|i| theta_at(self.n, self.entries[i]))
                .sum();
            let shifted: u64 = (0..len)
                .filter(|&i| picked[i])
                .map(|i| theta_at(self.n, entries[i]))
                .sum();
            debug_assert!(shifted <= original, "anchored shift may not increase the sum");
        }
        TypeSeq {
            n: self.n,
            n2: self.n2,
            entries,
        }
    }

    /// Halves an all-even sequence, moving from level (n, n2) to
    /// (n − 1, n2 − 1); the θ-sum halves exactly.
    pub fn halve(&self) -> Result<TypeSeq> {
        if self.n2 == 0 {
            return Err(Error::Host {
                n1: self.n1(),
                n2: self.n2,
                reason: "halving needs n2 >= 1",
            });
        }
        for (index, &value) in self.entries.iter().enumerate() {
            if value % 2 != 0 {
                return Err(Error::OddEntry { index, value });
            }
        }
        TypeSeq::new(
            self.n - 1,
            self.n2 - 1,
            self.entries.iter().map(|&e| e / 2).collect(),
        )
    }

    /// Runs the whole chain: clamp once, then evenize and halve n2 times.
    ///
    /// Admissibility of every intermediate sequence is reported, not
    /// enforced (only continuity and the cap are required to proceed). The
    /// scaled θ-sums of the recorded stages never increase.
    pub fn reduce_to_base(&self) -> Result<Reduction> {
        let mut stages = vec![Stage {
            stage_name: "input".into(),
            n: self.n,
            n2: self.n2,
            entries: self.entries.clone(),
            theta_sum: self.theta_sum_lower_bound(),
        }];
        let mut conditions = vec![self.check_condition()];
        let push = |stages: &mut Vec<Stage>, conditions: &mut Vec<ConditionReport>,
                    name: &str,
                    seq: &TypeSeq| {
            stages.push(Stage {
                stage_name: name.into(),
                n: seq.n,
                n2: seq.n2,
                entries: seq.entries.clone(),
                theta_sum: seq.theta_sum().expect("reduction keeps entries small type"),
            });
            conditions.push(seq.check_condition());
        };
        let mut current = self.clamp_big_type();
        push(&mut stages, &mut conditions, "clamp", &current);
        while current.n2 > 0 {
            for (name, seq) in current.evenize_stages()? {
                push(&mut stages, &mut conditions, name, &seq);
                current = seq;
            }
            current = current.halve()?;
            push(&mut stages, &mut conditions, "halve", &current);
        }
        let multiplier = 1u64 << self.n2;
        Ok(Reduction {
            stages,
            conditions,
            base: current,
            multiplier,
        })
    }
}

/// Type(f^{-1}(A_i)) for every ring region of the host. Defined for
/// cylinder and cycle hosts; the path host has no ring cuts.
pub fn extract_type_sequence(f: &EmbeddingMap) -> Result<TypeSeq> {
    let host = f.host();
    if host.kind() == HostKind::Path {
        return Err(Error::HostKind {
            expected: "cylinder or cycle",
            found: host.kind().name(),
        });
    }
    let entries = (1..=host.ring_cut_count())
        .map(|i| f.preimage(host.region_a(i).unwrap()).type_of())
        .collect();
    TypeSeq::new(host.n(), host.n2(), entries)
}
