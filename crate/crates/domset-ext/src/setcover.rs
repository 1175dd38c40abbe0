//! Set cover through subset marking.
//!
//! Elements play the role of vertices and subsets the role of candidates:
//! each element marks a containing subset of maximum weight (`|A_j| + r_j`
//! initially, `x_j + r_j` afterwards). The derived graph lives on subsets —
//! per element an edge between its two best marked containing subsets, a
//! loop when only one is marked — and any vertex cover of it covers every
//! element.

use std::io::BufRead;

use domset_algos::rng::{beats, stream};
use domset_algos::RngPolicy;
use domset_graph::LoopMultigraph;
use domset_vc::CoverSolver;

use crate::error::ExtError;

/// Universe elements `0..n_elements` and a family of subsets over them.
#[derive(Clone, Debug)]
pub struct SetCoverInstance {
    n_elements: usize,
    subsets: Vec<Vec<u32>>,
    /// Element -> subsets containing it.
    containing: Vec<Vec<u32>>,
}

impl SetCoverInstance {
    /// Validates ids and feasibility (every element in at least one subset).
    pub fn new(n_elements: usize, subsets: Vec<Vec<u32>>) -> Result<Self, ExtError> {
        let mut normalized = Vec::with_capacity(subsets.len());
        let mut containing = vec![Vec::new(); n_elements];
        for (j, mut subset) in subsets.into_iter().enumerate() {
            subset.sort_unstable();
            subset.dedup();
            for &e in &subset {
                if e as usize >= n_elements {
                    return Err(ExtError::Parse {
                        line: 0,
                        message: format!("element id {e} out of range"),
                    });
                }
                containing[e as usize].push(j as u32);
            }
            normalized.push(subset);
        }
        if let Some(element) = containing.iter().position(|c| c.is_empty()) {
            return Err(ExtError::UncoveredElement {
                element: element as u32,
            });
        }
        Ok(SetCoverInstance {
            n_elements,
            subsets: normalized,
            containing,
        })
    }

    /// Reads the instance format: header `n_elements n_subsets`, then one
    /// line per subset listing its 0-based element ids. `#`/`%` lines are
    /// comments.
    pub fn from_reader<R: BufRead>(reader: R) -> Result<Self, ExtError> {
        let mut data_lines = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.starts_with('#') || trimmed.starts_with('%') {
                continue;
            }
            data_lines.push((idx + 1, line));
        }
        let Some((header_line, header)) = data_lines.first() else {
            return Err(ExtError::Parse {
                line: 0,
                message: "empty instance".into(),
            });
        };
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(ExtError::Parse {
                line: *header_line,
                message: "header must be \"n_elements n_subsets\"".into(),
            });
        }
        let n_elements: usize = fields[0].parse().map_err(|_| ExtError::Parse {
            line: *header_line,
            message: "malformed element count".into(),
        })?;
        let n_subsets: usize = fields[1].parse().map_err(|_| ExtError::Parse {
            line: *header_line,
            message: "malformed subset count".into(),
        })?;
        if data_lines.len() - 1 != n_subsets {
            return Err(ExtError::Parse {
                line: *header_line,
                message: format!(
                    "expected {n_subsets} subset lines, found {}",
                    data_lines.len() - 1
                ),
            });
        }
        let mut subsets = Vec::with_capacity(n_subsets);
        for (lineno, line) in &data_lines[1..] {
            let mut subset = Vec::new();
            for token in line.split_whitespace() {
                let e: u32 = token.parse().map_err(|_| ExtError::Parse {
                    line: *lineno,
                    message: format!("malformed element id {token:?}"),
                })?;
                subset.push(e);
            }
            subsets.push(subset);
        }
        Self::new(n_elements, subsets)
    }

    pub fn n_elements(&self) -> usize {
        self.n_elements
    }

    pub fn n_subsets(&self) -> usize {
        self.subsets.len()
    }

    pub fn subset(&self, j: u32) -> &[u32] {
        &self.subsets[j as usize]
    }

    pub fn subsets_containing(&self, element: u32) -> &[u32] {
        &self.containing[element as usize]
    }

    /// True iff the given subset ids cover every element.
    pub fn covers(&self, chosen: &[u32]) -> bool {
        let mut covered = vec![false; self.n_elements];
        for &j in chosen {
            for &e in self.subset(j) {
                covered[e as usize] = true;
            }
        }
        covered.iter().all(|&c| c)
    }
}

/// Returns a covering family of subset ids, sorted ascending.
pub fn set_cover(
    inst: &SetCoverInstance,
    m: usize,
    policy: &RngPolicy,
    solver: CoverSolver,
) -> Result<Vec<u32>, ExtError> {
    let n_subsets = inst.n_subsets();
    let r = policy.distinct_unit_values(stream::SET_COVER_R, n_subsets);
    let mut counts: Vec<u64> = inst.subsets.iter().map(|s| s.len() as u64).collect();
    let mut marks = vec![0u32; inst.n_elements];
    let pick = |element: u32, counts: &[u64]| -> u32 {
        let mut best: Option<u32> = None;
        for &j in inst.subsets_containing(element) {
            let better = match best {
                None => true,
                Some(b) => match counts[j as usize].cmp(&counts[b as usize]) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => beats(r[j as usize], j, r[b as usize], b),
                },
            };
            if better {
                best = Some(j);
            }
        }
        best.expect("instance feasibility guarantees a candidate")
    };

    for e in 0..inst.n_elements as u32 {
        marks[e as usize] = pick(e, &counts);
    }
    let mut x = tally(&marks, n_subsets);
    for _ in 0..m {
        counts.copy_from_slice(&x);
        for e in 0..inst.n_elements as u32 {
            marks[e as usize] = pick(e, &counts);
        }
        x = tally(&marks, n_subsets);
    }

    // Derived graph on subsets: per element the two best marked containing
    // subsets, a loop when only one subset containing it is marked.
    let mut edges = Vec::with_capacity(inst.n_elements);
    for e in 0..inst.n_elements as u32 {
        let mut first: Option<u32> = None;
        let mut second: Option<u32> = None;
        for &j in inst.subsets_containing(e) {
            if x[j as usize] == 0 {
                continue;
            }
            let beats_slot = |slot: Option<u32>| match slot {
                None => true,
                Some(s) => match x[j as usize].cmp(&x[s as usize]) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => beats(r[j as usize], j, r[s as usize], s),
                },
            };
            if beats_slot(first) {
                second = first;
                first = Some(j);
            } else if beats_slot(second) {
                second = Some(j);
            }
        }
        match (first, second) {
            (Some(a), Some(b)) => edges.push((a, b)),
            (Some(a), None) => edges.push((a, a)),
            (None, _) => unreachable!("element {e} marked a subset in the last round"),
        }
    }
    let derived = LoopMultigraph::new(n_subsets, edges).expect("subset ids are dense");
    let cover = solver.solve(&derived)?;

    let marked: Vec<u32> = (0..n_subsets as u32)
        .filter(|&j| x[j as usize] > 0)
        .collect();
    let chosen = if cover.len() <= marked.len() {
        cover.iter().collect()
    } else {
        marked
    };
    assert!(inst.covers(&chosen), "derived cover must cover all elements");
    Ok(chosen)
}

fn tally(marks: &[u32], n_subsets: usize) -> Vec<u64> {
    let mut x = vec![0u64; n_subsets];
    for &j in marks {
        x[j as usize] += 1;
    }
    x
}
