//! Spectral reports: computed eigenvalues next to the closed forms.

use std::collections::BTreeMap;

use num_rational::BigRational;
use qhopf::bundles::{closed_form, reference_normalisation, display_row, Side};
use qhopf::conventions::Conventions;
use qhopf::{AlgebraElement, Monomial, ScalarQ};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{Mode, QValue, RunConfig, SideChoice};
use crate::render::row_info;
use crate::CliError;

/// Relative tolerance of the double-precision comparison in numeric mode.
pub const NUMERIC_TOLERANCE: f64 = 1e-10;

/// Exact values of one eigenpair at a sample point, as rationals.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointValue {
    pub q: String,
    pub computed: String,
    pub table: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralEntry {
    pub leading: Monomial,
    pub row: u8,
    pub family: String,
    /// Exact eigenvalue over Q(q); exact mode only.
    pub computed: Option<ScalarQ>,
    pub table: ScalarQ,
    /// Eigenvector in the reference normalisation where one is fixed,
    /// leading coefficient 1 otherwise; exact mode only.
    pub eigenvector: Option<AlgebraElement<ScalarQ>>,
    /// Numeric mode: values at each sample point.
    pub points: Vec<PointValue>,
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockReport {
    pub n: i32,
    pub side: Side,
    pub entries: Vec<SpectralEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub mode: Mode,
    pub filtration: u32,
    pub buffer: u32,
    pub q_values: Vec<String>,
    pub blocks: Vec<BlockReport>,
}

impl SpectralReport {
    pub fn entries(&self) -> impl Iterator<Item = (&BlockReport, &SpectralEntry)> {
        self.blocks.iter().flat_map(|b| b.entries.iter().map(move |e| (b, e)))
    }

    pub fn mismatches(&self) -> usize {
        self.entries().filter(|(_, e)| !e.matched).count()
    }

    pub fn len(&self) -> usize {
        self.entries().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn sides(choice: SideChoice) -> Vec<Side> {
    match choice {
        SideChoice::Left => vec![Side::Left],
        SideChoice::Right => vec![Side::Right],
        SideChoice::Both => vec![Side::Left, Side::Right],
    }
}

fn rational_text(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Whether two values agree in double precision within the numeric tolerance.
pub fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= NUMERIC_TOLERANCE * b.abs().max(1.0)
}

fn entry_base(side: Side, leading: Monomial) -> (u8, String, ScalarQ) {
    let row = display_row(side, leading);
    (row, row_info(side, row).family.to_string(), closed_form(side, leading))
}

pub fn build_spectral_report(cfg: &RunConfig) -> Result<SpectralReport, CliError> {
    let conventions = Conventions::standard()?;
    let ns = cfg.n_range.values();
    let sides = sides(cfg.sides);
    let blocks = match cfg.mode {
        Mode::Exact => {
            let geo = conventions.exact_geometry();
            let mut blocks = geo.spectral_blocks(&ns, cfg.filtration, &sides, cfg.buffer)?;
            blocks.sort_by_key(|b| (b.side, b.n));
            let mut out = Vec::new();
            for b in &blocks {
                let mut entries = Vec::new();
                for pair in geo.spectrum(b)? {
                    let (row, family, table) = entry_base(b.side, pair.leading);
                    let eigenvector = match reference_normalisation(b.side, pair.leading) {
                        Some(c) => pair.eigenvector.scale(&c),
                        None => pair.eigenvector,
                    };
                    entries.push(SpectralEntry {
                        leading: pair.leading,
                        row,
                        family,
                        matched: pair.eigenvalue == table,
                        computed: Some(pair.eigenvalue),
                        table,
                        eigenvector: Some(eigenvector),
                        points: Vec::new(),
                    });
                }
                out.push(BlockReport { n: b.n, side: b.side, entries });
            }
            out
        }
        Mode::Numeric => numeric_blocks(conventions, cfg, &ns, &sides)?,
    };
    Ok(SpectralReport {
        mode: cfg.mode,
        filtration: cfg.filtration,
        buffer: cfg.buffer,
        q_values: cfg.q_values.iter().map(|q| q.to_string()).collect(),
        blocks,
    })
}

/// Evaluates the spectra exactly at each rational sample point and compares
/// with the closed forms in double precision. The Gram matrices of the
/// monomial chains are too ill-conditioned for a floating-point assembly.
fn numeric_blocks(conventions: &Conventions, cfg: &RunConfig, ns: &[i32], sides: &[Side]) -> Result<Vec<BlockReport>, CliError> {
    type PerPoint = BTreeMap<(Side, i32), Vec<(Monomial, BigRational)>>;
    let per_q: Vec<PerPoint> = cfg
        .q_values
        .par_iter()
        .map(|q: &QValue| -> Result<PerPoint, CliError> {
            let geo = conventions.geometry_at(q.value.clone())?;
            let mut map = BTreeMap::new();
            for b in geo.spectral_blocks(ns, cfg.filtration, sides, cfg.buffer)? {
                let pairs = geo.spectrum(&b)?.into_iter().map(|p| (p.leading, p.eigenvalue)).collect();
                map.insert((b.side, b.n), pairs);
            }
            Ok(map)
        })
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for &side in sides {
        for &n in ns {
            let mut entries = Vec::new();
            let reference = per_q.first().and_then(|m| m.get(&(side, n))).cloned().unwrap_or_default();
            for (idx, (leading, _)) in reference.iter().enumerate() {
                let (row, family, table) = entry_base(side, *leading);
                let mut points = Vec::new();
                let mut matched = true;
                for (q, map) in cfg.q_values.iter().zip(&per_q) {
                    let (lead_q, value) = &map[&(side, n)][idx];
                    let exact_table = table.evaluate_rational(&q.value)?;
                    let c = num_traits::ToPrimitive::to_f64(value).unwrap_or(f64::NAN);
                    let t = num_traits::ToPrimitive::to_f64(&exact_table).unwrap_or(f64::NAN);
                    matched &= lead_q == leading && close(c, t);
                    points.push(PointValue { q: q.to_string(), computed: rational_text(value), table: rational_text(&exact_table) });
                }
                entries.push(SpectralEntry { leading: *leading, row, family, computed: None, table, eigenvector: None, points, matched });
            }
            out.push(BlockReport { n, side, entries });
        }
    }
    Ok(out)
}

/// Per table row: how many computed eigenvalues fell in it and how many
/// matched.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowTally {
    pub side: Side,
    pub row: u8,
    pub checked: usize,
    pub matched: usize,
}

pub fn tally(report: &SpectralReport) -> Vec<RowTally> {
    let mut map: BTreeMap<(Side, u8), (usize, usize)> = BTreeMap::new();
    for side in [Side::Left, Side::Right] {
        for row in 1..=9 {
            map.insert((side, row), (0, 0));
        }
    }
    for (b, e) in report.entries() {
        let t = map.entry((b.side, e.row)).or_default();
        t.0 += 1;
        t.1 += e.matched as usize;
    }
    map.into_iter().map(|((side, row), (checked, matched))| RowTally { side, row, checked, matched }).collect()
}
