//! Closed-form eigenvalues of the left and right Laplacians, indexed by
//! the leading monomial of the eigenvector.

use num_traits::Zero;
use serde::Serialize;

use super::laplacian::Side;
use crate::coefficients::q_number;
use crate::quantum_group::Monomial;
use crate::ScalarQ;

/// Monomial family (table row) of a leading monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TableRow {
    /// `1`
    Unit,
    /// `alpha^m gamma^k`
    AlphaGamma,
    /// `alpha*^m`, degree `-m`
    AlphaStar,
    /// `alpha*^m gamma*^l`, `l > 0`
    AlphaStarGammaStar,
    /// `alpha^m gamma*^l`
    AlphaGammaStar,
    /// `alpha*^m gamma^k`
    AlphaStarGamma,
    /// `gamma^k gamma*^l`
    GammaGammaStar,
    /// `alpha^m gamma^k gamma*^l`, `m > 0`
    Mixed,
    /// `alpha*^m gamma^k gamma*^l`, `m > 0`
    MixedStar,
}

impl TableRow {
    pub fn classify(m: Monomial) -> TableRow {
        let (a, k, l) = (m.a_power, m.k, m.l);
        if a == 0 && k == 0 && l == 0 {
            TableRow::Unit
        } else if a >= 0 && l == 0 {
            TableRow::AlphaGamma
        } else if a <= 0 && k == 0 {
            if l == 0 {
                TableRow::AlphaStar
            } else {
                TableRow::AlphaStarGammaStar
            }
        } else if k == 0 {
            TableRow::AlphaGammaStar
        } else if l == 0 {
            TableRow::AlphaStarGamma
        } else if a == 0 {
            TableRow::GammaGammaStar
        } else if a > 0 {
            TableRow::Mixed
        } else {
            TableRow::MixedStar
        }
    }

    /// Row number, 1 to 9, in display order.
    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn label(self) -> &'static str {
        match self {
            TableRow::Unit => "1",
            TableRow::AlphaGamma => "alpha^m gamma^k",
            TableRow::AlphaStar => "alpha*^m",
            TableRow::AlphaStarGammaStar => "alpha*^m gamma*^l",
            TableRow::AlphaGammaStar => "alpha^m gamma*^l",
            TableRow::AlphaStarGamma => "alpha*^m gamma^k",
            TableRow::GammaGammaStar => "gamma^k gamma*^l",
            TableRow::Mixed => "alpha^m gamma^k gamma*^l",
            TableRow::MixedStar => "alpha*^m gamma^k gamma*^l",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            TableRow::Unit => r"\mathbb{1}",
            TableRow::AlphaGamma => r"\alpha^m\gamma^k",
            TableRow::AlphaStar => r"\alpha^{*m}",
            TableRow::AlphaStarGammaStar => r"\alpha^{*m}\gamma^{*l}",
            TableRow::AlphaGammaStar => r"\alpha^m\gamma^{*l}",
            TableRow::AlphaStarGamma => r"\alpha^{*m}\gamma^k",
            TableRow::GammaGammaStar => r"\gamma^k\gamma^{*l}",
            TableRow::Mixed => r"\alpha^m\gamma^k\gamma^{*l}",
            TableRow::MixedStar => r"\alpha^{*m}\gamma^k\gamma^{*l}",
        }
    }
}

fn qn(r: u32) -> ScalarQ {
    q_number(r as i32)
}

fn qp(e: i32) -> ScalarQ {
    ScalarQ::q_pow(e)
}

fn half(x: ScalarQ) -> ScalarQ {
    x * ScalarQ::from_ratio(1, 2)
}

/// Eigenvalue of the side's Laplacian on the eigenvector led by `m`.
pub fn closed_form(side: Side, m: Monomial) -> ScalarQ {
    match side {
        Side::Left => left_value(m),
        Side::Right => right_value(m),
    }
}

fn left_value(mono: Monomial) -> ScalarQ {
    let (a, k, l) = (mono.a_power, mono.k, mono.l);
    let li = l as i32;
    let m = a.unsigned_abs();
    let mi = m as i32;
    match TableRow::classify(mono) {
        TableRow::Unit => ScalarQ::zero(),
        TableRow::AlphaGamma => half(qn(m + k) * qp(4)),
        TableRow::AlphaStar | TableRow::AlphaStarGammaStar => {
            let n = m + l;
            half(qn(n) * qp(2 * (1 - n as i32)))
        }
        TableRow::AlphaGammaStar => half(qn(l) * qn(m + 1) * qp(2 * (1 - li)) + qn(m) * qn(l + 1) * qp(2 * (2 - li))),
        TableRow::AlphaStarGamma => half(qn(m) * qn(k + 1) * qp(2 * (1 - mi)) + qn(k) * qn(m + 1) * qp(2 * (2 - mi))),
        TableRow::GammaGammaStar => {
            half(qn(l) * qp(2 * (1 - li)) + qn(k) * qp(4) + ScalarQ::from_int(2) * qn(l) * qn(k) * qp(2 * (2 - li)))
        }
        TableRow::Mixed => half(
            qn(m) * qn(l + 1) * qp(2 * (2 - li))
                + qn(k) * qn(l + 1) * qp(4 + 2 * mi - 2 * li)
                + qn(l) * qn(m + 1) * qp(2 * (1 - li))
                + qn(l) * qn(k) * qp(4 + 2 * mi - 2 * li),
        ),
        TableRow::MixedStar => half(
            qn(m) * qn(k + 1) * qp(2 * (1 - mi))
                + qn(l) * qn(k + 1) * qp(2 - 2 * mi - 2 * li)
                + qn(k) * qn(m + 1) * qp(2 * (2 - mi))
                + qn(l) * qn(k) * qp(4 - 2 * mi - 2 * li),
        ),
    }
}

fn right_value(mono: Monomial) -> ScalarQ {
    let (a, k, l) = (mono.a_power, mono.k, mono.l);
    let (ki, li) = (k as i32, l as i32);
    let m = a.unsigned_abs();
    let mi = m as i32;
    match TableRow::classify(mono) {
        TableRow::Unit => ScalarQ::zero(),
        TableRow::AlphaGamma => {
            let n = m + k;
            half(qn(n) * qp(2 * (1 - n as i32)))
        }
        TableRow::AlphaStar | TableRow::AlphaStarGammaStar => half(qn(m + l) * qp(4)),
        TableRow::AlphaGammaStar => half(qn(m) * qn(l + 1) * qp(2 * (1 - mi)) + qn(l) * qn(m + 1) * qp(2 * (2 - mi))),
        TableRow::AlphaStarGamma => half(qn(k) * qn(m + 1) * qp(2 * (1 - ki)) + qn(m) * qn(k + 1) * qp(2 * (2 - ki))),
        TableRow::GammaGammaStar => {
            let n = ki - li;
            half(qn(l) * qp(2 * (2 - ki)) + qn(k) * qp(2 * (1 - n)) + qn(l) * qn(k) * (ScalarQ::from_int(1) + qp(4)) * qp(2 * (1 - ki)))
        }
        TableRow::Mixed => half(
            qn(m) * qn(l + 1) * qp(2 - 2 * mi - 2 * ki)
                + qn(k) * qn(l + 1) * qp(2 * (1 - ki))
                + qn(l) * qn(m + 1) * qp(4 - 2 * mi - 2 * ki)
                + qn(l) * qn(k) * qp(2 * (3 - ki)),
        ),
        TableRow::MixedStar => half(
            qn(m) * qn(k + 1) * qp(4 - 2 * ki + 2 * li)
                + qn(l) * qn(k + 1) * qp(2 * (2 - ki))
                + qn(k) * qn(m + 1) * qp(2 - 2 * ki + 2 * li)
                + qn(k) * qn(l) * qp(2 * (1 - ki)),
        ),
    }
}

/// Left row 5 on `alpha^m gamma*^l`, split as a constant plus a term
/// growing in `m`:
/// `-(q^2 + q^6 + 2 q^{2n+4}) / (2 (1-q^2)^2) + q^2 (1+q^2) / (2 (1-q^2)^2) (q^{-2l} + q^{2m+2})`
/// with `n = m - l`.
pub fn row5_decomposition(m: u32, l: u32) -> ScalarQ {
    let n = m as i32 - l as i32;
    let one = ScalarQ::from_int(1);
    let d = (one.clone() - qp(2)) * (one.clone() - qp(2)) * ScalarQ::from_int(2);
    let fixed = -(qp(2) + qp(6) + ScalarQ::from_int(2) * qp(2 * n + 4)) / d.clone();
    let slope = qp(2) * (one + qp(2)) / d;
    fixed + slope * (qp(-2 * l as i32) + qp(2 * m as i32 + 2))
}

/// Numeric scan of the row-5 family `alpha^m gamma*^l`, `m - l = n`.
#[derive(Clone, Debug, Serialize)]
pub struct GrowthScan {
    pub n: i32,
    pub q: f64,
    /// `(m, eigenvalue)` for each admissible `m`.
    pub values: Vec<(u32, f64)>,
    pub strictly_increasing: bool,
}

/// Evaluates the left row-5 eigenvalues at `q` for `m` up to `m_max`.
pub fn growth_scan(n: i32, q: f64, m_max: u32) -> Result<GrowthScan, crate::CoeffError> {
    let m_min = n.max(0) as u32 + 1;
    let mut values = Vec::new();
    for m in m_min..=m_max {
        let l = (m as i32 - n) as u32;
        values.push((m, closed_form(Side::Left, Monomial::new(m as i32, 0, l)).evaluate_f64(q)?));
    }
    let strictly_increasing = values.windows(2).all(|w| w[1].1 > w[0].1);
    Ok(GrowthScan { n, q, values, strictly_increasing })
}

/// First differences in `m` of the left row-5 eigenvalues at `q`, for the
/// classical-limit scan.
pub fn growth_differences(n: i32, q: f64, m_max: u32) -> Result<Vec<f64>, crate::CoeffError> {
    let scan = growth_scan(n, q, m_max)?;
    Ok(scan.values.windows(2).map(|w| w[1].1 - w[0].1).collect())
}

/// Leading coefficient of the reference eigenvectors, where one is
/// fixed; `None` means coefficient 1.
pub fn reference_normalisation(side: Side, m: Monomial) -> Option<ScalarQ> {
    if m != Monomial::new(1, 1, 1) {
        return None;
    }
    let c = match side {
        Side::Left => qp(6) + ScalarQ::from_int(3) * qp(4) + ScalarQ::from_int(2) * qp(2) + ScalarQ::from_int(1),
        Side::Right => qp(4) + ScalarQ::from_int(2) * qp(2) + qp(-2) + ScalarQ::from_int(3),
    };
    Some(c)
}

/// Display row (1 to 9) for a leading monomial. The display
/// tables split the pure powers into their own row: `alpha*^n, gamma*^n`
/// on the left and `alpha^n, gamma^n` on the right.
pub fn display_row(side: Side, mono: Monomial) -> u8 {
    let (a, k) = (mono.a_power, mono.k);
    let row = TableRow::classify(mono);
    match (side, row) {
        (Side::Left, TableRow::AlphaStar) => 3,
        (Side::Left, TableRow::AlphaStarGammaStar) if a == 0 => 3,
        (Side::Left, TableRow::AlphaStarGammaStar) => 4,
        (Side::Right, TableRow::AlphaGamma) if a == 0 || k == 0 => 3,
        (Side::Right, TableRow::AlphaGamma) => 2,
        (Side::Right, TableRow::AlphaStar) => 4,
        _ => row.number(),
    }
}
