use std::collections::BTreeMap;

use serde::Serialize;

use super::SuborbitProfile;
use crate::ratio::ExactRatio;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapViolation {
    pub name: String,
    pub ratio: ExactRatio,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub examined: usize,
    pub histogram: BTreeMap<String, usize>,
    /// Profiles with `5/6 < I < 1`.
    pub violations: Vec<GapViolation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Histogram of ratios and every profile strictly between 5/6 and 1.
pub fn gap_scan<'a>(profiles: impl IntoIterator<Item = (&'a str, &'a SuborbitProfile)>) -> GapReport {
    let five_sixths = ExactRatio::new(5, 6).expect("nonzero");
    let mut report = GapReport::default();
    for (name, profile) in profiles {
        report.examined += 1;
        *report.histogram.entry(profile.ratio.to_string()).or_insert(0) += 1;
        if profile.ratio.strictly_between(five_sixths, ExactRatio::one()) {
            report.violations.push(GapViolation {
                name: name.to_string(),
                ratio: profile.ratio,
            });
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureForm {
    pub conforms: bool,
    /// `q` with `I = (q + 1) / 2q`, when `I > 1/2`.
    pub q: Option<ExactRatio>,
}

/// Solves `(q + 1) / 2q = a / b` for `a/b > 1/2`: `q = b / (2a - b)`.
/// Conforms iff `2q` is a positive integer; ratios at most `1/2` conform
/// vacuously.
pub fn conjecture_form_check(ratio: ExactRatio) -> ConjectureForm {
    let (a, b) = (ratio.numer(), ratio.denom());
    if 2 * a <= b {
        return ConjectureForm {
            conforms: true,
            q: None,
        };
    }
    let q = ExactRatio::new(b, 2 * a - b).expect("2a > b");
    let two_q = ExactRatio::new(2 * b, 2 * a - b).expect("2a > b");
    ConjectureForm {
        conforms: two_q.is_integer() && two_q.numer() > 0,
        q: Some(q),
    }
}
