use serde::Serialize;

use super::asymptotics::GrowthAsymptotes;
use super::growth::GrowthCoefficients;
use super::SeriesError;

/// One line of the growth report. Big integers are kept as decimal strings
/// so that no consumer sees them rounded.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthRow {
    pub n: usize,
    pub delta: String,
    pub gamma_aut: String,
    pub gamma_ball: String,
    pub q: String,
    pub asym_delta: f64,
    pub asym_aut: f64,
    pub asym_ball: f64,
    pub ratio_delta: f64,
    pub ratio_aut: f64,
    pub ratio_ball: f64,
}

impl GrowthRow {
    pub const CSV_HEADER: &'static str = "n,delta,gamma_aut,gamma_ball,q,asym_delta,asym_aut,asym_ball,ratio_delta,ratio_aut,ratio_ball";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{:e},{:e},{:e},{},{},{}",
            self.n,
            self.delta,
            self.gamma_aut,
            self.gamma_ball,
            self.q,
            self.asym_delta,
            self.asym_aut,
            self.asym_ball,
            self.ratio_delta,
            self.ratio_aut,
            self.ratio_ball
        )
    }
}

/// Rows for `n = 1..=max_n`. The asymptotic columns use the forms in terms
/// of the exact `q(n)`.
pub fn growth_rows(max_n: usize) -> Result<Vec<GrowthRow>, SeriesError> {
    let g = GrowthCoefficients::compute(max_n)?;
    Ok((1..=max_n)
        .map(|n| {
            let asym = GrowthAsymptotes::with_q(n, &g.q[n]);
            GrowthRow {
                n,
                delta: g.delta[n].to_string(),
                gamma_aut: g.aut[n].to_string(),
                gamma_ball: g.ball[n].to_string(),
                q: g.q[n].to_string(),
                asym_delta: asym.ln_delta_q_form.exp(),
                asym_aut: asym.ln_aut_q_form.exp(),
                asym_ball: asym.ln_ball_q_form.exp(),
                ratio_delta: asym.ratio(&g.delta[n], asym.ln_delta_q_form),
                ratio_aut: asym.ratio(&g.aut[n], asym.ln_aut_q_form),
                ratio_ball: asym.ratio(&g.ball[n], asym.ln_ball_q_form),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows() {
        let rows = growth_rows(5).unwrap();
        let aut: Vec<&str> = rows.iter().map(|r| r.gamma_aut.as_str()).collect();
        assert_eq!(aut, ["2", "4", "6", "9", "13"]);
        assert_eq!(rows[0].gamma_ball, "3");
        assert_eq!(rows[0].to_csv().split(',').count(), GrowthRow::CSV_HEADER.split(',').count());
    }
}
