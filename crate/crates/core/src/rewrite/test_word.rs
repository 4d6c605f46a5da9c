use super::normal_form::NormalForm;
use super::RewriteError;

fn test_shape(nf: &NormalForm, n: u32) -> Result<&[u32], RewriteError> {
    if n == 0 {
        return Err(RewriteError::ZeroLevel);
    }
    let NormalForm::General(g) = nf else {
        return Err(RewriteError::ShapeMismatch(format!("{nf} has no f1")));
    };
    if !g.e1 || g.e2 {
        return Err(RewriteError::ShapeMismatch(format!(
            "{nf} must start with f0 and end with f1"
        )));
    }
    if let Some(&last) = g.exponents.last() {
        if last >= n {
            return Err(RewriteError::ShapeMismatch(format!(
                "exponent {last} does not fit at level {n}"
            )));
        }
    }
    Ok(&g.exponents)
}

/// Closed-form image of `x0^n` under a test word `f0 f1 (f0 f1)^{p_1} f1 …`:
/// `x0^{p_1+1}`, then runs of length `p_i - p_{i-1}` of alternating letters,
/// then `n - p_k - 1` copies of `x_{k mod 2}`.
pub fn test_word_pattern(nf: &NormalForm, n: u32) -> Result<Vec<usize>, RewriteError> {
    let exps = test_shape(nf, n)?;
    let n = n as usize;
    let Some((&first, rest)) = exps.split_first() else {
        return Ok(vec![0; n]);
    };
    let mut out = vec![0; first as usize + 1];
    let mut prev = first;
    for (i, &p) in rest.iter().enumerate() {
        // Run i+2 uses letter (i+1) mod 2.
        out.extend(std::iter::repeat_n((i + 1) % 2, (p - prev) as usize));
        prev = p;
    }
    let k = exps.len();
    out.extend(std::iter::repeat_n(k % 2, n - prev as usize - 1));
    Ok(out)
}

/// Image of `x0^n` under a test word, computed from the automaton and from
/// the closed pattern; the two must agree.
pub fn eval_test_word(nf: &NormalForm, n: u32) -> Result<Vec<usize>, RewriteError> {
    let pattern = test_word_pattern(nf, n)?;
    let table = nf.to_word().act_on(&vec![0; n as usize]);
    if table != pattern {
        return Err(RewriteError::TestWordMismatch { table, pattern });
    }
    Ok(table)
}
