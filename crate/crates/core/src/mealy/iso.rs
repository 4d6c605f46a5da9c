use itertools::Itertools;

use super::MealyAutomaton;

/// Exhaustive search for permutations `θ` of states and `ξ`, `ψ` of letters
/// with `θπ_a(x,q) = π_b(ξx, θq)` and `ψλ_a(x,q) = λ_b(ξx, θq)`.
pub fn are_isomorphic(a: &MealyAutomaton, b: &MealyAutomaton) -> bool {
    search(a, b, false)
}

/// Isomorphism with the extra constraint `ψ = ξ`.
pub fn are_similar(a: &MealyAutomaton, b: &MealyAutomaton) -> bool {
    search(a, b, true)
}

fn search(a: &MealyAutomaton, b: &MealyAutomaton, similar: bool) -> bool {
    let (n, m) = (a.state_count(), a.alphabet_size());
    if n != b.state_count() || m != b.alphabet_size() {
        return false;
    }
    let letter_perms: Vec<Vec<usize>> = (0..m).permutations(m).collect();
    for theta in (0..n).permutations(n) {
        for xi in &letter_perms {
            let transitions_match = (0..n).all(|q| {
                (0..m).all(|x| theta[a.next_state(q, x)] == b.next_state(theta[q], xi[x]))
            });
            if !transitions_match {
                continue;
            }
            let psi_ok = |psi: &[usize]| {
                (0..n).all(|q| {
                    (0..m).all(|x| psi[a.output_letter(q, x)] == b.output_letter(theta[q], xi[x]))
                })
            };
            if similar {
                if psi_ok(xi) {
                    return true;
                }
            } else if letter_perms.iter().any(|psi| psi_ok(psi)) {
                return true;
            }
        }
    }
    false
}
