use rustc_hash::FxHashMap;

use super::MealyAutomaton;

/// Reduced automaton equivalent to `a`.
pub fn minimize(a: &MealyAutomaton) -> MealyAutomaton {
    minimize_with_classes(a).0
}

/// Moore-style refinement: states start grouped by their output row `σ_q`
/// and are split by the vector of successor classes until the partition is
/// stable. Every state is kept; no reachability pruning happens, since each
/// state defines a transformation of its own.
///
/// Returns the reduced automaton and, for every original state, the index of
/// its class. Classes are numbered by first occurrence.
pub fn minimize_with_classes(a: &MealyAutomaton) -> (MealyAutomaton, Vec<usize>) {
    let (n, m) = (a.state_count(), a.alphabet_size());

    let mut class = number_by_signature((0..n).map(|q| {
        (0..m).map(|x| a.output_letter(q, x)).collect::<Vec<_>>()
    }));
    let mut count = class.iter().max().map_or(0, |c| c + 1);

    loop {
        let refined = number_by_signature((0..n).map(|q| {
            let mut sig = Vec::with_capacity(m + 1);
            sig.push(class[q]);
            sig.extend((0..m).map(|x| class[a.next_state(q, x)]));
            sig
        }));
        let refined_count = refined.iter().max().map_or(0, |c| c + 1);
        class = refined;
        if refined_count == count {
            break;
        }
        count = refined_count;
    }

    let mut representative = vec![usize::MAX; count];
    for (q, &c) in class.iter().enumerate() {
        if representative[c] == usize::MAX {
            representative[c] = q;
        }
    }
    let mut transition = Vec::with_capacity(count * m);
    let mut output = Vec::with_capacity(count * m);
    for &q in &representative {
        for x in 0..m {
            transition.push(class[a.next_state(q, x)]);
            output.push(a.output_letter(q, x));
        }
    }
    let mut reduced = MealyAutomaton::new(m, count, transition, output)
        .expect("quotient of a valid automaton is valid");
    if let Some(labels) = a.labels() {
        reduced.labels = Some(representative.iter().map(|&q| labels[q].clone()).collect());
    }
    (reduced, class)
}

fn number_by_signature<I>(signatures: I) -> Vec<usize>
where
    I: Iterator<Item = Vec<usize>>,
{
    let mut ids: FxHashMap<Vec<usize>, usize> = FxHashMap::default();
    signatures
        .map(|sig| {
            let next = ids.len();
            *ids.entry(sig).or_insert(next)
        })
        .collect()
}
