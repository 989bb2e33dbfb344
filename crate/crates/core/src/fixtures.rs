//! Small hand-built machines over `{a, b}` used by tests, examples and the self-test.

use crate::automata::{Alphabet, AutomatonStructure, Dfa};
use crate::fdfa::{AcceptanceMode, Fdfa};
use crate::omega::{OmegaAcceptance, OmegaAutomaton};

pub fn ab() -> Alphabet {
    Alphabet::from_chars("ab").expect("valid alphabet")
}

/// Structure over `{a, b}`; row `q` is `[target on a, target on b]`.
pub fn ab_structure(initial: usize, rows: &[[usize; 2]]) -> AutomatonStructure {
    AutomatonStructure::new(ab(), initial, rows.iter().map(|r| r.to_vec()).collect())
        .expect("fixture structure is complete")
}

fn ab_dfa(rows: &[[usize; 2]], accepting: &[usize]) -> Dfa {
    Dfa::new(ab_structure(0, rows), accepting.iter().copied()).expect("fixture DFA is valid")
}

fn omega(rows: &[[usize; 2]], acc: OmegaAcceptance) -> OmegaAutomaton {
    OmegaAutomaton::new(ab_structure(0, rows), acc).expect("fixture automaton is valid")
}

const AA_BB_ROWS: [[usize; 2]; 5] = [[1, 2], [3, 2], [1, 4], [3, 2], [1, 4]];

/// Muller automaton for "infinitely many `aa` and finitely many `bb`".
pub fn inf_aa_fin_bb_dma() -> OmegaAutomaton {
    omega(&AA_BB_ROWS, OmegaAcceptance::Muller(vec![vec![3], vec![1, 2, 3]]))
}

/// Parity automaton for the same language on the same structure.
pub fn inf_aa_fin_bb_dpa() -> OmegaAutomaton {
    omega(&AA_BB_ROWS, OmegaAcceptance::Parity(vec![3, 3, 3, 2, 1]))
}

/// Büchi automaton for "infinitely many `aa`".
pub fn inf_aa_dba() -> OmegaAutomaton {
    omega(&[[1, 0], [2, 0], [2, 0]], OmegaAcceptance::Buchi(vec![2]))
}

/// A larger parity automaton for "infinitely many `aa`".
pub fn inf_aa_dpa() -> OmegaAutomaton {
    omega(
        &[[1, 3], [2, 3], [2, 3], [1, 3]],
        OmegaAcceptance::Parity(vec![1, 1, 0, 1]),
    )
}

/// co-Büchi automaton for "finitely many `bb`".
pub fn fin_bb_dca() -> OmegaAutomaton {
    omega(&[[0, 1], [0, 2], [0, 2]], OmegaAcceptance::CoBuchi(vec![2]))
}

/// co-Büchi automaton for "finitely many `a`".
pub fn fin_a_dca() -> OmegaAutomaton {
    omega(&[[1, 0], [1, 0]], OmegaAcceptance::CoBuchi(vec![1]))
}

/// Parity automaton for "infinitely many `b`, or an even finite number of `b`".
///
/// States track the parity of `b`s read and whether the last letter was `b`.
pub fn inf_b_or_even_b_dpa() -> OmegaAutomaton {
    omega(
        &[[0, 3], [1, 2], [0, 3], [1, 2]],
        OmegaAcceptance::Parity(vec![2, 1, 0, 0]),
    )
}

/// One accepting state: every word.
pub fn universal_dba() -> OmegaAutomaton {
    omega(&[[0, 0]], OmegaAcceptance::Buchi(vec![0]))
}

/// Languages the property suites run on, by name.
pub fn suite_languages() -> Vec<(&'static str, OmegaAutomaton)> {
    vec![
        ("inf-aa-fin-bb", inf_aa_fin_bb_dma()),
        ("inf-aa", inf_aa_dba()),
        ("inf-b-or-even-b", inf_b_or_even_b_dpa()),
        ("universal", universal_dba()),
    ]
}

fn parity_leading() -> AutomatonStructure {
    ab_structure(0, &[[0, 1], [1, 0]])
}

fn odd_b_progress() -> Dfa {
    ab_dfa(&[[1, 2], [1, 2], [2, 2]], &[2])
}

/// Two-class FDFA for "infinitely many `b`, or an even finite number of `b`",
/// read with normalized acceptance.
pub fn even_b_fdfa_normalized() -> Fdfa {
    let p_eps = ab_dfa(&[[1, 2], [1, 2], [2, 1]], &[1]);
    Fdfa::new(parity_leading(), vec![p_eps, odd_b_progress()], AcceptanceMode::Normalized)
        .expect("fixture FDFA is valid")
}

/// Variant whose progress for the even class rejects `a` but accepts `aa`;
/// saturated only under duo-normalized acceptance.
pub fn even_b_fdfa_duo() -> Fdfa {
    let p_eps = ab_dfa(&[[1, 3], [2, 3], [2, 3], [3, 3]], &[2, 3]);
    Fdfa::new(parity_leading(), vec![p_eps, odd_b_progress()], AcceptanceMode::DuoNormalized)
        .expect("fixture FDFA is valid")
}

/// Syntactic FDFA for "infinitely many `aa` and finitely many `bb`" (normalized acceptance).
pub fn syntactic_fdfa_inf_aa_fin_bb() -> Fdfa {
    // e, a, aa, aab, ab, b, ba, baa, baab, bb
    let p = ab_dfa(
        &[
            [1, 5],
            [2, 4],
            [2, 3],
            [2, 9],
            [1, 9],
            [6, 9],
            [7, 5],
            [7, 8],
            [7, 9],
            [9, 9],
        ],
        &[1, 2, 3, 7],
    );
    Fdfa::new(AutomatonStructure::trivial(ab()), vec![p], AcceptanceMode::Normalized)
        .expect("fixture FDFA is valid")
}

/// Colorful FDFA for "infinitely many `aa` and finitely many `bb`", with its state colors.
pub fn colorful_fdfa_inf_aa_fin_bb() -> (Fdfa, Vec<u32>) {
    // e, a, b, aa, aab, bb
    let p = ab_dfa(
        &[[1, 2], [3, 2], [1, 5], [3, 4], [3, 5], [5, 5]],
        &[3, 4],
    );
    let f = Fdfa::new(AutomatonStructure::trivial(ab()), vec![p], AcceptanceMode::DuoNormalized)
        .expect("fixture FDFA is valid");
    (f, vec![3, 3, 3, 2, 2, 1])
}

/// Duo-normalized FDFA for "infinitely many `aa`".
pub fn inf_aa_fdfa() -> Fdfa {
    let p = ab_dfa(&[[1, 2], [1, 2], [3, 2], [4, 2], [4, 4]], &[1, 4]);
    Fdfa::new(AutomatonStructure::trivial(ab()), vec![p], AcceptanceMode::DuoNormalized)
        .expect("fixture FDFA is valid")
}

/// One leading state and one accepting progress state: every word.
pub fn universal_fdfa() -> Fdfa {
    Fdfa::new(
        AutomatonStructure::trivial(ab()),
        vec![ab_dfa(&[[0, 0]], &[0])],
        AcceptanceMode::DuoNormalized,
    )
    .expect("fixture FDFA is valid")
}

/// Not saturated: `(ε, ab)` is accepted while `(a, ba)`, a decomposition of the
/// same word, is rejected, and both are duo-normalized.
pub fn unsaturated_fdfa() -> Fdfa {
    Fdfa::new(
        AutomatonStructure::trivial(ab()),
        vec![ab_dfa(&[[1, 2], [1, 1], [2, 2]], &[1])],
        AcceptanceMode::DuoNormalized,
    )
    .expect("fixture FDFA is valid")
}

/// The hand-built FDFAs, by name.
pub fn suite_fdfas() -> Vec<(&'static str, Fdfa)> {
    vec![
        ("even-b-normalized", even_b_fdfa_normalized()),
        ("even-b-duo", even_b_fdfa_duo()),
        ("syntactic-inf-aa-fin-bb", syntactic_fdfa_inf_aa_fin_bb()),
        ("colorful-inf-aa-fin-bb", colorful_fdfa_inf_aa_fin_bb().0),
        ("inf-aa", inf_aa_fdfa()),
        ("universal", universal_fdfa()),
    ]
}
