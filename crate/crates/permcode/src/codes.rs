//! Explicit permutation codes: greedy sphere-exclusion construction,
//! independent verification of the designed distance, and a plain text file
//! format. Works straight off permutations, so it scales past the explicit
//! graph's n cap (the greedy scan streams lexicographic successors and never
//! materializes S_n).
//!
//! File format (UTF-8, LF): line 1 is `n d`; each following line is n
//! space-separated integers in 1..n forming a permutation; lines starting
//! with `#` (and blank lines) are ignored.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bounds::CodeParameters;
use crate::exactgraph::{hamming_distance, Permutation};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Greedy construction scans all of S_n; beyond this length the scan cost
/// (n! distance checks) stops being a desk-scale computation.
pub const GREEDY_LENGTH_CAP: u32 = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodesError {
    #[error(
        "greedy construction for n = {n} would scan {scan_size} permutations; \
         the cap is n <= {cap}"
    )]
    InfeasibleLength { n: u32, cap: u32, scan_size: u64 },
    #[error("word {index} has length {got}, expected n = {expected}")]
    WordLengthMismatch { index: usize, expected: usize, got: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

/// An explicit code: `n`, the designed minimum distance `d`, and the words
/// in construction order. The distance property is checked by [`verify`],
/// never assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationCode {
    pub n: u32,
    pub d: u32,
    pub words: Vec<Permutation>,
}

/// Scan orders for [`greedy_construct`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionOrder {
    Lexicographic,
    SeededShuffle,
}

/// Greedy sphere exclusion: scan S_n in the given order, keeping every
/// permutation at distance >= d from all kept words. An exhaustive scan
/// yields a maximal code, so its size meets the Gilbert-Varshamov bound.
///
/// The scan is inherently sequential in its order and runs single-threaded
/// so identical inputs give identical codes.
pub fn greedy_construct(
    params: &CodeParameters,
    order: ConstructionOrder,
    seed: u64,
) -> Result<PermutationCode, CodesError> {
    let n = params.n();
    if n > GREEDY_LENGTH_CAP {
        return Err(CodesError::InfeasibleLength {
            n,
            cap: GREEDY_LENGTH_CAP,
            scan_size: (1..=n as u64).product(),
        });
    }
    let d = params.d() as usize;
    let n = n as usize;
    // Distinct permutations always differ in at least 2 positions, so d <= 2
    // keeps every word and the distance checks can be skipped.
    let keep_all = d <= 2;

    let mut words: Vec<Permutation> = Vec::new();
    let consider = |candidate: Permutation, words: &mut Vec<Permutation>| {
        if keep_all || words.iter().all(|w| at_distance(w, &candidate, d)) {
            words.push(candidate);
        }
    };

    match order {
        ConstructionOrder::Lexicographic => {
            let mut p = Permutation::identity(n);
            loop {
                let done = {
                    let next = p.clone();
                    consider(next, &mut words);
                    !p.lex_advance()
                };
                if done {
                    break;
                }
            }
        }
        ConstructionOrder::SeededShuffle => {
            let count: u64 = (1..=n as u64).product();
            let mut ranks: Vec<u64> = (0..count).collect();
            ranks.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            for rank in ranks {
                consider(Permutation::from_lex_rank(n, rank), &mut words);
            }
        }
    }

    Ok(PermutationCode {
        n: n as u32,
        d: d as u32,
        words,
    })
}

/// True iff the two words differ in at least `d` positions, scanning with
/// early exit in both directions (enough mismatches seen, or too many
/// agreements left to recover).
fn at_distance(a: &Permutation, b: &Permutation, d: usize) -> bool {
    let n = a.n();
    let mut mismatches = 0usize;
    for (i, (x, y)) in a.images().iter().zip(b.images()).enumerate() {
        if x != y {
            mismatches += 1;
            if mismatches >= d {
                return true;
            }
        } else if mismatches + (n - i - 1) < d {
            return false;
        }
    }
    mismatches >= d
}

/// Outcome of a full pairwise check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    /// True iff all words are well-formed and the true minimum distance
    /// meets the designed d.
    pub ok: bool,
    /// True minimum pairwise distance; `n` by convention for codes with
    /// fewer than two words (there is no pair to minimize over).
    pub min_distance: usize,
    /// Lexicographically smallest word-index pair attaining the minimum,
    /// present when that minimum violates the designed distance.
    pub violating_pair: Option<(usize, usize)>,
}

/// Computes the true minimum distance over all word pairs. Duplicated words
/// surface as distance 0. Words whose length disagrees with `code.n` are
/// rejected with their index.
pub fn verify(code: &PermutationCode) -> Result<VerifyReport, CodesError> {
    verify_words(code, true)
}

/// Sequential twin of [`verify`]; bit-identical output.
pub fn verify_sequential(code: &PermutationCode) -> Result<VerifyReport, CodesError> {
    verify_words(code, false)
}

fn verify_words(code: &PermutationCode, parallel: bool) -> Result<VerifyReport, CodesError> {
    let n = code.n as usize;
    for (index, word) in code.words.iter().enumerate() {
        if word.n() != n {
            return Err(CodesError::WordLengthMismatch {
                index,
                expected: n,
                got: word.n(),
            });
        }
    }
    if code.words.len() < 2 {
        return Ok(VerifyReport {
            ok: true,
            min_distance: n,
            violating_pair: None,
        });
    }

    // Minimum of (distance, (i, j)) over all pairs; the pair component makes
    // the reduction order irrelevant.
    let row_min = |i: usize| -> (usize, (usize, usize)) {
        let mut best = (usize::MAX, (usize::MAX, usize::MAX));
        for j in i + 1..code.words.len() {
            let dist = hamming_distance(&code.words[i], &code.words[j]).expect("lengths checked");
            if (dist, (i, j)) < best {
                best = (dist, (i, j));
            }
        }
        best
    };

    let (min_distance, pair) = {
        #[cfg(feature = "parallel")]
        {
            if parallel {
                (0..code.words.len() - 1)
                    .into_par_iter()
                    .map(row_min)
                    .min()
                    .expect("at least one pair")
            } else {
                (0..code.words.len() - 1).map(row_min).min().expect("pair")
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            let _ = parallel;
            (0..code.words.len() - 1).map(row_min).min().expect("pair")
        }
    };

    let ok = min_distance >= code.d as usize;
    Ok(VerifyReport {
        ok,
        min_distance,
        violating_pair: if ok { None } else { Some(pair) },
    })
}

/// Renders the code in the text format (no comments, LF endings).
pub fn serialize(code: &PermutationCode) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", code.n, code.d));
    for word in &code.words {
        out.push_str(&word.to_string());
        out.push('\n');
    }
    out
}

/// Parses the text format. Comment (`#`) and blank lines are ignored;
/// everything else must be the `n d` header followed by words, one per
/// line, as 1-indexed images. Errors carry 1-based line and column.
pub fn deserialize(text: &str) -> Result<PermutationCode, CodesError> {
    let mut header: Option<(u32, u32)> = None;
    let mut words: Vec<Permutation> = Vec::new();

    for (line_index, line) in text.lines().enumerate() {
        let line_no = line_index + 1;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens = tokenize(line);
        match header {
            None => {
                if tokens.len() != 2 {
                    return Err(CodesError::Parse {
                        line: line_no,
                        column: 1,
                        message: format!("expected header `n d`, found {} tokens", tokens.len()),
                    });
                }
                let n = parse_number(&tokens[0], line_no, "n")?;
                let d = parse_number(&tokens[1], line_no, "d")?;
                if n == 0 || d == 0 || d > n {
                    return Err(CodesError::Parse {
                        line: line_no,
                        column: 1,
                        message: format!("header needs 1 <= d <= n, got n = {n}, d = {d}"),
                    });
                }
                header = Some((n, d));
            }
            Some((n, _)) => {
                let n = n as usize;
                if tokens.len() != n {
                    let column = tokens
                        .get(n)
                        .map(|t| t.column)
                        .unwrap_or_else(|| line.len() + 1);
                    return Err(CodesError::Parse {
                        line: line_no,
                        column,
                        message: format!("expected {n} images, found {}", tokens.len()),
                    });
                }
                let mut images = Vec::with_capacity(n);
                for token in &tokens {
                    let value = parse_number(token, line_no, "image")?;
                    if value < 1 || value as usize > n {
                        return Err(CodesError::Parse {
                            line: line_no,
                            column: token.column,
                            message: format!("image {value} outside 1..={n}"),
                        });
                    }
                    images.push((value - 1) as u16);
                }
                let word = Permutation::from_images(images).map_err(|e| {
                    let column = match e {
                        crate::exactgraph::PermutationError::DuplicateImage {
                            second, ..
                        } => tokens[second].column,
                        _ => tokens[0].column,
                    };
                    CodesError::Parse {
                        line: line_no,
                        column,
                        message: e.to_string(),
                    }
                })?;
                words.push(word);
            }
        }
    }

    match header {
        Some((n, d)) => Ok(PermutationCode { n, d, words }),
        None => Err(CodesError::Parse {
            line: text.lines().count().max(1),
            column: 1,
            message: "missing `n d` header".into(),
        }),
    }
}

struct Token {
    text: String,
    column: usize, // 1-based byte column
}

fn tokenize(line: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push(Token { text: line[s..i].to_string(), column: s + 1 });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push(Token { text: line[s..].to_string(), column: s + 1 });
    }
    tokens
}

fn parse_number(token: &Token, line: usize, what: &str) -> Result<u32, CodesError> {
    token.text.parse::<u32>().map_err(|_| CodesError::Parse {
        line,
        column: token.column,
        message: format!("{what} must be a positive integer, got `{}`", token.text),
    })
}

// ------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::gv_lower;
    use num_traits::ToPrimitive;
    use rand::Rng;

    fn params(n: u32, d: u32) -> CodeParameters {
        CodeParameters::new(n, d).unwrap()
    }

    fn lex_greedy(n: u32, d: u32) -> PermutationCode {
        greedy_construct(&params(n, d), ConstructionOrder::Lexicographic, 0).unwrap()
    }

    #[test]
    fn greedy_trivial_distance_keeps_everything() {
        let code = lex_greedy(4, 2);
        assert_eq!(code.words.len(), 24);
        assert!(verify(&code).unwrap().ok);
    }

    #[test]
    fn greedy_meets_gv_and_verifies() {
        for n in 2..=6u32 {
            for d in 2..=n {
                let p = params(n, d);
                let code = lex_greedy(n, d);
                let gv = gv_lower(&p).to_u64().unwrap();
                assert!(
                    code.words.len() as u64 >= gv,
                    "greedy({n},{d}) = {} < gv {gv}",
                    code.words.len()
                );
                let report = verify(&code).unwrap();
                assert!(report.ok, "greedy({n},{d}) failed verification");
            }
        }
    }

    #[test]
    fn greedy_full_distance_finds_cyclic_structure() {
        let code = lex_greedy(5, 5);
        assert_eq!(code.words.len(), 5);
        let report = verify(&code).unwrap();
        assert!(report.ok);
        assert_eq!(report.min_distance, 5);
    }

    #[test]
    fn greedy_shuffle_is_deterministic_and_valid() {
        let p = params(5, 3);
        let a = greedy_construct(&p, ConstructionOrder::SeededShuffle, 99).unwrap();
        let b = greedy_construct(&p, ConstructionOrder::SeededShuffle, 99).unwrap();
        assert_eq!(a, b);
        assert!(verify(&a).unwrap().ok);
        let c = greedy_construct(&p, ConstructionOrder::SeededShuffle, 100).unwrap();
        assert_ne!(a.words, c.words, "different seeds should explore differently");
    }

    #[test]
    fn greedy_rejects_oversize_n() {
        let err = greedy_construct(&params(11, 3), ConstructionOrder::Lexicographic, 0)
            .unwrap_err();
        match err {
            CodesError::InfeasibleLength { n: 11, cap: 10, scan_size } => {
                assert_eq!(scan_size, 39916800);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn verify_singleton_reports_n_by_convention() {
        let code = PermutationCode {
            n: 6,
            d: 3,
            words: vec![Permutation::identity(6)],
        };
        let report = verify(&code).unwrap();
        assert!(report.ok);
        assert_eq!(report.min_distance, 6);
        assert_eq!(report.violating_pair, None);
    }

    #[test]
    fn verify_flags_a_close_pair() {
        let id = Permutation::identity(5);
        let swap = Permutation::from_images(vec![1, 0, 2, 3, 4]).unwrap();
        let code = PermutationCode { n: 5, d: 3, words: vec![id, swap] };
        let report = verify(&code).unwrap();
        assert!(!report.ok);
        assert_eq!(report.min_distance, 2);
        assert_eq!(report.violating_pair, Some((0, 1)));
    }

    #[test]
    fn verify_reports_true_minimum_and_smallest_pair() {
        let words = vec![
            Permutation::identity(4),                            // 0
            Permutation::from_images(vec![1, 0, 3, 2]).unwrap(), // 1: dist 4 from id
            Permutation::from_images(vec![0, 1, 3, 2]).unwrap(), // 2: dist 2 from id
            Permutation::from_images(vec![1, 0, 2, 3]).unwrap(), // 3: dist 2 from id, 2 from 1
        ];
        let code = PermutationCode { n: 4, d: 4, words };
        let report = verify(&code).unwrap();
        assert_eq!(report.min_distance, 2);
        assert_eq!(report.violating_pair, Some((0, 2)));
    }

    #[test]
    fn verify_rejects_length_mismatch_with_index() {
        let code = PermutationCode {
            n: 4,
            d: 2,
            words: vec![Permutation::identity(4), Permutation::identity(5)],
        };
        assert!(matches!(
            verify(&code),
            Err(CodesError::WordLengthMismatch { index: 1, expected: 4, got: 5 })
        ));
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn verify_parallel_matches_sequential() {
        let code = lex_greedy(6, 3);
        assert_eq!(verify(&code).unwrap(), verify_sequential(&code).unwrap());
        let mut broken = code.clone();
        broken.words.push(broken.words[3].clone());
        assert_eq!(verify(&broken).unwrap(), verify_sequential(&broken).unwrap());
    }

    #[test]
    fn serialize_round_trips() {
        let code = lex_greedy(5, 3);
        let text = serialize(&code);
        assert!(text.starts_with("5 3\n"));
        let back = deserialize(&text).unwrap();
        assert_eq!(back, code);
        // Bit-faithful: serializing the parse gives the same bytes.
        assert_eq!(serialize(&back), text);
    }

    #[test]
    fn deserialize_ignores_comments_and_blank_lines() {
        let text = "# constructed by hand\n\n3 3\n# the identity\n1 2 3\n2 3 1\n";
        let code = deserialize(text).unwrap();
        assert_eq!((code.n, code.d), (3, 3));
        assert_eq!(code.words.len(), 2);
        assert_eq!(code.words[0], Permutation::identity(3));
    }

    #[test]
    fn deserialize_accepts_repeated_words_and_verify_flags_them() {
        let text = "4 3\n1 2 3 4\n1 2 3 4\n";
        let code = deserialize(text).unwrap();
        let report = verify(&code).unwrap();
        assert!(!report.ok);
        assert_eq!(report.min_distance, 0);
        assert_eq!(report.violating_pair, Some((0, 1)));
    }

    #[test]
    fn deserialize_errors_carry_line_and_column() {
        // Bad token on a word line.
        let err = deserialize("3 2\n1 x 3\n").unwrap_err();
        assert!(matches!(err, CodesError::Parse { line: 2, column: 3, .. }), "{err}");

        // Wrong image count.
        let err = deserialize("3 2\n1 2\n").unwrap_err();
        assert!(matches!(err, CodesError::Parse { line: 2, .. }), "{err}");

        // Out-of-range image.
        let err = deserialize("3 2\n1 2 4\n").unwrap_err();
        assert!(matches!(err, CodesError::Parse { line: 2, column: 5, .. }), "{err}");

        // Duplicate image points at the second occurrence.
        let err = deserialize("3 2\n1 2 2\n").unwrap_err();
        assert!(matches!(err, CodesError::Parse { line: 2, column: 5, .. }), "{err}");

        // Bad header.
        let err = deserialize("3\n1 2 3\n").unwrap_err();
        assert!(matches!(err, CodesError::Parse { line: 1, .. }), "{err}");
        let err = deserialize("3 4\n").unwrap_err();
        assert!(matches!(err, CodesError::Parse { line: 1, .. }), "{err}");

        // Missing header entirely.
        let err = deserialize("# nothing here\n").unwrap_err();
        assert!(matches!(err, CodesError::Parse { .. }), "{err}");
    }

    #[test]
    fn random_codes_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..50 {
            let n = rng.random_range(2..=7usize);
            let d = rng.random_range(2..=n) as u32;
            let count: u64 = (1..=n as u64).product();
            let words: Vec<Permutation> = (0..rng.random_range(1..=40))
                .map(|_| Permutation::from_lex_rank(n, rng.random_range(0..count)))
                .collect();
            let code = PermutationCode { n: n as u32, d, words };
            assert_eq!(deserialize(&serialize(&code)).unwrap(), code);
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arbitrary_code() -> impl Strategy<Value = PermutationCode> {
            (2u32..=7).prop_flat_map(|n| {
                let count: u64 = (1..=n as u64).product();
                (
                    Just(n),
                    2..=n,
                    prop::collection::vec(0..count, 1..40),
                )
                    .prop_map(move |(n, d, ranks)| PermutationCode {
                        n,
                        d,
                        words: ranks
                            .into_iter()
                            .map(|r| Permutation::from_lex_rank(n as usize, r))
                            .collect(),
                    })
            })
        }

        proptest! {
            #[test]
            fn serialization_round_trips(code in arbitrary_code()) {
                let text = serialize(&code);
                prop_assert_eq!(deserialize(&text).unwrap(), code);
            }

            #[test]
            fn early_exit_distance_check_matches_full_count(
                code in arbitrary_code(),
                d in 0usize..=8,
            ) {
                for a in &code.words {
                    for b in &code.words {
                        let full = hamming_distance(a, b).unwrap();
                        prop_assert_eq!(at_distance(a, b, d), full >= d);
                    }
                }
            }
        }
    }

    #[test]
    fn greedy_never_beats_the_exact_optimum() {
        use crate::exactgraph::{build_graph, exact_alpha};
        for n in 2..=5u32 {
            for d in 2..=n {
                let p = params(n, d);
                let greedy = lex_greedy(n, d).words.len();
                let graph = build_graph(&p).unwrap();
                let (alpha, _) = exact_alpha(&graph, false).unwrap();
                assert!(greedy <= alpha, "greedy({n},{d}) = {greedy} > alpha = {alpha}");
            }
        }
    }
}
