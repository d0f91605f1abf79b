//! The adaptive query game: an oracle knows a hidden binary word of public
//! length `n` and answers count queries; the strategy asks `b`, then
//! `x^ℓ y` for `ℓ = 1, 2, …` until the answers pin the word down.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::ToPrimitive;

use crate::binary::{count_solutions, reconstruct_blocks, BlockOutcome, BlockSystem, Orientation};
use crate::error::{Error, Result};
use crate::words::{count_letters, Alphabet, BigCount, Word};

/// Answers `C(hidden, u)` for a hidden word whose length is public.
pub trait Oracle {
    fn alphabet(&self) -> &Arc<Alphabet>;
    fn length(&self) -> usize;
    fn answer(&mut self, query: &Word) -> Result<BigCount>;
}

/// Oracle backed by an in-memory word.
#[derive(Clone, Debug)]
pub struct WordOracle {
    hidden: Word,
    calls: usize,
}

impl WordOracle {
    pub fn new(hidden: Word) -> Self {
        WordOracle { hidden, calls: 0 }
    }

    pub fn calls(&self) -> usize {
        self.calls
    }
}

impl Oracle for WordOracle {
    fn alphabet(&self) -> &Arc<Alphabet> {
        self.hidden.alphabet()
    }

    fn length(&self) -> usize {
        self.hidden.len()
    }

    fn answer(&mut self, query: &Word) -> Result<BigCount> {
        self.hidden.check_same_alphabet(query)?;
        self.calls += 1;
        Ok(count_letters(self.hidden.letters(), query.letters()))
    }
}

/// Oracle replaying recorded answers; unrecorded queries are an error.
#[derive(Clone, Debug)]
pub struct TranscriptOracle {
    alphabet: Arc<Alphabet>,
    n: usize,
    answers: HashMap<Word, BigCount>,
}

impl TranscriptOracle {
    pub fn new(
        alphabet: Arc<Alphabet>,
        n: usize,
        answers: impl IntoIterator<Item = (Word, BigCount)>,
    ) -> Self {
        TranscriptOracle {
            alphabet,
            n,
            answers: answers.into_iter().collect(),
        }
    }

    pub fn from_transcript(t: &QueryTranscript) -> Self {
        Self::new(t.alphabet.clone(), t.n, t.queries.iter().cloned())
    }
}

impl Oracle for TranscriptOracle {
    fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    fn length(&self) -> usize {
        self.n
    }

    fn answer(&mut self, query: &Word) -> Result<BigCount> {
        self.answers
            .get(query)
            .cloned()
            .ok_or_else(|| Error::UnansweredQuery(query.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Word(Word),
    Failure(String),
}

/// Queries in the order asked, with their answers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryTranscript {
    pub(crate) n: usize,
    pub(crate) alphabet: Arc<Alphabet>,
    pub(crate) queries: Vec<(Word, BigCount)>,
    pub(crate) outcome: Outcome,
}

impl QueryTranscript {
    pub fn new(
        n: usize,
        alphabet: Arc<Alphabet>,
        queries: Vec<(Word, BigCount)>,
        outcome: Outcome,
    ) -> Result<Self> {
        for (i, (q, _)) in queries.iter().enumerate() {
            if q.alphabet() != &alphabet {
                return Err(Error::AlphabetMismatch {
                    left: alphabet.to_string(),
                    right: q.alphabet().to_string(),
                });
            }
            if queries[..i].iter().any(|(p, _)| p == q) {
                return Err(Error::Parse(format!("query {q} is repeated")));
            }
        }
        Ok(QueryTranscript {
            n,
            alphabet,
            queries,
            outcome,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn queries(&self) -> &[(Word, BigCount)] {
        &self.queries
    }

    pub fn len(&self) -> usize {
        self.queries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.queries.is_empty()
    }

    pub fn outcome(&self) -> &Outcome {
        &self.outcome
    }

    pub fn word(&self) -> Option<&Word> {
        match &self.outcome {
            Outcome::Word(w) => Some(w),
            Outcome::Failure(_) => None,
        }
    }
}

/// Plays the game against `oracle`. Oracle errors propagate; answers that
/// fit no word end the game with [`Outcome::Failure`].
pub fn adaptive_reconstruct<O: Oracle + ?Sized>(oracle: &mut O) -> Result<QueryTranscript> {
    let alphabet = oracle.alphabet().clone();
    if alphabet.size() != 2 {
        return Err(Error::NotBinary(alphabet.size()));
    }
    let n = oracle.length();
    let mut queries = Vec::new();
    let finish = |queries, outcome| QueryTranscript {
        n,
        alphabet: alphabet.clone(),
        queries,
        outcome,
    };
    if n == 0 {
        return Ok(finish(queries, Outcome::Word(Word::empty(&alphabet))));
    }

    let b = Word::from_letters(&alphabet, vec![1]);
    let k_b = oracle.answer(&b)?;
    queries.push((b, k_b.clone()));
    let Some(k_b) = k_b.to_usize().filter(|&k| k <= n) else {
        return Ok(finish(
            queries,
            Outcome::Failure(format!("count of b exceeds the length {n}")),
        ));
    };
    let k_a = n - k_b;
    let orientation = Orientation::preferred(k_a, k_b);
    let pair = orientation.letters();
    let (blocks, others) = match orientation {
        Orientation::Ab => (k_a, k_b),
        Orientation::Ba => (k_b, k_a),
    };
    let mut sys = BlockSystem::new(n, blocks, orientation)?;
    sys.insert(0, BigCount::from(others))?;

    let mut level = 0;
    loop {
        let settled = level > 0 || blocks == 0 || others == 0;
        if settled {
            let hits = if level == 0 {
                1
            } else {
                count_solutions(n, blocks, level, &sys.known()[&level], 2)?
            };
            if hits == 0 {
                let why = format!("no word of length {n} fits the answer at level {level}");
                return Ok(finish(queries, Outcome::Failure(why)));
            }
            if hits == 1 {
                let outcome = match reconstruct_blocks(&sys)? {
                    BlockOutcome::Unique { decomposition, .. } => {
                        Outcome::Word(decomposition.to_word(&alphabet, pair))
                    }
                    BlockOutcome::Inconsistent(why) => Outcome::Failure(why),
                    BlockOutcome::NotYetUnique { level, .. } => {
                        Outcome::Failure(format!("level {level} unexpectedly ambiguous"))
                    }
                };
                return Ok(finish(queries, outcome));
            }
        }
        level += 1;
        let query = pair.query(&alphabet, level);
        let value = oracle.answer(&query)?;
        queries.push((query, value.clone()));
        sys.insert(level, value)?;
    }
}

/// The fixed query set `{y, x y, x² y, …, x^h y}` with `h = min(k_a, k_b)`,
/// `x` the rarer letter (`a` on ties). Its first element gives the count of
/// `y`.
pub fn nonadaptive_set(alphabet: &Arc<Alphabet>, n: usize, k_a: usize) -> Result<Vec<Word>> {
    if alphabet.size() != 2 {
        return Err(Error::NotBinary(alphabet.size()));
    }
    if k_a > n {
        return Err(Error::CountExceedsLength { count: k_a, n });
    }
    let k_b = n - k_a;
    let pair = Orientation::preferred(k_a, k_b).letters();
    Ok((0..=k_a.min(k_b))
        .map(|level| pair.query(alphabet, level))
        .collect())
}

/// True iff `candidate` has length `n` and reproduces every recorded answer.
pub fn replay(transcript: &QueryTranscript, candidate: &Word) -> bool {
    candidate.len() == transcript.n
        && candidate.alphabet() == &transcript.alphabet
        && transcript
            .queries
            .iter()
            .all(|(q, a)| count_letters(candidate.letters(), q.letters()) == *a)
}
