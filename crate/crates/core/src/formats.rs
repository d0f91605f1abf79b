//! JSON encodings of block systems, transcripts, projection maps,
//! coefficient maps and subset lists. Counts are written as decimal strings
//! and accepted as strings or plain numbers.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::binary::{BlockSystem, Orientation};
use crate::error::{Error, Result};
use crate::multi::general::CoefficientMap;
use crate::multi::projection::{Pair, ProjectionMap};
use crate::protocol::{Outcome, QueryTranscript};
use crate::words::{Alphabet, BigCount, Letter, Word};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Count {
    Text(String),
    Number(u64),
}

impl Count {
    fn value(&self) -> Result<BigCount> {
        match self {
            Count::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad count {s:?}"))),
            Count::Number(n) => Ok(BigCount::from(*n)),
        }
    }
}

impl From<&BigCount> for Count {
    fn from(v: &BigCount) -> Self {
        Count::Text(v.to_string())
    }
}

fn parse<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn render<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn word(alphabet: &Arc<Alphabet>, s: &str) -> Result<Word> {
    Word::parse(alphabet, s)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockSystemJson {
    n: usize,
    k_a: usize,
    #[serde(default, skip_serializing_if = "is_default")]
    orientation: Orientation,
    pairs: Vec<(usize, Count)>,
}

fn is_default(o: &Orientation) -> bool {
    *o == Orientation::default()
}

/// `{"n", "k_a", "orientation"?, "pairs": [[level, count], …]}`; `k_a` is
/// the number of block letters.
pub fn block_system_to_json(sys: &BlockSystem) -> String {
    render(&BlockSystemJson {
        n: sys.n(),
        k_a: sys.block_count(),
        orientation: sys.orientation(),
        pairs: sys.known().iter().map(|(&l, v)| (l, v.into())).collect(),
    })
}

pub fn block_system_from_json(text: &str) -> Result<BlockSystem> {
    let raw: BlockSystemJson = parse(text)?;
    let mut sys = BlockSystem::new(raw.n, raw.k_a, raw.orientation)?;
    for (level, v) in raw.pairs {
        sys.insert(level, v.value()?)?;
    }
    Ok(sys)
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum OutcomeJson {
    Word(String),
    Failure(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TranscriptJson {
    n: usize,
    alphabet: String,
    queries: Vec<(String, Count)>,
    outcome: OutcomeJson,
}

/// `{"n", "alphabet", "queries": [[word, count], …], "outcome": {"word": w} | {"failure": reason}}`.
pub fn transcript_to_json(t: &QueryTranscript) -> String {
    render(&TranscriptJson {
        n: t.n(),
        alphabet: t.alphabet().to_string(),
        queries: t
            .queries()
            .iter()
            .map(|(q, a)| (q.to_string(), a.into()))
            .collect(),
        outcome: match t.outcome() {
            Outcome::Word(w) => OutcomeJson::Word(w.to_string()),
            Outcome::Failure(why) => OutcomeJson::Failure(why.clone()),
        },
    })
}

pub fn transcript_from_json(text: &str) -> Result<QueryTranscript> {
    let raw: TranscriptJson = parse(text)?;
    let alphabet = Alphabet::parse(&raw.alphabet)?;
    let queries = raw
        .queries
        .iter()
        .map(|(q, a)| Ok((word(&alphabet, q)?, a.value()?)))
        .collect::<Result<Vec<_>>>()?;
    let outcome = match raw.outcome {
        OutcomeJson::Word(w) => Outcome::Word(word(&alphabet, &w)?),
        OutcomeJson::Failure(why) => Outcome::Failure(why),
    };
    QueryTranscript::new(raw.n, alphabet, queries, outcome)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProjectionsJson {
    alphabet: String,
    projections: BTreeMap<String, String>,
}

/// `{"alphabet", "projections": {"ab": word, …}}`.
pub fn projections_to_json(map: &ProjectionMap) -> String {
    render(&ProjectionsJson {
        alphabet: map.alphabet().to_string(),
        projections: map
            .iter()
            .map(|(p, w)| (p.name(map.alphabet()), w.to_string()))
            .collect(),
    })
}

pub fn projections_from_json(text: &str) -> Result<ProjectionMap> {
    let raw: ProjectionsJson = parse(text)?;
    let alphabet = Alphabet::parse(&raw.alphabet)?;
    let mut map = ProjectionMap::new(&alphabet);
    for (pair, w) in &raw.projections {
        map.insert(Pair::parse(&alphabet, pair)?, word(&alphabet, w)?)?;
    }
    Ok(map)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoefficientsJson {
    alphabet: String,
    n: usize,
    coefficients: BTreeMap<String, BTreeMap<String, Count>>,
}

/// `{"alphabet", "n", "coefficients": {"xy": {"level": count, …}, …}}`; the
/// key `xy` stands for the words `x^level y`.
pub fn coefficients_to_json(n: usize, map: &CoefficientMap) -> String {
    let mut coefficients: BTreeMap<String, BTreeMap<String, Count>> = BTreeMap::new();
    for ((x, y), level, v) in map.iter() {
        coefficients
            .entry(map.pair_name(x, y))
            .or_default()
            .insert(level.to_string(), v.into());
    }
    render(&CoefficientsJson {
        alphabet: map.alphabet().to_string(),
        n,
        coefficients,
    })
}

pub fn coefficients_from_json(text: &str) -> Result<(usize, CoefficientMap)> {
    let raw: CoefficientsJson = parse(text)?;
    let alphabet = Alphabet::parse(&raw.alphabet)?;
    let mut map = CoefficientMap::new(&alphabet);
    for (key, levels) in &raw.coefficients {
        let (x, y) = match alphabet.parse_letters(key)?.as_slice() {
            &[x, y] if x != y => (x, y),
            _ => return Err(Error::InvalidPair(key.clone())),
        };
        for (level, v) in levels {
            let level = level
                .parse()
                .map_err(|_| Error::Parse(format!("bad level {level:?} for pair {key}")))?;
            map.insert(x, y, level, v.value()?)?;
        }
    }
    Ok((raw.n, map))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SetsJson {
    alphabet: String,
    sets: Vec<String>,
}

/// `{"alphabet", "sets": ["ab", "bc", …]}`.
pub fn sets_to_json(alphabet: &Alphabet, sets: &[Vec<Letter>]) -> String {
    render(&SetsJson {
        alphabet: alphabet.to_string(),
        sets: sets
            .iter()
            .map(|s| s.iter().map(|&l| alphabet.symbol(l)).collect())
            .collect(),
    })
}

pub fn sets_from_json(text: &str) -> Result<(Arc<Alphabet>, Vec<Vec<Letter>>)> {
    let raw: SetsJson = parse(text)?;
    let alphabet = Alphabet::parse(&raw.alphabet)?;
    let sets = raw
        .sets
        .iter()
        .map(|s| alphabet.parse_letters(s))
        .collect::<Result<Vec<_>>>()?;
    Ok((alphabet, sets))
}
