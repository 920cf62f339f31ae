use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{min_obstacles_fixed, MinimizeConfig, MinimizeResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::random::{default_range, random_simple_points};
use crate::representation::Embedding;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Number of embeddings to sample; at least 1.
    pub budget: usize,
    pub seed: u64,
    /// Coordinates are drawn from `[0, range]`; `n⁴` when unset.
    pub range: Option<i64>,
    /// Fresh samples tried when perturbation to a simple sequence fails.
    pub retries: usize,
    pub minimize: MinimizeConfig,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: 1000,
            seed: 0,
            range: None,
            retries: 16,
            minimize: MinimizeConfig::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub best: MinimizeResult<Rational>,
    pub embedding: Embedding<Rational>,
    /// Samples drawn before stopping.
    pub samples: usize,
    /// Index of the sample that produced `best`.
    pub best_sample: usize,
    /// Best count after each sample.
    pub history: Vec<usize>,
}

/// Samples random embeddings and keeps the one with the fewest obstacles.
///
/// Sample `i` draws from its own ChaCha stream, so results do not depend on
/// evaluation order. Stops early once the count reaches the trivial lower
/// bound (0 for complete graphs, 1 otherwise).
pub fn obstacle_number_search(graph: &Graph, cfg: SearchConfig) -> Result<SearchOutcome> {
    if cfg.budget == 0 {
        return Err(Error::InvalidParameter("search budget must be at least 1".into()));
    }
    let n = graph.n();
    let range = cfg.range.unwrap_or_else(|| default_range(n));
    if range < 1 {
        return Err(Error::InvalidParameter(
            "coordinate range must be positive".into(),
        ));
    }
    let floor = usize::from(!graph.is_complete());
    let mut best: Option<(MinimizeResult<Rational>, usize)> = None;
    let mut history = Vec::new();
    let mut budget_hit = None;
    for i in 0..cfg.budget {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(i as u64);
        let emb = random_simple_points(n, range, cfg.retries, &mut rng)?;
        match min_obstacles_fixed(graph, &emb, cfg.minimize) {
            Ok(r) => {
                if best.as_ref().is_none_or(|(b, _)| r.count < b.count) {
                    best = Some((r, i));
                }
            }
            Err(Error::BudgetExceeded { best_upper }) => {
                budget_hit = Some(budget_hit.map_or(best_upper, |b: usize| b.min(best_upper)));
            }
            Err(e) => return Err(e),
        }
        history.push(best.as_ref().map_or(usize::MAX, |(b, _)| b.count));
        if best.as_ref().is_some_and(|(b, _)| b.count <= floor) {
            break;
        }
    }
    match best {
        Some((best, best_sample)) => Ok(SearchOutcome {
            embedding: best.certificate.embedding.clone(),
            best,
            samples: history.len(),
            best_sample,
            history,
        }),
        None => Err(Error::BudgetExceeded {
            best_upper: budget_hit.unwrap_or(usize::MAX),
        }),
    }
}
