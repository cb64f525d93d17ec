use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;
use tokensym::baselines::{CorpusStats, DEFAULT_SOFT_TFIDF_THETA};
use tokensym::hybrid::HybridConfig;
use tokensym::metric::{
    CharacterMetric, JaccardTokens, MongeElkanHybrid, SoftTfidf, TagLink, Tfidf,
};
use tokensym::seqmetrics::BaseMetric;
use tokensym::StringMetric;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid metric {input:?}: {reason}")]
pub struct SpecError {
    input: String,
    reason: String,
}

/// A parsed metric selector such as `liuppa:1,1`, `liuppa:1,1:eps=0.9`,
/// `jarowinkler`, `softtfidf:theta=0.85` or `taglink`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MetricSpec {
    Hybrid(HybridConfig),
    Character(BaseMetric),
    Jaccard,
    Tfidf,
    SoftTfidf { theta: f64 },
    TagLink,
    MongeElkanHybrid,
}

impl MetricSpec {
    /// Whether the metric reads document frequencies.
    pub fn needs_corpus(&self) -> bool {
        matches!(self, MetricSpec::Tfidf | MetricSpec::SoftTfidf { .. })
    }

    pub fn build(&self, stats: &Arc<CorpusStats>) -> Box<dyn StringMetric> {
        match *self {
            MetricSpec::Hybrid(config) => Box::new(config),
            MetricSpec::Character(metric) => Box::new(CharacterMetric(metric)),
            MetricSpec::Jaccard => Box::new(JaccardTokens),
            MetricSpec::Tfidf => Box::new(Tfidf {
                stats: stats.clone(),
            }),
            MetricSpec::SoftTfidf { theta } => Box::new(SoftTfidf {
                stats: stats.clone(),
                theta,
            }),
            MetricSpec::TagLink => Box::new(TagLink),
            MetricSpec::MongeElkanHybrid => Box::new(MongeElkanHybrid),
        }
    }
}

fn parse_unit(value: &str, what: &str) -> Result<f64, String> {
    let x: f64 = value
        .parse()
        .map_err(|_| format!("{what} must be a number, got {value:?}"))?;
    if x > 0.0 && x <= 1.0 {
        Ok(x)
    } else {
        Err(format!("{what} must lie in (0, 1], got {x}"))
    }
}

fn parse_hybrid(rest: &str) -> Result<HybridConfig, String> {
    let (codes, option) = match rest.split_once(':') {
        Some((codes, option)) => (codes, Some(option)),
        None => (rest, None),
    };
    let (i, j) = codes
        .split_once(',')
        .ok_or_else(|| "expected liuppa:i,j".to_owned())?;
    let code = |s: &str| {
        s.trim()
            .parse::<u32>()
            .map_err(|_| format!("metric code must be an integer, got {s:?}"))
    };
    let mut config = HybridConfig::from_codes(code(i)?, code(j)?).map_err(|e| e.to_string())?;
    if let Some(option) = option {
        let eps = option
            .strip_prefix("eps=")
            .ok_or_else(|| format!("unknown option {option:?}, expected eps=<x>"))?;
        config = config
            .with_epsilon(parse_unit(eps, "eps")?)
            .map_err(|e| e.to_string())?;
    }
    Ok(config)
}

impl FromStr for MetricSpec {
    type Err = SpecError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = |reason: String| SpecError {
            input: input.to_owned(),
            reason,
        };
        let lowered = input.trim().to_ascii_lowercase();
        if let Some(rest) = lowered.strip_prefix("liuppa:") {
            return parse_hybrid(rest).map(MetricSpec::Hybrid).map_err(err);
        }
        if let Some(rest) = lowered.strip_prefix("softtfidf:") {
            let theta = rest
                .strip_prefix("theta=")
                .ok_or_else(|| err(format!("unknown option {rest:?}, expected theta=<x>")))?;
            let theta = parse_unit(theta, "theta").map_err(err)?;
            return Ok(MetricSpec::SoftTfidf { theta });
        }
        Ok(match lowered.as_str() {
            "jaccard" => MetricSpec::Jaccard,
            "tfidf" => MetricSpec::Tfidf,
            "softtfidf" => MetricSpec::SoftTfidf {
                theta: DEFAULT_SOFT_TFIDF_THETA,
            },
            "taglink" => MetricSpec::TagLink,
            "mongeelkan_hybrid" => MetricSpec::MongeElkanHybrid,
            name => BaseMetric::from_name(name)
                .map(MetricSpec::Character)
                .ok_or_else(|| err("unknown metric name".into()))?,
        })
    }
}

impl fmt::Display for MetricSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let stats = Arc::new(CorpusStats::default());
        f.write_str(&self.build(&stats).name())
    }
}
