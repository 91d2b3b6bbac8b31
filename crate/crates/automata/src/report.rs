use serde::Serialize;

/// One verified fact: a measured integer against its expected value.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub experiment: String,
    pub family: String,
    pub n: u64,
    pub measured: i64,
    pub expected: i64,
    pub verdict: Verdict,
    pub runtime_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Budget exceeded; never counts as a pass.
    Skipped,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub experiment_id: String,
    pub rows: Vec<ReportRow>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Markdown,
    Csv,
    Json,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "md" => Some(Self::Markdown),
            "csv" => Some(Self::Csv),
            "json" => Some(Self::Json),
            _ => None,
        }
    }
}

impl Report {
    pub fn new(experiment_id: impl Into<String>) -> Self {
        Report {
            experiment_id: experiment_id.into(),
            rows: Vec::new(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.verdict == Verdict::Pass)
    }

    pub fn any_skipped(&self) -> bool {
        self.rows.iter().any(|r| r.verdict == Verdict::Skipped)
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Markdown => self.to_markdown(),
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => serde_json::to_string_pretty(self).unwrap(),
        }
    }

    fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("| experiment | family | n | measured | expected | verdict | runtime_ms |\n");
        out.push_str("|---|---|---|---|---|---|---|\n");
        for r in &self.rows {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} | {} |\n",
                r.experiment, r.family, r.n, r.measured, r.expected, r.verdict, r.runtime_ms
            ));
        }
        out
    }

    fn to_csv(&self) -> String {
        let mut out = String::from("experiment,family,n,measured,expected,verdict,runtime_ms\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                r.experiment, r.family, r.n, r.measured, r.expected, r.verdict, r.runtime_ms
            ));
        }
        out
    }
}

/// Experiment configuration; an identical config (seed included) reproduces
/// identical measurements.
#[derive(Clone, Copy, Debug)]
pub struct RunConfig {
    pub seed: u64,
    /// Overrides the per-experiment default sample count when set.
    pub samples: Option<usize>,
    /// Cap for exhaustive enumeration.
    pub enumeration_budget: u64,
    /// Caps for the fooling-set search.
    pub fooling_budget: crate::witness::FoolingBudget,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 1,
            samples: None,
            enumeration_budget: 1 << 24,
            fooling_budget: crate::witness::FoolingBudget::default(),
        }
    }
}
