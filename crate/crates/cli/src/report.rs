use std::collections::BTreeMap;

use serde::Serialize;

/// One record per command run. Result values are exact decimal integers
/// (or comma-separated lists of them); fitted quantities go in `estimates`.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub estimates: BTreeMap<String, String>,
    pub wall_time_us: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget_used: Option<String>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            parameters: BTreeMap::new(),
            results: BTreeMap::new(),
            estimates: BTreeMap::new(),
            wall_time_us: 0,
            budget_used: None,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(key.to_owned(), value.to_string());
        self
    }

    pub fn result(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.results.insert(key.to_owned(), value.to_string());
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            return serde_json::to_string(self).expect("report is plain data");
        }
        let mut out = format!("command: {}\n", self.command);
        for (k, v) in &self.parameters {
            out += &format!("  {k} = {v}\n");
        }
        for (k, v) in &self.results {
            out += &format!("{k}: {v}\n");
        }
        for (k, v) in &self.estimates {
            out += &format!("{k} (estimate): {v}\n");
        }
        if let Some(b) = &self.budget_used {
            out += &format!("budget used: {b}\n");
        }
        out += &format!("wall time: {} us", self.wall_time_us);
        out
    }
}
