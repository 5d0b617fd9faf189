//! Uniform report for every subcommand.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// A value stated by a theorem or table.
    Reference,
    /// Cross-checked against an independent computation.
    Oracle,
    /// Informational; always passes.
    Query,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Item {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub kind: Kind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: String,
    pub passed: String,
    pub failed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub seed: String,
    pub items: Vec<Item>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<BTreeMap<String, String>>,
    pub summary: Summary,
}

#[derive(Debug)]
pub struct Builder {
    command: String,
    seed: u64,
    items: Vec<Item>,
    rows: Vec<BTreeMap<String, String>>,
}

impl Builder {
    pub fn new(command: String, seed: u64) -> Self {
        Builder {
            command,
            seed,
            items: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn query(&mut self, name: impl Into<String>, value: impl Display) {
        let v = value.to_string();
        self.items.push(Item {
            name: name.into(),
            expected: v.clone(),
            computed: v,
            pass: true,
            kind: Kind::Query,
        });
    }

    pub fn check<T: Display + PartialEq>(
        &mut self,
        name: impl Into<String>,
        expected: T,
        computed: T,
        kind: Kind,
    ) {
        self.items.push(Item {
            name: name.into(),
            pass: expected == computed,
            expected: expected.to_string(),
            computed: computed.to_string(),
            kind,
        });
    }

    pub fn row(&mut self, row: BTreeMap<String, String>) {
        self.rows.push(row);
    }

    pub fn finish(self) -> Report {
        let total = self.items.len();
        let passed = self.items.iter().filter(|i| i.pass).count();
        Report {
            command: self.command,
            seed: self.seed.to_string(),
            items: self.items,
            rows: self.rows,
            summary: Summary {
                total: total.to_string(),
                passed: passed.to_string(),
                failed: (total - passed).to_string(),
            },
        }
    }
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("$ {}\nseed {}\n", self.command, self.seed);
        let width = self
            .items
            .iter()
            .map(|i| i.name.chars().count())
            .max()
            .unwrap_or(0);
        for i in &self.items {
            let pad = " ".repeat(width - i.name.chars().count());
            match i.kind {
                Kind::Query => out.push_str(&format!("  {}{pad}  {}\n", i.name, i.computed)),
                _ => out.push_str(&format!(
                    "  {}{pad}  {}  (expected {}) {} [{}]\n",
                    i.name,
                    i.computed,
                    i.expected,
                    if i.pass { "ok" } else { "FAIL" },
                    if i.kind == Kind::Reference {
                        "reference"
                    } else {
                        "oracle"
                    },
                )),
            }
        }
        out.push_str(&format!(
            "{} items, {} passed, {} failed\n",
            self.summary.total, self.summary.passed, self.summary.failed
        ));
        out
    }
}

pub fn join<T: Display>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn braces<T: Display>(xs: impl IntoIterator<Item = T>) -> String {
    format!("{{{}}}", join(xs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut b = Builder::new("ellipstab roots G2".into(), 3);
        b.query("rank", 2);
        b.check("h0", "-3/2", "-3/2", Kind::Reference);
        b.check("h1", 1, 2, Kind::Oracle);
        b.row(BTreeMap::from([("k".to_string(), "1".to_string())]));
        let r = b.finish();
        assert!(!r.all_pass());
        assert_eq!(r.summary.failed, "1");
        let text = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(r.to_text().contains("FAIL"));
    }
}
