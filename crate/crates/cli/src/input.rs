use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read};

use anyhow::{anyhow, bail, Context, Result};
use relconvex::{RealSeq, RealWitness, Seq, WeightVec, Weights, Witness};

/// Named numeric columns read from JSON or CSV.
#[derive(Debug, Default)]
pub struct Inputs {
    columns: BTreeMap<String, Vec<f64>>,
}

impl Inputs {
    pub fn load(source: Option<&str>) -> Result<Self> {
        let Some(source) = source else {
            return Ok(Inputs::default());
        };
        let text = if source == "-" {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            s
        } else {
            fs::read_to_string(source).with_context(|| format!("reading {source}"))?
        };
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_csv(text)
        }
    }

    fn parse_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).context("parsing JSON input")?;
        let object = value
            .as_object()
            .ok_or_else(|| anyhow!("JSON input must be an object of named arrays"))?;
        let mut columns = BTreeMap::new();
        for (name, v) in object {
            let items = match v {
                serde_json::Value::Array(items) => items.clone(),
                serde_json::Value::Number(_) => vec![v.clone()],
                _ => bail!("field {name:?} must be a number or an array of numbers"),
            };
            let numbers = items
                .iter()
                .enumerate()
                .map(|(i, x)| {
                    x.as_f64()
                        .ok_or_else(|| anyhow!("{name}[{}] is not a number", i + 1))
                })
                .collect::<Result<Vec<f64>>>()?;
            columns.insert(name.clone(), numbers);
        }
        Ok(Inputs { columns })
    }

    fn parse_csv(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .flexible(true)
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let headers: Vec<String> = reader
            .headers()
            .context("reading CSV header")?
            .iter()
            .map(str::to_owned)
            .collect();
        let mut columns: BTreeMap<String, Vec<f64>> =
            headers.iter().map(|h| (h.clone(), Vec::new())).collect();
        for (row, record) in reader.records().enumerate() {
            let record = record.context("reading CSV record")?;
            for (name, cell) in headers.iter().zip(record.iter()) {
                if cell.is_empty() {
                    continue;
                }
                let x: f64 = cell
                    .parse()
                    .with_context(|| format!("column {name:?}, row {}: {cell:?} is not a number", row + 1))?;
                columns.get_mut(name).expect("header column").push(x);
            }
        }
        Ok(Inputs { columns })
    }

    pub fn raw(&self, name: &str) -> Option<&[f64]> {
        self.columns.get(name).map(Vec::as_slice)
    }

    pub fn require(&self, name: &str) -> Result<&[f64]> {
        self.raw(name)
            .ok_or_else(|| anyhow!("missing input sequence {name:?}"))
    }

    pub fn seq(&self, name: &str) -> Result<RealSeq> {
        Seq::new(self.require(name)?.to_vec()).with_context(|| format!("sequence {name:?}"))
    }

    pub fn witness(&self, name: &str) -> Result<RealWitness> {
        Witness::new(self.require(name)?.to_vec()).with_context(|| format!("sequence {name:?}"))
    }

    /// Weights named `p`, or uniform weights of length `n` when absent.
    pub fn weights_or_uniform(&self, n: usize) -> Result<WeightVec> {
        match self.raw("p") {
            Some(p) => Weights::new(p.to_vec()).context("weights \"p\""),
            None => Ok(Weights::uniform(n)?),
        }
    }

    /// A column of 1-based positions.
    pub fn indices(&self, name: &str) -> Result<Vec<usize>> {
        self.require(name)?
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                if x >= 1.0 && x.fract() == 0.0 {
                    Ok(x as usize)
                } else {
                    Err(anyhow!("{name}[{}] = {x} is not a positive integer", i + 1))
                }
            })
            .collect()
    }
}
