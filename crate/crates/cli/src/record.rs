//! JSON shape of one run. Infinite reals are written as `"inf"`/`"-inf"`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Real(pub f64);

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            v if v.is_finite() => s.serialize_f64(v),
            v if v > 0.0 => s.serialize_str("inf"),
            v if v < 0.0 => s.serialize_str("-inf"),
            _ => s.serialize_str("nan"),
        }
    }
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(f64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(Real(v)),
            Repr::Text(t) => match t.as_str() {
                "inf" => Ok(Real(f64::INFINITY)),
                "-inf" => Ok(Real(f64::NEG_INFINITY)),
                "nan" => Ok(Real(f64::NAN)),
                other => Err(serde::de::Error::custom(format!("not a real: {other:?}"))),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpec {
    pub n: usize,
    /// `"unit"` or the path of the sigma file.
    pub sigma: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuerySpec {
    pub interval: [Real; 2],
    pub u: Real,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Real>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultRow {
    pub method: String,
    pub value: f64,
    pub abs_error: Option<f64>,
    pub stderr: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Term breakdown of an asymptotic value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Terms {
    pub family: String,
    pub log_coefficient: f64,
    pub leading: f64,
    pub constant: f64,
    pub u_coefficient: f64,
    pub u_term: f64,
    pub exact_log_value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantRow {
    pub name: String,
    pub computed: f64,
    pub tabulated: f64,
    pub diff: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompareCell {
    pub n: usize,
    pub u: Real,
    pub exact: Option<f64>,
    pub exact_err: Option<f64>,
    pub asymptotic: Option<f64>,
    pub mc_mean: Option<f64>,
    pub mc_stderr: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunRecord {
    pub command: String,
    pub argv: Vec<String>,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub query: Option<QuerySpec>,
    pub results: Vec<ResultRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Terms>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub constants: Vec<ConstantRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cells: Vec<CompareCell>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    /// Only with `--timing`, so plain runs stay byte-identical.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_s: Option<f64>,
}

impl RunRecord {
    pub fn new(command: &str, argv: &[String]) -> Self {
        RunRecord {
            command: command.to_string(),
            argv: argv.to_vec(),
            version: concat!("rice-maxima ", env!("CARGO_PKG_VERSION")).to_string(),
            model: None,
            query: None,
            results: Vec::new(),
            terms: None,
            constants: Vec::new(),
            cells: Vec::new(),
            warnings: Vec::new(),
            wall_time_s: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialise")
    }
}

/// CSV for `compare`: header plus one row per cell, empty fields for missing values.
pub fn cells_csv(cells: &[CompareCell]) -> String {
    let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
    let mut out = String::from("n,u,exact,exact_err,asymptotic,mc_mean,mc_stderr\n");
    for c in cells {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            c.n,
            c.u.0,
            opt(c.exact),
            opt(c.exact_err),
            opt(c.asymptotic),
            opt(c.mc_mean),
            opt(c.mc_stderr)
        ));
    }
    out
}
