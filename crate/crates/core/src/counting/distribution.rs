//! Exact histograms of one or more statistics over `S_n` or `B_n`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};

use crate::counting::enumerate::{par_fold, EnumOptions, Family};
use crate::error::{AtlasError, Result};
use crate::perm::Statistic;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionTable {
    pub family: Family,
    pub n: usize,
    pub stats: Vec<Statistic>,
    /// Value tuple (one entry per statistic) to count, in lexicographic order.
    pub counts: BTreeMap<Vec<usize>, BigUint>,
}

impl DistributionTable {
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn get(&self, values: &[usize]) -> BigUint {
        self.counts.get(values).cloned().unwrap_or_default()
    }

    /// Counts as a map from a single statistic's value; panics on joint tables.
    pub fn marginal(&self, index: usize) -> BTreeMap<usize, BigUint> {
        let mut out = BTreeMap::new();
        for (k, v) in &self.counts {
            *out.entry(k[index]).or_insert_with(BigUint::default) += v;
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .counts
            .iter()
            .map(|(k, v)| json!({ "values": k, "count": biguint_json(v) }))
            .collect();
        json!({
            "schema": crate::SCHEMA,
            "family": self.family.to_string(),
            "n": self.n,
            "stats": self.stats.iter().map(|s| s.name()).collect::<Vec<_>>(),
            "rows": rows,
            "total": biguint_json(&self.total()),
        })
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header: Vec<String> = self.stats.iter().map(|s| s.name().to_string()).collect();
        header.push("count".into());
        let io = |e: csv::Error| AtlasError::Domain(format!("csv output failed: {e}"));
        w.write_record(&header).map_err(io)?;
        for (k, v) in &self.counts {
            let mut rec: Vec<String> = k.iter().map(|x| x.to_string()).collect();
            rec.push(v.to_string());
            w.write_record(&rec).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| AtlasError::Domain(format!("csv output failed: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv output is ASCII"))
    }

    /// One `v1,v2:count` line per row.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.counts {
            let key: Vec<String> = k.iter().map(|x| x.to_string()).collect();
            s.push_str(&format!("{}:{}\n", key.join(","), v));
        }
        s
    }
}

/// Plain JSON number when it fits in `u64`, decimal string otherwise.
pub(crate) fn biguint_json(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub(crate) fn bigint_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

/// Exhaustive table of `stats` over the family at size `n`.
pub fn distribution(family: Family, n: usize, stats: &[Statistic], opts: EnumOptions) -> Result<DistributionTable> {
    if n == 0 {
        return Err(AtlasError::OutOfRange("n must be at least 1".into()));
    }
    if stats.is_empty() {
        return Err(AtlasError::invalid("statistic list", "at least one statistic is required"));
    }
    family.check_cap(n, opts.force)?;
    let merged = par_fold(
        family,
        n,
        opts.jobs,
        BTreeMap::<Vec<usize>, u64>::new,
        |acc, p| {
            let key: Vec<usize> = stats.iter().map(|s| s.of(p)).collect();
            *acc.entry(key).or_insert(0) += 1;
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    );
    Ok(DistributionTable {
        family,
        n,
        stats: stats.to_vec(),
        counts: merged.into_iter().map(|(k, v)| (k, BigUint::from(v))).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::numbers::narayana;

    fn opts() -> EnumOptions {
        EnumOptions::default()
    }

    #[test]
    fn narayana_row_for_b4() {
        let t = distribution(Family::B, 4, &[Statistic::Exc], opts()).unwrap();
        let got: Vec<(usize, u64)> = t.counts.iter().map(|(k, v)| (k[0], v.try_into().unwrap())).collect();
        assert_eq!(got, vec![(0, 1), (1, 6), (2, 6), (3, 1)]);
        assert_eq!(t.to_csv().unwrap(), "exc,count\n0,1\n1,6\n2,6\n3,1\n");
        for (e, c) in t.marginal(0) {
            assert_eq!(c, narayana(4, e as u64 + 1).unwrap());
        }
    }

    #[test]
    fn trivial_and_joint_tables() {
        let t = distribution(Family::B, 1, &[Statistic::Dexc], opts()).unwrap();
        assert_eq!(t.to_text(), "0:1\n");
        let j = distribution(Family::S, 6, &[Statistic::Dexc, Statistic::Exc], opts()).unwrap();
        assert_eq!(j.total(), BigUint::from(720u32));
        assert_eq!(j.to_json()["total"], json!(720));
        assert_eq!(j.to_json()["schema"], json!("bijection-atlas/1"));
    }

    #[test]
    fn equidistribution_over_s_and_b() {
        for n in 1..=7 {
            let a = distribution(Family::S, n, &[Statistic::Dexc], opts()).unwrap();
            let b = distribution(Family::S, n, &[Statistic::Ddes], opts()).unwrap();
            assert_eq!(a.counts, b.counts);
        }
        for n in 1..=9 {
            let a = distribution(Family::B, n, &[Statistic::Dexc], opts()).unwrap();
            let b = distribution(Family::B, n, &[Statistic::Ddes], opts()).unwrap();
            assert_eq!(a.counts, b.counts);
        }
    }

    #[test]
    fn caps_and_jobs() {
        assert!(matches!(
            distribution(Family::S, 10, &[Statistic::Exc], opts()),
            Err(AtlasError::CapExceeded { .. })
        ));
        let one = distribution(Family::B, 10, &[Statistic::Exc, Statistic::Dexc], opts()).unwrap();
        let many = distribution(Family::B, 10, &[Statistic::Exc, Statistic::Dexc], EnumOptions { jobs: 4, force: false })
            .unwrap();
        assert_eq!(one, many);
    }
}
