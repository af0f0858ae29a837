//! JSON, CSV and plain-text encodings.
//!
//! Big integers travel as decimal strings so that no consumer has to
//! guess at precision. Rationals are written `p/q` (or `p` when the
//! denominator is 1).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use sepstat_core::enumerate::{DistTable, StatKind};
use sepstat_core::gf::{BiSeries, MarkerPoly};
use sepstat_core::perm::{Permutation, RunDirection, Word};
use sepstat_core::separators::{
    Arrow, ArrowedComposition, MarkedSepPermutation, MarkedWord, Part, SeparatorReport,
};
use sepstat_core::Rational;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Invalid(String),
}

fn invalid(e: impl ToString) -> FormatError {
    FormatError::Invalid(e.to_string())
}

pub fn perm_to_json(p: &Permutation) -> Value {
    json!(p.entries())
}

pub fn perm_from_json(s: &str) -> Result<Permutation, FormatError> {
    let v: Vec<usize> = serde_json::from_str(s)?;
    Permutation::new(v).map_err(invalid)
}

#[derive(Serialize, Deserialize)]
struct MarkedBondsJson {
    perm: Vec<usize>,
    marked_bonds: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct MarkedSepsJson {
    perm: Vec<usize>,
    marked_seps: Vec<usize>,
}

pub fn marked_word_to_json(m: &MarkedWord) -> Value {
    serde_json::to_value(MarkedBondsJson {
        perm: m.word().values().to_vec(),
        marked_bonds: m.marked().iter().copied().collect(),
    })
    .expect("plain struct")
}

pub fn marked_word_from_json(s: &str) -> Result<MarkedWord, FormatError> {
    let raw: MarkedBondsJson = serde_json::from_str(s)?;
    let word = Word::new(raw.perm).map_err(invalid)?;
    MarkedWord::new(word, raw.marked_bonds).map_err(invalid)
}

pub fn marked_seps_to_json(m: &MarkedSepPermutation) -> Value {
    serde_json::to_value(MarkedSepsJson {
        perm: m.perm().entries().to_vec(),
        marked_seps: m.marked_seps().iter().copied().collect(),
    })
    .expect("plain struct")
}

pub fn marked_seps_from_json(s: &str) -> Result<MarkedSepPermutation, FormatError> {
    let raw: MarkedSepsJson = serde_json::from_str(s)?;
    let perm = Permutation::new(raw.perm).map_err(invalid)?;
    MarkedSepPermutation::new(perm, raw.marked_seps).map_err(invalid)
}

/// `[["1",""],["3","down"]]`
pub fn composition_to_json(c: &ArrowedComposition) -> Value {
    Value::Array(
        c.parts()
            .iter()
            .map(|p| json!([p.size().to_string(), p.arrow().name()]))
            .collect(),
    )
}

/// Accepts the pair-list form or a JSON string holding the compact form.
pub fn composition_from_json(s: &str) -> Result<ArrowedComposition, FormatError> {
    match serde_json::from_str::<Value>(s)? {
        Value::String(compact) => compact.parse().map_err(invalid),
        Value::Array(_) => {
            let pairs: Vec<(String, String)> = serde_json::from_str(s)?;
            let parts = pairs
                .into_iter()
                .map(|(size, arrow)| {
                    let size = size.parse().map_err(|_| invalid(format!("bad part size {size:?}")))?;
                    let arrow = Arrow::from_name(&arrow)
                        .ok_or_else(|| invalid(format!("bad arrow {arrow:?}")))?;
                    Part::new(size, arrow).map_err(invalid)
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(ArrowedComposition::new(parts))
        }
        _ => Err(invalid("expected an array of parts or a compact string")),
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    series: String,
    order: usize,
    /// `coeffs[n][m]` is the coefficient of `z^n` times marker to the `m`.
    coeffs: Vec<Vec<String>>,
}

pub fn series_to_json(name: &str, s: &BiSeries) -> Value {
    let coeffs = s
        .coeffs()
        .iter()
        .map(|row| row.coeffs().iter().map(BigInt::to_string).collect())
        .collect();
    serde_json::to_value(SeriesJson {
        series: name.to_string(),
        order: s.order(),
        coeffs,
    })
    .expect("plain struct")
}

pub fn series_from_json(s: &str) -> Result<(String, BiSeries), FormatError> {
    let raw: SeriesJson = serde_json::from_str(s)?;
    if raw.coeffs.len() > raw.order + 1 {
        return Err(invalid("more rows than the order allows"));
    }
    let rows = raw
        .coeffs
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| c.parse::<BigInt>().map_err(|_| invalid(format!("bad coefficient {c:?}"))))
                .collect::<Result<Vec<_>, _>>()
                .map(MarkerPoly::from_coeffs)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((raw.series, BiSeries::from_coeffs(raw.order, rows)))
}

/// Nonzero coefficients as `(n, m, count)`.
pub fn series_rows(s: &BiSeries) -> Vec<(usize, usize, BigInt)> {
    let mut out = Vec::new();
    for (n, row) in s.coeffs().iter().enumerate() {
        for (m, c) in row.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.push((n, m, c.clone()));
            }
        }
    }
    out
}

pub fn rows_to_csv<T: ToString>(rows: &[(usize, usize, T)]) -> Result<String, FormatError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "m", "count"])?;
    for (n, m, c) in rows {
        w.write_record([n.to_string(), m.to_string(), c.to_string()])?;
    }
    let bytes = w.into_inner().map_err(|e| invalid(e.error()))?;
    Ok(String::from_utf8(bytes).expect("csv of ascii"))
}

pub fn rows_from_csv(s: &str) -> Result<Vec<(usize, usize, BigUint)>, FormatError> {
    let mut r = csv::Reader::from_reader(s.as_bytes());
    let mut out = Vec::new();
    for record in r.records() {
        let record = record?;
        let field = |i: usize| record.get(i).ok_or_else(|| invalid("short CSV row"));
        let n = field(0)?.parse().map_err(invalid)?;
        let m = field(1)?.parse().map_err(invalid)?;
        let c = field(2)?.parse().map_err(invalid)?;
        out.push((n, m, c));
    }
    Ok(out)
}

pub fn dist_rows(t: &DistTable) -> Vec<(usize, usize, BigUint)> {
    t.counts.iter().map(|(&m, c)| (t.n, m, c.clone())).collect()
}

pub fn dist_to_json(t: &DistTable) -> Value {
    let counts: BTreeMap<String, String> =
        t.counts.iter().map(|(m, c)| (m.to_string(), c.to_string())).collect();
    json!({
        "n": t.n,
        "kind": t.kind.name(),
        "total": t.total().to_string(),
        "rows": t.counts.iter().map(|(m, c)| json!([m, c.to_string()])).collect::<Vec<_>>(),
        "counts": counts,
    })
}

pub fn dist_from_json(s: &str) -> Result<DistTable, FormatError> {
    #[derive(Deserialize)]
    struct Raw {
        n: usize,
        kind: String,
        rows: Vec<(usize, String)>,
    }
    let raw: Raw = serde_json::from_str(s)?;
    let kind: StatKind = raw.kind.parse().map_err(invalid)?;
    let counts = raw
        .rows
        .into_iter()
        .map(|(m, c)| c.parse::<BigUint>().map(|c| (m, c)).map_err(invalid))
        .collect::<Result<_, _>>()?;
    Ok(DistTable {
        n: raw.n,
        kind,
        counts,
    })
}

pub fn dist_to_plain(t: &DistTable) -> String {
    let mut out = format!("n = {}, kind = {}\n", t.n, t.kind);
    for (m, c) in &t.counts {
        let _ = writeln!(out, "{m}\t{c}");
    }
    out
}

pub fn series_to_plain(name: &str, s: &BiSeries) -> String {
    let mut out = format!("{name}, order {}\n", s.order());
    for (n, row) in s.coeffs().iter().enumerate() {
        let _ = writeln!(out, "z^{n}: {row}");
    }
    out
}

pub fn rational_to_string(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal rendering rounded (half away from zero) to `sig` significant
/// digits, computed exactly. Trailing zeros are dropped.
pub fn approx_decimal(r: &Rational, sig: usize) -> String {
    assert!(sig > 0);
    if r.numer().is_zero() {
        return "0".into();
    }
    let negative = r.numer().sign() == Sign::Minus;
    let num = r.numer().abs();
    let den = r.denom().abs();
    let ten = BigInt::from(10);
    // exponent e with 10^e <= |r| < 10^(e+1)
    let mut e: i64 = num.to_string().len() as i64 - den.to_string().len() as i64;
    let pow = |k: i64| ten.pow(k.unsigned_abs() as u32);
    let at_least = |e: i64| {
        if e >= 0 {
            num >= &den * pow(e)
        } else {
            &num * pow(e) >= den
        }
    };
    while !at_least(e) {
        e -= 1;
    }
    while at_least(e + 1) {
        e += 1;
    }
    // digits = round(|r| * 10^(sig - 1 - e))
    let shift = sig as i64 - 1 - e;
    let (n2, d2) = if shift >= 0 {
        (&num * pow(shift), den.clone())
    } else {
        (num.clone(), &den * pow(shift))
    };
    let mut digits: BigInt = (&n2 * 2 + &d2) / (&d2 * 2);
    if digits >= pow(sig as i64) {
        digits /= 10;
        e += 1;
    }
    let mut s = digits.to_string();
    let point = e + 1;
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat(point.unsigned_abs() as usize), s)
    } else if point as usize >= s.len() {
        s.push_str(&"0".repeat(point as usize - s.len()));
        s
    } else {
        format!("{}.{}", &s[..point as usize], &s[point as usize..])
    };
    let body = if body.contains('.') {
        body.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        body
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

fn direction_name(d: RunDirection) -> &'static str {
    match d {
        RunDirection::Ascending => "ascending",
        RunDirection::Descending => "descending",
        RunDirection::Trivial => "trivial",
    }
}

fn set_json(s: &std::collections::BTreeSet<usize>) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

pub fn report_to_json(p: &Permutation, r: &SeparatorReport) -> Value {
    let runs: Vec<Value> = p
        .maximal_runs()
        .iter()
        .map(|run| json!({"start": run.start, "len": run.len, "direction": direction_name(run.direction)}))
        .collect();
    json!({
        "perm": perm_to_json(p),
        "n": p.len(),
        "vertical": set_json(&r.vertical),
        "horizontal": set_json(&r.horizontal),
        "both": set_json(&r.both),
        "sep_count": r.sep_count,
        "bonds": p.bonds(),
        "bond_count": p.bond_count(),
        "runs": runs,
        "is_king": p.is_king(),
    })
}

pub fn report_to_plain(p: &Permutation, r: &SeparatorReport) -> String {
    let list = |s: &std::collections::BTreeSet<usize>| {
        s.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    };
    let runs: Vec<String> = p
        .maximal_runs()
        .iter()
        .map(|run| {
            let vals: Vec<String> = run
                .positions()
                .map(|i| p.value_at(i).expect("in range").to_string())
                .collect();
            let arrow = match run.direction {
                RunDirection::Ascending => "↑",
                RunDirection::Descending => "↓",
                RunDirection::Trivial => "",
            };
            format!("({}){arrow}", vals.join(" "))
        })
        .collect();
    let bonds: Vec<String> = p.bonds().iter().map(usize::to_string).collect();
    format!(
        "perm: {p}\nvertical: {{{}}}\nhorizontal: {{{}}}\nboth: {{{}}}\nsep_count: {}\nbonds: {{{}}} ({})\nruns: {}\nking: {}\n",
        list(&r.vertical),
        list(&r.horizontal),
        list(&r.both),
        r.sep_count,
        bonds.join(","),
        p.bond_count(),
        runs.join(" "),
        p.is_king(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use sepstat_core::enumerate::distribution;
    use sepstat_core::gf::vertical_sep_gf;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn decimals() {
        assert_eq!(approx_decimal(&q(11, 6), 12), "1.83333333333");
        assert_eq!(approx_decimal(&q(1, 6), 12), "0.166666666667");
        assert_eq!(approx_decimal(&q(2, 3), 3), "0.667");
        assert_eq!(approx_decimal(&q(1, 1), 12), "1");
        assert_eq!(approx_decimal(&q(0, 5), 12), "0");
        assert_eq!(approx_decimal(&q(499_999, 250_000), 12), "1.999996");
        assert_eq!(approx_decimal(&q(999_999, 1), 3), "1000000");
        assert_eq!(approx_decimal(&q(-1, 2000), 2), "-0.0005");
        assert_eq!(approx_decimal(&q(9995, 10000), 3), "1");
    }

    #[test]
    fn rationals() {
        assert_eq!(rational_to_string(&q(11, 6)), "11/6");
        assert_eq!(rational_to_string(&q(0, 6)), "0");
        assert_eq!(rational_to_string(&q(999_998, 500_000)), "499999/250000");
    }

    #[test]
    fn perm_round_trip() {
        let p: Permutation = "53241".parse().unwrap();
        let s = perm_to_json(&p).to_string();
        assert_eq!(s, "[5,3,2,4,1]");
        assert_eq!(perm_from_json(&s).unwrap(), p);
        assert!(perm_from_json("[1,1,2]").is_err());
    }

    #[test]
    fn marked_round_trips() {
        let w = Word::new(vec![2, 1, 6, 5, 9]).unwrap();
        let m = MarkedWord::new(w, [3]).unwrap();
        let s = marked_word_to_json(&m).to_string();
        assert_eq!(s, r#"{"marked_bonds":[3],"perm":[2,1,6,5,9]}"#);
        assert_eq!(marked_word_from_json(&s).unwrap(), m);

        let msp = MarkedSepPermutation::new("271863549".parse().unwrap(), [3, 6]).unwrap();
        let s = marked_seps_to_json(&msp).to_string();
        assert_eq!(marked_seps_from_json(&s).unwrap(), msp);
        assert!(marked_seps_from_json(r#"{"perm":[2,1,3],"marked_seps":[1]}"#).is_err());
    }

    #[test]
    fn composition_round_trip() {
        let c: ArrowedComposition = "1,3↓,1".parse().unwrap();
        let s = composition_to_json(&c).to_string();
        assert_eq!(s, r#"[["1",""],["3","down"],["1",""]]"#);
        assert_eq!(composition_from_json(&s).unwrap(), c);
        assert_eq!(composition_from_json(r#""1,3v,1""#).unwrap(), c);
        assert!(composition_from_json(r#"[["1","down"]]"#).is_err());
    }

    #[test]
    fn series_round_trip() {
        let h = vertical_sep_gf(5);
        let s = series_to_json("h", &h).to_string();
        assert!(s.contains(r#"["2","4"]"#));
        assert_eq!(series_from_json(&s).unwrap(), ("h".to_string(), h.clone()));
        let rows = series_rows(&h.truncate(3));
        assert_eq!(rows.last().unwrap(), &(3, 1, BigInt::from(4)));
    }

    #[test]
    fn dist_round_trips() {
        let t = distribution(3, StatKind::Vertical).unwrap();
        let csv = rows_to_csv(&dist_rows(&t)).unwrap();
        assert_eq!(csv, "n,m,count\n3,0,2\n3,1,4\n");
        let back = rows_from_csv(&csv).unwrap();
        assert_eq!(back, dist_rows(&t));
        let j = dist_to_json(&t).to_string();
        assert_eq!(dist_from_json(&j).unwrap(), t);
    }

    #[test]
    fn reports() {
        let p: Permutation = "45187623".parse().unwrap();
        let r = sepstat_core::separator_report(&p);
        let plain = report_to_plain(&p, &r);
        assert!(plain.contains("runs: (4 5)↑ (1) (8 7 6)↓ (2 3)↑"), "{plain}");
        let j = report_to_json(&p, &r);
        assert_eq!(j["bond_count"], 4);
        assert_eq!(j["runs"][2]["direction"], "descending");
    }
}
