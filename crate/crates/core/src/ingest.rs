//! Port-call CSV parsing and the three-stage filter pipeline
//! (date window, vessel length, class frequency).

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, BufRead, Write};

use chrono::{DateTime, NaiveDate, SecondsFormat, Utc};
use thiserror::Error;

/// Header line every port-call file must start with.
pub const HEADER: &str = "vessel_id,vessel_type,length_m,arrival_utc";
const COLUMNS: usize = 4;

/// One vessel arrival into the port area.
#[derive(Debug, Clone, PartialEq)]
pub struct PortCall {
    pub vessel_id: String,
    pub vessel_class: String,
    pub length_m: f64,
    pub arrival_utc: DateTime<Utc>,
}

impl PortCall {
    pub fn arrival_date(&self) -> NaiveDate {
        self.arrival_utc.date_naive()
    }
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("missing or malformed header, expected `{HEADER}`")]
    MissingHeader,
    #[error("i/o error while reading port calls")]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowErrorKind {
    WrongColumnCount { found: usize },
    EmptyField(&'static str),
    NonNumericLength(String),
    NonPositiveLength(String),
    BadTimestamp(String),
}

impl fmt::Display for RowErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowErrorKind::WrongColumnCount { found } => {
                write!(f, "expected {COLUMNS} columns, found {found}")
            }
            RowErrorKind::EmptyField(name) => write!(f, "empty {name}"),
            RowErrorKind::NonNumericLength(raw) => write!(f, "non-numeric length `{raw}`"),
            RowErrorKind::NonPositiveLength(raw) => {
                write!(f, "length must be a positive finite number, got `{raw}`")
            }
            RowErrorKind::BadTimestamp(raw) => {
                write!(f, "unparseable timestamp `{raw}` (expected RFC 3339 with `Z`)")
            }
        }
    }
}

/// A rejected data row. `line` is 1-based and counts the header as line 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct RowError {
    pub line: usize,
    pub kind: RowErrorKind,
}

/// Parses a port-call CSV stream.
///
/// Well-formed rows come back in input order; every malformed row is reported
/// as a [`RowError`]. Blank lines are ignored. Only a bad or absent header is
/// fatal.
pub fn parse_port_calls<R: BufRead>(
    reader: R,
) -> Result<(Vec<PortCall>, Vec<RowError>), IngestError> {
    let mut lines = reader.lines();
    let header = match lines.next() {
        Some(line) => line?,
        None => return Err(IngestError::MissingHeader),
    };
    let header = header.strip_prefix('\u{feff}').unwrap_or(&header);
    if header.trim_end_matches('\r') != HEADER {
        return Err(IngestError::MissingHeader);
    }

    let mut calls = Vec::new();
    let mut errors = Vec::new();
    for (idx, line) in lines.enumerate() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        match parse_row(line) {
            Ok(call) => calls.push(call),
            Err(kind) => errors.push(RowError { line: idx + 2, kind }),
        }
    }
    Ok((calls, errors))
}

/// Convenience wrapper over [`parse_port_calls`] for in-memory text.
pub fn parse_port_calls_str(text: &str) -> Result<(Vec<PortCall>, Vec<RowError>), IngestError> {
    parse_port_calls(text.as_bytes())
}

fn parse_row(line: &str) -> Result<PortCall, RowErrorKind> {
    let fields: Vec<&str> = line.split(',').collect();
    if fields.len() != COLUMNS {
        return Err(RowErrorKind::WrongColumnCount {
            found: fields.len(),
        });
    }
    let vessel_id = fields[0].trim();
    let vessel_class = fields[1].trim();
    let raw_length = fields[2].trim();
    let raw_time = fields[3].trim();
    if vessel_id.is_empty() {
        return Err(RowErrorKind::EmptyField("vessel_id"));
    }
    if vessel_class.is_empty() {
        return Err(RowErrorKind::EmptyField("vessel_type"));
    }

    let length_m: f64 = raw_length
        .parse()
        .map_err(|_| RowErrorKind::NonNumericLength(raw_length.to_string()))?;
    if !length_m.is_finite() || length_m <= 0.0 {
        return Err(RowErrorKind::NonPositiveLength(raw_length.to_string()));
    }

    if !raw_time.ends_with('Z') {
        return Err(RowErrorKind::BadTimestamp(raw_time.to_string()));
    }
    let arrival_utc = DateTime::parse_from_rfc3339(raw_time)
        .map_err(|_| RowErrorKind::BadTimestamp(raw_time.to_string()))?
        .with_timezone(&Utc);

    Ok(PortCall {
        vessel_id: vessel_id.to_string(),
        vessel_class: vessel_class.to_string(),
        length_m,
        arrival_utc,
    })
}

/// Writes calls in the same CSV format [`parse_port_calls`] reads.
///
/// Lengths use the shortest round-trip decimal form, so parsing the output
/// yields the same values.
pub fn write_port_calls<W: Write>(mut out: W, calls: &[PortCall]) -> io::Result<()> {
    writeln!(out, "{HEADER}")?;
    for call in calls {
        writeln!(
            out,
            "{},{},{},{}",
            call.vessel_id,
            call.vessel_class,
            call.length_m,
            call.arrival_utc.to_rfc3339_opts(SecondsFormat::AutoSi, true)
        )?;
    }
    Ok(())
}

#[derive(Debug, Error, PartialEq)]
pub enum FilterConfigError {
    #[error("window start {start} is after window end {end}")]
    InvertedWindow { start: NaiveDate, end: NaiveDate },
    #[error("maximum length must be positive, got {0}")]
    NonPositiveLength(f64),
}

/// Settings for [`filter_calls`]. The window is inclusive at both ends, the
/// length bound is exclusive and the frequency bound inclusive.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterConfig {
    pub window_start: NaiveDate,
    pub window_end: NaiveDate,
    pub max_length_m: f64,
    pub min_type_frequency: usize,
}

impl Default for FilterConfig {
    /// Calendar year 2019, vessels under 25 m, classes with at least 500 calls.
    fn default() -> Self {
        FilterConfig {
            window_start: NaiveDate::from_ymd_opt(2019, 1, 1).unwrap(),
            window_end: NaiveDate::from_ymd_opt(2019, 12, 31).unwrap(),
            max_length_m: 25.0,
            min_type_frequency: 500,
        }
    }
}

impl FilterConfig {
    pub fn validate(&self) -> Result<(), FilterConfigError> {
        if self.window_start > self.window_end {
            return Err(FilterConfigError::InvertedWindow {
                start: self.window_start,
                end: self.window_end,
            });
        }
        if self.max_length_m.is_nan() || self.max_length_m <= 0.0 {
            return Err(FilterConfigError::NonPositiveLength(self.max_length_m));
        }
        Ok(())
    }

    pub fn window(&self) -> DateWindow {
        DateWindow {
            start: self.window_start,
            end: self.window_end,
        }
    }
}

/// Inclusive range of calendar dates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DateWindow {
    pub start: NaiveDate,
    pub end: NaiveDate,
}

impl DateWindow {
    pub fn contains(&self, date: NaiveDate) -> bool {
        self.start <= date && date <= self.end
    }

    /// Number of dates in the window, zero if inverted.
    pub fn num_days(&self) -> u32 {
        let days = (self.end - self.start).num_days() + 1;
        days.max(0) as u32
    }
}

/// Per-class call counts, sorted by descending count then ascending label.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TypeFrequencyTable {
    pub entries: Vec<(String, usize)>,
}

impl TypeFrequencyTable {
    pub fn from_calls(calls: &[PortCall]) -> Self {
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for call in calls {
            *counts.entry(call.vessel_class.as_str()).or_default() += 1;
        }
        let mut entries: Vec<(String, usize)> = counts
            .into_iter()
            .map(|(class, n)| (class.to_string(), n))
            .collect();
        entries.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        TypeFrequencyTable { entries }
    }

    pub fn total(&self) -> usize {
        self.entries.iter().map(|(_, n)| n).sum()
    }

    pub fn count(&self, class: &str) -> Option<usize> {
        self.entries
            .iter()
            .find(|(c, _)| c == class)
            .map(|(_, n)| *n)
    }

    pub fn classes(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(c, _)| c.as_str())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Call counts after each filter stage, for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StageCounts {
    pub input: usize,
    pub in_window: usize,
    pub under_length: usize,
    pub frequent_classes: usize,
}

/// Applies window, then length, then class-frequency filtering. Survivors
/// keep their input order.
pub fn filter_calls(calls: &[PortCall], cfg: &FilterConfig) -> (Vec<PortCall>, TypeFrequencyTable) {
    let (kept, table, _) = filter_calls_with_stages(calls, cfg);
    (kept, table)
}

pub fn filter_calls_with_stages(
    calls: &[PortCall],
    cfg: &FilterConfig,
) -> (Vec<PortCall>, TypeFrequencyTable, StageCounts) {
    let window = cfg.window();
    let in_window: Vec<&PortCall> = calls
        .iter()
        .filter(|c| window.contains(c.arrival_date()))
        .collect();
    let short: Vec<&PortCall> = in_window
        .iter()
        .copied()
        .filter(|c| c.length_m < cfg.max_length_m)
        .collect();

    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for call in &short {
        *counts.entry(call.vessel_class.as_str()).or_default() += 1;
    }
    let kept: Vec<PortCall> = short
        .iter()
        .filter(|c| counts[c.vessel_class.as_str()] >= cfg.min_type_frequency)
        .map(|c| (*c).clone())
        .collect();

    let stages = StageCounts {
        input: calls.len(),
        in_window: in_window.len(),
        under_length: short.len(),
        frequent_classes: kept.len(),
    };
    let table = TypeFrequencyTable::from_calls(&kept);
    (kept, table, stages)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(id: &str, class: &str, len: f64, ts: &str) -> PortCall {
        PortCall {
            vessel_id: id.into(),
            vessel_class: class.into(),
            length_m: len,
            arrival_utc: DateTime::parse_from_rfc3339(ts).unwrap().with_timezone(&Utc),
        }
    }

    #[test]
    fn parses_single_row() {
        let text = format!("{HEADER}\nV1,Yacht,12.5,2019-06-01T14:32:00Z\n");
        let (calls, errors) = parse_port_calls_str(&text).unwrap();
        assert!(errors.is_empty());
        assert_eq!(calls, vec![call("V1", "Yacht", 12.5, "2019-06-01T14:32:00Z")]);
    }

    #[test]
    fn empty_body_is_empty() {
        let (calls, errors) = parse_port_calls_str(&format!("{HEADER}\n")).unwrap();
        assert!(calls.is_empty() && errors.is_empty());
        let (calls, errors) = parse_port_calls_str(HEADER).unwrap();
        assert!(calls.is_empty() && errors.is_empty());
    }

    #[test]
    fn non_numeric_length_is_row_error() {
        let text = format!("{HEADER}\nV2,Trawler,abc,2019-06-01T14:32:00Z\n");
        let (calls, errors) = parse_port_calls_str(&text).unwrap();
        assert!(calls.is_empty());
        assert_eq!(
            errors,
            vec![RowError {
                line: 2,
                kind: RowErrorKind::NonNumericLength("abc".into())
            }]
        );
    }

    #[test]
    fn crlf_and_bom_accepted() {
        let text = format!("\u{feff}{HEADER}\r\nV1,Yacht,12.5,2019-06-01T14:32:00Z\r\n");
        let (calls, errors) = parse_port_calls_str(&text).unwrap();
        assert!(errors.is_empty());
        assert_eq!(calls.len(), 1);
    }

    #[test]
    fn header_must_match() {
        assert!(matches!(
            parse_port_calls_str(""),
            Err(IngestError::MissingHeader)
        ));
        assert!(matches!(
            parse_port_calls_str("vessel_type,vessel_id,length_m,arrival_utc\n"),
            Err(IngestError::MissingHeader)
        ));
        assert!(matches!(
            parse_port_calls_str("V1,Yacht,12.5,2019-06-01T14:32:00Z\n"),
            Err(IngestError::MissingHeader)
        ));
    }

    #[test]
    fn offsets_other_than_z_rejected() {
        let text = format!("{HEADER}\nV1,Yacht,12.5,2019-06-01T14:32:00+01:00\n");
        let (_, errors) = parse_port_calls_str(&text).unwrap();
        assert!(matches!(errors[0].kind, RowErrorKind::BadTimestamp(_)));
    }

    #[test]
    fn quoted_comma_is_column_error() {
        let text = format!("{HEADER}\nV1,\"Pusher, Tug\",12.5,2019-06-01T14:32:00Z\n");
        let (_, errors) = parse_port_calls_str(&text).unwrap();
        assert_eq!(errors[0].kind, RowErrorKind::WrongColumnCount { found: 5 });
    }

    #[test]
    fn frequency_table_ordering() {
        let calls = vec![
            call("a", "Yacht", 10.0, "2019-01-01T00:00:00Z"),
            call("b", "Trawler", 10.0, "2019-01-01T00:00:00Z"),
            call("c", "Yacht", 10.0, "2019-01-01T00:00:00Z"),
            call("d", "Barge", 10.0, "2019-01-01T00:00:00Z"),
        ];
        let table = TypeFrequencyTable::from_calls(&calls);
        assert_eq!(
            table.entries,
            vec![
                ("Yacht".to_string(), 2),
                ("Barge".to_string(), 1),
                ("Trawler".to_string(), 1)
            ]
        );
        assert_eq!(table.total(), 4);
    }

    #[test]
    fn length_boundary_is_strict() {
        let calls = vec![call("a", "Yacht", 25.0, "2019-03-01T10:00:00Z")];
        let cfg = FilterConfig {
            min_type_frequency: 0,
            ..FilterConfig::default()
        };
        let (kept, table) = filter_calls(&calls, &cfg);
        assert!(kept.is_empty());
        assert!(table.is_empty());
    }

    #[test]
    fn window_is_inclusive_in_utc() {
        let calls = vec![
            call("a", "Yacht", 5.0, "2018-12-31T23:59:59Z"),
            call("b", "Yacht", 5.0, "2019-01-01T00:00:00Z"),
            call("c", "Yacht", 5.0, "2019-12-31T23:59:59Z"),
            call("d", "Yacht", 5.0, "2020-01-01T00:00:00Z"),
        ];
        let cfg = FilterConfig {
            min_type_frequency: 0,
            ..FilterConfig::default()
        };
        let (kept, _) = filter_calls(&calls, &cfg);
        let ids: Vec<&str> = kept.iter().map(|c| c.vessel_id.as_str()).collect();
        assert_eq!(ids, ["b", "c"]);
    }

    #[test]
    fn no_op_filters_keep_everything() {
        let calls = vec![
            call("a", "Yacht", 300.0, "2010-01-01T00:00:00Z"),
            call("b", "Navy", 587.0, "2021-01-01T00:00:00Z"),
        ];
        let cfg = FilterConfig {
            window_start: NaiveDate::from_ymd_opt(2000, 1, 1).unwrap(),
            window_end: NaiveDate::from_ymd_opt(2030, 1, 1).unwrap(),
            max_length_m: 1e9,
            min_type_frequency: 0,
        };
        let (kept, table) = filter_calls(&calls, &cfg);
        assert_eq!(kept, calls);
        assert_eq!(table, TypeFrequencyTable::from_calls(&calls));
    }

    #[test]
    fn frequency_stage_counts_after_length_stage() {
        // Two long yachts must not lift the yacht count to the threshold.
        let calls = vec![
            call("a", "Yacht", 10.0, "2019-05-01T00:00:00Z"),
            call("b", "Yacht", 30.0, "2019-05-01T00:00:00Z"),
            call("c", "Yacht", 40.0, "2019-05-01T00:00:00Z"),
        ];
        let cfg = FilterConfig {
            min_type_frequency: 2,
            ..FilterConfig::default()
        };
        let (kept, _, stages) = filter_calls_with_stages(&calls, &cfg);
        assert!(kept.is_empty());
        assert_eq!(stages.under_length, 1);
    }

    #[test]
    fn config_validation() {
        let mut cfg = FilterConfig::default();
        assert!(cfg.validate().is_ok());
        cfg.max_length_m = 0.0;
        assert!(cfg.validate().is_err());
        cfg.max_length_m = f64::NAN;
        assert!(cfg.validate().is_err());
        let cfg = FilterConfig {
            window_start: NaiveDate::from_ymd_opt(2020, 1, 1).unwrap(),
            ..FilterConfig::default()
        };
        assert!(matches!(
            cfg.validate(),
            Err(FilterConfigError::InvertedWindow { .. })
        ));
    }
}
