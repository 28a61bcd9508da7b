use std::fmt::Write as _;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Tsv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "tsv" => Ok(Format::Tsv),
            _ => Err(format!("unknown format {s:?} (expected text or tsv)")),
        }
    }
}

/// A header plus records; rendered either tab-separated or column-aligned.
#[derive(Debug, Clone, Default)]
pub struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    notes: Vec<String>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Self { header: header.to_vec(), ..Self::default() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Trailing human-readable line, shown in text mode only.
    pub fn note(&mut self, line: String) {
        self.notes.push(line);
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Tsv => {
                out.push_str(&self.header.join("\t"));
                out.push('\n');
                for row in &self.rows {
                    out.push_str(&row.join("\t"));
                    out.push('\n');
                }
            }
            Format::Text => {
                let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
                for row in &self.rows {
                    for (w, cell) in widths.iter_mut().zip(row) {
                        *w = (*w).max(cell.chars().count());
                    }
                }
                let mut line = |cells: &mut dyn Iterator<Item = &str>| {
                    let mut text = String::new();
                    for (i, (cell, w)) in cells.zip(&widths).enumerate() {
                        if i > 0 {
                            text.push_str("  ");
                        }
                        let _ = write!(text, "{cell:<w$}");
                    }
                    out.push_str(text.trim_end());
                    out.push('\n');
                };
                line(&mut self.header.iter().copied());
                for row in &self.rows {
                    line(&mut row.iter().map(String::as_str));
                }
                for note in &self.notes {
                    out.push_str(note);
                    out.push('\n');
                }
            }
        }
        out
    }
}

const SIGNIFICANT: usize = 12;

/// `%.12g`-style formatting: 12 significant digits, trailing zeros dropped,
/// exponent notation outside `[1e-4, 1e12)`.
pub fn float(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIGNIFICANT - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= SIGNIFICANT as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs());
    }
    let decimals = (SIGNIFICANT as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn flag(b: bool) -> String {
    if b { "true" } else { "false" }.into()
}
