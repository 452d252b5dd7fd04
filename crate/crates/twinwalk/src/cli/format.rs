//! Output renderers shared by the subcommands.

use std::io::{self, Write};

use crate::sequences::IncrementEvent;

/// Wire formats for streamed rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    /// Comma-separated rows with a header line.
    Csv,
    /// One JSON object per line.
    Jsonl,
    /// Two-column `n value` rows, the b-file layout used by sequence
    /// archives; value streams only.
    Bfile,
}

pub fn write_event_header(w: &mut dyn Write, format: OutputFormat) -> io::Result<()> {
    match format {
        OutputFormat::Csv => writeln!(w, "n,value,delta,class"),
        OutputFormat::Jsonl | OutputFormat::Bfile => Ok(()),
    }
}

pub fn write_event(w: &mut dyn Write, e: &IncrementEvent, format: OutputFormat) -> io::Result<()> {
    match format {
        OutputFormat::Csv => writeln!(w, "{},{},{},{}", e.n, e.value, e.delta, e.class),
        OutputFormat::Jsonl => {
            serde_json::to_writer(&mut *w, e)?;
            writeln!(w)
        }
        OutputFormat::Bfile => writeln!(w, "{} {}", e.n, e.value),
    }
}

pub fn write_value_line(w: &mut dyn Write, n: u64, value: u64) -> io::Result<()> {
    writeln!(w, "{n} {value}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::IncrementClass;

    fn event() -> IncrementEvent {
        IncrementEvent {
            n: 28,
            value: 52,
            delta: 13,
            class: IncrementClass::Main,
        }
    }

    #[test]
    fn csv_row() {
        let mut buf = Vec::new();
        write_event_header(&mut buf, OutputFormat::Csv).unwrap();
        write_event(&mut buf, &event(), OutputFormat::Csv).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,value,delta,class\n28,52,13,main\n"
        );
    }

    #[test]
    fn jsonl_row() {
        let mut buf = Vec::new();
        write_event_header(&mut buf, OutputFormat::Jsonl).unwrap();
        write_event(&mut buf, &event(), OutputFormat::Jsonl).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"n\":28,\"value\":52,\"delta\":13,\"class\":\"main\"}\n"
        );
    }

    #[test]
    fn bfile_row() {
        let mut buf = Vec::new();
        write_event_header(&mut buf, OutputFormat::Bfile).unwrap();
        write_event(&mut buf, &event(), OutputFormat::Bfile).unwrap();
        write_value_line(&mut buf, 1, 2).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "28 52\n1 2\n");
    }
}
