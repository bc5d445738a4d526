//! JSON-lines trace output.

use std::io::{self, Write};

use vc4_core::solver::{TraceEvent, TraceSink};

/// Writes one JSON object per event. The first I/O error is kept and returned by [`finish`](Self::finish).
pub struct JsonLinesSink<W: Write> {
    out: W,
    error: Option<io::Error>,
    lines: u64,
}

impl<W: Write> JsonLinesSink<W> {
    pub fn new(out: W) -> Self {
        JsonLinesSink { out, error: None, lines: 0 }
    }

    pub fn lines(&self) -> u64 {
        self.lines
    }

    pub fn finish(mut self) -> io::Result<W> {
        if let Some(e) = self.error.take() {
            return Err(e);
        }
        self.out.flush()?;
        Ok(self.out)
    }
}

impl<W: Write> TraceSink for JsonLinesSink<W> {
    fn record(&mut self, event: &TraceEvent) {
        if self.error.is_some() {
            return;
        }
        let res = serde_json::to_writer(&mut self.out, event)
            .map_err(io::Error::from)
            .and_then(|()| self.out.write_all(b"\n"));
        match res {
            Ok(()) => self.lines += 1,
            Err(e) => self.error = Some(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use vc4_core::solver::RuleId;

    #[test]
    fn one_line_per_event() {
        let mut sink = JsonLinesSink::new(Vec::new());
        sink.record(&TraceEvent::Reduce { rule: RuleId::R3, mu_before: 4, mu_delta: -1, ok: true });
        sink.record(&TraceEvent::Leaf { rule: RuleId::R2, mu: 0, answer: true });
        let text = String::from_utf8(sink.finish().unwrap()).unwrap();
        assert_eq!(
            text,
            "{\"event\":\"reduce\",\"rule\":\"R3\",\"mu_before\":4,\"mu_delta\":-1,\"ok\":true}\n\
             {\"event\":\"leaf\",\"rule\":\"R2\",\"mu\":0,\"answer\":true}\n"
        );
    }

    struct Broken;

    impl Write for Broken {
        fn write(&mut self, _: &[u8]) -> io::Result<usize> {
            Err(io::Error::other("disk full"))
        }

        fn flush(&mut self) -> io::Result<()> {
            Ok(())
        }
    }

    #[test]
    fn surfaces_write_errors() {
        let mut sink = JsonLinesSink::new(Broken);
        sink.record(&TraceEvent::Leaf { rule: RuleId::R2, mu: 0, answer: true });
        assert!(sink.finish().is_err());
    }
}
