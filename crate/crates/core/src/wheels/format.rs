//! Plain-text wheel files.
//!
//! ```text
//! # comment
//! wheel:
//! -
//! qo
//! wheel:
//! dy
//! ```
//!
//! Each `wheel:` line opens a new wheel and every following line is one
//! fragment, `-` meaning the empty fragment. Fragments are kept verbatim
//! apart from trailing whitespace. Blank lines are ignored.

use std::fmt::Write as _;

use super::{Wheel, WheelSystem};
use crate::error::{Error, Result};
use crate::glyph::Fragment;

pub fn parse_wheels(text: &str) -> Result<WheelSystem> {
    let mut wheels: Vec<Vec<Fragment>> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.trim_start().starts_with("wheel:") {
            wheels.push(Vec::new());
            continue;
        }
        let Some(current) = wheels.last_mut() else {
            return Err(Error::Parse { line: n + 1, message: "fragment before first \"wheel:\"".into() });
        };
        current.push(if line == "-" { Fragment::empty() } else { Fragment::new(line) });
    }
    let wheels = wheels
        .into_iter()
        .enumerate()
        .map(|(i, f)| Wheel::new(f).map_err(|_| Error::Parse { line: 0, message: format!("wheel {} is empty", i + 1) }))
        .collect::<Result<Vec<_>>>()?;
    WheelSystem::new(wheels)
}

pub fn write_wheels(system: &WheelSystem) -> String {
    let mut out = String::new();
    for wheel in system.wheels() {
        out.push_str("wheel:\n");
        for fragment in wheel.fragments() {
            let _ = writeln!(out, "{fragment}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_sections_comments_and_empties() {
        let text = "# header\nwheel:\n-\nqo  \n\nwheel: right\n dy\n";
        let s = parse_wheels(text).unwrap();
        assert_eq!(s.sizes(), vec![2, 1]);
        assert!(s.wheels()[0].fragment(0).is_empty());
        assert_eq!(s.wheels()[0].fragment(1).as_str(), "qo");
        // leading whitespace is part of the fragment
        assert_eq!(s.wheels()[1].fragment(0).as_str(), " dy");
    }

    #[test]
    fn rejects_orphans_and_empty_wheels() {
        assert!(matches!(parse_wheels("qo\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_wheels("wheel:\nwheel:\na\n").is_err());
        assert!(matches!(parse_wheels("# nothing\n"), Err(Error::NoWheels)));
    }

    proptest! {
        #[test]
        fn write_then_parse_is_identity(wheels in prop::collection::vec(prop::collection::vec("[a-z]{0,4}", 1..6), 1..5)) {
            let s = WheelSystem::new(wheels.iter().map(|w| Wheel::from_strs(w).unwrap()).collect()).unwrap();
            prop_assert_eq!(parse_wheels(&write_wheels(&s)).unwrap(), s);
        }
    }
}
