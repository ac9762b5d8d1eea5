//! Point-set text format.
//!
//! ```text
//! # comment lines start with '#'
//! d n
//! x_1 ... x_d      (n lines; integers or p/q)
//! ```
//!
//! Writing always emits reduced rationals, so `write(parse(write(p)))` is
//! byte-identical to `write(p)`.

use std::fmt::Write as _;

use crate::error::Error;
use crate::rational::Rational;

use super::PointSet;

pub fn parse_point_set(text: &str) -> Result<PointSet, Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (lineno, header) = lines.next().ok_or(Error::Empty)?;
    let header: Vec<&str> = header.split_whitespace().collect();
    let [d, n] = header[..] else {
        return Err(Error::Parse(format!("line {lineno}: expected header `d n`")));
    };
    let d: usize = d
        .parse()
        .map_err(|_| Error::Parse(format!("line {lineno}: bad dimension `{d}`")))?;
    let n: usize = n
        .parse()
        .map_err(|_| Error::Parse(format!("line {lineno}: bad count `{n}`")))?;

    let mut coords = Vec::with_capacity(n);
    for (lineno, line) in lines {
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Rational>()
                    .map_err(|e| Error::Parse(format!("line {lineno}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != d {
            return Err(Error::Parse(format!(
                "line {lineno}: expected {d} coordinates, found {}",
                row.len()
            )));
        }
        coords.push(row);
    }
    if coords.len() != n {
        return Err(Error::Parse(format!(
            "header declares {n} points, found {}",
            coords.len()
        )));
    }
    PointSet::new(d, coords)
}

pub fn write_point_set(p: &PointSet) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", p.dim(), p.len());
    for pt in p.points() {
        let mut first = true;
        for c in &pt.coords {
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{c}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_comments_and_fractions() {
        let text = "# unit square\n2 4\n0 0\n1 0\n# mid\n0 2/2\n1 1\n";
        let p = parse_point_set(text).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.coords(2)[1], Rational::one());
        assert_eq!(write_point_set(&p), "2 4\n0 0\n1 0\n0 1\n1 1\n");
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_point_set(""), Err(Error::Empty)));
        assert!(parse_point_set("2\n0 0\n").is_err());
        assert!(parse_point_set("2 2\n0 0\n").is_err());
        assert!(parse_point_set("2 1\n0 0 0\n").is_err());
        assert!(parse_point_set("2 1\n0 x\n").is_err());
        assert!(matches!(
            parse_point_set("1 2\n3\n6/2\n"),
            Err(Error::DuplicatePoint { .. })
        ));
    }

    proptest! {
        #[test]
        fn write_parse_round_trip(
            d in 1usize..4,
            raw in prop::collection::vec((-50i64..50, 1i64..20), 1..40),
        ) {
            let mut coords: Vec<Vec<Rational>> = raw
                .chunks(d)
                .filter(|c| c.len() == d)
                .map(|c| c.iter().map(|&(p, q)| Rational::new(p, q).unwrap()).collect())
                .collect();
            coords.sort();
            coords.dedup();
            prop_assume!(!coords.is_empty());
            let p = PointSet::new(d, coords).unwrap();
            let text = write_point_set(&p);
            let q = parse_point_set(&text).unwrap();
            prop_assert_eq!(&p, &q);
            prop_assert_eq!(write_point_set(&q), text);
        }
    }
}
