//! Plain-text formats.
//!
//! Instances and bound sets share one layout: a header line `p n m M`
//! followed by `n` lines of `p` whitespace-separated integers. Instance
//! points must lie strictly inside `(m, M)^p`, bounds inside `[m, M]^p`.
//! Cut files hold one cut per line, `λ_1 … λ_p α`. Blank lines and lines
//! starting with `#` are ignored everywhere.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::point::{Point, Scalar, SearchInterval};
use crate::queries::HalfspaceCut;
use crate::sets::{StableSet, UpperBoundSet};

fn content_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<(usize, String)>> {
    reader
        .lines()
        .enumerate()
        .map(|(i, l)| l.map(|l| (i + 1, l)).map_err(Error::from))
        .filter(|r| match r {
            Ok((_, l)) => {
                let t = l.trim();
                !t.is_empty() && !t.starts_with('#')
            }
            Err(_) => true,
        })
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<Scalar>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<Scalar>().map_err(|e| Error::Parse {
                line,
                msg: format!("{tok:?}: {e}"),
            })
        })
        .collect()
}

/// Reads the header and the point lines without checking them against the
/// interval.
pub fn read_points<R: BufRead>(reader: R) -> Result<(SearchInterval, Vec<Point>)> {
    let mut lines = content_lines(reader);
    let (hline, header) = lines.next().transpose()?.ok_or(Error::Parse {
        line: 1,
        msg: "missing header `p n m M`".into(),
    })?;
    let h = parse_numbers(hline, &header)?;
    let [p, n, lower, upper] = h[..] else {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header needs 4 fields `p n m M`, found {}", h.len()),
        });
    };
    if p < 0 || n < 0 {
        return Err(Error::Parse {
            line: hline,
            msg: "negative p or n".into(),
        });
    }
    let interval = SearchInterval::new(p as usize, lower, upper)?;
    let mut points = Vec::with_capacity(n as usize);
    for entry in lines {
        let (line, text) = entry?;
        let coords = parse_numbers(line, &text)?;
        if coords.len() != interval.dim() {
            return Err(Error::Parse {
                line,
                msg: format!("expected {} coordinates, found {}", interval.dim(), coords.len()),
            });
        }
        points.push(Point::new(coords));
    }
    if points.len() != n as usize {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header announces {n} points, file has {}", points.len()),
        });
    }
    Ok((interval, points))
}

/// Reads points that must lie inside the open interval; they need not be
/// mutually incomparable.
pub fn read_feasible_points<R: BufRead>(reader: R) -> Result<(SearchInterval, Vec<Point>)> {
    let (interval, points) = read_points(reader)?;
    for z in &points {
        interval.check_point(z)?;
    }
    Ok((interval, points))
}

/// Reads an instance, which must be a stable set.
pub fn read_instance<R: BufRead>(reader: R) -> Result<StableSet> {
    let (interval, points) = read_points(reader)?;
    StableSet::from_points(interval, points)
}

pub fn read_bounds<R: BufRead>(reader: R) -> Result<UpperBoundSet> {
    let (interval, points) = read_points(reader)?;
    UpperBoundSet::from_bounds(interval, points)
}

pub fn write_points<W: Write>(mut w: W, interval: &SearchInterval, points: &[Point]) -> Result<()> {
    writeln!(w, "{} {} {} {}", interval.dim(), points.len(), interval.lower(), interval.upper())?;
    for z in points {
        let mut first = true;
        for v in z.iter() {
            if !first {
                write!(w, " ")?;
            }
            write!(w, "{v}")?;
            first = false;
        }
        writeln!(w)?;
    }
    w.flush()?;
    Ok(())
}

/// Writes an instance in its stored order.
pub fn write_instance<W: Write>(w: W, set: &StableSet) -> Result<()> {
    write_points(w, set.interval(), set.points())
}

/// Writes bounds in canonical (lexicographic) order.
pub fn write_bounds<W: Write>(w: W, bounds: &UpperBoundSet) -> Result<()> {
    write_points(w, bounds.interval(), &bounds.canonical())
}

pub fn read_cuts<R: BufRead>(reader: R, dim: usize) -> Result<Vec<HalfspaceCut>> {
    let mut cuts = Vec::new();
    for entry in content_lines(reader) {
        let (line, text) = entry?;
        let mut nums = parse_numbers(line, &text)?;
        if nums.len() != dim + 1 {
            return Err(Error::Parse {
                line,
                msg: format!("a cut needs {dim} weights and a threshold, found {} numbers", nums.len()),
            });
        }
        let alpha = nums.pop().expect("length checked");
        cuts.push(HalfspaceCut::new(nums, alpha).map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?);
    }
    Ok(cuts)
}

pub fn write_cuts<W: Write>(mut w: W, cuts: &[HalfspaceCut]) -> Result<()> {
    for c in cuts {
        writeln!(w, "{c}")?;
    }
    w.flush()?;
    Ok(())
}
